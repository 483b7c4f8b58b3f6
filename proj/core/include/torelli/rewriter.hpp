#ifndef TORELLI_REWRITER_HPP_
#define TORELLI_REWRITER_HPP_

// Rewriting elements of [F_n, F_n] in the Tomaszewski free basis
//   x_i^{d_i} ... x_n^{d_n} [x_i, x_j] x_n^{-d_n} ... x_i^{-d_i},  i < j,
// and turning pushes of such words into drag words.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torelli/config.hpp"
#include "torelli/drags.hpp"
#include "torelli/word.hpp"

namespace torelli {

  struct TomaszewskiFactor {
    int               i = 1, j = 2;
    std::vector<long> d;  // (d_i, ..., d_n)

    [[nodiscard]] std::size_t rank() const noexcept {
      return static_cast<std::size_t>(i - 1) + d.size();
    }
    // x_i^{d_i} ... x_n^{d_n}
    [[nodiscard]] Word conjugator() const;

    auto operator<=>(TomaszewskiFactor const&) const = default;
  };

  // "T:i,j:[d_i,...,d_n]"
  std::string       to_string(TomaszewskiFactor const& f);
  TomaszewskiFactor parse_factor(std::string_view text);

  Word factor_word(TomaszewskiFactor const& f);

  class Factorization {
   public:
    using Term = std::pair<TomaszewskiFactor, int>;

    // Throws DomainError unless the product of the terms reduces to `word`.
    Factorization(Word word, std::vector<Term> terms);

    [[nodiscard]] Word const& word() const noexcept {
      return _word;
    }
    [[nodiscard]] std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }

    friend bool operator==(Factorization const&, Factorization const&) = default;

   private:
    Word              _word;
    std::vector<Term> _terms;
  };

  // Product of the factor words raised to their exponents, reduced.
  Word multiply_out(std::vector<Factorization::Term> const& terms, std::size_t rank);

  bool in_commutator_subgroup(Word const& w);

  Factorization tomaszewski_factor(Word const& w);

  // Drag word realizing push_boundary(basis, r, s, w) exactly.
  DragWord push_factorization(CappedBasis const& basis, int r, int s, Word const& w);

}  // namespace torelli

#endif  // TORELLI_REWRITER_HPP_
