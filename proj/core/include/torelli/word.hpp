#ifndef TORELLI_WORD_HPP_
#define TORELLI_WORD_HPP_

// Reduced words in a free group F_rank = <x_1, ..., x_rank> and
// endomorphisms given by generator images.
//
// Conventions used throughout the library:
//   * conj(g, w) = g w g^-1
//   * comm(u, v) = u v u^-1 v^-1
//   * compose(f, g) applies g first: (f o g)(x) = f(g(x)).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/int_matrix.hpp"

namespace torelli {

  struct Letter {
    int index = 1;  // 1-based generator index
    int sign  = 1;  // +1 or -1

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return {index, -sign};
    }
    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t rank) : _rank(rank) {}

    // Signed indices, e.g. {1, -2} for x1 x2^-1.
    Word(std::size_t rank, std::initializer_list<int> signed_letters);

    // Freely reduces `letters`; throws DomainError on an index out of range.
    static Word from_letters(std::size_t rank, std::span<Letter const> letters);
    static Word generator(std::size_t rank, int index, int sign = 1);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    // Same letters, viewed in a larger free group.
    [[nodiscard]] Word lift(std::size_t new_rank) const;

    // Highest generator index that occurs (0 for the empty word).
    [[nodiscard]] int max_index() const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::size_t         _rank = 0;
    std::vector<Letter> _letters;
  };

  Word reduce(std::span<Letter const> letters, std::size_t rank);

  Word mul(Word const& u, Word const& v);
  Word inv(Word const& u);
  Word conj(Word const& g, Word const& w);
  Word comm(Word const& u, Word const& v);
  Word power(Word const& u, long exponent);

  // Text format: whitespace-separated `x<k>` / `x<k>^-1`, `e` for the
  // identity. Parsing reduces.
  Word               parse_word(std::string_view text, std::size_t rank);
  std::string        to_string(Word const& w);
  std::ostream&      operator<<(std::ostream& os, Word const& w);

  IntVector abelianization_vector(Word const& w);

  class GroupMap {
   public:
    GroupMap() = default;

    // Throws DomainError if some image has the wrong rank, or the inverse
    // certificate does not compose to the identity in both orders.
    GroupMap(std::vector<Word>                images,
             std::optional<std::vector<Word>> inverse_images = std::nullopt);

    static GroupMap identity(std::size_t rank);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _images.size();
    }
    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] Word const& image(int index) const {
      return _images.at(static_cast<std::size_t>(index - 1));
    }
    [[nodiscard]] bool has_inverse() const noexcept {
      return _inverse.has_value();
    }
    [[nodiscard]] std::vector<Word> const& inverse_images() const;

    // Automorphism inverse; throws DomainError without a certificate.
    [[nodiscard]] GroupMap inverse() const;

    [[nodiscard]] bool is_identity() const;

    // Equality compares generator images only.
    friend bool operator==(GroupMap const& a, GroupMap const& b) {
      return a._images == b._images;
    }

   private:
    struct unchecked_t {};
    GroupMap(unchecked_t, std::vector<Word>, std::optional<std::vector<Word>>);
    friend GroupMap compose(GroupMap const&, GroupMap const&);

    std::vector<Word>                _images;
    std::optional<std::vector<Word>> _inverse;
  };

  Word     apply(GroupMap const& f, Word const& w);
  GroupMap compose(GroupMap const& f, GroupMap const& g);

  // Inner automorphism w -> g w g^-1, with certificate.
  GroupMap inner_automorphism(Word const& g);

  // If f is the inner automorphism by some g, returns that g.
  std::optional<Word> inner_conjugator(GroupMap const& f);

  // Column i is the abelianization of f(x_i).
  IntMatrix abelianization_matrix(GroupMap const& f);
  bool      is_homology_trivial(GroupMap const& f);

  // Transvection x1 -> x1 x2, inversion x1 -> x1^-1, the cyclic permutation
  // x_i -> x_{i+1}, and the swap x1 <-> x2 (transvection, cycle and swap
  // need n >= 2 and are omitted for n = 1).
  std::vector<GroupMap> nielsen_generators(std::size_t n);

}  // namespace torelli

#endif  // TORELLI_WORD_HPP_
