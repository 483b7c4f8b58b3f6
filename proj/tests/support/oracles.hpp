#ifndef TORELLI_TESTS_ORACLES_HPP_
#define TORELLI_TESTS_ORACLES_HPP_

// Independent reference computations used to freeze expected values. None of
// these call the library algorithms they check.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "torelli/config.hpp"
#include "torelli/drags.hpp"
#include "torelli/magnus.hpp"
#include "torelli/word.hpp"

namespace oracle {

  using torelli::PartitionConfig;
  using torelli::Word;

  // Magnus expansion x -> 1 + X, x^-1 -> 1 - X + X^2, truncated after
  // degree 2. Returns the coefficient of X_i X_j for i < j.
  inline std::vector<long> magnus_rho(Word const& w) {
    std::size_t const       m = w.rank();
    std::vector<long>       a(m, 0);
    std::vector<long>       c(m * m, 0);
    for (auto const& l : w.letters()) {
      std::vector<long> la(m, 0), lc(m * m, 0);
      std::size_t const k = static_cast<std::size_t>(l.index - 1);
      la[k]               = l.sign;
      if (l.sign < 0) {
        lc[k * m + k] = 1;
      }
      // (1 + a + c)(1 + la + lc)
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          c[i * m + j] += lc[i * m + j] + a[i] * la[j];
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        a[i] += la[i];
      }
    }
    std::vector<long> out;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        out.push_back(c[i * m + j]);
      }
    }
    return out;
  }

  inline std::vector<long> coeffs(torelli::ExtVector const& v) {
    std::vector<long> out;
    for (auto const& x : v.coefficients()) {
      out.push_back(x.get_si());
    }
    return out;
  }

  // Cofactor expansion; small matrices only.
  inline long det(std::vector<std::vector<long>> const& a) {
    std::size_t const n = a.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return a[0][0];
    }
    long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<long>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<long> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) {
            row.push_back(a[i][k]);
          }
        }
        minor.push_back(row);
      }
      long const sign = j % 2 == 0 ? 1 : -1;
      total += sign * a[0][j] * det(minor);
    }
    return total;
  }

  // Rows span a summand iff the k x k minors have gcd 1.
  inline bool spans_summand(std::vector<std::vector<long>> const& rows) {
    if (rows.empty()) {
      return true;
    }
    std::size_t const k = rows.size(), n = rows[0].size();
    if (k > n) {
      return false;
    }
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
    long g = 0;
    do {
      std::vector<std::vector<long>> sub(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (pick[j]) {
            sub[i].push_back(rows[i][j]);
          }
        }
      }
      g = std::gcd(g, std::labs(det(sub)));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return g == 1;
  }

  // Every ordered partition of {1..b} with every within-block order: a
  // permutation of the labels cut into consecutive blocks.
  inline std::vector<std::vector<std::vector<int>>> ordered_partitions(int b) {
    std::vector<std::vector<std::vector<int>>> out;
    if (b == 0) {
      out.push_back({});
      return out;
    }
    std::vector<int> perm(static_cast<std::size_t>(b));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (unsigned cuts = 0; cuts < (1u << (b - 1)); ++cuts) {
        std::vector<std::vector<int>> blocks{{perm[0]}};
        for (int k = 1; k < b; ++k) {
          if (cuts & (1u << (k - 1))) {
            blocks.push_back({});
          }
          blocks.back().push_back(perm[static_cast<std::size_t>(k)]);
        }
        out.push_back(blocks);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<PartitionConfig> grid() {
    std::vector<PartitionConfig> out;
    for (int n : {2, 3}) {
      for (int b = 0; b <= 3; ++b) {
        for (auto const& p : ordered_partitions(b)) {
          out.push_back({n, b, p});
        }
      }
    }
    return out;
  }

  // Rows of the tau table, written directly from the action formulas:
  // column x is rho(f(x) x^-1).
  inline torelli::HomTable expected_tau(torelli::CappedBasis const& basis,
                                        torelli::DragGenerator const& g) {
    using namespace torelli;
    std::size_t const m   = basis.rank();
    auto const&       cfg = basis.config();
    HomTable          t(m);
    auto wedge = [&](int a, int b) { return a == b ? ExtVector(m) : ExtVector::wedge(m, a, b); };
    if (auto const* d = std::get_if<HandleDrag>(&g)) {
      t.column(d->i) = wedge(d->j, d->i);
    } else if (auto const* d = std::get_if<CommutatorDrag>(&g)) {
      t.column(d->i) = d->plus ? -wedge(d->j, d->k) : wedge(d->j, d->k);
    } else if (auto const* d = std::get_if<BoundaryCommutatorDrag>(&g)) {
      ExtVector const c = wedge(d->i, d->j);
      if (d->r > 1 && d->s > 1) {
        t.column(basis.index_of(BasisRole::arc(d->r, d->s))) = -c;
      } else if (d->r > 1 && !cfg.is_singleton(d->r)) {
        for (int s = 2; s <= static_cast<int>(cfg.block_size(d->r)); ++s) {
          t.column(basis.index_of(BasisRole::arc(d->r, s))) = c;
        }
      } else if (d->r == 1 && d->s > 1) {
        t.column(basis.index_of(BasisRole::arc(1, d->s))) = c;
      } else if (d->r == 1 && !cfg.is_singleton(1)) {
        for (int s = 2; s <= static_cast<int>(cfg.block_size(1)); ++s) {
          t.column(basis.index_of(BasisRole::arc(1, s))) = -c;
        }
      }
    } else if (auto const* d = std::get_if<PartitionDrag>(&g)) {
      for (int x = 1; x <= static_cast<int>(m); ++x) {
        bool const in_block = basis.in_block(x, d->r);
        if (d->r > 1 && in_block) {
          t.column(x) = wedge(d->j, x);
        } else if (d->r == 1 && !in_block) {
          t.column(x) = wedge(x, d->j);
        }
      }
    }
    return t;
  }

  // Signed index letters; length in [0, max_len], freely reduced by Word.
  inline Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len,
                          std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int>          idx(1, static_cast<int>(n));
    std::bernoulli_distribution                 coin(0.5);
    std::vector<torelli::Letter>                ls(len(rng));
    for (auto& l : ls) {
      l = {idx(rng), coin(rng) ? 1 : -1};
    }
    return Word::from_letters(n, ls);
  }

  inline bool abelianizes_to_zero(Word const& w) {
    std::vector<long> v(w.rank(), 0);
    for (auto const& l : w.letters()) {
      v[static_cast<std::size_t>(l.index - 1)] += l.sign;
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  }

  // Alternates rejection sampling with products of conjugated commutators so
  // that both short and long words occur.
  inline Word random_commutator_word(std::mt19937_64& rng, std::size_t n,
                                     std::size_t max_len) {
    std::bernoulli_distribution coin(0.5);
    for (;;) {
      Word w(n);
      if (coin(rng)) {
        w = random_word(rng, n, max_len);
      } else {
        std::uniform_int_distribution<int> parts(1, 3);
        for (int k = parts(rng); k > 0; --k) {
          Word const g = random_word(rng, n, 4);
          Word const a = random_word(rng, n, 3, 1);
          Word const b = random_word(rng, n, 3, 1);
          w            = torelli::mul(w, torelli::conj(g, torelli::comm(a, b)));
        }
      }
      if (w.length() <= max_len && abelianizes_to_zero(w)) {
        return w;
      }
    }
  }

}  // namespace oracle

#endif  // TORELLI_TESTS_ORACLES_HPP_
