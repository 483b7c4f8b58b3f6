#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "torelli/error.hpp"
#include "torelli/rewriter.hpp"

using namespace torelli;

namespace {
  Word W(std::size_t n, char const* text) {
    return parse_word(text, n);
  }
  Word x(std::size_t n, int i) {
    return Word::generator(n, i);
  }
}  // namespace

TEST_CASE("commutator subgroup membership") {
  CHECK(in_commutator_subgroup(comm(x(2, 1), x(2, 2))));
  CHECK_FALSE(in_commutator_subgroup(x(2, 1)));
  Word const k = comm(x(3, 1), x(3, 3));
  CHECK(in_commutator_subgroup(mul(k, conj(x(3, 2), k))));
}

TEST_CASE("factor text format") {
  TomaszewskiFactor const f{1, 2, {0, 1}};
  CHECK(to_string(f) == "T:1,2:[0,1]");
  CHECK(parse_factor("T:2,3:[-1,4]") == TomaszewskiFactor{2, 3, {-1, 4}});
  CHECK(parse_factor(to_string(f)) == f);
  CHECK_THROWS_AS(parse_factor("T:2,1:[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_factor("T:1,3:[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_factor("S:1,2:[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_factor("T:1,2:[0;0]"), ParseError);
}

TEST_CASE("factor words") {
  CHECK(factor_word({1, 2, {0, 0}}) == comm(x(2, 1), x(2, 2)));
  CHECK(to_string(factor_word({1, 2, {1, 0}})) == "x1 x1 x2 x1^-1 x2^-1 x1^-1");
  CHECK(factor_word({2, 3, {0, 1}}) == conj(x(3, 3), comm(x(3, 2), x(3, 3))));
  CHECK(factor_word({2, 3, {0, 1}}).rank() == 3);
}

TEST_CASE("tomaszewski examples") {
  auto const a = tomaszewski_factor(comm(x(2, 1), x(2, 2)));
  REQUIRE(a.size() == 1);
  CHECK(a.terms()[0] == Factorization::Term{{1, 2, {0, 0}}, 1});

  auto const b = tomaszewski_factor(conj(x(2, 2), comm(x(2, 1), x(2, 2))));
  REQUIRE(b.size() == 1);
  CHECK(b.terms()[0] == Factorization::Term{{1, 2, {0, 1}}, 1});

  auto const c = tomaszewski_factor(comm(x(2, 1), W(2, "x2 x2")));
  REQUIRE(c.size() == 2);
  CHECK(c.terms()[0] == Factorization::Term{{1, 2, {0, 0}}, 1});
  CHECK(c.terms()[1] == Factorization::Term{{1, 2, {0, 1}}, 1});

  CHECK(tomaszewski_factor(Word(3)).size() == 0);
  CHECK_THROWS_AS(tomaszewski_factor(x(2, 1)), DomainError);
}

TEST_CASE("factorization certificate is enforced") {
  CHECK_THROWS_AS(Factorization(comm(x(2, 1), x(2, 2)), {{{1, 2, {0, 1}}, 1}}), DomainError);
  CHECK_NOTHROW(Factorization(comm(x(2, 1), x(2, 2)), {{{1, 2, {0, 0}}, 1}}));
}

TEST_CASE("round trip, window shape and rho cross-check") {
  std::mt19937_64 rng(31337);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int k = 0; k < 300; ++k) {
      Word const w = oracle::random_commutator_word(rng, n, 24);
      auto const f = tomaszewski_factor(w);
      CHECK(multiply_out(f.terms(), n) == w);
      std::vector<long> r(n * (n - 1) / 2, 0);
      for (auto const& [t, e] : f.terms()) {
        CHECK(t.rank() == n);
        CHECK(t.i < t.j);
        CHECK(t.d.size() == n - static_cast<std::size_t>(t.i) + 1);
        std::size_t const slot = static_cast<std::size_t>((t.i - 1) * static_cast<int>(n) - (t.i - 1) * t.i / 2 + (t.j - t.i - 1));
        r[slot] += e;
      }
      CHECK(r == oracle::magnus_rho(w));
      CHECK(tomaszewski_factor(w) == f);
    }
  }
}

TEST_CASE("reduced factor sequences are recovered exactly") {
  // Every freely reduced product of at most two basis factors with small
  // conjugators must come back as itself: the basis is free.
  for (std::size_t n : {2u, 3u}) {
    std::vector<Factorization::Term> letters;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      for (int j = i + 1; j <= static_cast<int>(n); ++j) {
        std::size_t const len = n - static_cast<std::size_t>(i) + 1;
        std::vector<long> d(len, -1);
        for (;;) {
          letters.push_back({{i, j, d}, 1});
          letters.push_back({{i, j, d}, -1});
          std::size_t k = len;
          while (k > 0 && d[k - 1] == 1) {
            d[k - 1] = -1;
            --k;
          }
          if (k == 0) {
            break;
          }
          ++d[k - 1];
        }
      }
    }
    std::size_t checked = 0;
    for (auto const& a : letters) {
      std::vector<Factorization::Term> one{a};
      CHECK(tomaszewski_factor(multiply_out(one, n)).terms() == one);
      for (auto const& b : letters) {
        if (a.first == b.first && a.second == -b.second) {
          continue;
        }
        std::vector<Factorization::Term> two{a, b};
        REQUIRE(tomaszewski_factor(multiply_out(two, n)).terms() == two);
        ++checked;
      }
    }
    CHECK(checked == letters.size() * (letters.size() - 1));
  }
}

TEST_CASE("push factorization examples") {
  CappedBasis const b({3, 2, {{1, 2}}});
  DragWord const    one = push_factorization(b, 1, 2, comm(x(3, 1), x(3, 2)));
  REQUIRE(one.size() == 1);
  CHECK(to_string(one) == "BCD:1,2,1,2^-1");
  CHECK(realize_word(b, one) == push_boundary(b, 1, 2, comm(x(3, 1), x(3, 2))));

  Word const     w = conj(x(3, 3), comm(x(3, 1), x(3, 2)));
  DragWord const d = push_factorization(b, 1, 2, w);
  CHECK(to_string(d) == "HD:1,3 HD:2,3 BCD:1,2,1,2^-1 HD:2,3^-1 HD:1,3^-1");
  CHECK(realize_word(b, d) == push_boundary(b, 1, 2, w));

  CHECK(push_factorization(b, 1, 1, Word(3)).empty());
  CHECK_THROWS_AS(push_factorization(b, 1, 2, x(3, 1)), DomainError);
  CHECK_THROWS_AS(push_factorization(b, 1, 2, Word::generator(4, 4)), DomainError);
}

TEST_CASE("push factorization realizes the push on random words") {
  std::mt19937_64 rng(77);
  for (PartitionConfig const& c : {PartitionConfig{3, 3, {{2}, {3, 1}}}, PartitionConfig{2, 2, {{1, 2}}},
                                   PartitionConfig{3, 1, {{1}}}}) {
    CappedBasis const basis(c);
    for (int r = 1; r <= static_cast<int>(c.block_count()); ++r) {
      for (int s = 1; s <= static_cast<int>(c.block_size(r)); ++s) {
        for (int k = 0; k < 10; ++k) {
          Word const w = oracle::random_commutator_word(rng, static_cast<std::size_t>(c.n), 16);
          CHECK(realize_word(basis, push_factorization(basis, r, s, w)) == push_boundary(basis, r, s, w));
        }
      }
    }
  }
}
