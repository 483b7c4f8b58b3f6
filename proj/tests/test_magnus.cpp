#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "torelli/error.hpp"
#include "torelli/magnus.hpp"

using namespace torelli;

namespace {
  Word W(std::size_t n, char const* text) {
    return parse_word(text, n);
  }
}  // namespace

TEST_CASE("rho examples") {
  ExtVector const r = rho(W(2, "x1 x2 x1^-1 x2^-1"));
  CHECK(r.at(1, 2) == 1);
  CHECK(rho(Word(3)).is_zero());
  ExtVector const c = rho(conj(W(3, "x3"), comm(W(3, "x1"), W(3, "x2"))));
  CHECK(c == ExtVector::wedge(3, 1, 2));
  Word const k = comm(W(2, "x1"), W(2, "x2"));
  CHECK(rho(mul(k, k)).at(1, 2) == 2);
  CHECK(ExtVector::wedge(3, 2, 1) == -ExtVector::wedge(3, 1, 2));
  CHECK_THROWS_AS(rho(W(2, "x1")), DomainError);
}

TEST_CASE("rho agrees with the truncated Magnus series") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int k = 0; k < 300; ++k) {
      Word const w = oracle::random_commutator_word(rng, n, 30);
      CHECK(oracle::coeffs(rho(w)) == oracle::magnus_rho(w));
    }
  }
}

TEST_CASE("rho is a conjugation-invariant homomorphism on [F,F]") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Word const u = oracle::random_commutator_word(rng, 3, 16);
    Word const v = oracle::random_commutator_word(rng, 3, 16);
    Word const g = oracle::random_word(rng, 3, 10);
    CHECK(rho(mul(u, v)) == rho(u) + rho(v));
    CHECK(rho(conj(g, u)) == rho(u));
    CHECK(rho(inv(u)) == -rho(u));
  }
}

TEST_CASE("tau examples") {
  CHECK(tau(GroupMap::identity(3)).is_zero());
  GroupMap const hd({W(2, "x2 x1 x2^-1"), W(2, "x2")});
  HomTable const t = tau(hd);
  CHECK(t.column(1) == ExtVector::wedge(2, 2, 1));
  CHECK(t.column(2).is_zero());
  CHECK(flatten(t) == IntVector{-1, 0});
  GroupMap const cd({W(3, "x2 x3 x2^-1 x3^-1 x1"), W(3, "x2"), W(3, "x3")});
  CHECK(tau(cd).column(1) == ExtVector::wedge(3, 2, 3));
  CHECK_THROWS_AS(tau(GroupMap({W(2, "x1 x2"), W(2, "x2")})), DomainError);
  CHECK(flatten(HomTable(3)) == IntVector(9, 0));
}

TEST_CASE("tau is additive and flatten is linear") {
  std::mt19937_64       rng(99);
  std::size_t const     n = 3;
  std::vector<GroupMap> pool;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) {
        continue;
      }
      std::vector<Word> img, back;
      for (int x = 1; x <= 3; ++x) {
        img.push_back(Word::generator(n, x));
        back.push_back(Word::generator(n, x));
      }
      img[static_cast<std::size_t>(i - 1)]  = conj(Word::generator(n, j), Word::generator(n, i));
      back[static_cast<std::size_t>(i - 1)] = conj(Word::generator(n, j, -1), Word::generator(n, i));
      pool.emplace_back(img, back);
    }
  }
  for (int k = 0; k < 100; ++k) {
    GroupMap const& f = pool[rng() % pool.size()];
    GroupMap const& g = pool[rng() % pool.size()];
    CHECK(tau(compose(f, g)) == tau(f) + tau(g));
    CHECK(tau(f.inverse()) == -tau(f));
    IntVector const a = flatten(tau(f)), b = flatten(tau(g)), s = flatten(tau(f) + tau(g));
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i] == a[i] + b[i]);
    }
  }
}

TEST_CASE("tau of conjugation by x_j") {
  for (int j = 1; j <= 3; ++j) {
    HomTable const t = tau(inner_automorphism(Word::generator(3, j)));
    for (int i = 1; i <= 3; ++i) {
      CHECK(t.column(i) == (i == j ? ExtVector(3) : ExtVector::wedge(3, j, i)));
    }
  }
}
