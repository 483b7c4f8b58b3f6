#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "torelli/drags.hpp"
#include "torelli/error.hpp"
#include "torelli/serialize.hpp"

using namespace torelli;

namespace {
  Word y(CappedBasis const& b, int i, int sign = 1) {
    return Word::generator(b.rank(), i, sign);
  }
}  // namespace

TEST_CASE("token text format") {
  CHECK(to_string(DragGenerator(HandleDrag{1, 2})) == "HD:1,2");
  CHECK(to_string(DragGenerator(CommutatorDrag{true, 1, 2, 3})) == "CD+:1,2,3");
  CHECK(to_string(DragGenerator(CommutatorDrag{false, 3, 1, 2})) == "CD-:3,1,2");
  CHECK(to_string(DragGenerator(BoundaryCommutatorDrag{2, 1, 1, 3})) == "BCD:2,1,1,3");
  CHECK(to_string(DragGenerator(PartitionDrag{1, 2})) == "PD:1,2");
  DragWord const w = parse_drag_word("HD:1,2 CD-:1,2,3^-1  BCD:1,2,1,2 PD:2,1^-1");
  REQUIRE(w.size() == 4);
  CHECK(w[1].exponent == -1);
  CHECK(to_string(w) == "HD:1,2 CD-:1,2,3^-1 BCD:1,2,1,2 PD:2,1^-1");
  CHECK(parse_drag_word("").empty());
  CHECK_THROWS_AS(parse_drag_word("HD:1"), ParseError);
  CHECK_THROWS_AS(parse_drag_word("XD:1,2"), ParseError);
  CHECK_THROWS_AS(parse_drag_word("HD:1,2^-2"), ParseError);
  try {
    parse_drag_word("HD:1,2 PD:1,x");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() >= 7);
  }
}

TEST_CASE("generator validation") {
  PartitionConfig const c{3, 2, {{1, 2}}};
  CHECK_THROWS_AS(validate(c, HandleDrag{1, 1}), DomainError);
  CHECK_THROWS_AS(validate(c, HandleDrag{1, 4}), DomainError);
  CHECK_THROWS_AS(validate(c, CommutatorDrag{true, 1, 3, 2}), DomainError);
  CHECK_THROWS_AS(validate(c, CommutatorDrag{true, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS(validate(c, BoundaryCommutatorDrag{1, 3, 1, 2}), DomainError);
  CHECK_THROWS_AS(validate(c, BoundaryCommutatorDrag{2, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS(validate(c, BoundaryCommutatorDrag{1, 1, 2, 1}), DomainError);
  CHECK_THROWS_AS(validate(c, PartitionDrag{2, 1}), DomainError);
  CHECK_THROWS_AS(validate(PartitionConfig{3, 0, {}}, PartitionDrag{1, 1}), DomainError);
  CHECK_NOTHROW(validate(c, BoundaryCommutatorDrag{1, 2, 1, 3}));
}

TEST_CASE("realize examples") {
  CappedBasis const b2({2, 0, {}});
  CHECK(realize(b2, HandleDrag{1, 2}).image(1) == conj(y(b2, 2), y(b2, 1)));

  CappedBasis const b({3, 4, {{1}, {2, 3, 4}}});
  int const         arc = b.index_of(BasisRole::arc(2, 3));
  GroupMap const    f   = realize(b, BoundaryCommutatorDrag{2, 3, 2, 3});
  CHECK(f.image(arc) == mul(y(b, arc), inv(comm(y(b, 2), y(b, 3)))));

  CappedBasis const b1({2, 1, {{1}}});
  CHECK(realize(b1, PartitionDrag{1, 2}).image(1) == conj(y(b1, 2, -1), y(b1, 1)));
  CHECK(realize(b1, PartitionDrag{1, 2}).image(3) == y(b1, 3));

  CappedBasis const   bc({3, 0, {}});
  Word const          c = comm(y(bc, 2), y(bc, 3));
  CHECK(realize(bc, CommutatorDrag{false, 1, 2, 3}).image(1) == mul(c, y(bc, 1)));
  CHECK(realize(bc, CommutatorDrag{true, 1, 2, 3}).image(1) == mul(y(bc, 1), inv(c)));
}

TEST_CASE("realize_word examples") {
  CappedBasis const b({3, 0, {}});
  CHECK(realize_word(b, {}).is_identity());
  CHECK(realize_word(b, parse_drag_word("HD:1,2 HD:1,2^-1")).is_identity());
  GroupMap const f = realize_word(b, parse_drag_word("HD:1,3 HD:2,3"));
  Word const     c = comm(y(b, 1), y(b, 2));
  CHECK(apply(f, c) == conj(y(b, 3), c));
  // Rightmost acts first.
  GroupMap const g = realize_word(b, parse_drag_word("HD:1,2 HD:2,3"));
  CHECK(g == compose(realize(b, HandleDrag{1, 2}), realize(b, HandleDrag{2, 3})));
  CHECK(g.image(1) == conj(y(b, 2), y(b, 1)));
  CHECK(g.image(2) == conj(y(b, 3), y(b, 2)));
}

TEST_CASE("generator counts and reduced sets") {
  CHECK(reduced_generating_set({3, 0, {}}).size() == 6);
  CHECK(reduced_generating_set({3, 1, {{1}}}).size() == 9);
  CHECK(reduced_generating_set({2, 3, {{1, 2}, {3}}}).size() == 5);
  for (auto const& c : oracle::grid()) {
    long const n = c.n, C = n * (n - 1) / 2;
    std::size_t bcd = 0;
    for (auto const& block : c.partition) {
      bcd += block.size() * static_cast<std::size_t>(C);
    }
    std::size_t const expected = static_cast<std::size_t>(n * (n - 1) + 2 * n * (n - 1) * (n - 2) / 2)
                                 + bcd + c.block_count() * static_cast<std::size_t>(n);
    CHECK(all_generators(c).size() == expected);
    CHECK(reduced_generating_set(c).size() == formula_rank(c));
  }
}

TEST_CASE("tau of every generator matches the table") {
  for (auto const& c : oracle::grid()) {
    CappedBasis const basis(c);
    for (auto const& g : all_generators(c)) {
      INFO(to_string(g));
      CHECK(tau(realize(basis, g)) == oracle::expected_tau(basis, g));
    }
  }
}

TEST_CASE("membership of generators") {
  for (auto const& c : oracle::grid()) {
    CappedBasis const basis(c);
    for (auto const& g : all_generators(c)) {
      GroupMap const f = realize(basis, g);
      CHECK(f.has_inverse());
      CHECK(membership_iop(basis, f));
      CHECK(compose(f, f.inverse()).is_identity());
    }
  }
}

TEST_CASE("PD relation") {
  CHECK(verify_pd_relation({2, 2, {{1}, {2}}}, 1).holds);
  CHECK(verify_pd_relation({2, 1, {{1}}}, 2).holds);
  auto const closed = verify_pd_relation({3, 0, {}}, 2);
  CHECK(closed.holds);
  CHECK(closed.tau_sum_holds);
  REQUIRE(closed.inner_conjugator.has_value());
  CHECK(*closed.inner_conjugator == Word::generator(3, 2));
  CHECK_THROWS_AS(verify_pd_relation({2, 1, {{1}}}, 3), DomainError);
}

TEST_CASE("PD relation holds in every order of its factors") {
  for (PartitionConfig const& c : {PartitionConfig{2, 2, {{1}, {2}}}, PartitionConfig{3, 2, {{2, 1}}},
                                   PartitionConfig{2, 3, {{1, 3}, {2}}}, PartitionConfig{3, 3, {{3}, {1}, {2}}}}) {
    CappedBasis const basis(c);
    for (int j = 1; j <= c.n; ++j) {
      DragWord w = verify_pd_relation(c, j).word;
      std::vector<std::size_t> order(w.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        DragWord permuted;
        for (auto k : order) {
          permuted.push_back(w[k]);
        }
        CHECK(realize_word(basis, permuted).is_identity());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("BCD relation") {
  auto const r = verify_bcd_relation({2, 2, {{1, 2}}}, 1, 1, 2);
  CHECK(r.holds);
  CHECK(r.tau_sum_zero);
  CHECK(to_string(r.commutator) == "PD:1,2^-1 PD:1,1^-1 PD:1,2 PD:1,1");
  CHECK(verify_bcd_relation({2, 2, {{1}, {2}}}, 2, 1, 2).holds);
  CHECK(verify_bcd_relation({3, 3, {{2}, {3, 1}}}, 2, 1, 3).holds);
  // The written-order composition of the commutator is a different map.
  CHECK_FALSE(verify_bcd_relation({2, 2, {{1, 2}}}, 1, 1, 2).naive_reading);
  CHECK_THROWS_AS(verify_bcd_relation({2, 2, {{1, 2}}}, 1, 2, 1), DomainError);
}

TEST_CASE("CD identity") {
  CappedBasis const basis({3, 0, {}});
  auto const        r = verify_cd_identity({3, 0, {}}, 1, 2, 3);
  CHECK(r.holds);
  CHECK(r.expression == "HD:1,3^-1 HD:1,2^-1 HD:1,3 HD:1,2");
  CHECK(tau_star(basis, parse_drag_word("CD+:1,2,3 CD-:1,2,3")).is_zero());
  GroupMap const f = realize_word(basis, parse_drag_word("CD+:1,2,3 CD-:1,2,3"));
  Word const     c = comm(y(basis, 2), y(basis, 3));
  CHECK(f.image(1) == conj(c, y(basis, 1)));
}

TEST_CASE("tau sums") {
  for (auto const& c : oracle::grid()) {
    if (c.b == 0) {
      continue;
    }
    CappedBasis const basis(c);
    for (int j = 1; j <= c.n; ++j) {
      HomTable pd(basis.rank()), hd(basis.rank());
      for (int r = 1; r <= static_cast<int>(c.block_count()); ++r) {
        pd += tau(realize(basis, PartitionDrag{r, j}));
      }
      for (int i = 1; i <= c.n; ++i) {
        if (i != j) {
          hd += tau(realize(basis, HandleDrag{i, j}));
        }
      }
      CHECK(pd == -hd);
    }
  }
}

TEST_CASE("push examples") {
  CappedBasis const b({2, 3, {{1, 2}, {3}}});
  CHECK(push_boundary(b, 1, 2, Word(2)).is_identity());
  CHECK_THROWS_AS(push_boundary(b, 1, 2, Word::generator(4, 3)), DomainError);
  CHECK_THROWS_AS(push_boundary(b, 2, 2, Word(2)), DomainError);

  GroupMap const p = push_boundary(b, 1, 2, Word::generator(2, 1));
  IntMatrix      expected = IntMatrix::identity(4);
  expected(0, 2)          = -1;  // arc:1:2 picks up -[y1]
  CHECK(abelianization_matrix(p) == expected);
  CHECK_FALSE(membership_iop(b, p));
  CHECK(membership_iop(b, push_boundary(b, 2, 1, Word::generator(2, 1))));

  // An interior boundary of a later block: identity plus one off-diagonal 1.
  CappedBasis const b2({2, 3, {{1}, {2, 3}}});
  IntMatrix         plus = IntMatrix::identity(4);
  plus(0, 3)             = 1;
  CHECK(abelianization_matrix(push_boundary(b2, 2, 2, Word::generator(2, 1))) == plus);
  CHECK(push_homology_sign(b2.config(), 2, 2) == 1);
  CHECK(push_homology_sign(b.config(), 1, 2) == -1);
  CHECK(push_homology_sign(b.config(), 2, 1) == 0);
}

TEST_CASE("BCD is the push of the inverse commutator at every address") {
  for (auto const& c : oracle::grid()) {
    CappedBasis const basis(c);
    for (int r = 1; r <= static_cast<int>(c.block_count()); ++r) {
      for (int s = 1; s <= static_cast<int>(c.block_size(r)); ++s) {
        for (int i = 1; i <= c.n; ++i) {
          for (int j = i + 1; j <= c.n; ++j) {
            Word const cij = comm(Word::generator(static_cast<std::size_t>(c.n), i), Word::generator(static_cast<std::size_t>(c.n), j));
            CHECK(realize(basis, BoundaryCommutatorDrag{r, s, i, j}) == push_boundary(basis, r, s, inv(cij)));
          }
        }
        if (c.is_singleton(r) && r > 1) {
          for (int j = 1; j <= c.n; ++j) {
            CHECK(realize(basis, PartitionDrag{r, j}) == push_boundary(basis, r, 1, Word::generator(static_cast<std::size_t>(c.n), j, -1)));
          }
        }
      }
    }
  }
}

TEST_CASE("abelianization rank anchors") {
  auto const a = abelianization_rank({3, 1, {{1}}});
  CHECK(a.computed_rank == 9);
  CHECK(a.formula_rank == 9);
  auto const z = abelianization_rank({3, 0, {}});
  CHECK(z.computed_rank == 6);
  CHECK(z.formula_rank == 6);
  auto const t = abelianization_rank({2, 3, {{1, 2}, {3}}});
  CHECK(t.computed_rank == 5);
  CHECK(t.invariant_factors == IntVector(5, 1));
}

TEST_CASE("relations golden file") {
  json out = json::array();
  for (auto const& c : oracle::grid()) {
    json entry = {{"config", to_json(c)}};
    auto const r = abelianization_rank(c);
    entry["rank"] = r.computed_rank;
    if (c.n == 3) {
      json cd = json::array();
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          for (int k = j + 1; k <= 3; ++k) {
            if (i != j && i != k) {
              cd.push_back(verify_cd_identity(c, i, j, k).expression);
            }
          }
        }
      }
      entry["cd_identity"] = cd;
    }
    out.push_back(entry);
  }
  std::ifstream in(TORELLI_GOLDEN_DIR "/relations.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str()) == out);
}
