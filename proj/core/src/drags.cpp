#include "torelli/drags.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "torelli/error.hpp"
#include "torelli/lattice.hpp"

namespace torelli {

  namespace {

    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    std::vector<int> parse_ints(std::string_view text, std::size_t offset,
                                std::size_t expected) {
      std::vector<int> out;
      std::size_t      pos = 0;
      while (pos <= text.size()) {
        std::size_t const end = std::min(text.find(',', pos), text.size());
        auto const        piece = text.substr(pos, end - pos);
        int               value = 0;
        auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || p != piece.data() + piece.size()) {
          throw ParseError("expected an integer index", offset + pos);
        }
        out.push_back(value);
        pos = end + 1;
      }
      if (out.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " indices", offset);
      }
      return out;
    }

    Word loop(std::size_t m, int i, int sign = 1) {
      return Word::generator(m, i, sign);
    }

    // Images of the generator raised to `e` = +1 or -1. Each formula is
    // inverted by replacing c with c^-1 (resp. y_j with y_j^-1): the loop
    // words involved are fixed by the map.
    std::vector<Word> images(CappedBasis const& basis, DragGenerator const& g, int e) {
      std::size_t const m = basis.rank();
      std::vector<Word> img;
      for (std::size_t x = 1; x <= m; ++x) {
        img.push_back(Word::generator(m, static_cast<int>(x)));
      }
      auto at = [&](int index) -> Word& { return img[static_cast<std::size_t>(index - 1)]; };
      auto const& cfg = basis.config();

      std::visit(
          overloaded{
              [&](HandleDrag const& d) {
                at(d.i) = conj(loop(m, d.j, e), at(d.i));
              },
              [&](CommutatorDrag const& d) {
                Word c = comm(loop(m, d.j), loop(m, d.k));
                if (e < 0) {
                  c = inv(c);
                }
                at(d.i) = d.plus ? mul(at(d.i), inv(c)) : mul(c, at(d.i));
              },
              [&](BoundaryCommutatorDrag const& d) {
                Word c = comm(loop(m, d.i), loop(m, d.j));
                if (e < 0) {
                  c = inv(c);
                }
                if (d.r > 1 && d.s > 1) {
                  int const a = basis.index_of(BasisRole::arc(d.r, d.s));
                  at(a)       = mul(at(a), inv(c));
                } else if (d.r > 1 && cfg.is_singleton(d.r)) {
                  int const h = basis.index_of(BasisRole::handle(d.r));
                  at(h)       = conj(c, at(h));
                } else if (d.r > 1) {
                  for (int a : basis.block_generators(d.r)) {
                    at(a) = mul(c, at(a));
                  }
                } else if (d.s > 1) {
                  int const a = basis.index_of(BasisRole::arc(1, d.s));
                  at(a)       = mul(c, at(a));
                } else {
                  Word const ci = inv(c);
                  for (std::size_t x = 1; x <= m; ++x) {
                    int const xi = static_cast<int>(x);
                    if (!basis.in_block(xi, 1)) {
                      at(xi) = conj(ci, at(xi));
                    } else if (!cfg.is_singleton(1)) {
                      at(xi) = mul(ci, at(xi));
                    }
                  }
                }
              },
              [&](PartitionDrag const& d) {
                if (d.r > 1) {
                  Word const y = loop(m, d.j, e);
                  for (int a : basis.block_generators(d.r)) {
                    at(a) = conj(y, at(a));
                  }
                  return;
                }
                Word const y = loop(m, d.j, -e);
                for (std::size_t x = 1; x <= m; ++x) {
                  int const xi = static_cast<int>(x);
                  if (!basis.in_block(xi, 1)) {
                    at(xi) = conj(y, at(xi));
                  }
                }
              },
          },
          g);
      return img;
    }

    void check_loop(PartitionConfig const& cfg, int i, char const* what) {
      if (i < 1 || i > cfg.n) {
        throw DomainError(std::string(what) + " index " + std::to_string(i)
                          + " out of range 1.." + std::to_string(cfg.n));
      }
    }

    void check_address(PartitionConfig const& cfg, int r, int s) {
      if (r < 1 || static_cast<std::size_t>(r) > cfg.block_count()) {
        throw DomainError("block " + std::to_string(r) + " does not exist");
      }
      if (s < 1 || static_cast<std::size_t>(s) > cfg.block_size(r)) {
        throw DomainError("boundary (" + std::to_string(r) + "," + std::to_string(s)
                          + ") does not exist");
      }
    }

    IntMatrix tau_rows(CappedBasis const& basis, std::vector<DragGenerator> const& gens,
                       std::vector<IntVector> extra = {}) {
      std::vector<IntVector> rows;
      for (auto const& g : gens) {
        rows.push_back(flatten(tau(realize(basis, g))));
      }
      for (auto& v : extra) {
        rows.push_back(std::move(v));
      }
      return stack_rows(rows);
    }

    std::vector<IntVector> inner_rows(std::size_t m, int n) {
      std::vector<IntVector> out;
      for (int j = 1; j <= n; ++j) {
        out.push_back(flatten(tau(inner_automorphism(loop(m, j)))));
      }
      return out;
    }

  }  // namespace

  std::string to_string(DragGenerator const& g) {
    return std::visit(
        overloaded{
            [](HandleDrag const& d) {
              return "HD:" + std::to_string(d.i) + "," + std::to_string(d.j);
            },
            [](CommutatorDrag const& d) {
              return std::string(d.plus ? "CD+:" : "CD-:") + std::to_string(d.i) + ","
                     + std::to_string(d.j) + "," + std::to_string(d.k);
            },
            [](BoundaryCommutatorDrag const& d) {
              return "BCD:" + std::to_string(d.r) + "," + std::to_string(d.s) + ","
                     + std::to_string(d.i) + "," + std::to_string(d.j);
            },
            [](PartitionDrag const& d) {
              return "PD:" + std::to_string(d.r) + "," + std::to_string(d.j);
            },
        },
        g);
  }

  std::string to_string(DragToken const& t) {
    return to_string(t.gen) + (t.exponent < 0 ? "^-1" : "");
  }

  std::string to_string(DragWord const& w) {
    std::string out;
    for (auto const& t : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(t);
    }
    return out;
  }

  DragGenerator parse_generator(std::string_view text) {
    auto const colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("drag token needs a ':'", 0);
    }
    auto const head = text.substr(0, colon);
    auto const tail = text.substr(colon + 1);
    if (head == "HD") {
      auto v = parse_ints(tail, colon + 1, 2);
      return HandleDrag{v[0], v[1]};
    }
    if (head == "CD+" || head == "CD-") {
      auto v = parse_ints(tail, colon + 1, 3);
      return CommutatorDrag{head == "CD+", v[0], v[1], v[2]};
    }
    if (head == "BCD") {
      auto v = parse_ints(tail, colon + 1, 4);
      return BoundaryCommutatorDrag{v[0], v[1], v[2], v[3]};
    }
    if (head == "PD") {
      auto v = parse_ints(tail, colon + 1, 2);
      return PartitionDrag{v[0], v[1]};
    }
    throw ParseError("unknown drag kind '" + std::string(head) + "'", 0);
  }

  DragToken parse_token(std::string_view text) {
    constexpr std::string_view suffix = "^-1";
    if (text.size() > suffix.size() && text.ends_with(suffix)) {
      return {parse_generator(text.substr(0, text.size() - suffix.size())), -1};
    }
    return {parse_generator(text), 1};
  }

  DragWord parse_drag_word(std::string_view text) {
    DragWord    out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      try {
        out.push_back(parse_token(text.substr(pos, end - pos)));
      } catch (ParseError const& e) {
        throw ParseError(e.what(), pos + e.position());
      }
      pos = end;
    }
    return out;
  }

  void validate(PartitionConfig const& cfg, DragGenerator const& g) {
    std::visit(
        overloaded{
            [&](HandleDrag const& d) {
              check_loop(cfg, d.i, "HD");
              check_loop(cfg, d.j, "HD");
              if (d.i == d.j) {
                throw DomainError("HD needs i != j");
              }
            },
            [&](CommutatorDrag const& d) {
              check_loop(cfg, d.i, "CD");
              check_loop(cfg, d.j, "CD");
              check_loop(cfg, d.k, "CD");
              if (d.i == d.j || d.i == d.k || !(d.j < d.k)) {
                throw DomainError("CD needs distinct i, j, k with j < k");
              }
            },
            [&](BoundaryCommutatorDrag const& d) {
              check_address(cfg, d.r, d.s);
              check_loop(cfg, d.i, "BCD");
              check_loop(cfg, d.j, "BCD");
              if (!(d.i < d.j)) {
                throw DomainError("BCD needs i < j");
              }
            },
            [&](PartitionDrag const& d) {
              check_address(cfg, d.r, 1);
              check_loop(cfg, d.j, "PD");
            },
        },
        g);
  }

  GroupMap realize(CappedBasis const& basis, DragGenerator const& g) {
    validate(basis.config(), g);
    return GroupMap(images(basis, g, 1), images(basis, g, -1));
  }

  GroupMap realize(CappedBasis const& basis, DragToken const& t) {
    GroupMap f = realize(basis, t.gen);
    return t.exponent < 0 ? f.inverse() : f;
  }

  GroupMap realize_word(CappedBasis const& basis, DragWord const& w) {
    GroupMap f = GroupMap::identity(basis.rank());
    for (auto const& t : w) {
      f = compose(f, realize(basis, t));
    }
    return f;
  }

  std::vector<DragGenerator> all_generators(PartitionConfig const& cfg) {
    validate(cfg);
    std::vector<DragGenerator> out;
    int const                  n = cfg.n;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) {
          out.emplace_back(HandleDrag{i, j});
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          if (j != i && k != i) {
            out.emplace_back(CommutatorDrag{true, i, j, k});
            out.emplace_back(CommutatorDrag{false, i, j, k});
          }
        }
      }
    }
    for (std::size_t r = 1; r <= cfg.block_count(); ++r) {
      int const ri = static_cast<int>(r);
      for (int s = 1; s <= static_cast<int>(cfg.block_size(ri)); ++s) {
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            out.emplace_back(BoundaryCommutatorDrag{ri, s, i, j});
          }
        }
      }
    }
    for (std::size_t r = 1; r <= cfg.block_count(); ++r) {
      for (int j = 1; j <= n; ++j) {
        out.emplace_back(PartitionDrag{static_cast<int>(r), j});
      }
    }
    return out;
  }

  std::vector<DragGenerator> reduced_generating_set(PartitionConfig const& cfg) {
    std::vector<DragGenerator> out;
    for (auto const& g : all_generators(cfg)) {
      bool const keep = std::visit(
          overloaded{
              [&](HandleDrag const& d) {
                if (cfg.b > 0) {
                  return true;
                }
                int const first = d.j == 1 ? 2 : 1;
                return d.i != first;
              },
              [](CommutatorDrag const& d) { return !d.plus; },
              [](BoundaryCommutatorDrag const& d) { return d.s != 1; },
              [](PartitionDrag const& d) { return d.r != 1; },
          },
          g);
      if (keep) {
        out.push_back(g);
      }
    }
    return out;
  }

  GroupMap push_boundary(CappedBasis const& basis, int r, int s, Word const& gamma) {
    auto const& cfg = basis.config();
    check_address(cfg, r, s);
    if (gamma.max_index() > cfg.n) {
      throw DomainError("push word uses non-loop letters");
    }
    std::size_t const m = basis.rank();

    auto build = [&](Word const& g) {
      Word const        gi = inv(g);
      std::vector<Word> img;
      for (std::size_t x = 1; x <= m; ++x) {
        img.push_back(Word::generator(m, static_cast<int>(x)));
      }
      auto at = [&](int index) -> Word& { return img[static_cast<std::size_t>(index - 1)]; };
      if (cfg.is_singleton(r) && r > 1) {
        int const h = basis.index_of(BasisRole::handle(r));
        at(h)       = conj(gi, at(h));
      } else if (r > 1 && s > 1) {
        int const a = basis.index_of(BasisRole::arc(r, s));
        at(a)       = mul(at(a), g);
      } else if (r > 1) {
        for (int a : basis.block_generators(r)) {
          at(a) = mul(gi, at(a));
        }
      } else if (s > 1) {
        int const a = basis.index_of(BasisRole::arc(1, s));
        at(a)       = mul(gi, at(a));
      } else {
        for (std::size_t x = 1; x <= m; ++x) {
          int const xi = static_cast<int>(x);
          if (!basis.in_block(xi, 1)) {
            at(xi) = conj(g, at(xi));
          } else if (!cfg.is_singleton(1)) {
            at(xi) = mul(g, at(xi));
          }
        }
      }
      return img;
    };

    Word const g = gamma.lift(m);
    return GroupMap(build(g), build(inv(g)));
  }

  int push_homology_sign(PartitionConfig const& cfg, int r, int s) {
    check_address(cfg, r, s);
    if (cfg.is_singleton(r)) {
      return 0;
    }
    if ((r > 1 && s > 1) || (r == 1 && s == 1)) {
      return 1;
    }
    return -1;
  }

  bool membership_iop(CappedBasis const& basis, GroupMap const& f) {
    return f.rank() == basis.rank() && is_homology_trivial(f);
  }

  PdRelationReport verify_pd_relation(PartitionConfig const& cfg, int j) {
    validate(cfg);
    check_loop(cfg, j, "PD relation");
    CappedBasis const basis(cfg);
    PdRelationReport  out;
    HomTable          pd_sum(basis.rank()), hd_sum(basis.rank());
    for (std::size_t r = 1; r <= cfg.block_count(); ++r) {
      PartitionDrag const d{static_cast<int>(r), j};
      out.word.push_back({d, 1});
      pd_sum += tau(realize(basis, d));
    }
    for (int i = 1; i <= cfg.n; ++i) {
      if (i != j) {
        HandleDrag const d{i, j};
        out.word.push_back({d, 1});
        hd_sum += tau(realize(basis, d));
      }
    }
    GroupMap const f = realize_word(basis, out.word);
    if (cfg.b > 0) {
      out.holds         = f.is_identity();
      out.tau_sum_holds = pd_sum == -hd_sum;
    } else {
      Word const y         = loop(basis.rank(), j);
      out.inner_conjugator = inner_conjugator(f);
      out.holds            = f == inner_automorphism(y) && is_homology_trivial(f);
      out.tau_sum_holds    = hd_sum == tau(inner_automorphism(y));
    }
    return out;
  }

  BcdRelationReport verify_bcd_relation(PartitionConfig const& cfg, int r, int i,
                                        int j) {
    validate(cfg);
    check_address(cfg, r, 1);
    check_loop(cfg, i, "BCD relation");
    check_loop(cfg, j, "BCD relation");
    if (!(i < j)) {
      throw DomainError("BCD relation needs i < j");
    }
    CappedBasis const basis(cfg);
    BcdRelationReport out;
    HomTable          sum(basis.rank());
    for (int s = 1; s <= static_cast<int>(cfg.block_size(r)); ++s) {
      BoundaryCommutatorDrag const d{r, s, i, j};
      out.product.push_back({d, 1});
      sum += tau(realize(basis, d));
    }
    PartitionDrag const pi{r, i}, pj{r, j};
    out.commutator = {{pj, -1}, {pi, -1}, {pj, 1}, {pi, 1}};
    DragWord const naive{{pi, 1}, {pj, 1}, {pi, -1}, {pj, -1}};

    GroupMap const lhs = realize_word(basis, out.product);
    out.holds          = lhs == realize_word(basis, out.commutator);
    out.naive_reading  = lhs == realize_word(basis, naive);
    out.tau_sum_zero   = sum.is_zero();
    return out;
  }

  CdIdentityReport verify_cd_identity(PartitionConfig const& cfg, int i, int j, int k) {
    validate(cfg);
    CommutatorDrag const plus{true, i, j, k}, minus{false, i, j, k};
    validate(cfg, plus);
    CappedBasis const basis(cfg);
    std::size_t const m = basis.rank();

    GroupMap const f        = realize_word(basis, {{plus, 1}, {minus, 1}});
    Word const     c        = comm(loop(m, j), loop(m, k));
    bool           action_ok = true;
    for (int x = 1; x <= static_cast<int>(m); ++x) {
      Word const expected = x == i ? conj(c, loop(m, x)) : loop(m, x);
      action_ok &= f.image(x) == expected;
    }

    CdIdentityReport     out;
    HandleDrag const     a{i, j}, b{i, k};
    std::size_t          matches = 0;
    // [X, Y] = X Y X^-1 Y^-1 as a drag word, over X, Y in {a^+-1, b^+-1}.
    for (int order = 0; order < 2; ++order) {
      for (int ex : {1, -1}) {
        for (int ey : {1, -1}) {
          DragToken const X{order == 0 ? DragGenerator(a) : DragGenerator(b), ex};
          DragToken const Y{order == 0 ? DragGenerator(b) : DragGenerator(a), ey};
          DragWord const  w{X, Y, {X.gen, -ex}, {Y.gen, -ey}};
          if (realize_word(basis, w) == f) {
            if (matches++ == 0) {
              out.word       = w;
              out.expression = to_string(w);
            }
          }
        }
      }
    }
    out.holds = action_ok && matches == 1;
    return out;
  }

  HomTable tau_star(CappedBasis const& basis, DragWord const& w) {
    return tau(realize_word(basis, w));
  }

  std::size_t formula_rank(PartitionConfig const& cfg) {
    validate(cfg);
    long const n = cfg.n, b = cfg.b, p = static_cast<long>(cfg.block_count());
    long const c = n * (n - 1) / 2;
    return static_cast<std::size_t>(n * c + (b - p) * c + (p * n - n));
  }

  RankReport abelianization_rank(PartitionConfig const& cfg) {
    CappedBasis const basis(cfg);
    RankReport        out;
    out.formula_rank   = formula_rank(cfg);
    auto const reduced = reduced_generating_set(cfg);
    out.reduced_size   = reduced.size();
    if (cfg.b > 0) {
      out.computed_rank     = rank(tau_rows(basis, all_generators(cfg)));
      out.invariant_factors = snf(tau_rows(basis, reduced)).invariant_factors();
    } else {
      // tau does not descend to Out: work modulo the images of inner maps.
      auto const        inner      = inner_rows(basis.rank(), cfg.n);
      std::size_t const inner_rank = rank(stack_rows(inner));
      out.computed_rank = rank(tau_rows(basis, all_generators(cfg), inner)) - inner_rank;
      out.invariant_factors = snf(tau_rows(basis, reduced, inner)).invariant_factors();
    }
    return out;
  }

}  // namespace torelli
