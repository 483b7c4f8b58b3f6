#include "torelli/rewriter.hpp"

#include <map>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

  namespace {

    using Vertex = std::vector<long>;  // exponents (v_1, ..., v_n)

    // T(u, i, j) with u_{<i} = 0, plus an exponent.
    struct Gen {
      Vertex u;
      int    i, j;
      auto   operator<=>(Gen const&) const = default;
    };
    using Seq = std::vector<std::pair<Gen, int>>;

    void push_reduced(Seq& out, Gen const& g, int e) {
      if (!out.empty() && out.back().first == g && out.back().second == -e) {
        out.pop_back();
      } else {
        out.emplace_back(g, e);
      }
    }

    void append(Seq& out, Seq const& s, bool inverted = false) {
      if (!inverted) {
        for (auto const& [g, e] : s) {
          push_reduced(out, g, e);
        }
      } else {
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
          push_reduced(out, it->first, -it->second);
        }
      }
    }

    Vertex shifted(Vertex v, int index, long by) {
      v[static_cast<std::size_t>(index - 1)] += by;
      return v;
    }

    // Expands the Schreier generator of the edge leaving v along x_l into
    // window-indexed basis factors.
    class Expander {
     public:
      explicit Expander(std::size_t n) : _n(static_cast<int>(n)) {}

      Seq const& edge(Vertex const& v, int l) {
        auto key = std::make_pair(v, l);
        if (auto it = _memo.find(key); it != _memo.end()) {
          return it->second;
        }
        Seq res = compute(v, l);
        return _memo.emplace(std::move(key), std::move(res)).first->second;
      }

     private:
      long at(Vertex const& v, int k) const {
        return v[static_cast<std::size_t>(k - 1)];
      }

      Seq compute(Vertex const& v, int l) {
        Seq  res;
        bool tail = false;
        for (int k = l + 1; k <= _n; ++k) {
          tail |= at(v, k) != 0;
        }
        if (!tail) {
          return res;
        }
        int p = 0;
        for (int q = 1; q < l && p == 0; ++q) {
          if (at(v, q) != 0) {
            p = q;
          }
        }
        if (p != 0) {
          if (at(v, p) > 0) {
            Vertex const u  = shifted(v, p, -1);
            Vertex const ul = shifted(u, l, 1);
            Seq const    a  = edge(u, p);
            append(res, a, true);
            push_reduced(res, Gen{u, p, l}, 1);
            append(res, edge(u, l));
            append(res, edge(ul, p));
          } else {
            Vertex const vp = shifted(v, p, 1);
            Vertex const vl = shifted(v, l, 1);
            push_reduced(res, Gen{v, p, l}, -1);
            append(res, edge(v, p));
            append(res, edge(vp, l));
            Seq const b = edge(vl, p);
            append(res, b, true);
          }
          return res;
        }
        int k = _n;
        while (at(v, k) == 0) {
          --k;
        }
        if (at(v, k) > 0) {
          Vertex const u = shifted(v, k, -1);
          push_reduced(res, Gen{u, l, k}, -1);
          append(res, edge(u, l));
        } else {
          Vertex const vk = shifted(v, k, 1);
          push_reduced(res, Gen{v, l, k}, 1);
          append(res, edge(vk, l));
        }
        return res;
      }

      int                                     _n;
      std::map<std::pair<Vertex, int>, Seq>   _memo;
    };

    TomaszewskiFactor to_factor(Gen const& g) {
      return {g.i, g.j, Vertex(g.u.begin() + (g.i - 1), g.u.end())};
    }

    DragWord inverse(DragWord const& w) {
      DragWord out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back({it->gen, -it->exponent});
      }
      return out;
    }

    void append_reduced(DragWord& out, DragWord const& w) {
      for (auto const& t : w) {
        if (!out.empty() && out.back().gen == t.gen && out.back().exponent == -t.exponent) {
          out.pop_back();
        } else {
          out.push_back(t);
        }
      }
    }

  }  // namespace

  Word TomaszewskiFactor::conjugator() const {
    std::size_t const n = rank();
    Word              g(n);
    for (std::size_t k = 0; k < d.size(); ++k) {
      g = mul(g, power(Word::generator(n, i + static_cast<int>(k)), d[k]));
    }
    return g;
  }

  std::string to_string(TomaszewskiFactor const& f) {
    std::ostringstream os;
    os << "T:" << f.i << ',' << f.j << ":[";
    for (std::size_t k = 0; k < f.d.size(); ++k) {
      os << (k ? "," : "") << f.d[k];
    }
    os << ']';
    return os.str();
  }

  TomaszewskiFactor parse_factor(std::string_view text) {
    auto fail = [](std::string const& why, std::size_t pos) -> TomaszewskiFactor {
      throw ParseError("factor: " + why, pos);
    };
    if (!text.starts_with("T:")) {
      return fail("expected 'T:'", 0);
    }
    auto const colon = text.find(':', 2);
    auto const open  = text.find('[');
    if (colon == std::string_view::npos || open != colon + 1 || !text.ends_with("]")) {
      return fail("expected 'T:i,j:[...]'", 2);
    }
    TomaszewskiFactor f;
    auto const        ij = std::string(text.substr(2, colon - 2));
    {
      std::istringstream is(ij);
      char               comma = 0;
      if (!(is >> f.i >> comma >> f.j) || comma != ',' || !is.eof()) {
        return fail("bad index pair", 2);
      }
    }
    auto const body = std::string(text.substr(open + 1, text.size() - open - 2));
    std::istringstream is(body);
    long               value = 0;
    while (is >> value) {
      f.d.push_back(value);
      char comma = 0;
      if (is >> comma && comma != ',') {
        return fail("bad exponent list", open + 1);
      }
    }
    if (!is.eof()) {
      return fail("bad exponent list", open + 1);
    }
    if (!(1 <= f.i && f.i < f.j && static_cast<std::size_t>(f.j) <= f.rank())) {
      return fail("indices need 1 <= i < j <= n", 2);
    }
    return f;
  }

  Word factor_word(TomaszewskiFactor const& f) {
    std::size_t const n = f.rank();
    if (!(1 <= f.i && f.i < f.j && static_cast<std::size_t>(f.j) <= n)) {
      throw DomainError("factor indices need 1 <= i < j <= n");
    }
    return conj(f.conjugator(), comm(Word::generator(n, f.i), Word::generator(n, f.j)));
  }

  Word multiply_out(std::vector<Factorization::Term> const& terms, std::size_t rank) {
    Word w(rank);
    for (auto const& [f, e] : terms) {
      Word const t = factor_word(f).lift(rank);
      w            = mul(w, e > 0 ? t : inv(t));
    }
    return w;
  }

  Factorization::Factorization(Word word, std::vector<Term> terms)
      : _word(std::move(word)), _terms(std::move(terms)) {
    for (auto const& [f, e] : _terms) {
      if (f.rank() > _word.rank()) {
        throw DomainError("factor exceeds the rank of the word");
      }
      if (e != 1 && e != -1) {
        throw DomainError("factor exponents must be +1 or -1");
      }
    }
    if (multiply_out(_terms, _word.rank()) != _word) {
      throw DomainError("factorization does not multiply back to the word");
    }
  }

  bool in_commutator_subgroup(Word const& w) {
    for (auto const& x : abelianization_vector(w)) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  Factorization tomaszewski_factor(Word const& w) {
    if (!in_commutator_subgroup(w)) {
      throw DomainError("word is not in the commutator subgroup");
    }
    std::size_t const n = w.rank();
    Expander          ex(n);
    Vertex            v(n, 0);
    Seq               seq;
    for (auto const& letter : w.letters()) {
      int const k = letter.index;
      if (letter.sign > 0) {
        append(seq, ex.edge(v, k));
        v[static_cast<std::size_t>(k - 1)] += 1;
      } else {
        v[static_cast<std::size_t>(k - 1)] -= 1;
        Seq const s = ex.edge(v, k);
        append(seq, s, true);
      }
    }
    std::vector<Factorization::Term> terms;
    for (auto const& [g, e] : seq) {
      // Factors keep the full rank so that d always runs up to n.
      terms.emplace_back(to_factor(g), e);
    }
    return Factorization(w, std::move(terms));
  }

  DragWord push_factorization(CappedBasis const& basis, int r, int s, Word const& w) {
    auto const& cfg = basis.config();
    if (w.max_index() > cfg.n) {
      throw DomainError("push word uses non-loop letters");
    }
    Word const wn = Word::from_letters(static_cast<std::size_t>(cfg.n), w.letters());
    if (!in_commutator_subgroup(wn)) {
      throw DomainError("push word is not in the commutator subgroup");
    }
    std::size_t const m = basis.rank();
    DragWord          out;
    std::map<std::pair<int, int>, DragToken> bridge;

    Factorization const factors = tomaszewski_factor(wn);
    for (auto const& [f, e] : factors.terms()) {
      auto key = std::make_pair(f.i, f.j);
      auto it  = bridge.find(key);
      if (it == bridge.end()) {
        BoundaryCommutatorDrag const b{r, s, f.i, f.j};
        Word const     c    = comm(Word::generator(m, f.i), Word::generator(m, f.j));
        GroupMap const bcd  = realize(basis, b);
        GroupMap const push = push_boundary(basis, r, s, c);
        if (bcd == push) {
          it = bridge.emplace(key, DragToken{b, 1}).first;
        } else if (bcd == push.inverse()) {
          it = bridge.emplace(key, DragToken{b, -1}).first;
        } else {
          throw DomainError("no bridge between BCD and push for this boundary");
        }
      }
      // F conjugates the window subgroup <y_i..y_n> by the conjugator letter
      // by letter, fixing arcs and handles.
      DragWord F;
      for (std::size_t q = 0; q < f.d.size(); ++q) {
        int const k = f.i + static_cast<int>(q);
        DragWord  step;
        for (int l = f.i; l <= cfg.n; ++l) {
          if (l != k) {
            step.push_back({HandleDrag{l, k}, 1});
          }
        }
        DragWord const step_inv = inverse(step);
        for (long t = 0; t < std::labs(f.d[q]); ++t) {
          append_reduced(F, f.d[q] > 0 ? step : step_inv);
        }
      }
      DragToken core = it->second;
      core.exponent *= e;
      append_reduced(out, F);
      append_reduced(out, {core});
      append_reduced(out, inverse(F));
    }
    return out;
  }

}  // namespace torelli
