#include "torelli/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "torelli/error.hpp"

namespace torelli {

  namespace {

    // Row/column operations are mirrored into U (rows) and V, V^-1 (cols).
    class SnfWorker {
     public:
      explicit SnfWorker(IntMatrix const& a)
          : D(a),
            U(IntMatrix::identity(a.rows())),
            V(IntMatrix::identity(a.cols())),
            Vi(IntMatrix::identity(a.cols())) {}

      void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
      }
      void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
        Vi.swap_rows(a, b);
      }
      // row dst += k row src
      void add_row(std::size_t dst, std::size_t src, Integer const& k) {
        D.add_row_multiple(dst, src, k);
        U.add_row_multiple(dst, src, k);
      }
      // col dst += k col src; inverse: row src of V^-1 -= k row dst
      void add_col(std::size_t dst, std::size_t src, Integer const& k) {
        D.add_col_multiple(dst, src, k);
        V.add_col_multiple(dst, src, k);
        Vi.add_row_multiple(src, dst, -k);
      }
      void negate_row(std::size_t r) {
        D.negate_row(r);
        U.negate_row(r);
      }

      void run() {
        std::size_t const rows = D.rows(), cols = D.cols();
        for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
          if (!pivot_smallest(t)) {
            break;
          }
          for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
              if (D(i, t) != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(i, t, -q);
                dirty |= D(i, t) != 0;
              }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
              if (D(t, j) != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(j, t, -q);
                dirty |= D(t, j) != 0;
              }
            }
            if (dirty) {
              pivot_smallest_in_cross(t);
              continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i) {
              for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(i, j) % D(t, t) != 0) {
                  add_row(t, i, 1);
                  fixed = false;
                  break;
                }
              }
            }
            if (fixed) {
              break;
            }
          }
          if (D(t, t) < 0) {
            negate_row(t);
          }
        }
      }

      IntMatrix D, U, V, Vi;

     private:
      // Moves the entry of least nonzero absolute value in the trailing
      // block to (t, t). Returns false if the block is zero.
      bool pivot_smallest(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool        found = false;
        Integer     best;
        for (std::size_t i = t; i < D.rows(); ++i) {
          for (std::size_t j = t; j < D.cols(); ++j) {
            if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
              best  = abs(D(i, j));
              bi    = i;
              bj    = j;
              found = true;
            }
          }
        }
        if (found) {
          swap_rows(t, bi);
          swap_cols(t, bj);
        }
        return found;
      }

      // Same, restricted to row t and column t.
      void pivot_smallest_in_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        Integer     best = abs(D(t, t));
        for (std::size_t i = t + 1; i < D.rows(); ++i) {
          if (D(i, t) != 0 && (best == 0 || abs(D(i, t)) < best)) {
            best = abs(D(i, t));
            bi   = i;
            bj   = t;
          }
        }
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
          if (D(t, j) != 0 && (best == 0 || abs(D(t, j)) < best)) {
            best = abs(D(t, j));
            bi   = t;
            bj   = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
      }
    };

  }  // namespace

  std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
      if (D(i, i) != 0) {
        ++r;
      }
    }
    return r;
  }

  IntVector SnfResult::invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
      if (D(i, i) != 0) {
        out.push_back(D(i, i));
      }
    }
    return out;
  }

  SnfResult snf(IntMatrix const& a) {
    SnfWorker w(a);
    w.run();
    SnfResult r{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.Vi)};
    // The certificate is checked on every call.
    bool ok = r.U * a * r.V == r.D && r.D.is_diagonal()
              && abs(determinant(r.U)) == 1 && (r.V * r.V_inverse).is_identity();
    auto const d = r.invariant_factors();
    for (std::size_t i = 0; ok && i < d.size(); ++i) {
      ok = d[i] > 0 && (i + 1 == d.size() || d[i + 1] % d[i] == 0)
           && r.D(i, i) == d[i];
    }
    if (!ok) {
      throw std::logic_error("snf: normal form certificate failed");
    }
    return r;
  }

  std::size_t rank(IntMatrix const& input) {
    // Fraction-free elimination is enough for rank.
    IntMatrix   a = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
      std::size_t p = r;
      while (p < a.rows() && a(p, c) == 0) {
        ++p;
      }
      if (p == a.rows()) {
        continue;
      }
      a.swap_rows(r, p);
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) {
          continue;
        }
        Integer g = gcd(a(r, c), a(i, c));
        Integer x = a(i, c) / g, y = a(r, c) / g;
        for (std::size_t j = c; j < a.cols(); ++j) {
          a(i, j) = y * a(i, j) - x * a(r, j);
        }
      }
      ++r;
    }
    return r;
  }

  IntMatrix stack_rows(std::vector<IntVector> const& vectors) {
    if (vectors.empty()) {
      return IntMatrix();
    }
    return IntMatrix::from_rows(vectors, vectors.front().size());
  }

  bool is_primitive(IntVector const& v) {
    Integer g = 0;
    for (auto const& x : v) {
      g = gcd(g, x);
    }
    return g == 1;
  }

  bool spans_summand(std::vector<IntVector> const& vectors) {
    if (vectors.empty()) {
      return true;
    }
    auto const r = snf(stack_rows(vectors));
    if (r.rank() != vectors.size()) {
      return false;
    }
    for (auto const& d : r.invariant_factors()) {
      if (d != 1) {
        return false;
      }
    }
    return true;
  }

  IntMatrix complete_basis(std::vector<IntVector> const& vectors,
                           std::size_t                   n) {
    if (vectors.empty()) {
      return IntMatrix::identity(n);
    }
    std::size_t const dim = vectors.front().size();
    if (n != 0 && n != dim) {
      throw DomainError("complete_basis: vectors do not live in Z^"
                        + std::to_string(n));
    }
    if (!spans_summand(vectors)) {
      throw DomainError("complete_basis: vectors do not span a summand");
    }
    // U A V = [I 0]  =>  A = U^-1 [I 0] V^-1; completing A by the trailing
    // rows of V^-1 gives diag(U^-1, I) V^-1, which is unimodular.
    auto const      r = snf(stack_rows(vectors));
    std::size_t const k = vectors.size();
    IntMatrix       out(dim, dim);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        out(i, j) = vectors[i][j];
      }
    }
    for (std::size_t i = k; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        out(i, j) = r.V_inverse(i, j);
      }
    }
    return out;
  }

  FsVertex canonical_vertex(IntVector v) {
    auto it = std::find_if(v.begin(), v.end(), [](Integer const& x) { return x != 0; });
    if (it != v.end() && *it < 0) {
      for (auto& x : v) {
        x = -x;
      }
    }
    return {std::move(v)};
  }

  std::vector<FsVertex> fs_vertices(std::size_t n, long bound) {
    if (bound < 1) {
      throw DomainError("FS truncation bound must be at least 1");
    }
    std::vector<FsVertex> out;
    std::vector<long>     cur(n, -bound);
    for (;;) {
      IntVector v(cur.begin(), cur.end());
      if (is_primitive(v)) {
        auto c = canonical_vertex(v);
        if (c.v == v) {
          out.push_back(std::move(c));
        }
      }
      std::size_t k = n;
      while (k > 0 && cur[k - 1] == bound) {
        cur[k - 1] = -bound;
        --k;
      }
      if (k == 0) {
        break;
      }
      ++cur[k - 1];
    }
    return out;
  }

  bool fs_is_simplex(std::vector<FsVertex> const& vertices) {
    std::vector<IntVector> vs;
    for (auto const& v : vertices) {
      vs.push_back(v.v);
    }
    return spans_summand(vs);
  }

  FsGraph fs_graph(std::size_t n, long bound) {
    FsGraph g{fs_vertices(n, bound), {}};
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
        if (fs_is_simplex({g.vertices[i], g.vertices[j]})) {
          g.edges.emplace_back(i, j);
        }
      }
    }
    return g;
  }

  bool fs_connected(std::size_t n, long bound) {
    auto const                            g = fs_graph(n, bound);
    std::vector<std::vector<std::size_t>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<bool>       seen(g.vertices.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0]          = true;
    std::size_t seen_count = 1;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++seen_count;
          q.push(w);
        }
      }
    }
    return seen_count == g.vertices.size();
  }

  namespace {
    std::vector<std::array<std::size_t, 3>> fs_triangles(FsGraph const& g) {
      std::size_t const                   nv = g.vertices.size();
      std::vector<std::vector<bool>>      adj(nv, std::vector<bool>(nv, false));
      for (auto [a, b] : g.edges) {
        adj[a][b] = adj[b][a] = true;
      }
      std::vector<std::array<std::size_t, 3>> out;
      for (auto [a, b] : g.edges) {
        for (std::size_t c = b + 1; c < nv; ++c) {
          if (adj[a][c] && adj[b][c]
              && fs_is_simplex({g.vertices[a], g.vertices[b], g.vertices[c]})) {
            out.push_back({a, b, c});
          }
        }
      }
      return out;
    }
  }  // namespace

  std::size_t fs_triangle_count(std::size_t n, long bound) {
    return fs_triangles(fs_graph(n, bound)).size();
  }

  std::size_t fs_h1_rank(std::size_t n, long bound) {
    auto const  g  = fs_graph(n, bound);
    auto const  tr = fs_triangles(g);
    std::size_t const nv = g.vertices.size(), ne = g.edges.size();

    IntMatrix d1(nv, ne);
    for (std::size_t e = 0; e < ne; ++e) {
      d1(g.edges[e].first, e)  = -1;
      d1(g.edges[e].second, e) = 1;
    }
    auto edge_index = [&](std::size_t a, std::size_t b) {
      auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
      return static_cast<std::size_t>(it - g.edges.begin());
    };
    IntMatrix d2(ne, tr.size());
    for (std::size_t t = 0; t < tr.size(); ++t) {
      auto [a, b, c]           = tr[t];
      d2(edge_index(b, c), t) += 1;
      d2(edge_index(a, c), t) -= 1;
      d2(edge_index(a, b), t) += 1;
    }
    std::size_t const r1 = rank(d1);
    std::size_t const r2 = tr.empty() ? 0 : rank(d2);
    return ne - r1 - r2;
  }

  std::string fs_dot(FsGraph const& g) {
    std::ostringstream os;
    os << "graph FS {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      os << "  v" << i << " [label=\"(";
      for (std::size_t k = 0; k < g.vertices[i].v.size(); ++k) {
        os << (k ? "," : "") << g.vertices[i].v[k];
      }
      os << ")\"];\n";
    }
    for (auto [a, b] : g.edges) {
      os << "  v" << a << " -- v" << b << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace torelli
