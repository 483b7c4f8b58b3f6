#include "torelli/magnus.hpp"

#include "torelli/error.hpp"

namespace torelli {

  std::size_t ExtVector::offset(int i, int j) const {
    auto const m = static_cast<int>(_rank);
    if (i < 1 || j > m || i >= j) {
      throw DomainError("wedge index (" + std::to_string(i) + ","
                        + std::to_string(j) + ") invalid for rank "
                        + std::to_string(_rank));
    }
    // Pairs (a, b) with a < i come first: sum_{a<i} (m - a).
    auto const before = (i - 1) * m - (i - 1) * i / 2;
    return static_cast<std::size_t>(before + (j - i - 1));
  }

  ExtVector ExtVector::wedge(std::size_t rank, int i, int j) {
    ExtVector v(rank);
    if (i < j) {
      v.at(i, j) = 1;
    } else if (j < i) {
      v.at(j, i) = -1;
    }
    return v;
  }

  bool ExtVector::is_zero() const {
    for (auto const& c : _coeffs) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  ExtVector& ExtVector::operator+=(ExtVector const& other) {
    if (other._rank != _rank) {
      throw DomainError("rank mismatch in wedge^2 sum");
    }
    for (std::size_t k = 0; k < _coeffs.size(); ++k) {
      _coeffs[k] += other._coeffs[k];
    }
    return *this;
  }

  ExtVector& ExtVector::operator-=(ExtVector const& other) {
    if (other._rank != _rank) {
      throw DomainError("rank mismatch in wedge^2 difference");
    }
    for (std::size_t k = 0; k < _coeffs.size(); ++k) {
      _coeffs[k] -= other._coeffs[k];
    }
    return *this;
  }

  ExtVector operator-(ExtVector a) {
    for (auto& c : a._coeffs) {
      c = -c;
    }
    return a;
  }

  bool HomTable::is_zero() const {
    for (auto const& c : _columns) {
      if (!c.is_zero()) {
        return false;
      }
    }
    return true;
  }

  HomTable& HomTable::operator+=(HomTable const& other) {
    if (other._rank != _rank) {
      throw DomainError("rank mismatch in Hom sum");
    }
    for (std::size_t k = 0; k < _columns.size(); ++k) {
      _columns[k] += other._columns[k];
    }
    return *this;
  }

  HomTable& HomTable::operator-=(HomTable const& other) {
    if (other._rank != _rank) {
      throw DomainError("rank mismatch in Hom difference");
    }
    for (std::size_t k = 0; k < _columns.size(); ++k) {
      _columns[k] -= other._columns[k];
    }
    return *this;
  }

  HomTable operator-(HomTable a) {
    for (auto& c : a._columns) {
      c = -c;
    }
    return a;
  }

  ExtVector rho(Word const& w) {
    std::size_t const m = w.rank();
    // coefficient(i, j) = sum over s < t of e_s e_t [idx_s = i][idx_t = j].
    std::vector<long> prefix(m, 0);
    std::vector<long> coeff(m * m, 0);
    for (Letter l : w.letters()) {
      auto const j = static_cast<std::size_t>(l.index - 1);
      for (std::size_t i = 0; i < j; ++i) {
        if (prefix[i] != 0) {
          coeff[i * m + j] += prefix[i] * l.sign;
        }
      }
      prefix[j] += l.sign;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (prefix[i] != 0) {
        throw DomainError("rho: word " + to_string(w)
                          + " is not in the commutator subgroup");
      }
    }
    ExtVector out(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (coeff[i * m + j] != 0) {
          out.at(static_cast<int>(i + 1), static_cast<int>(j + 1))
              = coeff[i * m + j];
        }
      }
    }
    return out;
  }

  HomTable tau(GroupMap const& f) {
    if (!is_homology_trivial(f)) {
      throw DomainError("tau: map acts nontrivially on homology");
    }
    std::size_t const m = f.rank();
    HomTable          t(m);
    for (std::size_t i = 1; i <= m; ++i) {
      auto const k = static_cast<int>(i);
      t.column(k) = rho(mul(f.image(k), Word::generator(m, k, -1)));
    }
    return t;
  }

  IntVector flatten(HomTable const& t) {
    IntVector out;
    std::size_t const m = t.rank();
    out.reserve(m * m * (m ? m - 1 : 0) / 2);
    for (std::size_t i = 1; i <= m; ++i) {
      auto const& c = t.column(static_cast<int>(i)).coefficients();
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

}  // namespace torelli
