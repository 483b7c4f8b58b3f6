#include "torelli/int_matrix.hpp"

#include <utility>

#include "torelli/error.hpp"

namespace torelli {

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() ? rows.begin()->size() : 0) {
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw DomainError("ragged matrix literal");
      }
      for (long x : r) {
        _data.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::from_rows(std::vector<IntVector> const& rows,
                                 std::size_t                   cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw DomainError("row " + std::to_string(r) + " has length "
                          + std::to_string(rows[r].size()) + ", expected "
                          + std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(_data.begin() + static_cast<std::ptrdiff_t>(r * _cols),
                     _data.begin() + static_cast<std::ptrdiff_t>((r + 1) * _cols));
  }

  IntVector IntMatrix::col(std::size_t c) const {
    IntVector v(_rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t c = 0; c < _cols; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t r = 0; r < _rows; ++r) {
      std::swap((*this)(r, a), (*this)(r, b));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                   Integer const& k) {
    if (k == 0) {
      return;
    }
    for (std::size_t c = 0; c < _cols; ++c) {
      if ((*this)(src, c) != 0) {
        (*this)(dst, c) += k * (*this)(src, c);
      }
    }
  }

  void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                   Integer const& k) {
    if (k == 0) {
      return;
    }
    for (std::size_t r = 0; r < _rows; ++r) {
      if ((*this)(r, src) != 0) {
        (*this)(r, dst) += k * (*this)(r, src);
      }
    }
  }

  void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < _cols; ++c) {
      (*this)(r, c) = -(*this)(r, c);
    }
  }

  void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < _rows; ++r) {
      (*this)(r, c) = -(*this)(r, c);
    }
  }

  bool IntMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  bool IntMatrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        if ((*this)(r, c) != (r == c ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        if (r != c && (*this)(r, c) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw DomainError("matrix shape mismatch in product");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(k, j) != 0) {
            out(i, j) += a(i, k) * b(k, j);
          }
        }
      }
    }
    return out;
  }

  IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DomainError("matrix shape mismatch in sum");
    }
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out(i, j) += b(i, j);
      }
    }
    return out;
  }

  IntVector operator*(IntMatrix const& a, IntVector const& v) {
    if (a.cols() != v.size()) {
      throw DomainError("matrix/vector shape mismatch");
    }
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out[i] += a(i, j) * v[j];
      }
    }
    return out;
  }

  Integer determinant(IntMatrix const& input) {
    if (input.rows() != input.cols()) {
      throw DomainError("determinant of a non-square matrix");
    }
    std::size_t const n = input.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = input;
    Integer   prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a(i, j) = t;
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        os << (c ? ", " : "") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

}  // namespace torelli
