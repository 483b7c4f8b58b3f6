#ifndef TORELLI_INT_MATRIX_HPP_
#define TORELLI_INT_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <gmpxx.h>

namespace torelli {

  using Integer   = mpz_class;
  using IntVector = std::vector<Integer>;

  // Dense row-major matrix of arbitrary-precision integers.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<IntVector> const& rows,
                               std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Integer const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    [[nodiscard]] IntVector row(std::size_t r) const;
    [[nodiscard]] IntVector col(std::size_t c) const;
    [[nodiscard]] IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_diagonal() const;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Integer> _data;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
  IntVector operator*(IntMatrix const& a, IntVector const& v);

  // Exact determinant (fraction-free Bareiss elimination).
  Integer determinant(IntMatrix const& a);

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

}  // namespace torelli

#endif  // TORELLI_INT_MATRIX_HPP_
