#ifndef TORELLI_MAGNUS_HPP_
#define TORELLI_MAGNUS_HPP_

// Degree-2 Magnus projection rho: [F_m, F_m] -> wedge^2 Z^m and the Johnson
// homomorphism tau: IA_m -> Hom(H, wedge^2 H).

#include <cstddef>
#include <vector>

#include "torelli/int_matrix.hpp"
#include "torelli/word.hpp"

namespace torelli {

  // Element of wedge^2 Z^m, stored in the basis e_i ^ e_j, i < j, in
  // lexicographic order of (i, j).
  class ExtVector {
   public:
    ExtVector() = default;
    explicit ExtVector(std::size_t rank)
        : _rank(rank), _coeffs(rank * (rank ? rank - 1 : 0) / 2) {}

    // e_i ^ e_j for any i != j (antisymmetric).
    static ExtVector wedge(std::size_t rank, int i, int j);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _coeffs.size();
    }
    // 1-based i < j.
    [[nodiscard]] Integer const& at(int i, int j) const {
      return _coeffs[offset(i, j)];
    }
    Integer& at(int i, int j) {
      return _coeffs[offset(i, j)];
    }
    [[nodiscard]] IntVector const& coefficients() const noexcept {
      return _coeffs;
    }
    [[nodiscard]] bool is_zero() const;

    ExtVector& operator+=(ExtVector const& other);
    ExtVector& operator-=(ExtVector const& other);
    friend ExtVector operator+(ExtVector a, ExtVector const& b) {
      return a += b;
    }
    friend ExtVector operator-(ExtVector a, ExtVector const& b) {
      return a -= b;
    }
    friend ExtVector operator-(ExtVector a);
    friend bool      operator==(ExtVector const&, ExtVector const&) = default;

   private:
    [[nodiscard]] std::size_t offset(int i, int j) const;

    std::size_t _rank = 0;
    IntVector   _coeffs;
  };

  // Element of Hom(Z^m, wedge^2 Z^m): column i is the image of e_i.
  class HomTable {
   public:
    HomTable() = default;
    explicit HomTable(std::size_t rank)
        : _rank(rank), _columns(rank, ExtVector(rank)) {}

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    // 1-based column index.
    [[nodiscard]] ExtVector const& column(int i) const {
      return _columns.at(static_cast<std::size_t>(i - 1));
    }
    ExtVector& column(int i) {
      return _columns.at(static_cast<std::size_t>(i - 1));
    }
    [[nodiscard]] bool is_zero() const;

    HomTable& operator+=(HomTable const& other);
    HomTable& operator-=(HomTable const& other);
    friend HomTable operator+(HomTable a, HomTable const& b) {
      return a += b;
    }
    friend HomTable operator-(HomTable a, HomTable const& b) {
      return a -= b;
    }
    friend HomTable operator-(HomTable a);
    friend bool     operator==(HomTable const&, HomTable const&) = default;

   private:
    std::size_t            _rank = 0;
    std::vector<ExtVector> _columns;
  };

  // Throws DomainError unless abelianization_vector(w) == 0.
  ExtVector rho(Word const& w);

  // Throws DomainError unless f is homology-trivial.
  HomTable tau(GroupMap const& f);

  // Column-major, then (i, j) lexicographic; length m * m(m-1)/2.
  IntVector flatten(HomTable const& t);

}  // namespace torelli

#endif  // TORELLI_MAGNUS_HPP_
