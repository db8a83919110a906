#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "halfmmp/rational.hpp"

namespace halfmmp {

// Dense symmetric matrix over Q. set() writes both mirrored entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n) {}
  // Throws std::invalid_argument if rows are ragged or not symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix from_int_rows(std::initializer_list<std::initializer_list<long>> rows);
  static SymMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  SymMatrix negated() const;
  SymMatrix principal(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Rational det(const SymMatrix& m);
// Determinant of an arbitrary square matrix given by rows.
Rational det(std::vector<std::vector<Rational>> rows);
bool is_negative_definite(const SymMatrix& m);
// Throws Error{SingularMatrix} for any singular m.
std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b);
std::vector<Rational> multiply(const SymMatrix& m, const std::vector<Rational>& x);
Rational quadratic_form(const SymMatrix& m, const std::vector<Rational>& x);
// Signature by exact congruence diagonalization.
Inertia inertia(const SymMatrix& m);

}  // namespace halfmmp
