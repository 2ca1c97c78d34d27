#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sl2dirac/rational.hpp"

namespace sl2dirac {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);

/// Dense row-major matrix over exact rationals. Immutable in spirit: the
/// algebra below always returns fresh values, mutation is limited to
/// construction-time filling.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-major initializer, e.g. Matrix::from_rows({{1,2},{3,4}}).
  static Matrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix pow(std::size_t k) const;
  Vec apply(const Vec& v) const;

  /// Columns of `a` followed by columns of `b`.
  static Matrix hcat(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Rational trace() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination; the pivot in
/// each step is the first row with a nonzero entry in the current column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of a*x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// det(x*I - a) as coefficients [c_0, ..., c_n] with c_n = 1
/// (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const Matrix& a);

}  // namespace sl2dirac
