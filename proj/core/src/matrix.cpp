#include "sl2dirac/matrix.hpp"

#include <sstream>
#include <utility>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
  }
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
  }
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix entry count does not match shape");
  }
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
    }
    std::size_t j = 0;
    for (const auto& x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) {
    throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = entries_[i] + o.entries_[i];
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = entries_[i] - o.entries_[i];
  }
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = c * entries_[i];
  }
  return r;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
  }
  Matrix acc = Matrix::identity(rows_);
  for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix apply length mismatch");
  }
  Vec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "hcat row mismatch");
  }
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Rational Matrix::trace() const {
  if (!is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "trace of a non-square matrix");
  }
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
    }
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a.at(sel, j), a.at(pivot_row, j));
      }
    }
    const Rational inv = Rational(1) / a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) {
      a.at(pivot_row, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col).is_zero()) continue;
      const Rational factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) -= factor * a.at(pivot_row, j);
      }
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  for (const std::size_t p : r.pivot_cols) {
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
  }
  Vec x(a.cols());
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    x[r.pivot_cols[k]] = r.reduced.at(k, a.cols());
  }
  return x;
}

std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch,
                "characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    Rational t = (a * m).trace();
    c[n - k] = -(t / Rational(static_cast<long long>(k)));
  }
  return c;
}

}  // namespace sl2dirac
