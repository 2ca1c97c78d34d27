#pragma once

#include <cstddef>

#include "sl2dirac/matrix.hpp"

namespace sl2dirac {

/// A linear subspace of Q^n, stored as its reduced column echelon basis.
/// The stored form is canonical: two Subspace values describe the same span
/// exactly when they compare equal entry for entry. Every set-level operation
/// below re-canonicalizes, so equality of spans is always a syntactic check.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `generators` (dependent/zero columns allowed).
  static Subspace from_columns(const Matrix& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  /// ambient_dim x dim matrix whose columns are the canonical basis.
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // ambient_ rows, dim() columns, reduced column echelon form
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Null space of m, as a subspace of Q^cols.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Span of m * s, i.e. the image of the restriction of m to s.
Subspace apply(const Matrix& m, const Subspace& s);
/// {x : m*x lies in s}.
Subspace preimage(const Matrix& m, const Subspace& s);

struct QuotientResult {
  std::size_t dim = 0;
  /// Columns are representatives completing a basis of `den` to one of `num`;
  /// they are canonical basis columns of `num`, taken in index order.
  Matrix representatives;
};

/// num/den with den <= num required (checked).
QuotientResult quotient(const Subspace& num, const Subspace& den);

/// A quotient num/den together with coordinates: vectors of num are expressed
/// in the chosen representative basis modulo den.
class ClassSpace {
 public:
  ClassSpace() = default;
  ClassSpace(const Subspace& num, const Subspace& den);

  std::size_t dim() const { return reps_.cols(); }
  std::size_t ambient_dim() const { return den_.ambient_dim(); }
  Vec representative(std::size_t i) const { return reps_.col(i); }
  const Matrix& representatives() const { return reps_; }
  const Subspace& denominator() const { return den_; }

  /// Class coordinates of v; requires v in den + span(reps).
  Vec coords(const Vec& v) const;
  bool in_numerator(const Vec& v) const;

 private:
  Subspace den_;
  Matrix reps_;
  Matrix den_and_reps_;  // cached [den.basis | reps] for coordinate solves
};

/// Matrix of the map induced on classes by `m`, with well-definedness checks:
/// m must send source's denominator into target's denominator and source
/// representatives into target's numerator.
Matrix map_on_classes(const Matrix& m, const ClassSpace& source,
                      const ClassSpace& target);

}  // namespace sl2dirac
