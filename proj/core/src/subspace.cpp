#include "sl2dirac/subspace.hpp"

#include <utility>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

Subspace Subspace::from_columns(const Matrix& generators) {
  Subspace s;
  s.ambient_ = generators.rows();
  const RrefResult r = rref(generators.transpose());
  Matrix basis(s.ambient_, r.rank);
  for (std::size_t k = 0; k < r.rank; ++k) {
    for (std::size_t j = 0; j < s.ambient_; ++j) {
      basis.at(j, k) = r.reduced.at(k, j);
    }
  }
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorKind::DimensionMismatch, "contains: vector length mismatch");
  }
  // Reduce v against the echelon basis; leftover must vanish.
  Vec w = v;
  for (std::size_t k = 0; k < basis_.cols(); ++k) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_.at(lead, k).is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!w[lead].is_zero()) {
      const Rational c = w[lead] / basis_.at(lead, k);
      for (std::size_t i = 0; i < ambient_; ++i) {
        w[i] -= c * basis_.at(i, k);
      }
    }
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorKind::DimensionMismatch, "contains: ambient mismatch");
  }
  for (std::size_t k = 0; k < other.dim(); ++k) {
    if (!contains(other.basis_.col(k))) return false;
  }
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "intersect: ambient mismatch");
  }
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // Solutions of A x + B y = 0: the A x part sweeps out the intersection.
  const Matrix stacked = Matrix::hcat(a.basis(), b.basis().scaled(-1));
  const Subspace ker = kernel(stacked);
  Matrix gens(a.ambient_dim(), ker.dim());
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec xy = ker.basis().col(k);
    Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    gens.set_col(k, a.basis().apply(x));
  }
  return Subspace::from_columns(gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "sum: ambient mismatch");
  }
  return Subspace::from_columns(Matrix::hcat(a.basis(), b.basis()));
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (const std::size_t p : r.pivot_cols) is_pivot[p] = true;
  Matrix gens(n, n - r.rank);
  std::size_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n);
    v[j] = 1;
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      v[r.pivot_cols[k]] = -r.reduced.at(k, j);
    }
    gens.set_col(out++, v);
  }
  return Subspace::from_columns(gens);
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "apply: shape mismatch");
  }
  return Subspace::from_columns(m * s.basis());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "preimage: shape mismatch");
  }
  if (s.dim() == 0) return kernel(m);
  // m x = s c for some c; read off the x block of the joint kernel.
  const Matrix joint = Matrix::hcat(m, s.basis().scaled(-1));
  const Subspace ker = kernel(joint);
  Matrix gens(m.cols(), ker.dim());
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec xc = ker.basis().col(k);
    Vec x(xc.begin(), xc.begin() + static_cast<std::ptrdiff_t>(m.cols()));
    gens.set_col(k, x);
  }
  return Subspace::from_columns(gens);
}

QuotientResult quotient(const Subspace& num, const Subspace& den) {
  if (num.ambient_dim() != den.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "quotient: ambient mismatch");
  }
  if (!num.contains(den)) {
    throw Error(ErrorKind::InclusionViolation,
                "quotient: denominator is not contained in numerator");
  }
  QuotientResult q;
  q.dim = num.dim() - den.dim();
  // Greedily extend den by canonical basis columns of num, in index order.
  std::vector<Vec> reps;
  Subspace working = den;
  for (std::size_t k = 0; k < num.dim() && reps.size() < q.dim; ++k) {
    Vec cand = num.basis().col(k);
    if (!working.contains(cand)) {
      reps.push_back(cand);
      working = sum(working, Subspace::from_columns(
                                 Matrix::from_columns(cand.size(), {cand})));
    }
  }
  q.representatives = Matrix::from_columns(num.ambient_dim(), reps);
  return q;
}

ClassSpace::ClassSpace(const Subspace& num, const Subspace& den) : den_(den) {
  const QuotientResult q = quotient(num, den);
  reps_ = q.representatives;
  den_and_reps_ = Matrix::hcat(den_.basis(), reps_);
}

Vec ClassSpace::coords(const Vec& v) const {
  const auto sol = solve(den_and_reps_, v);
  if (!sol) {
    throw Error(ErrorKind::ExactnessViolation,
                "class coordinates requested for a vector outside the quotient");
  }
  Vec c(reps_.cols());
  for (std::size_t i = 0; i < reps_.cols(); ++i) {
    c[i] = (*sol)[den_.dim() + i];
  }
  return c;
}

bool ClassSpace::in_numerator(const Vec& v) const {
  return solve(den_and_reps_, v).has_value();
}

Matrix map_on_classes(const Matrix& m, const ClassSpace& source,
                      const ClassSpace& target) {
  // Well defined: the denominator must be carried into the denominator.
  for (std::size_t k = 0; k < source.denominator().dim(); ++k) {
    Vec img = m.apply(source.denominator().basis().col(k));
    if (!target.denominator().contains(img)) {
      throw Error(ErrorKind::ExactnessViolation,
                  "induced map does not preserve the quotient denominator");
    }
  }
  Matrix out(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    out.set_col(j, target.coords(m.apply(source.representative(j))));
  }
  return out;
}

}  // namespace sl2dirac
