#include "sl2dirac/n_differential.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

namespace {

const EigenspaceSlice* find_slice(const ZeroEigenspace& z, Weight w) {
  return z.has_weight(w) ? &z.slice(w) : nullptr;
}

ClassSpace empty_class_space(std::size_t ambient) {
  return ClassSpace(Subspace::zero(ambient), Subspace::zero(ambient));
}

/// H^i for exponent n at one (possibly absent) slice.
ClassSpace n_class_space(const EigenspaceSlice* slice, std::size_t ambient,
                         std::size_t i, std::size_t n) {
  if (slice == nullptr) return empty_class_space(ambient);
  return ClassSpace(ker_pow(*slice, i), im_pow(*slice, n - i));
}

}  // namespace

NDifferential::NDifferential(ZeroEigenspace space, std::size_t n)
    : space_(std::move(space)), n_(n) {
  if (n_ < space_.nilpotency_order()) {
    std::ostringstream os;
    os << "exponent " << n_ << " is below the nilpotency order "
       << space_.nilpotency_order();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  for (const auto& [w, s] : space_.slices()) {
    if (im_pow(s, n_).dim() != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "operator power does not vanish at the chosen exponent");
    }
  }
}

std::size_t default_even_exponent(const ZeroEigenspace& z) {
  const std::size_t order = std::max<std::size_t>(z.nilpotency_order(), 1);
  return order % 2 == 0 ? order : order + 1;
}

std::size_t GradedQuotient::total_dim() const {
  std::size_t d = 0;
  for (const auto& [_, cs] : by_weight) d += cs.dim();
  return d;
}

std::map<Weight, std::size_t> GradedQuotient::dims() const {
  std::map<Weight, std::size_t> out;
  for (const auto& [w, cs] : by_weight) {
    if (cs.dim() > 0) out.emplace(w, cs.dim());
  }
  return out;
}

VirtualRModule GradedQuotient::weight_multiset() const {
  VirtualRModule v;
  for (const auto& [w, cs] : by_weight) {
    v.add(w, static_cast<long long>(cs.dim()));
  }
  return v;
}

GradedQuotient n_cohomology(const NDifferential& nd, std::size_t i) {
  if (i < 1 || i >= nd.n()) {
    throw Error(ErrorKind::InvalidArgument,
                "degree out of range: need 1 <= i <= N-1");
  }
  GradedQuotient q;
  q.degree = i;
  for (const auto& [w, slice] : nd.space().slices()) {
    q.by_weight.emplace(
        w, ClassSpace(ker_pow(slice, i), im_pow(slice, nd.n() - i)));
  }
  return q;
}

bool block_contribution(std::size_t j, std::size_t k, std::size_t n,
                        std::size_t i) {
  if (j < 1 || j > k || k > n) {
    throw Error(ErrorKind::InvalidArgument,
                "block contribution needs 1 <= j <= k <= N");
  }
  return j <= i && i < j + n - k;
}

VirtualRModule stable_alternating_sum(const NDifferential& nd) {
  if (nd.n() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "alternating sum needs an even exponent");
  }
  VirtualRModule acc;
  for (std::size_t i = 1; i <= nd.n() - 1; ++i) {
    const VirtualRModule term = n_cohomology(nd, i).weight_multiset();
    if (i % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

RemarkExpressions remark_expressions(const NDifferential& nd) {
  RemarkExpressions out;
  for (const auto& [w, slice] : nd.space().slices()) {
    for (std::size_t i = 0; 2 * i < slice.nilpotency_index; ++i) {
      const Subspace num1 = ker_pow(slice, 2 * i + 1);
      const Subspace den1 =
          sum(ker_pow(slice, 2 * i),
              apply(slice.op, ker_pow(slice, 2 * i + 2)));
      out.kernel_ladder.add(
          w, static_cast<long long>(quotient(num1, den1).dim));

      const Subspace num2 = intersect(
          preimage(slice.op, im_pow(slice, 2 * i + 2)), im_pow(slice, 2 * i));
      const Subspace den2 = im_pow(slice, 2 * i + 1);
      out.image_ladder.add(
          w, static_cast<long long>(quotient(num2, den2).dim));
    }
  }
  return out;
}

TildePair tilde_functors(const NDifferential& nd, std::size_t i) {
  if (i > nd.n()) {
    throw Error(ErrorKind::InvalidArgument,
                "filtration degree exceeds the exponent");
  }
  TildePair out;
  for (const auto& [w, slice] : nd.space().slices()) {
    const Subspace coh_num = ker_pow(slice, i);
    const Subspace coh_den = apply(slice.op, ker_pow(slice, i + 1));
    out.cohomology_dims[w] = quotient(coh_num, coh_den).dim;

    const Subspace hom_num = intersect(
        preimage(slice.op, im_pow(slice, i + 1)), slice.space);
    const Subspace hom_den = im_pow(slice, i);
    out.homology_dims[w] = quotient(hom_num, hom_den).dim;
  }
  return out;
}

std::size_t TildePair::total_cohomology() const {
  std::size_t d = 0;
  for (const auto& [_, v] : cohomology_dims) d += v;
  return d;
}

std::size_t TildePair::total_homology() const {
  std::size_t d = 0;
  for (const auto& [_, v] : homology_dims) d += v;
  return d;
}

bool tilde_identities_hold(const NDifferential& nd) {
  // Degree 1 recovers the classical quotient Ker D / (Ker D cap Im D).
  const TildePair first = tilde_functors(nd, 1);
  for (const auto& [w, slice] : nd.space().slices()) {
    const std::size_t classical = hk_space(slice, 0).dim();
    const auto cit = first.cohomology_dims.find(w);
    const auto hit = first.homology_dims.find(w);
    if (cit == first.cohomology_dims.end() ||
        hit == first.homology_dims.end() || cit->second != classical ||
        hit->second != classical) {
      return false;
    }
  }
  // Any degree at or past the nilpotency order gives (Coker D, Ker D).
  for (const std::size_t i :
       std::set<std::size_t>{nd.space().nilpotency_order(), nd.n()}) {
    if (i == 0) continue;
    const TildePair degenerate = tilde_functors(nd, i);
    for (const auto& [w, slice] : nd.space().slices()) {
      const std::size_t coker =
          slice.space.dim() - im_pow(slice, 1).dim();
      const std::size_t ker = ker_pow(slice, 1).dim();
      if (degenerate.cohomology_dims.at(w) != coker ||
          degenerate.homology_dims.at(w) != ker) {
        return false;
      }
    }
  }
  return true;
}

SequenceSpaces::SequenceSpaces(ZeroEigenspace sub, ZeroEigenspace total,
                               ZeroEigenspace quot,
                               std::map<Weight, Matrix> inclusion,
                               std::map<Weight, Matrix> projection)
    : sub_(std::move(sub)),
      total_(std::move(total)),
      quot_(std::move(quot)),
      inclusion_(std::move(inclusion)),
      projection_(std::move(projection)) {
  validate();
}

std::vector<Weight> SequenceSpaces::weights() const {
  std::set<Weight> seen;
  for (const Weight w : sub_.weights()) seen.insert(w);
  for (const Weight w : total_.weights()) seen.insert(w);
  for (const Weight w : quot_.weights()) seen.insert(w);
  return std::vector<Weight>(seen.begin(), seen.end());
}

Matrix SequenceSpaces::inclusion_at(Weight w) const {
  const auto it = inclusion_.find(w);
  if (it != inclusion_.end()) return it->second;
  return Matrix(ambient_dim_total(w), ambient_dim_sub(w));
}

Matrix SequenceSpaces::projection_at(Weight w) const {
  const auto it = projection_.find(w);
  if (it != projection_.end()) return it->second;
  return Matrix(ambient_dim_quot(w), ambient_dim_total(w));
}

std::size_t SequenceSpaces::ambient_dim_sub(Weight w) const {
  if (sub_.has_weight(w)) return sub_.slice(w).ambient_dim();
  const auto it = inclusion_.find(w);
  return it != inclusion_.end() ? it->second.cols() : 0;
}

std::size_t SequenceSpaces::ambient_dim_total(Weight w) const {
  if (total_.has_weight(w)) return total_.slice(w).ambient_dim();
  const auto it = inclusion_.find(w);
  if (it != inclusion_.end()) return it->second.rows();
  const auto pt = projection_.find(w);
  return pt != projection_.end() ? pt->second.cols() : 0;
}

std::size_t SequenceSpaces::ambient_dim_quot(Weight w) const {
  if (quot_.has_weight(w)) return quot_.slice(w).ambient_dim();
  const auto it = projection_.find(w);
  return it != projection_.end() ? it->second.rows() : 0;
}

void SequenceSpaces::validate() const {
  for (const Weight w : weights()) {
    const Matrix incl = inclusion_at(w);
    const Matrix proj = projection_at(w);
    if (incl.rows() != ambient_dim_total(w) ||
        incl.cols() != ambient_dim_sub(w) ||
        proj.rows() != ambient_dim_quot(w) ||
        proj.cols() != ambient_dim_total(w)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "sequence maps do not match slice dimensions");
    }

    const EigenspaceSlice* su = find_slice(sub_, w);
    const EigenspaceSlice* sv = find_slice(total_, w);
    const EigenspaceSlice* sw = find_slice(quot_, w);

    // Maps must commute with the operators on the eigenspaces.
    if (su != nullptr && sv != nullptr) {
      const Matrix res = incl * su->op - sv->op * incl;
      if (!(res * su->space.basis()).is_zero()) {
        throw Error(ErrorKind::ExactnessViolation,
                    "inclusion does not commute with the operator");
      }
    }
    if (sv != nullptr && sw != nullptr) {
      const Matrix res = proj * sv->op - sw->op * proj;
      if (!(res * sv->space.basis()).is_zero()) {
        throw Error(ErrorKind::ExactnessViolation,
                    "projection does not commute with the operator");
      }
    }

    const Subspace nu =
        su != nullptr ? su->space : Subspace::zero(ambient_dim_sub(w));
    const Subspace nv =
        sv != nullptr ? sv->space : Subspace::zero(ambient_dim_total(w));
    const Subspace nw =
        sw != nullptr ? sw->space : Subspace::zero(ambient_dim_quot(w));

    const Subspace incl_image = apply(incl, nu);
    if (incl_image.dim() != nu.dim()) {
      throw Error(ErrorKind::ExactnessViolation,
                  "inclusion is not injective on the eigenspace");
    }
    if (!(apply(proj, nv) == nw)) {
      throw Error(ErrorKind::ExactnessViolation,
                  "projection is not surjective onto the quotient eigenspace");
    }
    if (!(incl_image == intersect(kernel(proj), nv))) {
      throw Error(ErrorKind::ExactnessViolation,
                  "image of the inclusion differs from the projection kernel");
    }
  }
}

SequenceSpaces restrict_sequence(const ShortExactSequence& s) {
  const SequenceReport rep = check_sequence(s);
  if (!rep.ok) {
    throw Error(ErrorKind::ExactnessViolation,
                "module sequence fails exactness: " + rep.failures.front());
  }
  const TensorComplex tu = build_tensor(s.sub());
  const TensorComplex tv = build_tensor(s.total());
  const TensorComplex tw = build_tensor(s.quot());
  ZeroEigenspace zu = generalized_zero_eigenspace(tu);
  ZeroEigenspace zv = generalized_zero_eigenspace(tv);
  ZeroEigenspace zw = generalized_zero_eigenspace(tw);

  std::set<Weight> union_weights;
  for (const Weight w : zu.weights()) union_weights.insert(w);
  for (const Weight w : zv.weights()) union_weights.insert(w);
  for (const Weight w : zw.weights()) union_weights.insert(w);

  auto tensored = [](const Matrix& m, const TensorComplex& from,
                     const TensorComplex& to, Weight w) {
    const std::vector<TensorBasisVector> src =
        from.has_weight(w) ? from.block(w).basis
                           : std::vector<TensorBasisVector>{};
    const std::vector<TensorBasisVector> dst =
        to.has_weight(w) ? to.block(w).basis : std::vector<TensorBasisVector>{};
    Matrix out(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (std::size_t i = 0; i < dst.size(); ++i) {
        if (src[j].spin != dst[i].spin) continue;
        out.at(i, j) = m.at(dst[i].module_index, src[j].module_index);
      }
    }
    return out;
  };

  std::map<Weight, Matrix> incl, proj;
  for (const Weight w : union_weights) {
    incl.emplace(w, tensored(s.inclusion.matrix, tu, tv, w));
    proj.emplace(w, tensored(s.projection.matrix, tv, tw, w));
  }
  return SequenceSpaces(std::move(zu), std::move(zv), std::move(zw),
                        std::move(incl), std::move(proj));
}

ConnectingResult connecting_hom(const SequenceSpaces& s, std::size_t i,
                                std::size_t n) {
  ConnectingResult out;
  for (const Weight w : s.weights()) {
    const EigenspaceSlice* sw = find_slice(s.quot(), w);
    const EigenspaceSlice* su = find_slice(s.sub(), w);
    const EigenspaceSlice* sv = find_slice(s.total(), w);
    const ClassSpace hq = n_class_space(sw, s.ambient_dim_quot(w), i, n);
    const ClassSpace hu = n_class_space(su, s.ambient_dim_sub(w), n - i, n);
    Matrix del(hu.dim(), hq.dim());
    if (hq.dim() > 0) {
      if (sv == nullptr) {
        throw Error(ErrorKind::ExactnessViolation,
                    "quotient class cannot be lifted: middle space is empty");
      }
      const Matrix proj = s.projection_at(w);
      const Matrix incl = s.inclusion_at(w);
      const Matrix lift_sys = proj * sv->space.basis();
      const Subspace lift_ker = kernel(lift_sys);
      const Matrix opv_i = sv->op.pow(i);
      for (std::size_t c = 0; c < hq.dim(); ++c) {
        const Vec target = hq.representative(c);
        const auto coeffs = solve(lift_sys, target);
        if (!coeffs) {
          throw Error(ErrorKind::ExactnessViolation,
                      "quotient class cannot be lifted through the projection");
        }
        auto push_and_pull = [&](const Vec& lift_coeffs) {
          const Vec v = sv->space.basis().apply(lift_coeffs);
          const Vec z = opv_i.apply(v);
          const Matrix pull_sys =
              su != nullptr ? incl * su->space.basis()
                            : Matrix(incl.rows(), 0);
          const auto ucoeffs = solve(pull_sys, z);
          if (!ucoeffs) {
            throw Error(ErrorKind::ExactnessViolation,
                        "pushed class does not pull back through the inclusion");
          }
          Vec u(s.ambient_dim_sub(w));
          if (su != nullptr) u = su->space.basis().apply(*ucoeffs);
          return u;
        };
        const Vec u = push_and_pull(*coeffs);
        if (su != nullptr && !vec_is_zero(su->op.pow(n - i).apply(u))) {
          throw Error(ErrorKind::ExactnessViolation,
                      "pulled-back class is not annihilated at the right power");
        }
        del.set_col(c, hu.coords(u));
        if (lift_ker.dim() > 0) {
          const Vec second = vec_add(*coeffs, lift_ker.basis().col(0));
          const Vec u2 = push_and_pull(second);
          if (hu.coords(u2) != del.col(c)) out.well_defined = false;
        }
      }
    }
    out.maps.emplace(w, std::move(del));
  }
  return out;
}

SixTermResult six_term_verify(const SequenceSpaces& s, std::size_t i,
                              std::size_t n) {
  if (i < 1 || i >= n) {
    throw Error(ErrorKind::InvalidArgument,
                "six-term degree out of range: need 1 <= i <= N-1");
  }
  for (const ZeroEigenspace* z : {&s.sub(), &s.total(), &s.quot()}) {
    if (z->nilpotency_order() > n) {
      throw Error(ErrorKind::InvalidArgument,
                  "exponent is below a nilpotency order in the sequence");
    }
  }

  SixTermResult result;
  const ConnectingResult del_i = connecting_hom(s, i, n);
  const ConnectingResult del_ni = connecting_hom(s, n - i, n);
  result.connecting_well_defined =
      del_i.well_defined && del_ni.well_defined;

  const char* names[6] = {"H^i(U)", "H^i(V)",   "H^i(W)",
                          "H^N-i(U)", "H^N-i(V)", "H^N-i(W)"};
  result.nodes.resize(6);
  for (std::size_t t = 0; t < 6; ++t) result.nodes[t].name = names[t];

  for (const Weight w : s.weights()) {
    const EigenspaceSlice* su = find_slice(s.sub(), w);
    const EigenspaceSlice* sv = find_slice(s.total(), w);
    const EigenspaceSlice* sw = find_slice(s.quot(), w);
    const Matrix incl = s.inclusion_at(w);
    const Matrix proj = s.projection_at(w);

    const ClassSpace au = n_class_space(su, s.ambient_dim_sub(w), i, n);
    const ClassSpace av = n_class_space(sv, s.ambient_dim_total(w), i, n);
    const ClassSpace aw = n_class_space(sw, s.ambient_dim_quot(w), i, n);
    const ClassSpace bu = n_class_space(su, s.ambient_dim_sub(w), n - i, n);
    const ClassSpace bv = n_class_space(sv, s.ambient_dim_total(w), n - i, n);
    const ClassSpace bw = n_class_space(sw, s.ambient_dim_quot(w), n - i, n);

    const Matrix maps[6] = {
        map_on_classes(incl, au, av), map_on_classes(proj, av, aw),
        del_i.maps.at(w),             map_on_classes(incl, bu, bv),
        map_on_classes(proj, bv, bw), del_ni.maps.at(w)};
    const std::size_t dims[6] = {au.dim(), av.dim(), aw.dim(),
                                 bu.dim(), bv.dim(), bw.dim()};

    for (std::size_t node = 0; node < 6; ++node) {
      result.nodes[node].dim += dims[node];
      const Matrix& incoming = maps[(node + 5) % 6];
      const Matrix& outgoing = maps[node];
      if (!(image(incoming) == kernel(outgoing))) {
        result.nodes[node].exact = false;
        result.exact = false;
      }
    }
  }
  return result;
}

}  // namespace sl2dirac
