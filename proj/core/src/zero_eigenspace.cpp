#include "sl2dirac/zero_eigenspace.hpp"

#include <algorithm>
#include <sstream>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

namespace {

void check_parity_swapping(const Matrix& op, const std::vector<Parity>& par) {
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (std::size_t j = 0; j < op.cols(); ++j) {
      if (!op.at(i, j).is_zero() && par[i] == par[j]) {
        throw Error(ErrorKind::InvalidArgument,
                    "operator does not swap parity");
      }
    }
  }
}

std::size_t nilpotency_on(const Matrix& op, const Subspace& space) {
  Subspace cur = space;
  std::size_t t = 0;
  while (cur.dim() > 0) {
    cur = apply(op, cur);
    ++t;
    if (t > op.rows() + 1) {
      throw Error(ErrorKind::InvalidArgument, "operator is not nilpotent");
    }
  }
  return t;
}

}  // namespace

ZeroEigenspace ZeroEigenspace::from_operators(
    std::map<Weight, Matrix> ops,
    std::map<Weight, std::vector<Parity>> parities) {
  ZeroEigenspace z;
  for (auto& [w, op] : ops) {
    const auto pit = parities.find(w);
    if (pit == parities.end() || pit->second.size() != op.rows() ||
        !op.is_square()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "operator/parity data mismatch");
    }
    check_parity_swapping(op, pit->second);
    EigenspaceSlice s;
    s.weight = w;
    s.space = Subspace::full(op.rows());
    s.parities = pit->second;
    for (std::size_t i = 0; i < op.rows(); ++i) {
      std::ostringstream os;
      os << "b" << i;
      s.labels.push_back(os.str());
    }
    s.op = std::move(op);
    s.nilpotency_index = nilpotency_on(s.op, s.space);
    z.nilpotency_order_ = std::max(z.nilpotency_order_, s.nilpotency_index);
    z.slices_.emplace(w, std::move(s));
  }
  return z;
}

const EigenspaceSlice& ZeroEigenspace::slice(Weight w) const {
  const auto it = slices_.find(w);
  if (it == slices_.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "no eigenspace slice at the requested weight");
  }
  return it->second;
}

std::vector<Weight> ZeroEigenspace::weights() const {
  std::vector<Weight> out;
  for (const auto& [w, _] : slices_) out.push_back(w);
  return out;
}

std::size_t ZeroEigenspace::total_dim() const {
  std::size_t d = 0;
  for (const auto& [_, s] : slices_) d += s.space.dim();
  return d;
}

VirtualRModule ZeroEigenspace::ambient_parity_character() const {
  VirtualRModule out;
  for (const auto& [w, s] : slices_) {
    for (const Parity p : s.parities) {
      out.add(w, p == Parity::Even ? 1 : -1);
    }
  }
  return out;
}

Subspace ker_pow(const EigenspaceSlice& s, std::size_t j) {
  if (j == 0) return Subspace::zero(s.ambient_dim());
  return kernel(s.op.pow(std::min(j, s.ambient_dim())));
}

Subspace im_pow(const EigenspaceSlice& s, std::size_t j) {
  Subspace cur = s.space;
  for (std::size_t t = 0; t < j && cur.dim() > 0; ++t) cur = apply(s.op, cur);
  return cur;
}

ZeroEigenspace generalized_zero_eigenspace(const TensorComplex& t) {
  ZeroEigenspace z;
  std::vector<Weight> populated_safe;
  for (const auto& [w, block] : t.blocks()) {
    if (block.safe) populated_safe.push_back(w);
  }
  std::sort(populated_safe.begin(), populated_safe.end());

  Weight lowest_hit = 0;
  bool any_hit = false;
  for (const Weight w : populated_safe) {
    const TensorWeightBlock& block = t.block(w);
    const Subspace gen_kernel = kernel(block.dirac.pow(block.dim()));
    if (gen_kernel.dim() == 0) continue;
    if (!any_hit) {
      lowest_hit = w;
      any_hit = true;
    }
    EigenspaceSlice s;
    s.weight = w;
    s.op = block.dirac;
    s.space = gen_kernel;
    s.parities = block.parities();
    s.labels = block.labels();
    if (!s.space.contains(apply(s.op, s.space))) {
      throw Error(ErrorKind::InvalidArgument,
                  "eigenspace is not operator-invariant");
    }
    s.nilpotency_index = nilpotency_on(s.op, s.space);
    z.nilpotency_order_ = std::max(z.nilpotency_order_, s.nilpotency_index);
    z.slices_.emplace(w, std::move(s));
  }

  if (!t.module().is_complete() && any_hit) {
    // The two lowest certified slices must be clear of the eigenspace,
    // otherwise it may continue past the certified window.
    const std::size_t clearance = 2;
    bool too_shallow = populated_safe.size() < clearance;
    for (std::size_t i = 0; !too_shallow && i < clearance; ++i) {
      if (z.slices_.count(populated_safe[i]) != 0) too_shallow = true;
    }
    if (too_shallow) {
      // Ask for enough extra levels that two certified slices sit strictly
      // below the lowest hit (slices step by 2, certificate margin is 3).
      const Weight needed_interior = lowest_hit - 7;
      const Weight current = t.module().interior_min_weight();
      const int extra = current > needed_interior
                            ? (current - needed_interior + 1) / 2
                            : 1;
      std::ostringstream os;
      os << "generalized 0-eigenspace reaches the certified boundary "
            "(lowest hit at weight "
         << lowest_hit << "); deepen the truncation by at least " << extra
         << " levels";
      throw Error(ErrorKind::TruncationTooShallow, os.str(), extra);
    }
  }
  return z;
}

}  // namespace sl2dirac
