#include "sl2dirac/cohomology.hpp"

#include <algorithm>
#include <map>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

namespace {

Parity rep_parity(const Vec& v, const std::vector<Parity>& parities) {
  bool seen = false;
  Parity p = Parity::Even;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!seen) {
      p = parities[i];
      seen = true;
    } else if (parities[i] != p) {
      throw Error(ErrorKind::InvalidArgument,
                  "cohomology representative mixes parities");
    }
  }
  if (!seen) {
    throw Error(ErrorKind::InvalidArgument, "zero representative");
  }
  return p;
}

std::vector<CohomologyClass> classes_from(
    const ZeroEigenspace& z, std::size_t degree,
    ClassSpace (*space_fn)(const EigenspaceSlice&, std::size_t)) {
  std::vector<CohomologyClass> out;
  for (const auto& [w, slice] : z.slices()) {
    const ClassSpace cs = space_fn(slice, degree);
    for (std::size_t i = 0; i < cs.dim(); ++i) {
      CohomologyClass c;
      c.degree = degree;
      c.weight = w;
      c.representative = cs.representative(i);
      c.parity = rep_parity(c.representative, slice.parities);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

ClassSpace hk_space(const EigenspaceSlice& slice, std::size_t k) {
  const Subspace ker1 = ker_pow(slice, 1);
  const Subspace num = intersect(im_pow(slice, 2 * k), ker1);
  const Subspace den = intersect(im_pow(slice, 2 * k + 1), ker1);
  return ClassSpace(num, den);
}

ClassSpace htop_space(const EigenspaceSlice& slice, std::size_t k) {
  const Subspace num = ker_pow(slice, 2 * k + 1);
  const Subspace den =
      sum(intersect(im_pow(slice, 1), num), ker_pow(slice, 2 * k));
  return ClassSpace(num, den);
}

ClassSpace hintermediate_space(const EigenspaceSlice& slice, std::size_t k,
                               std::size_t i) {
  if (i > k) {
    throw Error(ErrorKind::InvalidArgument,
                "intermediate extraction needs 0 <= i <= k");
  }
  const Subspace num =
      intersect(im_pow(slice, 2 * i), ker_pow(slice, 2 * k + 1 - 2 * i));
  const Subspace den =
      sum(intersect(im_pow(slice, 2 * i + 1), ker_pow(slice, 2 * k + 1 - 2 * i)),
          intersect(im_pow(slice, 2 * i), ker_pow(slice, 2 * k - 2 * i)));
  return ClassSpace(num, den);
}

std::vector<CohomologyClass> higher_dirac_cohomology(const ZeroEigenspace& z,
                                                     std::size_t k) {
  return classes_from(z, k, &hk_space);
}

std::vector<CohomologyClass> h_top(const ZeroEigenspace& z, std::size_t k) {
  return classes_from(z, k, &htop_space);
}

std::vector<CohomologyClass> h_intermediate(const ZeroEigenspace& z,
                                            std::size_t k, std::size_t i) {
  std::vector<CohomologyClass> out;
  for (const auto& [w, slice] : z.slices()) {
    const ClassSpace cs = hintermediate_space(slice, k, i);
    for (std::size_t t = 0; t < cs.dim(); ++t) {
      CohomologyClass c;
      c.degree = k;
      c.weight = w;
      c.representative = cs.representative(t);
      c.parity = rep_parity(c.representative, slice.parities);
      out.push_back(std::move(c));
    }
  }
  return out;
}

CohomologyReport full_cohomology(const ZeroEigenspace& z) {
  CohomologyReport r;
  for (std::size_t k = 0; 2 * k + 1 <= z.nilpotency_order(); ++k) {
    auto part = higher_dirac_cohomology(z, k);
    r.classes.insert(r.classes.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  return r;
}

std::vector<const CohomologyClass*> CohomologyReport::at_degree(
    std::size_t k) const {
  std::vector<const CohomologyClass*> out;
  for (const auto& c : classes) {
    if (c.degree == k) out.push_back(&c);
  }
  return out;
}

VirtualRModule CohomologyReport::index() const {
  VirtualRModule v;
  for (const auto& c : classes) {
    v.add(c.weight, c.parity == Parity::Even ? 1 : -1);
  }
  return v;
}

VirtualRModule CohomologyReport::index_at_degree(std::size_t k) const {
  VirtualRModule v;
  for (const auto& c : classes) {
    if (c.degree == k) v.add(c.weight, c.parity == Parity::Even ? 1 : -1);
  }
  return v;
}

VirtualRModule CohomologyReport::weight_multiset() const {
  VirtualRModule v;
  for (const auto& c : classes) v.add(c.weight, 1);
  return v;
}

std::size_t CohomologyReport::max_degree_present() const {
  std::size_t m = 0;
  for (const auto& c : classes) m = std::max(m, c.degree);
  return m;
}

std::vector<std::pair<Weight, Parity>> block_oracle(
    const JordanDecomposition& d, std::size_t k) {
  std::vector<std::pair<Weight, Parity>> out;
  for (const auto& b : d.blocks) {
    if (b.size == 2 * k + 1) out.emplace_back(b.weight, b.bottom_parity);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return static_cast<int>(x.second) < static_cast<int>(y.second);
  });
  return out;
}

bool block_oracle_agrees(const ZeroEigenspace& z, const CohomologyReport& r,
                         const JordanDecomposition& d) {
  for (std::size_t k = 0; 2 * k + 1 <= z.nilpotency_order() + 1; ++k) {
    std::vector<std::pair<Weight, Parity>> from_classes;
    for (const auto* c : r.at_degree(k)) {
      from_classes.emplace_back(c->weight, c->parity);
    }
    std::sort(from_classes.begin(), from_classes.end(),
              [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return static_cast<int>(x.second) < static_cast<int>(y.second);
              });
    if (from_classes != block_oracle(d, k)) return false;
  }
  return true;
}

bool top_bottom_iso(const ZeroEigenspace& z, std::size_t k) {
  for (const auto& [w, slice] : z.slices()) {
    const ClassSpace top = htop_space(slice, k);
    const ClassSpace bottom = hk_space(slice, k);
    if (top.dim() != bottom.dim()) return false;
    if (top.dim() == 0) continue;
    const Matrix induced =
        map_on_classes(slice.op.pow(2 * k), top, bottom);
    if (rank(induced) != top.dim()) return false;
  }
  return true;
}

bool top_bottom_iso_all(const ZeroEigenspace& z) {
  for (std::size_t k = 0; 2 * k + 1 <= z.nilpotency_order(); ++k) {
    if (!top_bottom_iso(z, k)) return false;
  }
  return true;
}

VirtualRModule dirac_index(const CohomologyReport& r) { return r.index(); }

VirtualRModule classical_index(const CohomologyReport& r) {
  return r.index_at_degree(0);
}

IndexIdentity index_identity_check(const ZeroEigenspace& z,
                                   const CohomologyReport& r) {
  IndexIdentity out;
  out.index = dirac_index(r);
  out.parity_character = z.ambient_parity_character();
  out.holds = out.index == out.parity_character;
  return out;
}

IndexIdentity classical_index_comparison(const ZeroEigenspace& z,
                                         const CohomologyReport& r) {
  IndexIdentity out;
  out.index = classical_index(r);
  out.parity_character = z.ambient_parity_character();
  out.holds = out.index == out.parity_character;
  return out;
}

bool index_additive(const VirtualRModule& sub, const VirtualRModule& total,
                    const VirtualRModule& quot) {
  return total == sub + quot;
}

bool vogan_check(const CohomologyReport& r, const Rational& inf_char) {
  for (const auto& c : r.classes) {
    const Rational gamma(c.weight);
    if (gamma != inf_char && gamma != -inf_char) return false;
  }
  return true;
}

bool vogan_check_any(const CohomologyReport& r,
                     const std::vector<Rational>& inf_chars) {
  for (const auto& c : r.classes) {
    const Rational gamma(c.weight);
    bool matched = false;
    for (const auto& lam : inf_chars) {
      if (gamma == lam || gamma == -lam) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool infchar_degeneration_check(const CohomologyReport& r) {
  for (const auto& c : r.classes) {
    if (c.degree >= 1) return false;
  }
  return true;
}

}  // namespace sl2dirac
