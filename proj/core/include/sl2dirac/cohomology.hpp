#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sl2dirac/jordan.hpp"
#include "sl2dirac/zero_eigenspace.hpp"

namespace sl2dirac {

struct CohomologyClass {
  std::size_t degree = 0;
  Weight weight = 0;
  Parity parity = Parity::Even;
  Vec representative;  // ambient slice coordinates, canonical
};

struct CohomologyReport {
  std::vector<CohomologyClass> classes;  // sorted by (degree, weight, position)

  std::vector<const CohomologyClass*> at_degree(std::size_t k) const;
  /// Signed weight multiset: even classes count +1, odd classes -1.
  VirtualRModule index() const;
  VirtualRModule index_at_degree(std::size_t k) const;
  /// Unsigned weight multiset of all classes.
  VirtualRModule weight_multiset() const;
  std::size_t max_degree_present() const;
};

// Quotient spaces of the per-weight filtration. Degree-k cohomology extracts
// the bottom of every chain of size 2k+1:
//   H^k   = Im D^{2k} cap Ker D  /  Im D^{2k+1} cap Ker D
// and the top/intermediate variants extract the other odd-position chain
// vectors of the same blocks.
ClassSpace hk_space(const EigenspaceSlice& slice, std::size_t k);
ClassSpace htop_space(const EigenspaceSlice& slice, std::size_t k);
ClassSpace hintermediate_space(const EigenspaceSlice& slice, std::size_t k,
                               std::size_t i);

std::vector<CohomologyClass> higher_dirac_cohomology(const ZeroEigenspace& z,
                                                     std::size_t k);
std::vector<CohomologyClass> h_top(const ZeroEigenspace& z, std::size_t k);
std::vector<CohomologyClass> h_intermediate(const ZeroEigenspace& z,
                                            std::size_t k, std::size_t i);

/// All degrees with 2k+1 <= nilpotency order.
CohomologyReport full_cohomology(const ZeroEigenspace& z);

/// Bottoms (weight, parity) of all blocks of size exactly 2k+1.
std::vector<std::pair<Weight, Parity>> block_oracle(
    const JordanDecomposition& d, std::size_t k);

/// Degree-by-degree: classes agree with the block bottoms as multisets of
/// (weight, parity), for every degree.
bool block_oracle_agrees(const ZeroEigenspace& z, const CohomologyReport& r,
                         const JordanDecomposition& d);

/// The map induced by D^{2k} from the top quotient onto H^k is an
/// isomorphism, for every weight.
bool top_bottom_iso(const ZeroEigenspace& z, std::size_t k);
bool top_bottom_iso_all(const ZeroEigenspace& z);

VirtualRModule dirac_index(const CohomologyReport& r);
/// Index of the degree-0 part alone (the classical functor).
VirtualRModule classical_index(const CohomologyReport& r);

struct IndexIdentity {
  bool holds = false;
  VirtualRModule index;             // signed multiset from the cohomology
  VirtualRModule parity_character;  // even minus odd of the ambient slices
};

/// The full index equals the even-minus-odd character of the eigenspace
/// slices; the classical (degree-0) index in general does not.
IndexIdentity index_identity_check(const ZeroEigenspace& z,
                                   const CohomologyReport& r);
IndexIdentity classical_index_comparison(const ZeroEigenspace& z,
                                         const CohomologyReport& r);

/// Additivity of the index over a short exact sequence.
bool index_additive(const VirtualRModule& sub, const VirtualRModule& total,
                    const VirtualRModule& quot);

/// Every class weight g must satisfy g + rho_r = +-Lambda; the torus has
/// rho_r = 0, so the constraint is g in {Lambda, -Lambda}.
bool vogan_check(const CohomologyReport& r, const Rational& inf_char);
/// Multi-component variant: each class must pass for some listed character.
bool vogan_check_any(const CohomologyReport& r,
                     const std::vector<Rational>& inf_chars);

/// For modules with honest infinitesimal character all cohomology sits in
/// degree zero.
bool infchar_degeneration_check(const CohomologyReport& r);

}  // namespace sl2dirac
