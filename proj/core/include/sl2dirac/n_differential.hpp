#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2dirac/cohomology.hpp"
#include "sl2dirac/sl2_module.hpp"
#include "sl2dirac/zero_eigenspace.hpp"

namespace sl2dirac {

/// A nilpotent graded operator together with a chosen exponent N for which
/// D^N = 0; the quotients Ker D^i / Im D^(N-i) depend on this choice.
class NDifferential {
 public:
  NDifferential(ZeroEigenspace space, std::size_t n);

  const ZeroEigenspace& space() const { return space_; }
  std::size_t n() const { return n_; }

 private:
  ZeroEigenspace space_;
  std::size_t n_;
};

/// Smallest even N with D^N = 0; the default exponent for alternating sums.
std::size_t default_even_exponent(const ZeroEigenspace& z);

struct GradedQuotient {
  std::size_t degree = 0;
  std::map<Weight, ClassSpace> by_weight;

  std::size_t total_dim() const;
  std::map<Weight, std::size_t> dims() const;
  VirtualRModule weight_multiset() const;
};

/// Ker D^i / Im D^(N-i) per weight, 1 <= i <= N-1.
GradedQuotient n_cohomology(const NDifferential& nd, std::size_t i);

/// Whether chain position j of a block of size k survives into degree i for
/// exponent N: j <= i < j + N - k.
bool block_contribution(std::size_t j, std::size_t k, std::size_t n,
                        std::size_t i);

/// Alternating sum sum_i (-1)^(i-1) [H^i] as a weight multiset; requires an
/// even exponent, and the result is independent of which even exponent is
/// chosen.
VirtualRModule stable_alternating_sum(const NDifferential& nd);

/// Both Grothendieck-group rewritings of the alternating sum:
///   sum_i  Ker D^(2i+1) / (Ker D^(2i) + D Ker D^(2i+2))
///   sum_i  Ker(D : Im D^(2i)/Im D^(2i+1) -> Im D^(2i+1)/Im D^(2i+2))
/// Each equals the weight multiset of the full cohomology.
struct RemarkExpressions {
  VirtualRModule kernel_ladder;
  VirtualRModule image_ladder;
};
RemarkExpressions remark_expressions(const NDifferential& nd);

/// Filtration (co)homology: Coker(D: Ker D^(i+1) -> Ker D^i) and
/// Ker(D: Coker D^i -> Coker D^(i+1)) per weight.
struct TildePair {
  std::map<Weight, std::size_t> cohomology_dims;
  std::map<Weight, std::size_t> homology_dims;
  std::size_t total_cohomology() const;
  std::size_t total_homology() const;
};
TildePair tilde_functors(const NDifferential& nd, std::size_t i);

/// The identities the filtration functors satisfy: degree 1 recovers the
/// classical kernel-over-image quotient, and once D^i = 0 the pair
/// degenerates to (Coker D, Ker D).
bool tilde_identities_hold(const NDifferential& nd);

/// A short exact sequence of graded nilpotent spaces with per-weight maps,
/// already restricted to the generalized 0-eigenspaces. Built either from a
/// module sequence (tensoring the maps with the spin module) or synthetically.
class SequenceSpaces {
 public:
  SequenceSpaces(ZeroEigenspace sub, ZeroEigenspace total, ZeroEigenspace quot,
                 std::map<Weight, Matrix> inclusion,
                 std::map<Weight, Matrix> projection);

  const ZeroEigenspace& sub() const { return sub_; }
  const ZeroEigenspace& total() const { return total_; }
  const ZeroEigenspace& quot() const { return quot_; }

  /// All weights where any of the three spaces is nonzero.
  std::vector<Weight> weights() const;

  /// Ambient map matrices at a weight; identity-shaped zero blocks when a
  /// side has no slice there.
  Matrix inclusion_at(Weight w) const;
  Matrix projection_at(Weight w) const;

  std::size_t ambient_dim_sub(Weight w) const;
  std::size_t ambient_dim_total(Weight w) const;
  std::size_t ambient_dim_quot(Weight w) const;

 private:
  void validate() const;

  ZeroEigenspace sub_, total_, quot_;
  std::map<Weight, Matrix> inclusion_, projection_;
};

/// Tensor a module short exact sequence with the spin module and restrict to
/// the generalized 0-eigenspaces.
SequenceSpaces restrict_sequence(const ShortExactSequence& s);

struct ConnectingResult {
  /// Per weight: matrix from H^i(quot) classes to H^(N-i)(sub) classes.
  std::map<Weight, Matrix> maps;
  bool well_defined = true;  // second-lift recomputation agreed everywhere
};

/// The boundary map: lift a class of the quotient, push with D^i, pull back
/// through the inclusion. Lift independence is re-verified with a second lift.
ConnectingResult connecting_hom(const SequenceSpaces& s, std::size_t i,
                                std::size_t n);

struct SixTermNode {
  std::string name;
  std::size_t dim = 0;
  bool exact = true;
};

struct SixTermResult {
  bool exact = true;
  bool connecting_well_defined = true;
  std::vector<SixTermNode> nodes;  // six nodes, cyclic order
};

/// Builds H^i(U) -> H^i(V) -> H^i(W) -> H^(N-i)(U) -> H^(N-i)(V)
/// -> H^(N-i)(W) -> H^i(U) and checks image = kernel at every node.
SixTermResult six_term_verify(const SequenceSpaces& s, std::size_t i,
                              std::size_t n);

}  // namespace sl2dirac
