#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2dirac/parity.hpp"
#include "sl2dirac/spin_tensor.hpp"
#include "sl2dirac/subspace.hpp"
#include "sl2dirac/virtual_rmodule.hpp"

namespace sl2dirac {

/// One weight slice of the generalized 0-eigenspace: the full weight-slice
/// operator together with the subspace it is nilpotent on. `op` maps the
/// slice's ambient space to itself and `space` is op-invariant.
struct EigenspaceSlice {
  Weight weight = 0;
  Matrix op;
  Subspace space;
  std::vector<Parity> parities;      // per ambient basis index
  std::vector<std::string> labels;   // per ambient basis index
  std::size_t nilpotency_index = 0;  // smallest t with op^t = 0 on space

  std::size_t ambient_dim() const { return parities.size(); }
};

/// The largest subspace of V (x) S on which the Dirac operator is nilpotent,
/// organized per weight. Also serves as the generic "graded nilpotent
/// operator" arena for the chain and cohomology machinery (see
/// from_operators), which is how the randomized suites drive it.
class ZeroEigenspace {
 public:
  ZeroEigenspace() = default;

  /// Wraps explicitly given nilpotent parity-swapping operators; the whole
  /// ambient space at every weight is taken as the eigenspace. Rejects
  /// non-nilpotent or parity-mixing operators.
  static ZeroEigenspace from_operators(
      std::map<Weight, Matrix> ops, std::map<Weight, std::vector<Parity>> parities);

  const std::map<Weight, EigenspaceSlice>& slices() const { return slices_; }
  const EigenspaceSlice& slice(Weight w) const;
  bool has_weight(Weight w) const { return slices_.count(w) != 0; }
  std::vector<Weight> weights() const;

  std::size_t total_dim() const;
  /// Smallest N with D^N = 0 on the whole eigenspace (0 when empty).
  std::size_t nilpotency_order() const { return nilpotency_order_; }

  /// Signed even-minus-odd count of the ambient slices, per weight. For
  /// tensor-built spaces this agrees with parity_character at the eigenspace
  /// weights because the invertible part pairs parities off.
  VirtualRModule ambient_parity_character() const;

  friend ZeroEigenspace generalized_zero_eigenspace(const TensorComplex& t);

 private:
  std::map<Weight, EigenspaceSlice> slices_;
  std::size_t nilpotency_order_ = 0;
};

/// Extracts the nonzero per-weight generalized kernels of the Dirac blocks
/// over the certified window. For truncated modules the window's two lowest
/// populated weights must come out empty; a hit there means the eigenspace
/// may extend below what the truncation certifies, and the computation
/// refuses with a depth suggestion rather than return an unverifiable answer.
ZeroEigenspace generalized_zero_eigenspace(const TensorComplex& t);

/// Ker D^j inside the slice's ambient space (automatically contained in the
/// eigenspace); Ker D^0 is the zero subspace.
Subspace ker_pow(const EigenspaceSlice& s, std::size_t j);
/// Image of D^j restricted to the eigenspace.
Subspace im_pow(const EigenspaceSlice& s, std::size_t j);

}  // namespace sl2dirac
