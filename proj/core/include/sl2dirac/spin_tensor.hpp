#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sl2dirac/parity.hpp"
#include "sl2dirac/sl2_module.hpp"
#include "sl2dirac/subspace.hpp"
#include "sl2dirac/virtual_rmodule.hpp"

namespace sl2dirac {

/// The two-dimensional spin module for the Clifford algebra of span(e, f):
/// basis "1" (weight -1, even) and "e" (weight +1, odd), with
///   e.1 = e,  e.e = 0,  f.1 = 0,  f.e = -2*1.
enum class SpinSymbol { One, E };

struct SpinModule {
  static Weight weight(SpinSymbol s) { return s == SpinSymbol::One ? -1 : 1; }
  static Parity parity(SpinSymbol s) {
    return s == SpinSymbol::One ? Parity::Even : Parity::Odd;
  }
  /// Coefficient of the single surviving symbol under the Clifford action of
  /// e (zero means the action kills the symbol).
  static Rational clifford_e(SpinSymbol s) {
    return s == SpinSymbol::One ? Rational(1) : Rational(0);
  }
  static Rational clifford_f(SpinSymbol s) {
    return s == SpinSymbol::One ? Rational(0) : Rational(-2);
  }
};

struct TensorBasisVector {
  std::size_t module_index;
  SpinSymbol spin;
  std::string label;  // e.g. "v0*e"
  Parity parity() const { return SpinModule::parity(spin); }
};

/// One h-weight slice of V (x) S with the Dirac operator e(x)f + f(x)e as an
/// exact matrix. The operator preserves the slice and strictly swaps parity.
struct TensorWeightBlock {
  Weight weight = 0;
  std::vector<TensorBasisVector> basis;
  Matrix dirac;
  bool safe = false;  // true when the block provably equals the untruncated one

  std::size_t dim() const { return basis.size(); }
  std::vector<Parity> parities() const;
  std::vector<std::string> labels() const;
};

/// V (x) S split per weight. The cubic term of the general Dirac element
/// vanishes identically for this pair (the odd part of the orthogonal
/// complement is two-dimensional), so the operator is exactly e(x)f + f(x)e.
class TensorComplex {
 public:
  TensorComplex() = default;

  const Sl2Module& module() const { return module_; }
  std::vector<Weight> weights() const;
  std::vector<Weight> safe_weights() const;
  bool has_weight(Weight w) const { return blocks_.count(w) != 0; }
  const TensorWeightBlock& block(Weight w) const;
  const std::map<Weight, TensorWeightBlock>& blocks() const { return blocks_; }

  friend TensorComplex build_tensor(const Sl2Module& m);

 private:
  Sl2Module module_;
  std::map<Weight, TensorWeightBlock> blocks_;
};

/// Rejects modules whose certified relations fail.
TensorComplex build_tensor(const Sl2Module& m);

struct DSquaredEntry {
  Weight weight = 0;
  std::size_t dim = 0;
  /// True when the squared block is a scalar plus a nilpotent, i.e. the slice
  /// carries a single generalized eigenvalue.
  bool scalar_plus_nilpotent = false;
  Rational scalar;
  std::size_t nilpotent_index = 0;  // smallest t with (D^2 - scalar)^t = 0
  std::size_t zero_multiplicity = 0;
};

struct DSquaredReport {
  std::vector<DSquaredEntry> entries;  // one per safe weight, ascending
};

DSquaredReport d_squared_check(const TensorComplex& t);

/// Signed count of even minus odd basis vectors, weight by weight, over the
/// listed (safe) slices.
VirtualRModule parity_character(const TensorComplex& t,
                                const std::set<Weight>& weights_only);

}  // namespace sl2dirac
