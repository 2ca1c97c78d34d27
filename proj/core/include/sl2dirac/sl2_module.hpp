#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sl2dirac/matrix.hpp"
#include "sl2dirac/virtual_rmodule.hpp"

namespace sl2dirac {

/// A finite window of a weight-graded sl(2) module: labelled basis vectors
/// with integral h-weights and the actions of e, f, h as square matrices.
///
/// Infinite-dimensional modules (Verma-type) are stored truncated at the
/// bottom. `interior_min_weight` is the certification boundary: the relation
/// ef - fe = h is guaranteed on basis vectors of weight >= that bound, and
/// nothing below it may be trusted. A module built without truncation
/// (finite-dimensional simples and their sums) is marked `complete`, and all
/// of its weights are certified.
class Sl2Module {
 public:
  Sl2Module() = default;
  Sl2Module(std::vector<std::string> labels, std::vector<Weight> weights,
            Matrix action_e, Matrix action_f, Weight interior_min_weight,
            bool complete);

  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  Weight weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Weight>& weights() const { return weights_; }

  const Matrix& action_e() const { return e_; }
  const Matrix& action_f() const { return f_; }
  const Matrix& action_h() const { return h_; }

  Weight interior_min_weight() const { return interior_min_weight_; }
  bool is_complete() const { return complete_; }
  bool is_interior(Weight w) const {
    return complete_ || w >= interior_min_weight_;
  }

  /// Distinct stored weights, ascending.
  std::vector<Weight> weight_levels() const;
  std::vector<std::size_t> indices_at_weight(Weight w) const;
  Weight min_stored_weight() const;

  friend bool operator==(const Sl2Module& a, const Sl2Module& b);

 private:
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  Matrix e_, f_, h_;
  Weight interior_min_weight_ = 0;
  bool complete_ = false;
};

/// A linear map between module windows, expected to commute with the actions
/// on the certified part of the source.
struct ModuleMap {
  Sl2Module source;
  Sl2Module target;
  Matrix matrix;  // target.dim() x source.dim()

  /// Rows/columns restricted to the weight-w slices of target/source.
  Matrix restrict_to_weight(Weight w) const;
};

struct ShortExactSequence {
  ModuleMap inclusion;   // U -> V
  ModuleMap projection;  // V -> W

  const Sl2Module& sub() const { return inclusion.source; }
  const Sl2Module& total() const { return inclusion.target; }
  const Sl2Module& quot() const { return projection.target; }
};

// Builders. Verma windows for highest weights 0 and -2 use the normalization
//   e v_{-2k} = (-k+1) v_{-2k+2},   f v_{-2k} = (k+1) v_{-2k-2}     (labels v)
//   e w_{-2k} = (-k+1) w_{-2k+2},   f w_{-2k} = (k+1) w_{-2k-2}     (labels w)
// indexed by the actual weight subscript; other highest weights hw use the
// standard basis with f m_i = (i+1) m_{i+1} and e m_i = (hw - i + 1) m_{i-1}.
Sl2Module build_verma(Weight highest_weight, std::size_t depth);

/// The n-dimensional simple module, weights n-1, n-3, ..., -(n-1). Complete.
Sl2Module build_finite_dim(std::size_t n);

Sl2Module direct_sum(const std::vector<Sl2Module>& summands);

struct ExtensionBuild {
  Sl2Module module;
  ShortExactSequence sequence;  // verma(0) -> module -> verma(-2)
};

/// The indecomposable extension of the two Verma windows with trivial
/// generalized infinitesimal character. The w-ladder leaks into the v-ladder:
///   e w_{-2k} = (-k+1) w_{-2k+2} + (1/k) v_{-2k+2}.
ExtensionBuild build_module_p(std::size_t depth);

/// verma(-2, depth-1) -> verma(0, depth) -> finite_dim(1); every term has an
/// honest (non-generalized) infinitesimal character.
ShortExactSequence build_infchar_sequence(std::size_t depth);

struct RelationDefect {
  std::size_t index;
  std::string label;
  std::string relation;  // "h-diagonal", "e-grading", "f-grading", "ef-fe-h"
  Vec residual;
};

struct RelationReport {
  bool ok = true;
  std::vector<RelationDefect> defects;
};

/// Checks h-diagonality, weight grading of e and f everywhere, and
/// ef - fe = h on the certified window.
RelationReport check_relations(const Sl2Module& m);

/// True when the map commutes with e, f, h on all source basis vectors whose
/// weight is certified in both source and target.
bool check_intertwiner(const ModuleMap& map);

struct SequenceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Intertwiner checks, injectivity of the inclusion, surjectivity of the
/// projection and image = kernel, per weight on the common certified window.
SequenceReport check_sequence(const ShortExactSequence& s);

}  // namespace sl2dirac
