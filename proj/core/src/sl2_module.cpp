#include "sl2dirac/sl2_module.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "sl2dirac/errors.hpp"
#include "sl2dirac/subspace.hpp"

namespace sl2dirac {

namespace {

std::string weight_label(const char* prefix, Weight w) {
  std::ostringstream os;
  os << prefix << w;
  return os.str();
}

Matrix diagonal_of_weights(const std::vector<Weight>& weights) {
  Matrix h(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    h.at(i, i) = Rational(weights[i]);
  }
  return h;
}

/// Weight below every stored level; used as the certificate value for
/// complete modules so the window rule never cuts into them.
Weight complete_certificate(const std::vector<Weight>& weights) {
  Weight lo = 0;
  for (const Weight w : weights) lo = std::min(lo, w);
  return lo - 4;
}

}  // namespace

Sl2Module::Sl2Module(std::vector<std::string> labels,
                     std::vector<Weight> weights, Matrix action_e,
                     Matrix action_f, Weight interior_min_weight, bool complete)
    : labels_(std::move(labels)),
      weights_(std::move(weights)),
      e_(std::move(action_e)),
      f_(std::move(action_f)),
      interior_min_weight_(interior_min_weight),
      complete_(complete) {
  const std::size_t n = labels_.size();
  if (weights_.size() != n || e_.rows() != n || e_.cols() != n ||
      f_.rows() != n || f_.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "module data sizes are inconsistent");
  }
  h_ = diagonal_of_weights(weights_);
}

std::vector<Weight> Sl2Module::weight_levels() const {
  std::set<Weight> seen(weights_.begin(), weights_.end());
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<std::size_t> Sl2Module::indices_at_weight(Weight w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == w) out.push_back(i);
  }
  return out;
}

Weight Sl2Module::min_stored_weight() const {
  Weight lo = std::numeric_limits<Weight>::max();
  for (const Weight w : weights_) lo = std::min(lo, w);
  return lo;
}

bool operator==(const Sl2Module& a, const Sl2Module& b) {
  return a.labels_ == b.labels_ && a.weights_ == b.weights_ && a.e_ == b.e_ &&
         a.f_ == b.f_ && a.interior_min_weight_ == b.interior_min_weight_ &&
         a.complete_ == b.complete_;
}

Matrix ModuleMap::restrict_to_weight(Weight w) const {
  const auto rows = target.indices_at_weight(w);
  const auto cols = source.indices_at_weight(w);
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = matrix.at(rows[i], cols[j]);
    }
  }
  return out;
}

Sl2Module build_verma(Weight highest_weight, std::size_t depth) {
  if (depth < 1) {
    throw Error(ErrorKind::InvalidArgument, "verma window needs depth >= 1");
  }
  const char* prefix =
      highest_weight == 0 ? "v" : (highest_weight == -2 ? "w" : "m");
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < depth; ++i) {
    const Weight w = highest_weight - 2 * static_cast<Weight>(i);
    weights.push_back(w);
    labels.push_back(weight_label(prefix, w));
  }
  Matrix e(depth, depth);
  Matrix f(depth, depth);
  for (std::size_t i = 0; i < depth; ++i) {
    // k is the weight subscript index: weight = -2k for v and w ladders.
    const long long k = highest_weight == -2 ? static_cast<long long>(i) + 1
                                             : static_cast<long long>(i);
    const long long e_coeff = highest_weight == 0 || highest_weight == -2
                                  ? -k + 1
                                  : highest_weight - static_cast<long long>(i) + 1;
    const long long f_coeff = highest_weight == 0 || highest_weight == -2
                                  ? k + 1
                                  : static_cast<long long>(i) + 1;
    if (i > 0) e.at(i - 1, i) = Rational(e_coeff);
    if (i + 1 < depth) f.at(i + 1, i) = Rational(f_coeff);
  }
  const Weight interior = highest_weight - 2 * (static_cast<Weight>(depth) - 2);
  return Sl2Module(std::move(labels), std::move(weights), std::move(e),
                   std::move(f), interior, /*complete=*/false);
}

Sl2Module build_finite_dim(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "finite-dimensional module needs n >= 1");
  }
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < n; ++i) {
    const Weight w = static_cast<Weight>(n) - 1 - 2 * static_cast<Weight>(i);
    weights.push_back(w);
    labels.push_back(weight_label("u", w));
  }
  Matrix e(n, n);
  Matrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      e.at(i - 1, i) =
          Rational(static_cast<long long>(i) *
                   (static_cast<long long>(n) - static_cast<long long>(i)));
    }
    if (i + 1 < n) f.at(i + 1, i) = 1;
  }
  return Sl2Module(std::move(labels), std::move(weights), std::move(e),
                   std::move(f), complete_certificate(weights),
                   /*complete=*/true);
}

Sl2Module direct_sum(const std::vector<Sl2Module>& summands) {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::size_t total = 0;
  for (const auto& m : summands) total += m.dim();
  Matrix e(total, total);
  Matrix f(total, total);
  bool complete = true;
  Weight interior = std::numeric_limits<Weight>::min();
  std::size_t offset = 0;
  for (const auto& m : summands) {
    labels.insert(labels.end(), m.labels().begin(), m.labels().end());
    weights.insert(weights.end(), m.weights().begin(), m.weights().end());
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        e.at(offset + i, offset + j) = m.action_e().at(i, j);
        f.at(offset + i, offset + j) = m.action_f().at(i, j);
      }
    }
    if (!m.is_complete()) {
      complete = false;
      interior = std::max(interior, m.interior_min_weight());
    }
    offset += m.dim();
  }
  if (complete) interior = complete_certificate(weights);
  return Sl2Module(std::move(labels), std::move(weights), std::move(e),
                   std::move(f), interior, complete);
}

ExtensionBuild build_module_p(std::size_t depth) {
  if (depth < 3) {
    throw Error(ErrorKind::TruncationTooShallow,
                "extension window needs depth >= 3", 3);
  }
  // v-block: weights 0, -2, ..., -2(depth-1); w-block: -2, ..., -2(depth-1).
  const std::size_t vcount = depth;
  const std::size_t wcount = depth - 1;
  const std::size_t total = vcount + wcount;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < vcount; ++i) {
    const Weight w = -2 * static_cast<Weight>(i);
    labels.push_back(weight_label("v", w));
    weights.push_back(w);
  }
  for (std::size_t j = 0; j < wcount; ++j) {
    const Weight w = -2 * (static_cast<Weight>(j) + 1);
    labels.push_back(weight_label("w", w));
    weights.push_back(w);
  }
  Matrix e(total, total);
  Matrix f(total, total);
  for (std::size_t i = 0; i < vcount; ++i) {
    const long long k = static_cast<long long>(i);
    if (i > 0) e.at(i - 1, i) = Rational(-k + 1);
    if (i + 1 < vcount) f.at(i + 1, i) = Rational(k + 1);
  }
  for (std::size_t j = 0; j < wcount; ++j) {
    const long long k = static_cast<long long>(j) + 1;
    const std::size_t col = vcount + j;
    // e w_{-2k} = (-k+1) w_{-2k+2} + (1/k) v_{-2k+2}; w_0 is absent by fiat.
    if (j > 0) e.at(vcount + j - 1, col) = Rational(-k + 1);
    e.at(static_cast<std::size_t>(k) - 1, col) = Rational(1, k);
    if (j + 1 < wcount) f.at(vcount + j + 1, col) = Rational(k + 1);
  }
  const Weight interior = -2 * (static_cast<Weight>(depth) - 2);
  Sl2Module p(std::move(labels), std::move(weights), std::move(e), std::move(f),
              interior, /*complete=*/false);

  Sl2Module sub = build_verma(0, depth);
  Sl2Module quot = build_verma(-2, depth - 1);
  Matrix incl(p.dim(), sub.dim());
  for (std::size_t i = 0; i < sub.dim(); ++i) incl.at(i, i) = 1;
  Matrix proj(quot.dim(), p.dim());
  for (std::size_t j = 0; j < quot.dim(); ++j) proj.at(j, vcount + j) = 1;

  ExtensionBuild out;
  out.sequence =
      ShortExactSequence{ModuleMap{sub, p, std::move(incl)},
                         ModuleMap{p, quot, std::move(proj)}};
  out.module = std::move(p);
  return out;
}

ShortExactSequence build_infchar_sequence(std::size_t depth) {
  if (depth < 3) {
    throw Error(ErrorKind::TruncationTooShallow,
                "infinitesimal-character sequence needs depth >= 3", 3);
  }
  Sl2Module sub = build_verma(-2, depth - 1);
  Sl2Module total = build_verma(0, depth);
  Sl2Module quot = build_finite_dim(1);
  Matrix incl(total.dim(), sub.dim());
  for (std::size_t j = 0; j < sub.dim(); ++j) incl.at(j + 1, j) = 1;
  Matrix proj(quot.dim(), total.dim());
  proj.at(0, 0) = 1;
  return ShortExactSequence{ModuleMap{sub, total, std::move(incl)},
                            ModuleMap{total, quot, std::move(proj)}};
}

RelationReport check_relations(const Sl2Module& m) {
  RelationReport report;
  const std::size_t n = m.dim();
  const Matrix& e = m.action_e();
  const Matrix& f = m.action_f();
  const Matrix& h = m.action_h();

  auto flag = [&](std::size_t j, const char* relation, Vec residual) {
    report.ok = false;
    report.defects.push_back(
        RelationDefect{j, m.label(j), relation, std::move(residual)});
  };

  // [h,e] = 2e and [h,f] = -2f, equivalently strict weight grading.
  const Matrix he = h * e - e * h - e.scaled(2);
  const Matrix hf = h * f - f * h + f.scaled(2);
  for (std::size_t j = 0; j < n; ++j) {
    if (!vec_is_zero(he.col(j))) flag(j, "e-grading", he.col(j));
    if (!vec_is_zero(hf.col(j))) flag(j, "f-grading", hf.col(j));
  }

  const Matrix comm = e * f - f * e - h;
  for (std::size_t j = 0; j < n; ++j) {
    if (!m.is_interior(m.weight(j))) continue;
    if (!vec_is_zero(comm.col(j))) flag(j, "ef-fe-h", comm.col(j));
  }
  return report;
}

bool check_intertwiner(const ModuleMap& map) {
  const Sl2Module& src = map.source;
  const Sl2Module& tgt = map.target;
  if (map.matrix.rows() != tgt.dim() || map.matrix.cols() != src.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "intertwiner shape mismatch");
  }
  const Matrix re = map.matrix * src.action_e() - tgt.action_e() * map.matrix;
  const Matrix rf = map.matrix * src.action_f() - tgt.action_f() * map.matrix;
  const Matrix rh = map.matrix * src.action_h() - tgt.action_h() * map.matrix;
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const Weight w = src.weight(j);
    if (!src.is_interior(w) || !tgt.is_interior(w)) continue;
    if (!vec_is_zero(re.col(j)) || !vec_is_zero(rf.col(j)) ||
        !vec_is_zero(rh.col(j))) {
      return false;
    }
  }
  return true;
}

SequenceReport check_sequence(const ShortExactSequence& s) {
  SequenceReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };

  if (!check_intertwiner(s.inclusion)) fail("inclusion is not an intertwiner");
  if (!check_intertwiner(s.projection)) {
    fail("projection is not an intertwiner");
  }
  if (rank(s.inclusion.matrix) != s.sub().dim()) {
    fail("inclusion is not injective");
  }

  // Per-weight exactness on the window certified by all three modules.
  for (const Weight w : s.total().weight_levels()) {
    if (!s.sub().is_interior(w) || !s.total().is_interior(w) ||
        !s.quot().is_interior(w)) {
      continue;
    }
    const Matrix incl_w = s.inclusion.restrict_to_weight(w);
    const Matrix proj_w = s.projection.restrict_to_weight(w);
    const std::size_t quot_dim = s.quot().indices_at_weight(w).size();
    if (rank(proj_w) != quot_dim) {
      std::ostringstream os;
      os << "projection not surjective at weight " << w;
      fail(os.str());
    }
    if (!(image(incl_w) == kernel(proj_w))) {
      std::ostringstream os;
      os << "image != kernel at weight " << w;
      fail(os.str());
    }
  }
  return report;
}

}  // namespace sl2dirac
