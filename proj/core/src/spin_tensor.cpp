#include "sl2dirac/spin_tensor.hpp"

#include <sstream>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

std::vector<Parity> TensorWeightBlock::parities() const {
  std::vector<Parity> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.parity());
  return out;
}

std::vector<std::string> TensorWeightBlock::labels() const {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.label);
  return out;
}

std::vector<Weight> TensorComplex::weights() const {
  std::vector<Weight> out;
  for (const auto& [w, _] : blocks_) out.push_back(w);
  return out;
}

std::vector<Weight> TensorComplex::safe_weights() const {
  std::vector<Weight> out;
  for (const auto& [w, b] : blocks_) {
    if (b.safe) out.push_back(w);
  }
  return out;
}

const TensorWeightBlock& TensorComplex::block(Weight w) const {
  const auto it = blocks_.find(w);
  if (it == blocks_.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "no tensor slice at the requested weight");
  }
  return it->second;
}

TensorComplex build_tensor(const Sl2Module& m) {
  const RelationReport rel = check_relations(m);
  if (!rel.ok) {
    std::ostringstream os;
    os << "module violates the commutation relations at "
       << rel.defects.front().label << " (" << rel.defects.front().relation
       << ")";
    throw Error(ErrorKind::RelationViolation, os.str());
  }

  TensorComplex t;
  t.module_ = m;

  std::set<Weight> tensor_weights;
  for (const Weight w : m.weight_levels()) {
    tensor_weights.insert(w - 1);
    tensor_weights.insert(w + 1);
  }

  for (const Weight mu : tensor_weights) {
    TensorWeightBlock block;
    block.weight = mu;
    // (.)(x)1 vectors come from module weight mu+1, (.)(x)e from mu-1,
    // module indices ascending within each group.
    for (const std::size_t i : m.indices_at_weight(mu + 1)) {
      block.basis.push_back(
          TensorBasisVector{i, SpinSymbol::One, m.label(i) + "*1"});
    }
    for (const std::size_t i : m.indices_at_weight(mu - 1)) {
      block.basis.push_back(
          TensorBasisVector{i, SpinSymbol::E, m.label(i) + "*e"});
    }
    if (block.basis.empty()) continue;

    std::map<std::pair<std::size_t, SpinSymbol>, std::size_t> position;
    for (std::size_t p = 0; p < block.basis.size(); ++p) {
      position[{block.basis[p].module_index, block.basis[p].spin}] = p;
    }

    const std::size_t n = block.basis.size();
    Matrix d(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      const TensorBasisVector& src = block.basis[p];
      if (src.spin == SpinSymbol::One) {
        // D(v (x) 1) = f v (x) e
        for (std::size_t j = 0; j < m.dim(); ++j) {
          const Rational& c = m.action_f().at(j, src.module_index);
          if (c.is_zero()) continue;
          const auto it = position.find({j, SpinSymbol::E});
          if (it == position.end()) continue;  // truncated away
          d.at(it->second, p) = c;
        }
      } else {
        // D(v (x) e) = -2 e v (x) 1
        for (std::size_t j = 0; j < m.dim(); ++j) {
          const Rational& c = m.action_e().at(j, src.module_index);
          if (c.is_zero()) continue;
          const auto it = position.find({j, SpinSymbol::One});
          if (it == position.end()) continue;
          d.at(it->second, p) = Rational(-2) * c;
        }
      }
    }
    block.dirac = std::move(d);
    block.safe =
        m.is_complete() || (mu - 1 >= m.interior_min_weight() + 2);
    t.blocks_.emplace(mu, std::move(block));
  }
  return t;
}

DSquaredReport d_squared_check(const TensorComplex& t) {
  DSquaredReport report;
  for (const auto& [w, block] : t.blocks()) {
    if (!block.safe) continue;
    DSquaredEntry entry;
    entry.weight = w;
    entry.dim = block.dim();
    const Matrix sq = block.dirac * block.dirac;
    const Rational lambda =
        sq.trace() / Rational(static_cast<long long>(block.dim()));
    Matrix shifted = sq;
    for (std::size_t i = 0; i < block.dim(); ++i) shifted.at(i, i) -= lambda;
    Matrix power = Matrix::identity(block.dim());
    for (std::size_t k = 1; k <= block.dim(); ++k) {
      power = power * shifted;
      if (power.is_zero()) {
        entry.scalar_plus_nilpotent = true;
        entry.scalar = lambda;
        entry.nilpotent_index = k;
        break;
      }
    }
    entry.zero_multiplicity = kernel(block.dirac.pow(block.dim())).dim();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

VirtualRModule parity_character(const TensorComplex& t,
                                const std::set<Weight>& weights_only) {
  VirtualRModule out;
  for (const Weight w : weights_only) {
    const TensorWeightBlock& block = t.block(w);
    if (!block.safe) {
      throw Error(ErrorKind::TruncationTooShallow,
                  "parity character requested at an uncertified weight");
    }
    for (const auto& b : block.basis) {
      out.add(w, b.parity() == Parity::Even ? 1 : -1);
    }
  }
  return out;
}

}  // namespace sl2dirac
