#include "sl2dirac/fuzz.hpp"

#include <map>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

namespace {

struct CanonicalWeightData {
  Matrix op;
  std::vector<Parity> parities;
};

/// Chains laid out contiguously: for a chain occupying indices c..c+k-1 the
/// operator sends index c+q to c+q-1 and kills index c.
CanonicalWeightData canonical_operator(
    const std::vector<const PlantedBlock*>& blocks) {
  std::size_t total = 0;
  for (const auto* b : blocks) total += b->size;
  CanonicalWeightData data{Matrix(total, total), {}};
  std::size_t at = 0;
  for (const auto* b : blocks) {
    Parity p = b->bottom;
    for (std::size_t q = 0; q < b->size; ++q) {
      data.parities.push_back(p);
      p = flip(p);
      if (q > 0) data.op.at(at + q - 1, at + q) = 1;
    }
    at += b->size;
  }
  return data;
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug = Matrix::hcat(m, Matrix::identity(n));
  const RrefResult r = rref(aug);
  if (r.rank != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k) {
    if (r.pivot_cols[k] != k) return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

Matrix random_parity_preserving_invertible(const std::vector<Parity>& parities,
                                           Rng& rng) {
  const std::size_t n = parities.size();
  Matrix p(n, n);
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    groups[static_cast<int>(parities[i])].push_back(i);
  }
  for (const auto& [_, idx] : groups) {
    const std::size_t g = idx.size();
    Matrix block(g, g);
    do {
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          block.at(i, j) = Rational(rng.uniform(-3, 3));
    } while (rank(block) != g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) p.at(idx[i], idx[j]) = block.at(i, j);
  }
  return p;
}

ZeroEigenspace plant_operator(const std::vector<PlantedBlock>& blocks, Rng& rng,
                              bool conjugate) {
  std::map<Weight, std::vector<const PlantedBlock*>> by_weight;
  for (const auto& b : blocks) by_weight[b.weight].push_back(&b);
  std::map<Weight, Matrix> ops;
  std::map<Weight, std::vector<Parity>> parities;
  for (const auto& [w, group] : by_weight) {
    CanonicalWeightData data = canonical_operator(group);
    Matrix op = data.op;
    if (conjugate) {
      const Matrix p = random_parity_preserving_invertible(data.parities, rng);
      const auto pinv = inverse(p);
      op = p * op * *pinv;
    }
    ops.emplace(w, std::move(op));
    parities.emplace(w, std::move(data.parities));
  }
  return ZeroEigenspace::from_operators(std::move(ops), std::move(parities));
}

std::vector<PlantedBlock> random_planted_type(Rng& rng, std::size_t max_blocks,
                                              std::size_t max_size) {
  const std::size_t count =
      static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_blocks)));
  std::vector<PlantedBlock> out;
  for (std::size_t i = 0; i < count; ++i) {
    PlantedBlock b;
    b.weight = rng.uniform(0, 1) == 0 ? -1 : 1;
    b.size = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_size)));
    b.bottom = rng.uniform(0, 1) == 0 ? Parity::Even : Parity::Odd;
    out.push_back(b);
  }
  return out;
}

SequenceSpaces plant_sequence(const std::vector<PlantedTriple>& triples,
                              Rng& rng, bool conjugate) {
  std::map<Weight, std::vector<const PlantedTriple*>> by_weight;
  for (const auto& t : triples) by_weight[t.weight].push_back(&t);

  std::map<Weight, Matrix> ops_u, ops_v, ops_w;
  std::map<Weight, std::vector<Parity>> par_u, par_v, par_w;
  std::map<Weight, Matrix> incl, proj;

  for (const auto& [w, group] : by_weight) {
    std::size_t du = 0, dv = 0, dw = 0;
    for (const auto* t : group) {
      du += t->sub_size;
      dv += t->total_size();
      dw += t->quot_size;
    }
    Matrix au(du, du), av(dv, dv), aw(dw, dw);
    Matrix mi(dv, du), mp(dw, dv);
    std::vector<Parity> pu, pv, pw;
    std::size_t atu = 0, atv = 0, atw = 0;
    for (const auto* t : group) {
      Parity p = t->middle_bottom;
      for (std::size_t q = 0; q < t->total_size(); ++q) {
        pv.push_back(p);
        if (q > 0) av.at(atv + q - 1, atv + q) = 1;
        // sub chain = bottom part, quotient chain = image of the top part
        if (q < t->sub_size) {
          pu.push_back(p);
          if (q > 0) au.at(atu + q - 1, atu + q) = 1;
          mi.at(atv + q, atu + q) = 1;
        } else {
          const std::size_t qq = q - t->sub_size;
          pw.push_back(p);
          if (qq > 0) aw.at(atw + qq - 1, atw + qq) = 1;
          mp.at(atw + qq, atv + q) = 1;
        }
        p = flip(p);
      }
      atu += t->sub_size;
      atv += t->total_size();
      atw += t->quot_size;
    }
    if (conjugate) {
      const Matrix cu = random_parity_preserving_invertible(pu, rng);
      const Matrix cv = random_parity_preserving_invertible(pv, rng);
      const Matrix cw = random_parity_preserving_invertible(pw, rng);
      const Matrix cui = *inverse(cu);
      const Matrix cvi = *inverse(cv);
      const Matrix cwi = *inverse(cw);
      au = cu * au * cui;
      av = cv * av * cvi;
      aw = cw * aw * cwi;
      mi = cv * mi * cui;
      mp = cw * mp * cvi;
    }
    ops_u.emplace(w, std::move(au));
    ops_v.emplace(w, std::move(av));
    ops_w.emplace(w, std::move(aw));
    par_u.emplace(w, std::move(pu));
    par_v.emplace(w, std::move(pv));
    par_w.emplace(w, std::move(pw));
    incl.emplace(w, std::move(mi));
    proj.emplace(w, std::move(mp));
  }

  // Zero-dimensional sides get no slice at all.
  auto prune = [](std::map<Weight, Matrix>& ops,
                  std::map<Weight, std::vector<Parity>>& pars) {
    for (auto it = ops.begin(); it != ops.end();) {
      if (it->second.rows() == 0) {
        pars.erase(it->first);
        it = ops.erase(it);
      } else {
        ++it;
      }
    }
  };
  prune(ops_u, par_u);
  prune(ops_v, par_v);
  prune(ops_w, par_w);

  return SequenceSpaces(
      ZeroEigenspace::from_operators(std::move(ops_u), std::move(par_u)),
      ZeroEigenspace::from_operators(std::move(ops_v), std::move(par_v)),
      ZeroEigenspace::from_operators(std::move(ops_w), std::move(par_w)),
      std::move(incl), std::move(proj));
}

std::vector<PlantedTriple> random_planted_triples(Rng& rng,
                                                  std::size_t max_triples,
                                                  std::size_t max_side) {
  const std::size_t count =
      static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_triples)));
  std::vector<PlantedTriple> out;
  for (std::size_t i = 0; i < count; ++i) {
    PlantedTriple t;
    t.weight = rng.uniform(0, 1) == 0 ? -1 : 1;
    do {
      t.sub_size = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_side)));
      t.quot_size =
          static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_side)));
    } while (t.total_size() == 0);
    t.middle_bottom = rng.uniform(0, 1) == 0 ? Parity::Even : Parity::Odd;
    out.push_back(t);
  }
  return out;
}

}  // namespace sl2dirac
