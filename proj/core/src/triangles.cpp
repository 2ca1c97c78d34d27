#include "sl2dirac/triangles.hpp"

#include <algorithm>
#include <sstream>

#include "sl2dirac/errors.hpp"
#include "sl2dirac/rng.hpp"

namespace sl2dirac {

namespace {

Matrix vcat(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Zeroes the components of v whose parity differs from p.
Vec parity_part(const Vec& v, const std::vector<Parity>& parities, Parity p) {
  Vec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (parities[i] != p) out[i] = Rational(0);
  }
  return out;
}

struct AttemptFailure {
  std::string reason;
};

struct WeightTriples {
  std::vector<CompatibleTriple> triples;
};

/// One deterministic construction attempt at a single weight; a nonzero seed
/// perturbs the lift choices inside the solution space.
WeightTriples attempt_weight(const SequenceSpaces& s, Weight w,
                             std::uint64_t seed) {
  const EigenspaceSlice* su = s.sub().has_weight(w) ? &s.sub().slice(w) : nullptr;
  const EigenspaceSlice* sv =
      s.total().has_weight(w) ? &s.total().slice(w) : nullptr;
  const EigenspaceSlice* sw =
      s.quot().has_weight(w) ? &s.quot().slice(w) : nullptr;
  WeightTriples out;
  if (sv == nullptr) return out;

  const Matrix incl = s.inclusion_at(w);
  const Matrix proj = s.projection_at(w);
  const Matrix& bv = sv->space.basis();
  Rng rng(seed + 1);

  std::vector<JordanBlock> wblocks =
      sw != nullptr ? decompose_slice(*sw) : std::vector<JordanBlock>{};
  std::sort(wblocks.begin(), wblocks.end(),
            [](const JordanBlock& a, const JordanBlock& b) {
              return a.size > b.size;
            });

  struct Lifted {
    JordanBlock vblock;
    const JordanBlock* wblock;
  };
  std::vector<Lifted> lifted;
  std::vector<Vec> vspan_cols;

  const Matrix proj_bv = proj * bv;
  for (const JordanBlock& wb : wblocks) {
    const Vec top = wb.top();
    std::optional<Vec> coeffs;
    std::size_t height = 0;
    for (std::size_t h = wb.size; h <= sv->nilpotency_index; ++h) {
      const Matrix stacked = vcat(proj_bv, sv->op.pow(h) * bv);
      const Vec rhs = concat(top, Vec(sv->ambient_dim()));
      auto sol = solve(stacked, rhs);
      if (sol) {
        if (seed != 0) {
          const Subspace sol_ker = kernel(stacked);
          for (std::size_t k = 0; k < sol_ker.dim(); ++k) {
            const int c = rng.uniform(-2, 2);
            if (c != 0) {
              *sol = vec_add(*sol,
                             vec_scale(Rational(c), sol_ker.basis().col(k)));
            }
          }
        }
        coeffs = *sol;
        height = h;
        break;
      }
    }
    if (!coeffs) throw AttemptFailure{"quotient chain top has no lift"};
    const Parity target_parity = support_parity(top, sw->parities);
    const Vec lift =
        parity_part(bv.apply(*coeffs), sv->parities, target_parity);
    JordanBlock vb;
    vb.weight = w;
    vb.size = height;
    vb.chain = Matrix(sv->ambient_dim(), height);
    for (std::size_t q = 0; q < height; ++q) {
      vb.chain.set_col(q, sv->op.pow(height - 1 - q).apply(lift));
    }
    if (vec_is_zero(vb.chain.col(0))) {
      throw AttemptFailure{"lift collapsed below the requested height"};
    }
    vb.bottom_parity = support_parity(vb.chain.col(0), sv->parities);
    for (std::size_t q = 0; q < height; ++q) {
      vspan_cols.push_back(vb.chain.col(q));
    }
    lifted.push_back(Lifted{std::move(vb), &wb});
  }
  if (rank(Matrix::from_columns(sv->ambient_dim(), vspan_cols)) !=
      vspan_cols.size()) {
    throw AttemptFailure{"lifted chains are not jointly independent"};
  }

  // Complete with chains inside the kernel of the projection, stage by stage
  // from the tallest height down.
  const Subspace ker_proj = intersect(kernel(proj), sv->space);
  const std::size_t m = sv->nilpotency_index;
  std::vector<JordanBlock> leftovers;
  for (std::size_t i = m; i >= 1; --i) {
    Subspace cur = sum(ker_pow(*sv, i - 1),
                       apply(sv->op, ker_pow(*sv, i + 1)));
    for (const Lifted& lf : lifted) {
      if (lf.vblock.size != i) continue;
      const Vec top = lf.vblock.top();
      if (cur.contains(top)) {
        throw AttemptFailure{"lifted top is degenerate at its height stage"};
      }
      cur = sum(cur, Subspace::from_columns(
                         Matrix::from_columns(top.size(), {top})));
    }
    const Subspace pool = intersect(ker_proj, ker_pow(*sv, i));
    for (std::size_t c = 0; c < pool.dim(); ++c) {
      const Vec cand = pool.basis().col(c);
      if (cur.contains(cand)) continue;
      JordanBlock vb;
      vb.weight = w;
      vb.size = i;
      vb.chain = Matrix(sv->ambient_dim(), i);
      for (std::size_t q = 0; q < i; ++q) {
        vb.chain.set_col(q, sv->op.pow(i - 1 - q).apply(cand));
      }
      vb.bottom_parity = support_parity(vb.chain.col(0), sv->parities);
      leftovers.push_back(vb);
      for (std::size_t q = 0; q < i; ++q) {
        vspan_cols.push_back(vb.chain.col(q));
      }
      cur = sum(cur, Subspace::from_columns(
                         Matrix::from_columns(cand.size(), {cand})));
    }
    if (cur.dim() != ker_pow(*sv, i).dim()) {
      throw AttemptFailure{"kernel completion fell short at a height stage"};
    }
  }
  if (vspan_cols.size() != sv->space.dim() ||
      rank(Matrix::from_columns(sv->ambient_dim(), vspan_cols)) !=
          vspan_cols.size()) {
    throw AttemptFailure{"chains do not form a basis of the middle space"};
  }

  // Pull a kernel chain back through the inclusion.
  auto pull_back = [&](const Matrix& vchain, std::size_t from,
                       std::size_t count) -> JordanBlock {
    if (su == nullptr) {
      throw AttemptFailure{"kernel chain exists but the sub space is empty"};
    }
    const Matrix pull_sys = incl * su->space.basis();
    JordanBlock ub;
    ub.weight = w;
    ub.size = count;
    ub.chain = Matrix(su->ambient_dim(), count);
    for (std::size_t q = 0; q < count; ++q) {
      const auto coeffs = solve(pull_sys, vchain.col(from + q));
      if (!coeffs) {
        throw AttemptFailure{"kernel chain does not pull back"};
      }
      ub.chain.set_col(q, su->space.basis().apply(*coeffs));
    }
    ub.bottom_parity = support_parity(ub.chain.col(0), su->parities);
    return ub;
  };

  for (Lifted& lf : lifted) {
    CompatibleTriple triple;
    const std::size_t s_quot = lf.wblock->size;
    const std::size_t h = lf.vblock.size;
    // The projection must carry the upper part of the chain onto the
    // quotient chain, step for step.
    for (std::size_t j = 0; j < s_quot; ++j) {
      if (proj.apply(lf.vblock.chain.col(h - s_quot + j)) !=
          lf.wblock->chain.col(j)) {
        throw AttemptFailure{"projected chain does not match the quotient chain"};
      }
    }
    if (h > s_quot) {
      triple.sub = pull_back(lf.vblock.chain, 0, h - s_quot);
    }
    triple.total = std::move(lf.vblock);
    triple.quot = *lf.wblock;
    out.triples.push_back(std::move(triple));
  }
  for (JordanBlock& vb : leftovers) {
    CompatibleTriple triple;
    triple.sub = pull_back(vb.chain, 0, vb.size);
    triple.total = std::move(vb);
    out.triples.push_back(std::move(triple));
  }

  // The sub-chains must jointly decompose the sub eigenspace.
  std::vector<Vec> ucols;
  for (const CompatibleTriple& t : out.triples) {
    if (!t.sub) continue;
    for (std::size_t q = 0; q < t.sub->size; ++q) {
      ucols.push_back(t.sub->chain.col(q));
    }
  }
  const std::size_t udim = su != nullptr ? su->space.dim() : 0;
  const std::size_t uamb = su != nullptr ? su->ambient_dim() : 0;
  if (ucols.size() != udim ||
      (udim > 0 &&
       rank(Matrix::from_columns(uamb, ucols)) != ucols.size())) {
    throw AttemptFailure{"pulled-back chains do not decompose the sub space"};
  }
  return out;
}

}  // namespace

TriangleCertificate triangle_criterion(std::size_t h1, std::size_t h2,
                                       std::size_t h3) {
  TriangleCertificate cert;
  cert.dims = {h1, h2, h3};
  if ((h1 + h2 + h3) % 2 != 0) {
    cert.refusal = "total dimension is odd";
    return cert;
  }
  if (h1 > h2 + h3 || h2 > h1 + h3 || h3 > h1 + h2) {
    cert.refusal = "dimensions violate the triangle inequality";
    return cert;
  }
  cert.exists = true;
  cert.splits = {(h1 + h3 - h2) / 2, (h1 + h2 - h3) / 2, (h2 + h3 - h1) / 2};
  return cert;
}

CompatibleDecomposition compatible_decomposition(const SequenceSpaces& s) {
  CompatibleDecomposition out;
  for (const Weight w : s.weights()) {
    bool done = false;
    std::string last_failure;
    for (std::uint64_t seed = 0; seed < 32 && !done; ++seed) {
      try {
        WeightTriples wt = attempt_weight(s, w, seed);
        out.triples.insert(out.triples.end(),
                           std::make_move_iterator(wt.triples.begin()),
                           std::make_move_iterator(wt.triples.end()));
        done = true;
      } catch (const AttemptFailure& f) {
        last_failure = f.reason;
      }
    }
    if (!done) {
      std::ostringstream os;
      os << "no compatible decomposition found at weight " << w << ": "
         << last_failure;
      out.failure = os.str();
      out.triples.clear();
      return out;
    }
  }
  out.ok = true;
  return out;
}

TriangleResult build_triangle(const CompatibleDecomposition& d) {
  TriangleResult r;
  if (!d.ok) return r;

  struct NodeIndex {
    std::vector<std::size_t> triple_of_class;
  };
  NodeIndex u, v, w;
  std::vector<int> ucls(d.triples.size(), -1), vcls(d.triples.size(), -1),
      wcls(d.triples.size(), -1);
  for (std::size_t t = 0; t < d.triples.size(); ++t) {
    const CompatibleTriple& tr = d.triples[t];
    if (tr.sub_size() % 2 == 1) {
      ucls[t] = static_cast<int>(u.triple_of_class.size());
      u.triple_of_class.push_back(t);
    }
    if (tr.total.size % 2 == 1) {
      vcls[t] = static_cast<int>(v.triple_of_class.size());
      v.triple_of_class.push_back(t);
    }
    if (tr.quot_size() % 2 == 1) {
      wcls[t] = static_cast<int>(w.triple_of_class.size());
      w.triple_of_class.push_back(t);
    }
  }
  const std::size_t h1 = u.triple_of_class.size();
  const std::size_t h2 = v.triple_of_class.size();
  const std::size_t h3 = w.triple_of_class.size();
  r.dims = {h1, h2, h3};
  r.map_uv = Matrix(h2, h1);
  r.map_vw = Matrix(h3, h2);
  r.map_wu = Matrix(h1, h3);
  std::array<std::size_t, 3> splits{0, 0, 0};
  for (std::size_t t = 0; t < d.triples.size(); ++t) {
    const bool uo = ucls[t] >= 0;
    const bool vo = vcls[t] >= 0;
    const bool wo = wcls[t] >= 0;
    const int odd_count = int(uo) + int(vo) + int(wo);
    if (odd_count == 0) continue;
    if (odd_count != 2) {
      // Lengths add up, so exactly zero or two members of a triple are odd.
      throw Error(ErrorKind::InvalidArgument,
                  "triple with an impossible parity pattern");
    }
    if (uo && vo) {
      r.map_uv.at(vcls[t], ucls[t]) = 1;
      ++splits[1];
    } else if (vo && wo) {
      r.map_vw.at(wcls[t], vcls[t]) = 1;
      ++splits[2];
    } else {
      r.map_wu.at(ucls[t], wcls[t]) = 1;
      ++splits[0];
    }
  }
  r.splits = splits;
  r.exists = true;
  r.exact = image(r.map_wu) == kernel(r.map_uv) &&
            image(r.map_uv) == kernel(r.map_vw) &&
            image(r.map_vw) == kernel(r.map_wu);
  return r;
}

}  // namespace sl2dirac
