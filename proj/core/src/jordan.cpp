#include "sl2dirac/jordan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sl2dirac/errors.hpp"
#include "sl2dirac/rng.hpp"

namespace sl2dirac {

Parity support_parity(const Vec& v, const std::vector<Parity>& parities) {
  bool seen = false;
  Parity p = Parity::Even;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!seen) {
      p = parities[i];
      seen = true;
    } else if (parities[i] != p) {
      throw Error(ErrorKind::InvalidArgument,
                  "vector mixes parities; expected a homogeneous vector");
    }
  }
  if (!seen) {
    throw Error(ErrorKind::InvalidArgument, "zero vector has no parity");
  }
  return p;
}

namespace {

/// Replaces the pool columns by a seeded invertible recombination within
/// each parity class, keeping every candidate parity-homogeneous.
Matrix recombine_pool(const Matrix& pool, const std::vector<Parity>& parities,
                      Rng& rng) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < pool.cols(); ++k) {
    groups[static_cast<int>(support_parity(pool.col(k), parities))].push_back(k);
  }
  Matrix out = pool;
  for (const auto& [_, cols] : groups) {
    const std::size_t g = cols.size();
    if (g == 0) continue;
    Matrix r(g, g);
    do {
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          r.at(i, j) = Rational(rng.uniform(-3, 3));
    } while (rank(r) != g);
    for (std::size_t j = 0; j < g; ++j) {
      Vec combo(pool.rows());
      for (std::size_t i = 0; i < g; ++i) {
        if (r.at(i, j).is_zero()) continue;
        combo = vec_add(combo, vec_scale(r.at(i, j), pool.col(cols[i])));
      }
      out.set_col(cols[j], combo);
    }
  }
  return out;
}

}  // namespace

std::vector<JordanBlock> decompose_slice(const EigenspaceSlice& slice,
                                         std::uint64_t seed) {
  std::vector<JordanBlock> blocks;
  const Matrix& a = slice.op;
  const std::size_t m = slice.nilpotency_index;
  if (m == 0) return blocks;
  Rng rng(seed == 0 ? 1 : seed);

  // Kernel filtration; powers beyond the ambient dimension are stationary.
  std::vector<Subspace> ker(m + 2);
  ker[0] = Subspace::zero(slice.ambient_dim());
  std::vector<Matrix> apow(m + 2);
  apow[0] = Matrix::identity(slice.ambient_dim());
  for (std::size_t i = 1; i <= m + 1; ++i) {
    apow[i] = apow[i - 1] * a;
    ker[i] = kernel(apow[i]);
  }

  for (std::size_t i = m; i >= 1; --i) {
    Subspace cur = sum(ker[i - 1], apply(a, ker[i + 1]));
    Matrix pool = ker[i].basis();
    if (seed != 0) pool = recombine_pool(pool, slice.parities, rng);
    for (std::size_t c = 0; c < pool.cols(); ++c) {
      const Vec top = pool.col(c);
      if (cur.contains(top)) continue;
      JordanBlock block;
      block.weight = slice.weight;
      block.size = i;
      block.chain = Matrix(slice.ambient_dim(), i);
      for (std::size_t q = 0; q < i; ++q) {
        block.chain.set_col(q, apow[i - 1 - q].apply(top));
      }
      block.bottom_parity = support_parity(block.chain.col(0), slice.parities);
      blocks.push_back(std::move(block));
      cur = sum(cur, Subspace::from_columns(
                         Matrix::from_columns(top.size(), {top})));
    }
    if (cur.dim() != ker[i].dim()) {
      throw Error(ErrorKind::InvalidArgument,
                  "chain extraction failed to complete a kernel stage");
    }
  }
  return blocks;
}

JordanDecomposition jordan_decomposition(const ZeroEigenspace& z,
                                         std::uint64_t seed) {
  JordanDecomposition d;
  for (const auto& [w, slice] : z.slices()) {
    auto part = decompose_slice(slice, seed);
    d.blocks.insert(d.blocks.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  }
  return d;
}

std::vector<std::size_t> JordanDecomposition::size_multiset() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(b.size);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<std::tuple<std::size_t, Weight, Parity>>
JordanDecomposition::bottom_data() const {
  std::vector<std::tuple<std::size_t, Weight, Parity>> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    out.emplace_back(b.size, b.weight, b.bottom_parity);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    return static_cast<int>(std::get<2>(x)) < static_cast<int>(std::get<2>(y));
  });
  return out;
}

std::vector<std::size_t> jordan_type_from_ranks(const ZeroEigenspace& z) {
  std::vector<std::size_t> sizes;
  for (const auto& [w, slice] : z.slices()) {
    std::vector<std::size_t> ranks;  // rank of D^i on the eigenspace
    Subspace cur = slice.space;
    ranks.push_back(cur.dim());
    while (cur.dim() > 0) {
      cur = apply(slice.op, cur);
      ranks.push_back(cur.dim());
    }
    for (std::size_t i = 1; i + 1 <= ranks.size(); ++i) {
      const std::size_t at_least_i = ranks[i - 1] - ranks[i];
      const std::size_t at_least_next =
          i + 1 < ranks.size() ? ranks[i] - ranks[i + 1] : 0;
      for (std::size_t c = at_least_next; c < at_least_i; ++c) sizes.push_back(i);
    }
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

BlockVerification verify_blocks(const JordanDecomposition& d,
                                const ZeroEigenspace& z) {
  BlockVerification v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };

  std::map<Weight, std::vector<const JordanBlock*>> by_weight;
  for (const auto& b : d.blocks) by_weight[b.weight].push_back(&b);

  for (const auto& [w, blocks] : by_weight) {
    if (!z.has_weight(w)) {
      std::ostringstream os;
      os << "block at weight " << w << " has no eigenspace slice";
      fail(os.str());
      continue;
    }
    const EigenspaceSlice& slice = z.slice(w);
    const Subspace im_on_space = apply(slice.op, slice.space);
    std::vector<Vec> all_cols;
    for (const JordanBlock* b : blocks) {
      if (!vec_is_zero(slice.op.apply(b->chain.col(0)))) {
        fail("chain bottom is not annihilated");
      }
      for (std::size_t q = 1; q < b->size; ++q) {
        if (slice.op.apply(b->chain.col(q)) != b->chain.col(q - 1)) {
          fail("chain step is not the operator image");
        }
      }
      Parity expect = b->bottom_parity;
      for (std::size_t q = 0; q < b->size; ++q) {
        if (support_parity(b->chain.col(q), slice.parities) != expect) {
          fail("chain parities do not alternate");
        }
        expect = flip(expect);
        if (!slice.space.contains(b->chain.col(q))) {
          fail("chain leaves the eigenspace");
        }
        all_cols.push_back(b->chain.col(q));
      }
      if (im_on_space.contains(b->top())) {
        fail("chain top lies in the image of the operator");
      }
    }
    const Matrix stacked =
        Matrix::from_columns(slice.ambient_dim(), all_cols);
    if (rank(stacked) != all_cols.size()) {
      fail("chains are not jointly independent");
    }
    if (all_cols.size() != slice.space.dim()) {
      fail("chains do not span the eigenspace slice");
    }
  }
  for (const auto& [w, slice] : z.slices()) {
    if (slice.space.dim() > 0 && by_weight.count(w) == 0) {
      std::ostringstream os;
      os << "eigenspace slice at weight " << w << " has no blocks";
      fail(os.str());
    }
  }

  v.sizes = d.size_multiset();
  if (v.sizes != jordan_type_from_ranks(z)) {
    fail("size multiset disagrees with the rank partition");
  }
  v.bottoms = d.bottom_data();
  return v;
}

}  // namespace sl2dirac
