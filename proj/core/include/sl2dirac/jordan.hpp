#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "sl2dirac/zero_eigenspace.hpp"

namespace sl2dirac {

/// A single chain: columns of `chain` are V_1, ..., V_k in ambient slice
/// coordinates, with D V_1 = 0, D V_i = V_{i-1}, and V_k outside the image of
/// D on the eigenspace. Chain vectors are parity-homogeneous and alternate.
struct JordanBlock {
  Weight weight = 0;
  std::size_t size = 0;
  Matrix chain;
  Parity bottom_parity = Parity::Even;

  Vec bottom() const { return chain.col(0); }
  Vec top() const { return chain.col(size - 1); }
  Parity top_parity() const {
    return size % 2 == 1 ? bottom_parity : flip(bottom_parity);
  }
};

struct JordanDecomposition {
  std::vector<JordanBlock> blocks;

  /// Sizes sorted descending. This multiset is the intrinsic invariant;
  /// the chains themselves are a choice.
  std::vector<std::size_t> size_multiset() const;
  /// (size, weight, bottom parity) triples sorted descending by size.
  std::vector<std::tuple<std::size_t, Weight, Parity>> bottom_data() const;
};

/// Deterministic chain extraction, weights ascending. At stage i the new
/// chain tops complete Ker D^{i-1} + D Ker D^{i+1} inside Ker D^i, picked
/// greedily from the canonical kernel basis. A nonzero seed instead draws
/// the candidates from a seeded parity-preserving recombination of that
/// basis, which changes the chains but never the size multiset.
JordanDecomposition jordan_decomposition(const ZeroEigenspace& z,
                                         std::uint64_t seed = 0);

/// Chain extraction for a single slice; building block of the above.
std::vector<JordanBlock> decompose_slice(const EigenspaceSlice& slice,
                                         std::uint64_t seed = 0);

/// Size multiset read off the rank sequence of powers: the number of blocks
/// of size >= i equals rank D^{i-1} - rank D^i on the eigenspace. Serves as
/// the independent oracle for the multiset.
std::vector<std::size_t> jordan_type_from_ranks(const ZeroEigenspace& z);

/// Parity of the support of v; throws on zero or parity-mixing vectors.
Parity support_parity(const Vec& v, const std::vector<Parity>& parities);

struct BlockVerification {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::size_t> sizes;  // descending
  std::vector<std::tuple<std::size_t, Weight, Parity>> bottoms;
};

/// Re-checks every chain identity, top-not-in-image, parity alternation,
/// joint independence and spanning, and the rank-derived size multiset.
BlockVerification verify_blocks(const JordanDecomposition& d,
                                const ZeroEigenspace& z);

}  // namespace sl2dirac
