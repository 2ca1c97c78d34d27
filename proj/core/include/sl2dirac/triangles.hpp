#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sl2dirac/jordan.hpp"
#include "sl2dirac/n_differential.hpp"

namespace sl2dirac {

/// Existence certificate for an exact triangle on spaces of the given
/// dimensions: the three split sizes a_i with h_1 = a_1 + a_2,
/// h_2 = a_2 + a_3, h_3 = a_3 + a_1, which exist exactly when the total is
/// even and the dimensions satisfy the triangle inequalities.
struct TriangleCertificate {
  bool exists = false;
  std::array<std::size_t, 3> dims{};
  std::array<std::size_t, 3> splits{};
  std::string refusal;
};

TriangleCertificate triangle_criterion(std::size_t h1, std::size_t h2,
                                       std::size_t h3);

/// A matched chain triple: the sub-chain maps onto the bottom part of the
/// middle chain, the quotient chain is the image of its top part, and the
/// lengths add up. Absent members are length-zero.
struct CompatibleTriple {
  std::optional<JordanBlock> sub;
  JordanBlock total;
  std::optional<JordanBlock> quot;

  std::size_t sub_size() const { return sub ? sub->size : 0; }
  std::size_t quot_size() const { return quot ? quot->size : 0; }
};

struct CompatibleDecomposition {
  bool ok = false;
  std::string failure;
  std::vector<CompatibleTriple> triples;
};

/// Runs the lift-and-complete construction: decompose the quotient space into
/// chains, lift each chain top through the projection at the least possible
/// height, read the leftover chains inside the kernel, and pull kernel chains
/// back through the inclusion. Every choice is deterministic; when the first
/// choice of lifts fails joint verification, seeded retries perturb the lifts
/// before giving up with a refusal reason.
CompatibleDecomposition compatible_decomposition(const SequenceSpaces& s);

struct TriangleResult {
  bool exists = false;
  bool exact = false;
  std::array<std::size_t, 3> dims{};
  std::array<std::size_t, 3> splits{};
  /// Maps H(U) -> H(V) -> H(W) -> H(U) on the odd-chain bottoms.
  Matrix map_uv, map_vw, map_wu;
};

/// Assembles the cyclic maps triple by triple (each triple has at most one
/// unit entry) and checks exactness at all three nodes.
TriangleResult build_triangle(const CompatibleDecomposition& d);

}  // namespace sl2dirac
