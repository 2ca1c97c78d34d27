#pragma once

#include <cstdint>
#include <vector>

#include "sl2dirac/n_differential.hpp"
#include "sl2dirac/rng.hpp"
#include "sl2dirac/zero_eigenspace.hpp"

namespace sl2dirac {

/// One planted chain: size, the weight it lives at, and its bottom parity.
struct PlantedBlock {
  Weight weight = 0;
  std::size_t size = 1;
  Parity bottom = Parity::Even;
};

/// Builds the canonical nilpotent operator with the given chains and, when
/// `conjugate` is set, dresses it with a random parity-preserving invertible
/// change of basis. The planted sizes are the ground truth the chain
/// machinery must recover.
ZeroEigenspace plant_operator(const std::vector<PlantedBlock>& blocks, Rng& rng,
                              bool conjugate = true);

/// Random planted type: a handful of blocks over one or two weights.
std::vector<PlantedBlock> random_planted_type(Rng& rng, std::size_t max_blocks = 4,
                                              std::size_t max_size = 5);

/// One planted compatible triple of chain sizes at a weight: the middle size
/// is the sum of the other two (either side may be zero).
struct PlantedTriple {
  Weight weight = 0;
  std::size_t sub_size = 0;
  std::size_t quot_size = 0;
  Parity middle_bottom = Parity::Even;

  std::size_t total_size() const { return sub_size + quot_size; }
};

/// Builds a short exact sequence of graded nilpotent spaces realizing the
/// planted triples, with all three spaces and both maps independently dressed
/// by parity-preserving invertible changes of basis.
SequenceSpaces plant_sequence(const std::vector<PlantedTriple>& triples,
                              Rng& rng, bool conjugate = true);

std::vector<PlantedTriple> random_planted_triples(Rng& rng,
                                                  std::size_t max_triples = 3,
                                                  std::size_t max_side = 3);

/// Random invertible matrix with small integer entries mixing only
/// equal-parity coordinates.
Matrix random_parity_preserving_invertible(const std::vector<Parity>& parities,
                                           Rng& rng);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace sl2dirac
