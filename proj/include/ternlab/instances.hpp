// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Bundled demo spaces and seeded random instances.

#pragma once

#include <string>
#include <vector>

#include "ternlab/random.hpp"
#include "ternlab/ternary.hpp"

namespace ternlab {

const std::vector<std::string>& demo_names();

/// m2-anti, scalar-tro, scalar-anti, mixed-2, diag-tro-2. Throws InvalidInput
/// for unknown names.
TernarySpace demo_space(const std::string& name);

enum class InstanceKind { Tro, Anti, Mixed };

/// Random block space of the given kind with total dimension at most
/// max_dim. Blocks are full rectangular matrix spaces, block-diagonal sums
/// of two of them, or amplifications x -> diag(x, x), each conjugated by
/// random unitaries and given a scrambled (non-orthonormal) basis.
TernarySpace random_instance(InstanceKind kind, Rng& rng, Eigen::Index max_dim = 16);

/// A mixed space re-expressed by structure constants in a random basis,
/// together with the true summands in the new coordinates.
struct ScrambledInstance {
  TernarySpace blocks;      // original block presentation
  TernarySpace structure;   // same ring, structure constants in basis T
  CMatrix change;           // T: column k holds the old coordinates of new basis vector k
  CMatrix plus_coords;      // orthonormal basis of M+ in new coordinates
  CMatrix minus_coords;     // orthonormal basis of M- in new coordinates
};

ScrambledInstance scrambled_instance(Rng& rng, Eigen::Index max_dim = 12);

/// Structure constants of m in the basis given by the columns of t.
TernarySpace change_basis(const TernarySpace& m, const CMatrix& t);

}  // namespace ternlab
