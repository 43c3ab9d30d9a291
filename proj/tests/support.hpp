// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Small builders shared by the unit, property and acceptance tests.

#pragma once

#include <initializer_list>
#include <vector>

#include "ternlab/instances.hpp"
#include "ternlab/ternary.hpp"

namespace support {

using ternlab::CMatrix;
using ternlab::cplx;
using ternlab::CVector;

inline CVector vec(std::initializer_list<cplx> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (cplx x : xs) v(i++) = x;
  return v;
}

inline CMatrix unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  CMatrix m = CMatrix::Zero(rows, cols);
  m(i, j) = 1.0;
  return m;
}

/// Direct sum of one-dimensional blocks C with the given signs.
inline ternlab::TernarySpace scalars(std::initializer_list<int> signs) {
  std::vector<ternlab::SignedBlock> blocks;
  for (int s : signs) blocks.emplace_back(s, std::vector<CMatrix>{CMatrix::Constant(1, 1, 1.0)});
  return ternlab::TernarySpace::from_blocks(std::move(blocks));
}

/// Full p x q matrix space with one sign.
inline ternlab::TernarySpace full(Eigen::Index p, Eigen::Index q, int sign) {
  std::vector<CMatrix> basis;
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < q; ++j) basis.push_back(unit(p, q, i, j));
  return ternlab::TernarySpace::from_blocks({ternlab::SignedBlock(sign, std::move(basis))});
}

inline ternlab::InstanceKind kind_of(int k) { return static_cast<ternlab::InstanceKind>(k % 3); }

/// The k-th seeded random instance (TRO, anti, mixed in rotation).
inline ternlab::TernarySpace instance(std::uint64_t seed, int k, Eigen::Index max_dim = 16) {
  ternlab::Rng rng = ternlab::make_rng(seed, static_cast<std::uint64_t>(k));
  ternlab::TernarySpace m = ternlab::random_instance(kind_of(k), rng, max_dim);
  m.set_name("instance-" + std::to_string(k));
  return m;
}

}  // namespace support
