// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/instances.hpp"

#include <algorithm>

#include "ternlab/errors.hpp"

namespace ternlab {

namespace {

CMatrix scalar(cplx v) {
  CMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

CMatrix unit_matrix(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  CMatrix m = CMatrix::Zero(rows, cols);
  m(i, j) = 1.0;
  return m;
}

int uniform_int(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_cmatrix(n, n, rng));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

/// Random invertible matrix with condition number below 20.
CMatrix well_conditioned(Eigen::Index n, Rng& rng) {
  for (;;) {
    const CMatrix s = CMatrix::Identity(n, n) + 0.5 * random_cmatrix(n, n, rng) / std::sqrt(static_cast<double>(n));
    Eigen::JacobiSVD<CMatrix> svd(s);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0.0 && sv(0) / sv(sv.size() - 1) < 20.0) return s;
  }
}

/// Standard basis of a direct sum of full matrix spaces placed
/// block-diagonally, optionally amplified twice.
std::vector<CMatrix> standard_basis(const std::vector<std::pair<int, int>>& shapes, bool amplify) {
  Eigen::Index rows = 0, cols = 0;
  for (auto [p, q] : shapes) {
    rows += p;
    cols += q;
  }
  std::vector<CMatrix> out;
  Eigen::Index r0 = 0, c0 = 0;
  for (auto [p, q] : shapes) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        const CMatrix e = unit_matrix(rows, cols, r0 + i, c0 + j);
        if (amplify) {
          CMatrix a = CMatrix::Zero(2 * rows, 2 * cols);
          a.topLeftCorner(rows, cols) = e;
          a.bottomRightCorner(rows, cols) = e;
          out.push_back(a);
        } else {
          out.push_back(e);
        }
      }
    }
    r0 += p;
    c0 += q;
  }
  return out;
}

SignedBlock random_block(int sign, Eigen::Index budget, Rng& rng) {
  std::vector<std::pair<int, int>> shapes;
  bool amplify = false;
  const int type = budget >= 2 ? uniform_int(rng, 0, 2) : 0;
  auto shape = [&rng](Eigen::Index cap) {
    for (;;) {
      const int p = uniform_int(rng, 1, 3), q = uniform_int(rng, 1, 3);
      if (p * q <= cap) return std::make_pair(p, q);
    }
  };
  if (type == 1) {
    const auto s1 = shape(budget - 1);
    shapes.push_back(s1);
    shapes.push_back(shape(budget - s1.first * s1.second));
  } else {
    shapes.push_back(shape(budget));
    amplify = type == 2;
  }
  std::vector<CMatrix> basis = standard_basis(shapes, amplify);
  const Eigen::Index rows = basis.front().rows(), cols = basis.front().cols();
  const CMatrix u = random_unitary(rows, rng), v = random_unitary(cols, rng);
  for (auto& b : basis) b = u * b * v.adjoint();
  const auto n = static_cast<Eigen::Index>(basis.size());
  const CMatrix s = well_conditioned(n, rng);
  std::vector<CMatrix> mixed;
  for (Eigen::Index k = 0; k < n; ++k) {
    CMatrix m = CMatrix::Zero(rows, cols);
    for (Eigen::Index l = 0; l < n; ++l) m += s(l, k) * basis[static_cast<size_t>(l)];
    mixed.push_back(m);
  }
  return SignedBlock(sign, std::move(mixed));
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"m2-anti", "scalar-tro", "scalar-anti", "mixed-2",
                                                 "diag-tro-2"};
  return names;
}

TernarySpace demo_space(const std::string& name) {
  if (name == "m2-anti" || name == "scalar-anti") {
    return TernarySpace::from_blocks({SignedBlock(-1, {scalar(1.0)})}, name);
  }
  if (name == "scalar-tro") return TernarySpace::from_blocks({SignedBlock(1, {scalar(1.0)})}, name);
  if (name == "mixed-2") {
    return TernarySpace::from_blocks({SignedBlock(1, {scalar(1.0)}), SignedBlock(-1, {scalar(1.0)})},
                                     name);
  }
  if (name == "diag-tro-2") {
    return TernarySpace::from_blocks({SignedBlock(1, {unit_matrix(2, 2, 0, 0), unit_matrix(2, 2, 1, 1)})},
                                     name);
  }
  throw InvalidInput("unknown demo '" + name + "'");
}

TernarySpace random_instance(InstanceKind kind, Rng& rng, Eigen::Index max_dim) {
  if (max_dim < (kind == InstanceKind::Mixed ? 2 : 1)) throw InvalidInput("random_instance: max_dim too small");
  std::vector<int> signs;
  switch (kind) {
    case InstanceKind::Tro:
      signs.assign(static_cast<size_t>(uniform_int(rng, 1, 2)), 1);
      break;
    case InstanceKind::Anti:
      signs.assign(static_cast<size_t>(uniform_int(rng, 1, 2)), -1);
      break;
    case InstanceKind::Mixed:
      signs = {1, -1};
      if (uniform_int(rng, 0, 1)) signs.push_back(uniform_int(rng, 0, 1) ? 1 : -1);
      std::shuffle(signs.begin(), signs.end(), rng);
      break;
  }
  std::vector<SignedBlock> blocks;
  Eigen::Index left = max_dim;
  for (size_t b = 0; b < signs.size(); ++b) {
    const auto remaining_blocks = static_cast<Eigen::Index>(signs.size() - b - 1);
    const Eigen::Index budget = std::min<Eigen::Index>(left - remaining_blocks, 9);
    if (budget < 1) break;
    blocks.push_back(random_block(signs[b], budget, rng));
    left -= blocks.back().dim();
  }
  return TernarySpace::from_blocks(std::move(blocks));
}

TernarySpace change_basis(const TernarySpace& m, const CMatrix& t) {
  const Eigen::Index d = m.dim();
  if (t.rows() != d || t.cols() != d) throw ShapeError("change_basis: t must be dim x dim");
  const CMatrix tinv = t.inverse();
  std::vector<TernaryElement> f;
  for (Eigen::Index k = 0; k < d; ++k) f.emplace_back(CVector(t.col(k)));
  StructureConstants c(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < d; ++k) {
        const CVector v = tinv * triple(m, f[static_cast<size_t>(i)], f[static_cast<size_t>(j)],
                                        f[static_cast<size_t>(k)]).coords;
        for (Eigen::Index l = 0; l < d; ++l) c(i, j, k, l) = v(l);
      }
    }
  }
  return TernarySpace::from_structure(std::move(c), m.name());
}

ScrambledInstance scrambled_instance(Rng& rng, Eigen::Index max_dim) {
  ScrambledInstance out;
  out.blocks = random_instance(InstanceKind::Mixed, rng, max_dim);
  const Eigen::Index d = out.blocks.dim();
  out.change = well_conditioned(d, rng) * random_unitary(d, rng);
  out.structure = change_basis(out.blocks, out.change);
  const CMatrix tinv = out.change.inverse();
  CMatrix plus(d, 0), minus(d, 0);
  for (size_t b = 0; b < out.blocks.blocks().size(); ++b) {
    const auto& bl = out.blocks.blocks()[b];
    CMatrix& target = bl.sign() > 0 ? plus : minus;
    for (Eigen::Index k = 0; k < bl.dim(); ++k) {
      target.conservativeResize(Eigen::NoChange, target.cols() + 1);
      target.col(target.cols() - 1) = tinv.col(out.blocks.block_offset(b) + k);
    }
  }
  out.plus_coords = orthonormal_basis(plus);
  out.minus_coords = orthonormal_basis(minus);
  return out;
}

}  // namespace ternlab
