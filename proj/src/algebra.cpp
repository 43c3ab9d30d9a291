// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/algebra.hpp"

#include <algorithm>

#include "ternlab/errors.hpp"

namespace ternlab {

AssocAlgebra::AssocAlgebra(std::vector<CMatrix> left_mult) : left_(std::move(left_mult)) {
  const Eigen::Index n = dim();
  for (const auto& l : left_) {
    if (l.rows() != n || l.cols() != n) {
      throw ShapeError("AssocAlgebra: left multiplication tables must be n x n");
    }
  }
}

AssocAlgebra AssocAlgebra::from_products(
    Eigen::Index dim, const std::function<CVector(Eigen::Index, Eigen::Index)>& product) {
  std::vector<CMatrix> left(static_cast<size_t>(dim), CMatrix::Zero(dim, dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      CVector p = product(i, j);
      if (p.size() != dim) throw ShapeError("from_products: product has wrong length");
      left[static_cast<size_t>(i)].col(j) = p;
    }
  }
  return AssocAlgebra(std::move(left));
}

CVector AssocAlgebra::basis(Eigen::Index i) const {
  CVector e = CVector::Zero(dim());
  e(i) = 1.0;
  return e;
}

CMatrix AssocAlgebra::left_mult(const CVector& x) const {
  if (x.size() != dim()) throw ShapeError("left_mult: element length mismatch");
  CMatrix out = CMatrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i) != cplx(0.0)) out += x(i) * left(i);
  }
  return out;
}

CMatrix AssocAlgebra::right_mult(const CVector& y) const {
  if (y.size() != dim()) throw ShapeError("right_mult: element length mismatch");
  CMatrix out(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i) out.col(i) = left(i) * y;
  return out;
}

CVector AssocAlgebra::mul(const CVector& x, const CVector& y) const {
  if (y.size() != dim()) throw ShapeError("mul: element length mismatch");
  return left_mult(x) * y;
}

CVector AssocAlgebra::star(const CVector& x) const {
  if (!star_) throw PreconditionFailed("algebra has no involution");
  return (*star_) * x.conjugate();
}

std::optional<CVector> AssocAlgebra::unit(double tol) const {
  const Eigen::Index n = dim();
  if (n == 0) return CVector(0);
  // e b_j = b_j : column i of the block is left(i).col(j); b_j e = left(j) e
  CMatrix sys(2 * n * n, n);
  CVector rhs = CVector::Zero(2 * n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) sys.block(j * n, i, n, 1) = left(i).col(j);
    sys.block(n * n + j * n, 0, n, n) = left(j);
    rhs(j * n + j) = 1.0;
    rhs(n * n + j * n + j) = 1.0;
  }
  return solve_linear(sys, rhs, tol);
}

double AssocAlgebra::associativity_residual() const {
  double worst = 0.0;
  const Eigen::Index n = dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const CVector ij = left(i).col(j);
      const CMatrix lij = left_mult(ij);
      const CMatrix li_lj = left(i) * left(j);
      worst = std::max(worst, (lij - li_lj).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

AssocAlgebra matrix_algebra(Eigen::Index n) {
  const Eigen::Index d = n * n;
  AssocAlgebra a = AssocAlgebra::from_products(d, [n, d](Eigen::Index i, Eigen::Index j) {
    CVector out = CVector::Zero(d);
    const Eigen::Index p = i / n, q = i % n, r = j / n, s = j % n;
    if (q == r) out(p * n + s) = 1.0;
    return out;
  });
  CMatrix star = CMatrix::Zero(d, d);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) star(q * n + p, p * n + q) = 1.0;
  }
  a.set_involution(star);
  return a;
}

CVector matrix_to_coords(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("matrix_to_coords: matrix not square");
  const Eigen::Index n = m.rows();
  CVector v(n * n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) v(p * n + q) = m(p, q);
  }
  return v;
}

CMatrix coords_to_matrix(const CVector& v, Eigen::Index n) {
  if (v.size() != n * n) throw ShapeError("coords_to_matrix: length mismatch");
  CMatrix m(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) m(p, q) = v(p * n + q);
  }
  return m;
}

bool is_two_sided_ideal(const AssocAlgebra& a, const CMatrix& s, double tol) {
  if (s.cols() == 0) return true;
  const CMatrix q = orthonormal_basis(s);
  double scale = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) scale = std::max(scale, a.left(i).norm());
  scale = std::max(scale, 1.0);
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const CVector sk = q.col(k);
    const CMatrix rs = a.right_mult(sk);
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      if (projection_residual(q, a.left(i) * sk) > tol * scale) return false;
      if (projection_residual(q, rs.col(i)) > tol * scale) return false;
    }
  }
  return true;
}

CMatrix generated_two_sided_ideal(const AssocAlgebra& a, const CMatrix& gens, double tol) {
  const Eigen::Index n = a.dim();
  CMatrix q(n, 0);
  double scale = 0.0;
  for (Eigen::Index k = 0; k < gens.cols(); ++k) scale = std::max(scale, gens.col(k).norm());
  for (Eigen::Index k = 0; k < gens.cols(); ++k) extend_orthonormal(q, gens.col(k), tol, scale);
  Eigen::Index done = 0;
  while (done < q.cols()) {
    const CVector s = q.col(done);
    const CMatrix rs = a.right_mult(s);
    for (Eigen::Index i = 0; i < n && q.cols() < n; ++i) {
      extend_orthonormal(q, a.left(i) * s, tol, 1.0);
      extend_orthonormal(q, rs.col(i), tol, 1.0);
    }
    ++done;
  }
  return q;
}

AssocAlgebra quotient_algebra(const AssocAlgebra& a, const CMatrix& ideal_basis,
                              CMatrix* complement) {
  const CMatrix comp = orthogonal_complement(ideal_basis, a.dim());
  const Eigen::Index m = comp.cols();
  AssocAlgebra out = AssocAlgebra::from_products(m, [&](Eigen::Index i, Eigen::Index j) {
    return CVector(comp.adjoint() * a.mul(comp.col(i), comp.col(j)));
  });
  if (complement) *complement = comp;
  return out;
}

CMatrix CornerLayout::selector(int corner) const {
  const auto& idx = indices.at(static_cast<size_t>(corner));
  CMatrix p = CMatrix::Zero(total, static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k) p(idx[k], static_cast<Eigen::Index>(k)) = 1.0;
  return p;
}

}  // namespace ternlab
