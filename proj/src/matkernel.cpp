// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/matkernel.hpp"

#include <algorithm>
#include <cmath>

#include "ternlab/errors.hpp"

namespace ternlab {

bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

double op_norm(const CMatrix& a) {
  if (!all_finite(a)) throw InvalidInput("op_norm: non-finite entry");
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 || a.cols() == 1) return a.norm();
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hs_inner: shape mismatch");
  }
  // tr(B* A) = sum_ij conj(B_ij) A_ij
  return (b.conjugate().cwiseProduct(a)).sum();
}

HermEigResult herm_eig(const CMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw ShapeError("herm_eig: matrix not square");
  if (!all_finite(h)) throw InvalidInput("herm_eig: non-finite entry");
  const double scale = std::max(1.0, op_norm(h));
  const CMatrix skew = h - h.adjoint();
  if (h.size() > 0 && op_norm(skew) > tol * scale) {
    throw NotHermitian("herm_eig: ||H - H*|| exceeds tolerance");
  }
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  return {es.eigenvalues(), es.eigenvectors()};
}

LinearSolution least_squares(const CMatrix& a, const CVector& b) {
  if (a.rows() != b.size()) throw ShapeError("least_squares: shape mismatch");
  LinearSolution out;
  if (a.cols() == 0) {
    out.x = CVector(0);
    out.residual = b.norm();
    out.scale = b.norm();
    return out;
  }
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // near-singular directions are dropped so that inconsistent systems keep
  // their residual instead of producing a huge spurious solution
  svd.setThreshold(1e-12);
  out.x = svd.solve(b);
  out.residual = (a * out.x - b).norm();
  const double anorm = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  out.scale = anorm * out.x.norm() + b.norm();
  return out;
}

std::optional<CVector> solve_linear(const CMatrix& a, const CVector& b, double tol) {
  LinearSolution sol = least_squares(a, b);
  if (sol.residual <= tol * sol.scale) return sol.x;
  return std::nullopt;
}

CMatrix orthonormal_basis(const CMatrix& columns, double tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return CMatrix(columns.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return CMatrix(columns.rows(), 0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

bool extend_orthonormal(CMatrix& q, const CVector& v, double tol, double scale) {
  CVector r = v;
  // two passes of modified Gram-Schmidt
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
      r -= q.col(k) * q.col(k).dot(r);
    }
  }
  const double ref = std::max({1.0, v.norm(), scale});
  const double nr = r.norm();
  if (nr <= tol * ref) return false;
  q.conservativeResize(v.size(), q.cols() + 1);
  q.col(q.cols() - 1) = r / nr;
  return true;
}

CMatrix null_space(const CMatrix& a, double tol) {
  const Eigen::Index n = a.cols();
  if (n == 0) return CMatrix(0, 0);
  if (a.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    while (rank < s.size() && s(rank) > tol * smax) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

CMatrix orthogonal_complement(const CMatrix& q, Eigen::Index n, double tol) {
  if (q.cols() == 0) return CMatrix::Identity(n, n);
  return null_space(q.adjoint(), tol);
}

double projection_residual(const CMatrix& q, const CVector& v) {
  if (q.cols() == 0) return v.norm();
  return (v - q * (q.adjoint() * v)).norm();
}

double subspace_distance(const CMatrix& q1, const CMatrix& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const CMatrix diff = q1 * q1.adjoint() - q2 * q2.adjoint();
  return op_norm(diff);
}

CVector vec(const CMatrix& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw ShapeError("unvec: size mismatch");
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

}  // namespace ternlab
