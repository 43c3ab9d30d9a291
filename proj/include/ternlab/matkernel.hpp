// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex-matrix primitives shared by the algebraic modules: operator
// norms, the Hilbert-Schmidt form, Hermitian spectra, residual-checked
// least-squares solves and a handful of subspace utilities.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace ternlab {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

bool all_finite(const CMatrix& a);

/// Largest singular value. Throws InvalidInput on non-finite entries.
double op_norm(const CMatrix& a);

/// Hilbert-Schmidt form <A, B> = tr(B* A). Throws ShapeError on mismatch.
cplx hs_inner(const CMatrix& a, const CMatrix& b);

struct HermEigResult {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;  // orthonormal columns
};

/// Spectral decomposition of a Hermitian matrix. The input is accepted when
/// ||H - H*|| <= tol * max(1, ||H||) and symmetrized before solving.
HermEigResult herm_eig(const CMatrix& h, double tol = kDefaultTol);

struct LinearSolution {
  CVector x;
  double residual = 0.0;  // ||Ax - b||
  double scale = 0.0;     // ||A|| ||x|| + ||b||
  double relative_residual() const {
    return scale > 0.0 ? residual / scale : residual;
  }
};

/// Minimum-norm least-squares solution, always returned with its residual.
/// Singular values below 1e-12 sigma_max are treated as zero.
LinearSolution least_squares(const CMatrix& a, const CVector& b);

/// Least-squares solve accepted only when ||Ax - b|| <= tol (||A|| ||x|| + ||b||).
std::optional<CVector> solve_linear(const CMatrix& a, const CVector& b,
                                    double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Subspaces are passed around as matrices whose columns span them.

/// Orthonormal basis of the column span; directions with singular value
/// below tol * sigma_max are discarded.
CMatrix orthonormal_basis(const CMatrix& columns, double tol = kDefaultTol);

/// Gram-Schmidt extension: appends the normalized component of v orthogonal
/// to the columns of q when its norm exceeds tol * max(1, ||v||, scale).
/// Returns true when q grew.
bool extend_orthonormal(CMatrix& q, const CVector& v, double tol,
                        double scale = 0.0);

/// Orthonormal basis of {x : A x = 0}.
CMatrix null_space(const CMatrix& a, double tol = kDefaultTol);

/// Orthonormal basis of the orthogonal complement of span(q) in C^n.
CMatrix orthogonal_complement(const CMatrix& q, Eigen::Index n,
                              double tol = kDefaultTol);

/// ||v - Q Q* v|| for orthonormal Q.
double projection_residual(const CMatrix& q, const CVector& v);

/// Spectral-norm distance between the orthogonal projectors onto two
/// subspaces given by orthonormal bases. Returns 1 when dimensions differ.
double subspace_distance(const CMatrix& q1, const CMatrix& q2);

/// Column-stacked vec() of a matrix.
CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace ternlab
