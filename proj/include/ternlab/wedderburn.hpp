// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Numerical algebra isomorphisms onto full matrix algebras.
//
// A linear map phi from an algebra A onto (M_n(C), x) is stored as an
// n^2 x dim(A) matrix whose column j holds the E_pq coordinates (index
// p * n + q) of phi(b_j). The solver runs Gauss-Newton on the quadratic
// system phi(b_i) phi(b_j) = phi(b_i b_j) together with phi(1) = I.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ternlab/algebra.hpp"

namespace ternlab {

struct WedderburnSolution {
  CMatrix phi;                  // n^2 x dim(A)
  Eigen::Index target_dim = 0;  // n
  double residual = 0.0;        // max over basis pairs of the homomorphism defect
  double unit_residual = 0.0;   // ||phi(1) - I||
  double condition = 0.0;       // sigma_max / sigma_min of phi
  int restarts = 0;             // restarts consumed, the successful one included
  int iterations = 0;           // iterations of the successful restart
};

/// Throws InvalidInput when dim(A) != n^2, PreconditionFailed when A has a
/// nonzero radical or no unit, SolverBudgetExceeded after the budget.
WedderburnSolution solve_wedderburn(const AssocAlgebra& a, Eigen::Index target_dim,
                                    std::uint64_t seed = 0, int restarts = 64,
                                    int iterations = 200, double tol = 1e-8);

struct IsomorphismReport {
  double residual = 0.0;   // max_ij ||phi(a_i a_j) - phi(a_i) phi(a_j)||
  double condition = 0.0;  // sigma_max / sigma_min, infinite when singular
  bool invertible = false;
};

/// phi maps A to B (B.dim() x A.dim()).
IsomorphismReport verify_isomorphism(const CMatrix& phi, const AssocAlgebra& a,
                                     const AssocAlgebra& b);

struct StarObstruction {
  CVector witness;          // unit coordinate vector in A
  double deviation = 0.0;   // ||phi(x*) - phi(x)*||
};

/// Largest involution defect over the basis and sampled unit vectors. Both
/// algebras need an involution.
StarObstruction star_obstruction(const CMatrix& phi, const AssocAlgebra& a, const AssocAlgebra& b,
                                 std::uint64_t seed = 0, int samples = 256);

/// The map [[a, z], [w, b]] -> [[-a, -z], [w, -b]] from the anti-linking
/// algebra of the scalars onto (M_2(C), x).
CMatrix m2_anti_closed_form();

/// (M_2(C), .) with the twisted product, on the basis E11, E12, E21, E22.
AssocAlgebra m2_anti_algebra();

/// E_ij . E_jl = eps(i, j, l) E_il in an algebra on the E_pq basis
/// (0-based, index i * 2 * 2 + j * 2 + l). Throws InvalidInput when a
/// product is not a multiple of E_il.
std::array<int, 8> epsilon_table(const AssocAlgebra& a);

/// max over (i, j, l, p, s) of |sum_q a_ijpq a_jlqs - eps(ijl) a_ilps|,
/// the 32 equations of the 2 x 2 case.
double m2_system_residual(const CMatrix& phi, const std::array<int, 8>& eps);

/// |ad + bc| > 1e-10 for x = [[a, b], [c, d]] in (M_2(C), .).
bool det_invertibility(const CVector& x);

/// x . y = 1 = y . x solvable with relative residual <= tol.
bool two_sided_invertible(const AssocAlgebra& a, const CVector& x, double tol = 1e-8);

}  // namespace ternlab
