// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Quasi-inverses in homotopes and Jacobson radicals.
//
// In the homotope A_u of an associative algebra the product is x u y, and x
// is quasi-invertible there when some y satisfies y - x = x u y = y u x. The
// ternary analogue uses y - x = [y u x] = [x u y]. The radical of a finite
// dimensional algebra over C is computed from the trace form
// tr(L_{x a}) and audited by sampled quasi-inverse solves.

#pragma once

#include <cstdint>
#include <optional>

#include "ternlab/algebra.hpp"
#include "ternlab/embedding.hpp"
#include "ternlab/ternary.hpp"

namespace ternlab {

inline constexpr double kBorderlineHigh = 1e-6;

struct QuasiInverseCertificate {
  CVector y;
  double residual_left = 0.0;   // ||y - x - x u y|| (ternary: [x u y])
  double residual_right = 0.0;  // ||y - x - y u x|| (ternary: [y u x])
};

struct QuasiInverseResult {
  std::optional<QuasiInverseCertificate> certificate;
  double relative_residual = 0.0;  // of the stacked least-squares solve
  /// Rejected, but with relative residual in (tol, 1e-6].
  bool borderline = false;

  bool exists() const { return certificate.has_value(); }
};

QuasiInverseResult quasi_inverse_assoc(const AssocAlgebra& a, const CVector& x, const CVector& u,
                                       double tol = kDefaultTol);

QuasiInverseResult quasi_inverse_ternary(const TernarySpace& m, const TernaryElement& x,
                                         const TernaryElement& u, double tol = kDefaultTol);

struct RadicalReport {
  CMatrix basis;                 // orthonormal columns
  bool is_ideal = false;
  Eigen::Index quotient_radical_dim = 0;
  std::size_t audits = 0;        // sampled homotope solves
  std::size_t audit_failures = 0;
  std::size_t borderline = 0;

  Eigen::Index dim() const { return basis.cols(); }
};

/// Rad A = {x : tr(L_{x b_j}) = 0 for all j}, with the ideal, quotient and
/// sampled quasi-invertibility checks filled in.
RadicalReport jacobson_radical(const AssocAlgebra& a, std::uint64_t seed = 0,
                               std::size_t audits = 50, double tol = 1e-8);

/// Associative envelope of a ternary ring given only by its triple product:
/// operator pairs (l(x, y), l(y, x)) and (r(u, v), r(v, u)) around M and its
/// conjugate. Corners follow CornerLayout; the M corner uses the coordinates
/// of the base space.
struct Envelope {
  AssocAlgebra algebra;
  CornerLayout corners;
};

Envelope standard_envelope(const TernarySpace& m);

struct TernaryRadicalReport {
  CMatrix basis;  // orthonormal columns in coordinates of M
  RadicalReport envelope_radical;
  std::array<Eigen::Index, 4> corner_dims{};
  bool is_ideal = false;
  std::size_t audits = 0;
  std::size_t audit_failures = 0;
  std::size_t borderline = 0;

  Eigen::Index dim() const { return basis.cols(); }
};

/// Rad M = Rad A(M) cap M. Block input uses the standard embedding, structure
/// input the operator envelope.
TernaryRadicalReport ternary_radical(const TernarySpace& m, std::uint64_t seed = 0,
                                     std::size_t audits = 50, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Equivalence lemmas. Each check reports both sides; agree is the verdict.

struct EquivalenceCheck {
  bool lhs = false;
  bool rhs = false;
  bool borderline = false;
  bool agree() const { return lhs == rhs; }
};

/// x quasi-invertible in M_u versus [[0, x], [0, 0]] quasi-invertible in the
/// homotope of A(M) at [[0, 0], [u*, 0]].
EquivalenceCheck check_corner_qi_equivalence(const StandardEmbedding& e, const TernaryElement& x,
                                             const TernaryElement& u);

/// x quasi-invertible in A_y versus y quasi-invertible in A_x.
EquivalenceCheck check_symmetry_principle(const AssocAlgebra& a, const CVector& x,
                                          const CVector& y);

/// Linear maps phi, psi of A with phi(x) z phi(y) = phi(x psi(z) y) and the
/// same with the roles swapped, validated on the basis at construction
/// (PreconditionFailed otherwise).
class ShiftingPair {
 public:
  ShiftingPair(const AssocAlgebra& a, CMatrix phi, CMatrix psi, double tol = 1e-9);

  /// x quasi-invertible in A_{psi(y)} versus phi(x) quasi-invertible in A_y.
  EquivalenceCheck check(const CVector& x, const CVector& y) const;

  const CMatrix& phi() const { return phi_; }
  const CMatrix& psi() const { return psi_; }

 private:
  const AssocAlgebra* a_;
  CMatrix phi_;
  CMatrix psi_;
};

EquivalenceCheck check_shifting_principle(const AssocAlgebra& a, const CMatrix& phi,
                                          const CMatrix& psi, const CVector& x,
                                          const CVector& y);

/// Corner compressions of A(M): phi = psi = E1 . E1, or phi = E1 . E2 and
/// psi = E2 . E1.
CMatrix corner_compression(const StandardEmbedding& e, int corner);

struct LemmaTally {
  std::size_t trials = 0;
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  std::size_t counterexamples = 0;
  std::size_t borderline = 0;
};

/// Seeded trial runners. A third of the trials are critical: the homotope
/// element is rescaled so that the linear systems become singular and both
/// sides are expected to fail.
LemmaTally run_corner_trials(const StandardEmbedding& e, std::size_t trials, std::uint64_t seed);
LemmaTally run_symmetry_trials(const AssocAlgebra& a, std::size_t trials, std::uint64_t seed);
LemmaTally run_shifting_trials(const ShiftingPair& s, const AssocAlgebra& a, std::size_t trials,
                               std::uint64_t seed);

}  // namespace ternlab
