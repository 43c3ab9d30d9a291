// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Ideals of ternary rings, their images in the standard embedding, and
// quotients. Subspaces are matrices whose columns are coordinate vectors.

#pragma once

#include <cstdint>

#include "ternlab/embedding.hpp"
#include "ternlab/ternary.hpp"

namespace ternlab {

struct TernaryIdeal {
  TernarySpace parent;
  CMatrix basis;  // orthonormal coordinate columns

  Eigen::Index dim() const { return basis.cols(); }
};

struct IdealResiduals {
  double mmi = 0.0;  // [M M I] outside I
  double imm = 0.0;  // [I M M] outside I
  double mim = 0.0;  // [M I M] outside I
  double max() const { return std::max({mmi, imm, mim}); }
};

/// Projection residuals of the three containments over basis triples,
/// relative to the largest product norm.
IdealResiduals ideal_residuals(const TernarySpace& m, const CMatrix& s);

/// All three containments hold within tol.
bool is_ideal(const TernarySpace& m, const CMatrix& s, double tol = 1e-8);

/// Smallest ideal containing the generator columns.
TernaryIdeal generated_ideal(const TernarySpace& m, const CMatrix& generators,
                             double tol = kDefaultTol);

/// Validates an ideal and wraps it with an orthonormal basis; NotAnIdeal
/// otherwise.
TernaryIdeal make_ideal(const TernarySpace& m, const CMatrix& s, double tol = 1e-8);

/// A(I) = [[L(I), I], [conj I, R(I)]] as a subspace of the embedding
/// (orthonormal columns). Throws NotAnIdeal when I is not an ideal of the
/// embedded space.
CMatrix embed_ideal(const StandardEmbedding& e, const TernaryIdeal& i, double tol = 1e-8);

struct Quotient {
  TernarySpace space;  // structure presentation on the complement
  CMatrix complement;  // orthonormal coordinate columns spanning a complement of J
  double well_defined_residual = 0.0;
};

/// M / J with structure constants induced on the coordinate-orthogonal
/// complement of J. Throws NotAnIdeal.
Quotient quotient(const TernarySpace& m, const TernaryIdeal& j, double tol = 1e-8);

/// Coset of f in the quotient coordinates.
TernaryElement quotient_class(const Quotient& q, const TernaryElement& f);
/// Representative of a quotient class in M (lies in the complement).
TernaryElement quotient_lift(const Quotient& q, const TernaryElement& c);

struct QuotientNormReport {
  double upper = 0.0;  // ||f - j|| for the best j found
  double lower = 0.0;  // dual certificate |<W, f>| with W annihilating J
  double gap() const { return upper - lower; }
  CVector best_j;      // coordinates in M
};

/// inf over j in J of ||f - j||. Block presentation only (NormUnavailable).
QuotientNormReport quotient_norm(const TernarySpace& m, const TernaryIdeal& j,
                                 const TernaryElement& f, std::uint64_t seed = 0,
                                 int restarts = 4);

}  // namespace ternlab
