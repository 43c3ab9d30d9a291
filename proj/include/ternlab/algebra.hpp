// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ternlab/matkernel.hpp"

namespace ternlab {

/// Finite-dimensional complex associative algebra given by structure
/// constants on a fixed basis b_0..b_{n-1}. The constants are stored as the
/// left-multiplication matrices: column j of left(i) holds the coordinates of
/// b_i b_j.
class AssocAlgebra {
 public:
  AssocAlgebra() = default;
  explicit AssocAlgebra(std::vector<CMatrix> left_mult);

  /// Builds the tables from a product callback on basis indices.
  static AssocAlgebra from_products(
      Eigen::Index dim, const std::function<CVector(Eigen::Index, Eigen::Index)>& product);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(left_.size()); }
  const CMatrix& left(Eigen::Index i) const { return left_[static_cast<size_t>(i)]; }

  CVector basis(Eigen::Index i) const;
  CVector mul(const CVector& x, const CVector& y) const;
  CVector mul(const CVector& x, const CVector& y, const CVector& z) const {
    return mul(mul(x, y), z);
  }
  /// Matrix of y -> x y.
  CMatrix left_mult(const CVector& x) const;
  /// Matrix of x -> x y.
  CMatrix right_mult(const CVector& y) const;

  /// Optional conjugate-linear involution x* = S conj(x).
  void set_involution(CMatrix s) { star_ = std::move(s); }
  bool has_involution() const { return star_.has_value(); }
  CVector star(const CVector& x) const;
  const CMatrix& involution_matrix() const { return *star_; }

  /// Two-sided unit, if one exists (residual <= tol).
  std::optional<CVector> unit(double tol = kDefaultTol) const;

  /// max_ijk ||(b_i b_j) b_k - b_i (b_j b_k)||.
  double associativity_residual() const;

 private:
  std::vector<CMatrix> left_;
  std::optional<CMatrix> star_;
};

/// (M_n(C), x) on the basis E_pq, index p * n + q, with the adjoint as
/// involution.
AssocAlgebra matrix_algebra(Eigen::Index n);

/// Coordinates of E_pq-expanded matrices in matrix_algebra(n).
CVector matrix_to_coords(const CMatrix& m);
CMatrix coords_to_matrix(const CVector& v, Eigen::Index n);

/// True when the column span of s is a two-sided ideal: b_i s, s b_i stay in
/// span(s) with relative residual <= tol.
bool is_two_sided_ideal(const AssocAlgebra& a, const CMatrix& s, double tol = 1e-8);

/// Smallest two-sided ideal containing the given columns (orthonormal basis).
CMatrix generated_two_sided_ideal(const AssocAlgebra& a, const CMatrix& gens,
                                  double tol = kDefaultTol);

/// Quotient of a by the ideal spanned by ideal_basis (orthonormal columns),
/// represented on the orthogonal complement. complement receives that basis.
AssocAlgebra quotient_algebra(const AssocAlgebra& a, const CMatrix& ideal_basis,
                              CMatrix* complement = nullptr);

/// Index sets of the four Peirce corners of a standard embedding:
/// 0 = upper-left (L), 1 = upper-right (M), 2 = lower-left (conjugate M),
/// 3 = lower-right (R).
struct CornerLayout {
  std::array<std::vector<Eigen::Index>, 4> indices;
  Eigen::Index total = 0;

  /// total x k matrix whose columns are the unit vectors of a corner.
  CMatrix selector(int corner) const;
};

}  // namespace ternlab
