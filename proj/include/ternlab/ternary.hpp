// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// Finite-dimensional C*-ternary rings.
//
// A space is presented either as a direct sum of signed matrix blocks (a
// sub-TRO of B(C^cols, C^rows) with product sign * x y* z) or abstractly by
// structure constants [b_i b_j b_k] = sum_l c_ijkl b_l. Elements are
// coordinate vectors over the concatenated basis. The triple product is
// linear in the outer arguments and conjugate-linear in the middle one.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ternlab/matkernel.hpp"
#include "ternlab/random.hpp"

namespace ternlab {

/// A TRO (sign +1) or anti-TRO (sign -1) spanned by same-shape matrices.
class SignedBlock {
 public:
  /// Validates linear independence and closure under x y* z; throws
  /// InvalidInput otherwise.
  SignedBlock(int sign, std::vector<CMatrix> basis, double tol = kDefaultTol);

  int sign() const { return sign_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }

  CMatrix to_matrix(const CVector& coords) const;
  /// Least-squares coordinates of a matrix in the block's span.
  CVector to_coords(const CMatrix& m) const;
  /// Distance from m to the span.
  double span_residual(const CMatrix& m) const;

  SignedBlock with_sign(int sign) const;

  bool operator==(const SignedBlock& other) const;

 private:
  int sign_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<CMatrix> basis_;
  CMatrix basis_mat_;  // columns vec(basis_k)
  CMatrix pinv_;
};

/// [b_i b_j b_k] = sum_l c(i, j, k, l) b_l.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(Eigen::Index dim);
  StructureConstants(Eigen::Index dim, std::vector<cplx> c);

  Eigen::Index dim() const { return dim_; }
  cplx& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) {
    return c_[index(i, j, k, l)];
  }
  cplx operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) const {
    return c_[index(i, j, k, l)];
  }
  const std::vector<cplx>& data() const { return c_; }

  bool operator==(const StructureConstants& other) const = default;

 private:
  size_t index(Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) const {
    return static_cast<size_t>(((i * dim_ + j) * dim_ + k) * dim_ + l);
  }
  Eigen::Index dim_ = 0;
  std::vector<cplx> c_;
};

struct TernaryElement {
  CVector coords;

  TernaryElement() = default;
  explicit TernaryElement(CVector c) : coords(std::move(c)) {}
  static TernaryElement zero(Eigen::Index n) { return TernaryElement(CVector::Zero(n)); }

  Eigen::Index size() const { return coords.size(); }
  TernaryElement operator+(const TernaryElement& o) const { return TernaryElement(coords + o.coords); }
  TernaryElement operator-(const TernaryElement& o) const { return TernaryElement(coords - o.coords); }
  TernaryElement operator-() const { return TernaryElement(-coords); }
  friend TernaryElement operator*(cplx s, const TernaryElement& e) { return TernaryElement(s * e.coords); }
};

class TernarySpace {
 public:
  TernarySpace() : rep_(StructureConstants(0)) {}
  static TernarySpace from_blocks(std::vector<SignedBlock> blocks, std::string name = {});
  static TernarySpace from_structure(StructureConstants c, std::string name = {});

  bool has_blocks() const { return std::holds_alternative<std::vector<SignedBlock>>(rep_); }
  const std::vector<SignedBlock>& blocks() const;
  const StructureConstants& structure() const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Eigen::Index dim() const { return dim_; }
  /// First global coordinate of block b.
  Eigen::Index block_offset(size_t b) const { return offsets_.at(b); }

  /// Matrix of block b for an element (block presentation only).
  CMatrix block_matrix(const TernaryElement& x, size_t b) const;
  /// Element assembled from one matrix per block.
  TernaryElement from_block_matrices(const std::vector<CMatrix>& mats) const;

  /// Max over blocks of the operator norm; throws NormUnavailable for the
  /// structure presentation.
  double norm(const TernaryElement& x) const;

  TernaryElement basis_element(Eigen::Index i) const;

  bool operator==(const TernarySpace& other) const;

 private:
  void check_element(const TernaryElement& x) const;
  friend TernaryElement triple(const TernarySpace&, const TernaryElement&,
                               const TernaryElement&, const TernaryElement&);

  std::variant<std::vector<SignedBlock>, StructureConstants> rep_;
  std::vector<Eigen::Index> offsets_;
  Eigen::Index dim_ = 0;
  std::string name_;
};

/// [x y z]; ShapeError when an element does not belong to the space.
TernaryElement triple(const TernarySpace& m, const TernaryElement& x, const TernaryElement& y,
                      const TernaryElement& z);

/// Matrix of h -> [x y h].
CMatrix left_operator(const TernarySpace& m, const TernaryElement& x, const TernaryElement& y);
/// Matrix of h -> [h u v], i.e. the operator r(v, u) acting on the right.
CMatrix right_operator(const TernarySpace& m, const TernaryElement& u, const TernaryElement& v);

TernaryElement random_element(const TernarySpace& m, Rng& rng);

/// Smallest sub-TRO (sign +1) or anti-TRO (sign -1) containing the
/// generators; the basis is Hilbert-Schmidt orthonormal. Throws InvalidInput
/// for an empty or all-zero generator list and ClosureDidNotStabilize after
/// 64 rounds.
TernarySpace ternary_closure(const std::vector<CMatrix>& generators, int sign);

struct AxiomReport {
  std::size_t samples = 0;
  bool norm_checked = false;
  double associativity_middle = 0.0;  // [[xyz]uv] vs [x[uzy]v]
  double associativity_right = 0.0;   // [[xyz]uv] vs [xy[zuv]]
  double conjugate_linearity = 0.0;   // [x (l y) z] vs conj(l) [xyz]
  double norm_submultiplicative = 0.0;
  double norm_cube = 0.0;
  double tolerance = 1e-8;
  bool pass = false;
  std::vector<std::string> failing;
};

/// Sampled check of the C*-ternary ring axioms. Residuals are relative to the
/// product of the argument norms. The structure presentation is accepted; its
/// norm axioms are skipped and norm_checked is false.
AxiomReport check_axioms(const TernarySpace& m, std::size_t samples, std::uint64_t seed,
                         double tol = 1e-8);

/// b with [b b b] = a, from the singular value decomposition of each block.
TernaryElement cube_root(const TernarySpace& m, const TernaryElement& a);

struct ZettlDecomposition {
  TernarySpace plus;
  TernarySpace minus;
  CMatrix plus_coords;   // columns: basis of M+ in coordinates of M
  CMatrix minus_coords;  // columns: basis of M- in coordinates of M
};

/// M = M+ (+) M-. Block input is split by block sign. Structure input is
/// split spectrally: S = sum_f r(f, f) over 8 * dim sampled f is
/// block-diagonal with positive spectrum on M+ and negative on M-, and the
/// two spectral subspaces are extracted with the matrix sign function.
/// Throws DecompositionInconclusive when S keeps a kernel or a non-real
/// spectrum.
ZettlDecomposition zettl_decompose(const TernarySpace& m, std::uint64_t seed = 0,
                                   double tol = 1e-8);

TernarySpace opposite(const TernarySpace& m);

StructureConstants structure_constants_of(const TernarySpace& m);

/// Sub-triple system on the column span of basis_coords (must be closed),
/// in the structure presentation with the given columns as basis.
TernarySpace restrict_to_subspace(const TernarySpace& m, const CMatrix& basis_coords,
                                  double tol = 1e-8);

struct SpectrumReport {
  RVector eigenvalues;  // real parts, ascending
  double max_imag = 0.0;
  bool pass = false;
};

/// Spectrum of the real-linear map x -> ([a a x] + [a x a]) / 2 acting on
/// the realification of M; pass when every eigenvalue is >= -tol.
SpectrumReport jbstar_box_check(const TernarySpace& m, const TernaryElement& a,
                                double tol = 1e-8);

}  // namespace ternlab
