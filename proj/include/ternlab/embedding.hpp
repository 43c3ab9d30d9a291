// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

// The standard embedding A(M) of a block-presented C*-ternary ring.
//
// Each signed block M_b of shape p x q contributes the (p+q) x (p+q) block
// matrices
//
//     [ alpha   z    ]     alpha in span(M_b M_b*),  z in M_b,
//     [ w*      beta ]     w in M_b,                 beta in span(M_b* M_b).
//
// TRO blocks multiply as ordinary matrices (the linking algebra). Anti-TRO
// blocks use the twisted product
//
//     [a z; w* b] . [a' z'; w'* b'] =
//         [ -a a' + z w'*     -a z' - z b'  ]
//         [ -w* a' - b w'*     w* z' - b b' ]
//
// and both use the block adjoint as involution. Coordinates are laid out
// block by block as (L, M, conj M, R); the conj M slot holds gamma with
// lower-left corner sum_k gamma_k B_k*.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ternlab/algebra.hpp"
#include "ternlab/ternary.hpp"

namespace ternlab {

enum class ProductRule { Linking, Anti };

struct EmbeddingElement {
  CVector coords;

  EmbeddingElement() = default;
  explicit EmbeddingElement(CVector c) : coords(std::move(c)) {}
  EmbeddingElement operator+(const EmbeddingElement& o) const { return EmbeddingElement(coords + o.coords); }
  EmbeddingElement operator-(const EmbeddingElement& o) const { return EmbeddingElement(coords - o.coords); }
  friend EmbeddingElement operator*(cplx s, const EmbeddingElement& e) {
    return EmbeddingElement(s * e.coords);
  }
};

struct EmbeddingBlock {
  int sign = 1;
  ProductRule rule = ProductRule::Linking;
  Eigen::Index p = 0;  // rows of M_b
  Eigen::Index q = 0;  // cols of M_b
  std::vector<CMatrix> l_basis;  // orthonormal basis of span(M M*)
  std::vector<CMatrix> r_basis;  // orthonormal basis of span(M* M)
  CMatrix l_unit;  // unit of span(M M*): projection onto the joint range of M
  CMatrix r_unit;  // unit of span(M* M)
  Eigen::Index l_off = 0, m_off = 0, mbar_off = 0, r_off = 0;
  Eigen::Index dl() const { return static_cast<Eigen::Index>(l_basis.size()); }
  Eigen::Index dr() const { return static_cast<Eigen::Index>(r_basis.size()); }
};

class StandardEmbedding {
 public:
  const TernarySpace& base() const { return base_; }
  const std::vector<EmbeddingBlock>& blocks() const { return blocks_; }
  Eigen::Index dim() const { return dim_; }
  const AssocAlgebra& algebra() const { return algebra_; }
  const CornerLayout& corners() const { return corners_; }

  /// (p+q) x (p+q) realization of block b.
  CMatrix block_matrix(const EmbeddingElement& a, size_t b) const;
  /// Coordinates of one realization matrix per block (projected onto the
  /// corner spans).
  EmbeddingElement from_block_matrices(const std::vector<CMatrix>& mats) const;
  /// Largest distance of a realization matrix from the embedding's span.
  double span_residual(const std::vector<CMatrix>& mats) const;

  /// Block operator norm: max over blocks of the spectral norm.
  double norm(const EmbeddingElement& a) const;

  EmbeddingElement zero() const { return EmbeddingElement(CVector::Zero(dim_)); }
  EmbeddingElement basis_element(Eigen::Index i) const;

  /// [[0, x], [0, 0]]
  EmbeddingElement corner(const TernaryElement& x) const;
  /// [[0, 0], [x*, 0]]
  EmbeddingElement conj_corner(const TernaryElement& x) const;
  /// Upper-right corner read back as an element of M.
  TernaryElement upper_right(const EmbeddingElement& a) const;
  /// Lower-left corner w* read back as the element w of M.
  TernaryElement lower_left(const EmbeddingElement& a) const;

  /// Peirce idempotents: the units of the L and R corners (sign-adjusted on
  /// anti blocks so that they are idempotent for the twisted product).
  EmbeddingElement e1() const;
  EmbeddingElement e2() const;

 private:
  friend StandardEmbedding build_embedding(const TernarySpace& m);
  TernarySpace base_;
  std::vector<EmbeddingBlock> blocks_;
  Eigen::Index dim_ = 0;
  AssocAlgebra algebra_;
  CornerLayout corners_;
};

/// Throws NormUnavailable for the structure presentation.
StandardEmbedding build_embedding(const TernarySpace& m);

EmbeddingElement emb_mul(const StandardEmbedding& e, const EmbeddingElement& a,
                         const EmbeddingElement& b);
EmbeddingElement emb_star(const StandardEmbedding& e, const EmbeddingElement& a);
EmbeddingElement identity_of(const StandardEmbedding& e);

/// pi(a) acting on the left ideal M (+) R = [[0, M], [0, R]] by left
/// multiplication, in the coordinates listed in m_index / r_index.
struct PiOperator {
  CMatrix matrix;
  std::vector<Eigen::Index> m_index;  // embedding coordinates of the M slots
  std::vector<Eigen::Index> r_index;  // embedding coordinates of the R slots
};

PiOperator pi_represent(const StandardEmbedding& e, const EmbeddingElement& a);

/// Smallest singular value of a -> vec(pi(a)) divided by the largest.
double pi_injectivity_margin(const StandardEmbedding& e);

struct BoundsReport {
  double norm_a = 0.0;  // ||A||, upper-left corner
  double norm_b = 0.0;  // ||B||, lower-right corner
  double norm_f = 0.0;  // ||f||, upper-right corner
  double norm_g = 0.0;  // ||g||, lower-left corner is g*
  double witness_a = 0.0;
  double witness_b = 0.0;
  double witness_f = 0.0;
  double witness_g = 0.0;
  double estimate = 0.0;  // best ||pi(a) v|| / ||v|| found
  bool certified = false;
};

/// Certified lower bounds for ||pi(a)|| on M (+) R normed by
/// (||f'||^2 + ||B'||^2)^(1/2), from explicit witness vectors plus sampled
/// and power-iterated ones.
BoundsReport pi_norm_lower_bounds(const StandardEmbedding& e, const EmbeddingElement& a,
                                  std::uint64_t seed = 0, double tol = 1e-8);

struct PeirceSplit {
  std::array<CMatrix, 4> corners;  // orthonormal bases in embedding coordinates
  CMatrix ternary_part;            // S cap M in coordinates of the base space
};

/// Splits an ideal S (columns span it) into its four corner intersections.
/// Throws NotAnIdeal when S is not a two-sided ideal, PreconditionFailed if
/// the corner dimensions do not add up.
PeirceSplit peirce_split(const AssocAlgebra& algebra, const CornerLayout& layout,
                         const CMatrix& s, double tol = 1e-8);
PeirceSplit peirce_split(const StandardEmbedding& e, const CMatrix& s, double tol = 1e-8);

/// |  ||a* . a|| - ||a||^2  | in the block operator norm.
double cstar_gap(const StandardEmbedding& e, const EmbeddingElement& a);

struct CStarWitness {
  EmbeddingElement element;
  double gap = 0.0;
  double norm_star_product = 0.0;  // ||a* . a||
  double norm_squared = 0.0;       // ||a||^2
};

/// Searches anti blocks for an element with every corner in the unit ball
/// and C*-identity gap above 0.1. Returns nullopt when there is no anti block
/// or no witness was found.
std::optional<CStarWitness> cstar_identity_witness(const StandardEmbedding& e,
                                                   std::uint64_t seed = 0);

}  // namespace ternlab
