// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "ternlab/errors.hpp"
#include "ternlab/random.hpp"

namespace ternlab {

namespace {

constexpr double kSpanTol = 1e-10;

std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats, Eigen::Index rows,
                                      Eigen::Index cols) {
  CMatrix q(rows * cols, 0);
  double scale = 0.0;
  for (const auto& m : mats) scale = std::max(scale, m.norm());
  for (const auto& m : mats) {
    if (q.cols() == rows * cols) break;
    extend_orthonormal(q, vec(m), kSpanTol, scale);
  }
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < q.cols(); ++k) out.push_back(unvec(q.col(k), rows, cols));
  return out;
}

CMatrix range_projector(const CMatrix& wide) {
  const CMatrix u = orthonormal_basis(wide, kSpanTol);
  return u * u.adjoint();
}

CVector project_onto(const std::vector<CMatrix>& onb, const CMatrix& m) {
  CVector c(static_cast<Eigen::Index>(onb.size()));
  for (size_t k = 0; k < onb.size(); ++k) c(static_cast<Eigen::Index>(k)) = hs_inner(m, onb[k]);
  return c;
}

CMatrix combine(const std::vector<CMatrix>& onb, const CVector& c, Eigen::Index rows,
                Eigen::Index cols) {
  CMatrix m = CMatrix::Zero(rows, cols);
  for (size_t k = 0; k < onb.size(); ++k) m += c(static_cast<Eigen::Index>(k)) * onb[k];
  return m;
}

double residual_onto(const std::vector<CMatrix>& onb, const CMatrix& m, Eigen::Index rows,
                     Eigen::Index cols) {
  return (m - combine(onb, project_onto(onb, m), rows, cols)).norm();
}

CMatrix twisted_product(const CMatrix& x, const CMatrix& y, Eigen::Index p, Eigen::Index q) {
  const auto a = x.topLeftCorner(p, p), z = x.topRightCorner(p, q);
  const auto w = x.bottomLeftCorner(q, p), b = x.bottomRightCorner(q, q);
  const auto a2 = y.topLeftCorner(p, p), z2 = y.topRightCorner(p, q);
  const auto w2 = y.bottomLeftCorner(q, p), b2 = y.bottomRightCorner(q, q);
  CMatrix out(p + q, p + q);
  out.topLeftCorner(p, p) = -a * a2 + z * w2;
  out.topRightCorner(p, q) = -a * z2 - z * b2;
  out.bottomLeftCorner(q, p) = -w * a2 - b * w2;
  out.bottomRightCorner(q, q) = w * z2 - b * b2;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// StandardEmbedding

StandardEmbedding build_embedding(const TernarySpace& m) {
  if (!m.has_blocks()) {
    throw NormUnavailable("build_embedding requires the block presentation");
  }
  StandardEmbedding e;
  e.base_ = m;
  Eigen::Index off = 0;
  for (const auto& bl : m.blocks()) {
    EmbeddingBlock eb;
    eb.sign = bl.sign();
    eb.rule = bl.sign() > 0 ? ProductRule::Linking : ProductRule::Anti;
    eb.p = bl.rows();
    eb.q = bl.cols();
    std::vector<CMatrix> xy, uv;
    CMatrix ranges(eb.p, eb.q * bl.dim()), coranges(eb.q, eb.p * bl.dim());
    for (Eigen::Index i = 0; i < bl.dim(); ++i) {
      const CMatrix& x = bl.basis()[static_cast<size_t>(i)];
      ranges.middleCols(i * eb.q, eb.q) = x;
      coranges.middleCols(i * eb.p, eb.p) = x.adjoint();
      for (const auto& y : bl.basis()) {
        xy.push_back(x * y.adjoint());
        uv.push_back(x.adjoint() * y);
      }
    }
    eb.l_basis = orthonormal_span(xy, eb.p, eb.p);
    eb.r_basis = orthonormal_span(uv, eb.q, eb.q);
    eb.l_unit = range_projector(ranges);
    eb.r_unit = range_projector(coranges);
    if (residual_onto(eb.l_basis, eb.l_unit, eb.p, eb.p) > 1e-8 ||
        residual_onto(eb.r_basis, eb.r_unit, eb.q, eb.q) > 1e-8) {
      throw InvalidInput("build_embedding: corner algebras are missing their units");
    }
    eb.l_off = off;
    eb.m_off = eb.l_off + eb.dl();
    eb.mbar_off = eb.m_off + bl.dim();
    eb.r_off = eb.mbar_off + bl.dim();
    off = eb.r_off + eb.dr();
    for (Eigen::Index k = 0; k < eb.dl(); ++k) e.corners_.indices[0].push_back(eb.l_off + k);
    for (Eigen::Index k = 0; k < bl.dim(); ++k) e.corners_.indices[1].push_back(eb.m_off + k);
    for (Eigen::Index k = 0; k < bl.dim(); ++k) e.corners_.indices[2].push_back(eb.mbar_off + k);
    for (Eigen::Index k = 0; k < eb.dr(); ++k) e.corners_.indices[3].push_back(eb.r_off + k);
    e.blocks_.push_back(std::move(eb));
  }
  e.dim_ = off;
  e.corners_.total = off;
  e.algebra_ = AssocAlgebra::from_products(off, [&e](Eigen::Index i, Eigen::Index j) {
    return emb_mul(e, e.basis_element(i), e.basis_element(j)).coords;
  });
  CMatrix star(off, off);
  for (Eigen::Index k = 0; k < off; ++k) star.col(k) = emb_star(e, e.basis_element(k)).coords;
  e.algebra_.set_involution(star);
  return e;
}

CMatrix StandardEmbedding::block_matrix(const EmbeddingElement& a, size_t b) const {
  if (a.coords.size() != dim_) throw ShapeError("element does not belong to this embedding");
  const EmbeddingBlock& eb = blocks_.at(b);
  const SignedBlock& bl = base_.blocks()[b];
  const Eigen::Index p = eb.p, q = eb.q, dm = bl.dim();
  CMatrix x = CMatrix::Zero(p + q, p + q);
  x.topLeftCorner(p, p) = combine(eb.l_basis, a.coords.segment(eb.l_off, eb.dl()), p, p);
  x.topRightCorner(p, q) = bl.to_matrix(a.coords.segment(eb.m_off, dm));
  // lower-left = sum_k gamma_k B_k* = (sum_k conj(gamma_k) B_k)*
  x.bottomLeftCorner(q, p) = bl.to_matrix(a.coords.segment(eb.mbar_off, dm).conjugate()).adjoint();
  x.bottomRightCorner(q, q) = combine(eb.r_basis, a.coords.segment(eb.r_off, eb.dr()), q, q);
  return x;
}

EmbeddingElement StandardEmbedding::from_block_matrices(const std::vector<CMatrix>& mats) const {
  if (mats.size() != blocks_.size()) throw ShapeError("from_block_matrices: block count mismatch");
  CVector c(dim_);
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const EmbeddingBlock& eb = blocks_[b];
    const SignedBlock& bl = base_.blocks()[b];
    const CMatrix& x = mats[b];
    if (x.rows() != eb.p + eb.q || x.cols() != eb.p + eb.q) {
      throw ShapeError("from_block_matrices: block shape mismatch");
    }
    c.segment(eb.l_off, eb.dl()) = project_onto(eb.l_basis, x.topLeftCorner(eb.p, eb.p));
    c.segment(eb.m_off, bl.dim()) = bl.to_coords(x.topRightCorner(eb.p, eb.q));
    c.segment(eb.mbar_off, bl.dim()) =
        bl.to_coords(CMatrix(x.bottomLeftCorner(eb.q, eb.p).adjoint())).conjugate();
    c.segment(eb.r_off, eb.dr()) = project_onto(eb.r_basis, x.bottomRightCorner(eb.q, eb.q));
  }
  return EmbeddingElement(c);
}

double StandardEmbedding::span_residual(const std::vector<CMatrix>& mats) const {
  double worst = 0.0;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const EmbeddingBlock& eb = blocks_[b];
    const SignedBlock& bl = base_.blocks()[b];
    const CMatrix& x = mats.at(b);
    worst = std::max(worst, residual_onto(eb.l_basis, x.topLeftCorner(eb.p, eb.p), eb.p, eb.p));
    worst = std::max(worst, bl.span_residual(x.topRightCorner(eb.p, eb.q)));
    worst = std::max(worst, bl.span_residual(CMatrix(x.bottomLeftCorner(eb.q, eb.p).adjoint())));
    worst = std::max(worst, residual_onto(eb.r_basis, x.bottomRightCorner(eb.q, eb.q), eb.q, eb.q));
  }
  return worst;
}

double StandardEmbedding::norm(const EmbeddingElement& a) const {
  double n = 0.0;
  for (size_t b = 0; b < blocks_.size(); ++b) n = std::max(n, op_norm(block_matrix(a, b)));
  return n;
}

EmbeddingElement StandardEmbedding::basis_element(Eigen::Index i) const {
  CVector c = CVector::Zero(dim_);
  c(i) = 1.0;
  return EmbeddingElement(c);
}

EmbeddingElement StandardEmbedding::corner(const TernaryElement& x) const {
  if (x.size() != base_.dim()) throw ShapeError("corner: element does not belong to the base");
  CVector c = CVector::Zero(dim_);
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Eigen::Index dm = base_.blocks()[b].dim();
    c.segment(blocks_[b].m_off, dm) = x.coords.segment(base_.block_offset(b), dm);
  }
  return EmbeddingElement(c);
}

EmbeddingElement StandardEmbedding::conj_corner(const TernaryElement& x) const {
  if (x.size() != base_.dim()) throw ShapeError("conj_corner: element does not belong to the base");
  CVector c = CVector::Zero(dim_);
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Eigen::Index dm = base_.blocks()[b].dim();
    c.segment(blocks_[b].mbar_off, dm) = x.coords.segment(base_.block_offset(b), dm).conjugate();
  }
  return EmbeddingElement(c);
}

TernaryElement StandardEmbedding::upper_right(const EmbeddingElement& a) const {
  CVector c(base_.dim());
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Eigen::Index dm = base_.blocks()[b].dim();
    c.segment(base_.block_offset(b), dm) = a.coords.segment(blocks_[b].m_off, dm);
  }
  return TernaryElement(c);
}

TernaryElement StandardEmbedding::lower_left(const EmbeddingElement& a) const {
  CVector c(base_.dim());
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Eigen::Index dm = base_.blocks()[b].dim();
    c.segment(base_.block_offset(b), dm) = a.coords.segment(blocks_[b].mbar_off, dm).conjugate();
  }
  return TernaryElement(c);
}

EmbeddingElement StandardEmbedding::e1() const {
  std::vector<CMatrix> mats;
  for (const auto& eb : blocks_) {
    CMatrix x = CMatrix::Zero(eb.p + eb.q, eb.p + eb.q);
    x.topLeftCorner(eb.p, eb.p) = static_cast<double>(eb.sign) * eb.l_unit;
    mats.push_back(x);
  }
  return from_block_matrices(mats);
}

EmbeddingElement StandardEmbedding::e2() const {
  std::vector<CMatrix> mats;
  for (const auto& eb : blocks_) {
    CMatrix x = CMatrix::Zero(eb.p + eb.q, eb.p + eb.q);
    x.bottomRightCorner(eb.q, eb.q) = static_cast<double>(eb.sign) * eb.r_unit;
    mats.push_back(x);
  }
  return from_block_matrices(mats);
}

// ---------------------------------------------------------------------------
// Product, involution, unit

EmbeddingElement emb_mul(const StandardEmbedding& e, const EmbeddingElement& a,
                         const EmbeddingElement& b) {
  std::vector<CMatrix> out;
  for (size_t k = 0; k < e.blocks().size(); ++k) {
    const EmbeddingBlock& eb = e.blocks()[k];
    const CMatrix x = e.block_matrix(a, k);
    const CMatrix y = e.block_matrix(b, k);
    out.push_back(eb.rule == ProductRule::Linking ? CMatrix(x * y) : twisted_product(x, y, eb.p, eb.q));
  }
  return e.from_block_matrices(out);
}

EmbeddingElement emb_star(const StandardEmbedding& e, const EmbeddingElement& a) {
  std::vector<CMatrix> out;
  for (size_t k = 0; k < e.blocks().size(); ++k) out.push_back(e.block_matrix(a, k).adjoint());
  return e.from_block_matrices(out);
}

EmbeddingElement identity_of(const StandardEmbedding& e) {
  std::vector<CMatrix> mats;
  for (const auto& eb : e.blocks()) {
    CMatrix x = CMatrix::Zero(eb.p + eb.q, eb.p + eb.q);
    const double s = eb.rule == ProductRule::Linking ? 1.0 : -1.0;
    x.topLeftCorner(eb.p, eb.p) = s * eb.l_unit;
    x.bottomRightCorner(eb.q, eb.q) = s * eb.r_unit;
    mats.push_back(x);
  }
  return e.from_block_matrices(mats);
}

// ---------------------------------------------------------------------------
// pi representation

namespace {

std::vector<Eigen::Index> column_ideal_index(const StandardEmbedding& e, bool r_part) {
  std::vector<Eigen::Index> idx;
  for (size_t b = 0; b < e.blocks().size(); ++b) {
    const EmbeddingBlock& eb = e.blocks()[b];
    const Eigen::Index off = r_part ? eb.r_off : eb.m_off;
    const Eigen::Index n = r_part ? eb.dr() : e.base().blocks()[b].dim();
    for (Eigen::Index k = 0; k < n; ++k) idx.push_back(off + k);
  }
  return idx;
}

}  // namespace

PiOperator pi_represent(const StandardEmbedding& e, const EmbeddingElement& a) {
  PiOperator pi;
  pi.m_index = column_ideal_index(e, false);
  pi.r_index = column_ideal_index(e, true);
  std::vector<Eigen::Index> all = pi.m_index;
  all.insert(all.end(), pi.r_index.begin(), pi.r_index.end());
  const CMatrix la = e.algebra().left_mult(a.coords);
  const auto n = static_cast<Eigen::Index>(all.size());
  pi.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) pi.matrix(i, j) = la(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
  }
  return pi;
}

double pi_injectivity_margin(const StandardEmbedding& e) {
  if (e.dim() == 0) return 1.0;
  CMatrix k;
  for (Eigen::Index i = 0; i < e.dim(); ++i) {
    const CMatrix m = pi_represent(e, e.basis_element(i)).matrix;
    if (i == 0) k.resize(m.size(), e.dim());
    k.col(i) = vec(m);
  }
  Eigen::JacobiSVD<CMatrix> svd(k);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

namespace {

struct ColumnSpace {
  const StandardEmbedding& e;
  const PiOperator& pi;

  Eigen::Index m_dim() const { return static_cast<Eigen::Index>(pi.m_index.size()); }
  Eigen::Index size() const { return pi.matrix.rows(); }

  double r_norm(const CVector& v) const {
    double n = 0.0;
    Eigen::Index pos = m_dim();
    for (const auto& eb : e.blocks()) {
      n = std::max(n, op_norm(combine(eb.r_basis, v.segment(pos, eb.dr()), eb.q, eb.q)));
      pos += eb.dr();
    }
    return n;
  }

  double norm(const CVector& v) const {
    const double f = e.base().norm(TernaryElement(CVector(v.head(m_dim()))));
    const double b = r_norm(v);
    return std::sqrt(f * f + b * b);
  }

  double ratio(const CVector& v) const {
    const double d = norm(v);
    return d > 0.0 ? norm(pi.matrix * v) / d : 0.0;
  }
};

}  // namespace

BoundsReport pi_norm_lower_bounds(const StandardEmbedding& e, const EmbeddingElement& a,
                                  std::uint64_t seed, double tol) {
  BoundsReport rep;
  const PiOperator pi = pi_represent(e, a);
  const ColumnSpace space{e, pi};
  const TernarySpace& base = e.base();
  Rng rng = make_rng(seed, 0x7069);

  size_t best_a = 0, best_g = 0;
  for (size_t b = 0; b < e.blocks().size(); ++b) {
    const EmbeddingBlock& eb = e.blocks()[b];
    const CMatrix x = e.block_matrix(a, b);
    const double na = op_norm(x.topLeftCorner(eb.p, eb.p));
    const double nb = op_norm(x.bottomRightCorner(eb.q, eb.q));
    const double nf = op_norm(x.topRightCorner(eb.p, eb.q));
    const double ng = op_norm(x.bottomLeftCorner(eb.q, eb.p));
    if (na > rep.norm_a) { rep.norm_a = na; best_a = b; }
    if (ng > rep.norm_g) { rep.norm_g = ng; best_g = b; }
    rep.norm_b = std::max(rep.norm_b, nb);
    rep.norm_f = std::max(rep.norm_f, nf);
  }

  auto m_vector = [&](size_t b, const CMatrix& f) {
    std::vector<CMatrix> mats;
    for (size_t k = 0; k < base.blocks().size(); ++k) {
      const auto& bl = base.blocks()[k];
      mats.push_back(k == b ? f : CMatrix(CMatrix::Zero(bl.rows(), bl.cols())));
    }
    CVector v = CVector::Zero(space.size());
    v.head(space.m_dim()) = base.from_block_matrices(mats).coords;
    return v;
  };

  if (base.dim() > 0 && rep.norm_g > 0.0) {
    // f' = g / ||g|| gives ||r(g, f')|| = ||g* g|| / ||g|| = ||g||
    const EmbeddingBlock& eb = e.blocks()[best_g];
    const CMatrix g = e.block_matrix(a, best_g).bottomLeftCorner(eb.q, eb.p).adjoint();
    rep.witness_g = space.ratio(m_vector(best_g, g));
  }

  {
    // B' = unit of R: f . B' = f and B o B' = B
    CVector v = CVector::Zero(space.size());
    Eigen::Index pos = space.m_dim();
    for (const auto& eb : e.blocks()) {
      v.segment(pos, eb.dr()) = project_onto(eb.r_basis, eb.r_unit);
      pos += eb.dr();
    }
    if (v.norm() > 0.0) {
      const double r = space.ratio(v);
      rep.witness_f = r;
      rep.witness_b = r;
    }
  }

  if (base.dim() > 0 && rep.norm_a > 0.0) {
    // power iteration f <- A* A f inside M maximizes ||A . f|| / ||f||
    const EmbeddingBlock& eb = e.blocks()[best_a];
    const SignedBlock& bl = base.blocks()[best_a];
    const CMatrix alpha = e.block_matrix(a, best_a).topLeftCorner(eb.p, eb.p);
    const CMatrix gram = alpha.adjoint() * alpha;
    for (int start = 0; start < 4; ++start) {
      CMatrix f = bl.to_matrix(random_cvector(bl.dim(), rng));
      for (int it = 0; it < 300; ++it) {
        f = bl.to_matrix(bl.to_coords(gram * f));
        const double n = op_norm(f);
        if (n == 0.0) break;
        f /= n;
        rep.witness_a = std::max(rep.witness_a, space.ratio(m_vector(best_a, f)));
      }
    }
  }

  rep.estimate = std::max({rep.witness_a, rep.witness_b, rep.witness_f, rep.witness_g});
  for (int s = 0; s < 64 && space.size() > 0; ++s) {
    rep.estimate = std::max(rep.estimate, space.ratio(random_cvector(space.size(), rng)));
  }
  const double target = std::max({rep.norm_a, rep.norm_b, rep.norm_f, rep.norm_g});
  rep.certified = rep.witness_a >= rep.norm_a - tol && rep.witness_b >= rep.norm_b - tol &&
                  rep.witness_f >= rep.norm_f - tol && rep.witness_g >= rep.norm_g - tol &&
                  rep.estimate >= target - tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Peirce splitting

PeirceSplit peirce_split(const AssocAlgebra& algebra, const CornerLayout& layout,
                         const CMatrix& s, double tol) {
  if (s.rows() != algebra.dim()) throw ShapeError("peirce_split: subspace has wrong length");
  const CMatrix q = orthonormal_basis(s);
  if (!is_two_sided_ideal(algebra, q, tol)) throw NotAnIdeal("peirce_split: subspace is not an ideal");
  PeirceSplit out;
  Eigen::Index total = 0;
  for (int c = 0; c < 4; ++c) {
    const auto& idx = layout.indices[static_cast<size_t>(c)];
    std::vector<bool> inside(static_cast<size_t>(algebra.dim()), false);
    for (auto i : idx) inside[static_cast<size_t>(i)] = true;
    CMatrix outside_rows(algebra.dim() - static_cast<Eigen::Index>(idx.size()), q.cols());
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < algebra.dim(); ++i) {
      if (!inside[static_cast<size_t>(i)]) outside_rows.row(r++) = q.row(i);
    }
    CMatrix corner;
    if (q.cols() == 0) {
      corner = CMatrix(algebra.dim(), 0);
    } else if (outside_rows.rows() == 0) {
      corner = q;
    } else {
      const CMatrix n = null_space(outside_rows, 1e-9);
      corner = n.cols() ? orthonormal_basis(q * n) : CMatrix(algebra.dim(), 0);
    }
    total += corner.cols();
    out.corners[static_cast<size_t>(c)] = corner;
  }
  if (total != q.cols()) {
    throw PreconditionFailed("peirce_split: corner intersections do not span the ideal");
  }
  const auto& mid = layout.indices[1];
  const CMatrix& cm = out.corners[1];
  out.ternary_part.resize(static_cast<Eigen::Index>(mid.size()), cm.cols());
  for (size_t k = 0; k < mid.size(); ++k) out.ternary_part.row(static_cast<Eigen::Index>(k)) = cm.row(mid[k]);
  return out;
}

PeirceSplit peirce_split(const StandardEmbedding& e, const CMatrix& s, double tol) {
  return peirce_split(e.algebra(), e.corners(), s, tol);
}

// ---------------------------------------------------------------------------
// C*-identity witness

double cstar_gap(const StandardEmbedding& e, const EmbeddingElement& a) {
  const double na = e.norm(a);
  return std::abs(e.norm(emb_mul(e, emb_star(e, a), a)) - na * na);
}

namespace {

/// Element supported on block b with every corner scaled into the unit ball.
EmbeddingElement clamp_corners(const StandardEmbedding& e, size_t b, CMatrix x) {
  const EmbeddingBlock& eb = e.blocks()[b];
  auto clamp = [](auto&& corner) {
    const double n = op_norm(corner);
    if (n > 1.0) corner /= n;
  };
  CMatrix tl = x.topLeftCorner(eb.p, eb.p), tr = x.topRightCorner(eb.p, eb.q);
  CMatrix bl = x.bottomLeftCorner(eb.q, eb.p), br = x.bottomRightCorner(eb.q, eb.q);
  clamp(tl);
  clamp(tr);
  clamp(bl);
  clamp(br);
  x << tl, tr, bl, br;
  std::vector<CMatrix> mats;
  for (size_t k = 0; k < e.blocks().size(); ++k) {
    const auto& other = e.blocks()[k];
    mats.push_back(k == b ? x : CMatrix(CMatrix::Zero(other.p + other.q, other.p + other.q)));
  }
  return e.from_block_matrices(mats);
}

}  // namespace

std::optional<CStarWitness> cstar_identity_witness(const StandardEmbedding& e, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0x63737472);
  std::vector<std::pair<double, EmbeddingElement>> pool;
  for (size_t b = 0; b < e.blocks().size(); ++b) {
    const EmbeddingBlock& eb = e.blocks()[b];
    if (eb.rule != ProductRule::Anti) continue;
    const SignedBlock& bl = e.base().blocks()[b];
    const Eigen::Index n = eb.p + eb.q;
    // [[x x*, x], [0, 0]] for a partial isometry x of M
    for (int t = 0; t < 8; ++t) {
      const CMatrix x0 = bl.to_matrix(random_cvector(bl.dim(), rng));
      Eigen::JacobiSVD<CMatrix> svd(x0, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const auto& s = svd.singularValues();
      Eigen::Index rank = 0;
      while (rank < s.size() && s(rank) > 1e-8 * s(0)) ++rank;
      if (rank == 0) continue;
      CMatrix x = svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
      x = bl.to_matrix(bl.to_coords(x));
      CMatrix full = CMatrix::Zero(n, n);
      full.topLeftCorner(eb.p, eb.p) = x * x.adjoint();
      full.topRightCorner(eb.p, eb.q) = x;
      const EmbeddingElement a = clamp_corners(e, b, full);
      pool.emplace_back(cstar_gap(e, a), a);
    }
    for (int t = 0; t < 32; ++t) {
      CVector c = CVector::Zero(e.dim());
      c.segment(eb.l_off, eb.r_off + eb.dr() - eb.l_off) =
          random_cvector(eb.r_off + eb.dr() - eb.l_off, rng);
      const EmbeddingElement raw(c);
      CMatrix x = e.block_matrix(raw, b);
      auto unit = [](auto&& corner) {
        const double nn = op_norm(corner);
        if (nn > 0.0) corner /= nn;
      };
      CMatrix tl = x.topLeftCorner(eb.p, eb.p), tr = x.topRightCorner(eb.p, eb.q);
      CMatrix bl2 = x.bottomLeftCorner(eb.q, eb.p), br = x.bottomRightCorner(eb.q, eb.q);
      unit(tl);
      unit(tr);
      unit(bl2);
      unit(br);
      x << tl, tr, bl2, br;
      const EmbeddingElement a = clamp_corners(e, b, x);
      pool.emplace_back(cstar_gap(e, a), a);
    }
  }
  if (pool.empty()) return std::nullopt;
  std::sort(pool.begin(), pool.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  if (pool.size() > 4) pool.resize(4);

  // local refinement: random perturbations that stay in the corner unit balls
  for (auto& [gap, a] : pool) {
    size_t block = 0;
    for (size_t b = 0; b < e.blocks().size(); ++b) {
      const auto& eb = e.blocks()[b];
      if (a.coords.segment(eb.l_off, eb.r_off + eb.dr() - eb.l_off).norm() > 0.0) block = b;
    }
    const auto& eb = e.blocks()[block];
    double step = 0.1;
    for (int it = 0; it < 300 && step > 1e-6; ++it) {
      EmbeddingElement trial = a;
      trial.coords.segment(eb.l_off, eb.r_off + eb.dr() - eb.l_off) +=
          step * random_cvector(eb.r_off + eb.dr() - eb.l_off, rng);
      trial = clamp_corners(e, block, e.block_matrix(trial, block));
      const double g = cstar_gap(e, trial);
      if (g > gap) {
        gap = g;
        a = trial;
      } else {
        step *= 0.97;
      }
    }
  }
  std::sort(pool.begin(), pool.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  const auto& [gap, a] = pool.front();
  if (!(gap > 0.1)) return std::nullopt;
  CStarWitness w;
  w.element = a;
  w.gap = gap;
  w.norm_star_product = e.norm(emb_mul(e, emb_star(e, a), a));
  const double na = e.norm(a);
  w.norm_squared = na * na;
  return w;
}

}  // namespace ternlab
