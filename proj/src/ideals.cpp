// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/ideals.hpp"

#include <algorithm>
#include <cmath>

#include "ternlab/errors.hpp"
#include "ternlab/random.hpp"

namespace ternlab {

IdealResiduals ideal_residuals(const TernarySpace& m, const CMatrix& s) {
  IdealResiduals r;
  if (s.rows() != m.dim()) throw ShapeError("ideal_residuals: subspace has wrong length");
  const CMatrix q = orthonormal_basis(s);
  if (q.cols() == 0 || q.cols() == m.dim()) return r;
  double scale = 0.0;
  auto worse = [&](double& slot, const TernaryElement& t) {
    scale = std::max(scale, t.coords.norm());
    slot = std::max(slot, projection_residual(q, t.coords));
  };
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const TernaryElement sk(q.col(k));
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
      const TernaryElement bi = m.basis_element(i);
      for (Eigen::Index j = 0; j < m.dim(); ++j) {
        const TernaryElement bj = m.basis_element(j);
        worse(r.mmi, triple(m, bi, bj, sk));
        worse(r.imm, triple(m, sk, bi, bj));
        worse(r.mim, triple(m, bi, sk, bj));
      }
    }
  }
  const double ref = std::max(1.0, scale);
  r.mmi /= ref;
  r.imm /= ref;
  r.mim /= ref;
  return r;
}

bool is_ideal(const TernarySpace& m, const CMatrix& s, double tol) {
  return ideal_residuals(m, s).max() <= tol;
}

TernaryIdeal generated_ideal(const TernarySpace& m, const CMatrix& generators, double tol) {
  if (generators.rows() != m.dim()) throw ShapeError("generated_ideal: generators have wrong length");
  const Eigen::Index d = m.dim();
  CMatrix q(d, 0);
  double scale = 0.0;
  for (Eigen::Index k = 0; k < generators.cols(); ++k) scale = std::max(scale, generators.col(k).norm());
  for (Eigen::Index k = 0; k < generators.cols(); ++k) extend_orthonormal(q, generators.col(k), tol, scale);
  for (Eigen::Index done = 0; done < q.cols() && q.cols() < d; ++done) {
    const TernaryElement s(CVector(q.col(done)));
    for (Eigen::Index i = 0; i < d && q.cols() < d; ++i) {
      const TernaryElement bi = m.basis_element(i);
      for (Eigen::Index j = 0; j < d && q.cols() < d; ++j) {
        const TernaryElement bj = m.basis_element(j);
        extend_orthonormal(q, triple(m, bi, bj, s).coords, tol, 1.0);
        extend_orthonormal(q, triple(m, s, bi, bj).coords, tol, 1.0);
        extend_orthonormal(q, triple(m, bi, s, bj).coords, tol, 1.0);
      }
    }
  }
  return TernaryIdeal{m, q};
}

TernaryIdeal make_ideal(const TernarySpace& m, const CMatrix& s, double tol) {
  if (!is_ideal(m, s, tol)) throw NotAnIdeal("subspace is not an ideal of the ternary ring");
  return TernaryIdeal{m, orthonormal_basis(s)};
}

CMatrix embed_ideal(const StandardEmbedding& e, const TernaryIdeal& ideal, double tol) {
  const TernarySpace& m = e.base();
  if (ideal.basis.rows() != m.dim()) throw ShapeError("embed_ideal: ideal belongs to another space");
  if (!is_ideal(m, ideal.basis, tol)) throw NotAnIdeal("embed_ideal: input is not an ideal");
  const Eigen::Index k = ideal.basis.cols();
  if (k == 0) return CMatrix(e.dim(), 0);
  std::vector<TernaryElement> xs;
  for (Eigen::Index c = 0; c < k; ++c) xs.emplace_back(CVector(ideal.basis.col(c)));

  auto zero_blocks = [&e]() {
    std::vector<CMatrix> mats;
    for (const auto& eb : e.blocks()) mats.push_back(CMatrix::Zero(eb.p + eb.q, eb.p + eb.q));
    return mats;
  };

  CMatrix cols(e.dim(), 0);
  auto push = [&cols](const CVector& v) {
    cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
    cols.col(cols.cols() - 1) = v;
  };
  for (const auto& x : xs) {
    push(e.corner(x).coords);
    push(e.conj_corner(x).coords);
    for (const auto& y : xs) {
      auto upper = zero_blocks();
      auto lower = zero_blocks();
      for (size_t b = 0; b < e.blocks().size(); ++b) {
        const auto& eb = e.blocks()[b];
        const CMatrix xb = m.block_matrix(x, b);
        const CMatrix yb = m.block_matrix(y, b);
        upper[b].topLeftCorner(eb.p, eb.p) = xb * yb.adjoint();
        lower[b].bottomRightCorner(eb.q, eb.q) = xb.adjoint() * yb;
      }
      push(e.from_block_matrices(upper).coords);
      push(e.from_block_matrices(lower).coords);
    }
  }
  CMatrix s = orthonormal_basis(cols, 1e-10);
  if (!is_two_sided_ideal(e.algebra(), s, tol)) {
    throw NotAnIdeal("embed_ideal: image is not an ideal of the embedding");
  }
  return s;
}

Quotient quotient(const TernarySpace& m, const TernaryIdeal& j, double tol) {
  if (j.basis.rows() != m.dim()) throw ShapeError("quotient: ideal belongs to another space");
  Quotient q;
  q.well_defined_residual = ideal_residuals(m, j.basis).max();
  if (q.well_defined_residual > tol) throw NotAnIdeal("quotient: subspace is not an ideal");
  q.complement = orthogonal_complement(orthonormal_basis(j.basis), m.dim());
  const Eigen::Index r = q.complement.cols();
  StructureConstants c(r);
  std::vector<TernaryElement> lifts;
  for (Eigen::Index i = 0; i < r; ++i) lifts.emplace_back(CVector(q.complement.col(i)));
  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index b = 0; b < r; ++b) {
      for (Eigen::Index k = 0; k < r; ++k) {
        const CVector t = q.complement.adjoint() * triple(m, lifts[a], lifts[b], lifts[k]).coords;
        for (Eigen::Index l = 0; l < r; ++l) c(a, b, k, l) = t(l);
      }
    }
  }
  q.space = TernarySpace::from_structure(std::move(c), m.name().empty() ? "" : m.name() + "/J");
  return q;
}

TernaryElement quotient_class(const Quotient& q, const TernaryElement& f) {
  return TernaryElement(q.complement.adjoint() * f.coords);
}

TernaryElement quotient_lift(const Quotient& q, const TernaryElement& c) {
  return TernaryElement(q.complement * c.coords);
}

namespace {

/// Blocks of an element stacked into one Hilbert-Schmidt vector.
CVector stacked(const TernarySpace& m, const TernaryElement& x) {
  Eigen::Index n = 0;
  for (const auto& bl : m.blocks()) n += bl.rows() * bl.cols();
  CVector v(n);
  Eigen::Index pos = 0;
  for (size_t b = 0; b < m.blocks().size(); ++b) {
    const auto& bl = m.blocks()[b];
    v.segment(pos, bl.rows() * bl.cols()) = vec(m.block_matrix(x, b));
    pos += bl.rows() * bl.cols();
  }
  return v;
}

}  // namespace

QuotientNormReport quotient_norm(const TernarySpace& m, const TernaryIdeal& j,
                                 const TernaryElement& f, std::uint64_t seed, int restarts) {
  if (!m.has_blocks()) throw NormUnavailable("quotient_norm requires the block presentation");
  if (f.size() != m.dim() || j.basis.rows() != m.dim()) throw ShapeError("quotient_norm: size mismatch");
  QuotientNormReport rep;
  const Eigen::Index k = j.basis.cols();
  const CVector fv = stacked(m, f);
  CMatrix bj(fv.size(), k);
  for (Eigen::Index c = 0; c < k; ++c) bj.col(c) = stacked(m, TernaryElement(CVector(j.basis.col(c))));

  auto objective = [&](const CVector& t) {
    return m.norm(TernaryElement(CVector(f.coords - j.basis * t)));
  };

  // start from the Hilbert-Schmidt projection onto J
  CVector best = k ? least_squares(bj, fv).x : CVector(0);
  double best_val = objective(best);
  Rng rng = make_rng(seed, 0x71756f74);
  const double fnorm = std::max(m.norm(f), 1e-300);
  for (int r = 0; r < restarts && k > 0; ++r) {
    CVector t = best + (0.1 * fnorm / std::sqrt(static_cast<double>(k))) * random_cvector(k, rng);
    double val = objective(t);
    double step = 0.05 * fnorm;
    for (int it = 0; it < 400 && step > 1e-12 * fnorm; ++it) {
      CVector dir = random_cvector(k, rng);
      dir /= dir.norm();
      const CVector a = t + step * dir, b = t - step * dir;
      const double va = objective(a), vb = objective(b);
      if (va < val && va <= vb) {
        t = a;
        val = va;
      } else if (vb < val) {
        t = b;
        val = vb;
      } else {
        step *= 0.85;
      }
    }
    if (val < best_val) {
      best_val = val;
      best = t;
    }
  }
  rep.upper = best_val;
  rep.best_j = j.basis * best;

  // dual certificate: top singular pair of the residual, made orthogonal to J
  const TernaryElement res(CVector(f.coords - rep.best_j));
  size_t top = 0;
  double top_val = -1.0;
  for (size_t b = 0; b < m.blocks().size(); ++b) {
    const double n = op_norm(m.block_matrix(res, b));
    if (n > top_val) {
      top_val = n;
      top = b;
    }
  }
  if (top_val <= 0.0) return rep;
  Eigen::JacobiSVD<CMatrix> svd(m.block_matrix(res, top), Eigen::ComputeThinU | Eigen::ComputeThinV);
  CVector w = CVector::Zero(fv.size());
  {
    Eigen::Index pos = 0;
    for (size_t b = 0; b < top; ++b) pos += m.blocks()[b].rows() * m.blocks()[b].cols();
    const auto& bl = m.blocks()[top];
    w.segment(pos, bl.rows() * bl.cols()) =
        vec(svd.matrixU().col(0) * svd.matrixV().col(0).adjoint());
  }
  if (k > 0) w -= bj * least_squares(bj, w).x;
  double trace_norm = 0.0;
  Eigen::Index pos = 0;
  for (const auto& bl : m.blocks()) {
    const CMatrix wb = unvec(w.segment(pos, bl.rows() * bl.cols()), bl.rows(), bl.cols());
    trace_norm += Eigen::JacobiSVD<CMatrix>(wb).singularValues().sum();
    pos += bl.rows() * bl.cols();
  }
  if (trace_norm > 0.0) rep.lower = std::abs(w.dot(fv)) / trace_norm;
  return rep;
}

}  // namespace ternlab
