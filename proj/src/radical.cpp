// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/radical.hpp"

#include <algorithm>
#include <cmath>

#include "ternlab/errors.hpp"
#include "ternlab/ideals.hpp"
#include "ternlab/random.hpp"

namespace ternlab {

namespace {

/// Shared solve for y - x = P y = Q y.
QuasiInverseResult stacked_solve(const CMatrix& p, const CMatrix& q, const CVector& x, double tol) {
  const Eigen::Index n = x.size();
  QuasiInverseResult out;
  if (n == 0) {
    out.certificate = QuasiInverseCertificate{CVector(0), 0.0, 0.0};
    return out;
  }
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix sys(2 * n, n);
  sys.topRows(n) = id - p;
  sys.bottomRows(n) = id - q;
  CVector rhs(2 * n);
  rhs << x, x;
  const LinearSolution sol = least_squares(sys, rhs);
  out.relative_residual = sol.relative_residual();
  if (out.relative_residual <= tol) {
    QuasiInverseCertificate c;
    c.y = sol.x;
    c.residual_left = (sol.x - x - p * sol.x).norm();
    c.residual_right = (sol.x - x - q * sol.x).norm();
    out.certificate = std::move(c);
  } else {
    out.borderline = out.relative_residual <= kBorderlineHigh;
  }
  return out;
}

/// Null space of the trace form, as orthonormal columns.
CMatrix trace_form_kernel(const AssocAlgebra& a, double tol) {
  const Eigen::Index n = a.dim();
  if (n == 0) return CMatrix(0, 0);
  CVector traces(n);
  for (Eigen::Index k = 0; k < n; ++k) traces(k) = a.left(k).trace();
  // G(i, j) = tr(L_{b_i b_j}) = sum_k (b_i b_j)_k tr(L_{b_k})
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g.row(i) = traces.transpose() * a.left(i);
  if (g.cwiseAbs().maxCoeff() == 0.0) return CMatrix::Identity(n, n);
  return null_space(g.transpose(), tol);
}

}  // namespace

QuasiInverseResult quasi_inverse_assoc(const AssocAlgebra& a, const CVector& x, const CVector& u,
                                       double tol) {
  if (x.size() != a.dim() || u.size() != a.dim()) throw ShapeError("quasi_inverse_assoc: size mismatch");
  // y - x = (x u) y = y (u x)
  return stacked_solve(a.left_mult(a.mul(x, u)), a.right_mult(a.mul(u, x)), x, tol);
}

QuasiInverseResult quasi_inverse_ternary(const TernarySpace& m, const TernaryElement& x,
                                         const TernaryElement& u, double tol) {
  if (x.size() != m.dim() || u.size() != m.dim()) throw ShapeError("quasi_inverse_ternary: size mismatch");
  // y - x = [x u y] = [y u x]
  return stacked_solve(left_operator(m, x, u), right_operator(m, u, x), x.coords, tol);
}

// ---------------------------------------------------------------------------
// Radicals

RadicalReport jacobson_radical(const AssocAlgebra& a, std::uint64_t seed, std::size_t audits,
                               double tol) {
  RadicalReport rep;
  rep.basis = trace_form_kernel(a, tol);
  if (rep.basis.cols() == 0) rep.basis = CMatrix(a.dim(), 0);
  rep.is_ideal = is_two_sided_ideal(a, rep.basis, tol);
  if (rep.basis.cols() > 0 && rep.basis.cols() < a.dim()) {
    const AssocAlgebra quo = quotient_algebra(a, rep.basis);
    rep.quotient_radical_dim = trace_form_kernel(quo, tol).cols();
  }
  if (rep.basis.cols() > 0) {
    Rng rng = make_rng(seed, 0x72616431);
    for (std::size_t s = 0; s < audits; ++s) {
      const CVector r = rep.basis * random_cvector(rep.basis.cols(), rng);
      const CVector u = random_cvector(a.dim(), rng);
      const QuasiInverseResult q = quasi_inverse_assoc(a, r, u);
      ++rep.audits;
      if (!q.exists()) ++rep.audit_failures;
      if (q.borderline) ++rep.borderline;
    }
  }
  return rep;
}

Envelope standard_envelope(const TernarySpace& m) {
  const Eigen::Index d = m.dim();
  const Eigen::Index d2 = d * d;
  std::vector<CMatrix> lam(static_cast<size_t>(d2)), rho(static_cast<size_t>(d2));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      lam[static_cast<size_t>(i * d + j)] = left_operator(m, m.basis_element(i), m.basis_element(j));
      rho[static_cast<size_t>(i * d + j)] = right_operator(m, m.basis_element(i), m.basis_element(j));
    }
  }
  auto pair_vec = [d2](const CMatrix& first, const CMatrix& second) {
    CVector v(2 * d2);
    v << vec(first), vec(second).conjugate();
    return v;
  };
  CMatrix ql(2 * d2, 0), qr(2 * d2, 0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      extend_orthonormal(ql, pair_vec(lam[static_cast<size_t>(i * d + j)], lam[static_cast<size_t>(j * d + i)]), 1e-10);
      extend_orthonormal(qr, pair_vec(rho[static_cast<size_t>(i * d + j)], rho[static_cast<size_t>(j * d + i)]), 1e-10);
    }
  }
  const Eigen::Index dl = ql.cols(), dr = qr.cols();
  Envelope env;
  const Eigen::Index m_off = dl, mbar_off = dl + d, r_off = dl + 2 * d, total = r_off + dr;
  for (Eigen::Index k = 0; k < dl; ++k) env.corners.indices[0].push_back(k);
  for (Eigen::Index k = 0; k < d; ++k) env.corners.indices[1].push_back(m_off + k);
  for (Eigen::Index k = 0; k < d; ++k) env.corners.indices[2].push_back(mbar_off + k);
  for (Eigen::Index k = 0; k < dr; ++k) env.corners.indices[3].push_back(r_off + k);
  env.corners.total = total;

  // sesquilinear extensions of l(f, g) and r(f, g) from the basis tables
  auto sesqui = [d](const std::vector<CMatrix>& table, const CVector& f, const CVector& g) {
    CMatrix out = CMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (f(i) == cplx(0.0)) continue;
      for (Eigen::Index j = 0; j < d; ++j) {
        const cplx w = f(i) * std::conj(g(j));
        if (w != cplx(0.0)) out += w * table[static_cast<size_t>(i * d + j)];
      }
    }
    return out;
  };

  struct Parts {
    CMatrix a1, a2, b1, b2;
    CVector f, g;
  };
  auto decode = [&](const CVector& c) {
    Parts p;
    const CVector lv = ql * c.head(dl);
    const CVector rv = qr * c.segment(r_off, dr);
    p.a1 = unvec(lv.head(d2), d, d);
    p.a2 = unvec(lv.tail(d2).conjugate(), d, d);
    p.b1 = unvec(rv.head(d2), d, d);
    p.b2 = unvec(rv.tail(d2).conjugate(), d, d);
    p.f = c.segment(m_off, d);
    p.g = c.segment(mbar_off, d).conjugate();
    return p;
  };
  auto encode = [&](const Parts& p) {
    CVector c(total);
    c.head(dl) = ql.adjoint() * pair_vec(p.a1, p.a2);
    c.segment(m_off, d) = p.f;
    c.segment(mbar_off, d) = p.g.conjugate();
    c.segment(r_off, dr) = qr.adjoint() * pair_vec(p.b1, p.b2);
    return c;
  };

  std::vector<Parts> parts;
  for (Eigen::Index k = 0; k < total; ++k) {
    CVector e = CVector::Zero(total);
    e(k) = 1.0;
    parts.push_back(decode(e));
  }
  env.algebra = AssocAlgebra::from_products(total, [&](Eigen::Index i, Eigen::Index j) {
    const Parts& x = parts[static_cast<size_t>(i)];
    const Parts& y = parts[static_cast<size_t>(j)];
    Parts z;
    z.a1 = x.a1 * y.a1 + sesqui(lam, x.f, y.g);
    z.a2 = y.a2 * x.a2 + sesqui(lam, y.g, x.f);
    z.f = x.a1 * y.f + y.b1 * x.f;
    z.g = y.a2 * x.g + x.b2 * y.g;
    z.b1 = y.b1 * x.b1 + sesqui(rho, x.g, y.f);
    z.b2 = x.b2 * y.b2 + sesqui(rho, y.f, x.g);
    return encode(z);
  });
  return env;
}

TernaryRadicalReport ternary_radical(const TernarySpace& m, std::uint64_t seed, std::size_t audits,
                                     double tol) {
  TernaryRadicalReport rep;
  AssocAlgebra alg;
  CornerLayout layout;
  if (m.has_blocks()) {
    const StandardEmbedding e = build_embedding(m);
    alg = e.algebra();
    layout = e.corners();
  } else {
    Envelope env = standard_envelope(m);
    alg = std::move(env.algebra);
    layout = std::move(env.corners);
  }
  rep.envelope_radical = jacobson_radical(alg, seed, audits, tol);
  const PeirceSplit split = peirce_split(alg, layout, rep.envelope_radical.basis, tol);
  for (size_t c = 0; c < 4; ++c) rep.corner_dims[c] = split.corners[c].cols();
  rep.basis = split.ternary_part.cols() ? orthonormal_basis(split.ternary_part) : CMatrix(m.dim(), 0);
  rep.is_ideal = is_ideal(m, rep.basis, tol);
  if (rep.basis.cols() > 0) {
    Rng rng = make_rng(seed, 0x72616432);
    for (std::size_t s = 0; s < audits; ++s) {
      const TernaryElement r(CVector(rep.basis * random_cvector(rep.basis.cols(), rng)));
      const QuasiInverseResult q = quasi_inverse_ternary(m, r, random_element(m, rng));
      ++rep.audits;
      if (!q.exists()) ++rep.audit_failures;
      if (q.borderline) ++rep.borderline;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lemmas

EquivalenceCheck check_corner_qi_equivalence(const StandardEmbedding& e, const TernaryElement& x,
                                             const TernaryElement& u) {
  const QuasiInverseResult t = quasi_inverse_ternary(e.base(), x, u);
  const QuasiInverseResult s =
      quasi_inverse_assoc(e.algebra(), e.corner(x).coords, e.conj_corner(u).coords);
  return EquivalenceCheck{t.exists(), s.exists(), t.borderline || s.borderline};
}

EquivalenceCheck check_symmetry_principle(const AssocAlgebra& a, const CVector& x, const CVector& y) {
  const QuasiInverseResult l = quasi_inverse_assoc(a, x, y);
  const QuasiInverseResult r = quasi_inverse_assoc(a, y, x);
  return EquivalenceCheck{l.exists(), r.exists(), l.borderline || r.borderline};
}

ShiftingPair::ShiftingPair(const AssocAlgebra& a, CMatrix phi, CMatrix psi, double tol)
    : a_(&a), phi_(std::move(phi)), psi_(std::move(psi)) {
  const Eigen::Index n = a.dim();
  if (phi_.rows() != n || phi_.cols() != n || psi_.rows() != n || psi_.cols() != n) {
    throw ShapeError("ShiftingPair: maps must be n x n");
  }
  std::vector<CMatrix> right(static_cast<size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) right[static_cast<size_t>(j)] = a.right_mult(a.basis(j));
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, a.left(i).norm());
  scale *= scale * std::max({1.0, phi_.norm(), psi_.norm()});
  // phi(b_i) z phi(b_j) = phi(b_i psi(z) b_j), and with phi and psi swapped
  auto validate = [&](const CMatrix& f, const CMatrix& g) {
    std::vector<CMatrix> lf(static_cast<size_t>(n)), rf(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      lf[static_cast<size_t>(i)] = a.left_mult(f.col(i));
      rf[static_cast<size_t>(i)] = a.right_mult(f.col(i));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const CMatrix fl = f * a.left(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        const CMatrix lhs = lf[static_cast<size_t>(i)] * rf[static_cast<size_t>(j)];
        const CMatrix rhs = fl * right[static_cast<size_t>(j)] * g;
        if ((lhs - rhs).norm() > tol * scale) return false;
      }
    }
    return true;
  };
  if (!validate(phi_, psi_) || !validate(psi_, phi_)) {
    throw PreconditionFailed("shifting principle: phi and psi violate the compatibility identities");
  }
}

EquivalenceCheck ShiftingPair::check(const CVector& x, const CVector& y) const {
  const QuasiInverseResult l = quasi_inverse_assoc(*a_, x, psi_ * y);
  const QuasiInverseResult r = quasi_inverse_assoc(*a_, phi_ * x, y);
  return EquivalenceCheck{l.exists(), r.exists(), l.borderline || r.borderline};
}

EquivalenceCheck check_shifting_principle(const AssocAlgebra& a, const CMatrix& phi,
                                          const CMatrix& psi, const CVector& x, const CVector& y) {
  return ShiftingPair(a, phi, psi).check(x, y);
}

CMatrix corner_compression(const StandardEmbedding& e, int corner) {
  const CMatrix sel = e.corners().selector(corner);
  return sel * sel.transpose();
}

namespace {

void tally(LemmaTally& t, const EquivalenceCheck& c) {
  ++t.trials;
  if (c.borderline) ++t.borderline;
  if (!c.agree()) {
    ++t.counterexamples;
  } else if (c.lhs) {
    ++t.both_true;
  } else {
    ++t.both_false;
  }
}

/// Eigenvalue of largest modulus, or 0.
cplx dominant_eigenvalue(const CMatrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  const CVector ev = es.eigenvalues();
  Eigen::Index best = 0;
  ev.cwiseAbs().maxCoeff(&best);
  return std::abs(ev(best)) > 1e-10 ? ev(best) : cplx(0.0);
}

}  // namespace

LemmaTally run_corner_trials(const StandardEmbedding& e, std::size_t trials, std::uint64_t seed) {
  LemmaTally t;
  const TernarySpace& m = e.base();
  Rng rng = make_rng(seed, 0x636f726e);
  for (std::size_t k = 0; k < trials; ++k) {
    const TernaryElement x = random_element(m, rng);
    TernaryElement u = random_element(m, rng);
    if (k % 3 == 2) {
      // [y u x] = conj(s) [y x x] for u = s x; make 1 an eigenvalue
      const cplx mu = dominant_eigenvalue(right_operator(m, x, x));
      if (mu != cplx(0.0)) u = std::conj(1.0 / mu) * x;
    }
    tally(t, check_corner_qi_equivalence(e, x, u));
  }
  return t;
}

LemmaTally run_symmetry_trials(const AssocAlgebra& a, std::size_t trials, std::uint64_t seed) {
  LemmaTally t;
  Rng rng = make_rng(seed, 0x73796d6d);
  for (std::size_t k = 0; k < trials; ++k) {
    const CVector x = random_cvector(a.dim(), rng);
    CVector y = random_cvector(a.dim(), rng);
    if (k % 3 == 2) {
      const cplx mu = dominant_eigenvalue(a.left_mult(a.mul(x, y)));
      if (mu != cplx(0.0)) y /= mu;
    }
    tally(t, check_symmetry_principle(a, x, y));
  }
  return t;
}

LemmaTally run_shifting_trials(const ShiftingPair& s, const AssocAlgebra& a, std::size_t trials,
                               std::uint64_t seed) {
  LemmaTally t;
  Rng rng = make_rng(seed, 0x73686966);
  for (std::size_t k = 0; k < trials; ++k) {
    const CVector x = random_cvector(a.dim(), rng);
    CVector y = random_cvector(a.dim(), rng);
    if (k % 3 == 2) {
      const cplx mu = dominant_eigenvalue(a.left_mult(a.mul(s.phi() * x, y)));
      if (mu != cplx(0.0)) y /= mu;
    }
    tally(t, s.check(x, y));
  }
  return t;
}

}  // namespace ternlab
