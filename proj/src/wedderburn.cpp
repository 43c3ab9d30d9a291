// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternlab/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ternlab/errors.hpp"
#include "ternlab/radical.hpp"
#include "ternlab/random.hpp"

namespace ternlab {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Unknowns z stack vec(P_k) (column-major) for k = 0..dim-1.
struct System {
  const AssocAlgebra& a;
  Eigen::Index n;
  CVector unit;  // coordinates of the unit of A

  Eigen::Index dim() const { return a.dim(); }
  Eigen::Index n2() const { return n * n; }

  CMatrix p(const CVector& z, Eigen::Index k) const { return unvec(z.segment(k * n2(), n2()), n, n); }

  CVector residual(const CVector& z) const {
    const Eigen::Index d = dim();
    CVector r(d * d * n2() + n2());
    std::vector<CMatrix> ps;
    for (Eigen::Index k = 0; k < d; ++k) ps.push_back(p(z, k));
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        CMatrix defect = ps[static_cast<size_t>(i)] * ps[static_cast<size_t>(j)];
        for (Eigen::Index k = 0; k < d; ++k) {
          const cplx c = a.left(i)(k, j);
          if (c != cplx(0.0)) defect -= c * ps[static_cast<size_t>(k)];
        }
        r.segment((i * d + j) * n2(), n2()) = vec(defect);
      }
    }
    CMatrix u = -CMatrix::Identity(n, n);
    for (Eigen::Index k = 0; k < d; ++k) u += unit(k) * ps[static_cast<size_t>(k)];
    r.tail(n2()) = vec(u);
    return r;
  }

  CMatrix jacobian(const CVector& z) const {
    const Eigen::Index d = dim(), m = n2();
    CMatrix jac = CMatrix::Zero(d * d * m + m, d * m);
    const CMatrix id = CMatrix::Identity(n, n);
    const CMatrix idm = CMatrix::Identity(m, m);
    for (Eigen::Index i = 0; i < d; ++i) {
      const CMatrix pi = p(z, i);
      for (Eigen::Index j = 0; j < d; ++j) {
        const CMatrix pj = p(z, j);
        auto rows = jac.middleRows((i * d + j) * m, m);
        // d vec(X Y) = (Y^T (x) I) d vec X + (I (x) X) d vec Y
        rows.middleCols(i * m, m) += kron(pj.transpose(), id);
        rows.middleCols(j * m, m) += kron(id, pi);
        for (Eigen::Index k = 0; k < d; ++k) {
          const cplx c = a.left(i)(k, j);
          if (c != cplx(0.0)) rows.middleCols(k * m, m) -= c * idm;
        }
      }
    }
    for (Eigen::Index k = 0; k < d; ++k) jac.bottomRows(m).middleCols(k * m, m) = unit(k) * idm;
    return jac;
  }

  /// Converts stacked vec(P_k) to the n^2 x dim coordinate matrix.
  CMatrix to_phi(const CVector& z) const {
    CMatrix phi(n2(), dim());
    for (Eigen::Index k = 0; k < dim(); ++k) phi.col(k) = matrix_to_coords(p(z, k));
    return phi;
  }
};

double condition_of(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

}  // namespace

WedderburnSolution solve_wedderburn(const AssocAlgebra& a, Eigen::Index target_dim,
                                    std::uint64_t seed, int restarts, int iterations, double tol) {
  if (target_dim <= 0 || a.dim() != target_dim * target_dim) {
    throw InvalidInput("solve_wedderburn: algebra dimension must equal target_dim^2");
  }
  if (jacobson_radical(a, seed, 0).dim() != 0) {
    throw PreconditionFailed("solve_wedderburn: algebra is not semisimple");
  }
  const auto unit = a.unit();
  if (!unit) throw PreconditionFailed("solve_wedderburn: algebra has no unit");
  const System sys{a, target_dim, *unit};
  const AssocAlgebra target = matrix_algebra(target_dim);
  Rng rng = make_rng(seed, 0x77656464);
  const double start_scale = 1.0 / static_cast<double>(target_dim);

  for (int r = 0; r < restarts; ++r) {
    CVector z = start_scale * random_cvector(sys.dim() * sys.n2(), rng);
    CVector res = sys.residual(z);
    double norm = res.norm();
    int it = 0;
    for (; it < iterations && norm > 1e-14; ++it) {
      const CVector step = least_squares(sys.jacobian(z), -res).x;
      double t = 1.0;
      bool improved = false;
      for (int h = 0; h < 30; ++h, t *= 0.5) {
        const CVector trial = z + t * step;
        const CVector trial_res = sys.residual(trial);
        if (trial_res.norm() < norm) {
          z = trial;
          res = trial_res;
          norm = trial_res.norm();
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    const CMatrix phi = sys.to_phi(z);
    const IsomorphismReport rep = verify_isomorphism(phi, a, target);
    const double unit_res = res.tail(sys.n2()).norm();
    if (rep.residual <= tol && unit_res <= tol && rep.condition < 1e10) {
      WedderburnSolution sol;
      sol.phi = phi;
      sol.target_dim = target_dim;
      sol.residual = rep.residual;
      sol.unit_residual = unit_res;
      sol.condition = rep.condition;
      sol.restarts = r + 1;
      sol.iterations = it;
      return sol;
    }
  }
  throw SolverBudgetExceeded("solve_wedderburn: no isomorphism found within the restart budget");
}

IsomorphismReport verify_isomorphism(const CMatrix& phi, const AssocAlgebra& a,
                                     const AssocAlgebra& b) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) throw ShapeError("verify_isomorphism: phi has wrong shape");
  IsomorphismReport rep;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const CVector pi = phi.col(i);
    const CMatrix lpi = b.left_mult(pi);
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      const CVector lhs = phi * a.left(i).col(j);
      const CVector rhs = lpi * phi.col(j);
      rep.residual = std::max(rep.residual, (lhs - rhs).norm());
    }
  }
  rep.condition = phi.size() ? condition_of(phi) : 1.0;
  rep.invertible = phi.rows() == phi.cols() && std::isfinite(rep.condition) && rep.condition < 1e12;
  return rep;
}

StarObstruction star_obstruction(const CMatrix& phi, const AssocAlgebra& a, const AssocAlgebra& b,
                                 std::uint64_t seed, int samples) {
  if (!a.has_involution() || !b.has_involution()) {
    throw PreconditionFailed("star_obstruction: both algebras need an involution");
  }
  StarObstruction best;
  auto consider = [&](CVector x) {
    x /= x.norm();
    const double dev = (phi * a.star(x) - b.star(phi * x)).norm();
    if (dev > best.deviation || best.witness.size() == 0) {
      best.deviation = dev;
      best.witness = x;
    }
  };
  for (Eigen::Index i = 0; i < a.dim(); ++i) consider(a.basis(i));
  Rng rng = make_rng(seed, 0x73746172);
  for (int s = 0; s < samples && a.dim() > 0; ++s) consider(random_cvector(a.dim(), rng));
  return best;
}

CMatrix m2_anti_closed_form() {
  CMatrix phi = CMatrix::Zero(4, 4);
  phi(0, 0) = -1.0;
  phi(1, 1) = -1.0;
  phi(2, 2) = 1.0;
  phi(3, 3) = -1.0;
  return phi;
}

AssocAlgebra m2_anti_algebra() {
  AssocAlgebra alg = AssocAlgebra::from_products(4, [](Eigen::Index i, Eigen::Index j) {
    const CMatrix x = coords_to_matrix(CVector::Unit(4, i), 2);
    const CMatrix y = coords_to_matrix(CVector::Unit(4, j), 2);
    const cplx a = x(0, 0), z = x(0, 1), w = x(1, 0), b = x(1, 1);
    const cplx a2 = y(0, 0), z2 = y(0, 1), w2 = y(1, 0), b2 = y(1, 1);
    CMatrix out(2, 2);
    out(0, 0) = -a * a2 + z * w2;
    out(0, 1) = -a * z2 - z * b2;
    out(1, 0) = -w * a2 - b * w2;
    out(1, 1) = w * z2 - b * b2;
    return matrix_to_coords(out);
  });
  CMatrix star = CMatrix::Zero(4, 4);
  star(0, 0) = 1.0;
  star(2, 1) = 1.0;
  star(1, 2) = 1.0;
  star(3, 3) = 1.0;
  alg.set_involution(star);
  return alg;
}

std::array<int, 8> epsilon_table(const AssocAlgebra& a) {
  if (a.dim() != 4) throw InvalidInput("epsilon_table: expects a 4-dimensional algebra");
  std::array<int, 8> eps{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) {
        const CVector prod = a.left(i * 2 + j).col(j * 2 + l);
        const cplx c = prod(i * 2 + l);
        CVector rest = prod;
        rest(i * 2 + l) = 0.0;
        if (rest.norm() > 1e-12 || std::abs(std::abs(c) - 1.0) > 1e-12 || std::abs(c.imag()) > 1e-12) {
          throw InvalidInput("epsilon_table: product is not +-E_il");
        }
        eps[static_cast<size_t>(i * 4 + j * 2 + l)] = c.real() > 0 ? 1 : -1;
      }
    }
  }
  return eps;
}

double m2_system_residual(const CMatrix& phi, const std::array<int, 8>& eps) {
  if (phi.rows() != 4 || phi.cols() != 4) throw ShapeError("m2_system_residual: phi must be 4 x 4");
  // a_ijpq = coordinate (p, q) of phi(E_ij)
  auto coef = [&phi](int i, int j, int p, int q) { return phi(p * 2 + q, i * 2 + j); };
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) {
        const double e = eps[static_cast<size_t>(i * 4 + j * 2 + l)];
        for (int p = 0; p < 2; ++p) {
          for (int s = 0; s < 2; ++s) {
            cplx lhs = 0.0;
            for (int q = 0; q < 2; ++q) lhs += coef(i, j, p, q) * coef(j, l, q, s);
            worst = std::max(worst, std::abs(lhs - e * coef(i, l, p, s)));
          }
        }
      }
    }
  }
  return worst;
}

bool det_invertibility(const CVector& x) {
  if (x.size() != 4) throw ShapeError("det_invertibility: expects coordinates of a 2 x 2 element");
  return std::abs(x(0) * x(3) + x(1) * x(2)) > 1e-10;
}

bool two_sided_invertible(const AssocAlgebra& a, const CVector& x, double tol) {
  const auto e = a.unit();
  if (!e) return false;
  const Eigen::Index n = a.dim();
  CMatrix sys(2 * n, n);
  sys.topRows(n) = a.left_mult(x);
  sys.bottomRows(n) = a.right_mult(x);
  CVector rhs(2 * n);
  rhs << *e, *e;
  return solve_linear(sys, rhs, tol).has_value();
}

}  // namespace ternlab
