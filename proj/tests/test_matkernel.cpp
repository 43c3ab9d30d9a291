// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/matkernel.hpp"
#include "ternlab/random.hpp"

using namespace ternlab;

namespace {

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_SUITE("matkernel") {
  TEST_CASE("op_norm on fixed matrices") {
    CHECK(op_norm(CMatrix::Zero(3, 3)) == 0.0);
    CHECK(op_norm(CMatrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(op_norm(mat2(1, 1, 0, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(op_norm(bad), InvalidInput);
  }

  TEST_CASE("op_norm matches the 2x2 characteristic polynomial") {
    Rng rng = make_rng(11);
    for (int s = 0; s < 200; ++s) {
      const CMatrix a = random_cmatrix(2, 2, rng);
      CHECK(std::abs(op_norm(a) - oracle::op_norm_2x2(a)) <= 1e-12 * oracle::op_norm_2x2(a));
    }
  }

  TEST_CASE("hs_inner") {
    CHECK(hs_inner(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)) == cplx(2.0));
    CHECK(hs_inner(mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)) == cplx(0.0));
    CHECK(hs_inner(mat2(1, 1, 0, 0), mat2(1, 0, 0, 0)) == cplx(1.0));
    CHECK_THROWS_AS(hs_inner(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), ShapeError);
  }

  TEST_CASE("norm sandwich: op_norm^2 <= <A,A> <= min(r,c) op_norm^2") {
    Rng rng = make_rng(12);
    for (int s = 0; s < 300; ++s) {
      const auto r = static_cast<Eigen::Index>(1 + s % 5), c = static_cast<Eigen::Index>(1 + (s / 5) % 4);
      const CMatrix a = random_cmatrix(r, c, rng);
      const double n = op_norm(a), h = hs_inner(a, a).real();
      CHECK(n * n <= h * (1 + 1e-9));
      CHECK(h <= static_cast<double>(std::min(r, c)) * n * n * (1 + 1e-9));
    }
  }

  TEST_CASE("herm_eig on fixed matrices") {
    auto e = herm_eig(mat2(-1, 0, 0, 1));
    CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(e.eigenvalues(1) == doctest::Approx(1.0));
    e = herm_eig(mat2(0, 1, 1, 0));
    CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(e.eigenvalues(1) == doctest::Approx(1.0));
    e = herm_eig(CMatrix::Zero(2, 2));
    CHECK(e.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(herm_eig(mat2(0, 1, 0, 0)), NotHermitian);
  }

  TEST_CASE("herm_eig reconstruction on random Hermitian matrices") {
    Rng rng = make_rng(13);
    double worst_rec = 0.0, worst_orth = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const auto n = static_cast<Eigen::Index>(1 + s % 16);
      const CMatrix g = random_cmatrix(n, n, rng);
      const CMatrix h = g + g.adjoint();
      const auto e = herm_eig(h);
      const CMatrix rec = e.eigenvectors * e.eigenvalues.cast<cplx>().asDiagonal() * e.eigenvectors.adjoint();
      worst_rec = std::max(worst_rec, op_norm(rec - h) / op_norm(h));
      worst_orth = std::max(worst_orth, op_norm(e.eigenvectors.adjoint() * e.eigenvectors - CMatrix::Identity(n, n)));
      for (Eigen::Index i = 1; i < n; ++i) REQUIRE(e.eigenvalues(i - 1) <= e.eigenvalues(i));
    }
    CHECK(worst_rec <= 1e-10);
    CHECK(worst_orth <= 1e-10);
  }

  TEST_CASE("solve_linear") {
    Rng rng = make_rng(14);
    const CVector b = random_cvector(3, rng);
    auto x = solve_linear(CMatrix::Identity(3, 3), b);
    REQUIRE(x);
    CHECK((*x - b).norm() <= 1e-14);
    CHECK_FALSE(solve_linear(CMatrix::Zero(3, 3), b));
    CMatrix two(1, 1);
    two(0, 0) = 2.0;
    CVector one(1);
    one(0) = 1.0;
    x = solve_linear(two, one);
    REQUIRE(x);
    CHECK(std::abs((*x)(0) - cplx(0.5)) <= 1e-15);
  }

  TEST_CASE("null_space and orthonormal_basis") {
    Rng rng = make_rng(15);
    const CMatrix a = random_cmatrix(3, 2, rng) * random_cmatrix(2, 5, rng);
    const CMatrix n = null_space(a);
    CHECK(n.cols() == 3);
    CHECK(op_norm(a * n) <= 1e-10 * op_norm(a));
    const CMatrix q = orthonormal_basis(a);
    CHECK(q.cols() == 2);
    CHECK(op_norm(q.adjoint() * q - CMatrix::Identity(2, 2)) <= 1e-12);
    CHECK(subspace_distance(q, orthonormal_basis(a.leftCols(2))) <= 1e-10);
  }
}
