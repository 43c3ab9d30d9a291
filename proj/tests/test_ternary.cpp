// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/instances.hpp"
#include "ternlab/ternary.hpp"

using namespace ternlab;

TEST_SUITE("ternary") {
  TEST_CASE("scalar triple products") {
    const TernarySpace tro = support::scalars({1}), anti = support::scalars({-1});
    const TernaryElement one(support::vec({1.0}));
    CHECK(triple(tro, one, one, one).coords(0) == cplx(1.0));
    CHECK(triple(anti, one, one, one).coords(0) == cplx(-1.0));
    const TernarySpace mixed = support::scalars({1, -1});
    const TernaryElement x(support::vec({1.0, 2.0}));
    const CVector r = triple(mixed, x, x, x).coords;
    CHECK(std::abs(r(0) - cplx(1.0)) <= 1e-14);
    CHECK(std::abs(r(1) - cplx(-8.0)) <= 1e-14);
  }

  TEST_CASE("triple agrees with the block formula on random instances") {
    Rng rng = make_rng(21);
    for (int k = 0; k < 12; ++k) {
      const TernarySpace m = random_instance(static_cast<InstanceKind>(k % 3), rng, 12);
      for (int s = 0; s < 10; ++s) {
        const TernaryElement x = random_element(m, rng), y = random_element(m, rng), z = random_element(m, rng);
        const CVector want = oracle::triple(m, x.coords, y.coords, z.coords);
        CHECK((triple(m, x, y, z).coords - want).norm() <= 1e-9 * std::max(1.0, want.norm()));
      }
    }
  }

  TEST_CASE("triple rejects foreign elements") {
    const TernarySpace m = support::scalars({1, 1});
    const TernaryElement x(support::vec({1.0}));
    CHECK_THROWS_AS(triple(m, x, x, x), ShapeError);
  }

  TEST_CASE("ternary_closure") {
    const TernarySpace a = ternary_closure({support::unit(2, 2, 0, 0)}, 1);
    CHECK(a.dim() == 1);
    const TernarySpace b = ternary_closure({support::unit(2, 2, 0, 1), support::unit(2, 2, 1, 0)}, 1);
    CHECK(b.dim() == 2);
    CHECK_THROWS_AS(ternary_closure({CMatrix::Zero(2, 2)}, 1), InvalidInput);
    CHECK_THROWS_AS(ternary_closure({}, 1), InvalidInput);
    // E11 + E12 generates span{E11, E12}
    const TernarySpace c = ternary_closure({support::unit(2, 2, 0, 0) + support::unit(2, 2, 0, 1)}, -1);
    CHECK(c.dim() == 1);
  }

  TEST_CASE("check_axioms passes on blocks") {
    CHECK(check_axioms(support::scalars({1}), 100, 1).pass);
    CHECK(check_axioms(support::scalars({-1}), 100, 1).pass);
    Rng rng = make_rng(22);
    const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 12);
    const AxiomReport r = check_axioms(m, 100, 2);
    CHECK(r.pass);
    CHECK(r.norm_checked);
  }

  TEST_CASE("check_axioms flags a corrupted structure tensor") {
    StructureConstants c = structure_constants_of(support::scalars({1, 1}));
    const TernarySpace good = TernarySpace::from_structure(c);
    const AxiomReport ok = check_axioms(good, 200, 3);
    CHECK(ok.pass);
    CHECK_FALSE(ok.norm_checked);
    c(0, 1, 1, 0) += 0.1;
    const AxiomReport bad = check_axioms(TernarySpace::from_structure(c), 500, 3);
    CHECK_FALSE(bad.pass);
    CHECK(std::max(bad.associativity_middle, bad.associativity_right) >= 0.05);
    CHECK_FALSE(bad.failing.empty());
  }

  TEST_CASE("cube_root") {
    const TernarySpace tro = support::scalars({1}), anti = support::scalars({-1});
    CHECK(std::abs(cube_root(tro, TernaryElement(support::vec({8.0}))).coords(0) - cplx(2.0)) <= 1e-12);
    CHECK(std::abs(cube_root(anti, TernaryElement(support::vec({8.0}))).coords(0) - cplx(-2.0)) <= 1e-12);
    CHECK(cube_root(tro, TernaryElement::zero(1)).coords.norm() == 0.0);
    const TernarySpace s = TernarySpace::from_structure(structure_constants_of(tro));
    CHECK_THROWS_AS(cube_root(s, TernaryElement::zero(1)), NormUnavailable);
  }

  TEST_CASE("cube_root round trip on random elements") {
    Rng rng = make_rng(23);
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      const TernarySpace m = random_instance(static_cast<InstanceKind>(s % 3), rng, 8);
      const TernaryElement a = random_element(m, rng);
      const TernaryElement b = cube_root(m, a);
      worst = std::max(worst, m.norm(triple(m, b, b, b) - a) / std::max(1.0, m.norm(a)));
    }
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("structure_constants_of") {
    CHECK(structure_constants_of(support::scalars({1}))(0, 0, 0, 0) == cplx(1.0));
    CHECK(structure_constants_of(support::scalars({-1}))(0, 0, 0, 0) == cplx(-1.0));
    const StructureConstants c = structure_constants_of(support::scalars({1, 1}));
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 2; ++j)
        for (Eigen::Index k = 0; k < 2; ++k)
          for (Eigen::Index l = 0; l < 2; ++l) {
            const bool diag = i == j && j == k && k == l;
            CHECK(std::abs(c(i, j, k, l) - cplx(diag ? 1.0 : 0.0)) <= 1e-14);
          }
  }

  TEST_CASE("structure constants reproduce the triple product") {
    Rng rng = make_rng(24);
    const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 10);
    const StructureConstants c = structure_constants_of(m);
    for (int s = 0; s < 20; ++s) {
      const TernaryElement x = random_element(m, rng), y = random_element(m, rng), z = random_element(m, rng);
      const CVector want = triple(m, x, y, z).coords;
      CHECK((oracle::triple(c, x.coords, y.coords, z.coords) - want).norm() <= 1e-9 * std::max(1.0, want.norm()));
    }
  }

  TEST_CASE("opposite") {
    const TernarySpace m = support::scalars({1});
    CHECK(opposite(m).blocks()[0].sign() == -1);
    Rng rng = make_rng(25);
    const TernarySpace r = random_instance(InstanceKind::Mixed, rng, 10);
    CHECK(opposite(opposite(r)) == r);
    const TernarySpace s = TernarySpace::from_structure(structure_constants_of(r));
    CHECK(opposite(opposite(s)) == s);
  }

  TEST_CASE("zettl_decompose on pure and mixed spaces") {
    const ZettlDecomposition p = zettl_decompose(support::scalars({1}));
    CHECK(p.plus.dim() == 1);
    CHECK(p.minus.dim() == 0);
    const ZettlDecomposition n = zettl_decompose(support::scalars({-1}));
    CHECK(n.plus.dim() == 0);
    CHECK(n.minus.dim() == 1);

    // C+ (+) C- in the basis (1, 1), (1, -1)
    CMatrix t(2, 2);
    t << 1.0, 1.0, 1.0, -1.0;
    const TernarySpace s = change_basis(support::scalars({1, -1}), t);
    const ZettlDecomposition z = zettl_decompose(s);
    REQUIRE(z.plus.dim() == 1);
    REQUIRE(z.minus.dim() == 1);
    // old coordinate vectors (1,0) and (0,1) are (1,1)/2 and (1,-1)/2 in the new basis
    CHECK(subspace_distance(z.plus_coords, support::vec({1.0, 1.0}).normalized()) <= 1e-8);
    CHECK(subspace_distance(z.minus_coords, support::vec({1.0, -1.0}).normalized()) <= 1e-8);
    for (Eigen::Index k = 0; k < 2; ++k) {
      const CVector f = k == 0 ? CVector(z.plus_coords.col(0)) : CVector(z.minus_coords.col(0));
      const Eigen::VectorXcd ev = oracle::r_ff_spectrum(s.structure(), f);
      for (Eigen::Index i = 0; i < ev.size(); ++i) {
        CHECK(std::abs(ev(i).imag()) <= 1e-9);
        CHECK((k == 0 ? ev(i).real() : -ev(i).real()) >= -1e-9);
      }
    }
    const ZettlDecomposition o = zettl_decompose(opposite(s));
    CHECK(subspace_distance(o.plus_coords, z.minus_coords) <= 1e-8);
    CHECK(subspace_distance(o.minus_coords, z.plus_coords) <= 1e-8);
  }

  TEST_CASE("Zettl parts annihilate each other and split the box operator spectrum") {
    Rng rng = make_rng(26);
    const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 12);
    const ZettlDecomposition z = zettl_decompose(m, 5);
    REQUIRE(z.plus.dim() + z.minus.dim() == m.dim());
    const double scale = 1.0;
    for (Eigen::Index i = 0; i < z.plus_coords.cols(); ++i)
      for (Eigen::Index j = 0; j < z.minus_coords.cols(); ++j)
        for (Eigen::Index k = 0; k < m.dim(); ++k) {
          const TernaryElement p(z.plus_coords.col(i)), q(z.minus_coords.col(j)), b = m.basis_element(k);
          CHECK(triple(m, p, q, b).coords.norm() <= 1e-8 * scale);
          CHECK(triple(m, q, p, b).coords.norm() <= 1e-8 * scale);
        }
    int plus_pass = 0, minus_fail = 0;
    for (int s = 0; s < 50; ++s) {
      const TernaryElement ap(z.plus_coords * random_cvector(z.plus_coords.cols(), rng));
      const TernaryElement am(z.minus_coords * random_cvector(z.minus_coords.cols(), rng));
      plus_pass += jbstar_box_check(m, ap).pass ? 1 : 0;
      minus_fail += jbstar_box_check(m, am).pass ? 0 : 1;
    }
    CHECK(plus_pass == 50);
    CHECK(minus_fail == 50);
  }

  TEST_CASE("jbstar_box_check on scalars") {
    const TernaryElement one(support::vec({1.0}));
    const SpectrumReport p = jbstar_box_check(support::scalars({1}), one);
    CHECK(p.pass);
    CHECK(p.eigenvalues(0) == doctest::Approx(0.0));
    CHECK(p.eigenvalues(1) == doctest::Approx(1.0));
    const SpectrumReport n = jbstar_box_check(support::scalars({-1}), one);
    CHECK_FALSE(n.pass);
    CHECK(n.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(n.eigenvalues(1) == doctest::Approx(0.0));
    CHECK(jbstar_box_check(support::scalars({-1}), TernaryElement::zero(1)).pass);
  }

  TEST_CASE("conjugate linearity in the middle argument") {
    Rng rng = make_rng(27);
    const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 12);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const TernaryElement x = random_element(m, rng), y = random_element(m, rng), z = random_element(m, rng);
      const cplx l = random_cplx(rng);
      const CVector lhs = triple(m, x, l * y, z).coords, rhs = std::conj(l) * triple(m, x, y, z).coords;
      worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
    CHECK(worst <= 1e-10);
  }
}
