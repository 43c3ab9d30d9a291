// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "ternlab/algebra.hpp"
#include "ternlab/embedding.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/ideals.hpp"
#include "ternlab/instances.hpp"

using namespace ternlab;

namespace {

/// Brute-force two-sided ideal test over basis products in the embedding.
double ideal_defect(const AssocAlgebra& a, const CMatrix& s) {
  const CMatrix proj = s * s.adjoint();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index k = 0; k < s.cols(); ++k) {
      const CVector l = a.left(i) * s.col(k);
      const CVector r = a.right_mult(a.basis(i)) * s.col(k);
      worst = std::max({worst, (l - proj * l).norm(), (r - proj * r).norm()});
    }
  return worst;
}

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("is_ideal") {
    const TernarySpace cc = support::scalars({1, 1});
    CHECK(is_ideal(cc, CMatrix::Zero(2, 0)));
    CHECK(is_ideal(cc, CMatrix::Identity(2, 2)));
    CHECK(is_ideal(cc, support::vec({1.0, 0.0})));
    const TernarySpace m2 = support::full(2, 2, 1);
    CHECK_FALSE(is_ideal(m2, support::vec({1.0, 0.0, 0.0, 0.0})));
  }

  TEST_CASE("generated_ideal") {
    const TernarySpace cc = support::scalars({1, 1});
    CHECK(generated_ideal(cc, support::vec({0.0, 0.0})).dim() == 0);
    const TernaryIdeal first = generated_ideal(cc, support::vec({1.0, 0.0}));
    CHECK(first.dim() == 1);
    CHECK(subspace_distance(first.basis, support::vec({1.0, 0.0})) <= 1e-12);
    Rng rng = make_rng(51);
    const TernarySpace m2 = support::full(2, 2, 1);
    CHECK(generated_ideal(m2, random_cvector(4, rng)).dim() == 4);
    CHECK_THROWS_AS(make_ideal(m2, support::vec({1.0, 0.0, 0.0, 0.0})), NotAnIdeal);
  }

  TEST_CASE("embed_ideal") {
    const TernarySpace cc = support::scalars({1, 1});
    const StandardEmbedding e = build_embedding(cc);
    const CMatrix whole = embed_ideal(e, generated_ideal(cc, CMatrix::Identity(2, 2)));
    CHECK(whole.cols() == e.dim());
    CHECK(embed_ideal(e, generated_ideal(cc, support::vec({0.0, 0.0}))).cols() == 0);
    const CMatrix s = embed_ideal(e, generated_ideal(cc, support::vec({1.0, 0.0})));
    CHECK(s.cols() == 4);
    CHECK(ideal_defect(e.algebra(), s) <= 1e-10);
  }

  TEST_CASE("embedded ideals of random instances") {
    Rng rng = make_rng(52);
    for (int k = 0; k < 6; ++k) {
      const TernarySpace m = random_instance(support::kind_of(k), rng, 10);
      const StandardEmbedding e = build_embedding(m);
      const auto& bl = m.blocks();
      CMatrix g = CMatrix::Zero(m.dim(), 1);
      g.block(m.block_offset(0), 0, bl[0].dim(), 1) = random_cvector(bl[0].dim(), rng);
      const TernaryIdeal i = generated_ideal(m, g);
      const CMatrix s = embed_ideal(e, i);
      CHECK(ideal_defect(e.algebra(), s) <= 1e-8);
      const PeirceSplit p = peirce_split(e, s);
      CHECK(p.corners[1].cols() == i.dim());
      CHECK(p.corners[2].cols() == i.dim());
      CHECK(p.corners[0].cols() + p.corners[1].cols() + p.corners[2].cols() + p.corners[3].cols() == s.cols());
      CHECK(subspace_distance(p.ternary_part, i.basis) <= 1e-8);
    }
  }

  TEST_CASE("quotients of C (+) C") {
    const TernarySpace cc = support::scalars({1, 1});
    const Quotient all = quotient(cc, generated_ideal(cc, CMatrix::Identity(2, 2)));
    CHECK(all.space.dim() == 0);
    const Quotient none = quotient(cc, generated_ideal(cc, support::vec({0.0, 0.0})));
    CHECK(none.space.dim() == 2);
    CHECK(none.space.structure() == structure_constants_of(cc));
    const TernaryIdeal j = generated_ideal(cc, support::vec({1.0, 0.0}));
    const Quotient q = quotient(cc, j);
    REQUIRE(q.space.dim() == 1);
    CHECK(std::abs(std::abs(q.space.structure()(0, 0, 0, 0)) - 1.0) <= 1e-12);
    CHECK(q.well_defined_residual <= 1e-9);
  }

  TEST_CASE("quotient_norm on C (+) C") {
    const TernarySpace cc = support::scalars({1, 1});
    const TernaryIdeal j = generated_ideal(cc, support::vec({1.0, 0.0}));
    const QuotientNormReport r = quotient_norm(cc, j, TernaryElement(support::vec({5.0, 3.0})));
    CHECK(r.upper == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.lower == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(quotient_norm(cc, j, TernaryElement(support::vec({5.0, 0.0}))).upper <= 1e-8);
    const TernaryIdeal zero = generated_ideal(cc, support::vec({0.0, 0.0}));
    CHECK(quotient_norm(cc, zero, TernaryElement(support::vec({5.0, 3.0}))).upper == doctest::Approx(5.0));
    const TernarySpace s = TernarySpace::from_structure(structure_constants_of(cc));
    CHECK_THROWS_AS(quotient_norm(s, generated_ideal(s, support::vec({1.0, 0.0})), TernaryElement(support::vec({5.0, 3.0}))),
                    NormUnavailable);
  }

  TEST_CASE("quotient properties on random instances") {
    Rng rng = make_rng(53);
    for (int k = 0; k < 4; ++k) {
      const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 8);
      const auto& bl = m.blocks();
      CMatrix g = CMatrix::Zero(m.dim(), 1);
      g.block(m.block_offset(0), 0, bl[0].dim(), 1) = random_cvector(bl[0].dim(), rng);
      const TernaryIdeal j = generated_ideal(m, g);
      const Quotient q = quotient(m, j);
      CHECK(q.well_defined_residual <= 1e-9);
      const AxiomReport ax = check_axioms(q.space, 100, 6);
      CHECK(ax.associativity_middle <= 1e-9);
      CHECK(ax.associativity_right <= 1e-9);
      const ZettlDecomposition zm = zettl_decompose(m, 1), zq = zettl_decompose(q.space, 2);
      const ZettlDecomposition zj = zettl_decompose(restrict_to_subspace(m, j.basis), 3);
      CHECK(zq.plus.dim() == zm.plus.dim() - zj.plus.dim());
      CHECK(zq.minus.dim() == zm.minus.dim() - zj.minus.dim());
      for (int s = 0; s < 10; ++s) {
        TernaryElement f = random_element(m, rng);
        const double n = quotient_norm(m, j, f, 7).upper;
        f = (1.0 / n) * f;
        const QuotientNormReport c = quotient_norm(m, j, triple(m, f, f, f), 8);
        CHECK(std::abs(c.upper - 1.0) <= 1e-5);
        CHECK(c.gap() <= 1e-5);
      }
    }
  }
}
