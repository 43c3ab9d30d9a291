// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "ternlab/algebra.hpp"
#include "ternlab/embedding.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/instances.hpp"
#include "ternlab/radical.hpp"
#include "ternlab/wedderburn.hpp"

using namespace ternlab;

namespace {

/// The one-dimensional algebra C.
AssocAlgebra complex_line() { return AssocAlgebra({CMatrix::Constant(1, 1, 1.0)}); }

/// span{1, n} with n^2 = 0.
AssocAlgebra dual_numbers() {
  CMatrix l1 = CMatrix::Identity(2, 2);
  CMatrix ln = CMatrix::Zero(2, 2);
  ln(1, 0) = 1.0;  // n . 1 = n, n . n = 0
  return AssocAlgebra({l1, ln});
}

/// Strictly upper triangular 3 x 3 matrices: radical is everything.
AssocAlgebra upper_nilpotent() {
  const AssocAlgebra full = matrix_algebra(3);
  const std::vector<std::pair<int, int>> slots = {{0, 1}, {0, 2}, {1, 2}};
  return AssocAlgebra::from_products(3, [&](Eigen::Index i, Eigen::Index j) {
    CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
    a(slots[static_cast<size_t>(i)].first, slots[static_cast<size_t>(i)].second) = 1.0;
    b(slots[static_cast<size_t>(j)].first, slots[static_cast<size_t>(j)].second) = 1.0;
    const CMatrix p = a * b;
    CVector out(3);
    for (size_t k = 0; k < 3; ++k) out(static_cast<Eigen::Index>(k)) = p(slots[k].first, slots[k].second);
    return out;
  });
}

}  // namespace

TEST_SUITE("radical") {
  TEST_CASE("associative quasi-inverses on C") {
    const AssocAlgebra c = complex_line();
    const CVector one = support::vec({1.0}), half = support::vec({0.5});
    const QuasiInverseResult z = quasi_inverse_assoc(c, support::vec({0.0}), one);
    REQUIRE(z.exists());
    CHECK(z.certificate->y.norm() == 0.0);
    CHECK_FALSE(quasi_inverse_assoc(c, one, one).exists());
    const QuasiInverseResult two = quasi_inverse_assoc(c, one, half);
    REQUIRE(two.exists());
    CHECK(std::abs(two.certificate->y(0) - cplx(2.0)) <= 1e-12);
  }

  TEST_CASE("ternary quasi-inverses on scalars") {
    const TernarySpace tro = support::scalars({1}), anti = support::scalars({-1});
    const TernaryElement one(support::vec({1.0})), half(support::vec({0.5}));
    const QuasiInverseResult a = quasi_inverse_ternary(tro, one, half);
    REQUIRE(a.exists());
    CHECK(std::abs(a.certificate->y(0) - cplx(2.0)) <= 1e-12);
    const QuasiInverseResult b = quasi_inverse_ternary(anti, one, one);
    REQUIRE(b.exists());
    CHECK(std::abs(b.certificate->y(0) - cplx(0.5)) <= 1e-12);
    CHECK(b.certificate->residual_left <= 1e-12);
    CHECK(b.certificate->residual_right <= 1e-12);
    CHECK_FALSE(quasi_inverse_ternary(tro, one, one).exists());
  }

  TEST_CASE("Jacobson radical of fixed algebras") {
    CHECK(jacobson_radical(matrix_algebra(2)).dim() == 0);
    const RadicalReport d = jacobson_radical(dual_numbers(), 1);
    REQUIRE(d.dim() == 1);
    CHECK(subspace_distance(d.basis, support::vec({0.0, 1.0})) <= 1e-10);
    CHECK(d.is_ideal);
    CHECK(d.quotient_radical_dim == 0);
    CHECK(d.audit_failures == 0);
    CHECK(d.audits > 0);
    const RadicalReport u = jacobson_radical(upper_nilpotent(), 2);
    CHECK(u.dim() == 3);
    CHECK(u.audit_failures == 0);
    CHECK(jacobson_radical(m2_anti_algebra()).dim() == 0);
    CHECK(jacobson_radical(build_embedding(support::scalars({-1})).algebra()).dim() == 0);
  }

  TEST_CASE("Jacobson radical of a direct sum with a nilpotent summand") {
    // C (+) span{1, n}: radical is the n line
    const AssocAlgebra d = dual_numbers();
    std::vector<CMatrix> left;
    for (Eigen::Index i = 0; i < 3; ++i) {
      CMatrix l = CMatrix::Zero(3, 3);
      if (i == 0) l(0, 0) = 1.0;
      else l.bottomRightCorner(2, 2) = d.left(i - 1);
      left.push_back(l);
    }
    const RadicalReport r = jacobson_radical(AssocAlgebra(left), 3);
    REQUIRE(r.dim() == 1);
    CHECK(subspace_distance(r.basis, support::vec({0.0, 0.0, 1.0})) <= 1e-10);
  }

  TEST_CASE("ternary radicals vanish") {
    for (const auto& m : {support::scalars({1}), support::scalars({-1}), support::scalars({1, -1}),
                          support::full(2, 3, 1), support::full(3, 2, -1)}) {
      const TernaryRadicalReport r = ternary_radical(m, 4);
      CHECK(r.dim() == 0);
      CHECK(r.envelope_radical.dim() == 0);
    }
    const TernarySpace s = TernarySpace::from_structure(structure_constants_of(support::scalars({1, -1})));
    CHECK(ternary_radical(s, 4).dim() == 0);
  }

  TEST_CASE("envelope of a structure presentation is associative") {
    Rng rng = make_rng(41);
    const TernarySpace m = random_instance(InstanceKind::Mixed, rng, 6);
    const Envelope env = standard_envelope(TernarySpace::from_structure(structure_constants_of(m)));
    CHECK(env.algebra.associativity_residual() <= 1e-9);
    CHECK(env.corners.total == env.algebra.dim());
  }

  TEST_CASE("radical properties on embeddings") {
    Rng rng = make_rng(42);
    for (int k = 0; k < 3; ++k) {
      const StandardEmbedding e = build_embedding(random_instance(support::kind_of(k), rng, 8));
      const RadicalReport r = jacobson_radical(e.algebra(), 5);
      CHECK(r.dim() == 0);
      CHECK(r.is_ideal);
      CHECK(r.quotient_radical_dim == 0);
    }
  }

  TEST_CASE("corner equivalence on scalars") {
    const StandardEmbedding e = build_embedding(support::scalars({1}));
    const TernaryElement one(support::vec({1.0})), half(support::vec({0.5}));
    const EquivalenceCheck a = check_corner_qi_equivalence(e, one, half);
    CHECK(a.lhs);
    CHECK(a.rhs);
    const EquivalenceCheck b = check_corner_qi_equivalence(e, one, one);
    CHECK_FALSE(b.lhs);
    CHECK_FALSE(b.rhs);
  }

  TEST_CASE("symmetry principle on fixed elements") {
    const AssocAlgebra c = complex_line();
    const EquivalenceCheck z = check_symmetry_principle(c, support::vec({0.0}), support::vec({3.0}));
    CHECK(z.lhs);
    CHECK(z.rhs);
    const EquivalenceCheck o = check_symmetry_principle(c, support::vec({1.0}), support::vec({1.0}));
    CHECK_FALSE(o.lhs);
    CHECK(o.agree());
  }

  TEST_CASE("shifting pairs") {
    const AssocAlgebra a = m2_anti_algebra();
    const CMatrix id = CMatrix::Identity(4, 4);
    CHECK(check_shifting_principle(a, id, id, support::vec({1, 0, 0, 2}), support::vec({0, 1, 1, 0})).agree());
    Rng rng = make_rng(43);
    CHECK_THROWS_AS(ShiftingPair(a, random_cmatrix(4, 4, rng), id), PreconditionFailed);
  }

  TEST_CASE("lemma trials on small instances") {
    Rng rng = make_rng(44);
    for (int k = 0; k < 3; ++k) {
      const StandardEmbedding e = build_embedding(random_instance(support::kind_of(k), rng, 6));
      const AssocAlgebra& a = e.algebra();
      const LemmaTally c = run_corner_trials(e, 30, 7);
      CHECK(c.counterexamples == 0);
      CHECK(c.both_true > 0);
      CHECK(c.both_false > 0);
      const LemmaTally s = run_symmetry_trials(a, 30, 8);
      CHECK(s.counterexamples == 0);
      CHECK(s.both_false > 0);
      const ShiftingPair diag(a, corner_compression(e, 0), corner_compression(e, 0));
      const ShiftingPair off(a, corner_compression(e, 1), corner_compression(e, 2));
      CHECK(run_shifting_trials(diag, a, 30, 9).counterexamples == 0);
      CHECK(run_shifting_trials(off, a, 30, 10).counterexamples == 0);
    }
    const LemmaTally m2 = run_symmetry_trials(m2_anti_algebra(), 60, 11);
    CHECK(m2.counterexamples == 0);
  }
}
