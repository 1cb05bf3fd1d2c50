#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelab/spectrum.hpp"
#include "conelab/theorems.hpp"

using namespace conelab;

namespace {

QVec qvec(std::initializer_list<long> xs) {
  QVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

Cone orthant(Index n) { return Cone::polyhedral_v(QMat::Identity(n, n)); }

Cone four_ray() {
  QMat g(3, 4);
  g.col(0) = qvec({1, 0, 0});
  g.col(1) = qvec({0, 1, 0});
  g.col(2) = qvec({0, 0, 1});
  g.col(3) = qvec({1, -1, 1});
  return Cone::polyhedral_v(g);
}

const QMat kFourRayT = qmat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});

bool all_certs_verify(const Cone& cone, const CheckOutcome& out) {
  for (const auto& cm : out.certificates)
    if (!verify_membership(cone, cm.vector, cm.verdict)) return false;
  return true;
}

}  // namespace

TEST_CASE("rank-2 conclusion holds on a met instance and ships certificates") {
  const Cone c = orthant(2);
  const LinearMap t = map_from_matrix(qmat({{1, 1}, {0, 1}}));
  const CheckOutcome out = check_rank2(c, t, qvec({1, 1}));
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);
  CHECK_FALSE(out.failed());
  CHECK_FALSE(out.certificates.empty());
  CHECK(all_certs_verify(c, out));
}

TEST_CASE("rank-2 precondition gates unmet inputs without judging the conclusion") {
  const Cone c = orthant(2);
  const LinearMap t = map_from_matrix(qmat({{1, 1}, {0, 1}}));
  // v outside the cone.
  CheckOutcome out = check_rank2(c, t, qvec({-1, 1}));
  CHECK_FALSE(out.precondition_met);
  CHECK_FALSE(out.conclusion_holds.has_value());
  CHECK_FALSE(out.failed());
  // T not positive.
  out = check_rank2(c, map_from_matrix(qmat({{1, -1}, {0, 1}})), qvec({1, 1}));
  CHECK_FALSE(out.precondition_met);
}

TEST_CASE("higher-rank alternation on the four-generator cone") {
  const Cone c = four_ray();
  const LinearMap t = map_from_matrix(kFourRayT);
  const QVec z = qvec({1, -1, 1});

  // r = 2: -(T-id)^3 z = 0 lies in the cone, and (T-id)^2 z = (1,0,0) does too.
  CheckOutcome out = check_higher_rank(c, t, z, 2);
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);
  CHECK(all_certs_verify(c, out));

  // r = 1: -(T-id)^2 z = (-1,0,0) escapes the cone, so the gate closes.
  out = check_higher_rank(c, t, z, 1);
  CHECK_FALSE(out.precondition_met);
  CHECK_FALSE(out.conclusion_holds.has_value());
}

TEST_CASE("intermediate inequality holds across the whole n range") {
  const Cone c = orthant(3);
  const LinearMap t = map_from_matrix(qmat({{1, 2, 0}, {0, 1, 3}, {0, 0, 1}}));
  const QVec v = qvec({1, 1, 1});
  for (int s = 0; s <= 2; ++s) {
    const CheckOutcome out = check_intermediate_inequality(c, t, v, 2, s, 12);
    CHECK(out.precondition_met);
    REQUIRE(out.conclusion_holds.has_value());
    CHECK(*out.conclusion_holds);
    CHECK(all_certs_verify(c, out));
  }
}

TEST_CASE("hockey stick sums match the closed form") {
  CHECK(hockey_stick(5, 1) == 10);
  CHECK(hockey_stick(1, 0) == 1);
  CHECK(hockey_stick(12, 4) == binomial(12, 5));
  for (int n1 = 1; n1 <= 12; ++n1)
    for (int t = 0; t <= 6; ++t) {
      BigInt direct = 0;
      for (int n = 0; n < n1; ++n) direct += binomial(n, t);
      CHECK(hockey_stick(n1, t) == direct);
    }
}

TEST_CASE("square-zero perturbations dominate the identity") {
  const Cone c = orthant(3);
  const LinearMap t = map_from_matrix(qmat({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
  const CheckOutcome out = check_cor_jordan2(c, t);
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);

  // (T-id)^2 != 0 on the four-generator cone: precondition fails.
  const CheckOutcome fr = check_cor_jordan2(four_ray(), map_from_matrix(kFourRayT));
  CHECK_FALSE(fr.precondition_met);
}

TEST_CASE("generalized eigenvector of maximal rank stays in the cone") {
  const Cone c = orthant(2);
  const LinearMap t = map_from_matrix(qmat({{1, 1}, {0, 1}}));
  CheckOutcome out = check_cor_generalized_ev(c, t, qvec({0, 1}), Rational(1));
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);
  CHECK(all_certs_verify(c, out));

  // Scale-invariant: lambda = 2 with T doubled.
  out = check_cor_generalized_ev(c, map_from_matrix(qmat({{2, 2}, {0, 2}})),
                                 qvec({0, 1}), Rational(2));
  CHECK(out.precondition_met);
  CHECK(*out.conclusion_holds);

  // lambda <= 0 is outside the theorem.
  out = check_cor_generalized_ev(c, t, qvec({0, 1}), Rational(-1));
  CHECK_FALSE(out.precondition_met);
}

TEST_CASE("odd-rank corollary on invertible monomial maps") {
  const Cone c = orthant(2);
  // T swaps the axes with reciprocal weights; T^2 = id, fixed vector (2,1).
  const LinearMap t = map_from_matrix(
      QMat((QMat(2, 2) << Rational(0), Rational(2), Rational(1, 2), Rational(0))
               .finished()));
  CheckOutcome out = check_cor_odd(c, t, qvec({2, 1}), 1);
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);

  // Even r is outside the corollary.
  out = check_cor_odd(c, t, qvec({2, 1}), 2);
  CHECK_FALSE(out.precondition_met);

  // Positive diagonal map whose square drifts away from the cone gate.
  const LinearMap d = map_from_matrix(
      QMat((QMat(2, 2) << Rational(2), Rational(0), Rational(0), Rational(1, 2))
               .finished()));
  out = check_cor_odd(c, d, qvec({1, 1}), 1);
  CHECK_FALSE(out.precondition_met);  // -(T-id)^2 v has a negative entry

  // Non-invertible maps never meet the precondition.
  out = check_cor_odd(c, map_from_matrix(qmat({{1, 1}, {1, 1}})), qvec({1, 1}), 1);
  CHECK_FALSE(out.precondition_met);
}

TEST_CASE("expansive square condition for low-order isometries") {
  CQMat u(2, 2);
  u << CRational(0, 0), CRational(-1, 0), CRational(1, 0), CRational(0, 0);
  CheckOutcome out = check_richter_expansive(u);
  CHECK(out.precondition_met);
  REQUIRE(out.conclusion_holds.has_value());
  CHECK(*out.conclusion_holds);

  CQMat j(2, 2);
  j << CRational(1, 0), CRational(1, 0), CRational(0, 0), CRational(1, 0);
  CHECK_FALSE(check_richter_expansive(j).precondition_met);  // order 3

  CQMat twice(2, 2);
  twice << CRational(2, 0), CRational(0, 0), CRational(0, 0), CRational(2, 0);
  CHECK_FALSE(check_richter_expansive(twice).precondition_met);
}

TEST_CASE("generated instances satisfy their advertised invariants") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const TheoremInstance a = generate_instance("simplicial-unipotent", 3, s);
    CHECK(a.cone.ambient_dim() == 3);
    CHECK(exact_member(a.cone, a.v));
    CHECK(is_positive(a.t, a.cone).positive());
    CHECK(is_spectrum_singleton(a.t, Rational(1)));

    const TheoremInstance b = generate_instance("nilpotent-rejection", 3, s);
    CHECK(b.cone.ambient_dim() == 3);
    CHECK(is_spectrum_singleton(b.t, Rational(1)));

    const TheoremInstance soc = generate_instance("soc-random", 4, s);
    CHECK(soc.cone.kind() == ConeKind::SecondOrder);
    CHECK(exact_member(soc.cone, soc.v));
    CHECK(is_positive(soc.t, soc.cone).positive());

    const TheoremInstance psd = generate_instance("psd-congruence", 4, s);
    CHECK(psd.cone.kind() == ConeKind::Psd);
    CHECK(psd.cone.ambient_dim() == 4);
    CHECK(is_positive(psd.t, psd.cone).positive());
  }
  CHECK_THROWS(generate_instance("no-such-kind", 3, 0));
}

TEST_CASE("suites are deterministic and never fail") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport a = run_suite(name, 150, 31415);
    const SuiteReport b = run_suite(name, 150, 31415);
    CHECK(a.trials == 150);
    CHECK(a.passes == b.passes);
    CHECK(a.failures == 0);
    CHECK(a.skips == b.skips);
    CHECK(a.seed == 31415);
    CHECK(a.passes + a.skips == a.trials);
    CHECK(a.passes > 100);  // the families keep the met fraction high
  }
  CHECK_THROWS(run_suite("not-a-suite", 10, 0));
}

TEST_CASE("suite certificate sink re-verifies end to end") {
  std::vector<SuiteCert> sink;
  const SuiteReport rep = run_suite("rank2", 60, 2718, &sink);
  CHECK(rep.failures == 0);
  CHECK(sink.size() == 60);
  long verified = 0;
  for (const SuiteCert& sc : sink)
    for (const CertifiedMembership& cm : sc.certs) {
      CHECK(verify_membership(sc.cone, cm.vector, cm.verdict));
      ++verified;
    }
  CHECK(verified > 100);  // several certificates per met trial
}

TEST_CASE("n-step averages stay above the n-th power step") {
  // For every met rank-2 instance, n(T-id)v - (T^n v - v) must lie in the
  // cone: the difference telescopes into positive images of -(T-id)^2 v.
  int met = 0;
  for (std::uint64_t s = 0; s < 25; ++s) {
    const TheoremInstance inst =
        generate_instance("simplicial-unipotent", 2 + static_cast<Index>(s % 3), s);
    if (!check_rank2(inst.cone, inst.t, inst.v).precondition_met) continue;
    ++met;
    const QMat& m = inst.t.matrix;
    const Index n = m.rows();
    QMat power = QMat::Identity(n, n);
    for (int k = 1; k <= 20; ++k) {
      power = QMat(power * m);
      const QVec lhs = Rational(k) * QVec((m - QMat::Identity(n, n)) * inst.v);
      const QVec rhs = QVec(power * inst.v) - inst.v;
      CHECK(exact_member(inst.cone, QVec(lhs - rhs)));
    }
  }
  CHECK(met >= 15);
}
