#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelab/membership.hpp"
#include "conelab/rng.hpp"
#include "test_support.hpp"

using namespace conelab;

namespace {

QVec qvec(std::initializer_list<long> xs) {
  QVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

QMat cols(std::initializer_list<std::initializer_list<long>> columns) {
  const Index n = static_cast<Index>(columns.begin()->size());
  QMat m(n, static_cast<Index>(columns.size()));
  Index c = 0;
  for (const auto& col : columns) {
    Index i = 0;
    for (long x : col) m(i++, c) = Rational(x);
    ++c;
  }
  return m;
}

Cone four_ray() {
  return Cone::polyhedral_v(cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 1}}));
}

}  // namespace

TEST_CASE("orthant membership with verified certificates") {
  const Cone c = Cone::polyhedral_v(QMat::Identity(3, 3));
  const MembershipVerdict in = membership(c, qvec({1, 0, 2}), Mode::Exact);
  CHECK(in.inside);
  CHECK(in.margin.exact());
  CHECK(in.margin.rational() == Rational(0));
  REQUIRE(std::holds_alternative<CoeffsCert>(in.cert));
  CHECK(verify_membership(c, qvec({1, 0, 2}), in));

  const QVec out_v = qvec({1, -2, 0});
  const MembershipVerdict out = membership(c, out_v, Mode::Exact);
  CHECK_FALSE(out.inside);
  CHECK(out.margin.rational() == Rational(-2));
  REQUIRE(std::holds_alternative<FarkasCert>(out.cert));
  const QVec y = *std::get<FarkasCert>(out.cert).y.exact;
  CHECK(oracle::farkas_valid(c, out_v, y));
  CHECK(verify_membership(c, out_v, out));
}

TEST_CASE("four-generator cone: pinned inside and outside points") {
  const Cone c = four_ray();
  CHECK(exact_member(c, qvec({1, -1, 1})));
  CHECK(exact_member(c, qvec({0, 0, 1})));
  CHECK(exact_member(c, qvec({2, -1, 1})));  // sum of two generators

  const QVec w = qvec({-1, 1, 0});
  const MembershipVerdict out = membership(c, w, Mode::Exact);
  CHECK_FALSE(out.inside);
  CHECK(out.margin.rational() == Rational(-1));
  const QVec y = *std::get<FarkasCert>(out.cert).y.exact;
  CHECK(oracle::farkas_valid(c, w, y));
  // The classical alternative witness is just as valid.
  CHECK(oracle::farkas_valid(c, w, qvec({1, 0, 1})));
  CHECK(verify_membership(c, w, out));
}

TEST_CASE("polyhedral membership agrees with Fourier-Motzkin") {
  const Cone fr = four_ray();
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng = Rng::derive(717, s);
    const QVec x = rng.rational_vector(3, 3, 2);
    CHECK(exact_member(fr, x) == oracle::member_fm(fr.generators(), x));
  }
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng = Rng::derive(718, s);
    QMat g = rng.rational_matrix(3, 4, 2, 1);
    Cone c = fr;
    try {
      c = Cone::polyhedral_v(g);
    } catch (const ConeError&) {
      continue;
    }
    for (int k = 0; k < 6; ++k) {
      const QVec x = rng.rational_vector(3, 3, 2);
      CHECK(exact_member(c, x) == oracle::member_fm(g, x));
    }
  }
}

TEST_CASE("H-representation membership is the row check") {
  const QMat h = cols({{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}).transpose();
  const Cone c = Cone::polyhedral_h(h);
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng = Rng::derive(719, s);
    const QVec x = rng.rational_vector(3, 3, 2);
    bool rows_ok = true;
    for (Index i = 0; i < h.rows(); ++i)
      if (h.row(i).dot(x) < 0) rows_ok = false;
    CHECK(exact_member(c, x) == rows_ok);
    CHECK(verify_membership(c, x, membership(c, x, Mode::Exact)));
  }
}

TEST_CASE("second-order cone: exact decisions and margins") {
  const Cone c = Cone::second_order(3);
  const MembershipVerdict boundary = membership(c, qvec({5, 3, 4}), Mode::Exact);
  CHECK(boundary.inside);
  CHECK(boundary.margin.exact());
  CHECK(boundary.margin.rational() == Rational(0));
  CHECK(verify_membership(c, qvec({5, 3, 4}), boundary));

  const MembershipVerdict inside = membership(c, qvec({2, 1, 1}), Mode::Exact);
  CHECK(inside.inside);               // 4 >= 2 decided exactly
  CHECK_FALSE(inside.margin.exact()); // 2 - sqrt(2) has no rational value
  CHECK(inside.margin.as_double() == doctest::Approx(2 - std::sqrt(2.0)));

  const QVec out_v = qvec({1, 2, 0});
  const MembershipVerdict out = membership(c, out_v, Mode::Exact);
  CHECK_FALSE(out.inside);
  REQUIRE(std::holds_alternative<FarkasCert>(out.cert));
  const QVec y = *std::get<FarkasCert>(out.cert).y.exact;
  // Self-dual cone: the witness must live in the cone and pair negatively.
  CHECK(y(0) >= 0);
  CHECK(y(0) * y(0) >= y(1) * y(1) + y(2) * y(2));
  CHECK(y.dot(out_v) < 0);
  CHECK(verify_membership(c, out_v, out));

  const MembershipVerdict neg = membership(c, qvec({-3, 0, 0}), Mode::Exact);
  CHECK_FALSE(neg.inside);
  CHECK(verify_membership(c, qvec({-3, 0, 0}), neg));
}

TEST_CASE("psd cone over the reals: rational eigenvalue floors stay exact") {
  const Cone c = Cone::psd(2, MatrixField::Real);  // coords (a11, a22, a12)
  const MembershipVerdict id = membership(c, qvec({1, 1, 0}), Mode::Exact);
  CHECK(id.inside);
  CHECK(id.margin.exact());
  CHECK(id.margin.rational() == Rational(1));
  REQUIRE(std::holds_alternative<EigenFloorCert>(id.cert));
  CHECK_FALSE(std::get<EigenFloorCert>(id.cert).char_poly.empty());
  CHECK(verify_membership(c, qvec({1, 1, 0}), id));

  // [[1,2],[2,1]] has eigenvalues {-1, 3}: outside, with an exact margin even
  // in strict mode because the floor is rational.
  const MembershipVerdict out = membership(c, qvec({1, 1, 2}), Mode::Exact);
  CHECK_FALSE(out.inside);
  CHECK(out.margin.exact());
  CHECK(out.margin.rational() == Rational(-1));
  CHECK(verify_membership(c, qvec({1, 1, 2}), out));

  // [[0,2],[2,1]] has irrational eigenvalues (1 +- sqrt(17))/2: strict exact
  // mode refuses to hand back a float margin; relaxed mode degrades the
  // margin but still decides exactly.
  CHECK_THROWS_AS(membership(c, qvec({0, 1, 2}), Mode::Exact), ExactnessError);
  MemberOpts relaxed;
  relaxed.strict_exact_margin = false;
  const MembershipVerdict rel = membership(c, qvec({0, 1, 2}), Mode::Exact, relaxed);
  CHECK_FALSE(rel.inside);
  CHECK_FALSE(rel.margin.exact());
  CHECK(verify_membership(c, qvec({0, 1, 2}), rel));
  // Decision-only interface never throws.
  CHECK_FALSE(exact_member(c, qvec({0, 1, 2})));
}

TEST_CASE("complex psd coordinates decide hermitian positivity") {
  const Cone c = Cone::psd(2, MatrixField::Complex);  // (a, c, p, q) -> [[a, p+iq], [p-iq, c]]
  CHECK(exact_member(c, qvec({1, 1, 0, 0})));
  CHECK(exact_member(c, qvec({1, 1, 0, 1})));   // det 0: boundary
  CHECK_FALSE(exact_member(c, qvec({0, 1, 1, 0})));
  CHECK_FALSE(exact_member(c, qvec({-1, -1, 0, 0})));
  for (long a = 0; a <= 2; ++a)
    for (long d = 0; d <= 2; ++d)
      for (long p = -1; p <= 1; ++p)
        for (long q = -1; q <= 1; ++q) {
          const bool expect = a * d - p * p - q * q >= 0;  // trace>=0 given a,d>=0
          CHECK(exact_member(c, qvec({a, d, p, q})) == expect);
        }
}

TEST_CASE("exact and approximate modes agree away from the boundary") {
  const Cone cones[] = {four_ray(), Cone::second_order(4),
                        Cone::psd(2, MatrixField::Real),
                        Cone::psd(2, MatrixField::Complex)};
  for (const Cone& c : cones) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      Rng rng = Rng::derive(808, 97 * static_cast<std::uint64_t>(c.kind()) + s);
      const QVec x = rng.rational_vector(c.ambient_dim(), 4, 2);
      const MembershipVerdict approx = membership_approx(c, to_double(x));
      if (std::abs(approx.margin.as_double()) < 1e-6) continue;
      CHECK(approx.inside == exact_member(c, x));
      CHECK(verify_membership_approx(c, to_double(x), approx));
    }
  }
}

TEST_CASE("verification rejects tampered certificates") {
  const Cone c = four_ray();
  const QVec w = qvec({-1, 1, 0});
  MembershipVerdict out = membership(c, w, Mode::Exact);
  MembershipVerdict flipped = out;
  flipped.inside = true;
  CHECK_FALSE(verify_membership(c, w, flipped));

  MembershipVerdict bad_witness = out;
  bad_witness.cert = FarkasCert{VecValue(qvec({0, 1, 0}))};  // pairs positively with w
  CHECK_FALSE(verify_membership(c, w, bad_witness));

  const QVec z = qvec({1, -1, 1});
  MembershipVerdict in = membership(c, z, Mode::Exact);
  MembershipVerdict bad_coeffs = in;
  bad_coeffs.cert = CoeffsCert{VecValue(qvec({1, 1, 1, 1}))};  // wrong combination
  CHECK_FALSE(verify_membership(c, z, bad_coeffs));
}

TEST_CASE("dimension mismatches are refused") {
  CHECK_THROWS_AS(membership(four_ray(), qvec({1, 2}), Mode::Exact), DimensionError);
  CHECK_THROWS_AS(membership_approx(Cone::second_order(3), DVec::Zero(4)),
                  DimensionError);
}
