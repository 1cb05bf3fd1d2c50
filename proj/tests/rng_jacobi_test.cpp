#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "conelab/jacobi.hpp"
#include "conelab/rng.hpp"

using namespace conelab;

TEST_CASE("splitmix64 reference outputs are pinned") {
  // First three outputs from state 1234567, per the published algorithm.
  Rng rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("derive gives reproducible independent streams") {
  Rng a = Rng::derive(99, 0);
  Rng b = Rng::derive(99, 0);
  Rng c = Rng::derive(99, 1);
  const std::uint64_t a0 = a.next(), b0 = b.next(), c0 = c.next();
  CHECK(a0 == b0);
  CHECK(a0 != c0);
  CHECK(Rng::derive(100, 0).next() != a0);
}

TEST_CASE("uniform_int stays within bounds and hits both ends") {
  Rng rng(7);
  bool lo_seen = false, hi_seen = false;
  for (int i = 0; i < 2000; ++i) {
    const long x = rng.uniform_int(-3, 5);
    CHECK(x >= -3);
    CHECK(x <= 5);
    lo_seen |= x == -3;
    hi_seen |= x == 5;
  }
  CHECK(lo_seen);
  CHECK(hi_seen);
}

TEST_CASE("uniform lies in the half-open unit interval") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("random rationals respect their bounds") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Rational q = rng.rational(3, 2);
    CHECK(abs(numerator(q)) <= 3 * 2);
    CHECK(denominator(q) <= 2);
    CHECK(q >= Rational(-3));
    CHECK(q <= Rational(3));
  }
}

TEST_CASE("jacobi eigenvalues match closed forms") {
  DMat a(2, 2);
  a << 2, 1, 1, 2;
  DVec ev = symmetric_eigenvalues(a);
  std::sort(ev.data(), ev.data() + ev.size());
  CHECK(ev(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(3.0).epsilon(1e-12));

  DMat d = DMat::Zero(4, 4);
  d.diagonal() << -1, 0, 2.5, 7;
  ev = symmetric_eigenvalues(d);
  std::sort(ev.data(), ev.data() + ev.size());
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(3) == doctest::Approx(7.0));
  CHECK(lambda_min_sym(d) == doctest::Approx(-1.0));
}

TEST_CASE("jacobi reproduces trace, determinant, and Frobenius norm") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng = Rng::derive(404, s);
    const Index n = 2 + static_cast<Index>(s % 4);
    DMat m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.gaussian();
    const DVec ev = symmetric_eigenvalues(m);
    CHECK(ev.sum() == doctest::Approx(m.trace()).epsilon(1e-10));
    CHECK(ev.squaredNorm() == doctest::Approx(m.squaredNorm()).epsilon(1e-10));
    double det = 1;
    for (Index i = 0; i < n; ++i) det *= ev(i);
    CHECK(det == doctest::Approx(m.determinant()).epsilon(1e-8));
  }
}

TEST_CASE("lambda_min flags indefiniteness") {
  DMat m(3, 3);
  m << 1, 2, 0,
       2, 1, 0,
       0, 0, 5;
  CHECK(lambda_min_sym(m) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(lambda_min_sym(DMat::Identity(3, 3)) == doctest::Approx(1.0));
}
