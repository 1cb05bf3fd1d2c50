#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelab/elim.hpp"
#include "conelab/rng.hpp"
#include "conelab/scalar.hpp"

using namespace conelab;

TEST_CASE("rational formatting round-trips") {
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-0/5") == Rational(0));
  // "1 2" and " 3" guard against the GMP constructors' whitespace tolerance,
  // which would otherwise read "1 2" as 12.
  for (const char* bad : {"", "1/0", "a", "1.5", "1/ 2", "--3", "1 2", " 3", "+"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("a third parses exactly, not as a decimal") {
  const Rational third = parse_rational("1/3");
  CHECK(third * 3 == Rational(1));
  CHECK(third != rationalize(0.333));
}

TEST_CASE("rationalize recovers small fractions from doubles") {
  CHECK(rationalize(0.5) == Rational(1, 2));
  CHECK(rationalize(-2.25) == Rational(-9, 4));
  CHECK(rationalize(1.0 / 3.0) == Rational(1, 3));
  CHECK(rationalize(0.0) == Rational(0));
  CHECK_THROWS(rationalize(std::numeric_limits<double>::infinity()));
}

TEST_CASE("binomial matches Pascal recursion") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(30, 15) == BigInt("155117520"));
  CHECK(binomial(4, 7) == 0);
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("scalar value carries exact and approximate forms") {
  const ScalarValue exact{Rational(1, 4)};
  CHECK(exact.exact());
  CHECK(exact.rational() == Rational(1, 4));
  CHECK(exact.as_double() == doctest::Approx(0.25));
  const ScalarValue approx{0.3};
  CHECK_FALSE(approx.exact());
  CHECK(approx.as_double() == doctest::Approx(0.3));
}

namespace {
QMat mat3(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("rank and determinant on pinned matrices") {
  CHECK(exact_rank(QMat::Identity(4, 4)) == 4);
  CHECK(exact_rank(mat3({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
  CHECK(exact_rank(QMat::Zero(3, 3)) == 0);
  CHECK(exact_det(mat3({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == Rational(30));
  CHECK(exact_det(mat3({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(exact_det(mat3({{1, 2}, {2, 4}})) == Rational(0));
}

TEST_CASE("determinant multiplies and rank bounds hold on random matrices") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = Rng::derive(101, s);
    const Index n = 2 + static_cast<Index>(s % 3);
    const QMat a = rng.rational_matrix(n, n, 4, 3);
    const QMat b = rng.rational_matrix(n, n, 4, 3);
    CHECK(exact_det(QMat(a * b)) == exact_det(a) * exact_det(b));
    const int ra = exact_rank(a);
    CHECK((exact_det(a) != 0) == (ra == n));
    CHECK(exact_rank(QMat(a * b)) <= std::min(ra, exact_rank(b)));
  }
}

TEST_CASE("inverse and solve agree with their defining identities") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = Rng::derive(202, s);
    const Index n = 2 + static_cast<Index>(s % 3);
    const QMat a = rng.rational_matrix(n, n, 4, 2);
    const auto inv = exact_inverse(a);
    if (!inv) {
      CHECK(exact_det(a) == 0);
      continue;
    }
    CHECK(QMat(a * *inv) == QMat::Identity(n, n));
    const QVec b = rng.rational_vector(n, 5, 2);
    const auto x = solve_unique(a, b);
    REQUIRE(x.has_value());
    CHECK(QVec(a * *x) == b);
  }
  CHECK_FALSE(exact_inverse(mat3({{1, 2}, {2, 4}})).has_value());
  CHECK_FALSE(solve_unique(mat3({{1, 2}, {2, 4}}), QVec::Zero(2)) .has_value());
}

TEST_CASE("nullspace columns span the kernel exactly") {
  const QMat a = mat3({{1, 2, 3}, {2, 4, 6}});
  const QMat null = exact_nullspace(a);
  CHECK(null.cols() == 2);
  for (Index c = 0; c < null.cols(); ++c)
    CHECK(is_zero(QVec(a * null.col(c))));
  CHECK(exact_rank(null) == 2);
  CHECK(exact_nullspace(QMat::Identity(3, 3)).cols() == 0);

  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = Rng::derive(303, s);
    const QMat m = rng.rational_matrix(3, 5, 3, 2);
    const QMat k = exact_nullspace(m);
    CHECK(exact_rank(m) + k.cols() == 5);
    for (Index c = 0; c < k.cols(); ++c)
      CHECK(is_zero(QVec(m * k.col(c))));
  }
}

TEST_CASE("rref pivots are consistent with rank") {
  QMat a = mat3({{0, 1, 2}, {1, 1, 1}, {1, 2, 3}});
  const auto pivots = rref_in_place(a);
  CHECK(static_cast<int>(pivots.size()) == exact_rank(mat3({{0, 1, 2}, {1, 1, 1}, {1, 2, 3}})));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    CHECK(a(static_cast<Index>(i), pivots[i]) == Rational(1));
    for (Index r = 0; r < a.rows(); ++r)
      if (r != static_cast<Index>(i)) CHECK(a(r, pivots[i]) == Rational(0));
  }
}
