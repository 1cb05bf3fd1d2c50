#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelab/elim.hpp"
#include "conelab/herm.hpp"
#include "conelab/membership.hpp"
#include "conelab/rng.hpp"

using namespace conelab;

namespace {

QVec qvec(std::initializer_list<long> xs) {
  QVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace

TEST_CASE("hermitian coordinates round-trip") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = Rng::derive(111, s);
    const QVec coords = rng.rational_vector(4, 5, 3);
    const CQMat m = herm_from_coords(coords);
    CHECK(m == CQMat(m.adjoint()));
    CHECK(herm_to_coords(m) == coords);
  }
  const CQMat m = herm_from_coords(qvec({2, 3, 1, -1}));
  CHECK(m(0, 0) == CRational(2, 0));
  CHECK(m(0, 1) == CRational(1, -1));
  CHECK(m(1, 0) == CRational(1, 1));
  CHECK(m(1, 1) == CRational(3, 0));
}

TEST_CASE("non-hermitian matrices are rejected") {
  CQMat bad(2, 2);
  bad << CRational(1, 0), CRational(1, 0), CRational(0, 0), CRational(1, 0);
  CHECK_THROWS(herm_to_coords(bad));
  CQMat imag_diag(2, 2);
  imag_diag << CRational(0, 1), CRational(0, 0), CRational(0, 0), CRational(1, 0);
  CHECK_THROWS(herm_to_coords(imag_diag));
}

TEST_CASE("symmetric coordinates: diagonal first, then upper rows") {
  QMat a(3, 3);
  a.setZero();
  a(0, 0) = 1; a(1, 1) = 2; a(2, 2) = 3;
  a(0, 1) = a(1, 0) = 4;
  a(0, 2) = a(2, 0) = 5;
  a(1, 2) = a(2, 1) = 6;
  CHECK(sym_to_coords(a) == qvec({1, 2, 3, 4, 5, 6}));
  CHECK(sym_from_coords(qvec({1, 2, 3, 4, 5, 6}), 3) == a);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = Rng::derive(222, s);
    const QVec coords = rng.rational_vector(6, 4, 3);
    CHECK(sym_to_coords(sym_from_coords(coords, 3)) == coords);
  }
}

TEST_CASE("soc map is a linear bijection matching its matrix") {
  const QMat h4 = herm_to_soc_matrix();
  const QMat s3 = sym2_to_soc_matrix();
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng = Rng::derive(333, s);
    const QVec h = rng.rational_vector(4, 5, 2);
    CHECK(herm_to_soc(h) == QVec(h4 * h));
    CHECK(soc_to_herm(herm_to_soc(h)) == h);
    const QVec y = rng.rational_vector(3, 5, 2);
    CHECK(sym2_to_soc(y) == QVec(s3 * y));
    CHECK(soc_to_sym2(sym2_to_soc(y)) == y);
  }
  CHECK(exact_det(h4) != 0);
  CHECK(exact_det(s3) != 0);
}

TEST_CASE("soc map is an order isomorphism for hermitian 2x2") {
  const Cone psd = Cone::psd(2, MatrixField::Complex);
  const Cone soc = Cone::second_order(4);
  for (std::uint64_t s = 0; s < 120; ++s) {
    Rng rng = Rng::derive(444, s);
    const QVec coords = rng.rational_vector(4, 3, 2);
    CHECK(exact_member(psd, coords) == exact_member(soc, herm_to_soc(coords)));
  }
  // Pinned identities: id -> (1, 0, 0, 0).
  CHECK(herm_to_soc(qvec({1, 1, 0, 0})) == qvec({1, 0, 0, 0}));
}

TEST_CASE("soc map is an order isomorphism for real symmetric 2x2") {
  const Cone psd = Cone::psd(2, MatrixField::Real);
  const Cone soc = Cone::second_order(3);
  for (std::uint64_t s = 0; s < 120; ++s) {
    Rng rng = Rng::derive(555, s);
    const QVec coords = rng.rational_vector(3, 3, 2);
    CHECK(exact_member(psd, coords) == exact_member(soc, sym2_to_soc(coords)));
  }
  CHECK(sym2_to_soc(qvec({1, 1, 0})) == qvec({1, 0, 0}));
}

TEST_CASE("soc margin equals the eigenvalue floor on the hermitian side") {
  // [[3,1],[1,3]] has eigenvalues {2,4}; image x = (3,0,1,0) has margin 3-1=2.
  const QVec x = herm_to_soc(qvec({3, 3, 1, 0}));
  const MembershipVerdict v = membership(Cone::second_order(4), x, Mode::Exact);
  CHECK(v.inside);
  CHECK(v.margin.exact());
  CHECK(v.margin.rational() == Rational(2));
}
