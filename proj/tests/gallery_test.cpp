#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelab/gallery.hpp"
#include "conelab/samplers.hpp"

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

}  // namespace

TEST_CASE("case names round-trip") {
  for (GalleryCase c :
       {GalleryCase::IceCream4, GalleryCase::IceCream3, GalleryCase::FourRay}) {
    const auto back = gallery_case_from_name(gallery_case_name(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(gallery_case_from_name("icecream4").has_value());
  CHECK_FALSE(gallery_case_from_name("").has_value());
}

TEST_CASE("every pinned case yields a fully verified record") {
  for (GalleryCase c :
       {GalleryCase::IceCream4, GalleryCase::IceCream3, GalleryCase::FourRay}) {
    CAPTURE(gallery_case_name(c));
    const CounterexampleRecord r = run_gallery(c);
    CHECK(r.positivity.positive());
    CHECK(verify_positivity(r.t, r.cone, r.positivity));
    REQUIRE(r.spectrum.exact_singleton.has_value());
    CHECK(r.spectrum.exact_singleton->first == Rational(1));
    CHECK(r.spectrum.exact_singleton->second);
    CHECK(exact_member(r.cone, r.violation.v));
    CHECK_FALSE(exact_member(r.cone, r.violation.w));
    CHECK(r.violation.w == QVec(apply(r.t, r.violation.v) - r.violation.v));
    CHECK(verify_violation(identity_map(r.cone.ambient_dim()), r.t, r.cone,
                           r.violation));
    CHECK(r.jordan.largest_block() >= 3);
  }
}

TEST_CASE("four-generator case pins the known matrices and witness") {
  const CounterexampleRecord r = run_gallery(GalleryCase::FourRay);
  CHECK(r.t.matrix == qmat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(r.violation.v == qvec({1, -1, 1}));
  CHECK(r.violation.w == qvec({-1, 1, 0}));
  CHECK(apply(r.t, qvec({1, -1, 1})) == qvec({0, 0, 1}));
  CHECK(r.jordan.block_sizes == std::vector<int>{3});
  CHECK_FALSE(r.growth_exponent.has_value());
}

TEST_CASE("hermitian case restricts onto the real symmetric case") {
  const CounterexampleRecord h = run_gallery(GalleryCase::IceCream4);
  const CounterexampleRecord s = run_gallery(GalleryCase::IceCream3);
  CHECK(h.cone.kind() == ConeKind::Psd);
  CHECK(h.cone.psd_field() == MatrixField::Complex);
  CHECK(s.cone.psd_field() == MatrixField::Real);
  CHECK(restrict_to_real_symmetric(h.t).matrix == s.t.matrix);

  // T(id) = [[1,1],[1,2]] and det(T(id) - id) = -1.
  const QVec timage = apply(h.t, qvec({1, 1, 0, 0}));
  CHECK(timage == qvec({1, 2, 1, 0}));
  CHECK(h.violation.v == qvec({1, 1, 0, 0}));
  const QMat diff = qmat({{0, 1}, {1, 1}});  // [[1,1],[1,2]] - id
  CHECK(exact_det(diff) == Rational(-1));

  REQUIRE(h.growth_exponent.has_value());
  CHECK(std::isfinite(*h.growth_exponent));
  CHECK(*h.growth_exponent > 0);
}

TEST_CASE("growth exponent of a known scalar map is its polynomial degree") {
  // T = 2 id doubles every power: log ||T^n|| is linear in n, not log n; the
  // fitted slope against log n then explodes.  Use a unipotent instead:
  // [[1,1],[0,1]]^n has norm ~ n, slope ~ 1.
  const double slope = growth_exponent(qmat({{1, 1}, {0, 1}}));
  CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
  const double flat = growth_exponent(QMat::Identity(3, 3));
  CHECK(flat == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("exhaustive search rediscovers the pinned counterexample") {
  SearchConfig config{Cone::polyhedral_v(qmat({{1, 0, 0, 1},
                                               {0, 1, 0, -1},
                                               {0, 0, 1, 1}}))};
  config.entry_bound = 1;
  config.strategy = SearchStrategy::Enumerate;
  const auto records = search_counterexamples(config);
  CHECK_FALSE(records.empty());
  bool found = false;
  for (const auto& r : records) {
    CHECK(r.positivity.positive());
    CHECK(verify_positivity(r.t, r.cone, r.positivity));
    CHECK(verify_violation(identity_map(3), r.t, r.cone, r.violation));
    CHECK(r.jordan.largest_block() >= 3);
    if (r.t.matrix == qmat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})) found = true;
  }
  CHECK(found);
}

TEST_CASE("search on simplicial cones comes back empty") {
  // Lattice cones answer the domination question positively, so a correct
  // search must never produce a record there.
  Rng rng(424242);
  for (int i = 0; i < 6; ++i) {
    const Index n = 2 + static_cast<Index>(i % 2);
    const QMat g = random_generator_matrix(rng, n);
    SearchConfig config{Cone::polyhedral_v(g)};
    config.entry_bound = 1;
    config.strategy = SearchStrategy::Enumerate;
    CHECK(search_counterexamples(config).empty());
  }
}

TEST_CASE("sampled search on curved cones finds certified records") {
  SearchConfig config{Cone::second_order(3)};
  config.strategy = SearchStrategy::Sample;
  config.seed = 7;
  config.max_trials = 300;
  const auto records = search_counterexamples(config);
  CHECK_FALSE(records.empty());
  for (const auto& r : records) {
    CHECK(verify_positivity(r.t, r.cone, r.positivity));
    CHECK(verify_violation(identity_map(3), r.t, r.cone, r.violation));
    CHECK(r.jordan.largest_block() >= 3);
  }
}

TEST_CASE("search refuses oversized enumerations and ambients") {
  SearchConfig config{Cone::polyhedral_v(QMat::Identity(3, 3))};
  config.entry_bound = 5;  // 5 * 9 > 20
  config.strategy = SearchStrategy::Enumerate;
  CHECK_THROWS(search_counterexamples(config));

  SearchConfig big{Cone::second_order(5)};
  big.strategy = SearchStrategy::Sample;
  CHECK_THROWS(search_counterexamples(big));
}

TEST_CASE("random simplicial sanity sweep never fails") {
  const SuiteReport rep = simplicial_sanity(60, 1234);
  CHECK(rep.trials == 60);
  CHECK(rep.failures == 0);
  CHECK(rep.passes == 60);
  const SuiteReport again = simplicial_sanity(60, 1234);
  CHECK(again.passes == rep.passes);
}
