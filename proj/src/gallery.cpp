#include "conelab/gallery.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "conelab/elim.hpp"
#include "conelab/herm.hpp"
#include "conelab/rng.hpp"
#include "conelab/samplers.hpp"

namespace conelab {
namespace {

Cone four_ray_cone() {
  QMat g(3, 4);
  g << 1, 0, 0, 1,  //
      0, 1, 0, -1,  //
      0, 0, 1, 1;
  return Cone::polyhedral_v(g);
}

QMat four_ray_matrix() {
  QMat t(3, 3);
  t << 1, 1, 0,  //
      0, 1, 1,   //
      0, 0, 1;
  return t;
}

CQMat jordan_factor() {
  CQMat l = CQMat::Identity(2, 2);
  l(0, 1) = CRational(1, 0);
  return l;
}

QMat jordan_factor_real() {
  QMat l = QMat::Identity(2, 2);
  l(0, 1) = 1;
  return l;
}

PositivityOpts gallery_opts() {
  PositivityOpts opts;
  opts.seed = 0x9a11e5;
  return opts;
}

}  // namespace

std::string gallery_case_name(GalleryCase c) {
  switch (c) {
    case GalleryCase::IceCream4: return "IceCream4";
    case GalleryCase::IceCream3: return "IceCream3";
    case GalleryCase::FourRay: return "FourRay";
  }
  return "?";
}

std::optional<GalleryCase> gallery_case_from_name(const std::string& name) {
  if (name == "IceCream4") return GalleryCase::IceCream4;
  if (name == "IceCream3") return GalleryCase::IceCream3;
  if (name == "FourRay") return GalleryCase::FourRay;
  return std::nullopt;
}

Cone gallery_cone(GalleryCase c) {
  switch (c) {
    case GalleryCase::IceCream4: return Cone::psd(2, MatrixField::Complex);
    case GalleryCase::IceCream3: return Cone::psd(2, MatrixField::Real);
    case GalleryCase::FourRay: return four_ray_cone();
  }
  throw Error("gallery_cone: bad case");
}

LinearMap gallery_map(GalleryCase c) {
  switch (c) {
    case GalleryCase::IceCream4: return congruence_map(jordan_factor());
    case GalleryCase::IceCream3: return congruence_map_real(jordan_factor_real());
    case GalleryCase::FourRay: return map_from_matrix(four_ray_matrix());
  }
  throw Error("gallery_map: bad case");
}

double growth_exponent(const QMat& t) {
  // Exact powers by repeated squaring; slope fitted on n = 2^4..2^10.
  std::vector<double> xs, ys;
  QMat p = t;
  for (int e = 1; e <= 10; ++e) {
    p = p * p;  // p = t^(2^e)
    if (e < 4) continue;
    xs.push_back(std::log(std::pow(2.0, e)));
    ys.push_back(std::log(to_double(p).norm()));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

CounterexampleRecord run_gallery(GalleryCase c) {
  const std::string name = gallery_case_name(c);
  const Cone cone = gallery_cone(c);
  const LinearMap t = gallery_map(c);
  const Index n = cone.ambient_dim();
  const PositivityOpts opts = gallery_opts();

  CounterexampleRecord rec{cone,          t, is_positive(t, cone, opts), spectrum(t),
                           OrderViolation{}, jordan_profile(t, 1),       std::nullopt};
  if (!rec.positivity.positive())
    throw Error(name + ": map is not certified positive");
  if (!verify_positivity(t, cone, rec.positivity))
    throw Error(name + ": positivity certificate failed verification");
  if (!rec.spectrum.exact_singleton || rec.spectrum.exact_singleton->first != 1 ||
      !rec.spectrum.exact_singleton->second)
    throw Error(name + ": spectrum is not exactly {1}");

  auto violation = find_violation(identity_map(n), t, cone, opts);
  if (!violation) throw Error(name + ": no order violation found");
  rec.violation = *violation;
  if (!verify_violation(identity_map(n), t, cone, rec.violation))
    throw Error(name + ": violation certificates failed verification");

  if (rec.jordan.largest_block() < 3)
    throw Error(name + ": largest Jordan block below 3 despite a violation");

  if (c == GalleryCase::IceCream4) {
    // The real-symmetric coordinate slice must be invariant, and restricting
    // there reproduces the 3-dim case exactly.
    const LinearMap restricted = restrict_to_real_symmetric(t);
    if (restricted.matrix != gallery_map(GalleryCase::IceCream3).matrix)
      throw Error("IceCream4: real-symmetric restriction does not match IceCream3");
    rec.growth_exponent = growth_exponent(t.matrix);
  }
  return rec;
}

// --- Counterexample search ---------------------------------------------------

namespace {

bool nilpotent_int(const std::vector<long>& cells, Index d) {
  // Integer nilpotency test via d-th power; entries stay tiny.
  std::array<long, 16> a{}, p{}, q{};
  for (Index i = 0; i < d * d; ++i) a[i] = p[i] = cells[i];
  for (Index step = 1; step < d; ++step) {
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        long s = 0;
        for (Index k = 0; k < d; ++k) s += p[i * d + k] * a[k * d + j];
        q[i * d + j] = s;
      }
    p = q;
  }
  for (Index i = 0; i < d * d; ++i)
    if (p[i] != 0) return false;
  return true;
}

// Verifies a candidate and builds its record; nullopt when it is not a
// counterexample.  The size-3 block law is asserted, not assumed.
std::optional<CounterexampleRecord> try_candidate(const Cone& cone, const LinearMap& t,
                                                  const PositivityOpts& opts) {
  const Index n = cone.ambient_dim();
  PositivityVerdict pos = is_positive(t, cone, opts);
  if (!pos.positive()) return std::nullopt;
  auto violation = find_violation(identity_map(n), t, cone, opts);
  if (!violation) return std::nullopt;
  CounterexampleRecord rec{cone,       t, std::move(pos), spectrum(t),
                           *violation, jordan_profile(t, 1), std::nullopt};
  if (!rec.spectrum.exact_singleton || rec.spectrum.exact_singleton->first != 1 ||
      !rec.spectrum.exact_singleton->second)
    return std::nullopt;
  if (!verify_positivity(t, cone, rec.positivity) ||
      !verify_violation(identity_map(n), t, cone, rec.violation))
    throw Error("search: candidate certificates failed verification");
  if (rec.jordan.largest_block() < 3)
    throw Error("search: record with all Jordan blocks <= 2 — implementation bug");
  return rec;
}

// Congruence-style candidate for the curved cones: a triangular unipotent
// factor, carried through the matrix-to-cone coordinate change.
LinearMap congruence_candidate(const Cone& cone, const Rational& re, const Rational& im,
                               bool lower) {
  if (cone.kind() == ConeKind::Psd) {
    if (cone.psd_field() == MatrixField::Complex) {
      CQMat l = CQMat::Identity(2, 2);
      l(lower ? 1 : 0, lower ? 0 : 1) = CRational(re, im);
      return congruence_map(l);
    }
    QMat l = QMat::Identity(cone.psd_k(), cone.psd_k());
    l(lower ? 1 : 0, lower ? 0 : 1) = re;
    return congruence_map_real(l);
  }
  // Second-order cone: conjugate the matrix-space congruence through the
  // coordinate identification.
  if (cone.ambient_dim() == 3) {
    QMat l = QMat::Identity(2, 2);
    l(lower ? 1 : 0, lower ? 0 : 1) = re;
    const QMat s = sym2_to_soc_matrix();
    return conjugate_map(congruence_map_real(l), s, *exact_inverse(s));
  }
  CQMat l = CQMat::Identity(2, 2);
  l(lower ? 1 : 0, lower ? 0 : 1) = CRational(re, im);
  const QMat s = herm_to_soc_matrix();
  return conjugate_map(congruence_map(l), s, *exact_inverse(s));
}

}  // namespace

std::vector<CounterexampleRecord> search_counterexamples(const SearchConfig& config) {
  const Cone& cone = config.cone;
  const Index n = cone.ambient_dim();
  if (n > 4) throw Error("search_counterexamples: ambient dimension must be <= 4");
  if (config.entry_bound < 1) throw Error("search_counterexamples: entry_bound must be >= 1");
  PositivityOpts opts;
  opts.seed = config.seed;
  opts.falsifier_rays = 256;
  std::vector<CounterexampleRecord> records;

  if (cone.polyhedral()) {
    const long b = config.entry_bound;
    if (config.strategy == SearchStrategy::Enumerate) {
      if (b * static_cast<long>(n) * static_cast<long>(n) > 20)
        throw Error("search_counterexamples: enumeration bound exceeded "
                    "(entry_bound * dim^2 must be <= 20)");
      // Odometer over all integer matrices with entries in [-b, b], in
      // candidate-encoding order.
      const Index cells_n = n * n;
      std::vector<long> cells(cells_n, -b);
      for (;;) {
        long trace = 0;
        for (Index i = 0; i < n; ++i) trace += cells[i * n + i];
        if (trace == 0 && nilpotent_int(cells, n)) {
          QMat t = QMat::Identity(n, n);
          for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) t(i, j) += Rational(cells[i * n + j]);
          if (auto rec = try_candidate(cone, map_from_matrix(t), opts))
            records.push_back(std::move(*rec));
        }
        Index pos = 0;
        while (pos < cells_n && cells[pos] == b) cells[pos++] = -b;
        if (pos == cells_n) break;
        ++cells[pos];
      }
    } else {
      Rng rng(config.seed);
      std::vector<QMat> seen;
      for (long trial = 0; trial < config.max_trials; ++trial) {
        std::vector<long> cells(n * n);
        for (auto& c : cells) c = rng.uniform_int(-b, b);
        long trace = 0;
        for (Index i = 0; i < n; ++i) trace += cells[i * n + i];
        if (trace != 0 || !nilpotent_int(cells, n)) continue;
        QMat t = QMat::Identity(n, n);
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j) t(i, j) += Rational(cells[i * n + j]);
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        if (auto rec = try_candidate(cone, map_from_matrix(t), opts))
          records.push_back(std::move(*rec));
      }
    }
    return records;
  }

  // Curved cones: congruence-style candidates.
  if (config.strategy == SearchStrategy::Enumerate) {
    const bool complex_factor =
        cone.kind() == ConeKind::SecondOrder ? n == 4
                                             : cone.psd_field() == MatrixField::Complex;
    for (int lower = 0; lower <= 1; ++lower)
      for (long re = -config.entry_bound; re <= config.entry_bound; ++re)
        for (long im = complex_factor ? -config.entry_bound : 0;
             im <= (complex_factor ? config.entry_bound : 0); ++im) {
          if (re == 0 && im == 0) continue;
          const LinearMap t =
              congruence_candidate(cone, Rational(re), Rational(im), lower == 1);
          if (auto rec = try_candidate(cone, t, opts)) records.push_back(std::move(*rec));
        }
    return records;
  }
  Rng rng(config.seed);
  for (long trial = 0; trial < config.max_trials; ++trial) {
    const bool complex_factor =
        cone.kind() == ConeKind::SecondOrder ? n == 4
                                             : cone.psd_field() == MatrixField::Complex;
    const Rational re = rng.rational(config.entry_bound, 2);
    const Rational im = complex_factor ? rng.rational(config.entry_bound, 2) : 0;
    if (re == 0 && im == 0) continue;
    const LinearMap t = congruence_candidate(cone, re, im, rng.uniform_int(0, 1) == 1);
    if (auto rec = try_candidate(cone, t, opts)) records.push_back(std::move(*rec));
  }
  return records;
}

SuiteReport simplicial_sanity(long trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.trials = trials;
  rep.seed = seed;
  PositivityOpts opts;
  opts.seed = seed;
  for (long i = 0; i < trials; ++i) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(i));
    const Index dim = 1 + i % 4;
    const QMat g = random_generator_matrix(rng, dim);
    const QMat m = QMat::Identity(dim, dim) + upper_nilpotent(rng, dim, 3);
    const QMat t = g * m * *exact_inverse(g);
    const Cone cone = Cone::polyhedral_v(g);
    PositivityVerdict leq = order_leq(identity_map(dim), map_from_matrix(t), cone, opts);
    if (leq.positive()) ++rep.passes;
    else ++rep.failures;
  }
  rep.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace conelab
