#include "conelab/theorems.hpp"

#include <chrono>
#include <numeric>
#include <utility>

#include "conelab/elim.hpp"
#include "conelab/herm.hpp"
#include "conelab/rng.hpp"
#include "conelab/samplers.hpp"
#include "conelab/spectrum.hpp"

namespace conelab {
namespace {

PositivityOpts checker_opts() {
  PositivityOpts opts;
  opts.seed = 0x7e57;
  opts.falsifier_rays = 64;  // checkers only need a cheap falsifier
  return opts;
}

void record(CheckOutcome& out, const QVec& vec, MembershipVerdict mv) {
  out.certificates.push_back({vec, std::move(mv)});
}

// Membership with certificate, appended to the outcome.
bool member_recorded(CheckOutcome& out, const Cone& cone, const QVec& vec) {
  MembershipVerdict mv = exact_member_verdict(cone, vec);
  const bool inside = mv.inside;
  record(out, vec, std::move(mv));
  return inside;
}

// Positivity gate; generator-image certificates are recorded when available.
bool positive_recorded(CheckOutcome& out, const Cone& cone, const LinearMap& t) {
  PositivityVerdict pv = is_positive(t, cone, checker_opts());
  if (cone.polyhedral()) {
    const QMat& g = cone.generators();
    for (std::size_t j = 0; j < pv.generator_images.size(); ++j)
      record(out, QVec(t.matrix * g.col(static_cast<Index>(j))),
             pv.generator_images[j]);
  }
  return pv.positive();
}

QMat minus_id(const QMat& m) {
  return m - QMat::Identity(m.rows(), m.cols());
}

QVec power_apply(const QMat& d, QVec v, int k) {
  for (int i = 0; i < k; ++i) v = d * v;
  return v;
}

bool matrix_zero(const QMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

CheckOutcome check_higher_rank(const Cone& cone, const LinearMap& t, const QVec& v,
                               int r) {
  if (r < 0) throw Error("check_higher_rank: r must be nonnegative");
  if (t.dim() != cone.ambient_dim() || v.size() != cone.ambient_dim())
    throw DimensionError("check_higher_rank: dimension mismatch");
  CheckOutcome out;
  if (!member_recorded(out, cone, v)) {
    out.note = "v outside the cone";
    return out;
  }
  if (!positive_recorded(out, cone, t)) {
    out.note = "positivity of T not certified";
    return out;
  }
  const QMat d = minus_id(t.matrix);
  if (!member_recorded(out, cone, QVec(-power_apply(d, v, r + 1)))) {
    out.note = "(T-id)^{r+1} v not <= 0";
    return out;
  }
  out.precondition_met = true;
  out.conclusion_holds = member_recorded(out, cone, power_apply(d, v, r));
  return out;
}

CheckOutcome check_rank2(const Cone& cone, const LinearMap& t, const QVec& v) {
  return check_higher_rank(cone, t, v, 1);
}

CheckOutcome check_intermediate_inequality(const Cone& cone, const LinearMap& t,
                                           const QVec& v, int r, int s, int n_max) {
  CheckOutcome out;
  if (s < 0 || s > r) {
    out.note = "s out of range";
    return out;
  }
  CheckOutcome gate = check_higher_rank(cone, t, v, r);
  out.certificates = std::move(gate.certificates);
  if (!gate.precondition_met) {
    out.note = gate.note;
    return out;
  }
  out.precondition_met = true;
  const QMat d = minus_id(t.matrix);
  const QVec w = power_apply(d, v, r - s);
  std::vector<QVec> dw(static_cast<std::size_t>(s) + 1);
  dw[0] = w;
  for (int k = 1; k <= s; ++k) dw[k] = d * dw[k - 1];
  bool all_hold = true;
  QVec lhs = w;  // T^n w
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) lhs = t.matrix * lhs;
    QVec rhs = QVec::Zero(w.size());
    for (int k = 0; k <= s; ++k) rhs += Rational(binomial(n, k)) * dw[k];
    if (!member_recorded(out, cone, QVec(rhs - lhs))) all_hold = false;
  }
  out.conclusion_holds = all_hold;
  return out;
}

BigInt hockey_stick(int n1, int t) {
  if (n1 < 0 || t < 0) throw Error("hockey_stick: arguments must be nonnegative");
  BigInt sum = 0;
  for (int n = 0; n < n1; ++n) sum += binomial(n, t);
  if (sum != binomial(n1, t + 1)) throw Error("hockey_stick: identity violated");
  return sum;
}

CheckOutcome check_cor_jordan2(const Cone& cone, const LinearMap& t) {
  if (t.dim() != cone.ambient_dim())
    throw DimensionError("check_cor_jordan2: dimension mismatch");
  CheckOutcome out;
  if (!positive_recorded(out, cone, t)) {
    out.note = "positivity of T not certified";
    return out;
  }
  if (!is_spectrum_singleton(t, Rational(1))) {
    out.note = "spectrum is not {1}";
    return out;
  }
  const QMat d = minus_id(t.matrix);
  if (!matrix_zero(QMat(d * d))) {
    out.note = "(T-id)^2 != 0: a Jordan block exceeds size 2";
    return out;
  }
  PositivityVerdict concl = is_positive(map_from_matrix(d), cone, checker_opts());
  if (concl.verdict == Positivity::Unknown) {
    out.note = "T - id positivity undecided";
    return out;
  }
  out.precondition_met = true;
  if (cone.polyhedral()) {
    const QMat& g = cone.generators();
    for (std::size_t j = 0; j < concl.generator_images.size(); ++j)
      record(out, QVec(d * g.col(static_cast<Index>(j))), concl.generator_images[j]);
  }
  out.conclusion_holds = concl.positive();
  return out;
}

CheckOutcome check_cor_generalized_ev(const Cone& cone, const LinearMap& t,
                                      const QVec& v, const Rational& lambda) {
  if (t.dim() != cone.ambient_dim() || v.size() != cone.ambient_dim())
    throw DimensionError("check_cor_generalized_ev: dimension mismatch");
  CheckOutcome out;
  if (lambda <= 0) {
    out.note = "lambda not positive";
    return out;
  }
  if (is_zero(v)) {
    out.note = "v = 0";
    return out;
  }
  if (!member_recorded(out, cone, v)) {
    out.note = "v outside the cone";
    return out;
  }
  if (!positive_recorded(out, cone, t)) {
    out.note = "positivity of T not certified";
    return out;
  }
  const Index n = cone.ambient_dim();
  const QMat d = QMat(t.matrix / lambda) - QMat::Identity(n, n);
  std::vector<QVec> powers{v};
  for (Index j = 1; j <= n; ++j) {
    powers.push_back(QVec(d * powers.back()));
    if (is_zero(powers.back())) break;
  }
  if (!is_zero(powers.back())) {
    out.note = "v is not a generalized eigenvector for lambda";
    return out;
  }
  out.precondition_met = true;
  // Last nonzero power: an eigenvector; the claim is that it lies in the cone.
  out.conclusion_holds = member_recorded(out, cone, powers[powers.size() - 2]);
  return out;
}

CheckOutcome check_cor_odd(const Cone& cone, const LinearMap& t, const QVec& v,
                           int r) {
  if (t.dim() != cone.ambient_dim() || v.size() != cone.ambient_dim())
    throw DimensionError("check_cor_odd: dimension mismatch");
  CheckOutcome out;
  if (r < 1 || r % 2 == 0) {
    out.note = "r must be odd";
    return out;
  }
  if (!member_recorded(out, cone, v)) {
    out.note = "v outside the cone";
    return out;
  }
  const auto inv = exact_inverse(t.matrix);
  if (!inv) {
    out.note = "T not invertible";
    return out;
  }
  if (!positive_recorded(out, cone, t)) {
    out.note = "positivity of T not certified";
    return out;
  }
  if (!positive_recorded(out, cone, map_from_matrix(*inv))) {
    out.note = "positivity of T^{-1} not certified";
    return out;
  }
  const QMat d = minus_id(t.matrix);
  if (!member_recorded(out, cone, QVec(-power_apply(d, v, r + 1)))) {
    out.note = "(T-id)^{r+1} v not <= 0";
    return out;
  }
  out.precondition_met = true;
  out.conclusion_holds = is_zero(power_apply(d, v, r));
  return out;
}

CheckOutcome check_richter_expansive(const CQMat& l) {
  const Index k = l.rows();
  if (l.cols() != k || k < 1 || k > 4)
    throw DimensionError("check_richter_expansive: factor must be k x k, k <= 4");
  CheckOutcome out;
  if (!m_isometry_order(l, 2)) {
    out.note = "not an isometry or 2-isometry";
    return out;
  }
  out.precondition_met = true;
  const CQMat m = CQMat(l.adjoint() * l) - CQMat::Identity(k, k);
  bool real = true;
  for (Index i = 0; i < k && real; ++i)
    for (Index j = 0; j < k; ++j)
      if (m(i, j).imag() != 0) {
        real = false;
        break;
      }
  if (real) {
    QMat mr(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) mr(i, j) = m(i, j).real();
    out.conclusion_holds = psd_exact_sym(mr);
    Cone cone = Cone::psd(k, MatrixField::Real);
    member_recorded(out, cone, sym_to_coords(mr));
  } else if (k == 2) {
    out.conclusion_holds = psd_exact_herm(m);
    Cone cone = Cone::psd(2, MatrixField::Complex);
    member_recorded(out, cone, herm_to_coords(m));
  } else {
    out.conclusion_holds = psd_exact_herm(m);
    out.note = "decision-only: no cone coordinates for complex k > 2";
  }
  return out;
}

// --- Instance construction ---------------------------------------------------

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

const Cone& four_ray_cone() {
  static const Cone cone = [] {
    QMat g(3, 4);
    g << 1, 0, 0, 1,  //
        0, 1, 0, -1,  //
        0, 0, 1, 1;
    return Cone::polyhedral_v(g);
  }();
  return cone;
}

QMat four_ray_matrix() {
  QMat t(3, 3);
  t << 1, 1, 0,  //
      0, 1, 1,   //
      0, 0, 1;
  return t;
}

Cone standard_cone(Index d) { return Cone::polyhedral_v(QMat::Identity(d, d)); }

// Nonnegative combination of cone generators, biased toward single rays so
// extreme-ray instances occur often.
QVec random_cone_member(Rng& rng, const Cone& cone) {
  const QMat& g = cone.generators();
  if (rng.uniform_int(0, 1) == 0)
    return g.col(rng.uniform_int(0, g.cols() - 1));
  QVec c(g.cols());
  for (Index i = 0; i < c.size(); ++i) c(i) = rng.uniform_int(0, 2);
  QVec v = g * c;
  if (is_zero(v)) return g.col(0);
  return v;
}

// Last j <= cap with (T-id)^j v != 0 (0 when (T-id)v = 0 already).
int last_nonzero_power(const QMat& t, const QVec& v, int cap) {
  const QMat d = minus_id(t);
  QVec p = v;
  int r = 0;
  for (int j = 1; j <= cap; ++j) {
    p = d * p;
    if (is_zero(p)) break;
    r = j;
  }
  return r;
}

TheoremInstance simplicial_unipotent_instance(Rng& rng, Index dim) {
  const QMat g = random_generator_matrix(rng, dim);
  const QMat n = upper_nilpotent(rng, dim, 3);
  const QMat g_inv = *exact_inverse(g);
  TheoremInstance inst{Cone::polyhedral_v(g),
                       map_from_matrix(QMat(g * (QMat::Identity(dim, dim) + n) * g_inv)),
                       QVec(), 0, 1};
  QVec x(dim);
  for (Index i = 0; i < dim; ++i) x(i) = rng.uniform_int(1, 3);
  inst.v = g * x;
  inst.r = last_nonzero_power(inst.t.matrix, inst.v, static_cast<int>(dim));
  return inst;
}

TheoremInstance nilpotent_rejection_instance(Rng& rng, Index dim) {
  Cone cone = dim == 3 ? four_ray_cone() : standard_cone(dim);
  TheoremInstance inst{std::move(cone), identity_map(dim), QVec(), 0, 1};
  const Cone& c = inst.cone;
  for (int attempt = 0; attempt < 200; ++attempt) {
    QMat n = QMat::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i)
      for (Index j = i + 1; j < dim; ++j) n(i, j) = rng.uniform_int(-1, 1);
    const QMat t = QMat::Identity(dim, dim) + n;
    inst.t = map_from_matrix(t);
    inst.v = random_cone_member(rng, c);
    inst.r = last_nonzero_power(t, inst.v, static_cast<int>(dim));
    bool positive = true;
    const QMat& g = c.generators();
    for (Index j = 0; j < g.cols() && positive; ++j)
      positive = exact_member(c, QVec(t * g.col(j)));
    if (positive) return inst;
  }
  return inst;  // budget exhausted: caller's precondition gate reports the skip
}

TheoremInstance soc_random_instance(Rng& rng, Index dim) {
  const Index n = std::max<Index>(dim, 3);
  Cone cone = Cone::second_order(n);
  QVec u(n - 2);
  for (Index i = 0; i < u.size(); ++i) u(i) = rng.rational(4, 2);
  const QVec x = soc_boundary_lift(u);
  QVec d = x;
  for (Index i = 1; i < n; ++i) d(i) = -d(i);  // J x
  const Rational alpha(rng.uniform_int(1, 4), 2);
  const QMat t = QMat::Identity(n, n) + alpha * x * d.transpose();
  TheoremInstance inst{std::move(cone), map_from_matrix(t), QVec(), 1, 1};
  QVec u2(n - 2);
  for (Index i = 0; i < u2.size(); ++i) u2(i) = rng.rational(4, 2);
  inst.v = soc_boundary_lift(u2);
  inst.v(0) += Rational(rng.uniform_int(0, 2));
  return inst;
}

CQMat complex_upper_unipotent(Rng& rng, Index k) {
  CQMat l = CQMat::Identity(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      l(i, j) = CRational(rng.rational(2, 2), rng.rational(2, 2));
  return l;
}

TheoremInstance psd_congruence_instance(Rng& rng, Index dim) {
  if (dim != 3 && dim != 4 && dim != 6)
    throw Error("psd-congruence: dim must be 3 (sym 2x2), 4 (herm 2x2) or 6 (sym 3x3)");
  TheoremInstance inst{Cone::psd(2, MatrixField::Real), identity_map(dim), QVec(), 0, 1};
  if (dim == 4) {
    inst.cone = Cone::psd(2, MatrixField::Complex);
    inst.t = congruence_map(complex_upper_unipotent(rng, 2));
    CQMat id2 = CQMat::Identity(2, 2);
    inst.v = herm_to_coords(id2);
  } else {
    const Index k = dim == 3 ? 2 : 3;
    inst.cone = Cone::psd(k, MatrixField::Real);
    QMat l = QMat::Identity(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = i + 1; j < k; ++j) l(i, j) = rng.rational(2, 2);
    inst.t = congruence_map_real(l);
    inst.v = sym_to_coords(QMat(QMat::Identity(k, k)));
  }
  inst.r = last_nonzero_power(inst.t.matrix, inst.v, static_cast<int>(dim));
  return inst;
}

}  // namespace

TheoremInstance generate_instance(const std::string& kind, Index dim,
                                  std::uint64_t seed) {
  if (dim < 1 || dim > 6) throw Error("generate_instance: dim must be in 1..6");
  Rng rng = Rng::derive(seed, fnv1a(kind) + static_cast<std::uint64_t>(dim));
  if (kind == "simplicial-unipotent") return simplicial_unipotent_instance(rng, dim);
  if (kind == "nilpotent-rejection") return nilpotent_rejection_instance(rng, dim);
  if (kind == "soc-random") return soc_random_instance(rng, dim);
  if (kind == "psd-congruence") return psd_congruence_instance(rng, dim);
  throw Error("generate_instance: unknown kind '" + kind + "'");
}

// --- Suites ------------------------------------------------------------------

namespace {

// 2x2 block [[1,0],[a,s]] with 0 < s < 1, padded to `dim` and conjugated by a
// positive monomial change of basis.  The sign of q = a v1 + (s-1) v2 is
// chosen so (T-id)^{r+1} v <= 0 holds with the power *nonzero*: this is the
// strict branch of the higher-rank statement.
TheoremInstance strict_contraction_instance(Rng& rng, int r, Index dim) {
  const Rational a(rng.uniform_int(1, 3), rng.uniform_int(1, 2));
  const Rational s(rng.uniform_int(1, 3), 4);
  const Rational v1(rng.uniform_int(1, 3));
  const Rational edge = a * v1 / (1 - s);
  Rational v2;
  if (r % 2 == 1) v2 = edge * Rational(rng.uniform_int(0, 3), 4);
  else v2 = edge * (1 + Rational(rng.uniform_int(1, 4), 4));
  QMat m = QMat::Identity(dim, dim);
  m(1, 0) = a;
  m(1, 1) = s;
  QVec v = QVec::Zero(dim);
  v(0) = v1;
  v(1) = v2;
  for (Index i = 2; i < dim; ++i) v(i) = rng.uniform_int(0, 2);
  // Conjugate by P D: a permutation and a positive diagonal.
  std::vector<Index> perm(dim);
  std::iota(perm.begin(), perm.end(), Index{0});
  for (Index i = dim; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_int(0, i - 1)]);
  QMat pd = QMat::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) pd(perm[i], i) = Rational(rng.uniform_int(1, 3), 2);
  const QMat pd_inv = *exact_inverse(pd);
  return {standard_cone(dim), map_from_matrix(QMat(pd * m * pd_inv)), QVec(pd * v), r, 1};
}

// Single Jordan chain: N has a positive superdiagonal, so (T-id)^{r+1} = 0 on
// the whole space while (T-id)^r != 0.
TheoremInstance chain_instance(Rng& rng, int r) {
  const Index dim = r + 1;
  QMat n = QMat::Zero(dim, dim);
  for (Index i = 0; i + 1 < dim; ++i) n(i, i + 1) = Rational(rng.uniform_int(1, 3));
  QVec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.uniform_int(1, 3);
  return {standard_cone(dim), map_from_matrix(QMat(QMat::Identity(dim, dim) + n)), v,
          r, 1};
}

// Conjugated chain on a random simplicial cone.
TheoremInstance conjugated_chain_instance(Rng& rng, int r) {
  const Index dim = r + 1;
  TheoremInstance base = chain_instance(rng, r);
  const QMat g = random_generator_matrix(rng, dim);
  const QMat g_inv = *exact_inverse(g);
  return {Cone::polyhedral_v(g),
          map_from_matrix(QMat(g * base.t.matrix * g_inv)), QVec(g * base.v), r, 1};
}

TheoremInstance four_ray_instance(Rng& rng, int bias_z) {
  const Cone& cone = four_ray_cone();
  QVec v = bias_z ? QVec(cone.generators().col(3)) : random_cone_member(rng, cone);
  return {cone, map_from_matrix(four_ray_matrix()), v, 2, 1};
}

// N = [0 X; 0 0] in a random block split: N^2 = 0 with N entrywise >= 0.
TheoremInstance block_square_zero_instance(Rng& rng, Index dim) {
  const Index split = rng.uniform_int(1, dim - 1);
  QMat n = QMat::Zero(dim, dim);
  for (Index i = 0; i < split; ++i)
    for (Index j = split; j < dim; ++j)
      if (rng.uniform_int(0, 1)) n(i, j) = Rational(rng.uniform_int(1, 3), 2);
  const QMat g = random_generator_matrix(rng, dim);
  const QMat g_inv = *exact_inverse(g);
  TheoremInstance inst{Cone::polyhedral_v(g),
                       map_from_matrix(QMat(g * (QMat::Identity(dim, dim) + n) * g_inv)),
                       QVec(), 1, 1};
  QVec x(dim);
  for (Index i = 0; i < dim; ++i) x(i) = rng.uniform_int(1, 2);
  inst.v = g * x;
  return inst;
}

// SOC map id + alpha x (Jx)^T with x on the boundary: (T-id)^2 = 0.
TheoremInstance soc_rank_one_instance(Rng& rng, Index n) {
  return soc_random_instance(rng, n);
}

// Monomial matrix (permutation times positive diagonal) with the diagonal
// rigged so one cycle has product 1; v is a fixed vector supported there.
TheoremInstance monomial_fixed_instance(Rng& rng, Index dim, int r, bool conjugate) {
  std::vector<Index> sigma(dim);
  std::iota(sigma.begin(), sigma.end(), Index{0});
  for (Index i = dim; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.uniform_int(0, i - 1)]);
  // (T x)_i = d_i x_{sigma(i)}  =>  T(i, sigma(i)) = d_i.
  std::vector<Rational> d(dim);
  for (Index i = 0; i < dim; ++i) d[i] = Rational(rng.uniform_int(1, 4), rng.uniform_int(1, 2));
  // Walk the cycle through 0 and force its product to 1.
  std::vector<Index> cycle{0};
  for (Index j = sigma[0]; j != 0; j = sigma[j]) cycle.push_back(j);
  Rational prod = 1;
  for (std::size_t c = 0; c + 1 < cycle.size(); ++c) prod *= d[cycle[c]];
  d[cycle.back()] = 1 / prod;
  QMat t = QMat::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) t(i, sigma[i]) = d[i];
  // Fixed vector: v_{sigma(i)} = v_i / d_i along the cycle, 0 elsewhere.
  QVec v = QVec::Zero(dim);
  v(0) = 1;
  for (std::size_t c = 0; c + 1 < cycle.size(); ++c)
    v(cycle[c + 1]) = v(cycle[c]) / d[cycle[c]];
  TheoremInstance inst{standard_cone(dim), map_from_matrix(t), v, r, 1};
  if (conjugate) {
    const QMat g = random_generator_matrix(rng, dim);
    const QMat g_inv = *exact_inverse(g);
    inst.cone = Cone::polyhedral_v(g);
    inst.t = map_from_matrix(QMat(g * t * g_inv));
    inst.v = g * v;
  }
  return inst;
}

TheoremInstance monomial_random_instance(Rng& rng, Index dim, int r) {
  TheoremInstance inst = monomial_fixed_instance(rng, dim, r, false);
  inst.v = random_cone_member(rng, inst.cone);  // no longer fixed: usually a skip
  return inst;
}

CQMat complex_diag(Rng& rng, Index k);

// Unit-modulus rational complex scalars.
CRational unit_scalar(Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0: return {1, 0};
    case 1: return {-1, 0};
    case 2: return {0, 1};
    case 3: return {0, -1};
    case 4: return {Rational(3, 5), Rational(4, 5)};
    default: return {Rational(5, 13), Rational(-12, 13)};
  }
}

CQMat complex_diag(Rng& rng, Index k) {
  CQMat l = CQMat::Zero(k, k);
  for (Index i = 0; i < k; ++i) l(i, i) = unit_scalar(rng);
  return l;
}

CQMat signed_permutation(Rng& rng, Index k, bool complex_phases) {
  std::vector<Index> sigma(k);
  std::iota(sigma.begin(), sigma.end(), Index{0});
  for (Index i = k; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.uniform_int(0, i - 1)]);
  CQMat l = CQMat::Zero(k, k);
  for (Index i = 0; i < k; ++i)
    l(i, sigma[i]) = complex_phases ? unit_scalar(rng)
                                    : CRational(rng.uniform_int(0, 1) ? 1 : -1, 0);
  return l;
}

CQMat rational_rotation(Rng& rng, Index k) {
  // Pythagorean cosine/sine pairs keep everything rational.
  static const std::pair<Rational, Rational> pairs[] = {
      {Rational(3, 5), Rational(4, 5)},
      {Rational(5, 13), Rational(12, 13)},
      {Rational(8, 17), Rational(15, 17)}};
  const auto& [c, s] = pairs[rng.uniform_int(0, 2)];
  CQMat l = CQMat::Identity(k, k);
  const Index i = rng.uniform_int(0, k - 2);
  l(i, i) = CRational(c, 0);
  l(i, i + 1) = CRational(-s, 0);
  l(i + 1, i) = CRational(s, 0);
  l(i + 1, i + 1) = CRational(c, 0);
  return l;
}

CQMat richter_factor(Rng& rng, long family) {
  switch (family) {
    case 0:
      return signed_permutation(rng, rng.uniform_int(1, 4), false);
    case 1: {
      const Index k = 2;
      return CQMat(signed_permutation(rng, k, true) * complex_diag(rng, k));
    }
    case 2: {
      const Index k = rng.uniform_int(2, 4);
      return CQMat(rational_rotation(rng, k) * signed_permutation(rng, k, false));
    }
    default: {
      // Skip slice: a Jordan block or a random non-isometric factor.
      if (rng.uniform_int(0, 1)) {
        CQMat j = CQMat::Identity(2, 2);
        j(0, 1) = CRational(1, 0);
        return j;
      }
      const Index k = rng.uniform_int(1, 3);
      CQMat l(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index jj = 0; jj < k; ++jj)
          l(i, jj) = CRational(rng.rational(2, 2), 0);
      return l;
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "rank2", "higher-rank", "inequality-s", "jordan2", "cor-ev", "cor-odd",
      "richter"};
  return names;
}

SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed,
                      std::vector<SuiteCert>* sink) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw Error("unknown suite '" + name + "'");
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.trials = trials;
  rep.seed = seed;
  for (long i = 0; i < trials; ++i) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(i));
    CheckOutcome out;
    std::optional<Cone> cone_for_sink;
    if (name == "rank2") {
      TheoremInstance inst = [&] {
        switch (i % 4) {
          case 0: {
            TheoremInstance b = block_square_zero_instance(rng, rng.uniform_int(2, 4));
            return b;
          }
          case 1: return strict_contraction_instance(rng, 1, rng.uniform_int(2, 4));
          case 2: return soc_rank_one_instance(rng, rng.uniform_int(3, 4));
          default:
            switch ((i / 4) % 3) {
              case 0: {
                TheoremInstance p = psd_congruence_instance(rng, 3);
                // v in the kernel of the nilpotent part: e2 e2^T is fixed.
                QMat e22 = QMat::Zero(2, 2);
                e22(1, 1) = 1;
                p.v = sym_to_coords(e22);
                return p;
              }
              case 1: return psd_congruence_instance(rng, (i / 12) % 2 ? 4 : 3);
              default: return nilpotent_rejection_instance(rng, rng.uniform_int(2, 4));
            }
        }
      }();
      out = check_rank2(inst.cone, inst.t, inst.v);
      cone_for_sink = inst.cone;
    } else if (name == "higher-rank" || name == "inequality-s") {
      const int r = static_cast<int>((i / 4) % 5);
      TheoremInstance inst = [&] {
        switch (i % 4) {
          case 0: return chain_instance(rng, r);
          case 1: return strict_contraction_instance(rng, r, std::max<Index>(2, r + 1));
          case 2: return conjugated_chain_instance(rng, r);
          default:
            if ((i / 4) % 4 == 3) {
              TheoremInstance n = nilpotent_rejection_instance(rng, rng.uniform_int(2, 4));
              n.r = static_cast<int>(rng.uniform_int(0, 4));
              return n;
            }
            return four_ray_instance(rng, i % 8 == 3);
        }
      }();
      if (name == "higher-rank") {
        out = check_higher_rank(inst.cone, inst.t, inst.v, inst.r);
      } else {
        const int s = inst.r > 0 ? static_cast<int>(rng.uniform_int(0, inst.r)) : 0;
        out = check_intermediate_inequality(inst.cone, inst.t, inst.v, inst.r, s, 20);
      }
      cone_for_sink = inst.cone;
    } else if (name == "jordan2") {
      TheoremInstance inst = [&] {
        const long f = i % 8;
        if (f < 3) return block_square_zero_instance(rng, rng.uniform_int(2, 4));
        if (f < 6) return soc_rank_one_instance(rng, rng.uniform_int(3, 4));
        if (f == 6) return psd_congruence_instance(rng, (i / 8) % 2 ? 4 : 3);
        return four_ray_instance(rng, 0);
      }();
      out = check_cor_jordan2(inst.cone, inst.t);
      cone_for_sink = inst.cone;
    } else if (name == "cor-ev") {
      TheoremInstance inst = [&] {
        const long f = i % 8;
        if (f < 2) return four_ray_instance(rng, 0);
        if (f < 4) {
          TheoremInstance p = psd_congruence_instance(rng, (i / 8) % 2 ? 4 : 3);
          if (p.cone.kind() == ConeKind::Psd && p.cone.psd_field() == MatrixField::Real) {
            const Index k = p.cone.psd_k();
            QVec x = rng.rational_vector(k, 3, 1);
            if (is_zero(x)) x(0) = 1;
            p.v = sym_to_coords(QMat(x * x.transpose()));
          }
          return p;
        }
        if (f < 6) {
          TheoremInstance u = simplicial_unipotent_instance(rng, rng.uniform_int(2, 4));
          const Rational lam(rng.uniform_int(1, 4), rng.uniform_int(1, 2));
          u.t = map_from_matrix(QMat(lam * u.t.matrix));
          u.lambda = lam;
          return u;
        }
        if (f == 6) return soc_rank_one_instance(rng, 3);
        // Skip slice: spectrum not {lambda}.
        TheoremInstance d = simplicial_unipotent_instance(rng, 3);
        QMat diag = QMat::Identity(3, 3);
        diag(0, 0) = 2;
        const QMat g = d.cone.generators();
        d.t = map_from_matrix(QMat(g * diag * *exact_inverse(g)));
        return d;
      }();
      out = check_cor_generalized_ev(inst.cone, inst.t, inst.v, inst.lambda);
      cone_for_sink = inst.cone;
    } else if (name == "cor-odd") {
      const int r = (i / 8) % 2 ? 3 : 1;
      TheoremInstance inst = [&] {
        const long f = i % 8;
        if (f < 3) return monomial_fixed_instance(rng, rng.uniform_int(2, 4), r, false);
        if (f < 5) return monomial_fixed_instance(rng, rng.uniform_int(2, 3), r, true);
        if (f == 5) {
          TheoremInstance id{standard_cone(3), identity_map(3), QVec(), r, 1};
          id.v = random_cone_member(rng, id.cone);
          return id;
        }
        return monomial_random_instance(rng, rng.uniform_int(2, 4), r);
      }();
      out = check_cor_odd(inst.cone, inst.t, inst.v, inst.r);
      cone_for_sink = inst.cone;
    } else {  // richter
      const CQMat l = richter_factor(rng, i % 4);
      out = check_richter_expansive(l);
      if (!out.certificates.empty()) {
        const Index k = l.rows();
        const CQMat gram = l.adjoint() * l;
        bool real = true;
        for (Index a = 0; a < k && real; ++a)
          for (Index b = 0; b < k; ++b)
            if (gram(a, b).imag() != 0) {
              real = false;
              break;
            }
        cone_for_sink = real ? Cone::psd(k, MatrixField::Real)
                             : Cone::psd(2, MatrixField::Complex);
      }
    }
    if (out.failed()) ++rep.failures;
    else if (out.precondition_met) ++rep.passes;
    else ++rep.skips;
    if (sink && cone_for_sink && !out.certificates.empty())
      sink->push_back({*cone_for_sink, std::move(out.certificates)});
  }
  rep.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace conelab
