#include "conelab/io.hpp"

#include <cmath>
#include <fstream>

namespace conelab {
namespace {

// Complex rational matrix entries travel as "re" strings when real, and as
// ["re", "im"] pairs otherwise.
Json centry_to_json(const CRational& z) {
  if (z.imag() == 0) return format_rational(z.real());
  return Json::array({format_rational(z.real()), format_rational(z.imag())});
}

CRational centry_from_json(const Json& j, Mode mode) {
  if (j.is_array()) {
    if (j.size() != 2)
      throw ParseError("complex entry must be a [re, im] pair");
    return {rational_from_json(j[0], mode), rational_from_json(j[1], mode)};
  }
  return {rational_from_json(j, mode), Rational(0)};
}

CQMat cmat_from_json(const Json& j, Mode mode) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  CQMat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols)
      throw ParseError("matrix rows have inconsistent lengths");
    for (Index k = 0; k < cols; ++k) m(i, k) = centry_from_json(j[i][k], mode);
  }
  return m;
}

Json cmat_to_json(const CQMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(centry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool cmat_is_real(const CQMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).imag() != 0) return false;
  return true;
}

Json vecvalue_to_json(const VecValue& v) {
  if (v.exact) return vec_to_json(*v.exact);
  Json arr = Json::array();
  for (Index i = 0; i < v.approx.size(); ++i) arr.push_back(v.approx(i));
  return arr;
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace

Json rational_to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const Json& j, Mode mode) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    if (mode == Mode::Exact)
      throw ParseError(
          "exact mode refuses floating-point input; write rationals as \"p/q\" strings");
    return rationalize(j.get<double>());
  }
  throw ParseError("expected a rational (string \"p/q\" or number), got " +
                   std::string(j.type_name()));
}

Json vec_to_json(const QVec& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(format_rational(v(i)));
  return arr;
}

QVec vec_from_json(const Json& j, Mode mode) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a nonempty array");
  QVec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = rational_from_json(j[i], mode);
  return v;
}

Json mat_to_json(const QMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat mat_from_json(const Json& j, Mode mode) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("matrix rows must be nonempty arrays");
  const Index cols = static_cast<Index>(j[0].size());
  QMat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols)
      throw ParseError("matrix rows have inconsistent lengths");
    for (Index k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], mode);
  }
  return m;
}

Json cone_to_json(const Cone& cone) {
  Json j;
  switch (cone.kind()) {
    case ConeKind::PolyhedralV: {
      j["kind"] = "polyhedral-v";
      Json gens = Json::array();
      const QMat& g = cone.generators();
      for (Index c = 0; c < g.cols(); ++c) gens.push_back(vec_to_json(g.col(c)));
      j["generators"] = std::move(gens);
      break;
    }
    case ConeKind::PolyhedralH: {
      j["kind"] = "polyhedral-h";
      Json rows = Json::array();
      const QMat& h = cone.ineq_rows();
      for (Index r = 0; r < h.rows(); ++r)
        rows.push_back(vec_to_json(h.row(r).transpose()));
      j["rows"] = std::move(rows);
      break;
    }
    case ConeKind::SecondOrder:
      j["kind"] = "soc";
      j["dim"] = cone.ambient_dim();
      break;
    case ConeKind::Psd:
      j["kind"] = "psd";
      j["k"] = cone.psd_k();
      j["field"] = cone.psd_field() == MatrixField::Complex ? "complex" : "real";
      break;
  }
  return j;
}

Cone cone_from_json(const Json& j, Mode mode) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("cone: expected an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "polyhedral-v") {
    if (!j.contains("generators") || !j["generators"].is_array() ||
        j["generators"].empty())
      throw ParseError("polyhedral-v cone needs a nonempty \"generators\" array");
    const auto& gens = j["generators"];
    const Index n = static_cast<Index>(gens[0].size());
    QMat g(n, static_cast<Index>(gens.size()));
    for (Index c = 0; c < g.cols(); ++c) {
      QVec v = vec_from_json(gens[c], mode);
      if (v.size() != n)
        throw DimensionError("polyhedral-v cone: generators have mixed dimensions");
      g.col(c) = v;
    }
    return Cone::polyhedral_v(g);
  }
  if (kind == "polyhedral-h") {
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
      throw ParseError("polyhedral-h cone needs a nonempty \"rows\" array");
    const auto& rows = j["rows"];
    const Index n = static_cast<Index>(rows[0].size());
    QMat h(static_cast<Index>(rows.size()), n);
    for (Index r = 0; r < h.rows(); ++r) {
      QVec v = vec_from_json(rows[r], mode);
      if (v.size() != n)
        throw DimensionError("polyhedral-h cone: rows have mixed dimensions");
      h.row(r) = v.transpose();
    }
    return Cone::polyhedral_h(h);
  }
  if (kind == "soc") {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
      throw ParseError("soc cone needs an integer \"dim\"");
    return Cone::second_order(j["dim"].get<Index>());
  }
  if (kind == "psd") {
    if (!j.contains("k") || !j["k"].is_number_integer())
      throw ParseError("psd cone needs an integer \"k\"");
    MatrixField field = MatrixField::Real;
    if (j.contains("field")) {
      const std::string f = j["field"].get<std::string>();
      if (f == "complex") field = MatrixField::Complex;
      else if (f == "real") field = MatrixField::Real;
      else throw ParseError("psd cone \"field\" must be \"real\" or \"complex\"");
    }
    return Cone::psd(j["k"].get<Index>(), field);
  }
  throw ParseError("unknown cone kind '" + kind + "'");
}

Json map_to_json(const LinearMap& t) {
  Json j;
  if (t.provenance) {
    if (const auto* cp = std::get_if<CongruenceProvenance>(&*t.provenance);
        cp && !cp->via_soc_iso) {
      j["kind"] = "congruence";
      if (cp->complex_factor) {
        j["field"] = "complex";
        j["L"] = cmat_to_json(cp->L);
      } else {
        j["field"] = "real";
        j["L"] = mat_to_json(cp->L_real);
      }
      return j;
    }
    if (const auto* tp = std::get_if<TwoSidedProvenance>(&*t.provenance)) {
      j["kind"] = "two-sided";
      j["L"] = mat_to_json(tp->L);
      j["R"] = mat_to_json(tp->R);
      return j;
    }
  }
  j["matrix"] = mat_to_json(t.matrix);
  return j;
}

LinearMap map_from_json(const Json& j, Mode mode) {
  if (!j.is_object()) throw ParseError("map: expected an object");
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "congruence") {
      if (!j.contains("L")) throw ParseError("congruence map needs \"L\"");
      const CQMat l = cmat_from_json(j["L"], mode);
      bool complex_field = !cmat_is_real(l);
      if (j.contains("field")) {
        const std::string f = j["field"].get<std::string>();
        if (f == "complex") complex_field = true;
        else if (f != "real")
          throw ParseError("congruence \"field\" must be \"real\" or \"complex\"");
        else if (!cmat_is_real(l))
          throw ParseError("congruence declared real but L has imaginary entries");
      }
      if (complex_field) return congruence_map(l);
      QMat lr(l.rows(), l.cols());
      for (Index a = 0; a < l.rows(); ++a)
        for (Index b = 0; b < l.cols(); ++b) lr(a, b) = l(a, b).real();
      return congruence_map_real(lr);
    }
    if (kind == "two-sided") {
      if (!j.contains("L") || !j.contains("R"))
        throw ParseError("two-sided map needs \"L\" and \"R\"");
      return lift_two_sided(mat_from_json(j["L"], mode), mat_from_json(j["R"], mode));
    }
    throw ParseError("unknown map kind '" + kind + "'");
  }
  if (!j.contains("matrix")) throw ParseError("map: expected \"matrix\" or \"kind\"");
  return map_from_matrix(mat_from_json(j["matrix"], mode));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

Cone load_cone(const std::string& path, Mode mode) {
  return cone_from_json(load_json_file(path), mode);
}

LinearMap load_map(const std::string& path, Mode mode) {
  return map_from_json(load_json_file(path), mode);
}

QVec load_vector(const std::string& path, Mode mode) {
  return vec_from_json(load_json_file(path), mode);
}

Json scalar_to_json(const ScalarValue& s) {
  if (s.exact()) return format_rational(s.rational());
  return s.as_double();
}

Json membership_to_json(const MembershipVerdict& v) {
  Json j;
  j["inside"] = v.inside;
  j["margin"] = scalar_to_json(v.margin);
  j["mode"] = v.mode == Mode::Exact ? "exact" : "approx";
  Json cert;
  if (const auto* c = std::get_if<CoeffsCert>(&v.cert)) {
    cert["type"] = "coeffs";
    cert["coeffs"] = vecvalue_to_json(c->coeffs);
  } else if (const auto* f = std::get_if<FarkasCert>(&v.cert)) {
    cert["type"] = "farkas";
    cert["y"] = vecvalue_to_json(f->y);
  } else if (const auto* e = std::get_if<EigenFloorCert>(&v.cert)) {
    cert["type"] = "eigen-floor";
    cert["lambda_min"] = scalar_to_json(e->lambda_min);
    Json poly = Json::array();
    for (const auto& c2 : e->char_poly) poly.push_back(format_rational(c2));
    cert["char_poly"] = std::move(poly);
  } else if (const auto* s = std::get_if<SocMarginCert>(&v.cert)) {
    cert["type"] = "soc-margin";
    cert["margin"] = scalar_to_json(s->margin);
  }
  j["certificate"] = std::move(cert);
  return j;
}

Json positivity_to_json(const PositivityVerdict& v) {
  Json j;
  switch (v.verdict) {
    case Positivity::Positive: j["verdict"] = "positive"; break;
    case Positivity::NotPositive: j["verdict"] = "not-positive"; break;
    case Positivity::Unknown: j["verdict"] = "unknown"; break;
  }
  switch (v.method) {
    case PositivityMethod::GeneratorCheck: j["method"] = "generator-check"; break;
    case PositivityMethod::MuCertificate: j["method"] = "mu-certificate"; break;
    case PositivityMethod::CongruenceForm: j["method"] = "congruence-form"; break;
    case PositivityMethod::FalsifiedBySample: j["method"] = "falsified-by-sample"; break;
    case PositivityMethod::Inconclusive: j["method"] = "inconclusive"; break;
  }
  if (!v.generator_images.empty()) {
    Json images = Json::array();
    for (const auto& mv : v.generator_images) images.push_back(membership_to_json(mv));
    j["generator_images"] = std::move(images);
  }
  if (v.mu) {
    Json mu;
    mu["mu"] = v.mu->mu;
    mu["floor"] = v.mu->floor;
    if (v.mu->exact_mu) mu["exact_mu"] = format_rational(*v.mu->exact_mu);
    mu["concave_on_grid"] = v.mu->concave_on_grid;
    mu["mu_max"] = v.mu->mu_max;
    j["mu_certificate"] = std::move(mu);
    j["nappe_checked"] = v.nappe_checked;
  }
  if (v.violation) j["violation"] = violation_to_json(*v.violation);
  return j;
}

Json violation_to_json(const OrderViolation& v) {
  Json j;
  j["v"] = vec_to_json(v.v);
  j["w"] = vec_to_json(v.w);
  j["v_inside"] = membership_to_json(v.v_inside);
  j["w_outside"] = membership_to_json(v.w_outside);
  return j;
}

Json spectrum_to_json(const SpectrumReport& r) {
  Json j;
  Json eigs = Json::array();
  for (const auto& z : r.eigenvalues) eigs.push_back(Json::array({z.real(), z.imag()}));
  j["eigenvalues"] = std::move(eigs);
  if (r.exact_singleton) {
    j["exact_singleton"] = Json{{"lambda", format_rational(r.exact_singleton->first)},
                                {"holds", r.exact_singleton->second}};
  } else {
    j["exact_singleton"] = nullptr;
  }
  j["residual"] = r.residual;
  return j;
}

Json jordan_to_json(const JordanProfile& p) {
  Json j;
  j["lambda"] = format_rational(p.lambda);
  j["rank_sequence"] = p.rank_sequence;
  j["block_sizes"] = p.block_sizes;
  j["largest_block"] = p.largest_block();
  return j;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  j["skips"] = r.skips;
  j["seed"] = r.seed;
  return j;
}

Json record_to_json(const CounterexampleRecord& r) {
  Json j;
  j["cone"] = cone_to_json(r.cone);
  j["map"] = map_to_json(r.t);
  j["matrix"] = mat_to_json(r.t.matrix);
  j["positivity"] = positivity_to_json(r.positivity);
  j["spectrum"] = spectrum_to_json(r.spectrum);
  j["violation"] = violation_to_json(r.violation);
  j["jordan"] = jordan_to_json(r.jordan);
  if (r.growth_exponent) j["growth_exponent"] = round2(*r.growth_exponent);
  return j;
}

}  // namespace conelab
