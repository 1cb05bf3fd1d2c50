// conelab: certify memberships and positivity of linear maps on ordered
// vector spaces, property-test order-theoretic theorems, and reproduce the
// pinned counterexample gallery.
//
// Exit codes: 0 = property holds / verification passed;
//             1 = violation or counterexample found (certificates in report);
//             2 = input error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "conelab/io.hpp"

namespace {

using namespace conelab;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// JSON report to --out (or stdout); one human-readable summary line to the
// other stream, so stdout stays parseable when it carries the report.
void emit(const Json& report, const std::string& out_path, const std::string& line) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write report to '" + out_path + "'");
    out << report.dump(2) << "\n";
    std::cout << line << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
    std::cerr << line << "\n";
  }
}

Mode parse_mode(const std::string& mode) {
  return mode == "approx" ? Mode::Approx : Mode::Exact;
}

LinearMap load_side(const std::string& path, Mode mode, Index n) {
  if (path == "id") return map_from_matrix(QMat::Identity(n, n));
  LinearMap t = load_map(path, mode);
  if (t.dim() != n)
    throw DimensionError("map in '" + path + "' acts on dimension " +
                         std::to_string(t.dim()) + ", cone lives in " +
                         std::to_string(n));
  return t;
}

std::string verdict_word(Positivity v) {
  switch (v) {
    case Positivity::Positive: return "positive";
    case Positivity::NotPositive: return "not positive";
    case Positivity::Unknown: return "unknown";
  }
  return "unknown";
}

int run_membership(const std::string& cone_path, const std::string& vec_path,
                   Mode mode, double tol, const std::string& out_path) {
  Timer timer;
  const Cone cone = load_cone(cone_path, mode);
  const QVec x = load_vector(vec_path, mode);
  if (x.size() != cone.ambient_dim())
    throw DimensionError("vector has dimension " + std::to_string(x.size()) +
                         ", cone lives in " + std::to_string(cone.ambient_dim()));
  MemberOpts opts;
  opts.tol = tol;
  opts.strict_exact_margin = false;  // keep exact decisions on cones with irrational floors
  const MembershipVerdict verdict = membership(cone, x, mode, opts);
  const bool verified = verify_membership(cone, x, verdict, tol);

  Json report;
  report["verb"] = "membership";
  report["inputs"] = Json{{"cone", cone_path},
                          {"vector", vec_path},
                          {"mode", mode == Mode::Exact ? "exact" : "approx"},
                          {"tol", tol}};
  report["toolkit_version"] = kToolkitVersion;
  report["membership"] = membership_to_json(verdict);
  report["verified"] = verified;
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  line << "membership: " << (verdict.inside ? "inside" : "outside") << " (margin "
       << (verdict.margin.exact() ? format_rational(verdict.margin.rational())
                                  : std::to_string(verdict.margin.as_double()))
       << ", certificate " << (verified ? "verified" : "FAILED VERIFICATION") << ")";
  emit(report, out_path, line.str());
  if (!verified) return 1;
  return verdict.inside ? 0 : 1;
}

int run_positivity(const std::string& cone_path, const std::string& map_path,
                   Mode mode, std::uint64_t seed, double mu_max, double tol,
                   const std::string& out_path) {
  Timer timer;
  const Cone cone = load_cone(cone_path, mode);
  const LinearMap t = load_side(map_path, mode, cone.ambient_dim());
  PositivityOpts opts;
  opts.seed = seed;
  opts.mu_max = mu_max;
  opts.tol = tol;
  const PositivityVerdict verdict = is_positive(t, cone, opts);
  const bool verified = verdict.verdict == Positivity::Unknown
                            ? true
                            : verify_positivity(t, cone, verdict);

  Json report;
  report["verb"] = "positivity";
  report["inputs"] = Json{{"cone", cone_path},
                          {"map", map_path},
                          {"mode", mode == Mode::Exact ? "exact" : "approx"},
                          {"seed", seed},
                          {"mu_max", mu_max},
                          {"tol", tol}};
  report["toolkit_version"] = kToolkitVersion;
  report["positivity"] = positivity_to_json(verdict);
  report["verified"] = verified;
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  line << "positivity: " << verdict_word(verdict.verdict);
  if (verdict.verdict == Positivity::Positive)
    line << " (certificate " << (verified ? "verified" : "FAILED VERIFICATION") << ")";
  else if (verdict.verdict == Positivity::Unknown)
    line << " (no certificate and no violation found)";
  else
    line << " (violation witness " << (verified ? "verified" : "FAILED VERIFICATION")
         << ")";
  emit(report, out_path, line.str());
  if (!verified) return 1;
  return verdict.verdict == Positivity::Positive ? 0 : 1;
}

int run_order(const std::string& cone_path, const std::string& lhs_path,
              const std::string& rhs_path, Mode mode, std::uint64_t seed,
              double mu_max, double tol, const std::string& out_path) {
  Timer timer;
  const Cone cone = load_cone(cone_path, mode);
  const LinearMap lhs = load_side(lhs_path, mode, cone.ambient_dim());
  const LinearMap rhs = load_side(rhs_path, mode, cone.ambient_dim());
  PositivityOpts opts;
  opts.seed = seed;
  opts.mu_max = mu_max;
  opts.tol = tol;
  const PositivityVerdict verdict = order_leq(lhs, rhs, cone, opts);
  const LinearMap diff = map_from_matrix(QMat(rhs.matrix - lhs.matrix));
  const bool verified = verdict.verdict == Positivity::Unknown
                            ? true
                            : verify_positivity(diff, cone, verdict);

  Json report;
  report["verb"] = "order";
  report["inputs"] = Json{{"cone", cone_path},
                          {"lhs", lhs_path},
                          {"rhs", rhs_path},
                          {"mode", mode == Mode::Exact ? "exact" : "approx"},
                          {"seed", seed},
                          {"mu_max", mu_max},
                          {"tol", tol}};
  report["toolkit_version"] = kToolkitVersion;
  report["order"] = positivity_to_json(verdict);
  report["verified"] = verified;
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  switch (verdict.verdict) {
    case Positivity::Positive:
      line << "order: lhs <= rhs holds (certificate "
           << (verified ? "verified" : "FAILED VERIFICATION") << ")";
      break;
    case Positivity::NotPositive:
      line << "order: violated; witness "
           << (verified ? "verified" : "FAILED VERIFICATION");
      break;
    case Positivity::Unknown:
      line << "order: undecided (no certificate and no violation found)";
      break;
  }
  emit(report, out_path, line.str());
  if (!verified) return 1;
  return verdict.verdict == Positivity::Positive ? 0 : 1;
}

int run_spectrum(const std::string& map_path, Mode mode, const std::string& out_path) {
  Timer timer;
  const LinearMap t = load_map(map_path, mode);
  const SpectrumReport rep = spectrum(t);

  Json report;
  report["verb"] = "spectrum";
  report["inputs"] = Json{{"map", map_path},
                          {"mode", mode == Mode::Exact ? "exact" : "approx"}};
  report["toolkit_version"] = kToolkitVersion;
  report["spectrum"] = spectrum_to_json(rep);
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  if (rep.exact_singleton && rep.exact_singleton->second)
    line << "spectrum: singleton {" << format_rational(rep.exact_singleton->first)
         << "}";
  else
    line << "spectrum: " << rep.eigenvalues.size()
         << " eigenvalues, not a verified rational singleton";
  emit(report, out_path, line.str());
  return 0;
}

int run_jordan(const std::string& map_path, Mode mode, const std::string& out_path) {
  Timer timer;
  const LinearMap t = load_map(map_path, mode);
  const SpectrumReport rep = spectrum(t);
  if (!rep.exact_singleton || !rep.exact_singleton->second)
    throw Error(
        "jordan profile needs a singleton spectrum: lambda = trace/n must be "
        "the only eigenvalue, i.e. (T - lambda id)^n = 0");
  const Rational lambda = rep.exact_singleton->first;
  const JordanProfile profile = jordan_profile(t, lambda);

  Json report;
  report["verb"] = "jordan";
  report["inputs"] = Json{{"map", map_path},
                          {"mode", mode == Mode::Exact ? "exact" : "approx"}};
  report["toolkit_version"] = kToolkitVersion;
  report["spectrum"] = spectrum_to_json(rep);
  report["jordan"] = jordan_to_json(profile);
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  line << "jordan: lambda " << format_rational(lambda) << ", blocks [";
  for (std::size_t i = 0; i < profile.block_sizes.size(); ++i)
    line << (i ? "," : "") << profile.block_sizes[i];
  line << "], largest " << profile.largest_block();
  emit(report, out_path, line.str());
  return 0;
}

int run_gallery(const std::string& case_token, const std::string& out_path) {
  Timer timer;
  std::vector<GalleryCase> cases;
  if (case_token.empty()) {
    cases = {GalleryCase::IceCream4, GalleryCase::IceCream3, GalleryCase::FourRay};
  } else {
    const auto c = gallery_case_from_name(case_token);
    if (!c)
      throw ParseError("unknown gallery case '" + case_token +
                       "' (expected IceCream4, IceCream3, or FourRay)");
    cases = {*c};
  }

  Json report;
  report["verb"] = "gallery";
  report["inputs"] = Json{{"case", case_token.empty() ? "all" : case_token}};
  report["toolkit_version"] = kToolkitVersion;
  Json out_cases = Json::array();
  std::ostringstream line;
  line << "gallery:";
  bool all_verified = true;
  for (GalleryCase c : cases) {
    Json entry;
    entry["case"] = gallery_case_name(c);
    try {
      const CounterexampleRecord record = run_gallery(c);
      entry["record"] = record_to_json(record);
      line << " " << gallery_case_name(c) << " verified;";
    } catch (const Error& e) {
      all_verified = false;
      entry["regression_failure"] = e.what();
      line << " " << gallery_case_name(c) << " FAILED (" << e.what() << ");";
    }
    out_cases.push_back(std::move(entry));
  }
  report["cases"] = std::move(out_cases);
  report["elapsed_seconds"] = timer.seconds();
  emit(report, out_path, line.str());
  return all_verified ? 0 : 1;
}

int run_theorems(const std::string& suite, long trials, std::uint64_t seed,
                 const std::string& out_path) {
  Timer timer;
  const SuiteReport rep = run_suite(suite, trials, seed);

  Json report;
  report["verb"] = "theorems";
  report["inputs"] = Json{{"suite", suite}, {"trials", trials}, {"seed", seed}};
  report["toolkit_version"] = kToolkitVersion;
  report["report"] = suite_report_to_json(rep);
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  line << "theorems " << suite << ": " << rep.trials << " trials, " << rep.passes
       << " passes, " << rep.failures << " failures, " << rep.skips << " skips";
  emit(report, out_path, line.str());
  return rep.failures == 0 ? 0 : 1;
}

int run_search(const std::string& cone_path, Mode mode, long entry_bound,
               long trials, std::uint64_t seed, bool seed_given,
               const std::string& out_path) {
  Timer timer;
  SearchConfig config{load_cone(cone_path, mode)};
  config.entry_bound = entry_bound;
  config.seed = seed;
  config.max_trials = trials;
  const Index n = config.cone.ambient_dim();
  const bool exhaustive =
      config.cone.polyhedral() && entry_bound * n * n <= 20;
  config.strategy = exhaustive ? SearchStrategy::Enumerate : SearchStrategy::Sample;
  if (config.strategy == SearchStrategy::Sample && !seed_given)
    throw ParseError(
        "randomized search needs a seed: pass --seed or set CONELAB_SEED");
  const std::vector<CounterexampleRecord> records = search_counterexamples(config);

  Json report;
  report["verb"] = "search";
  report["inputs"] = Json{
      {"cone", cone_path},
      {"entry_bound", entry_bound},
      {"strategy",
       config.strategy == SearchStrategy::Enumerate ? "enumerate" : "sample"},
      {"trials", trials},
      {"seed", seed}};
  report["toolkit_version"] = kToolkitVersion;
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(record_to_json(r));
  report["count"] = records.size();
  report["records"] = std::move(recs);
  report["elapsed_seconds"] = timer.seconds();

  std::ostringstream line;
  line << "search: " << records.size() << " certified record"
       << (records.size() == 1 ? "" : "s") << " ("
       << (config.strategy == SearchStrategy::Enumerate ? "exhaustive" : "sampled")
       << ")";
  emit(report, out_path, line.str());
  return records.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "conelab: verified order theory for positive operators on cones"};
  app.require_subcommand(1);

  std::string cone_path, map_path, lhs_path, rhs_path, vec_path, out_path;
  std::string mode_name = "exact";
  std::string suite, gallery_token;
  long trials = 1000, entry_bound = 1;
  std::uint64_t seed = 0;
  double mu_max = -1.0, tol = 1e-9;

  const auto add_common = [&](CLI::App* sub, bool with_seed_required) {
    sub->add_option("--mode", mode_name, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the JSON report to this file");
    sub->add_option("--tol", tol, "approx-mode tolerance")->capture_default_str();
    auto* s = sub->add_option("--seed", seed, "RNG seed (no hidden entropy)")
                  ->envname("CONELAB_SEED");
    if (with_seed_required) s->required();
    return s;
  };

  auto* membership_cmd =
      app.add_subcommand("membership", "decide x in C with a certificate");
  membership_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
  membership_cmd->add_option("--vector", vec_path, "vector JSON file")->required();
  add_common(membership_cmd, false);

  auto* positivity_cmd = app.add_subcommand(
      "positivity", "decide whether T maps the cone into itself");
  positivity_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
  positivity_cmd->add_option("--map", map_path, "map JSON file (or 'id')")->required();
  positivity_cmd->add_option("--mu-max", mu_max,
                             "upper end of the certificate search interval");
  add_common(positivity_cmd, false);

  auto* order_cmd =
      app.add_subcommand("order", "decide lhs <= rhs in the cone order");
  order_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
  order_cmd->add_option("--lhs", lhs_path, "map JSON file or 'id'")->required();
  order_cmd->add_option("--rhs", rhs_path, "map JSON file or 'id'")->required();
  order_cmd->add_option("--mu-max", mu_max,
                        "upper end of the certificate search interval");
  add_common(order_cmd, false);

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues and singleton-spectrum check");
  spectrum_cmd->add_option("--map", map_path, "map JSON file")->required();
  add_common(spectrum_cmd, false);

  auto* jordan_cmd = app.add_subcommand(
      "jordan", "Jordan block profile at the singleton eigenvalue");
  jordan_cmd->add_option("--map", map_path, "map JSON file")->required();
  add_common(jordan_cmd, false);

  auto* gallery_cmd = app.add_subcommand(
      "gallery", "re-verify the pinned counterexample gallery");
  gallery_cmd->add_option("case", gallery_token,
                          "IceCream4, IceCream3, or FourRay (default: all)");
  gallery_cmd->add_option("--out", out_path, "write the JSON report to this file");

  auto* theorems_cmd =
      app.add_subcommand("theorems", "run a randomized theorem-checking suite");
  theorems_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  theorems_cmd->add_option("--trials", trials, "number of trials")
      ->capture_default_str();
  add_common(theorems_cmd, true);

  auto* search_cmd = app.add_subcommand(
      "search", "hunt for positive maps that fail to dominate the identity");
  search_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
  search_cmd->add_option("--entry-bound", entry_bound,
                         "max |entry| of the nilpotent part")
      ->capture_default_str();
  search_cmd->add_option("--trials", trials, "sampling budget")
      ->capture_default_str();
  auto* search_seed = add_common(search_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Mode mode = parse_mode(mode_name);
    if (membership_cmd->parsed())
      return run_membership(cone_path, vec_path, mode, tol, out_path);
    if (positivity_cmd->parsed())
      return run_positivity(cone_path, map_path, mode, seed, mu_max, tol, out_path);
    if (order_cmd->parsed())
      return run_order(cone_path, lhs_path, rhs_path, mode, seed, mu_max, tol,
                       out_path);
    if (spectrum_cmd->parsed()) return run_spectrum(map_path, mode, out_path);
    if (jordan_cmd->parsed()) return run_jordan(map_path, mode, out_path);
    if (gallery_cmd->parsed()) return run_gallery(gallery_token, out_path);
    if (theorems_cmd->parsed()) return run_theorems(suite, trials, seed, out_path);
    if (search_cmd->parsed())
      return run_search(cone_path, mode, entry_bound, trials, seed,
                        search_seed->count() > 0, out_path);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 2;
  } catch (const ConeError& e) {
    std::cerr << "cone error: " << e.what() << "\n";
    return 2;
  } catch (const ExactnessError& e) {
    std::cerr << "exactness error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
