#pragma once

#include <string>

#include "json.hpp"

#include "conelab/gallery.hpp"
#include "conelab/membership.hpp"
#include "conelab/positivity.hpp"
#include "conelab/spectrum.hpp"
#include "conelab/theorems.hpp"

namespace conelab {

// Key order is part of the wire format: reports diff cleanly and round-trip
// byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

// Rationals travel as strings "p" or "p/q".  JSON numbers are accepted only
// in approx mode (and converted through a continued-fraction rationalizer);
// exact mode refuses them.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j, Mode mode = Mode::Exact);

Json vec_to_json(const QVec& v);
QVec vec_from_json(const Json& j, Mode mode = Mode::Exact);
Json mat_to_json(const QMat& m);
QMat mat_from_json(const Json& j, Mode mode = Mode::Exact);

Json cone_to_json(const Cone& cone);
Cone cone_from_json(const Json& j, Mode mode = Mode::Exact);

Json map_to_json(const LinearMap& t);
LinearMap map_from_json(const Json& j, Mode mode = Mode::Exact);

// File loading with distinct diagnostics (missing file, malformed JSON,
// invalid rational, dimension trouble) — all thrown as ParseError/Error
// subclasses.
Json load_json_file(const std::string& path);
Cone load_cone(const std::string& path, Mode mode = Mode::Exact);
LinearMap load_map(const std::string& path, Mode mode = Mode::Exact);
QVec load_vector(const std::string& path, Mode mode = Mode::Exact);

// Report fragments.
Json scalar_to_json(const ScalarValue& s);
Json membership_to_json(const MembershipVerdict& v);
Json positivity_to_json(const PositivityVerdict& v);
Json violation_to_json(const OrderViolation& v);
Json spectrum_to_json(const SpectrumReport& r);
Json jordan_to_json(const JordanProfile& p);
Json suite_report_to_json(const SuiteReport& r);  // {trials,passes,failures,skips,seed}
Json record_to_json(const CounterexampleRecord& r);

}  // namespace conelab
