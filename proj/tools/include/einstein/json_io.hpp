#pragma once

#include <cspace/classify.hpp>
#include <cspace/flag.hpp>
#include <cspace/solver.hpp>

#include <json.hpp>

#include <ostream>
#include <string>

namespace einstein {

using Json = nlohmann::ordered_json;

// Field order is fixed by construction; doubles are written in shortest round-trip form and
// non-finite values (a singular condition number) become null.

Json to_json(const cspace::SpaceParams& p);
Json to_json(const cspace::EinsteinSolution& s);
Json to_json(const cspace::SolveReport& r);
Json to_json(const cspace::DegreeCertificate& c);
Json to_json(const cspace::CSpaceRecord& r);

/// Inverse of to_json(SolveReport); throws std::runtime_error on a malformed document.
cspace::SolveReport report_from_json(const Json& j);

cspace::Method method_from_string(const std::string& s);
cspace::Precision precision_from_string(const std::string& s);

/// Flat projection of the solutions with 17 significant digits.
void write_csv(std::ostream& out, const cspace::SolveReport& r);

} // namespace einstein
