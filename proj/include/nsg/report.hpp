#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/enumeration.hpp"
#include "nsg/good_semigroup.hpp"
#include "nsg/ideal.hpp"
#include "nsg/inequality.hpp"

namespace nsg::report {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Objects keep keys sorted, so dumps are canonical.
using Json = nlohmann::json;

/// Envelope shared by every JSON document: schema_version, tool_version and
/// the command line that produced it, merged with `body`.
Json document(const std::vector<std::string>& command, Json body);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

struct SemigroupRecord {
  InvariantReport invariants;
  std::optional<int> wilf_witness;
  BookkeepingReport bookkeeping;
  std::vector<InequalityVerdict> verdicts;
  RelativeIdeal canonical;
};

/// Everything `info` shows, computed through the ideal route with cross checks.
SemigroupRecord describe(const SemigroupPtr& s);

Json to_json(const InequalityVerdict& v);
Json to_json(const BookkeepingReport& b);
Json to_json(const SemigroupRecord& r);
Json to_json(const RelativeIdeal& i);
Json to_json(const CensusSummary& c);
Json to_json(const Violation& v);
Json to_json(const plane::PlaneInvariantReport& r);
Json to_json(const plane::GoodSemigroupPlane& s);

inline constexpr const char* kCsvHeader = "check_id,gens,lhs,rhs,holds,equality";
/// Generators are space separated inside their field.
std::string csv_row(const InequalityVerdict& v);

/// Parses {"small_elements": [[x,y],...], "conductor": [c1,c2]}.
plane::GoodSemigroupPlane parse_plane_semigroup(const Json& j);

struct Parametrization {
  std::vector<plane::BranchPair> generators;
  int truncation = 0;
};
/// Parses {"generators": [{"branch1": [[exp, num, den], ...], "branch2": [...]}], "truncation": N}.
/// Numerators and denominators may be integers or decimal strings.
Parametrization parse_parametrization(const Json& j);

/// Reads and parses a JSON file; throws ParseError with the path on failure.
Json read_json_file(const std::string& path);

void print_record(std::ostream& out, const SemigroupRecord& r);
void print_verdicts(std::ostream& out, const std::vector<InequalityVerdict>& verdicts);
void print_ideal(std::ostream& out, const RelativeIdeal& i);
void print_census(std::ostream& out, const CensusSummary& c, bool with_classes);
void print_violations(std::ostream& out, const CensusSummary& c);
void print_plane(std::ostream& out, const plane::GoodSemigroupPlane& s);
void print_plane_report(std::ostream& out, const plane::PlaneInvariantReport& r);

}  // namespace nsg::report
