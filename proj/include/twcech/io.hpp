#pragma once

// JSON forms of nerves, twists, setups, groupoids, matrices and groups.
// Malformed input raises SchemaError.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twcech/fixtures.hpp"
#include "twcech/homology.hpp"
#include "twcech/tu_groupoid.hpp"

namespace twcech {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceSchema = "twcech.instance/1";
inline constexpr const char* kReportSchema = "twcech.report/1";

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json circle_to_json(const Circle& c);

Json nerve_to_json(const Nerve& nerve);
Nerve nerve_from_json(const Json& j);

Json twist_to_json(const TwistCocycle& twist);
/// Validates the cocycle condition (NotClosed).
TwistCocycle twist_from_json(const Nerve& nerve, const Json& j);

Json setup_to_json(const StandardSetup& setup);
/// No validation beyond shape; see setup_problems.
StandardSetup setup_from_json(const Nerve& nerve, const Json& j);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

Json group_to_json(const CohomologyGroup& g);
Json quotient_to_json(const QuotientGroup& g);

struct GroupoidSpec {
  TransformationGroupoid groupoid;
  std::vector<GroupoidCover> covers;  // the trivial cover when none given
};
GroupoidSpec groupoid_from_json(const Json& j);
Json groupoid_to_json(const TransformationGroupoid& g,
                      const std::vector<GroupoidCover>& covers);

/// An instance file: nerve, twist, optional setup and groupoid.
struct InstanceFile {
  Instance instance;
  std::optional<GroupoidSpec> groupoid;
};
Json instance_to_json(const Instance& instance);
InstanceFile instance_from_json(const Json& j);
Json parse_json(const std::string& text);

std::string sha256_hex(const std::string& bytes);

}  // namespace twcech
