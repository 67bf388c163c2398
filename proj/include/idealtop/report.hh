#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idealtop/hunter.hh"
#include "idealtop/spacefile.hh"

namespace idealtop {

nlohmann::json bounds_to_json(const Bounds& b);
Bounds bounds_from_json(const nlohmann::json& j);

/// Witness contexts are embedded in the space-spec format with default point
/// names, so an exported witness can be fed straight back to `classify`.
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// `include_timing` adds runtime fields, which makes the output
/// run-dependent; without it the document is byte-stable for fixed bounds.
nlohmann::json verification_to_json(const std::vector<VerificationReport>& reports,
                                     const std::vector<FixtureCheck>& fixtures, const Bounds& bounds,
                                     bool include_timing);

nlohmann::json hunt_to_json(const Query& q, const HuntResult& r);

enum class AtlasFormat { kJson, kDot };
std::optional<AtlasFormat> parse_atlas_format(std::string_view name);

/// Byte-deterministic serialization. Throws Error(kUnknownName) for an
/// unsupported format name.
std::string export_atlas(const AtlasMatrix& m, std::string_view format);
std::string export_atlas(const AtlasMatrix& m, AtlasFormat format);
nlohmann::json atlas_to_json(const AtlasMatrix& m);
AtlasMatrix atlas_from_json(const nlohmann::json& j);

} // namespace idealtop
