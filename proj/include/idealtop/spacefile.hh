#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idealtop/gamma.hh"

namespace idealtop {

inline constexpr int kSchemaVersion = 1;

/// A context together with the display names of its points. Point i of the
/// context is points[i]; names exist only at this layer.
struct NamedSpace {
    std::vector<std::string> points;
    SpaceContext context;

    bool operator==(const NamedSpace&) const = default;
};

/// "a", "b", ... for n <= 16.
std::vector<std::string> default_point_names(int n);

/// "{a,c}" style rendering.
std::string render_subset(const std::vector<std::string>& points, SubsetMask a);
nlohmann::json subset_to_json(const std::vector<std::string>& points, SubsetMask a);

/// Accepts "a,c", "{a,c}", "" / "{}" for the empty set, and run-together
/// single-character names such as "ac". Throws Error(kUnknownPoint).
SubsetMask parse_subset(const std::vector<std::string>& points, std::string_view text);

/// Parses and validates a space-spec document. Axiom violations throw Error
/// with kNotTopology / kNotIdeal / kGammaNotExpansive / kGammaIncomplete;
/// malformed input throws kSyntax or kSchema. Messages carry a line number.
NamedSpace parse_space_spec(std::string_view text);
NamedSpace space_from_json(const nlohmann::json& doc);

/// Canonical document: opens in mask order, ideal in principal form, gamma
/// as an explicit table over every open set.
nlohmann::json space_to_json(const NamedSpace& space);
std::string export_space_spec(const NamedSpace& space);

} // namespace idealtop
