#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "idealtop/theorems.hh"

namespace idealtop {

/// "Does every set in all of `source` also lie in all of `target`?", asked
/// over the spaces satisfying `constraints`.
struct Query {
    std::vector<SetClass> source;
    std::vector<SetClass> target;
    std::vector<SpaceProperty> constraints;
    Bounds bounds;
};

struct HuntResult {
    std::optional<Witness> witness;
    std::uint64_t contexts_scanned = 0;
    bool budget_exhausted = false;
    std::string budget_message;
};

/// Scans in the same canonical order as verify(), so both report the same
/// first witness. Throws Error(kOutOfRange) for an invalid query.
HuntResult hunt(const Query& q);

struct AtlasCell {
    enum class Status { kImplied, kNoCounterexample, kRefuted, kBudgetExhausted };

    Status status = Status::kNoCounterexample;
    /// Roster ids establishing an implied cell, joined by " + ".
    std::string citation;
    std::optional<Witness> witness;

    bool operator==(const AtlasCell&) const = default;
};

std::string_view cell_status_name(AtlasCell::Status s);
std::optional<AtlasCell::Status> parse_cell_status(std::string_view name);

/// Ordered-pair implication matrix over the whole class catalogue, for one
/// set of constraints. cells[i][j] answers "class i implies class j".
struct AtlasMatrix {
    std::vector<SpaceProperty> constraints;
    Bounds bounds;
    std::array<std::array<AtlasCell, kClassCount>, kClassCount> cells{};

    const AtlasCell& cell(SetClass from, SetClass to) const { return cells[class_index(from)][class_index(to)]; }
    bool operator==(const AtlasMatrix&) const = default;
};

/// The roster citation chain proving from => to under `constraints`, if one
/// exists: a shortest path of single-class implication links whose
/// hypotheses are all among the constraints.
std::optional<std::string> cite_implication(SetClass from, SetClass to, const std::vector<SpaceProperty>& constraints);

/// Cited cells first; every other off-diagonal cell is hunted in one shared
/// scan. A cited cell that nevertheless acquires a witness throws
/// Error(kEngineDefect).
AtlasMatrix build_atlas(const std::vector<SpaceProperty>& constraints, const Bounds& bounds);

} // namespace idealtop
