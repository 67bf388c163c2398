#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "idealtop/classes.hh"

namespace idealtop {

/// Hypotheses a universe filter can require of a whole space.
enum class SpaceProperty : std::uint8_t {
    kGammaRegular,
    kSubmaximal,
    kStarExtremallyDisconnected,
    kTrivialIdeal,
    kFullIdeal,
    kRegularOperation,
};

inline constexpr std::size_t kPropertyCount = 6;
inline constexpr std::array<SpaceProperty, kPropertyCount> kAllProperties = {
    SpaceProperty::kGammaRegular,   SpaceProperty::kSubmaximal, SpaceProperty::kStarExtremallyDisconnected,
    SpaceProperty::kTrivialIdeal,   SpaceProperty::kFullIdeal,  SpaceProperty::kRegularOperation,
};

std::string_view property_name(SpaceProperty p);
std::optional<SpaceProperty> parse_property(std::string_view name);
bool has_property(const SpaceContext& ctx, SpaceProperty p);

/// Sorted, duplicate-free.
std::vector<SpaceProperty> normalize_properties(std::vector<SpaceProperty> props);

enum class StarFlag : std::uint8_t { kDenseInItself, kTauStarClosed, kPerfect };
std::string_view star_flag_name(StarFlag f);

/// One conjunct of a per-subset condition.
using Atom = std::variant<SetClass, StarFlag>;
using Conjunction = std::vector<Atom>;

std::string atom_name(const Atom& a);
std::string conjunction_name(const Conjunction& c);

/// Evaluated directly through is_member / star_status, bypassing any cache.
bool evaluate_atom(const SpaceContext& ctx, const Atom& atom, SubsetMask a);

/// Limits for an exhaustive scan. Sizes run n_min..n_max; `budget` caps the
/// total number of contexts, `gamma_budget` the full-mode operations per topology.
struct Bounds {
    int n_min = 1;
    int n_max = 3;
    GammaMode gamma_mode = GammaMode::kFull;
    std::uint64_t budget = 50'000'000;
    std::uint64_t gamma_budget = kDefaultGammaBudget;

    bool operator==(const Bounds&) const = default;
};

/// Position of a context in the canonical scan order.
struct ContextCoordinates {
    int n = 0;
    std::size_t topology = 0;
    std::size_t ideal = 0;
    std::uint64_t gamma = 0;

    auto operator<=>(const ContextCoordinates&) const = default;
};

/// Everything the per-subset checks need about one context, computed once.
class ContextFacts {
public:
    explicit ContextFacts(const SpaceContext& ctx);

    const SpaceContext& context() const { return *ctx_; }
    bool property(SpaceProperty p) const;
    const ClassVector& classes(SubsetMask a) const { return classes_[a.bits()]; }
    const StarStatus& status(SubsetMask a) const { return statuses_[a.bits()]; }
    bool atom(const Atom& atom, SubsetMask a) const;

private:
    const SpaceContext* ctx_;
    mutable std::bitset<kPropertyCount> known_;
    mutable std::bitset<kPropertyCount> values_;
    std::vector<ClassVector> classes_;
    std::vector<StarStatus> statuses_;
};

/// A context plus the subset(s) that break a claim.
struct Witness {
    ContextCoordinates coordinates;
    SpaceContext context;
    SubsetMask subset;
    std::optional<SubsetMask> partner;
    std::string detail;
    /// Atom name and its value at `subset`, in query order.
    std::vector<std::pair<std::string, bool>> evaluated;

    bool operator==(const Witness&) const = default;
};

struct ScanOutcome {
    std::uint64_t contexts = 0;
    bool budget_exceeded = false;
    std::string budget_message;
};

/// Visits every (topology, ideal, gamma) context within `bounds` in canonical
/// order: n, then topology index, ideal index, gamma index. Stops early when
/// `visit` returns false or the budget runs out.
ScanOutcome scan_universe(const Bounds& bounds,
                          const std::function<bool(const ContextCoordinates&, const SpaceContext&)>& visit);

} // namespace idealtop
