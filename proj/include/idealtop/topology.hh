#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <optional>
#include <span>
#include <vector>

#include "idealtop/subset.hh"

namespace idealtop {

/// Why a family fails to be a topology (or an ideal). `first`/`second` carry
/// the offending sets where one exists.
struct FamilyDefect {
    enum class Kind {
        kOutOfWidth,
        kMissingEmpty,
        kMissingUniverse,
        kNotUnionClosed,
        kNotIntersectionClosed,
        kEmptyFamily,
        kNotDownwardClosed,
    };
    Kind kind;
    SubsetMask first{};
    SubsetMask second{};
};

/// Human-readable form, e.g. "not a topology: missing X". `render` prints a set.
std::string describe_defect(const FamilyDefect& d, std::string_view what,
                            const std::function<std::string(SubsetMask)>& render);

std::optional<FamilyDefect> topology_defect(int n, std::span<const SubsetMask> family);
bool is_topology(int n, std::span<const SubsetMask> family);
inline bool is_topology(const SetFamily& f) { return is_topology(f.n, f.members); }

/// A topology on {0, ..., n-1}. Opens are kept sorted by mask value, which is
/// also the order that indexes a GammaOperation table.
class Topology {
public:
    /// Validates; throws Error(kNotTopology) with the failed axiom.
    Topology(int n, std::vector<SubsetMask> opens);

    static Topology discrete(int n);
    static Topology indiscrete(int n);

    int size() const { return n_; }
    SubsetMask universe() const { return SubsetMask::full(n_); }
    const std::vector<SubsetMask>& opens() const { return opens_; }
    std::size_t open_count() const { return opens_.size(); }

    bool is_open(SubsetMask a) const;
    bool is_closed(SubsetMask a) const { return is_open(a.complement(n_)); }
    /// Position of `open` in opens(), or -1.
    int index_of(SubsetMask open) const;

    /// Canonical enumeration key: bit (m-1) set for each open m other than
    /// the empty set and X. Only meaningful for n <= 6.
    std::uint64_t family_code() const;

    bool operator==(const Topology&) const = default;

private:
    int n_;
    std::vector<SubsetMask> opens_;
};

SubsetMask interior(const Topology& t, SubsetMask a);
SubsetMask closure(const Topology& t, SubsetMask a);

bool is_regular_open(const Topology& t, SubsetMask a);
bool is_delta_open(const Topology& t, SubsetMask a);
bool is_dense(const Topology& t, SubsetMask a);
bool is_submaximal(const Topology& t);

/// A = U ∩ Cl(A) for some open U.
bool is_locally_closed(const Topology& t, SubsetMask a);
/// A = U ∩ K over every open U and closed K.
bool is_locally_closed_by_pairs(const Topology& t, SubsetMask a);

inline constexpr int kMaxEnumerationPoints = 5;

/// Every labeled topology on n points, ordered by family_code(). Throws
/// Error(kOutOfRange) for n > 5.
std::vector<Topology> enumerate_topologies(int n);

/// Filters all 2^(2^n - 2) candidate families through is_topology. n <= 4.
std::vector<Topology> enumerate_topologies_naive(int n);

/// Builds each topology from the preorder it specializes to (opens are the
/// up-closed sets), then sorts by family_code(). n <= 5.
std::vector<Topology> enumerate_topologies_by_preorder(int n);

} // namespace idealtop
