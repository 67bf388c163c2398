#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "idealtop/ideal.hh"
#include "idealtop/topology.hh"

namespace idealtop {

/// An operation on a topology, stored as a table: entry i is the image of the
/// i-th open set (in Topology::opens() order). Every entry must contain its
/// open set; the binding to a topology is checked by SpaceContext.
class GammaOperation {
public:
    GammaOperation() = default;
    explicit GammaOperation(std::vector<SubsetMask> images) : images_(std::move(images)) {}

    const std::vector<SubsetMask>& images() const { return images_; }
    SubsetMask image(std::size_t open_index) const { return images_.at(open_index); }
    std::size_t size() const { return images_.size(); }

    bool operator==(const GammaOperation&) const = default;

private:
    std::vector<SubsetMask> images_;
};

enum class GammaPreset { kIdentity, kConstantX, kClosure, kInteriorOfClosure };

std::string_view preset_name(GammaPreset p);
std::optional<GammaPreset> parse_preset(std::string_view name);
inline constexpr GammaPreset kAllPresets[] = {GammaPreset::kIdentity, GammaPreset::kConstantX,
                                              GammaPreset::kClosure, GammaPreset::kInteriorOfClosure};

GammaOperation make_preset(const Topology& t, GammaPreset p);

/// First open set whose image does not contain it, if any.
std::optional<std::size_t> non_expansive_entry(const Topology& t, const GammaOperation& g);

/// An ideal topological space with an operation: the context every set class
/// is evaluated against. The family of gamma-open sets is computed once at
/// construction from the definition (a scan over all 2^n subsets).
class SpaceContext {
public:
    /// Throws Error on width mismatch or a non-expansive gamma entry.
    SpaceContext(Topology topology, Ideal ideal, GammaOperation gamma);

    int size() const { return topology_.size(); }
    SubsetMask universe() const { return topology_.universe(); }
    const Topology& topology() const { return topology_; }
    const Ideal& ideal() const { return ideal_; }
    const GammaOperation& gamma() const { return gamma_; }
    const SetFamily& gamma_open_sets() const { return gamma_open_; }

    bool operator==(const SpaceContext& o) const
    {
        return topology_ == o.topology_ && ideal_ == o.ideal_ && gamma_ == o.gamma_;
    }

private:
    Topology topology_;
    Ideal ideal_;
    GammaOperation gamma_;
    SetFamily gamma_open_;
};

/// Each x in A has an open U containing x with gamma(U) ⊆ A.
bool is_gamma_open(const Topology& t, const GammaOperation& g, SubsetMask a);
inline bool is_gamma_open(const SpaceContext& ctx, SubsetMask a)
{
    return is_gamma_open(ctx.topology(), ctx.gamma(), a);
}

/// All gamma-open subsets, found by testing every subset of X.
SetFamily tau_gamma(const Topology& t, const GammaOperation& g);
inline const SetFamily& tau_gamma(const SpaceContext& ctx) { return ctx.gamma_open_sets(); }

/// Union of the gamma-open sets inside A.
SubsetMask tau_gamma_int(const SpaceContext& ctx, SubsetMask a);
/// Intersection of the gamma-closed sets containing A.
SubsetMask tau_gamma_cl(const SpaceContext& ctx, SubsetMask a);

/// For every x and open V containing x there is an open U containing x with
/// gamma(U) ⊆ V.
bool is_gamma_regular_space(const SpaceContext& ctx);
/// tau_gamma(ctx) equals the topology's open sets.
bool tau_equals_tau_gamma(const SpaceContext& ctx);

/// For every x and opens U, V containing x there is an open W containing x
/// with gamma(W) ⊆ gamma(U) ∩ gamma(V).
bool is_regular_operation(const SpaceContext& ctx);

enum class GammaMode { kFull, kPresets };
std::string_view gamma_mode_name(GammaMode m);
std::optional<GammaMode> parse_gamma_mode(std::string_view name);

inline constexpr std::uint64_t kDefaultGammaBudget = 1'000'000;

/// Number of operations `full` mode yields on t: the product over opens V of
/// 2^(n - |V|). Saturates at UINT64_MAX.
std::uint64_t count_gammas(const Topology& t);

/// Calls `visit` with each operation in enumeration order until it returns
/// false. Full mode enumerates every table with V ⊆ gamma(V), the first open
/// varying slowest and each image's free part in increasing mask order;
/// presets mode yields the four presets in kAllPresets order. Full mode throws
/// Error(kBudgetExceeded) when count_gammas(t) > budget.
void for_each_gamma(const Topology& t, GammaMode mode, std::uint64_t budget,
                    const std::function<bool(const GammaOperation&)>& visit);

std::vector<GammaOperation> enumerate_gammas(const Topology& t, GammaMode mode,
                                             std::uint64_t budget = kDefaultGammaBudget);

} // namespace idealtop
