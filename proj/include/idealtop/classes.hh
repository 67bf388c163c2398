#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string_view>
#include <vector>

#include "idealtop/gamma.hh"

namespace idealtop {

/// The catalogued set classes. Each is decided by its own defining condition
/// over the operator layer; no class is derived from another.
enum class SetClass : std::uint8_t {
    kOpen,
    kClosed,
    kRegularOpen,
    kDeltaOpen,
    kGammaOpen,
    kPreopen,
    kPreGammaOpen,
    kGammaPreopen,
    kGammaPOpen,
    kIOpen,
    kRIOpen,
    kPreIOpen,
    kSemiIOpen,
    kAlphaIOpen,
    kBIOpen,
    kWeaklyILocalClosed,
    kLocallyClosed,
    kDeltaIOpen,
    kPreGammaIOpen,
    kPreGammaIClosed,
};

inline constexpr std::size_t kClassCount = 20;

inline constexpr std::array<SetClass, kClassCount> kAllClasses = {
    SetClass::kOpen,          SetClass::kClosed,       SetClass::kRegularOpen,
    SetClass::kDeltaOpen,     SetClass::kGammaOpen,    SetClass::kPreopen,
    SetClass::kPreGammaOpen,  SetClass::kGammaPreopen, SetClass::kGammaPOpen,
    SetClass::kIOpen,         SetClass::kRIOpen,       SetClass::kPreIOpen,
    SetClass::kSemiIOpen,     SetClass::kAlphaIOpen,   SetClass::kBIOpen,
    SetClass::kWeaklyILocalClosed, SetClass::kLocallyClosed, SetClass::kDeltaIOpen,
    SetClass::kPreGammaIOpen, SetClass::kPreGammaIClosed,
};

constexpr std::size_t class_index(SetClass c) { return static_cast<std::size_t>(c); }

/// Upper-case catalogue name, e.g. "PRE_GAMMA_I_OPEN".
std::string_view class_name(SetClass c);
/// Accepts catalogue names case-insensitively, with '-' for '_'.
std::optional<SetClass> parse_class(std::string_view name);

bool is_member(const SpaceContext& ctx, SetClass c, SubsetMask a);

/// Membership of one subset in every class.
struct ClassVector {
    SubsetMask subset;
    std::bitset<kClassCount> flags;

    bool has(SetClass c) const { return flags.test(class_index(c)); }
    bool operator==(const ClassVector&) const = default;
};

ClassVector classify(const SpaceContext& ctx, SubsetMask a);
/// One vector per subset, in increasing mask order.
std::vector<ClassVector> classify_all(const SpaceContext& ctx);

} // namespace idealtop
