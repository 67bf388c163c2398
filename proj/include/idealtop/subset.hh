#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealtop {

/// Largest ground set the bitmask representation supports.
inline constexpr int kMaxPoints = 16;

/// A subset of the ground set {0, ..., n-1}; bit i is set iff point i belongs to it.
///
/// The width n is not stored: every operation that needs it (complement, the
/// full set) takes it explicitly. Callers are responsible for keeping masks
/// within width; `within(n)` checks that.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

    static constexpr SubsetMask empty_set() { return SubsetMask(); }
    static constexpr SubsetMask full(int n) { return SubsetMask(n >= 32 ? ~0u : (1u << n) - 1u); }
    static constexpr SubsetMask point(int i) { return SubsetMask(1u << i); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }
    constexpr bool within(int n) const { return subset_of(full(n)); }
    constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    /// Set difference.
    constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
    constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const SubsetMask&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// Number of subsets of an n-point set.
constexpr std::uint32_t subset_count(int n) { return 1u << n; }

/// All subsets of an n-point set in increasing mask order.
inline std::vector<SubsetMask> all_subsets(int n)
{
    std::vector<SubsetMask> out;
    out.reserve(subset_count(n));
    for (std::uint32_t b = 0; b < subset_count(n); ++b)
        out.emplace_back(b);
    return out;
}

/// Renders a mask with the default point names a, b, c, ..., e.g. "{a,c}".
std::string to_letter_string(SubsetMask a, int n);

/// A sorted, duplicate-free family of subsets. No closure properties implied.
struct SetFamily {
    int n = 0;
    std::vector<SubsetMask> members;

    SetFamily() = default;
    SetFamily(int n, std::vector<SubsetMask> members);

    bool contains(SubsetMask a) const;
    std::size_t size() const { return members.size(); }
    bool operator==(const SetFamily&) const = default;
};

/// What kind of failure an error reports. Distinct codes let the CLI map them
/// to exit statuses and let tests assert the precise failure.
enum class ErrorCode {
    kSyntax,
    kSchema,
    kUnknownPoint,
    kDuplicatePoint,
    kTooManyPoints,
    kOutOfWidth,
    kNotTopology,
    kNotIdeal,
    kGammaNotExpansive,
    kGammaIncomplete,
    kBudgetExceeded,
    kOutOfRange,
    kUnknownName,
    kEngineDefect,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace idealtop
