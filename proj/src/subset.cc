#include "idealtop/subset.hh"

#include <algorithm>

namespace idealtop {

std::string to_letter_string(SubsetMask a, int n)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        if (!a.contains(i))
            continue;
        if (!first)
            out += ',';
        out += static_cast<char>('a' + i);
        first = false;
    }
    out += '}';
    return out;
}

SetFamily::SetFamily(int n_, std::vector<SubsetMask> members_) : n(n_), members(std::move(members_))
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool SetFamily::contains(SubsetMask a) const
{
    return std::binary_search(members.begin(), members.end(), a);
}

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kUnknownPoint: return "unknown_point";
    case ErrorCode::kDuplicatePoint: return "duplicate_point";
    case ErrorCode::kTooManyPoints: return "too_many_points";
    case ErrorCode::kOutOfWidth: return "out_of_width";
    case ErrorCode::kNotTopology: return "not_topology";
    case ErrorCode::kNotIdeal: return "not_ideal";
    case ErrorCode::kGammaNotExpansive: return "gamma_not_expansive";
    case ErrorCode::kGammaIncomplete: return "gamma_incomplete";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kUnknownName: return "unknown_name";
    case ErrorCode::kEngineDefect: return "engine_defect";
    }
    return "unknown";
}

} // namespace idealtop
