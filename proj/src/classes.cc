#include "idealtop/classes.hh"

#include <cctype>
#include <string>

namespace idealtop {

std::string_view class_name(SetClass c)
{
    switch (c) {
    case SetClass::kOpen: return "OPEN";
    case SetClass::kClosed: return "CLOSED";
    case SetClass::kRegularOpen: return "REGULAR_OPEN";
    case SetClass::kDeltaOpen: return "DELTA_OPEN";
    case SetClass::kGammaOpen: return "GAMMA_OPEN";
    case SetClass::kPreopen: return "PREOPEN";
    case SetClass::kPreGammaOpen: return "PRE_GAMMA_OPEN";
    case SetClass::kGammaPreopen: return "GAMMA_PREOPEN";
    case SetClass::kGammaPOpen: return "GAMMA_P_OPEN";
    case SetClass::kIOpen: return "I_OPEN";
    case SetClass::kRIOpen: return "R_I_OPEN";
    case SetClass::kPreIOpen: return "PRE_I_OPEN";
    case SetClass::kSemiIOpen: return "SEMI_I_OPEN";
    case SetClass::kAlphaIOpen: return "ALPHA_I_OPEN";
    case SetClass::kBIOpen: return "B_I_OPEN";
    case SetClass::kWeaklyILocalClosed: return "WEAKLY_I_LOCAL_CLOSED";
    case SetClass::kLocallyClosed: return "LOCALLY_CLOSED";
    case SetClass::kDeltaIOpen: return "DELTA_I_OPEN";
    case SetClass::kPreGammaIOpen: return "PRE_GAMMA_I_OPEN";
    case SetClass::kPreGammaIClosed: return "PRE_GAMMA_I_CLOSED";
    }
    return "?";
}

std::optional<SetClass> parse_class(std::string_view name)
{
    std::string norm;
    for (char ch : name)
        norm += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (auto c : kAllClasses)
        if (class_name(c) == norm)
            return c;
    return std::nullopt;
}

namespace {

bool pre_gamma_I_open(const SpaceContext& ctx, SubsetMask a)
{
    const auto& t = ctx.topology();
    return a.subset_of(tau_gamma_int(ctx, star_closure(t, ctx.ideal(), a)));
}

} // namespace

bool is_member(const SpaceContext& ctx, SetClass c, SubsetMask a)
{
    const auto& t = ctx.topology();
    const auto& ideal = ctx.ideal();
    switch (c) {
    case SetClass::kOpen:
        return t.is_open(a);
    case SetClass::kClosed:
        return t.is_closed(a);
    case SetClass::kRegularOpen:
        return is_regular_open(t, a);
    case SetClass::kDeltaOpen:
        return is_delta_open(t, a);
    case SetClass::kGammaOpen:
        return is_gamma_open(ctx, a);
    case SetClass::kPreopen:
        return a.subset_of(interior(t, closure(t, a)));
    case SetClass::kPreGammaOpen:
        return a.subset_of(tau_gamma_int(ctx, closure(t, a)));
    case SetClass::kGammaPreopen:
        return a.subset_of(tau_gamma_int(ctx, tau_gamma_cl(ctx, a)));
    case SetClass::kGammaPOpen:
        return a.subset_of(interior(t, tau_gamma_cl(ctx, a)));
    case SetClass::kIOpen:
        return a.subset_of(interior(t, local_function(t, ideal, a)));
    case SetClass::kRIOpen:
        return a == interior(t, star_closure(t, ideal, a));
    case SetClass::kPreIOpen:
        return a.subset_of(interior(t, star_closure(t, ideal, a)));
    case SetClass::kSemiIOpen:
        return a.subset_of(star_closure(t, ideal, interior(t, a)));
    case SetClass::kAlphaIOpen:
        return a.subset_of(interior(t, star_closure(t, ideal, interior(t, a))));
    case SetClass::kBIOpen:
        return a.subset_of(interior(t, star_closure(t, ideal, a)) | star_closure(t, ideal, interior(t, a)));
    case SetClass::kWeaklyILocalClosed:
        return is_weakly_I_local_closed_by_pairs(t, ideal, a);
    case SetClass::kLocallyClosed:
        return is_locally_closed_by_pairs(t, a);
    case SetClass::kDeltaIOpen:
        return is_delta_I_open(t, ideal, a);
    case SetClass::kPreGammaIOpen:
        return pre_gamma_I_open(ctx, a);
    case SetClass::kPreGammaIClosed:
        return pre_gamma_I_open(ctx, a.complement(ctx.size()));
    }
    return false;
}

ClassVector classify(const SpaceContext& ctx, SubsetMask a)
{
    ClassVector v{a, {}};
    for (auto c : kAllClasses)
        v.flags.set(class_index(c), is_member(ctx, c, a));
    return v;
}

std::vector<ClassVector> classify_all(const SpaceContext& ctx)
{
    std::vector<ClassVector> out;
    out.reserve(subset_count(ctx.size()));
    for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b)
        out.push_back(classify(ctx, SubsetMask(b)));
    return out;
}

} // namespace idealtop
