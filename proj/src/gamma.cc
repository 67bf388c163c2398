#include "idealtop/gamma.hh"

#include <limits>

namespace idealtop {

std::string_view preset_name(GammaPreset p)
{
    switch (p) {
    case GammaPreset::kIdentity: return "identity";
    case GammaPreset::kConstantX: return "constant_x";
    case GammaPreset::kClosure: return "closure";
    case GammaPreset::kInteriorOfClosure: return "int_closure";
    }
    return "identity";
}

std::optional<GammaPreset> parse_preset(std::string_view name)
{
    for (auto p : kAllPresets)
        if (preset_name(p) == name)
            return p;
    return std::nullopt;
}

GammaOperation make_preset(const Topology& t, GammaPreset p)
{
    std::vector<SubsetMask> images;
    images.reserve(t.open_count());
    for (auto v : t.opens()) {
        switch (p) {
        case GammaPreset::kIdentity: images.push_back(v); break;
        case GammaPreset::kConstantX: images.push_back(t.universe()); break;
        case GammaPreset::kClosure: images.push_back(closure(t, v)); break;
        case GammaPreset::kInteriorOfClosure: images.push_back(interior(t, closure(t, v))); break;
        }
    }
    return GammaOperation(std::move(images));
}

std::optional<std::size_t> non_expansive_entry(const Topology& t, const GammaOperation& g)
{
    for (std::size_t i = 0; i < t.open_count(); ++i)
        if (!t.opens()[i].subset_of(g.image(i)))
            return i;
    return std::nullopt;
}

SpaceContext::SpaceContext(Topology topology, Ideal ideal, GammaOperation gamma)
    : topology_(std::move(topology)), ideal_(ideal), gamma_(std::move(gamma))
{
    int n = topology_.size();
    if (ideal_.size() != n)
        throw Error(ErrorCode::kOutOfWidth, "ideal and topology disagree on the ground set size");
    if (gamma_.size() != topology_.open_count())
        throw Error(ErrorCode::kGammaIncomplete, "gamma table has " + std::to_string(gamma_.size()) +
                                                     " entries for " + std::to_string(topology_.open_count()) +
                                                     " open sets");
    for (auto img : gamma_.images())
        if (!img.within(n))
            throw Error(ErrorCode::kOutOfWidth, "gamma image outside the ground set");
    if (auto bad = non_expansive_entry(topology_, gamma_))
        throw Error(ErrorCode::kGammaNotExpansive,
                    "gamma not expansive: " + to_letter_string(topology_.opens()[*bad], n) + " maps to " +
                        to_letter_string(gamma_.image(*bad), n));
    gamma_open_ = tau_gamma(topology_, gamma_);
}

bool is_gamma_open(const Topology& t, const GammaOperation& g, SubsetMask a)
{
    const auto& opens = t.opens();
    for (int x = 0; x < t.size(); ++x) {
        if (!a.contains(x))
            continue;
        bool found = false;
        for (std::size_t i = 0; i < opens.size() && !found; ++i)
            found = opens[i].contains(x) && g.image(i).subset_of(a);
        if (!found)
            return false;
    }
    return true;
}

SetFamily tau_gamma(const Topology& t, const GammaOperation& g)
{
    std::vector<SubsetMask> members;
    for (std::uint32_t b = 0; b < subset_count(t.size()); ++b)
        if (is_gamma_open(t, g, SubsetMask(b)))
            members.emplace_back(b);
    return SetFamily(t.size(), std::move(members));
}

SubsetMask tau_gamma_int(const SpaceContext& ctx, SubsetMask a)
{
    SubsetMask out;
    for (auto g : ctx.gamma_open_sets().members)
        if (g.subset_of(a))
            out |= g;
    return out;
}

SubsetMask tau_gamma_cl(const SpaceContext& ctx, SubsetMask a)
{
    int n = ctx.size();
    SubsetMask out = ctx.universe();
    for (auto g : ctx.gamma_open_sets().members) {
        auto closed = g.complement(n);
        if (a.subset_of(closed))
            out &= closed;
    }
    return out;
}

bool is_gamma_regular_space(const SpaceContext& ctx)
{
    const auto& opens = ctx.topology().opens();
    for (int x = 0; x < ctx.size(); ++x) {
        for (auto v : opens) {
            if (!v.contains(x))
                continue;
            bool shrinks = false;
            for (std::size_t i = 0; i < opens.size() && !shrinks; ++i)
                shrinks = opens[i].contains(x) && ctx.gamma().image(i).subset_of(v);
            if (!shrinks)
                return false;
        }
    }
    return true;
}

bool tau_equals_tau_gamma(const SpaceContext& ctx)
{
    return ctx.gamma_open_sets().members == ctx.topology().opens();
}

bool is_regular_operation(const SpaceContext& ctx)
{
    const auto& opens = ctx.topology().opens();
    const auto& g = ctx.gamma();
    for (int x = 0; x < ctx.size(); ++x) {
        for (std::size_t u = 0; u < opens.size(); ++u) {
            if (!opens[u].contains(x))
                continue;
            for (std::size_t v = u; v < opens.size(); ++v) {
                if (!opens[v].contains(x))
                    continue;
                auto bound = g.image(u) & g.image(v);
                bool found = false;
                for (std::size_t w = 0; w < opens.size() && !found; ++w)
                    found = opens[w].contains(x) && g.image(w).subset_of(bound);
                if (!found)
                    return false;
            }
        }
    }
    return true;
}

std::string_view gamma_mode_name(GammaMode m)
{
    return m == GammaMode::kFull ? "full" : "presets";
}

std::optional<GammaMode> parse_gamma_mode(std::string_view name)
{
    if (name == "full")
        return GammaMode::kFull;
    if (name == "presets")
        return GammaMode::kPresets;
    return std::nullopt;
}

std::uint64_t count_gammas(const Topology& t)
{
    int exponent = 0;
    for (auto v : t.opens())
        exponent += t.size() - v.size();
    if (exponent >= 64)
        return std::numeric_limits<std::uint64_t>::max();
    return std::uint64_t{1} << exponent;
}

namespace {

bool enumerate_from(const Topology& t, std::size_t index, std::vector<SubsetMask>& images,
                    const std::function<bool(const GammaOperation&)>& visit)
{
    if (index == t.open_count())
        return visit(GammaOperation(images));
    auto v = t.opens()[index];
    const std::uint32_t free = v.complement(t.size()).bits();
    // Submasks of `free` in increasing order.
    std::uint32_t extra = 0;
    while (true) {
        images[index] = v | SubsetMask(extra);
        if (!enumerate_from(t, index + 1, images, visit))
            return false;
        if (extra == free)
            break;
        extra = (extra - free) & free;
    }
    return true;
}

} // namespace

void for_each_gamma(const Topology& t, GammaMode mode, std::uint64_t budget,
                    const std::function<bool(const GammaOperation&)>& visit)
{
    if (mode == GammaMode::kPresets) {
        for (auto p : kAllPresets)
            if (!visit(make_preset(t, p)))
                return;
        return;
    }
    auto count = count_gammas(t);
    if (count > budget)
        throw Error(ErrorCode::kBudgetExceeded, "full gamma enumeration needs " + std::to_string(count) +
                                                    " operations, budget is " + std::to_string(budget));
    std::vector<SubsetMask> images(t.open_count());
    enumerate_from(t, 0, images, visit);
}

std::vector<GammaOperation> enumerate_gammas(const Topology& t, GammaMode mode, std::uint64_t budget)
{
    std::vector<GammaOperation> out;
    for_each_gamma(t, mode, budget, [&](const GammaOperation& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace idealtop
