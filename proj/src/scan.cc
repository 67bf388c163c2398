#include "idealtop/scan.hh"

#include <algorithm>
#include <cctype>

namespace idealtop {

std::string_view property_name(SpaceProperty p)
{
    switch (p) {
    case SpaceProperty::kGammaRegular: return "gamma_regular";
    case SpaceProperty::kSubmaximal: return "submaximal";
    case SpaceProperty::kStarExtremallyDisconnected: return "star_extremally_disconnected";
    case SpaceProperty::kTrivialIdeal: return "trivial_ideal";
    case SpaceProperty::kFullIdeal: return "full_ideal";
    case SpaceProperty::kRegularOperation: return "regular_operation";
    }
    return "?";
}

std::optional<SpaceProperty> parse_property(std::string_view name)
{
    std::string norm(name);
    std::replace(norm.begin(), norm.end(), '-', '_');
    for (auto& ch : norm)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (auto p : kAllProperties)
        if (property_name(p) == norm)
            return p;
    if (norm == "star_ed")
        return SpaceProperty::kStarExtremallyDisconnected;
    return std::nullopt;
}

bool has_property(const SpaceContext& ctx, SpaceProperty p)
{
    switch (p) {
    case SpaceProperty::kGammaRegular: return is_gamma_regular_space(ctx);
    case SpaceProperty::kSubmaximal: return is_submaximal(ctx.topology());
    case SpaceProperty::kStarExtremallyDisconnected:
        return is_star_extremally_disconnected(ctx.topology(), ctx.ideal());
    case SpaceProperty::kTrivialIdeal: return ctx.ideal().is_trivial();
    case SpaceProperty::kFullIdeal: return ctx.ideal().is_full();
    case SpaceProperty::kRegularOperation: return is_regular_operation(ctx);
    }
    return false;
}

std::vector<SpaceProperty> normalize_properties(std::vector<SpaceProperty> props)
{
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    return props;
}

std::string_view star_flag_name(StarFlag f)
{
    switch (f) {
    case StarFlag::kDenseInItself: return "STAR_DENSE_IN_ITSELF";
    case StarFlag::kTauStarClosed: return "TAU_STAR_CLOSED";
    case StarFlag::kPerfect: return "STAR_PERFECT";
    }
    return "?";
}

std::string atom_name(const Atom& a)
{
    if (auto c = std::get_if<SetClass>(&a))
        return std::string(class_name(*c));
    return std::string(star_flag_name(std::get<StarFlag>(a)));
}

std::string conjunction_name(const Conjunction& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += " & ";
        out += atom_name(c[i]);
    }
    return out;
}

namespace {

bool flag_value(const StarStatus& s, StarFlag f)
{
    switch (f) {
    case StarFlag::kDenseInItself: return s.dense_in_itself;
    case StarFlag::kTauStarClosed: return s.tau_star_closed;
    case StarFlag::kPerfect: return s.perfect;
    }
    return false;
}

} // namespace

bool evaluate_atom(const SpaceContext& ctx, const Atom& atom, SubsetMask a)
{
    if (auto c = std::get_if<SetClass>(&atom))
        return is_member(ctx, *c, a);
    return flag_value(star_status(ctx.topology(), ctx.ideal(), a), std::get<StarFlag>(atom));
}

ContextFacts::ContextFacts(const SpaceContext& ctx) : ctx_(&ctx), classes_(classify_all(ctx))
{
    statuses_.reserve(classes_.size());
    for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b)
        statuses_.push_back(star_status(ctx.topology(), ctx.ideal(), SubsetMask(b)));
}

bool ContextFacts::property(SpaceProperty p) const
{
    auto i = static_cast<std::size_t>(p);
    if (!known_.test(i)) {
        values_.set(i, has_property(*ctx_, p));
        known_.set(i);
    }
    return values_.test(i);
}

bool ContextFacts::atom(const Atom& atom, SubsetMask a) const
{
    if (auto c = std::get_if<SetClass>(&atom))
        return classes(a).has(*c);
    return flag_value(status(a), std::get<StarFlag>(atom));
}

ScanOutcome scan_universe(const Bounds& bounds,
                          const std::function<bool(const ContextCoordinates&, const SpaceContext&)>& visit)
{
    if (bounds.n_min < 0 || bounds.n_max > kMaxEnumerationPoints || bounds.n_min > bounds.n_max)
        throw Error(ErrorCode::kOutOfRange, "scan sizes must satisfy 0 <= n_min <= n_max <= 5");
    ScanOutcome out;
    for (int n = bounds.n_min; n <= bounds.n_max; ++n) {
        auto topologies = enumerate_topologies(n);
        auto ideals = enumerate_ideals(n);
        for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
            const auto& t = topologies[ti];
            if (bounds.gamma_mode == GammaMode::kFull && count_gammas(t) > bounds.gamma_budget) {
                out.budget_exceeded = true;
                out.budget_message = "topology " + std::to_string(ti) + " at n=" + std::to_string(n) +
                                     " admits " + std::to_string(count_gammas(t)) +
                                     " operations, over the per-topology gamma budget of " +
                                     std::to_string(bounds.gamma_budget);
                return out;
            }
            for (std::size_t ii = 0; ii < ideals.size(); ++ii) {
                std::uint64_t gi = 0;
                bool keep_going = true;
                for_each_gamma(t, bounds.gamma_mode, bounds.gamma_budget, [&](const GammaOperation& g) {
                    if (out.contexts >= bounds.budget) {
                        out.budget_exceeded = true;
                        out.budget_message = "context budget of " + std::to_string(bounds.budget) + " exhausted";
                        keep_going = false;
                        return false;
                    }
                    ++out.contexts;
                    SpaceContext ctx(t, ideals[ii], g);
                    keep_going = visit(ContextCoordinates{n, ti, ii, gi++}, ctx);
                    return keep_going;
                });
                if (!keep_going)
                    return out;
            }
        }
    }
    return out;
}

} // namespace idealtop
