#include "idealtop/ideal.hh"

namespace idealtop {

std::optional<FamilyDefect> ideal_defect(int n, std::span<const SubsetMask> family)
{
    using K = FamilyDefect::Kind;
    SetFamily f(n, {family.begin(), family.end()});
    if (f.members.empty())
        return FamilyDefect{K::kEmptyFamily, {}, {}};
    for (auto m : f.members)
        if (!m.within(n))
            return FamilyDefect{K::kOutOfWidth, m, {}};
    for (auto a : f.members) {
        // Every submask of a, enumerated downward.
        for (std::uint32_t s = a.bits();; s = (s - 1) & a.bits()) {
            if (!f.contains(SubsetMask(s)))
                return FamilyDefect{K::kNotDownwardClosed, a, SubsetMask(s)};
            if (s == 0)
                break;
        }
    }
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.contains(f.members[i] | f.members[j]))
                return FamilyDefect{K::kNotUnionClosed, f.members[i], f.members[j]};
    return std::nullopt;
}

bool is_ideal(int n, std::span<const SubsetMask> family)
{
    return !ideal_defect(n, family).has_value();
}

Ideal::Ideal(int n, SubsetMask max_member) : n_(n), max_(max_member)
{
    if (n < 0 || n > kMaxPoints)
        throw Error(ErrorCode::kTooManyPoints, "ground set size outside [0, 16]");
    if (!max_member.within(n))
        throw Error(ErrorCode::kOutOfWidth, "ideal generator outside the ground set");
}

Ideal Ideal::from_members(int n, std::span<const SubsetMask> members)
{
    if (auto d = ideal_defect(n, members))
        throw Error(ErrorCode::kNotIdeal,
                    describe_defect(*d, "an ideal", [n](SubsetMask m) { return to_letter_string(m, n); }));
    SubsetMask top;
    for (auto m : members)
        top |= m;
    return Ideal(n, top);
}

std::vector<SubsetMask> Ideal::members() const
{
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < subset_count(n_); ++b)
        if (contains(SubsetMask(b)))
            out.emplace_back(b);
    return out;
}

std::vector<Ideal> enumerate_ideals(int n)
{
    std::vector<Ideal> out;
    out.reserve(subset_count(n));
    for (std::uint32_t b = 0; b < subset_count(n); ++b)
        out.emplace_back(n, SubsetMask(b));
    return out;
}

SubsetMask local_function(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    SubsetMask out;
    for (int x = 0; x < t.size(); ++x) {
        bool in_star = true;
        for (auto u : t.opens()) {
            if (u.contains(x) && ideal.contains(u & a)) {
                in_star = false;
                break;
            }
        }
        if (in_star)
            out |= SubsetMask::point(x);
    }
    return out;
}

SubsetMask star_closure(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    return a | local_function(t, ideal, a);
}

SubsetMask star_interior(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    int n = t.size();
    return star_closure(t, ideal, a.complement(n)).complement(n);
}

StarStatus star_status(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    auto star = local_function(t, ideal, a);
    StarStatus s;
    s.dense_in_itself = a.subset_of(star);
    s.tau_star_closed = star.subset_of(a);
    s.perfect = a == star;
    return s;
}

SubsetMask delta_I_closure(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    SubsetMask out;
    for (int x = 0; x < t.size(); ++x) {
        bool cluster = true;
        for (auto u : t.opens()) {
            if (!u.contains(x))
                continue;
            if (!interior(t, star_closure(t, ideal, u)).intersects(a)) {
                cluster = false;
                break;
            }
        }
        if (cluster)
            out |= SubsetMask::point(x);
    }
    return out;
}

bool is_delta_I_closed(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    return delta_I_closure(t, ideal, a) == a;
}

bool is_delta_I_open(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    return is_delta_I_closed(t, ideal, a.complement(t.size()));
}

bool is_weakly_I_local_closed(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    auto cl = star_closure(t, ideal, a);
    for (auto u : t.opens())
        if ((u & cl) == a)
            return true;
    return false;
}

bool is_weakly_I_local_closed_by_pairs(const Topology& t, const Ideal& ideal, SubsetMask a)
{
    for (std::uint32_t b = 0; b < subset_count(t.size()); ++b) {
        SubsetMask k(b);
        if (!a.subset_of(k) || !local_function(t, ideal, k).subset_of(k))
            continue;
        for (auto u : t.opens())
            if ((u & k) == a)
                return true;
    }
    return false;
}

bool is_star_extremally_disconnected(const Topology& t, const Ideal& ideal)
{
    bool by_definition = is_star_extremally_disconnected_by_definition(t, ideal);
    if (by_definition != star_closure_of_interior_inside_interior_of_star_closure(t, ideal))
        throw Error(ErrorCode::kEngineDefect, "*-extremal disconnectedness tests disagree");
    return by_definition;
}

bool is_star_extremally_disconnected_by_definition(const Topology& t, const Ideal& ideal)
{
    for (auto v : t.opens())
        if (!t.is_open(star_closure(t, ideal, v)))
            return false;
    return true;
}

bool star_closure_of_interior_inside_interior_of_star_closure(const Topology& t, const Ideal& ideal)
{
    for (std::uint32_t b = 0; b < subset_count(t.size()); ++b) {
        SubsetMask v(b);
        auto lhs = star_closure(t, ideal, interior(t, v));
        auto rhs = interior(t, star_closure(t, ideal, v));
        if (!lhs.subset_of(rhs))
            return false;
    }
    return true;
}

} // namespace idealtop
