#include "idealtop/topology.hh"

#include <algorithm>
#include <array>

namespace idealtop {

std::string describe_defect(const FamilyDefect& d, std::string_view what,
                            const std::function<std::string(SubsetMask)>& render)
{
    std::string out = "not ";
    out += what;
    out += ": ";
    switch (d.kind) {
    case FamilyDefect::Kind::kOutOfWidth:
        out += "member outside the ground set";
        break;
    case FamilyDefect::Kind::kMissingEmpty:
        out += "missing empty set";
        break;
    case FamilyDefect::Kind::kMissingUniverse:
        out += "missing X";
        break;
    case FamilyDefect::Kind::kNotUnionClosed:
        out += "not closed under union: " + render(d.first) + " u " + render(d.second) + " = " +
               render(d.first | d.second) + " is missing";
        break;
    case FamilyDefect::Kind::kNotIntersectionClosed:
        out += "not closed under intersection: " + render(d.first) + " n " + render(d.second) + " = " +
               render(d.first & d.second) + " is missing";
        break;
    case FamilyDefect::Kind::kEmptyFamily:
        out += "family is empty";
        break;
    case FamilyDefect::Kind::kNotDownwardClosed:
        out += "not downward closed: " + render(d.second) + " is a subset of member " + render(d.first) +
               " but is missing";
        break;
    }
    return out;
}

std::optional<FamilyDefect> topology_defect(int n, std::span<const SubsetMask> family)
{
    using K = FamilyDefect::Kind;
    SetFamily f(n, {family.begin(), family.end()});
    for (auto m : f.members)
        if (!m.within(n))
            return FamilyDefect{K::kOutOfWidth, m, {}};
    if (!f.contains(SubsetMask::empty_set()))
        return FamilyDefect{K::kMissingEmpty, {}, {}};
    if (!f.contains(SubsetMask::full(n)))
        return FamilyDefect{K::kMissingUniverse, {}, {}};
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        for (std::size_t j = i + 1; j < f.members.size(); ++j) {
            auto a = f.members[i], b = f.members[j];
            if (!f.contains(a | b))
                return FamilyDefect{K::kNotUnionClosed, a, b};
            if (!f.contains(a & b))
                return FamilyDefect{K::kNotIntersectionClosed, a, b};
        }
    }
    return std::nullopt;
}

bool is_topology(int n, std::span<const SubsetMask> family)
{
    return !topology_defect(n, family).has_value();
}

Topology::Topology(int n, std::vector<SubsetMask> opens) : n_(n)
{
    if (n < 0 || n > kMaxPoints)
        throw Error(ErrorCode::kTooManyPoints, "ground set size " + std::to_string(n) + " outside [0, 16]");
    if (auto d = topology_defect(n, opens))
        throw Error(ErrorCode::kNotTopology,
                    describe_defect(*d, "a topology", [n](SubsetMask m) { return to_letter_string(m, n); }));
    opens_ = SetFamily(n, std::move(opens)).members;
}

Topology Topology::discrete(int n)
{
    return Topology(n, all_subsets(n));
}

Topology Topology::indiscrete(int n)
{
    return Topology(n, {SubsetMask::empty_set(), SubsetMask::full(n)});
}

bool Topology::is_open(SubsetMask a) const
{
    return std::binary_search(opens_.begin(), opens_.end(), a);
}

int Topology::index_of(SubsetMask open) const
{
    auto it = std::lower_bound(opens_.begin(), opens_.end(), open);
    if (it == opens_.end() || *it != open)
        return -1;
    return static_cast<int>(it - opens_.begin());
}

std::uint64_t Topology::family_code() const
{
    std::uint64_t code = 0;
    auto top = universe();
    for (auto m : opens_)
        if (!m.empty() && m != top)
            code |= std::uint64_t{1} << (m.bits() - 1);
    return code;
}

SubsetMask interior(const Topology& t, SubsetMask a)
{
    SubsetMask out;
    for (auto u : t.opens())
        if (u.subset_of(a))
            out |= u;
    return out;
}

SubsetMask closure(const Topology& t, SubsetMask a)
{
    int n = t.size();
    return interior(t, a.complement(n)).complement(n);
}

bool is_regular_open(const Topology& t, SubsetMask a)
{
    return interior(t, closure(t, a)) == a;
}

bool is_delta_open(const Topology& t, SubsetMask a)
{
    for (int x = 0; x < t.size(); ++x) {
        if (!a.contains(x))
            continue;
        bool covered = false;
        for (auto g : t.opens()) {
            if (g.contains(x) && g.subset_of(a) && is_regular_open(t, g)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

bool is_dense(const Topology& t, SubsetMask a)
{
    return closure(t, a) == t.universe();
}

bool is_submaximal(const Topology& t)
{
    for (std::uint32_t b = 0; b < subset_count(t.size()); ++b) {
        SubsetMask a(b);
        if (is_dense(t, a) && !t.is_open(a))
            return false;
    }
    return true;
}

bool is_locally_closed(const Topology& t, SubsetMask a)
{
    auto cl = closure(t, a);
    for (auto u : t.opens())
        if ((u & cl) == a)
            return true;
    return false;
}

bool is_locally_closed_by_pairs(const Topology& t, SubsetMask a)
{
    int n = t.size();
    for (auto u : t.opens())
        for (auto v : t.opens())
            if ((u & v.complement(n)) == a)
                return true;
    return false;
}

std::vector<Topology> enumerate_topologies(int n)
{
    if (n < 0 || n > kMaxEnumerationPoints)
        throw Error(ErrorCode::kOutOfRange,
                    "topology enumeration supports n <= 5, got " + std::to_string(n));
    if (n <= 4)
        return enumerate_topologies_naive(n);
    return enumerate_topologies_by_preorder(n);
}

std::vector<Topology> enumerate_topologies_naive(int n)
{
    if (n < 0 || n > 4)
        throw Error(ErrorCode::kOutOfRange, "naive topology filter supports n <= 4");
    std::vector<Topology> out;
    if (n == 0) {
        out.emplace_back(0, std::vector<SubsetMask>{SubsetMask::empty_set()});
        return out;
    }
    const std::uint32_t top = SubsetMask::full(n).bits();
    const int free_sets = static_cast<int>(top) - 1; // proper nonempty subsets
    const std::uint64_t candidates = std::uint64_t{1} << free_sets;

    std::array<bool, 16> present{};
    std::vector<std::uint32_t> members;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        present.fill(false);
        members.clear();
        present[0] = present[top] = true;
        for (int i = 0; i < free_sets; ++i) {
            if ((code >> i) & 1u) {
                present[i + 1] = true;
                members.push_back(static_cast<std::uint32_t>(i + 1));
            }
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < members.size(); ++i)
            for (std::size_t j = i + 1; ok && j < members.size(); ++j)
                ok = present[members[i] | members[j]] && present[members[i] & members[j]];
        if (!ok)
            continue;
        std::vector<SubsetMask> opens;
        for (std::uint32_t m = 0; m <= top; ++m)
            if (present[m])
                opens.emplace_back(m);
        out.emplace_back(n, std::move(opens));
    }
    return out;
}

std::vector<Topology> enumerate_topologies_by_preorder(int n)
{
    if (n < 0 || n > kMaxEnumerationPoints)
        throw Error(ErrorCode::kOutOfRange, "preorder topology enumeration supports n <= 5");
    // up[i] = { j : i <= j }, always containing i. Pair (i, j), i != j, gets
    // one bit of `rel`.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    const std::uint64_t relations = std::uint64_t{1} << pairs.size();

    std::vector<Topology> out;
    std::array<std::uint32_t, kMaxEnumerationPoints> up{};
    for (std::uint64_t rel = 0; rel < relations; ++rel) {
        for (int i = 0; i < n; ++i)
            up[i] = 1u << i;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((rel >> k) & 1u)
                up[pairs[k].first] |= 1u << pairs[k].second;
        bool transitive = true;
        for (int i = 0; transitive && i < n; ++i)
            for (int j = 0; transitive && j < n; ++j)
                if (((up[i] >> j) & 1u) && (up[j] & ~up[i]))
                    transitive = false;
        if (!transitive)
            continue;
        std::vector<SubsetMask> opens;
        for (std::uint32_t b = 0; b < subset_count(n); ++b) {
            bool upward = true;
            for (int i = 0; upward && i < n; ++i)
                if (((b >> i) & 1u) && (up[i] & ~b))
                    upward = false;
            if (upward)
                opens.emplace_back(b);
        }
        out.emplace_back(n, std::move(opens));
    }
    std::sort(out.begin(), out.end(),
              [](const Topology& a, const Topology& b) { return a.family_code() < b.family_code(); });
    return out;
}

} // namespace idealtop
