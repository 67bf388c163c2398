#include "idealtop/hunter.hh"

#include <algorithm>
#include <deque>

namespace idealtop {

namespace {

bool all_of_classes(const ClassVector& v, const std::vector<SetClass>& classes)
{
    for (auto c : classes)
        if (!v.has(c))
            return false;
    return true;
}

bool satisfies(const ContextFacts& facts, const std::vector<SpaceProperty>& constraints)
{
    for (auto p : constraints)
        if (!facts.property(p))
            return false;
    return true;
}

std::vector<std::pair<std::string, bool>> evaluate_flags(const SpaceContext& ctx, SubsetMask a,
                                                         const std::vector<SetClass>& source,
                                                         const std::vector<SetClass>& target)
{
    std::vector<std::pair<std::string, bool>> out;
    for (const auto* list : {&source, &target})
        for (auto c : *list)
            out.emplace_back(std::string(class_name(c)), is_member(ctx, c, a));
    return out;
}

/// Independent re-evaluation: source all true, some target false.
bool reverify(const SpaceContext& ctx, SubsetMask a, const std::vector<SetClass>& source,
              const std::vector<SetClass>& target, const std::vector<SpaceProperty>& constraints)
{
    for (auto p : constraints)
        if (!has_property(ctx, p))
            return false;
    for (auto c : source)
        if (!is_member(ctx, c, a))
            return false;
    for (auto c : target)
        if (!is_member(ctx, c, a))
            return true;
    return false;
}

} // namespace

HuntResult hunt(const Query& q)
{
    if (q.source.empty() || q.target.empty())
        throw Error(ErrorCode::kOutOfRange, "query needs at least one source and one target class");
    if (q.source == q.target)
        throw Error(ErrorCode::kOutOfRange, "query source and target are identical");
    auto constraints = normalize_properties(q.constraints);

    HuntResult result;
    auto outcome = scan_universe(q.bounds, [&](const ContextCoordinates& at, const SpaceContext& ctx) {
        ContextFacts facts(ctx);
        if (!satisfies(facts, constraints))
            return true;
        ++result.contexts_scanned;
        for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b) {
            const auto& v = facts.classes(SubsetMask(b));
            if (all_of_classes(v, q.source) && !all_of_classes(v, q.target)) {
                if (!reverify(ctx, SubsetMask(b), q.source, q.target, constraints))
                    throw Error(ErrorCode::kEngineDefect, "hunt witness failed re-verification");
                result.witness = Witness{at, ctx, SubsetMask(b), std::nullopt, "",
                                         evaluate_flags(ctx, SubsetMask(b), q.source, q.target)};
                return false;
            }
        }
        return true;
    });
    if (!result.witness && outcome.budget_exceeded) {
        result.budget_exhausted = true;
        result.budget_message = outcome.budget_message;
    }
    return result;
}

std::string_view cell_status_name(AtlasCell::Status s)
{
    switch (s) {
    case AtlasCell::Status::kImplied: return "implied";
    case AtlasCell::Status::kNoCounterexample: return "no_counterexample";
    case AtlasCell::Status::kRefuted: return "refuted";
    case AtlasCell::Status::kBudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

std::optional<AtlasCell::Status> parse_cell_status(std::string_view name)
{
    for (auto s : {AtlasCell::Status::kImplied, AtlasCell::Status::kNoCounterexample, AtlasCell::Status::kRefuted,
                   AtlasCell::Status::kBudgetExhausted})
        if (cell_status_name(s) == name)
            return s;
    return std::nullopt;
}

std::optional<std::string> cite_implication(SetClass from, SetClass to, const std::vector<SpaceProperty>& constraints)
{
    if (from == to)
        return std::string("reflexive");
    auto allowed = normalize_properties(constraints);

    // Direct single-class edges, in roster order.
    struct Edge {
        std::size_t from, to;
        std::string id;
    };
    std::vector<Edge> edges;
    for (const auto& spec : builtin_theorems()) {
        if (spec.law || spec.chain.size() < 2)
            continue;
        bool hypotheses_ok = true;
        for (auto p : spec.requires_properties)
            if (!std::binary_search(allowed.begin(), allowed.end(), p))
                hypotheses_ok = false;
        if (!hypotheses_ok)
            continue;
        const std::size_t links = spec.cyclic() ? spec.chain.size() : spec.chain.size() - 1;
        for (std::size_t i = 0; i < links; ++i) {
            const auto& a = spec.chain[i];
            const auto& b = spec.chain[(i + 1) % spec.chain.size()];
            if (a.size() != 1 || b.size() != 1)
                continue;
            auto ca = std::get_if<SetClass>(&a[0]);
            auto cb = std::get_if<SetClass>(&b[0]);
            if (ca && cb)
                edges.push_back({class_index(*ca), class_index(*cb), spec.id});
        }
    }

    // Breadth-first search for the shortest citation chain.
    std::array<int, kClassCount> via;
    via.fill(-1);
    std::array<bool, kClassCount> seen{};
    std::deque<std::size_t> queue{class_index(from)};
    seen[class_index(from)] = true;
    while (!queue.empty()) {
        auto at = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].from != at || seen[edges[e].to])
                continue;
            seen[edges[e].to] = true;
            via[edges[e].to] = static_cast<int>(e);
            queue.push_back(edges[e].to);
        }
    }
    if (!seen[class_index(to)])
        return std::nullopt;
    std::vector<std::string> ids;
    for (auto at = class_index(to); at != class_index(from); at = edges[via[at]].from)
        ids.push_back(edges[via[at]].id);
    std::string out;
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += *it;
    }
    return out;
}

AtlasMatrix build_atlas(const std::vector<SpaceProperty>& constraints, const Bounds& bounds)
{
    AtlasMatrix m;
    m.constraints = normalize_properties(constraints);
    m.bounds = bounds;
    for (auto from : kAllClasses) {
        for (auto to : kAllClasses) {
            auto& cell = m.cells[class_index(from)][class_index(to)];
            if (auto cite = cite_implication(from, to, m.constraints)) {
                cell.status = AtlasCell::Status::kImplied;
                cell.citation = *cite;
            } else {
                cell.status = AtlasCell::Status::kNoCounterexample;
            }
        }
    }

    auto outcome = scan_universe(bounds, [&](const ContextCoordinates& at, const SpaceContext& ctx) {
        ContextFacts facts(ctx);
        if (!satisfies(facts, m.constraints))
            return true;
        for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b) {
            SubsetMask a(b);
            const auto& v = facts.classes(a);
            for (std::size_t i = 0; i < kClassCount; ++i) {
                if (!v.flags.test(i))
                    continue;
                for (std::size_t j = 0; j < kClassCount; ++j) {
                    if (v.flags.test(j))
                        continue;
                    auto& cell = m.cells[i][j];
                    if (cell.status == AtlasCell::Status::kImplied)
                        throw Error(ErrorCode::kEngineDefect, std::string("cited implication ") +
                                                                  std::string(class_name(kAllClasses[i])) + " => " +
                                                                  std::string(class_name(kAllClasses[j])) +
                                                                  " has a counterexample");
                    if (cell.status != AtlasCell::Status::kNoCounterexample)
                        continue;
                    std::vector<SetClass> src{kAllClasses[i]}, dst{kAllClasses[j]};
                    if (!reverify(ctx, a, src, dst, m.constraints))
                        throw Error(ErrorCode::kEngineDefect, "atlas witness failed re-verification");
                    cell.status = AtlasCell::Status::kRefuted;
                    cell.witness = Witness{at, ctx, a, std::nullopt, "", evaluate_flags(ctx, a, src, dst)};
                }
            }
        }
        return true;
    });

    if (outcome.budget_exceeded)
        for (auto& row : m.cells)
            for (auto& cell : row)
                if (cell.status == AtlasCell::Status::kNoCounterexample)
                    cell.status = AtlasCell::Status::kBudgetExhausted;
    return m;
}

} // namespace idealtop
