#include <doctest.h>

#include <regex>

#include "support.hh"

using namespace idealtop;
using test_support::mask;
using C = SetClass;

namespace {

Query query(std::vector<SetClass> from, std::vector<SetClass> to, int n = 3)
{
    Query q;
    q.source = std::move(from);
    q.target = std::move(to);
    q.bounds.n_max = n;
    return q;
}

const AtlasMatrix& atlas3()
{
    static const AtlasMatrix m = [] {
        Bounds b;
        b.n_max = 3;
        return build_atlas({}, b);
    }();
    return m;
}

} // namespace

TEST_CASE("hunt finds the basic converse witnesses")
{
    for (auto c : {C::kPreGammaOpen, C::kPreIOpen, C::kGammaPreopen, C::kGammaPOpen}) {
        auto r = hunt(query({c}, {C::kPreGammaIOpen}));
        REQUIRE(r.witness);
        CHECK(is_member(r.witness->context, c, r.witness->subset));
        CHECK_FALSE(is_member(r.witness->context, C::kPreGammaIOpen, r.witness->subset));
        REQUIRE(r.witness->evaluated.size() == 2);
        CHECK(r.witness->evaluated[0].second);
        CHECK_FALSE(r.witness->evaluated[1].second);
    }
    auto r = hunt(query({C::kPreGammaIOpen}, {C::kGammaOpen}));
    REQUIRE(r.witness);
}

TEST_CASE("hunt finds nothing for a definitional containment")
{
    auto r = hunt(query({C::kGammaOpen}, {C::kOpen}));
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.budget_exhausted);
    CHECK(r.contexts_scanned > 0);
}

TEST_CASE("hunt agrees with verify on first witnesses")
{
    Bounds b;
    b.n_max = 3;
    auto v = verify(*find_theorem("Thm 3.6 converse"), b);
    auto h = hunt(query({C::kPreIOpen}, {C::kPreGammaIOpen}));
    REQUIRE(v.witness);
    REQUIRE(h.witness);
    CHECK(v.witness->coordinates == h.witness->coordinates);
    CHECK(v.witness->subset == h.witness->subset);
}

TEST_CASE("hunt under constraints and invalid queries")
{
    Query q = query({C::kPreIOpen}, {C::kOpen});
    q.constraints = {SpaceProperty::kSubmaximal};
    auto r = hunt(q);
    CHECK_FALSE(r.witness);
    CHECK_THROWS_AS(hunt(query({}, {C::kOpen})), Error);
    CHECK_THROWS_AS(hunt(query({C::kOpen}, {C::kOpen})), Error);
    Query tiny = query({C::kPreIOpen}, {C::kOpen});
    tiny.bounds.budget = 3;
    auto t = hunt(tiny);
    CHECK((t.witness || t.budget_exhausted));
}

TEST_CASE("hunt witness for the fourth-point converse exists at n <= 4")
{
    Query q = query({C::kGammaPOpen}, {C::kPreGammaIOpen}, 4);
    q.bounds.gamma_mode = GammaMode::kPresets;
    auto r = hunt(q);
    REQUIRE(r.witness);
    CHECK(r.witness->coordinates.n <= 4);
}

TEST_CASE("citations")
{
    CHECK(cite_implication(C::kGammaOpen, C::kPreGammaIOpen, {}) == "Thm 3.2");
    CHECK(cite_implication(C::kOpen, C::kOpen, {}) == "reflexive");
    CHECK_FALSE(cite_implication(C::kPreGammaIOpen, C::kGammaOpen, {}));
}

TEST_CASE("atlas cells")
{
    const auto& m = atlas3();
    for (auto c : kAllClasses)
        CHECK(m.cell(c, c).status == AtlasCell::Status::kImplied);
    CHECK(m.cell(C::kGammaOpen, C::kPreGammaIOpen).status == AtlasCell::Status::kImplied);
    CHECK(m.cell(C::kGammaOpen, C::kPreGammaIOpen).citation.find("Thm 3.2") != std::string::npos);
    const auto& back = m.cell(C::kPreGammaIOpen, C::kGammaOpen);
    REQUIRE(back.status == AtlasCell::Status::kRefuted);
    REQUIRE(back.witness);
    CHECK(is_member(back.witness->context, C::kPreGammaIOpen, back.witness->subset));
    CHECK_FALSE(is_member(back.witness->context, C::kGammaOpen, back.witness->subset));

    for (auto from : kAllClasses) {
        for (auto to : kAllClasses) {
            const auto& cell = m.cell(from, to);
            if (cell.status == AtlasCell::Status::kRefuted) {
                REQUIRE(cell.witness);
                CHECK(is_member(cell.witness->context, from, cell.witness->subset));
                CHECK_FALSE(is_member(cell.witness->context, to, cell.witness->subset));
            }
            if (cell.status == AtlasCell::Status::kImplied)
                CHECK_FALSE(cell.citation.empty());
        }
    }
}

TEST_CASE("atlas restricted to the six pre-classes reproduces the inclusion pattern")
{
    const auto& m = atlas3();
    const C six[] = {C::kGammaOpen, C::kPreGammaIOpen, C::kPreGammaOpen, C::kPreIOpen, C::kGammaPreopen, C::kGammaPOpen};
    CHECK(m.cell(C::kGammaOpen, C::kPreGammaIOpen).citation == "Thm 3.2");
    CHECK(m.cell(C::kPreGammaIOpen, C::kPreGammaOpen).citation == "Thm 3.4");
    CHECK(m.cell(C::kPreGammaIOpen, C::kPreIOpen).citation == "Thm 3.6");
    CHECK(m.cell(C::kPreGammaIOpen, C::kGammaPreopen).citation == "Thm 3.8");
    CHECK(m.cell(C::kPreGammaIOpen, C::kGammaPOpen).citation == "Thm 3.10");
    CHECK(m.cell(C::kPreGammaIOpen, C::kGammaOpen).status == AtlasCell::Status::kRefuted);
    for (auto weaker : {C::kPreGammaOpen, C::kPreIOpen, C::kGammaPreopen, C::kGammaPOpen}) {
        CHECK(m.cell(C::kPreGammaIOpen, weaker).status == AtlasCell::Status::kImplied);
        CHECK(m.cell(weaker, C::kPreGammaIOpen).status == AtlasCell::Status::kRefuted);
        CHECK(m.cell(C::kGammaOpen, weaker).status == AtlasCell::Status::kImplied);
        CHECK(m.cell(weaker, C::kGammaOpen).status == AtlasCell::Status::kRefuted);
    }
    for (auto from : six)
        for (auto to : six)
            CHECK(m.cell(from, to).status != AtlasCell::Status::kBudgetExhausted);
}

TEST_CASE("atlas JSON round-trips and DOT lists every class")
{
    const auto& m = atlas3();
    auto text = export_atlas(m, "json");
    auto back = atlas_from_json(nlohmann::json::parse(text));
    CHECK(back == m);
    CHECK(export_atlas(back, "json") == text);

    auto dot = export_atlas(m, "dot");
    std::size_t nodes = 0;
    std::regex node_line("^  \"[A-Z_]+\";$");
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);)
        nodes += std::regex_match(line, node_line);
    CHECK(nodes == 20);
    CHECK(dot.find("\"GAMMA_OPEN\" -> \"PRE_GAMMA_I_OPEN\" [style=solid, label=\"Thm 3.2; converse refuted\"]") !=
          std::string::npos);
    CHECK(export_atlas(m, "dot") == dot);
    CHECK_THROWS_AS(export_atlas(m, "svg"), Error);
}

TEST_CASE("exported witnesses re-verify through the parser")
{
    const auto& m = atlas3();
    auto doc = atlas_to_json(m);
    std::size_t checked = 0;
    for (const auto& cell : doc["cells"]) {
        if (!cell.contains("witness"))
            continue;
        auto space = parse_space_spec(cell["witness"]["space"].dump());
        auto from = *parse_class(cell["from"].get<std::string>());
        auto to = *parse_class(cell["to"].get<std::string>());
        SubsetMask a;
        for (const auto& p : cell["witness"]["subset"])
            a |= parse_subset(space.points, p.get<std::string>());
        CHECK(is_member(space.context, from, a));
        CHECK_FALSE(is_member(space.context, to, a));
        ++checked;
    }
    CHECK(checked > 0);
}
