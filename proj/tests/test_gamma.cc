#include <doctest.h>

#include "support.hh"

using namespace idealtop;
using test_support::mask;

namespace {

Topology e33_topology()
{
    return Topology(3, {mask(0), mask(0b101), mask(0b111)});
}

} // namespace

TEST_CASE("gamma enumeration counts")
{
    auto t = e33_topology();
    CHECK(count_gammas(t) == 16);
    auto all = enumerate_gammas(t, GammaMode::kFull);
    CHECK(all.size() == 16);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] != all[i]);
    for (const auto& g : all)
        CHECK_FALSE(non_expansive_entry(t, g));
    CHECK(enumerate_gammas(t, GammaMode::kPresets).size() == 4);

    for (int n = 1; n <= 3; ++n) {
        for (const auto& top : enumerate_topologies(n)) {
            std::uint64_t product = 1;
            for (auto v : top.opens())
                product *= std::uint64_t{1} << (n - v.size());
            CHECK(count_gammas(top) == product);
            CHECK(enumerate_gammas(top, GammaMode::kFull).size() == product);
        }
    }
}

TEST_CASE("gamma budget")
{
    auto t = Topology::discrete(3);
    CHECK(count_gammas(t) > 10);
    try {
        enumerate_gammas(t, GammaMode::kFull, 10);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
    }
    CHECK(enumerate_gammas(t, GammaMode::kPresets, 1).size() == 4);
}

TEST_CASE("presets")
{
    auto t = e33_topology();
    CHECK(parse_preset("closure") == GammaPreset::kClosure);
    CHECK_FALSE(parse_preset("nope"));
    for (auto p : kAllPresets) {
        CHECK(parse_preset(preset_name(p)) == p);
        auto g = make_preset(t, p);
        CHECK_FALSE(non_expansive_entry(t, g));
    }
    auto id = make_preset(t, GammaPreset::kIdentity);
    for (std::size_t i = 0; i < t.open_count(); ++i)
        CHECK(id.image(i) == t.opens()[i]);
    auto cl = make_preset(t, GammaPreset::kClosure);
    for (std::size_t i = 0; i < t.open_count(); ++i)
        CHECK(cl.image(i) == closure(t, t.opens()[i]));
}

TEST_CASE("space context rejects bad operations")
{
    auto t = e33_topology();
    try {
        SpaceContext(t, Ideal::trivial(3), GammaOperation({mask(0), mask(0b001), mask(7)}));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kGammaNotExpansive);
        CHECK(std::string(e.what()).find("gamma not expansive") != std::string::npos);
    }
    try {
        SpaceContext(t, Ideal::trivial(3), GammaOperation({mask(0), mask(7)}));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kGammaIncomplete);
    }
    CHECK_THROWS_AS(SpaceContext(t, Ideal::trivial(2), make_preset(t, GammaPreset::kIdentity)), Error);
}

TEST_CASE("gamma-open sets against the definition")
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_topologies(n)) {
            for (const auto& g : enumerate_gammas(t, GammaMode::kFull)) {
                SpaceContext ctx(t, Ideal::trivial(n), g);
                auto s = test_support::to_oracle(ctx);
                bool union_closed = true;
                for (auto a : all_subsets(n)) {
                    bool open = oracle::gamma_open(s, a.bits());
                    CHECK(is_gamma_open(ctx, a) == open);
                    CHECK(tau_gamma(ctx).contains(a) == open);
                    if (open)
                        CHECK(t.is_open(a));
                    CHECK(tau_gamma_int(ctx, a) == mask(oracle::gamma_interior(s, a.bits())));
                    CHECK(tau_gamma_cl(ctx, a) == mask(oracle::gamma_closure(s, a.bits())));
                }
                for (auto a : tau_gamma(ctx).members)
                    for (auto b : tau_gamma(ctx).members)
                        union_closed &= tau_gamma(ctx).contains(a | b);
                CHECK(union_closed);
                CHECK(tau_equals_tau_gamma(ctx) == is_gamma_regular_space(ctx));
                if (is_regular_operation(ctx)) {
                    for (auto a : tau_gamma(ctx).members)
                        for (auto b : tau_gamma(ctx).members)
                            CHECK(tau_gamma(ctx).contains(a & b));
                }
            }
        }
    }
}

TEST_CASE("identity operation is gamma-regular; constant X usually is not")
{
    auto t = e33_topology();
    SpaceContext id(t, Ideal::trivial(3), make_preset(t, GammaPreset::kIdentity));
    CHECK(is_gamma_regular_space(id));
    CHECK(tau_gamma(id).members == t.opens());
    SpaceContext cx(t, Ideal::trivial(3), make_preset(t, GammaPreset::kConstantX));
    CHECK_FALSE(is_gamma_regular_space(cx));
    CHECK(tau_gamma(cx).members == (std::vector<SubsetMask>{mask(0), mask(7)}));
}

TEST_CASE("gamma mode names")
{
    CHECK(parse_gamma_mode("full") == GammaMode::kFull);
    CHECK(parse_gamma_mode("presets") == GammaMode::kPresets);
    CHECK_FALSE(parse_gamma_mode("some"));
}
