#pragma once

#include <string>

#include "idealtop/report.hh"
#include "oracle.hh"

namespace test_support {

inline oracle::Space to_oracle(const idealtop::SpaceContext& ctx)
{
    oracle::Space s;
    s.n = ctx.size();
    for (auto o : ctx.topology().opens())
        s.opens.push_back(o.bits());
    for (auto m : ctx.ideal().members())
        s.ideal.push_back(m.bits());
    for (std::size_t i = 0; i < ctx.topology().open_count(); ++i)
        s.gamma.emplace_back(ctx.topology().opens()[i].bits(), ctx.gamma().image(i).bits());
    return s;
}

inline idealtop::SubsetMask mask(std::uint32_t b) { return idealtop::SubsetMask(b); }

inline std::string fixture_path(const std::string& file)
{
    return std::string(IDEALTOP_FIXTURE_DIR) + "/" + file;
}

} // namespace test_support
