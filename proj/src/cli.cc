#include "idealtop/cli.hh"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "idealtop/report.hh"

namespace idealtop {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::vector<std::string>& items)
{
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

std::vector<SetClass> parse_classes(const std::vector<std::string>& names)
{
    std::vector<SetClass> out;
    for (const auto& name : split_commas(names)) {
        auto c = parse_class(name);
        if (!c)
            throw UsageError("unknown class \"" + name + "\"");
        out.push_back(*c);
    }
    return out;
}

std::vector<SpaceProperty> parse_properties(const std::vector<std::string>& names)
{
    std::vector<SpaceProperty> out;
    for (const auto& name : split_commas(names)) {
        auto p = parse_property(name);
        if (!p)
            throw UsageError("unknown property \"" + name + "\"");
        out.push_back(*p);
    }
    return normalize_properties(out);
}

GammaMode parse_mode(const std::string& name)
{
    auto m = parse_gamma_mode(name);
    if (!m)
        throw UsageError("unknown gamma mode \"" + name + "\" (full, presets)");
    return *m;
}

NamedSpace load_space(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::kSchema, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_space_spec(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

/// Writes to --out when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw Error(ErrorCode::kSchema, "cannot write " + path);
    file << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    throw UsageError("unsupported --format \"" + format + "\"");
}

std::string verify_table(const std::vector<VerificationReport>& reports, const std::vector<FixtureCheck>& fixtures,
                         bool timing)
{
    std::ostringstream os;
    std::size_t fixture_ok = 0;
    for (const auto& f : fixtures)
        fixture_ok += f.passed();
    os << "fixtures: " << fixture_ok << "/" << fixtures.size() << " claims reproduced\n";
    for (const auto& f : fixtures)
        os << "  [" << (f.passed() ? "ok" : "MISMATCH") << "] " << f.fixture << ": " << f.claim << "\n";
    std::size_t counterexamples = 0;
    for (const auto& r : reports) {
        os << std::left << std::setw(22) << r.id << " " << std::setw(18) << verdict_name(r.verdict)
           << " contexts=" << r.contexts_scanned;
        if (timing)
            os << " time=" << std::fixed << std::setprecision(1) << r.runtime_ms << "ms";
        os << "\n";
        if (r.witness) {
            ++counterexamples;
            auto names = default_point_names(r.witness->context.size());
            os << "    witness: n=" << r.witness->coordinates.n << " topology #" << r.witness->coordinates.topology
               << " ideal #" << r.witness->coordinates.ideal << " gamma #" << r.witness->coordinates.gamma
               << " A=" << render_subset(names, r.witness->subset);
            if (r.witness->partner)
                os << " B=" << render_subset(names, *r.witness->partner);
            if (!r.witness->detail.empty())
                os << " (" << r.witness->detail << ")";
            os << "\n";
        }
        if (!r.budget_message.empty())
            os << "    " << r.budget_message << "\n";
    }
    os << "summary: " << reports.size() << " specs, " << counterexamples << " counterexamples, "
       << (fixtures.size() - fixture_ok) << " fixture mismatches\n";
    return os.str();
}

int cmd_verify(int n, const std::string& mode, const std::vector<std::string>& ids, bool converses,
               std::uint64_t budget, const std::string& format, const std::string& out_path, bool timing,
               std::ostream& out)
{
    require_format(format, {"table", "json"});
    Bounds bounds;
    bounds.n_min = 1;
    bounds.n_max = n;
    bounds.gamma_mode = parse_mode(mode);
    bounds.budget = budget;

    std::vector<TheoremSpec> specs;
    if (ids.empty()) {
        specs = builtin_theorems();
        if (converses)
            specs.insert(specs.end(), converse_theorems().begin(), converse_theorems().end());
    } else {
        for (const auto& id : ids) {
            const auto* spec = find_theorem(id);
            if (!spec)
                throw UsageError("unknown spec id \"" + id + "\"");
            specs.push_back(*spec);
        }
    }
    auto fixtures = check_fixtures();
    auto reports = verify_all(specs, bounds);

    std::string text = format == "json" ? verification_to_json(reports, fixtures, bounds, timing).dump(2) + "\n"
                                        : verify_table(reports, fixtures, timing);
    emit(text, out_path, out);

    bool mismatch = false;
    for (const auto& f : fixtures)
        mismatch |= !f.passed();
    bool refuted = false, exhausted = false;
    for (const auto& r : reports) {
        refuted |= r.verdict == Verdict::kCounterexample;
        exhausted |= r.verdict == Verdict::kBudgetExceeded;
    }
    if (mismatch || refuted)
        return kExitCounterexample;
    return exhausted ? kExitBudget : kExitOk;
}

int cmd_classify(const std::string& path, const std::string& subset, bool subset_given, const std::string& format,
                 std::ostream& out)
{
    require_format(format, {"table", "json"});
    auto space = load_space(path);
    const auto& ctx = space.context;
    std::vector<SubsetMask> subsets;
    if (subset_given) {
        try {
            subsets.push_back(parse_subset(space.points, subset));
        } catch (const Error& e) {
            throw UsageError(std::string("--subset: ") + e.what());
        }
    }
    else
        subsets = all_subsets(ctx.size());

    if (format == "json") {
        nlohmann::json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "classify";
        doc["space"] = space_to_json(space);
        nlohmann::json rows = nlohmann::json::array();
        for (auto a : subsets) {
            auto v = classify(ctx, a);
            auto st = star_status(ctx.topology(), ctx.ideal(), a);
            nlohmann::json classes;
            for (auto c : kAllClasses)
                classes[std::string(class_name(c))] = v.has(c);
            rows.push_back({{"subset", subset_to_json(space.points, a)},
                            {"local_function", subset_to_json(space.points,
                                                              local_function(ctx.topology(), ctx.ideal(), a))},
                            {"star_closure", subset_to_json(space.points,
                                                            star_closure(ctx.topology(), ctx.ideal(), a))},
                            {"star_status",
                             {{"dense_in_itself", st.dense_in_itself},
                              {"tau_star_closed", st.tau_star_closed},
                              {"perfect", st.perfect}}},
                            {"classes", classes}});
        }
        doc["subsets"] = rows;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }

    for (auto a : subsets) {
        auto v = classify(ctx, a);
        out << render_subset(space.points, a) << "\n";
        out << "  A*: " << render_subset(space.points, local_function(ctx.topology(), ctx.ideal(), a)) << "\n";
        out << "  Cl*: " << render_subset(space.points, star_closure(ctx.topology(), ctx.ideal(), a)) << "\n";
        for (auto c : kAllClasses)
            out << "  " << class_name(c) << ": " << (v.has(c) ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_hunt(const std::vector<std::string>& from, const std::vector<std::string>& to,
             const std::vector<std::string>& require, int n, const std::string& mode, std::uint64_t budget,
             const std::string& format, std::ostream& out)
{
    require_format(format, {"table", "json"});
    Query q;
    q.source = parse_classes(from);
    q.target = parse_classes(to);
    q.constraints = parse_properties(require);
    q.bounds.n_min = 1;
    q.bounds.n_max = n;
    q.bounds.gamma_mode = parse_mode(mode);
    q.bounds.budget = budget;
    if (q.source.empty() || q.target.empty())
        throw UsageError("--from and --to each need at least one class");
    auto result = hunt(q);

    if (format == "json") {
        out << hunt_to_json(q, result).dump(2) << "\n";
    } else if (result.witness) {
        const auto& w = *result.witness;
        NamedSpace space{default_point_names(w.context.size()), w.context};
        out << "refuted: witness at n=" << w.coordinates.n << " topology #" << w.coordinates.topology << " ideal #"
            << w.coordinates.ideal << " gamma #" << w.coordinates.gamma << "\n";
        out << "subset: " << render_subset(space.points, w.subset) << "\n";
        for (const auto& [name, value] : w.evaluated)
            out << "  " << name << ": " << (value ? "true" : "false") << "\n";
        out << export_space_spec(space);
    } else if (result.budget_exhausted) {
        out << "budget exhausted after " << result.contexts_scanned << " contexts: " << result.budget_message << "\n";
    } else {
        out << "no counterexample up to n=" << n << " (" << result.contexts_scanned << " contexts)\n";
    }
    return result.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_atlas(const std::vector<std::string>& require, int n, const std::string& mode, std::uint64_t budget,
              const std::string& format, const std::string& out_path, std::ostream& out)
{
    auto fmt = parse_atlas_format(format);
    if (!fmt)
        throw UsageError("unsupported --format \"" + format + "\" (dot, json)");
    Bounds bounds;
    bounds.n_min = 1;
    bounds.n_max = n;
    bounds.gamma_mode = parse_mode(mode);
    bounds.budget = budget;
    auto m = build_atlas(parse_properties(require), bounds);
    emit(export_atlas(m, *fmt), out_path, out);
    for (const auto& row : m.cells)
        for (const auto& cell : row)
            if (cell.status == AtlasCell::Status::kBudgetExhausted)
                return kExitBudget;
    return kExitOk;
}

int cmd_enumerate(const std::string& kind, int n, bool n_given, bool count_only, const std::string& space_path,
                  const std::string& mode_name, std::ostream& out)
{
    if (kind == "topologies") {
        if (!n_given)
            throw UsageError("--n is required");
        auto ts = enumerate_topologies(n);
        if (count_only) {
            out << ts.size() << "\n";
            return kExitOk;
        }
        auto names = default_point_names(n);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out << "#" << i << ":";
            for (auto o : ts[i].opens())
                out << " " << render_subset(names, o);
            out << "\n";
        }
        return kExitOk;
    }
    if (kind == "ideals") {
        if (!n_given)
            throw UsageError("--n is required");
        auto ideals = enumerate_ideals(n);
        if (count_only) {
            out << ideals.size() << "\n";
            return kExitOk;
        }
        auto names = default_point_names(n);
        for (std::size_t i = 0; i < ideals.size(); ++i)
            out << "#" << i << ": P(" << render_subset(names, ideals[i].max_member()) << ")\n";
        return kExitOk;
    }
    if (kind == "gammas") {
        auto mode = parse_mode(mode_name);
        std::vector<Topology> topologies;
        std::vector<std::string> names;
        if (!space_path.empty()) {
            auto space = load_space(space_path);
            topologies.push_back(space.context.topology());
            names = space.points;
        } else {
            if (!n_given)
                throw UsageError("--n or --space is required");
            topologies = enumerate_topologies(n);
            names = default_point_names(n);
        }
        if (count_only) {
            std::uint64_t total = 0;
            for (const auto& t : topologies)
                total += mode == GammaMode::kFull ? count_gammas(t) : std::size(kAllPresets);
            out << total << "\n";
            return kExitOk;
        }
        for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
            const auto& t = topologies[ti];
            std::uint64_t gi = 0;
            for_each_gamma(t, mode, kDefaultGammaBudget, [&](const GammaOperation& g) {
                out << "topology #" << ti << " gamma #" << gi++ << ":";
                for (std::size_t i = 0; i < t.open_count(); ++i)
                    out << " " << render_subset(names, t.opens()[i]) << "->" << render_subset(names, g.image(i));
                out << "\n";
                return true;
            });
        }
        return kExitOk;
    }
    throw UsageError("unknown --kind \"" + kind + "\" (topologies, ideals, gammas)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite-model laboratory for ideal topological spaces with an operation"};
    app.require_subcommand(1);

    // verify
    int v_n = 3;
    std::string v_mode = "full", v_format = "table", v_out;
    std::vector<std::string> v_ids;
    bool v_converses = false, v_timing = false;
    std::uint64_t v_budget = Bounds{}.budget;
    auto* verify_cmd = app.add_subcommand("verify", "Check every roster claim over all small spaces");
    verify_cmd->add_option("--n", v_n, "Largest ground set size (1..5)");
    verify_cmd->add_option("--gamma-mode", v_mode, "full | presets");
    verify_cmd->add_option("--spec", v_ids, "Only these spec ids (repeatable)");
    verify_cmd->add_flag("--converses", v_converses, "Also run the converse claims expected to fail");
    verify_cmd->add_option("--budget", v_budget, "Maximum number of contexts to scan");
    verify_cmd->add_option("--format", v_format, "table | json");
    verify_cmd->add_option("--out", v_out, "Write the report to this file");
    verify_cmd->add_flag("--timing", v_timing, "Include per-spec runtimes");

    // classify
    std::string c_space, c_subset, c_format = "table";
    auto* classify_cmd = app.add_subcommand("classify", "Class memberships of subsets of a space");
    classify_cmd->add_option("--space", c_space, "Space-spec JSON file")->required();
    auto* subset_opt = classify_cmd->add_option("--subset", c_subset, "Subset by point names, e.g. a,b");
    classify_cmd->add_option("--format", c_format, "table | json");

    // hunt
    std::vector<std::string> h_from, h_to, h_require;
    int h_n = 3;
    std::string h_mode = "full", h_format = "table";
    std::uint64_t h_budget = Bounds{}.budget;
    auto* hunt_cmd = app.add_subcommand("hunt", "Search for a set in all --from classes but not all --to classes");
    hunt_cmd->add_option("--from", h_from, "Source classes (comma separated)")->required();
    hunt_cmd->add_option("--to", h_to, "Target classes (comma separated)")->required();
    hunt_cmd->add_option("--require", h_require, "Space properties the search is restricted to");
    hunt_cmd->add_option("--n", h_n, "Largest ground set size (1..5)");
    hunt_cmd->add_option("--gamma-mode", h_mode, "full | presets");
    hunt_cmd->add_option("--budget", h_budget, "Maximum number of contexts to scan");
    hunt_cmd->add_option("--format", h_format, "table | json");

    // atlas
    std::vector<std::string> a_require;
    int a_n = 3;
    std::string a_mode = "full", a_format = "dot", a_out;
    std::uint64_t a_budget = Bounds{}.budget;
    auto* atlas_cmd = app.add_subcommand("atlas", "Implication matrix over the whole class catalogue");
    atlas_cmd->add_option("--require", a_require, "Space properties the matrix is restricted to");
    atlas_cmd->add_option("--n", a_n, "Largest ground set size (1..5)");
    atlas_cmd->add_option("--gamma-mode", a_mode, "full | presets");
    atlas_cmd->add_option("--budget", a_budget, "Maximum number of contexts to scan");
    atlas_cmd->add_option("--format", a_format, "dot | json");
    atlas_cmd->add_option("--out", a_out, "Write the export to this file");

    // enumerate
    std::string e_kind, e_space, e_mode = "full";
    int e_n = 0;
    bool e_count = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "List topologies, ideals or gamma operations");
    enum_cmd->add_option("--kind", e_kind, "topologies | ideals | gammas")->required();
    auto* n_opt = enum_cmd->add_option("--n", e_n, "Ground set size");
    enum_cmd->add_option("--space", e_space, "For gammas: use this file's topology");
    enum_cmd->add_option("--gamma-mode", e_mode, "full | presets");
    enum_cmd->add_flag("--count-only", e_count, "Print only the count");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(v_n, v_mode, v_ids, v_converses, v_budget, v_format, v_out, v_timing, out);
        if (classify_cmd->parsed())
            return cmd_classify(c_space, c_subset, subset_opt->count() > 0, c_format, out);
        if (hunt_cmd->parsed())
            return cmd_hunt(h_from, h_to, h_require, h_n, h_mode, h_budget, h_format, out);
        if (atlas_cmd->parsed())
            return cmd_atlas(a_require, a_n, a_mode, a_budget, a_format, a_out, out);
        if (enum_cmd->parsed())
            return cmd_enumerate(e_kind, e_n, n_opt->count() > 0, e_count, e_space, e_mode, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::kBudgetExceeded: return kExitBudget;
        case ErrorCode::kOutOfRange:
        case ErrorCode::kUnknownName: return kExitUsage;
        case ErrorCode::kEngineDefect: return kExitInternal;
        default: return kExitInput;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace idealtop
