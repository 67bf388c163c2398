#include "idealtop/report.hh"

#include <sstream>

namespace idealtop {

using nlohmann::json;

namespace {

SetClass class_from_json(const json& j)
{
    auto c = parse_class(j.get<std::string>());
    if (!c)
        throw Error(ErrorCode::kUnknownName, "unknown class " + j.dump());
    return *c;
}

} // namespace

json bounds_to_json(const Bounds& b)
{
    return {{"n_min", b.n_min},
            {"n_max", b.n_max},
            {"gamma_mode", std::string(gamma_mode_name(b.gamma_mode))},
            {"budget", b.budget},
            {"gamma_budget", b.gamma_budget}};
}

Bounds bounds_from_json(const json& j)
{
    Bounds b;
    b.n_min = j.at("n_min").get<int>();
    b.n_max = j.at("n_max").get<int>();
    auto mode = parse_gamma_mode(j.at("gamma_mode").get<std::string>());
    if (!mode)
        throw Error(ErrorCode::kUnknownName, "unknown gamma mode");
    b.gamma_mode = *mode;
    b.budget = j.at("budget").get<std::uint64_t>();
    b.gamma_budget = j.at("gamma_budget").get<std::uint64_t>();
    return b;
}

json witness_to_json(const Witness& w)
{
    auto names = default_point_names(w.context.size());
    json j;
    j["coordinates"] = {{"n", w.coordinates.n},
                        {"topology", w.coordinates.topology},
                        {"ideal", w.coordinates.ideal},
                        {"gamma", w.coordinates.gamma}};
    j["space"] = space_to_json(NamedSpace{names, w.context});
    j["subset"] = subset_to_json(names, w.subset);
    if (w.partner)
        j["partner"] = subset_to_json(names, *w.partner);
    if (!w.detail.empty())
        j["detail"] = w.detail;
    json evaluated = json::array();
    for (const auto& [atom, value] : w.evaluated)
        evaluated.push_back({{"atom", atom}, {"value", value}});
    j["evaluated"] = evaluated;
    return j;
}

Witness witness_from_json(const json& j)
{
    auto space = space_from_json(j.at("space"));
    auto names_to = [&](const json& list) {
        SubsetMask m;
        for (const auto& name : list)
            m |= parse_subset(space.points, name.get<std::string>());
        return m;
    };
    const auto& c = j.at("coordinates");
    Witness w{ContextCoordinates{c.at("n").get<int>(), c.at("topology").get<std::size_t>(),
                                 c.at("ideal").get<std::size_t>(), c.at("gamma").get<std::uint64_t>()},
              space.context,
              names_to(j.at("subset")),
              std::nullopt,
              j.value("detail", std::string()),
              {}};
    if (j.contains("partner"))
        w.partner = names_to(j.at("partner"));
    for (const auto& e : j.at("evaluated"))
        w.evaluated.emplace_back(e.at("atom").get<std::string>(), e.at("value").get<bool>());
    return w;
}

json verification_to_json(const std::vector<VerificationReport>& reports, const std::vector<FixtureCheck>& fixtures,
                          const Bounds& bounds, bool include_timing)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["bounds"] = bounds_to_json(bounds);
    json fx = json::array();
    for (const auto& f : fixtures)
        fx.push_back({{"fixture", f.fixture}, {"claim", f.claim}, {"expected", f.expected}, {"actual", f.actual},
                      {"passed", f.passed()}});
    doc["fixtures"] = fx;
    json reps = json::array();
    std::size_t counterexamples = 0, exhausted = 0;
    for (const auto& r : reports) {
        json e = {{"id", r.id},
                  {"statement", r.statement},
                  {"contexts_scanned", r.contexts_scanned},
                  {"verdict", std::string(verdict_name(r.verdict))}};
        if (r.witness)
            e["witness"] = witness_to_json(*r.witness);
        if (!r.budget_message.empty())
            e["budget_message"] = r.budget_message;
        if (include_timing)
            e["runtime_ms"] = r.runtime_ms;
        counterexamples += r.verdict == Verdict::kCounterexample;
        exhausted += r.verdict == Verdict::kBudgetExceeded;
        reps.push_back(e);
    }
    doc["reports"] = reps;
    std::size_t fixture_failures = 0;
    for (const auto& f : fixtures)
        fixture_failures += !f.passed();
    doc["summary"] = {{"specs", reports.size()},
                      {"counterexamples", counterexamples},
                      {"budget_exceeded", exhausted},
                      {"fixture_checks", fixtures.size()},
                      {"fixture_failures", fixture_failures}};
    return doc;
}

json hunt_to_json(const Query& q, const HuntResult& r)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "hunt";
    json from = json::array(), to = json::array(), req = json::array();
    for (auto c : q.source)
        from.push_back(std::string(class_name(c)));
    for (auto c : q.target)
        to.push_back(std::string(class_name(c)));
    for (auto p : normalize_properties(q.constraints))
        req.push_back(std::string(property_name(p)));
    doc["from"] = from;
    doc["to"] = to;
    doc["constraints"] = req;
    doc["bounds"] = bounds_to_json(q.bounds);
    doc["contexts_scanned"] = r.contexts_scanned;
    if (r.witness) {
        doc["verdict"] = "refuted";
        doc["witness"] = witness_to_json(*r.witness);
    } else if (r.budget_exhausted) {
        doc["verdict"] = "budget_exhausted";
        doc["budget_message"] = r.budget_message;
    } else {
        doc["verdict"] = "no_counterexample";
    }
    return doc;
}

std::optional<AtlasFormat> parse_atlas_format(std::string_view name)
{
    if (name == "json")
        return AtlasFormat::kJson;
    if (name == "dot")
        return AtlasFormat::kDot;
    return std::nullopt;
}

json atlas_to_json(const AtlasMatrix& m)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "atlas";
    json req = json::array();
    for (auto p : m.constraints)
        req.push_back(std::string(property_name(p)));
    doc["constraints"] = req;
    doc["bounds"] = bounds_to_json(m.bounds);
    json classes = json::array();
    for (auto c : kAllClasses)
        classes.push_back(std::string(class_name(c)));
    doc["classes"] = classes;
    json cells = json::array();
    for (auto from : kAllClasses) {
        for (auto to : kAllClasses) {
            const auto& cell = m.cell(from, to);
            json e = {{"from", std::string(class_name(from))},
                      {"to", std::string(class_name(to))},
                      {"status", std::string(cell_status_name(cell.status))}};
            if (!cell.citation.empty())
                e["citation"] = cell.citation;
            if (cell.witness)
                e["witness"] = witness_to_json(*cell.witness);
            cells.push_back(e);
        }
    }
    doc["cells"] = cells;
    return doc;
}

AtlasMatrix atlas_from_json(const json& j)
{
    if (j.value("kind", std::string()) != "atlas")
        throw Error(ErrorCode::kSchema, "not an atlas document");
    AtlasMatrix m;
    for (const auto& p : j.at("constraints")) {
        auto prop = parse_property(p.get<std::string>());
        if (!prop)
            throw Error(ErrorCode::kUnknownName, "unknown property " + p.dump());
        m.constraints.push_back(*prop);
    }
    m.constraints = normalize_properties(m.constraints);
    m.bounds = bounds_from_json(j.at("bounds"));
    for (const auto& e : j.at("cells")) {
        auto& cell = m.cells[class_index(class_from_json(e.at("from")))][class_index(class_from_json(e.at("to")))];
        auto status = parse_cell_status(e.at("status").get<std::string>());
        if (!status)
            throw Error(ErrorCode::kUnknownName, "unknown cell status " + e.at("status").dump());
        cell.status = *status;
        cell.citation = e.value("citation", std::string());
        if (e.contains("witness"))
            cell.witness = witness_from_json(e.at("witness"));
    }
    return m;
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

std::string atlas_dot(const AtlasMatrix& m)
{
    std::ostringstream os;
    std::string constraints;
    for (auto p : m.constraints)
        constraints += (constraints.empty() ? "" : ", ") + std::string(property_name(p));
    os << "digraph atlas {\n";
    os << "  label=\"constraints: " << (constraints.empty() ? "none" : constraints) << "; n " << m.bounds.n_min
       << ".." << m.bounds.n_max << ", gamma " << gamma_mode_name(m.bounds.gamma_mode) << "\";\n";
    os << "  node [shape=box];\n";
    for (auto c : kAllClasses)
        os << "  \"" << class_name(c) << "\";\n";
    for (auto from : kAllClasses) {
        for (auto to : kAllClasses) {
            if (from == to)
                continue;
            const auto& cell = m.cell(from, to);
            if (cell.status != AtlasCell::Status::kImplied && cell.status != AtlasCell::Status::kNoCounterexample)
                continue;
            std::string label = cell.status == AtlasCell::Status::kImplied ? cell.citation : "unrefuted";
            if (m.cell(to, from).status == AtlasCell::Status::kRefuted)
                label += "; converse refuted";
            os << "  \"" << class_name(from) << "\" -> \"" << class_name(to) << "\" [style="
               << (cell.status == AtlasCell::Status::kImplied ? "solid" : "dashed") << ", label=\""
               << dot_escape(label) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string export_atlas(const AtlasMatrix& m, AtlasFormat format)
{
    if (format == AtlasFormat::kDot)
        return atlas_dot(m);
    return atlas_to_json(m).dump(2) + "\n";
}

std::string export_atlas(const AtlasMatrix& m, std::string_view format)
{
    auto f = parse_atlas_format(format);
    if (!f)
        throw Error(ErrorCode::kUnknownName, "unknown atlas format \"" + std::string(format) + "\" (json, dot)");
    return export_atlas(m, *f);
}

} // namespace idealtop
