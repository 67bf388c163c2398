#include "idealtop/spacefile.hh"

#include <algorithm>
#include <optional>

namespace idealtop {

using nlohmann::json;

std::vector<std::string> default_point_names(int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

std::string render_subset(const std::vector<std::string>& points, SubsetMask a)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!a.contains(static_cast<int>(i)))
            continue;
        if (!first)
            out += ',';
        out += points[i];
        first = false;
    }
    return out + "}";
}

json subset_to_json(const std::vector<std::string>& points, SubsetMask a)
{
    json out = json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
        if (a.contains(static_cast<int>(i)))
            out.push_back(points[i]);
    return out;
}

namespace {

std::optional<int> point_index(const std::vector<std::string>& points, std::string_view name)
{
    auto it = std::find(points.begin(), points.end(), name);
    if (it == points.end())
        return std::nullopt;
    return static_cast<int>(it - points.begin());
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

/// Thrown inside the parser; carries the document key it concerns so the
/// caller can attach a line number.
struct KeyedError {
    ErrorCode code;
    std::string key;
    std::string message;
};

SubsetMask names_to_mask(const std::vector<std::string>& points, const json& list, const std::string& key)
{
    if (!list.is_array())
        throw KeyedError{ErrorCode::kSchema, key, key + ": expected a list of point names"};
    SubsetMask out;
    for (const auto& item : list) {
        if (!item.is_string())
            throw KeyedError{ErrorCode::kSchema, key, key + ": point names must be strings"};
        auto i = point_index(points, item.get<std::string>());
        if (!i)
            throw KeyedError{ErrorCode::kUnknownPoint, key,
                             key + ": unknown point \"" + item.get<std::string>() + "\""};
        out |= SubsetMask::point(*i);
    }
    return out;
}

int line_of(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int line_of_key(std::string_view text, const std::string& key)
{
    if (key.empty())
        return 1;
    auto pos = text.find("\"" + key + "\"");
    return pos == std::string_view::npos ? 1 : line_of(text, pos);
}

NamedSpace build_space(const json& doc)
{
    if (!doc.is_object())
        throw KeyedError{ErrorCode::kSchema, "", "document must be a JSON object"};
    for (const char* key : {"points", "opens", "ideal", "gamma"})
        if (!doc.contains(key))
            throw KeyedError{ErrorCode::kSchema, "", std::string("missing field \"") + key + "\""};
    if (doc.contains("schema_version") &&
        (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kSchemaVersion))
        throw KeyedError{ErrorCode::kSchema, "schema_version", "unsupported schema_version"};

    const auto& pts = doc["points"];
    if (!pts.is_array())
        throw KeyedError{ErrorCode::kSchema, "points", "points: expected a list of names"};
    std::vector<std::string> points;
    for (const auto& p : pts) {
        if (!p.is_string() || p.get<std::string>().empty())
            throw KeyedError{ErrorCode::kSchema, "points", "points: names must be nonempty strings"};
        if (point_index(points, p.get<std::string>()))
            throw KeyedError{ErrorCode::kDuplicatePoint, "points",
                             "points: duplicate point \"" + p.get<std::string>() + "\""};
        points.push_back(p.get<std::string>());
    }
    if (points.size() > static_cast<std::size_t>(kMaxPoints))
        throw KeyedError{ErrorCode::kTooManyPoints, "points", "points: at most 16 points are supported"};
    const int n = static_cast<int>(points.size());
    auto render = [&](SubsetMask m) { return render_subset(points, m); };

    if (!doc["opens"].is_array())
        throw KeyedError{ErrorCode::kSchema, "opens", "opens: expected a list of sets"};
    std::vector<SubsetMask> opens;
    for (const auto& o : doc["opens"])
        opens.push_back(names_to_mask(points, o, "opens"));
    if (auto d = topology_defect(n, opens))
        throw KeyedError{ErrorCode::kNotTopology, "opens", describe_defect(*d, "a topology", render)};
    Topology topology(n, opens);

    const auto& id = doc["ideal"];
    std::optional<Ideal> ideal;
    if (id.is_object() && id.contains("max") && id.size() == 1) {
        ideal.emplace(n, names_to_mask(points, id["max"], "ideal"));
    } else if (id.is_object() && id.contains("members") && id.size() == 1) {
        if (!id["members"].is_array())
            throw KeyedError{ErrorCode::kSchema, "ideal", "ideal: members must be a list of sets"};
        std::vector<SubsetMask> members;
        for (const auto& m : id["members"])
            members.push_back(names_to_mask(points, m, "ideal"));
        if (auto d = ideal_defect(n, members))
            throw KeyedError{ErrorCode::kNotIdeal, "ideal", describe_defect(*d, "an ideal", render)};
        ideal = Ideal::from_members(n, members);
    } else {
        throw KeyedError{ErrorCode::kSchema, "ideal", "ideal: expected {\"max\": [...]} or {\"members\": [...]}"};
    }

    const auto& g = doc["gamma"];
    std::optional<GammaOperation> gamma;
    if (g.is_string()) {
        auto preset = parse_preset(g.get<std::string>());
        if (!preset)
            throw KeyedError{ErrorCode::kSchema, "gamma",
                             "gamma: unknown preset \"" + g.get<std::string>() +
                                 "\" (identity, constant_x, closure, int_closure)"};
        gamma = make_preset(topology, *preset);
    } else if (g.is_array()) {
        std::vector<std::optional<SubsetMask>> images(topology.open_count());
        for (const auto& entry : g) {
            if (!entry.is_object() || !entry.contains("open") || !entry.contains("image"))
                throw KeyedError{ErrorCode::kSchema, "gamma", "gamma: entries need \"open\" and \"image\""};
            auto v = names_to_mask(points, entry["open"], "gamma");
            auto img = names_to_mask(points, entry["image"], "gamma");
            int at = topology.index_of(v);
            if (at < 0)
                throw KeyedError{ErrorCode::kSchema, "gamma", "gamma: " + render(v) + " is not an open set"};
            if (images[at])
                throw KeyedError{ErrorCode::kSchema, "gamma", "gamma: " + render(v) + " listed twice"};
            if (!v.subset_of(img))
                throw KeyedError{ErrorCode::kGammaNotExpansive, "gamma",
                                 "gamma not expansive: " + render(v) + " maps to " + render(img)};
            images[at] = img;
        }
        std::vector<SubsetMask> table;
        for (std::size_t i = 0; i < images.size(); ++i) {
            auto v = topology.opens()[i];
            if (!images[i]) {
                // The empty set's image is never consulted; default it.
                if (!v.empty())
                    throw KeyedError{ErrorCode::kGammaIncomplete, "gamma",
                                     "gamma table has no entry for open set " + render(v)};
                images[i] = v;
            }
            table.push_back(*images[i]);
        }
        gamma.emplace(std::move(table));
    } else {
        throw KeyedError{ErrorCode::kSchema, "gamma", "gamma: expected a preset name or a table"};
    }

    return NamedSpace{std::move(points), SpaceContext(std::move(topology), *ideal, std::move(*gamma))};
}

} // namespace

SubsetMask parse_subset(const std::vector<std::string>& points, std::string_view text)
{
    std::string s = trim(text);
    if (!s.empty() && s.front() == '{' && s.back() == '}')
        s = s.substr(1, s.size() - 2);
    SubsetMask out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto token = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos
                                                                                        : comma - start));
        if (!token.empty()) {
            if (auto i = point_index(points, token)) {
                out |= SubsetMask::point(*i);
            } else {
                for (char ch : token) {
                    auto j = point_index(points, std::string(1, ch));
                    if (!j)
                        throw Error(ErrorCode::kUnknownPoint, "unknown point \"" + token + "\"");
                    out |= SubsetMask::point(*j);
                }
            }
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

NamedSpace space_from_json(const json& doc)
{
    try {
        return build_space(doc);
    } catch (const KeyedError& e) {
        throw Error(e.code, e.message);
    }
}

NamedSpace parse_space_spec(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::kSyntax, "line " + std::to_string(line_of(text, e.byte > 0 ? e.byte - 1 : 0)) +
                                            ": malformed JSON: " + e.what());
    }
    try {
        return build_space(doc);
    } catch (const KeyedError& e) {
        throw Error(e.code, "line " + std::to_string(line_of_key(text, e.key)) + ": " + e.message);
    }
}

json space_to_json(const NamedSpace& space)
{
    const auto& ctx = space.context;
    const auto& t = ctx.topology();
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["points"] = space.points;
    json opens = json::array();
    for (auto o : t.opens())
        opens.push_back(subset_to_json(space.points, o));
    doc["opens"] = opens;
    doc["ideal"] = {{"max", subset_to_json(space.points, ctx.ideal().max_member())}};
    json table = json::array();
    for (std::size_t i = 0; i < t.open_count(); ++i)
        table.push_back(
            {{"open", subset_to_json(space.points, t.opens()[i])}, {"image", subset_to_json(space.points, ctx.gamma().image(i))}});
    doc["gamma"] = table;
    return doc;
}

std::string export_space_spec(const NamedSpace& space)
{
    return space_to_json(space).dump(2) + "\n";
}

} // namespace idealtop
