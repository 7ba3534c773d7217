#include "costgcc/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace costgcc {

using ojson = nlohmann::ordered_json;

int NamedInstance::variable_index(std::string_view name) const {
    for (size_t i = 0; i < variable_names.size(); ++i)
        if (variable_names[i] == name) return static_cast<int>(i);
    return -1;
}

int NamedInstance::value_index(std::string_view name) const {
    for (size_t i = 0; i < value_names.size(); ++i)
        if (value_names[i] == name) return static_cast<int>(i);
    return -1;
}

ParseError::ParseError(std::string origin_in, int line_in, const std::string& reason)
    : std::runtime_error(origin_in + (line_in > 0 ? ":" + std::to_string(line_in) : "") + ": " +
                         reason),
      origin(std::move(origin_in)),
      line(line_in) {}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& reason) {
    throw ParseError(origin, line, reason);
}

int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::vector<std::string> read_name_array(const ojson& doc, const char* field,
                                         const std::string& origin) {
    if (!doc.contains(field) || !doc[field].is_array())
        parse_fail(origin, 0, std::string("missing or non-array field '") + field + "'");
    std::vector<std::string> names;
    for (const auto& entry : doc[field]) {
        if (!entry.is_string())
            parse_fail(origin, 0, std::string(field) + " entries must be strings");
        names.push_back(entry.get<std::string>());
    }
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                parse_fail(origin, 0, std::string(field) + ": duplicate name '" + names[i] + "'");
    return names;
}

Cost read_int(const ojson& node, const std::string& origin, const std::string& what) {
    if (!node.is_number_integer())
        parse_fail(origin, 0, what + " must be an integer");
    return node.get<Cost>();
}

}  // namespace

NamedInstance parse_instance_json(const std::string& text, const std::string& origin) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(origin, line_of_byte(text, e.byte), e.what());
    }
    if (!doc.is_object()) parse_fail(origin, 0, "top-level document must be an object");

    NamedInstance named;
    named.variable_names = read_name_array(doc, "variables", origin);
    named.value_names = read_name_array(doc, "values", origin);

    std::unordered_map<std::string, int> value_of;
    for (size_t i = 0; i < named.value_names.size(); ++i)
        value_of[named.value_names[i]] = static_cast<int>(i);

    CostGccInstance& core = named.core;
    core.n_variables = static_cast<int>(named.variable_names.size());
    core.n_values = static_cast<int>(named.value_names.size());
    core.lower.assign(static_cast<size_t>(core.n_values), 0);
    core.upper.assign(static_cast<size_t>(core.n_values), 0);
    core.domains.resize(static_cast<size_t>(core.n_variables));
    core.domain_costs.resize(static_cast<size_t>(core.n_variables));

    if (!doc.contains("bounds") || !doc["bounds"].is_object())
        parse_fail(origin, 0, "missing or non-object field 'bounds'");
    for (const auto& [name, window] : doc["bounds"].items()) {
        const auto it = value_of.find(name);
        if (it == value_of.end()) parse_fail(origin, 0, "bounds: unknown value '" + name + "'");
        if (!window.is_array() || window.size() != 2)
            parse_fail(origin, 0, "bounds." + name + " must be [lower, upper]");
        core.lower[static_cast<size_t>(it->second)] =
            static_cast<int>(read_int(window[0], origin, "bounds." + name + "[0]"));
        core.upper[static_cast<size_t>(it->second)] =
            static_cast<int>(read_int(window[1], origin, "bounds." + name + "[1]"));
    }
    if (doc["bounds"].size() != static_cast<size_t>(core.n_values))
        parse_fail(origin, 0, "bounds must list every value exactly once");

    if (!doc.contains("domains") || !doc["domains"].is_object())
        parse_fail(origin, 0, "missing or non-object field 'domains'");
    std::unordered_map<std::string, int> variable_of;
    for (size_t i = 0; i < named.variable_names.size(); ++i)
        variable_of[named.variable_names[i]] = static_cast<int>(i);
    for (const auto& [name, entries] : doc["domains"].items()) {
        const auto it = variable_of.find(name);
        if (it == variable_of.end())
            parse_fail(origin, 0, "domains: unknown variable '" + name + "'");
        if (!entries.is_array())
            parse_fail(origin, 0, "domains." + name + " must be an array");
        std::vector<std::pair<int, Cost>> members;
        for (const auto& entry : entries) {
            if (!entry.is_object() || !entry.contains("value") || !entry.contains("cost"))
                parse_fail(origin, 0, "domains." + name + " entries need 'value' and 'cost'");
            if (!entry["value"].is_string())
                parse_fail(origin, 0, "domains." + name + ": 'value' must be a value name");
            const std::string value_name = entry["value"].get<std::string>();
            const auto vit = value_of.find(value_name);
            if (vit == value_of.end())
                parse_fail(origin, 0, "domains." + name + ": unknown value '" + value_name + "'");
            members.push_back(
                {vit->second, read_int(entry["cost"], origin, "domains." + name + ".cost")});
        }
        std::sort(members.begin(), members.end());
        for (size_t i = 1; i < members.size(); ++i)
            if (members[i].first == members[i - 1].first)
                parse_fail(origin, 0, "domains." + name + ": duplicate value '" +
                                          named.value_names[static_cast<size_t>(members[i].first)] +
                                          "'");
        auto& dom = core.domains[static_cast<size_t>(it->second)];
        auto& costs = core.domain_costs[static_cast<size_t>(it->second)];
        for (const auto& [value, cost] : members) {
            dom.push_back(value);
            costs.push_back(cost);
        }
    }
    if (doc["domains"].size() != static_cast<size_t>(core.n_variables))
        parse_fail(origin, 0, "domains must list every variable exactly once");

    if (!doc.contains("H")) parse_fail(origin, 0, "missing field 'H'");
    core.cost_cap = read_int(doc["H"], origin, "H");

    validate(core);
    return named;
}

std::string encode_instance_json(const NamedInstance& named) {
    const CostGccInstance& core = named.core;
    ojson doc;
    doc["variables"] = named.variable_names;
    doc["values"] = named.value_names;

    ojson bounds = ojson::object();
    for (int a = 0; a < core.n_values; ++a)
        bounds[named.value_names[static_cast<size_t>(a)]] = {core.lower[static_cast<size_t>(a)],
                                                             core.upper[static_cast<size_t>(a)]};
    doc["bounds"] = std::move(bounds);

    ojson domains = ojson::object();
    for (int x = 0; x < core.n_variables; ++x) {
        ojson entries = ojson::array();
        const auto& dom = core.domains[static_cast<size_t>(x)];
        const auto& costs = core.domain_costs[static_cast<size_t>(x)];
        for (size_t s = 0; s < dom.size(); ++s) {
            ojson entry;
            entry["value"] = named.value_names[static_cast<size_t>(dom[s])];
            entry["cost"] = costs[s];
            entries.push_back(std::move(entry));
        }
        domains[named.variable_names[static_cast<size_t>(x)]] = std::move(entries);
    }
    doc["domains"] = std::move(domains);
    doc["H"] = core.cost_cap;
    return doc.dump(2) + "\n";
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// TSPLIB distances round to the nearest integer.
Cost nint(double v) { return static_cast<Cost>(std::llround(v)); }

}  // namespace

NamedInstance load_tsp(const std::filesystem::path& path, Cost cost_cap) {
    const std::string text = read_file(path);
    const std::string origin = path.string();

    int dimension = -1;
    std::string weight_type;
    std::string weight_format;
    std::vector<std::pair<double, double>> coords;
    std::vector<Cost> weights;

    std::istringstream in(text);
    std::string line;
    enum class Section { Header, Coords, Weights } section = Section::Header;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty()) continue;
        if (trimmed == "EOF") break;

        if (section == Section::Header) {
            const size_t colon = trimmed.find(':');
            std::string key = colon == std::string::npos ? trimmed : trimmed.substr(0, colon);
            std::string value = colon == std::string::npos ? "" : trimmed.substr(colon + 1);
            key.erase(key.find_last_not_of(" \t") + 1);
            value.erase(0, value.find_first_not_of(" \t"));
            if (key == "DIMENSION") {
                dimension = std::stoi(value);
            } else if (key == "EDGE_WEIGHT_TYPE") {
                weight_type = value;
            } else if (key == "EDGE_WEIGHT_FORMAT") {
                weight_format = value;
            } else if (key == "NODE_COORD_SECTION") {
                section = Section::Coords;
            } else if (key == "EDGE_WEIGHT_SECTION") {
                section = Section::Weights;
            }
            // NAME, COMMENT, TYPE and anything else are ignored.
            continue;
        }
        std::istringstream fields(trimmed);
        if (section == Section::Coords) {
            int id;
            double x, y;
            if (!(fields >> id >> x >> y))
                parse_fail(origin, line_no, "malformed coordinate line");
            coords.push_back({x, y});
        } else {
            Cost w;
            while (fields >> w) weights.push_back(w);
        }
    }

    if (dimension <= 1) parse_fail(origin, 0, "DIMENSION must be at least 2");
    const size_t n = static_cast<size_t>(dimension);
    std::vector<std::vector<Cost>> dist(n, std::vector<Cost>(n, 0));

    if (weight_type == "EUC_2D") {
        if (coords.size() != n)
            parse_fail(origin, 0, "NODE_COORD_SECTION does not match DIMENSION");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const double dx = coords[i].first - coords[j].first;
                const double dy = coords[i].second - coords[j].second;
                dist[i][j] = nint(std::sqrt(dx * dx + dy * dy));
            }
    } else if (weight_type == "EXPLICIT") {
        size_t k = 0;
        auto next = [&]() {
            if (k >= weights.size())
                parse_fail(origin, 0, "EDGE_WEIGHT_SECTION is shorter than the format requires");
            return weights[k++];
        };
        if (weight_format == "FULL_MATRIX") {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) dist[i][j] = next();
        } else if (weight_format == "UPPER_ROW") {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = next();
        } else if (weight_format == "LOWER_ROW") {
            for (size_t i = 1; i < n; ++i)
                for (size_t j = 0; j < i; ++j) dist[i][j] = dist[j][i] = next();
        } else if (weight_format == "UPPER_DIAG_ROW") {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) dist[i][j] = dist[j][i] = next();
        } else if (weight_format == "LOWER_DIAG_ROW") {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j <= i; ++j) dist[i][j] = dist[j][i] = next();
        } else {
            parse_fail(origin, 0, "unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "'");
        }
    } else {
        parse_fail(origin, 0, "unsupported EDGE_WEIGHT_TYPE '" + weight_type + "'");
    }

    // Assignment view: every city picks a successor city, each city used once.
    NamedInstance named;
    for (size_t i = 0; i < n; ++i) named.variable_names.push_back(std::to_string(i + 1));
    named.value_names = named.variable_names;
    CostGccInstance& core = named.core;
    core.n_variables = dimension;
    core.n_values = dimension;
    core.lower.assign(n, 1);
    core.upper.assign(n, 1);
    core.domains.resize(n);
    core.domain_costs.resize(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            core.domains[i].push_back(static_cast<int>(j));
            core.domain_costs[i].push_back(dist[i][j]);
        }
    core.cost_cap = cost_cap;

    validate(core);
    return named;
}

NamedInstance load_instance(const std::filesystem::path& path, std::optional<Cost> tsp_cost_cap) {
    if (path.extension() == ".tsp") {
        if (!tsp_cost_cap)
            throw ParseError(path.string(), 0,
                             "TSP instances carry no cost cap; pass one explicitly (--h)");
        return load_tsp(path, *tsp_cost_cap);
    }
    return parse_instance_json(read_file(path), path.string());
}

void save_instance(const NamedInstance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path.string(), 0, "cannot open file for writing");
    out << encode_instance_json(instance);
}

}  // namespace costgcc
