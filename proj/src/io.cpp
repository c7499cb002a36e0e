#include "pbe/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pbe/error.hpp"

namespace pbe {

namespace {

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        out.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

std::vector<std::string_view> tokens(std::string_view line, std::string_view separators = " \t\r,") {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && separators.find(line[i]) != std::string_view::npos) ++i;
        std::size_t j = i;
        while (j < line.size() && separators.find(line[j]) == std::string_view::npos) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Label parse_label(std::string_view token, std::size_t line_no) {
    Label value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw input_error("line " + std::to_string(line_no) + ": '" + std::string(token) +
                          "' is not a non-negative integer label");
    return value;
}

vertex known_vertex(const Graph& g, Label l, std::size_t line_no) {
    auto v = g.vertex_of(l);
    if (!v) throw input_error("line " + std::to_string(line_no) + ": unknown vertex " + std::to_string(l));
    return *v;
}

GraphDocument parse_edge_list(std::string_view text) {
    std::set<Label> labels;
    std::set<std::pair<Label, Label>> seen;
    std::vector<LabeledEdge> edges;
    std::size_t line_no = 0;
    for (std::string_view raw : lines_of(text)) {
        ++line_no;
        auto tok = tokens(strip_comment(raw), " \t\r");
        if (tok.empty()) continue;
        if (tok.size() > 2)
            throw input_error("line " + std::to_string(line_no) + ": expected 'u v', got " + std::to_string(tok.size()) +
                              " fields");
        Label u = parse_label(tok[0], line_no);
        labels.insert(u);
        if (tok.size() == 1) continue;
        Label v = parse_label(tok[1], line_no);
        if (u == v) throw input_error("line " + std::to_string(line_no) + ": self-loop on " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw input_error("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v));
        labels.insert(v);
        edges.emplace_back(u, v);
    }
    return {GraphFormat::edge_list, Graph::from_labels({labels.begin(), labels.end()}, edges)};
}

GraphDocument parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    auto as_label = [](const nlohmann::json& j, const std::string& where) {
        if (!j.is_number_integer() || j.get<Label>() < 0)
            throw input_error(where + ": expected a non-negative integer label, got " + j.dump());
        return j.get<Label>();
    };
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw input_error("JSON graph needs an object with an \"edges\" array");
    std::set<Label> labels;
    const bool declared = doc.contains("vertices");
    if (declared) {
        if (!doc["vertices"].is_array()) throw input_error("\"vertices\" must be an array");
        for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
            if (!labels.insert(as_label(doc["vertices"][i], "vertices[" + std::to_string(i) + "]")).second)
                throw input_error("vertices[" + std::to_string(i) + "]: duplicate label");
    }
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& e = doc["edges"][i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) throw input_error(where + ": expected [u, v]");
        Label u = as_label(e[0], where), v = as_label(e[1], where);
        if (declared && (!labels.contains(u) || !labels.contains(v)))
            throw input_error(where + ": endpoint not listed in \"vertices\"");
        labels.insert(u);
        labels.insert(v);
        edges.emplace_back(u, v);
    }
    return {GraphFormat::json, Graph::from_labels({labels.begin(), labels.end()}, edges)};
}

}  // namespace

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "edgelist" || name == "edge-list" || name == "txt") return GraphFormat::edge_list;
    if (name == "json") return GraphFormat::json;
    return std::nullopt;
}

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::json ? parse_json(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    const auto edges = g.edges();
    if (format == GraphFormat::edge_list) {
        out << "# " << g.vertex_count() << " vertices, " << edges.size() << " edges\n";
        for (auto [u, v] : edges) out << g.label(u) << ' ' << g.label(v) << '\n';
        for (vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) out << g.label(v) << '\n';
        return out.str();
    }
    out << "{\n  \"vertices\": [";
    for (vertex v = 0; v < g.vertex_count(); ++v) out << (v ? ", " : "") << g.label(v);
    out << "],\n  \"edges\": [";
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? ", " : "") << '[' << g.label(edges[i].first) << ", " << g.label(edges[i].second) << ']';
    out << "]\n}\n";
    return out.str();
}

std::vector<VertexSet> parse_clique_order(std::string_view text, const Graph& g) {
    std::vector<VertexSet> out;
    std::size_t line_no = 0;
    for (std::string_view raw : lines_of(text)) {
        ++line_no;
        auto tok = tokens(strip_comment(raw));
        if (tok.empty()) continue;
        VertexSet clique;
        for (auto t : tok) clique.insert(known_vertex(g, parse_label(t, line_no), line_no));
        out.push_back(std::move(clique));
    }
    return out;
}

std::vector<ScriptEntry> parse_script(std::string_view text, const Graph& g) {
    std::vector<ScriptEntry> out;
    std::size_t line_no = 0;
    for (std::string_view raw : lines_of(text)) {
        ++line_no;
        std::string_view line = strip_comment(raw);
        std::string_view left = line, right;
        if (auto colon = line.find(':'); colon != std::string_view::npos) {
            left = line.substr(0, colon);
            right = line.substr(colon + 1);
        }
        auto idx = tokens(left);
        auto xs = tokens(right);
        if (idx.empty() && xs.empty()) continue;
        if (idx.empty()) throw input_error("line " + std::to_string(line_no) + ": missing clique indices");
        if (xs.size() > 1) throw input_error("line " + std::to_string(line_no) + ": at most one vertex per choice");
        ScriptEntry e;
        for (auto t : idx) {
            Label i = parse_label(t, line_no);
            if (i < 1) throw input_error("line " + std::to_string(line_no) + ": clique indices start at 1");
            e.L.insert(static_cast<int>(i - 1));
        }
        if (!xs.empty()) e.x = known_vertex(g, parse_label(xs[0], line_no), line_no);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace pbe
