#include "pbe/emit.hpp"

#include <sstream>

namespace pbe {

namespace {

const char* role_colour(const std::string& role) {
    if (role.starts_with("alpha")) return "gold";
    if (role.starts_with("beta")) return "lightskyblue";
    if (role == "x1") return "palegreen";
    if (role == "x2") return "plum";
    if (role == "y1") return "lightsalmon";
    return "lightgrey";
}

}  // namespace

std::string emit_dot(const Graph& g, const DotOverlay& overlay) {
    // Per vertex, attribute -> value; a run owns the fill, so roles move to
    // the border colour when both are present.
    std::map<vertex, std::map<std::string, std::string>> attrs;
    if (overlay.pattern)
        for (const auto& [role, v] : overlay.pattern->roles) {
            auto& a = attrs[v];
            a["xlabel"] = "\"" + role + "\"";
            if (overlay.run) {
                a["color"] = role_colour(role);
            } else {
                a["style"] = "filled";
                a["fillcolor"] = role_colour(role);
            }
        }
    if (overlay.run) {
        auto mark = [&](const VertexSet& s, const char* shape, const char* fill) {
            for (vertex v : s) {
                auto& a = attrs[v];
                if (shape) a["shape"] = shape;
                a["style"] = "filled";
                a["fillcolor"] = fill;
            }
        };
        mark(overlay.run->H, nullptr, "lightblue");
        mark(overlay.run->S2, "box", "orange");
        mark(overlay.run->S0, "diamond", "pink");
        for (vertex v : overlay.run->H) attrs[v]["penwidth"] = "2";
    }

    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  \"" << g.label(v) << "\"";
        if (auto it = attrs.find(v); it != attrs.end()) {
            const char* sep = " [";
            for (const auto& [key, value] : it->second) {
                out << sep << key << '=' << value;
                sep = ", ";
            }
            out << ']';
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\"";
        if (overlay.run && overlay.run->H.contains(u) && overlay.run->H.contains(v)) out << " [penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_m2_script(const Graph& g) {
    const int n = g.vertex_count();
    std::ostringstream out;
    out << "-- parity binomial edge ideal, " << n << " vertices, " << g.edge_count() << " edges\n";
    out << "-- variable index -> vertex label:";
    for (vertex v = 0; v < n; ++v) out << ' ' << v + 1 << "->" << g.label(v);
    out << "\n";
    out << "needsPackage \"Depth\";\n";
    if (n == 0) {
        out << "R = QQ;\n";
    } else {
        out << "R = QQ[x_1..x_" << n << ", y_1..y_" << n << "];\n";
    }
    out << "I = ideal(";
    const auto edges = g.edges();
    if (edges.empty()) out << "0_R";
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const int i = edges[k].first + 1, j = edges[k].second + 1;
        out << (k ? ",\n    " : "\n    ") << "x_" << i << "*x_" << j << " - y_" << i << "*y_" << j;
    }
    out << ");\n";
    out << "print(\"dim = \" | toString dim(R/I));\n";
    out << "print(\"depth = \" | toString depth(R/I));\n";
    return out.str();
}

}  // namespace pbe
