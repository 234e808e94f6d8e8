#include "bnmodes/export.hpp"

#include "json.hpp"
#include <sstream>

namespace bnmodes {

std::string export_dot(const TransitionGraph& g, const ExportOptions& options) {
    const unsigned n = g.dimension();
    std::ostringstream out;
    out << "digraph \"" << g.mode.to_string() << "\" {\n";
    for (Code x = 0; x < g.edges.vertex_count(); ++x) {
        out << "  \"" << to_text(x, n) << "\";\n";
    }
    for (const auto& [x, y] : g.edges.edges()) {
        if (options.no_loops && x == y) continue;
        out << "  \"" << to_text(x, n) << "\" -> \"" << to_text(y, n) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const TransitionGraph& g, const std::vector<std::string>& automata,
                        const ExportOptions& options) {
    const unsigned n = g.dimension();
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["automata"] = automata;
    doc["mode"] = g.mode.to_string();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [x, y] : g.edges.edges()) {
        if (options.no_loops && x == y) continue;
        edges.push_back({to_text(x, n), to_text(y, n)});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace bnmodes
