#include "xtop/dot.hpp"

#include <map>
#include <sstream>

namespace xtop {

namespace {

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + escaped(s) + "\""; }

void write_body(std::ostringstream& os, const FinitePoset& p) {
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (Index x = 0; x < p.size(); ++x) os << "  n" << x << " [label=" << quoted(p.label(x)) << "];\n";
    for (const auto& [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";

    std::map<std::size_t, std::vector<Index>> rows;
    const auto h = heights(p);
    for (Index x = 0; x < p.size(); ++x) rows[h[x]].push_back(x);
    for (const auto& [height, members] : rows) {
        if (members.size() < 2) continue;
        os << "  { rank=same;";
        for (Index x : members) os << " n" << x << ";";
        os << " }\n";
    }
}

}  // namespace

std::string hasse_dot(const FinitePoset& p, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << quoted(graph_name) << " {\n";
    write_body(os, p);
    os << "}\n";
    return os.str();
}

std::string space_dot(const XTopSpace& s, bool closed_sets) {
    const FinitePoset p = s.specialization_poset();
    std::ostringstream os;
    os << "digraph \"space\" {\n";
    write_body(os, p);
    if (closed_sets) {
        std::string legend = "closed sets\\l";
        for (const auto& c : s.closed_family()) {
            std::string row = "{";
            bool first = true;
            c.for_each([&](Index x) {
                if (!first) row += ",";
                row += escaped(s.label(x));
                first = false;
            });
            legend += row + "}\\l";
        }
        os << "  legend [shape=note, fontsize=9, label=\"" << legend << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace xtop
