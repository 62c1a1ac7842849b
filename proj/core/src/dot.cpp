#include "zx/dot.hpp"

#include <algorithm>
#include <sstream>

namespace zx {

std::string render_dot(const Diagram& d) {
    std::ostringstream out;
    out << "graph zx {\n";
    out << "  rankdir=TB;\n";
    for (const auto& [id, v]: d.vertices()) {
        out << "  v" << id << " [";
        switch (v.kind) {
            case VertexKind::Z:
                out << "shape=ellipse style=filled fillcolor=\"#8bc34a\" label=\""
                    << (v.phase.is_zero() ? "" : v.phase.str()) << "\"";
                break;
            case VertexKind::X:
                out << "shape=ellipse style=filled fillcolor=\"#ef5350\" label=\""
                    << (v.phase.is_zero() ? "" : v.phase.str()) << "\"";
                break;
            case VertexKind::H:
                out << "shape=square style=filled fillcolor=\"#fdd835\" label=\"H\" "
                       "width=0.25 fixedsize=true";
                break;
            case VertexKind::Boundary: {
                bool is_in =
                    std::find(d.inputs().begin(), d.inputs().end(), id) != d.inputs().end();
                out << "shape=point label=\"\" xlabel=\"" << (is_in ? "in" : "out") << "\"";
                break;
            }
        }
        out << "];\n";
    }
    for (const auto& [e, mult]: d.edges()) {
        for (int m = 0; m < mult; ++m) {
            out << "  v" << e.first << " -- v" << e.second << ";\n";
        }
    }
    out << "  // scalar: " << d.scalar().str() << "\n";
    out << "}\n";
    return out.str();
}

} // namespace zx
