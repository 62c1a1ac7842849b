#pragma once

#include "zx/diagram.hpp"

#include <string>

namespace zx {

/// Graphviz rendering: Z spiders green ellipses, X spiders red ellipses,
/// H boxes yellow squares, boundaries plain points. Vertex order is the
/// ascending id order, so output is deterministic.
std::string render_dot(const Diagram& d);

} // namespace zx
