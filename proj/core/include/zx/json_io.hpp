#pragma once

#include "zx/complex_matrix.hpp"
#include "zx/diagram.hpp"
#include "zx/observable.hpp"
#include "zx/simplify.hpp"

#include <string>

namespace zx {

/// {"inputs":[...],"outputs":[...],"vertices":[{"id","kind","phase"}],
///  "edges":[[a,b],...],"scalar":{"zero","pow2","phase","terms"}}
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

/// Array of rows; each entry is a [re, im] pair.
std::string matrix_to_json(const ComplexMatrix& m);

std::string report_to_json(const CheckReport& report);

std::string trace_to_json(const std::vector<TraceStep>& steps);

} // namespace zx
