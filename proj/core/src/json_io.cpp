#include "zx/json_io.hpp"

#include "zx/error.hpp"

#include <json.hpp>

#include <map>

namespace zx {

namespace {

using nlohmann::json;

json scalar_to_json_obj(const Scalar& s) {
    json terms = json::array();
    for (const Phase& t: s.one_plus_terms()) {
        terms.push_back(t.str());
    }
    return json{{"zero", s.is_zero()},
                {"pow2", s.sqrt2_power()},
                {"phase", s.phase().str()},
                {"terms", terms}};
}

Scalar scalar_from_json_obj(const json& j) {
    if (j.value("zero", false)) {
        return Scalar::zero();
    }
    Scalar s = Scalar::sqrt2_pow(j.value("pow2", std::int64_t{0}));
    s *= Scalar::from_phase(Phase::parse(j.value("phase", std::string("0"))));
    if (j.contains("terms")) {
        for (const auto& t: j.at("terms")) {
            s *= Scalar::one_plus_exp(Phase::parse(t.get<std::string>()));
        }
    }
    return s;
}

std::string kind_code(VertexKind k) {
    switch (k) {
        case VertexKind::Z: return "Z";
        case VertexKind::X: return "X";
        case VertexKind::H: return "H";
        case VertexKind::Boundary: return "B";
    }
    return "?";
}

VertexKind kind_from_code(const std::string& s) {
    if (s == "Z") {
        return VertexKind::Z;
    }
    if (s == "X") {
        return VertexKind::X;
    }
    if (s == "H") {
        return VertexKind::H;
    }
    if (s == "B") {
        return VertexKind::Boundary;
    }
    throw ZXError("unknown vertex kind '" + s + "'");
}

} // namespace

std::string diagram_to_json(const Diagram& d) {
    json j;
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    json verts = json::array();
    for (const auto& [id, v]: d.vertices()) {
        verts.push_back(json{{"id", id},
                             {"kind", kind_code(v.kind)},
                             {"phase", is_spider(v.kind) ? v.phase.str() : "0"}});
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (const auto& [e, mult]: d.edges()) {
        for (int m = 0; m < mult; ++m) {
            edges.push_back(json::array({e.first, e.second}));
        }
    }
    j["edges"] = edges;
    j["scalar"] = scalar_to_json_obj(d.scalar());
    return j.dump(2);
}

Diagram diagram_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ZXError(std::string("bad diagram JSON: ") + e.what());
    }
    Diagram d;
    // map external ids to fresh internal ones, keeping relative order
    std::map<VertexId, VertexId> id_map;
    for (const auto& jv: j.at("vertices")) {
        VertexId ext = jv.at("id").get<VertexId>();
        VertexKind kind = kind_from_code(jv.at("kind").get<std::string>());
        Phase phase;
        if (jv.contains("phase")) {
            phase = Phase::parse(jv.at("phase").get<std::string>());
        }
        if (id_map.count(ext) != 0) {
            throw ZXError("duplicate vertex id in JSON");
        }
        id_map[ext] = d.add_vertex(kind, phase);
    }
    auto translate = [&](VertexId ext) {
        auto it = id_map.find(ext);
        if (it == id_map.end()) {
            throw ZXError("edge references unknown vertex " + std::to_string(ext));
        }
        return it->second;
    };
    for (const auto& je: j.at("edges")) {
        d.add_edge(translate(je.at(0).get<VertexId>()), translate(je.at(1).get<VertexId>()));
    }
    for (const auto& ji: j.at("inputs")) {
        d.mutable_inputs().push_back(translate(ji.get<VertexId>()));
    }
    for (const auto& jo: j.at("outputs")) {
        d.mutable_outputs().push_back(translate(jo.get<VertexId>()));
    }
    if (j.contains("scalar")) {
        d.mutable_scalar() = scalar_from_json_obj(j.at("scalar"));
    }
    return d;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(json::array({m.at(r, c).real(), m.at(r, c).imag()}));
        }
        rows.push_back(row);
    }
    return rows.dump();
}

std::string report_to_json(const CheckReport& report) {
    json witnesses = json::object();
    for (const auto& [name, value]: report.witnesses) {
        witnesses[name] = value;
    }
    json j{{"check", report.check},
           {"dim", report.dim},
           {"residual", report.residual},
           {"pass", report.pass},
           {"witnesses", witnesses}};
    return j.dump();
}

std::string trace_to_json(const std::vector<TraceStep>& steps) {
    json arr = json::array();
    for (const auto& s: steps) {
        arr.push_back(json{{"rule", s.rule},
                           {"match-bindings", s.bindings},
                           {"scalar-delta", scalar_to_json_obj(s.scalar_delta)}});
    }
    return arr.dump(2);
}

} // namespace zx
