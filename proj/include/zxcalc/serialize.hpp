// Copyright 2026 The zxcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "zxcalc/diagram.hpp"
#include "zxcalc/doubling.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace zxcalc {

// Diagram files are JSON documents. Canonical form: top-level keys in
// alphabetical order (edges, inputs, outputs, scalar, vertices, wire-kinds),
// vertex ids ascending, edge endpoints normalized and the edge list sorted,
// phases as lowest-term "p/q" strings in units of pi. Phases never appear
// as floats.

namespace serial_detail {

using Json = nlohmann::ordered_json;

inline void syntax_error_at(const std::string& text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ZXError("syntax-error",
                  "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error_at(text, e.byte, e.what());
        return {};
    }
}

inline Json diagram_to_json(const Diagram& d) {
    Json j;
    Json edges = Json::array();
    for (const Edge& e : d.edges())
        edges.push_back({e.a, e.b});
    j["edges"] = std::move(edges);
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    j["scalar"] = {d.scalar().real(), d.scalar().imag()};
    Json vertices = Json::object();
    for (const auto& [id, data] : d.vertices()) {
        Json v;
        v["kind"] = kind_name(data.kind);
        if (is_spider(data.kind))
            v["phase"] = data.phase.str();
        vertices[std::to_string(id)] = std::move(v);
    }
    j["vertices"] = std::move(vertices);
    return j;
}

inline Diagram diagram_from_json(const Json& j) {
    if (!j.is_object())
        throw ZXError("syntax-error", "top level must be an object");
    for (const char* key : {"vertices", "edges", "inputs", "outputs"})
        if (!j.contains(key))
            throw ZXError("syntax-error", std::string("missing key '") + key + "'");

    Diagram d;
    if (!j["vertices"].is_object())
        throw ZXError("syntax-error", "'vertices' must be an object");
    for (const auto& [key, value] : j["vertices"].items()) {
        VertexId id = 0;
        try {
            std::size_t pos = 0;
            const unsigned long parsed = std::stoul(key, &pos);
            if (pos != key.size())
                throw std::invalid_argument(key);
            id = static_cast<VertexId>(parsed);
        } catch (const std::exception&) {
            throw ZXError("syntax-error", "vertex id '" + key + "' is not an unsigned integer");
        }
        const std::string kind_text = value.value("kind", "");
        VertexKind kind;
        if (kind_text == "Z")
            kind = VertexKind::Z;
        else if (kind_text == "X")
            kind = VertexKind::X;
        else if (kind_text == "H")
            kind = VertexKind::HBox;
        else if (kind_text == "B")
            kind = VertexKind::Boundary;
        else
            throw ZXError("syntax-error", "vertex " + key + " has unknown kind '" + kind_text + "'");
        Phase phase;
        if (value.contains("phase")) {
            if (!value["phase"].is_string())
                throw ZXError("syntax-error", "vertex " + key + " phase must be a \"p/q\" string");
            phase = Phase::parse(value["phase"].get<std::string>());
            if (!is_spider(kind) && !phase.is_zero())
                throw ZXError("validation-error",
                              "vertex " + key + ": only spiders carry phases");
        }
        d.add_vertex_with_id(id, kind, phase);
    }
    if (!j["edges"].is_array())
        throw ZXError("syntax-error", "'edges' must be an array of [a, b] pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ZXError("syntax-error", "'edges' entries must be [a, b] pairs");
        d.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    for (const auto& v : j["inputs"])
        d.mark_input(v.get<VertexId>());
    for (const auto& v : j["outputs"])
        d.mark_output(v.get<VertexId>());
    if (j.contains("scalar")) {
        const auto& s = j["scalar"];
        if (!s.is_array() || s.size() != 2)
            throw ZXError("syntax-error", "'scalar' must be [re, im]");
        d.set_scalar(Scalar(s[0].get<double>(), s[1].get<double>()));
    }
    if (const auto reason = d.invalid_reason())
        throw ZXError("validation-error", *reason);
    return d;
}

inline const char* wire_kind_name(WireKind k) { return k == WireKind::Quantum ? "q" : "c"; }

inline WireKind wire_kind_from(const std::string& s) {
    if (s == "q")
        return WireKind::Quantum;
    if (s == "c")
        return WireKind::Classical;
    throw ZXError("syntax-error", "wire kind must be \"q\" or \"c\", got '" + s + "'");
}

} // namespace serial_detail

inline std::string serialize_diagram(const Diagram& d) {
    d.check_valid();
    return serial_detail::diagram_to_json(d).dump(2) + "\n";
}

inline Diagram parse_diagram(const std::string& text) {
    return serial_detail::diagram_from_json(serial_detail::parse_json(text));
}

inline std::string serialize_doubled(const DoubledDiagram& dd) {
    dd.check_consistent();
    auto j = serial_detail::diagram_to_json(dd.underlying);
    serial_detail::Json kinds;
    serial_detail::Json ins = serial_detail::Json::array();
    for (WireKind k : dd.input_kinds)
        ins.push_back(serial_detail::wire_kind_name(k));
    serial_detail::Json outs = serial_detail::Json::array();
    for (WireKind k : dd.output_kinds)
        outs.push_back(serial_detail::wire_kind_name(k));
    kinds["inputs"] = std::move(ins);
    kinds["outputs"] = std::move(outs);
    j["wire-kinds"] = std::move(kinds);
    return j.dump(2) + "\n";
}

inline DoubledDiagram parse_doubled(const std::string& text) {
    const auto j = serial_detail::parse_json(text);
    DoubledDiagram dd;
    dd.underlying = serial_detail::diagram_from_json(j);
    if (j.contains("wire-kinds")) {
        const auto& kinds = j["wire-kinds"];
        for (const auto& k : kinds.value("inputs", serial_detail::Json::array()))
            dd.input_kinds.push_back(serial_detail::wire_kind_from(k.get<std::string>()));
        for (const auto& k : kinds.value("outputs", serial_detail::Json::array()))
            dd.output_kinds.push_back(serial_detail::wire_kind_from(k.get<std::string>()));
    } else {
        // Without an annotation every wire is classical-width (single).
        dd.input_kinds.assign(dd.underlying.inputs().size(), WireKind::Classical);
        dd.output_kinds.assign(dd.underlying.outputs().size(), WireKind::Classical);
    }
    dd.check_consistent();
    return dd;
}

/// Deterministic DOT rendering: Z spiders green circles, X red circles,
/// H-boxes yellow squares, boundaries labelled points. Byte-stable.
inline std::string render_dot(const Diagram& d) {
    d.check_valid();
    std::ostringstream out;
    out << "graph zx {\n";
    out << "  rankdir=BT;\n";
    std::map<VertexId, std::string> boundary_role;
    for (std::size_t i = 0; i < d.inputs().size(); ++i)
        boundary_role[d.inputs()[i]] = "in" + std::to_string(i);
    for (std::size_t i = 0; i < d.outputs().size(); ++i)
        boundary_role[d.outputs()[i]] = "out" + std::to_string(i);
    for (const auto& [id, data] : d.vertices()) {
        out << "  v" << id << " [";
        switch (data.kind) {
        case VertexKind::Z:
        case VertexKind::X: {
            std::string label;
            if (!data.phase.is_zero())
                label = data.phase.str() + " \xcf\x80"; // "p/q pi"
            out << "shape=circle, style=filled, fillcolor=\""
                << (data.kind == VertexKind::Z ? "#ccffcc" : "#ffb3b3") << "\", label=\"" << label
                << "\"";
            break;
        }
        case VertexKind::HBox:
            out << "shape=square, style=filled, fillcolor=\"#ffffcc\", label=\"H\"";
            break;
        case VertexKind::Boundary:
            out << "shape=none, label=\"" << boundary_role[id] << "\"";
            break;
        }
        out << "];\n";
    }
    for (const Edge& e : d.edges())
        out << "  v" << e.a << " -- v" << e.b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace zxcalc
