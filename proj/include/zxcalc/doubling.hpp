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

#include <string>
#include <vector>

namespace zxcalc {

/// Wire annotation for doubled diagrams: a quantum wire occupies two
/// adjacent underlying boundaries (ket leg then bra leg); a classical wire
/// occupies one.
enum class WireKind { Classical, Quantum };

inline std::size_t underlying_width(const std::vector<WireKind>& kinds) {
    std::size_t n = 0;
    for (WireKind k : kinds)
        n += k == WireKind::Quantum ? 2 : 1;
    return n;
}

/// A plain diagram together with the classical/quantum split of its
/// boundaries. The underlying graph is an ordinary diagram, so every rewrite
/// rule and the tensor oracle apply unchanged.
struct DoubledDiagram {
    Diagram underlying;
    std::vector<WireKind> input_kinds;
    std::vector<WireKind> output_kinds;

    void check_consistent() const {
        underlying.check_valid();
        if (underlying_width(input_kinds) != underlying.inputs().size() ||
            underlying_width(output_kinds) != underlying.outputs().size())
            throw ZXError("invalid-diagram",
                          "wire-kind annotation does not cover the boundary lists");
    }
};

/// Doubles a pure diagram: the original next to its phase-negated copy,
/// boundaries interleaved into adjacent (ket, bra) pairs, scalar replaced by
/// its squared magnitude. All wires become quantum.
inline DoubledDiagram double_diagram(const Diagram& d) {
    d.check_valid();
    DoubledDiagram out;
    Diagram& u = out.underlying;

    std::map<VertexId, VertexId> ket, bra;
    for (const auto& [id, data] : d.vertices())
        ket[id] = u.add_vertex_with_id(u.next_id(), data.kind,
                                       is_spider(data.kind) ? data.phase : Phase());
    for (const auto& [id, data] : d.vertices())
        bra[id] = u.add_vertex_with_id(u.next_id(), data.kind,
                                       is_spider(data.kind) ? -data.phase : Phase());
    for (const Edge& e : d.edges()) {
        u.add_edge(ket.at(e.a), ket.at(e.b));
        u.add_edge(bra.at(e.a), bra.at(e.b));
    }
    std::vector<VertexId> ins, outs;
    for (VertexId v : d.inputs()) {
        ins.push_back(ket.at(v));
        ins.push_back(bra.at(v));
        out.input_kinds.push_back(WireKind::Quantum);
    }
    for (VertexId v : d.outputs()) {
        outs.push_back(ket.at(v));
        outs.push_back(bra.at(v));
        out.output_kinds.push_back(WireKind::Quantum);
    }
    u.set_inputs(std::move(ins));
    u.set_outputs(std::move(outs));
    u.set_scalar(d.scalar() * std::conj(d.scalar()));
    return out;
}

namespace doubling_detail {

/// Three-legged measurement/encode spider. `quantum_side_inputs` selects the
/// direction: measurement consumes a quantum pair, encoding produces one.
inline DoubledDiagram interface_spider(VertexKind colour, bool quantum_side_inputs) {
    DoubledDiagram out;
    Diagram& u = out.underlying;
    const VertexId s = u.add_vertex(colour, Phase(0));
    if (quantum_side_inputs) {
        const VertexId qk = u.add_boundary_input();
        const VertexId qb = u.add_boundary_input();
        const VertexId c = u.add_boundary_output();
        u.add_edge(qk, s);
        u.add_edge(qb, s);
        u.add_edge(s, c);
        out.input_kinds = {WireKind::Quantum};
        out.output_kinds = {WireKind::Classical};
    } else {
        const VertexId c = u.add_boundary_input();
        const VertexId qk = u.add_boundary_output();
        const VertexId qb = u.add_boundary_output();
        u.add_edge(c, s);
        u.add_edge(s, qk);
        u.add_edge(s, qb);
        out.input_kinds = {WireKind::Classical};
        out.output_kinds = {WireKind::Quantum};
    }
    return out;
}

} // namespace doubling_detail

/// Measurement: one quantum input pair joined to one classical output by a
/// single 3-leg spider of the given colour. Takes a density matrix to (a
/// positive multiple of) the outcome distribution in that colour's basis.
inline DoubledDiagram measure_spider(VertexKind colour) {
    if (!is_spider(colour))
        throw ZXError("invalid-kind", "measurement spiders are Z or X");
    return doubling_detail::interface_spider(colour, true);
}

/// Encoding: the mirror image of measure_spider; takes a distribution to the
/// density matrix with that distribution on the diagonal of the chosen basis.
inline DoubledDiagram encode_spider(VertexKind colour) {
    if (!is_spider(colour))
        throw ZXError("invalid-kind", "encode spiders are Z or X");
    return doubling_detail::interface_spider(colour, false);
}

/// Non-demolition measurement: one 5-leg spider joining a quantum input
/// pair, a quantum output pair and a classical outcome wire. Equals
/// encode composed onto one branch of a copied measurement outcome.
inline DoubledDiagram nondemolition_measure(VertexKind colour) {
    if (!is_spider(colour))
        throw ZXError("invalid-kind", "measurement spiders are Z or X");
    DoubledDiagram out;
    Diagram& u = out.underlying;
    const VertexId s = u.add_vertex(colour, Phase(0));
    const VertexId qk_in = u.add_boundary_input();
    const VertexId qb_in = u.add_boundary_input();
    const VertexId qk_out = u.add_boundary_output();
    const VertexId qb_out = u.add_boundary_output();
    const VertexId c = u.add_boundary_output();
    u.add_edge(qk_in, s);
    u.add_edge(qb_in, s);
    u.add_edge(s, qk_out);
    u.add_edge(s, qb_out);
    u.add_edge(s, c);
    out.input_kinds = {WireKind::Quantum};
    out.output_kinds = {WireKind::Quantum, WireKind::Classical};
    return out;
}

/// Degree-1 spider as a classical state. Z yields (1, 1), the uniform
/// distribution over Z-measurement outcomes; X yields the uniform noise
/// state in the encoding X-measurement data uses.
inline DoubledDiagram uniform_state(VertexKind colour = VertexKind::Z) {
    if (!is_spider(colour))
        throw ZXError("invalid-kind", "uniform states are Z or X");
    DoubledDiagram out;
    Diagram& u = out.underlying;
    const VertexId s = u.add_vertex(colour, Phase(0));
    const VertexId c = u.add_boundary_output();
    u.add_edge(s, c);
    out.output_kinds = {WireKind::Classical};
    return out;
}

/// Sequential composition of doubled diagrams; wire kinds must agree.
inline DoubledDiagram compose_doubled(const DoubledDiagram& first, const DoubledDiagram& then) {
    if (first.output_kinds != then.input_kinds)
        throw ZXError("arity-mismatch", "wire kinds of the composed interfaces differ");
    DoubledDiagram out;
    out.underlying = compose(first.underlying, then.underlying);
    out.input_kinds = first.input_kinds;
    out.output_kinds = then.output_kinds;
    return out;
}

inline DoubledDiagram tensor_product_doubled(const DoubledDiagram& left,
                                             const DoubledDiagram& right) {
    DoubledDiagram out;
    out.underlying = tensor_product(left.underlying, right.underlying);
    out.input_kinds = left.input_kinds;
    out.input_kinds.insert(out.input_kinds.end(), right.input_kinds.begin(),
                           right.input_kinds.end());
    out.output_kinds = left.output_kinds;
    out.output_kinds.insert(out.output_kinds.end(), right.output_kinds.begin(),
                            right.output_kinds.end());
    return out;
}

} // namespace zxcalc
