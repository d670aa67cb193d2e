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

#include <array>

namespace zxcalc {

namespace protocol_detail {

inline void require_half_turn(Phase p) {
    if (!p.is_zero() && !p.is_pi())
        throw ZXError("invalid-phase", "Bell decorations take phase 0 or pi, got " + p.str());
}

/// in -- Z(a) -- X(b) -- out as a 1-in 1-out diagram.
inline Diagram decorated_wire(Phase z_phase, Phase x_phase) {
    Diagram d;
    const VertexId in = d.add_boundary_input();
    const VertexId za = d.add_vertex(VertexKind::Z, z_phase);
    const VertexId xb = d.add_vertex(VertexKind::X, x_phase);
    const VertexId out = d.add_boundary_output();
    d.add_edge(in, za);
    d.add_edge(za, xb);
    d.add_edge(xb, out);
    return d;
}

} // namespace protocol_detail

/// Bell basis state: a cup decorated with one Z(a) and one X(b) spider on
/// the wire. (0,0) is the plain cup; the four (a,b) choices give the four
/// (unnormalized) Bell vectors.
inline Diagram build_bell_state(Phase a, Phase b) {
    protocol_detail::require_half_turn(a);
    protocol_detail::require_half_turn(b);
    Diagram d;
    const VertexId o1 = d.add_boundary_output();
    const VertexId za = d.add_vertex(VertexKind::Z, a);
    const VertexId xb = d.add_vertex(VertexKind::X, b);
    const VertexId o2 = d.add_boundary_output();
    d.add_edge(o1, za);
    d.add_edge(za, xb);
    d.add_edge(xb, o2);
    return d;
}

/// The matching Bell effect (the adjoint of build_bell_state).
inline Diagram build_bell_effect(Phase a, Phase b) {
    return adjoint(build_bell_state(a, b));
}

/// Teleportation: share a Bell pair, apply the (a,b) Bell effect on Alice's
/// side, and optionally undo the byproduct with X(b) then Z(a) on Bob's
/// wire. The corrected map is proportional to the identity for all four
/// outcome branches.
inline Diagram build_teleportation(Phase a, Phase b, bool corrected) {
    protocol_detail::require_half_turn(a);
    protocol_detail::require_half_turn(b);
    const Diagram share = tensor_product(Diagram::wire(), Diagram::cup());
    const Diagram measure = tensor_product(build_bell_effect(a, b), Diagram::wire());
    Diagram tele = compose(share, measure);
    if (corrected)
        tele = compose(tele, protocol_detail::decorated_wire(a, b));
    return tele;
}

/// Teleportation with the two classical bits inside the diagram: the Bell
/// measurement is a CNOT followed by an X-measurement (control wire) and a
/// Z-measurement (target wire); the outcome wires drive a classically
/// controlled X and Z on Bob's side. One quantum wire in, one out.
inline DoubledDiagram build_teleportation_classical() {
    DoubledDiagram out;
    Diagram& u = out.underlying;

    const VertexId psi_k = u.add_boundary_input();
    const VertexId psi_b = u.add_boundary_input();

    // CNOT with the doubled psi wire as control, the doubled Bell-pair wire
    // as target.
    const VertexId ctrl_k = u.add_vertex(VertexKind::Z);
    const VertexId ctrl_b = u.add_vertex(VertexKind::Z);
    const VertexId targ_k = u.add_vertex(VertexKind::X);
    const VertexId targ_b = u.add_vertex(VertexKind::X);
    u.add_edge(psi_k, ctrl_k);
    u.add_edge(psi_b, ctrl_b);
    u.add_edge(ctrl_k, targ_k);
    u.add_edge(ctrl_b, targ_b);

    // Measurements: X on the control wire, Z on the target wire.
    const VertexId meas_x = u.add_vertex(VertexKind::X);
    const VertexId meas_z = u.add_vertex(VertexKind::Z);
    u.add_edge(ctrl_k, meas_x);
    u.add_edge(ctrl_b, meas_x);
    u.add_edge(targ_k, meas_z);
    u.add_edge(targ_b, meas_z);

    // Bob's corrections. The Z-outcome bit (computational data) controls an
    // X-correction through a Z-copy spider; the X-outcome bit (Hadamard
    // encoded) controls a Z-correction through an X-copy spider.
    const VertexId x_corr_k = u.add_vertex(VertexKind::X);
    const VertexId x_corr_b = u.add_vertex(VertexKind::X);
    const VertexId x_ctrl = u.add_vertex(VertexKind::Z);
    u.add_edge(meas_z, x_ctrl);
    u.add_edge(x_ctrl, x_corr_k);
    u.add_edge(x_ctrl, x_corr_b);

    const VertexId z_corr_k = u.add_vertex(VertexKind::Z);
    const VertexId z_corr_b = u.add_vertex(VertexKind::Z);
    const VertexId z_ctrl = u.add_vertex(VertexKind::X);
    u.add_edge(meas_x, z_ctrl);
    u.add_edge(z_ctrl, z_corr_k);
    u.add_edge(z_ctrl, z_corr_b);

    // Bell pair between the measurement target wire and Bob's wire, then
    // Bob's correction chain: (cup) -> X -> Z -> out.
    u.add_edge(targ_k, x_corr_k);
    u.add_edge(targ_b, x_corr_b);
    u.add_edge(x_corr_k, z_corr_k);
    u.add_edge(x_corr_b, z_corr_b);
    const VertexId bob_k = u.add_boundary_output();
    const VertexId bob_b = u.add_boundary_output();
    u.add_edge(z_corr_k, bob_k);
    u.add_edge(z_corr_b, bob_b);

    out.input_kinds = {WireKind::Quantum};
    out.output_kinds = {WireKind::Quantum};
    out.check_consistent();
    return out;
}

/// One measurement-based state-transfer step: the input runs into a 3-leg
/// Z-spider whose middle leg carries the Z-basis phase effect alpha + s*pi;
/// the third leg is the output. The corrected branch appends Z(-s*pi), so
/// every outcome implements the Z(alpha) phase gate.
inline Diagram build_mbqc_step(Phase alpha, int outcome, bool corrected) {
    Diagram d;
    const VertexId in = d.add_boundary_input();
    const VertexId node = d.add_vertex(VertexKind::Z);
    d.add_edge(in, node);
    const Phase effect_phase = outcome ? alpha + Phase(1) : alpha;
    const VertexId effect = d.add_vertex(VertexKind::Z, effect_phase);
    d.add_edge(node, effect);
    VertexId tail = node;
    if (corrected) {
        const VertexId corr = d.add_vertex(VertexKind::Z, -(outcome ? Phase(1) : Phase(0)));
        d.add_edge(tail, corr);
        tail = corr;
    }
    const VertexId out = d.add_boundary_output();
    d.add_edge(tail, out);
    return d;
}

/// Four-wire linear cluster driven by three phased measurements. Wires are
/// joined by CZ gates (Z-H-Z); ancillas are plus states (phase-free Z
/// states); wire j is measured with the Z-basis effect at angle
/// (+-)angle_j + s_j*pi, the sign flipping with the previous outcome. The
/// corrected variant appends the Pauli byproducts X(s3)Z(s2)X(s1) on the
/// output wire, after which all eight outcome patterns implement the same
/// Euler-angle unitary H Z(gamma) H Z(beta) H Z(alpha).
inline Diagram build_cluster_mbqc(Phase alpha, Phase beta, Phase gamma,
                                  std::array<int, 3> outcomes, bool corrected) {
    Diagram d;
    const auto signed_phase = [](Phase p, int flip, int own) {
        Phase angle = flip ? -p : p;
        if (own)
            angle += Phase(1);
        return angle;
    };
    const Phase eta1 = signed_phase(alpha, 0, outcomes[0]);
    const Phase eta2 = signed_phase(beta, outcomes[0], outcomes[1]);
    const Phase eta3 = signed_phase(gamma, outcomes[1], outcomes[2]);

    // Wire fronts: wire 1 starts at the input, wires 2-4 at plus states.
    const VertexId in = d.add_boundary_input();
    std::array<VertexId, 4> front{in, 0, 0, 0};
    for (std::size_t w = 1; w < 4; ++w)
        front[w] = d.add_vertex(VertexKind::Z); // |+> ancilla, unnormalized

    // CZ between consecutive wires: a fresh Z spider on each wire joined
    // through an H-box.
    const auto cz = [&](std::size_t w1, std::size_t w2) {
        const VertexId za = d.add_vertex(VertexKind::Z);
        const VertexId zb = d.add_vertex(VertexKind::Z);
        const VertexId h = d.add_vertex(VertexKind::HBox);
        d.add_edge(front[w1], za);
        d.add_edge(front[w2], zb);
        d.add_edge(za, h);
        d.add_edge(h, zb);
        front[w1] = za;
        front[w2] = zb;
    };
    cz(0, 1);
    cz(1, 2);
    cz(2, 3);

    // Phased effects close the three measured wires.
    for (const auto& [w, eta] : {std::pair{std::size_t{0}, eta1}, std::pair{std::size_t{1}, eta2},
                                 std::pair{std::size_t{2}, eta3}}) {
        const VertexId effect = d.add_vertex(VertexKind::Z, eta);
        d.add_edge(front[w], effect);
    }

    VertexId tail = front[3];
    if (corrected) {
        const auto pauli = [&](VertexKind kind, int bit) {
            const VertexId corr = d.add_vertex(kind, bit ? Phase(1) : Phase(0));
            d.add_edge(tail, corr);
            tail = corr;
        };
        pauli(VertexKind::X, outcomes[2]);
        pauli(VertexKind::Z, outcomes[1]);
        pauli(VertexKind::X, outcomes[0]);
    }
    const VertexId out = d.add_boundary_output();
    d.add_edge(tail, out);
    return d;
}

} // namespace zxcalc
