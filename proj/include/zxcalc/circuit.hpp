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

#include <sstream>
#include <string>
#include <vector>

namespace zxcalc {

struct Gate {
    enum class Kind { H, X, Z, S, T, RZ, RX, CNOT, CZ };
    Kind kind = Kind::H;
    Phase phase;      // RZ/RX only
    std::size_t q0 = 0;
    std::size_t q1 = 0; // CNOT target / CZ second qubit
};

struct Circuit {
    std::size_t qubits = 0;
    std::vector<Gate> gates;
};

/// Line-oriented grammar: first line `qubits N`, then one gate per line:
/// `h 0`, `x 1`, `z 0`, `s 2`, `t 0`, `rz 1/4 2`, `rx 1/2 0`, `cnot 0 1`,
/// `cz 1 2`. Phases are rationals in units of pi. Blank lines and lines
/// starting with `#` are skipped.
inline Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;

    const auto fail = [&](const std::string& msg, const std::string& code = "syntax-error") {
        throw ZXError(code, "line " + std::to_string(line_no) + ": " + msg);
    };
    const auto check_qubit = [&](std::size_t q) {
        if (q >= c.qubits)
            fail("qubit index " + std::to_string(q) + " out of range", "index-out-of-range");
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#')
            continue;
        if (!have_header) {
            if (word != "qubits")
                fail("expected 'qubits N'");
            if (!(ls >> c.qubits) || c.qubits == 0)
                fail("expected a positive qubit count");
            have_header = true;
            continue;
        }
        Gate g;
        const auto read_qubit = [&](std::size_t& q) {
            long long v = -1;
            if (!(ls >> v) || v < 0)
                fail("expected a qubit index");
            q = static_cast<std::size_t>(v);
            check_qubit(q);
        };
        if (word == "h" || word == "x" || word == "z" || word == "s" || word == "t") {
            g.kind = word == "h"   ? Gate::Kind::H
                     : word == "x" ? Gate::Kind::X
                     : word == "z" ? Gate::Kind::Z
                     : word == "s" ? Gate::Kind::S
                                   : Gate::Kind::T;
            read_qubit(g.q0);
        } else if (word == "rz" || word == "rx") {
            g.kind = word == "rz" ? Gate::Kind::RZ : Gate::Kind::RX;
            std::string phase_text;
            if (!(ls >> phase_text))
                fail("expected a phase");
            g.phase = Phase::parse(phase_text);
            read_qubit(g.q0);
        } else if (word == "cnot" || word == "cz") {
            g.kind = word == "cnot" ? Gate::Kind::CNOT : Gate::Kind::CZ;
            read_qubit(g.q0);
            read_qubit(g.q1);
            if (g.q0 == g.q1)
                fail("two-qubit gate endpoints must be distinct", "index-out-of-range");
        } else {
            fail("unknown gate '" + word + "'");
        }
        std::string rest;
        if (ls >> rest)
            fail("trailing tokens '" + rest + "'");
        c.gates.push_back(g);
    }
    if (!have_header)
        fail("missing 'qubits N' header");
    return c;
}

inline std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.qubits << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case Gate::Kind::H: out << "h " << g.q0; break;
        case Gate::Kind::X: out << "x " << g.q0; break;
        case Gate::Kind::Z: out << "z " << g.q0; break;
        case Gate::Kind::S: out << "s " << g.q0; break;
        case Gate::Kind::T: out << "t " << g.q0; break;
        case Gate::Kind::RZ: out << "rz " << g.phase.str() << " " << g.q0; break;
        case Gate::Kind::RX: out << "rx " << g.phase.str() << " " << g.q0; break;
        case Gate::Kind::CNOT: out << "cnot " << g.q0 << " " << g.q1; break;
        case Gate::Kind::CZ: out << "cz " << g.q0 << " " << g.q1; break;
        }
        out << "\n";
    }
    return out.str();
}

/// Appends gates left to right onto one wire per qubit. Phase gates become
/// single spiders, CNOT a Z-X spider pair, CZ the Z-H-Z form; boundary order
/// is qubit order.
inline Diagram circuit_to_diagram(const Circuit& c) {
    Diagram d;
    std::vector<VertexId> front; // current open wire end per qubit
    for (std::size_t q = 0; q < c.qubits; ++q)
        front.push_back(d.add_boundary_input());

    const auto put1 = [&](std::size_t q, VertexKind kind, Phase p) {
        const VertexId v = d.add_vertex(kind, p);
        d.add_edge(front[q], v);
        front[q] = v;
    };

    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case Gate::Kind::H: put1(g.q0, VertexKind::HBox, Phase(0)); break;
        case Gate::Kind::X: put1(g.q0, VertexKind::X, Phase(1)); break;
        case Gate::Kind::Z: put1(g.q0, VertexKind::Z, Phase(1)); break;
        case Gate::Kind::S: put1(g.q0, VertexKind::Z, Phase(1, 2)); break;
        case Gate::Kind::T: put1(g.q0, VertexKind::Z, Phase(1, 4)); break;
        case Gate::Kind::RZ: put1(g.q0, VertexKind::Z, g.phase); break;
        case Gate::Kind::RX: put1(g.q0, VertexKind::X, g.phase); break;
        case Gate::Kind::CNOT: {
            const VertexId zc = d.add_vertex(VertexKind::Z);
            const VertexId xt = d.add_vertex(VertexKind::X);
            d.add_edge(front[g.q0], zc);
            d.add_edge(front[g.q1], xt);
            d.add_edge(zc, xt);
            front[g.q0] = zc;
            front[g.q1] = xt;
            break;
        }
        case Gate::Kind::CZ: {
            const VertexId za = d.add_vertex(VertexKind::Z);
            const VertexId zb = d.add_vertex(VertexKind::Z);
            const VertexId h = d.add_vertex(VertexKind::HBox);
            d.add_edge(front[g.q0], za);
            d.add_edge(front[g.q1], zb);
            d.add_edge(za, h);
            d.add_edge(h, zb);
            front[g.q0] = za;
            front[g.q1] = zb;
            break;
        }
        }
    }
    for (std::size_t q = 0; q < c.qubits; ++q) {
        const VertexId out = d.add_boundary_output();
        d.add_edge(front[q], out);
    }
    return d;
}

} // namespace zxcalc
