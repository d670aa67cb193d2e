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

#include "zxcalc/circuit.hpp"

#include "zxcalc/tensor.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>
#include <cmath>
#include <random>

using namespace zxcalc;
using zxtest::to_matrix;
using zxtest::to_tensor;

TEST(parse_circuit, grammar_cases) {
    const Circuit c = parse_circuit("qubits 2\ncnot 0 1\n");
    ASSERT_EQ(c.gates.size(), 1u);
    EXPECT_EQ(c.gates[0].kind, Gate::Kind::CNOT);
    EXPECT_EQ(c.gates[0].q0, 0u);
    EXPECT_EQ(c.gates[0].q1, 1u);

    const Circuit s = parse_circuit("qubits 1\nrz 1/2 0\n");
    ASSERT_EQ(s.gates.size(), 1u);
    EXPECT_EQ(s.gates[0].kind, Gate::Kind::RZ);
    EXPECT_EQ(s.gates[0].phase, Phase(1, 2));

    const Circuit commented = parse_circuit("qubits 1\n# a comment\n\nh 0\n");
    EXPECT_EQ(commented.gates.size(), 1u);
}

TEST(parse_circuit, errors) {
    try {
        parse_circuit("qubits 1\ncnot 0 1\n");
        FAIL() << "expected ZXError";
    } catch (const ZXError& e) {
        EXPECT_EQ(e.code(), "index-out-of-range");
    }
    try {
        parse_circuit("qubits 1\nfoo 0\n");
        FAIL() << "expected ZXError";
    } catch (const ZXError& e) {
        EXPECT_EQ(e.code(), "syntax-error");
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    try {
        parse_circuit("h 0\n");
        FAIL() << "expected ZXError";
    } catch (const ZXError& e) {
        EXPECT_EQ(e.code(), "syntax-error");
    }
    try {
        parse_circuit("qubits 2\ncz 1 1\n");
        FAIL() << "expected ZXError";
    } catch (const ZXError& e) {
        EXPECT_EQ(e.code(), "index-out-of-range");
    }
}

TEST(parse_circuit, round_trip) {
    const std::string text = "qubits 3\nh 0\nrz 3/4 1\ncnot 0 2\ncz 1 2\nt 0\nx 1\n";
    EXPECT_EQ(serialize_circuit(parse_circuit(text)), text);
}

TEST(circuit_to_diagram, cnot_routes_basis_states) {
    const Diagram cnot = circuit_to_diagram(parse_circuit("qubits 2\ncnot 0 1\n"));
    const Verdict whole = compare(evaluate(cnot), to_tensor(zxtest::gate_cnot(), 2, 2), true);
    EXPECT_TRUE(whole.equivalent());

    // Basis-state routing: |a,b> -> |a, a xor b>, each branch up to the one
    // global scalar of the diagram.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Diagram input;
            const VertexId sa = input.add_vertex(VertexKind::X, a ? Phase(1) : Phase(0));
            const VertexId sb = input.add_vertex(VertexKind::X, b ? Phase(1) : Phase(0));
            const VertexId o1 = input.add_boundary_output();
            const VertexId o2 = input.add_boundary_output();
            input.add_edge(sa, o1);
            input.add_edge(sb, o2);
            const Tensor out = evaluate(compose(input, cnot));
            Tensor want(2, 0);
            want.entries[std::size_t(a) * 2 + (a ^ b)] = Scalar(1, 0);
            EXPECT_TRUE(compare(want, out, true).equivalent()) << a << b;
        }
}

TEST(circuit_to_diagram, cz_is_diagonal) {
    const Diagram cz = circuit_to_diagram(parse_circuit("qubits 2\ncz 0 1\n"));
    const Verdict v = compare(evaluate(cz), to_tensor(zxtest::gate_cz(), 2, 2), true);
    EXPECT_TRUE(v.equivalent());
    EXPECT_EQ(v.kind, Verdict::Kind::Proportional); // residual 1/sqrt(2)
}

TEST(circuit_to_diagram, euler_angles_make_hadamard) {
    const Diagram d = circuit_to_diagram(parse_circuit("qubits 1\nrz 1/2 0\nrx 1/2 0\nrz 1/2 0\n"));
    const Verdict v = compare(evaluate(d), to_tensor(zxtest::gate_h(), 1, 1), true);
    EXPECT_TRUE(v.equivalent());
}

TEST(circuit_to_diagram, named_gates_match_their_matrices) {
    for (const char* line : {"h 0", "x 0", "z 0", "s 0", "t 0", "rz 5/4 0", "rx 7/4 0"}) {
        const Circuit c = parse_circuit(std::string("qubits 1\n") + line + "\n");
        const Tensor got = evaluate(circuit_to_diagram(c));
        const auto want = zxtest::circuit_to_matrix(c);
        EXPECT_TRUE(compare(got, to_tensor(want, 1, 1), true).equivalent()) << line;
    }
}

TEST(circuit_to_diagram, universality_spot_check) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
        const Circuit c = zxtest::random_circuit(rng, 3, 15, zxtest::GateMenu::Universality);
        const Tensor diagram_side = evaluate(circuit_to_diagram(c));
        const Tensor matrix_side = to_tensor(zxtest::circuit_to_matrix(c), 3, 3);
        const Verdict v = compare(matrix_side, diagram_side, true, 1e-9);
        EXPECT_TRUE(v.equivalent()) << "circuit " << i << " deviation " << v.deviation;
    }
}
