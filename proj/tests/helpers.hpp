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

// Test-side oracles and generators. The matrix arithmetic here is written
// independently of the engine's contraction path on purpose: tests compare
// the two against each other.

#pragma once

#include "zxcalc/circuit.hpp"
#include "zxcalc/diagram.hpp"
#include "zxcalc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

namespace zxtest {

using zxcalc::Diagram;
using zxcalc::Edge;
using zxcalc::Phase;
using zxcalc::Scalar;
using zxcalc::Tensor;
using zxcalc::VertexId;
using zxcalc::VertexKind;

// ---------------------------------------------------------------------------
// Dense matrix oracle helpers (plain row-major matrices).

using CMatrix = std::vector<std::vector<Scalar>>;

inline CMatrix cmat(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, std::vector<Scalar>(cols, Scalar(0, 0)));
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    CMatrix r = cmat(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    CMatrix r = cmat(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l)
                    r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return r;
}

inline CMatrix conj_transpose(const CMatrix& a) {
    CMatrix r = cmat(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            r[j][i] = std::conj(a[i][j]);
    return r;
}

inline CMatrix identity_matrix(std::size_t n) {
    CMatrix r = cmat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        r[i][i] = Scalar(1, 0);
    return r;
}

inline Tensor to_tensor(const CMatrix& m, std::size_t outputs, std::size_t inputs) {
    Tensor t(outputs, inputs);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[0].size(); ++c)
            t.at(r, c) = m[r][c];
    return t;
}

inline CMatrix to_matrix(const Tensor& t) {
    CMatrix m = cmat(t.rows(), t.cols());
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c)
            m[r][c] = t.at(r, c);
    return m;
}

// Standard gate matrices.
inline CMatrix gate_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{Scalar(s, 0), Scalar(s, 0)}, {Scalar(s, 0), Scalar(-s, 0)}};
}

inline CMatrix gate_rz(double theta) {
    return {{Scalar(1, 0), Scalar(0, 0)}, {Scalar(0, 0), std::polar(1.0, theta)}};
}

inline CMatrix gate_rx(double theta) {
    return matmul(gate_h(), matmul(gate_rz(theta), gate_h()));
}

inline CMatrix gate_cnot() {
    CMatrix m = cmat(4, 4);
    m[0][0] = m[1][1] = m[2][3] = m[3][2] = Scalar(1, 0);
    return m;
}

inline CMatrix gate_cz() {
    CMatrix m = identity_matrix(4);
    m[3][3] = Scalar(-1, 0);
    return m;
}

// Embeds a 1-qubit gate at wire q of an n-qubit register (qubit 0 is the
// most significant index bit, matching the engine's boundary convention).
inline CMatrix embed1(const CMatrix& g, std::size_t q, std::size_t n) {
    CMatrix r = {{Scalar(1, 0)}};
    for (std::size_t k = 0; k < n; ++k)
        r = kron(r, k == q ? g : identity_matrix(2));
    return r;
}

// Embeds a controlled 2-qubit gate given by its action on (a, b).
inline CMatrix embed_cnot(std::size_t control, std::size_t target, std::size_t n) {
    const std::size_t dim = std::size_t(1) << n;
    CMatrix r = cmat(dim, dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::size_t c_bit = (idx >> (n - 1 - control)) & 1;
        std::size_t out = idx;
        if (c_bit)
            out ^= std::size_t(1) << (n - 1 - target);
        r[out][idx] = Scalar(1, 0);
    }
    return r;
}

inline CMatrix embed_cz(std::size_t a, std::size_t b, std::size_t n) {
    const std::size_t dim = std::size_t(1) << n;
    CMatrix r = cmat(dim, dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::size_t ba = (idx >> (n - 1 - a)) & 1;
        const std::size_t bb = (idx >> (n - 1 - b)) & 1;
        r[idx][idx] = (ba && bb) ? Scalar(-1, 0) : Scalar(1, 0);
    }
    return r;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            dev = std::max(dev, std::abs(a[i][j] - b[i][j]));
    return dev;
}

// ---------------------------------------------------------------------------
// Random diagram generation.

struct RandomOpts {
    std::size_t max_spiders = 8;
    std::size_t max_edges = 12;
    std::size_t max_boundaries = 4;
    std::size_t max_degree = 6; // keeps contraction well under the size guard
    bool with_hboxes = true;
};

// Valid random diagram: spiders with random phases (multiples of pi/4),
// random spider-spider edges (parallel edges and self-loops included),
// degree-1 boundaries, and optional H-boxes subdividing edges.
inline Diagram random_diagram(std::mt19937_64& rng, const RandomOpts& opts = {}) {
    Diagram d;
    std::uniform_int_distribution<std::size_t> spider_count(1, opts.max_spiders);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::int64_t> phase_num(0, 7);

    const std::size_t n_spiders = spider_count(rng);
    std::vector<VertexId> spiders;
    for (std::size_t i = 0; i < n_spiders; ++i)
        spiders.push_back(d.add_vertex(coin(rng) ? VertexKind::Z : VertexKind::X,
                                       Phase(phase_num(rng), 4)));

    std::uniform_int_distribution<std::size_t> edge_count(0, opts.max_edges);
    std::uniform_int_distribution<std::size_t> pick(0, spiders.size() - 1);
    const std::size_t n_edges = edge_count(rng);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const VertexId a = spiders[pick(rng)];
        const VertexId b = spiders[pick(rng)];
        if (a == b && coin(rng))
            continue; // keep self-loops occasional
        if (d.degree(a) + (a == b ? 2 : 1) > opts.max_degree || d.degree(b) + 1 > opts.max_degree)
            continue;
        d.add_edge(a, b);
    }

    std::uniform_int_distribution<std::size_t> boundary_count(0, opts.max_boundaries);
    const std::size_t n_bound = boundary_count(rng);
    for (std::size_t i = 0; i < n_bound; ++i) {
        const VertexId s = spiders[pick(rng)];
        if (d.degree(s) + 1 > opts.max_degree)
            continue;
        const VertexId b = coin(rng) ? d.add_boundary_input() : d.add_boundary_output();
        d.add_edge(b, s);
    }

    if (opts.with_hboxes && !d.edges().empty() && coin(rng)) {
        // Subdivide a random non-loop edge with an H-box.
        std::vector<Edge> candidates;
        for (const Edge& e : d.edges())
            if (!e.loop())
                candidates.push_back(e);
        if (!candidates.empty()) {
            std::uniform_int_distribution<std::size_t> pe(0, candidates.size() - 1);
            const Edge e = candidates[pe(rng)];
            d.remove_one_edge(e.a, e.b);
            const VertexId h = d.add_vertex(VertexKind::HBox);
            d.add_edge(e.a, h);
            d.add_edge(h, e.b);
        }
    }
    return d;
}

// Random diagram with the given boundary signature (n inputs, m outputs).
inline Diagram random_diagram_with_io(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                                      RandomOpts opts = {}) {
    opts.max_boundaries = 0;
    Diagram d = random_diagram(rng, opts);
    std::vector<VertexId> spiders;
    for (const auto& [id, data] : d.vertices())
        if (is_spider(data.kind))
            spiders.push_back(id);
    std::uniform_int_distribution<std::size_t> pick(0, spiders.size() - 1);
    const auto pick_attachable = [&]() {
        for (int tries = 0; tries < 32; ++tries) {
            const VertexId s = spiders[pick(rng)];
            if (d.degree(s) + 1 <= opts.max_degree)
                return s;
        }
        return spiders[pick(rng)];
    };
    for (std::size_t i = 0; i < n_in; ++i) {
        const VertexId b = d.add_boundary_input();
        d.add_edge(b, pick_attachable());
    }
    for (std::size_t i = 0; i < n_out; ++i) {
        const VertexId b = d.add_boundary_output();
        d.add_edge(b, pick_attachable());
    }
    return d;
}

// ---------------------------------------------------------------------------
// Circuit helpers: random circuits over a gate menu, plus an independent
// matrix oracle for their unitaries.

enum class GateMenu { CliffordT, Universality };

inline zxcalc::Circuit random_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates,
                                      GateMenu menu = GateMenu::CliffordT) {
    using zxcalc::Gate;
    zxcalc::Circuit c;
    c.qubits = qubits;
    std::uniform_int_distribution<std::size_t> q(0, qubits - 1);
    std::uniform_int_distribution<std::int64_t> num(0, 7);
    std::uniform_int_distribution<int> kind_die(0, menu == GateMenu::CliffordT ? 4 : 3);
    for (std::size_t i = 0; i < gates; ++i) {
        Gate g;
        const int k = kind_die(rng);
        if (menu == GateMenu::CliffordT) {
            // CNOT, CZ, H, Z(k pi/4), X(k pi/4)
            if (k == 0)
                g.kind = Gate::Kind::CNOT;
            else if (k == 1)
                g.kind = Gate::Kind::CZ;
            else if (k == 2)
                g.kind = Gate::Kind::H;
            else if (k == 3) {
                g.kind = Gate::Kind::RZ;
                g.phase = zxcalc::Phase(num(rng), 4);
            } else {
                g.kind = Gate::Kind::RX;
                g.phase = zxcalc::Phase(num(rng), 4);
            }
        } else {
            // CNOT, RZ, RX, H
            if (k == 0)
                g.kind = Gate::Kind::CNOT;
            else if (k == 1) {
                g.kind = Gate::Kind::RZ;
                g.phase = zxcalc::Phase(num(rng), 4);
            } else if (k == 2) {
                g.kind = Gate::Kind::RX;
                g.phase = zxcalc::Phase(num(rng), 4);
            } else {
                g.kind = Gate::Kind::H;
            }
        }
        g.q0 = q(rng);
        if (g.kind == Gate::Kind::CNOT || g.kind == Gate::Kind::CZ) {
            if (qubits < 2)
                continue;
            do {
                g.q1 = q(rng);
            } while (g.q1 == g.q0);
        }
        c.gates.push_back(g);
    }
    return c;
}

/// Direct gate-by-gate matrix product; independent of the diagram path.
inline CMatrix circuit_to_matrix(const zxcalc::Circuit& c) {
    using zxcalc::Gate;
    const std::size_t n = c.qubits;
    CMatrix m = identity_matrix(std::size_t(1) << n);
    for (const Gate& g : c.gates) {
        CMatrix step;
        switch (g.kind) {
        case Gate::Kind::H: step = embed1(gate_h(), g.q0, n); break;
        case Gate::Kind::X: step = embed1({{Scalar(0, 0), Scalar(1, 0)}, {Scalar(1, 0), Scalar(0, 0)}}, g.q0, n); break;
        case Gate::Kind::Z: step = embed1(gate_rz(zxcalc::Phase(1).radians()), g.q0, n); break;
        case Gate::Kind::S: step = embed1(gate_rz(zxcalc::Phase(1, 2).radians()), g.q0, n); break;
        case Gate::Kind::T: step = embed1(gate_rz(zxcalc::Phase(1, 4).radians()), g.q0, n); break;
        case Gate::Kind::RZ: step = embed1(gate_rz(g.phase.radians()), g.q0, n); break;
        case Gate::Kind::RX: step = embed1(gate_rx(g.phase.radians()), g.q0, n); break;
        case Gate::Kind::CNOT: step = embed_cnot(g.q0, g.q1, n); break;
        case Gate::Kind::CZ: step = embed_cz(g.q0, g.q1, n); break;
        }
        m = matmul(step, m); // later gates act after earlier ones
    }
    return m;
}

// ---------------------------------------------------------------------------
// Graph isomorphism for small diagrams. Boundaries must correspond by list
// position; spiders and H-boxes are matched by backtracking.

namespace detail_iso {

inline bool extend(const Diagram& a, const Diagram& b, std::map<VertexId, VertexId>& map,
                   std::vector<VertexId>& todo) {
    if (todo.empty()) {
        // All vertices mapped; check edge multiset correspondence.
        for (const Edge& e : a.edges())
            if (a.multiplicity(e.a, e.b) != b.multiplicity(map.at(e.a), map.at(e.b)))
                return false;
        return true;
    }
    const VertexId v = todo.back();
    todo.pop_back();
    for (const auto& [w, data] : b.vertices()) {
        if (data.kind != a.kind(v))
            continue;
        if (zxcalc::is_spider(data.kind) && data.phase != a.phase(v))
            continue;
        if (b.degree(w) != a.degree(v))
            continue;
        bool taken = false;
        for (const auto& [x, y] : map)
            if (y == w)
                taken = true;
        if (taken)
            continue;
        // Partial consistency: counts against already-mapped vertices.
        bool ok = true;
        for (const auto& [x, y] : map)
            if (a.multiplicity(v, x) != b.multiplicity(w, y))
                ok = false;
        if (a.multiplicity(v, v) != b.multiplicity(w, w))
            ok = false;
        if (!ok)
            continue;
        map[v] = w;
        if (extend(a, b, map, todo))
            return true;
        map.erase(v);
    }
    todo.push_back(v);
    return false;
}

} // namespace detail_iso

inline bool isomorphic(const Diagram& a, const Diagram& b) {
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
        return false;
    if (a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size())
        return false;
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < a.inputs().size(); ++i)
        map[a.inputs()[i]] = b.inputs()[i];
    for (std::size_t i = 0; i < a.outputs().size(); ++i)
        map[a.outputs()[i]] = b.outputs()[i];
    for (const auto& [v, w] : map)
        if (a.kind(v) != b.kind(w))
            return false;
    std::vector<VertexId> todo;
    for (const auto& [id, data] : a.vertices())
        if (data.kind != VertexKind::Boundary)
            todo.push_back(id);
    return detail_iso::extend(a, b, map, todo);
}

} // namespace zxtest
