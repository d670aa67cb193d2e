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

#include "zxcalc/error.hpp"
#include "zxcalc/phase.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zxcalc {

using VertexId = std::uint32_t;
using Scalar = std::complex<double>;

enum class VertexKind { Z, X, HBox, Boundary };

inline bool is_spider(VertexKind k) { return k == VertexKind::Z || k == VertexKind::X; }

inline VertexKind opposite_colour(VertexKind k) {
    return k == VertexKind::Z ? VertexKind::X : VertexKind::Z;
}

inline std::string kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::Z: return "Z";
    case VertexKind::X: return "X";
    case VertexKind::HBox: return "H";
    default: return "B";
    }
}

struct VertexData {
    VertexKind kind = VertexKind::Z;
    Phase phase; // meaningful for Z/X only
    bool operator==(const VertexData&) const = default;
};

/// Undirected edge with normalized endpoint order (a <= b). Parallel edges
/// are distinct instances in the diagram's edge multiset; {v, v} is a
/// self-loop.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    Edge() = default;
    Edge(VertexId u, VertexId v) : a(std::min(u, v)), b(std::max(u, v)) {}
    bool loop() const { return a == b; }
    VertexId other(VertexId v) const { return v == a ? b : a; }
    auto operator<=>(const Edge&) const = default;
};

/// Open multigraph of spiders, H-boxes and boundary vertices, with ordered
/// input/output boundary lists and a tracked global scalar.
///
/// Vertex ids are opaque and fresh on insert; all containers iterate in
/// ascending id order, which is the canonical order used for matching and
/// serialization. Diagrams are plain values: every operation either returns
/// a fresh diagram or mutates `*this` only.
class Diagram {
public:
    Diagram() = default;

    // -- construction ------------------------------------------------------

    /// Inserts an isolated spider or H-box and returns its fresh id.
    VertexId add_vertex(VertexKind kind, Phase phase = {}) {
        if (kind == VertexKind::Boundary)
            throw ZXError("invalid-kind", "boundaries are added via add_boundary_input/output");
        if (kind == VertexKind::HBox)
            phase = Phase();
        const VertexId id = next_id_++;
        vertices_.emplace(id, VertexData{kind, phase});
        return id;
    }

    /// Inserts a vertex under an explicit id (parsing, relabeling tests).
    VertexId add_vertex_with_id(VertexId id, VertexKind kind, Phase phase = {}) {
        if (vertices_.count(id))
            throw ZXError("unknown-id", "duplicate vertex id " + std::to_string(id));
        vertices_.emplace(id, VertexData{kind, phase});
        next_id_ = std::max(next_id_, id + 1);
        return id;
    }

    VertexId add_boundary_input() {
        const VertexId id = next_id_++;
        vertices_.emplace(id, VertexData{VertexKind::Boundary, Phase()});
        inputs_.push_back(id);
        return id;
    }

    VertexId add_boundary_output() {
        const VertexId id = next_id_++;
        vertices_.emplace(id, VertexData{VertexKind::Boundary, Phase()});
        outputs_.push_back(id);
        return id;
    }

    void mark_input(VertexId id) {
        require(id);
        inputs_.push_back(id);
    }

    void mark_output(VertexId id) {
        require(id);
        outputs_.push_back(id);
    }

    void set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
    void set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }

    /// Adds one edge instance {a, b}. Parallel edges accumulate; degree
    /// constraints on H-boxes and boundaries are checked at validation time.
    void add_edge(VertexId a, VertexId b) {
        require(a);
        require(b);
        edges_.insert(Edge(a, b));
    }

    void remove_one_edge(VertexId a, VertexId b) {
        const auto it = edges_.find(Edge(a, b));
        if (it == edges_.end())
            throw ZXError("unknown-id", "no edge between " + std::to_string(a) + " and " + std::to_string(b));
        edges_.erase(it);
    }

    /// Removes a vertex together with all incident edges. The id is not
    /// removed from the boundary lists; callers managing boundaries must do
    /// that themselves (rewrites never delete boundaries).
    void remove_vertex(VertexId v) {
        require(v);
        for (auto it = edges_.begin(); it != edges_.end();) {
            if (it->a == v || it->b == v)
                it = edges_.erase(it);
            else
                ++it;
        }
        vertices_.erase(v);
    }

    // -- accessors ----------------------------------------------------------

    const std::map<VertexId, VertexData>& vertices() const { return vertices_; }
    const std::multiset<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& inputs() const { return inputs_; }
    const std::vector<VertexId>& outputs() const { return outputs_; }

    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }

    const VertexData& vertex(VertexId v) const {
        const auto it = vertices_.find(v);
        if (it == vertices_.end())
            throw ZXError("unknown-id", "no vertex " + std::to_string(v));
        return it->second;
    }

    VertexKind kind(VertexId v) const { return vertex(v).kind; }
    Phase phase(VertexId v) const { return vertex(v).phase; }

    void set_phase(VertexId v, Phase p) {
        require(v);
        vertices_[v].phase = p;
    }

    void set_kind(VertexId v, VertexKind k) {
        require(v);
        vertices_[v].kind = k;
    }

    /// Edge-endpoint count; a self-loop contributes 2.
    std::size_t degree(VertexId v) const {
        std::size_t d = 0;
        for (const Edge& e : edges_) {
            if (e.a == v) ++d;
            if (e.b == v) ++d;
        }
        return d;
    }

    std::size_t multiplicity(VertexId a, VertexId b) const {
        return edges_.count(Edge(a, b));
    }

    std::size_t self_loops(VertexId v) const { return multiplicity(v, v); }

    /// Incident edge instances in canonical order (self-loops appear once).
    std::vector<Edge> incident(VertexId v) const {
        std::vector<Edge> out;
        for (const Edge& e : edges_)
            if (e.a == v || e.b == v)
                out.push_back(e);
        return out;
    }

    std::size_t spider_count() const {
        std::size_t n = 0;
        for (const auto& [id, data] : vertices_)
            if (is_spider(data.kind))
                ++n;
        return n;
    }

    Scalar scalar() const { return scalar_; }
    void scale(Scalar factor) { scalar_ *= factor; }
    void set_scalar(Scalar s) { scalar_ = s; }

    VertexId next_id() const { return next_id_; }

    // -- validation ---------------------------------------------------------

    /// Returns the first violated invariant, or nullopt for a valid diagram.
    std::optional<std::string> invalid_reason() const {
        for (const Edge& e : edges_) {
            if (!has_vertex(e.a) || !has_vertex(e.b))
                return "unknown-id: edge references a missing vertex";
            if (e.loop() && !is_spider(kind(e.a)))
                return "degree-violation: self-loop on " + kind_name(kind(e.a)) +
                       " vertex " + std::to_string(e.a);
        }
        std::map<VertexId, int> boundary_uses;
        for (VertexId v : inputs_)
            ++boundary_uses[v];
        for (VertexId v : outputs_)
            ++boundary_uses[v];
        for (const auto& [id, uses] : boundary_uses) {
            if (!has_vertex(id))
                return "unknown-id: boundary list references missing vertex " + std::to_string(id);
            if (kind(id) != VertexKind::Boundary)
                return "validation-error: non-boundary vertex " + std::to_string(id) + " in boundary list";
            if (uses != 1)
                return "validation-error: boundary " + std::to_string(id) + " listed " +
                       std::to_string(uses) + " times";
        }
        for (const auto& [id, data] : vertices_) {
            if (data.kind == VertexKind::Boundary) {
                if (!boundary_uses.count(id))
                    return "validation-error: boundary " + std::to_string(id) +
                           " is in neither inputs nor outputs";
                if (degree(id) != 1)
                    return "degree-violation: boundary " + std::to_string(id) + " has degree " +
                           std::to_string(degree(id)) + " (expected 1)";
            } else if (data.kind == VertexKind::HBox) {
                if (degree(id) != 2)
                    return "degree-violation: H-box " + std::to_string(id) + " has degree " +
                           std::to_string(degree(id)) + " (expected 2)";
            }
        }
        return std::nullopt;
    }

    bool is_valid() const { return !invalid_reason().has_value(); }

    void check_valid() const {
        if (const auto reason = invalid_reason())
            throw ZXError("invalid-diagram", *reason);
    }

    // -- small ready-made diagrams ------------------------------------------

    /// One bare wire: a single input joined to a single output.
    static Diagram wire() {
        Diagram d;
        const VertexId i = d.add_boundary_input();
        const VertexId o = d.add_boundary_output();
        d.add_edge(i, o);
        return d;
    }

    static Diagram wires(std::size_t n) {
        Diagram d;
        for (std::size_t k = 0; k < n; ++k) {
            const VertexId i = d.add_boundary_input();
            const VertexId o = d.add_boundary_output();
            d.add_edge(i, o);
        }
        return d;
    }

    /// Bell state as a bent wire: no inputs, two outputs joined by an edge.
    static Diagram cup() {
        Diagram d;
        const VertexId o1 = d.add_boundary_output();
        const VertexId o2 = d.add_boundary_output();
        d.add_edge(o1, o2);
        return d;
    }

    /// Bell effect: two inputs joined by an edge.
    static Diagram cap() {
        Diagram d;
        const VertexId i1 = d.add_boundary_input();
        const VertexId i2 = d.add_boundary_input();
        d.add_edge(i1, i2);
        return d;
    }

    // -- helpers for composition --------------------------------------------

    /// Copies `other` into this diagram under fresh ids; returns the id map.
    std::map<VertexId, VertexId> absorb(const Diagram& other) {
        std::map<VertexId, VertexId> remap;
        for (const auto& [id, data] : other.vertices_) {
            const VertexId fresh = next_id_++;
            vertices_.emplace(fresh, data);
            remap[id] = fresh;
        }
        for (const Edge& e : other.edges_)
            edges_.insert(Edge(remap.at(e.a), remap.at(e.b)));
        scalar_ *= other.scalar_;
        return remap;
    }

private:
    void require(VertexId v) const {
        if (!has_vertex(v))
            throw ZXError("unknown-id", "no vertex " + std::to_string(v));
    }

    std::map<VertexId, VertexData> vertices_;
    std::multiset<Edge> edges_;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    Scalar scalar_{1.0, 0.0};
    VertexId next_id_ = 0;
};

namespace detail {

/// Fuses wire ends pairwise: each pair (o, i) of degree-1 boundary vertices
/// is deleted and the wires hanging off them are joined. Chains of fused
/// boundaries collapse to one wire; a chain that closes on itself is a
/// circle and contributes a factor 2 to the scalar.
inline void fuse_boundary_pairs(Diagram& d, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::map<VertexId, VertexId> partner;
    for (const auto& [o, i] : pairs) {
        partner[o] = i;
        partner[i] = o;
    }
    // Each fused boundary has exactly one incident edge by validity.
    std::map<VertexId, Edge> wire_of;
    for (const auto& [v, p] : partner) {
        const auto inc = d.incident(v);
        if (inc.size() != 1)
            throw ZXError("invalid-diagram",
                          "boundary " + std::to_string(v) + " has degree " + std::to_string(inc.size()));
        wire_of.emplace(v, inc[0]);
    }
    std::set<VertexId> done;
    std::vector<Edge> new_edges;
    for (const auto& [start, start_partner] : partner) {
        if (done.count(start))
            continue;
        // Walk from `start` through its wire; every time the wire lands on
        // another fused boundary, continue through that boundary's partner.
        const auto walk = [&](VertexId from, bool& closed) -> VertexId {
            VertexId cur = from;
            while (true) {
                done.insert(cur);
                const VertexId next = wire_of.at(cur).other(cur);
                if (!partner.count(next))
                    return next;
                done.insert(next);
                const VertexId cont = partner.at(next);
                if (cont == start) { // wire closed into a circle
                    closed = true;
                    return cont;
                }
                cur = cont;
            }
        };
        bool closed = false;
        const VertexId end_a = walk(start, closed);
        if (closed) {
            d.scale(Scalar(2.0, 0.0)); // a plain circle evaluates to 2
            continue;
        }
        bool closed_b = false;
        const VertexId end_b = walk(partner.at(start), closed_b);
        new_edges.emplace_back(end_a, end_b);
    }
    for (const auto& [v, p] : partner)
        d.remove_vertex(v);
    for (const Edge& e : new_edges)
        d.add_edge(e.a, e.b);
}

} // namespace detail

/// Sequential composition: feeds the outputs of `first` (in order) into the
/// inputs of `then`. As a linear map the result is `then after first`.
inline Diagram compose(const Diagram& first, const Diagram& then) {
    if (first.outputs().size() != then.inputs().size())
        throw ZXError("arity-mismatch",
                      std::to_string(first.outputs().size()) + " outputs composed onto " +
                          std::to_string(then.inputs().size()) + " inputs");
    Diagram result = first;
    const auto remap = result.absorb(then);

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t k = 0; k < first.outputs().size(); ++k)
        pairs.emplace_back(first.outputs()[k], remap.at(then.inputs()[k]));

    std::vector<VertexId> new_outputs;
    for (VertexId v : then.outputs())
        new_outputs.push_back(remap.at(v));
    result.set_outputs(std::move(new_outputs));

    detail::fuse_boundary_pairs(result, pairs);
    return result;
}

/// Side-by-side (tensor) product; `left`'s boundaries come first.
inline Diagram tensor_product(const Diagram& left, const Diagram& right) {
    Diagram result = left;
    const auto remap = result.absorb(right);
    for (VertexId v : right.inputs())
        result.mark_input(remap.at(v));
    for (VertexId v : right.outputs())
        result.mark_output(remap.at(v));
    return result;
}

/// Dagger: swaps inputs and outputs, negates spider phases, conjugates the
/// scalar. H-boxes are self-adjoint.
inline Diagram adjoint(const Diagram& d) {
    Diagram result;
    for (const auto& [id, data] : d.vertices()) {
        const Phase p = is_spider(data.kind) ? -data.phase : data.phase;
        result.add_vertex_with_id(id, data.kind, p);
    }
    for (const Edge& e : d.edges())
        result.add_edge(e.a, e.b);
    for (VertexId v : d.outputs())
        result.mark_input(v);
    for (VertexId v : d.inputs())
        result.mark_output(v);
    result.set_scalar(std::conj(d.scalar()));
    return result;
}

/// Map-state duality: the chosen input is bent around with a cup and becomes
/// the new last output. On the graph this is just a boundary reclassification.
inline Diagram bend_input_to_output(const Diagram& d, std::size_t which) {
    if (which >= d.inputs().size())
        throw ZXError("index-out-of-range",
                      "input index " + std::to_string(which) + " of " + std::to_string(d.inputs().size()));
    Diagram result;
    for (const auto& [id, data] : d.vertices())
        result.add_vertex_with_id(id, data.kind, data.phase);
    for (const Edge& e : d.edges())
        result.add_edge(e.a, e.b);
    result.set_scalar(d.scalar());
    for (std::size_t k = 0; k < d.inputs().size(); ++k)
        if (k != which)
            result.mark_input(d.inputs()[k]);
    for (VertexId v : d.outputs())
        result.mark_output(v);
    result.mark_output(d.inputs()[which]);
    return result;
}

} // namespace zxcalc
