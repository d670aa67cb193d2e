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

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace zxcalc {

/// A concrete binding of a rule's left-hand side into a diagram. `vertices`
/// is role-ordered per rule (see the catalog); bindings are injective.
struct Match {
    std::string rule;
    std::vector<VertexId> vertices;

    bool operator==(const Match&) const = default;
};

/// Catalog entry. `scalar` yields the factor the diagram's global scalar is
/// multiplied by when the left-hand side is replaced by the right-hand side;
/// it is a frozen closed form validated against the tensor oracle (the rule
/// equations hold only up to a number, and that number depends on the fixed
/// generator normalization used by `evaluate`).
struct RewriteRule {
    std::string id;
    std::string summary;
    std::function<std::vector<Match>(const Diagram&)> find;
    std::function<bool(const Diagram&, const Match&)> check;
    std::function<void(Diagram&, const Match&)> apply; // graph surgery incl. scalar
};

namespace rules_detail {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline void sort_matches(std::vector<Match>& ms) {
    std::sort(ms.begin(), ms.end(),
              [](const Match& a, const Match& b) { return a.vertices < b.vertices; });
}

inline bool plain_spider(const Diagram& d, VertexId v) {
    return d.has_vertex(v) && is_spider(d.kind(v));
}

// --- fusion: same-colour spiders joined by >= 1 edge merge; phases add.
// Match [u, v] with u < v; v is merged into u. Merging over k parallel
// edges leaves k-1 self-loops on the merged spider. Scalar 1.

inline std::vector<Match> fusion_find(const Diagram& d) {
    std::vector<Match> ms;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : d.edges()) {
        if (e.loop() || !plain_spider(d, e.a) || !plain_spider(d, e.b))
            continue;
        if (d.kind(e.a) != d.kind(e.b))
            continue;
        if (seen.insert({e.a, e.b}).second)
            ms.push_back(Match{"fusion", {e.a, e.b}});
    }
    sort_matches(ms);
    return ms;
}

inline bool fusion_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 2)
        return false;
    const VertexId u = m.vertices[0], v = m.vertices[1];
    return u < v && plain_spider(d, u) && plain_spider(d, v) && d.kind(u) == d.kind(v) &&
           d.multiplicity(u, v) >= 1;
}

inline void fusion_apply(Diagram& d, const Match& m) {
    const VertexId u = m.vertices[0], v = m.vertices[1];
    d.set_phase(u, d.phase(u) + d.phase(v));
    const std::size_t k = d.multiplicity(u, v);
    for (std::size_t i = 0; i < k; ++i)
        d.remove_one_edge(u, v);
    for (std::size_t i = 0; i + 1 < k; ++i)
        d.add_edge(u, u); // extra connecting wires become self-loops
    const auto rest = d.incident(v); // one entry per remaining edge instance
    for (const Edge& e : rest) {
        d.remove_one_edge(e.a, e.b);
        d.add_edge(u, e.loop() ? u : e.other(v));
    }
    d.remove_vertex(v);
}

// --- identity: a phase-free degree-2 spider is a wire. Match [v]. Scalar 1.
// Skipped when both legs run to one H-box (removing the spider would bend
// the H-box onto itself).

inline bool identity_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 1)
        return false;
    const VertexId v = m.vertices[0];
    if (!plain_spider(d, v) || !d.phase(v).is_zero())
        return false;
    if (d.degree(v) != 2 || d.self_loops(v) != 0)
        return false;
    const auto inc = d.incident(v); // exactly two instances
    const VertexId n1 = inc[0].other(v);
    const VertexId n2 = inc[1].other(v);
    return !(n1 == n2 && d.kind(n1) == VertexKind::HBox);
}

inline std::vector<Match> identity_find(const Diagram& d) {
    std::vector<Match> ms;
    for (const auto& [id, data] : d.vertices()) {
        const Match m{"identity", {id}};
        if (is_spider(data.kind) && identity_check(d, m))
            ms.push_back(m);
    }
    sort_matches(ms);
    return ms;
}

inline void identity_apply(Diagram& d, const Match& m) {
    const VertexId v = m.vertices[0];
    const auto inc = d.incident(v);
    const VertexId n1 = inc[0].other(v);
    const VertexId n2 = inc[1].other(v);
    d.remove_vertex(v);
    d.add_edge(n1, n2);
}

// --- self-loop: a plain self-loop on a spider is removed. Match [v].
// Scalar 1 (tracing two legs of a spider reproduces the smaller spider).

inline std::vector<Match> self_loop_find(const Diagram& d) {
    std::vector<Match> ms;
    for (const auto& [id, data] : d.vertices())
        if (is_spider(data.kind) && d.self_loops(id) > 0)
            ms.push_back(Match{"self-loop", {id}});
    sort_matches(ms);
    return ms;
}

inline bool self_loop_check(const Diagram& d, const Match& m) {
    return m.vertices.size() == 1 && plain_spider(d, m.vertices[0]) &&
           d.self_loops(m.vertices[0]) > 0;
}

inline void self_loop_apply(Diagram& d, const Match& m) {
    d.remove_one_edge(m.vertices[0], m.vertices[0]);
}

// --- hopf: two parallel edges between a Z and an X spider cancel.
// Match [z, x]. Scalar 1/2 (holds for arbitrary phases on both spiders).

inline std::vector<Match> hopf_find(const Diagram& d) {
    std::vector<Match> ms;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : d.edges()) {
        if (e.loop() || !plain_spider(d, e.a) || !plain_spider(d, e.b))
            continue;
        if (d.kind(e.a) == d.kind(e.b))
            continue;
        if (d.multiplicity(e.a, e.b) < 2)
            continue;
        const VertexId z = d.kind(e.a) == VertexKind::Z ? e.a : e.b;
        const VertexId x = e.other(z);
        if (seen.insert({z, x}).second)
            ms.push_back(Match{"hopf", {z, x}});
    }
    sort_matches(ms);
    return ms;
}

inline bool hopf_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 2)
        return false;
    const VertexId z = m.vertices[0], x = m.vertices[1];
    return plain_spider(d, z) && plain_spider(d, x) && d.kind(z) == VertexKind::Z &&
           d.kind(x) == VertexKind::X && d.multiplicity(z, x) >= 2;
}

inline void hopf_apply(Diagram& d, const Match& m) {
    d.remove_one_edge(m.vertices[0], m.vertices[1]);
    d.remove_one_edge(m.vertices[0], m.vertices[1]);
    d.scale(Scalar(0.5, 0.0));
}

// --- bialgebra, used right-to-left as square popping: a complete bipartite
// square of two phase-free Z spiders and two phase-free X spiders, each of
// degree exactly 3, collapses to one X and one Z spider joined by a single
// edge. The X takes over the Z pair's outer legs and vice versa (the
// colours swap sides). Match [z1, z2, x1, x2], z1 < z2, x1 < x2.
// Scalar 1/sqrt(2).
//
// The degree-3 restriction is essential: with more than one outer leg per
// corner the two sides of the equation differ. An outer leg is allowed to
// connect z1 to z2 (or x1 to x2); collapsing it yields a self-loop on the
// merged spider.

inline bool bialgebra_corner(const Diagram& d, VertexId v, VertexKind kind) {
    return plain_spider(d, v) && d.kind(v) == kind && d.phase(v).is_zero() && d.degree(v) == 3 &&
           d.self_loops(v) == 0;
}

inline bool bialgebra_square(const Diagram& d, VertexId z1, VertexId z2, VertexId x1, VertexId x2) {
    return d.multiplicity(z1, x1) == 1 && d.multiplicity(z1, x2) == 1 &&
           d.multiplicity(z2, x1) == 1 && d.multiplicity(z2, x2) == 1;
}

inline std::vector<Match> bialgebra_find(const Diagram& d) {
    std::vector<VertexId> zs, xs;
    for (const auto& [id, data] : d.vertices()) {
        if (bialgebra_corner(d, id, VertexKind::Z))
            zs.push_back(id);
        else if (bialgebra_corner(d, id, VertexKind::X))
            xs.push_back(id);
    }
    std::vector<Match> ms;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            for (std::size_t k = 0; k < xs.size(); ++k)
                for (std::size_t l = k + 1; l < xs.size(); ++l)
                    if (bialgebra_square(d, zs[i], zs[j], xs[k], xs[l]))
                        ms.push_back(Match{"bialgebra", {zs[i], zs[j], xs[k], xs[l]}});
    sort_matches(ms);
    return ms;
}

inline bool bialgebra_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 4)
        return false;
    const VertexId z1 = m.vertices[0], z2 = m.vertices[1];
    const VertexId x1 = m.vertices[2], x2 = m.vertices[3];
    return z1 < z2 && x1 < x2 && bialgebra_corner(d, z1, VertexKind::Z) &&
           bialgebra_corner(d, z2, VertexKind::Z) && bialgebra_corner(d, x1, VertexKind::X) &&
           bialgebra_corner(d, x2, VertexKind::X) && bialgebra_square(d, z1, z2, x1, x2);
}

inline void bialgebra_apply(Diagram& d, const Match& m) {
    const VertexId z1 = m.vertices[0], z2 = m.vertices[1];
    const VertexId x1 = m.vertices[2], x2 = m.vertices[3];
    const VertexId nx = d.add_vertex(VertexKind::X, Phase(0));
    const VertexId nz = d.add_vertex(VertexKind::Z, Phase(0));

    // Reattach each corner's single outer leg to the merged spider of the
    // opposite colour. A leg running between the two same-colour corners
    // shows up once from each side; turn it into one self-loop.
    const auto reattach = [&](VertexId a, VertexId b, const std::vector<VertexId>& square,
                              VertexId target) {
        bool internal_handled = false;
        for (VertexId corner : {a, b}) {
            for (const Edge& e : d.incident(corner)) {
                const VertexId other = e.other(corner);
                if (std::find(square.begin(), square.end(), other) != square.end() &&
                    !(other == a || other == b))
                    continue; // square bond, dropped with the corners
                if (other == a || other == b) {
                    if (!internal_handled) {
                        d.add_edge(target, target);
                        internal_handled = true;
                    }
                    continue;
                }
                d.add_edge(target, other);
            }
        }
    };
    const std::vector<VertexId> square{z1, z2, x1, x2};
    reattach(z1, z2, square, nx);
    reattach(x1, x2, square, nz);
    d.add_edge(nx, nz);
    d.remove_vertex(z1);
    d.remove_vertex(z2);
    d.remove_vertex(x1);
    d.remove_vertex(x2);
    d.scale(Scalar(kInvSqrt2, 0.0));
}

// --- copy: a degree-1 spider of phase 0 or pi attached to a phase-free
// spider of the opposite colour is copied onto the other legs. Match
// [state, through]. Scalar 2^{(1-n)/2}, n = number of copies produced.

inline bool copy_state(const Diagram& d, VertexId s) {
    return plain_spider(d, s) && d.degree(s) == 1 &&
           (d.phase(s).is_zero() || d.phase(s).is_pi());
}

inline std::vector<Match> copy_find(const Diagram& d) {
    std::vector<Match> ms;
    for (const auto& [id, data] : d.vertices()) {
        if (!copy_state(d, id))
            continue;
        const VertexId t = d.incident(id)[0].other(id);
        if (t == id || !plain_spider(d, t))
            continue;
        if (d.kind(t) == d.kind(id) || !d.phase(t).is_zero() || d.self_loops(t) != 0)
            continue;
        ms.push_back(Match{"copy", {id, t}});
    }
    sort_matches(ms);
    return ms;
}

inline bool copy_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 2)
        return false;
    const VertexId s = m.vertices[0], t = m.vertices[1];
    return copy_state(d, s) && plain_spider(d, t) && d.incident(s)[0].other(s) == t &&
           d.kind(t) == opposite_colour(d.kind(s)) && d.phase(t).is_zero() &&
           d.self_loops(t) == 0;
}

inline void copy_apply(Diagram& d, const Match& m) {
    const VertexId s = m.vertices[0], t = m.vertices[1];
    const VertexKind state_kind = d.kind(s);
    const Phase state_phase = d.phase(s);
    std::vector<VertexId> attach;
    for (const Edge& e : d.incident(t)) // one entry per edge instance
        if (e.other(t) != s)
            attach.push_back(e.other(t));
    d.remove_vertex(s);
    d.remove_vertex(t);
    const std::size_t n = attach.size();
    for (VertexId w : attach) {
        const VertexId fresh = d.add_vertex(state_kind, state_phase);
        d.add_edge(fresh, w);
    }
    d.scale(Scalar(std::pow(2.0, 0.5 * (1.0 - static_cast<double>(n))), 0.0));
}

// --- pi-copy: a pi-phased degree-2 spider (a NOT on the wire) pushes
// through an opposite-colour spider, negating its phase and copying itself
// onto the other legs. Match [pi_spider, through]. Scalar e^{i phase}.

inline std::vector<Match> pi_copy_find(const Diagram& d) {
    std::vector<Match> ms;
    for (const auto& [id, data] : d.vertices()) {
        if (!is_spider(data.kind) || !data.phase.is_pi())
            continue;
        if (d.degree(id) != 2 || d.self_loops(id) != 0)
            continue;
        const auto inc = d.incident(id);
        const VertexId n1 = inc[0].other(id);
        const VertexId n2 = inc[1].other(id);
        if (n1 == n2)
            continue; // a doubled wire to one vertex is hopf material, not a NOT
        for (const VertexId t : {n1, n2}) {
            if (!plain_spider(d, t) || d.kind(t) != opposite_colour(data.kind))
                continue;
            if (d.self_loops(t) != 0)
                continue;
            ms.push_back(Match{"pi-copy", {id, t}});
        }
    }
    sort_matches(ms);
    return ms;
}

inline bool pi_copy_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 2)
        return false;
    const VertexId x = m.vertices[0], t = m.vertices[1];
    if (!plain_spider(d, x) || !d.phase(x).is_pi() || d.degree(x) != 2 || d.self_loops(x) != 0)
        return false;
    return plain_spider(d, t) && d.kind(t) == opposite_colour(d.kind(x)) &&
           d.multiplicity(x, t) == 1 && d.self_loops(t) == 0;
}

inline void pi_copy_apply(Diagram& d, const Match& m) {
    const VertexId x = m.vertices[0], t = m.vertices[1];
    const VertexKind not_kind = d.kind(x);
    const Scalar factor = std::polar(1.0, d.phase(t).radians());
    // The wire end on the far side of the NOT.
    VertexId w = 0;
    for (const Edge& e : d.incident(x))
        if (e.other(x) != t)
            w = e.other(x);
    d.set_phase(t, -d.phase(t));
    std::vector<VertexId> others;
    for (const Edge& e : d.incident(t)) // one entry per edge instance
        if (e.other(t) != x)
            others.push_back(e.other(t));
    d.remove_vertex(x);
    for (VertexId u : others)
        d.remove_one_edge(t, u);
    d.add_edge(w, t);
    for (VertexId u : others) {
        const VertexId fresh = d.add_vertex(not_kind, Phase(1));
        d.add_edge(t, fresh);
        d.add_edge(fresh, u);
    }
    d.scale(factor);
}

// --- colour-change: toggle a spider's colour, inserting an H-box on every
// incident edge. Match [v]. Scalar 1. Spiders with self-loops are skipped.

inline std::vector<Match> colour_change_find(const Diagram& d) {
    std::vector<Match> ms;
    for (const auto& [id, data] : d.vertices())
        if (is_spider(data.kind) && d.self_loops(id) == 0)
            ms.push_back(Match{"colour-change", {id}});
    sort_matches(ms);
    return ms;
}

inline bool colour_change_check(const Diagram& d, const Match& m) {
    return m.vertices.size() == 1 && plain_spider(d, m.vertices[0]) &&
           d.self_loops(m.vertices[0]) == 0;
}

inline void colour_change_apply(Diagram& d, const Match& m) {
    const VertexId v = m.vertices[0];
    d.set_kind(v, opposite_colour(d.kind(v)));
    std::vector<VertexId> neighbours;
    for (const Edge& e : d.incident(v)) // one entry per edge instance
        neighbours.push_back(e.other(v));
    for (VertexId u : neighbours) {
        d.remove_one_edge(v, u);
        const VertexId h = d.add_vertex(VertexKind::HBox);
        d.add_edge(v, h);
        d.add_edge(h, u);
    }
}

// --- h-cancel: two H-boxes in series become a wire. Match [h1, h2],
// h1 < h2. Scalar 1. Skipped when both outer legs run to one H-box.

inline std::vector<Match> h_cancel_find(const Diagram& d) {
    std::vector<Match> ms;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : d.edges()) {
        if (e.loop())
            continue;
        if (d.kind(e.a) != VertexKind::HBox || d.kind(e.b) != VertexKind::HBox)
            continue;
        if (d.multiplicity(e.a, e.b) != 1)
            continue;
        VertexId outer_a = 0, outer_b = 0;
        for (const Edge& f : d.incident(e.a))
            if (f.other(e.a) != e.b)
                outer_a = f.other(e.a);
        for (const Edge& f : d.incident(e.b))
            if (f.other(e.b) != e.a)
                outer_b = f.other(e.b);
        if (outer_a == outer_b && d.kind(outer_a) == VertexKind::HBox)
            continue;
        if (seen.insert({e.a, e.b}).second)
            ms.push_back(Match{"h-cancel", {e.a, e.b}});
    }
    sort_matches(ms);
    return ms;
}

inline bool h_cancel_check(const Diagram& d, const Match& m) {
    if (m.vertices.size() != 2)
        return false;
    const VertexId h1 = m.vertices[0], h2 = m.vertices[1];
    if (!d.has_vertex(h1) || !d.has_vertex(h2))
        return false;
    if (d.kind(h1) != VertexKind::HBox || d.kind(h2) != VertexKind::HBox)
        return false;
    if (d.multiplicity(h1, h2) != 1)
        return false;
    VertexId outer_a = 0, outer_b = 0;
    for (const Edge& f : d.incident(h1))
        if (f.other(h1) != h2)
            outer_a = f.other(h1);
    for (const Edge& f : d.incident(h2))
        if (f.other(h2) != h1)
            outer_b = f.other(h2);
    return !(outer_a == outer_b && d.kind(outer_a) == VertexKind::HBox);
}

inline void h_cancel_apply(Diagram& d, const Match& m) {
    const VertexId h1 = m.vertices[0], h2 = m.vertices[1];
    VertexId a = 0, b = 0;
    for (const Edge& e : d.incident(h1))
        if (e.other(h1) != h2)
            a = e.other(h1);
    for (const Edge& e : d.incident(h2))
        if (e.other(h2) != h1)
            b = e.other(h2);
    d.remove_vertex(h1);
    d.remove_vertex(h2);
    d.add_edge(a, b);
}

} // namespace rules_detail

/// The rule catalog, in the canonical order used for simplifier
/// tie-breaking. Rule ids are stable strings.
inline const std::vector<RewriteRule>& rule_catalog() {
    using namespace rules_detail;
    static const std::vector<RewriteRule> catalog = {
        {"fusion", "same-colour spiders joined by an edge merge, phases add", fusion_find,
         fusion_check, fusion_apply},
        {"identity", "phase-free degree-2 spider becomes a wire", identity_find, identity_check,
         identity_apply},
        {"self-loop", "plain self-loop on a spider is removed", self_loop_find, self_loop_check,
         self_loop_apply},
        {"hopf", "two parallel edges between opposite-colour spiders cancel", hopf_find,
         hopf_check, hopf_apply},
        {"bialgebra", "alternating-colour square pops to a crossed pair", bialgebra_find,
         bialgebra_check, bialgebra_apply},
        {"copy", "basis state copies through an opposite-colour spider", copy_find, copy_check,
         copy_apply},
        {"pi-copy", "NOT pushes through a spider, negating its phase", pi_copy_find,
         pi_copy_check, pi_copy_apply},
        {"colour-change", "toggle spider colour, H-boxes on all legs", colour_change_find,
         colour_change_check, colour_change_apply},
        {"h-cancel", "two H-boxes in series become a wire", h_cancel_find, h_cancel_check,
         h_cancel_apply},
    };
    return catalog;
}

inline const RewriteRule& rule_by_id(const std::string& id) {
    for (const RewriteRule& r : rule_catalog())
        if (r.id == id)
            return r;
    throw ZXError("unknown-rule", "no rule '" + id + "'");
}

/// All matches of a rule in a diagram, in lexicographic order of the bound
/// vertex ids. Deterministic for a given diagram.
inline std::vector<Match> find_matches(const Diagram& d, const std::string& rule_id) {
    d.check_valid();
    return rule_by_id(rule_id).find(d);
}

/// Applies a match produced from `d` and returns the rewritten diagram, with
/// the rule's scalar constant folded into the tracked scalar. Throws
/// "stale-match" if the binding no longer holds.
inline Diagram apply_match(const Diagram& d, const Match& m) {
    const RewriteRule& rule = rule_by_id(m.rule);
    if (!rule.check(d, m))
        throw ZXError("stale-match", "binding for rule '" + m.rule + "' no longer present");
    Diagram result = d;
    rule.apply(result, m);
    result.check_valid();
    return result;
}

/// A replayable rewrite derivation: `seed` rewrites to the two disconnected
/// basis states via `steps`.
struct HopfDerivation {
    Diagram seed;     // oracle-equal to the two-spider double-edge form
    Diagram lhs;      // the double-edge Z-X pair itself
    Diagram rhs;      // disconnected Z and X states
    std::vector<Match> steps;
};

/// Builds the derivation of the hopf rule from bialgebra, copy and fusion.
/// Rewrites cannot un-fuse, so the replayable sequence starts from the
/// expanded form of the double-edge pair (an alternating square with a
/// basis state on one corner of each colour); the expansion evaluates
/// exactly equal to the hopf left-hand side, which tests check with the
/// oracle.
inline HopfDerivation derive_hopf_trace() {
    HopfDerivation out;

    { // double-edge pair, one boundary leg on each side
        Diagram d;
        const VertexId z = d.add_vertex(VertexKind::Z);
        const VertexId x = d.add_vertex(VertexKind::X);
        d.add_edge(z, x);
        d.add_edge(z, x);
        const VertexId in = d.add_boundary_input();
        const VertexId outb = d.add_boundary_output();
        d.add_edge(in, z);
        d.add_edge(x, outb);
        out.lhs = d;
    }
    { // what hopf itself produces
        const auto ms = find_matches(out.lhs, "hopf");
        out.rhs = apply_match(out.lhs, ms.at(0));
    }
    { // expanded seed: square {z1,z2,x1,x2} + same-colour states on z2, x2
        Diagram d;
        const VertexId z1 = d.add_vertex(VertexKind::Z);
        const VertexId z2 = d.add_vertex(VertexKind::Z);
        const VertexId x1 = d.add_vertex(VertexKind::X);
        const VertexId x2 = d.add_vertex(VertexKind::X);
        const VertexId sz = d.add_vertex(VertexKind::Z); // Z state feeding z2
        const VertexId sx = d.add_vertex(VertexKind::X); // X state feeding x2
        d.add_edge(z1, x1);
        d.add_edge(z1, x2);
        d.add_edge(z2, x1);
        d.add_edge(z2, x2);
        d.add_edge(z2, sz);
        d.add_edge(x2, sx);
        const VertexId in = d.add_boundary_input();
        const VertexId outb = d.add_boundary_output();
        d.add_edge(in, z1);
        d.add_edge(x1, outb);
        out.seed = d;
    }

    // Script the steps by running them; each stage's first match in
    // canonical order is the intended one.
    Diagram cur = out.seed;
    const auto take = [&](const std::string& rule) {
        const auto ms = find_matches(cur, rule);
        if (ms.empty())
            throw ZXError("unknown-rule", "hopf derivation lost its " + rule + " match");
        out.steps.push_back(ms[0]);
        cur = apply_match(cur, ms[0]);
    };
    take("bialgebra"); // pops the square; the states land on opposite colours
    take("copy");      // X state copies through the new Z spider
    take("copy");      // Z state copies through the new X spider
    take("copy");      // leftover state pair annihilates
    return out;
}

} // namespace zxcalc
