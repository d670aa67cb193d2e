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

#include "zxcalc/rules.hpp"
#include "zxcalc/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace zxcalc {

struct TraceStep {
    std::string rule;
    Match match;
    Scalar scalar_applied{1.0, 0.0};
};

/// Replayable record of a rewrite run: applying `steps` to `initial`
/// reproduces `final_diagram` exactly (fresh ids are deterministic).
struct Trace {
    Diagram initial;
    Diagram final_diagram;
    std::vector<TraceStep> steps;
    bool budget_exhausted = false;
};

struct SimplifyConfig {
    std::size_t max_steps = 10000;
    bool enable_bialgebra = true;
    bool enable_colour_change = false;
};

/// One step per line: `<rule-id> <sorted bound vertex ids> <scalar as re,im>`.
inline std::string trace_to_text(const Trace& t) {
    std::ostringstream out;
    out.precision(17);
    for (const TraceStep& s : t.steps) {
        out << s.rule;
        std::vector<VertexId> ids = s.match.vertices;
        std::sort(ids.begin(), ids.end());
        for (VertexId v : ids)
            out << " " << v;
        out << " " << s.scalar_applied.real() << "," << s.scalar_applied.imag() << "\n";
    }
    return out.str();
}

namespace simplify_detail {

inline const std::vector<std::string>& cleanup_rules() {
    static const std::vector<std::string> rules = {"fusion", "identity", "self-loop", "hopf",
                                                   "h-cancel"};
    return rules;
}

inline bool apply_step(Diagram& d, const Match& m, Trace& trace) {
    const Scalar before = d.scalar();
    Diagram next = apply_match(d, m);
    trace.steps.push_back(TraceStep{m.rule, m, next.scalar() / before});
    d = std::move(next);
    return true;
}

/// First match of the first cleanup rule that fires, in catalog order.
inline std::optional<Match> next_cleanup_match(const Diagram& d) {
    for (const std::string& rule : cleanup_rules()) {
        const auto ms = find_matches(d, rule);
        if (!ms.empty())
            return ms[0];
    }
    return std::nullopt;
}

inline void run_cleanup(Diagram& d, Trace& trace, std::size_t max_steps) {
    while (trace.steps.size() < max_steps) {
        const auto m = next_cleanup_match(d);
        if (!m)
            return;
        apply_step(d, *m, trace);
    }
    trace.budget_exhausted = true;
}

} // namespace simplify_detail

/// Applies fusion, identity, self-loop, hopf and h-cancel to fixpoint. Every
/// step strictly decreases (#vertices, #edges) lexicographically, so this
/// terminates unconditionally and never increases the vertex count.
inline std::pair<Diagram, Trace> cleanup_pass(const Diagram& d) {
    d.check_valid();
    Trace trace;
    trace.initial = d;
    Diagram cur = d;
    simplify_detail::run_cleanup(cur, trace, std::size_t(-1));
    trace.final_diagram = cur;
    return {cur, trace};
}

/// Terminating strategy: cleanup to fixpoint, then pop one alternating
/// square (bialgebra) or eliminate one copy/pi-copy instance when doing so
/// shrinks the diagram, and repeat. Colour-change, when enabled, runs once
/// per spider up front so it cannot oscillate.
inline std::pair<Diagram, Trace> simplify(const Diagram& d, const SimplifyConfig& cfg = {}) {
    if (cfg.max_steps < 1)
        throw ZXError("invalid-config", "max-steps must be at least 1");
    d.check_valid();
    Trace trace;
    trace.initial = d;
    Diagram cur = d;

    const auto budget_left = [&] { return trace.steps.size() < cfg.max_steps; };
    // Copy and pi-copy can grow the diagram (one fresh spider per remaining
    // leg); commit them only when a trial application followed by cleanup
    // strictly shrinks the (vertices, edges) measure, which keeps the whole
    // strategy terminating.
    const auto shrinks = [&](const Match& m) {
        const auto measure = [](const Diagram& d2) {
            return std::pair{d2.vertices().size(), d2.edges().size()};
        };
        Diagram scratch = apply_match(cur, m);
        Trace probe;
        probe.initial = scratch;
        simplify_detail::run_cleanup(scratch, probe, cfg.max_steps);
        return measure(scratch) < measure(cur);
    };

    if (cfg.enable_colour_change) {
        std::vector<VertexId> xs;
        for (const auto& [id, data] : cur.vertices())
            if (data.kind == VertexKind::X && cur.self_loops(id) == 0)
                xs.push_back(id);
        for (VertexId v : xs) {
            if (!budget_left()) {
                trace.budget_exhausted = true;
                break;
            }
            simplify_detail::apply_step(cur, Match{"colour-change", {v}}, trace);
        }
    }

    const auto next_match = [&]() -> std::optional<Match> {
        if (const auto m = simplify_detail::next_cleanup_match(cur))
            return m;
        if (cfg.enable_bialgebra) {
            const auto squares = find_matches(cur, "bialgebra");
            if (!squares.empty())
                return squares[0];
        }
        for (const std::string& rule : {std::string("copy"), std::string("pi-copy")})
            for (const Match& m : find_matches(cur, rule))
                if (shrinks(m))
                    return m;
        return std::nullopt;
    };

    while (true) {
        const auto m = next_match();
        if (!m)
            break;
        if (!budget_left()) {
            trace.budget_exhausted = true; // best-so-far result
            break;
        }
        simplify_detail::apply_step(cur, *m, trace);
    }

    trace.final_diagram = cur;
    return {cur, trace};
}

/// Replays a trace from its initial snapshot and oracle-checks the initial
/// against the final evaluation in exact (scalar-tracked) mode. Structural
/// divergence raises "replay-divergence"; traces with more than 10 boundary
/// wires exceed the oracle guard.
inline Verdict verify_trace(const Trace& t, double tolerance = kDefaultTolerance) {
    Diagram replayed = t.initial;
    for (const TraceStep& step : t.steps) {
        try {
            replayed = apply_match(replayed, step.match);
        } catch (const ZXError& e) {
            throw ZXError("replay-divergence",
                          "step '" + step.rule + "' failed to replay: " + e.what());
        }
    }
    const auto graph_equal = [](const Diagram& a, const Diagram& b) {
        if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
            return false;
        if (a.inputs() != b.inputs() || a.outputs() != b.outputs())
            return false;
        for (const auto& [id, data] : a.vertices()) {
            if (!b.has_vertex(id) || b.vertex(id) != data)
                return false;
        }
        return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin());
    };
    if (!graph_equal(replayed, t.final_diagram))
        throw ZXError("replay-divergence", "replayed diagram differs from the final snapshot");

    const std::size_t boundaries =
        t.initial.inputs().size() + t.initial.outputs().size();
    if (boundaries > 10)
        throw ZXError("size-guard-exceeded",
                      "trace verification is limited to 10 boundary wires, got " +
                          std::to_string(boundaries));
    return compare(evaluate(t.initial), evaluate(t.final_diagram), /*up_to_scalar=*/false,
                   tolerance);
}

} // namespace zxcalc
