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

// Randomized diagrams with a hand-planted instance of a given rewrite rule,
// used by the soundness sweeps.

#pragma once

#include "zxcalc/diagram.hpp"
#include "zxcalc/rules.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace zxtest {

using zxcalc::Diagram;
using zxcalc::Phase;
using zxcalc::VertexId;
using zxcalc::VertexKind;

namespace planted_detail {

inline Phase random_phase(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(0, 7);
    return Phase(num(rng), 4);
}

inline VertexKind random_colour(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    return coin(rng) ? VertexKind::Z : VertexKind::X;
}

struct Context {
    Diagram d;
    std::vector<VertexId> spiders;
};

inline Context make_context(std::mt19937_64& rng) {
    Context ctx;
    std::uniform_int_distribution<std::size_t> count(0, 3);
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
        ctx.spiders.push_back(ctx.d.add_vertex(random_colour(rng), random_phase(rng)));
    if (ctx.spiders.size() >= 2) {
        std::uniform_int_distribution<std::size_t> edges(0, 2);
        std::uniform_int_distribution<std::size_t> pick(0, ctx.spiders.size() - 1);
        for (std::size_t i = edges(rng); i > 0; --i)
            ctx.d.add_edge(ctx.spiders[pick(rng)], ctx.spiders[pick(rng)]);
    }
    return ctx;
}

/// Hangs one fresh wire off `v`: either a boundary or a context spider.
inline void attach_leg(Context& ctx, std::mt19937_64& rng, VertexId v) {
    std::uniform_int_distribution<int> die(0, 3);
    const int roll = die(rng);
    if (roll == 0 && !ctx.spiders.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, ctx.spiders.size() - 1);
        const VertexId s = ctx.spiders[pick(rng)];
        if (ctx.d.degree(s) < 6) {
            ctx.d.add_edge(v, s);
            return;
        }
    }
    std::uniform_int_distribution<int> coin(0, 1);
    const VertexId b = coin(rng) ? ctx.d.add_boundary_input() : ctx.d.add_boundary_output();
    ctx.d.add_edge(v, b);
}

inline void attach_legs(Context& ctx, std::mt19937_64& rng, VertexId v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        attach_leg(ctx, rng, v);
}

} // namespace planted_detail

/// A valid random diagram guaranteed to contain at least one instance of the
/// named rule.
inline Diagram plant_rule(std::mt19937_64& rng, const std::string& rule_id) {
    using namespace planted_detail;
    Context ctx = make_context(rng);
    Diagram& d = ctx.d;
    std::uniform_int_distribution<std::size_t> small(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);

    if (rule_id == "fusion") {
        const VertexKind colour = random_colour(rng);
        const VertexId u = d.add_vertex(colour, random_phase(rng));
        const VertexId v = d.add_vertex(colour, random_phase(rng));
        std::uniform_int_distribution<std::size_t> wires(1, 3);
        for (std::size_t i = wires(rng); i > 0; --i)
            d.add_edge(u, v);
        attach_legs(ctx, rng, u, small(rng));
        attach_legs(ctx, rng, v, small(rng));
    } else if (rule_id == "identity") {
        const VertexId v = d.add_vertex(random_colour(rng), Phase(0));
        attach_legs(ctx, rng, v, 2);
    } else if (rule_id == "self-loop") {
        const VertexId v = d.add_vertex(random_colour(rng), random_phase(rng));
        d.add_edge(v, v);
        attach_legs(ctx, rng, v, small(rng));
    } else if (rule_id == "hopf") {
        const VertexId z = d.add_vertex(VertexKind::Z, random_phase(rng));
        const VertexId x = d.add_vertex(VertexKind::X, random_phase(rng));
        std::uniform_int_distribution<std::size_t> wires(2, 3);
        for (std::size_t i = wires(rng); i > 0; --i)
            d.add_edge(z, x);
        attach_legs(ctx, rng, z, small(rng));
        attach_legs(ctx, rng, x, small(rng));
    } else if (rule_id == "bialgebra") {
        const VertexId z1 = d.add_vertex(VertexKind::Z, Phase(0));
        const VertexId z2 = d.add_vertex(VertexKind::Z, Phase(0));
        const VertexId x1 = d.add_vertex(VertexKind::X, Phase(0));
        const VertexId x2 = d.add_vertex(VertexKind::X, Phase(0));
        d.add_edge(z1, x1);
        d.add_edge(z1, x2);
        d.add_edge(z2, x1);
        d.add_edge(z2, x2);
        // One outer leg per corner. Occasionally the pair of same-colour
        // corners shares its outer legs as one connecting wire.
        if (coin(rng)) {
            d.add_edge(z1, z2);
        } else {
            attach_leg(ctx, rng, z1);
            attach_leg(ctx, rng, z2);
        }
        if (coin(rng)) {
            d.add_edge(x1, x2);
        } else {
            attach_leg(ctx, rng, x1);
            attach_leg(ctx, rng, x2);
        }
    } else if (rule_id == "copy") {
        const VertexKind colour = random_colour(rng);
        const VertexId s = d.add_vertex(colour, coin(rng) ? Phase(1) : Phase(0));
        const VertexId t = d.add_vertex(opposite_colour(colour), Phase(0));
        d.add_edge(s, t);
        std::uniform_int_distribution<std::size_t> others(0, 3);
        attach_legs(ctx, rng, t, others(rng));
    } else if (rule_id == "pi-copy") {
        const VertexKind colour = random_colour(rng);
        const VertexId x = d.add_vertex(colour, Phase(1));
        const VertexId t = d.add_vertex(opposite_colour(colour), random_phase(rng));
        d.add_edge(x, t);
        attach_leg(ctx, rng, x); // the wire the NOT sits on
        std::uniform_int_distribution<std::size_t> others(0, 3);
        attach_legs(ctx, rng, t, others(rng));
    } else if (rule_id == "colour-change") {
        const VertexId v = d.add_vertex(random_colour(rng), random_phase(rng));
        std::uniform_int_distribution<std::size_t> legs(0, 3);
        attach_legs(ctx, rng, v, legs(rng));
    } else if (rule_id == "h-cancel") {
        const VertexId h1 = d.add_vertex(VertexKind::HBox);
        const VertexId h2 = d.add_vertex(VertexKind::HBox);
        d.add_edge(h1, h2);
        if (coin(rng) && !ctx.spiders.empty()) {
            // Both outer legs on one spider: cancelling leaves a self-loop.
            std::uniform_int_distribution<std::size_t> pick(0, ctx.spiders.size() - 1);
            const VertexId s = ctx.spiders[pick(rng)];
            if (d.degree(s) + 2 <= 6) {
                d.add_edge(h1, s);
                d.add_edge(h2, s);
            } else {
                attach_leg(ctx, rng, h1);
                attach_leg(ctx, rng, h2);
            }
        } else {
            attach_leg(ctx, rng, h1);
            attach_leg(ctx, rng, h2);
        }
    } else {
        throw zxcalc::ZXError("unknown-rule", "cannot plant '" + rule_id + "'");
    }
    return d;
}

inline std::optional<std::pair<Diagram, std::string>> plant_any_rule(std::mt19937_64& rng) {
    const auto& catalog = zxcalc::rule_catalog();
    std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
    const std::string id = catalog[pick(rng)].id;
    Diagram d = plant_rule(rng, id);
    if (!d.is_valid())
        return std::nullopt;
    return std::make_pair(std::move(d), id);
}

} // namespace zxtest
