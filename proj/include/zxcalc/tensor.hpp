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
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace zxcalc {

/// Intermediate tensors larger than 2^22 entries abort evaluation.
inline constexpr std::size_t kMaxTensorLegs = 22;

/// Default absolute tolerance for entrywise tensor comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense complex tensor over a diagram's boundary wires, stored as a
/// 2^m x 2^n matrix (m outputs, n inputs). Output bit 0 (= boundary list
/// position 0) is the most significant row bit, and likewise for inputs.
struct Tensor {
    std::size_t outputs = 0;
    std::size_t inputs = 0;
    std::vector<Scalar> entries; // size 2^(outputs+inputs), row-major

    Tensor() : entries(1, Scalar(1.0, 0.0)) {}
    Tensor(std::size_t m, std::size_t n)
        : outputs(m), inputs(n), entries(std::size_t(1) << (m + n), Scalar(0.0, 0.0)) {}

    std::size_t rows() const { return std::size_t(1) << outputs; }
    std::size_t cols() const { return std::size_t(1) << inputs; }

    Scalar& at(std::size_t row, std::size_t col) { return entries[row * cols() + col]; }
    const Scalar& at(std::size_t row, std::size_t col) const { return entries[row * cols() + col]; }

    bool same_shape(const Tensor& other) const {
        return outputs == other.outputs && inputs == other.inputs;
    }
};

/// Result of a tensor comparison. `Proportional` carries the nonzero ratio
/// b/a; `Distinct` carries the residual max-abs deviation.
struct Verdict {
    enum class Kind { Equal, Proportional, Distinct };
    Kind kind = Kind::Equal;
    Scalar ratio{1.0, 0.0};
    double deviation = 0.0;

    bool equal() const { return kind == Kind::Equal; }
    bool equivalent() const { return kind != Kind::Distinct; }
};

enum class ContractionOrder { Greedy, Sequential };

namespace detail {

/// Working tensor during contraction: `legs` are distinct integer labels,
/// legs[0] is the most significant index bit.
struct Chunk {
    std::vector<int> legs;
    std::vector<Scalar> data;

    static Chunk scalar_chunk(Scalar value) {
        Chunk c;
        c.data.assign(1, value);
        return c;
    }
};

inline void check_leg_guard(std::size_t legs) {
    if (legs > kMaxTensorLegs)
        throw ZXError("size-guard-exceeded",
                      "intermediate tensor with 2^" + std::to_string(legs) + " entries");
}

/// In-place Hadamard applied to one leg.
inline void apply_hadamard(Chunk& c, std::size_t pos) {
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t shift = c.legs.size() - 1 - pos;
    const std::size_t bit = std::size_t(1) << shift;
    for (std::size_t idx = 0; idx < c.data.size(); ++idx) {
        if (idx & bit)
            continue;
        const Scalar lo = c.data[idx];
        const Scalar hi = c.data[idx | bit];
        c.data[idx] = (lo + hi) * inv_sqrt2;
        c.data[idx | bit] = (lo - hi) * inv_sqrt2;
    }
}

/// Tensor of a single generator with the given leg labels. Spider and H-box
/// tensors are symmetric in their legs, so no input/output split is needed.
inline Chunk generator_chunk(VertexKind kind, Phase phase, const std::vector<int>& legs) {
    check_leg_guard(legs.size());
    Chunk c;
    c.legs = legs;
    const std::size_t size = std::size_t(1) << legs.size();
    c.data.assign(size, Scalar(0.0, 0.0));
    const Scalar phase_factor = std::polar(1.0, phase.radians());
    switch (kind) {
    case VertexKind::Z:
    case VertexKind::X:
        // |0...0><0...0| + e^{i a} |1...1><1...1|; a 0-legged spider is the
        // number 1 + e^{i a}.
        c.data[0] += Scalar(1.0, 0.0);
        c.data[size - 1] += phase_factor;
        if (kind == VertexKind::X)
            for (std::size_t p = 0; p < legs.size(); ++p)
                apply_hadamard(c, p);
        break;
    case VertexKind::HBox: {
        if (legs.size() != 2)
            throw ZXError("invalid-degree", "H-box tensor requires exactly 2 legs");
        const double s = 1.0 / std::sqrt(2.0);
        c.data = {Scalar(s, 0.0), Scalar(s, 0.0), Scalar(s, 0.0), Scalar(-s, 0.0)};
        break;
    }
    case VertexKind::Boundary:
        throw ZXError("invalid-degree", "boundary vertices have no tensor");
    }
    return c;
}

/// Contracts all repeated labels inside one chunk (self-loop traces).
inline void trace_repeated(Chunk& c) {
    while (true) {
        std::size_t p = 0, q = 0;
        bool found = false;
        for (std::size_t i = 0; i < c.legs.size() && !found; ++i)
            for (std::size_t j = i + 1; j < c.legs.size() && !found; ++j)
                if (c.legs[i] == c.legs[j]) {
                    p = i;
                    q = j;
                    found = true;
                }
        if (!found)
            return;
        const std::size_t n = c.legs.size();
        Chunk traced;
        for (std::size_t i = 0; i < n; ++i)
            if (i != p && i != q)
                traced.legs.push_back(c.legs[i]);
        traced.data.assign(std::size_t(1) << traced.legs.size(), Scalar(0.0, 0.0));
        const std::size_t bit_p = std::size_t(1) << (n - 1 - p);
        const std::size_t bit_q = std::size_t(1) << (n - 1 - q);
        for (std::size_t idx = 0; idx < c.data.size(); ++idx) {
            const bool vp = idx & bit_p;
            const bool vq = idx & bit_q;
            if (vp != vq)
                continue;
            std::size_t out = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == p || i == q)
                    continue;
                out = (out << 1) | ((idx >> (n - 1 - i)) & 1);
            }
            traced.data[out] += c.data[idx];
        }
        c = std::move(traced);
    }
}

/// Contracts two chunks over all labels they share.
inline Chunk contract(const Chunk& a, const Chunk& b) {
    std::vector<int> shared;
    for (int l : a.legs)
        if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end())
            shared.push_back(l);

    std::vector<std::size_t> a_free, b_free, a_shared, b_shared;
    for (std::size_t i = 0; i < a.legs.size(); ++i) {
        if (std::find(shared.begin(), shared.end(), a.legs[i]) != shared.end())
            a_shared.push_back(i);
        else
            a_free.push_back(i);
    }
    for (std::size_t i = 0; i < b.legs.size(); ++i) {
        if (std::find(shared.begin(), shared.end(), b.legs[i]) != shared.end())
            b_shared.push_back(i);
        else
            b_free.push_back(i);
    }
    // Align b's shared positions with a's shared label order.
    std::vector<std::size_t> b_shared_aligned;
    for (std::size_t i : a_shared) {
        const int label = a.legs[i];
        for (std::size_t j = 0; j < b.legs.size(); ++j)
            if (b.legs[j] == label) {
                b_shared_aligned.push_back(j);
                break;
            }
    }

    Chunk result;
    for (std::size_t i : a_free)
        result.legs.push_back(a.legs[i]);
    for (std::size_t i : b_free)
        result.legs.push_back(b.legs[i]);
    check_leg_guard(result.legs.size());
    result.data.assign(std::size_t(1) << result.legs.size(), Scalar(0.0, 0.0));

    const std::size_t na = a.legs.size(), nb = b.legs.size();
    const std::size_t ra = a_free.size(), rb = b_free.size(), s = shared.size();
    for (std::size_t fa = 0; fa < (std::size_t(1) << ra); ++fa) {
        for (std::size_t fb = 0; fb < (std::size_t(1) << rb); ++fb) {
            Scalar sum(0.0, 0.0);
            for (std::size_t sh = 0; sh < (std::size_t(1) << s); ++sh) {
                std::size_t ia = 0, ib = 0;
                for (std::size_t i = 0; i < ra; ++i)
                    if ((fa >> (ra - 1 - i)) & 1)
                        ia |= std::size_t(1) << (na - 1 - a_free[i]);
                for (std::size_t i = 0; i < s; ++i)
                    if ((sh >> (s - 1 - i)) & 1) {
                        ia |= std::size_t(1) << (na - 1 - a_shared[i]);
                        ib |= std::size_t(1) << (nb - 1 - b_shared_aligned[i]);
                    }
                for (std::size_t i = 0; i < rb; ++i)
                    if ((fb >> (rb - 1 - i)) & 1)
                        ib |= std::size_t(1) << (nb - 1 - b_free[i]);
                sum += a.data[ia] * b.data[ib];
            }
            result.data[(fa << rb) | fb] = sum;
        }
    }
    return result;
}

/// Reorders legs into `target` order (a permutation of the current legs).
inline Chunk permute(const Chunk& c, const std::vector<int>& target) {
    if (target == c.legs)
        return c;
    std::vector<std::size_t> src_pos;
    for (int label : target) {
        const auto it = std::find(c.legs.begin(), c.legs.end(), label);
        if (it == c.legs.end())
            throw ZXError("invalid-diagram", "internal: missing leg during permutation");
        src_pos.push_back(static_cast<std::size_t>(it - c.legs.begin()));
    }
    const std::size_t n = c.legs.size();
    Chunk out;
    out.legs = target;
    out.data.assign(c.data.size(), Scalar(0.0, 0.0));
    for (std::size_t idx = 0; idx < c.data.size(); ++idx) {
        std::size_t dst = 0;
        for (std::size_t i = 0; i < n; ++i)
            dst = (dst << 1) | ((idx >> (n - 1 - src_pos[i])) & 1);
        out.data[dst] = c.data[idx];
    }
    return out;
}

inline bool share_leg(const Chunk& a, const Chunk& b) {
    for (int l : a.legs)
        if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end())
            return true;
    return false;
}

inline std::size_t contraction_cost(const Chunk& a, const Chunk& b) {
    std::size_t shared = 0;
    for (int l : a.legs)
        if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end())
            ++shared;
    return a.legs.size() + b.legs.size() - 2 * shared;
}

} // namespace detail

/// Tensor of a single generator with the given numbers of input and output
/// legs. H-boxes require in + out = 2; boundary vertices have no tensor.
inline Tensor vertex_tensor(VertexKind kind, Phase phase, std::size_t in_degree, std::size_t out_degree) {
    if (kind == VertexKind::Boundary)
        throw ZXError("invalid-degree", "boundary vertices have no tensor");
    if (kind == VertexKind::HBox && in_degree + out_degree != 2)
        throw ZXError("invalid-degree", "H-box requires total degree 2, got " +
                                            std::to_string(in_degree + out_degree));
    std::vector<int> legs(in_degree + out_degree);
    for (std::size_t i = 0; i < legs.size(); ++i)
        legs[i] = static_cast<int>(i);
    const auto chunk = detail::generator_chunk(kind, phase, legs);
    Tensor t(out_degree, in_degree);
    t.entries = chunk.data;
    return t;
}

/// Evaluates a diagram to its linear map by contracting the tensor network
/// of its generators along all edges (self-loops are traced) and multiplying
/// by the tracked scalar. The result is indexed by the diagram's boundary
/// order.
inline Tensor evaluate(const Diagram& d, ContractionOrder order = ContractionOrder::Greedy) {
    d.check_valid();

    // One label per edge instance; boundary-boundary edges become explicit
    // identity chunks with a fresh label for the second endpoint.
    std::map<VertexId, std::vector<int>> legs_of;
    std::map<VertexId, int> boundary_label;
    std::vector<detail::Chunk> chunks;
    int next_label = 0;

    const auto is_boundary = [&](VertexId v) { return d.kind(v) == VertexKind::Boundary; };

    for (const Edge& e : d.edges()) {
        const int label = next_label++;
        if (is_boundary(e.a) && is_boundary(e.b)) {
            const int label2 = next_label++;
            boundary_label[e.a] = label;
            boundary_label[e.b] = label2;
            detail::Chunk id_chunk;
            id_chunk.legs = {label, label2};
            id_chunk.data = {Scalar(1, 0), Scalar(0, 0), Scalar(0, 0), Scalar(1, 0)};
            chunks.push_back(std::move(id_chunk));
        } else if (is_boundary(e.a) || is_boundary(e.b)) {
            const VertexId b = is_boundary(e.a) ? e.a : e.b;
            const VertexId v = e.other(b);
            boundary_label[b] = label;
            legs_of[v].push_back(label);
        } else if (e.loop()) {
            legs_of[e.a].push_back(label);
            legs_of[e.a].push_back(label);
        } else {
            legs_of[e.a].push_back(label);
            legs_of[e.b].push_back(label);
        }
    }

    for (const auto& [id, data] : d.vertices()) {
        if (data.kind == VertexKind::Boundary)
            continue;
        auto chunk = detail::generator_chunk(data.kind, data.phase, legs_of[id]);
        detail::trace_repeated(chunk);
        chunks.push_back(std::move(chunk));
    }

    if (chunks.empty())
        chunks.push_back(detail::Chunk::scalar_chunk(Scalar(1.0, 0.0)));

    // Contract bonds until none remain, then outer-multiply the disconnected
    // remainders.
    while (chunks.size() > 1) {
        std::size_t best_i = 0, best_j = 0;
        bool found = false;
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < chunks.size() && !(found && order == ContractionOrder::Sequential); ++i) {
            for (std::size_t j = i + 1; j < chunks.size(); ++j) {
                if (!detail::share_leg(chunks[i], chunks[j]))
                    continue;
                const std::size_t cost = detail::contraction_cost(chunks[i], chunks[j]);
                if (!found || cost < best_cost) {
                    best_i = i;
                    best_j = j;
                    best_cost = cost;
                    found = true;
                }
                if (order == ContractionOrder::Sequential)
                    break;
            }
        }
        if (!found)
            break;
        auto merged = detail::contract(chunks[best_i], chunks[best_j]);
        chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(best_j));
        chunks[best_i] = std::move(merged);
    }
    while (chunks.size() > 1) {
        auto merged = detail::contract(chunks[0], chunks[1]); // outer product
        chunks.erase(chunks.begin() + 1);
        chunks[0] = std::move(merged);
    }

    detail::Chunk result = std::move(chunks[0]);

    std::vector<int> target;
    for (VertexId v : d.outputs())
        target.push_back(boundary_label.at(v));
    for (VertexId v : d.inputs())
        target.push_back(boundary_label.at(v));
    result = detail::permute(result, target);

    Tensor t(d.outputs().size(), d.inputs().size());
    t.entries = std::move(result.data);
    for (auto& entry : t.entries)
        entry *= d.scalar();
    return t;
}

/// Entrywise comparison. `exact` requires max-abs difference <= tolerance;
/// `up_to_scalar` admits one global nonzero complex ratio, induced from the
/// largest-magnitude entry of `a`. Zero tensors compare Equal to zero
/// tensors only.
inline Verdict compare(const Tensor& a, const Tensor& b, bool up_to_scalar,
                       double tolerance = kDefaultTolerance) {
    if (!a.same_shape(b))
        throw ZXError("shape-mismatch", "tensors have different shapes");

    const auto max_abs_diff = [&](Scalar ratio) {
        double dev = 0.0;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            dev = std::max(dev, std::abs(b.entries[i] - ratio * a.entries[i]));
        return dev;
    };

    if (!up_to_scalar) {
        const double dev = max_abs_diff(Scalar(1.0, 0.0));
        if (dev <= tolerance)
            return Verdict{Verdict::Kind::Equal, Scalar(1.0, 0.0), dev};
        return Verdict{Verdict::Kind::Distinct, Scalar(1.0, 0.0), dev};
    }

    std::size_t ref = 0;
    double ref_mag = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (std::abs(a.entries[i]) > ref_mag) {
            ref_mag = std::abs(a.entries[i]);
            ref = i;
        }
    if (ref_mag <= tolerance) {
        // a is the zero tensor: equal only to another zero tensor.
        double dev = 0.0;
        for (const Scalar& e : b.entries)
            dev = std::max(dev, std::abs(e));
        if (dev <= tolerance)
            return Verdict{Verdict::Kind::Equal, Scalar(1.0, 0.0), dev};
        return Verdict{Verdict::Kind::Distinct, Scalar(1.0, 0.0), dev};
    }
    const Scalar ratio = b.entries[ref] / a.entries[ref];
    if (std::abs(ratio) <= tolerance)
        return Verdict{Verdict::Kind::Distinct, Scalar(1.0, 0.0), max_abs_diff(Scalar(1.0, 0.0))};
    const double dev = max_abs_diff(ratio);
    if (dev > tolerance)
        return Verdict{Verdict::Kind::Distinct, Scalar(1.0, 0.0), max_abs_diff(Scalar(1.0, 0.0))};
    if (std::abs(ratio - Scalar(1.0, 0.0)) <= tolerance)
        return Verdict{Verdict::Kind::Equal, Scalar(1.0, 0.0), dev};
    return Verdict{Verdict::Kind::Proportional, ratio, dev};
}

/// Plain-text rendering of a tensor as a complex matrix, row per line.
inline std::string format_tensor(const Tensor& t) {
    std::ostringstream out;
    out.precision(9);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const Scalar v = t.at(r, c);
            if (c > 0)
                out << "  ";
            out << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace zxcalc
