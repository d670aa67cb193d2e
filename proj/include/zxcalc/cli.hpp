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

#include "zxcalc/circuit.hpp"
#include "zxcalc/protocols.hpp"
#include "zxcalc/rules.hpp"
#include "zxcalc/serialize.hpp"
#include "zxcalc/simplify.hpp"
#include "zxcalc/tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace zxcalc {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ZXError("syntax-error", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ZXError("syntax-error", "cannot write '" + path + "'");
    out << content;
}

/// Loads a diagram file; anything that does not look like a JSON document
/// goes through the circuit frontend instead.
inline Diagram load_diagram(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_diagram(text);
    return circuit_to_diagram(parse_circuit(text));
}

inline std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    out.precision(12);
    switch (v.kind) {
    case Verdict::Kind::Equal:
        out << "Equal";
        break;
    case Verdict::Kind::Proportional:
        out << "ProportionalBy " << v.ratio.real() << "," << v.ratio.imag();
        break;
    case Verdict::Kind::Distinct:
        out << "Distinct " << v.deviation;
        break;
    }
    return out.str();
}

inline Tensor identity_tensor(std::size_t wires) {
    Tensor t(wires, wires);
    for (std::size_t i = 0; i < t.rows(); ++i)
        t.at(i, i) = Scalar(1, 0);
    return t;
}

/// Protocol checks: each returns a list of (name, pass) lines.
struct CheckList {
    std::ostream& out;
    bool all_pass = true;

    void record(const std::string& name, bool pass) {
        out << (pass ? "PASS" : "FAIL") << " " << name << "\n";
        all_pass &= pass;
    }
};

inline void protocol_bell(CheckList& checks) {
    std::vector<Tensor> states;
    for (Phase a : {Phase(0), Phase(1)})
        for (Phase b : {Phase(0), Phase(1)})
            states.push_back(evaluate(build_bell_state(a, b)));
    bool gram_ok = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar g(0, 0);
            for (std::size_t k = 0; k < 4; ++k)
                g += std::conj(states[i].entries[k]) * states[j].entries[k];
            const Scalar want = i == j ? Scalar(2, 0) : Scalar(0, 0);
            gram_ok &= std::abs(g - want) <= 1e-9;
        }
    checks.record("bell-basis-gram-orthogonal", gram_ok);
}

inline void protocol_teleportation(CheckList& checks) {
    for (Phase a : {Phase(0), Phase(1)})
        for (Phase b : {Phase(0), Phase(1)}) {
            const std::string name = "teleportation-(" + a.str() + "," + b.str() + ")";
            const Diagram tele = build_teleportation(a, b, true);
            const bool identity =
                compare(identity_tensor(1), evaluate(tele), true, 1e-9).equivalent();
            const auto [simplified, trace] = simplify(tele);
            const bool wire =
                simplified.spider_count() == 0 && trace.steps.size() <= 20 &&
                verify_trace(trace).equal();
            checks.record(name + "-identity", identity);
            checks.record(name + "-rewrites-to-wire", wire);
        }
    const DoubledDiagram classical = build_teleportation_classical();
    checks.record("teleportation-classical-wires-identity-channel",
                  compare(identity_tensor(2), evaluate(classical.underlying), true, 1e-9)
                      .equivalent());
}

inline void protocol_mbqc(CheckList& checks, Phase alpha) {
    Tensor z_gate(1, 1);
    z_gate.at(0, 0) = Scalar(1, 0);
    z_gate.at(1, 1) = std::polar(1.0, alpha.radians());
    for (int s : {0, 1}) {
        const Tensor t = evaluate(build_mbqc_step(alpha, s, true));
        checks.record("mbqc-step-outcome-" + std::to_string(s) + "-applies-phase",
                      compare(z_gate, t, true, 1e-9).equivalent());
    }
}

inline void protocol_cluster(CheckList& checks, Phase alpha, Phase beta, Phase gamma) {
    const Tensor reference = evaluate(build_cluster_mbqc(alpha, beta, gamma, {0, 0, 0}, true));
    bool branches_agree = true;
    for (int s1 : {0, 1})
        for (int s2 : {0, 1})
            for (int s3 : {0, 1}) {
                const Tensor t =
                    evaluate(build_cluster_mbqc(alpha, beta, gamma, {s1, s2, s3}, true));
                branches_agree &= compare(reference, t, true, 1e-9).equivalent();
            }
    checks.record("cluster-mbqc-all-outcomes-agree", branches_agree);

    // Unitarity of the implemented map.
    Scalar dot00(0, 0), dot01(0, 0), dot11(0, 0);
    for (std::size_t r = 0; r < 2; ++r) {
        dot00 += std::conj(reference.at(r, 0)) * reference.at(r, 0);
        dot01 += std::conj(reference.at(r, 0)) * reference.at(r, 1);
        dot11 += std::conj(reference.at(r, 1)) * reference.at(r, 1);
    }
    const bool unitary = std::abs(dot01) <= 1e-9 && std::abs(dot00 - dot11) <= 1e-9 &&
                         std::abs(dot00) > 1e-9;
    checks.record("cluster-mbqc-unitary", unitary);

    const Diagram d = build_cluster_mbqc(alpha, beta, gamma, {0, 0, 0}, true);
    const auto [simplified, trace] = simplify(d);
    checks.record("cluster-mbqc-simplified-matches-oracle",
                  compare(evaluate(d), evaluate(simplified), false, 1e-9).equal());
}

inline void protocol_measurement(CheckList& checks) {
    for (VertexKind colour : {VertexKind::Z, VertexKind::X}) {
        const std::string name = colour == VertexKind::Z ? "Z" : "X";
        const auto same = compose_doubled(encode_spider(colour), measure_spider(colour));
        checks.record("measure-encode-" + name + "-is-identity",
                      compare(identity_tensor(1), evaluate(same.underlying), true, 1e-9)
                          .equivalent());
        const auto mixed =
            compose_doubled(encode_spider(colour), measure_spider(opposite_colour(colour)));
        const Tensor got = evaluate(mixed.underlying);
        const Tensor noise_out = evaluate(uniform_state(opposite_colour(colour)).underlying);
        const Tensor mass_in = evaluate(uniform_state(colour).underlying);
        Tensor projector(1, 1);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                projector.at(r, c) = noise_out.entries[r] * mass_in.entries[c];
        checks.record("measure-encode-" + name + "-mixed-is-noise",
                      compare(projector, got, true, 1e-9).equivalent());
    }
    // Measuring a phase state yields the uniform distribution.
    Diagram phase_state;
    {
        const VertexId s = phase_state.add_vertex(VertexKind::Z, Phase(3, 4));
        const VertexId o = phase_state.add_boundary_output();
        phase_state.add_edge(s, o);
    }
    const auto chain = compose_doubled(double_diagram(phase_state), measure_spider(VertexKind::Z));
    checks.record("measured-phase-vanishes",
                  compare(evaluate(uniform_state(VertexKind::Z).underlying),
                          evaluate(chain.underlying), true, 1e-9)
                      .equivalent());
}

inline void protocol_hopf(CheckList& checks) {
    const HopfDerivation derivation = derive_hopf_trace();
    checks.record("hopf-derivation-length", derivation.steps.size() <= 8);
    const Tensor lhs = evaluate(derivation.lhs);
    checks.record("hopf-derivation-seed-equals-lhs",
                  compare(lhs, evaluate(derivation.seed), false, 1e-9).equal());
    Diagram cur = derivation.seed;
    bool intermediates_ok = true;
    for (const Match& step : derivation.steps) {
        cur = apply_match(cur, step);
        intermediates_ok &= compare(lhs, evaluate(cur), true, 1e-9).equivalent();
    }
    checks.record("hopf-derivation-intermediates-proportional", intermediates_ok);
    checks.record("hopf-derivation-reaches-rhs",
                  compare(evaluate(cur), evaluate(derivation.rhs), false, 1e-9).equal());
}

} // namespace cli_detail

/// Command-line entry point; returns the process exit code. 0 on success
/// (for `equiv`: tensors equal or proportional), 1 on a negative verdict or
/// failed protocol, 2 on parse/validation/size errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"zxcalc - ZX-diagram rewriting and evaluation"};
    app.require_subcommand(1);

    std::string file, file_b, output, trace_path;
    std::size_t max_steps = 10000;
    bool exact = false;
    std::string protocol_name;
    std::string alpha = "1/4", beta = "1/2", gamma = "3/4";

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a diagram to its tensor");
    eval_cmd->add_option("file", file, "diagram or circuit file")->required();

    auto* simplify_cmd = app.add_subcommand("simplify", "rewrite a diagram to a smaller one");
    simplify_cmd->add_option("file", file, "diagram or circuit file")->required();
    simplify_cmd->add_option("--max-steps", max_steps, "rewrite step budget");
    simplify_cmd->add_option("--trace", trace_path, "write the rewrite trace to this file");

    auto* equiv_cmd = app.add_subcommand("equiv", "compare two diagrams");
    equiv_cmd->add_option("file-a", file, "first diagram")->required();
    equiv_cmd->add_option("file-b", file_b, "second diagram")->required();
    equiv_cmd->add_flag("--exact", exact, "require exact equality, not up-to-scalar");

    auto* double_cmd = app.add_subcommand("double", "write the doubled diagram");
    double_cmd->add_option("file", file, "diagram or circuit file")->required();

    auto* render_cmd = app.add_subcommand("render", "write a DOT rendering");
    render_cmd->add_option("file", file, "diagram or circuit file")->required();
    render_cmd->add_option("-o,--output", output, "output path (stdout when omitted)");

    auto* protocol_cmd = app.add_subcommand("protocol", "build and verify a protocol");
    protocol_cmd
        ->add_option("name", protocol_name,
                     "one of: bell, teleportation, mbqc, cluster, measurement, hopf")
        ->required();
    protocol_cmd->add_option("--alpha", alpha, "phase parameter p/q in units of pi");
    protocol_cmd->add_option("--beta", beta, "phase parameter p/q in units of pi");
    protocol_cmd->add_option("--gamma", gamma, "phase parameter p/q in units of pi");

    try {
        std::vector<std::string> cli_args(args.rbegin(), args.rend());
        app.parse(cli_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            out << format_tensor(evaluate(cli_detail::load_diagram(file)));
            return 0;
        }
        if (simplify_cmd->parsed()) {
            SimplifyConfig cfg;
            cfg.max_steps = max_steps;
            const auto [simplified, trace] = simplify(cli_detail::load_diagram(file), cfg);
            out << serialize_diagram(simplified);
            if (!trace_path.empty())
                cli_detail::write_file(trace_path, trace_to_text(trace));
            if (trace.budget_exhausted)
                err << "step budget exhausted; result is best-so-far\n";
            return 0;
        }
        if (equiv_cmd->parsed()) {
            const Tensor a = evaluate(cli_detail::load_diagram(file));
            const Tensor b = evaluate(cli_detail::load_diagram(file_b));
            const Verdict v = compare(a, b, !exact);
            out << cli_detail::verdict_text(v) << "\n";
            return v.kind == Verdict::Kind::Distinct ? 1 : 0;
        }
        if (double_cmd->parsed()) {
            out << serialize_doubled(double_diagram(cli_detail::load_diagram(file)));
            return 0;
        }
        if (render_cmd->parsed()) {
            const std::string dot = render_dot(cli_detail::load_diagram(file));
            if (output.empty())
                out << dot;
            else
                cli_detail::write_file(output, dot);
            return 0;
        }
        if (protocol_cmd->parsed()) {
            cli_detail::CheckList checks{out};
            if (protocol_name == "bell")
                cli_detail::protocol_bell(checks);
            else if (protocol_name == "teleportation")
                cli_detail::protocol_teleportation(checks);
            else if (protocol_name == "mbqc")
                cli_detail::protocol_mbqc(checks, Phase::parse(alpha));
            else if (protocol_name == "cluster")
                cli_detail::protocol_cluster(checks, Phase::parse(alpha), Phase::parse(beta),
                                             Phase::parse(gamma));
            else if (protocol_name == "measurement")
                cli_detail::protocol_measurement(checks);
            else if (protocol_name == "hopf")
                cli_detail::protocol_hopf(checks);
            else
                throw ZXError("unknown-rule", "no protocol named '" + protocol_name + "'");
            return checks.all_pass ? 0 : 1;
        }
    } catch (const ZXError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace zxcalc
