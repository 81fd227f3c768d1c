// Copyright 2026 The liectl Authors
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

#include "liectl/cli.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "liectl/errors.hpp"
#include "liectl/grassmann.hpp"
#include "liectl/json_io.hpp"
#include "liectl/lie_engine.hpp"
#include "liectl/linalg.hpp"
#include "liectl/reachability.hpp"
#include "liectl/report.hpp"
#include "liectl/su_structure.hpp"
#include "liectl/tensor_extension.hpp"

namespace liectl::cli {

namespace {

struct GlobalFlags {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    bool json_out = false;
};

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

json weight_json(const Weight& w) {
    if (w.exact()) return std::to_string(w.num()) + "/" + std::to_string(w.den());
    return w.value();
}

json spectrum_json(const StateSpectrum& spec) {
    json levels = json::array();
    for (const auto& lv : spec.levels) levels.push_back({weight_json(lv.weight), lv.multiplicity});
    return levels;
}

Report make_report(const std::string& command, const GlobalFlags& flags,
                   const std::vector<std::string>& input_paths) {
    Report r;
    r.command = command;
    r.tol = flags.tol;
    r.seed = flags.seed;
    for (const auto& p : input_paths) r.inputs.push_back({p, file_digest(p)});
    return r;
}

Report cmd_closure(const std::string& path, const GlobalFlags& flags, bool dump_basis) {
    Report r = make_report("closure", flags, {path});
    const GeneratorSystem sys = load_system_file(path);
    const AlgebraBasis closure = lie_closure(sys, flags.tol);
    const bool controllable = closure.dim_algebra == sys.ambient_dim();

    r.result = {
        {"n", sys.n},
        {"ambient", to_string(sys.ambient)},
        {"generator_count", sys.generators.size()},
        {"dim_algebra", closure.dim_algebra},
        {"ambient_dim", sys.ambient_dim()},
        {"generation_depth", closure.generation_depth},
        {"controllable", controllable},
        {"verdict", controllable ? std::string("controllable")
                                 : "subgroup(" + std::to_string(closure.dim_algebra) + ")"},
    };
    if (dump_basis) {
        json basis = json::array();
        for (const auto& b : closure.basis) basis.push_back(matrix_to_json(b));
        r.result["basis"] = std::move(basis);
    }

    r.lines.push_back("system: " + path + "  (n=" + std::to_string(sys.n) + ", " + to_string(sys.ambient) +
                      ", " + std::to_string(sys.generators.size()) + " generators)");
    r.lines.push_back("closure dimension: " + std::to_string(closure.dim_algebra) + " of ambient " +
                      std::to_string(sys.ambient_dim()) + " (depth " +
                      std::to_string(closure.generation_depth) + ")");
    r.lines.push_back("verdict: " + r.result["verdict"].get<std::string>());
    return r;
}

Report cmd_pair(const std::string& path, const GlobalFlags& flags, double reg_tol) {
    Report r = make_report("pair", flags, {path});
    const GeneratorSystem sys = load_system_file(path);
    if (sys.generators.size() < 2) throw input_error("pair: the system file must contain two generators (A, B)");
    const ComplexMatrix& a = sys.generators[0];
    const ComplexMatrix& b = sys.generators[1];

    const PairVerdict v = pair_verdict(a, b, reg_tol, flags.tol);

    json edges = json::array();
    for (const auto& [p, q] : v.graph.edges) edges.push_back({p + 1, q + 1});
    const auto labels = v.graph.component_labels();
    json isolated = json::array();
    std::vector<bool> has_edge(v.graph.n, false);
    for (const auto& [p, q] : v.graph.edges) has_edge[p] = has_edge[q] = true;
    for (std::size_t i = 0; i < v.graph.n; ++i)
        if (!has_edge[i]) isolated.push_back(i + 1);

    r.result = {
        {"n", sys.n},
        {"A", sys.names[0]},
        {"B", sys.names[1]},
        {"criterion", to_string(v.criterion)},
        {"strongly_regular", v.strongly_regular},
        {"graph", {{"nodes", v.graph.n}, {"edges", edges}, {"connected", v.graph.connected()},
                   {"isolated_nodes", isolated}}},
    };
    if (v.criterion == PairCriterion::inconclusive_then_closure) r.result["closure_dim"] = v.closure_dim;

    r.lines.push_back("pair: A='" + sys.names[0] + "', B='" + sys.names[1] + "' in su(" +
                      std::to_string(sys.n) + ")");
    std::ostringstream graph_line;
    graph_line << "coupling graph: " << edges.size() << " edges " << edges.dump()
               << (v.graph.connected() ? " (connected)" : " (disconnected)");
    r.lines.push_back(graph_line.str());
    if (!isolated.empty()) r.lines.push_back("isolated nodes: " + isolated.dump());
    r.lines.push_back(std::string("A strongly regular: ") + (v.strongly_regular ? "yes" : "no"));
    std::string verdict_line = "verdict: " + std::string(to_string(v.criterion));
    if (v.criterion == PairCriterion::inconclusive_then_closure)
        verdict_line += " (closure dimension " + std::to_string(v.closure_dim) + ")";
    r.lines.push_back(verdict_line);
    return r;
}

Report cmd_grassmann(const std::string& path, std::size_t k, const GlobalFlags& flags) {
    Report r = make_report("grassmann", flags, {path});
    const GeneratorSystem sys = load_system_file(path);
    const GrassmannVerdict v = grassmann_controllable(sys, k, flags.tol);

    r.result = {
        {"n", sys.n},
        {"k", k},
        {"controllable", v.controllable},
        {"required_dim", v.required_dim},
        {"achieved_dim", v.achieved_dim},
        {"closure_dim", v.closure_dim},
        {"margin", v.margin},
    };
    r.lines.push_back("orbit: rank-" + std::to_string(k) + " projectors in C^" + std::to_string(sys.n));
    r.lines.push_back("block span: " + std::to_string(v.achieved_dim) + " of " +
                      std::to_string(v.required_dim) + " (closure dim " + std::to_string(v.closure_dim) +
                      ")");
    r.lines.push_back("verdict: " + std::string(v.controllable ? "controllable" : "not controllable") +
                      ", margin " + format_double(v.margin));
    return r;
}

ComplexMatrix random_outside_candidate(std::size_t m, std::size_t n, std::uint64_t seed) {
    const std::size_t mn = m * n;
    const AlgebraBasis sub = product_subalgebra(m, n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ComplexMatrix h(mn);
        for (std::size_t r = 0; r < mn; ++r) {
            h(r, r) = gauss(rng);
            for (std::size_t c = r + 1; c < mn; ++c) {
                const cplx z{gauss(rng), gauss(rng)};
                h(r, c) = z;
                h(c, r) = std::conj(z);
            }
        }
        ComplexMatrix x = cplx{0.0, 1.0} * h;
        // keep only the component orthogonal to the product subalgebra
        for (const auto& b : sub.basis) {
            const double coeff = frobenius_real_inner(b, x);
            x -= cplx{coeff, 0.0} * b;
        }
        const double nrm = frobenius_norm(x);
        if (nrm > 1e-8) return cplx{1.0 / nrm, 0.0} * x;
    }
    throw std::logic_error("random candidate generation failed");
}

Report cmd_extend(std::size_t m, std::size_t n, bool have_mn, const std::vector<std::size_t>& chain,
                  const std::string& candidate_path, bool random_candidate, const GlobalFlags& flags) {
    std::vector<std::string> inputs;
    if (!candidate_path.empty()) inputs.push_back(candidate_path);
    Report r = make_report("extend", flags, inputs);
    r.result = json::object();

    if (have_mn) {
        std::optional<ComplexMatrix> candidate;
        std::string source = "default";
        if (!candidate_path.empty() && random_candidate)
            throw input_error("extend: --candidate and --random are mutually exclusive");
        if (!candidate_path.empty()) {
            candidate = load_matrix_file(candidate_path);
            source = "file";
        } else if (random_candidate) {
            candidate = random_outside_candidate(m, n, flags.seed);
            source = "random";
        }

        const ExtensionResult ext = minimal_extension(m, n, candidate);
        r.result["m"] = m;
        r.result["n"] = n;
        r.result["target_dim"] = dim_check_tensor(m, n);
        r.result["candidate_source"] = source;
        r.result["verified"] = ext.verified;
        r.result["verification_skipped"] = ext.verification_skipped;
        if (!ext.verification_skipped) r.result["closure_dim"] = ext.closure_dim;
        r.result["element"] = matrix_to_json(ext.element);

        r.lines.push_back("product subalgebra u(" + std::to_string(m) + ")+u(" + std::to_string(n) +
                          ") inside u(" + std::to_string(m * n) + "), target dim " +
                          std::to_string(dim_check_tensor(m, n)));
        if (ext.verification_skipped)
            r.lines.push_back("extension element chosen (" + source + "); closure check skipped: unverified (size)");
        else
            r.lines.push_back("extension element (" + source + ") closure dim " +
                              std::to_string(ext.closure_dim) + " -> " +
                              (ext.verified ? "verified" : "NOT full"));
    }

    if (!chain.empty()) {
        const ChainPlan plan = chain_plan(TensorFactorization{chain});
        r.result["chain"] = {
            {"dims", chain},
            {"extension_count", plan.extension_count},
            {"join_tree", plan.tree.to_string()},
        };
        std::ostringstream line;
        line << "chain of " << chain.size() << " factors: " << plan.extension_count
             << " extension elements, join tree " << plan.tree.to_string();
        r.lines.push_back(line.str());
    }
    return r;
}

Report cmd_steer(const std::string& sys_path, const std::string& sched_path, const std::string& rho_path,
                 const GlobalFlags& flags) {
    std::vector<std::string> inputs = {sys_path, sched_path};
    if (!rho_path.empty()) inputs.push_back(rho_path);
    Report r = make_report("steer", flags, inputs);

    Schedule sched;
    sched.system = load_system_file(sys_path);
    sched.word = load_schedule_word(sched_path);

    const ComplexMatrix u = evaluate(sched);
    const std::size_t n = sched.system.n;
    const double identity_fidelity = std::abs(trace(u)) / static_cast<double>(n);
    const double unitarity_residual =
        frobenius_distance(adjoint(u) * u, ComplexMatrix::identity(n));

    r.result = {
        {"n", n},
        {"terms", sched.word.size()},
        {"word_sign", to_string(classify(sched.word))},
        {"bang_bang_positive", sched.bang_bang_positive()},
        {"unitary", matrix_to_json(u)},
        {"identity_fidelity", identity_fidelity},
        {"unitarity_residual", unitarity_residual},
    };
    r.lines.push_back("schedule: " + std::to_string(sched.word.size()) + " segments, sign " +
                      to_string(classify(sched.word)) +
                      (sched.bang_bang_positive() ? "" : " (not a bang-bang reachable word; evaluated as a group element)"));
    r.lines.push_back("identity fidelity |tr U|/n = " + format_double(identity_fidelity));

    if (!rho_path.empty()) {
        const ComplexMatrix rho0 = load_matrix_file(rho_path);
        const ComplexMatrix rho1 = adjoint_flow(rho0, sched);
        r.result["rho_out"] = matrix_to_json(rho1);
        r.result["spectrum_preserved"] = same_orbit(rho0, rho1);
        r.lines.push_back(std::string("adjoint flow applied; spectrum preserved: ") +
                          (same_orbit(rho0, rho1) ? "yes" : "no"));
    }
    return r;
}

Report cmd_states(const std::string& path1, const std::string& path2, const GlobalFlags& flags) {
    Report r = make_report("states", flags, {path1, path2});
    const DiscreteState s1 = load_state_file(path1);
    const DiscreteState s2 = load_state_file(path2);

    const StateSpectrum sp1 = spectrum(s1);
    const StateSpectrum sp2 = spectrum(s2);
    const bool eq = sp1.equals(sp2);

    r.result = {
        {"equivalent", eq},
        {"spectrum1", spectrum_json(sp1)},
        {"spectrum2", spectrum_json(sp2)},
    };
    if (eq) {
        const auto witness = transport_witness(s1, s2);
        json pairs = json::array();
        for (const auto& p : *witness) pairs.push_back({p.from, p.to});
        r.result["witness"] = std::move(pairs);
    } else {
        r.result["witness"] = nullptr;
    }

    r.lines.push_back("spectrum 1: " + spectrum_json(sp1).dump());
    r.lines.push_back("spectrum 2: " + spectrum_json(sp2).dump());
    r.lines.push_back(std::string("equivalent: ") + (eq ? "yes" : "no"));
    if (eq) r.lines.push_back("transport witness: " + r.result["witness"].dump());
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"controllability analysis for right-invariant systems on compact matrix Lie groups"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--tol", flags.tol, "span/closure tolerance")->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for randomized candidates")->capture_default_str();
    app.add_flag("--json", flags.json_out, "emit the machine-readable report");
    app.fallthrough();

    std::string sys_path, sched_path, rho_path, candidate_path, state1, state2;
    std::size_t k = 0, m = 0, n = 0;
    bool dump_basis = false, random_candidate = false;
    double reg_tol = 1e-8;
    std::vector<std::size_t> chain;

    CLI::App* closure = app.add_subcommand("closure", "Lie closure and transformation controllability");
    closure->add_option("file", sys_path, "generator system JSON file")->required();
    closure->add_flag("--dump-basis", dump_basis, "include the closure basis matrices in the report");

    CLI::App* pair = app.add_subcommand("pair", "generator-pair criteria in su(n)");
    pair->add_option("file", sys_path, "system file whose first two generators are A and B")->required();
    pair->add_option("--regularity-tol", reg_tol, "eigenvalue-gap tolerance")->capture_default_str();

    CLI::App* grassmann = app.add_subcommand("grassmann", "orbit controllability on rank-k projectors");
    grassmann->add_option("file", sys_path, "generator system JSON file")->required();
    grassmann->add_option("--k", k, "projector rank")->required();

    CLI::App* extend = app.add_subcommand("extend", "minimal generator extension across tensor products");
    CLI::Option* opt_m = extend->add_option("m", m, "first factor dimension");
    CLI::Option* opt_n = extend->add_option("n", n, "second factor dimension");
    extend->add_option("--chain", chain, "factor dimensions d1,d2,... for a multi-factor plan")->delimiter(',');
    extend->add_option("--candidate", candidate_path, "JSON file with the extension candidate matrix");
    extend->add_flag("--random", random_candidate, "draw the candidate at random (uses --seed)");

    CLI::App* steer = app.add_subcommand("steer", "evaluate a bang-bang schedule");
    steer->add_option("system", sys_path, "generator system JSON file")->required();
    steer->add_option("schedule", sched_path, "schedule JSON file")->required();
    steer->add_option("--rho", rho_path, "density matrix file for the adjoint flow");

    CLI::App* states = app.add_subcommand("states", "spectrum equivalence of discrete mixed states");
    states->add_option("state1", state1, "first state JSON file")->required();
    states->add_option("state2", state2, "second state JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "liectl: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        Report report;
        if (app.got_subcommand(closure)) {
            report = cmd_closure(sys_path, flags, dump_basis);
        } else if (app.got_subcommand(pair)) {
            report = cmd_pair(sys_path, flags, reg_tol);
        } else if (app.got_subcommand(grassmann)) {
            report = cmd_grassmann(sys_path, k, flags);
        } else if (app.got_subcommand(extend)) {
            const bool have_mn = opt_m->count() > 0 || opt_n->count() > 0;
            if (have_mn && (opt_m->count() == 0 || opt_n->count() == 0))
                throw input_error("extend: both m and n are required");
            if (!have_mn && chain.empty())
                throw input_error("extend: give factor dims m n, or --chain d1,d2,...");
            report = cmd_extend(m, n, have_mn, chain, candidate_path, random_candidate, flags);
        } else if (app.got_subcommand(steer)) {
            report = cmd_steer(sys_path, sched_path, rho_path, flags);
        } else if (app.got_subcommand(states)) {
            report = cmd_states(state1, state2, flags);
        }
        const auto t1 = std::chrono::steady_clock::now();
        report.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (flags.json_out)
            out << report.to_json().dump(2) << "\n";
        else
            out << report.render_text();
        return 0;
    } catch (const input_error& e) {
        err << "liectl: input error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "liectl: precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "liectl: internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace liectl::cli
