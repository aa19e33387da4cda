// Copyright 2026 The qca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qca/error.h"
#include "qca/gallery.h"
#include "qca/io.h"
#include "qca/kari.h"
#include "qca/star_algebra.h"

namespace qca {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;

struct Options {
    std::string spec;
    std::string state_a;
    std::string state_b;
    std::string out;
    std::string dir;
    int window = 6;
    bool window_given = false;
    double tol = kDefaultTol;
    uint64_t seed = 0;
    int steps = 1;
    int max_radius = -1;
    int64_t probe = 0;
    std::vector<int64_t> context;
};

class Emitter {
   public:
    Emitter(const Options &opt, std::ostream &out) : opt_(opt), out_(out) {
    }
    void emit(const json &j) {
        emit_text(j.dump(2) + "\n");
    }
    void emit_text(const std::string &text) {
        if (opt_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.out, std::ios::binary);
        if (!f) {
            throw QcaError(ErrorKind::ParseError, "cannot write '" + opt_.out + "'");
        }
        f << text;
    }

   private:
    const Options &opt_;
    std::ostream &out_;
};

json error_json(const std::string &kind, const std::string &message) {
    return {{"status", "error"}, {"error", kind}, {"message", message}};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidRule:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::WindowTooSmall:
        case ErrorKind::PreconditionViolated:
        case ErrorKind::UnsupportedWindow:
            return kExitMalformed;
        default:
            return kExitViolation;
    }
}

// Without an explicit --window, large alphabets fall back to the widest window
// (at least 3 cells) whose dimension stays under `limit`.
int window_width(const QcaSpec &spec, const Options &opt, double limit) {
    if (opt.window_given || spec.kind == SpecKind::Window) {
        return opt.window;
    }
    int w = opt.window;
    double d = spec.alphabet.dim();
    while (w > 3 && std::pow(d, w) > limit) {
        w--;
    }
    return w;
}

constexpr double kDenseLimit = 4096;
constexpr double kSparseLimit = 65536;

WindowOperator window_for(const QcaSpec &spec, int width) {
    switch (spec.kind) {
        case SpecKind::Classical:
            return quantize(spec.rule, width, spec.boundary);
        case SpecKind::Block:
            return window_matrix(spec.block, width);
        case SpecKind::Window:
            return spec.window;
        case SpecKind::Classical2D:
            break;
    }
    throw QcaError(ErrorKind::UnsupportedWindow, "two-dimensional rules have no window presentation");
}

json kari_report(uint64_t seed, int trials) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> bits(0, (1 << kKariBits) - 1);
    bool involution = true, shift_invariant = true;
    for (int t = 0; t < trials; t++) {
        KariGrid g;
        for (int x = 0; x < 5; x++) {
            for (int y = 0; y < 5; y++) {
                g.set(x, y, (uint16_t)bits(gen));
            }
        }
        KariGrid once = kari_step(g);
        involution = involution && kari_step(once) == g;
        shift_invariant = shift_invariant && kari_step(g.translated(1, 0)) == once.translated(1, 0) &&
                          kari_step(g.translated(0, 1)) == once.translated(0, 1);
    }
    return {
        {"kind", "classical2d"},
        {"trials", trials},
        {"involution", involution},
        {"shift_invariant", shift_invariant},
        {"status", involution && shift_invariant ? "reversible" : "violation"},
    };
}

int cmd_verify(const Options &opt, Emitter &em) {
    QcaSpec spec = qca_spec_from_json(read_json_file(opt.spec));
    if (spec.kind == SpecKind::Classical2D) {
        json r = kari_report(opt.seed, 200);
        em.emit(r);
        return r["status"] == "reversible" ? kExitPass : kExitViolation;
    }
    double limit = spec.kind == SpecKind::Classical ? kSparseLimit : kDenseLimit;
    WindowOperator g = window_for(spec, window_width(spec, opt, limit));
    int radius = opt.max_radius >= 0 ? opt.max_radius : default_max_radius(g.width);
    VerificationReport r = verify(g, radius, opt.tol);
    em.emit(report_to_json(r));
    bool ok = r.unitary && r.shift_invariant && r.locality.is_local;
    return ok ? kExitPass : kExitViolation;
}

int cmd_decompose(const Options &opt, Emitter &em) {
    QcaSpec spec = qca_spec_from_json(read_json_file(opt.spec));
    WindowOperator g = window_for(spec, window_width(spec, opt, kDenseLimit));
    VerificationReport r = verify(g, default_max_radius(g.width), opt.tol);
    bool radius_half = r.locality.neighborhood && Interval{0, 1}.contains(*r.locality.neighborhood);
    if (!r.unitary || !r.shift_invariant || !radius_half) {
        json out = error_json("NotLocal", "input is not a unitary, shift-invariant automaton with N inside {0, 1}");
        out["verification"] = report_to_json(r);
        em.emit(out);
        return kExitViolation;
    }
    Decomposition d = decompose(g, opt.seed, opt.tol);
    em.emit(decomposition_to_json(d));
    return kExitPass;
}

int cmd_simulate(const Options &opt, Emitter &em) {
    QcaSpec spec = qca_spec_from_json(read_json_file(opt.spec));
    if (spec.kind != SpecKind::Classical && spec.kind != SpecKind::Block) {
        throw QcaError(ErrorKind::UnsupportedWindow, "simulate needs a classical or block automaton");
    }
    if (opt.steps < 0) {
        throw QcaError(ErrorKind::ParseError, "steps must be non-negative");
    }
    SparseState s = state_from_json(read_json_file(opt.state_a), spec.alphabet);
    if (opt.steps == 0) {
        std::ifstream in(opt.state_a, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        em.emit_text(ss.str());
        return kExitPass;
    }
    for (int t = 0; t < opt.steps; t++) {
        s = spec.kind == SpecKind::Block ? apply_block(s, spec.block) : apply_classical(s, spec.rule);
    }
    em.emit(state_to_json(s));
    return kExitPass;
}

int cmd_signal(const Options &opt, Emitter &em) {
    QcaSpec spec = qca_spec_from_json(read_json_file(opt.spec));
    double limit = spec.kind == SpecKind::Classical ? kSparseLimit : kDenseLimit;
    WindowOperator g = window_for(spec, window_width(spec, opt, limit));
    SparseState a = state_from_json(read_json_file(opt.state_a), spec.alphabet);
    SparseState b = state_from_json(read_json_file(opt.state_b), spec.alphabet);
    if (opt.context.size() != 2 || opt.context[0] > opt.context[1]) {
        throw QcaError(ErrorKind::ParseError, "context is an interval LO,HI");
    }
    std::vector<int64_t> cells;
    for (int64_t c = opt.context[0]; c <= opt.context[1]; c++) {
        cells.push_back(c);
    }
    SignallingResult res = detect_signalling(g, a, b, opt.probe, cells, opt.tol);
    em.emit({
        {"trace_distance", res.trace_distance},
        {"signalling", res.signalling},
        {"probe", opt.probe},
        {"context", opt.context},
        {"status", res.signalling ? "witness" : "no_witness"},
    });
    return res.signalling ? kExitViolation : kExitPass;
}

int cmd_algebra_factor(const Options &opt, Emitter &em) {
    int n = 0;
    std::vector<CMatrix> gens = algebra_generators_from_json(read_json_file(opt.spec), &n);
    GeneratedAlgebra alg = close(gens, n);
    Factorization f = factor_one(alg, opt.seed, opt.tol);
    em.emit({
        {"n", n},
        {"dimension", alg.dimension()},
        {"p", f.p},
        {"q", f.q},
        {"w", matrix_to_json(f.w)},
        {"residual", factorization_residual(alg, f)},
        {"status", "factorized"},
    });
    return kExitPass;
}

void write_file(const std::filesystem::path &path, const json &j) {
    std::ofstream f(path);
    if (!f) {
        throw QcaError(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
    }
    f << j.dump(2) << "\n";
}

int cmd_gallery(const Options &opt, Emitter &em) {
    std::filesystem::path dir(opt.dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "xor.json", rule_to_json(xor_ca(), QuantizeBoundary::Open));
    write_file(dir / "toffoli.json", rule_to_json(toffoli_ca(), QuantizeBoundary::Periodic));
    write_file(dir / "toffoli_grouped.json", rule_to_json(group_cells(toffoli_ca(), 2), QuantizeBoundary::Periodic));
    write_file(dir / "kari.json", {{"kind", "classical2d"}, {"bits", 9}, {"rule", "kari"}});
    write_file(dir / "shift.json", block_to_json(shift_qca(xor_ca().alphabet)));
    write_file(dir / "swap.json", block_to_json(swap_qca(2, 2)));
    write_file(dir / "phase.json", block_to_json(phase_qca({0.5, 1.25})));
    write_file(dir / "xor_plus.json", state_to_json(xor_cat_state(1, 4, 1)));
    write_file(dir / "xor_minus.json", state_to_json(xor_cat_state(1, 4, -1)));
    write_file(dir / "toffoli_probe_c0.json", state_to_json(toffoli_probe_state(2, 0)));
    write_file(dir / "toffoli_probe_c1.json", state_to_json(toffoli_probe_state(2, 1)));
    em.emit({{"status", "written"}, {"directory", dir.string()}});
    return kExitPass;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Quantum cellular automata: verification, decomposition and simulation"};
    app.name("qca");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--window", opt.window, "window width in cells")->capture_default_str();
        sub->add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
        sub->add_option("--seed", opt.seed, "seed for randomized steps")->capture_default_str();
        sub->add_option("--out", opt.out, "output file (default stdout)");
    };

    CLI::App *verify_cmd = app.add_subcommand("verify", "check unitarity, shift invariance and locality");
    verify_cmd->add_option("spec", opt.spec, "automaton file")->required();
    verify_cmd->add_option("--max-radius", opt.max_radius, "largest radius to test (default: what the window allows)");
    add_common(verify_cmd);

    CLI::App *decompose_cmd = app.add_subcommand("decompose", "factor a radius-1/2 automaton into two block layers");
    decompose_cmd->add_option("spec", opt.spec, "automaton file")->required();
    add_common(decompose_cmd);

    CLI::App *simulate_cmd = app.add_subcommand("simulate", "evolve a finite-support state");
    simulate_cmd->add_option("spec", opt.spec, "automaton file")->required();
    simulate_cmd->add_option("state", opt.state_a, "state file")->required();
    simulate_cmd->add_option("--steps", opt.steps, "number of steps")->capture_default_str();
    add_common(simulate_cmd);

    CLI::App *signal_cmd = app.add_subcommand("signal", "look for a signalling witness between two states");
    signal_cmd->add_option("spec", opt.spec, "automaton file")->required();
    signal_cmd->add_option("state_a", opt.state_a, "first state file")->required();
    signal_cmd->add_option("state_b", opt.state_b, "second state file")->required();
    signal_cmd->add_option("--probe", opt.probe, "output cell to compare")->required();
    signal_cmd->add_option("--context", opt.context, "input interval LO,HI whose restrictions agree")
        ->required()
        ->expected(2)
        ->delimiter(',');
    add_common(signal_cmd);

    CLI::App *factor_cmd = app.add_subcommand("algebra-factor", "split a *-algebra with trivial center");
    factor_cmd->add_option("spec", opt.spec, "algebra file")->required();
    add_common(factor_cmd);

    CLI::App *gallery_cmd = app.add_subcommand("gallery", "write the bundled automata and states");
    gallery_cmd->add_option("dir", opt.dir, "target directory")->required();
    add_common(gallery_cmd);

    Emitter em(opt, out);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        out << error_json("UsageError", e.what()).dump(2) << "\n";
        return kExitMalformed;
    }

    try {
        for (CLI::App *sub : app.get_subcommands()) {
            opt.window_given = sub->count("--window") > 0;
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(opt, em);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(opt, em);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(opt, em);
        }
        if (signal_cmd->parsed()) {
            return cmd_signal(opt, em);
        }
        if (factor_cmd->parsed()) {
            return cmd_algebra_factor(opt, em);
        }
        return cmd_gallery(opt, em);
    } catch (const QcaError &e) {
        err << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        out << error_json(error_kind_name(e.kind()), e.what()).dump(2) << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        out << error_json("InternalError", e.what()).dump(2) << "\n";
        return kExitViolation;
    }
}

}  // namespace qca
