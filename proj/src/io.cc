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

#include "qca/io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qca/error.h"

namespace qca {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw QcaError(ErrorKind::ParseError, what);
}

/// Runs `f`, turning JSON access errors into ParseError.
template <typename F>
auto guarded(const char *context, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        parse_fail(std::string(context) + ": " + e.what());
    }
}

const char *boundary_name(QuantizeBoundary b) {
    switch (b) {
        case QuantizeBoundary::Periodic:
            return "periodic";
        case QuantizeBoundary::Open:
            return "open";
        default:
            return "auto";
    }
}

QuantizeBoundary boundary_from_name(const std::string &s) {
    if (s == "periodic") {
        return QuantizeBoundary::Periodic;
    }
    if (s == "open") {
        return QuantizeBoundary::Open;
    }
    if (s == "auto") {
        return QuantizeBoundary::Auto;
    }
    parse_fail("unknown boundary '" + s + "'");
}

// Dense literals are written up to this many rows; larger ones use "nonzeros".
constexpr int64_t kDenseLiteralRows = 64;

}  // namespace

json complex_to_json(cd z) {
    return json::array({z.real(), z.imag()});
}

cd complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_fail("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix &m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index k = 0; k < m.cols(); k++) {
            entries.push_back(complex_to_json(m(i, k)));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json matrix_to_json(const SparseCMatrix &m) {
    if (m.rows() <= kDenseLiteralRows) {
        return matrix_to_json(CMatrix(m));
    }
    json nz = json::array();
    SparseCMatrix rm = m;
    for (int k = 0; k < rm.outerSize(); k++) {
        for (SparseCMatrix::InnerIterator it(rm, k); it; ++it) {
            nz.push_back(json::array({it.row(), it.col(), it.value().real(), it.value().imag()}));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"nonzeros", nz}};
}

SparseCMatrix sparse_matrix_from_json(const json &j) {
    return guarded("matrix", [&] {
        int64_t rows = j.at("rows").get<int64_t>();
        int64_t cols = j.at("cols").get<int64_t>();
        if (rows < 0 || cols < 0) {
            parse_fail("negative matrix shape");
        }
        std::vector<Eigen::Triplet<cd>> t;
        if (j.contains("entries")) {
            const json &e = j.at("entries");
            if (!e.is_array() || (int64_t)e.size() != rows * cols) {
                parse_fail("matrix entries do not match rows * cols");
            }
            for (int64_t i = 0; i < rows; i++) {
                for (int64_t k = 0; k < cols; k++) {
                    cd z = complex_from_json(e[i * cols + k]);
                    if (z != cd(0)) {
                        t.emplace_back((int)i, (int)k, z);
                    }
                }
            }
        } else {
            for (const json &e : j.at("nonzeros")) {
                if (!e.is_array() || e.size() != 4) {
                    parse_fail("sparse entries are [row, col, re, im]");
                }
                int64_t r = e[0].get<int64_t>(), c = e[1].get<int64_t>();
                if (r < 0 || r >= rows || c < 0 || c >= cols) {
                    parse_fail("sparse entry outside the matrix");
                }
                t.emplace_back((int)r, (int)c, cd(e[2].get<double>(), e[3].get<double>()));
            }
        }
        SparseCMatrix m(rows, cols);
        m.setFromTriplets(t.begin(), t.end());
        return m;
    });
}

CMatrix matrix_from_json(const json &j) {
    return CMatrix(sparse_matrix_from_json(j));
}

json vector_to_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

CVector vector_from_json(const json &j) {
    if (!j.is_array()) {
        parse_fail("vectors are arrays of [re, im]");
    }
    CVector v(j.size());
    for (size_t i = 0; i < j.size(); i++) {
        v((Eigen::Index)i) = complex_from_json(j[i]);
    }
    return v;
}

json alphabet_to_json(const Alphabet &a) {
    return {{"symbols", a.symbols}, {"quiescent", a.quiescent}};
}

Alphabet alphabet_from_json(const json &j) {
    return guarded("alphabet", [&] {
        Alphabet a;
        a.symbols = j.at("symbols").get<std::vector<std::string>>();
        a.quiescent = j.at("quiescent").get<std::string>();
        std::vector<std::string> all = a.symbols;
        all.push_back(a.quiescent);
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            parse_fail("alphabet symbols must be distinct");
        }
        return a;
    });
}

QcaSpec qca_spec_from_json(const json &j) {
    return guarded("automaton", [&] {
        QcaSpec s;
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "classical2d") {
            if (j.value("rule", std::string()) != "kari" || j.value("bits", 0) != 9) {
                parse_fail("only the 9-bit kari rule is available in two dimensions");
            }
            s.kind = SpecKind::Classical2D;
            return s;
        }
        s.alphabet = alphabet_from_json(j.at("alphabet"));
        int d = s.alphabet.dim();
        if (kind == "classical") {
            s.kind = SpecKind::Classical;
            std::vector<int> table((size_t)d * d, -1);
            for (const json &row : j.at("delta")) {
                auto names = row.get<std::vector<std::string>>();
                if (names.size() != 3) {
                    parse_fail("delta rows are [x, y, delta(x, y)]");
                }
                int x = s.alphabet.index_of(names[0]);
                int y = s.alphabet.index_of(names[1]);
                if (table[x * d + y] >= 0) {
                    parse_fail("delta defined twice for one pair");
                }
                table[x * d + y] = s.alphabet.index_of(names[2]);
            }
            for (int t : table) {
                if (t < 0) {
                    throw QcaError(ErrorKind::InvalidRule, "delta is not total");
                }
            }
            s.rule = ClassicalRule(s.alphabet, table);
            s.boundary = boundary_from_name(j.value("boundary", std::string("auto")));
        } else if (kind == "block") {
            s.kind = SpecKind::Block;
            BlockQCA &g = s.block;
            g.alphabet = s.alphabet;
            g.d = d;
            g.p = j.at("p").get<int>();
            g.q = j.at("q").get<int>();
            g.u = matrix_from_json(j.at("u"));
            g.v = matrix_from_json(j.at("v"));
            g.q1 = vector_from_json(j.at("q1"));
            g.q2 = vector_from_json(j.at("q2"));
            g.validate(1e-8);
        } else if (kind == "window") {
            s.kind = SpecKind::Window;
            WindowOperator &w = s.window;
            w.alphabet = s.alphabet;
            w.width = j.at("w").get<int>();
            w.matrix = sparse_matrix_from_json(j.at("matrix"));
            if (w.width < 1 || w.matrix.rows() != w.shape().total() || w.matrix.cols() != w.matrix.rows()) {
                parse_fail("window matrix must be d^w x d^w");
            }
            QuantizeBoundary b = boundary_from_name(j.value("boundary", std::string("periodic")));
            w.boundary = b == QuantizeBoundary::Open ? Boundary::Open : Boundary::Periodic;
            w.output_offset = j.value("offset", 0);
        } else {
            parse_fail("unknown automaton kind '" + kind + "'");
        }
        return s;
    });
}

json rule_to_json(const ClassicalRule &rule, QuantizeBoundary boundary) {
    json delta = json::array();
    int d = rule.alphabet.dim();
    for (int x = 0; x < d; x++) {
        for (int y = 0; y < d; y++) {
            delta.push_back(
                {rule.alphabet.name_of(x), rule.alphabet.name_of(y), rule.alphabet.name_of(rule(x, y))});
        }
    }
    json out = {{"alphabet", alphabet_to_json(rule.alphabet)}, {"kind", "classical"}, {"delta", delta}};
    if (boundary != QuantizeBoundary::Auto) {
        out["boundary"] = boundary_name(boundary);
    }
    return out;
}

json block_to_json(const BlockQCA &g) {
    return {
        {"alphabet", alphabet_to_json(g.alphabet)},
        {"kind", "block"},
        {"p", g.p},
        {"q", g.q},
        {"u", matrix_to_json(g.u)},
        {"v", matrix_to_json(g.v)},
        {"q1", vector_to_json(g.q1)},
        {"q2", vector_to_json(g.q2)},
    };
}

json window_to_json(const WindowOperator &w) {
    return {
        {"alphabet", alphabet_to_json(w.alphabet)},
        {"kind", "window"},
        {"w", w.width},
        {"matrix", matrix_to_json(w.matrix)},
        {"boundary", w.boundary == Boundary::Open ? "open" : "periodic"},
        {"offset", w.output_offset},
    };
}

SparseState state_from_json(const json &j, const Alphabet &alphabet) {
    return guarded("state", [&] {
        SparseState s;
        s.alphabet = alphabet;
        for (const json &term : j.at("terms")) {
            std::map<int64_t, int> cells;
            for (const auto &[key, sym] : term.at("cells").items()) {
                size_t used = 0;
                int64_t pos = 0;
                try {
                    pos = std::stoll(key, &used);
                } catch (const std::exception &) {
                    used = 0;
                }
                if (used != key.size() || key.empty()) {
                    parse_fail("cell positions must be integers, got '" + key + "'");
                }
                int idx = alphabet.index_of(sym.get<std::string>());
                if (idx) {
                    cells[pos] = idx;
                }
            }
            s.terms[Configuration::from_map(cells)] += complex_from_json(term.at("amp"));
        }
        if (s.terms.empty() || std::abs(s.norm() - 1.0) > 1e-9) {
            parse_fail("state must have unit norm");
        }
        return s;
    });
}

json state_to_json(const SparseState &s) {
    json terms = json::array();
    for (const auto &[c, amp] : s.terms) {
        json cells = json::object();
        for (const auto &[pos, sym] : c.to_map()) {
            cells[std::to_string(pos)] = s.alphabet.name_of(sym);
        }
        terms.push_back({{"cells", cells}, {"amp", complex_to_json(amp)}});
    }
    return {{"terms", terms}};
}

std::vector<CMatrix> algebra_generators_from_json(const json &j, int *n) {
    return guarded("algebra", [&] {
        *n = j.at("n").get<int>();
        if (*n < 1) {
            parse_fail("algebra dimension must be positive");
        }
        std::vector<CMatrix> gens;
        for (const json &g : j.at("generators")) {
            gens.push_back(matrix_from_json(g));
            if (gens.back().rows() != *n || gens.back().cols() != *n) {
                parse_fail("generator is not n x n");
            }
        }
        return gens;
    });
}

json witness_to_json(const SignallingWitness &w) {
    return {
        {"state_a", state_to_json(w.state_a)},
        {"state_b", state_to_json(w.state_b)},
        {"probe", w.probe_cell},
        {"context", w.context},
        {"trace_distance", w.trace_distance},
    };
}

json report_to_json(const VerificationReport &r) {
    const NeighborhoodReport &n = r.locality;
    json out;
    out["unitary"] = r.unitary;
    out["shift_invariant"] = r.shift_invariant;
    out["neighborhood"] = n.neighborhood ? json::array({n.neighborhood->lo, n.neighborhood->hi}) : json(nullptr);
    out["radius"] = n.neighborhood ? json(n.radius()) : json(nullptr);
    out["max_radius"] = n.max_radius;
    out["witness"] = n.witness ? witness_to_json(*n.witness) : json(nullptr);
    switch (n.status()) {
        case LocalityStatus::Local:
            out["status"] = "local";
            break;
        case LocalityStatus::Nonlocal:
            out["status"] = "nonlocal";
            break;
        case LocalityStatus::Inconclusive:
            out["status"] = "inconclusive";
            break;
    }
    return out;
}

json decomposition_to_json(const Decomposition &d) {
    json out = block_to_json(d.block);
    out["certification"] = {{"residual", d.certification.residual}, {"shift", d.certification.shift}};
    return out;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception &e) {
        parse_fail("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace qca
