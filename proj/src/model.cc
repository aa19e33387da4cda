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

#include "qca/model.h"

#include <algorithm>
#include <cmath>

#include "qca/error.h"

namespace qca {

int Alphabet::index_of(const std::string &name) const {
    if (name == quiescent) {
        return 0;
    }
    auto it = std::find(symbols.begin(), symbols.end(), name);
    if (it == symbols.end()) {
        throw QcaError(ErrorKind::ParseError, "unknown symbol '" + name + "'");
    }
    return (int)(it - symbols.begin()) + 1;
}

const std::string &Alphabet::name_of(int index) const {
    if (index < 0 || index > (int)symbols.size()) {
        throw QcaError(ErrorKind::DimensionMismatch, "symbol index out of range");
    }
    return index == 0 ? quiescent : symbols[index - 1];
}

Alphabet Alphabet::numbered(int dim) {
    Alphabet a;
    a.quiescent = "0";
    for (int k = 1; k < dim; k++) {
        a.symbols.push_back(std::to_string(k));
    }
    return a;
}

Alphabet Alphabet::grouped(int s) const {
    if (s < 1) {
        throw QcaError(ErrorKind::IndivisibleWidth, "group size must be positive");
    }
    int d = dim();
    std::vector<int> dims(s, d);
    int64_t total = FactorShape(dims).total();
    Alphabet out;
    for (int64_t t = 0; t < total; t++) {
        std::vector<int> digits = index_digits(t, dims);
        std::string name;
        for (int j = 0; j < s; j++) {
            if (j) {
                name += ".";
            }
            name += name_of(digits[j]);
        }
        if (t == 0) {
            out.quiescent = name;
        } else {
            out.symbols.push_back(name);
        }
    }
    return out;
}

Configuration::Configuration(int64_t offset, std::vector<int> cells) : offset_(offset), cells_(std::move(cells)) {
    normalize();
}

Configuration Configuration::from_map(const std::map<int64_t, int> &cells) {
    if (cells.empty()) {
        return {};
    }
    int64_t lo = cells.begin()->first;
    int64_t hi = cells.rbegin()->first;
    std::vector<int> v(hi - lo + 1, 0);
    for (const auto &[pos, sym] : cells) {
        v[pos - lo] = sym;
    }
    return Configuration(lo, std::move(v));
}

void Configuration::normalize() {
    size_t lo = 0;
    while (lo < cells_.size() && cells_[lo] == 0) {
        lo++;
    }
    size_t hi = cells_.size();
    while (hi > lo && cells_[hi - 1] == 0) {
        hi--;
    }
    if (lo == hi) {
        cells_.clear();
        offset_ = 0;
        return;
    }
    cells_ = std::vector<int>(cells_.begin() + lo, cells_.begin() + hi);
    offset_ += (int64_t)lo;
}

int Configuration::at(int64_t position) const {
    int64_t k = position - offset_;
    if (k < 0 || k >= (int64_t)cells_.size()) {
        return 0;
    }
    return cells_[k];
}

std::map<int64_t, int> Configuration::to_map() const {
    std::map<int64_t, int> out;
    for (size_t k = 0; k < cells_.size(); k++) {
        if (cells_[k] != 0) {
            out[offset_ + (int64_t)k] = cells_[k];
        }
    }
    return out;
}

Configuration Configuration::shifted(int64_t k) const {
    Configuration c = *this;
    if (!c.cells_.empty()) {
        c.offset_ -= k;
    }
    return c;
}

double SparseState::norm() const {
    double s = 0;
    for (const auto &[c, a] : terms) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void SparseState::prune(double threshold) {
    std::erase_if(terms, [&](const auto &kv) { return std::abs(kv.second) <= threshold; });
}

void SparseState::normalize() {
    double n = norm();
    if (n == 0) {
        throw QcaError(ErrorKind::NumericalFailure, "cannot normalize the zero state");
    }
    for (auto &[c, a] : terms) {
        a /= n;
    }
}

SparseState SparseState::basis(const Alphabet &alphabet, const Configuration &c) {
    SparseState s;
    s.alphabet = alphabet;
    s.terms[c] = 1.0;
    return s;
}

ClassicalRule::ClassicalRule(Alphabet a, std::vector<int> t) : alphabet(std::move(a)), table(std::move(t)) {
    int d = alphabet.dim();
    if ((int64_t)table.size() != (int64_t)d * d) {
        throw QcaError(ErrorKind::InvalidRule, "rule table is not total");
    }
    for (int z : table) {
        if (z < 0 || z >= d) {
            throw QcaError(ErrorKind::InvalidRule, "rule output outside the alphabet");
        }
    }
    if (table[0] != 0) {
        throw QcaError(ErrorKind::InvalidRule, "delta(q, q) must be q");
    }
}

Configuration ClassicalRule::apply(const Configuration &c) const {
    if (c.empty()) {
        return {};
    }
    std::vector<int> out;
    for (int64_t i = c.first() - 1; i <= c.last(); i++) {
        out.push_back((*this)(c.at(i), c.at(i + 1)));
    }
    return Configuration(c.first() - 1, std::move(out));
}

void BlockQCA::validate(double tol) const {
    if (d != alphabet.dim() || p * q != d || p < 1 || q < 1) {
        throw QcaError(ErrorKind::DimensionMismatch, "block dimensions inconsistent with the alphabet");
    }
    if (u.rows() != d || u.cols() != d || v.rows() != d || v.cols() != d || q1.size() != p || q2.size() != q) {
        throw QcaError(ErrorKind::DimensionMismatch, "block matrices have the wrong shape");
    }
    if (!is_unitary(u, tol) || !is_unitary(v, tol)) {
        throw QcaError(ErrorKind::PreconditionViolated, "block layers must be unitary");
    }
    CVector uq = u.col(0);
    CVector target = kron(q2, q1).col(0);
    CVector e0 = CVector::Zero(d);
    e0(0) = 1;
    CVector vq = v * kron(q1, q2).col(0);
    if ((uq - target).cwiseAbs().maxCoeff() > tol || (vq - e0).cwiseAbs().maxCoeff() > tol) {
        throw QcaError(ErrorKind::PreconditionViolated, "block layers do not fix the quiescent state");
    }
}

namespace {

CVector kron_vec(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

void accumulate(SparseState &out, const Configuration &c, cd amp) {
    auto [it, inserted] = out.terms.emplace(c, amp);
    if (!inserted) {
        it->second += amp;
    }
}

}  // namespace

SparseState apply_block(const SparseState &state, const BlockQCA &g) {
    if (!(state.alphabet == g.alphabet)) {
        throw QcaError(ErrorKind::DimensionMismatch, "state and automaton use different alphabets");
    }
    int d = g.d;
    SparseState out;
    out.alphabet = state.alphabet;
    for (const auto &[c, amp] : state.terms) {
        int64_t s = c.empty() ? 0 : c.first();
        int64_t e = c.empty() ? 0 : c.last();
        // The U layer acts on the support padded by one cell each side. Beyond
        // that the halves are exactly q2 and q1.
        CVector psi = g.q1;
        for (int64_t i = s - 1; i <= e + 1; i++) {
            psi = kron_vec(psi, g.u.col(c.at(i)));
        }
        psi = kron_vec(psi, g.q2);
        int cells = (int)(e - s + 4);
        std::vector<int> dims(cells, d);
        CMatrix m = psi;
        for (int f = 0; f < cells; f++) {
            m = apply_on_factor(m, dims, f, g.v);
        }
        for (Eigen::Index k = 0; k < m.rows(); k++) {
            cd a = m(k, 0);
            if (std::abs(a) > kPruneTol) {
                accumulate(out, Configuration(s - 2, index_digits(k, dims)), amp * a);
            }
        }
    }
    out.prune();
    out.normalize();
    return out;
}

SparseState apply_classical(const SparseState &state, const ClassicalRule &rule) {
    if (!(state.alphabet == rule.alphabet)) {
        throw QcaError(ErrorKind::DimensionMismatch, "state and rule use different alphabets");
    }
    SparseState out;
    out.alphabet = state.alphabet;
    for (const auto &[c, amp] : state.terms) {
        accumulate(out, rule.apply(c), amp);
    }
    out.prune();
    return out;
}

SparseState shift(const SparseState &state, int64_t k) {
    SparseState out;
    out.alphabet = state.alphabet;
    for (const auto &[c, amp] : state.terms) {
        out.terms.emplace(c.shifted(k), amp);
    }
    return out;
}

ClassicalRule group_cells(const ClassicalRule &x, int s) {
    if (s < 1) {
        throw QcaError(ErrorKind::IndivisibleWidth, "group size must be positive");
    }
    int d = x.alphabet.dim();
    std::vector<int> dims(s, d);
    int64_t big = FactorShape(dims).total();
    std::vector<int> table(big * big);
    for (int64_t a = 0; a < big; a++) {
        std::vector<int> xa = index_digits(a, dims);
        for (int64_t b = 0; b < big; b++) {
            std::vector<int> xb = index_digits(b, dims);
            std::vector<int> out(s);
            for (int j = 0; j < s; j++) {
                out[j] = x(xa[j], j + 1 < s ? xa[j + 1] : xb[0]);
            }
            table[a * big + b] = (int)digits_index(out, dims);
        }
    }
    return ClassicalRule(x.alphabet.grouped(s), std::move(table));
}

static int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

SparseState group_cells(const SparseState &x, int s) {
    if (s < 1) {
        throw QcaError(ErrorKind::IndivisibleWidth, "group size must be positive");
    }
    int d = x.alphabet.dim();
    SparseState out;
    out.alphabet = x.alphabet.grouped(s);
    for (const auto &[c, amp] : x.terms) {
        std::map<int64_t, int> big;
        if (!c.empty()) {
            for (int64_t P = floor_div(c.first(), s); P <= floor_div(c.last(), s); P++) {
                int idx = 0;
                for (int j = 0; j < s; j++) {
                    idx = idx * d + c.at(P * s + j);
                }
                if (idx) {
                    big[P] = idx;
                }
            }
        }
        accumulate(out, Configuration::from_map(big), amp);
    }
    return out;
}

SparseState ungroup_cells(const SparseState &x, const Alphabet &fine, int s) {
    if (!(fine.grouped(s) == x.alphabet)) {
        throw QcaError(ErrorKind::DimensionMismatch, "state alphabet is not the grouped alphabet");
    }
    std::vector<int> dims(s, fine.dim());
    SparseState out;
    out.alphabet = fine;
    for (const auto &[c, amp] : x.terms) {
        std::map<int64_t, int> small;
        for (const auto &[P, idx] : c.to_map()) {
            std::vector<int> digits = index_digits(idx, dims);
            for (int j = 0; j < s; j++) {
                if (digits[j]) {
                    small[P * s + j] = digits[j];
                }
            }
        }
        accumulate(out, Configuration::from_map(small), amp);
    }
    return out;
}

CMatrix restrict_state(const SparseState &state, const std::vector<int64_t> &cells_in) {
    std::vector<int64_t> cells = cells_in;
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    int d = state.alphabet.dim();
    std::vector<int> dims(cells.size(), d);
    int64_t dim = FactorShape(dims).total();
    // Terms that agree outside `cells` interfere; group them by that remainder.
    std::map<Configuration, CVector> groups;
    for (const auto &[c, amp] : state.terms) {
        std::map<int64_t, int> outside = c.to_map();
        std::vector<int> digits(cells.size());
        for (size_t k = 0; k < cells.size(); k++) {
            digits[k] = c.at(cells[k]);
            outside.erase(cells[k]);
        }
        auto [it, inserted] = groups.try_emplace(Configuration::from_map(outside), CVector::Zero(dim));
        it->second(digits_index(digits, dims)) += amp;
    }
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (const auto &[key, vec] : groups) {
        rho.noalias() += vec * vec.adjoint();
    }
    return rho;
}

int64_t window_index(const Configuration &c, int d, int width) {
    if (!c.empty() && (c.first() < 0 || c.last() >= width)) {
        throw QcaError(ErrorKind::WindowTooSmall, "configuration does not fit in the window");
    }
    int64_t idx = 0;
    for (int i = 0; i < width; i++) {
        idx = idx * d + c.at(i);
    }
    return idx;
}

Configuration window_configuration(int64_t index, int d, int width, int64_t offset) {
    return Configuration(offset, index_digits(index, std::vector<int>(width, d)));
}

CVector to_window_vector(const SparseState &state, int width) {
    int d = state.alphabet.dim();
    int64_t n = FactorShape::uniform(d, width).total();
    CVector v = CVector::Zero(n);
    for (const auto &[c, amp] : state.terms) {
        v(window_index(c, d, width)) += amp;
    }
    return v;
}

SparseState from_window_vector(const CVector &v, const Alphabet &alphabet, int width, int64_t offset) {
    SparseState out;
    out.alphabet = alphabet;
    int d = alphabet.dim();
    for (Eigen::Index k = 0; k < v.size(); k++) {
        if (std::abs(v(k)) > kPruneTol) {
            accumulate(out, window_configuration(k, d, width, offset), v(k));
        }
    }
    return out;
}

}  // namespace qca
