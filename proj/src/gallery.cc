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

#include "qca/gallery.h"

#include <cmath>

#include "qca/error.h"
#include "qca/random.h"

namespace qca {

ClassicalRule xor_ca() {
    Alphabet a{{"0", "1"}, "q"};
    std::vector<int> t(9);
    for (int x = 0; x < 3; x++) {
        for (int y = 0; y < 3; y++) {
            int z;
            if (x == 0) {
                z = y;
            } else if (y == 0) {
                z = 0;
            } else {
                z = 1 + ((x - 1) ^ (y - 1));
            }
            t[x * 3 + y] = z;
        }
    }
    return ClassicalRule(a, t);
}

ClassicalRule toffoli_ca() {
    Alphabet al{{"01", "10", "11"}, "00"};
    std::vector<int> t(16);
    for (int x = 0; x < 4; x++) {
        for (int y = 0; y < 4; y++) {
            int a = x >> 1, b = x & 1, c = y >> 1;
            t[x * 4 + y] = 2 * (b ^ (a & c)) + c;
        }
    }
    return ClassicalRule(al, t);
}

BlockQCA shift_qca(const Alphabet &alphabet) {
    BlockQCA g;
    g.alphabet = alphabet;
    g.d = alphabet.dim();
    g.p = 1;
    g.q = g.d;
    g.u = CMatrix::Identity(g.d, g.d);
    g.v = CMatrix::Identity(g.d, g.d);
    g.q1 = CVector::Ones(1);
    g.q2 = CVector::Unit(g.d, 0);
    g.validate();
    return g;
}

BlockQCA swap_qca(int p, int q) {
    BlockQCA g;
    g.d = p * q;
    g.alphabet = Alphabet::numbered(g.d);
    g.p = p;
    g.q = q;
    g.u = CMatrix::Identity(g.d, g.d);
    g.v = CMatrix::Identity(g.d, g.d);
    g.q1 = CVector::Unit(p, 0);
    g.q2 = CVector::Unit(q, 0);
    g.validate();
    return g;
}

BlockQCA phase_qca(const std::vector<double> &phases) {
    BlockQCA g;
    g.d = (int)phases.size() + 1;
    g.alphabet = Alphabet::numbered(g.d);
    g.p = g.d;
    g.q = 1;
    g.u = CMatrix::Identity(g.d, g.d);
    g.v = CMatrix::Identity(g.d, g.d);
    for (size_t k = 0; k < phases.size(); k++) {
        g.v(k + 1, k + 1) = std::polar(1.0, phases[k]);
    }
    g.q1 = CVector::Unit(g.d, 0);
    g.q2 = CVector::Ones(1);
    g.validate();
    return g;
}

BlockQCA random_block_qca(int d, uint64_t seed, int p) {
    Rng rng(seed);
    if (p == 0) {
        std::vector<int> divisors;
        for (int k = 1; k <= d; k++) {
            if (d % k == 0) {
                divisors.push_back(k);
            }
        }
        p = divisors[rng.uniform_int(0, (int)divisors.size() - 1)];
    }
    if (p < 1 || d % p != 0) {
        throw QcaError(ErrorKind::DimensionMismatch, "p must divide d");
    }
    BlockQCA g;
    g.d = d;
    g.p = p;
    g.q = d / p;
    g.alphabet = Alphabet::numbered(d);
    g.q1 = random_unit_vector(g.p, rng);
    g.q2 = random_unit_vector(g.q, rng);
    CMatrix u0 = haar_unitary(d, rng);
    CMatrix v0 = haar_unitary(d, rng);
    // Rotate u0|q> onto q2 (x) q1, and v0 (q1 (x) q2) onto |q>.
    CVector target = kron(g.q2, g.q1).col(0);
    CMatrix tu = unitary_with_first_column(u0.col(0), rng);
    CMatrix tt = unitary_with_first_column(target, rng);
    g.u = tt * tu.adjoint() * u0;
    CVector y = v0 * kron(g.q1, g.q2).col(0);
    g.v = unitary_with_first_column(y, rng).adjoint() * v0;
    g.validate();
    return g;
}

SparseState xor_cat_state(int64_t first, int length, int sign) {
    SparseState s;
    s.alphabet = xor_ca().alphabet;
    double amp = 1.0 / std::sqrt(2.0);
    s.terms[Configuration(first, std::vector<int>(length, 1))] = amp;
    s.terms[Configuration(first, std::vector<int>(length, 2))] = sign * amp;
    return s;
}

SparseState toffoli_probe_state(int64_t cell, int c) {
    SparseState s;
    s.alphabet = toffoli_ca().alphabet;
    // |+>|-> = (|00> - |01> + |10> - |11>) / 2.
    const double signs[4] = {1, -1, 1, -1};
    for (int x = 0; x < 4; x++) {
        s.terms[Configuration(cell, {x, 2 * c})] = signs[x] / 2.0;
    }
    return s;
}

SparseState toffoli_subcell_step(const SparseState &bits) {
    if (bits.alphabet.dim() != 2) {
        throw QcaError(ErrorKind::DimensionMismatch, "subcell state must use a two-letter alphabet");
    }
    SparseState out;
    out.alphabet = bits.alphabet;
    for (const auto &[c, amp] : bits.terms) {
        std::map<int64_t, int> m = c.to_map();
        if (!m.empty()) {
            int64_t lo = c.first() - 4, hi = c.last() + 4;
            // Even subcells are a_i, odd ones b_i. Controls are never targets, so
            // the gates of the layer commute.
            for (int64_t j = lo; j <= hi; j++) {
                if (((j % 2) + 2) % 2 == 1 && c.at(j - 1) && c.at(j + 1)) {
                    m[j] = 1 - c.at(j);
                    if (!m[j]) {
                        m.erase(j);
                    }
                }
            }
        }
        Configuration next = Configuration::from_map(m).shifted(1);
        auto [it, inserted] = out.terms.emplace(next, amp);
        if (!inserted) {
            it->second += amp;
        }
    }
    out.prune();
    return out;
}

}  // namespace qca
