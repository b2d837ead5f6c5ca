// Copyright 2026 The qrank authors
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

#include "qrank/stacked_sim.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "qrank/errors.hpp"
#include "qrank/rng.hpp"

namespace qrank {

PauliString::PauliString(unsigned layers, unsigned cells)
    : m_(layers), n_(cells), xb_(layers, cells), zb_(layers, cells) {
    if (layers == 0 || cells == 0) throw std::invalid_argument("PauliString: empty shape");
}

std::string PauliString::to_string() const {
    // letters absorb the X Z normal form: a site with x = z = 1 prints as Y,
    // and the global prefix compensates with i^(phase - #Y)
    unsigned ys = 0;
    std::string body;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) body += " | ";
        for (unsigned j = 0; j < n_; ++j) {
            bool xv = x(i, j), zv = z(i, j);
            if (xv && zv) {
                body += 'Y';
                ++ys;
            } else if (xv) {
                body += 'X';
            } else if (zv) {
                body += 'Z';
            } else {
                body += 'I';
            }
        }
    }
    static const char* phases[4] = {"+1", "+i", "-1", "-i"};
    return std::string(phases[(phase_ + 4 - (ys & 3)) & 3]) + " " + body;
}

PauliString PauliString::parse(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == '\n') c = '|';

    unsigned prefix = 0;
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < t.size() && t[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-' || t[pos] == '1' || t[pos] == 'i')) {
        bool neg = t[pos] == '-';
        if (t[pos] == '+' || t[pos] == '-') ++pos;
        if (pos >= t.size()) throw std::invalid_argument("PauliString: truncated phase");
        bool imag = t[pos] == 'i';
        if (t[pos] != '1' && t[pos] != 'i')
            throw std::invalid_argument("PauliString: bad phase token");
        ++pos;
        prefix = (neg ? 2 : 0) + (imag ? 1 : 0);
    }

    std::vector<std::string> layers(1);
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == ' ') continue;
        if (c == '|') {
            layers.emplace_back();
            continue;
        }
        if (c != 'I' && c != 'X' && c != 'Z' && c != 'Y')
            throw std::invalid_argument("PauliString: letters must be I, X, Z, Y");
        layers.back().push_back(c);
    }
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
    if (layers.empty()) throw std::invalid_argument("PauliString: no layers");
    for (const auto& l : layers)
        if (l.size() != layers[0].size())
            throw std::invalid_argument("PauliString: ragged layers");

    PauliString p(static_cast<unsigned>(layers.size()), static_cast<unsigned>(layers[0].size()));
    unsigned ys = 0;
    for (unsigned i = 0; i < p.layers(); ++i) {
        for (unsigned j = 0; j < p.cells(); ++j) {
            char c = layers[i][j];
            if (c == 'X' || c == 'Y') p.set_x(i, j, true);
            if (c == 'Z' || c == 'Y') p.set_z(i, j, true);
            if (c == 'Y') ++ys;
        }
    }
    p.set_phase_exp((prefix + ys) & 3);  // Y = i XZ
    return p;
}

StackedError to_stacked_error(const PauliString& p) {
    StackedError e{MatF2(p.layers(), 2 * p.cells())};
    for (unsigned i = 0; i < p.layers(); ++i)
        for (unsigned j = 0; j < p.cells(); ++j) {
            if (p.x(i, j)) e.mat.set(i, j, true);
            if (p.z(i, j)) e.mat.set(i, p.cells() + j, true);
        }
    return e;
}

BitVec layer_vector(const PauliString& p, unsigned layer) {
    BitVec v(2 * p.cells());
    for (unsigned j = 0; j < p.cells(); ++j) {
        if (p.x(layer, j)) v.set(j, true);
        if (p.z(layer, j)) v.set(p.cells() + j, true);
    }
    return v;
}

unsigned error_rank(const StackedError& e) {
    if (e.mat.cols() <= 64 && e.mat.rows() <= 64 && e.mat.words_per_row() == 1)
        return rank_of_words(e.mat.row_words(0), e.mat.rows());
    return static_cast<unsigned>(e.mat.rank());
}

namespace {

unsigned parity_of_and(const MatF2& a, const MatF2& b) {
    uint64_t acc = 0;
    for (size_t r = 0; r < a.rows(); ++r) {
        const uint64_t* pa = a.row_words(r);
        const uint64_t* pb = b.row_words(r);
        for (size_t w = 0; w < a.words_per_row(); ++w) acc ^= pa[w] & pb[w];
    }
    return std::popcount(acc) & 1;
}

}  // namespace

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
    if (p.layers() != q.layers() || p.cells() != q.cells())
        throw std::invalid_argument("pauli_mul: shape mismatch");
    PauliString out(p.layers(), p.cells());
    // X^a Z^b . X^c Z^d = (-1)^(bc) X^(a+c) Z^(b+d) per site
    unsigned swaps = parity_of_and(p.z_bits(), q.x_bits());
    for (unsigned i = 0; i < p.layers(); ++i)
        for (unsigned j = 0; j < p.cells(); ++j) {
            out.set_x(i, j, p.x(i, j) ^ q.x(i, j));
            out.set_z(i, j, p.z(i, j) ^ q.z(i, j));
        }
    out.set_phase_exp((p.phase_exp() + q.phase_exp() + 2 * swaps) & 3);
    return out;
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.layers() != q.layers() || p.cells() != q.cells())
        throw std::invalid_argument("commutes: shape mismatch");
    return (parity_of_and(p.x_bits(), q.z_bits()) ^ parity_of_and(p.z_bits(), q.x_bits())) == 0;
}

PauliString pauli_from_row(const BitVec& v, unsigned layers, unsigned cells) {
    if (v.size() != 2 * static_cast<size_t>(layers) * cells)
        throw std::invalid_argument("pauli_from_row: length mismatch");
    PauliString p(layers, cells);
    size_t half = static_cast<size_t>(layers) * cells;
    for (unsigned i = 0; i < layers; ++i)
        for (unsigned j = 0; j < cells; ++j) {
            p.set_x(i, j, v.get(static_cast<size_t>(i) * cells + j));
            p.set_z(i, j, v.get(half + static_cast<size_t>(i) * cells + j));
        }
    return p;
}

namespace {

unsigned symplectic_product_rows(const MatF2& a, size_t i, size_t j, unsigned n) {
    // <row_i, row_j>_S for rows of width 2n
    unsigned acc = 0;
    for (unsigned c = 0; c < n; ++c) {
        acc ^= (a.get(i, c) & a.get(j, n + c)) ^ (a.get(i, n + c) & a.get(j, c));
    }
    return acc;
}

}  // namespace

CliffordSymplectic::CliffordSymplectic(unsigned cells, MatF2 a) : n_(cells), a_(std::move(a)) {
    unsigned dim = 2 * cells;
    if (a_.rows() != dim || a_.cols() != dim)
        throw std::invalid_argument("CliffordSymplectic: matrix must be 2n x 2n");
    if (a_.rank() != dim) throw verification_error("CliffordSymplectic: matrix is singular");
    // A Lambda A^T = Lambda, checked as <A_i, A_j>_S = Lambda_ij
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = i; j < dim; ++j) {
            unsigned expected = (j == i + cells) ? 1 : 0;
            if (symplectic_product_rows(a_, i, j, cells) != expected)
                throw verification_error("CliffordSymplectic: symplectic form not preserved");
        }
}

CliffordSymplectic random_clifford_symplectic(unsigned cells, uint64_t seed, unsigned rounds) {
    unsigned dim = 2 * cells;
    if (rounds == static_cast<unsigned>(-1)) rounds = dim + 8;
    SplitMix64 rng(seed);
    MatF2 a = MatF2::identity(dim);

    auto apply_transvection = [&](const BitVec& v) {
        // right multiplication by T_v: row -> row + <row, v>_S v
        for (unsigned r = 0; r < dim; ++r) {
            BitVec row = a.row(r);
            if (symplectic_inner_product(row, v)) {
                row ^= v;
                a.set_row(r, row);
            }
        }
    };
    auto apply_cell_swap = [&](unsigned i, unsigned j) {
        for (unsigned r = 0; r < dim; ++r) {
            bool t = a.get(r, i);
            a.set(r, i, a.get(r, j));
            a.set(r, j, t);
            t = a.get(r, cells + i);
            a.set(r, cells + i, a.get(r, cells + j));
            a.set(r, cells + j, t);
        }
    };

    for (unsigned round = 0; round < rounds; ++round) {
        BitVec v(dim);
        bool nonzero = false;
        while (!nonzero) {
            for (size_t w = 0; w < v.words().size(); ++w) v.words()[w] = rng.next();
            // mask the tail
            unsigned tail = dim & 63;
            if (tail) v.words().back() &= (uint64_t{1} << tail) - 1;
            nonzero = !v.is_zero();
        }
        apply_transvection(v);
        if (cells >= 2 && round % 3 == 2) {
            unsigned i = static_cast<unsigned>(rng.below(cells));
            unsigned j = static_cast<unsigned>(rng.below(cells - 1));
            if (j >= i) ++j;
            apply_cell_swap(i, j);
        }
    }
    return CliffordSymplectic(cells, std::move(a));
}

StackedError propagate(const StackedError& e, const CliffordSymplectic& u) {
    if (e.cells() != u.cells()) throw std::invalid_argument("propagate: cell count mismatch");
    return StackedError{mul(e.mat, u.matrix())};
}

StackedError random_two_cell_fault(unsigned layers, unsigned cells,
                                   std::pair<unsigned, unsigned> where, uint64_t seed) {
    auto [c1, c2] = where;
    if (c1 == c2 || c1 >= cells || c2 >= cells)
        throw std::invalid_argument("random_two_cell_fault: cells must be distinct and in range");
    SplitMix64 rng(seed);
    StackedError e{MatF2(layers, 2 * cells)};
    for (unsigned i = 0; i < layers; ++i) {
        uint64_t bits = rng.next();
        e.mat.set(i, c1, bits & 1);
        e.mat.set(i, c2, (bits >> 1) & 1);
        e.mat.set(i, cells + c1, (bits >> 2) & 1);
        e.mat.set(i, cells + c2, (bits >> 3) & 1);
    }
    return e;
}

SimulationResult simulate_faulty_circuit(unsigned layers, unsigned cells,
                                         const std::vector<CliffordSymplectic>& gates,
                                         const std::vector<unsigned>& fault_positions,
                                         uint64_t seed) {
    for (unsigned pos : fault_positions)
        if (pos >= gates.size())
            throw std::invalid_argument("simulate_faulty_circuit: fault position out of range");
    if (!fault_positions.empty() && cells < 2)
        throw std::invalid_argument("simulate_faulty_circuit: faults need at least two cells");

    SimulationResult res;
    res.q = StackedError{MatF2(layers, 2 * cells)};
    SplitMix64 rng(seed);
    for (unsigned pos : fault_positions) {
        unsigned c1 = static_cast<unsigned>(rng.below(cells));
        unsigned c2 = static_cast<unsigned>(rng.below(cells - 1));
        if (c2 >= c1) ++c2;
        StackedError e = random_two_cell_fault(layers, cells, {c1, c2}, rng.next());
        // conjugate through the rest of the circuit, checking rank at each step
        unsigned current = error_rank(e);
        for (size_t g = pos + 1; g < gates.size(); ++g) {
            e = propagate(e, gates[g]);
            unsigned after = error_rank(e);
            if (after != current) ++res.rank_violations;
            current = after;
        }
        res.rank_sum_bound += current;
        for (size_t r = 0; r < e.mat.rows(); ++r)
            for (size_t w = 0; w < e.mat.words_per_row(); ++w)
                res.q.mat.row_words(r)[w] ^= e.mat.row_words(r)[w];
        ++res.faults;
    }
    res.rank_q = error_rank(res.q);
    res.bound_ok = res.rank_q <= 4 * res.faults;
    return res;
}

}  // namespace qrank
