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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrank/f2linalg.hpp"
#include "qrank/qconstruct.hpp"

namespace qrank {

/// A Pauli operator on an m-layer, n-cell stacked memory. Site (i, j)
/// carries X^x Z^z; the global phase i^phase_exp is tracked separately in
/// the X^x Z^z normal form (so a site with x = z = 1 renders as the letter
/// Y with the -i folded into phase_exp).
class PauliString {
public:
    PauliString(unsigned layers, unsigned cells);

    unsigned layers() const { return m_; }
    unsigned cells() const { return n_; }
    unsigned phase_exp() const { return phase_; }
    void set_phase_exp(unsigned p) { phase_ = p & 3; }

    bool x(unsigned layer, unsigned cell) const { return xb_.get(layer, cell); }
    bool z(unsigned layer, unsigned cell) const { return zb_.get(layer, cell); }
    void set_x(unsigned layer, unsigned cell, bool v) { xb_.set(layer, cell, v); }
    void set_z(unsigned layer, unsigned cell, bool v) { zb_.set(layer, cell, v); }

    const MatF2& x_bits() const { return xb_; }
    const MatF2& z_bits() const { return zb_; }

    /// Text form: one {I,X,Z,Y} string per layer joined by " | ", with a
    /// global phase prefix in {+1, +i, -1, -i}.
    std::string to_string() const;
    static PauliString parse(const std::string& text);

private:
    unsigned m_, n_;
    unsigned phase_ = 0;
    MatF2 xb_, zb_;
};

/// Phase-free binary image of a stacked Pauli error: row i is
/// (x_{i,1}..x_{i,n} | z_{i,1}..z_{i,n}).
struct StackedError {
    MatF2 mat;  // layers x 2*cells
    unsigned layers() const { return static_cast<unsigned>(mat.rows()); }
    unsigned cells() const { return static_cast<unsigned>(mat.cols()) / 2; }
};

StackedError to_stacked_error(const PauliString& p);
/// Binary image (x | z) of a single layer.
BitVec layer_vector(const PauliString& p, unsigned layer);

/// Rank of the error's binary matrix over GF(2) -- the error metric the
/// codes protect against.
unsigned error_rank(const StackedError& e);

/// Componentwise product with phase bookkeeping:
/// X^a Z^b . X^c Z^d = (-1)^(bc) X^(a+c) Z^(b+d) per site.
PauliString pauli_mul(const PauliString& p, const PauliString& q);

/// True iff the flattened binary images have symplectic inner product 0.
bool commutes(const PauliString& p, const PauliString& q);

/// Generator row of a symplectic code as a phase-free Pauli string.
PauliString pauli_from_row(const BitVec& v, unsigned layers, unsigned cells);

/// The binary-symplectic action of a Clifford circuit layer: a 2n x 2n
/// invertible matrix preserving the symplectic form (A Lambda A^T =
/// Lambda). Conjugating a Pauli by the circuit multiplies each layer's
/// binary image by A on the right.
class CliffordSymplectic {
public:
    CliffordSymplectic(unsigned cells, MatF2 a);  // verifies both invariants

    unsigned cells() const { return n_; }
    const MatF2& matrix() const { return a_; }

private:
    unsigned n_;
    MatF2 a_;
};

/// Deterministic in seed; a product of `rounds` random symplectic
/// transvections interleaved with random cell swaps. rounds = 0 gives the
/// identity.
CliffordSymplectic random_clifford_symplectic(unsigned cells, uint64_t seed,
                                              unsigned rounds = static_cast<unsigned>(-1));

/// E . A; preserves rank.
StackedError propagate(const StackedError& e, const CliffordSymplectic& u);

/// Uniform random error supported on the two given (distinct) cells, so
/// its rank is at most 4.
StackedError random_two_cell_fault(unsigned layers, unsigned cells,
                                   std::pair<unsigned, unsigned> where, uint64_t seed);

struct SimulationResult {
    StackedError q;
    unsigned faults = 0;
    unsigned rank_q = 0;
    bool bound_ok = false;           // rank_q <= 4 * faults
    unsigned rank_violations = 0;    // propagation steps where rank changed
    unsigned rank_sum_bound = 0;     // sum of per-fault ranks (also >= rank_q)
};

/// Runs one faulty circuit: at each fault position a random two-cell
/// fault is drawn and conjugated through the remaining gates, and the
/// results are accumulated (XOR of binary images). Checks the rank bound
/// rank(Q) <= 4t and that every propagation step preserved rank.
SimulationResult simulate_faulty_circuit(unsigned layers, unsigned cells,
                                         const std::vector<CliffordSymplectic>& gates,
                                         const std::vector<unsigned>& fault_positions,
                                         uint64_t seed);

}  // namespace qrank
