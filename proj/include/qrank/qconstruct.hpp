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
#include <optional>
#include <string>
#include <vector>

#include "qrank/gabidulin.hpp"
#include "qrank/gf2field.hpp"

namespace qrank {

/// <(a|b), (a'|b')>_S = a.b' + a'.b over GF(2). Vanishes exactly when the
/// corresponding Pauli operators commute.
unsigned symplectic_inner_product(const BitVec& u, const BitVec& v);

/// Reshapes a length-2mn vector (a_{1,1}..a_{m,n} | b_{1,1}..b_{m,n}) into
/// the m x 2n matrix whose row i is (a_{i,*} | b_{i,*}).
MatF2 to_layer_matrix(const BitVec& v, unsigned layers, unsigned cells);
BitVec from_layer_matrix(const MatF2& m);

/// Machinery for expanding codes over GF(2^(2n)) into GF(2)^(2n) per
/// coordinate: a normal basis theta, the pairing form T built from it, and
/// a congruence D with D T D^T = [[0, I], [I, 0]]. Hermitian orthogonality
/// over the extension field becomes symplectic orthogonality downstairs.
struct ExpansionContext {
    Field field;       // GF(2^(2n))
    Basis theta_basis; // normal basis, generator theta
    MatF2 t_form;      // 2n x 2n representation matrix of the pairing
    MatF2 d;           // D T D^T = S
    MatF2 d_inv;
    unsigned half() const { return field.degree() / 2; }
};

/// Builds and verifies the context. theta defaults to the first normal
/// basis generator in scan order. Requires even field degree. Every
/// invariant (T alternating and invertible, D T D^T = S, T matches the
/// form evaluated entrywise) is checked; violations throw.
ExpansionContext build_expansion_context(const Field& field,
                                         std::optional<uint64_t> theta = std::nullopt);

/// phi: GF(2)^(2n) -> GF(2^(2n)), the normal-basis combine of the
/// coordinates (a_1..a_n, b_1..b_n) against (theta, theta^2, ...).
uint64_t phi(const ExpansionContext& ctx, const BitVec& v);
BitVec phi_inv(const ExpansionContext& ctx, uint64_t x);

/// The bilinear pairing T(x, y): coefficient n+1 minus coefficient 1 of
/// phi(x) phi(y)^(2^n) expanded in the normal basis.
unsigned t_form(const ExpansionContext& ctx, const BitVec& x, const BitVec& y);

/// Expands an extension-field vector c of length m into GF(2)^(2mn):
/// e_i = phi^{-1}(c_i) D^{-1}, rows interleaved into the global
/// (a_{1,1}..a_{m,n} | b_{1,1}..b_{m,n}) layout. GF(2)-linear, rank
/// preserving: rank(to_layer_matrix(expand(c))) = rank_weight(c).
BitVec expand_codeword(const ExpansionContext& ctx, const std::vector<uint64_t>& c);

/// A symplectically self-orthogonal subspace of GF(2)^(2mn) with the
/// stacked layout (m layers, n cells). Construction verifies generator
/// independence and pairwise symplectic orthogonality.
class BinarySymplecticCode {
public:
    BinarySymplecticCode(unsigned layers, unsigned cells, MatF2 generators);

    unsigned layers() const { return layers_; }
    unsigned cells() const { return cells_; }
    const MatF2& generators() const { return gens_; }
    unsigned dim() const { return static_cast<unsigned>(gens_.rows()); }

private:
    unsigned layers_, cells_;
    MatF2 gens_;
};

struct QuantumCodeParams {
    unsigned N = 0;  // physical qubits, layers * cells
    unsigned K = 0;  // logical qubits, N - dim C
    std::optional<unsigned> D_R;
    bool certified = false;
};

/// Provenance of a constructed code, for serialization and reporting.
struct CodeProvenance {
    std::string construction;  // "proposed" or "css"
    Field field;
    std::vector<uint64_t> alpha;
    std::optional<uint64_t> theta;
    std::optional<MatF2> t_form;
    std::optional<MatF2> d;
    unsigned k = 0;  // classical dimension parameter (k, or r with s below)
    std::optional<unsigned> s;
};

struct BuiltCode {
    BinarySymplecticCode code;
    QuantumCodeParams params;
    CodeProvenance provenance;
};

/// Hermitian-orthogonality construction: C = Gab(alpha, k) over GF(2^(2m))
/// with a self-dual alpha, expanded through an ExpansionContext into a
/// [[2m^2, 2m(m-k)]] code on 2m layers x m cells. Requires 1 <= k < m.
/// Every hypothesis (self-dual Gram, Hermitian self-orthogonality,
/// symplectic self-orthogonality of the expansion) is re-verified; a
/// failure throws verification_error.
BuiltCode build_proposed_code(unsigned m, unsigned k,
                              std::optional<Field> field = std::nullopt,
                              std::optional<std::vector<uint64_t>> alpha = std::nullopt,
                              std::optional<uint64_t> theta = std::nullopt);

/// CSS construction on a self-dual normal basis of GF(2^n), n odd:
/// C = { (psi(beta) | psi(gamma)) : beta in Gab(alpha, r),
/// gamma in Gab(alpha^(2^r), s) }, an [[n^2, n(n-r-s)]] code on n layers x
/// n cells. Requires n odd and r + s < n.
BuiltCode build_css_code(unsigned n, unsigned r, unsigned s);

/// Basis of C^perp under the symplectic pairing; dim = 2mn - dim C.
MatF2 symplectic_dual(const BinarySymplecticCode& code);

struct DistanceCertificate {
    std::optional<unsigned> d_r;  // empty when C equals its dual
    bool certified = false;
    BitVec witness;  // lexicographically smallest minimizer
    unsigned witness_rank = 0;
    uint64_t enumerated = 0;
    std::string note;
};

/// Exact minimum of rank(to_layer_matrix(v)) over v in C^perp \ C, by
/// enumeration of the full dual space (Gray-code order, membership in C
/// tested by reduction against its rref basis). The witness is the
/// lexicographically smallest minimizer, so output is identical for any
/// thread count. Throws budget_error when 2^dim(dual) exceeds `budget`.
/// When C equals its dual the certificate carries an empty d_r.
DistanceCertificate certify_distance(const BinarySymplecticCode& code,
                                     uint64_t budget = uint64_t{1} << 24, unsigned threads = 1);

/// Monte Carlo upper bound (random dual vectors), never certifying.
DistanceCertificate sample_distance(const BinarySymplecticCode& code, uint64_t samples,
                                    uint64_t seed);

/// Exact rational for table entries.
struct Rational {
    long long num = 0;
    long long den = 1;
    static Rational make(long long n, long long d);
    std::string to_string() const;  // "p/q"
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ComparisonRow {
    std::string method;
    unsigned layers, cells;
    unsigned long long N, K;
    unsigned D;
    Rational rate;      // K/N
    Rational delta;     // D/N
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;    // conventional 2n-1, conventional 2n+1, proposed
    Rational delta_ratio_minus;         // delta_proposed / delta_conventional(2n-1)
    Rational delta_ratio_plus;          // delta_proposed / delta_conventional(2n+1)
};

/// Closed-form parameter comparison of the square odd-length CSS layouts
/// (2n-1 and 2n+1 cells) against the 2n x n layout, at equal distance
/// D = k + 1. Requires n > k >= 1.
ComparisonTable compare_table(unsigned n, unsigned k);

}  // namespace qrank
