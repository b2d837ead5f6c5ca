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

#include "qrank/qconstruct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qrank/errors.hpp"
#include "qrank/rng.hpp"

namespace qrank {

unsigned symplectic_inner_product(const BitVec& u, const BitVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw std::invalid_argument("symplectic_inner_product: need equal even lengths");
    size_t half = u.size() / 2;
    unsigned acc = 0;
    for (size_t i = 0; i < half; ++i) {
        acc ^= (u.get(i) & v.get(half + i)) ^ (u.get(half + i) & v.get(i));
    }
    return acc;
}

MatF2 to_layer_matrix(const BitVec& v, unsigned layers, unsigned cells) {
    if (v.size() != 2 * static_cast<size_t>(layers) * cells)
        throw std::invalid_argument("to_layer_matrix: length must be 2 * layers * cells");
    MatF2 out(layers, 2 * cells);
    size_t half = static_cast<size_t>(layers) * cells;
    for (unsigned i = 0; i < layers; ++i)
        for (unsigned j = 0; j < cells; ++j) {
            if (v.get(static_cast<size_t>(i) * cells + j)) out.set(i, j, true);
            if (v.get(half + static_cast<size_t>(i) * cells + j)) out.set(i, cells + j, true);
        }
    return out;
}

BitVec from_layer_matrix(const MatF2& m) {
    unsigned layers = static_cast<unsigned>(m.rows());
    unsigned cells = static_cast<unsigned>(m.cols()) / 2;
    if (m.cols() % 2 != 0) throw std::invalid_argument("from_layer_matrix: odd column count");
    BitVec v(2 * static_cast<size_t>(layers) * cells);
    size_t half = static_cast<size_t>(layers) * cells;
    for (unsigned i = 0; i < layers; ++i)
        for (unsigned j = 0; j < cells; ++j) {
            if (m.get(i, j)) v.set(static_cast<size_t>(i) * cells + j, true);
            if (m.get(i, cells + j)) v.set(half + static_cast<size_t>(i) * cells + j, true);
        }
    return v;
}

uint64_t phi(const ExpansionContext& ctx, const BitVec& v) {
    if (v.size() != ctx.field.degree()) throw std::invalid_argument("phi: wrong vector length");
    uint64_t coords = 0;
    for (unsigned i = 0; i < ctx.field.degree(); ++i)
        if (v.get(i)) coords |= uint64_t{1} << i;
    return ctx.theta_basis.combine(coords);
}

BitVec phi_inv(const ExpansionContext& ctx, uint64_t x) {
    uint64_t coords = ctx.theta_basis.expand(x);
    BitVec v(ctx.field.degree());
    for (unsigned i = 0; i < ctx.field.degree(); ++i)
        if ((coords >> i) & 1) v.set(i, true);
    return v;
}

unsigned t_form(const ExpansionContext& ctx, const BitVec& x, const BitVec& y) {
    unsigned n = ctx.half();
    uint64_t prod = ctx.field.mul(phi(ctx, x), ctx.field.frobenius(phi(ctx, y), n));
    uint64_t coords = ctx.theta_basis.expand(prod);
    return static_cast<unsigned>((coords ^ (coords >> n)) & 1);
}

ExpansionContext build_expansion_context(const Field& field, std::optional<uint64_t> theta) {
    if (field.degree() % 2 != 0)
        throw std::invalid_argument("build_expansion_context: field degree must be even");
    Basis nb = find_normal_basis(field, theta);
    unsigned dim = field.degree();
    unsigned n = dim / 2;

    ExpansionContext ctx{field, nb, MatF2(dim, dim), MatF2(), MatF2()};
    for (unsigned i = 0; i < dim; ++i) {
        for (unsigned j = 0; j < dim; ++j) {
            BitVec ei(dim), ej(dim);
            ei.set(i, true);
            ej.set(j, true);
            if (t_form(ctx, ei, ej)) ctx.t_form.set(i, j, true);
        }
    }
    // surfaces non-alternating or singular T as an error
    ctx.d = alternating_congruence(ctx.t_form);
    ctx.d_inv = ctx.d.inverse();
    if (mul(mul(ctx.d, ctx.t_form), ctx.d.transposed()) != symplectic_gram_matrix(n))
        throw verification_error("build_expansion_context: D T D^T != S");
    return ctx;
}

BitVec expand_codeword(const ExpansionContext& ctx, const std::vector<uint64_t>& c) {
    unsigned dim = ctx.field.degree();
    unsigned n = ctx.half();
    size_t m = c.size();
    BitVec out(m * dim);
    size_t half = m * n;
    for (size_t i = 0; i < m; ++i) {
        BitVec e = mul(phi_inv(ctx, c[i]), ctx.d_inv);
        for (unsigned j = 0; j < n; ++j) {
            if (e.get(j)) out.set(i * n + j, true);
            if (e.get(n + j)) out.set(half + i * n + j, true);
        }
    }
    return out;
}

BinarySymplecticCode::BinarySymplecticCode(unsigned layers, unsigned cells, MatF2 generators)
    : layers_(layers), cells_(cells), gens_(std::move(generators)) {
    size_t width = 2 * static_cast<size_t>(layers) * cells;
    if (gens_.rows() > 0 && gens_.cols() != width)
        throw std::invalid_argument("BinarySymplecticCode: generator width must be 2*layers*cells");
    if (gens_.rows() == 0) gens_ = MatF2(0, width);
    if (gens_.rank() != gens_.rows())
        throw verification_error("BinarySymplecticCode: generators are dependent");
    for (size_t i = 0; i < gens_.rows(); ++i)
        for (size_t j = i; j < gens_.rows(); ++j)
            if (symplectic_inner_product(gens_.row(i), gens_.row(j)) != 0)
                throw verification_error(
                    "BinarySymplecticCode: generators are not symplectically self-orthogonal");
}

BuiltCode build_proposed_code(unsigned m, unsigned k, std::optional<Field> field_opt,
                              std::optional<std::vector<uint64_t>> alpha_opt,
                              std::optional<uint64_t> theta) {
    if (m < 2 || k < 1 || k >= m)
        throw std::invalid_argument("build_proposed_code: need 1 <= k < m");
    Field field = field_opt ? *field_opt : Field(2 * m);
    if (field.degree() != 2 * m)
        throw std::invalid_argument("build_proposed_code: field degree must be 2m");

    std::vector<uint64_t> alpha = alpha_opt ? *alpha_opt : find_self_dual_basis(field).elements();
    if (!is_self_dual_basis(field, alpha))
        throw verification_error("build_proposed_code: alpha is not a self-dual basis");

    GabidulinCode classical(field, alpha, k);
    if (!is_hermitian_self_orthogonal(classical))
        throw verification_error("build_proposed_code: code is not Hermitian self-orthogonal");

    ExpansionContext ctx = build_expansion_context(field, theta);

    // binary generators: expansion of x^e * (row i) for all multipliers e
    MatF2 gens(0, static_cast<size_t>(2 * m) * 2 * m);
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned e = 0; e < 2 * m; ++e) {
            std::vector<uint64_t> scaled(classical.generator()[i]);
            for (uint64_t& x : scaled) x = field.mul(uint64_t{1} << e, x);
            gens.append_row(expand_codeword(ctx, scaled));
        }
    }
    BinarySymplecticCode code(2 * m, m, std::move(gens));

    QuantumCodeParams params;
    params.N = 2 * m * m;
    params.K = params.N - code.dim();
    if (params.K != 2 * m * (m - k))
        throw verification_error("build_proposed_code: K does not match 2m(m-k)");

    CodeProvenance prov{"proposed", field,       alpha, ctx.theta_basis.generator(),
                        ctx.t_form, ctx.d,       k,     std::nullopt};
    return BuiltCode{std::move(code), params, std::move(prov)};
}

BuiltCode build_css_code(unsigned n, unsigned r, unsigned s) {
    if (n % 2 == 0) throw std::invalid_argument("build_css_code: n must be odd");
    if (r < 1 || s < 1 || r + s >= n)
        throw std::invalid_argument("build_css_code: need 1 <= r, s with r + s < n");
    Field field(n);
    Basis sdn = find_self_dual_normal_basis(field);
    const std::vector<uint64_t>& alpha = sdn.elements();

    GabidulinCode cx(field, alpha, r);
    GabidulinCode cz(field, frobenius_shift(field, alpha, r), s);

    MatF2 ex = binary_expansion(cx, sdn);  // n*r rows of width n^2
    MatF2 ez = binary_expansion(cz, sdn);
    size_t nn = static_cast<size_t>(n) * n;
    MatF2 gens(ex.rows() + ez.rows(), 2 * nn);
    for (size_t row = 0; row < ex.rows(); ++row)
        for (size_t c = 0; c < nn; ++c)
            if (ex.get(row, c)) gens.set(row, c, true);
    for (size_t row = 0; row < ez.rows(); ++row)
        for (size_t c = 0; c < nn; ++c)
            if (ez.get(row, c)) gens.set(ex.rows() + row, nn + c, true);

    BinarySymplecticCode code(n, n, std::move(gens));

    QuantumCodeParams params;
    params.N = n * n;
    params.K = params.N - code.dim();
    if (params.K != n * (n - r - s))
        throw verification_error("build_css_code: K does not match n(n-r-s)");

    CodeProvenance prov{"css", field, alpha, sdn.generator(), std::nullopt, std::nullopt, r, s};
    return BuiltCode{std::move(code), params, std::move(prov)};
}

MatF2 symplectic_dual(const BinarySymplecticCode& code) {
    size_t half = static_cast<size_t>(code.layers()) * code.cells();
    const MatF2& g = code.generators();
    // <g, x>_S = (g Lambda) . x, and right-multiplying by Lambda swaps halves
    MatF2 swapped(g.rows(), g.cols());
    for (size_t r = 0; r < g.rows(); ++r)
        for (size_t c = 0; c < 2 * half; ++c)
            if (g.get(r, c)) swapped.set(r, (c + half) % (2 * half), true);
    return swapped.kernel();
}

namespace {

// Extracts `len` (<= 64) bits starting at position `pos` of a packed word array.
uint64_t window_bits(const std::vector<uint64_t>& w, size_t pos, unsigned len) {
    size_t word = pos >> 6;
    unsigned off = pos & 63;
    uint64_t out = w[word] >> off;
    if (off + len > 64) out |= w[word + 1] << (64 - off);
    return len == 64 ? out : out & ((uint64_t{1} << len) - 1);
}

// Rank of to_layer_matrix(v) with early exit, avoiding the matrix
// materialization when a layer row fits in one word.
unsigned layer_rank(const BitVec& v, unsigned layers, unsigned cells, unsigned limit) {
    if (2 * cells <= 64 && layers <= 64) {
        uint64_t rows[64];
        size_t half = static_cast<size_t>(layers) * cells;
        for (unsigned i = 0; i < layers; ++i) {
            uint64_t a = window_bits(v.words(), static_cast<size_t>(i) * cells, cells);
            uint64_t b = window_bits(v.words(), half + static_cast<size_t>(i) * cells, cells);
            rows[i] = a | (b << cells);
        }
        return rank_of_words(rows, layers, limit);
    }
    return static_cast<unsigned>(to_layer_matrix(v, layers, cells).rank());
}

struct EnumChunk {
    unsigned best = ~0u;
    BitVec witness;
    bool found = false;
};

// Enumerates dual-space indices [lo, hi) in Gray-code order, skipping
// members of C (reduction against its rref basis), and keeps the minimum
// layer rank with the lexicographically smallest witness.
void enumerate_chunk(const MatF2& dual, const MatF2& c_basis, const std::vector<size_t>& pivots,
                     unsigned layers, unsigned cells, uint64_t lo, uint64_t hi, EnumChunk& out) {
    size_t width = dual.cols();
    BitVec v(width);
    uint64_t gray_lo = lo ^ (lo >> 1);
    for (unsigned b = 0; b < dual.rows(); ++b)
        if ((gray_lo >> b) & 1) v ^= dual.row(b);

    BitVec scratch(width);
    for (uint64_t idx = lo; idx < hi; ++idx) {
        if (idx != lo) {
            unsigned flip = static_cast<unsigned>(std::countr_zero(idx));
            v ^= dual.row(flip);
        }
        // skip v in C
        scratch = v;
        for (size_t i = 0; i < c_basis.rows(); ++i)
            if (scratch.get(pivots[i])) scratch ^= c_basis.row(i);
        if (scratch.is_zero()) continue;

        unsigned limit = out.found ? out.best + 1 : 64;
        unsigned r = layer_rank(v, layers, cells, limit);
        if (!out.found || r < out.best || (r == out.best && v.lex_less(out.witness))) {
            out.best = r;
            out.witness = v;
            out.found = true;
        }
    }
}

std::vector<size_t> pivot_columns(const MatF2& basis) {
    std::vector<size_t> pivots(basis.rows());
    for (size_t r = 0; r < basis.rows(); ++r) {
        size_t c = 0;
        while (!basis.get(r, c)) ++c;
        pivots[r] = c;
    }
    return pivots;
}

}  // namespace

DistanceCertificate certify_distance(const BinarySymplecticCode& code, uint64_t budget,
                                     unsigned threads) {
    MatF2 dual = symplectic_dual(code);
    DistanceCertificate cert;

    if (dual.rows() == code.dim()) {
        // C is its own symplectic dual: the minimization domain is empty
        cert.d_r = std::nullopt;
        cert.certified = true;
        cert.note = "C equals its symplectic dual; minimum over C-perp minus C is undefined";
        return cert;
    }
    if (dual.rows() >= 64 || (uint64_t{1} << dual.rows()) > budget)
        throw budget_error("certify_distance: 2^dim(dual) exceeds the budget; "
                           "use sample_distance for a non-certifying upper bound");

    MatF2 c_basis = code.generators().row_basis();
    std::vector<size_t> pivots = pivot_columns(c_basis);
    uint64_t total = uint64_t{1} << dual.rows();

    if (threads < 1) threads = 1;
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, total));
    std::vector<EnumChunk> chunks(threads);
    if (threads == 1) {
        enumerate_chunk(dual, c_basis, pivots, code.layers(), code.cells(), 0, total, chunks[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            uint64_t lo = total / threads * t;
            uint64_t hi = (t + 1 == threads) ? total : total / threads * (t + 1);
            workers.emplace_back(enumerate_chunk, std::cref(dual), std::cref(c_basis),
                                 std::cref(pivots), code.layers(), code.cells(), lo, hi,
                                 std::ref(chunks[t]));
        }
        for (auto& w : workers) w.join();
    }

    // deterministic merge: min rank, then lexicographically smallest witness
    EnumChunk merged;
    for (const EnumChunk& c : chunks) {
        if (!c.found) continue;
        if (!merged.found || c.best < merged.best ||
            (c.best == merged.best && c.witness.lex_less(merged.witness))) {
            merged = c;
        }
    }
    if (!merged.found)
        throw verification_error("certify_distance: dual space collapsed unexpectedly");

    cert.d_r = merged.best;
    cert.certified = true;
    cert.witness = merged.witness;
    cert.witness_rank = merged.best;
    cert.enumerated = total;
    return cert;
}

DistanceCertificate sample_distance(const BinarySymplecticCode& code, uint64_t samples,
                                    uint64_t seed) {
    MatF2 dual = symplectic_dual(code);
    DistanceCertificate cert;
    if (dual.rows() == code.dim()) {
        cert.d_r = std::nullopt;
        cert.certified = true;
        cert.note = "C equals its symplectic dual; minimum over C-perp minus C is undefined";
        return cert;
    }
    MatF2 c_basis = code.generators().row_basis();
    std::vector<size_t> pivots = pivot_columns(c_basis);

    SplitMix64 rng(seed);
    EnumChunk best;
    for (uint64_t s = 0; s < samples; ++s) {
        BitVec v(dual.cols());
        for (size_t b = 0; b < dual.rows(); ++b)
            if (rng.bit()) v ^= dual.row(b);
        BitVec scratch = v;
        for (size_t i = 0; i < c_basis.rows(); ++i)
            if (scratch.get(pivots[i])) scratch ^= c_basis.row(i);
        if (scratch.is_zero()) continue;
        ++cert.enumerated;
        unsigned limit = best.found ? best.best + 1 : 64;
        unsigned r = layer_rank(v, code.layers(), code.cells(), limit);
        if (!best.found || r < best.best || (r == best.best && v.lex_less(best.witness))) {
            best.best = r;
            best.witness = v;
            best.found = true;
        }
    }
    if (best.found) {
        cert.d_r = best.best;
        cert.witness = best.witness;
        cert.witness_rank = best.best;
    }
    cert.certified = false;
    cert.note = "sampled upper bound; not a certificate";
    return cert;
}

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

ComparisonTable compare_table(unsigned n, unsigned k) {
    if (k < 1 || n <= k) throw std::invalid_argument("compare_table: need n > k >= 1");
    auto row = [&](const std::string& method, unsigned long long layers, unsigned long long cells,
                   unsigned long long big_k) {
        ComparisonRow r;
        r.method = method;
        r.layers = static_cast<unsigned>(layers);
        r.cells = static_cast<unsigned>(cells);
        r.N = layers * cells;
        r.K = big_k;
        r.D = k + 1;
        r.rate = Rational::make(static_cast<long long>(big_k), static_cast<long long>(r.N));
        r.delta = Rational::make(k + 1, static_cast<long long>(r.N));
        return r;
    };
    unsigned long long lm = 2ull * n - 1, lp = 2ull * n + 1;
    ComparisonTable t;
    t.rows.push_back(row("conventional(2n-1)", lm, lm, lm * (2ull * n - 2 * k - 1)));
    t.rows.push_back(row("conventional(2n+1)", lp, lp, lp * (2ull * n - 2 * k + 1)));
    t.rows.push_back(row("proposed", 2ull * n, n, 2ull * n * (n - k)));
    // delta_proposed / delta_conventional = (layers*cells)_conv / 2n^2
    t.delta_ratio_minus = Rational::make(static_cast<long long>(lm * lm),
                                         static_cast<long long>(2ull * n * n));
    t.delta_ratio_plus = Rational::make(static_cast<long long>(lp * lp),
                                        static_cast<long long>(2ull * n * n));
    return t;
}

}  // namespace qrank
