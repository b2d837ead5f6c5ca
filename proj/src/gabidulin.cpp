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

#include "qrank/gabidulin.hpp"

#include <stdexcept>

#include "qrank/errors.hpp"
#include "qrank/rng.hpp"

namespace qrank {

namespace {

bool independent_over_f2(const std::vector<uint64_t>& elems) {
    return rank_of_words(elems.data(), elems.size()) == elems.size();
}

}  // namespace

GabidulinCode::GabidulinCode(Field field, std::vector<uint64_t> alpha, unsigned k)
    : field_(std::move(field)), alpha_(std::move(alpha)), k_(k) {
    if (alpha_.empty() || alpha_.size() > field_.degree())
        throw std::invalid_argument("GabidulinCode: need 1 <= m <= n evaluation points");
    for (uint64_t a : alpha_)
        if (a >= field_.order())
            throw std::invalid_argument("GabidulinCode: evaluation point out of field range");
    if (!independent_over_f2(alpha_))
        throw std::invalid_argument("GabidulinCode: evaluation points are dependent over GF(2)");
    if (k_ < 1 || k_ > alpha_.size())
        throw std::invalid_argument("GabidulinCode: dimension out of range");
    gen_.resize(k_);
    for (unsigned i = 0; i < k_; ++i) {
        gen_[i].resize(alpha_.size());
        for (size_t j = 0; j < alpha_.size(); ++j) gen_[i][j] = field_.frobenius(alpha_[j], i);
    }
}

std::vector<uint64_t> GabidulinCode::encode(const std::vector<uint64_t>& message) const {
    if (message.size() != k_) throw std::invalid_argument("encode: message length must be k");
    std::vector<uint64_t> out(alpha_.size(), 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (message[i] == 0) continue;
        for (size_t j = 0; j < out.size(); ++j)
            out[j] ^= field_.mul(message[i], gen_[i][j]);
    }
    return out;
}

unsigned rank_weight(const ExtVector& v, const Basis& basis) {
    if (!v.field.same(basis.field()))
        throw std::invalid_argument("rank_weight: basis belongs to a different field");
    std::vector<uint64_t> cols(v.entries.size());
    for (size_t i = 0; i < v.entries.size(); ++i) cols[i] = basis.expand(v.entries[i]);
    return rank_of_words(cols.data(), cols.size());
}

unsigned rank_weight(const ExtVector& v) {
    // the polynomial-basis expansion of an entry is the entry itself
    return rank_of_words(v.entries.data(), v.entries.size());
}

unsigned trace_inner_product(const ExtVector& x, const ExtVector& y) {
    if (!x.field.same(y.field) || x.entries.size() != y.entries.size())
        throw std::invalid_argument("trace_inner_product: shape mismatch");
    unsigned acc = 0;
    for (size_t i = 0; i < x.entries.size(); ++i)
        acc ^= x.field.trace(x.field.mul(x.entries[i], y.entries[i]));
    return acc;
}

uint64_t hermitian_inner_product(const ExtVector& x, const ExtVector& y) {
    if (!x.field.same(y.field) || x.entries.size() != y.entries.size())
        throw std::invalid_argument("hermitian_inner_product: shape mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < x.entries.size(); ++i)
        acc ^= x.field.mul(x.entries[i], x.field.herm_conj(y.entries[i]));
    return acc;
}

bool is_hermitian_self_orthogonal(const GabidulinCode& code) {
    const auto& g = code.generator();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i; j < g.size(); ++j)
            if (hermitian_inner_product({code.field(), g[i]}, {code.field(), g[j]}) != 0)
                return false;
    return true;
}

namespace {

// Basis rows of the right kernel of a matrix over the extension field,
// by Gaussian elimination with field inverses.
std::vector<std::vector<uint64_t>> ext_kernel(const Field& field,
                                              std::vector<std::vector<uint64_t>> rows,
                                              size_t width) {
    std::vector<size_t> pivots;
    size_t cur = 0;
    for (size_t col = 0; col < width && cur < rows.size(); ++col) {
        size_t sel = cur;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[cur], rows[sel]);
        uint64_t scale = field.inv(rows[cur][col]);
        for (size_t c = 0; c < width; ++c) rows[cur][c] = field.mul(rows[cur][c], scale);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != cur && rows[r][col] != 0) {
                uint64_t factor = rows[r][col];
                for (size_t c = 0; c < width; ++c)
                    rows[r][c] ^= field.mul(factor, rows[cur][c]);
            }
        }
        pivots.push_back(col);
        ++cur;
    }
    std::vector<bool> is_pivot(width, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<uint64_t>> kernel;
    for (size_t free_col = 0; free_col < width; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint64_t> v(width, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][free_col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

std::vector<std::vector<uint64_t>> hermitian_dual(const Field& field,
                                                  const std::vector<std::vector<uint64_t>>& rows,
                                                  size_t width) {
    if (field.degree() % 2 != 0)
        throw std::invalid_argument("hermitian_dual: field degree must be even");
    // <g, y>_H = 0 for all g  <=>  conj(y) lies in the Euclidean kernel of G
    auto kernel = ext_kernel(field, rows, width);
    for (auto& row : kernel)
        for (uint64_t& x : row) x = field.herm_conj(x);
    return kernel;
}

std::vector<std::vector<uint64_t>> hermitian_dual(const GabidulinCode& code) {
    return hermitian_dual(code.field(), code.generator(), code.length());
}

std::vector<uint64_t> frobenius_shift(const Field& field, const std::vector<uint64_t>& alpha,
                                      unsigned r) {
    std::vector<uint64_t> out(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) out[i] = field.frobenius(alpha[i], r);
    return out;
}

GabidulinCode trace_dual_code(const GabidulinCode& code) {
    const Field& field = code.field();
    unsigned n = field.degree();
    unsigned r = code.dim();
    if (code.length() != n)
        throw std::invalid_argument("trace_dual_code: alpha must be a full Frobenius orbit");
    if (r >= n) throw std::invalid_argument("trace_dual_code: need 1 <= r < n");
    const auto& alpha = code.alpha();
    for (unsigned i = 0; i < n; ++i)
        if (alpha[i] != field.frobenius(alpha[0], i))
            throw std::invalid_argument("trace_dual_code: alpha is not a Frobenius orbit");
    if (!is_self_dual_basis(field, alpha))
        throw std::invalid_argument("trace_dual_code: alpha is not a self-dual basis");
    return GabidulinCode(field, frobenius_shift(field, alpha, r), n - r);
}

MatF2 binary_expansion(const Field& field, const std::vector<std::vector<uint64_t>>& rows,
                       const Basis& basis) {
    unsigned n = field.degree();
    size_t width = rows.empty() ? 0 : rows[0].size();
    MatF2 out(rows.size() * n, width * n);
    size_t r = 0;
    for (const auto& row : rows) {
        for (unsigned e = 0; e < n; ++e, ++r) {
            uint64_t mult = uint64_t{1} << e;  // polynomial-basis multipliers
            for (size_t j = 0; j < row.size(); ++j) {
                uint64_t coords = basis.expand(field.mul(mult, row[j]));
                for (unsigned b = 0; b < n; ++b)
                    if ((coords >> b) & 1) out.set(r, j * n + b, true);
            }
        }
    }
    return out;
}

MatF2 binary_expansion(const GabidulinCode& code, const Basis& basis) {
    return binary_expansion(code.field(), code.generator(), basis);
}

namespace {

// Enumerates messages 1 .. q^k - 1 in little-endian digit order, calling
// fn(message, codeword) for each. Messages and codewords are updated
// incrementally (one digit bumps per step).
template <typename Fn>
void enumerate_codewords(const GabidulinCode& code, Fn&& fn) {
    const Field& field = code.field();
    uint64_t q = field.order();
    unsigned k = code.dim();
    std::vector<uint64_t> message(k, 0);
    std::vector<uint64_t> codeword(code.length(), 0);
    const auto& gen = code.generator();
    for (;;) {
        // increment with carry in base q
        unsigned pos = 0;
        while (pos < k) {
            uint64_t old = message[pos];
            uint64_t next = old + 1;
            if (next == q) next = 0;
            message[pos] = next;
            uint64_t delta = old ^ next;
            for (size_t j = 0; j < codeword.size(); ++j)
                codeword[j] ^= field.mul(delta, gen[pos][j]);
            if (next != 0) break;
            ++pos;
        }
        if (pos == k) return;  // wrapped around to the zero message
        fn(message, codeword);
    }
}

}  // namespace

RankDistanceResult min_rank_distance_bruteforce(const GabidulinCode& code, uint64_t budget,
                                                const std::function<void(uint64_t)>& progress) {
    const Field& field = code.field();
    unsigned k = code.dim();
    // message count q^k, watching for overflow
    long double total_ld = 1;
    for (unsigned i = 0; i < k; ++i) total_ld *= static_cast<long double>(field.order());
    if (total_ld > static_cast<long double>(budget))
        throw budget_error(
            "min_rank_distance_bruteforce: message space exceeds the enumeration budget; "
            "use min_rank_distance_sampled for a non-certifying estimate");

    RankDistanceResult res;
    res.certified = true;
    unsigned best = code.length() + 1;
    enumerate_codewords(code, [&](const std::vector<uint64_t>& message,
                                  const std::vector<uint64_t>& codeword) {
        ++res.enumerated;
        unsigned r = rank_of_words(codeword.data(), codeword.size(), best);
        if (r < best) {
            best = r;
            res.witness_message = message;
        }
        if (progress && (res.enumerated & 0xffff) == 0) progress(res.enumerated);
    });
    res.d = best;
    res.witness_rank = best;
    return res;
}

RankDistanceResult min_rank_distance_sampled(const GabidulinCode& code, uint64_t samples,
                                             uint64_t seed) {
    const Field& field = code.field();
    SplitMix64 rng(seed);
    RankDistanceResult res;
    res.certified = false;
    unsigned best = code.length() + 1;
    std::vector<uint64_t> message(code.dim());
    for (uint64_t s = 0; s < samples; ++s) {
        bool nonzero = false;
        for (auto& digit : message) {
            digit = rng.below(field.order());
            nonzero |= digit != 0;
        }
        if (!nonzero) continue;
        ++res.enumerated;
        std::vector<uint64_t> codeword = code.encode(message);
        unsigned r = rank_of_words(codeword.data(), codeword.size(), best);
        if (r < best) {
            best = r;
            res.witness_message = message;
        }
    }
    res.d = best;
    res.witness_rank = best;
    return res;
}

}  // namespace qrank
