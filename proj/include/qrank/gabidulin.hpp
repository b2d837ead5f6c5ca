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
#include <functional>
#include <optional>
#include <vector>

#include "qrank/gf2field.hpp"

namespace qrank {

/// A vector over an extension field.
struct ExtVector {
    Field field;
    std::vector<uint64_t> entries;
};

/// Gab(alpha, k): evaluations of GF(2)-linearized polynomials of q-degree
/// below k at m independent points alpha. Generator row i is the
/// componentwise 2^i-th power of alpha, so the code is MRD with minimum
/// rank distance m - k + 1.
class GabidulinCode {
public:
    /// Throws std::invalid_argument if the alpha components are dependent
    /// over GF(2) or k is out of range.
    GabidulinCode(Field field, std::vector<uint64_t> alpha, unsigned k);

    const Field& field() const { return field_; }
    const std::vector<uint64_t>& alpha() const { return alpha_; }
    unsigned length() const { return static_cast<unsigned>(alpha_.size()); }
    unsigned dim() const { return k_; }
    const std::vector<std::vector<uint64_t>>& generator() const { return gen_; }

    /// message . generator, message length k over the extension field.
    std::vector<uint64_t> encode(const std::vector<uint64_t>& message) const;

private:
    Field field_;
    std::vector<uint64_t> alpha_;
    unsigned k_;
    std::vector<std::vector<uint64_t>> gen_;
};

/// Rank of the n x m bit matrix whose columns are the coordinates of the
/// entries of v in `basis`. Independent of the basis choice.
unsigned rank_weight(const ExtVector& v, const Basis& basis);
/// Same, expanding in the polynomial basis (the cheapest valid choice).
unsigned rank_weight(const ExtVector& v);

/// sum Tr(x_i y_i); bilinear and symmetric.
unsigned trace_inner_product(const ExtVector& x, const ExtVector& y);

/// sum x_i conj(y_i) with conj the half-degree Frobenius; requires even
/// field degree.
uint64_t hermitian_inner_product(const ExtVector& x, const ExtVector& y);

/// True iff every pair of generator rows is Hermitian-orthogonal.
bool is_hermitian_self_orthogonal(const GabidulinCode& code);

/// Basis rows (over the extension field) of { y : <c, y>_H = 0 for all
/// c in the code }, of dimension length - dim.
std::vector<std::vector<uint64_t>> hermitian_dual(const GabidulinCode& code);
/// Hermitian annihilator of the span of arbitrary extension-field rows.
std::vector<std::vector<uint64_t>> hermitian_dual(const Field& field,
                                                  const std::vector<std::vector<uint64_t>>& rows,
                                                  size_t width);

/// Componentwise 2^r-th power of a Frobenius orbit, i.e. the cyclic shift
/// (alpha^(2^r), alpha^(2^(r+1)), ..., alpha, ...).
std::vector<uint64_t> frobenius_shift(const Field& field, const std::vector<uint64_t>& alpha,
                                      unsigned r);

/// For a code whose alpha is the Frobenius orbit of a self-dual normal
/// basis generator and 1 <= r < n, the trace-dual code
/// Gab(alpha^(2^r), n - r). Throws std::invalid_argument on precondition
/// violations.
GabidulinCode trace_dual_code(const GabidulinCode& code);

/// Binary expansion of the code: one row per (field basis multiplier,
/// generator row) pair, each extension-field entry expanded in `basis`,
/// component-major. The row space is the GF(2) image of the code.
MatF2 binary_expansion(const GabidulinCode& code, const Basis& basis);
/// Binary expansion of a set of extension-field rows (not necessarily a
/// Gabidulin generator matrix).
MatF2 binary_expansion(const Field& field, const std::vector<std::vector<uint64_t>>& rows,
                       const Basis& basis);

struct RankDistanceResult {
    unsigned d = 0;
    std::vector<uint64_t> witness_message;  // over the extension field
    unsigned witness_rank = 0;
    uint64_t enumerated = 0;
    bool certified = false;
};

/// Exact minimum rank weight over all nonzero codewords, by enumeration of
/// the (2^n)^k - 1 messages in little-endian digit order. Throws
/// budget_error when the message count exceeds `budget`. The progress
/// callback, when set, is invoked with the running codeword count every
/// 2^16 evaluations.
RankDistanceResult min_rank_distance_bruteforce(
    const GabidulinCode& code, uint64_t budget = uint64_t{1} << 24,
    const std::function<void(uint64_t)>& progress = {});

/// Monte Carlo upper bound on the minimum rank weight; never certifying.
RankDistanceResult min_rank_distance_sampled(const GabidulinCode& code, uint64_t samples,
                                             uint64_t seed);

}  // namespace qrank
