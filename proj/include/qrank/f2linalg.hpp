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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qrank {

/// Bit vector over GF(2), little-endian packed into 64-bit words
/// (component i lives at bit i % 64 of word i / 64).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    /// Lexicographic order reading components from index 0 upward; the
    /// vector with a 0 at the first differing position is smaller.
    bool lex_less(const BitVec& o) const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    std::string to_string() const;  // '0'/'1' characters, component 0 first
    static BitVec from_string(const std::string& s);

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Parity of the Euclidean inner product a . b over GF(2).
unsigned dot_f2(const BitVec& a, const BitVec& b);

/// Dense bit matrix over GF(2), row-major word-packed storage.
class MatF2 {
public:
    MatF2() = default;
    MatF2(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static MatF2 identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (row_words(r)[c >> 6] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t{1} << (c & 63);
        if (v)
            row_words(r)[c >> 6] |= mask;
        else
            row_words(r)[c >> 6] &= ~mask;
    }

    uint64_t* row_words(size_t r) { return data_.data() + r * wpr_; }
    const uint64_t* row_words(size_t r) const { return data_.data() + r * wpr_; }
    size_t words_per_row() const { return wpr_; }

    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    bool row_is_zero(size_t r) const;

    BitVec row(size_t r) const;
    void set_row(size_t r, const BitVec& v);
    void append_row(const BitVec& v);

    /// Vertical concatenation; column counts must agree.
    static MatF2 vstack(const MatF2& top, const MatF2& bottom);
    MatF2 submatrix_rows(size_t first, size_t count) const;

    MatF2 transposed() const;

    size_t rank() const;

    /// Canonical reduced row echelon form: pivot columns strictly
    /// increasing, cleared above and below, zero rows at the bottom.
    /// Unique per row space, so equal row spaces give equal rref rows.
    MatF2 rref() const;

    /// Rows forming a canonical basis of the row space (rref without the
    /// zero rows).
    MatF2 row_basis() const;

    /// Basis rows of { x : M x^T = 0 }; (cols - rank) rows of width cols.
    MatF2 kernel() const;

    /// Inverse of a square full-rank matrix; throws std::domain_error if
    /// singular or non-square.
    MatF2 inverse() const;

    bool operator==(const MatF2& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const MatF2& o) const { return !(*this == o); }

    std::string to_text() const;  // one line of '0'/'1' per row
    static MatF2 from_text(const std::string& text);

private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

/// A * B over GF(2); throws std::invalid_argument on shape mismatch.
MatF2 mul(const MatF2& a, const MatF2& b);

/// Row vector times matrix.
BitVec mul(const BitVec& v, const MatF2& m);

/// True iff rowspace(a) == rowspace(b). Column counts must match.
bool subspace_equal(const MatF2& a, const MatF2& b);

/// True iff rowspace(a) contains rowspace(b).
bool subspace_contains(const MatF2& a, const MatF2& b);

/// The 2n x 2n block matrix [[0, I_n], [I_n, 0]] (over GF(2) the sign of
/// the lower block is immaterial).
MatF2 symplectic_gram_matrix(size_t n);

/// Given an invertible alternating 2n x 2n matrix T (symmetric with zero
/// diagonal), returns an invertible D with D T D^T = symplectic_gram_matrix(n).
/// Deterministic: hyperbolic pairs are extracted in lowest-index order and
/// pair i contributes rows i and n+i of D. Throws std::invalid_argument if
/// T is not alternating or not invertible.
MatF2 alternating_congruence(const MatF2& t);

/// Rank of a list of single-word rows (matrices of at most 64 columns),
/// stopping early once `limit` is reached. This is the hot path of every
/// enumeration loop; pass 64 for the exact rank.
unsigned rank_of_words(const uint64_t* rows, size_t count, unsigned limit = 64);

}  // namespace qrank
