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

#include "qrank/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qrank {

bool BitVec::lex_less(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("lex_less: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t diff = w_[i] ^ o.w_[i];
        if (diff) {
            uint64_t lowest = diff & ~(diff - 1);
            return (w_[i] & lowest) == 0;  // 0 at the first differing component wins
        }
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit vector text must be '0'/'1'");
    }
    return v;
}

unsigned dot_f2(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_f2: length mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < a.words().size(); ++i) acc ^= a.words()[i] & b.words()[i];
    return std::popcount(acc) & 1;
}

MatF2 MatF2::identity(size_t n) {
    MatF2 m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void MatF2::xor_row(size_t dst, size_t src) {
    uint64_t* d = row_words(dst);
    const uint64_t* s = row_words(src);
    for (size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void MatF2::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    uint64_t* pa = row_words(a);
    uint64_t* pb = row_words(b);
    for (size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

bool MatF2::row_is_zero(size_t r) const {
    const uint64_t* p = row_words(r);
    for (size_t i = 0; i < wpr_; ++i)
        if (p[i]) return false;
    return true;
}

BitVec MatF2::row(size_t r) const {
    BitVec v(cols_);
    const uint64_t* p = row_words(r);
    std::copy(p, p + wpr_, v.words().begin());
    return v;
}

void MatF2::set_row(size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: width mismatch");
    std::copy(v.words().begin(), v.words().end(), row_words(r));
}

void MatF2::append_row(const BitVec& v) {
    if (rows_ == 0 && cols_ == 0) {
        *this = MatF2(0, v.size());
    }
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.resize((rows_ + 1) * wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

MatF2 MatF2::vstack(const MatF2& top, const MatF2& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column mismatch");
    MatF2 out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
    return out;
}

MatF2 MatF2::submatrix_rows(size_t first, size_t count) const {
    if (first + count > rows_) throw std::invalid_argument("submatrix_rows: out of range");
    MatF2 out(count, cols_);
    std::copy(data_.begin() + first * wpr_, data_.begin() + (first + count) * wpr_,
              out.data_.begin());
    return out;
}

MatF2 MatF2::transposed() const {
    MatF2 out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

namespace {

// In-place elimination; returns the pivot columns. `reduce_above` gives
// full rref, otherwise row echelon only.
std::vector<size_t> eliminate(MatF2& m, bool reduce_above) {
    std::vector<size_t> pivots;
    size_t cur = 0;
    for (size_t col = 0; col < m.cols() && cur < m.rows(); ++col) {
        size_t sel = cur;
        while (sel < m.rows() && !m.get(sel, col)) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(cur, sel);
        for (size_t r = reduce_above ? 0 : cur + 1; r < m.rows(); ++r) {
            if (r != cur && m.get(r, col)) m.xor_row(r, cur);
        }
        pivots.push_back(col);
        ++cur;
    }
    return pivots;
}

}  // namespace

size_t MatF2::rank() const {
    MatF2 copy = *this;
    return eliminate(copy, false).size();
}

MatF2 MatF2::rref() const {
    MatF2 copy = *this;
    eliminate(copy, true);
    return copy;
}

MatF2 MatF2::row_basis() const {
    MatF2 r = rref();
    size_t nz = r.rows_;
    while (nz > 0 && r.row_is_zero(nz - 1)) --nz;
    return r.submatrix_rows(0, nz);
}

MatF2 MatF2::kernel() const {
    MatF2 r = *this;
    std::vector<size_t> pivots = eliminate(r, true);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;

    MatF2 out(cols_ - pivots.size(), cols_);
    size_t row = 0;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set(row, free_col, true);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, free_col)) out.set(row, pivots[i], true);
        ++row;
    }
    return out;
}

MatF2 MatF2::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse: matrix not square");
    MatF2 aug(rows_, 2 * cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_ + r, true);
    }
    std::vector<size_t> pivots = eliminate(aug, true);
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw std::domain_error("inverse: matrix is singular");
    MatF2 out(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.set(r, c, aug.get(r, cols_ + c));
    return out;
}

std::string MatF2::to_text() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

MatF2 MatF2::from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) return MatF2(0, 0);
    MatF2 out(lines.size(), lines[0].size());
    for (size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != lines[0].size())
            throw std::invalid_argument("matrix text: ragged rows");
        for (size_t c = 0; c < lines[r].size(); ++c) {
            if (lines[r][c] == '1')
                out.set(r, c, true);
            else if (lines[r][c] != '0')
                throw std::invalid_argument("matrix text must be '0'/'1'");
        }
    }
    return out;
}

MatF2 mul(const MatF2& a, const MatF2& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    MatF2 out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        uint64_t* dst = out.row_words(r);
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.get(r, k)) {
                const uint64_t* src = b.row_words(k);
                for (size_t i = 0; i < out.words_per_row(); ++i) dst[i] ^= src[i];
            }
        }
    }
    return out;
}

BitVec mul(const BitVec& v, const MatF2& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("mul: shape mismatch");
    BitVec out(m.cols());
    for (size_t k = 0; k < m.rows(); ++k) {
        if (v.get(k)) {
            const uint64_t* src = m.row_words(k);
            for (size_t i = 0; i < out.words().size(); ++i) out.words()[i] ^= src[i];
        }
    }
    return out;
}

bool subspace_equal(const MatF2& a, const MatF2& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspace_equal: column mismatch");
    return a.row_basis() == b.row_basis();
}

bool subspace_contains(const MatF2& a, const MatF2& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspace_contains: column mismatch");
    MatF2 basis = a.row_basis();
    // pivot column of each basis row
    std::vector<size_t> pivots(basis.rows());
    for (size_t r = 0; r < basis.rows(); ++r) {
        size_t c = 0;
        while (!basis.get(r, c)) ++c;
        pivots[r] = c;
    }
    for (size_t r = 0; r < b.rows(); ++r) {
        BitVec v = b.row(r);
        for (size_t i = 0; i < basis.rows(); ++i)
            if (v.get(pivots[i])) v ^= basis.row(i);
        if (!v.is_zero()) return false;
    }
    return true;
}

MatF2 symplectic_gram_matrix(size_t n) {
    MatF2 s(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        s.set(i, n + i, true);
        s.set(n + i, i, true);
    }
    return s;
}

MatF2 alternating_congruence(const MatF2& t) {
    size_t dim = t.rows();
    if (t.cols() != dim || dim % 2 != 0)
        throw std::invalid_argument("alternating_congruence: T must be 2n x 2n");
    for (size_t i = 0; i < dim; ++i) {
        if (t.get(i, i)) throw std::invalid_argument("alternating_congruence: nonzero diagonal");
        for (size_t j = i + 1; j < dim; ++j)
            if (t.get(i, j) != t.get(j, i))
                throw std::invalid_argument("alternating_congruence: T not symmetric");
    }
    if (t.rank() != dim) throw std::invalid_argument("alternating_congruence: T is singular");

    size_t n = dim / 2;
    // Current basis vectors, expressed over the standard basis.
    std::vector<BitVec> pool;
    for (size_t i = 0; i < dim; ++i) {
        BitVec e(dim);
        e.set(i, true);
        pool.push_back(e);
    }
    auto form = [&](const BitVec& x, const BitVec& y) -> unsigned {
        return dot_f2(x, mul(y, t));  // x T y^T; T is symmetric, so y T = (T y^T)^T
    };

    std::vector<BitVec> us, vs;
    while (!pool.empty()) {
        BitVec u = pool.front();
        pool.erase(pool.begin());
        size_t partner = pool.size();
        for (size_t j = 0; j < pool.size(); ++j) {
            if (form(u, pool[j])) {
                partner = j;
                break;
            }
        }
        if (partner == pool.size())
            throw std::invalid_argument("alternating_congruence: degenerate form");
        BitVec v = pool[partner];
        pool.erase(pool.begin() + partner);
        for (BitVec& w : pool) {
            if (form(w, v)) w ^= u;
            if (form(w, u)) w ^= v;
        }
        us.push_back(u);
        vs.push_back(v);
    }

    MatF2 d(dim, dim);
    for (size_t i = 0; i < n; ++i) {
        d.set_row(i, us[i]);
        d.set_row(n + i, vs[i]);
    }
    return d;
}

unsigned rank_of_words(const uint64_t* rows, size_t count, unsigned limit) {
    uint64_t basis[64] = {};  // basis[b] has highest set bit b, or is empty
    unsigned rank = 0;
    for (size_t i = 0; i < count && rank < limit; ++i) {
        uint64_t row = rows[i];
        while (row) {
            unsigned b = 63 - static_cast<unsigned>(std::countl_zero(row));
            if (!basis[b]) {
                basis[b] = row;
                ++rank;
                break;
            }
            row ^= basis[b];
        }
    }
    return rank;
}

}  // namespace qrank
