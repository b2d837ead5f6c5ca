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

#include "qrank/gf2field.hpp"

#include <bit>
#include <stdexcept>

#include "qrank/errors.hpp"

namespace qrank {

namespace {

int poly_degree(uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

uint64_t poly_mod(uint64_t a, uint64_t p) {
    int dp = poly_degree(p);
    int da;
    while ((da = poly_degree(a)) >= dp) a ^= p << (da - dp);
    return a;
}

uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t p) {
    // degrees stay below 32, so the carryless product fits in 64 bits
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return poly_mod(r, p);
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

bool is_irreducible_poly(uint64_t p) {
    int n = poly_degree(p);
    if (n < 1) return false;
    if ((p & 1) == 0) return n == 1;  // divisible by x
    // p has an irreducible factor of degree d <= n/2 iff gcd(p, x^(2^d) - x) != 1
    uint64_t t = 2;  // the polynomial x
    for (int d = 1; d <= n / 2; ++d) {
        t = poly_mulmod(t, t, p);
        if (poly_gcd(t ^ 2, p) != 1) return false;
    }
    return true;
}

uint64_t find_irreducible(unsigned n) {
    if (n < 1 || n > 32) throw std::invalid_argument("find_irreducible: degree must be in [1, 32]");
    for (uint64_t p = uint64_t{1} << n; p < (uint64_t{1} << (n + 1)); ++p)
        if (is_irreducible_poly(p)) return p;
    throw std::logic_error("find_irreducible: unreachable");
}

namespace detail {

struct FieldTables {
    unsigned degree;
    uint64_t modulus;
    uint64_t nonzero;  // 2^degree - 1
    std::vector<uint32_t> log, antilog;  // built for degree <= 20

    FieldTables(unsigned n, uint64_t mod) : degree(n), modulus(mod) {
        nonzero = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        if (n >= 2 && n <= 20) build_tables();
    }

    uint64_t mul_slow(uint64_t a, uint64_t b) const { return poly_mulmod(a, b, modulus); }

    uint64_t mul(uint64_t a, uint64_t b) const {
        if (!log.empty()) {
            if (a == 0 || b == 0) return 0;
            uint64_t s = log[a] + log[b];
            if (s >= nonzero) s -= nonzero;
            return antilog[s];
        }
        return mul_slow(a, b);
    }

private:
    void build_tables() {
        uint64_t g = find_generator();
        log.assign(nonzero + 1, 0);
        antilog.assign(nonzero, 0);
        uint64_t x = 1;
        for (uint64_t i = 0; i < nonzero; ++i) {
            antilog[i] = static_cast<uint32_t>(x);
            log[x] = static_cast<uint32_t>(i);
            x = mul_slow(x, g);
        }
    }

    bool order_check(uint64_t g, const std::vector<uint64_t>& prime_factors) const {
        for (uint64_t p : prime_factors) {
            uint64_t e = nonzero / p, r = 1, base = g;
            while (e) {
                if (e & 1) r = mul_slow(r, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    }

    uint64_t find_generator() const {
        std::vector<uint64_t> primes;
        uint64_t m = nonzero;
        for (uint64_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) primes.push_back(m);
        for (uint64_t g = 2; g <= nonzero; ++g)
            if (order_check(g, primes)) return g;
        return 1;  // GF(2): the only unit
    }
};

}  // namespace detail

Field::Field(unsigned degree) : Field(degree, find_irreducible(degree)) {}

Field::Field(unsigned degree, uint64_t modulus) {
    if (degree < 1 || degree > 32)
        throw std::invalid_argument("Field: degree must be in [1, 32]");
    if (poly_degree(modulus) != static_cast<int>(degree))
        throw std::invalid_argument("Field: modulus degree does not match");
    if (!is_irreducible_poly(modulus))
        throw std::invalid_argument("Field: modulus is reducible");
    p_ = std::make_shared<detail::FieldTables>(degree, modulus);
}

unsigned Field::degree() const { return p_->degree; }
uint64_t Field::modulus() const { return p_->modulus; }
uint64_t Field::order() const { return p_->nonzero + 1; }

uint64_t Field::mul(uint64_t a, uint64_t b) const { return p_->mul(a, b); }

uint64_t Field::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a &= p_->nonzero;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("Field: division by zero");
    return pow(a, p_->nonzero - 1);  // a^(2^n - 2)
}

uint64_t Field::frobenius(uint64_t a, unsigned r) const {
    r %= degree();  // a^(2^n) = a
    for (unsigned i = 0; i < r; ++i) a = mul(a, a);
    return a;
}

unsigned Field::trace(uint64_t a) const {
    uint64_t acc = 0, x = a;
    for (unsigned i = 0; i < degree(); ++i) {
        acc ^= x;
        x = mul(x, x);
    }
    // the trace lies in the prime field
    return static_cast<unsigned>(acc & 1);
}

uint64_t Field::herm_conj(uint64_t a) const {
    if (degree() % 2 != 0)
        throw std::invalid_argument("herm_conj: field degree must be even");
    return frobenius(a, degree() / 2);
}

Fe operator+(const Fe& a, const Fe& b) {
    if (!a.field_.same(b.field_)) throw std::invalid_argument("Fe: mixed fields");
    return Fe(a.field_, a.bits_ ^ b.bits_);
}

Fe operator*(const Fe& a, const Fe& b) {
    if (!a.field_.same(b.field_)) throw std::invalid_argument("Fe: mixed fields");
    return Fe(a.field_, a.field_.mul(a.bits_, b.bits_));
}

namespace {

MatF2 coordinate_rows(const Field& field, const std::vector<uint64_t>& elems) {
    MatF2 m(elems.size(), field.degree());
    for (size_t r = 0; r < elems.size(); ++r)
        for (unsigned c = 0; c < field.degree(); ++c)
            if ((elems[r] >> c) & 1) m.set(r, c, true);
    return m;
}

bool independent(const Field& field, const std::vector<uint64_t>& elems) {
    return coordinate_rows(field, elems).rank() == elems.size();
}

MatF2 trace_gram(const Field& field, const std::vector<uint64_t>& elems) {
    size_t n = elems.size();
    MatF2 g(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (field.trace(field.mul(elems[i], elems[j]))) g.set(i, j, true);
    return g;
}

}  // namespace

Basis::Basis(Field field, std::vector<uint64_t> elements, BasisKind kind,
             std::optional<uint64_t> generator)
    : field_(std::move(field)), elems_(std::move(elements)), kind_(kind), gen_(generator) {
    unsigned n = field_.degree();
    if (elems_.size() != n) throw std::invalid_argument("Basis: wrong element count");
    for (uint64_t e : elems_)
        if (e >= field_.order()) throw std::invalid_argument("Basis: element out of field range");
    coord_rows_ = coordinate_rows(field_, elems_);
    if (coord_rows_.rank() != n) throw std::invalid_argument("Basis: elements are dependent");
    coord_inv_ = coord_rows_.inverse();

    bool need_normal = kind_ == BasisKind::normal || kind_ == BasisKind::self_dual_normal;
    bool need_self_dual = kind_ == BasisKind::self_dual || kind_ == BasisKind::self_dual_normal;
    if (need_normal) {
        if (!gen_) gen_ = elems_[0];
        for (unsigned i = 0; i < n; ++i)
            if (elems_[i] != field_.frobenius(*gen_, i))
                throw std::invalid_argument("Basis: not the Frobenius orbit of its generator");
    }
    if (need_self_dual && trace_gram(field_, elems_) != MatF2::identity(n))
        throw std::invalid_argument("Basis: trace Gram matrix is not the identity");
}

uint64_t Basis::expand(uint64_t a) const {
    BitVec v(field_.degree());
    for (unsigned c = 0; c < field_.degree(); ++c)
        if ((a >> c) & 1) v.set(c, true);
    BitVec coords = mul(v, coord_inv_);
    uint64_t out = 0;
    for (unsigned c = 0; c < field_.degree(); ++c)
        if (coords.get(c)) out |= uint64_t{1} << c;
    return out;
}

uint64_t Basis::combine(uint64_t coords) const {
    uint64_t out = 0;
    for (unsigned i = 0; i < field_.degree(); ++i)
        if ((coords >> i) & 1) out ^= elems_[i];
    return out;
}

bool is_self_dual_basis(const Field& field, const std::vector<uint64_t>& elements) {
    if (elements.size() != field.degree()) return false;
    for (uint64_t e : elements)
        if (e >= field.order()) return false;
    if (!independent(field, elements)) return false;
    return trace_gram(field, elements) == MatF2::identity(field.degree());
}

Basis find_self_dual_basis(const Field& field) {
    unsigned n = field.degree();
    // Orthonormalize the polynomial basis under the trace form. The
    // quadratic values Q(x) = Tr(x^2) = Tr(x) drive the case split.
    std::vector<uint64_t> pool;
    for (unsigned i = 0; i < n; ++i) pool.push_back(uint64_t{1} << i);
    auto form = [&](uint64_t x, uint64_t y) { return field.trace(field.mul(x, y)); };

    std::vector<uint64_t> ortho;
    while (!pool.empty()) {
        // lowest-index vector with Tr(u^2) = 1, if any
        size_t sel = pool.size();
        for (size_t i = 0; i < pool.size(); ++i) {
            if (form(pool[i], pool[i])) {
                sel = i;
                break;
            }
        }
        if (sel < pool.size()) {
            uint64_t u = pool[sel];
            pool.erase(pool.begin() + sel);
            for (uint64_t& w : pool)
                if (form(w, u)) w ^= u;
            ortho.push_back(u);
            continue;
        }
        // The remaining pool is alternating; split off a hyperbolic pair
        // (u, v) and repair it with the latest orthonormal vector e:
        // {e+u, e+v, e+u+v} is orthonormal and spans the same space.
        if (ortho.empty())
            throw verification_error("find_self_dual_basis: no anisotropic vector available");
        uint64_t u = pool.front();
        pool.erase(pool.begin());
        size_t partner = pool.size();
        for (size_t i = 0; i < pool.size(); ++i) {
            if (form(u, pool[i])) {
                partner = i;
                break;
            }
        }
        if (partner == pool.size())
            throw verification_error("find_self_dual_basis: trace form degenerate");
        uint64_t v = pool[partner];
        pool.erase(pool.begin() + partner);
        for (uint64_t& w : pool) {
            if (form(w, v)) w ^= u;
            if (form(w, u)) w ^= v;
        }
        uint64_t e = ortho.back();
        ortho.pop_back();
        ortho.push_back(e ^ u);
        ortho.push_back(e ^ v);
        ortho.push_back(e ^ u ^ v);
    }

    if (!is_self_dual_basis(field, ortho))
        throw verification_error("find_self_dual_basis: output failed the Gram check");
    return Basis(field, ortho, BasisKind::self_dual);
}

namespace {

std::vector<uint64_t> frobenius_orbit(const Field& field, uint64_t theta) {
    std::vector<uint64_t> orbit(field.degree());
    for (unsigned i = 0; i < field.degree(); ++i) orbit[i] = field.frobenius(theta, i);
    return orbit;
}

}  // namespace

Basis find_normal_basis(const Field& field, std::optional<uint64_t> theta) {
    if (theta) {
        if (*theta >= field.order())
            throw std::invalid_argument("find_normal_basis: theta out of field range");
        std::vector<uint64_t> orbit = frobenius_orbit(field, *theta);
        if (!independent(field, orbit))
            throw std::invalid_argument("find_normal_basis: theta does not generate a normal basis");
        return Basis(field, orbit, BasisKind::normal, *theta);
    }
    for (uint64_t cand = 1; cand < field.order(); ++cand) {
        std::vector<uint64_t> orbit = frobenius_orbit(field, cand);
        if (independent(field, orbit)) return Basis(field, orbit, BasisKind::normal, cand);
    }
    throw std::logic_error("find_normal_basis: unreachable (normal bases always exist)");
}

Basis find_self_dual_normal_basis(const Field& field) {
    if (field.degree() % 2 == 0)
        throw std::invalid_argument("find_self_dual_normal_basis: degree must be odd");
    for (uint64_t cand = 1; cand < field.order(); ++cand) {
        std::vector<uint64_t> orbit = frobenius_orbit(field, cand);
        if (independent(field, orbit) && is_self_dual_basis(field, orbit))
            return Basis(field, orbit, BasisKind::self_dual_normal, cand);
    }
    throw verification_error("find_self_dual_normal_basis: search exhausted");
}

}  // namespace qrank
