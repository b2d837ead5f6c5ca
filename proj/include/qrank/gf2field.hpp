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
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrank/f2linalg.hpp"

namespace qrank {

/// True iff the bit-polynomial p (little-endian, coefficient of x^i at
/// bit i) is irreducible over GF(2).
bool is_irreducible_poly(uint64_t p);

/// The lexicographically smallest monic irreducible polynomial of degree n
/// when bit sequences are read as integers. 1 <= n <= 32.
uint64_t find_irreducible(unsigned n);

namespace detail {
struct FieldTables;
}

/// GF(2^n) for 1 <= n <= 32, defined by an irreducible modulus polynomial.
/// Elements are n-bit polynomial residues, coefficient of x^i at bit i.
///
/// A Field is a cheap copyable handle; two handles denote the same field
/// iff their (degree, modulus) pairs agree. All operations are pure and
/// safe to share across threads.
class Field {
public:
    /// Field with the default (lexicographically smallest) modulus.
    explicit Field(unsigned degree);
    /// Field with an explicit modulus; throws std::invalid_argument if the
    /// modulus does not have degree `degree` or is reducible.
    Field(unsigned degree, uint64_t modulus);

    unsigned degree() const;
    uint64_t modulus() const;
    uint64_t order() const;  // 2^degree

    bool same(const Field& o) const { return degree() == o.degree() && modulus() == o.modulus(); }

    // Arithmetic on raw n-bit residues. add is plain XOR.
    static uint64_t add(uint64_t a, uint64_t b) { return a ^ b; }
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;     // square-and-multiply
    uint64_t inv(uint64_t a) const;                 // a^(2^n - 2); throws on a = 0
    uint64_t frobenius(uint64_t a, unsigned r) const;  // a^(2^r)
    unsigned trace(uint64_t a) const;               // Tr to GF(2), as 0/1
    /// a^(2^(n/2)); requires even degree, throws std::invalid_argument
    /// otherwise. An involutory automorphism.
    uint64_t herm_conj(uint64_t a) const;

private:
    std::shared_ptr<const detail::FieldTables> p_;
};

/// A field element bundled with its field, with checked operators.
/// Mixing elements of different fields throws std::invalid_argument.
class Fe {
public:
    Fe(Field field, uint64_t bits) : field_(std::move(field)), bits_(bits) {
        if (bits_ >= field_.order()) throw std::invalid_argument("Fe: bits out of field range");
    }

    const Field& field() const { return field_; }
    uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    Fe pow(uint64_t e) const { return Fe(field_, field_.pow(bits_, e)); }
    Fe inv() const { return Fe(field_, field_.inv(bits_)); }
    Fe frobenius(unsigned r) const { return Fe(field_, field_.frobenius(bits_, r)); }
    Fe herm_conj() const { return Fe(field_, field_.herm_conj(bits_)); }
    unsigned trace() const { return field_.trace(bits_); }

    bool operator==(const Fe& o) const { return field_.same(o.field_) && bits_ == o.bits_; }
    bool operator!=(const Fe& o) const { return !(*this == o); }

private:
    Field field_;
    uint64_t bits_;
};

enum class BasisKind { general, self_dual, normal, self_dual_normal };

/// An ordered basis of GF(2^n) over GF(2). Construction verifies linear
/// independence and whatever the declared kind promises:
///   self_dual         Tr(b_i b_j) = delta_ij
///   normal            b_i = theta^(2^i) for the recorded generator theta
///   self_dual_normal  both
class Basis {
public:
    Basis(Field field, std::vector<uint64_t> elements, BasisKind kind,
          std::optional<uint64_t> generator = std::nullopt);

    const Field& field() const { return field_; }
    const std::vector<uint64_t>& elements() const { return elems_; }
    BasisKind kind() const { return kind_; }
    std::optional<uint64_t> generator() const { return gen_; }
    unsigned size() const { return static_cast<unsigned>(elems_.size()); }

    /// Coordinates of a in this basis, packed little-endian (bit j is the
    /// coefficient of elements()[j]).
    uint64_t expand(uint64_t a) const;
    /// Inverse of expand.
    uint64_t combine(uint64_t coords) const;

private:
    Field field_;
    std::vector<uint64_t> elems_;
    BasisKind kind_;
    std::optional<uint64_t> gen_;
    MatF2 coord_rows_;  // row j = bits of elems_[j]
    MatF2 coord_inv_;
};

/// True iff the elements are independent and their trace Gram matrix is
/// the identity.
bool is_self_dual_basis(const Field& field, const std::vector<uint64_t>& elements);

/// Deterministic self-dual basis: orthonormalizes the polynomial basis
/// under the trace form (Gram-Schmidt over GF(2) with hyperbolic repair).
/// The result always passes is_self_dual_basis; a failure throws
/// verification_error.
Basis find_self_dual_basis(const Field& field);

/// First theta in ascending bit order whose Frobenius orbit has full rank;
/// or the orbit of the supplied theta. Throws std::invalid_argument if the
/// supplied theta does not generate a normal basis.
Basis find_normal_basis(const Field& field, std::optional<uint64_t> theta = std::nullopt);

/// First theta in ascending bit order whose Frobenius orbit is a self-dual
/// normal basis. Requires odd degree (throws std::invalid_argument for
/// even degree; existence is guaranteed for odd degree over GF(2)).
Basis find_self_dual_normal_basis(const Field& field);

}  // namespace qrank
