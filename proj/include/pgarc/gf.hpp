#pragma once

#include <cstdint>
#include <vector>

#include "pgarc/error.hpp"

namespace pgarc {

// Exact arithmetic in GF(q), q = p^h. Elements are integer codes in [0, q):
// the base-p digits of a code are the coefficients of the polynomial
// representative, constant term in the least significant digit.
//
// Internal representation tiers (all behind the same interface):
//   q <= 2^10   dense q*q add/mul tables            O(1) everything
//   q <= 2^16   log/antilog tables over a generator O(1) mul/inv, O(h) add
//   q <= 2^20   direct polynomial arithmetic        O(h)..O(h^2)
class Field {
public:
    static constexpr uint64_t ORDER_CAP = uint64_t(1) << 20;

    // Builds GF(p^h) with a deterministically chosen modulus: monic degree-h
    // polynomials over GF(p) are scanned in ascending order of their base-p
    // integer encoding (constant term least significant) and the first
    // irreducible one wins.
    static Field make(uint64_t p, uint32_t h);

    // Builds GF(p^h) with a caller-supplied modulus (constant term first,
    // h+1 coefficients, monic). Used when loading serialized arcs, whose
    // point codes only make sense relative to the modulus they were written
    // with. Throws ParseError if the polynomial is not monic irreducible.
    static Field with_modulus(uint64_t p, uint32_t h, const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t h() const { return h_; }
    uint32_t q() const { return q_; }

    // Modulus coefficients, constant term first. Empty for h = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // InvZero on a = 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // A generator of the multiplicative group (smallest code that works).
    uint32_t primitive_element() const { return generator_; }

private:
    Field() = default;
    void init(uint64_t p, uint32_t h, const std::vector<uint32_t>* forced_modulus);

    // Polynomial-code helpers (work for every tier; hot paths bypass them).
    uint32_t poly_add(uint32_t a, uint32_t b) const;
    uint32_t poly_neg(uint32_t a) const;
    uint32_t poly_mul(uint32_t a, uint32_t b) const;

    void build_tables();
    uint32_t find_generator() const;

    uint32_t p_ = 0;
    uint32_t h_ = 0;
    uint32_t q_ = 0;
    std::vector<uint32_t> modulus_;        // constant first; empty for h = 1
    uint32_t modulus_code_ = 0;            // base-p encoding incl. leading 1
    uint32_t generator_ = 0;

    // q <= 2^16: log/antilog over generator_. log_[0] unused.
    std::vector<uint32_t> log_;
    std::vector<uint32_t> exp_;            // length 2(q-1) to skip a mod
    // q <= 2^10: dense tables.
    std::vector<uint16_t> add_tab_;
    std::vector<uint16_t> mul_tab_;
    std::vector<uint16_t> neg_tab_;
    std::vector<uint16_t> inv_tab_;
    bool dense_ = false;
    bool logs_ = false;
};

// q -> (p, h) if q is a prime power, else throws NotPrimePower.
struct PrimePower {
    uint64_t p;
    uint32_t h;
};
PrimePower factor_prime_power(uint64_t q);
bool is_prime(uint64_t n);

} // namespace pgarc
