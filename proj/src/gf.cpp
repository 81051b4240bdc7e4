#include "pgarc/gf.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace pgarc {
namespace {

// Degree cap follows from the order cap: 2^20 means h <= 20 at p = 2.
constexpr uint32_t MAX_DEGREE = 20;

struct Digits {
    std::array<uint32_t, 2 * MAX_DEGREE + 1> d{};
    uint32_t len = 0; // number of meaningful digits (degree + 1), 0 for zero
};

Digits to_digits(uint32_t code, uint32_t p) {
    Digits out;
    while (code) {
        out.d[out.len++] = code % p;
        code /= p;
    }
    return out;
}

uint64_t from_digits(const Digits& a, uint32_t p) {
    uint64_t code = 0;
    for (uint32_t i = a.len; i-- > 0;) code = code * p + a.d[i];
    return code;
}

// Remainder of a by monic divisor g (in place, digit arrays).
void mod_in_place(Digits& a, const Digits& g, uint32_t p) {
    while (a.len >= g.len && g.len > 0) {
        uint32_t c = a.d[a.len - 1];
        if (c != 0) {
            uint32_t shift = a.len - g.len;
            for (uint32_t j = 0; j < g.len; ++j) {
                uint64_t v = (a.d[shift + j] + uint64_t(c) * (p - g.d[j])) % p;
                a.d[shift + j] = static_cast<uint32_t>(v);
            }
        }
        a.len--;
        while (a.len > 0 && a.d[a.len - 1] == 0) a.len--;
    }
}

Digits digits_mul(const Digits& a, const Digits& b, uint32_t p) {
    Digits out;
    if (a.len == 0 || b.len == 0) return out;
    out.len = a.len + b.len - 1;
    std::array<uint64_t, 2 * MAX_DEGREE + 1> acc{};
    for (uint32_t i = 0; i < a.len; ++i)
        for (uint32_t j = 0; j < b.len; ++j) acc[i + j] += uint64_t(a.d[i]) * b.d[j];
    for (uint32_t i = 0; i < out.len; ++i) out.d[i] = static_cast<uint32_t>(acc[i] % p);
    while (out.len > 0 && out.d[out.len - 1] == 0) out.len--;
    return out;
}

// Monic degree-deg polynomial from its base-p encoding of the lower
// coefficients (constant term least significant).
Digits monic_from_encoding(uint64_t lower, uint32_t deg, uint32_t p) {
    Digits out;
    out.len = deg + 1;
    for (uint32_t i = 0; i < deg; ++i) {
        out.d[i] = static_cast<uint32_t>(lower % p);
        lower /= p;
    }
    out.d[deg] = 1;
    return out;
}

bool divides(const Digits& g, const Digits& f, uint32_t p) {
    Digits r = f;
    mod_in_place(r, g, p);
    return r.len == 0;
}

// Brute-force irreducibility: f (monic, degree >= 1) is reducible iff some
// monic polynomial of degree 1..deg/2 divides it.
bool is_irreducible(const Digits& f, uint32_t p) {
    uint32_t deg = f.len - 1;
    for (uint32_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t enc = 0; enc < count; ++enc) {
            Digits g = monic_from_encoding(enc, d, p);
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower factor_prime_power(uint64_t q) {
    if (q < 2) fail(ErrorCode::NotPrimePower, std::to_string(q));
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t h = 0;
    uint64_t rest = q;
    while (rest > 1) {
        if (rest % p != 0) fail(ErrorCode::NotPrimePower, std::to_string(q));
        rest /= p;
        h++;
    }
    return {p, h};
}

Field Field::make(uint64_t p, uint32_t h) {
    Field f;
    f.init(p, h, nullptr);
    return f;
}

Field Field::with_modulus(uint64_t p, uint32_t h, const std::vector<uint32_t>& modulus) {
    Field f;
    f.init(p, h, &modulus);
    return f;
}

void Field::init(uint64_t p, uint32_t h, const std::vector<uint32_t>* forced_modulus) {
    if (!is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (h == 0) fail(ErrorCode::DegreeZero, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > ORDER_CAP) {
            fail(ErrorCode::OrderTooLarge,
                 std::to_string(p) + "^" + std::to_string(h) + " exceeds 2^20");
        }
    }
    p_ = static_cast<uint32_t>(p);
    h_ = h;
    q_ = static_cast<uint32_t>(q);

    if (h == 1) {
        if (forced_modulus && !forced_modulus->empty())
            fail(ErrorCode::ParseError, "prime field takes an empty modulus");
    } else if (forced_modulus) {
        const auto& m = *forced_modulus;
        if (m.size() != size_t(h) + 1 || m.back() != 1)
            fail(ErrorCode::ParseError, "modulus must be monic of degree h");
        Digits f;
        f.len = h + 1;
        for (uint32_t i = 0; i <= h; ++i) {
            if (m[i] >= p_) fail(ErrorCode::ParseError, "modulus coefficient out of range");
            f.d[i] = m[i];
        }
        if (!is_irreducible(f, p_)) fail(ErrorCode::ParseError, "modulus is reducible");
        modulus_ = m;
    } else {
        // Deterministic scan: ascending base-p encoding of the lower
        // coefficients, first irreducible wins.
        for (uint64_t enc = 0;; ++enc) {
            Digits f = monic_from_encoding(enc, h, p_);
            if (is_irreducible(f, p_)) {
                modulus_.assign(f.d.begin(), f.d.begin() + h + 1);
                break;
            }
        }
    }
    if (h > 1) {
        uint64_t code = 0;
        for (uint32_t i = uint32_t(modulus_.size()); i-- > 0;) code = code * p_ + modulus_[i];
        modulus_code_ = static_cast<uint32_t>(code);
    }

    build_tables();
}

uint32_t Field::poly_add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (h_ == 1) return static_cast<uint32_t>((uint64_t(a) + b) % p_);
    uint32_t out = 0, mul = 1;
    while (a || b) {
        out += mul * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

uint32_t Field::poly_neg(uint32_t a) const {
    if (p_ == 2) return a;
    if (h_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, mul = 1;
    while (a) {
        uint32_t d = a % p_;
        out += mul * (d == 0 ? 0 : p_ - d);
        a /= p_;
        mul *= p_;
    }
    return out;
}

uint32_t Field::poly_mul(uint32_t a, uint32_t b) const {
    if (h_ == 1) return static_cast<uint32_t>(uint64_t(a) * b % p_);
    Digits da = to_digits(a, p_);
    Digits db = to_digits(b, p_);
    Digits prod = digits_mul(da, db, p_);
    Digits m;
    m.len = h_ + 1;
    for (uint32_t i = 0; i <= h_; ++i) m.d[i] = modulus_[i];
    mod_in_place(prod, m, p_);
    return static_cast<uint32_t>(from_digits(prod, p_));
}

uint32_t Field::find_generator() const {
    auto factors = prime_factors(q_ - 1);
    auto pow_slow = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = poly_mul(r, a);
            a = poly_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint64_t r : factors) {
            if (pow_slow(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    // q = 2 is the only order with no code >= 2; its group is trivial.
    return 1;
}

void Field::build_tables() {
    generator_ = find_generator();
    if (q_ <= (1u << 16)) {
        logs_ = true;
        log_.assign(q_, 0);
        exp_.assign(2 * size_t(q_ - 1), 0);
        uint32_t v = 1;
        for (uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = v;
            exp_[i + q_ - 1] = v;
            log_[v] = i;
            v = poly_mul(v, generator_);
        }
    }
    if (q_ <= (1u << 10)) {
        dense_ = true;
        add_tab_.assign(size_t(q_) * q_, 0);
        mul_tab_.assign(size_t(q_) * q_, 0);
        neg_tab_.assign(q_, 0);
        inv_tab_.assign(q_, 0);
        for (uint32_t a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<uint16_t>(poly_neg(a));
            for (uint32_t b = 0; b <= a; ++b) {
                uint16_t s = static_cast<uint16_t>(poly_add(a, b));
                add_tab_[size_t(a) * q_ + b] = s;
                add_tab_[size_t(b) * q_ + a] = s;
                uint16_t m = (a == 0 || b == 0)
                                 ? uint16_t(0)
                                 : static_cast<uint16_t>(exp_[log_[a] + log_[b]]);
                mul_tab_[size_t(a) * q_ + b] = m;
                mul_tab_[size_t(b) * q_ + a] = m;
            }
        }
        for (uint32_t a = 1; a < q_; ++a)
            inv_tab_[a] = static_cast<uint16_t>(exp_[(q_ - 1) - log_[a]]);
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (dense_) return add_tab_[size_t(a) * q_ + b];
    return poly_add(a, b);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::neg(uint32_t a) const {
    if (dense_) return neg_tab_[a];
    return poly_neg(a);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (dense_) return mul_tab_[size_t(a) * q_ + b];
    if (logs_) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return poly_mul(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) fail(ErrorCode::InvZero, "inverse of zero");
    if (dense_) return inv_tab_[a];
    if (logs_) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace pgarc
