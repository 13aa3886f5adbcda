#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricode/errors.hpp"

namespace toricode {

/// Integer encoding of an element of GF(p^m): the coefficients of the
/// polynomial representation read as base-p digits, constant term least
/// significant.  Encodings run over [0, q-1]; 0 and 1 are the additive and
/// multiplicative identities.  Fits exactly because q is capped at 2^16.
using FieldEnc = std::uint16_t;

class FieldElement;

/// GF(p^m) with log/exp table arithmetic.  The order q = p^m is capped at
/// 2^16.
///
/// Construction is deterministic, so two fields built from the same (p, m)
/// agree table for table:
///   - the modulus is the monic irreducible degree-m polynomial over GF(p)
///     with the smallest integer encoding (coefficients as base-p digits);
///     for m = 1 it is x and arithmetic never consults it;
///   - the primitive element is the smallest encoding whose multiplicative
///     order is exactly q - 1, found by scanning encodings in ascending
///     order.
class FiniteField {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    explicit FiniteField(std::uint32_t p, std::uint32_t m = 1);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return m_; }
    std::uint32_t order() const { return q_; }

    /// Modulus coefficients c0..cm, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint32_t modulus_encoding() const { return modulus_enc_; }
    FieldEnc primitive_element() const { return primitive_; }

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_enc_ == o.modulus_enc_;
    }
    bool operator!=(const FiniteField& o) const { return !(*this == o); }

    FieldEnc add(FieldEnc a, FieldEnc b) const {
        check(a);
        check(b);
        if (!add_tab_.empty()) return add_tab_[std::size_t(a) * q_ + b];
        if (p_ == 2) return FieldEnc(a ^ b);
        if (m_ == 1) {
            std::uint32_t t = std::uint32_t(a) + b;
            return FieldEnc(t >= q_ ? t - q_ : t);
        }
        return add_digits(a, b);
    }

    FieldEnc neg(FieldEnc a) const {
        check(a);
        return neg_tab_[a];
    }

    FieldEnc sub(FieldEnc a, FieldEnc b) const { return add(a, neg(b)); }

    FieldEnc mul(FieldEnc a, FieldEnc b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        std::uint32_t t = std::uint32_t(log_[a]) + log_[b];
        if (t >= q_ - 1) t -= q_ - 1;
        return exp_[t];
    }

    /// Multiplicative inverse; inverting zero throws std::domain_error.
    FieldEnc inv(FieldEnc a) const;

    FieldEnc div(FieldEnc a, FieldEnc b) const { return mul(a, inv(b)); }

    /// a^e with the empty-product convention pow(0, 0) = 1.  Negative
    /// exponents invert, so pow(0, e) with e < 0 throws std::domain_error.
    FieldEnc pow(FieldEnc a, long long e) const;

    /// Discrete log base the primitive element; a must be nonzero.
    FieldEnc dlog(FieldEnc a) const;

    /// primitive^i; the exponent is reduced mod q - 1.
    FieldEnc alog(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

    /// Direct q*q addition table when q <= 256 (row-major, [a*q + b]), else
    /// nullptr.  Semantics identical to add(); intended for hot loops.
    const FieldEnc* add_table() const {
        return add_tab_.empty() ? nullptr : add_tab_.data();
    }

    FieldElement element(std::uint32_t enc) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// The q - 1 nonzero elements in ascending encoding order.
    std::vector<FieldElement> nonzero_elements() const;

private:
    void check(FieldEnc a) const {
        if (a >= q_)
            throw std::invalid_argument("encoding " + std::to_string(a) +
                                        " out of range for a field of order " +
                                        std::to_string(q_));
    }

    FieldEnc add_digits(FieldEnc a, FieldEnc b) const;
    std::uint32_t boot_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t boot_pow(std::uint32_t a, std::uint32_t e) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t modulus_enc_ = 0;
    FieldEnc primitive_ = 0;
    std::vector<FieldEnc> exp_;      // size q; exp_[i] = primitive^i, i < q-1
    std::vector<FieldEnc> log_;      // size q; log_[0] is a sentinel
    std::vector<FieldEnc> neg_tab_;  // size q
    std::vector<FieldEnc> add_tab_;  // q*q when q <= 256, else empty
};

/// A field element bound to its field.  Arithmetic between elements of
/// different fields throws std::invalid_argument.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FiniteField& f, std::uint32_t enc);

    FieldEnc enc() const { return v_; }
    const FiniteField& field() const;
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    /// Equal when bound to equal fields and carrying the same encoding.
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const FiniteField& same_field(const FieldElement& o) const;

    const FiniteField* f_ = nullptr;
    FieldEnc v_ = 0;
};

/// Builds GF(q) from a prime-power order (q = p^m is factored); throws
/// std::invalid_argument when q is not a prime power >= 2.
FiniteField field_of_order(std::uint32_t q);

}
