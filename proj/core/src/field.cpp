#include "toricode/field.hpp"

#include <algorithm>

namespace toricode {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Digits of enc in base p, least significant first, padded to len.
std::vector<std::uint32_t> to_digits(std::uint32_t enc, std::uint32_t p,
                                     std::uint32_t len) {
    std::vector<std::uint32_t> d(len, 0);
    for (std::uint32_t i = 0; i < len && enc; ++i) {
        d[i] = enc % p;
        enc /= p;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d,
                          std::uint32_t p) {
    std::uint32_t enc = 0;
    for (std::size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
    return enc;
}

// Product of two coefficient vectors over GF(p), reduced mod the monic
// polynomial mod (degree deg(mod) = mod.size() - 1).  Plain schoolbook
// arithmetic; only used to bootstrap the tables.
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& mod,
                                        std::uint32_t p) {
    std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    std::size_t deg = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        // mod is monic: subtract c * x^(i-deg) * mod.
        for (std::size_t j = 0; j < deg; ++j) {
            std::uint32_t sub = (c * mod[j]) % p;
            prod[i - deg + j] = (prod[i - deg + j] + p - sub) % p;
        }
    }
    prod.resize(deg);
    return prod;
}

// Remainder of a modulo b over GF(p); b monic of degree >= 1.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        std::uint32_t c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (std::size_t j = 0; j < db; ++j) {
            std::uint32_t sub = (c * b[j]) % p;
            a[i - db + j] = (a[i - db + j] + p - sub) % p;
        }
    }
    a.resize(db);
    return a;
}

bool is_zero_poly(const std::vector<std::uint32_t>& a) {
    return std::all_of(a.begin(), a.end(),
                       [](std::uint32_t c) { return c == 0; });
}

// Irreducibility over GF(p) by trial division: a monic polynomial of degree
// m >= 2 with a nonzero constant term is irreducible iff no monic polynomial
// of degree in [1, m/2] divides it.  The degree cap keeps this fast for the
// small m allowed by the 2^16 order cap.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::uint32_t m = std::uint32_t(f.size()) - 1;
    if (f[0] == 0) return false;  // divisible by x
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        // Monic divisors of degree d: d lower coefficients counted in base p.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            std::vector<std::uint32_t> g = to_digits(std::uint32_t(lo), p, d);
            g.push_back(1);
            if (is_zero_poly(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) +
                                    " is not prime");
    if (m == 0)
        throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order)
            throw CapExceeded("field order " + std::to_string(p) + "^" +
                              std::to_string(m) + " exceeds the cap of " +
                              std::to_string(max_order));
    }
    q_ = std::uint32_t(q);

    if (m_ == 1) {
        modulus_ = {0, 1};  // x itself; unused by prime-field arithmetic
        modulus_enc_ = p_;
    } else {
        // Smallest-encoding monic irreducible of degree m: scan the p^m
        // choices of lower coefficients in ascending encoding order.
        bool found = false;
        for (std::uint32_t lo = 0; lo < q_; ++lo) {
            std::vector<std::uint32_t> f = to_digits(lo, p_, m_);
            f.push_back(1);
            if (is_irreducible(f, p_)) {
                modulus_ = std::move(f);
                modulus_enc_ = from_digits(modulus_, p_);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("no irreducible modulus found");  // unreachable
    }

    neg_tab_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::vector<std::uint32_t> d = to_digits(a, p_, m_);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_tab_[a] = FieldEnc(from_digits(d, p_));
    }

    // Primitive element: smallest encoding of multiplicative order q - 1,
    // tested via a^((q-1)/r) != 1 for every prime r dividing q - 1.
    std::vector<std::uint32_t> factors = prime_factors(q_ - 1);
    primitive_ = 0;
    for (std::uint32_t a = 1; a < q_; ++a) {
        bool ok = true;
        for (std::uint32_t r : factors) {
            if (boot_pow(a, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = FieldEnc(a);
            break;
        }
    }
    if (primitive_ == 0 && q_ > 2)
        throw std::logic_error("no primitive element found");  // unreachable
    if (q_ == 2) primitive_ = 1;

    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = FieldEnc(acc);
        log_[acc] = FieldEnc(i);
        acc = boot_mul(acc, primitive_);
    }
    exp_[q_ - 1] = 1;       // wraparound: primitive^(q-1) = 1
    log_[0] = FieldEnc(q_ - 1);  // sentinel; mul() never reads it

    if (q_ <= 256) {
        add_tab_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            std::vector<std::uint32_t> da = to_digits(a, p_, m_);
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::vector<std::uint32_t> d = to_digits(b, p_, m_);
                for (std::uint32_t i = 0; i < m_; ++i)
                    d[i] = (d[i] + da[i]) % p_;
                add_tab_[std::size_t(a) * q_ + b] =
                    FieldEnc(from_digits(d, p_));
            }
        }
    }
}

FieldEnc FiniteField::add_digits(FieldEnc a, FieldEnc b) const {
    std::vector<std::uint32_t> da = to_digits(a, p_, m_);
    std::vector<std::uint32_t> db = to_digits(b, p_, m_);
    for (std::uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return FieldEnc(from_digits(da, p_));
}

std::uint32_t FiniteField::boot_mul(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return (std::uint64_t(a) * b) % p_;
    std::vector<std::uint32_t> prod = poly_mul_mod(
        to_digits(a, p_, m_), to_digits(b, p_, m_), modulus_, p_);
    return from_digits(prod, p_);
}

std::uint32_t FiniteField::boot_pow(std::uint32_t a, std::uint32_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = boot_mul(r, a);
        a = boot_mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldEnc FiniteField::inv(FieldEnc a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero");
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
}

FieldEnc FiniteField::pow(FieldEnc a, long long e) const {
    check(a);
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;  // empty product
        throw std::domain_error("zero to a negative power");
    }
    long long ord = q_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    std::uint64_t t = std::uint64_t(log_[a]) * std::uint64_t(r);
    return exp_[t % ord];
}

FieldEnc FiniteField::dlog(FieldEnc a) const {
    check(a);
    if (a == 0) throw std::domain_error("discrete log of zero");
    return log_[a];
}

FieldElement FiniteField::element(std::uint32_t enc) const {
    return FieldElement(*this, enc);
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }

FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FiniteField::nonzero_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_ - 1);
    for (std::uint32_t a = 1; a < q_; ++a) out.emplace_back(*this, a);
    return out;
}

FieldElement::FieldElement(const FiniteField& f, std::uint32_t enc) : f_(&f) {
    if (enc >= f.order())
        throw std::invalid_argument("encoding " + std::to_string(enc) +
                                    " out of range for a field of order " +
                                    std::to_string(f.order()));
    v_ = FieldEnc(enc);
}

const FiniteField& FieldElement::field() const {
    if (!f_) throw std::logic_error("element not bound to a field");
    return *f_;
}

const FiniteField& FieldElement::same_field(const FieldElement& o) const {
    if (!f_ || !o.f_) throw std::logic_error("element not bound to a field");
    if (*f_ != *o.f_) throw std::invalid_argument("mixed-field operands");
    return *f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FiniteField& f = same_field(o);
    return FieldElement(f, f.add(v_, o.v_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FiniteField& f = same_field(o);
    return FieldElement(f, f.sub(v_, o.v_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FiniteField& f = same_field(o);
    return FieldElement(f, f.mul(v_, o.v_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const FiniteField& f = same_field(o);
    return FieldElement(f, f.div(v_, o.v_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field(), field().neg(v_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field(), field().inv(v_));
}

FieldElement FieldElement::pow(long long e) const {
    return FieldElement(field(), field().pow(v_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!f_ || !o.f_) return f_ == o.f_ && v_ == o.v_;
    return *f_ == *o.f_ && v_ == o.v_;
}

FiniteField field_of_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return FiniteField(q, 1);  // q itself is prime
    std::uint32_t m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw std::invalid_argument(std::to_string(q) +
                                    " is not a prime power");
    return FiniteField(p, m);
}

}
