#include "toricode/polynomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace toricode {

SparsePolynomial::SparsePolynomial(const FiniteField& f, std::uint32_t nvars)
    : f_(&f), nvars_(nvars) {
    if (nvars_ == 0)
        throw std::invalid_argument("polynomial needs at least one variable");
}

void SparsePolynomial::add_term(const ExponentVector& e, FieldEnc coeff) {
    if (e.size() != nvars_)
        throw std::invalid_argument("exponent vector has " +
                                    std::to_string(e.size()) +
                                    " entries, expected " +
                                    std::to_string(nvars_));
    if (coeff >= f_->order())
        throw std::invalid_argument("coefficient encoding out of range");
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
        return;
    }
    FieldEnc c = f_->add(it->second, coeff);
    if (c == 0)
        terms_.erase(it);
    else
        it->second = c;
}

std::optional<std::uint64_t> SparsePolynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t best = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t d = 0;
        for (std::uint32_t x : e) d += x;
        if (d > best) best = d;
    }
    return best;
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::optional<std::uint64_t> common;
    for (const auto& [e, c] : terms_) {
        std::uint64_t d = 0;
        for (std::uint32_t x : e) d += x;
        if (!common)
            common = d;
        else if (*common != d)
            return false;
    }
    return true;
}

FieldEnc SparsePolynomial::evaluate(const ProjectivePoint& x) const {
    if (x.size() != nvars_)
        throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                    " coordinates, expected " +
                                    std::to_string(nvars_));
    FieldEnc sum = 0;
    for (const auto& [e, c] : terms_) {
        FieldEnc prod = c;
        for (std::uint32_t i = 0; i < nvars_ && prod != 0; ++i)
            prod = f_->mul(prod, f_->pow(x[i], e[i]));
        sum = f_->add(sum, prod);
    }
    return sum;
}

SparsePolynomial SparsePolynomial::torus_canonical_form() const {
    std::uint32_t qm1 = f_->order() - 1;
    SparsePolynomial out(*f_, nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVector r(nvars_);
        for (std::uint32_t i = 0; i < nvars_; ++i) r[i] = e[i] % qm1;
        out.add_term(r, c);
    }
    return out;
}

void SparsePolynomial::same_shape(const SparsePolynomial& o) const {
    if (*f_ != *o.f_) throw std::invalid_argument("mixed-field operands");
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("variable counts differ");
}

SparsePolynomial SparsePolynomial::operator+(
    const SparsePolynomial& o) const {
    same_shape(o);
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(
    const SparsePolynomial& o) const {
    same_shape(o);
    SparsePolynomial out(*f_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExponentVector e(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) {
                std::uint64_t s = std::uint64_t(ea[i]) + eb[i];
                if (s > std::numeric_limits<std::uint32_t>::max())
                    throw std::overflow_error("exponent overflows 32 bits");
                e[i] = std::uint32_t(s);
            }
            out.add_term(e, f_->mul(ca, cb));
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::scaled(FieldEnc c) const {
    SparsePolynomial out(*f_, nvars_);
    if (c == 0) return out;
    for (const auto& [e, t] : terms_) out.add_term(e, f_->mul(t, c));
    return out;
}

std::uint64_t binomial_coefficient(long long n, std::uint32_t k) {
    if (n < 0 || (long long)k > n) return 0;
    std::uint64_t kk = k;
    std::uint64_t nn = std::uint64_t(n);
    if (kk > nn - kk) kk = nn - kk;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        r = r * (nn - kk + i) / i;  // exact: the running value is C(n-k+i, i)
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient overflows 64 "
                                      "bits");
    }
    return std::uint64_t(r);
}

std::uint64_t monomial_count(std::uint32_t degree, std::uint32_t nvars) {
    if (nvars == 0) throw std::invalid_argument("no variables");
    return binomial_coefficient(std::int64_t(degree) + nvars - 1, nvars - 1);
}

namespace {

void emit_monomials(std::uint32_t remaining, std::uint32_t pos,
                    ExponentVector& cur, std::vector<ExponentVector>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = remaining;; --e) {
        cur[pos] = e;
        emit_monomials(remaining - e, pos + 1, cur, out);
        if (e == 0) break;
    }
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::uint32_t degree,
                                                std::uint32_t nvars) {
    if (nvars == 0) throw std::invalid_argument("no variables");
    std::vector<ExponentVector> out;
    ExponentVector cur(nvars, 0);
    emit_monomials(degree, 0, cur, out);
    return out;
}

}
