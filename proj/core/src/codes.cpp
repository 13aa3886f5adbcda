#include "toricode/codes.hpp"

#include <limits>
#include <stdexcept>

#include "toricode/errors.hpp"

namespace toricode {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("power overflows 64 bits");
        r *= base;
    }
    return r;
}

// q^k - 1 saturated to UINT64_MAX.
std::uint64_t message_count(std::uint32_t q, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q)
            return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r - 1;
}

}  // namespace

EvaluationMatrix evaluation_matrix(const ToricSet& x, std::uint32_t d,
                                   std::uint64_t entry_cap) {
    const FiniteField& f = x.field();
    std::uint32_t s = x.ambient_vars();
    std::uint64_t cols = x.size();
    if (cols == 0) throw std::invalid_argument("empty point set");
    std::uint64_t rows = monomial_count(d, s);
    if (rows > entry_cap / cols)
        throw CapExceeded("the degree-" + std::to_string(d) +
                          " evaluation matrix has " + std::to_string(rows) +
                          " x " + std::to_string(cols) +
                          " entries; the entry cap is " +
                          std::to_string(entry_cap));

    std::vector<ExponentVector> mons = monomials_of_degree(d, s);
    GfMatrix m(f, std::size_t(rows), std::size_t(cols));

    // All coordinates are nonzero, so everything happens in discrete logs:
    // entry = alog(<e, log P> - d log P[0]) mod q-1.
    std::uint32_t qm1 = f.order() - 1;
    std::vector<std::vector<std::uint32_t>> plog(cols);
    std::vector<std::uint32_t> shift(cols);  // -d log P[0] mod q-1
    for (std::uint64_t j = 0; j < cols; ++j) {
        const ProjectivePoint& p = x.points()[j];
        plog[j].resize(s);
        for (std::uint32_t i = 0; i < s; ++i) plog[j][i] = f.dlog(p[i]);
        shift[j] = std::uint32_t(
            (std::uint64_t(qm1 - plog[j][0] % qm1) * d) % qm1);
    }
    for (std::uint64_t i = 0; i < rows; ++i) {
        const ExponentVector& e = mons[i];
        for (std::uint64_t j = 0; j < cols; ++j) {
            std::uint64_t dot = shift[j];
            for (std::uint32_t v = 0; v < s; ++v)
                dot += std::uint64_t(e[v]) * plog[j][v];
            m.at(i, j) = f.alog(dot);
        }
    }
    return EvaluationMatrix{d, std::move(mons), x, std::move(m)};
}

std::vector<SparsePolynomial> vanishing_forms_basis(
    const EvaluationMatrix& em) {
    const FiniteField& f = em.entries.field();
    GfMatrix null = gf_null_space(gf_transpose(em.entries));
    std::vector<SparsePolynomial> out;
    out.reserve(null.rows());
    for (std::size_t i = 0; i < null.rows(); ++i) {
        SparsePolynomial p(f, em.points.ambient_vars());
        for (std::size_t j = 0; j < null.cols(); ++j)
            if (null.at(i, j) != 0) p.add_term(em.monomials[j], null.at(i, j));
        out.push_back(std::move(p));
    }
    return out;
}

std::uint64_t min_distance_oracle(const EvaluationMatrix& em,
                                  std::uint64_t codeword_cap) {
    const FiniteField& f = em.entries.field();
    std::uint32_t q = f.order();
    GfMatrix basis = gf_row_basis(em.entries);
    std::size_t k = basis.rows();
    std::size_t n = basis.cols();
    if (k == 0) throw std::invalid_argument("zero-dimensional code");

    std::uint64_t total = message_count(q, k);
    if (total > codeword_cap)
        throw CapExceeded("scanning all nonzero messages needs " +
                          std::to_string(q) + "^" + std::to_string(k) +
                          " - 1 = " + std::to_string(total) +
                          " codeword evaluations; the codeword cap is " +
                          std::to_string(codeword_cap));

    // Pre-scaled basis rows (srow[i][t] = t * row_i) when the table is
    // small; otherwise scale on the fly.
    bool scaled = k * std::uint64_t(q) * n <= 32'000'000;
    std::vector<FieldEnc> srow;
    if (scaled) {
        srow.resize(k * std::size_t(q) * n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::uint32_t t = 0; t < q; ++t) {
                FieldEnc* dst = srow.data() + (i * q + t) * n;
                for (std::size_t j = 0; j < n; ++j)
                    dst[j] = f.mul(FieldEnc(t), basis.at(i, j));
            }
    }

    const FieldEnc* add_tab = f.add_table();
    std::vector<FieldEnc> msg(k, 0);
    std::vector<FieldEnc> cw(n, 0);
    std::uint64_t w = 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

    // Walk messages in mixed-radix order; each digit step adds
    // (new - old) * row_i to the codeword, adjusting the weight in place.
    for (std::uint64_t step = 0; step < total; ++step) {
        for (std::size_t i = 0;; ++i) {
            FieldEnc old = msg[i];
            FieldEnc next = old + 1 == q ? FieldEnc(0) : FieldEnc(old + 1);
            msg[i] = next;
            FieldEnc delta = f.sub(next, old);
            if (scaled) {
                const FieldEnc* dr = srow.data() + (i * q + delta) * n;
                if (add_tab) {
                    for (std::size_t j = 0; j < n; ++j) {
                        if (dr[j] == 0) continue;
                        FieldEnc nv =
                            add_tab[std::size_t(cw[j]) * q + dr[j]];
                        w += (nv != 0) - (cw[j] != 0);
                        cw[j] = nv;
                    }
                } else {
                    for (std::size_t j = 0; j < n; ++j) {
                        if (dr[j] == 0) continue;
                        FieldEnc nv = f.add(cw[j], dr[j]);
                        w += (nv != 0) - (cw[j] != 0);
                        cw[j] = nv;
                    }
                }
            } else {
                const FieldEnc* br = basis.row(i);
                for (std::size_t j = 0; j < n; ++j) {
                    FieldEnc dj = f.mul(delta, br[j]);
                    if (dj == 0) continue;
                    FieldEnc nv = f.add(cw[j], dj);
                    w += (nv != 0) - (cw[j] != 0);
                    cw[j] = nv;
                }
            }
            if (next != 0) break;  // no carry
        }
        if (w < best) {
            best = w;
            if (best <= 1) break;  // independent rows: weight 0 cannot occur
        }
    }
    return best;
}

DegreeDecomposition decompose_degree(std::uint64_t d, std::uint32_t q) {
    if (q < 3)
        throw std::invalid_argument("degree decomposition needs q >= 3");
    if (d == 0)
        throw std::invalid_argument("degree decomposition needs d >= 1");
    DegreeDecomposition r;
    r.ell = (d - 1) % (q - 2) + 1;
    r.k = (d - r.ell) / (q - 2);
    return r;
}

std::uint64_t dimension_torus_formula(std::uint32_t q, std::uint32_t s,
                                      std::uint64_t d) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    if (d > std::uint64_t(std::numeric_limits<std::int64_t>::max() / 2))
        throw std::overflow_error("degree too large");
    __int128 acc = 0;
    for (std::uint32_t j = 0; j < s; ++j) {
        long long top =
            (long long)(s) - 1 + (long long)d - (long long)j * (q - 1);
        __int128 term = (__int128)binomial_coefficient(s - 1, j) *
                        (__int128)binomial_coefficient(top, s - 1);
        acc += (j % 2 == 0) ? term : -term;
    }
    if (acc < 0 ||
        acc > (__int128)std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("dimension overflows 64 bits");
    return std::uint64_t(acc);
}

std::uint64_t min_distance_torus_formula(std::uint32_t q, std::uint32_t s,
                                         std::uint64_t d) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    if (d == 0) throw std::invalid_argument("need d >= 1");
    std::uint64_t reg = std::uint64_t(q - 2) * (s - 1);
    if (d >= reg) return 1;
    // d < reg forces q >= 3 and s >= 2, and the quotient k is at most s-2.
    DegreeDecomposition dec = decompose_degree(d, q);
    return checked_pow(q - 1, s - 2 - dec.k) * (q - 1 - dec.ell);
}

std::uint64_t min_distance_torus_line_plane(std::uint32_t q, std::uint32_t s,
                                            std::uint64_t d) {
    if (q < 3) throw std::invalid_argument("need q >= 3");
    if (d == 0) throw std::invalid_argument("need d >= 1");
    std::int64_t dd = std::int64_t(d);
    if (s == 2) return dd <= std::int64_t(q) - 3 ? q - 1 - d : 1;
    if (s == 3) {
        if (dd <= std::int64_t(q) - 3)
            return std::uint64_t(q - 1) * (q - 1 - d);
        if (dd <= 2 * std::int64_t(q) - 5) return 2 * q - 3 - d;
        return 1;
    }
    throw std::invalid_argument("piecewise form only covers s = 2 and s = 3");
}

namespace {

void singleton_check(const CodeParameters& p) {
    if (p.k < 1 || p.k > p.n || p.delta < 1 || p.delta + p.k > p.n + 1)
        throw Discrepancy(
            "parameters violate the Singleton bound: n = " +
            std::to_string(p.n) + ", k = " + std::to_string(p.k) +
            ", distance = " + std::to_string(p.delta));
}

}  // namespace

CodeParameters code_params(const ToricSet& x, std::uint32_t d,
                           std::uint64_t codeword_cap,
                           std::uint64_t entry_cap) {
    if (d == 0) throw std::invalid_argument("degree must be at least 1");
    const FiniteField& f = x.field();
    EvaluationMatrix em = evaluation_matrix(x, d, entry_cap);
    CodeParameters out;
    out.q = f.order();
    out.s = x.ambient_vars();
    out.d = d;
    out.n = x.size();
    out.k = gf_row_basis(em.entries).rows();

    if (x.is_complete_intersection()) {
        std::uint64_t k_formula = dimension_torus_formula(out.q, out.s, d);
        if (k_formula != out.k)
            throw Discrepancy("dimension formula gives " +
                              std::to_string(k_formula) +
                              " but the matrix rank is " +
                              std::to_string(out.k));
        out.delta = min_distance_torus_formula(out.q, out.s, d);
        out.source = "formula";
        try {
            std::uint64_t scanned = min_distance_oracle(em, codeword_cap);
            if (scanned != out.delta)
                throw Discrepancy("distance formula gives " +
                                  std::to_string(out.delta) +
                                  " but the exhaustive scan finds " +
                                  std::to_string(scanned));
            out.source = "both-agree";
        } catch (const CapExceeded&) {
            // formula value stands on its own
        }
    } else {
        out.delta = min_distance_oracle(em, codeword_cap);
        out.source = "oracle";
    }
    singleton_check(out);
    return out;
}

CodeParameters complete_bipartite_code_params(std::uint32_t q,
                                              std::uint32_t a,
                                              std::uint32_t b,
                                              std::uint32_t d) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("both vertex classes must be non-empty");
    if (d == 0) throw std::invalid_argument("degree must be at least 1");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    CodeParameters out;
    out.q = q;
    out.s = a * b;
    out.d = d;
    out.n = checked_pow(q - 1, std::uint64_t(a) + b - 2);
    std::uint64_t ka = dimension_torus_formula(q, a, d);
    std::uint64_t kb = dimension_torus_formula(q, b, d);
    if (ka != 0 && kb > std::numeric_limits<std::uint64_t>::max() / ka)
        throw std::overflow_error("dimension overflows 64 bits");
    out.k = ka * kb;
    out.delta = min_distance_torus_formula(q, a, d) *
                min_distance_torus_formula(q, b, d);
    out.source = "formula";
    singleton_check(out);
    return out;
}

}
