#include "toricode/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "toricode/bounds.hpp"
#include "toricode/errors.hpp"
#include "toricode/geometry.hpp"
#include "toricode/invariants.hpp"
#include "toricode/linalg.hpp"
#include "toricode/polynomial.hpp"

namespace toricode {

namespace {

const std::vector<std::string> kCheckNames = {
    "torus-size",
    "torus-regularity",
    "hilbert-profile-vs-series",
    "hilbert-non-decreasing",
    "dimension-formula-vs-rank",
    "min-distance-formula-vs-oracle",
    "min-distance-strict-decrease",
    "min-distance-plateau",
    "line-plane-piecewise",
    "line-plane-vs-oracle",
    "mds-line",
    "bipartite-product-params",
    "ci-decision",
    "regularity-bound",
    "extremal-zero-tightness",
    "zero-bound-sweep",
    "degree-decomposition-monotonicity",
};

// Deterministic generator for the random sweep; state advances by the
// golden-ratio increment and the output is finalized with two xor-shifts.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct Ctx {
    std::uint64_t cases = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failures = 0;
    std::string fail_detail;
    std::string skip_detail;

    void ok() { ++cases; }
    void require(bool cond, const std::string& msg) {
        ++cases;
        if (!cond) {
            ++failures;
            if (fail_detail.empty()) fail_detail = msg;
        }
    }
    void fail(const std::string& msg) {
        ++failures;
        if (fail_detail.empty()) fail_detail = msg;
    }
    void skip(const std::string& why) {
        ++skipped;
        if (skip_detail.empty()) skip_detail = why;
    }
};

std::string cell(std::uint32_t q, std::uint32_t s) {
    return "q=" + std::to_string(q) + " s=" + std::to_string(s);
}

std::string cell(std::uint32_t q, std::uint32_t s, std::uint64_t d) {
    return cell(q, s) + " d=" + std::to_string(d);
}

std::int64_t ipow(std::int64_t b, std::uint32_t e) {
    std::int64_t r = 1;
    while (e--) r *= b;
    return r;
}

class Runner {
public:
    explicit Runner(const VerifyOptions& opt) : opt_(opt) {}

    VerificationReport run() {
        if (!opt_.inject_fault.empty() &&
            std::find(kCheckNames.begin(), kCheckNames.end(),
                      opt_.inject_fault) == kCheckNames.end())
            throw std::invalid_argument("unknown check name: " +
                                        opt_.inject_fault);
        VerificationReport rep;
        rep.options = opt_;
        run_check(rep, "torus-size", [this](Ctx& c) { torus_size_check(c); });
        run_check(rep, "torus-regularity",
                  [this](Ctx& c) { torus_regularity_check(c); });
        run_check(rep, "hilbert-profile-vs-series",
                  [this](Ctx& c) { profile_vs_series(c); });
        run_check(rep, "hilbert-non-decreasing",
                  [this](Ctx& c) { non_decreasing(c); });
        run_check(rep, "dimension-formula-vs-rank",
                  [this](Ctx& c) { dimension_vs_rank(c); });
        run_check(rep, "min-distance-formula-vs-oracle",
                  [this](Ctx& c) { distance_vs_oracle(c); });
        run_check(rep, "min-distance-strict-decrease",
                  [this](Ctx& c) { strict_decrease(c); });
        run_check(rep, "min-distance-plateau",
                  [this](Ctx& c) { plateau(c); });
        run_check(rep, "line-plane-piecewise",
                  [this](Ctx& c) { line_plane_piecewise(c); });
        run_check(rep, "line-plane-vs-oracle",
                  [this](Ctx& c) { line_plane_vs_oracle(c); });
        run_check(rep, "mds-line", [this](Ctx& c) { mds_line(c); });
        run_check(rep, "bipartite-product-params",
                  [this](Ctx& c) { bipartite_product(c); });
        run_check(rep, "ci-decision", [this](Ctx& c) { ci_decision(c); });
        run_check(rep, "regularity-bound",
                  [this](Ctx& c) { regularity_bound(c); });
        run_check(rep, "extremal-zero-tightness",
                  [this](Ctx& c) { extremal_tightness(c); });
        run_check(rep, "zero-bound-sweep", [this](Ctx& c) { sweep(c); });
        run_check(rep, "degree-decomposition-monotonicity",
                  [this](Ctx& c) { decomposition_monotonicity(c); });
        return rep;
    }

private:
    template <typename F>
    void run_check(VerificationReport& rep, const std::string& name,
                   F body) {
        Ctx c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        if (opt_.inject_fault == name && c.failures == 0)
            c.fail("injected fault");
        CheckResult r;
        r.name = name;
        r.cases = c.cases;
        r.skipped = c.skipped;
        r.passed = c.failures == 0;
        r.detail = c.failures ? c.fail_detail : c.skip_detail;
        rep.checks.push_back(std::move(r));
    }

    const FiniteField& field(std::uint32_t q) {
        auto it = fields_.find(q);
        if (it == fields_.end())
            it = fields_.emplace(q, field_of_order(q)).first;
        return it->second;
    }

    const ToricSet& torus(std::uint32_t q, std::uint32_t s) {
        auto key = std::make_pair(q, s);
        auto it = tori_.find(key);
        if (it == tori_.end())
            it = tori_
                     .emplace(key,
                              projective_torus(field(q), s, opt_.point_cap))
                     .first;
        return it->second;
    }

    const HilbertProfile& torus_profile(std::uint32_t q, std::uint32_t s) {
        auto key = std::make_pair(q, s);
        auto it = profiles_.find(key);
        if (it == profiles_.end())
            it = profiles_
                     .emplace(key,
                              hilbert_profile(torus(q, s), opt_.entry_cap))
                     .first;
        return it->second;
    }

    // Exhaustive torus minimum distance, or nullopt past a cap.
    std::optional<std::uint64_t> torus_oracle(std::uint32_t q,
                                              std::uint32_t s,
                                              std::uint32_t d) {
        std::array<std::uint32_t, 3> key{q, s, d};
        auto it = oracle_.find(key);
        if (it != oracle_.end()) return it->second;
        std::optional<std::uint64_t> r;
        try {
            EvaluationMatrix em =
                evaluation_matrix(torus(q, s), d, opt_.entry_cap);
            r = min_distance_oracle(em, opt_.codeword_cap);
        } catch (const CapExceeded&) {
            r = std::nullopt;
        }
        oracle_.emplace(key, r);
        return r;
    }

    const ToricSet& clutter_set(std::uint32_t q, const std::string& name) {
        auto key = std::make_pair(q, name);
        auto it = clutter_sets_.find(key);
        if (it == clutter_sets_.end()) {
            Clutter c = name == "edge"       ? single_edge_clutter()
                        : name == "triangle" ? triangle_clutter()
                        : name == "k22" ? complete_bipartite_clutter(2, 2)
                                        : complete_bipartite_clutter(2, 3);
            it = clutter_sets_
                     .emplace(key, toric_set_from_clutter(field(q), c,
                                                          opt_.point_cap))
                     .first;
        }
        return it->second;
    }

    void torus_size_check(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid) {
            std::vector<std::uint32_t> ss{1};
            ss.insert(ss.end(), opt_.s_grid.begin(), opt_.s_grid.end());
            for (std::uint32_t s : ss) {
                try {
                    const ToricSet& t = torus(q, s);
                    c.require(t.size() == torus_size(q, s),
                              cell(q, s) + ": enumerated " +
                                  std::to_string(t.size()) +
                                  " points, formula says " +
                                  std::to_string(torus_size(q, s)));
                    bool canonical = true;
                    for (std::size_t i = 0; i < t.points().size(); ++i) {
                        if (t.points()[i].back() != 1) canonical = false;
                        if (i && !(t.points()[i - 1] < t.points()[i]))
                            canonical = false;
                    }
                    c.require(canonical,
                              cell(q, s) + ": points not in canonical form");
                } catch (const CapExceeded&) {
                    c.skip("point cap");
                }
            }
        }
    }

    void torus_regularity_check(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : opt_.s_grid) {
                try {
                    const HilbertProfile& p = torus_profile(q, s);
                    c.require(p.regularity == torus_regularity(q, s),
                              cell(q, s) + ": regularity " +
                                  std::to_string(p.regularity) + " vs " +
                                  std::to_string(torus_regularity(q, s)));
                } catch (const CapExceeded&) {
                    c.skip("cap");
                }
            }
    }

    void profile_vs_series(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : opt_.s_grid) {
                try {
                    const HilbertProfile& p = torus_profile(q, s);
                    std::vector<std::uint64_t> num =
                        torus_hilbert_series_numerator(q, s);
                    std::vector<std::uint64_t> sums;
                    std::uint64_t acc = 0;
                    for (std::uint64_t x : num) sums.push_back(acc += x);
                    c.require(p.values == sums,
                              cell(q, s) +
                                  ": profile differs from series partial "
                                  "sums");
                } catch (const CapExceeded&) {
                    c.skip("cap");
                }
            }
    }

    void non_decreasing(Ctx& c) {
        auto probe = [&](const std::string& label, const ToricSet& x) {
            HilbertProfile p = hilbert_profile(x, opt_.entry_cap);
            bool mono = std::is_sorted(p.values.begin(), p.values.end());
            c.require(mono && p.values.back() == x.size(),
                      label + ": profile not monotone to the point count");
        };
        for (std::uint32_t q : opt_.q_grid) {
            try {
                for (std::uint32_t s : opt_.s_grid)
                    probe(cell(q, s) + " torus", torus(q, s));
                if (opt_.include_clutters)
                    for (const char* name :
                         {"edge", "triangle", "k22", "k23"})
                        probe("q=" + std::to_string(q) + " " + name,
                              clutter_set(q, name));
            } catch (const CapExceeded&) {
                c.skip("cap");
            }
        }
    }

    void dimension_vs_rank(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : opt_.s_grid) {
                std::uint64_t reg = torus_regularity(q, s);
                for (std::uint64_t d = 0; d <= reg + 1; ++d) {
                    try {
                        std::uint64_t rank = gf_rank(
                            evaluation_matrix(torus(q, s), std::uint32_t(d),
                                              opt_.entry_cap)
                                .entries);
                        c.require(rank ==
                                      dimension_torus_formula(q, s, d),
                                  cell(q, s, d) + ": rank " +
                                      std::to_string(rank) +
                                      " vs formula " +
                                      std::to_string(dimension_torus_formula(
                                          q, s, d)));
                    } catch (const CapExceeded&) {
                        c.skip("cap");
                    }
                }
            }
    }

    void distance_vs_oracle(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : opt_.s_grid) {
                std::uint64_t reg = torus_regularity(q, s);
                for (std::uint64_t d = 1; d <= reg + 1; ++d) {
                    std::optional<std::uint64_t> o =
                        torus_oracle(q, s, std::uint32_t(d));
                    if (!o) {
                        c.skip("codeword cap");
                        continue;
                    }
                    std::uint64_t fml = min_distance_torus_formula(q, s, d);
                    c.require(*o == fml, cell(q, s, d) + ": scan " +
                                             std::to_string(*o) +
                                             " vs formula " +
                                             std::to_string(fml));
                }
            }
    }

    void strict_decrease(Ctx& c) {
        for (std::uint32_t q = 3; q <= 9; ++q)
            for (std::uint32_t s = 2; s <= 5; ++s) {
                std::uint64_t reg = torus_regularity(q, s);
                std::uint64_t prev = min_distance_torus_formula(q, s, 1);
                for (std::uint64_t d = 2; d <= reg; ++d) {
                    std::uint64_t cur = min_distance_torus_formula(q, s, d);
                    if (prev > 1)
                        c.require(cur < prev,
                                  cell(q, s, d) +
                                      ": distance did not strictly drop (" +
                                      std::to_string(prev) + " -> " +
                                      std::to_string(cur) + ")");
                    prev = cur;
                }
            }
    }

    void plateau(Ctx& c) {
        for (std::uint32_t q = 3; q <= 9; ++q)
            for (std::uint32_t s = 1; s <= 5; ++s) {
                std::uint64_t reg = torus_regularity(q, s);
                if (reg >= 2)
                    c.require(min_distance_torus_formula(q, s, reg - 1) == 2,
                              cell(q, s, reg - 1) +
                                  ": distance just below the regularity "
                                  "should be 2");
                for (std::uint64_t d = std::max<std::uint64_t>(reg, 1);
                     d <= reg + 3; ++d)
                    c.require(min_distance_torus_formula(q, s, d) == 1,
                              cell(q, s, d) +
                                  ": distance past the regularity should "
                                  "be 1");
            }
    }

    void line_plane_piecewise(Ctx& c) {
        for (std::uint32_t q : opt_.line_plane_q_grid)
            for (std::uint32_t s : {2u, 3u}) {
                std::uint64_t reg = torus_regularity(q, s);
                for (std::uint64_t d = 1; d <= reg + 2; ++d) {
                    std::uint64_t pw =
                        min_distance_torus_line_plane(q, s, d);
                    std::uint64_t fml = min_distance_torus_formula(q, s, d);
                    c.require(pw == fml, cell(q, s, d) + ": piecewise " +
                                             std::to_string(pw) +
                                             " vs general " +
                                             std::to_string(fml));
                }
            }
    }

    void line_plane_vs_oracle(Ctx& c) {
        for (std::uint32_t q : opt_.line_plane_q_grid)
            for (std::uint32_t s : {2u, 3u}) {
                std::uint64_t reg = torus_regularity(q, s);
                for (std::uint64_t d = 1; d <= reg + 1; ++d) {
                    std::optional<std::uint64_t> o;
                    try {
                        o = torus_oracle(q, s, std::uint32_t(d));
                    } catch (const CapExceeded&) {
                        c.skip("point cap");
                        continue;
                    }
                    if (!o) {
                        c.skip("codeword cap");
                        continue;
                    }
                    std::uint64_t pw =
                        min_distance_torus_line_plane(q, s, d);
                    c.require(*o == pw, cell(q, s, d) + ": scan " +
                                            std::to_string(*o) +
                                            " vs piecewise " +
                                            std::to_string(pw));
                }
            }
    }

    void mds_line(Ctx& c) {
        for (std::uint32_t q : opt_.line_plane_q_grid)
            for (std::uint32_t d = 1; d + 2 <= q; ++d) {
                try {
                    CodeParameters p =
                        code_params(torus(q, 2), d, opt_.codeword_cap,
                                    opt_.entry_cap);
                    c.require(p.mds() && p.n == q - 1 && p.k == d + 1,
                              cell(q, 2, d) + ": expected an MDS [" +
                                  std::to_string(q - 1) + ", " +
                                  std::to_string(d + 1) + "] code, got k=" +
                                  std::to_string(p.k) + " distance=" +
                                  std::to_string(p.delta));
                } catch (const CapExceeded&) {
                    c.skip("cap");
                }
            }
    }

    void bipartite_product(Ctx& c) {
        if (!opt_.include_clutters) {
            c.skip("clutters disabled");
            return;
        }
        const std::pair<std::uint32_t, std::uint32_t> shapes[] = {
            {1, 1}, {1, 2}, {2, 2}, {2, 3}};
        for (std::uint32_t q : opt_.q_grid) {
            if (q > 4) continue;  // keep the exhaustive scans small
            for (auto [a, b] : shapes) {
                Clutter cl = complete_bipartite_clutter(a, b);
                auto shape = cl.complete_bipartite_shape();
                c.require(shape && shape->first == a && shape->second == b,
                          "K_{" + std::to_string(a) + "," +
                              std::to_string(b) +
                              "}: shape detection failed");
                ToricSet x = toric_set_from_clutter(field(q), cl,
                                                    opt_.point_cap);
                std::uint32_t dm = std::max(a, b);
                for (std::uint32_t d = 1; d <= (q - 2) * (dm - 1) + 2;
                     ++d) {
                    std::string where = "q=" + std::to_string(q) + " K_{" +
                                        std::to_string(a) + "," +
                                        std::to_string(b) +
                                        "} d=" + std::to_string(d);
                    CodeParameters fp =
                        complete_bipartite_code_params(q, a, b, d);
                    c.require(x.size() == fp.n,
                              where + ": point count " +
                                  std::to_string(x.size()) +
                                  " vs formula length " +
                                  std::to_string(fp.n));
                    try {
                        EvaluationMatrix em =
                            evaluation_matrix(x, d, opt_.entry_cap);
                        std::uint64_t rank =
                            gf_row_basis(em.entries).rows();
                        c.require(rank == fp.k,
                                  where + ": rank " + std::to_string(rank) +
                                      " vs formula dimension " +
                                      std::to_string(fp.k));
                        std::uint64_t scan =
                            min_distance_oracle(em, opt_.codeword_cap);
                        c.require(scan == fp.delta,
                                  where + ": scan " + std::to_string(scan) +
                                      " vs formula distance " +
                                      std::to_string(fp.delta));
                    } catch (const CapExceeded&) {
                        c.skip("cap");
                    }
                }
            }
        }
    }

    void ci_decision(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid) {
            try {
                for (std::uint32_t s : opt_.s_grid)
                    c.require(torus(q, s).is_complete_intersection(),
                              cell(q, s) + ": the full torus must be a "
                                           "complete intersection");
                if (!opt_.include_clutters) continue;
                const ToricSet& edge = clutter_set(q, "edge");
                c.require(edge.is_complete_intersection() &&
                              edge.size() == 1,
                          "q=" + std::to_string(q) +
                              " edge: a single-point set fills the torus "
                              "of one variable");
                const ToricSet& tri = clutter_set(q, "triangle");
                c.require(tri.is_complete_intersection() &&
                              tri.size() == torus_size(q, 3),
                          "q=" + std::to_string(q) +
                              " triangle: the parameterized points fill "
                              "the torus");
                const ToricSet& k22 = clutter_set(q, "k22");
                c.require(!k22.is_complete_intersection() &&
                              k22.size() == torus_size(q, 3),
                          "q=" + std::to_string(q) +
                              " k22: expected a proper subset of size "
                              "(q-1)^2");
                const ToricSet& k23 = clutter_set(q, "k23");
                c.require(!k23.is_complete_intersection() &&
                              k23.size() == torus_size(q, 4),
                          "q=" + std::to_string(q) +
                              " k23: expected a proper subset of size "
                              "(q-1)^3");
            } catch (const CapExceeded&) {
                c.skip("point cap");
            }
        }
    }

    void regularity_bound(Ctx& c) {
        auto probe = [&](const std::string& label, const ToricSet& x) {
            try {
                RegularityReport r =
                    check_regularity_bound(x, opt_.entry_cap);
                c.require(r.regularity <= r.bound &&
                              r.equality == (r.regularity == r.bound) &&
                              r.complete_intersection ==
                                  x.is_complete_intersection() &&
                              (!r.complete_intersection || r.equality),
                          label + ": inconsistent regularity report");
            } catch (const Discrepancy& e) {
                c.require(false, label + ": " + e.what());
            }
        };
        for (std::uint32_t q : opt_.q_grid) {
            try {
                for (std::uint32_t s : opt_.s_grid)
                    probe(cell(q, s) + " torus", torus(q, s));
                if (opt_.include_clutters)
                    for (const char* name :
                         {"edge", "triangle", "k22", "k23"})
                        probe("q=" + std::to_string(q) + " " + name,
                              clutter_set(q, name));
            } catch (const CapExceeded&) {
                c.skip("cap");
            }
        }
    }

    void extremal_tightness(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : opt_.s_grid) {
                if (s < 2) continue;
                std::uint64_t reg = torus_regularity(q, s);
                for (std::uint64_t d = 1; d + 1 <= reg; ++d) {
                    try {
                        max_zeros_consistency(field(q), s,
                                              std::uint32_t(d),
                                              opt_.point_cap);
                        c.ok();
                    } catch (const CapExceeded&) {
                        c.skip("point cap");
                    } catch (const Discrepancy& e) {
                        c.require(false, cell(q, s, d) + ": " + e.what());
                    }
                }
            }
    }

    void sweep(Ctx& c) {
        for (std::uint32_t q : opt_.q_grid)
            for (std::uint32_t s : {1u, 2u, 3u}) {
                const FiniteField& f = field(q);
                std::vector<SparsePolynomial> fixed;
                SparsePolynomial one(f, s);
                one.add_term(ExponentVector(s, 0), 1);
                fixed.push_back(one);
                SparsePolynomial lin(f, s);
                for (std::uint32_t i = 0; i < s; ++i) {
                    ExponentVector e(s, 0);
                    e[i] = 1;
                    lin.add_term(e, 1);
                }
                fixed.push_back(lin);
                SparsePolynomial kummer(f, s);
                {
                    ExponentVector e(s, 0);
                    e[0] = q - 1;
                    kummer.add_term(e, 1);
                    kummer.add_term(ExponentVector(s, 0), f.neg(1));
                }
                fixed.push_back(kummer);  // t1^(q-1) - 1: torus-vanishing
                for (std::uint32_t i = 1; i < s; ++i) {
                    SparsePolynomial g(f, s);
                    ExponentVector e(s, 0);
                    e[i] = q - 1;
                    g.add_term(e, 1);
                    ExponentVector e0(s, 0);
                    e0[0] = q - 1;
                    g.add_term(e0, f.neg(1));
                    fixed.push_back(std::move(g));
                }
                SparsePolynomial mono(f, s);
                mono.add_term(ExponentVector(s, 1), 1);
                fixed.push_back(mono);
                if (s >= 2) {
                    std::uint64_t reg = torus_regularity(q, s);
                    for (std::uint64_t d = 1; d + 1 <= reg && d <= 4; ++d)
                        fixed.push_back(extremal_polynomial(
                            f, s, std::uint32_t(d)));
                }

                auto probe = [&](const SparsePolynomial& g) {
                    try {
                        verify_zero_bounds(g, opt_.point_cap);
                        c.ok();
                    } catch (const CapExceeded&) {
                        c.skip("point cap");
                    } catch (const Discrepancy& e) {
                        c.require(false, cell(q, s) + ": " + e.what());
                    }
                };
                for (const auto& g : fixed) probe(g);

                SplitMix64 rng(opt_.seed +
                               0x9e3779b97f4a7c15ULL *
                                   (std::uint64_t(q) * 64 + s));
                for (std::uint32_t i = 0; i < opt_.sweep_samples; ++i) {
                    SparsePolynomial g(f, s);
                    std::uint32_t nterms = 1 + rng.next() % 4;
                    for (std::uint32_t t = 0; t < nterms; ++t) {
                        ExponentVector e(s);
                        for (std::uint32_t v = 0; v < s; ++v)
                            e[v] = std::uint32_t(rng.next() % (q + 1));
                        g.add_term(e,
                                   FieldEnc(1 + rng.next() % (q - 1)));
                    }
                    if (g.is_zero()) {
                        c.skip("terms cancelled");
                        continue;
                    }
                    probe(g);
                }
            }
    }

    void decomposition_monotonicity(Ctx& c) {
        for (std::uint32_t q = 3; q <= 9; ++q)
            for (std::uint32_t s = 2; s <= 6; ++s) {
                std::uint64_t reg = torus_regularity(q, s);
                std::vector<DegreeDecomposition> dec(reg + 1);
                for (std::uint64_t d = 1; d <= reg; ++d)
                    dec[d] = decompose_degree(d, q);
                // The zero-count ceiling -(q-1)^(s-k) + ell (q-1)^(s-k-1)
                // must grow with the degree, as must the quotient.
                auto ceiling = [&](const DegreeDecomposition& x) {
                    return -ipow(q - 1,
                                 std::uint32_t(s - std::uint32_t(x.k))) +
                           std::int64_t(x.ell) *
                               ipow(q - 1, std::uint32_t(
                                               s - 1 - std::uint32_t(x.k)));
                };
                for (std::uint64_t d = 1; d <= reg; ++d)
                    for (std::uint64_t d2 = 1; d2 <= d; ++d2) {
                        c.require(dec[d2].k <= dec[d].k,
                                  cell(q, s) + ": quotient fell from d=" +
                                      std::to_string(d2) +
                                      " to d=" + std::to_string(d));
                        c.require(ceiling(dec[d2]) <= ceiling(dec[d]),
                                  cell(q, s) +
                                      ": zero ceiling fell from d=" +
                                      std::to_string(d2) +
                                      " to d=" + std::to_string(d));
                    }
            }
    }

    VerifyOptions opt_;
    std::map<std::uint32_t, FiniteField> fields_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, ToricSet> tori_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, HilbertProfile>
        profiles_;
    std::map<std::array<std::uint32_t, 3>, std::optional<std::uint64_t>>
        oracle_;
    std::map<std::pair<std::uint32_t, std::string>, ToricSet> clutter_sets_;
};

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verification_check_names() {
    return kCheckNames;
}

VerificationReport run_verification(const VerifyOptions& options) {
    return Runner(options).run();
}

}
