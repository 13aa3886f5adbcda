#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "toricode/bounds.hpp"
#include "toricode/codes.hpp"
#include "toricode/errors.hpp"
#include "toricode/field.hpp"
#include "toricode/geometry.hpp"
#include "toricode/invariants.hpp"
#include "toricode/io.hpp"
#include "toricode/linalg.hpp"
#include "toricode/polynomial.hpp"
#include "toricode/verify.hpp"

namespace {

using namespace toricode;

struct CommonOpts {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint32_t s = 0;
    std::uint32_t d = 0;
    std::string clutter;
    std::string format = "text";
    std::string out;
    std::uint64_t cap_points = default_point_cap;
    std::uint64_t cap_codewords = default_codeword_cap;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    f.flush();
    if (!f)
        throw std::runtime_error("cannot write output file: " + out_path);
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: text or json");
    cmd->add_option("--out", o.out,
                    "Write the report to this file instead of stdout");
}

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "Field characteristic (a prime)")
        ->required();
    cmd->add_option("--m", o.m, "Extension degree, so q = p^m");
    add_output_opts(cmd, o);
}

// --s picks the full torus of P^{s-1}; --clutter picks the set
// parameterized by the given edges. Exactly one must be present.
void add_set_opts(CLI::App* cmd, CommonOpts& o) {
    add_field_opts(cmd, o);
    CLI::Option* sopt =
        cmd->add_option("--s", o.s, "Number of ambient variables");
    CLI::Option* copt = cmd->add_option(
        "--clutter", o.clutter,
        "Edge list like \"1 2, 2 3, 1 3\"; one coordinate per edge");
    sopt->excludes(copt);
    copt->excludes(sopt);
    cmd->add_option("--cap-points", o.cap_points,
                    "Refuse enumerations beyond this many points");
}

FiniteField make_field(const CommonOpts& o) {
    return FiniteField(o.p, o.m);
}

ToricSet build_set(const FiniteField& f, const CommonOpts& o) {
    if (!o.clutter.empty())
        return toric_set_from_clutter(f, parse_clutter(o.clutter),
                                      o.cap_points);
    if (o.s == 0)
        throw std::invalid_argument("one of --s or --clutter is required");
    return projective_torus(f, o.s, o.cap_points);
}

// Parameters for a clutter-defined set.  A complete bipartite clutter has
// closed product formulas; they are cross-checked against the generic rank
// and scan whenever those fit the caps, and any disagreement is an error.
CodeParameters set_params(const ToricSet& x,
                          const std::optional<Clutter>& cl, std::uint32_t d,
                          std::uint64_t codeword_cap) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> shape;
    if (cl) shape = cl->complete_bipartite_shape();
    if (!shape) return code_params(x, d, codeword_cap);
    std::uint32_t q = x.field().order();
    CodeParameters fp =
        complete_bipartite_code_params(q, shape->first, shape->second, d);
    if (fp.n != x.size())
        throw Discrepancy("parameterized point count " +
                          std::to_string(x.size()) +
                          " disagrees with the product formula length " +
                          std::to_string(fp.n));
    try {
        EvaluationMatrix em = evaluation_matrix(x, d);
        std::uint64_t rank = gf_rank(em.entries);
        if (rank != fp.k)
            throw Discrepancy(
                "evaluation rank " + std::to_string(rank) +
                " disagrees with the product formula dimension " +
                std::to_string(fp.k));
        std::uint64_t scan = min_distance_oracle(em, codeword_cap);
        if (scan != fp.delta)
            throw Discrepancy(
                "exhaustive distance " + std::to_string(scan) +
                " disagrees with the product formula " +
                std::to_string(fp.delta));
        fp.source = "both-agree";
    } catch (const CapExceeded&) {
        // over the cap the formula values stand on their own
    }
    return fp;
}

std::pair<std::uint32_t, std::uint32_t> parse_d_range(
    const std::string& text) {
    std::size_t pos = text.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("degree range must look like A..B");
    auto number = [&](const std::string& part) -> std::uint32_t {
        if (part.empty() ||
            part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad degree range endpoint: " +
                                        part);
        unsigned long v = std::stoul(part);
        if (v > 0xffffffffUL)
            throw std::invalid_argument("degree range endpoint too large");
        return std::uint32_t(v);
    };
    std::uint32_t lo = number(text.substr(0, pos));
    std::uint32_t hi = number(text.substr(pos + 2));
    if (lo < 1 || hi < lo)
        throw std::invalid_argument(
            "degree range must satisfy 1 <= A <= B");
    return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Evaluation codes on toric sets over small finite fields"};
    app.require_subcommand(1);
    int rc = 0;

    // params
    auto po = std::make_shared<CommonOpts>();
    CLI::App* params = app.add_subcommand(
        "params", "Length, dimension and minimum distance of one code");
    add_set_opts(params, *po);
    params->add_option("--d", po->d, "Evaluation degree")->required();
    params->add_option("--cap-codewords", po->cap_codewords,
                       "Refuse distance scans beyond this many codewords");
    params->callback([po] {
        OutputFormat fmt = parse_format(po->format);
        FiniteField f = make_field(*po);
        std::optional<Clutter> cl;
        if (!po->clutter.empty()) cl = parse_clutter(po->clutter);
        ToricSet x = build_set(f, *po);
        CodeParameters cp = set_params(x, cl, po->d, po->cap_codewords);
        emit(render_params(cp, x.is_complete_intersection(), fmt),
             po->out);
    });

    // table
    auto to = std::make_shared<CommonOpts>();
    auto trange = std::make_shared<std::string>();
    CLI::App* table = app.add_subcommand(
        "table", "Parameters over a degree range, one row per degree");
    add_set_opts(table, *to);
    table->add_option("--d-range", *trange,
                      "Degree range A..B (default 1..(q-2)(s-1)+1)");
    table->add_option("--cap-codewords", to->cap_codewords,
                      "Refuse distance scans beyond this many codewords");
    table->callback([to, trange] {
        OutputFormat fmt = parse_format(to->format);
        FiniteField f = make_field(*to);
        std::optional<Clutter> cl;
        if (!to->clutter.empty()) cl = parse_clutter(to->clutter);
        ToricSet x = build_set(f, *to);
        std::uint32_t q = f.order();
        std::pair<std::uint32_t, std::uint32_t> range;
        if (!trange->empty()) {
            range = parse_d_range(*trange);
        } else {
            std::uint64_t top =
                torus_regularity(q, x.ambient_vars()) + 1;
            range = {1, std::uint32_t(top)};
        }
        std::vector<TableRow> rows;
        for (std::uint32_t d = range.first; d <= range.second; ++d) {
            TableRow row;
            row.d = d;
            row.n = x.size();
            try {
                CodeParameters cp =
                    set_params(x, cl, d, to->cap_codewords);
                row.k = cp.k;
                row.delta = cp.delta;
                row.source = cp.source;
            } catch (const CapExceeded&) {
                row.source = "capped";
                try {
                    row.k = gf_rank(evaluation_matrix(x, d).entries);
                } catch (const CapExceeded&) {
                }
            }
            rows.push_back(std::move(row));
        }
        emit(render_table(q, x.ambient_vars(), rows, fmt), to->out);
    });

    // genmat
    auto go = std::make_shared<CommonOpts>();
    CLI::App* genmat = app.add_subcommand(
        "genmat", "Degree-d monomial evaluation matrix of the set");
    add_set_opts(genmat, *go);
    genmat->add_option("--d", go->d, "Evaluation degree")->required();
    genmat->callback([go] {
        OutputFormat fmt = parse_format(go->format);
        FiniteField f = make_field(*go);
        ToricSet x = build_set(f, *go);
        emit(render_genmat(evaluation_matrix(x, go->d), fmt), go->out);
    });

    // kernel
    auto ko = std::make_shared<CommonOpts>();
    CLI::App* kernel = app.add_subcommand(
        "kernel", "Basis of the degree-d forms vanishing on the set");
    add_set_opts(kernel, *ko);
    kernel->add_option("--d", ko->d, "Form degree")->required();
    kernel->callback([ko] {
        OutputFormat fmt = parse_format(ko->format);
        FiniteField f = make_field(*ko);
        ToricSet x = build_set(f, *ko);
        EvaluationMatrix em = evaluation_matrix(x, ko->d);
        emit(render_kernel(em, vanishing_forms_basis(em), fmt), ko->out);
    });

    // hilbert
    auto ho = std::make_shared<CommonOpts>();
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert function of the set up to its regularity");
    add_set_opts(hilbert, *ho);
    hilbert->callback([ho] {
        OutputFormat fmt = parse_format(ho->format);
        FiniteField f = make_field(*ho);
        ToricSet x = build_set(f, *ho);
        emit(render_hilbert(hilbert_profile(x), fmt), ho->out);
    });

    // torus-check
    auto co = std::make_shared<CommonOpts>();
    CLI::App* tcheck = app.add_subcommand(
        "torus-check",
        "Hilbert data of the full torus against its closed series");
    add_field_opts(tcheck, *co);
    tcheck->add_option("--s", co->s, "Number of ambient variables")
        ->required();
    tcheck->add_option("--cap-points", co->cap_points,
                       "Refuse enumerations beyond this many points");
    tcheck->callback([co, &rc] {
        OutputFormat fmt = parse_format(co->format);
        FiniteField f = make_field(*co);
        ToricSet x = projective_torus(f, co->s, co->cap_points);
        TorusCheckReport rep;
        rep.q = f.order();
        rep.s = co->s;
        rep.torus_points = x.size();
        rep.series_numerator =
            torus_hilbert_series_numerator(f.order(), co->s);
        rep.profile = hilbert_profile(x);
        rep.regularity = check_regularity_bound(x);
        std::vector<std::uint64_t> sums;
        std::uint64_t acc = 0;
        for (std::uint64_t v : rep.series_numerator)
            sums.push_back(acc += v);
        rep.profile_matches_series = rep.profile.values == sums;
        emit(render_torus_check(rep, fmt), co->out);
        if (!rep.profile_matches_series) {
            std::cerr << "discrepancy: the computed Hilbert function does "
                         "not match the series\n";
            rc = 3;
        }
    });

    // bounds
    auto bo = std::make_shared<CommonOpts>();
    auto poly_text = std::make_shared<std::string>();
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Zero-count bounds, optionally checked on a polynomial");
    add_field_opts(bounds, *bo);
    bounds->add_option("--s", bo->s, "Number of variables")->required();
    CLI::Option* dopt =
        bounds->add_option("--d", bo->d, "Total degree the bounds use");
    CLI::Option* popt = bounds->add_option(
        "--poly", *poly_text,
        "Polynomial such as \"2*t1^2 + t2\" to count zeros of");
    dopt->excludes(popt);
    popt->excludes(dopt);
    bounds->add_option("--cap-points", bo->cap_points,
                       "Refuse enumerations beyond this many points");
    bounds->callback([bo, poly_text, dopt, popt] {
        OutputFormat fmt = parse_format(bo->format);
        FiniteField f = make_field(*bo);
        std::uint32_t q = f.order();
        if (popt->count() == 0) {
            if (dopt->count() == 0)
                throw std::invalid_argument(
                    "one of --d or --poly is required");
            emit(render_bounds(zero_bounds(bo->d, q, bo->s), std::nullopt,
                               q, bo->s, bo->d, fmt),
                 bo->out);
            return;
        }
        SparsePolynomial g = parse_polynomial(f, bo->s, *poly_text);
        BoundCheck chk = verify_zero_bounds(g, bo->cap_points);
        std::uint32_t d = std::uint32_t(chk.degree);
        emit(render_bounds(zero_bounds(d, q, bo->s), chk, q, bo->s, d,
                           fmt),
             bo->out);
    });

    // verify
    auto vo = std::make_shared<VerifyOptions>();
    auto vfmt = std::make_shared<std::string>("text");
    auto vout = std::make_shared<std::string>();
    auto no_clutters = std::make_shared<bool>(false);
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the built-in cross-check suite");
    verify->add_option("--q-grid", vo->q_grid,
                       "Field orders the suite sweeps");
    verify->add_option("--s-grid", vo->s_grid,
                       "Ambient variable counts the suite sweeps");
    verify->add_option("--line-plane-q-grid", vo->line_plane_q_grid,
                       "Field orders for the piecewise distance checks");
    verify->add_option("--cap-points", vo->point_cap,
                       "Refuse enumerations beyond this many points");
    verify->add_option("--cap-codewords", vo->codeword_cap,
                       "Refuse distance scans beyond this many codewords");
    verify->add_option("--seed", vo->seed,
                       "Seed for the random polynomial sweep");
    verify->add_option("--samples", vo->sweep_samples,
                       "Random polynomials per field in the sweep");
    verify->add_flag("--no-clutters", *no_clutters,
                     "Skip the clutter-parameterized checks");
    verify->add_option("--inject-fault", vo->inject_fault,
                       "Force the named check to fail (self-test)")
        ->group("");
    verify->add_option("--format", *vfmt, "Output format: text or json");
    verify->add_option("--out", *vout,
                       "Write the report to this file instead of stdout");
    verify->callback([vo, vfmt, vout, no_clutters, &rc] {
        OutputFormat fmt = parse_format(*vfmt);
        vo->include_clutters = !*no_clutters;
        VerificationReport rep = run_verification(*vo);
        emit(render_verify(rep, fmt), *vout);
        if (!rep.all_passed()) {
            std::cerr << "discrepancy: verification checks failed\n";
            rc = 3;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Discrepancy& e) {
        std::cerr << "discrepancy: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
