#include "toricode/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace toricode {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string monomial_text(const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::uint64_t exponent_sum(const ExponentVector& e) {
    std::uint64_t d = 0;
    for (std::uint32_t x : e) d += x;
    return d;
}

ordered_json json_or_null(const std::optional<std::uint64_t>& v) {
    if (v) return *v;
    return nullptr;
}

ordered_json profile_json(const HilbertProfile& p) {
    return ordered_json{{"degree", p.degree},
                        {"regularity", p.regularity},
                        {"values", p.values}};
}

void profile_text(std::ostringstream& os, const HilbertProfile& p) {
    os << "degree = " << p.degree << "\n";
    os << "regularity = " << p.regularity << "\n";
    for (std::size_t d = 0; d < p.values.size(); ++d)
        os << "H(" << d << ") = " << p.values[d] << "\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string polynomial_text(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<ExponentVector, FieldEnc>> terms(
        p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) {
                  std::uint64_t da = exponent_sum(a.first);
                  std::uint64_t db = exponent_sum(b.first);
                  if (da != db) return da > db;
                  return a.first > b.first;
              });
    std::string out;
    for (const auto& [e, c] : terms) {
        if (!out.empty()) out += " + ";
        std::string mono = monomial_text(e);
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

SparsePolynomial parse_polynomial(const FiniteField& f, std::uint32_t nvars,
                                  const std::string& text) {
    SparsePolynomial out(f, nvars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto at_digit = [&] {
        return i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]));
    };
    auto parse_number = [&](const char* what) -> std::uint64_t {
        std::size_t start = i;
        std::uint64_t v = 0;
        while (at_digit()) {
            v = v * 10 + std::uint64_t(text[i] - '0');
            if (v > 0xffffffffULL)
                throw std::invalid_argument(
                    std::string("number too large for ") + what +
                    " at position " + std::to_string(start));
            ++i;
        }
        if (i == start)
            throw std::invalid_argument(std::string("expected ") + what +
                                        " at position " +
                                        std::to_string(start));
        return v;
    };

    skip_ws();
    if (i == text.size())
        throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (i < text.size()) {
        FieldEnc coeff = 1;
        if (text[i] == '+') {
            ++i;
        } else if (text[i] == '-') {
            coeff = f.neg(coeff);
            ++i;
        } else if (!first) {
            throw std::invalid_argument(
                "expected '+' or '-' between terms at position " +
                std::to_string(i));
        }
        first = false;
        ExponentVector e(nvars, 0);
        bool more = true;
        while (more) {
            skip_ws();
            if (i >= text.size())
                throw std::invalid_argument(
                    "polynomial text ends inside a term");
            if (at_digit()) {
                std::uint64_t v = parse_number("a coefficient");
                if (v >= f.order())
                    throw std::invalid_argument(
                        "coefficient " + std::to_string(v) +
                        " is not an encoding below " +
                        std::to_string(f.order()));
                coeff = f.mul(coeff, FieldEnc(v));
            } else if (text[i] == 't') {
                ++i;
                std::uint64_t idx = parse_number("a variable index");
                if (idx < 1 || idx > nvars)
                    throw std::invalid_argument(
                        "variable t" + std::to_string(idx) +
                        " is out of range for " + std::to_string(nvars) +
                        " variables");
                std::uint64_t exp = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    exp = parse_number("an exponent");
                }
                std::uint64_t total = std::uint64_t(e[idx - 1]) + exp;
                if (total > 0xffffffffULL)
                    throw std::overflow_error(
                        "exponent overflows 32 bits");
                e[idx - 1] = std::uint32_t(total);
            } else {
                throw std::invalid_argument(
                    std::string("unexpected character '") + text[i] +
                    "' at position " + std::to_string(i));
            }
            skip_ws();
            more = i < text.size() && text[i] == '*';
            if (more) ++i;
        }
        out.add_term(e, coeff);
    }
    return out;
}

std::string render_params(const CodeParameters& params,
                          bool complete_intersection, OutputFormat fmt) {
    if (fmt == OutputFormat::json)
        return finish(
            ordered_json{{"q", params.q},
                         {"s", params.s},
                         {"d", params.d},
                         {"n", params.n},
                         {"k", params.k},
                         {"minimum_distance", params.delta},
                         {"source", params.source},
                         {"complete_intersection", complete_intersection},
                         {"mds", params.mds()}});
    std::ostringstream os;
    os << "q = " << params.q << "  s = " << params.s
       << "  d = " << params.d << "\n";
    os << "n = " << params.n << "\n";
    os << "k = " << params.k << "\n";
    os << "minimum distance = " << params.delta << "\n";
    os << "source = " << params.source << "\n";
    os << "complete intersection = " << yesno(complete_intersection)
       << "\n";
    os << "mds = " << yesno(params.mds()) << "\n";
    return os.str();
}

std::string render_table(std::uint32_t q, std::uint32_t s,
                         const std::vector<TableRow>& rows,
                         OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json jrows = ordered_json::array();
        for (const TableRow& r : rows)
            jrows.push_back(ordered_json{{"d", r.d},
                                         {"n", r.n},
                                         {"k", json_or_null(r.k)},
                                         {"minimum_distance",
                                          json_or_null(r.delta)},
                                         {"source", r.source}});
        return finish(ordered_json{{"q", q}, {"s", s}, {"rows", jrows}});
    }
    std::ostringstream os;
    os << "q = " << q << "  s = " << s << "\n";
    os << std::left << std::setw(6) << "d" << std::setw(10) << "n"
       << std::setw(10) << "k" << std::setw(10) << "distance"
       << "source" << "\n";
    for (const TableRow& r : rows) {
        os << std::left << std::setw(6) << r.d << std::setw(10) << r.n;
        os << std::setw(10) << (r.k ? std::to_string(*r.k) : "-");
        os << std::setw(10)
           << (r.delta ? std::to_string(*r.delta) : "-");
        os << r.source << "\n";
    }
    return os.str();
}

std::string render_genmat(const EvaluationMatrix& em, OutputFormat fmt) {
    const GfMatrix& m = em.entries;
    std::vector<std::string> monos;
    monos.reserve(em.monomials.size());
    for (const ExponentVector& e : em.monomials) {
        std::string t = monomial_text(e);
        monos.push_back(t.empty() ? "1" : t);
    }
    if (fmt == OutputFormat::json) {
        ordered_json entries = ordered_json::array();
        for (std::uint64_t i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::uint64_t j = 0; j < m.cols(); ++j)
                row.push_back(m.at(i, j));
            entries.push_back(std::move(row));
        }
        return finish(ordered_json{{"q", em.points.field().order()},
                                   {"s", em.points.ambient_vars()},
                                   {"d", em.degree},
                                   {"rows", m.rows()},
                                   {"cols", m.cols()},
                                   {"monomials", monos},
                                   {"entries", entries}});
    }
    std::ostringstream os;
    os << "q = " << em.points.field().order()
       << "  s = " << em.points.ambient_vars() << "  d = " << em.degree
       << "\n";
    os << "rows = " << m.rows() << "  cols = " << m.cols() << "\n";
    os << "monomials:";
    for (const std::string& t : monos) os << " " << t;
    os << "\n";
    for (std::uint64_t i = 0; i < m.rows(); ++i) {
        for (std::uint64_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_kernel(const EvaluationMatrix& em,
                          const std::vector<SparsePolynomial>& forms,
                          OutputFormat fmt) {
    std::uint64_t monomial_count = em.monomials.size();
    std::uint64_t kernel_dim = forms.size();
    std::uint64_t rank = monomial_count - kernel_dim;
    if (fmt == OutputFormat::json) {
        ordered_json jforms = ordered_json::array();
        for (const SparsePolynomial& g : forms)
            jforms.push_back(polynomial_text(g));
        return finish(ordered_json{{"q", em.points.field().order()},
                                   {"s", em.points.ambient_vars()},
                                   {"d", em.degree},
                                   {"monomial_count", monomial_count},
                                   {"rank", rank},
                                   {"kernel_dimension", kernel_dim},
                                   {"forms", jforms}});
    }
    std::ostringstream os;
    os << "q = " << em.points.field().order()
       << "  s = " << em.points.ambient_vars() << "  d = " << em.degree
       << "\n";
    os << "monomial count = " << monomial_count << "\n";
    os << "rank = " << rank << "\n";
    os << "kernel dimension = " << kernel_dim << "\n";
    for (const SparsePolynomial& g : forms)
        os << polynomial_text(g) << "\n";
    return os.str();
}

std::string render_hilbert(const HilbertProfile& profile,
                           OutputFormat fmt) {
    if (fmt == OutputFormat::json) return finish(profile_json(profile));
    std::ostringstream os;
    profile_text(os, profile);
    return os.str();
}

std::string render_torus_check(const TorusCheckReport& report,
                               OutputFormat fmt) {
    if (fmt == OutputFormat::json)
        return finish(ordered_json{
            {"q", report.q},
            {"s", report.s},
            {"torus_points", report.torus_points},
            {"series_numerator", report.series_numerator},
            {"profile", profile_json(report.profile)},
            {"regularity",
             ordered_json{{"value", report.regularity.regularity},
                          {"bound", report.regularity.bound},
                          {"equality", report.regularity.equality},
                          {"complete_intersection",
                           report.regularity.complete_intersection}}},
            {"profile_matches_series", report.profile_matches_series}});
    std::ostringstream os;
    os << "q = " << report.q << "  s = " << report.s << "\n";
    os << "torus points = " << report.torus_points << "\n";
    os << "regularity = " << report.regularity.regularity << " (bound "
       << report.regularity.bound << ", equality "
       << yesno(report.regularity.equality) << ")\n";
    os << "complete intersection = "
       << yesno(report.regularity.complete_intersection) << "\n";
    os << "series numerator =";
    for (std::uint64_t x : report.series_numerator) os << " " << x;
    os << "\n";
    for (std::size_t d = 0; d < report.profile.values.size(); ++d)
        os << "H(" << d << ") = " << report.profile.values[d] << "\n";
    os << "profile matches series = "
       << yesno(report.profile_matches_series) << "\n";
    return os.str();
}

std::string render_bounds(const ZeroBounds& bounds,
                          const std::optional<BoundCheck>& check,
                          std::uint32_t q, std::uint32_t s, std::uint32_t d,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j{{"q", q},
                       {"s", s},
                       {"d", d},
                       {"bounds",
                        ordered_json{{"affine", bounds.schmidt},
                                     {"nonzero", bounds.homogeneous},
                                     {"torus", bounds.torus},
                                     {"refined",
                                      json_or_null(bounds.refined)}}}};
        if (check) {
            j["check"] = ordered_json{
                {"degree", check->degree},
                {"homogeneous", check->homogeneous},
                {"affine_zeros", check->affine_zeros},
                {"torus_zeros", check->torus_zeros},
                {"affine_bound", check->schmidt_bound},
                {"nonzero_bound", json_or_null(check->homogeneous_bound)},
                {"torus_bound", check->torus_bound},
                {"canonical_degree",
                 json_or_null(check->canonical_degree)},
                {"canonical_torus_bound",
                 json_or_null(check->canonical_torus_bound)},
                {"refined_bound", json_or_null(check->refined_bound)},
                {"satisfied", true}};
        }
        return finish(j);
    }
    std::ostringstream os;
    os << "q = " << q << "  s = " << s << "  d = " << d << "\n";
    os << "affine bound = " << bounds.schmidt << "\n";
    os << "nonzero-point bound = " << bounds.homogeneous << "\n";
    os << "torus bound = " << bounds.torus << "\n";
    if (bounds.refined)
        os << "refined torus bound = " << *bounds.refined << "\n";
    if (check) {
        os << "polynomial degree = " << check->degree << "\n";
        os << "homogeneous = " << yesno(check->homogeneous) << "\n";
        os << "affine zeros = " << check->affine_zeros << "\n";
        os << "torus zeros = " << check->torus_zeros << "\n";
        if (check->canonical_degree)
            os << "canonical degree = " << *check->canonical_degree
               << "\n";
        if (check->canonical_torus_bound)
            os << "canonical torus bound = "
               << *check->canonical_torus_bound << "\n";
        if (check->refined_bound)
            os << "refined bound = " << *check->refined_bound << "\n";
        os << "all bounds satisfied\n";
    }
    return os.str();
}

std::string render_verify(const VerificationReport& report,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        const VerifyOptions& o = report.options;
        ordered_json checks = ordered_json::array();
        for (const CheckResult& c : report.checks)
            checks.push_back(ordered_json{{"name", c.name},
                                          {"cases", c.cases},
                                          {"skipped", c.skipped},
                                          {"passed", c.passed},
                                          {"detail", c.detail}});
        return finish(ordered_json{
            {"options",
             ordered_json{{"q_grid", o.q_grid},
                          {"s_grid", o.s_grid},
                          {"line_plane_q_grid", o.line_plane_q_grid},
                          {"point_cap", o.point_cap},
                          {"codeword_cap", o.codeword_cap},
                          {"entry_cap", o.entry_cap},
                          {"seed", o.seed},
                          {"sweep_samples", o.sweep_samples},
                          {"include_clutters", o.include_clutters},
                          {"inject_fault", o.inject_fault}}},
            {"checks", checks},
            {"all_passed", report.all_passed()}});
    }
    std::ostringstream os;
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks) {
        os << (c.passed ? "ok    " : "FAIL  ") << std::left
           << std::setw(36) << c.name << "cases " << c.cases;
        if (c.skipped) os << "  skipped " << c.skipped;
        if (!c.passed) {
            ++failed;
            os << "  " << c.detail;
        } else if (!c.detail.empty()) {
            os << "  (" << c.detail << ")";
        }
        os << "\n";
    }
    if (failed == 0)
        os << "all " << report.checks.size() << " checks passed\n";
    else
        os << failed << " of " << report.checks.size()
           << " checks failed\n";
    return os.str();
}

}
