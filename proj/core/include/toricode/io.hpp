#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricode/bounds.hpp"
#include "toricode/codes.hpp"
#include "toricode/field.hpp"
#include "toricode/invariants.hpp"
#include "toricode/polynomial.hpp"
#include "toricode/verify.hpp"

namespace toricode {

enum class OutputFormat { text, json };

OutputFormat parse_format(const std::string& name);

// Renders terms in degree-descending, then lexicographically descending
// order, e.g. "2*t1^2 + t2^2". Coefficients are field encodings.
std::string polynomial_text(const SparsePolynomial& p);

// Parses the same syntax: terms joined by '+' or '-', factors joined by
// '*', each factor an integer encoding below q or t<i> or t<i>^<e>.
SparsePolynomial parse_polynomial(const FiniteField& f, std::uint32_t nvars,
                                  const std::string& text);

struct TableRow {
    std::uint32_t d = 0;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> delta;
    std::string source;
};

struct TorusCheckReport {
    std::uint32_t q = 0;
    std::uint32_t s = 0;
    std::uint64_t torus_points = 0;
    std::vector<std::uint64_t> series_numerator;
    HilbertProfile profile;
    RegularityReport regularity;
    bool profile_matches_series = false;
};

std::string render_params(const CodeParameters& params,
                          bool complete_intersection, OutputFormat fmt);
std::string render_table(std::uint32_t q, std::uint32_t s,
                         const std::vector<TableRow>& rows,
                         OutputFormat fmt);
std::string render_genmat(const EvaluationMatrix& em, OutputFormat fmt);
std::string render_kernel(const EvaluationMatrix& em,
                          const std::vector<SparsePolynomial>& forms,
                          OutputFormat fmt);
std::string render_hilbert(const HilbertProfile& profile, OutputFormat fmt);
std::string render_torus_check(const TorusCheckReport& report,
                               OutputFormat fmt);
std::string render_bounds(const ZeroBounds& bounds,
                          const std::optional<BoundCheck>& check,
                          std::uint32_t q, std::uint32_t s, std::uint32_t d,
                          OutputFormat fmt);
std::string render_verify(const VerificationReport& report,
                          OutputFormat fmt);

}
