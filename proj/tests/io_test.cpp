#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "toricode/codes.hpp"
#include "toricode/field.hpp"
#include "toricode/geometry.hpp"
#include "toricode/invariants.hpp"
#include "toricode/io.hpp"
#include "toricode/polynomial.hpp"

namespace {

using namespace toricode;

SparsePolynomial make(const FiniteField& f, std::uint32_t nvars,
                      const std::vector<std::pair<ExponentVector, FieldEnc>>&
                          terms) {
    SparsePolynomial p(f, nvars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("polynomial rendering") {
    FiniteField f3(3);
    CHECK(polynomial_text(SparsePolynomial(f3, 2)) == "0");
    CHECK(polynomial_text(make(f3, 2, {{{0, 2}, 1}, {{2, 0}, 2}})) ==
          "2*t1^2 + t2^2");
    CHECK(polynomial_text(make(f3, 2, {{{0, 0}, 2}})) == "2");
    CHECK(polynomial_text(make(f3, 2, {{{1, 1}, 1}})) == "t1*t2");
    CHECK(polynomial_text(make(f3, 3, {{{1, 0, 0}, 1}, {{0, 0, 0}, 1},
                                       {{0, 3, 0}, 1}})) ==
          "t2^3 + t1 + 1");
}

TEST_CASE("polynomial parsing") {
    FiniteField f5(5);
    SUBCASE("roundtrips") {
        std::vector<SparsePolynomial> cases = {
            make(f5, 2, {{{2, 0}, 2}, {{0, 2}, 1}}),
            make(f5, 3, {{{1, 1, 1}, 4}, {{0, 0, 0}, 3}}),
            make(f5, 1, {{{7}, 1}}),
            SparsePolynomial(f5, 2),
        };
        for (const SparsePolynomial& p : cases) {
            SparsePolynomial back =
                parse_polynomial(f5, p.variable_count(), polynomial_text(p));
            CHECK(back.terms() == p.terms());
        }
    }
    SUBCASE("grammar") {
        CHECK(parse_polynomial(f5, 2, "t1 + t2").terms() ==
              make(f5, 2, {{{1, 0}, 1}, {{0, 1}, 1}}).terms());
        CHECK(parse_polynomial(f5, 2, " 2 * t1 ^ 3 ").terms() ==
              make(f5, 2, {{{3, 0}, 2}}).terms());
        // '-' negates the term that follows it
        CHECK(parse_polynomial(f5, 2, "-t1").terms() ==
              make(f5, 2, {{{1, 0}, 4}}).terms());
        CHECK(parse_polynomial(f5, 2, "t1 - 2*t2").terms() ==
              make(f5, 2, {{{1, 0}, 1}, {{0, 1}, 3}}).terms());
        // repeated factors multiply out
        CHECK(parse_polynomial(f5, 2, "2*3*t1").terms() ==
              make(f5, 2, {{{1, 0}, 1}}).terms());
        CHECK(parse_polynomial(f5, 2, "t1*t1").terms() ==
              make(f5, 2, {{{2, 0}, 1}}).terms());
        // cancelling input parses to the zero polynomial
        CHECK(parse_polynomial(f5, 2, "t1 - t1").is_zero());
        CHECK(parse_polynomial(f5, 2, "0").is_zero());
    }
    SUBCASE("errors name the position") {
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "t3"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "t0"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "2**t1"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "t1^"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, ""),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "+"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "t1 t2"),
                        std::invalid_argument);
        // coefficients are encodings, so they must already be below q
        CHECK_THROWS_AS(parse_polynomial(f5, 2, "5*t1"),
                        std::invalid_argument);
        CHECK_THROWS_MESSAGE(parse_polynomial(f5, 2, "7*t1"),
                             "coefficient 7 is not an encoding below 5");
    }
}

TEST_CASE("format names") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("parameter rendering") {
    FiniteField f(5);
    CodeParameters p = code_params(projective_torus(f, 2), 2);
    std::string text = render_params(p, true, OutputFormat::text);
    CHECK(text.find("n = 4") != std::string::npos);
    CHECK(text.find("k = 3") != std::string::npos);
    CHECK(text.find("minimum distance = 2") != std::string::npos);
    CHECK(text.find("mds = yes") != std::string::npos);

    nlohmann::json j =
        nlohmann::json::parse(render_params(p, true, OutputFormat::json));
    CHECK(j["q"] == 5);
    CHECK(j["s"] == 2);
    CHECK(j["d"] == 2);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 3);
    CHECK(j["minimum_distance"] == 2);
    CHECK(j["source"] == "both-agree");
    CHECK(j["complete_intersection"] == true);
    CHECK(j["mds"] == true);
}

TEST_CASE("table rendering handles capped rows") {
    std::vector<TableRow> rows = {
        {1, 4, 3, 2, "both-agree"},
        {2, 4, std::nullopt, std::nullopt, "capped"},
    };
    std::string text = render_table(5, 2, rows, OutputFormat::text);
    CHECK(text.find('-') != std::string::npos);

    nlohmann::json j =
        nlohmann::json::parse(render_table(5, 2, rows, OutputFormat::json));
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["k"] == 3);
    CHECK(j["rows"][1]["k"].is_null());
    CHECK(j["rows"][1]["minimum_distance"].is_null());
    CHECK(j["rows"][1]["source"] == "capped");
}

TEST_CASE("matrix and kernel rendering") {
    FiniteField f(3);
    ToricSet t = projective_torus(f, 2);
    EvaluationMatrix em = evaluation_matrix(t, 2);

    nlohmann::json j =
        nlohmann::json::parse(render_genmat(em, OutputFormat::json));
    CHECK(j["q"] == 3);
    CHECK(j["d"] == 2);
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 2);
    CHECK(j["monomials"] ==
          nlohmann::json::array({"t1^2", "t1*t2", "t2^2"}));
    CHECK(j["entries"] ==
          nlohmann::json::array({{1, 1}, {1, 2}, {1, 1}}));

    std::vector<SparsePolynomial> forms = vanishing_forms_basis(em);
    nlohmann::json k =
        nlohmann::json::parse(render_kernel(em, forms, OutputFormat::json));
    CHECK(k["monomial_count"] == 3);
    CHECK(k["rank"] == 2);
    CHECK(k["kernel_dimension"] == 1);
    CHECK(k["forms"] == nlohmann::json::array({"2*t1^2 + t2^2"}));

    std::string text = render_kernel(em, forms, OutputFormat::text);
    CHECK(text.find("2*t1^2 + t2^2") != std::string::npos);
}

TEST_CASE("hilbert and torus check rendering") {
    FiniteField f(3);
    HilbertProfile p = hilbert_profile(projective_torus(f, 3));
    nlohmann::json j =
        nlohmann::json::parse(render_hilbert(p, OutputFormat::json));
    CHECK(j["values"] == nlohmann::json::array({1, 3, 4}));
    CHECK(j["regularity"] == 2);
    CHECK(j["degree"] == 4);

    TorusCheckReport r;
    r.q = 3;
    r.s = 3;
    r.torus_points = 4;
    r.series_numerator = {1, 2, 1};
    r.profile = p;
    r.regularity = check_regularity_bound(projective_torus(f, 3));
    r.profile_matches_series = true;
    nlohmann::json tj =
        nlohmann::json::parse(render_torus_check(r, OutputFormat::json));
    CHECK(tj["torus_points"] == 4);
    CHECK(tj["series_numerator"] == nlohmann::json::array({1, 2, 1}));
    CHECK(tj["profile"]["values"] == nlohmann::json::array({1, 3, 4}));
    CHECK(tj["regularity"]["value"] == 2);
    CHECK(tj["regularity"]["bound"] == 2);
    CHECK(tj["regularity"]["equality"] == true);
    CHECK(tj["regularity"]["complete_intersection"] == true);
    CHECK(tj["profile_matches_series"] == true);
}

TEST_CASE("bounds rendering") {
    ZeroBounds b = zero_bounds(1, 3, 2);
    nlohmann::json j = nlohmann::json::parse(
        render_bounds(b, std::nullopt, 3, 2, 1, OutputFormat::json));
    CHECK(j["bounds"]["affine"] == 3);
    CHECK(j["bounds"]["nonzero"] == 2);
    CHECK(j["bounds"]["torus"] == 2);
    CHECK(j["bounds"]["refined"] == 2);
    CHECK_FALSE(j.contains("check"));

    FiniteField f(3);
    SparsePolynomial g = make(f, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
    BoundCheck c = verify_zero_bounds(g);
    nlohmann::json jc = nlohmann::json::parse(
        render_bounds(zero_bounds(c.degree, 3, 2), c, 3, 2, 1,
                      OutputFormat::json));
    CHECK(jc["check"]["affine_zeros"] == 3);
    CHECK(jc["check"]["torus_zeros"] == 2);
    CHECK(jc["check"]["satisfied"] == true);

    std::string text = render_bounds(b, std::nullopt, 3, 2, 1,
                                     OutputFormat::text);
    CHECK(text.find("torus") != std::string::npos);
}
