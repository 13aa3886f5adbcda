#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "toricode/io.hpp"
#include "toricode/verify.hpp"

namespace {

using namespace toricode;

// Small grids keep a full run below a second while still covering every
// check with at least one case.
VerifyOptions tiny() {
    VerifyOptions o;
    o.q_grid = {3, 4};
    o.s_grid = {2, 3};
    o.line_plane_q_grid = {3, 4};
    o.sweep_samples = 40;
    return o;
}

}  // namespace

TEST_CASE("the check list is frozen") {
    const std::vector<std::string> expected = {
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
    CHECK(verification_check_names() == expected);
}

TEST_CASE("a small verification run passes every check") {
    VerificationReport r = run_verification(tiny());
    CHECK(r.all_passed());
    REQUIRE(r.checks.size() == verification_check_names().size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const CheckResult& c = r.checks[i];
        CHECK(c.name == verification_check_names()[i]);
        CHECK(c.passed);
        CHECK(c.cases > 0);
    }
}

TEST_CASE("verification is deterministic") {
    VerificationReport a = run_verification(tiny());
    VerificationReport b = run_verification(tiny());
    CHECK(render_verify(a, OutputFormat::json) ==
          render_verify(b, OutputFormat::json));
    CHECK(render_verify(a, OutputFormat::text) ==
          render_verify(b, OutputFormat::text));
}

TEST_CASE("fault injection fails exactly the named check") {
    for (const std::string& name : verification_check_names()) {
        VerifyOptions o = tiny();
        o.inject_fault = name;
        VerificationReport r = run_verification(o);
        CHECK_FALSE(r.all_passed());
        for (const CheckResult& c : r.checks) {
            if (c.name == name) {
                CHECK_FALSE(c.passed);
                CHECK(c.detail == "injected fault");
            } else {
                CHECK(c.passed);
            }
        }
    }
}

TEST_CASE("an unknown check name is rejected") {
    VerifyOptions o = tiny();
    o.inject_fault = "no-such-check";
    CHECK_THROWS_AS(run_verification(o), std::invalid_argument);
}

TEST_CASE("clutter checks can be skipped") {
    VerifyOptions o = tiny();
    o.include_clutters = false;
    VerificationReport r = run_verification(o);
    CHECK(r.all_passed());
    for (const CheckResult& c : r.checks)
        if (c.name == "bipartite-product-params") {
            CHECK(c.cases == 0);
            CHECK(c.skipped == 1);
            CHECK(c.passed);
        }
}
