#include "goldman/error.hpp"
#include "goldman/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace goldman;

namespace {

BracketEngine& engine() {
    static SurfaceModel model = SurfaceModel::one_holed_torus(4.0);
    static BracketEngine e(model, 8);
    return e;
}

}  // namespace

TEST_CASE("length-angle residuals vanish at real crossings") {
    const auto& pts = engine().intersections(CyclicWord::parse("a b", 2),
                                             CyclicWord::parse("a B", 2)).points;
    REQUIRE(pts.size() == 2);
    for (const auto& p : pts) {
        auto [r0, rinf] = length_angle_residuals(engine().model(), p);
        CHECK(std::abs(r0) < 1e-8);
        CHECK(std::abs(rinf) < 1e-8);
    }
    // The overloads agree.
    auto [s0, sinf] = length_angle_residuals(engine().model(), pts[0].alpha,
                                             pts[0].beta, pts[0].conjugator);
    auto [t0, tinf] = length_angle_residuals(engine().model(), pts[0]);
    CHECK(s0 == doctest::Approx(t0));
    CHECK(sinf == doctest::Approx(tinf));
}

TEST_CASE("power star classes stay fresh") {
    const auto& pts = engine().intersections(CyclicWord::parse("a", 2),
                                             CyclicWord::parse("b", 2)).points;
    REQUIRE(pts.size() == 1);
    CyclicWord base = power_star_zero_tilde(pts[0], 1);
    CHECK(base == CyclicWord::parse("a b", 2).tilde_rep());
    CHECK(power_star_zero_tilde(pts[0], 3) ==
          CyclicWord::parse("a a a b", 2).tilde_rep());
    CollisionCounts cc = scan_power_collisions(pts[0], 8, CyclicWord::parse("a b b", 2));
    // m = 1 always matches its own target class; no further collisions.
    CHECK(cc.fixed_target == 1);
    CHECK(cc.power_target == 0);
    CHECK(cc.fresh_target == 0);
}

TEST_CASE("annihilator scan flags the boundary and a witness") {
    ChainHat boundary(CyclicWord::parse("a b A B", 2));
    AnnihilatorReport r = annihilator_scan(engine(), boundary,
                                           engine().model().simple_classes(), 3);
    CHECK(r.all_zero);
    CHECK(r.least_m0 == 0);
    CHECK_FALSE(r.rows.empty());
    for (const auto& row : r.rows) CHECK(row.zero);

    ChainHat b(CyclicWord::parse("b", 2));
    AnnihilatorReport s = annihilator_scan(engine(), b,
                                           engine().model().simple_classes(), 3);
    CHECK_FALSE(s.all_zero);
    CHECK(s.least_m0 >= 1);
    CHECK_FALSE(s.witness.empty());
}

TEST_CASE("pants counterexample") {
    SurfaceModel pants = SurfaceModel::pants();
    BracketEngine pe(pants, 8);
    PantsReport r = pants_counterexample(pe);
    CHECK(r.zero_against_all_peripherals);
    CHECK(r.non_peripheral);
    for (const auto& per : pants.peripheral_classes())
        CHECK(pe.geometric_intersection(r.witness, per) == 0);
}

TEST_CASE("reversibility crosscheck finds nothing") {
    ReversibilityReport r = reversibility_crosscheck(engine().model(), 3, 3, 1e-8);
    CHECK(r.classes_checked > 0);
    CHECK(r.combinatorially_reversible == 0);
    CHECK(r.matrix_conjugators_found == 0);
}

TEST_CASE("claim registry") {
    auto ids = all_claim_ids();
    CHECK(ids.size() == 11);
    for (const char* id :
         {"cosh-product-law", "length-angle-identity", "goldman-lie-axioms",
          "involution-grading", "twg-quotient-consistency", "annihilator-scan",
          "pants-exclusion", "reversibility", "sign-twist-equivalence",
          "power-collisions", "poisson-pbw"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK_THROWS_AS(run_check("no-such-claim", VerifyOptions{}), DomainError);
}

TEST_CASE("individual cheap checks pass") {
    VerifyOptions opts;
    for (const char* id : {"cosh-product-law", "length-angle-identity",
                           "power-collisions", "pants-exclusion"}) {
        CheckReport r = run_check(id, opts);
        CHECK(r.ok());
        CHECK(r.verdict == "verified");
        CHECK(r.sample_size > 0);
        CHECK(r.worst_residual < opts.tol);
    }
    CheckReport ann = run_check("annihilator-scan", opts);
    CHECK(ann.ok());
    CHECK(ann.verdict == "consistent with sampled evidence");
}

TEST_CASE("report serialization") {
    VerifyOptions opts;
    std::vector<CheckReport> reports{run_check("cosh-product-law", opts)};
    std::string json = reports_to_json_lines(reports);
    CHECK(json.find("\"claim\":\"cosh-product-law\"") != std::string::npos);
    CHECK(json.find("\"verdict\":\"verified\"") != std::string::npos);
    CHECK(std::count(json.begin(), json.end(), '\n') == 1);
    // Byte-identical across runs.
    CHECK(reports_to_json_lines({run_check("cosh-product-law", opts)}) == json);
    std::string csv = reports_to_csv(reports);
    CHECK(csv.find("claim") != std::string::npos);
    CHECK(csv.find("cosh-product-law") != std::string::npos);
}
