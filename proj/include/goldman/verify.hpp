#pragma once

#include "goldman/brackets.hpp"
#include "goldman/chains.hpp"
#include "goldman/intersections.hpp"
#include "goldman/surface.hpp"

#include <string>
#include <utility>
#include <vector>

namespace goldman {

struct VerifyOptions {
    double u = 4.0;      // one-holed torus family parameter
    int depth = 8;       // conjugator enumeration depth
    int m_max = 8;       // power-scan range
    double tol = 1e-8;   // residual tolerance
    unsigned seed = 20240817;
};

// One check outcome. Theorem-level claims are at best "consistent with
// sampled evidence"; identities checked exactly or numerically on their
// whole sample are "verified"; anything violated is "failed".
struct CheckReport {
    std::string claim;
    std::string verdict;
    double worst_residual = 0.0;
    long long sample_size = 0;
    std::string notes;
    VerifyOptions options;

    bool ok() const { return verdict != "failed"; }
};

// Residuals of the two half-trace length identities at one intersection
// point: star-0 against the minus-cosine side, star-infinity against the
// plus-cosine side.
std::pair<double, double> length_angle_residuals(const SurfaceModel& model,
                                                 const CyclicWord& alpha,
                                                 const CyclicWord& beta,
                                                 const FreeWord& conjugator);
std::pair<double, double> length_angle_residuals(const SurfaceModel& model,
                                                 const IntersectionPoint& p);

// Undirected class of (alpha^m * beta)_0 at the crossing p of (alpha, beta).
CyclicWord power_star_zero_tilde(const IntersectionPoint& p, int m);

struct CollisionCounts {
    int fixed_target = 0;  // m with (alpha^m * beta)_0~ equal to the m=1 class
    int power_target = 0;  // m with (alpha^m * beta)_0~ equal to alpha~^m
    int fresh_target = 0;  // m hitting an unrelated reference class
};
CollisionCounts scan_power_collisions(const IntersectionPoint& p, int m_max,
                                      const CyclicWord& fresh_target);

struct AnnihilatorRow {
    CyclicWord alpha;
    int m = 0;
    std::string flavor;  // "tt", "tu", "ut", "uu"
    bool zero = false;
};
struct AnnihilatorReport {
    std::vector<AnnihilatorRow> rows;
    bool all_zero = true;
    int least_m0 = 0;           // 0 when all rows are zero
    std::string witness;        // "alpha flavor" of the least witness
};
// Brackets of alpha^m against beta in all four flavors, for every alpha in
// simple_list and m <= m_max.
AnnihilatorReport annihilator_scan(BracketEngine& engine, const ChainHat& beta,
                                   const std::vector<CyclicWord>& simple_list,
                                   int m_max);

struct PantsReport {
    CyclicWord witness;
    bool zero_against_all_peripherals = false;
    bool non_peripheral = false;
};
// Exhibits an essential non-peripheral class with zero geometric
// intersection against all peripheral classes of a pants model.
PantsReport pants_counterexample(BracketEngine& engine);

struct ReversibilityReport {
    long long classes_checked = 0;
    long long combinatorially_reversible = 0;  // expected 0
    long long matrix_conjugators_found = 0;    // expected 0
};
// Checks every nontrivial class of length <= word_len: no class is
// conjugate to its inverse, combinatorially and by a matrix conjugator
// scan over words of length <= conj_len.
ReversibilityReport reversibility_crosscheck(const SurfaceModel& model, int word_len,
                                             int conj_len, double tol);

std::vector<std::string> all_claim_ids();
CheckReport run_check(const std::string& claim, const VerifyOptions& opts);
std::vector<CheckReport> run_all(const VerifyOptions& opts);

std::string reports_to_json_lines(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace goldman
