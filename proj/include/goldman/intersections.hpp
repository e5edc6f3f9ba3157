#pragma once

#include "goldman/moebius.hpp"
#include "goldman/surface.hpp"
#include "goldman/words.hpp"

#include <vector>

namespace goldman {

// One (alpha, beta)-intersection point, realized as the double coset
// <alpha> g <beta> whose conjugated beta-axis crosses the alpha-axis.
struct IntersectionPoint {
    CyclicWord alpha, beta;
    FreeWord conjugator;   // canonical double-coset representative
    double position = 0;   // in [0, l_alpha) along the alpha-axis
    double angle = 0;      // theta_P in (0, pi), measured from beta to alpha
    int sign = 0;          // epsilon_P
};

struct EnumerationResult {
    std::vector<IntersectionPoint> points;
    // Set when beta is a power/conjugate of alpha^{+-1}: no transversal
    // representative, points left empty.
    bool coinciding_axes = false;
};

// Canonical representative of <alpha> g <beta>: the (length, lex)-least
// reduced word alpha^k g beta^l. alpha, beta are the linear readings of the
// cyclic classes.
FreeWord canonical_double_coset(const FreeWord& g, const FreeWord& alpha,
                                const FreeWord& beta);

// Exact membership test g2 in <alpha> g1 <beta> by bounded power scan;
// independent of the canonicalization above.
bool same_double_coset(const FreeWord& g1, const FreeWord& g2, const FreeWord& alpha,
                       const FreeWord& beta);

// Enumerates conjugators of length <= depth; requires the result to be
// stable between depth-1 and depth, else throws UnstableEnumeration.
EnumerationResult enumerate_intersections(const SurfaceModel& model,
                                          const CyclicWord& alpha,
                                          const CyclicWord& beta, int depth = 8);

int geometric_intersection_number(const SurfaceModel& model, const CyclicWord& alpha,
                                  const CyclicWord& beta, int depth = 8);

// Sum of signs; antisymmetric, equal to the homological pairing on the
// one-holed torus.
int algebraic_intersection_number(const SurfaceModel& model, const CyclicWord& alpha,
                                  const CyclicWord& beta, int depth = 8);

}  // namespace goldman
