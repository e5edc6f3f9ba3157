#pragma once

#include "goldman/chains.hpp"
#include "goldman/intersections.hpp"
#include "goldman/surface.hpp"

#include <map>
#include <utility>

namespace goldman {

// Computes the curve brackets on a fixed surface, caching the intersection
// enumerations (the expensive step) per ordered class pair.
class BracketEngine {
public:
    explicit BracketEngine(const SurfaceModel& model, int depth = 8)
        : model_(model), depth_(depth) {}

    const SurfaceModel& model() const { return model_; }
    int depth() const { return depth_; }

    const EnumerationResult& intersections(const CyclicWord& a, const CyclicWord& b);

    int geometric_intersection(const CyclicWord& a, const CyclicWord& b);
    int algebraic_intersection(const CyclicWord& a, const CyclicWord& b);

    // The two loop products at a crossing: alpha * (conjugated beta)^{+-eps}.
    static CyclicWord star_zero(const IntersectionPoint& p);
    static CyclicWord star_infty(const IntersectionPoint& p);

    // sum_P eps_P [alpha_P beta_P] over directed classes.
    ChainHat goldman(const CyclicWord& a, const CyclicWord& b);
    ChainHat goldman(const ChainHat& x, const ChainHat& y);

    // The four induced brackets on the undirected quotients. Inputs are
    // normalized to the canonical representative of the relevant quotient
    // class first, so the results are representative-independent.
    ChainTilde twg_tilde_tilde(const CyclicWord& a, const CyclicWord& b);
    ChainUnder twg_tilde_under(const CyclicWord& a, const CyclicWord& b);
    ChainUnder twg_under_tilde(const CyclicWord& a, const CyclicWord& b);
    ChainTilde twg_under_under(const CyclicWord& a, const CyclicWord& b);

    ChainTilde twg_tilde_tilde(const ChainTilde& x, const ChainTilde& y);
    ChainUnder twg_tilde_under(const ChainTilde& x, const ChainUnder& y);
    ChainUnder twg_under_tilde(const ChainUnder& x, const ChainTilde& y);
    ChainTilde twg_under_under(const ChainUnder& x, const ChainUnder& y);

private:
    const SurfaceModel& model_;
    int depth_;
    std::map<std::pair<CyclicWord, CyclicWord>, EnumerationResult> cache_;
};

}  // namespace goldman
