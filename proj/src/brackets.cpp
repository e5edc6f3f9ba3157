#include "goldman/brackets.hpp"

namespace goldman {

namespace {

// Class of alpha * (g beta g^{-1})^m for an intersection point with
// conjugator g.
CyclicWord loop_product(const IntersectionPoint& p, int m) {
    FreeWord conj = reduced_concat(
        p.conjugator, reduced_concat(word_power(p.beta.letters(), m),
                                     inverse_word(p.conjugator)));
    return CyclicWord::from_letters(reduced_concat(p.alpha.letters(), conj));
}

}  // namespace

const EnumerationResult& BracketEngine::intersections(const CyclicWord& a,
                                                      const CyclicWord& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, enumerate_intersections(model_, a, b, depth_)).first;
    return it->second;
}

int BracketEngine::geometric_intersection(const CyclicWord& a, const CyclicWord& b) {
    return static_cast<int>(intersections(a, b).points.size());
}

int BracketEngine::algebraic_intersection(const CyclicWord& a, const CyclicWord& b) {
    int total = 0;
    for (const auto& p : intersections(a, b).points) total += p.sign;
    return total;
}

CyclicWord BracketEngine::star_zero(const IntersectionPoint& p) {
    return loop_product(p, p.sign);
}

CyclicWord BracketEngine::star_infty(const IntersectionPoint& p) {
    return loop_product(p, -p.sign);
}

ChainHat BracketEngine::goldman(const CyclicWord& a, const CyclicWord& b) {
    ChainHat out;
    if (a.trivial() || b.trivial()) return out;
    const EnumerationResult& res = intersections(a, b);
    for (const auto& p : res.points) out.add(loop_product(p, 1), p.sign);
    return out;
}

ChainHat BracketEngine::goldman(const ChainHat& x, const ChainHat& y) {
    ChainHat out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ChainHat term = goldman(a, b);
            term *= ca * cb;
            out += term;
        }
    return out;
}

ChainTilde BracketEngine::twg_tilde_tilde(const CyclicWord& a, const CyclicWord& b) {
    CyclicWord ra = a.tilde_rep(), rb = b.tilde_rep();
    ChainTilde out;
    if (ra.trivial() || rb.trivial()) return out;
    for (const auto& p : intersections(ra, rb).points) {
        out.add(star_zero(p), 1);
        out.add(star_infty(p), -1);
    }
    return out;
}

ChainUnder BracketEngine::twg_tilde_under(const CyclicWord& a, const CyclicWord& b) {
    CyclicWord ra = a.tilde_rep();
    auto [rb, sb] = b.under_rep();
    ChainUnder out;
    if (ra.trivial() || rb.trivial()) return out;
    for (const auto& p : intersections(ra, rb).points) {
        out.add(star_zero(p), Rational(p.sign * sb));
        out.add(star_infty(p), Rational(p.sign * sb));
    }
    return out;
}

ChainUnder BracketEngine::twg_under_tilde(const CyclicWord& a, const CyclicWord& b) {
    auto [ra, sa] = a.under_rep();
    CyclicWord rb = b.tilde_rep();
    ChainUnder out;
    if (ra.trivial() || rb.trivial()) return out;
    for (const auto& p : intersections(ra, rb).points) {
        out.add(star_zero(p), Rational(sa));
        out.add(star_infty(p), Rational(-sa));
    }
    return out;
}

ChainTilde BracketEngine::twg_under_under(const CyclicWord& a, const CyclicWord& b) {
    auto [ra, sa] = a.under_rep();
    auto [rb, sb] = b.under_rep();
    ChainTilde out;
    if (ra.trivial() || rb.trivial()) return out;
    for (const auto& p : intersections(ra, rb).points) {
        out.add(star_zero(p), Rational(p.sign * sa * sb));
        out.add(star_infty(p), Rational(p.sign * sa * sb));
    }
    return out;
}

ChainTilde BracketEngine::twg_tilde_tilde(const ChainTilde& x, const ChainTilde& y) {
    ChainTilde out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ChainTilde term = twg_tilde_tilde(a, b);
            term *= ca * cb;
            out += term;
        }
    return out;
}

ChainUnder BracketEngine::twg_tilde_under(const ChainTilde& x, const ChainUnder& y) {
    ChainUnder out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ChainUnder term = twg_tilde_under(a, b);
            term *= ca * cb;
            out += term;
        }
    return out;
}

ChainUnder BracketEngine::twg_under_tilde(const ChainUnder& x, const ChainTilde& y) {
    ChainUnder out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ChainUnder term = twg_under_tilde(a, b);
            term *= ca * cb;
            out += term;
        }
    return out;
}

ChainTilde BracketEngine::twg_under_under(const ChainUnder& x, const ChainUnder& y) {
    ChainTilde out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ChainTilde term = twg_under_under(a, b);
            term *= ca * cb;
            out += term;
        }
    return out;
}

}  // namespace goldman
