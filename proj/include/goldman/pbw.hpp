#pragma once

#include "goldman/brackets.hpp"
#include "goldman/chains.hpp"

#include <compare>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace goldman {

// One generator of the symmetric/enveloping algebra: an undirected class
// (tilde tier) or a sign-twisted class (under tier, trivial class excluded).
// The total order puts the whole tilde tier first, then compares canonical
// words.
struct BasisClass {
    enum class Tier { Tilde, Under };

    Tier tier = Tier::Tilde;
    CyclicWord rep;  // min(w, iota w); positive under representative

    static BasisClass tilde(const CyclicWord& w);
    static BasisClass under(const CyclicWord& w);  // throws on the trivial class

    std::string str() const;

    bool operator==(const BasisClass&) const = default;
    std::strong_ordering operator<=>(const BasisClass& o) const {
        if (tier != o.tier) return tier <=> o.tier;
        return rep <=> o.rep;
    }
};

// Commutative monomial: factors sorted ascending, so the tilde block
// precedes the under block. Empty = the scalar 1.
using PBWMonomial = std::vector<BasisClass>;

PBWMonomial normalize_monomial(PBWMonomial m);  // sorts

struct MonomialLess {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const;
};

class PBWElement {
public:
    using Map = std::map<PBWMonomial, Rational, MonomialLess>;

    PBWElement() = default;
    static PBWElement scalar(Rational c);
    static PBWElement monomial(PBWMonomial m, Rational c = 1);

    void add(const PBWMonomial& m, const Rational& c);

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement& operator*=(const Rational& s);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const Rational& s, PBWElement a) { return a *= s; }

    bool zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    bool operator==(const PBWElement&) const = default;

    std::string str() const;
    std::string to_json() const;

private:
    Map terms_;
};

// Commutative product in the symmetric algebra.
PBWElement pbw_product(const PBWElement& x, const PBWElement& y);

// Degree-1 embeddings of bracket values.
PBWElement pbw_from_tilde(const ChainTilde& x);
PBWElement pbw_from_under(const ChainUnder& x);

// The quotient bracket of two generators, by tier:
// (tilde,tilde) and (under,under) land in the tilde tier, mixed pairs in
// the under tier.
PBWElement twg_basis_bracket(BracketEngine& engine, const BasisClass& x,
                             const BasisClass& y);

// One-parameter deformation: the plain bracket minus k * (algebraic
// intersection number) * (tier-swapped product of the two inputs).
PBWElement deformed_bracket_basis(BracketEngine& engine, const BasisClass& x,
                                  const BasisClass& y, const Rational& k);

// Bilinear Leibniz extension of deformed_bracket_basis to monomials.
PBWElement poisson_bracket(BracketEngine& engine, const PBWElement& x,
                           const PBWElement& y, const Rational& k);

// Normal form of an arbitrarily ordered product of generators in the
// enveloping algebra, rewriting xy = yx + [x,y] on out-of-order adjacent
// pairs. rng, when given, randomizes which descent is rewritten first;
// the result is order-independent.
PBWElement uea_normal_form(BracketEngine& engine, const std::vector<BasisClass>& word);
PBWElement uea_normal_form(BracketEngine& engine, const std::vector<BasisClass>& word,
                           std::mt19937& rng);

}  // namespace goldman
