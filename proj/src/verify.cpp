#include "goldman/verify.hpp"

#include "goldman/error.hpp"
#include "goldman/pbw.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>

namespace goldman {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

CyclicWord cw(const std::string& text) { return CyclicWord::parse(text, 2); }

bool coinciding_roots(const CyclicWord& a, const CyclicWord& b) {
    auto ra = a.primitive_root().first;
    auto rb = b.primitive_root().first;
    return rb == ra || rb == ra.inverse();
}

}  // namespace

std::pair<double, double> length_angle_residuals(const SurfaceModel& model,
                                                 const CyclicWord& alpha,
                                                 const CyclicWord& beta,
                                                 const FreeWord& conjugator) {
    Isometry ma = model.represent(alpha);
    Isometry mg = model.represent(conjugator);
    Isometry conj = mg * model.represent(beta) * mg.inverse();
    CrossingData cd = crossing_data(axis(ma), axis(conj));
    double theta = cd.sign > 0 ? M_PI - cd.forward_angle : cd.forward_angle;
    double ha = translation_length(ma) / 2.0;
    double hb = translation_length(conj) / 2.0;

    auto star_len = [&](int m) {
        FreeWord word = reduced_concat(
            alpha.letters(),
            reduced_concat(conjugator, reduced_concat(word_power(beta.letters(), m),
                                                      inverse_word(conjugator))));
        return model.geodesic_length(CyclicWord::from_letters(word));
    };
    double l0 = star_len(cd.sign);
    double linf = star_len(-cd.sign);
    double r0 = std::abs(std::cosh(l0 / 2.0) -
                         (std::cosh(ha) * std::cosh(hb) -
                          std::sinh(ha) * std::sinh(hb) * std::cos(theta)));
    double rinf = std::abs(std::cosh(linf / 2.0) -
                           (std::cosh(ha) * std::cosh(hb) +
                            std::sinh(ha) * std::sinh(hb) * std::cos(theta)));
    return {r0, rinf};
}

std::pair<double, double> length_angle_residuals(const SurfaceModel& model,
                                                 const IntersectionPoint& p) {
    return length_angle_residuals(model, p.alpha, p.beta, p.conjugator);
}

CyclicWord power_star_zero_tilde(const IntersectionPoint& p, int m) {
    FreeWord word = reduced_concat(
        word_power(p.alpha.letters(), m),
        reduced_concat(p.conjugator,
                       reduced_concat(word_power(p.beta.letters(), p.sign),
                                      inverse_word(p.conjugator))));
    return CyclicWord::from_letters(word).tilde_rep();
}

CollisionCounts scan_power_collisions(const IntersectionPoint& p, int m_max,
                                      const CyclicWord& fresh_target) {
    CollisionCounts out;
    CyclicWord fixed = power_star_zero_tilde(p, 1);
    CyclicWord fresh = fresh_target.tilde_rep();
    for (int m = 1; m <= m_max; ++m) {
        CyclicWord c = power_star_zero_tilde(p, m);
        if (c == fixed) ++out.fixed_target;
        if (c == p.alpha.power(m).tilde_rep()) ++out.power_target;
        if (c == fresh) ++out.fresh_target;
    }
    return out;
}

AnnihilatorReport annihilator_scan(BracketEngine& engine, const ChainHat& beta,
                                   const std::vector<CyclicWord>& simple_list,
                                   int m_max) {
    AnnihilatorReport out;
    ChainTilde bt = to_tilde(beta);
    ChainUnder bu = to_under(beta);
    for (const auto& alpha : simple_list) {
        for (int m = 1; m <= m_max; ++m) {
            CyclicWord am = alpha.power(m);
            ChainTilde at;
            at.add(am, 1);
            ChainUnder au;
            au.add(am, 1);
            struct Flavor {
                const char* name;
                bool zero;
            };
            Flavor flavors[4] = {
                {"tt", engine.twg_tilde_tilde(at, bt).zero()},
                {"tu", engine.twg_tilde_under(at, bu).zero()},
                {"ut", engine.twg_under_tilde(au, bt).zero()},
                {"uu", engine.twg_under_under(au, bu).zero()},
            };
            for (const auto& f : flavors) {
                out.rows.push_back({alpha, m, f.name, f.zero});
                if (!f.zero) {
                    out.all_zero = false;
                    if (out.least_m0 == 0 || m < out.least_m0) {
                        out.least_m0 = m;
                        out.witness = alpha.str() + " " + f.name;
                    }
                }
            }
        }
    }
    return out;
}

PantsReport pants_counterexample(BracketEngine& engine) {
    const SurfaceModel& model = engine.model();
    if (!model.excluded_by_paper())
        throw DomainError("pants_counterexample needs the excluded pants model");
    PantsReport out;
    out.witness = CyclicWord::parse("a B", model.rank());
    out.zero_against_all_peripherals = true;
    for (const auto& p : model.peripheral_classes()) {
        const EnumerationResult& res = engine.intersections(out.witness, p);
        if (res.coinciding_axes || !res.points.empty())
            out.zero_against_all_peripherals = false;
    }
    out.non_peripheral = true;
    CyclicWord root = out.witness.primitive_root().first;
    for (const auto& p : model.peripheral_classes())
        if (classes_equal_tilde(root, p.primitive_root().first))
            out.non_peripheral = false;
    return out;
}

ReversibilityReport reversibility_crosscheck(const SurfaceModel& model, int word_len,
                                             int conj_len, double tol) {
    ReversibilityReport out;
    std::vector<Isometry> conjugators;
    for (const auto& w : enumerate_reduced_words(model.rank(), conj_len))
        conjugators.push_back(model.represent(w));
    for (const auto& c : enumerate_classes(model.rank(), word_len)) {
        ++out.classes_checked;
        if (c.is_reversible()) ++out.combinatorially_reversible;
        Isometry m = model.represent(c);
        Isometry minv = m.inverse();
        for (const auto& g : conjugators)
            if (approx_equal_up_to_sign(g * m * g.inverse(), minv, tol)) {
                ++out.matrix_conjugators_found;
                break;
            }
    }
    return out;
}

namespace {

CheckReport check_cosh_product_law(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "cosh-product-law";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    std::mt19937 rng(opts.seed);

    // Analytic crossing of the two generators at u = 4: perpendicular axes.
    SurfaceModel m4 = SurfaceModel::one_holed_torus(4.0);
    CrossingData cd =
        crossing_data(axis(m4.represent(cw("a"))), axis(m4.represent(cw("b"))));
    double angle_err = std::abs(cd.forward_angle - M_PI / 2.0);
    bool angle_ok = angle_err < 1e-9;

    double worst = angle_err;
    long long samples = 0;
    int attempts = 0;
    while (samples < 100 && attempts < 20000) {
        ++attempts;
        CyclicWord x = random_cyclic_word(rng, 2, 1, 4);
        CyclicWord y = random_cyclic_word(rng, 2, 1, 4);
        if (coinciding_roots(x, y)) continue;
        Isometry g = model.represent(x), h = model.represent(y);
        if (!axes_cross(axis(g), axis(h))) continue;
        worst = std::max(worst, check_cosh_product(g, h));
        ++samples;
    }
    r.worst_residual = worst;
    r.sample_size = samples + 1;
    r.notes = "generator crossing angle error " + fmt(angle_err);
    r.verdict =
        (samples == 100 && angle_ok && worst < opts.tol) ? "verified" : "failed";
    return r;
}

CheckReport check_length_angle(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "length-angle-identity";
    r.options = opts;
    std::vector<SurfaceModel> sweep;
    for (double u : {3.5, opts.u, 5.0}) sweep.push_back(SurfaceModel::one_holed_torus(u));
    SurfaceModel& base = sweep[1];
    BracketEngine engine(base, opts.depth);
    std::mt19937 rng(opts.seed + 1);

    double worst = 0.0;
    long long points = 0;
    int pairs = 0, attempts = 0;
    double sanity = 0.0;
    while (pairs < 20 && attempts < 4000) {
        ++attempts;
        CyclicWord x = random_cyclic_word(rng, 2, 1, 4);
        CyclicWord y = random_cyclic_word(rng, 2, 1, 4);
        if (coinciding_roots(x, y)) continue;
        const EnumerationResult* res;
        try {
            res = &engine.intersections(x, y);
        } catch (const UnstableEnumeration&) {
            continue;
        }
        ++pairs;
        for (const auto& p : res->points) {
            for (const auto& m : sweep) {
                auto [r0, rinf] = length_angle_residuals(m, x, y, p.conjugator);
                worst = std::max(worst, std::max(r0, rinf));
                ++points;
            }
            if (sanity == 0.0) {
                // Detector sanity: a wrong angle must produce a visible
                // residual of about sinh*sinh*delta*sin(theta).
                Isometry ma = base.represent(x);
                Isometry mg = base.represent(p.conjugator);
                Isometry conj = mg * base.represent(y) * mg.inverse();
                double ha = translation_length(ma) / 2.0;
                double hb = translation_length(conj) / 2.0;
                double l0 = base.geodesic_length(BracketEngine::star_zero(p));
                sanity = std::abs(std::cosh(l0 / 2.0) -
                                  (std::cosh(ha) * std::cosh(hb) -
                                   std::sinh(ha) * std::sinh(hb) *
                                       std::cos(p.angle + 0.1)));
            }
        }
    }
    r.worst_residual = worst;
    r.sample_size = points;
    r.notes = "pairs " + std::to_string(pairs) + ", perturbed-angle residual " +
              fmt(sanity);
    r.verdict = (pairs == 20 && worst < opts.tol && sanity > 1e-4) ? "verified"
                                                                   : "failed";
    return r;
}

CheckReport check_goldman_axioms(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "goldman-lie-axioms";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);

    std::vector<CyclicWord> sample = enumerate_classes(2, 2);
    bool ok = true;
    long long checks = 0;
    std::string note;

    auto antisym = [&](const CyclicWord& x, const CyclicWord& y) {
        ChainHat xy = engine.goldman(x, y);
        ChainHat yx = engine.goldman(y, x);
        ++checks;
        if (!(xy + yx).zero()) {
            ok = false;
            if (note.empty()) note = "antisymmetry fails at (" + x.str() + "," + y.str() + ")";
        }
    };
    auto jacobi = [&](const CyclicWord& x, const CyclicWord& y, const CyclicWord& z) {
        ChainHat cx(x), cy(y), cz(z);
        ChainHat sum = engine.goldman(cx, engine.goldman(y, z));
        sum += engine.goldman(cy, engine.goldman(z, x));
        sum += engine.goldman(cz, engine.goldman(x, y));
        ++checks;
        if (!sum.zero()) {
            ok = false;
            if (note.empty())
                note = "jacobi fails at (" + x.str() + "," + y.str() + "," + z.str() + ")";
        }
    };

    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i; j < sample.size(); ++j) antisym(sample[i], sample[j]);
    // Antisymmetry makes the Jacobi sum permutation-invariant, so unordered
    // triples cover all of them.
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i; j < sample.size(); ++j)
            for (std::size_t k = j; k < sample.size(); ++k)
                jacobi(sample[i], sample[j], sample[k]);

    std::mt19937 rng(opts.seed + 2);
    for (int t = 0; t < 25; ++t) {
        CyclicWord x = random_cyclic_word(rng, 2, 1, 3);
        CyclicWord y = random_cyclic_word(rng, 2, 1, 3);
        CyclicWord z = random_cyclic_word(rng, 2, 1, 3);
        antisym(x, y);
        jacobi(x, y, z);
    }

    r.sample_size = checks;
    r.notes = ok ? "exact rational equalities" : note;
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_grading(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "involution-grading";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);

    std::vector<CyclicWord> sample = enumerate_classes(2, 2);
    std::mt19937 rng(opts.seed + 3);
    for (int t = 0; t < 10; ++t) sample.push_back(random_cyclic_word(rng, 2, 1, 3));

    bool ok = true;
    long long checks = 0;
    std::string note;
    auto expect = [&](bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            if (note.empty()) note = what;
        }
    };

    for (const auto& x : sample)
        for (const auto& y : sample) {
            ChainHat hx(x), hy(y);
            ChainHat b = engine.goldman(hx, hy);
            expect(iota_chain(b) == engine.goldman(iota_chain(hx), iota_chain(hy)),
                   "iota equivariance fails at (" + x.str() + "," + y.str() + ")");
            ChainHat b00 = engine.goldman(project_plus(hx), project_plus(hy));
            ChainHat b01 = engine.goldman(project_plus(hx), project_minus(hy));
            ChainHat b11 = engine.goldman(project_minus(hx), project_minus(hy));
            expect(iota_chain(b00) == b00, "even-even lands outside the even part");
            expect(iota_chain(b01) == -b01, "even-odd lands outside the odd part");
            expect(iota_chain(b11) == b11, "odd-odd lands outside the even part");
        }

    r.sample_size = checks;
    r.notes = ok ? "exact rational equalities" : note;
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_twg_consistency(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "twg-quotient-consistency";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);

    std::vector<CyclicWord> sample = enumerate_classes(2, 2);
    std::mt19937 rng(opts.seed + 4);
    for (int t = 0; t < 10; ++t) sample.push_back(random_cyclic_word(rng, 2, 1, 3));

    bool ok = true;
    long long checks = 0;
    std::string note;
    auto expect = [&](bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            if (note.empty()) note = what;
        }
    };

    // The quotient isomorphisms are normalized by x + iota x <-> tilde x
    // and x - iota x <-> under x, so the lift of a quotient class is the
    // full (un-halved) symmetrization and the projection back divides by 2.
    const Rational half(1, 2);
    for (const auto& x : sample)
        for (const auto& y : sample) {
            ChainHat hx(x), hy(y);
            ChainHat xp = hx + iota_chain(hx), xm = hx - iota_chain(hx);
            ChainHat yp = hy + iota_chain(hy), ym = hy - iota_chain(hy);
            std::string at = " at (" + x.str() + "," + y.str() + ")";
            ChainHat b00 = engine.goldman(xp, yp);
            expect(engine.twg_tilde_tilde(x, y) == half * to_tilde(b00),
                   "tt mismatch" + at);
            expect(to_under(b00).zero(), "tt has an odd component" + at);
            ChainHat b01 = engine.goldman(xp, ym);
            expect(engine.twg_tilde_under(x, y) == half * to_under(b01),
                   "tu mismatch" + at);
            expect(to_tilde(b01).zero(), "tu has an even component" + at);
            ChainHat b10 = engine.goldman(xm, yp);
            expect(engine.twg_under_tilde(x, y) == half * to_under(b10),
                   "ut mismatch" + at);
            expect(to_tilde(b10).zero(), "ut has an even component" + at);
            ChainHat b11 = engine.goldman(xm, ym);
            expect(engine.twg_under_under(x, y) == half * to_tilde(b11),
                   "uu mismatch" + at);
            expect(to_under(b11).zero(), "uu has an odd component" + at);
        }

    r.sample_size = checks;
    r.notes = ok ? "all four flavors equal their quotient images exactly" : note;
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_annihilator(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "annihilator-scan";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);

    ChainHat boundary(cw("a b A B"));
    AnnihilatorReport scan_boundary =
        annihilator_scan(engine, boundary, model.simple_classes(), std::min(opts.m_max, 5));
    ChainHat gen(cw("b"));
    AnnihilatorReport scan_gen =
        annihilator_scan(engine, gen, model.simple_classes(), 2);

    bool ok = scan_boundary.all_zero && !scan_gen.all_zero && scan_gen.least_m0 == 1;
    r.sample_size = static_cast<long long>(scan_boundary.rows.size() + scan_gen.rows.size());
    r.notes = ok ? "boundary class annihilates the sample; generator class has witness " +
                       scan_gen.witness
                 : "unexpected scan outcome";
    r.verdict = ok ? "consistent with sampled evidence" : "failed";
    return r;
}

CheckReport check_pants_exclusion(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "pants-exclusion";
    r.options = opts;
    SurfaceModel pants = SurfaceModel::pants();
    BracketEngine pants_engine(pants, opts.depth);
    PantsReport rep = pants_counterexample(pants_engine);

    SurfaceModel torus = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine torus_engine(torus, opts.depth);
    CyclicWord a = cw("a"), b = cw("b");
    bool torus_ok = true;
    long long scanned = 0;
    for (const auto& w : enumerate_classes(2, 3)) {
        ++scanned;
        auto count = [&](const CyclicWord& s) {
            if (coinciding_roots(w, s)) return 0;
            return torus_engine.geometric_intersection(w, s);
        };
        if (count(a) == 0 && count(b) == 0) torus_ok = false;
    }

    bool ok = rep.zero_against_all_peripherals && rep.non_peripheral && torus_ok;
    r.sample_size = scanned + 3;
    r.notes = ok ? "witness " + rep.witness.str() +
                       " misses all peripherals; no torus analogue up to length 3"
                 : "expected separation not observed";
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_reversibility(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "reversibility";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    ReversibilityReport rep = reversibility_crosscheck(model, 8, 5, opts.tol);
    bool ok = rep.combinatorially_reversible == 0 && rep.matrix_conjugators_found == 0 &&
              CyclicWord().is_reversible();
    r.sample_size = rep.classes_checked;
    r.notes = "conjugator scan length 5";
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_sign_twist_equivalence(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "sign-twist-equivalence";
    r.options = opts;
    std::vector<CyclicWord> classes = enumerate_classes(2, 4);
    bool ok = true;
    long long checks = 0;
    for (const auto& v : classes)
        for (const auto& w : classes) {
            ++checks;
            bool under_eq = classes_equal_under(v, w) != UnderRelation::Distinct;
            bool tilde_eq = classes_equal_tilde(v, w);
            if (under_eq != tilde_eq) ok = false;
        }
    r.sample_size = checks;
    r.notes = "exhaustive over classes of length <= 4";
    r.verdict = ok ? "verified" : "failed";
    return r;
}

CheckReport check_power_collisions(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "power-collisions";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);
    CyclicWord fresh = cw("a a b a a b b");

    std::vector<std::pair<CyclicWord, CyclicWord>> pairs = {
        {cw("a"), cw("b")}, {cw("b"), cw("a b")}, {cw("a b"), cw("a B")}};
    std::mt19937 rng(opts.seed + 5);
    while (pairs.size() < 8) {
        CyclicWord x = random_cyclic_word(rng, 2, 1, 3);
        CyclicWord y = random_cyclic_word(rng, 2, 1, 3);
        if (!coinciding_roots(x, y)) pairs.emplace_back(x, y);
    }

    bool ok = true;
    long long points = 0;
    double min_angle = M_PI, max_angle = 0.0;
    for (const auto& [x, y] : pairs) {
        const EnumerationResult* res;
        try {
            res = &engine.intersections(x, y);
        } catch (const UnstableEnumeration&) {
            continue;
        }
        for (const auto& p : res->points) {
            ++points;
            min_angle = std::min(min_angle, p.angle);
            max_angle = std::max(max_angle, p.angle);
            CollisionCounts c = scan_power_collisions(p, opts.m_max, fresh);
            if (c.fixed_target < 1 || c.fixed_target > 2) ok = false;
            if (c.power_target > 1) ok = false;
            if (c.fresh_target != 0) ok = false;
        }
    }
    r.sample_size = points;
    r.notes = "angles in [" + fmt(min_angle) + ", " + fmt(max_angle) + "]";
    r.verdict = (ok && points > 0) ? "verified" : "failed";
    return r;
}

CheckReport check_poisson_pbw(const VerifyOptions& opts) {
    CheckReport r;
    r.claim = "poisson-pbw";
    r.options = opts;
    SurfaceModel model = SurfaceModel::one_holed_torus(opts.u);
    BracketEngine engine(model, opts.depth);

    std::vector<BasisClass> pool;
    for (const auto& text : {"a", "b", "a b", "a B"}) {
        pool.push_back(BasisClass::tilde(cw(text)));
        pool.push_back(BasisClass::under(cw(text)));
    }

    bool ok = true;
    long long checks = 0;
    std::string note;
    auto expect = [&](bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            if (note.empty()) note = what;
        }
    };

    // Degree-1 faithfulness: the pool embeds injectively.
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            expect(!(pool[i] == pool[j]), "pool basis classes collide");

    std::mt19937 rng(opts.seed + 6);
    auto pick = [&] { return pool[rng() % pool.size()]; };
    std::vector<Rational> ks = {Rational(0), Rational(1), Rational(1, 2)};

    for (int t = 0; t < 15; ++t) {
        PBWElement X = PBWElement::monomial({pick()});
        PBWElement Y = PBWElement::monomial({pick()});
        PBWElement Z = PBWElement::monomial({pick()});
        for (const auto& k : ks) {
            expect(poisson_bracket(engine, X, Y, k) ==
                       Rational(-1) * poisson_bracket(engine, Y, X, k),
                   "poisson antisymmetry fails");
            expect(poisson_bracket(engine, pbw_product(X, Y), Z, k) ==
                       pbw_product(X, poisson_bracket(engine, Y, Z, k)) +
                           pbw_product(Y, poisson_bracket(engine, X, Z, k)),
                   "poisson leibniz fails");
            PBWElement jac = poisson_bracket(engine, X, poisson_bracket(engine, Y, Z, k), k);
            jac += poisson_bracket(engine, Y, poisson_bracket(engine, Z, X, k), k);
            jac += poisson_bracket(engine, Z, poisson_bracket(engine, X, Y, k), k);
            expect(jac.zero(), "poisson jacobi fails");
        }
    }

    // k = 0 specialization on all degree-1 pairs from the pool.
    for (const auto& x : pool)
        for (const auto& y : pool)
            expect(poisson_bracket(engine, PBWElement::monomial({x}),
                                   PBWElement::monomial({y}), Rational(0)) ==
                       twg_basis_bracket(engine, x, y),
                   "k=0 bracket disagrees with the quotient bracket");

    // Enveloping-algebra commutator reproduces the bracket.
    for (int t = 0; t < 5; ++t) {
        BasisClass x = pick(), y = pick();
        PBWElement comm = uea_normal_form(engine, {x, y}) - uea_normal_form(engine, {y, x});
        expect(comm == twg_basis_bracket(engine, x, y), "uea commutator mismatch");
    }

    // Confluence: randomized rewrite orders agree with the deterministic one.
    for (int t = 0; t < 20; ++t) {
        std::vector<BasisClass> word = {pick(), pick(), pick()};
        if (t % 2) word.push_back(pick());
        PBWElement det = uea_normal_form(engine, word);
        std::mt19937 rng2(opts.seed + 100 + t);
        expect(uea_normal_form(engine, word, rng2) == det,
               "uea normal form depends on rewrite order");
        // Associativity witness: bracketed in both ways through products.
        if (word.size() == 3) {
            std::vector<BasisClass> xy = {word[0], word[1]};
            PBWElement left = pbw_product(uea_normal_form(engine, xy),
                                          PBWElement::monomial({word[2]}));
            (void)left;  // products in S are commutative; UEA check is above
        }
    }

    r.sample_size = checks;
    r.notes = ok ? "exact for k in {0, 1, 1/2}" : note;
    r.verdict = ok ? "verified" : "failed";
    return r;
}

}  // namespace

std::vector<std::string> all_claim_ids() {
    return {"cosh-product-law",  "length-angle-identity", "goldman-lie-axioms",
            "involution-grading", "twg-quotient-consistency", "annihilator-scan",
            "pants-exclusion",   "reversibility",         "sign-twist-equivalence",
            "power-collisions",  "poisson-pbw"};
}

CheckReport run_check(const std::string& claim, const VerifyOptions& opts) {
    if (claim == "cosh-product-law") return check_cosh_product_law(opts);
    if (claim == "length-angle-identity") return check_length_angle(opts);
    if (claim == "goldman-lie-axioms") return check_goldman_axioms(opts);
    if (claim == "involution-grading") return check_grading(opts);
    if (claim == "twg-quotient-consistency") return check_twg_consistency(opts);
    if (claim == "annihilator-scan") return check_annihilator(opts);
    if (claim == "pants-exclusion") return check_pants_exclusion(opts);
    if (claim == "reversibility") return check_reversibility(opts);
    if (claim == "sign-twist-equivalence") return check_sign_twist_equivalence(opts);
    if (claim == "power-collisions") return check_power_collisions(opts);
    if (claim == "poisson-pbw") return check_poisson_pbw(opts);
    throw DomainError("unknown claim id '" + claim + "'");
}

std::vector<CheckReport> run_all(const VerifyOptions& opts) {
    std::vector<std::string> ids = all_claim_ids();
    std::vector<std::future<CheckReport>> jobs;
    jobs.reserve(ids.size());
    for (const auto& id : ids)
        jobs.push_back(std::async(std::launch::async,
                                  [id, opts] { return run_check(id, opts); }));
    std::vector<CheckReport> out;
    out.reserve(ids.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string reports_to_json_lines(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        nlohmann::json j{{"claim", r.claim},
                         {"verdict", r.verdict},
                         {"worst_residual", fmt(r.worst_residual)},
                         {"sample_size", r.sample_size},
                         {"notes", r.notes},
                         {"u", fmt(r.options.u)},
                         {"depth", r.options.depth},
                         {"m_max", r.options.m_max},
                         {"tol", fmt(r.options.tol)},
                         {"seed", r.options.seed}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::string out = "claim,verdict,worst_residual,sample_size,notes\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const auto& r : reports) {
        out += r.claim + "," + r.verdict + "," + fmt(r.worst_residual) + "," +
               std::to_string(r.sample_size) + "," + quote(r.notes) + "\n";
    }
    return out;
}

}  // namespace goldman
