#include "goldman/brackets.hpp"
#include "goldman/chains.hpp"
#include "goldman/error.hpp"
#include "goldman/intersections.hpp"
#include "goldman/pbw.hpp"
#include "goldman/surface.hpp"
#include "goldman/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace goldman;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Monomial grammar: comma-separated factors "tilde:<word>" or "under:<word>";
// an empty string is the scalar 1.
std::vector<BasisClass> parse_factors(const std::string& text, int rank) {
    std::vector<BasisClass> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("factor '" + item + "' needs a tilde: or under: prefix");
        std::string tier = item.substr(0, colon);
        CyclicWord w = CyclicWord::parse(item.substr(colon + 1), rank);
        if (tier == "tilde")
            out.push_back(BasisClass::tilde(w));
        else if (tier == "under")
            out.push_back(BasisClass::under(w));
        else
            throw DomainError("unknown tier '" + tier + "' (use tilde or under)");
    }
    return out;
}

struct Common {
    std::string surface = "torus1:u=4";
    int depth = 8;
    double tol = 1e-8;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--surface", c.surface, "surface spec, e.g. torus1:u=4 or pants:t=2,s=6");
    cmd->add_option("--depth", c.depth, "conjugator enumeration depth")
        ->envname("GOLDMAN_DEPTH");
    cmd->add_option("--tol", c.tol, "numeric tolerance")->envname("GOLDMAN_TOL");
}

nlohmann::json surface_json(const SurfaceModel& m) {
    const Certificate& cert = m.certificate();
    return {{"name", m.name()},
            {"rank", m.rank()},
            {"genus", m.topology().genus},
            {"boundary_count", m.topology().boundary_count},
            {"excluded_by_paper", m.excluded_by_paper()},
            {"certificate",
             {{"passed", cert.passed},
              {"scan_length", cert.scan_length},
              {"min_translation", fmt(cert.min_translation)},
              {"words_checked", cert.words_checked},
              {"min_observed_length", fmt(cert.min_observed_length)}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Curve brackets on hyperbolic surfaces.\n"
        "Word grammar: whitespace-separated letters, lowercase = generator,\n"
        "uppercase = inverse, optional ^k (e.g. \"a b A B\", \"a^3 b^-1\").\n"
        "Monomial grammar: comma-separated factors tilde:<word> or under:<word>."};
    app.set_config("--config", "", "config file mirroring the flags (flags win)");
    app.require_subcommand(1);

    // surface
    auto* surface = app.add_subcommand("surface", "surface construction and certification");
    surface->require_subcommand(1);
    Common sc;
    int cert_length = 6;
    auto* sinfo = surface->add_subcommand("info", "print the surface summary");
    add_common(sinfo, sc);
    auto* scert = surface->add_subcommand("certify", "re-run the certificate scan");
    add_common(scert, sc);
    scert->add_option("--cert-length", cert_length, "certificate scan length");

    // bracket
    auto* bracket = app.add_subcommand("bracket", "bracket of two classes");
    bracket->require_subcommand(1);
    Common bc;
    std::string bx, by, flavor = "tt";
    auto* bgold = bracket->add_subcommand("goldman", "directed-class bracket");
    add_common(bgold, bc);
    bgold->add_option("--x", bx, "first class")->required();
    bgold->add_option("--y", by, "second class")->required();
    auto* btwg = bracket->add_subcommand("twg", "undirected quotient bracket");
    add_common(btwg, bc);
    btwg->add_option("--x", bx, "first class")->required();
    btwg->add_option("--y", by, "second class")->required();
    btwg->add_option("--flavor", flavor, "tt|tu|ut|uu")
        ->check(CLI::IsMember({"tt", "tu", "ut", "uu"}));

    // intersect
    Common ic;
    std::string ix, iy;
    auto* intersect = app.add_subcommand("intersect", "intersection points of two classes");
    add_common(intersect, ic);
    intersect->add_option("--x", ix, "first class")->required();
    intersect->add_option("--y", iy, "second class")->required();

    // poisson
    Common pc;
    std::string px, py, pk = "0";
    auto* poisson = app.add_subcommand("poisson", "deformed bracket of two monomial elements");
    add_common(poisson, pc);
    poisson->add_option("--x", px, "first monomial")->required();
    poisson->add_option("--y", py, "second monomial")->required();
    poisson->add_option("--k", pk, "deformation parameter (rational)");

    // uea
    Common uc;
    std::string uword;
    auto* uea = app.add_subcommand("uea", "enveloping-algebra operations");
    uea->require_subcommand(1);
    auto* unf = uea->add_subcommand("normal-form", "sort a product of generators");
    add_common(unf, uc);
    unf->add_option("--word", uword, "ordered factor list")->required();

    // verify
    Common vc;
    std::string vclaim = "all", vformat = "json";
    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "run the identity checks");
    add_common(verify, vc);
    verify->add_option("claim", vclaim, "all or a claim id");
    verify->add_option("--format", vformat, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--u", vopts.u, "torus family parameter");
    verify->add_option("--m-max", vopts.m_max, "power-scan range");
    verify->add_option("--seed", vopts.seed, "sample seed");

    // annihilator-scan
    Common ac;
    std::string abeta = "a b A B";
    int am_max = 5;
    auto* ascan = app.add_subcommand("annihilator-scan",
                                     "brackets of simple-class powers against a class");
    add_common(ascan, ac);
    ascan->add_option("--beta", abeta, "scanned class");
    ascan->add_option("--m-max", am_max, "largest power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (sinfo->parsed() || scert->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(sc.surface);
            if (scert->parsed()) {
                // Re-run through the declarative path to honor the length.
                nlohmann::json cfg;
                cfg["cert_length"] = cert_length;
                auto colon = sc.surface.find(':');
                cfg["family"] = sc.surface.substr(0, colon);
                if (sc.surface.rfind("torus1", 0) == 0)
                    cfg["u"] = m.family_parameter();
                std::cout << surface_json(SurfaceModel::from_config_json(cfg.dump())).dump()
                          << "\n";
            } else {
                std::cout << surface_json(m).dump() << "\n";
            }
            return 0;
        }
        if (bgold->parsed() || btwg->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(bc.surface);
            BracketEngine engine(m, bc.depth);
            CyclicWord x = CyclicWord::parse(bx, m.rank());
            CyclicWord y = CyclicWord::parse(by, m.rank());
            if (bgold->parsed()) {
                std::cout << chain_to_json(engine.goldman(x, y)) << "\n";
            } else if (flavor == "tt") {
                std::cout << chain_to_json(engine.twg_tilde_tilde(x, y)) << "\n";
            } else if (flavor == "tu") {
                std::cout << chain_to_json(engine.twg_tilde_under(x, y)) << "\n";
            } else if (flavor == "ut") {
                std::cout << chain_to_json(engine.twg_under_tilde(x, y)) << "\n";
            } else {
                std::cout << chain_to_json(engine.twg_under_under(x, y)) << "\n";
            }
            return 0;
        }
        if (intersect->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(ic.surface);
            CyclicWord x = CyclicWord::parse(ix, m.rank());
            CyclicWord y = CyclicWord::parse(iy, m.rank());
            EnumerationResult res = enumerate_intersections(m, x, y, ic.depth);
            nlohmann::json points = nlohmann::json::array();
            for (const auto& p : res.points)
                points.push_back({{"conjugator", word_to_string(p.conjugator)},
                                  {"position", fmt(p.position)},
                                  {"angle", fmt(p.angle)},
                                  {"sign", p.sign}});
            nlohmann::json out{{"coinciding_axes", res.coinciding_axes},
                               {"points", points}};
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (poisson->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(pc.surface);
            BracketEngine engine(m, pc.depth);
            PBWElement X = PBWElement::monomial(parse_factors(px, m.rank()));
            PBWElement Y = PBWElement::monomial(parse_factors(py, m.rank()));
            std::cout << poisson_bracket(engine, X, Y, parse_rational(pk)).to_json()
                      << "\n";
            return 0;
        }
        if (unf->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(uc.surface);
            BracketEngine engine(m, uc.depth);
            std::cout << uea_normal_form(engine, parse_factors(uword, m.rank())).to_json()
                      << "\n";
            return 0;
        }
        if (verify->parsed()) {
            vopts.depth = vc.depth;
            vopts.tol = vc.tol;
            std::vector<CheckReport> reports;
            if (vclaim == "all")
                reports = run_all(vopts);
            else
                reports.push_back(run_check(vclaim, vopts));
            std::cout << (vformat == "csv" ? reports_to_csv(reports)
                                           : reports_to_json_lines(reports));
            for (const auto& r : reports)
                if (!r.ok()) {
                    std::cerr << "verification failed: " << r.claim << "\n";
                    return 3;
                }
            return 0;
        }
        if (ascan->parsed()) {
            SurfaceModel m = SurfaceModel::from_spec(ac.surface);
            BracketEngine engine(m, ac.depth);
            ChainHat beta(CyclicWord::parse(abeta, m.rank()));
            AnnihilatorReport rep =
                annihilator_scan(engine, beta, m.simple_classes(), am_max);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"alpha", row.alpha.str()},
                                {"m", row.m},
                                {"flavor", row.flavor},
                                {"zero", row.zero}});
            nlohmann::json out{{"all_zero", rep.all_zero},
                               {"least_m0", rep.least_m0},
                               {"witness", rep.witness},
                               {"rows", rows}};
            std::cout << out.dump() << "\n";
            return 0;
        }
    } catch (const UnstableEnumeration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
