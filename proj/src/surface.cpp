#include "goldman/surface.hpp"

#include "goldman/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace goldman {

void SurfaceModel::run_certificate(const CertificateOptions& opts) {
    certificate_.scan_length = opts.scan_length;
    certificate_.min_translation = opts.min_translation;
    certificate_.words_checked = 0;
    certificate_.min_observed_length = std::numeric_limits<double>::infinity();

    // DFS over reduced words with incrementally built matrices.
    FreeWord word;
    std::vector<Isometry> stack{Isometry{}};
    auto rec = [&](auto&& self) -> void {
        if (!word.empty()) {
            ++certificate_.words_checked;
            const Isometry& m = stack.back();
            if (classify(m) != IsometryType::Hyperbolic)
                throw ConstructionError("certificate failure: word '" +
                                        word_to_string(word) + "' is " +
                                        to_string(classify(m)));
            double len = translation_length(m);
            certificate_.min_observed_length =
                std::min(certificate_.min_observed_length, len);
            if (len < opts.min_translation)
                throw ConstructionError("certificate failure: word '" +
                                        word_to_string(word) +
                                        "' has translation length " + std::to_string(len));
        }
        if (static_cast<int>(word.size()) == opts.scan_length) return;
        for (int code = 0; code < 2 * rank_; ++code) {
            Letter l{static_cast<std::uint8_t>(code)};
            if (!word.empty() && word.back() == l.inverse()) continue;
            word.push_back(l);
            const Isometry& img =
                l.sign() > 0 ? generators_[static_cast<std::size_t>(l.generator())]
                             : generator_inverses_[static_cast<std::size_t>(l.generator())];
            stack.push_back(stack.back() * img);
            self(self);
            stack.pop_back();
            word.pop_back();
        }
    };
    rec(rec);
    certificate_.passed = true;
}

void SurfaceModel::check_rank(int max_gen) const {
    if (max_gen >= rank_)
        throw DomainError("word uses generator index " + std::to_string(max_gen) +
                          " but surface has rank " + std::to_string(rank_));
}

SurfaceModel SurfaceModel::one_holed_torus(double u, CertificateOptions opts) {
    // Fricke: tr[A,B] = trA^2 + trB^2 + trAB^2 - trA trB trAB - 2
    //                 = u^2 + 16 + 4u^2 - 8u^2 - 2 = 14 - 3u^2.
    double comm_trace = 14.0 - 3.0 * u * u;
    if (!(u > 2.0) || !(comm_trace < -2.0))
        throw ConstructionError("one_holed_torus: parameter u = " + std::to_string(u) +
                                " outside the validated range (need tr[A,B] < -2)");
    double lambda = (u + std::sqrt(u * u - 4.0)) / 2.0;

    SurfaceModel m;
    m.rank_ = 2;
    m.generators_ = {Isometry(lambda, 0, 0, 1.0 / lambda), Isometry(2, 1, 3, 2)};
    m.generator_inverses_ = {m.generators_[0].inverse(), m.generators_[1].inverse()};
    m.topology_ = {1, 1};
    m.family_parameter_ = u;
    m.excluded_by_paper_ = false;
    std::ostringstream name;
    name << "torus1:u=" << u;
    m.name_ = name.str();

    CyclicWord a = CyclicWord::parse("a", 2);
    CyclicWord b = CyclicWord::parse("b", 2);
    CyclicWord boundary = CyclicWord::parse("a b A B", 2);
    m.simple_classes_ = {a, b, boundary};
    m.peripheral_classes_ = {boundary};

    m.run_certificate(opts);
    return m;
}

SurfaceModel SurfaceModel::pants(double t, double s, CertificateOptions opts) {
    if (!(t > 0.0) || !(s > 0.0)) throw ConstructionError("pants: need t > 0, s > 0");
    double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
    Isometry g1(ch, sh, sh, ch);  // axis (-1, 1), translation length t
    Isometry shift(1, s, 0, 1);
    Isometry g2 = shift * g1 * shift.inverse();

    // Schottky certificate: the isometric circles of g, g^{-1} must be
    // pairwise disjoint across both generators.
    struct Circle {
        double center, radius;
    };
    auto circles = [](const Isometry& g) {
        if (std::abs(g.c()) < 1e-12)
            throw ConstructionError("pants: generator fixes infinity, no isometric circle");
        return std::pair<Circle, Circle>{{-g.d() / g.c(), 1.0 / std::abs(g.c())},
                                         {g.a() / g.c(), 1.0 / std::abs(g.c())}};
    };
    auto [c1m, c1p] = circles(g1);
    auto [c2m, c2p] = circles(g2);
    Circle all[4] = {c1m, c1p, c2m, c2p};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(all[i].center - all[j].center) <= all[i].radius + all[j].radius)
                throw ConstructionError(
                    "pants: isometric circles overlap (increase s or t)");

    SurfaceModel m;
    m.rank_ = 2;
    m.generators_ = {g1, g2};
    m.generator_inverses_ = {g1.inverse(), g2.inverse()};
    m.topology_ = {0, 3};
    m.family_parameter_ = s;
    m.excluded_by_paper_ = true;
    std::ostringstream name;
    name << "pants:t=" << t << ",s=" << s;
    m.name_ = name.str();

    CyclicWord a = CyclicWord::parse("a", 2);
    CyclicWord b = CyclicWord::parse("b", 2);
    CyclicWord ab_inv = CyclicWord::parse("B A", 2);
    m.peripheral_classes_ = {a, b, ab_inv};
    m.simple_classes_ = m.peripheral_classes_;

    m.run_certificate(opts);
    return m;
}

SurfaceModel SurfaceModel::from_config_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("surface config: ") + e.what());
    }
    CertificateOptions opts;
    if (j.contains("cert_length")) opts.scan_length = j["cert_length"].get<int>();
    if (j.contains("cert_min_translation"))
        opts.min_translation = j["cert_min_translation"].get<double>();
    if (j.contains("family")) {
        std::string family = j["family"].get<std::string>();
        if (family == "torus1") return one_holed_torus(j.value("u", 4.0), opts);
        if (family == "pants") return pants(j.value("t", 2.0), j.value("s", 6.0), opts);
        throw DomainError("unknown surface family '" + family + "'");
    }
    if (!j.contains("rank") || !j.contains("generators"))
        throw DomainError("surface config needs 'family' or 'rank'+'generators'");
    SurfaceModel m;
    m.rank_ = j["rank"].get<int>();
    if (m.rank_ < 2) throw DomainError("surface rank must be >= 2");
    for (const auto& row : j["generators"]) {
        if (!row.is_array() || row.size() != 4)
            throw DomainError("generator entries must be [a,b,c,d]");
        m.generators_.emplace_back(row[0].get<double>(), row[1].get<double>(),
                                   row[2].get<double>(), row[3].get<double>());
    }
    if (static_cast<int>(m.generators_.size()) != m.rank_)
        throw DomainError("generator count does not match rank");
    for (const auto& g : m.generators_) m.generator_inverses_.push_back(g.inverse());
    m.topology_ = {j.value("genus", 0), j.value("boundary_count", 1)};
    m.name_ = j.value("name", std::string("custom"));
    m.excluded_by_paper_ = j.value("excluded_by_paper", false);
    for (int i = 0; i < m.rank_; ++i)
        m.simple_classes_.push_back(
            CyclicWord::from_letters({Letter::make(i, +1)}));
    m.run_certificate(opts);
    return m;
}

SurfaceModel SurfaceModel::from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string family = spec.substr(0, colon);
    std::map<std::string, double> params;
    if (colon != std::string::npos) {
        std::istringstream rest(spec.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw DomainError("malformed surface parameter '" + item + "'");
            try {
                params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw DomainError("malformed surface parameter '" + item + "'");
            }
        }
    }
    auto get = [&](const std::string& key, double dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    if (family == "torus1") return one_holed_torus(get("u", 4.0));
    if (family == "pants") return pants(get("t", 2.0), get("s", 6.0));
    throw DomainError("unknown surface '" + family + "'");
}

Isometry SurfaceModel::represent(const FreeWord& w) const {
    Isometry out;
    for (Letter l : w) {
        check_rank(l.generator());
        const Isometry& img =
            l.sign() > 0 ? generators_[static_cast<std::size_t>(l.generator())]
                         : generator_inverses_[static_cast<std::size_t>(l.generator())];
        out = out * img;
    }
    return out;
}

Isometry SurfaceModel::represent(const CyclicWord& w) const { return represent(w.letters()); }

double SurfaceModel::geodesic_length(const CyclicWord& w) const {
    if (w.trivial()) throw DomainError("the trivial class has no geodesic length");
    return translation_length(represent(w));
}

}  // namespace goldman
