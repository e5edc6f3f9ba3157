#pragma once

#include "goldman/moebius.hpp"
#include "goldman/words.hpp"

#include <string>
#include <vector>

namespace goldman {

struct CertificateOptions {
    int scan_length = 6;            // L_cert
    double min_translation = 0.05;  // delta
};

// Outcome of the bounded purely-hyperbolic scan. This is a heuristic
// discreteness check, not a proof; the built-in families carry an
// additional trace-based justification.
struct Certificate {
    int scan_length = 0;
    double min_translation = 0.0;
    long long words_checked = 0;
    double min_observed_length = 0.0;
    bool passed = false;
};

struct Topology {
    int genus = 0;
    int boundary_count = 0;
};

// A concrete hyperbolic structure: a representation of a rank-n free group
// into PSL(2,R), certified purely hyperbolic up to the scan length.
// Immutable after construction.
class SurfaceModel {
public:
    // One-holed torus family: A = diag(lambda, 1/lambda) with tr A = u,
    // B = [[2,1],[3,2]] fixed. Requires tr[A,B] < -2 (geodesic boundary)
    // and a passing certificate.
    static SurfaceModel one_holed_torus(double u, CertificateOptions opts = {});

    // Pair of pants (thrice-holed sphere), flagged excluded_by_paper.
    // Generator 1 translates by t along the geodesic (-1, 1); generator 2
    // is its conjugate by z -> z + s. Requires the four isometric circles
    // to be pairwise disjoint (Schottky certificate).
    static SurfaceModel pants(double t = 2.0, double s = 6.0, CertificateOptions opts = {});

    // Declarative config: {"family":"torus1","u":4} or {"family":"pants",
    // "t":2,"s":6} or {"rank":n,"generators":[[a,b,c,d],...]}, plus
    // optional "cert_length" and "cert_min_translation".
    static SurfaceModel from_config_json(const std::string& json_text);
    // "torus1:u=4", "pants", "pants:t=2,s=6".
    static SurfaceModel from_spec(const std::string& spec);

    int rank() const { return rank_; }
    const std::vector<Isometry>& generators() const { return generators_; }
    Topology topology() const { return topology_; }
    double family_parameter() const { return family_parameter_; }
    bool excluded_by_paper() const { return excluded_by_paper_; }
    const Certificate& certificate() const { return certificate_; }
    const std::string& name() const { return name_; }

    // Simple classes used by the annihilator scans (generators + boundary
    // for the torus, the three peripherals for pants).
    const std::vector<CyclicWord>& simple_classes() const { return simple_classes_; }
    const std::vector<CyclicWord>& peripheral_classes() const { return peripheral_classes_; }

    Isometry represent(const CyclicWord& w) const;
    Isometry represent(const FreeWord& w) const;
    double geodesic_length(const CyclicWord& w) const;

private:
    SurfaceModel() = default;
    void run_certificate(const CertificateOptions& opts);
    void check_rank(int max_gen) const;

    int rank_ = 0;
    std::vector<Isometry> generators_;
    std::vector<Isometry> generator_inverses_;
    Topology topology_{};
    double family_parameter_ = 0.0;
    bool excluded_by_paper_ = false;
    Certificate certificate_{};
    std::vector<CyclicWord> simple_classes_;
    std::vector<CyclicWord> peripheral_classes_;
    std::string name_;
};

}  // namespace goldman
