#pragma once

#include <complex>
#include <string>

namespace goldman {

enum class IsometryType { Hyperbolic, Parabolic, Elliptic, Identity };

std::string to_string(IsometryType t);

// An element of PSL(2,R): real 2x2 matrix, renormalized to det 1 on
// construction. All predicates are invariant under the global sign flip.
class Isometry {
public:
    Isometry() : a_(1), b_(0), c_(0), d_(1) {}
    Isometry(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double trace() const { return a_ + d_; }
    double det() const { return a_ * d_ - b_ * c_; }

    Isometry inverse() const { return Isometry(d_, -b_, -c_, a_, NoNormalize{}); }
    std::complex<double> apply(std::complex<double> z) const;

private:
    // Products and inverses of normalized matrices have det 1 exactly;
    // recomputing ad - bc there cancels catastrophically once entries grow
    // large, so they skip the renormalization.
    struct NoNormalize {};
    Isometry(double a, double b, double c, double d, NoNormalize)
        : a_(a), b_(b), c_(c), d_(d) {}
    friend Isometry operator*(const Isometry& g, const Isometry& h);

    double a_, b_, c_, d_;
};

Isometry operator*(const Isometry& g, const Isometry& h);

// Entry-wise agreement up to the global sign.
bool approx_equal_up_to_sign(const Isometry& g, const Isometry& h, double tol);

IsometryType classify(const Isometry& g, double tol = 1e-9);

// 2*arccosh(|tr|/2); requires a hyperbolic input.
double translation_length(const Isometry& g);

// Point of the circle at infinity of the upper half plane.
struct BoundaryPoint {
    double x = 0.0;
    bool infinite = false;

    static BoundaryPoint at_infinity() { return {0.0, true}; }
    static BoundaryPoint finite(double v) { return {v, false}; }
};

bool approx_equal(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-9);

// Oriented invariant geodesic of a hyperbolic isometry, repelling to
// attracting endpoint.
struct Axis {
    BoundaryPoint repelling;
    BoundaryPoint attracting;

    Axis reversed() const { return {attracting, repelling}; }
};

Axis axis(const Isometry& g);

// True iff the endpoint pairs interleave on the boundary circle; false for
// shared endpoints or coinciding axes.
bool axes_cross(const Axis& a1, const Axis& a2);

struct CrossingData {
    std::complex<double> point;
    // Unsigned angle in (0,pi) between the forward directions of the two
    // axes at the crossing.
    double forward_angle = 0.0;
    // +1 iff (forward direction of a2, forward direction of a1) is a
    // positively oriented frame.
    int sign = 0;
    // Unit forward tangents at the crossing (Euclidean components; angles
    // in the hyperbolic metric are conformal).
    std::complex<double> tangent1, tangent2;
};

// Requires axes_cross(a1, a2); throws DomainError otherwise.
CrossingData crossing_data(const Axis& a1, const Axis& a2);

// Signed arclength position of a point of the axis, measured along the
// orientation from a fixed reference point of the geodesic.
double axis_position(const Axis& ax, std::complex<double> point);

double hyperbolic_distance(std::complex<double> z, std::complex<double> w);

// Residual of the half-trace product law for two hyperbolic isometries
// with crossing axes:
//   cosh(t_gh/2) - [cosh(t_g/2)cosh(t_h/2) + sinh(t_g/2)sinh(t_h/2)cos(theta)]
// with theta the forward-direction angle at the crossing.
double check_cosh_product(const Isometry& g, const Isometry& h);

}  // namespace goldman
