#include "goldman/moebius.hpp"

#include "goldman/error.hpp"

#include <algorithm>
#include <cmath>

namespace goldman {

namespace {
constexpr double kEps = 1e-12;
}

std::string to_string(IsometryType t) {
    switch (t) {
        case IsometryType::Hyperbolic: return "hyperbolic";
        case IsometryType::Parabolic: return "parabolic";
        case IsometryType::Elliptic: return "elliptic";
        case IsometryType::Identity: return "identity";
    }
    return "?";
}

Isometry::Isometry(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    double det = a_ * d_ - b_ * c_;
    if (!std::isfinite(det) || det <= 0.0)
        throw DomainError("matrix is not orientation-preserving (det = " +
                          std::to_string(det) + ")");
    double s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

std::complex<double> Isometry::apply(std::complex<double> z) const {
    return (a_ * z + b_) / (c_ * z + d_);
}

Isometry operator*(const Isometry& g, const Isometry& h) {
    return Isometry(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                    g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d(),
                    Isometry::NoNormalize{});
}

bool approx_equal_up_to_sign(const Isometry& g, const Isometry& h, double tol) {
    auto close = [&](double s) {
        return std::abs(g.a() - s * h.a()) < tol && std::abs(g.b() - s * h.b()) < tol &&
               std::abs(g.c() - s * h.c()) < tol && std::abs(g.d() - s * h.d()) < tol;
    };
    return close(1.0) || close(-1.0);
}

IsometryType classify(const Isometry& g, double tol) {
    double t = std::abs(g.trace());
    if (std::abs(g.b()) < tol && std::abs(g.c()) < tol && std::abs(std::abs(g.a()) - 1.0) < tol)
        return IsometryType::Identity;
    if (t > 2.0 + tol) return IsometryType::Hyperbolic;
    if (t < 2.0 - tol) return IsometryType::Elliptic;
    return IsometryType::Parabolic;
}

double translation_length(const Isometry& g) {
    if (classify(g) != IsometryType::Hyperbolic)
        throw DomainError("translation length requires a hyperbolic isometry");
    return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

bool approx_equal(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
    if (p.infinite || q.infinite) return p.infinite && q.infinite;
    return std::abs(p.x - q.x) < tol;
}

Axis axis(const Isometry& g) {
    if (classify(g) != IsometryType::Hyperbolic)
        throw DomainError("axis requires a hyperbolic isometry");
    const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    if (std::abs(c) < kEps) {
        // One fixed point at infinity; the other solves az + b = dz.
        BoundaryPoint inf = BoundaryPoint::at_infinity();
        BoundaryPoint fin = BoundaryPoint::finite(b / (d - a));
        // Infinity is attracting iff |a| > |d| (derivative at the finite
        // fixed point is (a/d)^{-2}... the map is z -> (a/d) z + b/d).
        if (std::abs(a) > std::abs(d)) return {fin, inf};
        return {inf, fin};
    }
    // c z^2 + (d - a) z - b = 0; discriminant = tr^2 - 4.
    double disc = g.trace() * g.trace() - 4.0;
    double sq = std::sqrt(disc);
    double z1 = ((a - d) + sq) / (2.0 * c);
    double z2 = ((a - d) - sq) / (2.0 * c);
    auto attracting = [&](double z) { return std::abs(c * z + d) > 1.0; };
    if (attracting(z1)) return {BoundaryPoint::finite(z2), BoundaryPoint::finite(z1)};
    return {BoundaryPoint::finite(z1), BoundaryPoint::finite(z2)};
}

namespace {

// Euclidean shape of the geodesic carrying an axis.
struct GeoLine {
    bool vertical;
    double x = 0.0;           // vertical: line {Re z = x}
    double center = 0.0;      // else: semicircle |z - center| = radius
    double radius = 0.0;
    int dir = +1;             // vertical: +1 up; circle: +1 left-to-right
};

GeoLine shape(const Axis& ax) {
    GeoLine s{};
    if (ax.repelling.infinite || ax.attracting.infinite) {
        s.vertical = true;
        s.x = ax.repelling.infinite ? ax.attracting.x : ax.repelling.x;
        s.dir = ax.attracting.infinite ? +1 : -1;
        return s;
    }
    s.vertical = false;
    s.center = 0.5 * (ax.repelling.x + ax.attracting.x);
    s.radius = 0.5 * std::abs(ax.attracting.x - ax.repelling.x);
    s.dir = ax.attracting.x > ax.repelling.x ? +1 : -1;
    return s;
}

std::complex<double> unit_tangent(const GeoLine& s, std::complex<double> z) {
    if (s.vertical) return {0.0, static_cast<double>(s.dir)};
    // At z = center + r e^{i phi}, the tangent for decreasing phi (motion
    // left to right) is (y, -(x - center)) / r.
    double tx = z.imag() / s.radius;
    double ty = -(z.real() - s.center) / s.radius;
    if (s.dir < 0) {
        tx = -tx;
        ty = -ty;
    }
    return {tx, ty};
}

}  // namespace

bool axes_cross(const Axis& a1, const Axis& a2) {
    const double tol = 1e-9;
    const BoundaryPoint e1[2] = {a1.repelling, a1.attracting};
    const BoundaryPoint e2[2] = {a2.repelling, a2.attracting};
    for (const auto& p : e1)
        for (const auto& q : e2)
            if (approx_equal(p, q, tol)) return false;
    bool inf1 = a1.repelling.infinite || a1.attracting.infinite;
    bool inf2 = a2.repelling.infinite || a2.attracting.infinite;
    if (inf1 && inf2) return false;  // two vertical lines
    if (inf1 || inf2) {
        const Axis& v = inf1 ? a1 : a2;
        const Axis& o = inf1 ? a2 : a1;
        double x = v.repelling.infinite ? v.attracting.x : v.repelling.x;
        double lo = std::min(o.repelling.x, o.attracting.x);
        double hi = std::max(o.repelling.x, o.attracting.x);
        return lo < x && x < hi;
    }
    double lo = std::min(a1.repelling.x, a1.attracting.x);
    double hi = std::max(a1.repelling.x, a1.attracting.x);
    bool in_p = lo < a2.repelling.x && a2.repelling.x < hi;
    bool in_q = lo < a2.attracting.x && a2.attracting.x < hi;
    return in_p != in_q;
}

CrossingData crossing_data(const Axis& a1, const Axis& a2) {
    if (!axes_cross(a1, a2)) throw DomainError("axes do not cross");
    GeoLine s1 = shape(a1), s2 = shape(a2);
    std::complex<double> z;
    if (s1.vertical || s2.vertical) {
        const GeoLine& v = s1.vertical ? s1 : s2;
        const GeoLine& c = s1.vertical ? s2 : s1;
        double dy2 = c.radius * c.radius - (v.x - c.center) * (v.x - c.center);
        z = {v.x, std::sqrt(std::max(dy2, 0.0))};
    } else {
        double x = (s1.radius * s1.radius - s2.radius * s2.radius - s1.center * s1.center +
                    s2.center * s2.center) /
                   (2.0 * (s2.center - s1.center));
        double dy2 = s1.radius * s1.radius - (x - s1.center) * (x - s1.center);
        z = {x, std::sqrt(std::max(dy2, 0.0))};
    }
    CrossingData out;
    out.point = z;
    out.tangent1 = unit_tangent(s1, z);
    out.tangent2 = unit_tangent(s2, z);
    double dot = out.tangent1.real() * out.tangent2.real() +
                 out.tangent1.imag() * out.tangent2.imag();
    double cross = out.tangent2.real() * out.tangent1.imag() -
                   out.tangent2.imag() * out.tangent1.real();
    out.forward_angle = std::acos(std::clamp(dot, -1.0, 1.0));
    out.sign = cross >= 0.0 ? +1 : -1;
    return out;
}

double axis_position(const Axis& ax, std::complex<double> point) {
    GeoLine s = shape(ax);
    if (s.vertical) return s.dir * std::log(point.imag());
    double phi = std::atan2(point.imag(), point.real() - s.center);
    // Arclength parameter along the semicircle is log tan(phi/2),
    // increasing with phi; phi decreases when moving left to right.
    double t = std::log(std::tan(0.5 * phi));
    return s.dir > 0 ? -t : t;
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
    double n = std::norm(z - w);
    return std::acosh(1.0 + n / (2.0 * z.imag() * w.imag()));
}

double check_cosh_product(const Isometry& g, const Isometry& h) {
    if (classify(g) != IsometryType::Hyperbolic || classify(h) != IsometryType::Hyperbolic)
        throw DomainError("cosh product law requires hyperbolic isometries");
    Axis ag = axis(g), ah = axis(h);
    if (!axes_cross(ag, ah)) throw DomainError("axes disjoint or equal");
    CrossingData cd = crossing_data(ag, ah);
    double tg = translation_length(g) / 2.0;
    double th = translation_length(h) / 2.0;
    double lhs = std::abs((g * h).trace()) / 2.0;  // cosh(t_gh / 2)
    double rhs = std::cosh(tg) * std::cosh(th) +
                 std::sinh(tg) * std::sinh(th) * std::cos(cd.forward_angle);
    return std::abs(lhs - rhs);
}

}  // namespace goldman
