#include "ineqlab/vector_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ineqlab {

namespace {

void require_same_dim(const ComplexVector& a, const ComplexVector& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

// sqrt(||u||^2 ||z||^2 - |<u,z>|^2), radicand clamped at zero.
double gram_defect(const ComplexVector& u, const ComplexVector& z) {
    const double nu = norm(u);
    const double nz = norm(z);
    const double c = std::abs(inner(u, z));
    return std::sqrt(std::max(0.0, nu * nu * nz * nz - c * c));
}

// Angle between unit u and alpha v as 2 atan2(|u - alpha v|, |u + alpha v|),
// which stays accurate near 0 and pi where acos of the cosine loses half the
// digits.
double half_angle_form(const ComplexVector& x, double nx, const ComplexVector& y, double ny, Complex alpha) {
    double minus = 0.0;
    double plus = 0.0;
    const Complex sy = alpha / ny;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const Complex u = x[i] / nx;
        const Complex v = sy * y[i];
        minus += std::norm(u - v);
        plus += std::norm(u + v);
    }
    return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

}  // namespace

AngleResult angles(const ComplexVector& x, const ComplexVector& y) {
    require_same_dim(x, y, "angles");
    const double nx = norm(x);
    const double ny = norm(y);
    if (nx <= kZeroVectorNorm || ny <= kZeroVectorNorm) {
        throw PreconditionError("angles: angle with a zero vector is undefined");
    }
    const Complex ip = inner(x, y);
    AngleResult out;
    out.cos_psi = std::clamp(std::abs(ip) / (nx * ny), 0.0, 1.0);
    out.cos_phi = std::clamp(ip.real() / (nx * ny), -1.0, 1.0);
    // <x, alpha y> = conj(alpha) <x, y> is real and non-negative for alpha = <x,y>/|<x,y>|.
    const Complex alpha = std::abs(ip) > 0.0 ? ip / std::abs(ip) : Complex(1.0);
    out.psi = std::min(half_angle_form(x, nx, y, ny, alpha), std::numbers::pi / 2);
    out.phi = half_angle_form(x, nx, y, ny, 1.0);
    return out;
}

ChainResult psi_infimum_property(const ComplexVector& x, const ComplexVector& y, int grid,
                                 const ChainTolerance& tol) {
    if (grid < 1) throw PreconditionError("psi_infimum_property: grid must be positive");
    const double psi = angles(x, y).psi;
    const double scale = norm(x) * norm(y);
    const auto xs = x.entries();
    const auto ys = y.entries();
    double best = std::numbers::pi;
    for (int k = 0; k < grid; ++k) {
        // phi(e^{i theta} x, y) from the rotated entries directly.
        const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
        double re = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) re += (phase * xs[j] * std::conj(ys[j])).real();
        best = std::min(best, std::acos(std::clamp(re / scale, -1.0, 1.0)));
    }
    return make_chain("psi_infimum",
                      {{"psi(x,y)", psi},
                       {"min_k phi(e^{i theta_k} x, y)", best},
                       {"psi(x,y) + pi/grid", psi + std::numbers::pi / grid}},
                      tol);
}

ChainResult krein_triangle(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                           const ChainTolerance& tol) {
    const double xz = angles(x, z).phi;
    const double xy = angles(x, y).phi;
    const double yz = angles(y, z).phi;
    return make_chain("krein_triangle", {{"phi(x,z)", xz}, {"phi(x,y) + phi(y,z)", xy + yz}}, tol);
}

ChainResult lin_triangle_refined(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                                 const ChainTolerance& tol) {
    const AngleResult xy = angles(x, y);
    const AngleResult xz = angles(x, z);
    const AngleResult zy = angles(z, y);
    // With a = psi_xz, b = psi_zy the refined cosine is 2 cos psi_xy - cos(a - b)
    // when cos psi_xy >= cos a cos b and cos(a + b) otherwise. The first branch
    // is evaluated through 1 - c = 4 sin^2(psi_xy/2) - 2 sin^2((a - b)/2).
    double middle = xz.psi + zy.psi;
    if (xy.cos_psi >= xz.cos_psi * zy.cos_psi) {
        const double sxy = std::sin(xy.psi / 2.0);
        const double sab = std::sin((xz.psi - zy.psi) / 2.0);
        const double h = std::clamp(2.0 * sxy * sxy - sab * sab, 0.0, 1.0);  // (1 - c) / 2
        middle = 2.0 * std::asin(std::sqrt(h));
    }
    return make_chain("lin_triangle_refined",
                      {{"psi(x,y)", xy.psi},
                       {"acos(refined)", middle},
                       {"psi(x,z) + psi(z,y)", xz.psi + zy.psi}},
                      tol);
}

ChainResult buzano_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                         const ChainTolerance& tol) {
    require_same_dim(x, y, "buzano_chain");
    require_same_dim(x, z, "buzano_chain");
    const double nz2 = inner(z, z).real();
    const double nxny = norm(x) * norm(y);
    return make_chain("buzano",
                      {{"|<x,z>||<y,z>|", std::abs(inner(x, z)) * std::abs(inner(y, z))},
                       {"(|z|^2/2)(|<x,y>| + |x||y|)", 0.5 * nz2 * (std::abs(inner(x, y)) + nxny)},
                       {"|z|^2 |x||y|", nz2 * nxny}},
                      tol);
}

ChainResult lemma21_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                          const ChainTolerance& tol) {
    require_same_dim(x, y, "lemma21_chain");
    require_same_dim(x, z, "lemma21_chain");
    const Complex xz = inner(x, z);
    const Complex zy = inner(z, y);
    const Complex xy = inner(x, y);
    const double nz2 = inner(z, z).real();
    const double xz_yz = std::abs(xz) * std::abs(inner(y, z));
    const double xy_abs = std::abs(xy);
    return make_chain(
        "lemma21",
        {{"|<x,z><z,y>|", std::abs(xz * zy)},
         {"(|<x,z><y,z>| + |<x,y>||z|^2 + |<x,y>|z|^2 - <x,z><z,y>|)/2",
          0.5 * (xz_yz + xy_abs * nz2 + std::abs(xy * nz2 - xz * zy))},
         {"(|<x,z><y,z>| + |<x,y>||z|^2 + rad(x,z) rad(y,z))/2",
          0.5 * (xz_yz + xy_abs * nz2 + gram_defect(x, z) * gram_defect(y, z))},
         {"(|z|^2/2)(|x||y| + |<x,y>|)", 0.5 * nz2 * (norm(x) * norm(y) + xy_abs)}},
        tol);
}

ChainResult cs_refinement_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                                const ChainTolerance& tol) {
    require_same_dim(x, y, "cs_refinement_chain");
    require_same_dim(x, z, "cs_refinement_chain");
    const double nz2 = inner(z, z).real();
    return make_chain("cs_refinement",
                      {{"|<x,y>||z|^2", std::abs(inner(x, y)) * nz2},
                       {"|<x,z>||<z,y>| + rad(x,z) rad(y,z)",
                        std::abs(inner(x, z)) * std::abs(inner(z, y)) + gram_defect(x, z) * gram_defect(y, z)},
                       {"|z|^2 |x||y|", nz2 * norm(x) * norm(y)}},
                      tol);
}

ChainResult cs_refinement_unit(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                               const ChainTolerance& tol) {
    const double ne = norm(e);
    if (ne <= kZeroVectorNorm) throw PreconditionError("cs_refinement_unit: e must be nonzero");
    return cs_refinement_chain(x, y, Complex(1.0 / ne) * e, tol);
}

ChainResult projection_buzano(const ComplexMatrix& p, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol) {
    require_same_dim(x, y, "projection_buzano");
    if (!p.is_square() || p.rows() != x.dim()) throw DimensionError("projection_buzano: P must be dim x dim");
    if (!is_projection(p)) throw PreconditionError("projection_buzano: P is not an orthogonal projection");
    return make_chain("projection_buzano",
                      {{"|<Px,y>|", std::abs(inner(p * x, y))},
                       {"(|<x,y>| + |x||y|)/2", 0.5 * (std::abs(inner(x, y)) + norm(x) * norm(y))}},
                      tol);
}

}  // namespace ineqlab
