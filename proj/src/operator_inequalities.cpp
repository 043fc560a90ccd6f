#include "ineqlab/operator_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace ineqlab {

namespace {

void require_operands(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y, const char* what) {
    if (!a.is_square() || a.rows() != x.dim() || x.dim() != y.dim()) {
        throw DimensionError(std::string(what) + ": expected an n x n matrix and two n-vectors");
    }
}

void require_same_square(std::initializer_list<const ComplexMatrix*> ms, const char* what) {
    const std::size_t n = (*ms.begin())->rows();
    for (const ComplexMatrix* m : ms) {
        if (!m->is_square() || m->rows() != n) {
            throw DimensionError(std::string(what) + ": operators must be square of equal size");
        }
    }
}

void require_contraction(const ComplexMatrix& a, const char* what) {
    if (!is_positive_contraction(a, kContractionTol)) {
        throw PreconditionError(std::string(what) + ": A is not a positive contraction (0 <= A <= I)");
    }
}

// Hermitian A with spectrum inside [lo - eps, hi + eps]; returns the Hermitian part.
ComplexMatrix require_spectrum(const ComplexMatrix& a, double lo, double hi, const char* what) {
    if (!is_hermitian(a)) throw PreconditionError(std::string(what) + ": A is not Hermitian");
    ComplexMatrix h = hermitian_part(a);
    const std::vector<double> lambda = hermitian_eigenvalues(h);
    const double eps = psd_tolerance(std::max(std::abs(lambda.front()), std::abs(lambda.back())));
    if (lambda.back() < lo - eps || lambda.front() > hi + eps) {
        throw PreconditionError(std::string(what) + ": spectrum [" + std::to_string(lambda.back()) + ", " +
                                std::to_string(lambda.front()) + "] outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
    return h;
}

void require_psd(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
    if (!is_psd(a)) throw PreconditionError(std::string(what) + ": operator is not positive semidefinite");
}

// <Mx, x> for Hermitian M, clamped at zero (M is PSD in every caller).
double quad_form(const ComplexMatrix& m, const ComplexVector& x) {
    return std::max(0.0, inner(m * x, x).real());
}

double omega(const ComplexMatrix& t) { return numerical_radius(t).omega; }

ChainResult remark36_terms(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                           const ChainTolerance& tol) {
    const double a_norm = operator_norm(a);
    return make_chain("remark36_scaled",
                      {{"|<Ax,y>|", std::abs(inner(a * x, y))},
                       {"(|A|/2)(|<x,y>| + |x||y|)", 0.5 * a_norm * (std::abs(inner(x, y)) + norm(x) * norm(y))}},
                      tol);
}

}  // namespace

ChainResult lemma_2A_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                           const ChainTolerance& tol) {
    require_operands(a, x, y, "lemma_2A_chain");
    const ComplexMatrix h = require_spectrum(a, 0.0, 2.0, "lemma_2A_chain");
    const ComplexMatrix d = hermitian_part(2.0 * h - h * h);
    return make_chain("lemma_2A",
                      {{"|<x-Ax, y-Ay>|", std::abs(inner(x - h * x, y - h * y))},
                       {"|x||y| - sqrt(<Dx,x><Dy,y>)", norm(x) * norm(y) - std::sqrt(quad_form(d, x) * quad_form(d, y))}},
                      tol);
}

ChainResult theorem_gap_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol) {
    require_operands(a, x, y, "theorem_gap_chain");
    require_contraction(a, "theorem_gap_chain");
    const ComplexMatrix h = hermitian_part(a);
    const ComplexMatrix c = hermitian_part(h - h * h);
    const double gap = std::sqrt(quad_form(c, x) * quad_form(c, y)) - std::abs(inner(c * x, y));
    return make_chain("theorem_gap",
                      {{"0", 0.0},
                       {"sqrt(<Cx,x><Cy,y>) - |<Cx,y>|", gap},
                       {"(|x||y| - |<x,y>|)/4", 0.25 * (norm(x) * norm(y) - std::abs(inner(x, y)))}},
                      tol);
}

ChainResult corollary33_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              bool scaled, const ChainTolerance& tol) {
    require_operands(a, x, y, "corollary33_chain");
    double divisor = 1.0;
    if (scaled) {
        require_psd(a, "corollary33_chain");
        divisor = operator_norm(a);
        if (divisor == 0.0) throw PreconditionError("corollary33_chain: A must be nonzero in scaled mode");
    } else {
        require_contraction(a, "corollary33_chain");
    }
    const ComplexMatrix h = hermitian_part(a);
    const double group = std::sqrt(quad_form(h, x) * quad_form(h, y)) - std::abs(inner(h * x, y));
    return make_chain(scaled ? "corollary33_scaled" : "corollary33",
                      {{scaled ? "|<x,y>| + (sqrt(<Ax,x><Ay,y>) - |<Ax,y>|)/|A|"
                               : "|<x,y>| + sqrt(<Ax,x><Ay,y>) - |<Ax,y>|",
                        std::abs(inner(x, y)) + group / divisor},
                       {"|x||y|", norm(x) * norm(y)}},
                      tol);
}

ChainResult corollary35_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol) {
    require_operands(a, x, y, "corollary35_chain");
    require_contraction(a, "corollary35_chain");
    return make_chain("corollary35",
                      {{"|<Ax,y>|", std::abs(inner(a * x, y))},
                       {"(|x||y| + |<x,y>|)/2", 0.5 * (norm(x) * norm(y) + std::abs(inner(x, y)))}},
                      tol);
}

ChainResult remark36_scaled(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                            const ChainTolerance& tol) {
    require_operands(a, x, y, "remark36_scaled");
    require_psd(a, "remark36_scaled");
    if (max_abs(a) == 0.0) throw PreconditionError("remark36_scaled: A must be nonzero");
    return remark36_terms(a, x, y, tol);
}

ChainResult remark36_scaled_unchecked(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                      const ChainTolerance& tol) {
    require_operands(a, x, y, "remark36_scaled_unchecked");
    return remark36_terms(a, x, y, tol);
}

ChainResult remark36_polar_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                 const ChainTolerance& tol) {
    require_operands(a, x, y, "remark36_polar_chain");
    if (max_abs(a) == 0.0) throw PreconditionError("remark36_polar_chain: A must be nonzero");
    const PolarDecomposition polar = polar_decompose(a);
    const ComplexMatrix& u = polar.unitary_factor;
    const double half_norm = 0.5 * operator_norm(a);
    const double ux_y = std::abs(inner(u * x, y));
    return make_chain("remark36_polar",
                      {{"|<Ax,y>|", std::abs(inner(a * x, y))},
                       {"(|A|/2)(|<Ux,y>| + |x||U*y|)", half_norm * (ux_y + norm(x) * norm(u.adjoint() * y))},
                       {"(|A|/2)(|<Ux,y>| + |x||y|)", half_norm * (ux_y + norm(x) * norm(y))}},
                      tol);
}

ChainResult corollary37_chain(const ComplexMatrix& a, const ComplexMatrix& b, const ChainTolerance& tol) {
    require_same_square({&a, &b}, "corollary37_chain");
    require_psd(b, "corollary37_chain");
    const double b_norm = operator_norm(b);
    const double omega_a = omega(a);
    return make_chain("corollary37",
                      {{"w(AB)", omega(a * b)},
                       {"(|B|/2)(w(A) + |A|)", 0.5 * b_norm * (omega_a + operator_norm(a))},
                       {"(3/2)|B| w(A)", 1.5 * b_norm * omega_a}},
                      tol);
}

ChainResult corollary38_omega_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t,
                                    const ChainTolerance& tol) {
    require_same_square({&a, &s, &t}, "corollary38_omega_chain");
    require_contraction(a, "corollary38_omega_chain");
    const ComplexMatrix moduli = t.adjoint() * t + s * s.adjoint();  // |T|^2 + |S*|^2
    return make_chain("corollary38_omega",
                      {{"w(SAT)", omega(s * a * t)},
                       {"|T*T + SS*|/4 + w(ST)/2", 0.25 * operator_norm(moduli) + 0.5 * omega(s * t)}},
                      tol);
}

ChainResult corollary38_norm_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t,
                                   const ChainTolerance& tol) {
    require_same_square({&a, &s, &t}, "corollary38_norm_chain");
    require_contraction(a, "corollary38_norm_chain");
    return make_chain("corollary38_norm",
                      {{"|SAT|", operator_norm(s * a * t)},
                       {"(|T||S| + |ST|)/2", 0.5 * (operator_norm(t) * operator_norm(s) + operator_norm(s * t))}},
                      tol);
}

ChainResult power_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t, PowerParams p,
                        const ChainTolerance& tol) {
    require_same_square({&a, &s, &t}, "power_chain");
    if (!(p.r >= 1.0) || !std::isfinite(p.r)) throw PreconditionError("power_chain: r must be >= 1");
    require_contraction(a, "power_chain");
    // |X|^{2r} = (X*X)^r, by powering the eigenvalues of X*X directly.
    const ComplexMatrix powered = psd_power(t.adjoint() * t, p.r) + psd_power(s * s.adjoint(), p.r);
    return make_chain("power_r" + std::to_string(static_cast<int>(p.r)),
                      {{"w(SAT)^r", std::pow(omega(s * a * t), p.r)},
                       {"|T|^{2r} + |S*|^{2r}|/4 + w(ST)^r/2",
                        0.25 * operator_norm(powered) + 0.5 * std::pow(omega(s * t), p.r)}},
                      tol);
}

ChainResult bourin_property(const ComplexMatrix& m, const ComplexMatrix& n, PowerParams p,
                            const ChainTolerance& tol) {
    require_same_square({&m, &n}, "bourin_property");
    if (!(p.r >= 1.0) || !std::isfinite(p.r)) throw PreconditionError("bourin_property: r must be >= 1");
    require_psd(m, "bourin_property");
    require_psd(n, "bourin_property");
    const ComplexMatrix mean = hermitian_part(0.5 * (m + n));
    return make_chain("bourin_r" + std::to_string(static_cast<int>(p.r)),
                      {{"|((M+N)/2)^r|", operator_norm(psd_power(mean, p.r))},
                       {"|M^r + N^r|/2", 0.5 * operator_norm(psd_power(m, p.r) + psd_power(n, p.r))}},
                      tol);
}

ComplexMatrix contraction_builder(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("contraction_builder: A must be square");
    const ComplexMatrix h = require_spectrum(a, 0.0, 0.25, "contraction_builder");
    const ComplexMatrix id = ComplexMatrix::identity(a.rows());
    return hermitian_part(0.5 * (id + psd_sqrt(id - 4.0 * h)));
}

ChainResult final_omega_refinement_chain(const ComplexMatrix& t, const ChainTolerance& tol) {
    if (!t.is_square()) throw DimensionError("final_omega_refinement_chain: T must be square");
    const PolarDecomposition polar = polar_decompose(t);
    const ComplexMatrix& u = polar.unitary_factor;
    const ComplexMatrix ur = u * psd_sqrt(polar.modulus);
    const double t_norm = operator_norm(t);
    const double root = std::sqrt(t_norm);
    return make_chain("final_omega_refinement",
                      {{"w(T)", omega(t)},
                       {"(|T| + |T|^{1/2} w(U|T|^{1/2}))/2", 0.5 * (t_norm + root * omega(ur))},
                       {"(|T| + |T|^{1/2} |U|T|^{1/2}|)/2", 0.5 * (t_norm + root * operator_norm(ur))},
                       {"(|T| + |T|^{1/2} |U| |T|^{1/2})/2", 0.5 * (t_norm + root * operator_norm(u) * root)},
                       {"|T|", t_norm}},
                      tol);
}

}  // namespace ineqlab
