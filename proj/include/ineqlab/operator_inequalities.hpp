#pragma once

#include "ineqlab/chain.hpp"
#include "ineqlab/linalg.hpp"
#include "ineqlab/operator_quantities.hpp"

namespace ineqlab {

/// Tolerance of the 0 <= A <= I membership test used by the chain preconditions.
inline constexpr double kContractionTol = 1e-9;

struct PowerParams {
    double r = 1.0;  // r >= 1
};

/// [|<x - Ax, y - Ay>|, ||x|| ||y|| - sqrt(<(2A - A^2)x, x> <(2A - A^2)y, y>)] for 0 <= A <= 2I.
ChainResult lemma_2A_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                           const ChainTolerance& tol = {});

/// [0, sqrt(<Cx,x><Cy,y>) - |<Cx,y>|, (||x|| ||y|| - |<x,y>|)/4] with C = A - A^2, 0 <= A <= I.
ChainResult theorem_gap_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol = {});

/// [|<x,y>| + g(A), ||x|| ||y||] with g(A) = sqrt(<Ax,x><Ay,y>) - |<Ax,y>|.
/// Unscaled: A positive contraction. Scaled: A nonzero PSD and g(A) is divided by ||A||.
ChainResult corollary33_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              bool scaled, const ChainTolerance& tol = {});

/// [|<Ax,y>|, (||x|| ||y|| + |<x,y>|)/2] for a positive contraction A.
ChainResult corollary35_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol = {});

/// [|<Ax,y>|, (||A||/2)(|<x,y>| + ||x|| ||y||)] for nonzero PSD A.
ChainResult remark36_scaled(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                            const ChainTolerance& tol = {});

/// The same expression without the PSD check. Only meaningful for showing
/// that the hypothesis cannot be dropped.
ChainResult remark36_scaled_unchecked(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                      const ChainTolerance& tol = {});

/// With A = U|A|: [|<Ax,y>|, (||A||/2)(|<Ux,y>| + ||x|| ||U*y||), (||A||/2)(|<Ux,y>| + ||x|| ||y||)].
ChainResult remark36_polar_chain(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                 const ChainTolerance& tol = {});

/// [omega(AB), (||B||/2)(omega(A) + ||A||), (3/2) ||B|| omega(A)] for PSD B.
ChainResult corollary37_chain(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ChainTolerance& tol = kOmegaChainTolerance);

/// [omega(SAT), ||T*T + SS*||/4 + omega(ST)/2] for a positive contraction A.
ChainResult corollary38_omega_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t,
                                    const ChainTolerance& tol = kOmegaChainTolerance);

/// [||SAT||, (||T|| ||S|| + ||ST||)/2] for a positive contraction A.
ChainResult corollary38_norm_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t,
                                   const ChainTolerance& tol = {});

/// [omega(SAT)^r, ||(T*T)^r + (SS*)^r||/4 + omega(ST)^r/2], r >= 1.
ChainResult power_chain(const ComplexMatrix& a, const ComplexMatrix& s, const ComplexMatrix& t,
                        PowerParams p, const ChainTolerance& tol = kOmegaChainTolerance);

/// [||((M+N)/2)^r||, ||M^r + N^r||/2] for PSD M, N and r >= 1.
ChainResult bourin_property(const ComplexMatrix& m, const ComplexMatrix& n, PowerParams p,
                            const ChainTolerance& tol = {});

/// B = (I + (I - 4A)^{1/2}) / 2 for Hermitian A with spectrum in [0, 1/4].
/// B is a positive contraction and B - B^2 = A.
ComplexMatrix contraction_builder(const ComplexMatrix& a);

/// With T = U|T| and R = |T|^{1/2}:
/// [omega(T), (||T|| + ||T||^{1/2} omega(UR))/2, (||T|| + ||T||^{1/2} ||UR||)/2,
///  (||T|| + ||T||^{1/2} ||U|| ||T||^{1/2})/2, ||T||].
ChainResult final_omega_refinement_chain(const ComplexMatrix& t,
                                         const ChainTolerance& tol = kOmegaChainTolerance);

}  // namespace ineqlab
