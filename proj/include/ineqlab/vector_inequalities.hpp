#pragma once

#include "ineqlab/chain.hpp"
#include "ineqlab/linalg.hpp"

namespace ineqlab {

/// Vectors with norm at or below this are treated as zero by the angle
/// operations.
inline constexpr double kZeroVectorNorm = 1e-12;

/// psi uses |<x,y>| (projective angle, [0, pi/2]); phi uses Re<x,y> ([0, pi]).
struct AngleResult {
    double cos_psi = 0.0;
    double psi = 0.0;
    double cos_phi = 0.0;
    double phi = 0.0;
};

/// Throws PreconditionError for a zero vector, DimensionError on mismatch.
AngleResult angles(const ComplexVector& x, const ComplexVector& y);

/// psi_{x,y} against the brute-force phase scan min_k phi_{e^{i 2 pi k / grid} x, y}.
/// Terms: [psi, min phi, psi + pi/grid]; the scan is within pi/grid of psi
/// because theta -> phi_{e^{i theta} x, y} is 1-Lipschitz.
ChainResult psi_infimum_property(const ComplexVector& x, const ComplexVector& y, int grid,
                                 const ChainTolerance& tol = {});

/// [phi_{x,z}, phi_{x,y} + phi_{y,z}]
ChainResult krein_triangle(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                           const ChainTolerance& tol = {});

/// [psi_{x,y}, acos(cos psi_xy + |cos psi_xy - cos psi_xz cos psi_zy| - sin psi_xz sin psi_zy),
///  psi_{x,z} + psi_{z,y}]
ChainResult lin_triangle_refined(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                                 const ChainTolerance& tol = {});

/// [|<x,z>||<y,z>|, (||z||^2/2)(|<x,y>| + ||x|| ||y||), ||z||^2 ||x|| ||y||]
ChainResult buzano_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                         const ChainTolerance& tol = {});

/// Four-term refinement of Buzano through the Gram defect of (x, y) against z.
ChainResult lemma21_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                          const ChainTolerance& tol = {});

/// [|<x,y>| ||z||^2, |<x,z>||<z,y>| + rad(x,z) rad(y,z), ||z||^2 ||x|| ||y||]
/// with rad(u,z) = sqrt(||u||^2 ||z||^2 - |<u,z>|^2).
ChainResult cs_refinement_chain(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                                const ChainTolerance& tol = {});

/// cs_refinement_chain with z replaced by e / ||e||. Throws for e = 0.
ChainResult cs_refinement_unit(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                               const ChainTolerance& tol = {});

/// [|<Px,y>|, (|<x,y>| + ||x|| ||y||) / 2] for an orthogonal projection P.
ChainResult projection_buzano(const ComplexMatrix& p, const ComplexVector& x, const ComplexVector& y,
                              const ChainTolerance& tol = {});

}  // namespace ineqlab
