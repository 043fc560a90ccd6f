#pragma once

#include <cstdint>

#include "ineqlab/linalg.hpp"

namespace ineqlab {

struct RadiusSweepConfig {
    int coarse_points = 720;
    double refine_tol = 1e-12;  // golden-section stopping width in theta
    int max_refine_iters = 200;
};

struct RadiusResult {
    double omega = 0.0;
    double argmax_angle = 0.0;  // theta in [0, 2 pi) maximizing lambda_max(H_theta)
    ComplexVector witness_vector{1};
};

/// ||T||: the largest singular value.
double operator_norm(const ComplexMatrix& t);

/// omega(T) = max over theta of lambda_max((e^{i theta} T + e^{-i theta} T*) / 2).
///
/// A coarse grid of cfg.coarse_points angles is evaluated with the
/// eigenvalue-only kernel (one tridiagonalization yields both theta and
/// theta + pi). Every coarse local maximum within the grid's second-order
/// error band of the best value is refined by golden-section search on its
/// neighbouring bracket; at most four brackets are refined.
///
/// The witness is a unit top eigenvector of H at the final angle, so
/// |<T w, w>| equals omega up to rounding. Its global phase is fixed by making
/// the largest-magnitude entry real and positive (<T w, w> does not depend on
/// that phase). omega(0) = 0 with argmax_angle = 0.
RadiusResult numerical_radius(const ComplexMatrix& t, const RadiusSweepConfig& cfg = {});

/// Independent lower bound for omega(T): max of |<Tx, x>| / <x, x> over
/// `samples` complex Gaussian vectors from a generator seeded with `seed` only.
double numerical_radius_sampling_oracle(const ComplexMatrix& t, std::int64_t samples,
                                        std::uint64_t seed);

}  // namespace ineqlab
