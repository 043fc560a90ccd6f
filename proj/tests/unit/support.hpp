#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "ineqlab/linalg.hpp"
#include "ineqlab/random.hpp"

namespace testsupport {

using ineqlab::Complex;
using ineqlab::ComplexMatrix;
using ineqlab::ComplexVector;

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
    return d;
}

inline ComplexMatrix random_hermitian(ineqlab::GaussianSource& g, std::size_t n) {
    return ineqlab::hermitian_part(g.ginibre(n));
}

// Brute-force numerical radius: dense angle grid, full Jacobi at every angle,
// then a local parabola fit around the best grid point is not attempted; the
// grid error is bounded by ||T|| (pi/grid)^2 / 2.
inline double brute_force_omega(const ComplexMatrix& t, int grid) {
    double best = 0.0;
    const std::size_t n = t.rows();
    for (int k = 0; k < grid; ++k) {
        const double th = 2.0 * M_PI * k / grid;
        const Complex e = std::polar(1.0, th);
        ComplexMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * t(i, j) + std::conj(e * t(j, i)));
        best = std::max(best, ineqlab::hermitian_eigen(h).eigenvalues.front());
    }
    return best;
}

}  // namespace testsupport
