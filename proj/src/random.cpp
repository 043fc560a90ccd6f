#include "ineqlab/random.hpp"

#include <cmath>
#include <numbers>

namespace ineqlab {

Complex GaussianSource::complex_normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-std::log(u1));  // sqrt(-2 ln u1) / sqrt(2)
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexVector GaussianSource::gaussian_vector(std::size_t dim) {
    ComplexVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = complex_normal();
    return v;
}

ComplexMatrix GaussianSource::ginibre(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (Complex& z : m.entries()) z = complex_normal();
    return m;
}

}  // namespace ineqlab
