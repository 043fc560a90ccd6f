#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab {

using Complex = std::complex<double>;

// Tolerances shared by the dense kernels.
inline constexpr double kHermitianTol = 1e-10;    // ||M - M*||_max, scaled by max(1, ||M||_max)
inline constexpr double kEigTol = 1e-10;          // reconstruction / orthonormality
inline constexpr double kPsdRelTol = 1e-9;        // eigenvalues >= -kPsdRelTol * (1 + ||M||)
inline constexpr double kJacobiOffTol = 1e-13;    // off-diagonal Frobenius mass, relative to ||M||_F
inline constexpr int kJacobiMaxSweeps = 100;

/// Dense column vector in C^n. Entries are always finite.
class ComplexVector {
public:
    explicit ComplexVector(std::size_t dim);
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::initializer_list<Complex> entries);

    std::size_t dim() const noexcept { return data_.size(); }

    Complex operator[](std::size_t i) const { return data_[i]; }
    Complex& operator[](std::size_t i) { return data_[i]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    bool operator==(const ComplexVector&) const = default;

private:
    std::vector<Complex> data_;
};

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

    /// Builds from nested rows; all rows must have the same length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexVector column(std::size_t c) const;
    void set_column(std::size_t c, const ComplexVector& v);

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

ComplexVector operator+(const ComplexVector& x, const ComplexVector& y);
ComplexVector operator-(const ComplexVector& x, const ComplexVector& y);
ComplexVector operator*(Complex s, const ComplexVector& x);

/// <x, y> = sum_j x_j * conj(y_j): linear in the first slot.
Complex inner(const ComplexVector& x, const ComplexVector& y);
double norm(const ComplexVector& x);

double max_abs(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// (M + M*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kEigTol);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic complex Jacobi. Throws DimensionError for non-square input,
/// PreconditionError when M is not Hermitian, ConvergenceError after
/// kJacobiMaxSweeps sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only, descending: Householder tridiagonalization followed by
/// Sturm-sequence bisection. Same preconditions as hermitian_eigen.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest and largest eigenvalue of a matrix the caller guarantees to be
/// Hermitian (not checked). Hot path of the numerical radius sweep.
std::pair<double, double> extreme_eigenvalues_unchecked(const ComplexMatrix& m);

/// extreme_eigenvalues_unchecked(m).second without the smallest eigenvalue.
double largest_eigenvalue_unchecked(const ComplexMatrix& m);

struct SVDResult {
    ComplexMatrix left;
    std::vector<double> singular_values;  // descending, non-negative
    ComplexMatrix right;
};

/// Square SVD: eigenvectors of X*X give the right factor; singular values are
/// the column norms of X V and left vectors are the normalized columns, with
/// rank-deficient slots completed to an orthonormal basis.
SVDResult svd(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-eps_psd, 0) are clamped to zero; anything lower throws PreconditionError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);
/// M^r for Hermitian PSD M and r > 0.
ComplexMatrix psd_power(const ComplexMatrix& m, double r);

/// True when M is Hermitian to tolerance and every eigenvalue is >= -eps_psd.
bool is_psd(const ComplexMatrix& m);

/// |X| = (X*X)^{1/2}
ComplexMatrix modulus(const ComplexMatrix& x);

struct PolarDecomposition {
    ComplexMatrix unitary_factor;
    ComplexMatrix modulus;
};

/// X = U |X| with U = left * right^* from svd(X). U is unitary even for
/// singular X.
PolarDecomposition polar_decompose(const ComplexMatrix& x);

/// 0 <= A <= I up to tol: Hermitian and spectrum inside [-tol, 1 + tol].
bool is_positive_contraction(const ComplexMatrix& a, double tol);

/// P^2 = P = P* up to tol (scaled by max(1, ||P||_max)).
bool is_projection(const ComplexMatrix& p, double tol = kHermitianTol);

/// eps_psd for a matrix whose spectral norm is `spectral_scale`.
inline double psd_tolerance(double spectral_scale) { return kPsdRelTol * (1.0 + spectral_scale); }

}  // namespace ineqlab
