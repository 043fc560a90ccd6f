#include "ineqlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ineqlab {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
    for (const Complex& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw PreconditionError(std::string(what) + ": non-finite entry");
        }
    }
}

void require_square(const ComplexMatrix& m, const char* what) {
    if (!m.is_square()) {
        throw DimensionError(std::string(what) + ": matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double hermitian_defect(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
    require_square(m, what);
    if (!is_hermitian(m)) {
        throw PreconditionError(std::string(what) + ": matrix is not Hermitian (defect " +
                                std::to_string(hermitian_defect(m)) + ")");
    }
}

// Reassembles V diag(values) V* and forces exact Hermitian symmetry.
ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const double> values) {
    const std::size_t n = vectors.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (values[k] == 0.0) continue;
                acc += vectors(i, k) * values[k] * std::conj(vectors(j, k));
            }
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

// Number of eigenvalues of the symmetric tridiagonal (diag, offdiag^2) below x.
std::size_t sturm_count(std::span<const double> diag, std::span<const double> off_sq, double x,
                        double pivmin) {
    std::size_t count = 0;
    double q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - x - off_sq[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off_sq;
    double lower = 0.0;  // Gershgorin interval
    double upper = 0.0;
    double pivmin = 0.0;
};

// Lower triangle in column-major order, real and imaginary parts split, so the
// inner loops of the Hermitian matvec and the rank-2 update run over
// contiguous memory.
struct TridiagonalWork {
    std::vector<double> ar, ai;  // a(i, j), i >= j, at j * n + i
    std::vector<double> vr, vi, pr, pi;
    std::vector<double> off;
};

// Householder reduction of a Hermitian matrix to a real symmetric tridiagonal
// with the same spectrum. The off-diagonal phases are dropped (a diagonal
// unitary similarity). Only the lower triangle of m is read.
void tridiagonalize(const ComplexMatrix& m, TridiagonalWork& work, Tridiagonal& t) {
    const std::size_t n = m.rows();
    std::vector<double>& ar = work.ar;
    std::vector<double>& ai = work.ai;
    ar.assign(n * n, 0.0);
    ai.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) {
            ar[j * n + i] = m(i, j).real();
            ai[j * n + i] = i == j ? 0.0 : m(i, j).imag();
        }
    }
    work.vr.assign(n, 0.0);
    work.vi.assign(n, 0.0);
    work.pr.assign(n, 0.0);
    work.pi.assign(n, 0.0);
    work.off.assign(n > 0 ? n - 1 : 0, 0.0);
    double* vr = work.vr.data();
    double* vi = work.vi.data();
    double* pr = work.pr.data();
    double* pi = work.pi.data();
    std::vector<double>& off = work.off;

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m0 = k + 1;
        const double* xr = &ar[k * n];
        const double* xi = &ai[k * n];
        double sigma_sq = 0.0;
        for (std::size_t i = m0; i < n; ++i) sigma_sq += xr[i] * xr[i] + xi[i] * xi[i];
        const double x0_abs = std::hypot(xr[m0], xi[m0]);
        const double tail_sq = sigma_sq - x0_abs * x0_abs;
        const double sigma = std::sqrt(sigma_sq);
        if (tail_sq <= 0.0 || sigma == 0.0) {
            off[k] = x0_abs;
            continue;
        }
        // v = x - alpha e_1 with alpha = -phase(x0) sigma, so v_1 = phase (|x0| + sigma).
        const double ph_r = x0_abs > 0.0 ? xr[m0] / x0_abs : 1.0;
        const double ph_i = x0_abs > 0.0 ? xi[m0] / x0_abs : 0.0;
        for (std::size_t i = m0; i < n; ++i) {
            vr[i] = xr[i];
            vi[i] = xi[i];
        }
        vr[m0] = ph_r * (x0_abs + sigma);
        vi[m0] = ph_i * (x0_abs + sigma);
        const double beta = 1.0 / (sigma * (sigma + x0_abs));  // 2 / (v* v)

        // p = A22 v from the lower triangle.
        for (std::size_t i = m0; i < n; ++i) {
            pr[i] = 0.0;
            pi[i] = 0.0;
        }
        for (std::size_t j = m0; j < n; ++j) {
            const double* cr = &ar[j * n];
            const double* ci = &ai[j * n];
            const double vjr = vr[j];
            const double vji = vi[j];
            double sr = cr[j] * vjr;
            double si = cr[j] * vji;
            for (std::size_t i = j + 1; i < n; ++i) {
                pr[i] += cr[i] * vjr - ci[i] * vji;
                pi[i] += cr[i] * vji + ci[i] * vjr;
                sr += cr[i] * vr[i] + ci[i] * vi[i];
                si += cr[i] * vi[i] - ci[i] * vr[i];
            }
            pr[j] += sr;
            pi[j] += si;
        }
        double vp_re = 0.0;
        for (std::size_t i = m0; i < n; ++i) {
            pr[i] *= beta;
            pi[i] *= beta;
            vp_re += vr[i] * pr[i] + vi[i] * pi[i];
        }
        const double kappa = 0.5 * beta * vp_re;
        for (std::size_t i = m0; i < n; ++i) {  // p becomes w = p - kappa v
            pr[i] -= kappa * vr[i];
            pi[i] -= kappa * vi[i];
        }
        // A22 -= v w* + w v*
        for (std::size_t j = m0; j < n; ++j) {
            double* cr = &ar[j * n];
            double* ci = &ai[j * n];
            const double wjr = pr[j], wji = pi[j], vjr = vr[j], vji = vi[j];
            for (std::size_t i = j; i < n; ++i) {
                cr[i] -= vr[i] * wjr + vi[i] * wji + pr[i] * vjr + pi[i] * vji;
                ci[i] -= vi[i] * wjr - vr[i] * wji + pi[i] * vjr - pr[i] * vji;
            }
            ci[j] = 0.0;
        }
        off[k] = sigma;
    }
    if (n >= 2) off[n - 2] = std::hypot(ar[(n - 2) * n + n - 1], ai[(n - 2) * n + n - 1]);

    t.diag.resize(n);
    t.off_sq.resize(off.size());
    for (std::size_t i = 0; i < n; ++i) t.diag[i] = ar[i * n + i];
    double max_off_sq = 0.0;
    for (std::size_t i = 0; i < off.size(); ++i) {
        t.off_sq[i] = off[i] * off[i];
        max_off_sq = std::max(max_off_sq, t.off_sq[i]);
    }
    t.lower = std::numeric_limits<double>::infinity();
    t.upper = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? off[i - 1] : 0.0) + (i < off.size() ? off[i] : 0.0);
        t.lower = std::min(t.lower, t.diag[i] - radius);
        t.upper = std::max(t.upper, t.diag[i] + radius);
    }
    t.pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off_sq);
}

Tridiagonal tridiagonalize(const ComplexMatrix& m) {
    TridiagonalWork work;
    Tridiagonal t;
    tridiagonalize(m, work, t);
    return t;
}

// k-th smallest eigenvalue (0-based) of the tridiagonal by bisection.
double bisect_eigenvalue(const Tridiagonal& t, std::size_t k) {
    double lo = t.lower;
    double hi = t.upper;
    const double span = std::max(std::abs(lo), std::abs(hi));
    lo -= 2.0 * std::numeric_limits<double>::epsilon() * span + t.pivmin;
    hi += 2.0 * std::numeric_limits<double>::epsilon() * span + t.pivmin;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(lo), std::abs(hi)) + t.pivmin) {
            break;
        }
        if (sturm_count(t.diag, t.off_sq, mid, t.pivmin) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Largest eigenvalue of the tridiagonal with diagonal sign * diag, by
// Laguerre's iteration on det(T - x I) started at the Gershgorin bound. For a
// polynomial with only real roots the iterates decrease monotonically onto the
// top root (cubically once it is isolated). Sturm counts guard the bracket;
// an overshoot or stall hands over to bisection.
double top_eigenvalue(const Tridiagonal& t, double sign) {
    const std::size_t n = t.diag.size();
    const double eps = std::numeric_limits<double>::epsilon();
    const double upper = sign > 0.0 ? t.upper : -t.lower;
    const double lower = sign > 0.0 ? t.lower : -t.upper;
    const double span = std::max({std::abs(lower), std::abs(upper), t.pivmin});
    double hi = upper + 2.0 * eps * span + t.pivmin;
    double lo = lower - 2.0 * eps * span - t.pivmin;
    const double dn = static_cast<double>(n);
    if (std::all_of(t.off_sq.begin(), t.off_sq.end(), [](double b) { return b == 0.0; })) {
        double top = -std::numeric_limits<double>::infinity();
        for (double d : t.diag) top = std::max(top, sign * d);
        return sign * top;
    }

    double x = hi;
    for (int iter = 0; iter < 60; ++iter) {
        // One pass of the pivot recurrence q_i with first and second x-derivatives.
        double g = 0.0;   // D'/D
        double h = 0.0;   // (D'/D)^2 - D''/D
        std::size_t below = 0;
        double q = 0.0, dq = 0.0, ddq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double qi = sign * t.diag[i] - x;
            double dqi = -1.0;
            double ddqi = 0.0;
            if (i > 0) {
                const double b = t.off_sq[i - 1];
                const double inv = 1.0 / q;
                qi -= b * inv;
                dqi += b * dq * inv * inv;
                ddqi = b * (ddq * inv * inv - 2.0 * dq * dq * inv * inv * inv);
            }
            if (std::abs(qi) < t.pivmin) qi = -t.pivmin;
            if (qi < 0.0) ++below;
            const double r = dqi / qi;
            g += r;
            h += r * r - ddqi / qi;
            q = qi;
            dq = dqi;
            ddq = ddqi;
        }
        if (below < n) {
            lo = x;  // x is at or under the top root: hand over to bisection
            break;
        }
        hi = x;
        if (!(g > 0.0)) break;
        const double disc = std::max(0.0, (dn - 1.0) * (dn * h - g * g));
        const double step = dn / (g + std::sqrt(disc));
        if (!(step > 0.0) || !std::isfinite(step)) break;
        if (step <= 2.0 * eps * std::max(std::abs(x), span * eps) + t.pivmin) return sign * x;
        x -= step;
    }

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + t.pivmin) break;
        std::size_t below = 0;
        double q = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            q = sign * t.diag[i] - mid - (i > 0 ? t.off_sq[i - 1] / q : 0.0);
            if (std::abs(q) < t.pivmin) q = -t.pivmin;
            if (q < 0.0) ++below;
        }
        if (below == n) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return sign * 0.5 * (lo + hi);
}

double off_diagonal_mass(std::span<const Complex> a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) sum += std::norm(a[i * n + j]);
        }
    }
    return std::sqrt(sum);
}

// Gram-Schmidt of `candidate` against the first `count` columns of `basis`,
// two passes. Returns the residual norm; candidate is normalized when > 0.
double orthogonalize_against(const ComplexMatrix& basis, std::size_t count,
                             std::vector<Complex>& candidate) {
    const std::size_t n = candidate.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < count; ++c) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < n; ++i) proj += candidate[i] * std::conj(basis(i, c));
            for (std::size_t i = 0; i < n; ++i) candidate[i] -= proj * basis(i, c);
        }
    }
    double nrm = 0.0;
    for (const Complex& z : candidate) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm > 0.0) {
        for (Complex& z : candidate) z /= nrm;
    }
    return nrm;
}

template <class F>
ComplexMatrix psd_function(const ComplexMatrix& m, const char* what, F&& f) {
    require_hermitian(m, what);
    EigenDecomposition eig = hermitian_eigen(m);
    const std::size_t n = m.rows();
    double scale = 0.0;
    for (double lambda : eig.eigenvalues) scale = std::max(scale, std::abs(lambda));
    const double tol = psd_tolerance(scale);
    std::vector<double> mapped(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -tol) {
            throw PreconditionError(std::string(what) + ": matrix is not PSD (eigenvalue " +
                                    std::to_string(lambda) + ")");
        }
        mapped[k] = f(std::max(lambda, 0.0));
    }
    return spectral_synthesis(eig.eigenvectors, mapped);
}

}  // namespace

// ---------------------------------------------------------------------------
// Containers

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {
    if (dim == 0) throw DimensionError("ComplexVector: dimension must be positive");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    if (data_.empty()) throw DimensionError("ComplexVector: dimension must be positive");
    require_finite(data_, "ComplexVector");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(data_.size()));
    }
    require_finite(data_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r > 0 ? rows.begin()->size() : 0;
    std::vector<Complex> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ComplexMatrix::from_rows: ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(data));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    require_finite(m.entries(), "ComplexMatrix::diagonal");
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

void ComplexMatrix::set_column(std::size_t c, const ComplexVector& v) {
    if (v.dim() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix *: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.dim()) throw DimensionError("matrix-vector *: dimension mismatch");
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

ComplexVector operator+(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) throw DimensionError("vector +: dimension mismatch");
    ComplexVector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
    return out;
}

ComplexVector operator-(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) throw DimensionError("vector -: dimension mismatch");
    ComplexVector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
    return out;
}

ComplexVector operator*(Complex s, const ComplexVector& x) {
    ComplexVector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = s * x[i];
    return out;
}

// ---------------------------------------------------------------------------
// Scalars and predicates

Complex inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("inner: dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                             std::to_string(y.dim()) + ")");
    }
    Complex acc = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) acc += x[j] * std::conj(y[j]);
    return acc;
}

double norm(const ComplexVector& x) { return std::sqrt(std::max(inner(x, x).real(), 0.0)); }

double max_abs(const ComplexMatrix& m) {
    double worst = 0.0;
    for (const Complex& z : m.entries()) worst = std::max(worst, std::abs(z));
    return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const Complex& z : m.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    require_square(m, "hermitian_part");
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    return hermitian_defect(m) <= tol * std::max(1.0, max_abs(m));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    const ComplexMatrix gram = m.adjoint() * m;
    return max_abs(gram - ComplexMatrix::identity(m.rows())) <= tol;
}

bool is_psd(const ComplexMatrix& m) {
    if (!is_hermitian(m)) return false;
    const std::vector<double> lambda = hermitian_eigenvalues(hermitian_part(m));
    double scale = 0.0;
    for (double l : lambda) scale = std::max(scale, std::abs(l));
    return lambda.back() >= -psd_tolerance(scale);
}

bool is_positive_contraction(const ComplexMatrix& a, double tol) {
    require_square(a, "is_positive_contraction");
    if (!is_hermitian(a, tol)) return false;
    const std::vector<double> lambda = hermitian_eigenvalues(hermitian_part(a));
    return lambda.front() <= 1.0 + tol && lambda.back() >= -tol;
}

bool is_projection(const ComplexMatrix& p, double tol) {
    if (!p.is_square()) return false;
    const double scale = std::max(1.0, max_abs(p));
    if (hermitian_defect(p) > tol * scale) return false;
    return max_abs(p * p - p) <= tol * scale;
}

// ---------------------------------------------------------------------------
// Spectral kernels

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
    require_hermitian(m, "hermitian_eigen");
    const std::size_t n = m.rows();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(m);
    const double threshold = kJacobiOffTol * scale;
    int sweep = 0;
    while (scale > 0.0 && off_diagonal_mass(a, n) > threshold) {
        if (++sweep > kJacobiMaxSweeps) {
            throw ConvergenceError("hermitian_eigen: no convergence after " +
                                   std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                // Real rotation on the phase-normalized pair, see Rutishauser.
                const double theta = (aqq - app) / (2.0 * g);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex ph = std::conj(apq) / g;  // e^{-i arg apq}

                // J = diag(1, ph) * [[c, s], [-s, c]]:
                // J_pp = c, J_pq = s, J_qp = -s ph, J_qq = c ph.
                const Complex jqp = -s * ph;
                const Complex jqq = c * ph;
                for (std::size_t k = 0; k < n; ++k) {  // A <- A J
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * jqp;
                    a[k * n + q] = akp * s + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- J* A
                    const Complex apk = a[p * n + k];
                    const Complex aqk = a[q * n + k];
                    a[p * n + k] = c * apk + std::conj(jqp) * aqk;
                    a[q * n + k] = s * apk + std::conj(jqq) * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = a[p * n + p].real();
                a[q * n + q] = a[q * n + q].real();
                for (std::size_t k = 0; k < n; ++k) {  // V <- V J
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * s + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return a[l * n + l].real() > a[r * n + r].real();
    });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m, "hermitian_eigenvalues");
    const Tridiagonal t = tridiagonalize(hermitian_part(m));
    const std::size_t n = m.rows();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[n - 1 - k] = bisect_eigenvalue(t, k);
    return out;
}

std::pair<double, double> extreme_eigenvalues_unchecked(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return {m(0, 0).real(), m(0, 0).real()};
    if (n == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double radius = std::hypot(0.5 * (a - d), std::abs(m(1, 0)));
        return {mean - radius, mean + radius};
    }
    thread_local TridiagonalWork work;
    thread_local Tridiagonal t;
    tridiagonalize(m, work, t);
    return {top_eigenvalue(t, -1.0), top_eigenvalue(t, 1.0)};
}

double largest_eigenvalue_unchecked(const ComplexMatrix& m) {
    if (m.rows() <= 2) return extreme_eigenvalues_unchecked(m).second;
    thread_local TridiagonalWork work;
    thread_local Tridiagonal t;
    tridiagonalize(m, work, t);
    return top_eigenvalue(t, 1.0);
}

SVDResult svd(const ComplexMatrix& m) {
    require_square(m, "svd");
    const std::size_t n = m.rows();
    const EigenDecomposition gram = hermitian_eigen(m.adjoint() * m);
    const ComplexMatrix xv = m * gram.eigenvectors;

    std::vector<double> sigma(n);
    for (std::size_t k = 0; k < n; ++k) sigma[k] = norm(xv.column(k));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return sigma[l] > sigma[r]; });

    SVDResult out{ComplexMatrix(n, n), std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.singular_values[k] = sigma[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.right(i, k) = gram.eigenvectors(i, order[k]);
    }

    const double rank_tol = 1e-12 * std::max(out.singular_values[0], std::numeric_limits<double>::min());
    std::vector<bool> filled(n, false);
    std::size_t count = 0;
    std::vector<Complex> candidate(n);
    // Well-determined columns first, in descending order; `left` is built
    // column-contiguous by permuting afterwards.
    ComplexMatrix basis(n, n);
    std::vector<std::size_t> slot_of(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (out.singular_values[k] <= rank_tol) break;
        for (std::size_t i = 0; i < n; ++i) candidate[i] = xv(i, order[k]) / out.singular_values[k];
        if (orthogonalize_against(basis, count, candidate) < 0.5) continue;
        for (std::size_t i = 0; i < n; ++i) basis(i, count) = candidate[i];
        slot_of[count] = k;
        filled[k] = true;
        ++count;
    }
    // Rank-deficient slots: prefer the matching right vector (keeps U = I for
    // PSD input), then fall back to the standard basis.
    for (std::size_t k = 0; k < n; ++k) {
        if (filled[k]) continue;
        for (std::size_t i = 0; i < n; ++i) candidate[i] = out.right(i, k);
        bool placed = orthogonalize_against(basis, count, candidate) > 0.5;
        for (std::size_t e = 0; !placed && e < n; ++e) {
            std::fill(candidate.begin(), candidate.end(), Complex(0.0, 0.0));
            candidate[e] = 1.0;
            placed = orthogonalize_against(basis, count, candidate) > 0.5;
        }
        if (!placed) throw ConvergenceError("svd: could not complete the left basis");
        for (std::size_t i = 0; i < n; ++i) basis(i, count) = candidate[i];
        slot_of[count] = k;
        filled[k] = true;
        ++count;
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) out.left(i, slot_of[c]) = basis(i, c);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    return psd_function(m, "psd_sqrt", [](double l) { return std::sqrt(l); });
}

ComplexMatrix psd_power(const ComplexMatrix& m, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw PreconditionError("psd_power: exponent must be positive");
    return psd_function(m, "psd_power", [r](double l) { return l == 0.0 ? 0.0 : std::pow(l, r); });
}

ComplexMatrix modulus(const ComplexMatrix& x) {
    const SVDResult s = svd(x);
    return spectral_synthesis(s.right, s.singular_values);
}

PolarDecomposition polar_decompose(const ComplexMatrix& x) {
    const SVDResult s = svd(x);
    return {s.left * s.right.adjoint(), spectral_synthesis(s.right, s.singular_values)};
}

}  // namespace ineqlab
