#include "ineqlab/operator_quantities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <vector>

#include "ineqlab/random.hpp"

namespace ineqlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxRefinedBrackets = 4;
constexpr std::uint64_t kInverseIterationSeed = 0x77697463686e6573ULL;

// H_theta = cos(theta) Re(T) - sin(theta) Im(T), with Re(T) = (T + T*)/2 and
// Im(T) = (T - T*)/(2i), written into a preallocated buffer.
class RotatedRealPart {
public:
    explicit RotatedRealPart(const ComplexMatrix& t)
        : n_(t.rows()), re_(n_, n_), im_(n_, n_), work_(n_, n_) {
        const Complex half_over_i(0.0, -0.5);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                re_(i, j) = 0.5 * (t(i, j) + std::conj(t(j, i)));
                im_(i, j) = half_over_i * (t(i, j) - std::conj(t(j, i)));
            }
        }
    }

    const ComplexMatrix& at(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        auto re = re_.entries();
        auto im = im_.entries();
        auto out = work_.entries();
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * re[k] - s * im[k];
        for (std::size_t i = 0; i < n_; ++i) work_(i, i) = work_(i, i).real();
        return work_;
    }

    double top(double theta) { return largest_eigenvalue_unchecked(at(theta)); }

private:
    std::size_t n_;
    ComplexMatrix re_;
    ComplexMatrix im_;
    ComplexMatrix work_;
};

struct Peak {
    double theta;
    double value;
};

// Golden-section search for the maximum of `f` on [lo, hi], returning the best
// point evaluated (seeded with the bracket's coarse centre).
template <class F>
Peak golden_section_max(F&& f, double lo, double hi, Peak best, const RadiusSweepConfig& cfg) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    auto keep = [&best](double theta, double value) {
        if (value > best.value) best = {theta, value};
    };
    keep(c, fc);
    keep(d, fd);
    for (int iter = 0; iter < cfg.max_refine_iters && (hi - lo) > cfg.refine_tol; ++iter) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f(c);
            keep(c, fc);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f(d);
            keep(d, fd);
        }
    }
    return best;
}

double wrap_angle(double theta) {
    double w = std::fmod(theta, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

// Unit top eigenvector of Hermitian h by shifted inverse iteration:
// (lambda + eta) I - h is positive definite with smallest eigenvalue about eta,
// so each solve damps the rest of the spectrum by eta / (eta + gap). The start
// vector is a fixed pseudo-random draw. Empty if the factorization fails or the
// Rayleigh quotient misses lambda.
std::optional<ComplexVector> top_eigenvector(const ComplexMatrix& h, double lambda) {
    const std::size_t n = h.rows();
    const double scale = std::max(max_abs(h), std::numeric_limits<double>::min());
    const double shift = lambda + 1e-10 * scale;
    std::vector<Complex> l(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = shift - h(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l[j * n + k]);
        if (!(d > 0.0)) return std::nullopt;
        const double pivot = std::sqrt(d);
        l[j * n + j] = pivot;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex acc = -h(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l[i * n + k] * std::conj(l[j * n + k]);
            l[i * n + j] = acc / pivot;
        }
    }
    GaussianSource start(kInverseIterationSeed);
    std::vector<Complex> x(n);
    for (Complex& z : x) z = start.complex_normal();
    for (int iter = 0; iter < 3; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {  // L y = x
            Complex acc = x[i];
            for (std::size_t k = 0; k < i; ++k) acc -= l[i * n + k] * x[k];
            x[i] = acc / l[i * n + i].real();
        }
        for (std::size_t i = n; i-- > 0;) {  // L* z = y
            Complex acc = x[i];
            for (std::size_t k = i + 1; k < n; ++k) acc -= std::conj(l[k * n + i]) * x[k];
            x[i] = acc / l[i * n + i].real();
        }
        double nrm = 0.0;
        for (const Complex& z : x) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) return std::nullopt;
        for (Complex& z : x) z /= nrm;
    }
    ComplexVector w(std::move(x));
    const double rayleigh = inner(h * w, w).real();
    if (!(std::abs(rayleigh - lambda) <= 1e-9 * scale)) return std::nullopt;
    return w;
}

double refinement_band(double best, double step) { return 2.0 * std::abs(best) * step * step; }

// g(theta_j) = lambda_max(H_{theta_j}) on the grid theta_j = 2 pi j / points.
//
// g is the support function of the (convex) numerical range: g(theta) is the
// max of Re(e^{i theta} z) over z in W(T). Two evaluated angles a < b with
// b - a < pi therefore bound every angle between them by the vertex of the two
// supporting half-planes:
//   g(theta) <= (g(a) sin(b - theta) + g(b) sin(theta - a)) / sin(b - a).
// Starting from a sparse set of seeds, the gap with the highest bound is split
// at its bound's argmax until every unevaluated grid point is provably below
// best - band - margin, the acceptance level for refinement brackets. Such a
// point can neither be a bracket nor the coarse maximum, so it stays at -inf;
// the candidate set is the same as for the full sweep.
std::vector<double> coarse_sweep(RotatedRealPart& rotated, const ComplexMatrix& t, std::size_t points) {
    const double step = kTwoPi / static_cast<double>(points);
    const double minus_inf = -std::numeric_limits<double>::infinity();
    std::vector<double> coarse(points, minus_inf);
    if (points % 2 != 0) {
        for (std::size_t j = 0; j < points; ++j) coarse[j] = rotated.top(step * static_cast<double>(j));
        return coarse;
    }
    // lambda_max(H_{theta + pi}) = -lambda_min(H_theta): one solve fills j and j + half.
    const std::size_t half = points / 2;
    std::vector<char> known(points, 0);
    auto evaluate = [&](std::size_t j) {
        j %= half;
        const auto [lo, hi] = extreme_eigenvalues_unchecked(rotated.at(step * static_cast<double>(j)));
        coarse[j] = hi;
        coarse[j + half] = -lo;
        known[j] = known[j + half] = 1;
    };

    std::size_t seed_stride = 1;
    for (std::size_t s = half / 12; s > 1; --s) {
        if (half % s == 0) {
            seed_stride = s;
            break;
        }
    }
    for (std::size_t j = 0; j < half; j += seed_stride) evaluate(j);

    std::vector<double> sines(half + 1);
    for (std::size_t d = 0; d <= half; ++d) sines[d] = std::sin(step * static_cast<double>(d));
    const double margin = 1e-9 * frobenius_norm(t);

    struct Gap {
        double bound;
        std::size_t lo;      // known endpoint
        std::size_t width;   // hi = lo + width (mod points), known
        std::size_t argmax;  // offset from lo
        bool operator<(const Gap& o) const { return bound < o.bound; }
    };
    auto make_gap = [&](std::size_t lo, std::size_t width) {
        Gap g{minus_inf, lo, width, 0};
        const double ga = coarse[lo];
        const double gb = coarse[(lo + width) % points];
        const double denom = sines[width];
        for (std::size_t d = 1; d < width; ++d) {
            const double u = (ga * sines[width - d] + gb * sines[d]) / denom;
            if (u > g.bound) {
                g.bound = u;
                g.argmax = d;
            }
        }
        return g;
    };
    std::priority_queue<Gap> gaps;
    auto push_split = [&](std::size_t lo, std::size_t width) {
        // Splits [lo, lo + width] at every known interior point.
        std::size_t start = lo;
        for (std::size_t d = 1; d <= width; ++d) {
            const std::size_t k = (lo + d) % points;
            if (!known[k]) continue;
            const std::size_t w = (k + points - start) % points;
            if (w > 1) gaps.push(make_gap(start, w));
            start = k;
        }
    };
    push_split(0, points);

    double best = *std::max_element(coarse.begin(), coarse.end());
    while (!gaps.empty()) {
        const Gap g = gaps.top();
        const double level = best - refinement_band(best, step) - margin;
        if (g.bound < level) break;
        gaps.pop();
        bool stale = false;
        for (std::size_t d = 1; d < g.width && !stale; ++d) stale = known[(g.lo + d) % points] != 0;
        if (!stale) {
            const std::size_t k = (g.lo + g.argmax) % points;
            evaluate(k);
            best = std::max({best, coarse[k], coarse[(k + half) % points]});
        }
        push_split(g.lo, g.width);
    }
    return coarse;
}

}  // namespace

// sqrt(lambda_max(T* T)) by the eigenvalue-only kernel. The absolute error of
// lambda_max is O(eps ||T||^2), so the largest singular value keeps full
// relative accuracy (only small singular values lose digits this way).
double operator_norm(const ComplexMatrix& t) {
    if (!t.is_square()) throw DimensionError("operator_norm: matrix must be square");
    const ComplexMatrix gram = hermitian_part(t.adjoint() * t);
    return std::sqrt(std::max(0.0, extreme_eigenvalues_unchecked(gram).second));
}

RadiusResult numerical_radius(const ComplexMatrix& t, const RadiusSweepConfig& cfg) {
    if (!t.is_square()) throw DimensionError("numerical_radius: matrix must be square");
    if (cfg.coarse_points < 8) throw PreconditionError("numerical_radius: coarse_points must be >= 8");
    if (!(cfg.refine_tol > 0.0) || cfg.max_refine_iters < 1) {
        throw PreconditionError("numerical_radius: invalid refinement settings");
    }
    const std::size_t n = t.rows();
    RadiusResult result;
    result.witness_vector = ComplexVector(n);
    if (max_abs(t) == 0.0) {
        result.witness_vector[0] = 1.0;
        return result;
    }

    RotatedRealPart rotated(t);
    const std::size_t points = static_cast<std::size_t>(cfg.coarse_points);
    const double step = kTwoPi / static_cast<double>(points);
    const std::vector<double> coarse = coarse_sweep(rotated, t, points);

    const double best_coarse = *std::max_element(coarse.begin(), coarse.end());
    const double band = refinement_band(best_coarse, step);
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < points; ++j) {
        const double prev = coarse[(j + points - 1) % points];
        const double next = coarse[(j + 1) % points];
        if (coarse[j] >= prev && coarse[j] >= next && coarse[j] >= best_coarse - band) {
            candidates.push_back(j);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t l, std::size_t r) { return coarse[l] > coarse[r]; });
    if (candidates.size() > kMaxRefinedBrackets) candidates.resize(kMaxRefinedBrackets);

    Peak best{0.0, -std::numeric_limits<double>::infinity()};
    for (std::size_t j : candidates) {
        const double centre = step * static_cast<double>(j);
        const Peak refined = golden_section_max([&](double theta) { return rotated.top(theta); },
                                                centre - step, centre + step, {centre, coarse[j]}, cfg);
        if (refined.value > best.value) best = refined;
    }

    result.argmax_angle = wrap_angle(best.theta);
    const ComplexMatrix& h = rotated.at(result.argmax_angle);
    const std::optional<ComplexVector> fast = top_eigenvector(h, largest_eigenvalue_unchecked(h));
    ComplexVector w = fast ? *fast : hermitian_eigen(h).eigenvectors.column(0);
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(w[i]) > std::abs(w[pivot])) pivot = i;
    }
    const Complex phase = std::conj(w[pivot]) / std::abs(w[pivot]);
    w = phase * w;
    w[pivot] = std::abs(w[pivot]);
    const double attained = std::abs(inner(t * w, w));
    result.omega = std::max(best.value, attained);
    result.witness_vector = std::move(w);
    return result;
}

double numerical_radius_sampling_oracle(const ComplexMatrix& t, std::int64_t samples, std::uint64_t seed) {
    if (!t.is_square()) throw DimensionError("numerical_radius_sampling_oracle: matrix must be square");
    if (samples < 1) throw PreconditionError("numerical_radius_sampling_oracle: samples must be positive");
    GaussianSource source(seed);
    double best = 0.0;
    for (std::int64_t s = 0; s < samples; ++s) {
        const ComplexVector x = source.gaussian_vector(t.rows());
        const double rayleigh = std::abs(inner(t * x, x)) / inner(x, x).real();
        best = std::max(best, rayleigh);
    }
    return best;
}

}  // namespace ineqlab
