#include "ineqlab/ensembles.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ineqlab/random.hpp"

namespace ineqlab {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::ginibre, "ginibre"},
    {Family::hermitian, "hermitian"},
    {Family::psd, "psd"},
    {Family::positive_contraction, "positive_contraction"},
    {Family::projection, "projection"},
    {Family::unitary, "unitary"},
    {Family::unit_vector, "unit_vector"},
}};

// Orthonormalizes the columns of a Ginibre matrix (Gram-Schmidt, two passes).
// R has a positive diagonal by construction, which makes Q Haar distributed.
ComplexMatrix haar_unitary(GaussianSource& src, std::size_t dim) {
    ComplexMatrix q = src.ginibre(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        ComplexVector v = q.column(k);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                const ComplexVector qj = q.column(j);
                v = v - inner(v, qj) * qj;
            }
        }
        q.set_column(k, Complex(1.0 / norm(v)) * v);
    }
    return q;
}

// V diag(d) V*, symmetrized.
ComplexMatrix conjugated_diagonal(const ComplexMatrix& v, const std::vector<double>& d) {
    return hermitian_part(v * ComplexMatrix::diagonal(d) * v.adjoint());
}

Sample generate(Family family, std::size_t dim, GaussianSource& src) {
    switch (family) {
        case Family::ginibre:
            return src.ginibre(dim);
        case Family::hermitian:
            return hermitian_part(src.ginibre(dim));
        case Family::psd: {
            const ComplexMatrix g = src.ginibre(dim);
            const ComplexMatrix gram = hermitian_part(g.adjoint() * g);
            const double top = hermitian_eigenvalues(gram).front();
            const double scale = 2.0 * src.uniform();
            return Complex(scale / top) * gram;
        }
        case Family::positive_contraction:
        case Family::projection: {
            const ComplexMatrix v = haar_unitary(src, dim);
            std::vector<double> d(dim);
            for (double& u : d) {
                u = src.uniform();
                if (family == Family::projection) u = u < 0.5 ? 0.0 : 1.0;
            }
            return conjugated_diagonal(v, d);
        }
        case Family::unitary:
            return haar_unitary(src, dim);
        case Family::unit_vector: {
            ComplexVector x = src.gaussian_vector(dim);
            return Complex(1.0 / norm(x)) * x;
        }
    }
    throw PreconditionError("unknown ensemble family");
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& [family, name] : kFamilyNames) {
        if (family == f) return name;
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [family, known] : kFamilyNames) {
        if (known == name) return family;
    }
    return std::nullopt;
}

bool is_vector_family(Family f) { return f == Family::unit_vector; }

void validate(const EnsembleConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > kMaxEnsembleDim) {
        throw PreconditionError("ensemble dim must be in [1, 64], got " + std::to_string(cfg.dim));
    }
    if (cfg.trials < 1) throw PreconditionError("ensemble trials must be positive");
}

Sample sample(const EnsembleConfig& cfg, std::int64_t trial_index) {
    validate(cfg);
    if (trial_index < 0 || trial_index >= cfg.trials) {
        throw PreconditionError("trial_index " + std::to_string(trial_index) + " outside [0, " +
                                std::to_string(cfg.trials) + ")");
    }
    return draw(cfg.family, cfg.dim, cfg.master_seed, trial_index, 0);
}

Sample draw(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
            std::uint64_t stream) {
    if (dim < 1 || dim > kMaxEnsembleDim) throw PreconditionError("ensemble dim must be in [1, 64]");
    GaussianSource src(derive_seed(master_seed, static_cast<std::uint64_t>(trial_index), stream));
    return generate(family, dim, src);
}

ComplexMatrix draw_matrix(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
                          std::uint64_t stream) {
    if (is_vector_family(family)) throw PreconditionError("family produces vectors, not matrices");
    return std::get<ComplexMatrix>(draw(family, dim, master_seed, trial_index, stream));
}

ComplexVector draw_vector(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
                          std::uint64_t stream) {
    if (family == Family::ginibre) {
        GaussianSource src(derive_seed(master_seed, static_cast<std::uint64_t>(trial_index), stream));
        return src.gaussian_vector(dim);
    }
    if (!is_vector_family(family)) throw PreconditionError("family produces matrices, not vectors");
    return std::get<ComplexVector>(draw(family, dim, master_seed, trial_index, stream));
}

}  // namespace ineqlab
