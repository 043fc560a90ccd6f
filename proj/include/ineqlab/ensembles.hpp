#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ineqlab/linalg.hpp"

namespace ineqlab {

enum class Family { ginibre, hermitian, psd, positive_contraction, projection, unitary, unit_vector };

inline constexpr std::size_t kMaxEnsembleDim = 64;

struct EnsembleConfig {
    Family family = Family::ginibre;
    std::size_t dim = 2;
    std::uint64_t master_seed = 0;
    std::int64_t trials = 1;
};

using Sample = std::variant<ComplexMatrix, ComplexVector>;

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool is_vector_family(Family f);

/// Throws PreconditionError for dim outside [1, 64] or trials < 1.
void validate(const EnsembleConfig& cfg);

/// Draw for operand stream 0 of the given trial. Deterministic in
/// (family, dim, master_seed, trial_index).
Sample sample(const EnsembleConfig& cfg, std::int64_t trial_index);

/// Draw from `family` using the generator of (master_seed, trial_index, stream).
/// Used by the harness for auxiliary operands of one trial.
Sample draw(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
            std::uint64_t stream);

ComplexMatrix draw_matrix(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
                          std::uint64_t stream);
ComplexVector draw_vector(Family family, std::size_t dim, std::uint64_t master_seed, std::int64_t trial_index,
                          std::uint64_t stream);

}  // namespace ineqlab
