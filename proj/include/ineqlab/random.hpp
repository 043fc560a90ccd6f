#pragma once

#include <cstdint>
#include <random>

#include "ineqlab/linalg.hpp"

namespace ineqlab {

/// SplitMix64 finalizer (Steele, Lea, Flood). Constants are pinned:
/// 0xbf58476d1ce4e5b9, 0x94d049bb133111eb, shifts 30/27/31.
constexpr std::uint64_t avalanche64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the generator for one (trial, operand stream) pair. Trials never
/// share state, so any evaluation order yields the same inputs.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                                    std::uint64_t stream) noexcept {
    std::uint64_t s = avalanche64(master_seed + 0x9e3779b97f4a7c15ULL * (trial_index + 1));
    return avalanche64(s ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
}

/// Platform-independent uniform and Gaussian draws on top of std::mt19937_64
/// (whose output sequence is fixed by the standard). Library distributions are
/// avoided because their algorithms are implementation-defined.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard complex Gaussian (E|z|^2 = 1) by Box-Muller.
    Complex complex_normal();

    ComplexVector gaussian_vector(std::size_t dim);
    ComplexMatrix ginibre(std::size_t dim);

private:
    std::mt19937_64 engine_;
};

}  // namespace ineqlab
