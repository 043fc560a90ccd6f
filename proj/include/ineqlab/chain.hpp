#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ineqlab {

/// Verdict tolerance: slack >= -(abs + rel * max |term|).
struct ChainTolerance {
    double abs = 1e-12;
    double rel = 1e-9;
};

/// Default for chains containing a numerical radius, which carries
/// optimization error on top of rounding.
inline constexpr ChainTolerance kOmegaChainTolerance{1e-12, 1e-8};

struct ChainTerm {
    std::string label;
    double value = 0.0;
};

/// An inequality chain term[0] <= term[1] <= ... evaluated on one input.
struct ChainResult {
    std::string check_name;
    std::vector<ChainTerm> terms;
    std::vector<double> slacks;  // terms[k+1] - terms[k]
    bool passed = false;
    double tolerance_used = 0.0;

    double min_slack() const;
};

/// Computes slacks, tolerance_used and the verdict.
ChainResult make_chain(std::string check_name, std::vector<ChainTerm> terms, const ChainTolerance& tol);

}  // namespace ineqlab
