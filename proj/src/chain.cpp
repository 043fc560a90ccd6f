#include "ineqlab/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ineqlab {

double ChainResult::min_slack() const {
    if (slacks.empty()) return 0.0;
    double out = std::numeric_limits<double>::infinity();
    for (double s : slacks) {
        if (std::isnan(s)) return s;
        out = std::min(out, s);
    }
    return out;
}

ChainResult make_chain(std::string check_name, std::vector<ChainTerm> terms, const ChainTolerance& tol) {
    ChainResult out;
    out.check_name = std::move(check_name);
    double scale = 0.0;
    for (const ChainTerm& t : terms) scale = std::max(scale, std::abs(t.value));
    out.tolerance_used = tol.abs + tol.rel * scale;
    out.passed = true;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        const double slack = terms[k + 1].value - terms[k].value;
        out.slacks.push_back(slack);
        if (!(slack >= -out.tolerance_used)) out.passed = false;  // NaN fails
    }
    out.terms = std::move(terms);
    return out;
}

}  // namespace ineqlab
