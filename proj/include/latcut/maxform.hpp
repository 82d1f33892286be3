#ifndef LATCUT_MAXFORM_HPP
#define LATCUT_MAXFORM_HPP

#include <vector>

#include "latcut/rational.hpp"

namespace latcut {

// Finite max of linear forms: psi(r) = max_i a_i . r, optionally with an
// extra 0 term (gauge of an unbounded K vs smallest representation).
struct MaxForm {
    std::vector<RatVec> rows;
    bool include_zero_term = false;

    int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

Rat eval(const MaxForm& f, const RatVec& r);

}  // namespace latcut

#endif
