#pragma once

#include <vector>

#include "lgtt/rational.hpp"

namespace lgtt {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Smith normal form over the integers: S = U * A * V with U, V unimodular
/// and S diagonal with d_1 | d_2 | ... (non-negative).
struct SmithResult {
    IntMatrix u, s, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_identity(std::size_t n);
long int_rank(const IntMatrix& a);  // rank over Q

}  // namespace lgtt
