#pragma once

#include <string>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/algebra/variable.hpp"

namespace fixtures {

// Generators up to symmetry for y_1^2 y_2, stabilizing at n = 6.
inline const std::vector<std::string> g_pm = {
    "(1,6)*(2,1)^2*(5,4)*(6,5) - (1,4)*(1,5)*(2,6)^2*(5,6)",
    "(1,6)^2*(2,1)^4*(4,3)*(6,5) - (1,3)*(1,4)^2*(1,5)*(2,6)^4",
    "(1,6)^2*(2,1)^4*(4,5)*(6,5) - (1,4)^2*(1,5)^2*(2,6)^4",
    "(1,6)*(2,1)^2*(3,4)*(6,5) - (1,4)*(1,5)*(2,6)^2*(3,6)",
    "(1,6)*(2,1)^2*(3,6) - (1,3)^2*(2,6)^2",
    "(1,6)^2*(2,1)^2*(3,2) - (1,2)*(1,3)^2*(2,6)^2",
    "(1,3)*(4,3) - (1,4)*(3,4)",
    "(1,3)*(2,4) - (1,4)*(2,3)",
};

// Smaller set read off the kernel of A_5.
inline const std::vector<std::string> h_pm = {
    "(1,2)^2*(3,1) - (1,3)^2*(2,1)",
    "(1,2)^2*(2,3) - (1,3)*(2,1)^2",
    "(1,2)^3*(3,2) - (1,3)^2*(2,1)^2",
    "(1,2)^4*(3,4) - (1,3)^2*(1,4)*(2,1)^2",
};

// Listed generators of I_3 for alpha = (2,1).
inline const std::vector<std::string> i3_listed = {
    "(1,3)*(2,1)^2 - (1,2)^2*(2,3)",
    "(1,3)^2*(2,1) - (1,2)^2*(3,1)",
    "(2,1)*(3,1) - (1,2)*(3,2)",
    "(2,1)^2*(3,2) - (1,2)*(2,3)^2",
    "(1,3)*(2,3) - (1,2)*(3,2)",
    "(1,3)*(2,1)*(3,2) - (1,2)*(2,3)*(3,1)",
    "(1,3)^2*(3,2) - (1,2)*(3,1)^2",
    "(2,3)*(3,1)^2 - (1,3)*(3,2)^2",
    "(2,3)^2*(3,1) - (2,1)*(3,2)^2",
};

// Row labels of the printed kernel basis of A_5, top to bottom.
inline const std::vector<std::string> a5_kernel_rows = {
    "(1,2)", "(1,3)", "(1,4)", "(1,5)", "(2,1)", "(3,1)", "(4,1)", "(5,1)", "(2,3)", "(2,4)",
    "(2,5)", "(3,2)", "(4,2)", "(5,2)", "(3,4)", "(3,5)", "(4,3)", "(5,3)", "(4,5)", "(5,4)",
};

// Top five rows of the printed basis; the remaining fifteen are the identity.
inline const std::vector<std::vector<long>> a5_kernel_top = {
    {2, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 4},
    {-2, 0, 0, -1, 0, 0, -2, 0, 0, -2, -2, -1, -1, 0, 0},
    {0, -2, 0, 0, -1, 0, 0, -2, 0, -1, 0, -2, 0, -2, -1},
    {0, 0, -2, 0, 0, -1, 0, 0, -2, 0, -1, 0, -2, -1, -2},
    {-1, -1, -1, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2},
};

// f and g_1 in R_9 with f = sigma(g_1).
inline const std::string express_target = "(3,9)*(7,9) - (3,7)*(9,7)";
inline const std::string express_generator = "(1,3)*(2,3) - (1,2)*(3,2)";
inline const std::string express_sigma = "(1 3 9 2 7)";

// Degree complexity cells for degrevlex over the dlex variable order.
struct TableCell {
    std::vector<long> alpha;
    std::size_t n;
    long printed;
};
inline const std::vector<TableCell> table_cells = {
    {{1, 1}, 3, 1}, {{1, 1}, 4, 2}, {{1, 1}, 5, 2}, {{1, 1}, 6, 2},
    {{2, 1}, 3, 3}, {{2, 1}, 4, 3}, {{2, 1}, 5, 3}, {{2, 1}, 6, 3},
    {{3, 1}, 3, 5}, {{3, 1}, 4, 5},
    {{3, 2}, 3, 5},
    {{4, 2}, 3, 3},
};

inline std::vector<invchain::Binomial> parse_all(const std::vector<std::string>& texts) {
    std::vector<invchain::Binomial> out;
    for (const auto& t : texts) out.push_back(invchain::Binomial::parse(t));
    return out;
}

}  // namespace fixtures
