#pragma once

#include <optional>
#include <vector>

#include "multisym/polynomial.hpp"

namespace multisym {

/// Rank of a rational matrix, decided exactly: denominators are cleared per
/// row and the integer matrix is reduced by fraction-free (Bareiss)
/// elimination.
int exact_rank(std::vector<std::vector<Rational>> m);

/// One exact solution of A x = rhs with free variables pinned to zero, or
/// nullopt when the system is inconsistent. A is row-major, rows may exceed
/// or undercut the number of unknowns.
std::optional<std::vector<Rational>> exact_solve(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs);

}  // namespace multisym
