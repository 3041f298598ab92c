#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mcat/rational.hpp"

namespace mcat {

/// Row-stochastic matrix stored sparsely; each row lists (column, probability)
/// with distinct columns, self-loop included when nonzero.
using TransitionMatrix = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

enum class SolveMethod {
  automatic,   // rational elimination for small chains, p-adic lifting otherwise
  rational,    // dense Gaussian elimination over Q
  padic,
};

/// Strongly connected components of the support graph, each sorted, listed in
/// order of their smallest state.
std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& p);

bool is_irreducible(const TransitionMatrix& p);

/// True iff pi P = pi and sum(pi) = 1 hold exactly.
bool is_stationary(const TransitionMatrix& p, const std::vector<Rational>& pi);

/// Unique stationary law of an irreducible chain, certified exactly.
/// Throws Error(singular_system) if the balance system is degenerate.
std::vector<Rational> solve_stationary(const TransitionMatrix& p,
                                       SolveMethod method = SolveMethod::automatic);

}  // namespace mcat
