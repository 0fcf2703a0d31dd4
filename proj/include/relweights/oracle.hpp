#pragma once

#include "relweights/core.hpp"

namespace relweights {

/// Brute-force reference solver for small instances, used to cross-check the
/// simplex path. Enumerates candidate basic solutions directly; it shares no
/// code with the tableau solver.
inline constexpr std::size_t kOracleBudget = 8;

struct OracleResult {
    double alpha = 0.0;
    WeightVector x;
};

/// Exact value and an optimizer of max_{x in simplex} min_m (x, m).
/// Enumerates every equal-size support pair (S subset of V, T subset of M),
/// solves the square system { (x,m) = alpha for m in T, sum_S x = 1, x = 0
/// off S }, keeps feasible candidates, and also sweeps all simplex vertices.
/// Throws Error(errc::budget_exceeded) when |V| or |M| exceeds kOracleBudget.
OracleResult oracle_maxmin(const FunctionSet& set);

/// Mirror image: min_{x in simplex} max_m (x, m).
OracleResult oracle_minimax(const FunctionSet& set);

}  // namespace relweights
