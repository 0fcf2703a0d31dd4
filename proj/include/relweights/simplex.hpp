#pragma once

#include <string>
#include <vector>

#include "relweights/core.hpp"

namespace relweights {

enum class WeightKind { supporting, covering };
enum class Sense { maximize, minimize };

const char* weight_kind_name(WeightKind kind) noexcept;

/// One of the two LP shapes solved here, over variables x(v) >= 0 and a free
/// scalar alpha:
///
///   supporting:  maximize alpha  s.t.  sum_v x(v) = 1,
///                alpha - (x, m) <= 0 for every member m
///   covering:    minimize alpha  s.t.  sum_v x(v) = 1,
///                alpha - (x, m) >= 0 for every member m
struct LpProblem {
    WeightKind kind;
    FunctionSet set;
    Sense sense;

    /// x(v) for each v plus the scalar alpha.
    std::size_t num_variables() const { return set.domain_size() + 1; }
    /// One inequality per member.
    std::size_t num_inequalities() const { return set.num_members(); }
    /// The normalization row.
    std::size_t num_equalities() const { return 1; }
};

LpProblem build_problem(FunctionSet set, WeightKind kind);

/// An optimal basic solution together with the dual weight read off the
/// final tableau.
struct LpSolution {
    double alpha = 0.0;
    WeightVector x;     // over the problem's domain V
    WeightVector dual;  // over the problem's members M
    std::vector<std::string> tight_set;  // members with |(x,m) - alpha| <= 1e-7
    int iterations = 0;
};

/// Two-phase primal dense-tableau simplex with Bland's rule. Deterministic:
/// identical problems produce identical pivot sequences and solutions.
///
/// Throws Error(errc::iteration_limit) after 50*(|V|+|M|+2) pivots and
/// Error(errc::infeasible) / Error(errc::unbounded) for states that cannot
/// occur on valid inputs (internal errors).
LpSolution solve_lp(const LpProblem& problem);

}  // namespace relweights
