#pragma once

#include <string>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/simplex.hpp"

namespace relweights {

/// An optimal weight pair for one of the four problems: the primal weight on
/// the problem's domain and the dual weight on its members, read from the
/// same solve. For a supporting solution the dual is a covering weight for
/// the transposed set, and vice versa.
struct WeightSolution {
    WeightKind kind;
    double alpha = 0.0;
    WeightVector primal;  // on V
    WeightVector dual;    // on M
    std::vector<std::string> tight_members;  // members with |(primal,m) - alpha| <= 1e-7
    std::vector<std::string> tight_domain;   // v with |sum_m m(v) dual(m) - alpha| <= 1e-7
    double mean_member_norm = 0.0;  // mean L1 norm of the members, kept for scoring
    int iterations = 0;
};

/// Maxmin weight on V: maximizes min_m (x, m) over the simplex (alpha is the
/// attained value). The dual field is a covering weight for the transposed set.
WeightSolution supporting_weight(const FunctionSet& set);

/// Minimax weight on V: minimizes max_m (x, m) over the simplex. The dual
/// field is a supporting weight for the transposed set.
WeightSolution covering_weight(const FunctionSet& set);

/// The same constructions after the role swap: weights on M against the
/// column functions. Implemented by delegation to transpose + the above, so
/// cross-checks genuinely exercise two code paths.
WeightSolution hat_supporting_weight(const FunctionSet& set);
WeightSolution hat_covering_weight(const FunctionSet& set);

struct SlacknessResidual {
    std::string label;  // e.g. "support-member:m1", "cover-domain:v2"
    double residual = 0.0;
};

/// Machine-checkable record of the duality structure connecting the four
/// problems: the two cross equalities plus the complementary slackness
/// residuals, computed from four independent solves.
struct DualityReport {
    double alpha_primal = 0.0;          // supporting value on V
    double alpha_dual = 0.0;            // covering value on the transposed set
    double alpha_covering = 0.0;        // covering value on V
    double alpha_hat_supporting = 0.0;  // supporting value on the transposed set
    double gap = 0.0;                   // |alpha_primal - alpha_dual|
    double gap_covering = 0.0;          // |alpha_covering - alpha_hat_supporting|
    std::vector<SlacknessResidual> residuals;             // every checked condition
    std::vector<SlacknessResidual> slackness_violations;  // residuals above 1e-7
    double max_violation = 0.0;  // max over both gaps and all residuals

    bool within(double gap_tol, double slackness_tol) const;
};

/// Solves all four problems independently and checks the duality equalities
/// and complementary slackness conditions pairwise. Violations are reported,
/// never thrown.
DualityReport verify_theorem3(const FunctionSet& set);

/// Tolerances the report is judged against.
inline constexpr double kDualityGapTol = 1e-8;
inline constexpr double kSlacknessTol = 1e-7;
/// Nonzero predicate threshold for slackness ("x(v) != 0"), applied after
/// solution cleaning, which produces exact zeros.
inline constexpr double kSupportTol = 1e-8;

}  // namespace relweights
