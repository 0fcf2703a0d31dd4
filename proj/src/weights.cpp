#include "relweights/weights.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace relweights {

namespace {

constexpr double kTightTol = 1e-7;

WeightSolution solve_kind(const FunctionSet& set, WeightKind kind) {
    LpSolution lp = solve_lp(build_problem(set, kind));

    // Domain elements whose dual-side constraint sum_m m(v) y(m) is tight;
    // these mirror tight_set on the transposed problem.
    std::vector<std::string> tight_domain;
    for (std::size_t v = 0; v < set.domain_size(); ++v) {
        if (std::abs(pairing(set.column_function(v), lp.dual) - lp.alpha) <= kTightTol) {
            tight_domain.push_back(set.domain()->label(v));
        }
    }
    return WeightSolution{kind,
                          lp.alpha,
                          std::move(lp.x),
                          std::move(lp.dual),
                          std::move(lp.tight_set),
                          std::move(tight_domain),
                          set.mean_member_norm(),
                          lp.iterations};
}

}  // namespace

WeightSolution supporting_weight(const FunctionSet& set) {
    return solve_kind(set, WeightKind::supporting);
}

WeightSolution covering_weight(const FunctionSet& set) {
    return solve_kind(set, WeightKind::covering);
}

WeightSolution hat_supporting_weight(const FunctionSet& set) {
    return supporting_weight(transpose(set));
}

WeightSolution hat_covering_weight(const FunctionSet& set) {
    return covering_weight(transpose(set));
}

bool DualityReport::within(double gap_tol, double slackness_tol) const {
    if (gap > gap_tol || gap_covering > gap_tol) return false;
    for (const auto& r : residuals) {
        if (r.residual > slackness_tol) return false;
    }
    return true;
}

DualityReport verify_theorem3(const FunctionSet& set) {
    const WeightSolution sup = supporting_weight(set);
    const WeightSolution cov = covering_weight(set);
    const WeightSolution hat_sup = hat_supporting_weight(set);
    const WeightSolution hat_cov = hat_covering_weight(set);

    DualityReport report;
    report.alpha_primal = sup.alpha;
    report.alpha_dual = hat_cov.alpha;
    report.alpha_covering = cov.alpha;
    report.alpha_hat_supporting = hat_sup.alpha;
    report.gap = std::abs(report.alpha_primal - report.alpha_dual);
    report.gap_covering = std::abs(report.alpha_covering - report.alpha_hat_supporting);

    auto check = [&report](std::string label, double residual) {
        report.residuals.push_back({label, residual});
        if (residual > kSlacknessTol) {
            report.slackness_violations.push_back({std::move(label), residual});
        }
    };

    // Complementary slackness of the supporting pair: a member carrying
    // covering weight on the transposed set must be tight against the
    // supporting weight, and a domain element carrying supporting weight must
    // be tight against that covering weight.
    for (std::size_t i = 0; i < set.num_members(); ++i) {
        if (hat_cov.primal[i] <= kSupportTol) continue;
        const double lhs = pairing(sup.primal, set.member_function(i));
        check("support-member:" + set.members()->label(i), std::abs(lhs - sup.alpha));
    }
    for (std::size_t v = 0; v < set.domain_size(); ++v) {
        if (sup.primal[v] <= kSupportTol) continue;
        const double lhs = pairing(set.column_function(v), hat_cov.primal);
        check("support-domain:" + set.domain()->label(v), std::abs(lhs - sup.alpha));
    }
    // Mirror conditions for the covering pair at its value.
    for (std::size_t i = 0; i < set.num_members(); ++i) {
        if (hat_sup.primal[i] <= kSupportTol) continue;
        const double lhs = pairing(cov.primal, set.member_function(i));
        check("cover-member:" + set.members()->label(i), std::abs(lhs - cov.alpha));
    }
    for (std::size_t v = 0; v < set.domain_size(); ++v) {
        if (cov.primal[v] <= kSupportTol) continue;
        const double lhs = pairing(set.column_function(v), hat_sup.primal);
        check("cover-domain:" + set.domain()->label(v), std::abs(lhs - cov.alpha));
    }

    report.max_violation = std::max(report.gap, report.gap_covering);
    for (const auto& r : report.residuals) {
        report.max_violation = std::max(report.max_violation, r.residual);
    }
    return report;
}

}  // namespace relweights
