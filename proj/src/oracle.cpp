#include "relweights/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace relweights {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kImproveTol = 1e-12;

// Gaussian elimination with partial pivoting on a dense square system.
// Returns nothing when the system is (numerically) singular; such candidate
// bases are degenerate and already covered by other support subsets.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

struct Candidate {
    double alpha;
    std::vector<double> x;
};

class Enumerator {
public:
    Enumerator(const FunctionSet& set, bool maxmin) : set_(set), maxmin_(maxmin) {}

    OracleResult run() {
        const std::size_t n = set_.domain_size();
        const std::size_t m = set_.num_members();
        if (n > kOracleBudget || m > kOracleBudget) {
            throw Error(errc::budget_exceeded, "oracle limited to " +
                                                   std::to_string(kOracleBudget) +
                                                   " rows/columns");
        }

        // Simplex vertices first; they are always feasible, so `best_` is
        // guaranteed to be set.
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<double> x(n, 0.0);
            x[v] = 1.0;
            consider({extreme_pairing(x), std::move(x)});
        }

        const std::size_t kmax = std::min(n, m);
        for (std::size_t k = 1; k <= kmax; ++k) {
            for (std::uint32_t sv = 0; sv < (1u << n); ++sv) {
                if (std::popcount(sv) != static_cast<int>(k)) continue;
                for (std::uint32_t tm = 0; tm < (1u << m); ++tm) {
                    if (std::popcount(tm) != static_cast<int>(k)) continue;
                    try_support_pair(sv, tm, k);
                }
            }
        }

        std::vector<double> x = best_->x;
        double sum = 0.0;
        for (double& xi : x) {
            if (xi < 0.0) xi = 0.0;  // only roundoff-size negatives survive feasibility
            sum += xi;
        }
        for (double& xi : x) xi /= sum;
        return OracleResult{best_->alpha,
                            WeightVector::renormalized(set_.domain(), std::move(x))};
    }

private:
    double extreme_pairing(const std::vector<double>& x) const {
        double best = maxmin_ ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < set_.num_members(); ++i) {
            auto row = set_.row(i);
            double p = 0.0;
            for (std::size_t j = 0; j < row.size(); ++j) p += x[j] * row[j];
            best = maxmin_ ? std::min(best, p) : std::max(best, p);
        }
        return best;
    }

    bool feasible(const std::vector<double>& x, double alpha) const {
        for (double xi : x) {
            if (xi < -kFeasTol) return false;
        }
        for (std::size_t i = 0; i < set_.num_members(); ++i) {
            auto row = set_.row(i);
            double p = 0.0;
            for (std::size_t j = 0; j < row.size(); ++j) p += x[j] * row[j];
            if (maxmin_ && p < alpha - kFeasTol) return false;
            if (!maxmin_ && p > alpha + kFeasTol) return false;
        }
        return true;
    }

    void consider(Candidate cand) {
        if (!feasible(cand.x, cand.alpha)) return;
        if (!best_) {
            best_ = std::move(cand);
            return;
        }
        const bool better = maxmin_ ? cand.alpha > best_->alpha + kImproveTol
                                    : cand.alpha < best_->alpha - kImproveTol;
        if (better) best_ = std::move(cand);
    }

    // Unknowns: x(v) for v in S, then alpha. Equations: one tightness row per
    // member of T, then the normalization row.
    void try_support_pair(std::uint32_t sv, std::uint32_t tm, std::size_t k) {
        const std::size_t n = set_.domain_size();
        std::vector<std::size_t> svars;
        for (std::size_t v = 0; v < n; ++v) {
            if (sv & (1u << v)) svars.push_back(v);
        }
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t i = 0; i < set_.num_members(); ++i) {
            if (!(tm & (1u << i))) continue;
            std::vector<double> row(k + 1, 0.0);
            for (std::size_t j = 0; j < k; ++j) row[j] = set_.at(i, svars[j]);
            row[k] = -1.0;
            a.push_back(std::move(row));
            b.push_back(0.0);
        }
        std::vector<double> norm(k + 1, 0.0);
        for (std::size_t j = 0; j < k; ++j) norm[j] = 1.0;
        a.push_back(std::move(norm));
        b.push_back(1.0);

        auto sol = solve_square(std::move(a), std::move(b));
        if (!sol) return;
        std::vector<double> x(n, 0.0);
        for (std::size_t j = 0; j < k; ++j) x[svars[j]] = (*sol)[j];
        consider({(*sol)[k], std::move(x)});
    }

    const FunctionSet& set_;
    bool maxmin_;
    std::optional<Candidate> best_;
};

}  // namespace

OracleResult oracle_maxmin(const FunctionSet& set) { return Enumerator(set, true).run(); }

OracleResult oracle_minimax(const FunctionSet& set) { return Enumerator(set, false).run(); }

}  // namespace relweights
