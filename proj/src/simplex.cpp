#include "relweights/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace relweights {

namespace {

// Entries at or below this magnitude are treated as zero in pivot selection,
// ratio tests, and final solution cleaning.
constexpr double kPivotTol = 1e-10;
constexpr double kTightTol = 1e-7;
constexpr double kPhase1Tol = 1e-7;

// Dense tableau over columns
//   [ x_0 .. x_{n-1} | alpha+ | alpha- | s_0 .. s_{M-1} | a0 | rhs ]
// with one normalization row and one row per member. The free alpha is split
// as alpha = alpha+ - alpha-; a0 is the single artificial variable for the
// normalization row. The objective row is kept in reduced-cost form
// [ c_j - z_j | -z ] and updated by the same eliminations as the body.
class Tableau {
public:
    Tableau(const LpProblem& problem)
        : n_(problem.set.domain_size()),
          m_(problem.set.num_members()),
          rows_(1 + m_),
          cols_(n_ + m_ + 4),
          body_(rows_ * cols_, 0.0),
          obj_(cols_, 0.0),
          basis_(rows_, 0) {
        const bool supporting = problem.kind == WeightKind::supporting;
        // Normalization row: sum_v x(v) + a0 = 1.
        for (std::size_t j = 0; j < n_; ++j) at(0, j) = 1.0;
        at(0, col_art()) = 1.0;
        at(0, col_rhs()) = 1.0;
        basis_[0] = col_art();
        // Member rows, written with a +1 slack so the initial basis is
        // feasible at rhs 0:
        //   supporting: alpha - (x,m) <= 0   ->  a+ - a- - (x,m) + s = 0
        //   covering:   (x,m) - alpha <= 0   ->  (x,m) - a+ + a- + s = 0
        for (std::size_t i = 0; i < m_; ++i) {
            auto row = problem.set.row(i);
            const std::size_t r = 1 + i;
            for (std::size_t j = 0; j < n_; ++j) {
                at(r, j) = supporting ? -row[j] : row[j];
            }
            at(r, col_alpha_plus()) = supporting ? 1.0 : -1.0;
            at(r, col_alpha_minus()) = supporting ? -1.0 : 1.0;
            at(r, col_slack(i)) = 1.0;
            basis_[r] = col_slack(i);
        }
    }

    std::size_t col_alpha_plus() const { return n_; }
    std::size_t col_alpha_minus() const { return n_ + 1; }
    std::size_t col_slack(std::size_t i) const { return n_ + 2 + i; }
    std::size_t col_art() const { return n_ + 2 + m_; }
    std::size_t col_rhs() const { return cols_ - 1; }

    double& at(std::size_t r, std::size_t c) { return body_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return body_[r * cols_ + c]; }

    // Phase 1 minimizes a0 (internally: maximizes -a0). With a0 basic in the
    // normalization row, pricing out gives obj_ = c1 + row 0.
    void load_phase1_objective() {
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = at(0, j);
        obj_[col_art()] = 0.0;  // c_{a0} = -1 plus the priced-out +1
    }

    // Phase 2 objective: maximize alpha+ - alpha- (supporting) or its
    // negation (covering), priced out over the current basis.
    void load_phase2_objective(WeightKind kind) {
        const double cp = kind == WeightKind::supporting ? 1.0 : -1.0;
        std::fill(obj_.begin(), obj_.end(), 0.0);
        obj_[col_alpha_plus()] = cp;
        obj_[col_alpha_minus()] = -cp;
        for (std::size_t r = 0; r < rows_; ++r) {
            double cb = 0.0;
            if (basis_[r] == col_alpha_plus()) cb = cp;
            if (basis_[r] == col_alpha_minus()) cb = -cp;
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= cb * at(r, j);
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t j = 0; j < cols_; ++j) at(pr, j) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const double factor = at(r, pc);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < cols_; ++j) at(r, j) -= factor * at(pr, j);
            at(r, pc) = 0.0;
        }
        const double of = obj_[pc];
        if (of != 0.0) {
            for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= of * at(pr, j);
            obj_[pc] = 0.0;
        }
        basis_[pr] = pc;
        ++pivots_;
    }

    // Bland's rule: the lowest-index improving column enters; ties in the
    // ratio test break toward the lowest-index basic variable. Guarantees
    // termination on the highly degenerate instances these problems produce.
    // Returns false at optimality. The artificial column never re-enters.
    bool simplex_step(int max_pivots) {
        std::size_t enter = cols_;
        for (std::size_t j = 0; j + 1 < cols_; ++j) {
            if (j == col_art()) continue;
            if (obj_[j] > kPivotTol) {
                enter = j;
                break;
            }
        }
        if (enter == cols_) return false;

        std::size_t leave_row = rows_;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < rows_; ++r) {
            const double a = at(r, enter);
            if (a <= kPivotTol) continue;
            const double ratio = std::max(0.0, at(r, col_rhs())) / a;
            if (ratio < best_ratio ||
                (ratio == best_ratio && leave_row < rows_ && basis_[r] < basis_[leave_row])) {
                best_ratio = ratio;
                leave_row = r;
            }
        }
        if (leave_row == rows_) {
            throw Error(errc::unbounded, "internal: LP unbounded, invalid function set?");
        }
        if (pivots_ >= max_pivots) {
            throw Error(errc::iteration_limit,
                        "pivot limit " + std::to_string(max_pivots) + " exceeded");
        }
        pivot(leave_row, enter);
        return true;
    }

    void run_phase(int max_pivots) {
        while (simplex_step(max_pivots)) {
        }
    }

    double objective_value() const { return -obj_[col_rhs()]; }

    // After phase 1, the artificial can remain basic at level zero on
    // degenerate instances; swap it out on any usable entry so phase 2 works
    // with structural columns only. The constraint matrix has full row rank
    // (each member row owns a slack), so an entry always exists.
    void drive_out_artificial(int max_pivots) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] != col_art()) continue;
            std::size_t pc = cols_;
            for (std::size_t j = 0; j + 1 < cols_; ++j) {
                if (j == col_art()) continue;
                if (std::abs(at(r, j)) > kPivotTol) {
                    pc = j;
                    break;
                }
            }
            if (pc == cols_) {
                throw Error(errc::infeasible, "internal: dependent normalization row");
            }
            if (pivots_ >= max_pivots) {
                throw Error(errc::iteration_limit,
                            "pivot limit " + std::to_string(max_pivots) + " exceeded");
            }
            pivot(r, pc);
        }
    }

    double variable_value(std::size_t col) const {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] == col) return at(r, col_rhs());
        }
        return 0.0;
    }

    std::vector<double> x_values() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < n_) x[basis_[r]] = at(r, col_rhs());
        }
        return x;
    }

    // Simplex multipliers of the member rows, read from the reduced costs of
    // the slack columns. At optimality obj_[s_i] <= kPivotTol, so these come
    // out nonnegative up to roundoff; they form the optimal dual weight.
    std::vector<double> member_duals() const {
        std::vector<double> y(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) y[i] = -obj_[col_slack(i)];
        return y;
    }

    int pivots() const { return pivots_; }

private:
    std::size_t n_, m_, rows_, cols_;
    std::vector<double> body_;
    std::vector<double> obj_;
    std::vector<std::size_t> basis_;
    int pivots_ = 0;
};

// Zero entries at or below kPivotTol (tiny negatives from roundoff included);
// WeightVector::renormalized then divides by the computed sum.
std::vector<double> cleaned(std::vector<double> values, const char* what) {
    for (double& v : values) {
        if (std::abs(v) <= kPivotTol) v = 0.0;
        if (v < 0.0) {
            if (v < -1e-7) {
                throw Error(errc::infeasible,
                            std::string("internal: negative ") + what + " component");
            }
            v = 0.0;
        }
    }
    return values;
}

}  // namespace

const char* weight_kind_name(WeightKind kind) noexcept {
    return kind == WeightKind::supporting ? "supporting" : "covering";
}

LpProblem build_problem(FunctionSet set, WeightKind kind) {
    const Sense sense = kind == WeightKind::supporting ? Sense::maximize : Sense::minimize;
    return LpProblem{kind, std::move(set), sense};
}

LpSolution solve_lp(const LpProblem& problem) {
    const std::size_t n = problem.set.domain_size();
    const std::size_t m = problem.set.num_members();
    const int max_pivots = 50 * static_cast<int>(n + m + 2);

    Tableau tab(problem);
    tab.load_phase1_objective();
    tab.run_phase(max_pivots);
    if (std::abs(tab.objective_value()) > kPhase1Tol) {
        throw Error(errc::infeasible, "internal: phase 1 failed on a valid function set");
    }
    tab.drive_out_artificial(max_pivots);
    tab.load_phase2_objective(problem.kind);
    tab.run_phase(max_pivots);

    const double alpha =
        tab.variable_value(tab.col_alpha_plus()) - tab.variable_value(tab.col_alpha_minus());
    WeightVector x =
        WeightVector::renormalized(problem.set.domain(), cleaned(tab.x_values(), "primal"));
    WeightVector dual =
        WeightVector::renormalized(problem.set.members(), cleaned(tab.member_duals(), "dual"));

    std::vector<std::string> tight;
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(pairing(x, problem.set.member_function(i)) - alpha) <= kTightTol) {
            tight.push_back(problem.set.members()->label(i));
        }
    }
    return LpSolution{alpha, std::move(x), std::move(dual), std::move(tight), tab.pivots()};
}

}  // namespace relweights
