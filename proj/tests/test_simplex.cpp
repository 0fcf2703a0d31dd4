#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relweights/oracle.hpp"
#include "relweights/random_instances.hpp"
#include "relweights/simplex.hpp"
#include "support/fixtures.hpp"

using namespace relweights;
using namespace relweights::testsupport;

TEST_CASE("build_problem encodes the two shapes") {
    auto set = make_example1(2, 0.1);
    auto sup = build_problem(set, WeightKind::supporting);
    CHECK(sup.sense == Sense::maximize);
    CHECK(sup.num_variables() == 3);  // x_a, x_b, alpha
    CHECK(sup.num_equalities() == 1);
    CHECK(sup.num_inequalities() == 2);

    auto cov = build_problem(set, WeightKind::covering);
    CHECK(cov.sense == Sense::minimize);
    CHECK(cov.num_variables() == 3);

    auto single = build_problem(
        FunctionSet(IndexSet::make({"a", "b"}), IndexSet::make({"m"}), {2.0, 0.0}),
        WeightKind::supporting);
    CHECK(single.num_inequalities() == 1);
}

TEST_CASE("solve_lp: near-indicator instance") {
    auto sol = solve_lp(build_problem(make_example1(2, 0.1), WeightKind::supporting));
    CHECK(sol.alpha == doctest::Approx(0.55).epsilon(1e-9));
    CHECK(sol.x[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.x[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.tight_set.size() == 2);  // both constraints bind by symmetry
}

TEST_CASE("solve_lp: shared-point instance, both kinds") {
    auto set = make_example2_canonical();
    auto sup = solve_lp(build_problem(set, WeightKind::supporting));
    CHECK(sup.alpha == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sup.x[0] == doctest::Approx(1.0).epsilon(1e-9));  // all mass on v0

    auto cov = solve_lp(build_problem(set, WeightKind::covering));
    CHECK(cov.alpha == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(cov.x[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cov.x[1] == doctest::Approx(0.5).epsilon(1e-9));  // unique: singleton blocks
    CHECK(cov.x[2] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("solve_lp: single function picks extreme coordinates") {
    auto set = FunctionSet(IndexSet::make({"a", "b"}), IndexSet::make({"m"}), {2.0, 0.0});
    auto sup = solve_lp(build_problem(set, WeightKind::supporting));
    CHECK(sup.alpha == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(sup.x[0] == doctest::Approx(1.0));

    auto cov = solve_lp(build_problem(set, WeightKind::covering));
    CHECK(cov.alpha == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cov.x[1] == doctest::Approx(1.0));
}

TEST_CASE("solve_lp matches the enumeration oracle on random instances") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto set = random_function_set(rng, 4, 4);
        auto sup = solve_lp(build_problem(set, WeightKind::supporting));
        CHECK(std::abs(sup.alpha - oracle_maxmin(set).alpha) <= 1e-6);
        auto cov = solve_lp(build_problem(set, WeightKind::covering));
        CHECK(std::abs(cov.alpha - oracle_minimax(set).alpha) <= 1e-6);
    }
}

TEST_CASE("solutions are feasible, bounded, and sparse") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        auto set = random_function_set(rng, 7, 7);
        for (WeightKind kind : {WeightKind::supporting, WeightKind::covering}) {
            auto sol = solve_lp(build_problem(set, kind));
            CHECK(feasible_solution(set, sol.x, sol.alpha, kind));
            CHECK(sol.alpha >= 0.0);
            CHECK(sol.alpha <= set.max_entry() + 1e-9);
            // basic-solution support bound
            CHECK(sol.x.support(1e-8).size() <= set.num_members());
            // the dual weight is a valid weight by construction
            double dual_sum = 0.0;
            for (double v : sol.dual.values()) {
                CHECK(v >= 0.0);
                dual_sum += v;
            }
            CHECK(dual_sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("dual weights are optimal for the transposed problem") {
    Rng rng(2028);
    for (int trial = 0; trial < 40; ++trial) {
        auto set = random_function_set(rng, 6, 6);
        // supporting dual: covering weight for the columns, at the same value
        auto sup = solve_lp(build_problem(set, WeightKind::supporting));
        double worst = 0.0;
        for (std::size_t v = 0; v < set.domain_size(); ++v) {
            worst = std::max(worst, pairing(set.column_function(v), sup.dual));
        }
        CHECK(worst == doctest::Approx(sup.alpha).epsilon(1e-7));
        // covering dual: supporting weight for the columns
        auto cov = solve_lp(build_problem(set, WeightKind::covering));
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < set.domain_size(); ++v) {
            best = std::min(best, pairing(set.column_function(v), cov.dual));
        }
        CHECK(best == doctest::Approx(cov.alpha).epsilon(1e-7));
    }
}

TEST_CASE("scale equivariance is exact for power-of-two factors") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto set = random_function_set(rng, 5, 5);
        std::vector<double> doubled(set.data());
        for (double& v : doubled) v *= 2.0;
        auto set2 = FunctionSet(set.domain(), set.members(), std::move(doubled));
        for (WeightKind kind : {WeightKind::supporting, WeightKind::covering}) {
            auto a = solve_lp(build_problem(set, kind));
            auto b = solve_lp(build_problem(set2, kind));
            CHECK(b.alpha == 2.0 * a.alpha);  // exact: same pivots, scaled arithmetic
            for (std::size_t i = 0; i < a.x.size(); ++i) {
                CHECK(b.x[i] == a.x[i]);
            }
        }
    }
}

TEST_CASE("permutation equivariance") {
    Rng rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        auto set = random_function_set(rng, 5, 5);
        const std::size_t n = set.domain_size();
        // reversal permutation of the domain
        std::vector<std::string> labels(set.domain()->labels());
        std::reverse(labels.begin(), labels.end());
        std::vector<double> data(set.num_members() * n);
        for (std::size_t i = 0; i < set.num_members(); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                data[i * n + (n - 1 - j)] = set.at(i, j);
            }
        }
        auto permuted = FunctionSet(IndexSet::make(std::move(labels)), set.members(),
                                    std::move(data));
        for (WeightKind kind : {WeightKind::supporting, WeightKind::covering}) {
            auto a = solve_lp(build_problem(set, kind));
            auto b = solve_lp(build_problem(permuted, kind));
            CHECK(std::abs(a.alpha - b.alpha) <= 1e-12);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(b.x[n - 1 - j] == doctest::Approx(a.x[j]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("degenerate corners") {
    // zero matrix: both values are 0
    auto zero = FunctionSet(IndexSet::make({"a", "b"}), IndexSet::make({"m"}), {0.0, 0.0});
    auto sup = solve_lp(build_problem(zero, WeightKind::supporting));
    CHECK(sup.alpha == doctest::Approx(0.0));
    auto cov = solve_lp(build_problem(zero, WeightKind::covering));
    CHECK(cov.alpha == doctest::Approx(0.0));

    // 1x1
    auto one = FunctionSet(IndexSet::make({"a"}), IndexSet::make({"m"}), {3.0});
    CHECK(solve_lp(build_problem(one, WeightKind::supporting)).alpha == doctest::Approx(3.0));
    CHECK(solve_lp(build_problem(one, WeightKind::covering)).alpha == doctest::Approx(3.0));

    // all-ones: every pairing is 1 for any weight
    auto ones = FunctionSet(IndexSet::make({"a", "b", "c", "d"}),
                            IndexSet::make({"m1", "m2", "m3"}), std::vector<double>(12, 1.0));
    CHECK(solve_lp(build_problem(ones, WeightKind::supporting)).alpha == doctest::Approx(1.0));
    CHECK(solve_lp(build_problem(ones, WeightKind::covering)).alpha == doctest::Approx(1.0));
}
