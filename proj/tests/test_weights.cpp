#include "doctest.h"

#include <cmath>
#include <vector>

#include "relweights/random_instances.hpp"
#include "relweights/weights.hpp"
#include "support/fixtures.hpp"

using namespace relweights;
using namespace relweights::testsupport;

TEST_CASE("supporting_weight closed forms") {
    auto sol = supporting_weight(make_example1(3, 0.1));
    CHECK(sol.alpha == doctest::Approx(0.4).epsilon(1e-9));  // 1/3 + 0.1*(2/3)
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(sol.primal[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }

    auto shared = supporting_weight(make_example2_canonical());
    CHECK(shared.alpha == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(shared.primal[0] == doctest::Approx(1.0).epsilon(1e-9));

    // symmetric 2x2: the dual is forced uniform
    auto sym = supporting_weight(make_example1(2, 0.1));
    CHECK(sym.dual[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sym.dual[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sym.mean_member_norm == doctest::Approx(1.1).epsilon(1e-12));
}

TEST_CASE("covering_weight closed forms") {
    auto shared = covering_weight(make_example2_canonical());
    CHECK(shared.alpha == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(shared.primal[0] == doctest::Approx(0.0));
    CHECK(shared.primal[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(shared.primal[2] == doctest::Approx(0.5).epsilon(1e-9));

    // with V = V_M the covering value coincides with the supporting one
    auto sym = covering_weight(make_example1(2, 0.1));
    CHECK(sym.alpha == doctest::Approx(0.55).epsilon(1e-9));
    CHECK(sym.primal[0] == doctest::Approx(0.5).epsilon(1e-9));

    auto ones = covering_weight(FunctionSet(IndexSet::make({"a", "b", "c", "d"}),
                                            IndexSet::make({"m1", "m2", "m3"}),
                                            std::vector<double>(12, 1.0)));
    CHECK(ones.alpha == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("hat problems delegate through the transpose") {
    auto sym = hat_supporting_weight(make_example1(2, 0.1));
    CHECK(sym.alpha == doctest::Approx(0.55).epsilon(1e-9));
    CHECK(hat_covering_weight(make_example1(2, 0.1)).alpha == doctest::Approx(0.55).epsilon(1e-9));

    auto shared = make_example2_canonical();
    CHECK(hat_supporting_weight(shared).alpha == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(hat_covering_weight(shared).alpha == doctest::Approx(1.0).epsilon(1e-8));
    // hat primals live on the member set
    CHECK(hat_supporting_weight(shared).primal.domain()->labels() ==
          std::vector<std::string>{"m1", "m2"});
}

TEST_CASE("cross-dual equalities on random rectangles") {
    Rng rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        auto set = random_function_set(rng, 5, 3);
        CHECK(std::abs(hat_supporting_weight(set).alpha - covering_weight(set).alpha) <= 1e-8);
        auto set2 = random_function_set(rng, 3, 5);
        CHECK(std::abs(hat_covering_weight(set2).alpha - supporting_weight(set2).alpha) <= 1e-8);
    }
}

TEST_CASE("verify_theorem3 on the fixtures") {
    auto rep = verify_theorem3(make_example2_canonical());
    CHECK(rep.gap <= 1e-10);
    CHECK(rep.gap_covering <= 1e-10);
    CHECK(rep.slackness_violations.empty());

    auto sym = verify_theorem3(make_example1(2, 0.1));
    CHECK(rep.within(kDualityGapTol, kSlacknessTol));
    CHECK(sym.gap == 0.0);  // exact by symmetry
    CHECK(sym.max_violation <= 1e-9);
}

TEST_CASE("verify_theorem3 on random instances") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        auto set = random_function_set(rng, 8, 8);
        auto rep = verify_theorem3(set);
        CHECK(rep.gap <= kDualityGapTol);
        CHECK(rep.gap_covering <= kDualityGapTol);
        CHECK(rep.max_violation <= kSlacknessTol);
        CHECK(rep.within(kDualityGapTol, kSlacknessTol));
        CHECK_FALSE(rep.residuals.empty());
    }
}

TEST_CASE("monotonicity when a member is added") {
    Rng rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        auto set = random_function_set(rng, 5, 5);
        // append one extra random member over the same domain
        const std::size_t n = set.domain_size();
        std::vector<std::string> members(set.members()->labels());
        members.push_back("extra");
        std::vector<double> data(set.data());
        for (std::size_t j = 0; j < n; ++j) data.push_back(rng.next_double());
        auto bigger = FunctionSet(set.domain(), IndexSet::make(std::move(members)),
                                  std::move(data));
        // the min runs over a larger set; the max likewise
        CHECK(supporting_weight(bigger).alpha <= supporting_weight(set).alpha + 1e-9);
        CHECK(covering_weight(bigger).alpha >= covering_weight(set).alpha - 1e-9);
    }
}

TEST_CASE("score guarantees for members") {
    Rng rng(1111);
    for (int trial = 0; trial < 30; ++trial) {
        auto set = random_function_set(rng, 6, 6);
        auto sup = supporting_weight(set);
        auto cov = covering_weight(set);
        for (std::size_t i = 0; i < set.num_members(); ++i) {
            auto m = set.member_function(i);
            CHECK(pairing(sup.primal, m) >= sup.alpha - 1e-9);
            CHECK(pairing(cov.primal, m) <= cov.alpha + 1e-9);
        }
    }
}

TEST_CASE("tight sets describe the binding structure") {
    auto sol = supporting_weight(make_example2_canonical());
    // at the all-mass-on-v0 optimum both members pair to exactly 1
    CHECK(sol.tight_members == std::vector<std::string>{"m1", "m2"});
    // v0 carries the primal weight, so its dual-side constraint is tight
    bool found_v0 = false;
    for (const auto& label : sol.tight_domain) found_v0 = found_v0 || label == "v0";
    CHECK(found_v0);
}
