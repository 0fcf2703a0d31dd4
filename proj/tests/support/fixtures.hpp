#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/simplex.hpp"

namespace relweights::testsupport {

// The near-indicator family: k functions on k points, m_i(v_j) = 1 when
// i == j and epsilon otherwise. Closed forms: both values equal
// 1/k + eps*(1 - 1/k) with the uniform weight optimal for both kinds.
inline FunctionSet make_example1(std::size_t k, double eps) {
    std::vector<std::string> domain, members;
    for (std::size_t j = 0; j < k; ++j) domain.push_back("v" + std::to_string(j + 1));
    for (std::size_t i = 0; i < k; ++i) members.push_back("m" + std::to_string(i + 1));
    std::vector<double> data(k * k, eps);
    for (std::size_t i = 0; i < k; ++i) data[i * k + i] = 1.0;
    return FunctionSet(IndexSet::make(std::move(domain)), IndexSet::make(std::move(members)),
                       std::move(data));
}

inline double example1_alpha(std::size_t k, double eps) {
    const double inv = 1.0 / static_cast<double>(k);
    return inv + eps * (1.0 - inv);
}

// The shared-point family: every member is the indicator of {v0} plus its own
// block of `block_sizes[i]` private points. Supporting optimum puts all mass
// on v0 at value 1; covering optimum avoids v0 entirely at value 1/|M|.
inline FunctionSet make_example2(const std::vector<std::size_t>& block_sizes) {
    std::vector<std::string> domain{"v0"};
    std::vector<std::string> members;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        members.push_back("m" + std::to_string(i + 1));
        for (std::size_t b = 0; b < block_sizes[i]; ++b) {
            domain.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(b + 1));
        }
    }
    const std::size_t n = domain.size();
    std::vector<double> data(block_sizes.size() * n, 0.0);
    std::size_t offset = 1;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        data[i * n] = 1.0;  // v0
        for (std::size_t b = 0; b < block_sizes[i]; ++b) data[i * n + offset + b] = 1.0;
        offset += block_sizes[i];
    }
    return FunctionSet(IndexSet::make(std::move(domain)), IndexSet::make(std::move(members)),
                       std::move(data));
}

// The canonical 3-point instance: V = {v0, a, b}, m1 = (1,1,0), m2 = (1,0,1).
inline FunctionSet make_example2_canonical() {
    return FunctionSet(IndexSet::make({"v0", "a", "b"}), IndexSet::make({"m1", "m2"}),
                       {1.0, 1.0, 0.0, 1.0, 0.0, 1.0});
}

// Shared feasibility checker: x in the simplex within tol, and pairings on
// the alpha side required by the problem kind.
inline bool feasible_solution(const FunctionSet& set, const WeightVector& x, double alpha,
                              WeightKind kind, double tol = 1e-9) {
    double sum = 0.0;
    for (double v : x.values()) {
        if (v < -tol) return false;
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
    for (std::size_t i = 0; i < set.num_members(); ++i) {
        const double p = pairing(x, set.member_function(i));
        if (kind == WeightKind::supporting && p < alpha - tol) return false;
        if (kind == WeightKind::covering && p > alpha + tol) return false;
    }
    return true;
}

}  // namespace relweights::testsupport
