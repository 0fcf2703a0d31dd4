#pragma once

#include <cstdint>
#include <random>

#include "relweights/core.hpp"

namespace relweights {

/// Seeded generator used for reproducible random instances. Draws raw
/// mt19937_64 output only, so sequences do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n).
    std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

private:
    std::mt19937_64 gen_;
};

/// A function set with |M| uniform in [1, max_members], |V| uniform in
/// [1, max_domain], entries uniform in [0, 1), labels m1.., v1...
FunctionSet random_function_set(Rng& rng, std::size_t max_members, std::size_t max_domain);

}  // namespace relweights
