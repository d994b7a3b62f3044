#pragma once

// Seeded generation of small random rationals: numerators uniform in
// [-9, 9], denominators uniform in {1, 2, 3, 4}, drawn from std::mt19937_64
// by reduction modulo the range size so the stream is identical on every
// platform.

#include <cstdint>
#include <random>

#include "singideal/groupoid.hpp"
#include "singideal/ideal.hpp"

namespace singideal {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    Rational next();
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

GroupoidFunction random_function(const FiniteGroupoid& g, RationalSampler& rng);
GroupAlgebraElement random_element(std::size_t order, RationalSampler& rng);

}  // namespace singideal
