#include "singideal/random.hpp"

namespace singideal {

Rational RationalSampler::next() {
    const auto num = static_cast<long>(below(19)) - 9;
    const auto den = static_cast<long>(below(4)) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

GroupoidFunction random_function(const FiniteGroupoid& g, RationalSampler& rng) {
    GroupoidFunction f = zero_function(g);
    for (auto& v : f.values) v = rng.next();
    return f;
}

GroupAlgebraElement random_element(std::size_t order, RationalSampler& rng) {
    GroupAlgebraElement a;
    a.coeffs.reserve(order);
    for (std::size_t i = 0; i < order; ++i) a.coeffs.push_back(rng.next());
    return a;
}

}  // namespace singideal
