#ifndef ROOMMATES_GEN_HPP
#define ROOMMATES_GEN_HPP

#include <cstdint>

#include "roommates/model.hpp"

namespace roommates {

struct GenParams {
    int n = 0;
    std::uint64_t seed = 0;
    double solo_prob = 0.2;
};

/// Seeded random instance: every ranking is an independent uniform
/// permutation of 1..n (self included at a random position), and the
/// matching is built by shuffling the agents and scanning: each still
/// unpaired agent stays alone with probability solo_prob, otherwise it
/// pairs with the next unpaired agent in shuffle order.
///
/// Determinism: mt19937_64 drives an in-house Fisher-Yates shuffle with
/// rejection-sampled bounds, so identical parameters produce identical
/// instances on every platform and build. Matchings may well contain
/// irrational pairs or unacceptable partners; that is intended coverage.
Instance generate_instance(const GenParams& params);

} // namespace roommates

#endif
