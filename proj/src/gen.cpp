#include "roommates/gen.hpp"

#include <limits>
#include <random>

namespace roommates {

namespace {

// Unbiased draw from [0, bound) via rejection; std::uniform_int_distribution
// is implementation-defined, mt19937_64 itself is not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool bernoulli(std::mt19937_64& rng, double p) {
    // 53 uniform bits against the threshold; p = 1.0 always fires.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

void shuffle_ids(std::mt19937_64& rng, std::vector<int>& ids) {
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[uniform_below(rng, i)]);
}

} // namespace

Instance generate_instance(const GenParams& params) {
    if (params.n < 3)
        raise(Errc::BadArgs, "generator needs n >= 3");
    if (params.solo_prob < 0.0 || params.solo_prob > 1.0)
        raise(Errc::BadArgs, "solo probability must lie in [0, 1]");

    const int n = params.n;
    std::mt19937_64 rng(params.seed);

    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].resize(n);
        for (int j = 0; j < n; ++j)
            rows[i][j] = j + 1;
        shuffle_ids(rng, rows[i]);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i + 1;
    shuffle_ids(rng, order);

    std::vector<int> partner(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        int agent = order[k];
        if (partner[agent] != 0)
            continue;
        if (bernoulli(rng, params.solo_prob)) {
            partner[agent] = agent;
            continue;
        }
        int mate = 0;
        for (int j = k + 1; j < n; ++j) {
            if (partner[order[j]] == 0) {
                mate = order[j];
                break;
            }
        }
        if (mate == 0) {
            partner[agent] = agent; // nobody left to pair with
        } else {
            partner[agent] = mate;
            partner[mate] = agent;
        }
    }

    return Instance(PreferenceProfile(n, std::move(rows)),
                    Matching(n, std::vector<int>(partner.begin() + 1, partner.end())));
}

} // namespace roommates
