#ifndef ROOMMATES_TESTS_FIXTURES_HPP
#define ROOMMATES_TESTS_FIXTURES_HPP

#include <tuple>
#include <utility>
#include <vector>

#include "roommates/gen.hpp"
#include "roommates/graph.hpp"
#include "roommates/model.hpp"

namespace fixtures {

using roommates::EdgeOrigin;
using roommates::Instance;
using roommates::Matching;
using roommates::ModifiedGraph;
using roommates::PreferenceProfile;

// Shared 4-agent instances. A has one alternating path (self-loops at 2
// and 4), B a single alternating 4-cycle, C only top choices, D an
// irrational pair {1,2}.
inline Instance instance_a() {
    return {PreferenceProfile(4, {{3, 2, 1, 4}, {2, 1, 3, 4}, {1, 4, 3, 2}, {4, 3, 1, 2}}),
            Matching(4, {2, 1, 4, 3})};
}

inline Instance instance_b() {
    return {PreferenceProfile(4, {{3, 2, 1, 4}, {4, 1, 2, 3}, {1, 4, 3, 2}, {2, 3, 4, 1}}),
            Matching(4, {2, 1, 4, 3})};
}

inline Instance instance_c() {
    return {PreferenceProfile(4, {{2, 1, 3, 4}, {1, 2, 3, 4}, {4, 3, 1, 2}, {3, 4, 1, 2}}),
            Matching(4, {2, 1, 4, 3})};
}

inline Instance instance_d() {
    return {PreferenceProfile(4, {{1, 2, 3, 4}, {2, 1, 3, 4}, {4, 3, 1, 2}, {3, 4, 1, 2}}),
            Matching(4, {2, 1, 4, 3})};
}

// E: agent 1 matched to an unacceptable partner, still efficient.
// F: everyone alone while 1 and 2 would rather pair up.
inline Instance instance_e() {
    return {PreferenceProfile(3, {{1, 2, 3}, {1, 2, 3}, {3, 1, 2}}), Matching(3, {2, 1, 3})};
}

inline Instance instance_f() {
    return {PreferenceProfile(3, {{2, 1, 3}, {1, 2, 3}, {3, 1, 2}}), Matching(3, {1, 2, 3})};
}

// The six-vertex block-decomposition example: three special pairs, one
// four-vertex block {1,2,4,8} hanging off cut vertices 1 and 4.
inline ModifiedGraph figure2_graph() {
    std::vector<int> vertices{1, 2, 3, 4, 7, 8};
    std::vector<std::pair<int, int>> specials{{1, 3}, {4, 7}, {2, 8}};
    std::vector<std::tuple<int, int, EdgeOrigin>> normals{
        {1, 8, EdgeOrigin::Original}, {1, 4, EdgeOrigin::Original}, {2, 4, EdgeOrigin::Original}};
    return ModifiedGraph::from_parts(8, vertices, specials, normals);
}

inline Instance random_instance(int n, std::uint64_t seed, double solo_prob = 0.2) {
    return roommates::generate_instance({n, seed, solo_prob});
}

} // namespace fixtures

#endif
