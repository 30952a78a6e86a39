#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "roommates/checker.hpp"
#include "roommates/oracle.hpp"

using namespace roommates;

namespace {

std::set<std::vector<int>> final_block_vertex_sets(const Decomposition& d) {
    std::set<std::vector<int>> out;
    for (const auto& b : d.blocks)
        out.insert(b.vertices);
    return out;
}

bool all_trivial(const Decomposition& d) {
    return std::all_of(d.blocks.begin(), d.blocks.end(),
                       [](const Block& b) { return is_trivial(b); });
}

} // namespace

TEST_CASE("check: instance C is efficient") {
    auto v = check(fixtures::instance_c());
    CHECK(v.efficient);
    CHECK_FALSE(v.witness.has_value());
    CHECK_FALSE(v.cause.has_value());
}

TEST_CASE("check: instance A yields the frozen witness") {
    auto inst = fixtures::instance_a();
    auto v = check(inst);
    REQUIRE_FALSE(v.efficient);
    CHECK(v.cause == Cause::AlternatingCycle);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->line() == std::vector<int>{3, 2, 1, 4});
    CHECK(pareto_dominates(inst.profile, *v.witness, inst.matching));
    // the witness itself is efficient for this instance
    auto [eff, dom] = oracle::oracle_efficient({inst.profile, *v.witness});
    CHECK(eff);
}

TEST_CASE("check: instance B yields the four-cycle witness") {
    auto inst = fixtures::instance_b();
    auto v = check(inst);
    REQUIRE_FALSE(v.efficient);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->line() == std::vector<int>{3, 4, 1, 2});
    REQUIRE(v.cycle.has_value());
    CHECK(v.cycle->vertices.size() == 4);
}

TEST_CASE("check: instance D fails on the irrational pair") {
    auto inst = fixtures::instance_d();
    auto v = check(inst);
    REQUIRE_FALSE(v.efficient);
    CHECK(v.cause == Cause::IrrationalPair);
    CHECK(v.irrational_pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(v.iterations == 0);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->line() == std::vector<int>{1, 2, 4, 3});
}

TEST_CASE("check: instance E is efficient despite the unacceptable partner") {
    auto v = check(fixtures::instance_e());
    CHECK(v.efficient);
    CHECK(v.iterations == 2); // one eviction pass, one clean pass
}

TEST_CASE("check: instance F pairs up the two unmatched agents") {
    auto inst = fixtures::instance_f();
    auto v = check(inst);
    REQUIRE_FALSE(v.efficient);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->line() == std::vector<int>{2, 1, 3});
    REQUIRE(v.cycle.has_value());
    CHECK(v.cycle->vertices == std::vector<int>{1, 4, 5, 2});
}

TEST_CASE("reduce: figure-2 graph loses vertices 1 and 4 from the big block") {
    auto [reduced, decomp] = reduce_to_fixed_point(fixtures::figure2_graph());

    CHECK(reduced.iterations == 2);
    CHECK(reduced.normal_edges_per_pass == std::vector<int>{3, 0});
    std::set<int> pass1;
    for (const auto& r : reduced.removals)
        if (r.pass == 1)
            pass1.insert(r.vertex);
    CHECK(pass1 == std::set<int>{1, 4});
    CHECK(reduced.graph.live_normal_edge_count() == 0);

    CHECK(all_trivial(decomp));
    CHECK(final_block_vertex_sets(decomp) ==
          std::set<std::vector<int>>{{1, 3}, {4, 7}, {2, 8}});
    CHECK(decomp.cut_vertices.empty());
}

TEST_CASE("reduce: instance B's cycle is already at a fixed point") {
    auto [reduced, decomp] = reduce_to_fixed_point(
        build_modified_graph(build_graph(fixtures::instance_b())));
    CHECK(reduced.iterations == 1);
    CHECK(reduced.removals.empty());
    REQUIRE(decomp.blocks.size() == 1);
    CHECK(decomp.blocks[0].vertices == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(is_trivial(decomp.blocks[0]));
}

TEST_CASE("reduce: disjoint special pairs are immediately trivial") {
    auto [reduced, decomp] = reduce_to_fixed_point(
        build_modified_graph(build_graph(fixtures::instance_c())));
    CHECK(reduced.iterations == 1);
    CHECK(all_trivial(decomp));
    CHECK(decomp.blocks.size() == 2);
}

TEST_CASE("extract: instance B block gives an alternating 4-cycle") {
    auto [reduced, decomp] = reduce_to_fixed_point(
        build_modified_graph(build_graph(fixtures::instance_b())));
    auto cycle = extract_alternating_cycle(reduced, decomp.blocks[0]);
    CHECK(cycle.vertices == std::vector<int>{1, 2, 4, 3});
    validate_cycle(reduced.graph, cycle); // must not throw
}

TEST_CASE("extract: trivial block violates the precondition") {
    auto [reduced, decomp] = reduce_to_fixed_point(
        build_modified_graph(build_graph(fixtures::instance_c())));
    CHECK_THROWS_AS(extract_alternating_cycle(reduced, decomp.blocks[0]),
                    std::invalid_argument);
}

TEST_CASE("improve_from_cycle on the fixtures") {
    SUBCASE("instance B: both normal edges original") {
        auto inst = fixtures::instance_b();
        auto g = build_graph(inst);
        AlternatingCycle cycle{{1, 2, 4, 3}};
        auto improved = improve_from_cycle(inst.matching, cycle, g);
        CHECK(improved.line() == std::vector<int>{3, 4, 1, 2});
        CHECK(pareto_dominates(inst.profile, improved, inst.matching));
    }
    SUBCASE("instance F: virtual-virtual edge touches no agent") {
        auto inst = fixtures::instance_f();
        auto g = build_graph(inst);
        AlternatingCycle cycle{{1, 4, 5, 2}};
        auto improved = improve_from_cycle(inst.matching, cycle, g);
        CHECK(improved.line() == std::vector<int>{2, 1, 3});
    }
    SUBCASE("instance A: added self-loop edge leaves both agents alone") {
        auto inst = fixtures::instance_a();
        auto g = build_graph(inst);
        AlternatingCycle cycle{{2, 1, 3, 4}}; // 2-S-1, 1-N-3, 3-S-4, 4-N-2 (added)
        auto improved = improve_from_cycle(inst.matching, cycle, g);
        CHECK(improved.line() == std::vector<int>{3, 2, 1, 4});
        CHECK(pareto_dominates(inst.profile, improved, inst.matching));
    }
    SUBCASE("garbage cycles are rejected") {
        auto inst = fixtures::instance_b();
        auto g = build_graph(inst);
        CHECK_THROWS_AS(improve_from_cycle(inst.matching, AlternatingCycle{{1, 2, 3, 4}}, g),
                        Error); // 2-3 is no normal edge, 3-4 wrong kind slot
        CHECK_THROWS_AS(improve_from_cycle(inst.matching, AlternatingCycle{{1, 2}}, g), Error);
    }
}

TEST_CASE("improve_from_irrational") {
    auto inst = fixtures::instance_d();
    std::vector<std::pair<int, int>> pairs{{1, 2}};
    auto improved = improve_from_irrational(inst.matching, pairs);
    CHECK(improved.line() == std::vector<int>{1, 2, 4, 3});

    auto two = Matching(6, {2, 1, 4, 3, 5, 6});
    std::vector<std::pair<int, int>> both{{1, 2}, {3, 4}};
    CHECK(improve_from_irrational(two, both).line() == std::vector<int>{1, 2, 3, 4, 5, 6});

    CHECK_THROWS_AS(improve_from_irrational(two, {}), std::invalid_argument);
}

TEST_CASE("checker agrees with the exhaustive oracle on random instances") {
    int inefficient_seen = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        double p = seed % 3 == 0 ? 0.0 : (seed % 3 == 1 ? 0.2 : 1.0);
        auto inst = fixtures::random_instance(n, 5000 + seed, p);
        auto verdict = check(inst);
        auto [eff, dom] = oracle::oracle_efficient(inst);
        REQUIRE(verdict.efficient == eff);
        if (!verdict.efficient) {
            ++inefficient_seen;
            REQUIRE(verdict.witness.has_value());
            CHECK(pareto_dominates(inst.profile, *verdict.witness, inst.matching));
        }
    }
    CHECK(inefficient_seen > 0);
}

TEST_CASE("reduction is monotone, idempotent, and characterizes the fixed point") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        auto inst = fixtures::random_instance(n, 6000 + seed, seed % 2 ? 0.4 : 0.0);
        auto g2 = build_modified_graph(build_graph(inst));
        auto [reduced, decomp] = reduce_to_fixed_point(g2);

        // strict decrease on every non-final pass
        for (std::size_t i = 0; i + 1 < reduced.normal_edges_per_pass.size(); ++i)
            CHECK(reduced.normal_edges_per_pass[i] > reduced.normal_edges_per_pass[i + 1]);
        CHECK(reduced.iterations == static_cast<int>(reduced.normal_edges_per_pass.size()));

        // rerunning on the output deletes nothing
        auto [again, decomp2] = reduce_to_fixed_point(reduced.graph);
        CHECK(again.iterations == 1);
        CHECK(again.removals.empty());
        CHECK(again.graph.live_normal_edge_count() == reduced.graph.live_normal_edge_count());

        // fixed point: every vertex in exactly one block, and together
        // with its special edge; trivial blocks are special pairs
        for (int v : reduced.graph.vertex_list()) {
            REQUIRE(decomp.blocks_of_vertex[v].size() == 1);
            const auto& blk = decomp.blocks[decomp.blocks_of_vertex[v][0]];
            bool has_special = false;
            for (const auto& e : blk.edges)
                if (e.kind == EdgeKind::Special &&
                    (e.u == v || e.v == v) &&
                    (e.u == reduced.graph.special_partner[v] ||
                     e.v == reduced.graph.special_partner[v]))
                    has_special = true;
            CHECK(has_special);
        }
        for (const auto& blk : decomp.blocks)
            if (is_trivial(blk)) {
                REQUIRE(blk.edges.size() == 1);
                CHECK(blk.edges[0].kind == EdgeKind::Special);
            }

        // verdict rule (no-irrational instances only)
        if (find_irrational_pairs(inst).empty()) {
            bool trivial = all_trivial(decomp);
            auto [eff, dom] = oracle::oracle_efficient(inst);
            CHECK(trivial == eff);
        }
    }
}
