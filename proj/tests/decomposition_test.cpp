#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "roommates/decomposition.hpp"

using namespace roommates;

namespace {

std::vector<int> block_vertices(const Decomposition& d, std::size_t b) {
    return d.blocks[b].vertices;
}

std::set<std::vector<int>> block_vertex_sets(const Decomposition& d) {
    std::set<std::vector<int>> out;
    for (const auto& b : d.blocks)
        out.insert(b.vertices);
    return out;
}

struct TestGraph {
    int max_vertex;
    std::vector<int> vertices;
    std::vector<DecompEdge> edges;
};

TestGraph random_graph(std::mt19937_64& rng, int n, int target_edges) {
    TestGraph g;
    g.max_vertex = n;
    for (int v = 1; v <= n; ++v)
        g.vertices.push_back(v);
    std::set<std::pair<int, int>> used;
    for (int t = 0; t < target_edges * 3 && static_cast<int>(g.edges.size()) < target_edges;
         ++t) {
        int u = 1 + static_cast<int>(rng() % n);
        int v = 1 + static_cast<int>(rng() % n);
        if (u == v)
            continue;
        auto key = std::minmax(u, v);
        if (used.insert({key.first, key.second}).second)
            g.edges.push_back({key.first, key.second,
                               rng() % 2 == 0 ? EdgeKind::Special : EdgeKind::Normal});
    }
    return g;
}

// Exhaustive simple-path enumeration between two vertices.
void all_simple_paths(const std::vector<std::vector<int>>& adj, int cur, int goal,
                      std::vector<int>& path, std::vector<char>& on_path,
                      std::vector<std::vector<int>>& out) {
    if (cur == goal) {
        out.push_back(path);
        return;
    }
    for (int w : adj[cur]) {
        if (on_path[w])
            continue;
        on_path[w] = 1;
        path.push_back(w);
        all_simple_paths(adj, w, goal, path, on_path, out);
        path.pop_back();
        on_path[w] = 0;
    }
}

bool on_common_cycle_or_adjacent(const TestGraph& g, int u, int v) {
    std::vector<std::vector<int>> adj(g.max_vertex + 1);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto& e : g.edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
            return true;
    std::vector<std::vector<int>> paths;
    std::vector<int> path{u};
    std::vector<char> on_path(g.max_vertex + 1, 0);
    on_path[u] = 1;
    all_simple_paths(adj, u, v, path, on_path, paths);
    for (std::size_t a = 0; a < paths.size(); ++a) {
        for (std::size_t b = a + 1; b < paths.size(); ++b) {
            // internally disjoint pair of paths = a simple cycle through u and v
            std::set<int> inner(paths[a].begin() + 1, paths[a].end() - 1);
            bool disjoint = true;
            for (std::size_t i = 1; i + 1 < paths[b].size(); ++i)
                if (inner.count(paths[b][i]))
                    disjoint = false;
            if (disjoint && (paths[a].size() > 2 || paths[b].size() > 2))
                return true;
        }
    }
    return false;
}

int component_count(const TestGraph& g, int skip = 0) {
    std::vector<std::vector<int>> adj(g.max_vertex + 1);
    for (const auto& e : g.edges) {
        if (e.u == skip || e.v == skip)
            continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(g.max_vertex + 1, 0);
    int comps = 0;
    for (int root : g.vertices) {
        if (root == skip || seen[root])
            continue;
        ++comps;
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

} // namespace

TEST_CASE("figure-2 shaped graph: three blocks, cut vertices 1 and 4") {
    std::vector<int> vertices{1, 2, 3, 4, 7, 8};
    std::vector<DecompEdge> edges{
        {1, 3, EdgeKind::Special}, {4, 7, EdgeKind::Special}, {2, 8, EdgeKind::Special},
        {1, 8, EdgeKind::Normal},  {1, 4, EdgeKind::Normal},  {2, 4, EdgeKind::Normal}};
    auto d = biconnected_components(8, vertices, edges);

    CHECK(d.blocks.size() == 3);
    CHECK(block_vertex_sets(d) == std::set<std::vector<int>>{
                                      {1, 3}, {4, 7}, {1, 2, 4, 8}});
    CHECK(d.cut_vertices == std::vector<int>{1, 4});
    CHECK(d.component_count == 1);

    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        CHECK(is_trivial(d.blocks[b]) == (block_vertices(d, b).size() == 2));
}

TEST_CASE("single edge forms one trivial block") {
    std::vector<int> vertices{3, 9};
    std::vector<DecompEdge> edges{{3, 9, EdgeKind::Normal}};
    auto d = biconnected_components(10, vertices, edges);
    REQUIRE(d.blocks.size() == 1);
    CHECK(is_trivial(d.blocks[0]));
    CHECK(d.cut_vertices.empty());
}

TEST_CASE("triangle is one non-trivial block") {
    std::vector<int> vertices{1, 2, 3};
    std::vector<DecompEdge> edges{
        {1, 2, EdgeKind::Normal}, {2, 3, EdgeKind::Normal}, {1, 3, EdgeKind::Normal}};
    auto d = biconnected_components(3, vertices, edges);
    REQUIRE(d.blocks.size() == 1);
    CHECK_FALSE(is_trivial(d.blocks[0]));
    CHECK(d.blocks[0].vertices == std::vector<int>{1, 2, 3});
    CHECK(d.cut_vertices.empty());
}

TEST_CASE("self-loops are rejected") {
    std::vector<int> vertices{1, 2};
    std::vector<DecompEdge> edges{{1, 1, EdgeKind::Normal}};
    CHECK_THROWS_AS(biconnected_components(2, vertices, edges), Error);
}

TEST_CASE("every edge lands in exactly one block") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 10));
        auto d = biconnected_components(g.max_vertex, g.vertices, g.edges);
        std::vector<int> seen(g.edges.size(), 0);
        for (const auto& b : d.blocks)
            for (int e : b.edge_ids)
                ++seen[e];
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            CHECK(seen[e] == 1);
            CHECK(d.block_of_edge[e] >= 0);
        }
    }
}

TEST_CASE("two vertices share a block iff adjacent or on a common cycle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 8));
        auto d = biconnected_components(g.max_vertex, g.vertices, g.edges);
        for (int u = 1; u <= g.max_vertex; ++u) {
            for (int v = u + 1; v <= g.max_vertex; ++v) {
                bool share = false;
                for (int b : d.blocks_of_vertex[u])
                    for (int b2 : d.blocks_of_vertex[v])
                        if (b == b2)
                            share = true;
                CHECK(share == on_common_cycle_or_adjacent(g, u, v));
            }
        }
    }
}

TEST_CASE("cut vertices are exactly the component splitters") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 9));
        auto d = biconnected_components(g.max_vertex, g.vertices, g.edges);
        int base = component_count(g);
        for (int v : g.vertices) {
            bool is_cut = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
            CHECK(is_cut == (component_count(g, v) > base));
        }
    }
}

TEST_CASE("block order is canonical and repeatable") {
    std::mt19937_64 rng(17);
    auto g = random_graph(rng, 9, 11);
    auto d1 = biconnected_components(g.max_vertex, g.vertices, g.edges);
    auto d2 = biconnected_components(g.max_vertex, g.vertices, g.edges);
    REQUIRE(d1.blocks.size() == d2.blocks.size());
    for (std::size_t b = 0; b < d1.blocks.size(); ++b) {
        CHECK(d1.blocks[b].vertices == d2.blocks[b].vertices);
        CHECK(d1.blocks[b].edge_ids == d2.blocks[b].edge_ids);
    }
    for (std::size_t b = 1; b < d1.blocks.size(); ++b)
        CHECK(d1.blocks[b - 1].edge_ids.front() < d1.blocks[b].edge_ids.front());
}
