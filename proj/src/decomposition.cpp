#include "roommates/decomposition.hpp"

#include <algorithm>
#include <string>

namespace roommates {

bool is_trivial(const Block& block) {
    return block.vertices.size() == 2;
}

namespace {

struct Frame {
    int v;
    int parent_vertex;
    int parent_eid;
    std::size_t next; // cursor into adj[v]
};

} // namespace

Decomposition biconnected_components(int max_vertex, std::span<const int> vertices,
                                     std::span<const DecompEdge> edges) {
    Decomposition d;
    d.blocks_of_vertex.assign(max_vertex + 1, {});
    d.component_of_vertex.assign(max_vertex + 1, -1);
    d.block_of_edge.assign(edges.size(), -1);

    // adjacency as (neighbor, edge id), sorted for deterministic visit order
    std::vector<std::vector<std::pair<int, int>>> adj(max_vertex + 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].u == edges[e].v)
            raise(Errc::SelfLoopPresent, "self-loop at vertex " + std::to_string(edges[e].u));
        adj[edges[e].u].emplace_back(edges[e].v, static_cast<int>(e));
        adj[edges[e].v].emplace_back(edges[e].u, static_cast<int>(e));
    }
    for (int v : vertices)
        std::sort(adj[v].begin(), adj[v].end());

    std::vector<int> roots(vertices.begin(), vertices.end());
    std::sort(roots.begin(), roots.end());

    std::vector<int> disc(max_vertex + 1, 0), low(max_vertex + 1, 0);
    std::vector<Frame> stack;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> raw_blocks; // edge-id lists
    int timer = 0;

    for (int root : roots) {
        if (disc[root] != 0)
            continue;
        int comp = d.component_count++;
        disc[root] = low[root] = ++timer;
        d.component_of_vertex[root] = comp;
        stack.push_back({root, 0, -1, 0});

        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, eid] = adj[f.v][f.next++];
                if (eid == f.parent_eid)
                    continue;
                if (disc[w] == 0) {
                    edge_stack.push_back(eid);
                    disc[w] = low[w] = ++timer;
                    d.component_of_vertex[w] = comp;
                    stack.push_back({w, f.v, eid, 0});
                } else if (disc[w] < disc[f.v]) { // back edge
                    edge_stack.push_back(eid);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                // disc[w] > disc[v]: already collected from w's side
            } else {
                Frame done = f;
                stack.pop_back();
                if (done.parent_eid < 0)
                    continue; // root; children popped all its blocks
                low[done.parent_vertex] = std::min(low[done.parent_vertex], low[done.v]);
                if (low[done.v] >= disc[done.parent_vertex]) {
                    // everything pushed since the tree edge forms one block
                    std::vector<int> block;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == done.parent_eid)
                            break;
                    }
                    raw_blocks.push_back(std::move(block));
                }
            }
        }
    }

    // canonical order: by smallest contained edge id
    for (auto& b : raw_blocks)
        std::sort(b.begin(), b.end());
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    d.blocks.reserve(raw_blocks.size());
    for (auto& ids : raw_blocks) {
        Block blk;
        blk.edge_ids = std::move(ids);
        for (int e : blk.edge_ids) {
            blk.edges.push_back(edges[e]);
            blk.vertices.push_back(edges[e].u);
            blk.vertices.push_back(edges[e].v);
        }
        std::sort(blk.vertices.begin(), blk.vertices.end());
        blk.vertices.erase(std::unique(blk.vertices.begin(), blk.vertices.end()),
                           blk.vertices.end());
        d.blocks.push_back(std::move(blk));
    }
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        for (int e : d.blocks[b].edge_ids)
            d.block_of_edge[e] = static_cast<int>(b);
        for (int v : d.blocks[b].vertices)
            d.blocks_of_vertex[v].push_back(static_cast<int>(b));
    }
    for (int v : roots)
        if (d.blocks_of_vertex[v].size() >= 2)
            d.cut_vertices.push_back(v);
    return d;
}

} // namespace roommates
