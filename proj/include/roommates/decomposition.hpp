#ifndef ROOMMATES_DECOMPOSITION_HPP
#define ROOMMATES_DECOMPOSITION_HPP

#include <span>
#include <vector>

#include "roommates/graph.hpp"

namespace roommates {

struct DecompEdge {
    int u, v;
    EdgeKind kind;
};

/// A maximal subgraph without a cut-vertex. Trivial blocks are exactly
/// the two-vertex ones (a single edge).
struct Block {
    std::vector<int> vertices;      // sorted
    std::vector<int> edge_ids;      // ascending, indices into the input edge list
    std::vector<DecompEdge> edges;  // materialized, in edge_ids order
};

bool is_trivial(const Block& block);

struct Decomposition {
    std::vector<Block> blocks;                      // canonical order: by smallest edge id
    std::vector<int> cut_vertices;                  // sorted; vertices in >= 2 blocks
    std::vector<int> block_of_edge;                 // edge id -> index into blocks
    std::vector<std::vector<int>> blocks_of_vertex; // [0..max_vertex]
    std::vector<int> component_of_vertex;           // [0..max_vertex], -1 when absent
    int component_count = 0;
};

/// Classical linear-time block decomposition: single-pass lowpoint DFS
/// with an edge stack, iterative so deep graphs cannot overflow the call
/// stack. Vertex ids must lie in 1..max_vertex; the edge list must be
/// loop-free (SelfLoopPresent otherwise). Disconnected inputs are handled
/// per component; isolated vertices end up in no block.
Decomposition biconnected_components(int max_vertex, std::span<const int> vertices,
                                     std::span<const DecompEdge> edges);

} // namespace roommates

#endif
