#ifndef ROOMMATES_CHECKER_HPP
#define ROOMMATES_CHECKER_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "roommates/decomposition.hpp"
#include "roommates/graph.hpp"
#include "roommates/model.hpp"

namespace roommates {

/// Even-length cycle whose edges alternate kinds: {vertices[0],
/// vertices[1]} is special, the closing edge {vertices.back(),
/// vertices[0]} is normal.
struct AlternatingCycle {
    std::vector<int> vertices;

    EdgeKind edge_kind(std::size_t i) const {
        return i % 2 == 0 ? EdgeKind::Special : EdgeKind::Normal;
    }

    friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

/// Throws InvalidCycle unless the cycle alternates correctly and every
/// edge is live in the graph.
void validate_cycle(const ModifiedGraph& g, const AlternatingCycle& cycle);

/// Exhaustive search for an alternating cycle among the given vertices
/// (rooted pair-DFS, deterministic smallest-id order).
std::optional<AlternatingCycle> find_alternating_cycle(const ModifiedGraph& g,
                                                       std::span<const int> vertices);

enum class Cause { IrrationalPair, AlternatingCycle };

struct Verdict {
    bool efficient = false;
    std::optional<Matching> witness;
    std::optional<Cause> cause;
    std::vector<std::pair<int, int>> irrational_pairs; // set when cause is IrrationalPair
    std::optional<AlternatingCycle> cycle;             // set when cause is AlternatingCycle
    int iterations = 0; // reduce passes; 0 when settled by an irrational pair
};

struct VertexRemoval {
    int vertex;
    int pass; // 1-based reduce pass that evicted the vertex
};

struct ReducedGraph {
    ModifiedGraph graph; // surviving edges only
    std::vector<VertexRemoval> removals;
    std::vector<int> normal_edges_per_pass; // live normal edges entering each pass
    int iterations = 0;
};

/// Repeats (decompose; evict every vertex whose special edge lies outside
/// its block, deleting that block's edges at the vertex) until a pass
/// deletes nothing. Only components that lost edges are re-decomposed.
/// At the fixed point every vertex sits in exactly one block, together
/// with its special edge.
std::pair<ReducedGraph, Decomposition> reduce_to_fixed_point(ModifiedGraph g);

/// Requires a non-trivial block at the fixed point. A cycle always exists
/// there; NoCycleFound signals an implementation bug.
AlternatingCycle extract_alternating_cycle(const ReducedGraph& reduced, const Block& block);

/// Rewires the matching along the cycle: original normal edges become
/// partnerships, added or virtual-touching ones leave their real agents
/// alone; everyone off the cycle keeps their partner. The result Pareto
/// dominates the input when the cycle came from its modified graph.
Matching improve_from_cycle(const Matching& matching, const AlternatingCycle& cycle,
                            const EfficiencyGraph& g);

/// Dissolves every listed pair; both members end up alone.
Matching improve_from_irrational(const Matching& matching,
                                 std::span<const std::pair<int, int>> pairs);

/// Decides efficiency. Pipeline: irrational pairs, then graph
/// construction, iterative block decomposition, and cycle extraction on
/// a surviving non-trivial block. O(n^2) on typical instances.
Verdict check(const Instance& instance);

} // namespace roommates

#endif
