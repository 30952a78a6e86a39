#ifndef ROOMMATES_GRAPH_HPP
#define ROOMMATES_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "roommates/model.hpp"

namespace roommates {

enum class EdgeKind { Special, Normal };
enum class EdgeOrigin { Original, Added };

/// Improvement graph over an instance. Special edges mirror the matching
/// (a self-loop for unmatched agents). A normal edge {i,j} means i and j
/// each strictly prefer the other to their current assignment; a normal
/// self-loop at i means i strictly prefers staying alone. An agent never
/// carries both kinds of self-loop.
struct EfficiencyGraph {
    int n = 0;
    std::vector<int> special_partner;              // [1..n]; == i is a special self-loop
    std::vector<std::uint8_t> normal_self_loop;    // [1..n]
    std::vector<std::vector<int>> normal_neighbors; // [1..n], sorted, irreflexive
    std::vector<std::uint8_t> matrix;              // (n+1)^2, diagonal unused

    bool normal_adjacent(int i, int j) const {
        return matrix[static_cast<std::size_t>(i) * (n + 1) + j] != 0;
    }
    int normal_edge_count() const;
};

/// Builds the improvement graph in O(n^2).
EfficiencyGraph build_graph(const Instance& instance);

/// Self-loop-free rewrite of an EfficiencyGraph. Every unmatched agent i
/// gains a virtual partner i+n, so special edges form a perfect matching
/// on the active vertex set; qualifying non-adjacent pairs (virtual or
/// normal-self-looped endpoints, both qualifying) gain normal edges; all
/// self-loops are dropped. Vertex ids live in 1..2n.
struct ModifiedGraph {
    struct NormalEdge {
        int u, v;
        EdgeOrigin origin;
    };

    int n = 0;                            // agent count; virtual ids are agent+n
    std::vector<std::uint8_t> active;     // [1..2n]
    std::vector<int> special_partner;     // [1..2n], fixed-point-free on active vertices
    std::vector<NormalEdge> edges;        // normal edges; ids stable under deletion
    std::vector<std::uint8_t> edge_live;  // parallel to edges
    std::vector<std::vector<int>> adj;    // [1..2n] -> live normal edge ids
    std::vector<std::uint8_t> matrix;     // (2n+1)^2 live normal adjacency

    bool is_virtual(int v) const { return v > n; }
    bool is_active(int v) const {
        return v >= 1 && v <= 2 * n && active[v] != 0;
    }
    bool normal_adjacent(int u, int v) const {
        return matrix[static_cast<std::size_t>(u) * (2 * n + 1) + v] != 0;
    }
    int other_end(int eid, int v) const {
        return edges[eid].u == v ? edges[eid].v : edges[eid].u;
    }
    std::vector<int> vertex_list() const; // active vertices, ascending
    int live_normal_edge_count() const { return live_count_; }

    void add_normal_edge(int u, int v, EdgeOrigin origin);
    void delete_normal_edge(int eid);

    /// Assembles an arbitrary graph in this representation; used for
    /// fixtures and debug tooling. Checks the perfect-matching and
    /// no-self-loop invariants.
    static ModifiedGraph from_parts(int n, std::span<const int> vertices,
                                    std::span<const std::pair<int, int>> special_edges,
                                    std::span<const std::tuple<int, int, EdgeOrigin>> normal_edges);

  private:
    // adj positions of each edge at both endpoints, for O(1) deletion
    std::vector<int> pos_u_, pos_v_;
    int live_count_ = 0;

    friend ModifiedGraph build_modified_graph(const EfficiencyGraph&);
    void init(int n_agents);
};

/// Applies the three construction rules in order: virtual partners for
/// special self-loops, added normal edges between qualifying non-adjacent
/// pairs, self-loop removal. O(n^2).
ModifiedGraph build_modified_graph(const EfficiencyGraph& g);

/// Special kind: the single special partner. Normal kind: sorted normal
/// neighbors. Throws UnknownVertex for inactive ids.
std::vector<int> neighbors(const ModifiedGraph& graph, int v, EdgeKind kind);

// Debug export, DOT-like: special edges doubled (==), normal single (--).
std::string to_dot(const EfficiencyGraph& g);
std::string to_dot(const ModifiedGraph& g);

} // namespace roommates

#endif
