#include "roommates/checker.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace roommates {

void validate_cycle(const ModifiedGraph& g, const AlternatingCycle& cycle) {
    const auto& v = cycle.vertices;
    if (v.size() < 4 || v.size() % 2 != 0)
        raise(Errc::InvalidCycle, "cycle length " + std::to_string(v.size()));
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(Errc::InvalidCycle, "repeated vertex");
    for (int x : v)
        if (!g.is_active(x))
            raise(Errc::InvalidCycle, "vertex " + std::to_string(x) + " not in graph");
    for (std::size_t i = 0; i < v.size(); ++i) {
        int a = v[i];
        int b = v[(i + 1) % v.size()];
        if (cycle.edge_kind(i) == EdgeKind::Special) {
            if (g.special_partner[a] != b)
                raise(Errc::InvalidCycle, "missing special edge " + std::to_string(a) + "-" +
                                              std::to_string(b));
        } else if (!g.normal_adjacent(a, b)) {
            raise(Errc::InvalidCycle, "missing normal edge " + std::to_string(a) + "-" +
                                          std::to_string(b));
        }
    }
}

namespace {

// Rooted DFS over special pairs. The path always looks like
// v1, sp(v1), w, sp(w), ...; closing requires a normal edge back to v1.
struct CycleSearch {
    const ModifiedGraph& g;
    const std::vector<std::vector<int>>& nbrs; // sorted normal neighbors within the set
    std::vector<std::uint8_t>& pair_seen;      // keyed by the pair's smaller endpoint
    std::vector<int> path;
    int start = 0;

    int pair_key(int v) const { return std::min(v, g.special_partner[v]); }

    bool dfs(int u) {
        for (int w : nbrs[u]) {
            if (w == start && path.size() >= 4)
                return true;
            int key = pair_key(w);
            if (pair_seen[key])
                continue;
            pair_seen[key] = 1;
            int wp = g.special_partner[w];
            path.push_back(w);
            path.push_back(wp);
            if (dfs(wp))
                return true;
            path.pop_back();
            path.pop_back();
            pair_seen[key] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<AlternatingCycle> find_alternating_cycle(const ModifiedGraph& g,
                                                       std::span<const int> vertices) {
    std::vector<std::uint8_t> in_set(2 * g.n + 1, 0);
    for (int v : vertices)
        in_set[v] = 1;

    std::vector<std::vector<int>> nbrs(2 * g.n + 1);
    for (int v : vertices) {
        for (int eid : g.adj[v]) {
            int w = g.other_end(eid, v);
            if (in_set[w])
                nbrs[v].push_back(w);
        }
        std::sort(nbrs[v].begin(), nbrs[v].end());
    }

    std::vector<int> roots(vertices.begin(), vertices.end());
    std::sort(roots.begin(), roots.end());

    std::vector<std::uint8_t> pair_seen(2 * g.n + 1, 0);
    for (int r : roots) {
        int rp = g.special_partner[r];
        if (rp < r || !in_set[rp])
            continue; // one attempt per pair, rooted at the smaller endpoint
        std::fill(pair_seen.begin(), pair_seen.end(), 0);
        CycleSearch search{g, nbrs, pair_seen, {r, rp}, r};
        pair_seen[r] = 1;
        if (search.dfs(rp))
            return AlternatingCycle{std::move(search.path)};
    }
    return std::nullopt;
}

namespace {

// Reduce-internal bookkeeping. Edges get one unified id space: special
// edges first (ascending by smaller endpoint), then the graph's normal
// edge records.
struct ReduceState {
    ModifiedGraph& g;
    std::vector<int> special_ueid;   // vertex -> unified id of its special edge
    std::vector<DecompEdge> uedges;  // unified table
    int special_count = 0;

    struct GBlock {
        std::vector<int> vertices;
        std::vector<int> uedge_ids;
        int comp = -1;
        bool alive = true;
    };
    std::vector<GBlock> blocks;
    std::vector<int> block_of_uedge;
    std::vector<int> comp_of; // vertex -> component id (monotone fresh ids)
    int next_comp = 0;

    explicit ReduceState(ModifiedGraph& graph) : g(graph) {
        special_ueid.assign(2 * g.n + 1, -1);
        for (int v = 1; v <= 2 * g.n; ++v) {
            if (!g.is_active(v) || g.special_partner[v] < v)
                continue;
            special_ueid[v] = special_ueid[g.special_partner[v]] =
                static_cast<int>(uedges.size());
            uedges.push_back({v, g.special_partner[v], EdgeKind::Special});
        }
        special_count = static_cast<int>(uedges.size());
        for (const auto& e : g.edges)
            uedges.push_back({e.u, e.v, EdgeKind::Normal});
        block_of_uedge.assign(uedges.size(), -1);
        comp_of.assign(2 * g.n + 1, -1);
    }

    bool uedge_live(int ue) const {
        return ue < special_count || g.edge_live[ue - special_count] != 0;
    }

    // Decomposes the subgraph induced by `verts` (live edges only) and
    // installs the resulting blocks and fresh component ids.
    void decompose(const std::vector<int>& verts) {
        std::vector<DecompEdge> sub;
        std::vector<int> sub_uid;
        for (int v : verts) {
            int ue = special_ueid[v];
            if (uedges[ue].u == v) { // emit each special edge once
                sub.push_back(uedges[ue]);
                sub_uid.push_back(ue);
            }
            for (int eid : g.adj[v]) {
                int w = g.other_end(eid, v);
                if (w > v) {
                    sub.push_back({v, w, EdgeKind::Normal});
                    sub_uid.push_back(special_count + eid);
                }
            }
        }
        Decomposition d = biconnected_components(2 * g.n, verts, sub);
        for (int v : verts)
            comp_of[v] = next_comp + d.component_of_vertex[v];
        for (const auto& blk : d.blocks) {
            GBlock gb;
            gb.vertices = blk.vertices;
            for (int e : blk.edge_ids)
                gb.uedge_ids.push_back(sub_uid[e]);
            std::sort(gb.uedge_ids.begin(), gb.uedge_ids.end());
            gb.comp = comp_of[gb.vertices.front()];
            int id = static_cast<int>(blocks.size());
            for (int ue : gb.uedge_ids)
                block_of_uedge[ue] = id;
            blocks.push_back(std::move(gb));
        }
        next_comp += d.component_count;
    }
};

} // namespace

std::pair<ReducedGraph, Decomposition> reduce_to_fixed_point(ModifiedGraph g) {
    ReducedGraph out;
    out.graph = std::move(g);
    ModifiedGraph& graph = out.graph;

    ReduceState st(graph);
    st.decompose(graph.vertex_list());

    std::vector<int> evict_stamp(2 * graph.n + 1, -1); // block id that evicts the vertex
    std::vector<int> logged_pass(2 * graph.n + 1, 0);

    while (true) {
        ++out.iterations;
        out.normal_edges_per_pass.push_back(graph.live_normal_edge_count());

        std::vector<int> doomed;          // normal edge record ids
        std::vector<int> affected_comps;  // old component ids losing edges
        for (std::size_t b = 0; b < st.blocks.size(); ++b) {
            auto& blk = st.blocks[b];
            if (!blk.alive)
                continue;
            bool any = false;
            for (int v : blk.vertices) {
                if (st.block_of_uedge[st.special_ueid[v]] != static_cast<int>(b)) {
                    evict_stamp[v] = static_cast<int>(b);
                    any = true;
                    if (logged_pass[v] != out.iterations) {
                        logged_pass[v] = out.iterations;
                        out.removals.push_back({v, out.iterations});
                    }
                }
            }
            if (!any)
                continue;
            for (int ue : blk.uedge_ids) {
                if (ue < st.special_count || !st.uedge_live(ue))
                    continue; // special edges are never deleted
                const auto& e = st.uedges[ue];
                if (evict_stamp[e.u] == static_cast<int>(b) ||
                    evict_stamp[e.v] == static_cast<int>(b))
                    doomed.push_back(ue - st.special_count);
            }
        }
        if (doomed.empty())
            break;

        for (int eid : doomed) {
            if (!graph.edge_live[eid])
                continue;
            affected_comps.push_back(st.comp_of[graph.edges[eid].u]);
            graph.delete_normal_edge(eid);
        }
        std::sort(affected_comps.begin(), affected_comps.end());
        affected_comps.erase(std::unique(affected_comps.begin(), affected_comps.end()),
                             affected_comps.end());

        // Re-decompose only the components that lost edges; everything
        // else carries its blocks forward.
        std::vector<int> verts;
        for (int v = 1; v <= 2 * graph.n; ++v)
            if (graph.is_active(v) &&
                std::binary_search(affected_comps.begin(), affected_comps.end(), st.comp_of[v]))
                verts.push_back(v);
        for (auto& blk : st.blocks)
            if (blk.alive &&
                std::binary_search(affected_comps.begin(), affected_comps.end(), blk.comp))
                blk.alive = false;
        st.decompose(verts);
    }

    // Publish the surviving decomposition in canonical order.
    Decomposition d;
    d.blocks_of_vertex.assign(2 * graph.n + 1, {});
    d.component_of_vertex.assign(2 * graph.n + 1, -1);
    d.block_of_edge.assign(st.uedges.size(), -1);

    std::vector<int> order;
    for (std::size_t b = 0; b < st.blocks.size(); ++b)
        if (st.blocks[b].alive)
            order.push_back(static_cast<int>(b));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return st.blocks[a].uedge_ids.front() < st.blocks[b].uedge_ids.front();
    });

    std::vector<int> comp_rename(st.next_comp, -1);
    for (int gb : order) {
        Block blk;
        blk.vertices = st.blocks[gb].vertices;
        blk.edge_ids = st.blocks[gb].uedge_ids;
        for (int ue : blk.edge_ids)
            blk.edges.push_back(st.uedges[ue]);
        int id = static_cast<int>(d.blocks.size());
        for (int ue : blk.edge_ids)
            d.block_of_edge[ue] = id;
        for (int v : blk.vertices)
            d.blocks_of_vertex[v].push_back(id);
        d.blocks.push_back(std::move(blk));
    }
    for (int v = 1; v <= 2 * graph.n; ++v) {
        if (!graph.is_active(v))
            continue;
        int c = st.comp_of[v];
        if (comp_rename[c] < 0)
            comp_rename[c] = d.component_count++;
        d.component_of_vertex[v] = comp_rename[c];
        if (d.blocks_of_vertex[v].size() >= 2)
            d.cut_vertices.push_back(v);
    }
    return {std::move(out), std::move(d)};
}

namespace {

// One phase of Edmonds' blossom search over the block's normal edges.
// match[] holds the special pairs with the pair under test left free;
// an augmenting path between its two endpoints plus their special edge
// closes an alternating cycle.
struct BlossomPhase {
    const std::vector<std::vector<int>>& adj;
    int n;
    std::vector<int> match, parent, base;
    std::vector<std::uint8_t> used, blossom;
    std::vector<int> queue;

    explicit BlossomPhase(const std::vector<std::vector<int>>& adjacency)
        : adj(adjacency), n(static_cast<int>(adjacency.size())), match(n, -1), parent(n, -1),
          base(n, 0), used(n, 0), blossom(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<std::uint8_t> seen(n, 0);
        int x = a;
        while (true) {
            x = base[x];
            seen[x] = 1;
            if (match[x] == -1)
                break;
            x = parent[match[x]];
        }
        int y = b;
        while (true) {
            y = base[y];
            if (seen[y])
                return y;
            y = parent[match[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // Returns the free vertex an augmenting path from root reaches, -1
    // if none exists.
    int find_augmenting_endpoint(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[i] = i;
        used[root] = 1;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to)
                    continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1)
                        return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    // Alternating walk endpoint -> root: non-matching, matching, ...
    std::vector<int> path_to_root(int endpoint, int root) {
        std::vector<int> path{endpoint};
        int v = endpoint;
        while (true) {
            int pv = parent[v];
            path.push_back(pv);
            if (pv == root)
                break;
            int ppv = match[pv];
            path.push_back(ppv);
            v = ppv;
        }
        return path;
    }
};

} // namespace

AlternatingCycle extract_alternating_cycle(const ReducedGraph& reduced, const Block& block) {
    if (is_trivial(block))
        throw std::invalid_argument("extract_alternating_cycle: trivial block");
    const ModifiedGraph& g = reduced.graph;
    for (int v : block.vertices)
        if (!std::binary_search(block.vertices.begin(), block.vertices.end(),
                                g.special_partner[v]))
            throw std::invalid_argument(
                "extract_alternating_cycle: block is not at a fixed point");

    // Compact the block and try each special pair in ascending order: the
    // pair's endpoints become the free vertices of one blossom phase, and
    // an augmenting path between them closes an alternating cycle through
    // the pair. Some pair always succeeds at a fixed point.
    const auto& verts = block.vertices;
    const int k = static_cast<int>(verts.size());
    std::vector<int> compact(2 * g.n + 1, -1);
    for (int i = 0; i < k; ++i)
        compact[verts[i]] = i;

    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
        for (int eid : g.adj[verts[i]]) {
            int w = compact[g.other_end(eid, verts[i])];
            if (w >= 0)
                adj[i].push_back(w);
        }
        std::sort(adj[i].begin(), adj[i].end());
    }

    BlossomPhase phase(adj);
    for (int i = 0; i < k; ++i) {
        int a = i;
        int b = compact[g.special_partner[verts[i]]];
        if (b < a)
            continue; // one attempt per pair
        for (int j = 0; j < k; ++j)
            phase.match[j] = compact[g.special_partner[verts[j]]];
        phase.match[a] = -1;
        phase.match[b] = -1;
        int endpoint = phase.find_augmenting_endpoint(a);
        if (endpoint < 0)
            continue;
        // endpoint is the only other free vertex, b
        auto path = phase.path_to_root(endpoint, a); // b ... a
        AlternatingCycle cycle;
        cycle.vertices.reserve(path.size());
        cycle.vertices.push_back(verts[a]);
        for (int x : path) // b first keeps the closing edge normal
            cycle.vertices.push_back(verts[x]);
        cycle.vertices.pop_back(); // drop the duplicate root
        validate_cycle(g, cycle);
        return cycle;
    }
    raise(Errc::NoCycleFound, "non-trivial fixed-point block without an alternating cycle");
}

Matching improve_from_cycle(const Matching& matching, const AlternatingCycle& cycle,
                            const EfficiencyGraph& g) {
    const int n = matching.n();
    if (g.n != n)
        raise(Errc::BadSize, "graph and matching sizes differ");
    const auto& v = cycle.vertices;
    if (v.size() < 4 || v.size() % 2 != 0)
        raise(Errc::InvalidCycle, "cycle length " + std::to_string(v.size()));
    {
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            raise(Errc::InvalidCycle, "repeated vertex");
        if (sorted.front() < 1 || sorted.back() > 2 * n)
            raise(Errc::InvalidCycle, "vertex id outside 1..2n");
    }

    std::vector<int> partner(n + 1);
    for (int i = 1; i <= n; ++i)
        partner[i] = matching.partner(i);

    auto is_real = [&](int x) { return x <= n; };
    for (std::size_t i = 0; i < v.size(); ++i) {
        int a = v[i];
        int b = v[(i + 1) % v.size()];
        if (cycle.edge_kind(i) == EdgeKind::Special) {
            if (is_real(a) && is_real(b)) {
                if (matching.partner(a) != b)
                    raise(Errc::InvalidCycle, "special edge " + std::to_string(a) + "-" +
                                                  std::to_string(b) + " not in the matching");
            } else {
                int real = is_real(a) ? a : b;
                int virt = is_real(a) ? b : a;
                if (virt != real + n || matching.partner(real) != real)
                    raise(Errc::InvalidCycle, "bad virtual special edge " + std::to_string(a) +
                                                  "-" + std::to_string(b));
            }
        } else { // normal edge decides the new assignment of its real ends
            if (is_real(a) && is_real(b)) {
                if (g.normal_adjacent(a, b)) {
                    partner[a] = b;
                    partner[b] = a;
                } else if (g.normal_self_loop[a] && g.normal_self_loop[b]) {
                    partner[a] = a; // added edge: both ends prefer staying alone
                    partner[b] = b;
                } else {
                    raise(Errc::InvalidCycle, "normal edge " + std::to_string(a) + "-" +
                                                  std::to_string(b) + " has no source");
                }
            } else {
                for (int x : {a, b}) {
                    if (!is_real(x))
                        continue;
                    if (!g.normal_self_loop[x])
                        raise(Errc::InvalidCycle,
                              "agent " + std::to_string(x) +
                                  " on a virtual normal edge without a self-loop");
                    partner[x] = x;
                }
            }
        }
    }
    return Matching(n, std::vector<int>(partner.begin() + 1, partner.end()));
}

Matching improve_from_irrational(const Matching& matching,
                                 std::span<const std::pair<int, int>> pairs) {
    if (pairs.empty())
        throw std::invalid_argument("improve_from_irrational: empty pair list");
    std::vector<int> partner(matching.n() + 1);
    for (int i = 1; i <= matching.n(); ++i)
        partner[i] = matching.partner(i);
    for (auto [i, j] : pairs) {
        if (matching.partner(i) != j)
            throw std::invalid_argument("improve_from_irrational: pair not matched");
        partner[i] = i;
        partner[j] = j;
    }
    return Matching(matching.n(), std::vector<int>(partner.begin() + 1, partner.end()));
}

Verdict check(const Instance& instance) {
    Verdict verdict;

    auto pairs = find_irrational_pairs(instance);
    if (!pairs.empty()) {
        verdict.efficient = false;
        verdict.cause = Cause::IrrationalPair;
        verdict.irrational_pairs = pairs;
        verdict.witness = improve_from_irrational(instance.matching, pairs);
        assert(pareto_dominates(instance.profile, *verdict.witness, instance.matching));
        return verdict;
    }

    EfficiencyGraph g = build_graph(instance);
    auto [reduced, decomp] = reduce_to_fixed_point(build_modified_graph(g));
    verdict.iterations = reduced.iterations;

    int chosen = -1;
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
        if (is_trivial(decomp.blocks[b]))
            continue;
        if (chosen < 0 ||
            decomp.blocks[b].vertices.front() < decomp.blocks[chosen].vertices.front())
            chosen = static_cast<int>(b);
    }
    if (chosen < 0) {
        verdict.efficient = true;
        return verdict;
    }

    verdict.efficient = false;
    verdict.cause = Cause::AlternatingCycle;
    verdict.cycle = extract_alternating_cycle(reduced, decomp.blocks[chosen]);
    verdict.witness = improve_from_cycle(instance.matching, *verdict.cycle, g);
    assert(pareto_dominates(instance.profile, *verdict.witness, instance.matching));
    return verdict;
}

} // namespace roommates
