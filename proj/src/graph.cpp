#include "roommates/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace roommates {

int EfficiencyGraph::normal_edge_count() const {
    int twice = 0;
    for (int v = 1; v <= n; ++v)
        twice += static_cast<int>(normal_neighbors[v].size());
    return twice / 2;
}

EfficiencyGraph build_graph(const Instance& instance) {
    const auto& prof = instance.profile;
    const auto& mu = instance.matching;
    const int n = instance.n();

    EfficiencyGraph g;
    g.n = n;
    g.special_partner.assign(n + 1, 0);
    g.normal_self_loop.assign(n + 1, 0);
    g.normal_neighbors.assign(n + 1, {});
    g.matrix.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);

    for (int i = 1; i <= n; ++i) {
        g.special_partner[i] = mu.partner(i);
        g.normal_self_loop[i] = prof.prefers(i, i, mu.partner(i)) ? 1 : 0;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (prof.prefers(i, j, mu.partner(i)) && prof.prefers(j, i, mu.partner(j))) {
                g.matrix[static_cast<std::size_t>(i) * (n + 1) + j] = 1;
                g.matrix[static_cast<std::size_t>(j) * (n + 1) + i] = 1;
                g.normal_neighbors[i].push_back(j);
                g.normal_neighbors[j].push_back(i);
            }
        }
    }
    // inner loops emit ascending ids already; keep the guarantee explicit
    for (int i = 1; i <= n; ++i)
        std::sort(g.normal_neighbors[i].begin(), g.normal_neighbors[i].end());
    return g;
}

void ModifiedGraph::init(int n_agents) {
    n = n_agents;
    active.assign(2 * n + 1, 0);
    special_partner.assign(2 * n + 1, 0);
    adj.assign(2 * n + 1, {});
    matrix.assign(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1), 0);
    edges.clear();
    edge_live.clear();
    pos_u_.clear();
    pos_v_.clear();
    live_count_ = 0;
}

std::vector<int> ModifiedGraph::vertex_list() const {
    std::vector<int> out;
    for (int v = 1; v <= 2 * n; ++v)
        if (active[v])
            out.push_back(v);
    return out;
}

void ModifiedGraph::add_normal_edge(int u, int v, EdgeOrigin origin) {
    int eid = static_cast<int>(edges.size());
    edges.push_back({u, v, origin});
    edge_live.push_back(1);
    pos_u_.push_back(static_cast<int>(adj[u].size()));
    pos_v_.push_back(static_cast<int>(adj[v].size()));
    adj[u].push_back(eid);
    adj[v].push_back(eid);
    matrix[static_cast<std::size_t>(u) * (2 * n + 1) + v] = 1;
    matrix[static_cast<std::size_t>(v) * (2 * n + 1) + u] = 1;
    ++live_count_;
}

void ModifiedGraph::delete_normal_edge(int eid) {
    if (!edge_live[eid])
        return;
    edge_live[eid] = 0;
    --live_count_;
    const auto [u, v, origin] = edges[eid];
    (void)origin;
    matrix[static_cast<std::size_t>(u) * (2 * n + 1) + v] = 0;
    matrix[static_cast<std::size_t>(v) * (2 * n + 1) + u] = 0;

    auto detach = [&](int vertex, int pos) {
        auto& list = adj[vertex];
        int moved = list.back();
        list[pos] = moved;
        list.pop_back();
        if (pos < static_cast<int>(list.size())) {
            if (edges[moved].u == vertex)
                pos_u_[moved] = pos;
            else
                pos_v_[moved] = pos;
        }
    };
    detach(u, pos_u_[eid]);
    detach(v, pos_v_[eid]);
}

ModifiedGraph build_modified_graph(const EfficiencyGraph& g) {
    ModifiedGraph m;
    m.init(g.n);
    const int n = g.n;

    // Rule 1: virtual partner for every special self-loop.
    for (int i = 1; i <= n; ++i) {
        m.active[i] = 1;
        if (g.special_partner[i] == i) {
            m.active[i + n] = 1;
            m.special_partner[i] = i + n;
            m.special_partner[i + n] = i;
        } else {
            m.special_partner[i] = g.special_partner[i];
        }
    }

    // Carry over the original normal edges (self-loops stay behind).
    for (int i = 1; i <= n; ++i)
        for (int j : g.normal_neighbors[i])
            if (i < j)
                m.add_normal_edge(i, j, EdgeOrigin::Original);

    // Rule 2: connect qualifying non-adjacent pairs. A vertex qualifies
    // if it is virtual or had a normal self-loop in g.
    std::vector<int> qualifying;
    for (int i = 1; i <= n; ++i)
        if (g.normal_self_loop[i])
            qualifying.push_back(i);
    for (int i = 1; i <= n; ++i)
        if (m.active[i + n])
            qualifying.push_back(i + n);
    std::sort(qualifying.begin(), qualifying.end());

    for (std::size_t a = 0; a < qualifying.size(); ++a) {
        for (std::size_t b = a + 1; b < qualifying.size(); ++b) {
            int u = qualifying[a];
            int v = qualifying[b];
            if (m.normal_adjacent(u, v) || m.special_partner[u] == v)
                continue;
            m.add_normal_edge(u, v, EdgeOrigin::Added);
        }
    }

    // Rule 3 (drop self-loops) is implicit: neither loop kind was copied.
    return m;
}

ModifiedGraph ModifiedGraph::from_parts(int n, std::span<const int> vertices,
                                        std::span<const std::pair<int, int>> special_edges,
                                        std::span<const std::tuple<int, int, EdgeOrigin>> normal_edges) {
    ModifiedGraph m;
    m.init(n);
    for (int v : vertices) {
        if (v < 1 || v > 2 * n)
            raise(Errc::UnknownVertex, "vertex " + std::to_string(v) + " outside 1..2n");
        m.active[v] = 1;
    }
    for (auto [u, v] : special_edges) {
        if (!m.is_active(u) || !m.is_active(v))
            raise(Errc::UnknownVertex, "special edge endpoint not active");
        if (u == v)
            raise(Errc::SelfLoopPresent, "special self-loop at " + std::to_string(u));
        m.special_partner[u] = v;
        m.special_partner[v] = u;
    }
    for (int v : vertices) {
        int p = m.special_partner[v];
        if (p == 0 || p == v || m.special_partner[p] != v)
            raise(Errc::NotInvolution, "special edges are not a perfect matching at vertex " +
                                           std::to_string(v));
    }
    for (auto [u, v, origin] : normal_edges) {
        if (!m.is_active(u) || !m.is_active(v))
            raise(Errc::UnknownVertex, "normal edge endpoint not active");
        if (u == v)
            raise(Errc::SelfLoopPresent, "normal self-loop at " + std::to_string(u));
        m.add_normal_edge(u, v, origin);
    }
    return m;
}

std::vector<int> neighbors(const ModifiedGraph& graph, int v, EdgeKind kind) {
    if (!graph.is_active(v))
        raise(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in graph");
    if (kind == EdgeKind::Special)
        return {graph.special_partner[v]};
    std::vector<int> out;
    out.reserve(graph.adj[v].size());
    for (int eid : graph.adj[v])
        out.push_back(graph.other_end(eid, v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_dot(const EfficiencyGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int i = 1; i <= g.n; ++i) {
        if (g.special_partner[i] == i)
            os << "  " << i << " == " << i << "\n";
        else if (g.special_partner[i] > i)
            os << "  " << i << " == " << g.special_partner[i] << "\n";
    }
    for (int i = 1; i <= g.n; ++i) {
        if (g.normal_self_loop[i])
            os << "  " << i << " -- " << i << "\n";
        for (int j : g.normal_neighbors[i])
            if (j > i)
                os << "  " << i << " -- " << j << "\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const ModifiedGraph& g) {
    std::ostringstream os;
    os << "graph Gmod {\n";
    for (int v : g.vertex_list()) {
        if (g.is_virtual(v))
            os << "  // " << v << " is virtual for agent " << v - g.n << "\n";
        if (g.special_partner[v] > v)
            os << "  " << v << " == " << g.special_partner[v] << "\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!g.edge_live[e])
            continue;
        os << "  " << g.edges[e].u << " -- " << g.edges[e].v;
        if (g.edges[e].origin == EdgeOrigin::Added)
            os << "  // added";
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace roommates
