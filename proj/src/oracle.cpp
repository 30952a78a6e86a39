#include "roommates/oracle.hpp"

#include <algorithm>
#include <string>

namespace roommates::oracle {

namespace {

EdgeKind flip(EdgeKind k) {
    return k == EdgeKind::Special ? EdgeKind::Normal : EdgeKind::Special;
}

void check_exhaustive_size(int n) {
    if (n > kMaxExhaustiveN)
        raise(Errc::TooLarge, "exhaustive oracle limited to n <= " +
                                  std::to_string(kMaxExhaustiveN) + ", got " + std::to_string(n));
}

struct Enumerator {
    int n;
    std::vector<int> partner;
    const std::function<bool(const Matching&)>& fn;
    bool stopped = false;

    void rec(int i) {
        while (i <= n && partner[i] != 0)
            ++i;
        if (i > n) {
            if (!fn(Matching(n, std::vector<int>(partner.begin() + 1, partner.end()))))
                stopped = true;
            return;
        }
        partner[i] = i; // alone first
        rec(i + 1);
        partner[i] = 0;
        if (stopped)
            return;
        for (int j = i + 1; j <= n; ++j) {
            if (partner[j] != 0)
                continue;
            partner[i] = j;
            partner[j] = i;
            rec(i + 1);
            partner[i] = partner[j] = 0;
            if (stopped)
                return;
        }
    }
};

} // namespace

void for_each_matching(int n, const std::function<bool(const Matching&)>& fn) {
    if (n < 1)
        throw std::invalid_argument("for_each_matching: n must be positive");
    check_exhaustive_size(n);
    Enumerator e{n, std::vector<int>(n + 1, 0), fn};
    e.rec(1);
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::pair<bool, std::optional<Matching>> oracle_efficient(const Instance& instance) {
    check_exhaustive_size(instance.n());
    std::optional<Matching> dominator;
    for_each_matching(instance.n(), [&](const Matching& m) {
        if (pareto_dominates(instance.profile, m, instance.matching)) {
            dominator = m;
            return false;
        }
        return true;
    });
    return {!dominator.has_value(), std::move(dominator)};
}

namespace {

// Self-loop kind of a vertex in G, if any. The two kinds exclude each
// other: a special self-loop needs mu(v) = v while a normal one needs
// v above mu(v) != v.
std::optional<EdgeKind> loop_kind(const EfficiencyGraph& g, int v) {
    if (g.special_partner[v] == v)
        return EdgeKind::Special;
    if (g.normal_self_loop[v])
        return EdgeKind::Normal;
    return std::nullopt;
}

struct PathSearch {
    const EfficiencyGraph& g;
    std::vector<std::uint8_t> visited;
    std::vector<int> walk;
    EdgeKind closing_loop = EdgeKind::Special;

    bool dfs(int u, EdgeKind next_kind) {
        auto try_vertex = [&](int w) {
            if (visited[w])
                return false;
            visited[w] = 1;
            walk.push_back(w);
            auto lw = loop_kind(g, w);
            if (lw && *lw == flip(next_kind)) {
                closing_loop = *lw;
                return true;
            }
            if (dfs(w, flip(next_kind)))
                return true;
            walk.pop_back();
            visited[w] = 0;
            return false;
        };
        if (next_kind == EdgeKind::Special) {
            int w = g.special_partner[u];
            return w != u && try_vertex(w);
        }
        for (int w : g.normal_neighbors[u])
            if (try_vertex(w))
                return true;
        return false;
    }
};

// Rooted pair-DFS for alternating cycles in G; only matched agents can
// lie on one.
struct GCycleSearch {
    const EfficiencyGraph& g;
    std::vector<std::uint8_t> pair_seen;
    std::vector<int> path;
    int start = 0;

    bool dfs(int u) {
        for (int w : g.normal_neighbors[u]) {
            if (w == start && path.size() >= 4)
                return true;
            int wp = g.special_partner[w];
            if (wp == w)
                continue;
            int key = std::min(w, wp);
            if (pair_seen[key])
                continue;
            pair_seen[key] = 1;
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

std::optional<AlternatingStructure> search_alternating_structures(const EfficiencyGraph& g) {
    check_exhaustive_size(g.n);

    for (int s = 1; s <= g.n; ++s) {
        auto ls = loop_kind(g, s);
        if (!ls)
            continue;
        PathSearch search{g, std::vector<std::uint8_t>(g.n + 1, 0), {s}};
        search.visited[s] = 1;
        EdgeKind first = flip(*ls);
        if (search.dfs(s, first)) {
            AlternatingStructure out;
            out.kind = AlternatingStructure::Kind::Path;
            out.vertices = std::move(search.walk);
            out.first_edge = first;
            out.loop_front = *ls;
            out.loop_back = search.closing_loop;
            return out;
        }
    }

    for (int r = 1; r <= g.n; ++r) {
        int rp = g.special_partner[r];
        if (rp <= r)
            continue; // matched pairs only, rooted at the smaller agent
        GCycleSearch search{g, std::vector<std::uint8_t>(g.n + 1, 0), {r, rp}, r};
        search.pair_seen[r] = 1;
        if (search.dfs(rp)) {
            AlternatingStructure out;
            out.kind = AlternatingStructure::Kind::Cycle;
            out.vertices = std::move(search.path);
            out.first_edge = EdgeKind::Special;
            return out;
        }
    }
    return std::nullopt;
}

std::optional<AlternatingCycle> search_alternating_cycle(const ModifiedGraph& g) {
    check_exhaustive_size(g.n);
    return find_alternating_cycle(g, g.vertex_list());
}

AlternatingStructure structure_from_dominator(const Instance& instance,
                                              const Matching& dominator) {
    const auto& mu = instance.matching;
    if (!pareto_dominates(instance.profile, dominator, mu))
        raise(Errc::NotADominator, "claimed dominator does not Pareto dominate");
    const int n = instance.n();

    // Paths alternate between the two maps until an agent maps to
    // itself; a mu fixpoint carries a special self-loop, a dominator
    // fixpoint a normal one.
    auto walk_path = [&](int i, bool first_is_dominator) {
        const Matching& first_map = first_is_dominator ? dominator : mu;
        const Matching& second_map = first_is_dominator ? mu : dominator;
        AlternatingStructure out;
        out.kind = AlternatingStructure::Kind::Path;
        out.first_edge = first_is_dominator ? EdgeKind::Normal : EdgeKind::Special;
        out.loop_front = first_is_dominator ? EdgeKind::Special : EdgeKind::Normal;
        out.vertices = {i};
        int cur = first_map.partner(i);
        out.vertices.push_back(cur);
        bool use_second = true;
        while (true) {
            int nxt = use_second ? second_map.partner(cur) : first_map.partner(cur);
            if (nxt == cur) {
                bool stopped_on_mu = use_second == first_is_dominator;
                out.loop_back = stopped_on_mu ? EdgeKind::Special : EdgeKind::Normal;
                break;
            }
            out.vertices.push_back(nxt);
            cur = nxt;
            use_second = !use_second;
        }
        return out;
    };

    for (int i = 1; i <= n; ++i)
        if (mu.partner(i) == i && dominator.partner(i) != i)
            return walk_path(i, true);

    for (int i = 1; i <= n; ++i)
        if (dominator.partner(i) == i && mu.partner(i) != i)
            return walk_path(i, false);

    // Remaining case: every disagreeing agent is matched in both, so the
    // walk closes into a cycle.
    for (int i = 1; i <= n; ++i) {
        if (mu.partner(i) == dominator.partner(i))
            continue;
        AlternatingStructure out;
        out.kind = AlternatingStructure::Kind::Cycle;
        out.first_edge = EdgeKind::Special;
        out.vertices = {i};
        int cur = mu.partner(i);
        out.vertices.push_back(cur);
        bool use_dom = true;
        while (true) {
            int nxt = use_dom ? dominator.partner(cur) : mu.partner(cur);
            if (nxt == i)
                break;
            out.vertices.push_back(nxt);
            cur = nxt;
            use_dom = !use_dom;
        }
        return out;
    }
    raise(Errc::NotADominator, "matchings are identical");
}

Matching improve_from_structure(const Matching& matching, const AlternatingStructure& s) {
    std::vector<int> partner(matching.n() + 1);
    for (int i = 1; i <= matching.n(); ++i)
        partner[i] = matching.partner(i);

    const auto& v = s.vertices;
    std::size_t edge_count =
        s.kind == AlternatingStructure::Kind::Cycle ? v.size() : v.size() - 1;
    for (std::size_t i = 0; i < edge_count; ++i) {
        if (s.edge_kind(i) != EdgeKind::Normal)
            continue;
        int a = v[i];
        int b = v[(i + 1) % v.size()];
        partner[a] = b;
        partner[b] = a;
    }
    if (s.kind == AlternatingStructure::Kind::Path) {
        if (s.loop_front == EdgeKind::Normal)
            partner[v.front()] = v.front();
        if (s.loop_back == EdgeKind::Normal)
            partner[v.back()] = v.back();
    }
    return Matching(matching.n(), std::vector<int>(partner.begin() + 1, partner.end()));
}

void validate_structure(const EfficiencyGraph& g, const AlternatingStructure& s) {
    const auto& v = s.vertices;
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(Errc::InvalidCycle, "repeated vertex in structure");
    if (sorted.empty() || sorted.front() < 1 || sorted.back() > g.n)
        raise(Errc::InvalidCycle, "vertex outside 1..n");

    auto check_edge = [&](int a, int b, EdgeKind k) {
        if (k == EdgeKind::Special) {
            if (g.special_partner[a] != b)
                raise(Errc::InvalidCycle, "missing special edge " + std::to_string(a) + "-" +
                                              std::to_string(b));
        } else if (!g.normal_adjacent(a, b)) {
            raise(Errc::InvalidCycle, "missing normal edge " + std::to_string(a) + "-" +
                                          std::to_string(b));
        }
    };

    if (s.kind == AlternatingStructure::Kind::Cycle) {
        if (v.size() < 4 || v.size() % 2 != 0)
            raise(Errc::InvalidCycle, "cycle length " + std::to_string(v.size()));
        if (s.first_edge != EdgeKind::Special)
            raise(Errc::InvalidCycle, "cycle must start with a special edge");
        for (std::size_t i = 0; i < v.size(); ++i)
            check_edge(v[i], v[(i + 1) % v.size()], s.edge_kind(i));
        return;
    }

    if (v.size() < 2)
        raise(Errc::InvalidCycle, "path needs at least one edge");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        check_edge(v[i], v[i + 1], s.edge_kind(i));

    auto check_loop = [&](int vertex, EdgeKind loop, EdgeKind incident) {
        bool present = loop == EdgeKind::Special ? g.special_partner[vertex] == vertex
                                                 : g.normal_self_loop[vertex] != 0;
        if (!present)
            raise(Errc::InvalidCycle, "endpoint " + std::to_string(vertex) +
                                          " lacks the claimed self-loop");
        if (loop == incident)
            raise(Errc::InvalidCycle, "endpoint " + std::to_string(vertex) +
                                          " loop kind matches its path edge");
    };
    check_loop(v.front(), s.loop_front, s.edge_kind(0));
    check_loop(v.back(), s.loop_back, s.edge_kind(v.size() - 2));
}

} // namespace roommates::oracle
