#ifndef ROOMMATES_ORACLE_HPP
#define ROOMMATES_ORACLE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "roommates/checker.hpp"

namespace roommates::oracle {

/// Exhaustive operations refuse instances beyond this size.
inline constexpr int kMaxExhaustiveN = 12;

/// Streams every involution on 1..n exactly once: the smallest
/// unresolved agent stays alone first, then pairs with the remaining
/// agents in ascending order. Return false from the callback to stop.
/// Counts follow T(n) = T(n-1) + (n-1) T(n-2).
void for_each_matching(int n, const std::function<bool(const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(int n);

/// Scans all matchings; (true, nullopt) iff none dominates, otherwise
/// (false, first dominator in enumeration order).
std::pair<bool, std::optional<Matching>> oracle_efficient(const Instance& instance);

/// Alternating path or cycle in an efficiency graph. Paths carry the
/// self-loop kinds of their two endpoints; each is opposite in kind to
/// the incident path edge, which is what makes the improvement step
/// well-defined.
struct AlternatingStructure {
    enum class Kind { Path, Cycle };

    Kind kind;
    std::vector<int> vertices;
    EdgeKind first_edge;                 // kind of {vertices[0], vertices[1]}
    EdgeKind loop_front = EdgeKind::Special; // Path only
    EdgeKind loop_back = EdgeKind::Special;  // Path only

    EdgeKind edge_kind(std::size_t i) const {
        bool even = i % 2 == 0;
        if (first_edge == EdgeKind::Special)
            return even ? EdgeKind::Special : EdgeKind::Normal;
        return even ? EdgeKind::Normal : EdgeKind::Special;
    }
};

/// Exhaustive search over (vertex, last-edge-kind) states; paths are
/// scanned before cycles, smallest start first.
std::optional<AlternatingStructure> search_alternating_structures(const EfficiencyGraph& g);

/// Whole-graph variant of the block-restricted extraction.
std::optional<AlternatingCycle> search_alternating_cycle(const ModifiedGraph& g);

/// Realizes the structure walked out of a dominating matching: fixpoint
/// agents of one side yield paths, the all-matched case yields a cycle.
AlternatingStructure structure_from_dominator(const Instance& instance,
                                              const Matching& dominator);

/// Applies the improvement a structure encodes: agents joined by normal
/// edges become partners, normal-self-looped endpoints go alone, everyone
/// else keeps their partner.
Matching improve_from_structure(const Matching& matching, const AlternatingStructure& s);

/// Throws InvalidCycle unless the structure is valid in g.
void validate_structure(const EfficiencyGraph& g, const AlternatingStructure& s);

} // namespace roommates::oracle

#endif
