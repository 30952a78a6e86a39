#ifndef ROOMMATES_MODEL_HPP
#define ROOMMATES_MODEL_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "roommates/error.hpp"

namespace roommates {

/// Agents are numbered 1..n. Id 0 is never a valid agent.
using AgentId = int;

/// One strict total order per agent over all n agents, self included.
/// The position of the agent's own id encodes acceptability: everything
/// ranked below self is a partner the agent would rather not have.
class PreferenceProfile {
  public:
    /// Validates and builds the O(1) rank table. Throws TooSmall (n < 3),
    /// BadSize, or NotPermutation.
    PreferenceProfile(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }

    /// Agent i's full ranking, most preferred first.
    const std::vector<int>& ranking(int i) const;

    /// 0-based position of agent a in i's ranking; lower is better.
    int rank(int i, int a) const { return rank_table_[index(i, a)]; }

    /// True iff a is ranked strictly above b by agent i.
    bool prefers(int i, int a, int b) const;

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

  private:
    std::size_t index(int i, int a) const {
        return static_cast<std::size_t>(i - 1) * n_ + (a - 1);
    }
    void check_id(int id) const;

    int n_ = 0;
    std::vector<std::vector<int>> rankings_;
    std::vector<int> rank_table_; // n*n positions
};

/// An involution on 1..n: partner(partner(i)) == i. A fixed point
/// (partner(i) == i) means agent i is unmatched.
class Matching {
  public:
    /// Throws OutOfRange or NotInvolution.
    Matching(int n, std::vector<int> partners);

    static Matching identity(int n);
    /// Everyone unmatched except the listed pairs.
    static Matching with_pairs(int n, std::initializer_list<std::pair<int, int>> pairs);

    int n() const { return n_; }
    int partner(int i) const { return partner_[i]; }
    bool matched(int i) const { return partner_[i] != i; }

    /// Partners of agents 1..n, in agent order (the instance-file layout).
    std::vector<int> line() const;

    friend bool operator==(const Matching&, const Matching&) = default;

  private:
    int n_ = 0;
    std::vector<int> partner_; // index 0 unused
};

struct Instance {
    PreferenceProfile profile;
    Matching matching;

    Instance(PreferenceProfile p, Matching m);
    int n() const { return profile.n(); }
};

/// Named constructors matching the raw-input surface.
PreferenceProfile validate_profile(int n, const std::vector<std::vector<int>>& rows);
Matching validate_matching(int n, const std::vector<int>& partners);

bool prefers(const PreferenceProfile& profile, int i, int a, int b);

/// True iff candidate != baseline and every agent weakly prefers its
/// candidate partner. Under strict preferences this forces at least one
/// strict improvement.
bool pareto_dominates(const PreferenceProfile& profile, const Matching& candidate,
                      const Matching& baseline);

/// Matched pairs {i,j} where both members rank themselves above the
/// other. Returned with i < j, ascending by i.
std::vector<std::pair<int, int>> find_irrational_pairs(const Instance& instance);

} // namespace roommates

#endif
