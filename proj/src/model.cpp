#include "roommates/model.hpp"

#include <algorithm>
#include <string>

namespace roommates {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::TooSmall: return "TooSmall";
    case Errc::BadSize: return "BadSize";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SelfLoopPresent: return "SelfLoopPresent";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::NoCycleFound: return "NoCycleFound";
    case Errc::NotADominator: return "NotADominator";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgs: return "BadArgs";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

PreferenceProfile::PreferenceProfile(int n, std::vector<std::vector<int>> rows) : n_(n) {
    if (n < 3)
        raise(Errc::TooSmall, "need at least 3 agents, got " + std::to_string(n));
    if (static_cast<int>(rows.size()) != n)
        raise(Errc::BadSize, "expected " + std::to_string(n) + " preference rows, got " +
                                 std::to_string(rows.size()));

    rank_table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) != n)
            raise(Errc::BadSize, "row of agent " + std::to_string(i) + " has " +
                                     std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(n));
        for (int pos = 0; pos < n; ++pos) {
            int a = row[pos];
            if (a < 1 || a > n)
                raise(Errc::NotPermutation, "row of agent " + std::to_string(i) +
                                                " contains " + std::to_string(a));
            if (rank_table_[index(i, a)] != -1)
                raise(Errc::NotPermutation, "row of agent " + std::to_string(i) +
                                                " lists agent " + std::to_string(a) + " twice");
            rank_table_[index(i, a)] = pos;
        }
    }
    rankings_ = std::move(rows);
}

const std::vector<int>& PreferenceProfile::ranking(int i) const {
    check_id(i);
    return rankings_[i - 1];
}

bool PreferenceProfile::prefers(int i, int a, int b) const {
    check_id(i);
    check_id(a);
    check_id(b);
    return rank(i, a) < rank(i, b);
}

void PreferenceProfile::check_id(int id) const {
    if (id < 1 || id > n_)
        raise(Errc::OutOfRange, "agent id " + std::to_string(id) + " outside 1.." +
                                    std::to_string(n_));
}

Matching::Matching(int n, std::vector<int> partners) : n_(n) {
    if (static_cast<int>(partners.size()) != n)
        raise(Errc::BadSize, "matching line has " + std::to_string(partners.size()) +
                                 " entries, expected " + std::to_string(n));
    partner_.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int p = partners[i - 1];
        if (p < 1 || p > n)
            raise(Errc::OutOfRange, "partner " + std::to_string(p) + " of agent " +
                                        std::to_string(i) + " outside 1.." + std::to_string(n));
        partner_[i] = p;
    }
    for (int i = 1; i <= n; ++i)
        if (partner_[partner_[i]] != i)
            raise(Errc::NotInvolution, "partner(partner(" + std::to_string(i) + ")) = " +
                                           std::to_string(partner_[partner_[i]]) +
                                           ", expected " + std::to_string(i));
}

Matching Matching::identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i + 1;
    return Matching(n, std::move(p));
}

Matching Matching::with_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i + 1;
    for (auto [a, b] : pairs) {
        p[a - 1] = b;
        p[b - 1] = a;
    }
    return Matching(n, std::move(p));
}

std::vector<int> Matching::line() const {
    return std::vector<int>(partner_.begin() + 1, partner_.end());
}

Instance::Instance(PreferenceProfile p, Matching m) : profile(std::move(p)), matching(std::move(m)) {
    if (profile.n() != matching.n())
        raise(Errc::BadSize, "profile has n = " + std::to_string(profile.n()) +
                                 " but matching has n = " + std::to_string(matching.n()));
}

PreferenceProfile validate_profile(int n, const std::vector<std::vector<int>>& rows) {
    return PreferenceProfile(n, rows);
}

Matching validate_matching(int n, const std::vector<int>& partners) {
    return Matching(n, partners);
}

bool prefers(const PreferenceProfile& profile, int i, int a, int b) {
    return profile.prefers(i, a, b);
}

bool pareto_dominates(const PreferenceProfile& profile, const Matching& candidate,
                      const Matching& baseline) {
    if (candidate == baseline)
        return false;
    for (int i = 1; i <= profile.n(); ++i) {
        int c = candidate.partner(i);
        int b = baseline.partner(i);
        if (c != b && !profile.prefers(i, c, b))
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> find_irrational_pairs(const Instance& instance) {
    const auto& mu = instance.matching;
    const auto& prof = instance.profile;
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= instance.n(); ++i) {
        int j = mu.partner(i);
        if (j > i && prof.prefers(i, i, j) && prof.prefers(j, j, i))
            out.emplace_back(i, j);
    }
    return out; // ascending by construction
}

} // namespace roommates
