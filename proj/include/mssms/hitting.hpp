#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "mssms/config.hpp"
#include "mssms/rng.hpp"

namespace mssms {

// An l-uniform (or l-bounded) set system over integer points.
struct SetSystem {
    std::vector<Request> sets;

    int width() const {
        int w = 0;
        for (const auto& s : sets) w = std::max(w, s.size());
        return w;
    }
};

inline bool hits_all(const std::vector<int>& points, const SetSystem& system) {
    for (const auto& s : system.sets) {
        bool hit = false;
        for (int p : points)
            if (s.contains(p)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace detail {

inline const Request* first_unhit(const SetSystem& system, const std::vector<int>& chosen) {
    for (const auto& s : system.sets) {
        bool hit = false;
        for (int p : chosen)
            if (s.contains(p)) {
                hit = true;
                break;
            }
        if (!hit) return &s;
    }
    return nullptr;
}

// Branch on the elements of the first unhit set; depth-bounded search. Every
// minimal hitting set of size <= depth appears as some leaf.
inline void branch_collect(const SetSystem& system, std::vector<int>& chosen, int depth,
                           std::set<std::vector<int>>& out) {
    const Request* unhit = first_unhit(system, chosen);
    if (unhit == nullptr) {
        std::vector<int> key = chosen;
        std::sort(key.begin(), key.end());
        out.insert(std::move(key));
        return;
    }
    if (depth == 0) return;
    for (int e : *unhit) {
        chosen.push_back(e);
        branch_collect(system, chosen, depth - 1, out);
        chosen.pop_back();
    }
}

inline bool branch_feasible(const SetSystem& system, std::vector<int>& chosen, int depth) {
    const Request* unhit = first_unhit(system, chosen);
    if (unhit == nullptr) return true;
    if (depth == 0) return false;
    for (int e : *unhit) {
        chosen.push_back(e);
        bool ok = branch_feasible(system, chosen, depth - 1);
        chosen.pop_back();
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

// Exact minimum hitting-set size, or nullopt when it exceeds cap.
inline std::optional<int> min_hitting_set_size(const SetSystem& system, int cap) {
    if (system.sets.empty()) return 0;
    std::vector<int> chosen;
    for (int s = 1; s <= cap; ++s)
        if (detail::branch_feasible(system, chosen, s)) return s;
    return std::nullopt;
}

// All distinct minimum hitting sets, canonically sorted. The same set can be
// reached down several branches, so the collection is deduplicated; the count
// is at most l^s.
inline std::optional<std::vector<std::vector<int>>> enumerate_min_hitting_sets(const SetSystem& system, int cap) {
    auto s = min_hitting_set_size(system, cap);
    if (!s) return std::nullopt;
    std::set<std::vector<int>> found;
    std::vector<int> chosen;
    detail::branch_collect(system, chosen, *s, found);
    std::vector<std::vector<int>> out;
    for (auto& h : found)
        if (static_cast<int>(h.size()) == *s) out.push_back(h);
    return out;
}

// Deterministic witness: lexicographically smallest minimum hitting set.
inline std::optional<std::vector<int>> min_hitting_set(const SetSystem& system, int cap) {
    auto all = enumerate_min_hitting_sets(system, cap);
    if (!all) return std::nullopt;
    return all->front();
}

// Uniform over the full collection of minimum hitting sets.
inline std::optional<std::vector<int>> sample_min_hitting_set(const SetSystem& system, int cap, Rng& rng) {
    auto all = enumerate_min_hitting_sets(system, cap);
    if (!all) return std::nullopt;
    return (*all)[uniform_below(rng, all->size())];
}

}  // namespace mssms
