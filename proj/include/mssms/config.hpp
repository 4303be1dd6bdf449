#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mssms/metric.hpp"
#include "mssms/rational.hpp"

namespace mssms {

// A request: a nonempty set of distinct points (size <= instance width l).
class Request {
public:
    Request() = default;
    explicit Request(std::vector<int> points) : pts_(std::move(points)) {
        std::sort(pts_.begin(), pts_.end());
        if (pts_.empty()) throw std::invalid_argument("empty request");
        if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
            throw std::invalid_argument("duplicate point in request");
        if (pts_.front() < 0) throw std::invalid_argument("negative point index in request");
    }

    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<int>& points() const { return pts_; }
    bool contains(int p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    auto operator<=>(const Request&) const = default;

private:
    std::vector<int> pts_;
};

// A server configuration: multiset of k positions, stored sorted so equal
// multisets compare equal.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<int> points) : pts_(std::move(points)) {
        std::sort(pts_.begin(), pts_.end());
        if (!pts_.empty() && pts_.front() < 0) throw std::invalid_argument("negative point index in configuration");
    }

    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<int>& points() const { return pts_; }
    int at(int i) const { return pts_[i]; }
    bool contains(int p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }
    bool intersects(const Request& r) const {
        for (int p : r)
            if (contains(p)) return true;
        return false;
    }
    // Replace one copy of `from` by `to`.
    Configuration with_replaced(int from, int to) const {
        std::vector<int> next = pts_;
        auto it = std::lower_bound(next.begin(), next.end(), from);
        if (it == next.end() || *it != from) throw std::invalid_argument("configuration does not contain point");
        *it = to;
        return Configuration(std::move(next));
    }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<int> pts_;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int p : c) {
            h ^= static_cast<std::uint64_t>(p) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Min-cost assignment of every target to a distinct agent (|agents| >=
// |targets|), by subset DP over targets. Exact over rationals; intended for
// the small assignments here (targets <= 12).
struct Assignment {
    Rat cost;
    std::vector<int> agent_for_target;  // index into agents, one per target
};

inline Assignment min_cost_assignment(const MetricSpace& space, const std::vector<int>& agents,
                                      const std::vector<int>& targets) {
    const int na = static_cast<int>(agents.size());
    const int nt = static_cast<int>(targets.size());
    if (nt > na) throw std::invalid_argument("more targets than agents");
    if (nt > 12) throw std::invalid_argument("assignment limited to 12 targets");
    const std::uint32_t full = (1u << nt) - 1;
    const Rat inf = -1;  // sentinel: no value is negative
    // best[i][mask]: min cost covering `mask` using agents 0..i-1
    std::vector<std::vector<Rat>> best(na + 1, std::vector<Rat>(full + 1, inf));
    std::vector<std::vector<int>> choice(na + 1, std::vector<int>(full + 1, -2));
    best[0][0] = 0;
    for (int i = 0; i < na; ++i) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (best[i][mask] < 0) continue;
            if (best[i + 1][mask] < 0 || best[i][mask] < best[i + 1][mask]) {
                best[i + 1][mask] = best[i][mask];
                choice[i + 1][mask] = -1;  // agent i idle
            }
            for (int t = 0; t < nt; ++t) {
                if (mask & (1u << t)) continue;
                Rat c = best[i][mask] + space.dist(agents[i], targets[t]);
                std::uint32_t next = mask | (1u << t);
                if (best[i + 1][next] < 0 || c < best[i + 1][next]) {
                    best[i + 1][next] = c;
                    choice[i + 1][next] = t;
                }
            }
        }
    }
    Assignment out;
    out.cost = best[na][full];
    out.agent_for_target.assign(nt, -1);
    std::uint32_t mask = full;
    for (int i = na; i > 0; --i) {
        int t = choice[i][mask];
        if (t >= 0) {
            out.agent_for_target[t] = i - 1;
            mask &= ~(1u << t);
        }
    }
    return out;
}

// d(X, Y): weight of the minimum-weight matching between the multisets.
// A metric on canonical configurations.
inline Rat config_distance(const MetricSpace& space, const Configuration& x, const Configuration& y) {
    if (x.size() != y.size()) throw std::invalid_argument("configuration size mismatch");
    if (x == y) return 0;
    return min_cost_assignment(space, x.points(), y.points()).cost;
}

}  // namespace mssms
