#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mssms/config.hpp"
#include "mssms/errors.hpp"
#include "mssms/instance.hpp"

namespace mssms {

// All size-k multisets over {0,...,n-1}, in lexicographic order. This is the
// canonical configuration order used for tie-breaking.
inline std::vector<Configuration> enumerate_configurations(int n, int k, std::uint64_t max_states = 2000000) {
    BigInt count = binomial(n + k - 1, k);
    if (count > max_states)
        throw BudgetExceeded("configuration table of " + count.str() + " states exceeds budget " +
                             std::to_string(max_states));
    std::vector<Configuration> out;
    out.reserve(count.convert_to<std::size_t>());
    std::vector<int> cur(k, 0);
    while (true) {
        out.emplace_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - 1) --i;
        if (i < 0) break;
        int v = cur[i] + 1;
        for (int j = i; j < k; ++j) cur[j] = v;
    }
    return out;
}

// Exact work-function table over every k-configuration of a finite space.
//
// The update uses the single-exchange recurrence
//   w'(X) = min over r in R, x in X of  w(X - x + r) + d(r, x),
// which equals the definitional min over serving configurations Z
// (w'(X) = min_{Z: Z hits R} w(Z) + d(Z, X)) whenever w is 1-Lipschitz in
// configuration distance; tests check the two against each other.
class WorkFunction {
public:
    WorkFunction(const MetricSpace& space, Configuration x0, std::uint64_t max_states = 2000000)
        : space_(&space), k_(x0.size()), x0_(std::move(x0)) {
        configs_ = enumerate_configurations(space.size(), k_, max_states);
        values_.resize(configs_.size());
        for (std::size_t i = 0; i < configs_.size(); ++i) {
            index_.emplace(configs_[i], static_cast<int>(i));
            values_[i] = config_distance(space, x0_, configs_[i]);
        }
    }

    void update(const Request& r) {
        std::vector<Rat> next(values_.size());
        for (std::size_t i = 0; i < configs_.size(); ++i) {
            const Configuration& x = configs_[i];
            std::optional<Rat> best;
            for (int req_point : r) {
                for (int slot = 0; slot < k_; ++slot) {
                    if (slot > 0 && x.at(slot) == x.at(slot - 1)) continue;
                    Configuration z = x.with_replaced(x.at(slot), req_point);
                    Rat cand = values_[index_.at(z)] + space_->dist(req_point, x.at(slot));
                    if (!best || cand < *best) best = cand;
                }
            }
            next[i] = *best;
        }
        values_ = std::move(next);
        last_request_ = r;
        ++updates_;
    }

    const MetricSpace& space() const { return *space_; }
    int k() const { return k_; }
    const Configuration& initial() const { return x0_; }
    const std::vector<Configuration>& configurations() const { return configs_; }
    const std::optional<Request>& last_request() const { return last_request_; }
    int updates() const { return updates_; }

    const Rat& value(const Configuration& x) const { return values_[index_.at(x)]; }
    const Rat& value_at(std::size_t i) const { return values_[i]; }

    // min over all configurations; after the whole sequence this is OPT.
    Rat min_value() const {
        Rat best = values_[0];
        for (const Rat& v : values_) best = std::min(best, v);
        return best;
    }

    // Configurations not dominated by any other: w(X) < w(Y) + d(X, Y) for
    // every Y != X. Brute force over the table.
    std::vector<Configuration> support() const {
        std::vector<Configuration> out;
        for (std::size_t i = 0; i < configs_.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < configs_.size() && !dominated; ++j) {
                if (i == j) continue;
                if (values_[i] == values_[j] + config_distance(*space_, configs_[i], configs_[j])) dominated = true;
            }
            if (!dominated) out.push_back(configs_[i]);
        }
        return out;
    }

    // Quasi-convexity probe for a pair (X, Y): searches every bijection
    // g: X -> Y for one satisfying, for all X' subset of X,
    //   w(g(X') u (X \ X')) + w(X' u g(X \ X')) <= w(X) + w(Y).
    struct QuasiConvexityResult {
        bool holds = false;
        // When holds: g as Y-points aligned to X's slots. When violated: the
        // worst split found for the best bijection.
        std::vector<int> bijection;
        Configuration violating_left, violating_right;
    };

    QuasiConvexityResult quasiconvex_check(const Configuration& x, const Configuration& y) const {
        if (x.size() != y.size()) throw std::invalid_argument("configuration size mismatch");
        const Rat bound = value(x) + value(y);
        std::vector<int> perm = y.points();
        std::sort(perm.begin(), perm.end());
        QuasiConvexityResult result;
        do {
            bool all_ok = true;
            for (std::uint32_t split = 0; split < (1u << k_) && all_ok; ++split) {
                std::vector<int> left, right;
                for (int slot = 0; slot < k_; ++slot) {
                    if (split & (1u << slot)) {
                        left.push_back(perm[slot]);     // g(X')
                        right.push_back(x.at(slot));    // X'
                    } else {
                        left.push_back(x.at(slot));     // X \ X'
                        right.push_back(perm[slot]);    // g(X \ X')
                    }
                }
                Configuration cl(left), cr(right);
                if (value(cl) + value(cr) > bound) {
                    all_ok = false;
                    if (result.violating_left.size() == 0) {
                        result.violating_left = cl;
                        result.violating_right = cr;
                    }
                }
            }
            if (all_ok) {
                result.holds = true;
                result.bijection = perm;
                return result;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return result;
    }

private:
    const MetricSpace* space_;
    int k_;
    Configuration x0_;
    std::vector<Configuration> configs_;
    std::unordered_map<Configuration, int, ConfigurationHash> index_;
    std::vector<Rat> values_;
    std::optional<Request> last_request_;
    int updates_ = 0;
};

}  // namespace mssms
