#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mssms/errors.hpp"
#include "mssms/instance.hpp"
#include "mssms/mincostflow.hpp"

namespace mssms {

struct OptResult {
    Rat cost;
    Schedule schedule;
};

constexpr std::uint64_t kDefaultDpBudget = 10'000'000;
constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000;

namespace detail {

// Assign concrete server slots to a chain of canonical configurations.
inline Schedule schedule_from_moves(const Instance& inst,
                                    const std::vector<std::optional<std::pair<int, int>>>& point_moves,
                                    Rat cost) {
    Schedule sched;
    sched.initial = inst.initial;
    sched.servers = inst.k;
    sched.cost = std::move(cost);
    std::vector<int> pos(inst.initial.points());
    for (const auto& pm : point_moves) {
        if (!pm) {
            sched.steps.emplace_back(std::nullopt);
            continue;
        }
        auto [from, to] = *pm;
        int slot = -1;
        for (int s = 0; s < inst.k; ++s)
            if (pos[s] == from) {
                slot = s;
                break;
            }
        if (slot < 0) throw std::logic_error("schedule reconstruction lost a server");
        pos[slot] = to;
        sched.steps.push_back(Move{slot, from, to});
    }
    return sched;
}

}  // namespace detail

// Exact optimum by layered DP over multiset configurations with lazy
// transitions: either stay (when the configuration already meets the request)
// or exchange one server onto a requested point.
inline OptResult opt_dp(const Instance& inst, std::uint64_t budget = kDefaultDpBudget) {
    inst.validate();
    BigInt states = binomial(inst.space.size() + inst.k - 1, inst.k);
    BigInt work = states * std::max(inst.m(), 1) * inst.k * inst.l;
    if (work > budget)
        throw BudgetExceeded("opt_dp work bound " + work.str() + " exceeds budget " + std::to_string(budget));

    struct Entry {
        Rat cost;
        int parent = -1;                              // index into previous layer
        std::optional<std::pair<int, int>> move;      // (from point, to point)
    };
    using Layer = std::vector<std::pair<Configuration, Entry>>;

    Layer layer;
    layer.emplace_back(inst.initial, Entry{0, -1, std::nullopt});
    std::vector<Layer> history;

    for (const Request& r : inst.requests) {
        Layer next;
        std::unordered_map<Configuration, int, ConfigurationHash> where;
        auto relax = [&](const Configuration& cfg, Entry entry) {
            auto [it, fresh] = where.try_emplace(cfg, static_cast<int>(next.size()));
            if (fresh)
                next.emplace_back(cfg, std::move(entry));
            else if (entry.cost < next[it->second].second.cost)
                next[it->second].second = std::move(entry);
        };
        for (int idx = 0; idx < static_cast<int>(layer.size()); ++idx) {
            const auto& [cfg, entry] = layer[idx];
            if (cfg.intersects(r)) relax(cfg, Entry{entry.cost, idx, std::nullopt});
            for (int slot = 0; slot < inst.k; ++slot) {
                if (slot > 0 && cfg.at(slot) == cfg.at(slot - 1)) continue;
                for (int point : r) {
                    Entry moved{entry.cost + inst.space.dist(cfg.at(slot), point), idx,
                                std::make_pair(cfg.at(slot), point)};
                    relax(cfg.with_replaced(cfg.at(slot), point), std::move(moved));
                }
            }
        }
        history.push_back(std::move(layer));
        layer = std::move(next);
    }

    int best = 0;
    for (int i = 1; i < static_cast<int>(layer.size()); ++i)
        if (layer[i].second.cost < layer[best].second.cost) best = i;
    Rat cost = layer[best].second.cost;

    std::vector<std::optional<std::pair<int, int>>> point_moves(inst.m());
    int at = best;
    for (int i = inst.m() - 1; i >= 0; --i) {
        const Entry& e = (i + 1 == inst.m()) ? layer[at].second : history[i + 1][at].second;
        point_moves[i] = e.move;
        at = e.parent;
    }
    return {cost, detail::schedule_from_moves(inst, point_moves, cost)};
}

// Definitional oracle: enumerate every lazy (server, requested point) choice.
inline Rat opt_bruteforce(const Instance& inst, std::uint64_t budget = kDefaultBruteForceBudget) {
    inst.validate();
    BigInt leaves = 1;
    for (int i = 0; i < inst.m(); ++i) {
        leaves *= inst.k * inst.l;
        if (leaves > budget)
            throw BudgetExceeded("opt_bruteforce (k*l)^m exceeds budget " + std::to_string(budget));
    }
    std::optional<Rat> best;
    std::vector<int> pos(inst.initial.points());
    auto recurse = [&](auto&& self, int depth, Rat cost) -> void {
        if (best && cost >= *best) return;
        if (depth == inst.m()) {
            best = cost;
            return;
        }
        for (int slot = 0; slot < inst.k; ++slot) {
            int old = pos[slot];
            for (int point : inst.requests[depth]) {
                pos[slot] = point;
                self(self, depth + 1, cost + inst.space.dist(old, point));
                pos[slot] = old;
            }
        }
    };
    recurse(recurse, 0, Rat(0));
    return *best;
}

// Exact k-server optimum (width 1) via the min-cost-flow reduction. Service
// arcs carry cost -M with M above any possible movement total, so every
// optimal flow saturates them; flows are integral, so the optimum is a real
// schedule.
inline OptResult opt_kserver_flow(const Instance& inst) {
    inst.validate();
    for (const Request& r : inst.requests)
        if (r.size() != 1) throw std::invalid_argument("opt_kserver_flow needs width-1 requests");
    const int k = inst.k;
    const int m = inst.m();

    Rat big_m = 1;
    {
        std::vector<int> nodes(inst.initial.points());
        for (const Request& r : inst.requests) nodes.push_back(r.points()[0]);
        for (int a : nodes)
            for (int b : nodes) big_m += inst.space.dist(a, b);
    }

    // source, k server nodes, m request-in, m request-out, sink
    const int source = 0;
    auto server_node = [&](int i) { return 1 + i; };
    auto req_in = [&](int j) { return 1 + k + j; };
    auto req_out = [&](int j) { return 1 + k + m + j; };
    const int sink = 1 + k + 2 * m;
    MinCostFlow flow(sink + 1);

    std::vector<std::vector<int>> server_arc(k, std::vector<int>(m, -1));
    std::vector<std::vector<int>> hop_arc(m, std::vector<int>(m, -1));
    for (int i = 0; i < k; ++i) {
        flow.add_edge(source, server_node(i), 1, 0);
        flow.add_edge(server_node(i), sink, 1, 0);
        for (int j = 0; j < m; ++j)
            server_arc[i][j] =
                flow.add_edge(server_node(i), req_in(j), 1, inst.space.dist(inst.initial.at(i), inst.requests[j].points()[0]));
    }
    for (int j = 0; j < m; ++j) {
        flow.add_edge(req_in(j), req_out(j), 1, -big_m);
        flow.add_edge(req_out(j), sink, 1, 0);
        for (int j2 = j + 1; j2 < m; ++j2)
            hop_arc[j][j2] =
                flow.add_edge(req_out(j), req_in(j2), 1, inst.space.dist(inst.requests[j].points()[0], inst.requests[j2].points()[0]));
    }

    auto [sent, raw_cost] = flow.solve(source, sink, k);
    if (sent != k) throw std::logic_error("k-server flow did not saturate");
    Rat cost = raw_cost + big_m * m;

    // Decompose unit chains into per-request moves.
    std::vector<std::optional<std::pair<int, int>>> point_moves(m);
    std::vector<int> slot_positions(inst.initial.points());
    for (int i = 0; i < k; ++i) {
        int prev_point = inst.initial.at(i);
        int j = -1;
        for (int cand = 0; cand < m; ++cand)
            if (flow.flow_on(server_arc[i][cand]) == 1) {
                j = cand;
                break;
            }
        while (j != -1) {
            point_moves[j] = std::make_pair(prev_point, inst.requests[j].points()[0]);
            prev_point = inst.requests[j].points()[0];
            int next = -1;
            for (int j2 = j + 1; j2 < m; ++j2)
                if (hop_arc[j][j2] >= 0 && flow.flow_on(hop_arc[j][j2]) == 1) {
                    next = j2;
                    break;
                }
            j = next;
        }
    }
    return {cost, detail::schedule_from_moves(inst, point_moves, cost)};
}

// Exact MSS optimum (one server) via shortest path in the layered graph whose
// i'th layer is the i'th request's point set.
inline OptResult opt_mss_path(const Instance& inst) {
    inst.validate();
    if (inst.k != 1) throw std::invalid_argument("opt_mss_path needs k = 1");
    const int start = inst.initial.at(0);
    struct Node {
        Rat cost;
        int parent;  // index into previous layer
    };
    std::vector<std::vector<Node>> layers;
    std::vector<int> prev_points{start};
    std::vector<Node> prev{{0, -1}};
    for (const Request& r : inst.requests) {
        std::vector<Node> cur(r.size());
        for (int t = 0; t < r.size(); ++t) {
            int best = 0;
            Rat best_cost = prev[0].cost + inst.space.dist(prev_points[0], r.points()[t]);
            for (int p = 1; p < static_cast<int>(prev.size()); ++p) {
                Rat cand = prev[p].cost + inst.space.dist(prev_points[p], r.points()[t]);
                if (cand < best_cost) {
                    best_cost = std::move(cand);
                    best = p;
                }
            }
            cur[t] = {std::move(best_cost), best};
        }
        layers.push_back(prev = std::move(cur));
        prev_points = r.points();
    }

    int at = 0;
    for (int t = 1; t < static_cast<int>(prev.size()); ++t)
        if (prev[t].cost < prev[at].cost) at = t;
    Rat cost = inst.m() == 0 ? Rat(0) : prev[at].cost;

    std::vector<std::optional<std::pair<int, int>>> point_moves(inst.m());
    for (int i = inst.m() - 1; i >= 0; --i) {
        int point = inst.requests[i].points()[at];
        int parent = layers[i][at].parent;
        int prev_point = (i == 0) ? start : inst.requests[i - 1].points()[parent];
        point_moves[i] = (prev_point == point) ? std::nullopt : std::make_optional(std::make_pair(prev_point, point));
        at = parent;
    }
    return {cost, detail::schedule_from_moves(inst, point_moves, cost)};
}

}  // namespace mssms
