#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mssms/rational.hpp"

namespace mssms {

// Min-cost flow by successive shortest paths with node potentials, exact over
// rationals. Potentials are initialized with Bellman-Ford (the k-server
// network has negative service arcs but no cycles), after which each
// augmentation runs Dijkstra on reduced costs. Dense graphs here are tiny, so
// Dijkstra is the O(V^2) scan variant.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes) : adj_(nodes) {}

    int add_edge(int from, int to, long long cap, Rat cost) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({from, to, cap, 0, std::move(cost)});
        Rat rev_cost = -edges_.back().cost;
        edges_.push_back({to, from, 0, 0, std::move(rev_cost)});
        adj_[from].push_back(id);
        adj_[to].push_back(id + 1);
        return id;
    }

    long long flow_on(int edge_id) const { return edges_[edge_id].flow; }

    // Sends up to `amount` units; returns (flow sent, total cost).
    std::pair<long long, Rat> solve(int source, int sink, long long amount) {
        const int n = static_cast<int>(adj_.size());
        potential_.assign(n, Rat(0));
        bellman_ford(source);
        long long sent = 0;
        Rat total = 0;
        while (sent < amount) {
            auto [dist, parent_edge] = dijkstra(source);
            if (!dist[sink]) break;
            for (int v = 0; v < n; ++v)
                if (dist[v]) potential_[v] += *dist[v];
            long long push = amount - sent;
            for (int v = sink; v != source;) {
                const Edge& e = edges_[parent_edge[v]];
                push = std::min(push, e.cap - e.flow);
                v = e.from;
            }
            for (int v = sink; v != source;) {
                Edge& e = edges_[parent_edge[v]];
                e.flow += push;
                edges_[parent_edge[v] ^ 1].flow -= push;
                total += e.cost * push;
                v = e.from;
            }
            sent += push;
        }
        return {sent, total};
    }

private:
    struct Edge {
        int from, to;
        long long cap, flow;
        Rat cost;
    };

    void bellman_ford(int source) {
        const int n = static_cast<int>(adj_.size());
        std::vector<std::optional<Rat>> dist(n);
        dist[source] = Rat(0);
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (std::size_t id = 0; id < edges_.size(); ++id) {
                const Edge& e = edges_[id];
                if (e.cap - e.flow <= 0 || !dist[e.from]) continue;
                Rat cand = *dist[e.from] + e.cost;
                if (!dist[e.to] || cand < *dist[e.to]) {
                    dist[e.to] = std::move(cand);
                    changed = true;
                }
            }
            if (!changed) break;
            if (round == n - 1) throw std::logic_error("negative cycle in flow network");
        }
        for (int v = 0; v < n; ++v)
            if (dist[v]) potential_[v] = *dist[v];
    }

    std::pair<std::vector<std::optional<Rat>>, std::vector<int>> dijkstra(int source) const {
        const int n = static_cast<int>(adj_.size());
        std::vector<std::optional<Rat>> dist(n);
        std::vector<int> parent_edge(n, -1);
        std::vector<bool> done(n, false);
        dist[source] = Rat(0);
        for (int iter = 0; iter < n; ++iter) {
            int u = -1;
            for (int v = 0; v < n; ++v)
                if (!done[v] && dist[v] && (u == -1 || *dist[v] < *dist[u])) u = v;
            if (u == -1) break;
            done[u] = true;
            for (int id : adj_[u]) {
                const Edge& e = edges_[id];
                if (e.cap - e.flow <= 0) continue;
                Rat cand = *dist[u] + e.cost + potential_[e.from] - potential_[e.to];
                if (!dist[e.to] || cand < *dist[e.to]) {
                    dist[e.to] = std::move(cand);
                    parent_edge[e.to] = id;
                }
            }
        }
        return {std::move(dist), std::move(parent_edge)};
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<Rat> potential_;
};

}  // namespace mssms
