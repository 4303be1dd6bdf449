#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mssms/rational.hpp"

namespace mssms {

enum class SpaceKind { Uniform, Line, Explicit, Cluster, ScaledUnion };

// Finite metric space with a materialized distance table. Immutable after
// construction, so instances can be shared freely across workers.
class MetricSpace {
public:
    static MetricSpace uniform(int n) {
        require(n >= 1, "uniform space needs n >= 1");
        MetricSpace s(SpaceKind::Uniform, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.d_[i][j] = (i == j) ? 0 : 1;
        return s;
    }

    static MetricSpace line(std::vector<Rat> coords) {
        require(!coords.empty(), "line space needs at least one coordinate");
        MetricSpace s(SpaceKind::Line, static_cast<int>(coords.size()));
        for (int i = 0; i < s.n_; ++i)
            for (int j = 0; j < s.n_; ++j) {
                Rat diff = coords[i] - coords[j];
                s.d_[i][j] = diff < 0 ? Rat(-diff) : diff;
            }
        s.line_coords_ = std::move(coords);
        return s;
    }

    static MetricSpace explicit_matrix(std::vector<std::vector<Rat>> d) {
        int n = static_cast<int>(d.size());
        require(n >= 1, "explicit space needs n >= 1");
        for (const auto& row : d) require(static_cast<int>(row.size()) == n, "distance matrix must be square");
        MetricSpace s(SpaceKind::Explicit, n);
        s.d_ = std::move(d);
        s.validate_metric();
        return s;
    }

    // The two-distance space of the deterministic lower-bound game:
    // points (i,j) for i in [clusters], j in [points_per_cluster], distance 1
    // within a cluster and `far` across clusters.
    static MetricSpace cluster(int clusters, int points_per_cluster, const Rat& far) {
        require(clusters >= 1 && points_per_cluster >= 1, "cluster space needs positive dimensions");
        require(far > 0, "cluster distance D must be positive");
        require(2 * far >= 1, "cluster distance D below 1/2 violates the triangle inequality");
        MetricSpace s(SpaceKind::Cluster, clusters * points_per_cluster);
        s.clusters_ = clusters;
        s.cluster_size_ = points_per_cluster;
        for (int p = 0; p < s.n_; ++p)
            for (int q = 0; q < s.n_; ++q) {
                if (p == q)
                    s.d_[p][q] = 0;
                else
                    s.d_[p][q] = (p / points_per_cluster == q / points_per_cluster) ? Rat(1) : far;
            }
        return s;
    }

    // Disjoint union of subspaces, the i'th scaled by beta_i, with one common
    // cross-subspace distance. The weighted-variant game uses this with a
    // uniform subspace per server group; cross distance defaults to a value
    // safely above every scaled diameter (stand-in for "infinite").
    static MetricSpace scaled_union(const std::vector<std::pair<MetricSpace, Rat>>& parts,
                                    std::optional<Rat> separation = std::nullopt) {
        require(!parts.empty(), "scaled union needs at least one part");
        int n = 0;
        Rat max_scaled = 0;
        for (const auto& [sub, beta] : parts) {
            require(beta > 0, "scale factor must be positive");
            n += sub.size();
            for (int i = 0; i < sub.size(); ++i)
                for (int j = 0; j < sub.size(); ++j) max_scaled = std::max(max_scaled, beta * sub.dist(i, j));
        }
        Rat sep = separation.value_or(Rat(1000000) * std::max(max_scaled, Rat(1)));
        require(2 * sep >= max_scaled, "separation too small for the triangle inequality");
        MetricSpace s(SpaceKind::ScaledUnion, n);
        int base = 0;
        std::vector<int> offsets;
        for (const auto& [sub, beta] : parts) {
            offsets.push_back(base);
            for (int i = 0; i < sub.size(); ++i)
                for (int j = 0; j < sub.size(); ++j) s.d_[base + i][base + j] = beta * sub.dist(i, j);
            base += sub.size();
        }
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (s.d_[p][q] == 0 && p != q) {
                    bool same_part = false;
                    for (std::size_t t = 0; t < offsets.size(); ++t) {
                        int lo = offsets[t];
                        int hi = lo + parts[t].first.size();
                        if (p >= lo && p < hi && q >= lo && q < hi) same_part = true;
                    }
                    if (!same_part) s.d_[p][q] = sep;
                }
        return s;
    }

    int size() const { return n_; }
    SpaceKind kind() const { return kind_; }
    const Rat& dist(int a, int b) const { return d_[a][b]; }
    const std::vector<Rat>& line_coords() const { return line_coords_; }

    // Cluster spaces only; (i, j) are 1-based as in the game's description.
    int cluster_count() const { return clusters_; }
    int cluster_size() const { return cluster_size_; }
    int cluster_point(int i, int j) const { return (i - 1) * cluster_size_ + (j - 1); }
    std::pair<int, int> cluster_of(int p) const { return {p / cluster_size_ + 1, p % cluster_size_ + 1}; }

    Rat diameter() const {
        Rat out = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) out = std::max(out, d_[i][j]);
        return out;
    }

    bool operator==(const MetricSpace& other) const { return n_ == other.n_ && d_ == other.d_; }

private:
    MetricSpace(SpaceKind kind, int n) : kind_(kind), n_(n), d_(n, std::vector<Rat>(n)) {}

    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    // O(n^3); runs on explicit matrices only, the constructed kinds are
    // metrics by design.
    void validate_metric() const {
        for (int i = 0; i < n_; ++i) {
            require(d_[i][i] == 0, "nonzero diagonal in distance matrix");
            for (int j = 0; j < n_; ++j) {
                require(d_[i][j] >= 0, "negative distance");
                require(d_[i][j] == d_[j][i], "asymmetric distance matrix");
            }
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    require(d_[i][j] <= d_[i][k] + d_[k][j], "triangle inequality violated");
    }

    SpaceKind kind_;
    int n_;
    std::vector<std::vector<Rat>> d_;
    std::vector<Rat> line_coords_;
    int clusters_ = 0;
    int cluster_size_ = 0;
};

}  // namespace mssms
