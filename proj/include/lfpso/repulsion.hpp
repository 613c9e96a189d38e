#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "lfpso/geometry.hpp"
#include "lfpso/params.hpp"

namespace lfpso {

/// Geometric communication graph: an edge joins robots i and j whenever
/// their Euclidean distance is at most the communication range.
struct CommGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;

    static CommGraph build(std::span<const Vec2> positions, double comm_range) {
        CommGraph g;
        g.n = static_cast<int>(positions.size());
        g.adjacency.assign(g.n, {});
        for (int i = 0; i < g.n; ++i) {
            for (int j = i + 1; j < g.n; ++j) {
                if (distance(positions[i], positions[j]) <= comm_range) {
                    g.adjacency[i].push_back(j);
                    g.adjacency[j].push_back(i);
                }
            }
        }
        return g;
    }
};

/// One connected component of the communication graph; member ids ascend.
struct Cluster {
    std::vector<int> members;
};

/// Connected components of the radius graph, via union-find. Clusters are
/// ordered by their smallest member id; singletons allowed.
inline std::vector<Cluster> build_clusters(std::span<const Vec2> positions,
                                           double comm_range) {
    const int n = static_cast<int>(positions.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(positions[i], positions[j]) <= comm_range) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<int> root_cluster(n, -1);
    std::vector<Cluster> clusters;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_cluster[r] < 0) {
            root_cluster[r] = static_cast<int>(clusters.size());
            clusters.emplace_back();
        }
        clusters[root_cluster[r]].members.push_back(i);
    }
    // Iteration order already yields members ascending and clusters ordered
    // by smallest member.
    return clusters;
}

/// Social term for one robot: inverse-distance magnitude, the away
/// direction, and the derived virtual global-best point.
struct RepulsionResult {
    double d_sum = 0.0;          // sum (or mean) of inverse neighbor distances, 1/m
    double r_theta = 0.0;        // repulsion direction, radians in [0, 2*pi)
    Vec2 p_gb;                   // self + d_sum * (cos r_theta, sin r_theta)
    int degenerate_neighbors = 0;  // neighbors closer than min_distance
};

/// Computes the repulsion-derived global best for a robot at `self` given
/// its in-range neighbors. The magnitude sums inverse distances (the mean
/// variant divides by the neighbor count); the direction is the angle of
/// the sum of unit vectors pointing away from each neighbor. No neighbors
/// means a null social term: d_sum = 0 and p_gb = self. Neighbors closer
/// than `min_distance` (including coincident ones) are treated as being at
/// that distance and counted as degenerate.
inline RepulsionResult repulsion(Vec2 self, std::span<const Vec2> neighbors,
                                 RepulsionAggregate aggregate = RepulsionAggregate::sum,
                                 double min_distance = 1e-6) {
    RepulsionResult res;
    res.p_gb = self;
    if (neighbors.empty()) return res;

    double inv_sum = 0.0;
    Vec2 away_sum;
    for (const Vec2& other : neighbors) {
        Vec2 away = self - other;
        double d = away.norm();
        if (d < min_distance) {
            ++res.degenerate_neighbors;
            if (d == 0.0) away = {1.0, 0.0};  // arbitrary fixed axis for a coincident pair
            d = min_distance;
        }
        inv_sum += 1.0 / d;
        away_sum += away / away.norm();
    }
    res.d_sum = aggregate == RepulsionAggregate::mean
                    ? inv_sum / static_cast<double>(neighbors.size())
                    : inv_sum;
    res.r_theta = wrap_angle(std::atan2(away_sum.y, away_sum.x));
    res.p_gb = self + res.d_sum * unit_from_angle(res.r_theta);
    return res;
}

} // namespace lfpso
