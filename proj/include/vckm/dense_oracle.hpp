#pragma once

#include <span>
#include <vector>

#include "vckm/reduction.hpp"

namespace vckm {

// Independent floating-point route to the cluster cost: materialize
// coordinates, average them, and sum squared distances. Used to validate the
// exact closed form, never the other way round.

// Sum over the cluster of squared distances to the centroid.
double dense_cost_oracle(const std::vector<std::vector<double>>& points, std::span<const int> cluster);

// Same sum about an arbitrary center (for centroid-optimality probes).
double dense_cost_about(const std::vector<std::vector<double>>& points, std::span<const int> cluster,
                        std::span<const double> center);

std::vector<double> dense_centroid(const std::vector<std::vector<double>>& points,
                                   std::span<const int> cluster);

// Materialize an instance's 0/1 coordinates.
std::vector<std::vector<double>> dense_points(const KMeansInstance& inst);

}  // namespace vckm
