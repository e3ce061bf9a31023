#include "vckm/dense_oracle.hpp"

#include <stdexcept>

#include "vckm/kernels.hpp"

namespace vckm {

namespace {

void check_cluster(const std::vector<std::vector<double>>& points, std::span<const int> cluster) {
    if (cluster.empty()) throw std::invalid_argument("dense oracle: empty cluster");
    std::size_t dim = points.empty() ? 0 : points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw std::invalid_argument("dense oracle: dimension mismatch");
    for (int i : cluster)
        if (i < 0 || i >= (int)points.size())
            throw std::invalid_argument("dense oracle: cluster index out of range");
}

}  // namespace

std::vector<double> dense_centroid(const std::vector<std::vector<double>>& points,
                                   std::span<const int> cluster) {
    check_cluster(points, cluster);
    std::vector<double> centroid(points[cluster[0]].size(), 0.0);
    for (int i : cluster) kernels::vec_accumulate(centroid.data(), points[i].data(), centroid.size());
    for (double& c : centroid) c /= (double)cluster.size();
    return centroid;
}

double dense_cost_about(const std::vector<std::vector<double>>& points, std::span<const int> cluster,
                        std::span<const double> center) {
    check_cluster(points, cluster);
    if (center.size() != points[cluster[0]].size())
        throw std::invalid_argument("dense oracle: center dimension mismatch");
    double total = 0.0;
    for (int i : cluster) total += kernels::sum_sq_diff(points[i].data(), center.data(), center.size());
    return total;
}

double dense_cost_oracle(const std::vector<std::vector<double>>& points, std::span<const int> cluster) {
    std::vector<double> centroid = dense_centroid(points, cluster);
    return dense_cost_about(points, cluster, centroid);
}

std::vector<std::vector<double>> dense_points(const KMeansInstance& inst) {
    std::vector<std::vector<double>> out;
    out.reserve(inst.points.size());
    for (const auto& p : inst.points) {
        std::vector<double> row(inst.dimension, 0.0);
        row[p.u] = 1.0;
        row[p.v] = 1.0;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace vckm
