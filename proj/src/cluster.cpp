#include "ilpsumm/cluster.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ilpsumm {

namespace {

double complete_linkage(const std::vector<int>& a, const std::vector<int>& b,
                        const std::function<double(int, int)>& sim) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int i : a)
        for (int j : b) lowest = std::min(lowest, sim(i, j));
    return lowest;
}

}  // namespace

Clustering cluster_from_sims(int n, const std::function<double(int, int)>& sim, double tau) {
    if (n < 1) throw std::invalid_argument("cluster_from_sims: need at least one sentence");

    std::vector<std::vector<int>> clusters;
    clusters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) clusters.push_back({i});

    Clustering result;
    result.tau = tau;
    while (clusters.size() > 1) {
        double best_linkage = -std::numeric_limits<double>::infinity();
        std::size_t best_a = 0;
        std::size_t best_b = 0;
        int best_p = 0;
        int best_q = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                double linkage = complete_linkage(clusters[a], clusters[b], sim);
                int p = std::min(clusters[a].front(), clusters[b].front());
                int q = std::max(clusters[a].front(), clusters[b].front());
                bool better = linkage > best_linkage ||
                              (linkage == best_linkage &&
                               (p < best_p || (p == best_p && q < best_q)));
                if (better) {
                    best_linkage = linkage;
                    best_a = a;
                    best_b = b;
                    best_p = p;
                    best_q = q;
                }
            }
        }
        if (best_linkage < tau) break;
        auto& target = clusters[best_a];
        target.insert(target.end(), clusters[best_b].begin(), clusters[best_b].end());
        std::sort(target.begin(), target.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
        result.merge_log.push_back({best_p, best_q, best_linkage});
    }

    std::sort(clusters.begin(), clusters.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    result.groups = std::move(clusters);
    return result;
}

Clustering cluster_sentences(const SimilarityCache& sims, double tau, double lambda) {
    return cluster_from_sims(
        static_cast<int>(sims.size()),
        [&sims, lambda](int i, int j) {
            return sims.sim(static_cast<std::size_t>(i), static_cast<std::size_t>(j), lambda);
        },
        tau);
}

}  // namespace ilpsumm
