#pragma once

#include <functional>
#include <vector>

#include "ilpsumm/similarity.hpp"

namespace ilpsumm {

struct Merge {
    int a = 0;  // smaller representative (min member index) of the merged pair
    int b = 0;  // larger representative
    double linkage = 0.0;
};

struct Clustering {
    std::vector<std::vector<int>> groups;  // partition; groups ordered by min index
    double tau = 0.5;
    std::vector<Merge> merge_log;
};

// Complete-linkage agglomerative clustering over an arbitrary symmetric
// pairwise similarity. Merges the pair of clusters whose minimum pairwise
// member similarity is maximal while that value stays >= tau; ties go to
// the pair with the smallest (min representative, other representative).
Clustering cluster_from_sims(int n, const std::function<double(int, int)>& sim, double tau);

Clustering cluster_sentences(const SimilarityCache& sims, double tau = 0.5, double lambda = 0.4);

}  // namespace ilpsumm
