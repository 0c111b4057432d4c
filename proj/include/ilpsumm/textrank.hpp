#pragma once

#include <vector>

#include "ilpsumm/similarity.hpp"

namespace ilpsumm {

// Complete weighted sentence graph: symmetric, zero diagonal, nonnegative
// weights (negative similarities are clamped at construction).
struct SentenceGraph {
    int n = 0;
    std::vector<double> weights;  // n*n row-major

    double at(int i, int j) const {
        return weights[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return weights[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
};

struct RankVector {
    std::vector<double> ranks;
    int iterations = 0;
    bool converged = false;
};

SentenceGraph build_graph(const SimilarityCache& sims, double lambda = 0.3);
SentenceGraph build_graph(const std::vector<Sentence>& sentences, const EmbeddingTable& table,
                          const StopwordSet& stopwords, double lambda = 0.3);

// Jacobi iteration of the damped update rule from all-ones until the
// largest per-node change drops below eps. Nodes with no positive-weight
// neighbor sit at exactly (1 - damping).
RankVector rank(const SentenceGraph& graph, double damping = 0.85, double eps = 1e-6,
                int max_iterations = 200);

}  // namespace ilpsumm
