#include "ilpsumm/textrank.hpp"

#include <algorithm>
#include <cmath>

namespace ilpsumm {

SentenceGraph build_graph(const SimilarityCache& sims, double lambda) {
    SentenceGraph g;
    g.n = static_cast<int>(sims.size());
    g.weights.assign(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n), 0.0);
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            double w = std::max(0.0, sims.sim(static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j), lambda));
            g.at(i, j) = w;
            g.at(j, i) = w;
        }
    }
    return g;
}

SentenceGraph build_graph(const std::vector<Sentence>& sentences, const EmbeddingTable& table,
                          const StopwordSet& stopwords, double lambda) {
    SimilarityCache cache(embed_sentences(sentences, table, stopwords));
    return build_graph(cache, lambda);
}

RankVector rank(const SentenceGraph& graph, double damping, double eps, int max_iterations) {
    const int n = graph.n;
    std::vector<double> out_sum(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += graph.at(j, k);
        out_sum[static_cast<std::size_t>(j)] = s;
    }

    RankVector result;
    result.ranks.assign(static_cast<std::size_t>(n), 1.0);
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (int iter = 1; iter <= max_iterations; ++iter) {
        double max_delta = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                double w = graph.at(i, j);
                if (w > 0.0) acc += w / out_sum[static_cast<std::size_t>(j)] *
                                    result.ranks[static_cast<std::size_t>(j)];
            }
            double updated = (1.0 - damping) + damping * acc;
            next[static_cast<std::size_t>(i)] = updated;
            max_delta = std::max(max_delta,
                                 std::fabs(updated - result.ranks[static_cast<std::size_t>(i)]));
        }
        result.ranks.swap(next);
        result.iterations = iter;
        if (max_delta < eps) {
            result.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace ilpsumm
