#pragma once

#include <set>
#include <string>
#include <vector>

#include "ilpsumm/corpus.hpp"
#include "ilpsumm/embedding.hpp"

namespace ilpsumm {

struct SimilarityParams {
    double lambda = 0.0;  // weight of entity overlap vs cosine
};

// Cosine of the angle between sentence vectors; zero vectors compare as 0.
double cos_sim(const SentenceVector& u, const SentenceVector& v);

// Entity overlap normalized by the smaller set; 0 when either set is empty.
double ne_sim(const std::set<std::string>& a, const std::set<std::string>& b);

// lambda * ne + (1 - lambda) * cos. Throws when lambda is outside [0,1].
double blend_sim(double ne, double cos, SimilarityParams params);

struct EmbeddedSentence {
    Sentence sentence;
    SentenceVector vector;
};

double sim(const EmbeddedSentence& a, const EmbeddedSentence& b, SimilarityParams params);

std::vector<EmbeddedSentence> embed_sentences(std::vector<Sentence> sentences,
                                              const EmbeddingTable& table,
                                              const StopwordSet& stopwords);

// Pairwise NESim and CosSim computed once; callers blend with whichever
// lambda their stage uses.
class SimilarityCache {
public:
    SimilarityCache() = default;
    explicit SimilarityCache(const std::vector<EmbeddedSentence>& sentences);

    std::size_t size() const { return n_; }
    double cos(std::size_t i, std::size_t j) const { return cos_[i * n_ + j]; }
    double ne(std::size_t i, std::size_t j) const { return ne_[i * n_ + j]; }
    double sim(std::size_t i, std::size_t j, double lambda) const {
        return blend_sim(ne(i, j), cos(i, j), {lambda});
    }

private:
    std::size_t n_ = 0;
    std::vector<double> cos_;
    std::vector<double> ne_;
};

}  // namespace ilpsumm
