#include "ilpsumm/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilpsumm {

double cos_sim(const SentenceVector& u, const SentenceVector& v) {
    if (u.values.size() != v.values.size())
        throw std::invalid_argument("cos_sim: dimension mismatch");
    double dot = 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (std::size_t d = 0; d < u.values.size(); ++d) {
        dot += u.values[d] * v.values[d];
        nu += u.values[d] * u.values[d];
        nv += v.values[d] * v.values[d];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double ne_sim(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::size_t smaller = std::min(a.size(), b.size());
    if (smaller == 0) return 0.0;
    std::size_t overlap = 0;
    const auto& probe = a.size() <= b.size() ? a : b;
    const auto& other = a.size() <= b.size() ? b : a;
    for (const std::string& e : probe)
        if (other.count(e)) ++overlap;
    return static_cast<double>(overlap) / static_cast<double>(smaller);
}

double blend_sim(double ne, double cos, SimilarityParams params) {
    if (!(params.lambda >= 0.0 && params.lambda <= 1.0))
        throw std::invalid_argument("similarity lambda must be in [0,1]");
    return params.lambda * ne + (1.0 - params.lambda) * cos;
}

double sim(const EmbeddedSentence& a, const EmbeddedSentence& b, SimilarityParams params) {
    return blend_sim(ne_sim(a.sentence.named_entities, b.sentence.named_entities),
                     cos_sim(a.vector, b.vector), params);
}

std::vector<EmbeddedSentence> embed_sentences(std::vector<Sentence> sentences,
                                              const EmbeddingTable& table,
                                              const StopwordSet& stopwords) {
    std::vector<EmbeddedSentence> out;
    out.reserve(sentences.size());
    for (Sentence& s : sentences) {
        SentenceVector vec = sentence_vector(s, table, stopwords);
        out.push_back({std::move(s), std::move(vec)});
    }
    return out;
}

SimilarityCache::SimilarityCache(const std::vector<EmbeddedSentence>& sentences)
    : n_(sentences.size()), cos_(n_ * n_, 0.0), ne_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            double c = cos_sim(sentences[i].vector, sentences[j].vector);
            double e = ne_sim(sentences[i].sentence.named_entities,
                              sentences[j].sentence.named_entities);
            cos_[i * n_ + j] = cos_[j * n_ + i] = c;
            ne_[i * n_ + j] = ne_[j * n_ + i] = e;
        }
        cos_[i * n_ + i] = cos_sim(sentences[i].vector, sentences[i].vector);
        ne_[i * n_ + i] = ne_sim(sentences[i].sentence.named_entities,
                                 sentences[i].sentence.named_entities);
    }
}

}  // namespace ilpsumm
