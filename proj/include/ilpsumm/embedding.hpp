#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "ilpsumm/corpus.hpp"

namespace ilpsumm {

struct SentenceVector {
    std::vector<double> values;
    bool is_zero = true;
};

class EmbeddingTable {
public:
    // word2vec text format: header "vocab_size dim", then one word and dim
    // reals per line. Duplicate words keep the first occurrence.
    static EmbeddingTable load(const std::filesystem::path& path);

    EmbeddingTable() = default;
    explicit EmbeddingTable(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    std::size_t size() const { return vocab_.size(); }

    // nullptr when the word is absent.
    const std::vector<double>* find(const std::string& word) const;

    // Keeps the first vector for a repeated word; rejects wrong dimensions.
    void insert(const std::string& word, std::vector<double> vec);

private:
    int dim_ = 0;
    std::unordered_map<std::string, std::vector<double>> vocab_;
};

// TF-weighted sum of embeddings over the sentence's non-stopword tokens,
// with TF the raw in-sentence count. Lookup tries the surface token first,
// then its stem; tokens absent from the table contribute nothing.
SentenceVector sentence_vector(const Sentence& sentence, const EmbeddingTable& table,
                               const StopwordSet& stopwords);

}  // namespace ilpsumm
