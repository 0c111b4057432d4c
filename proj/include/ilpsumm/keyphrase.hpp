#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ilpsumm/corpus.hpp"

namespace ilpsumm {

struct Keyphrase {
    std::vector<std::string> stems;  // contiguous phrase in stem space
    double weight = 0.0;
    std::string surface;  // first-seen original spelling
};

// RAKE over the whole cluster: candidate phrases are maximal non-stopword
// token runs (punctuation also delimits), truncated to max_phrase_len.
// Word score is deg/freq aggregated over every candidate occurrence in stem
// space; a phrase scores the sum of its word scores. Duplicates collapse by
// stem sequence; the top_k by weight survive, ties resolved by stem
// sequence. Phrases that never occur in a sentence's content stems are
// dropped.
std::vector<Keyphrase> extract_keyphrases(const std::vector<Document>& documents,
                                          const StopwordSet& stopwords, int max_phrase_len = 4,
                                          int top_k = 30);

// occ[i][j] = 1 iff keyphrase i's stems appear contiguously in sentence j's
// content_stems.
std::vector<std::vector<std::uint8_t>> occurrence_matrix(const std::vector<Keyphrase>& keyphrases,
                                                         const std::vector<Sentence>& sentences);

}  // namespace ilpsumm
