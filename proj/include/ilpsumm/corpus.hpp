#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "ilpsumm/stopwords.hpp"
#include "ilpsumm/text.hpp"

namespace ilpsumm {

struct Sentence {
    std::string doc_id;
    int index_in_doc = 0;
    std::string surface;
    std::vector<std::string> tokens;         // lowercased word tokens
    std::vector<std::string> content_stems;  // stems of non-stopword tokens, in token order
    std::set<std::string> named_entities;    // canonical lowercase strings
    int word_count = 1;                      // whitespace-delimited fields in surface
};

struct Document {
    std::string id;  // file stem
    std::string raw_text;
    std::vector<Sentence> sentences;
};

// Splits on '.', '!', '?' followed by whitespace or end of text. A run of
// terminators splits once, after its last mark. Periods preceded by a word
// on the abbreviation guard list (or a single letter, as in initials) do
// not split. Segments with fewer than three word tokens are appended to the
// previous segment.
std::vector<std::string> split_sentences(const std::string& text);

// Fills tokens, content_stems and word_count from surface.
void preprocess(Sentence& sentence, const StopwordSet& stopwords);

// Lowercased tokens that occur capitalized somewhere other than in sentence-
// initial position; feeds the sentence-initial entity rule below.
std::set<std::string> mid_sentence_capitalized(const std::vector<std::string>& sentence_surfaces);

// Maximal runs of capitalized tokens are entities; punctuation between
// tokens breaks a run. A run's sentence-initial first token is kept only if
// that token occurs capitalized mid-sentence elsewhere in the cluster.
std::set<std::string> detect_entities(const std::string& surface,
                                      const std::set<std::string>& mid_sentence_caps);

// Loads every .txt file in dir (lexicographic filename order) as one
// document and runs the full preprocessing chain, including cluster-wide
// entity detection.
std::vector<Document> load_cluster(const std::filesystem::path& dir, const StopwordSet& stopwords);

// Cluster sentences flattened in document order.
std::vector<Sentence> all_sentences(const std::vector<Document>& docs);

}  // namespace ilpsumm
