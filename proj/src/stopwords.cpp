#include "ilpsumm/stopwords.hpp"

#include <fstream>
#include <stdexcept>

#include "ilpsumm/text.hpp"

namespace ilpsumm {

namespace {

const char* const kBuiltinStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "although",
    "am", "among", "an", "and", "any", "are", "around", "as", "at", "be",
    "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "cannot", "could", "despite", "did", "do", "does", "doing",
    "down", "during", "each", "either", "few", "for", "from", "further", "had",
    "has", "have", "having", "he", "her", "here", "hers", "herself", "him",
    "himself", "his", "how", "however", "i", "if", "in", "into", "is", "it",
    "its", "itself", "just", "may", "me", "might", "more", "most", "must",
    "my", "myself", "neither", "no", "nor", "not", "now", "of", "off", "on",
    "once", "only", "onto", "or", "other", "our", "ours", "ourselves", "out",
    "over", "own", "per", "rather", "same", "shall", "she", "should", "since",
    "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those", "through",
    "to", "too", "toward", "towards", "under", "until", "up", "upon", "very",
    "via", "was", "we", "were", "what", "when", "where", "whether", "which",
    "while", "who", "whom", "why", "will", "with", "within", "without",
    "would", "you", "your", "yours", "yourself", "yourselves",
};

}  // namespace

const StopwordSet& StopwordSet::builtin() {
    static const StopwordSet instance = [] {
        StopwordSet s;
        for (const char* w : kBuiltinStopwords) s.words_.insert(w);
        return s;
    }();
    return instance;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path.string());
    StopwordSet s;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        s.words_.insert(to_lower(line.substr(start)));
    }
    return s;
}

}  // namespace ilpsumm
