#include "ilpsumm/keyphrase.hpp"

#include <algorithm>
#include <map>

#include "ilpsumm/stemmer.hpp"

namespace ilpsumm {

namespace {

struct CandidateOcc {
    std::vector<std::string> stems;
    std::string surface;
};

std::vector<CandidateOcc> candidate_runs(const std::string& surface, const StopwordSet& stopwords,
                                         int max_phrase_len) {
    std::vector<CandidateOcc> occs;
    std::vector<RawToken> run;
    auto flush = [&] {
        if (run.empty()) return;
        if (static_cast<int>(run.size()) > max_phrase_len)
            run.resize(static_cast<std::size_t>(max_phrase_len));
        CandidateOcc occ;
        for (const RawToken& tok : run) {
            occ.stems.push_back(porter_stem(tok.lower));
            if (!occ.surface.empty()) occ.surface += ' ';
            occ.surface += tok.text;
        }
        occs.push_back(std::move(occ));
        run.clear();
    };
    for (RawToken& tok : raw_tokens(surface)) {
        if (tok.follows_break) flush();
        if (stopwords.contains(tok.lower)) {
            flush();
            continue;
        }
        run.push_back(std::move(tok));
    }
    flush();
    return occs;
}

bool contains_contiguous(const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    for (std::size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
        bool match = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
            if (haystack[start + k] != needle[k]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

std::vector<Keyphrase> extract_keyphrases(const std::vector<Document>& documents,
                                          const StopwordSet& stopwords, int max_phrase_len,
                                          int top_k) {
    std::vector<CandidateOcc> occurrences;
    for (const Document& doc : documents)
        for (const Sentence& sentence : doc.sentences)
            for (CandidateOcc& occ : candidate_runs(sentence.surface, stopwords, max_phrase_len))
                occurrences.push_back(std::move(occ));

    std::map<std::string, double> degree;
    std::map<std::string, double> frequency;
    for (const CandidateOcc& occ : occurrences) {
        double len = static_cast<double>(occ.stems.size());
        for (const std::string& stem : occ.stems) {
            degree[stem] += len;
            frequency[stem] += 1.0;
        }
    }

    std::map<std::vector<std::string>, std::string> representative;
    for (const CandidateOcc& occ : occurrences) representative.emplace(occ.stems, occ.surface);

    std::vector<Sentence> sentences;
    for (const Document& doc : documents)
        for (const Sentence& s : doc.sentences) sentences.push_back(s);

    std::vector<Keyphrase> phrases;
    for (const auto& [stems, surface] : representative) {
        bool occurs = false;
        for (const Sentence& s : sentences)
            if (contains_contiguous(s.content_stems, stems)) {
                occurs = true;
                break;
            }
        if (!occurs) continue;
        double score = 0.0;
        for (const std::string& stem : stems) score += degree[stem] / frequency[stem];
        phrases.push_back({stems, score, surface});
    }

    std::sort(phrases.begin(), phrases.end(), [](const Keyphrase& a, const Keyphrase& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.stems < b.stems;
    });
    if (static_cast<int>(phrases.size()) > top_k)
        phrases.resize(static_cast<std::size_t>(top_k));
    return phrases;
}

std::vector<std::vector<std::uint8_t>> occurrence_matrix(const std::vector<Keyphrase>& keyphrases,
                                                         const std::vector<Sentence>& sentences) {
    std::vector<std::vector<std::uint8_t>> occ(
        keyphrases.size(), std::vector<std::uint8_t>(sentences.size(), 0));
    for (std::size_t i = 0; i < keyphrases.size(); ++i)
        for (std::size_t j = 0; j < sentences.size(); ++j)
            occ[i][j] =
                contains_contiguous(sentences[j].content_stems, keyphrases[i].stems) ? 1 : 0;
    return occ;
}

}  // namespace ilpsumm
