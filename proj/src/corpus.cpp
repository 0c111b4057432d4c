#include "ilpsumm/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ilpsumm/stemmer.hpp"

namespace ilpsumm {

namespace {

// Words whose trailing period does not end a sentence. Stored lowercase
// without the final period; dotted abbreviations keep their inner periods.
const std::set<std::string>& abbreviation_guard() {
    static const std::set<std::string> guard = {
        "mr", "mrs", "ms", "dr", "prof", "gen", "lt", "col", "sgt", "capt",
        "cmdr", "adm", "maj", "gov", "sen", "rep", "st", "jr", "sr", "vs",
        "etc", "e.g", "i.e", "u.s", "u.n", "u.k", "e.u", "a.m", "p.m",
        "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
        "oct", "nov", "dec", "mt", "co", "inc", "corp", "ltd",
        "ave", "blvd", "rd",
    };
    return guard;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// The word immediately before position pos, stripped of leading quotes and
// brackets, lowercased.
std::string word_before(const std::string& text, std::size_t pos) {
    std::size_t end = pos;
    std::size_t start = end;
    while (start > 0 && !std::isspace(static_cast<unsigned char>(text[start - 1]))) --start;
    while (start < end && !std::isalnum(static_cast<unsigned char>(text[start]))) ++start;
    return to_lower(text.substr(start, end - start));
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> segments;
    std::size_t seg_start = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_terminator(text[i])) {
            ++i;
            continue;
        }
        std::size_t run_start = i;
        std::size_t run_end = i;
        while (run_end + 1 < n && is_terminator(text[run_end + 1])) ++run_end;
        bool at_boundary = run_end + 1 == n ||
                           std::isspace(static_cast<unsigned char>(text[run_end + 1]));
        bool guarded = false;
        if (at_boundary && text[run_start] == '.' && run_start == run_end) {
            std::string prev = word_before(text, run_start);
            guarded = !prev.empty() &&
                      (abbreviation_guard().count(prev) != 0 || prev.size() == 1);
        }
        if (at_boundary && !guarded) {
            segments.push_back(text.substr(seg_start, run_end + 1 - seg_start));
            seg_start = run_end + 1;
        }
        i = run_end + 1;
    }
    if (seg_start < n) segments.push_back(text.substr(seg_start));

    std::vector<std::string> out;
    for (const std::string& raw : segments) {
        std::string seg = trim(raw);
        if (seg.empty()) continue;
        if (!out.empty() && word_tokens(seg).size() < 3) {
            out.back() += " " + seg;
        } else {
            out.push_back(std::move(seg));
        }
    }
    return out;
}

void preprocess(Sentence& sentence, const StopwordSet& stopwords) {
    sentence.tokens = word_tokens(sentence.surface);
    sentence.content_stems.clear();
    for (const std::string& tok : sentence.tokens)
        if (!stopwords.contains(tok)) sentence.content_stems.push_back(porter_stem(tok));
    sentence.word_count = whitespace_field_count(sentence.surface);
}

std::set<std::string> mid_sentence_capitalized(const std::vector<std::string>& sentence_surfaces) {
    std::set<std::string> caps;
    for (const std::string& surface : sentence_surfaces) {
        auto toks = raw_tokens(surface);
        for (std::size_t p = 1; p < toks.size(); ++p)
            if (toks[p].capitalized) caps.insert(toks[p].lower);
    }
    return caps;
}

std::set<std::string> detect_entities(const std::string& surface,
                                      const std::set<std::string>& mid_sentence_caps) {
    std::set<std::string> entities;
    auto toks = raw_tokens(surface);
    std::size_t i = 0;
    while (i < toks.size()) {
        if (!toks[i].capitalized) {
            ++i;
            continue;
        }
        std::size_t run_start = i;
        std::size_t run_end = i + 1;
        while (run_end < toks.size() && toks[run_end].capitalized && !toks[run_end].follows_break)
            ++run_end;
        std::size_t first = run_start;
        if (run_start == 0 && mid_sentence_caps.count(toks[0].lower) == 0) ++first;
        if (first < run_end) {
            std::string joined;
            for (std::size_t p = first; p < run_end; ++p) {
                if (!joined.empty()) joined += ' ';
                joined += toks[p].lower;
            }
            entities.insert(std::move(joined));
        }
        i = run_end;
    }
    return entities;
}

std::vector<Document> load_cluster(const std::filesystem::path& dir, const StopwordSet& stopwords) {
    namespace fs = std::filesystem;
    if (!fs::exists(dir) || !fs::is_directory(dir))
        throw std::runtime_error("input directory does not exist: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    if (files.empty()) throw std::runtime_error("no input documents in " + dir.string());

    std::vector<Document> docs;
    for (const fs::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read input file: " + file.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        Document doc;
        doc.id = file.stem().string();
        doc.raw_text = buf.str();
        if (!is_valid_utf8(doc.raw_text))
            throw std::runtime_error("file is not valid UTF-8: " + file.string());
        int index = 0;
        for (std::string& surface : split_sentences(doc.raw_text)) {
            Sentence s;
            s.doc_id = doc.id;
            s.index_in_doc = index++;
            s.surface = std::move(surface);
            preprocess(s, stopwords);
            doc.sentences.push_back(std::move(s));
        }
        docs.push_back(std::move(doc));
    }

    std::vector<std::string> surfaces;
    for (const Document& doc : docs)
        for (const Sentence& s : doc.sentences) surfaces.push_back(s.surface);
    std::set<std::string> caps = mid_sentence_capitalized(surfaces);
    for (Document& doc : docs)
        for (Sentence& s : doc.sentences) s.named_entities = detect_entities(s.surface, caps);
    return docs;
}

std::vector<Sentence> all_sentences(const std::vector<Document>& docs) {
    std::vector<Sentence> out;
    for (const Document& doc : docs)
        for (const Sentence& s : doc.sentences) out.push_back(s);
    return out;
}

}  // namespace ilpsumm
