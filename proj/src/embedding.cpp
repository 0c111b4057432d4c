#include "ilpsumm/embedding.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ilpsumm/stemmer.hpp"

namespace ilpsumm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(std::move(field));
    return fields;
}

double parse_real(const std::string& s, const std::string& path, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": non-numeric vector component '" + s + "'");
    return value;
}

}  // namespace

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open embeddings file: " + path.string());

    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line))
        throw std::runtime_error(path.string() + ":1: empty embeddings file");
    auto header = split_fields(line);
    long declared_vocab = 0;
    long dim = 0;
    if (header.size() != 2)
        throw std::runtime_error(path.string() + ":1: malformed header, expected 'vocab_size dim'");
    try {
        declared_vocab = std::stol(header[0]);
        dim = std::stol(header[1]);
    } catch (const std::exception&) {
        throw std::runtime_error(path.string() + ":1: malformed header, expected 'vocab_size dim'");
    }
    if (declared_vocab < 0 || dim <= 0)
        throw std::runtime_error(path.string() + ":1: malformed header, expected 'vocab_size dim'");

    EmbeddingTable table(static_cast<int>(dim));
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != static_cast<std::size_t>(dim) + 1)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(dim) + " components, found " +
                                     std::to_string(fields.size() - 1));
        std::vector<double> vec(static_cast<std::size_t>(dim));
        for (long d = 0; d < dim; ++d)
            vec[static_cast<std::size_t>(d)] =
                parse_real(fields[static_cast<std::size_t>(d) + 1], path.string(), line_no);
        table.insert(fields[0], std::move(vec));
    }
    return table;
}

const std::vector<double>* EmbeddingTable::find(const std::string& word) const {
    auto it = vocab_.find(word);
    return it == vocab_.end() ? nullptr : &it->second;
}

void EmbeddingTable::insert(const std::string& word, std::vector<double> vec) {
    if (static_cast<int>(vec.size()) != dim_)
        throw std::invalid_argument("embedding vector has wrong dimension for word '" + word + "'");
    vocab_.emplace(word, std::move(vec));  // emplace keeps the first occurrence
}

SentenceVector sentence_vector(const Sentence& sentence, const EmbeddingTable& table,
                               const StopwordSet& stopwords) {
    std::map<std::string, int> tf;
    for (const std::string& tok : sentence.tokens)
        if (!stopwords.contains(tok)) ++tf[tok];

    SentenceVector result;
    result.values.assign(static_cast<std::size_t>(table.dim()), 0.0);
    for (const auto& [word, count] : tf) {
        const std::vector<double>* vec = table.find(word);
        if (!vec) vec = table.find(porter_stem(word));
        if (!vec) continue;
        for (std::size_t d = 0; d < vec->size(); ++d)
            result.values[d] += static_cast<double>(count) * (*vec)[d];
    }
    result.is_zero = true;
    for (double v : result.values)
        if (v != 0.0) {
            result.is_zero = false;
            break;
        }
    return result;
}

}  // namespace ilpsumm
