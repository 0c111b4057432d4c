#pragma once

#include <filesystem>
#include <set>
#include <string>

namespace ilpsumm {

class StopwordSet {
public:
    // Bundled English list; data/stopwords.txt ships the same words.
    static const StopwordSet& builtin();

    // One word per line; blank lines ignored, words lowercased.
    static StopwordSet from_file(const std::filesystem::path& path);

    bool contains(const std::string& lower_word) const { return words_.count(lower_word) != 0; }
    std::size_t size() const { return words_.size(); }
    const std::set<std::string>& words() const { return words_; }

private:
    std::set<std::string> words_;
};

}  // namespace ilpsumm
