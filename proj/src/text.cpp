#include "ilpsumm/text.hpp"

#include <cctype>

namespace ilpsumm {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

}  // namespace

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<RawToken> raw_tokens(const std::string& text) {
    std::vector<RawToken> out;
    bool pending_break = false;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            std::size_t start = i;
            while (i < n && is_word_char(static_cast<unsigned char>(text[i]))) ++i;
            RawToken tok;
            tok.text = text.substr(start, i - start);
            tok.lower = to_lower(tok.text);
            tok.capitalized = std::isupper(static_cast<unsigned char>(tok.text[0])) != 0;
            tok.follows_break = pending_break;
            out.push_back(std::move(tok));
            pending_break = false;
        } else {
            if (!std::isspace(c)) pending_break = true;
            ++i;
        }
    }
    return out;
}

std::vector<std::string> word_tokens(const std::string& text) {
    std::vector<std::string> out;
    for (auto& tok : raw_tokens(text)) out.push_back(std::move(tok.lower));
    return out;
}

int whitespace_field_count(const std::string& s) {
    int count = 0;
    bool in_field = false;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            in_field = false;
        } else if (!in_field) {
            in_field = true;
            ++count;
        }
    }
    return count;
}

bool is_valid_utf8(const std::string& bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t extra;
        unsigned int min_cp;
        unsigned int cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            min_cp = 0x80;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            min_cp = 0x800;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            min_cp = 0x10000;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= n) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += extra + 1;
    }
    return true;
}

}  // namespace ilpsumm
