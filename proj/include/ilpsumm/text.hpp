#pragma once

#include <string>
#include <vector>

namespace ilpsumm {

/// A word token as it appears in running text, with enough surrounding
/// context to reconstruct capitalization runs later on.
struct RawToken {
    std::string text;            // original spelling
    std::string lower;           // lowercased spelling
    bool capitalized = false;    // first character is an uppercase ASCII letter
    bool follows_break = false;  // punctuation sits between this token and the previous one
};

// Word characters are ASCII letters and digits; everything else separates
// tokens. Non-whitespace separators additionally mark a break before the
// following token.
std::vector<RawToken> raw_tokens(const std::string& text);

// Lowercased word tokens in text order.
std::vector<std::string> word_tokens(const std::string& text);

std::string to_lower(std::string s);

// Number of whitespace-delimited fields.
int whitespace_field_count(const std::string& s);

bool is_valid_utf8(const std::string& bytes);

}  // namespace ilpsumm
