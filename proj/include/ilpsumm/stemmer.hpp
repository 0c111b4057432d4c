#pragma once

#include <string>

namespace ilpsumm {

// Porter suffix-stripping stemmer. Expects a lowercased word; words shorter
// than three characters or containing anything but ASCII letters are
// returned unchanged.
std::string porter_stem(std::string word);

}  // namespace ilpsumm
