#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace picgram {

/// `base'k` for the smallest k >= 1 not in `taken`.
inline std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "'" + std::to_string(k);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
}

/// `preferred` if free, otherwise a fresh name built on it.
inline std::string free_name(const std::string& preferred, const std::vector<std::string>& taken) {
  if (std::find(taken.begin(), taken.end(), preferred) == taken.end()) return preferred;
  return fresh_name(preferred, taken);
}

}  // namespace picgram
