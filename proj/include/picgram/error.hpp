#pragma once

#include <stdexcept>
#include <string>

namespace picgram {

enum class errc {
  row_mismatch,
  column_mismatch,
  out_of_range,
  too_small,
  sentinel_argument,
  empty_picture,
  alphabet,
  concave_tile,
  degenerate_grammar,
  invalid_grammar,
  not_normal_form,
  syntax,
  budget_exceeded,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::row_mismatch: return "row mismatch";
    case errc::column_mismatch: return "column mismatch";
    case errc::out_of_range: return "out of range";
    case errc::too_small: return "picture too small";
    case errc::sentinel_argument: return "sentinel argument";
    case errc::empty_picture: return "empty picture";
    case errc::alphabet: return "alphabet violation";
    case errc::concave_tile: return "concave tile";
    case errc::degenerate_grammar: return "degenerate grammar";
    case errc::invalid_grammar: return "invalid grammar";
    case errc::not_normal_form: return "not in normal form";
    case errc::syntax: return "syntax error";
    case errc::budget_exceeded: return "budget exceeded";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace picgram
