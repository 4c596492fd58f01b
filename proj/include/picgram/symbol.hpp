#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace picgram {

/// A pixel value. Terminals are their character code; nonterminals of a
/// grammar live above the character range so both can share one picture type.
struct Symbol {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr std::uint32_t kNonterminalBase = 256;

/// The frame symbol of bordered pictures. Never part of an alphabet.
inline constexpr Symbol kBoundary{'#'};

constexpr Symbol terminal(char c) { return Symbol{static_cast<unsigned char>(c)}; }
constexpr Symbol nonterminal(std::size_t index) {
  return Symbol{kNonterminalBase + static_cast<std::uint32_t>(index)};
}

constexpr bool is_boundary(Symbol s) { return s == kBoundary; }
constexpr bool is_terminal(Symbol s) { return s.code < kNonterminalBase && s != kBoundary; }
constexpr bool is_nonterminal(Symbol s) { return s.code >= kNonterminalBase; }
constexpr std::size_t nonterminal_index(Symbol s) { return s.code - kNonterminalBase; }
constexpr char terminal_char(Symbol s) { return static_cast<char>(s.code); }

/// Printable, non-space, and not the boundary symbol.
constexpr bool is_valid_terminal_char(char c) {
  return c > ' ' && c < 127 && c != '#';
}

using SymbolNamer = std::function<std::string(Symbol)>;

/// Names terminals and the boundary by their character, nonterminals as `N<i>`.
inline std::string default_symbol_name(Symbol s) {
  if (is_nonterminal(s)) return "N" + std::to_string(nonterminal_index(s));
  return std::string(1, static_cast<char>(s.code));
}

}  // namespace picgram

template <>
struct std::hash<picgram::Symbol> {
  std::size_t operator()(picgram::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.code); }
};
