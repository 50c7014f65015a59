#pragma once

#include "lexirev/formula.hpp"

#include <string_view>

namespace lexirev {

/// Parses one formula.
///
///   formula := iff
///   iff     := imp ("<->" imp)*     left-associative
///   imp     := or ("->" or)*        right-associative
///   or      := and ("|" and)*
///   and     := neg ("&" neg)*
///   neg     := "!" neg | atom
///   atom    := IDENT | "true" | "false" | "(" formula ")"
///
/// Whitespace is insignificant and '#' starts a comment running to the end of
/// the line. A chain "a & b & c" becomes one n-ary node. Identifiers starting
/// with "__" are reserved for generated variables and rejected.
///
/// Throws ParseError.
Formula parse_formula(std::string_view text);

} // namespace lexirev
