#pragma once

#include "lexirev/cnf.hpp"

#include <map>
#include <string>
#include <string_view>

namespace lexirev {

/// 1-based DIMACS indices, in order of first occurrence in c.
std::map<Var, int> index_variables(const Cnf& c);

enum class NameComments { Emit, Omit };

/// DIMACS CNF text. With NameComments::Emit, one "c var <n> = <name>" line
/// per variable precedes the header. Every line ends in '\n'.
/// Throws std::invalid_argument unless `index` maps the variables of c
/// bijectively onto 1..V.
std::string export_dimacs(const Cnf& c, const std::map<Var, int>& index,
                          NameComments comments = NameComments::Emit);
std::string export_dimacs(const Cnf& c, NameComments comments = NameComments::Emit);

/// Parses DIMACS CNF. Variables named by "c var <n> = <name>" comments keep
/// that name; the others become "x<n>". Throws DimacsError with the line
/// number on malformed input.
Cnf import_dimacs(std::string_view text);

/// True if the text has a "p cnf" header line.
bool looks_like_dimacs(std::string_view text);

} // namespace lexirev
