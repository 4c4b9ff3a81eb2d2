#pragma once
#include <string>

#include "dofc/system.hpp"

namespace dofc {

enum class SystemFormat { Dsl, Json };

// Parse a system document. DSL lines:
//   dimension <int>
//   variables <name> ...            (optional; default d0..d{dim-1})
//   parameter <name> = <rational>
//   field <name> [order <int>]
//   equation <name>: <expression>
// Expressions are +,-,*,/,^ over rationals, 'i', parameters, the
// differentiation symbols, fields, and parentheses; each equation must be
// linear in the fields with no constant part. '#' starts a comment.
DiffSystem parse_system(const std::string& text, SystemFormat fmt);

// Dispatch on extension: .dofsys -> DSL, .json -> JSON.
DiffSystem load_system_file(const std::string& path);

// Canonical DSL serialization (used by the completion command); parses back
// to the same system.
std::string emit_dsl(const DiffSystem& sys);

} // namespace dofc
