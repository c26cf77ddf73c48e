#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ordcalc/term.hpp"

namespace ordcalc {

using NameResolver = std::function<std::optional<TermPtr>(const std::string&)>;

// Recursive-descent parser for the term language:
//   term := nat | "w" | "w*" | "k" | "k*" | "Q" | "Qk" | "ac(" nat ")" | "ac(w)"
//         | "ord(" cnf ")" | "fin(" nat ";" pairs ")" | "inv(" term ")"
//         | "sum(" term "," term ")" | "lsum(" finposet-literal ";" term {"," term} ")"
//         | "limsum(" term "," term ["," address] ")" | IDENT
// finposet-literal := "fin(" nat ";" pairs ")" | "ac(" nat ")" | nat
// Unknown identifiers are resolved through the resolver; syntax errors carry
// line and column.
TermPtr parse_term(const std::string& text, const NameResolver& resolver = nullptr);

} // namespace ordcalc
