#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revcat/syntax.hpp"

namespace revcat::lang {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, std::string message, std::vector<std::string> expected);
  int line, col;
  std::vector<std::string> expected;  // expected-token set at the failure point
};

// Parses a whole program; the builtin `unit` enum is predeclared.
// Grammar (see README): enum decls, iso defs, optional `main = term`.
Program parseProgram(std::string_view text);

// Entry points used by tests and the CLI for fragments.
TypePtr parseType(std::string_view text, const Program& scope);
ValuePtr parseValue(std::string_view text, const Program& scope);
TermPtr parseTerm(std::string_view text, const Program& scope);

}  // namespace revcat::lang
