#ifndef APF_SMTLIB_HPP
#define APF_SMTLIB_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "apf/ast.hpp"

namespace apf {

/// Parse or sort error with 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + " col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct Declaration {
  std::string name;
  Sort sort;  // Sort::Int or Sort::Array
};

struct Script {
  std::vector<Declaration> declarations;
  std::vector<FormulaPtr> assertions;
};

/// Parses the supported SMT-LIB 2 subset: set-logic (ignored),
/// declare-const with sorts Int and (Array Int Int), assert over
/// forall/exists, and/or/not/=>, < <= =, + - *, select, store, and
/// (diff s t). exists is represented as not-forall-not. diff is
/// implicitly declared. No let, define-fun, push, or pop.
Script parseScript(const std::string& text);

/// Canonical concrete syntax; parseScript(printScript(s)) == s for
/// scripts produced by this printer.
std::string printScript(const Script& s);

}  // namespace apf

#endif
