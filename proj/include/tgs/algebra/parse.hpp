#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tgs/algebra/mpoly.hpp"

namespace tgs {

/// Recursive-descent reader for polynomial expressions: integers, ring
/// variables, generator names of the coefficient tower, + - * / ^ and
/// parentheses.  Division is by nonzero constants only.  `#` starts a
/// comment.  Errors are SyntaxError, NameError (offsets into `text`) and
/// TypeError.
class ExprParser {
 public:
  ExprParser(FieldPtr f, std::vector<std::string> vars, TermOrder order = TermOrder::degrevlex());

  /// Parses one expression starting at `pos`; on return `pos` points past it
  /// and past trailing blanks.
  MPoly parse(std::string_view text, std::size_t& pos) const;
  /// The whole text must be a single expression.
  MPoly parse_all(std::string_view text) const;

 private:
  FieldPtr f_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

MPoly parse_polynomial(const FieldPtr& f, const std::vector<std::string>& vars, std::string_view text,
                       TermOrder order = TermOrder::degrevlex());
/// A constant expression in the generators of `f`.
TowerElem parse_element(const FieldPtr& f, std::string_view text);

/// Skips blanks and `#` comments.
void skip_blanks(std::string_view text, std::size_t& pos);

}  // namespace tgs
