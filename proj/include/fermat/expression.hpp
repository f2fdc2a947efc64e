#ifndef FERMAT_EXPRESSION_HPP
#define FERMAT_EXPRESSION_HPP

#include "fermat/types.hpp"

#include <map>
#include <memory>
#include <string>

namespace fermat {

// Closed-form scalar expressions over named variables.  The grammar covers
// the profiles used by the scenarios: numeric constants, variables, + - * /,
// unary minus, exp(.), sqrt(.), and pow(., .) (alias ^) with rational
// exponents.
class Expr {
 public:
  Expr() = default;

  static Expr parse(const std::string& text);

  Scalar eval(const std::map<std::string, Scalar>& vars) const;
  Scalar eval1(const std::string& var, Scalar value) const;

  bool valid() const { return root_ != nullptr; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace fermat

#endif
