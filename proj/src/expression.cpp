#include "fermat/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace fermat {

struct Expr::Node {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Exp, Sqrt, Pow };
  Op op = Op::Const;
  Scalar value = 0.0;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;

  Scalar eval(const std::map<std::string, Scalar>& vars) const {
    switch (op) {
      case Op::Const: return value;
      case Op::Var: {
        auto it = vars.find(name);
        if (it == vars.end()) throw ParseError("unbound variable '" + name + "'");
        return it->second;
      }
      case Op::Add: return lhs->eval(vars) + rhs->eval(vars);
      case Op::Sub: return lhs->eval(vars) - rhs->eval(vars);
      case Op::Mul: return lhs->eval(vars) * rhs->eval(vars);
      case Op::Div: return lhs->eval(vars) / rhs->eval(vars);
      case Op::Neg: return -lhs->eval(vars);
      case Op::Exp: return std::exp(lhs->eval(vars));
      case Op::Sqrt: return std::sqrt(lhs->eval(vars));
      case Op::Pow: return std::pow(lhs->eval(vars), rhs->eval(vars));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Node = Expr::Node;

NodePtr make(Node::Op op, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

NodePtr make_const(Scalar v) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::Const;
  n->value = v;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression error at column " + std::to_string(pos_ + 1) +
                     ": " + what + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (eat('+')) lhs = make(Node::Op::Add, lhs, term());
      else if (eat('-')) lhs = make(Node::Op::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (eat('*')) lhs = make(Node::Op::Mul, lhs, unary());
      else if (eat('/')) lhs = make(Node::Op::Div, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Node::Op::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (eat('^')) return make(Node::Op::Pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail("unexpected character");
  }

  NodePtr number() {
    char* end = nullptr;
    Scalar v = std::strtod(s_.c_str() + pos_, &end);
    if (end == s_.c_str() + pos_) fail("bad number");
    pos_ = static_cast<size_t>(end - s_.c_str());
    return make_const(v);
  }

  NodePtr ident() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "exp" || name == "sqrt" || name == "pow") {
      if (!eat('(')) fail("expected '(' after " + name);
      auto a = expr();
      if (name == "pow") {
        if (!eat(',')) fail("expected ',' in pow");
        auto b = expr();
        if (!eat(')')) fail("expected ')'");
        return make(Node::Op::Pow, a, b);
      }
      if (!eat(')')) fail("expected ')'");
      return make(name == "exp" ? Node::Op::Exp : Node::Op::Sqrt, a);
    }
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Var;
    n->name = name;
    return n;
  }
};

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  return e;
}

Scalar Expr::eval(const std::map<std::string, Scalar>& vars) const {
  if (!root_) throw ParseError("empty expression");
  return root_->eval(vars);
}

Scalar Expr::eval1(const std::string& var, Scalar value) const {
  return eval({{var, value}});
}

}  // namespace fermat
