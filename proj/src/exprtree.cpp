// SPDX-License-Identifier: MIT
#include "g2h/exprtree.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace g2h {

bool ExprNode::touches_window() const {
  if (op == Op::phi || op == Op::dmix) return true;
  return std::any_of(kids.begin(), kids.end(), [](const ExprNode& c) { return c.touches_window(); });
}

void ExprNode::collect_offsets(std::vector<int>& out) const {
  if (op == Op::phi || op == Op::dmix) out.push_back(k);
  for (auto& c : kids) c.collect_offsets(out);
}

int ExprNode::max_derivative_order() const {
  int m = (op == Op::dmix || op == Op::dseed) ? r1 + r2 : 0;
  for (auto& c : kids) m = std::max(m, c.max_derivative_order());
  return m;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, int line) : s_(s), line_(line) {}

  ExprNode parse_all() {
    ExprNode e = parse();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  int line_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string token() {
    skip();
    size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (b == pos_) fail("expected a token");
    return s_.substr(b, pos_ - b);
  }
  int integer() {
    size_t at = pos_;
    std::string t = token();
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      pos_ = at;
      fail("expected an integer, got '" + t + "'");
    }
  }
  void expect_close() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  ExprNode parse() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    ExprNode e;
    if (s_[pos_] != '(') {
      size_t at = pos_;
      std::string t = token();
      try {
        e.value = parse_rational(t);
      } catch (const std::exception&) {
        pos_ = at;
        fail("bad constant '" + t + "'");
      }
      return e;
    }
    ++pos_;
    size_t at = pos_;
    std::string head = token();
    using Op = ExprNode::Op;
    static const std::map<std::string, Op> nary = {{"ADD", Op::add}, {"MUL", Op::mul}};
    static const std::map<std::string, std::pair<Op, int>> fixed = {
        {"SUB", {Op::sub, 2}}, {"DIV", {Op::div, 2}}, {"NEG", {Op::neg, 1}}};
    if (head == "PHI") {
      e.op = Op::phi;
      e.k = integer();
    } else if (head == "DPHI") {
      e.op = Op::dmix;
      e.k = integer();
      int d = integer();
      int r = integer();
      if ((d != 1 && d != 2) || r < 0) fail("DPHI needs a direction 1|2 and an order >= 0");
      (d == 1 ? e.r1 : e.r2) = r;
    } else if (head == "DMIX") {
      e.op = Op::dmix;
      e.k = integer();
      e.r1 = integer();
      e.r2 = integer();
    } else if (head == "SEED") {
      e.op = Op::seed;
      e.k = integer();
    } else if (head == "DSEED") {
      e.op = Op::dseed;
      e.k = integer();
      e.r1 = integer();
      e.r2 = integer();
    } else if (head == "VAR" || head == "REF") {
      e.op = head == "VAR" ? Op::var : Op::ref;
      e.name = token();
    } else if (head == "PIVOT") {
      e.op = Op::pivot;
    } else if (head == "POW") {
      e.op = Op::pow;
      e.kids.push_back(parse());
      e.k = integer();
      if (e.k < 1) fail("POW exponent must be positive");
    } else if (nary.count(head)) {
      e.op = nary.at(head);
      skip();
      while (pos_ < s_.size() && s_[pos_] != ')') {
        e.kids.push_back(parse());
        skip();
      }
      if (e.kids.empty()) fail(head + " needs operands");
    } else if (fixed.count(head)) {
      e.op = fixed.at(head).first;
      for (int i = 0; i < fixed.at(head).second; ++i) e.kids.push_back(parse());
    } else {
      pos_ = at;
      fail("unknown operator '" + head + "'");
    }
    if ((e.op == Op::dmix || e.op == Op::dseed) && (e.r1 < 0 || e.r2 < 0)) fail("negative derivative order");
    expect_close();
    return e;
  }
};

}  // namespace

ExprNode parse_expr(const std::string& text, int line) { return Parser(text, line).parse_all(); }

std::string to_string(const ExprNode& e) {
  using Op = ExprNode::Op;
  auto kids = [&]() {
    std::string s;
    for (auto& c : e.kids) s += " " + to_string(c);
    return s;
  };
  switch (e.op) {
    case Op::num: return e.value.get_str();
    case Op::phi: return "(PHI " + std::to_string(e.k) + ")";
    case Op::dmix:
      return "(DMIX " + std::to_string(e.k) + " " + std::to_string(e.r1) + " " + std::to_string(e.r2) + ")";
    case Op::seed: return "(SEED " + std::to_string(e.k) + ")";
    case Op::dseed:
      return "(DSEED " + std::to_string(e.k) + " " + std::to_string(e.r1) + " " + std::to_string(e.r2) + ")";
    case Op::var: return "(VAR " + e.name + ")";
    case Op::ref: return "(REF " + e.name + ")";
    case Op::pivot: return "(PIVOT)";
    case Op::add: return "(ADD" + kids() + ")";
    case Op::mul: return "(MUL" + kids() + ")";
    case Op::sub: return "(SUB" + kids() + ")";
    case Op::div: return "(DIV" + kids() + ")";
    case Op::neg: return "(NEG" + kids() + ")";
    case Op::pow: return "(POW " + to_string(e.kids[0]) + " " + std::to_string(e.k) + ")";
  }
  return "?";
}

}  // namespace g2h
