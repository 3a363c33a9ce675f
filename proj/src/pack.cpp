// SPDX-License-Identifier: MIT
#include "g2h/pack.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#ifndef G2H_DEFAULT_PACK
#define G2H_DEFAULT_PACK "data/genus2.pack"
#endif

namespace g2h {

long Recurrence::pivot_for(long n) const {
  if ((n - b) % a != 0) return -1;
  return (n - b) / a;
}

std::string default_pack_path() { return G2H_DEFAULT_PACK; }

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

bool denominator_ok(const ExprNode& d) {
  return !d.touches_window() || d.op == ExprNode::Op::phi;
}

// DIV denominators: point constants or a single PHI symbol.
void check_divisions(const ExprNode& e, const std::string& where) {
  if (e.op == ExprNode::Op::div && !denominator_ok(e.kids[1]))
    throw std::invalid_argument("section " + where + ": DIV denominator " + to_string(e.kids[1]) +
                                " depends on window values");
  for (auto& c : e.kids) check_divisions(c, where);
}

void check_refs(const ExprNode& e, const std::set<std::string>& known, const std::string& where) {
  if (e.op == ExprNode::Op::ref && !known.count(e.name))
    throw std::invalid_argument("section " + where + ": undefined REF " + e.name);
  for (auto& c : e.kids) check_refs(c, known, where);
}

void check_vars(const ExprNode& e, const std::string& where) {
  static const std::set<std::string> ok = {"P12", "P22", "P122", "P222", "rel_p11", "rel_p111", "rel_p112",
                                           "MU0", "MU1", "MU2", "MU3", "MU4"};
  if (e.op == ExprNode::Op::var && !ok.count(e.name))
    throw std::invalid_argument("section " + where + ": unknown VAR " + e.name);
  for (auto& c : e.kids) check_vars(c, where);
}

Recurrence make_recurrence(const std::string& name, int a, int b, ExprNode expr) {
  Recurrence r;
  r.name = name;
  r.a = a;
  r.b = b;
  r.expr = std::move(expr);
  r.expr.collect_offsets(r.offsets);
  std::sort(r.offsets.begin(), r.offsets.end());
  r.offsets.erase(std::unique(r.offsets.begin(), r.offsets.end()), r.offsets.end());
  r.derivative_order = r.expr.max_derivative_order();
  return r;
}

void write_poly(std::ostream& os, const std::string& name, const MultiPoly& p, bool projective) {
  os << "[POLY " << name;
  if (projective) {
    os << " VARS";
    for (auto& v : projective_names()) os << " " << v;
  }
  os << "]\n";
  for (auto& [e, c] : p.terms()) {
    os << c.get_str();
    for (int x : e) os << " " << x;
    os << "\n";
  }
}

}  // namespace

void FormulaPack::rebuild_caches() {
  for (int i = 1; i <= 5; ++i) phi_split[i] = SplitPoly(phi[i]);
  rel_split["rel_p11"] = SplitPoly(rel_p11);
  rel_split["rel_p111"] = SplitPoly(rel_p111);
  rel_split["rel_p112"] = SplitPoly(rel_p112);
  for (int k = 0; k < 2; ++k)
    for (int v = 0; v < kBasis; ++v) deriv_split[k][v] = SplitPoly(deriv.table[k][v]);
  for (int i = 1; i <= 4; ++i) kappa_split[i] = SplitPoly(kappa[i]);
}

std::string FormulaPack::serialize() const {
  std::ostringstream os;
  os << "PACKVERSION " << version << "\n";
  for (int i = 1; i <= 5; ++i) write_poly(os, "phi" + std::to_string(i), phi[i], false);
  write_poly(os, "rel_p11", rel_p11, false);
  write_poly(os, "rel_p111", rel_p111, false);
  write_poly(os, "rel_p112", rel_p112, false);
  for (int k = 1; k <= 2; ++k)
    for (int v = 0; v < kBasis; ++v)
      write_poly(os, "d" + std::to_string(k) + "_" + basis_names()[v], deriv.of(k, v), false);
  for (int i = 1; i <= 4; ++i) write_poly(os, "kappa" + std::to_string(i), kappa[i], false);
  for (int i = 1; i <= 4; ++i) write_poly(os, "delta" + std::to_string(i), delta[i], true);
  for (auto& [name, p] : extra) write_poly(os, name, p, false);
  for (auto& d : defines) os << "[DEFINE " << d.name << "]\n" << to_string(d.expr) << "\n";
  for (auto* r : {&kanayama_odd, &kanayama_even, &uchida_odd, &uchida_even})
    os << "[RECURRENCE " << r->name << " TARGET " << r->a << " " << r->b << "]\n" << to_string(r->expr) << "\n";
  return os.str();
}

FormulaPack parse_pack(std::istream& in, const std::string& source) {
  FormulaPack pack;
  pack.source = source;
  std::map<std::string, MultiPoly> polys;
  std::map<std::string, Recurrence> recs;
  std::set<std::string> define_names;

  enum class Kind { none, poly, define, recurrence };
  Kind kind = Kind::none;
  std::string name;
  int ta = 0, tb = 0;
  std::string expr_text;
  int expr_line = 0;
  bool have_version = false;

  auto finish = [&]() {
    if (kind == Kind::define || kind == Kind::recurrence) {
      if (expr_text.empty()) throw ParseError("section " + name + " has no expression", expr_line, 1);
      ExprNode e = parse_expr(expr_text, expr_line);
      check_divisions(e, name);
      check_refs(e, define_names, name);
      check_vars(e, name);
      if (kind == Kind::define) {
        if (e.touches_window()) throw std::invalid_argument("DEFINE " + name + " depends on window values");
        pack.defines.push_back(Define{name, std::move(e)});
        define_names.insert(name);
      } else {
        recs[name] = make_recurrence(name, ta, tb, std::move(e));
      }
    }
    kind = Kind::none;
    expr_text.clear();
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();

    if (!have_version) {
      auto tok = split_ws(line);
      if (tok.size() != 2 || tok[0] != "PACKVERSION") throw ParseError("expected PACKVERSION header", lineno, 1);
      pack.version = tok[1];
      have_version = true;
      continue;
    }
    if (line[0] == '[') {
      finish();
      if (line.back() != ']') throw ParseError("unterminated section header", lineno, static_cast<int>(line.size()));
      auto tok = split_ws(line.substr(1, line.size() - 2));
      if (tok.size() < 2) throw ParseError("section header needs a kind and a name", lineno, 2);
      name = tok[1];
      if (tok[0] == "POLY") {
        kind = Kind::poly;
        if (tok.size() > 2 && (tok[2] != "VARS" || tok.size() != 3 + kVars))
          throw ParseError("VARS must list " + std::to_string(kVars) + " variables", lineno, 2);
        if (polys.count(name)) throw ParseError("duplicate section " + name, lineno, 2);
        polys[name];
      } else if (tok[0] == "DEFINE") {
        kind = Kind::define;
        if (define_names.count(name)) throw ParseError("duplicate section " + name, lineno, 2);
        expr_line = lineno + 1;
      } else if (tok[0] == "RECURRENCE") {
        kind = Kind::recurrence;
        ta = 2;
        tb = name.find("odd") != std::string::npos ? 1 : 0;
        if (tok.size() >= 3) {
          if (tok.size() != 5 || tok[2] != "TARGET") throw ParseError("expected TARGET a b", lineno, 2);
          ta = std::stoi(tok[3]);
          tb = std::stoi(tok[4]);
          if (ta <= 0) throw ParseError("TARGET multiplier must be positive", lineno, 2);
        }
        expr_line = lineno + 1;
      } else {
        throw ParseError("unknown section kind " + tok[0], lineno, 2);
      }
      continue;
    }
    if (kind == Kind::poly) {
      auto tok = split_ws(line);
      if (tok.size() != 1 + kVars)
        throw ParseError("term needs a coefficient and " + std::to_string(kVars) + " exponents", lineno, 1);
      Rational c;
      try {
        c = parse_rational(tok[0]);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + tok[0] + "'", lineno, 1);
      }
      Exponents e;
      size_t col = tok[0].size() + 2;
      for (int i = 0; i < kVars; ++i) {
        const std::string& t = tok[1 + i];
        bool digits = !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        if (!digits || t.size() > 4) throw ParseError("malformed exponent '" + t + "'", lineno, static_cast<int>(col));
        e[i] = std::stoi(t);
        col += t.size() + 1;
      }
      polys[name].add_term(e, c);
    } else if (kind == Kind::define || kind == Kind::recurrence) {
      if (!expr_text.empty()) expr_text += " ";
      expr_text += line;
    } else {
      throw ParseError("content outside a section", lineno, 1);
    }
  }
  finish();
  if (!have_version) throw ParseError("empty pack", 0, 0);

  auto take = [&](const std::string& n) {
    auto it = polys.find(n);
    if (it == polys.end()) throw std::invalid_argument("missing section " + n);
    MultiPoly p = std::move(it->second);
    polys.erase(it);
    return p;
  };
  for (int i = 1; i <= 5; ++i) pack.phi[i] = take("phi" + std::to_string(i));
  if (!pack.phi[1].is_constant(1)) throw std::invalid_argument("phi1 must be the constant 1");
  pack.rel_p11 = take("rel_p11");
  pack.rel_p111 = take("rel_p111");
  pack.rel_p112 = take("rel_p112");
  for (int k = 1; k <= 2; ++k)
    for (int v = 0; v < kBasis; ++v) {
      pack.deriv.table[k - 1][v] = take("d" + std::to_string(k) + "_" + basis_names()[v]);
      pack.deriv.present[k - 1][v] = true;
    }
  for (int i = 1; i <= 4; ++i) pack.kappa[i] = take("kappa" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) pack.delta[i] = take("delta" + std::to_string(i));
  pack.extra = std::move(polys);

  auto rec = [&](const std::string& n) {
    auto it = recs.find(n);
    if (it == recs.end()) throw std::invalid_argument("missing section " + n);
    return it->second;
  };
  pack.kanayama_odd = rec("kanayama_odd");
  pack.kanayama_even = rec("kanayama_even");
  pack.uchida_odd = rec("uchida_odd");
  pack.uchida_even = rec("uchida_even");
  pack.rebuild_caches();
  return pack;
}

FormulaPack load_pack(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pack " + path);
  return parse_pack(in, path);
}

}  // namespace g2h
