#include "folds/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace folds {

FormulaP f_true() {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::True;
  return f;
}
FormulaP f_false() {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::False;
  return f;
}
FormulaP f_atom(std::string rel, std::vector<std::string> args) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Atom;
  f->rel = std::move(rel);
  f->args = std::move(args);
  return f;
}
namespace {
FormulaP binop(Formula::Tag t, FormulaP a, FormulaP b) {
  auto f = std::make_shared<Formula>();
  f->tag = t;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
FormulaP quant(Formula::Tag t, std::string var, SortAnnotation s, FormulaP body) {
  auto f = std::make_shared<Formula>();
  f->tag = t;
  f->var = std::move(var);
  f->sort = std::move(s);
  f->a = std::move(body);
  return f;
}
}  // namespace
FormulaP f_and(FormulaP a, FormulaP b) { return binop(Formula::Tag::And, a, b); }
FormulaP f_or(FormulaP a, FormulaP b) { return binop(Formula::Tag::Or, a, b); }
FormulaP f_implies(FormulaP a, FormulaP b) { return binop(Formula::Tag::Implies, a, b); }
FormulaP f_forall(std::string var, SortAnnotation s, FormulaP body) {
  return quant(Formula::Tag::Forall, std::move(var), std::move(s), std::move(body));
}
FormulaP f_exists(std::string var, SortAnnotation s, FormulaP body) {
  return quant(Formula::Tag::Exists, std::move(var), std::move(s), std::move(body));
}

bool formula_equal(const FormulaP& x, const FormulaP& y) {
  if (!x || !y) return x == y;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Formula::Tag::True:
    case Formula::Tag::False:
      return true;
    case Formula::Tag::Atom:
      return x->rel == y->rel && x->args == y->args;
    case Formula::Tag::And:
    case Formula::Tag::Or:
    case Formula::Tag::Implies:
      return formula_equal(x->a, y->a) && formula_equal(x->b, y->b);
    case Formula::Tag::Forall:
    case Formula::Tag::Exists:
      return x->var == y->var && x->sort == y->sort && formula_equal(x->a, y->a);
  }
  return false;
}

bool Context::has(const std::string& v) const {
  for (const auto& [n, s] : vars) {
    (void)s;
    if (n == v) return true;
  }
  return false;
}

Presheaf Context::to_presheaf() const {
  Presheaf G;
  G.sig = sig;
  for (const auto& k : sig->kinds) G.carrier[k];
  for (const auto& [v, s] : vars) G.add_element(s.kind, v);
  for (const auto& [v, s] : vars) {
    auto gens = sig->arrows_from(s.kind);
    for (size_t i = 0; i < gens.size(); ++i) G.set_action(s.kind, gens[i]->name, v, s.args[i]);
  }
  return G;
}

// ---------------------------------------------------------------------------
// Dependency machinery

namespace {

// Value of a word out of var's kind, evaluated in the variable table.
std::optional<std::string> var_word_value(const FoldsSignature& sig,
                                          const std::map<std::string, SortAnnotation>& sorts,
                                          const std::string& var, const ArrowWord& w) {
  std::string cur = var;
  std::string at = w.src;
  for (const auto& n : w.names) {
    auto it = sorts.find(cur);
    if (it == sorts.end()) return std::nullopt;
    auto gens = sig.arrows_from(at);
    bool found = false;
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i]->name == n) {
        cur = it->second.args[i];
        at = gens[i]->dst;
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return cur;
}

// Check that the annotation's derived dependencies are consistent: every
// pair of equivalent words out of the kind evaluates to the same variable.
bool family_compatible(const FoldsSignature& sig,
                       const std::map<std::string, SortAnnotation>& sorts,
                       const std::string& kind, const std::vector<std::string>& args,
                       std::string* why) {
  auto gens = sig.arrows_from(kind);
  if (gens.size() != args.size()) {
    if (why) *why = "arity";
    return false;
  }
  std::map<std::string, SortAnnotation> local = sorts;
  // A synthetic variable of this sort lets us reuse var_word_value.
  const std::string probe = "\x01probe";
  local[probe] = SortAnnotation{kind, args};
  auto wf = sig.words_from.find(kind);
  if (wf == sig.words_from.end()) return true;
  // Evaluate every word (including non-canonical members) via the canonical
  // map: members of one class must agree.
  auto cm = sig.canon_map.find(kind);
  if (cm != sig.canon_map.end()) {
    std::map<std::string, std::string> value_of_class;
    for (const auto& [wstr, canon] : cm->second) {
      std::vector<std::string> names;
      std::string curtok;
      for (char c : wstr + std::string(".")) {
        if (c == '.') {
          names.push_back(curtok);
          curtok.clear();
        } else
          curtok += c;
      }
      ArrowWord w{kind, canon.dst, names};
      auto val = var_word_value(sig, local, probe, w);
      if (!val) {
        if (why) *why = "ill-typed argument along " + wstr;
        return false;
      }
      auto [it, fresh] = value_of_class.insert({canon.str(), *val});
      if (!fresh && it->second != *val) {
        if (why) *why = "incompatible family at word " + wstr + ": " + it->second + " vs " + *val;
        return false;
      }
    }
  }
  return true;
}

void dep_closure(const std::map<std::string, SortAnnotation>& sorts, const std::string& v,
                 std::set<std::string>& out) {
  auto it = sorts.find(v);
  if (it == sorts.end()) return;
  for (const auto& a : it->second.args)
    if (out.insert(a).second) dep_closure(sorts, a, out);
}

void free_vars_rec(const FormulaP& f, const std::map<std::string, SortAnnotation>& sorts,
                   std::set<std::string>& out) {
  switch (f->tag) {
    case Formula::Tag::True:
    case Formula::Tag::False:
      return;
    case Formula::Tag::Atom: {
      for (const auto& a : f->args) {
        out.insert(a);
        dep_closure(sorts, a, out);
      }
      return;
    }
    case Formula::Tag::And:
    case Formula::Tag::Or:
    case Formula::Tag::Implies:
      free_vars_rec(f->a, sorts, out);
      free_vars_rec(f->b, sorts, out);
      return;
    case Formula::Tag::Forall:
    case Formula::Tag::Exists: {
      std::set<std::string> inner;
      free_vars_rec(f->a, sorts, inner);
      inner.erase(f->var);
      for (const auto& a : f->sort.args) {
        inner.insert(a);
        dep_closure(sorts, a, inner);
      }
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

}  // namespace

Context free_vars(const FormulaUnit& u) {
  std::set<std::string> names;
  free_vars_rec(u.root, u.sorts, names);
  Context ctx;
  ctx.sig = u.sig;
  // Dependency order: by degree of the kind, then by name.
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end(), [&](const std::string& x, const std::string& y) {
    int dx = u.sig->degree.at(u.sorts.at(x).kind);
    int dy = u.sig->degree.at(u.sorts.at(y).kind);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  for (const auto& v : sorted) ctx.vars.push_back({v, u.sorts.at(v)});
  return ctx;
}

ValidationReport validate_formula(const FormulaUnit& u) {
  ValidationReport rep;
  const FoldsSignature& sig = *u.sig;
  for (const auto& [v, s] : u.sorts) {
    if (!sig.has_kind(s.kind)) {
      rep.add("UnknownKind", "variable " + v + ": " + s.kind);
      continue;
    }
    std::string why;
    if (s.args.size() != sig.arrows_from(s.kind).size())
      rep.add("ArityMismatch", "variable " + v);
    else if (!family_compatible(sig, u.sorts, s.kind, s.args, &why))
      rep.add("IncompatibleFamily", "variable " + v + ": " + why);
  }
  std::function<void(const FormulaP&)> walk = [&](const FormulaP& f) {
    switch (f->tag) {
      case Formula::Tag::Atom: {
        if (!sig.is_relation_kind(f->rel)) {
          rep.add("UnknownKind", "atom " + f->rel + " is not a relation symbol");
          return;
        }
        std::string why;
        if (f->args.size() != sig.arrows_from(f->rel).size())
          rep.add("ArityMismatch", "atom " + f->rel);
        else if (!family_compatible(sig, u.sorts, f->rel, f->args, &why))
          rep.add("IncompatibleFamily", "atom " + f->rel + ": " + why);
        return;
      }
      case Formula::Tag::Forall:
      case Formula::Tag::Exists: {
        // Quantifier rule: no remaining free variable of the body depends on
        // the bound variable.
        std::set<std::string> inner;
        free_vars_rec(f->a, u.sorts, inner);
        inner.erase(f->var);
        for (const auto& v : inner) {
          std::set<std::string> deps;
          dep_closure(u.sorts, v, deps);
          if (deps.count(f->var))
            rep.add("DependencyViolation",
                    "variable " + v + " depends on quantified " + f->var);
        }
        walk(f->a);
        return;
      }
      case Formula::Tag::And:
      case Formula::Tag::Or:
      case Formula::Tag::Implies:
        walk(f->a);
        walk(f->b);
        return;
      default:
        return;
    }
  };
  walk(u.root);
  return rep;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class T { Ident, LPar, RPar, LBrk, RBrk, Comma, Colon, Dot, And, Or, Implies, End } t;
  std::string s;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  auto isid = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '#';
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '(') { out.push_back({Token::T::LPar, "("}); ++i; continue; }
    if (c == ')') { out.push_back({Token::T::RPar, ")"}); ++i; continue; }
    if (c == '[') { out.push_back({Token::T::LBrk, "["}); ++i; continue; }
    if (c == ']') { out.push_back({Token::T::RBrk, "]"}); ++i; continue; }
    if (c == ',') { out.push_back({Token::T::Comma, ","}); ++i; continue; }
    if (c == ':') { out.push_back({Token::T::Colon, ":"}); ++i; continue; }
    if (c == '.') { out.push_back({Token::T::Dot, "."}); ++i; continue; }
    if (text.compare(i, 2, "/\\") == 0) { out.push_back({Token::T::And, "/\\"}); i += 2; continue; }
    if (text.compare(i, 2, "\\/") == 0) { out.push_back({Token::T::Or, "\\/"}); i += 2; continue; }
    if (text.compare(i, 2, "->") == 0) { out.push_back({Token::T::Implies, "->"}); i += 2; continue; }
    if (isid(c)) {
      size_t s = i;
      while (i < text.size() && isid(text[i])) ++i;
      out.push_back({Token::T::Ident, text.substr(s, i - s)});
      continue;
    }
    throw FoldsError("SyntaxError", std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::T::End, ""});
  return out;
}

struct FormulaParser {
  std::shared_ptr<const FoldsSignature> sig;
  std::vector<Token> toks;
  size_t pos = 0;
  std::map<std::string, SortAnnotation> sorts;  // all declared variables

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  void expect(Token::T t, const std::string& what) {
    if (peek().t != t) throw FoldsError("SyntaxError", "expected " + what);
    ++pos;
  }

  SortAnnotation parse_sort() {
    if (peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected kind name");
    SortAnnotation s;
    s.kind = next().s;
    if (!sig->has_kind(s.kind)) throw FoldsError("UnknownKind", s.kind);
    if (peek().t == Token::T::LPar) {
      ++pos;
      while (true) {
        if (peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected variable");
        s.args.push_back(next().s);
        if (peek().t == Token::T::Comma) {
          ++pos;
          continue;
        }
        expect(Token::T::RPar, ")");
        break;
      }
    }
    size_t want = sig->arrows_from(s.kind).size();
    if (s.args.size() != want)
      throw FoldsError("ArityMismatch", "sort " + s.kind + " takes " + std::to_string(want) +
                                            " arguments, got " + std::to_string(s.args.size()));
    return s;
  }

  void declare(const std::string& var, const SortAnnotation& s) {
    if (sorts.count(var))
      throw FoldsError("DependencyViolation", "variable " + var + " shadows an earlier binding");
    for (const auto& a : s.args) {
      if (!sorts.count(a)) throw FoldsError("SyntaxError", "undeclared variable " + a);
    }
    std::string why;
    if (!family_compatible(*sig, sorts, s.kind, s.args, &why))
      throw FoldsError("IncompatibleFamily", "variable " + var + ": " + why);
    sorts[var] = s;
  }

  FormulaP parse_formula_() { return parse_implies(); }

  FormulaP parse_implies() {
    FormulaP a = parse_or();
    if (peek().t == Token::T::Implies) {
      ++pos;
      return f_implies(a, parse_implies());
    }
    return a;
  }
  FormulaP parse_or() {
    FormulaP a = parse_and();
    while (peek().t == Token::T::Or) {
      ++pos;
      a = f_or(a, parse_and());
    }
    return a;
  }
  FormulaP parse_and() {
    FormulaP a = parse_atomic();
    while (peek().t == Token::T::And) {
      ++pos;
      a = f_and(a, parse_atomic());
    }
    return a;
  }

  FormulaP parse_atomic() {
    if (peek().t == Token::T::LPar) {
      ++pos;
      FormulaP f = parse_formula_();
      expect(Token::T::RPar, ")");
      return f;
    }
    if (peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected formula");
    std::string id = next().s;
    if (id == "true") return f_true();
    if (id == "false") return f_false();
    if (id == "forall" || id == "exists") {
      if (peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected variable");
      std::string var = next().s;
      expect(Token::T::Colon, ":");
      SortAnnotation s = parse_sort();
      expect(Token::T::Dot, ". after quantifier sort");
      declare(var, s);
      FormulaP body = parse_formula_();
      return id == "forall" ? f_forall(var, s, body) : f_exists(var, s, body);
    }
    // Atom R'(args)
    if (!sig->has_kind(id)) throw FoldsError("UnknownKind", id);
    if (!sig->is_relation_kind(id))
      throw FoldsError("SyntaxError", id + " is not a relation symbol");
    std::vector<std::string> args;
    if (peek().t == Token::T::LPar) {
      ++pos;
      while (true) {
        if (peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected variable");
        args.push_back(next().s);
        if (peek().t == Token::T::Comma) {
          ++pos;
          continue;
        }
        expect(Token::T::RPar, ")");
        break;
      }
    }
    size_t want = sig->arrows_from(id).size();
    if (args.size() != want)
      throw FoldsError("ArityMismatch", "atom " + id + " takes " + std::to_string(want) +
                                            " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args)
      if (!sorts.count(a)) throw FoldsError("SyntaxError", "undeclared variable " + a);
    std::string why;
    if (!family_compatible(*sig, sorts, id, args, &why))
      throw FoldsError("IncompatibleFamily", "atom " + id + ": " + why);
    return f_atom(id, args);
  }
};

}  // namespace

ParsedFormula parse_formula(const std::string& text, std::shared_ptr<const FoldsSignature> sig) {
  FormulaParser p;
  p.sig = sig;
  // Strip comments.
  std::string cleaned;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    cleaned += line + "\n";
  }
  p.toks = lex(cleaned);
  if (p.peek().t == Token::T::LBrk) {
    ++p.pos;
    if (p.peek().t != Token::T::RBrk) {
      while (true) {
        if (p.peek().t != Token::T::Ident) throw FoldsError("SyntaxError", "expected variable");
        std::string var = p.next().s;
        p.expect(Token::T::Colon, ":");
        SortAnnotation s = p.parse_sort();
        p.declare(var, s);
        if (p.peek().t == Token::T::Comma) {
          ++p.pos;
          continue;
        }
        break;
      }
    }
    p.expect(Token::T::RBrk, "]");
  }
  FormulaP f = p.parse_formula_();
  if (p.peek().t != Token::T::End) throw FoldsError("SyntaxError", "trailing input");
  ParsedFormula out;
  out.unit.sig = sig;
  out.unit.root = f;
  out.unit.sorts = p.sorts;
  auto rep = validate_formula(out.unit);
  if (!rep.ok()) throw FoldsError("DependencyViolation", rep.summary());
  out.free_context = free_vars(out.unit);
  return out;
}

namespace {

void print_rec(const FormulaP& f, int parent_prec, std::ostream& out) {
  auto paren = [&](int prec, auto body) {
    bool need = prec < parent_prec;
    if (need) out << "(";
    body();
    if (need) out << ")";
  };
  switch (f->tag) {
    case Formula::Tag::True:
      out << "true";
      return;
    case Formula::Tag::False:
      out << "false";
      return;
    case Formula::Tag::Atom:
      out << f->rel;
      if (!f->args.empty()) {
        out << "(";
        for (size_t i = 0; i < f->args.size(); ++i) out << (i ? "," : "") << f->args[i];
        out << ")";
      }
      return;
    case Formula::Tag::Implies:
      paren(1, [&] {
        print_rec(f->a, 2, out);
        out << " -> ";
        print_rec(f->b, 1, out);
      });
      return;
    case Formula::Tag::Or:
      paren(2, [&] {
        print_rec(f->a, 2, out);
        out << " \\/ ";
        print_rec(f->b, 3, out);
      });
      return;
    case Formula::Tag::And:
      paren(3, [&] {
        print_rec(f->a, 3, out);
        out << " /\\ ";
        print_rec(f->b, 4, out);
      });
      return;
    case Formula::Tag::Forall:
    case Formula::Tag::Exists:
      paren(1, [&] {
        out << (f->tag == Formula::Tag::Forall ? "forall " : "exists ") << f->var << ":"
            << f->sort.kind;
        if (!f->sort.args.empty()) {
          out << "(";
          for (size_t i = 0; i < f->sort.args.size(); ++i)
            out << (i ? "," : "") << f->sort.args[i];
          out << ")";
        }
        out << ". ";
        print_rec(f->a, 1, out);
      });
      return;
  }
}

}  // namespace

std::string print_formula(const FormulaP& f) {
  std::ostringstream out;
  print_rec(f, 0, out);
  return out.str();
}

std::string print_formula_with_context(const ParsedFormula& pf) {
  std::ostringstream out;
  if (!pf.free_context.vars.empty()) {
    out << "[";
    for (size_t i = 0; i < pf.free_context.vars.size(); ++i) {
      const auto& [v, s] = pf.free_context.vars[i];
      out << (i ? ", " : "") << v << ":" << s.kind;
      if (!s.args.empty()) {
        out << "(";
        for (size_t j = 0; j < s.args.size(); ++j) out << (j ? "," : "") << s.args[j];
        out << ")";
      }
    }
    out << "] ";
  }
  out << print_formula(pf.unit.root);
  return out.str();
}

// ---------------------------------------------------------------------------
// Satisfaction

namespace {

struct FiberIndex {
  const Presheaf& M;
  // kind -> joined generator values -> elements
  std::map<std::string, std::map<std::string, std::vector<std::string>>> idx;

  explicit FiberIndex(const Presheaf& m) : M(m) {}

  const std::vector<std::string>& fiber(const std::string& kind,
                                        const std::vector<std::string>& genvals) {
    auto& per_kind = idx[kind];
    if (per_kind.empty() && !M.at(kind).empty()) {
      auto gens = M.sig->arrows_from(kind);
      for (const auto& e : M.at(kind)) {
        std::string k;
        for (const auto* a : gens) k += M.act(kind, a->name, e) + "|";
        per_kind[k].push_back(e);
      }
    }
    std::string k;
    for (const auto& v : genvals) k += v + "|";
    static const std::vector<std::string> empty;
    auto it = per_kind.find(k);
    return it == per_kind.end() ? empty : it->second;
  }
};

bool sat_rec(FiberIndex& ix, const FormulaP& f, std::map<std::string, std::string>& alpha) {
  switch (f->tag) {
    case Formula::Tag::True:
      return true;
    case Formula::Tag::False:
      return false;
    case Formula::Tag::Atom: {
      std::vector<std::string> vals;
      vals.reserve(f->args.size());
      for (const auto& a : f->args) {
        auto it = alpha.find(a);
        if (it == alpha.end())
          throw FoldsError("InterpretationMismatch", "variable " + a + " not interpreted");
        vals.push_back(it->second);
      }
      return !ix.fiber(f->rel, vals).empty();
    }
    case Formula::Tag::And:
      return sat_rec(ix, f->a, alpha) && sat_rec(ix, f->b, alpha);
    case Formula::Tag::Or:
      return sat_rec(ix, f->a, alpha) || sat_rec(ix, f->b, alpha);
    case Formula::Tag::Implies:
      return !sat_rec(ix, f->a, alpha) || sat_rec(ix, f->b, alpha);
    case Formula::Tag::Forall:
    case Formula::Tag::Exists: {
      std::vector<std::string> vals;
      vals.reserve(f->sort.args.size());
      for (const auto& a : f->sort.args) {
        auto it = alpha.find(a);
        if (it == alpha.end())
          throw FoldsError("InterpretationMismatch", "variable " + a + " not interpreted");
        vals.push_back(it->second);
      }
      bool fa = f->tag == Formula::Tag::Forall;
      for (const auto& m : ix.fiber(f->sort.kind, vals)) {
        alpha[f->var] = m;
        bool v = sat_rec(ix, f->a, alpha);
        alpha.erase(f->var);
        if (fa && !v) return false;
        if (!fa && v) return true;
      }
      return fa;
    }
  }
  return false;
}

}  // namespace

bool satisfies(const Presheaf& M, const FormulaUnit& phi,
               const std::map<std::string, std::string>& alpha) {
  FiberIndex ix(M);
  std::map<std::string, std::string> a = alpha;
  return sat_rec(ix, phi.root, a);
}

// ---------------------------------------------------------------------------
// Sentence generation

namespace {

struct Gen {
  std::shared_ptr<const FoldsSignature> sig;
  const GeneratorConfig& cfg;
  std::mt19937_64 eng;
  int fresh = 0;
  std::map<std::string, SortAnnotation> sorts;
  Context ctx;

  Gen(std::shared_ptr<const FoldsSignature> s, const GeneratorConfig& c, uint64_t seed)
      : sig(std::move(s)), cfg(c), eng(seed) {
    ctx.sig = sig;
  }

  size_t rnd(size_t n) { return n == 0 ? 0 : static_cast<size_t>(eng() % n); }

  // All compatible families for kind K drawn from the current context.
  std::vector<std::vector<std::string>> families(const std::string& K) {
    Presheaf G = ctx.to_presheaf();
    std::vector<std::vector<std::string>> out;
    auto gens = sig->arrows_from(K);
    for (const auto& fam : matching_object(G, K)) {
      std::vector<std::string> args;
      for (const auto* a : gens) args.push_back(fam.at(sig->canonical(K, {a->name}).str()));
      out.push_back(args);
    }
    if (gens.empty()) out.push_back({});
    return out;
  }

  FormulaP gen(int depth) {
    // Available move kinds under the weights, renormalized.
    std::vector<std::pair<std::string, std::vector<std::string>>> atom_opts;
    for (const auto& R : sig->relsymbols) {
      for (auto& fam : families(R)) atom_opts.push_back({R, fam});
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> quant_opts;
    if (depth > 0)
      for (const auto& K : sig->kinds)
        for (auto& fam : families(K)) quant_opts.push_back({K, fam});
    double wc = depth > 0 ? cfg.connective : 0.0;
    double wq = quant_opts.empty() ? 0.0 : cfg.quantifier;
    double wa = atom_opts.empty() ? 0.0 : cfg.atom;
    double total = wc + wq + wa;
    if (total <= 0.0) return rnd(2) ? f_true() : f_false();
    double roll = static_cast<double>(eng() % 1000000) / 1000000.0 * total;
    if (roll < wc) {
      int op = static_cast<int>(rnd(3));
      FormulaP a = gen(depth - 1);
      FormulaP b = gen(depth - 1);
      if (op == 0) return f_and(a, b);
      if (op == 1) return f_or(a, b);
      return f_implies(a, b);
    }
    if (roll < wc + wq) {
      auto& [K, args] = quant_opts[rnd(quant_opts.size())];
      std::string var = "x" + std::to_string(fresh++);
      SortAnnotation s{K, args};
      sorts[var] = s;
      ctx.vars.push_back({var, s});
      FormulaP body = gen(depth - 1);
      ctx.vars.pop_back();
      bool fa = rnd(2) == 0;
      return fa ? f_forall(var, s, body) : f_exists(var, s, body);
    }
    auto& [R, args] = atom_opts[rnd(atom_opts.size())];
    return f_atom(R, args);
  }
};

}  // namespace

std::vector<FormulaUnit> generate_sentences(std::shared_ptr<const FoldsSignature> sig, int depth,
                                            int count, uint64_t seed, const GeneratorConfig& cfg) {
  std::vector<FormulaUnit> out;
  Gen g(sig, cfg, seed);
  for (int i = 0; i < count; ++i) {
    g.fresh = 0;
    g.ctx.vars.clear();
    g.sorts.clear();
    FormulaUnit u;
    u.sig = sig;
    u.root = g.gen(depth);
    u.sorts = g.sorts;
    out.push_back(std::move(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariance

InvarianceResult check_invariance(const Span& span, const FormulaUnit& phi) {
  InvarianceResult res;
  auto lcheck = is_fiberwise_surjective(span.left);
  auto rcheck = is_fiberwise_surjective(span.right);
  if (!lcheck.ok || !rcheck.ok) {
    res.verdict = Verdict::NotApplicable;
    res.note = "span leg not fiberwise surjective at kind " +
               (lcheck.ok ? rcheck.kind : lcheck.kind);
    return res;
  }
  Context fv = free_vars(phi);
  std::map<std::string, std::string> la, ra;
  if (!fv.vars.empty()) {
    if (!span.context || !span.into_apex) {
      res.verdict = Verdict::NotApplicable;
      res.note = "open formula but the span carries no context";
      return res;
    }
    for (const auto& [v, s] : fv.vars) {
      (void)s;
      auto it = span.into_apex->comp.find(v);
      if (it == span.into_apex->comp.end()) {
        res.verdict = Verdict::NotApplicable;
        res.note = "context does not interpret " + v;
        return res;
      }
      la[v] = span.left(it->second);
      ra[v] = span.right(it->second);
    }
  }
  res.left_value = satisfies(*span.left.dst, phi, la);
  res.right_value = satisfies(*span.right.dst, phi, ra);
  if (res.left_value != res.right_value) {
    res.verdict = Verdict::Disagree;
    res.note = "tool defect: the invariance theorem forbids disagreement";
  } else {
    res.verdict = res.left_value ? Verdict::AgreeTrue : Verdict::AgreeFalse;
  }
  return res;
}

InvarianceRun run_invariance(const Span& span, const std::vector<FormulaUnit>& sentences) {
  InvarianceRun run;
  auto lcheck = is_fiberwise_surjective(span.left);
  auto rcheck = is_fiberwise_surjective(span.right);
  if (!lcheck.ok || !rcheck.ok) {
    run.applicable = false;
    return run;
  }
  for (const auto& phi : sentences) {
    std::map<std::string, std::string> empty;
    bool l = satisfies(*span.left.dst, phi, empty);
    bool r = satisfies(*span.right.dst, phi, empty);
    if (l != r)
      run.disagreements.push_back(print_formula(phi.root));
    else if (l)
      ++run.agree_true;
    else
      ++run.agree_false;
  }
  return run;
}

}  // namespace folds
