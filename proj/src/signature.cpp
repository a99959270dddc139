#include "folds/signature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace folds {

std::string ArrowWord::str() const {
  if (names.empty()) return "id_" + src;
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += ".";
    s += names[i];
  }
  return s;
}

bool FoldsSignature::has_kind(const std::string& k) const {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

bool FoldsSignature::is_relation_kind(const std::string& k) const {
  return std::find(relsymbols.begin(), relsymbols.end(), k) != relsymbols.end();
}

const SigArrow* FoldsSignature::find_arrow(const std::string& src, const std::string& name) const {
  for (const auto& a : arrows)
    if (a.src == src && a.name == name) return &a;
  return nullptr;
}

std::vector<const SigArrow*> FoldsSignature::arrows_from(const std::string& k) const {
  std::vector<const SigArrow*> out;
  for (const auto& a : arrows)
    if (a.src == k) out.push_back(&a);
  return out;
}

int FoldsSignature::name_rank(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return static_cast<int>(arrows.size());
}

namespace {

// Shortlex comparison of name sequences under the signature's name order.
bool shortlex_less(const FoldsSignature& sig, const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = sig.name_rank(a[i]), rb = sig.name_rank(b[i]);
    if (ra != rb) return ra < rb;
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string join_word(const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += ".";
    s += names[i];
  }
  return s;
}

// Target kind of a word starting at src, or nullopt if non-composable.
std::optional<std::string> word_target(const FoldsSignature& sig, const std::string& src,
                                       const std::vector<std::string>& names) {
  std::string at = src;
  for (const auto& n : names) {
    const SigArrow* a = sig.find_arrow(at, n);
    if (!a) return std::nullopt;
    at = a->dst;
  }
  return at;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

ArrowWord FoldsSignature::canonical(const std::string& src,
                                    const std::vector<std::string>& names) const {
  if (!validated) throw FoldsError("Unvalidated", "canonical() needs a validated signature");
  if (names.empty()) return ArrowWord{src, src, {}};
  auto it = canon_map.find(src);
  if (it == canon_map.end()) throw FoldsError("UnknownKind", src);
  auto jt = it->second.find(join_word(names));
  if (jt == it->second.end())
    throw FoldsError("UnknownArrow", "word " + join_word(names) + " out of " + src);
  return jt->second;
}

std::vector<ArrowWord> FoldsSignature::hom_words(const std::string& src,
                                                 const std::string& dst) const {
  if (!validated) throw FoldsError("Unvalidated", "hom_words() needs a validated signature");
  if (!has_kind(src)) throw FoldsError("UnknownKind", src);
  if (!has_kind(dst)) throw FoldsError("UnknownKind", dst);
  std::vector<ArrowWord> out;
  auto it = words_from.find(src);
  if (it != words_from.end())
    for (const auto& w : it->second)
      if (w.dst == dst) out.push_back(w);
  return out;
}

ValidationReport validate_signature(FoldsSignature& sig) {
  ValidationReport rep;
  sig.validated = false;
  sig.degree.clear();
  sig.words_from.clear();
  sig.canon_map.clear();

  // Basic naming.
  std::set<std::string> kindset;
  for (const auto& k : sig.kinds) {
    if (!kindset.insert(k).second) rep.add("DuplicateKind", k);
  }
  for (const auto& r : sig.relsymbols)
    if (!kindset.count(r)) rep.add("UnknownKind", "relsymbol " + r);
  std::set<std::pair<std::string, std::string>> arrowkeys;
  for (const auto& a : sig.arrows) {
    if (!kindset.count(a.src)) rep.add("UnknownKind", "arrow " + a.name + " source " + a.src);
    if (!kindset.count(a.dst)) rep.add("UnknownKind", "arrow " + a.name + " target " + a.dst);
    if (!arrowkeys.insert({a.src, a.name}).second)
      rep.add("DuplicateArrow", a.name + " out of " + a.src);
    if (sig.is_relation_kind(a.dst))
      rep.add("RelationNotMaximal", "arrow " + a.name + ": " + a.src + " -> " + a.dst);
  }
  if (!rep.ok()) return rep;

  // Inverse-category condition: the arrow graph must be acyclic. Degrees are
  // the longest generating path to a sink.
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::function<bool(const std::string&)> cyc = [&](const std::string& k) -> bool {
    state[k] = 1;
    for (const auto& a : sig.arrows)
      if (a.src == k) {
        if (state[a.dst] == 1) return true;
        if (state[a.dst] == 0 && cyc(a.dst)) return true;
      }
    state[k] = 2;
    return false;
  };
  for (const auto& k : sig.kinds) {
    if (state[k] == 0 && cyc(k)) {
      rep.add("DegreeCycle", "non-identity endomorphism path through " + k);
      return rep;
    }
  }
  std::function<int(const std::string&)> deg = [&](const std::string& k) -> int {
    auto it = sig.degree.find(k);
    if (it != sig.degree.end()) return it->second;
    int best = 0;
    for (const auto& a : sig.arrows)
      if (a.src == k) best = std::max(best, 1 + deg(a.dst));
    sig.degree[k] = best;
    return best;
  };
  for (const auto& k : sig.kinds) deg(k);

  // Relation typing.
  for (const auto& r : sig.relations) {
    if (!kindset.count(r.at)) {
      rep.add("UnknownKind", "relation at " + r.at);
      continue;
    }
    if (r.lhs.empty() || r.rhs.empty()) {
      rep.add("IllTypedRelation", "empty word in relation at " + r.at);
      continue;
    }
    auto lt = word_target(sig, r.at, r.lhs);
    auto rt = word_target(sig, r.at, r.rhs);
    if (!lt || !rt)
      rep.add("IllTypedRelation",
              "non-composable word at " + r.at + ": " + join_word(r.lhs) + " = " + join_word(r.rhs));
    else if (*lt != *rt)
      rep.add("IllTypedRelation", "targets differ at " + r.at + ": " + join_word(r.lhs) + " -> " +
                                      *lt + " vs " + join_word(r.rhs) + " -> " + *rt);
  }
  if (!rep.ok()) return rep;

  // Word saturation: enumerate every composable word out of each kind
  // (finite: the arrow graph is a DAG), then close the relation rewrites
  // into equivalence classes and pick shortlex-least representatives.
  for (const auto& K : sig.kinds) {
    std::vector<std::vector<std::string>> words;
    std::function<void(const std::string&, std::vector<std::string>&)> go =
        [&](const std::string& at, std::vector<std::string>& acc) {
          for (const auto& a : sig.arrows)
            if (a.src == at) {
              acc.push_back(a.name);
              words.push_back(acc);
              go(a.dst, acc);
              acc.pop_back();
            }
        };
    std::vector<std::string> acc;
    go(K, acc);

    std::map<std::string, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[join_word(words[i])] = static_cast<int>(i);
    Dsu dsu(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      const auto& w = words[i];
      std::string at = K;
      for (size_t pos = 0; pos < w.size(); ++pos) {
        for (const auto& rel : sig.relations) {
          if (rel.at != at) continue;
          auto try_rewrite = [&](const std::vector<std::string>& from,
                                 const std::vector<std::string>& to) {
            if (pos + from.size() > w.size()) return;
            for (size_t j = 0; j < from.size(); ++j)
              if (w[pos + j] != from[j]) return;
            std::vector<std::string> w2(w.begin(), w.begin() + pos);
            w2.insert(w2.end(), to.begin(), to.end());
            w2.insert(w2.end(), w.begin() + pos + from.size(), w.end());
            auto it = index.find(join_word(w2));
            if (it != index.end()) dsu.unite(static_cast<int>(i), it->second);
          };
          try_rewrite(rel.lhs, rel.rhs);
          try_rewrite(rel.rhs, rel.lhs);
        }
        at = sig.find_arrow(at, w[pos])->dst;
      }
    }

    // Shortlex-least member per class.
    std::map<int, int> best;  // class root -> word index
    for (size_t i = 0; i < words.size(); ++i) {
      int r = dsu.find(static_cast<int>(i));
      auto it = best.find(r);
      if (it == best.end() || shortlex_less(sig, words[i], words[it->second]))
        best[r] = static_cast<int>(i);
    }
    auto& cm = sig.canon_map[K];
    for (size_t i = 0; i < words.size(); ++i) {
      const auto& canon_names = words[best[dsu.find(static_cast<int>(i))]];
      ArrowWord cw{K, *word_target(sig, K, canon_names), canon_names};
      cm[join_word(words[i])] = cw;
    }
    std::vector<ArrowWord> reps;
    for (const auto& [root, wi] : best) {
      (void)root;
      reps.push_back(ArrowWord{K, *word_target(sig, K, words[wi]), words[wi]});
    }
    std::sort(reps.begin(), reps.end(), [&](const ArrowWord& a, const ArrowWord& b) {
      return shortlex_less(sig, a.names, b.names);
    });
    sig.words_from[K] = std::move(reps);
  }

  sig.validated = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

FoldsSignature make_cat() {
  FoldsSignature s;
  s.name = "cat";
  s.kinds = {"O", "A", "I'", "T'", "E'"};
  s.relsymbols = {"I'", "T'", "E'"};
  s.arrows = {
      {"s", "A", "O"}, {"t", "A", "O"},
      {"i", "I'", "A"},
      {"l", "T'", "A"}, {"r", "T'", "A"}, {"c", "T'", "A"},
      {"l", "E'", "A"}, {"r", "E'", "A"},
  };
  s.relations = {
      {"I'", {"i", "s"}, {"i", "t"}},
      {"T'", {"l", "s"}, {"c", "s"}},
      {"T'", {"r", "t"}, {"c", "t"}},
      {"T'", {"l", "t"}, {"r", "s"}},
      {"E'", {"l", "s"}, {"r", "s"}},
      {"E'", {"l", "t"}, {"r", "t"}},
  };
  return s;
}

FoldsSignature make_twocat() {
  FoldsSignature s;
  s.name = "twocat";
  s.kinds = {"C0", "C1", "C2", "T", "I1", "I2'", "V'", "H'", "E'"};
  s.relsymbols = {"I2'", "V'", "H'", "E'"};
  s.arrows = {
      {"s", "C1", "C0"}, {"t", "C1", "C0"},
      {"s", "C2", "C1"}, {"t", "C2", "C1"},
      {"l", "T", "C1"},  {"r", "T", "C1"},  {"c", "T", "C1"},
      {"i", "I1", "C1"},
      {"i", "I2'", "C2"},
      {"l", "V'", "C2"}, {"r", "V'", "C2"}, {"c", "V'", "C2"},
      {"l", "E'", "C2"}, {"r", "E'", "C2"},
      {"l", "H'", "C2"}, {"r", "H'", "C2"}, {"c", "H'", "C2"},
      {"s", "H'", "T"},  {"t", "H'", "T"},
  };
  s.relations = {
      {"C2", {"s", "s"}, {"t", "s"}},
      {"C2", {"s", "t"}, {"t", "t"}},
      {"T", {"l", "s"}, {"c", "s"}},
      {"T", {"r", "t"}, {"c", "t"}},
      {"T", {"l", "t"}, {"r", "s"}},
      {"I1", {"i", "s"}, {"i", "t"}},
      {"I2'", {"i", "s"}, {"i", "t"}},
      {"V'", {"l", "s"}, {"c", "s"}},
      {"V'", {"r", "t"}, {"c", "t"}},
      {"V'", {"l", "t"}, {"r", "s"}},
      {"E'", {"l", "s"}, {"r", "s"}},
      {"E'", {"l", "t"}, {"r", "t"}},
      {"H'", {"l", "s"}, {"s", "l"}},
      {"H'", {"r", "s"}, {"s", "r"}},
      {"H'", {"c", "s"}, {"s", "c"}},
      {"H'", {"l", "t"}, {"t", "l"}},
      {"H'", {"r", "t"}, {"t", "r"}},
      {"H'", {"c", "t"}, {"t", "c"}},
  };
  return s;
}

FoldsSignature make_dblcat() {
  FoldsSignature s;
  s.name = "dblcat";
  s.kinds = {"O", "H", "V", "S", "I_H", "T_H", "I_V", "T_V",
             "I_hor'", "I_ver'", "H_c'", "V_c'", "E'"};
  s.relsymbols = {"I_hor'", "I_ver'", "H_c'", "V_c'", "E'"};
  s.arrows = {
      {"s", "H", "O"},      {"t", "H", "O"},
      {"s", "V", "O"},      {"t", "V", "O"},
      {"u", "S", "H"},      {"d", "S", "H"},      {"l", "S", "V"},   {"r", "S", "V"},
      {"i_H", "I_H", "H"},
      {"l", "T_H", "H"},    {"r", "T_H", "H"},    {"c", "T_H", "H"},
      {"i_V", "I_V", "V"},
      {"u", "T_V", "V"},    {"d", "T_V", "V"},    {"c", "T_V", "V"},
      {"b", "E'", "S"},     {"f", "E'", "S"},
      {"i_shor", "I_hor'", "S"}, {"u", "I_hor'", "I_H"}, {"d", "I_hor'", "I_H"},
      {"i_sver", "I_ver'", "S"}, {"l", "I_ver'", "I_V"}, {"r", "I_ver'", "I_V"},
      {"l", "H_c'", "S"},   {"r", "H_c'", "S"},   {"c", "H_c'", "S"},
      {"u", "H_c'", "T_H"}, {"d", "H_c'", "T_H"},
      {"u", "V_c'", "S"},   {"d", "V_c'", "S"},   {"c", "V_c'", "S"},
      {"l", "V_c'", "T_V"}, {"r", "V_c'", "T_V"},
  };
  s.relations = {
      {"I_H", {"i_H", "s"}, {"i_H", "t"}},
      {"I_V", {"i_V", "s"}, {"i_V", "t"}},
      {"T_H", {"l", "s"}, {"c", "s"}},
      {"T_H", {"r", "t"}, {"c", "t"}},
      {"T_H", {"l", "t"}, {"r", "s"}},
      {"T_V", {"u", "s"}, {"c", "s"}},
      {"T_V", {"d", "t"}, {"c", "t"}},
      {"T_V", {"u", "t"}, {"d", "s"}},
      {"S", {"u", "s"}, {"l", "s"}},
      {"S", {"u", "t"}, {"r", "s"}},
      {"S", {"d", "s"}, {"l", "t"}},
      {"S", {"d", "t"}, {"r", "t"}},
      {"E'", {"b", "u"}, {"f", "u"}},
      {"E'", {"b", "d"}, {"f", "d"}},
      {"E'", {"b", "l"}, {"f", "l"}},
      {"E'", {"b", "r"}, {"f", "r"}},
      {"I_hor'", {"i_shor", "u"}, {"u", "i_H"}},
      {"I_hor'", {"i_shor", "d"}, {"d", "i_H"}},
      {"I_hor'", {"i_shor", "l"}, {"i_shor", "r"}},
      {"I_ver'", {"i_sver", "l"}, {"l", "i_V"}},
      {"I_ver'", {"i_sver", "r"}, {"r", "i_V"}},
      {"I_ver'", {"i_sver", "u"}, {"i_sver", "d"}},
      {"H_c'", {"c", "l"}, {"l", "l"}},
      {"H_c'", {"c", "r"}, {"r", "r"}},
      {"H_c'", {"l", "r"}, {"r", "l"}},
      {"H_c'", {"c", "u"}, {"u", "c"}},
      {"H_c'", {"c", "d"}, {"d", "c"}},
      {"H_c'", {"l", "u"}, {"u", "l"}},
      {"H_c'", {"r", "u"}, {"u", "r"}},
      {"H_c'", {"r", "d"}, {"d", "r"}},
      {"H_c'", {"l", "d"}, {"d", "l"}},
      {"V_c'", {"u", "u"}, {"c", "u"}},
      {"V_c'", {"d", "d"}, {"c", "d"}},
      {"V_c'", {"u", "d"}, {"d", "u"}},
      {"V_c'", {"u", "l"}, {"l", "u"}},
      {"V_c'", {"u", "r"}, {"r", "u"}},
      {"V_c'", {"d", "l"}, {"l", "d"}},
      {"V_c'", {"d", "r"}, {"r", "d"}},
      {"V_c'", {"c", "l"}, {"l", "c"}},
      {"V_c'", {"c", "r"}, {"r", "c"}},
  };
  return s;
}

}  // namespace

std::shared_ptr<const FoldsSignature> builtin_signature(const std::string& which) {
  FoldsSignature s;
  if (which == "cat")
    s = make_cat();
  else if (which == "twocat")
    s = make_twocat();
  else if (which == "dblcat")
    s = make_dblcat();
  else
    throw FoldsError("UnknownBuiltin", "signature " + which);
  auto rep = validate_signature(s);
  if (!rep.ok()) throw FoldsError("InternalError", "builtin " + which + ": " + rep.summary());
  return std::make_shared<const FoldsSignature>(std::move(s));
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::vector<std::string> split_word_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '.') {
      cur = strip(cur);
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = strip(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

FoldsSignature parse_signature(const std::string& text) {
  FoldsSignature sig;
  enum class Sec { None, Kinds, Rels, Arrows, Relations };
  Sec sec = Sec::None;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    line = strip_comment(line);
    line = strip(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw FoldsError("SyntaxError", "signature line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("signature", 0) == 0) {
      auto parts = split_ws(line.substr(9));
      if (!parts.empty()) sig.name = parts[0];
      continue;
    }
    if (line.rfind("kinds:", 0) == 0) {
      sec = Sec::Kinds;
      for (auto& k : split_ws(line.substr(6))) sig.kinds.push_back(k);
      continue;
    }
    if (line.rfind("relsymbols:", 0) == 0) {
      sec = Sec::Rels;
      for (auto& k : split_ws(line.substr(11))) sig.relsymbols.push_back(k);
      continue;
    }
    if (line == "arrows:") {
      sec = Sec::Arrows;
      continue;
    }
    if (line == "relations:") {
      sec = Sec::Relations;
      continue;
    }
    switch (sec) {
      case Sec::Kinds:
        for (auto& k : split_ws(line)) sig.kinds.push_back(k);
        break;
      case Sec::Rels:
        for (auto& k : split_ws(line)) sig.relsymbols.push_back(k);
        break;
      case Sec::Arrows: {
        // name: Src -> Dst
        auto colon = line.find(':');
        auto arr = line.find("->");
        if (colon == std::string::npos || arr == std::string::npos || arr < colon)
          fail("expected 'name: Src -> Dst'");
        SigArrow a;
        a.name = strip(line.substr(0, colon));
        a.src = strip(line.substr(colon + 1, arr - colon - 1));
        a.dst = strip(line.substr(arr + 2));
        if (a.name.empty() || a.src.empty() || a.dst.empty()) fail("incomplete arrow");
        sig.arrows.push_back(a);
        break;
      }
      case Sec::Relations: {
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'w1 . w2 = u1 . u2'");
        std::string lhs_s = strip(line.substr(0, eq));
        std::string rhs_s = strip(line.substr(eq + 1));
        std::string at;
        auto colon = lhs_s.find(':');
        if (colon != std::string::npos && lhs_s.find('.') > colon) {
          at = strip(lhs_s.substr(0, colon));
          lhs_s = strip(lhs_s.substr(colon + 1));
        }
        auto lhs = split_word_names(lhs_s);
        auto rhs = split_word_names(rhs_s);
        if (lhs.empty() || rhs.empty()) fail("empty relation side");
        if (!at.empty()) {
          sig.relations.push_back({at, lhs, rhs});
        } else {
          // Bare relation: instantiate at every kind where both sides
          // compose with a common source and target.
          bool any = false;
          for (const auto& K : sig.kinds) {
            auto lt = word_target(sig, K, lhs);
            auto rt = word_target(sig, K, rhs);
            if (lt && rt && *lt == *rt) {
              sig.relations.push_back({K, lhs, rhs});
              any = true;
            }
          }
          if (!any) fail("relation matches no kind: " + line);
        }
        break;
      }
      case Sec::None:
        fail("content outside any section: " + line);
    }
  }
  return sig;
}

std::string print_signature(const FoldsSignature& sig) {
  std::ostringstream out;
  if (!sig.name.empty()) out << "signature " << sig.name << "\n";
  out << "kinds:";
  for (const auto& k : sig.kinds) out << " " << k;
  out << "\nrelsymbols:";
  for (const auto& k : sig.relsymbols) out << " " << k;
  out << "\narrows:\n";
  for (const auto& a : sig.arrows) out << a.name << ": " << a.src << " -> " << a.dst << "\n";
  out << "relations:\n";
  for (const auto& r : sig.relations) {
    out << r.at << ": ";
    for (size_t i = 0; i < r.lhs.size(); ++i) out << (i ? " . " : "") << r.lhs[i];
    out << " = ";
    for (size_t i = 0; i < r.rhs.size(); ++i) out << (i ? " . " : "") << r.rhs[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace folds
