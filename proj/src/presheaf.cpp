#include "folds/presheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace folds {

void Presheaf::add_element(const std::string& kind, const std::string& elem) {
  carrier[kind].push_back(elem);
  elem_kind[elem] = kind;
}

void Presheaf::set_action(const std::string& srckind, const std::string& arrow,
                          const std::string& e, const std::string& img) {
  action[{srckind, arrow}][e] = img;
}

const std::vector<std::string>& Presheaf::at(const std::string& kind) const {
  static const std::vector<std::string> empty;
  auto it = carrier.find(kind);
  return it == carrier.end() ? empty : it->second;
}

std::string Presheaf::act(const std::string& srckind, const std::string& arrow,
                          const std::string& e) const {
  auto it = action.find({srckind, arrow});
  if (it == action.end()) throw FoldsError("UnknownArrow", arrow + " out of " + srckind);
  auto jt = it->second.find(e);
  if (jt == it->second.end()) throw FoldsError("ActionNotTotal", arrow + " at " + e);
  return jt->second;
}

std::string Presheaf::act_word(const ArrowWord& w, std::string e) const {
  std::string at = w.src;
  for (const auto& n : w.names) {
    const SigArrow* a = sig->find_arrow(at, n);
    if (!a) throw FoldsError("UnknownArrow", n + " out of " + at);
    e = act(at, n, e);
    at = a->dst;
  }
  return e;
}

std::string Presheaf::kind_of(const std::string& elem) const {
  auto it = elem_kind.find(elem);
  if (it == elem_kind.end()) throw FoldsError("UnknownElement", elem);
  return it->second;
}

size_t Presheaf::total_elements() const {
  size_t n = 0;
  for (const auto& [k, es] : carrier) n += es.size();
  return n;
}

ValidationReport validate_presheaf(const Presheaf& X) {
  ValidationReport rep;
  if (!X.sig || !X.sig->validated) {
    rep.add("Unvalidated", "presheaf has no validated signature");
    return rep;
  }
  const FoldsSignature& sig = *X.sig;
  for (const auto& [k, es] : X.carrier) {
    if (!sig.has_kind(k)) rep.add("UnknownKind", k);
    for (const auto& e : es) {
      auto it = X.elem_kind.find(e);
      if (it == X.elem_kind.end() || it->second != k)
        rep.add("DisjointnessViolation", "element " + e + " not uniquely of kind " + k);
    }
  }
  if (!rep.ok()) return rep;
  // Totality and typing of the action on generating arrows.
  for (const auto& a : sig.arrows) {
    for (const auto& e : X.at(a.src)) {
      auto it = X.action.find({a.src, a.name});
      if (it == X.action.end() || !it->second.count(e)) {
        rep.add("ActionNotTotal", a.name + " out of " + a.src + " undefined at " + e);
        continue;
      }
      const std::string& img = it->second.at(e);
      auto kt = X.elem_kind.find(img);
      if (kt == X.elem_kind.end() || kt->second != a.dst)
        rep.add("IllTypedAction", a.name + "(" + e + ") = " + img + " not in " + a.dst);
    }
  }
  for (const auto& [key, m] : X.action) {
    if (!sig.find_arrow(key.first, key.second))
      rep.add("UnknownArrow", key.second + " out of " + key.first);
    (void)m;
  }
  if (!rep.ok()) return rep;
  // Functoriality: declared relations hold elementwise.
  for (const auto& r : sig.relations) {
    ArrowWord lw{r.at, "", r.lhs}, rw{r.at, "", r.rhs};
    for (const auto& e : X.at(r.at)) {
      std::string a = X.act_word(lw, e);
      std::string b = X.act_word(rw, e);
      if (a != b)
        rep.add("RelationViolated", r.at + ": " + lw.str() + " = " + rw.str() + " fails at " + e +
                                        " (" + a + " vs " + b + ")");
    }
  }
  return rep;
}

std::vector<MatchingFamily> matching_object(
    const Presheaf& X, const std::string& K,
    const std::function<bool(const std::string&, const std::string&)>& filter) {
  const FoldsSignature& sig = *X.sig;
  if (!sig.has_kind(K)) throw FoldsError("UnknownKind", K);
  auto gens = sig.arrows_from(K);
  // Constraints: every pair of equivalent non-identity words out of K must
  // evaluate equally once their leading generators are assigned. Canonical
  // words w = a . w' evaluate as X(w')(value(a)).
  struct Constraint {
    size_t gi, gj;            // generator indices
    ArrowWord wi, wj;         // residual words out of the generators' targets
  };
  std::vector<Constraint> constraints;
  auto gen_index = [&](const std::string& name) -> size_t {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i]->name == name) return i;
    throw FoldsError("InternalError", "generator " + name + " not found at " + K);
  };
  {
    // Group all words out of K by canonical form; members of one class with
    // different leading generators induce constraints.
    std::map<std::string, std::vector<std::vector<std::string>>> classes;
    auto it = sig.canon_map.find(K);
    if (it != sig.canon_map.end()) {
      for (const auto& [wstr, canon] : it->second) {
        std::vector<std::string> names;
        std::string cur;
        for (char c : wstr + ".") {
          if (c == '.') {
            names.push_back(cur);
            cur.clear();
          } else
            cur += c;
        }
        classes[canon.str()].push_back(names);
      }
    }
    for (auto& [cstr, members] : classes) {
      (void)cstr;
      for (size_t i = 0; i + 1 < members.size(); ++i) {
        const auto& a = members[i];
        const auto& b = members[i + 1];
        size_t gi = gen_index(a[0]), gj = gen_index(b[0]);
        ArrowWord wi = sig.canonical(gens[gi]->dst, {a.begin() + 1, a.end()});
        ArrowWord wj = sig.canonical(gens[gj]->dst, {b.begin() + 1, b.end()});
        constraints.push_back({gi, gj, wi, wj});
      }
    }
  }

  std::vector<MatchingFamily> out;
  std::vector<std::string> assign(gens.size());
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == gens.size()) {
      // Expand to the full word-indexed family.
      MatchingFamily fam;
      auto wf = sig.words_from.find(K);
      if (wf != sig.words_from.end()) {
        for (const auto& w : wf->second) {
          size_t g = gen_index(w.names[0]);
          ArrowWord rest = sig.canonical(gens[g]->dst, {w.names.begin() + 1, w.names.end()});
          fam[w.str()] = X.act_word(rest, assign[g]);
        }
      }
      out.push_back(std::move(fam));
      return;
    }
    for (const auto& e : X.at(gens[i]->dst)) {
      if (filter && !filter(gens[i]->name, e)) continue;
      assign[i] = e;
      bool ok = true;
      for (const auto& c : constraints) {
        if (c.gi > i || c.gj > i) continue;
        if (X.act_word(c.wi, assign[c.gi]) != X.act_word(c.wj, assign[c.gj])) {
          ok = false;
          break;
        }
      }
      if (ok) go(i + 1);
    }
  };
  go(0);
  return out;
}

MatchingFamily matching_image(const Presheaf& X, const std::string& K, const std::string& e) {
  const FoldsSignature& sig = *X.sig;
  MatchingFamily fam;
  auto wf = sig.words_from.find(K);
  if (wf != sig.words_from.end())
    for (const auto& w : wf->second) fam[w.str()] = X.act_word(w, e);
  return fam;
}

LStructureCheck is_l_structure(const Presheaf& X) {
  LStructureCheck res;
  for (const auto& R : X.sig->relsymbols) {
    std::map<std::string, std::string> seen;  // family fingerprint -> element
    for (const auto& e : X.at(R)) {
      MatchingFamily fam = matching_image(X, R, e);
      std::string key;
      for (const auto& [w, v] : fam) key += w + "=" + v + ";";
      auto [it, fresh] = seen.insert({key, e});
      if (!fresh) {
        res.ok = false;
        res.kind = R;
        res.e1 = it->second;
        res.e2 = e;
        return res;
      }
    }
  }
  return res;
}

std::string NatTransf::operator()(const std::string& e) const {
  auto it = comp.find(e);
  if (it == comp.end()) throw FoldsError("InterpretationMismatch", "no component at " + e);
  return it->second;
}

ValidationReport validate_nattransf(const NatTransf& f) {
  ValidationReport rep;
  if (!f.src || !f.dst) {
    rep.add("Unvalidated", "nat transf without endpoints");
    return rep;
  }
  if (f.src->sig != f.dst->sig && print_signature(*f.src->sig) != print_signature(*f.dst->sig))
    rep.add("SignatureMismatch", "source and target over different signatures");
  const FoldsSignature& sig = *f.src->sig;
  for (const auto& [k, es] : f.src->carrier) {
    for (const auto& e : es) {
      auto it = f.comp.find(e);
      if (it == f.comp.end()) {
        rep.add("ComponentNotTotal", "no image for " + e);
        continue;
      }
      auto kt = f.dst->elem_kind.find(it->second);
      if (kt == f.dst->elem_kind.end() || kt->second != k)
        rep.add("IllTypedComponent", e + " |-> " + it->second + " not in " + k);
    }
  }
  if (!rep.ok()) return rep;
  for (const auto& a : sig.arrows)
    for (const auto& e : f.src->at(a.src)) {
      std::string lhs = f(f.src->act(a.src, a.name, e));
      std::string rhs = f.dst->act(a.src, a.name, f(e));
      if (lhs != rhs)
        rep.add("NaturalityViolated",
                a.name + " at " + e + ": " + lhs + " vs " + rhs);
    }
  return rep;
}

NatTransf identity_nat(std::shared_ptr<const Presheaf> X) {
  NatTransf f;
  f.src = X;
  f.dst = X;
  for (const auto& [k, es] : X->carrier) {
    (void)k;
    for (const auto& e : es) f.comp[e] = e;
  }
  return f;
}

NatTransf compose_nat(const NatTransf& first, const NatTransf& second) {
  NatTransf g;
  g.src = first.src;
  g.dst = second.dst;
  for (const auto& [e, v] : first.comp) g.comp[e] = second(v);
  return g;
}

FiberwiseCheck is_fiberwise_surjective(const NatTransf& rho) {
  FiberwiseCheck res;
  const Presheaf& X = *rho.src;
  const Presheaf& Y = *rho.dst;
  const FoldsSignature& sig = *X.sig;
  for (const auto& K : sig.kinds) {
    // Preimage fingerprints of X(K): (image element, matching family).
    std::set<std::string> hit;
    for (const auto& x : X.at(K)) {
      MatchingFamily fx = matching_image(X, K, x);
      std::string key = rho(x) + "|";
      for (const auto& [w, v] : fx) key += w + "=" + v + ";";
      hit.insert(key);
    }
    for (const auto& y : Y.at(K)) {
      MatchingFamily fy = matching_image(Y, K, y);
      // Enumerate lifts of fy to X along rho.
      auto filter = [&](const std::string& arrow, const std::string& elem) {
        const SigArrow* a = sig.find_arrow(K, arrow);
        auto it = fy.find(sig.canonical(K, {a->name}).str());
        return it != fy.end() && rho(elem) == it->second;
      };
      for (const auto& fx : matching_object(X, K, filter)) {
        // The filter pins generators; derived words follow by naturality,
        // but check the whole family to be safe.
        bool lifts = true;
        for (const auto& [w, v] : fx)
          if (rho(v) != fy.at(w)) {
            lifts = false;
            break;
          }
        if (!lifts) continue;
        std::string key = y + "|";
        for (const auto& [w, v] : fx) key += w + "=" + v + ";";
        if (!hit.count(key)) {
          res.ok = false;
          res.kind = K;
          res.target_elem = y;
          res.family = fx;
          return res;
        }
      }
    }
  }
  return res;
}

ValidationReport Span::validate() const {
  ValidationReport rep;
  rep.merge(validate_nattransf(left));
  rep.merge(validate_nattransf(right));
  if (left.src.get() != apex.get()) rep.add("SpanMismatch", "left leg source is not the apex");
  if (right.src.get() != apex.get()) rep.add("SpanMismatch", "right leg source is not the apex");
  if (context) {
    if (!into_apex) {
      rep.add("SpanMismatch", "context present but no interpretation into the apex");
    } else {
      rep.merge(validate_nattransf(*into_apex));
      if (into_apex->src.get() != context.get())
        rep.add("SpanMismatch", "context interpretation source is not the context");
      if (into_apex->dst.get() != apex.get())
        rep.add("SpanMismatch", "context interpretation target is not the apex");
    }
  }
  return rep;
}

Presheaf boundary_weight(std::shared_ptr<const FoldsSignature> sig, const std::string& K) {
  if (!sig->has_kind(K)) throw FoldsError("UnknownKind", K);
  Presheaf X;
  X.sig = sig;
  for (const auto& H : sig->kinds) X.carrier[H];  // empty carriers everywhere
  auto wf = sig->words_from.find(K);
  std::vector<ArrowWord> words;
  if (wf != sig->words_from.end()) words = wf->second;
  for (const auto& w : words) X.add_element(w.dst, w.str());
  for (const auto& w : words)
    for (const auto* a : sig->arrows_from(w.dst)) {
      std::vector<std::string> ext = w.names;
      ext.push_back(a->name);
      X.set_action(w.dst, a->name, w.str(), sig->canonical(K, ext).str());
    }
  return X;
}

// ---------------------------------------------------------------------------
// File formats

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

}  // namespace

Presheaf parse_presheaf(const std::string& text, std::shared_ptr<const FoldsSignature> sig) {
  Presheaf X;
  X.sig = sig;
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
      throw FoldsError("SyntaxError", "presheaf line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("arrow ", 0) == 0) {
      // arrow a: e -> e'
      auto colon = line.find(':');
      auto arr = line.find("->");
      if (colon == std::string::npos || arr == std::string::npos) fail("expected 'arrow a: e -> e''");
      std::string a = strip(line.substr(6, colon - 6));
      std::string e = strip(line.substr(colon + 1, arr - colon - 1));
      std::string img = strip(line.substr(arr + 2));
      auto kt = X.elem_kind.find(e);
      if (kt == X.elem_kind.end()) fail("unknown element " + e);
      if (!sig->find_arrow(kt->second, a)) fail("unknown arrow " + a + " out of " + kt->second);
      X.set_action(kt->second, a, e, img);
    } else {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail("expected 'K: e1 e2 ...'");
      std::string k = strip(line.substr(0, colon));
      if (!sig->has_kind(k)) throw FoldsError("UnknownKind", k);
      X.carrier[k];
      for (const auto& e : split_ws(line.substr(colon + 1))) X.add_element(k, e);
    }
  }
  for (const auto& k : sig->kinds) X.carrier[k];
  return X;
}

std::string print_presheaf(const Presheaf& X) {
  std::ostringstream out;
  for (const auto& k : X.sig->kinds) {
    out << k << ":";
    for (const auto& e : X.at(k)) out << " " << e;
    out << "\n";
  }
  for (const auto& k : X.sig->kinds)
    for (const auto* a : X.sig->arrows_from(k))
      for (const auto& e : X.at(k)) {
        auto it = X.action.find({k, a->name});
        if (it != X.action.end()) {
          auto jt = it->second.find(e);
          if (jt != it->second.end())
            out << "arrow " << a->name << ": " << e << " -> " << jt->second << "\n";
        }
      }
  return out.str();
}

NatTransf parse_nattransf(const std::string& text, std::shared_ptr<const Presheaf> src,
                          std::shared_ptr<const Presheaf> dst) {
  NatTransf f;
  f.src = src;
  f.dst = dst;
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
      throw FoldsError("SyntaxError", "nat line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("at ", 0) != 0) fail("expected 'at K: e |-> e''");
    auto colon = line.find(':');
    auto arr = line.find("|->");
    if (colon == std::string::npos || arr == std::string::npos) fail("expected 'at K: e |-> e''");
    std::string e = strip(line.substr(colon + 1, arr - colon - 1));
    std::string v = strip(line.substr(arr + 3));
    f.comp[e] = v;
  }
  return f;
}

std::string print_nattransf(const NatTransf& f) {
  std::ostringstream out;
  for (const auto& k : f.src->sig->kinds)
    for (const auto& e : f.src->at(k)) {
      auto it = f.comp.find(e);
      if (it != f.comp.end()) out << "at " << k << ": " << e << " |-> " << it->second << "\n";
    }
  return out.str();
}

}  // namespace folds
