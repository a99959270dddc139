#include "folds/shape.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace folds {

HExprP hgen(const std::string& n) { return std::make_shared<HExpr>(HExpr{HExpr::Tag::Gen, n, nullptr, nullptr}); }
HExprP hid(const std::string& o) { return std::make_shared<HExpr>(HExpr{HExpr::Tag::Id, o, nullptr, nullptr}); }
HExprP hcomp_e(HExprP a, HExprP b) { return std::make_shared<HExpr>(HExpr{HExpr::Tag::Comp, "", a, b}); }
VExprP vgen(const std::string& n) { return std::make_shared<VExpr>(VExpr{VExpr::Tag::Gen, n, nullptr, nullptr}); }
VExprP vid(const std::string& o) { return std::make_shared<VExpr>(VExpr{VExpr::Tag::Id, o, nullptr, nullptr}); }
VExprP vcomp_e(VExprP a, VExprP b) { return std::make_shared<VExpr>(VExpr{VExpr::Tag::Comp, "", a, b}); }
SqExprP sgen(const std::string& n) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::Gen, n, nullptr, nullptr, nullptr, nullptr});
}
SqExprP esq_e(HExprP h) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::VId, "", h, nullptr, nullptr, nullptr});
}
SqExprP isq_e(VExprP v) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::HId, "", nullptr, v, nullptr, nullptr});
}
SqExprP osq_e(const std::string& o) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::ObjId, o, nullptr, nullptr, nullptr, nullptr});
}
SqExprP hcmp_e(SqExprP a, SqExprP b) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::HComp, "", nullptr, nullptr, a, b});
}
SqExprP vcmp_e(SqExprP a, SqExprP b) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::VComp, "", nullptr, nullptr, a, b});
}
SqExprP hinv_e(SqExprP a) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::HInv, "", nullptr, nullptr, a, nullptr});
}
SqExprP vinv_e(SqExprP a) {
  return std::make_shared<SqExpr>(SqExpr{SqExpr::Tag::VInv, "", nullptr, nullptr, a, nullptr});
}

const ShapePresentation::HGen* ShapePresentation::hgen_of(const std::string& n) const {
  for (const auto& g : hgens)
    if (g.name == n) return &g;
  return nullptr;
}
const ShapePresentation::VGen* ShapePresentation::vgen_of(const std::string& n) const {
  for (const auto& g : vgens)
    if (g.name == n) return &g;
  return nullptr;
}
const ShapePresentation::SGen* ShapePresentation::sgen_of(const std::string& n) const {
  for (const auto& g : sgens)
    if (g.name == n) return &g;
  return nullptr;
}

namespace {

// Source/target object generators of h/v expressions (symbolic typing).
std::optional<std::pair<std::string, std::string>> h_ends(const ShapePresentation& P,
                                                          const HExprP& e) {
  switch (e->tag) {
    case HExpr::Tag::Gen: {
      const auto* g = P.hgen_of(e->name);
      if (!g) return std::nullopt;
      return {{g->src, g->tgt}};
    }
    case HExpr::Tag::Id:
      return {{e->name, e->name}};
    case HExpr::Tag::Comp: {
      auto x = h_ends(P, e->a), y = h_ends(P, e->b);
      if (!x || !y || x->second != y->first) return std::nullopt;
      return {{x->first, y->second}};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> v_ends(const ShapePresentation& P,
                                                          const VExprP& e) {
  switch (e->tag) {
    case VExpr::Tag::Gen: {
      const auto* g = P.vgen_of(e->name);
      if (!g) return std::nullopt;
      return {{g->src, g->tgt}};
    }
    case VExpr::Tag::Id:
      return {{e->name, e->name}};
    case VExpr::Tag::Comp: {
      auto x = v_ends(P, e->a), y = v_ends(P, e->b);
      if (!x || !y || x->second != y->first) return std::nullopt;
      return {{x->first, y->second}};
    }
  }
  return std::nullopt;
}

void collect_h(const HExprP& e, std::set<std::string>& hs, std::set<std::string>& os) {
  if (!e) return;
  switch (e->tag) {
    case HExpr::Tag::Gen: hs.insert(e->name); break;
    case HExpr::Tag::Id: os.insert(e->name); break;
    case HExpr::Tag::Comp: collect_h(e->a, hs, os); collect_h(e->b, hs, os); break;
  }
}
void collect_v(const VExprP& e, std::set<std::string>& vs, std::set<std::string>& os) {
  if (!e) return;
  switch (e->tag) {
    case VExpr::Tag::Gen: vs.insert(e->name); break;
    case VExpr::Tag::Id: os.insert(e->name); break;
    case VExpr::Tag::Comp: collect_v(e->a, vs, os); collect_v(e->b, vs, os); break;
  }
}
void collect_sq(const SqExprP& e, std::set<std::string>& ss, std::set<std::string>& hs,
                std::set<std::string>& vs, std::set<std::string>& os) {
  if (!e) return;
  switch (e->tag) {
    case SqExpr::Tag::Gen: ss.insert(e->name); break;
    case SqExpr::Tag::VId: collect_h(e->h, hs, os); break;
    case SqExpr::Tag::HId: collect_v(e->v, vs, os); break;
    case SqExpr::Tag::ObjId: os.insert(e->name); break;
    case SqExpr::Tag::HComp:
    case SqExpr::Tag::VComp:
      collect_sq(e->a, ss, hs, vs, os);
      collect_sq(e->b, ss, hs, vs, os);
      break;
    case SqExpr::Tag::HInv:
    case SqExpr::Tag::VInv:
      collect_sq(e->a, ss, hs, vs, os);
      break;
  }
}

}  // namespace

ValidationReport validate_presentation(const ShapePresentation& P) {
  ValidationReport rep;
  std::set<std::string> objs(P.objects.begin(), P.objects.end());
  for (const auto& g : P.hgens)
    if (!objs.count(g.src) || !objs.count(g.tgt)) rep.add("UnknownObject", "hgen " + g.name);
  for (const auto& g : P.vgens)
    if (!objs.count(g.src) || !objs.count(g.tgt)) rep.add("UnknownObject", "vgen " + g.name);
  for (const auto& g : P.sgens) {
    auto t = h_ends(P, g.top), b = h_ends(P, g.bottom);
    auto l = v_ends(P, g.left), r = v_ends(P, g.right);
    if (!t || !b || !l || !r)
      rep.add("IllTypedBoundary", "sgen " + g.name);
    else if (l->first != t->first || r->first != t->second || l->second != b->first ||
             r->second != b->second)
      rep.add("BoundaryMismatch", "sgen " + g.name);
  }
  for (const auto& [n, bits] : P.invertible) {
    if (!P.sgen_of(n)) rep.add("UnknownName", "invertible " + n);
    if (bits == 0) rep.add("BadArgument", "invertible " + n + " with no direction");
  }
  return rep;
}

std::optional<std::string> eval_h(const HExprP& e, const FiniteDoubleCategory& X,
                                  const ShapeHom& h) {
  switch (e->tag) {
    case HExpr::Tag::Gen: {
      auto it = h.hm.find(e->name);
      if (it == h.hm.end()) return std::nullopt;
      return it->second;
    }
    case HExpr::Tag::Id: {
      auto it = h.obj.find(e->name);
      if (it == h.obj.end()) return std::nullopt;
      return X.idh_of(it->second);
    }
    case HExpr::Tag::Comp: {
      auto a = eval_h(e->a, X, h), b = eval_h(e->b, X, h);
      if (!a || !b) return std::nullopt;
      auto it = X.hcomp_h.find({*a, *b});
      if (it == X.hcomp_h.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<std::string> eval_v(const VExprP& e, const FiniteDoubleCategory& X,
                                  const ShapeHom& h) {
  switch (e->tag) {
    case VExpr::Tag::Gen: {
      auto it = h.vm.find(e->name);
      if (it == h.vm.end()) return std::nullopt;
      return it->second;
    }
    case VExpr::Tag::Id: {
      auto it = h.obj.find(e->name);
      if (it == h.obj.end()) return std::nullopt;
      return X.idv_of(it->second);
    }
    case VExpr::Tag::Comp: {
      auto a = eval_v(e->a, X, h), b = eval_v(e->b, X, h);
      if (!a || !b) return std::nullopt;
      auto it = X.vcomp_v.find({*a, *b});
      if (it == X.vcomp_v.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<std::string> eval_sq(const SqExprP& e, const FiniteDoubleCategory& X,
                                   const ShapeHom& h) {
  switch (e->tag) {
    case SqExpr::Tag::Gen: {
      auto it = h.sq.find(e->name);
      if (it == h.sq.end()) return std::nullopt;
      return it->second;
    }
    case SqExpr::Tag::VId: {
      auto f = eval_h(e->h, X, h);
      if (!f) return std::nullopt;
      return X.esq_of(*f);
    }
    case SqExpr::Tag::HId: {
      auto v = eval_v(e->v, X, h);
      if (!v) return std::nullopt;
      return X.isq_of(*v);
    }
    case SqExpr::Tag::ObjId: {
      auto it = h.obj.find(e->name);
      if (it == h.obj.end()) return std::nullopt;
      return X.esq_of(X.idh_of(it->second));
    }
    case SqExpr::Tag::HComp: {
      auto a = eval_sq(e->a, X, h), b = eval_sq(e->b, X, h);
      if (!a || !b) return std::nullopt;
      auto it = X.hcomp_sq.find({*a, *b});
      if (it == X.hcomp_sq.end()) return std::nullopt;
      return it->second;
    }
    case SqExpr::Tag::VComp: {
      auto a = eval_sq(e->a, X, h), b = eval_sq(e->b, X, h);
      if (!a || !b) return std::nullopt;
      auto it = X.vcomp_sq.find({*a, *b});
      if (it == X.vcomp_sq.end()) return std::nullopt;
      return it->second;
    }
    case SqExpr::Tag::HInv: {
      auto a = eval_sq(e->a, X, h);
      if (!a) return std::nullopt;
      return X.hinv_sq(*a);
    }
    case SqExpr::Tag::VInv: {
      auto a = eval_sq(e->a, X, h);
      if (!a) return std::nullopt;
      return X.vinv_sq(*a);
    }
  }
  return std::nullopt;
}

bool satisfies_presentation(const ShapePresentation& P, const FiniteDoubleCategory& X,
                            const ShapeHom& h) {
  for (const auto& g : P.sgens) {
    const auto* s = X.square(h.sq.at(g.name));
    if (!s) return false;
    auto t = eval_h(g.top, X, h), b = eval_h(g.bottom, X, h);
    auto l = eval_v(g.left, X, h), r = eval_v(g.right, X, h);
    if (!t || !b || !l || !r) return false;
    if (s->top != *t || s->bottom != *b || s->left != *l || s->right != *r) return false;
  }
  for (const auto& [n, bits] : P.invertible) {
    const std::string& s = h.sq.at(n);
    if ((bits & ShapePresentation::kHorizontal) && !X.hinv_sq(s)) return false;
    if ((bits & ShapePresentation::kVertical) && !X.vinv_sq(s)) return false;
  }
  for (const auto& r : P.hrels) {
    auto a = eval_h(r.lhs, X, h), b = eval_h(r.rhs, X, h);
    if (!a || !b || *a != *b) return false;
  }
  for (const auto& r : P.vrels) {
    auto a = eval_v(r.lhs, X, h), b = eval_v(r.rhs, X, h);
    if (!a || !b || *a != *b) return false;
  }
  for (const auto& r : P.sqrels) {
    auto a = eval_sq(r.lhs, X, h), b = eval_sq(r.rhs, X, h);
    if (!a || !b || *a != *b) return false;
  }
  return true;
}

std::vector<ShapeHom> solve_homs(const ShapePresentation& P, const FiniteDoubleCategory& X,
                                 const HomFilter& allow) {
  // Assignment order: objects, hgens, vgens, sgens. Relations are checked as
  // soon as all generators they mention are assigned.
  struct Slot {
    char sort;
    std::string gen;
  };
  std::vector<Slot> slots;
  for (const auto& o : P.objects) slots.push_back({'o', o});
  for (const auto& g : P.hgens) slots.push_back({'h', g.name});
  for (const auto& g : P.vgens) slots.push_back({'v', g.name});
  for (const auto& g : P.sgens) slots.push_back({'s', g.name});
  std::map<std::pair<char, std::string>, size_t> slot_of;
  for (size_t i = 0; i < slots.size(); ++i) slot_of[{slots[i].sort, slots[i].gen}] = i;

  struct Check {
    size_t ready_at;
    std::function<bool(const ShapeHom&)> run;
  };
  std::vector<Check> checks;
  auto last_slot = [&](const std::set<std::string>& ss, const std::set<std::string>& hs,
                       const std::set<std::string>& vs, const std::set<std::string>& os) {
    size_t m = 0;
    for (const auto& n : os) m = std::max(m, slot_of.at({'o', n}));
    for (const auto& n : hs) m = std::max(m, slot_of.at({'h', n}));
    for (const auto& n : vs) m = std::max(m, slot_of.at({'v', n}));
    for (const auto& n : ss) m = std::max(m, slot_of.at({'s', n}));
    return m;
  };
  for (const auto& r : P.hrels) {
    std::set<std::string> ss, hs, vs, os;
    collect_h(r.lhs, hs, os);
    collect_h(r.rhs, hs, os);
    checks.push_back({last_slot(ss, hs, vs, os), [&, r](const ShapeHom& h) {
                        auto a = eval_h(r.lhs, X, h), b = eval_h(r.rhs, X, h);
                        return a && b && *a == *b;
                      }});
  }
  for (const auto& r : P.vrels) {
    std::set<std::string> ss, hs, vs, os;
    collect_v(r.lhs, vs, os);
    collect_v(r.rhs, vs, os);
    checks.push_back({last_slot(ss, hs, vs, os), [&, r](const ShapeHom& h) {
                        auto a = eval_v(r.lhs, X, h), b = eval_v(r.rhs, X, h);
                        return a && b && *a == *b;
                      }});
  }
  for (const auto& r : P.sqrels) {
    std::set<std::string> ss, hs, vs, os;
    collect_sq(r.lhs, ss, hs, vs, os);
    collect_sq(r.rhs, ss, hs, vs, os);
    checks.push_back({last_slot(ss, hs, vs, os), [&, r](const ShapeHom& h) {
                        auto a = eval_sq(r.lhs, X, h), b = eval_sq(r.rhs, X, h);
                        return a && b && *a == *b;
                      }});
  }

  std::vector<ShapeHom> out;
  ShapeHom cur;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == slots.size()) {
      out.push_back(cur);
      return;
    }
    const Slot& sl = slots[i];
    std::vector<std::string> cands;
    if (sl.sort == 'o') {
      cands = X.objects;
    } else if (sl.sort == 'h') {
      const auto* g = P.hgen_of(sl.gen);
      cands = X.hmors_between(cur.obj.at(g->src), cur.obj.at(g->tgt));
    } else if (sl.sort == 'v') {
      const auto* g = P.vgen_of(sl.gen);
      cands = X.vmors_between(cur.obj.at(g->src), cur.obj.at(g->tgt));
    } else {
      const auto* g = P.sgen_of(sl.gen);
      auto t = eval_h(g->top, X, cur), b = eval_h(g->bottom, X, cur);
      auto l = eval_v(g->left, X, cur), r = eval_v(g->right, X, cur);
      if (!t || !b || !l || !r) return;  // boundary does not compose here
      cands = X.squares_with_boundary(*t, *b, *l, *r);
    }
    for (const auto& c : cands) {
      if (allow && !allow(sl.sort, sl.gen, c)) continue;
      if (sl.sort == 'o') cur.obj[sl.gen] = c;
      else if (sl.sort == 'h') cur.hm[sl.gen] = c;
      else if (sl.sort == 'v') cur.vm[sl.gen] = c;
      else cur.sq[sl.gen] = c;
      bool ok = true;
      if (sl.sort == 's') {
        auto it = P.invertible.find(sl.gen);
        if (it != P.invertible.end()) {
          if ((it->second & ShapePresentation::kHorizontal) && !X.hinv_sq(c)) ok = false;
          if (ok && (it->second & ShapePresentation::kVertical) && !X.vinv_sq(c)) ok = false;
        }
      }
      if (ok)
        for (const auto& ch : checks)
          if (ch.ready_at == i && !ch.run(cur)) {
            ok = false;
            break;
          }
      if (ok) go(i + 1);
      if (sl.sort == 'o') cur.obj.erase(sl.gen);
      else if (sl.sort == 'h') cur.hm.erase(sl.gen);
      else if (sl.sort == 'v') cur.vm.erase(sl.gen);
      else cur.sq.erase(sl.gen);
    }
  };
  go(0);
  return out;
}

ShapeHom precompose(const ShapeInclusion& i, const ShapeHom& hom_of_cod,
                    const FiniteDoubleCategory& X) {
  ShapeHom r;
  for (const auto& [g, og] : i.obj) r.obj[g] = hom_of_cod.obj.at(og);
  for (const auto& [g, e] : i.hmap) {
    auto v = eval_h(e, X, hom_of_cod);
    if (!v) throw FoldsError("InternalError", "inclusion " + i.name + ": hmor " + g);
    r.hm[g] = *v;
  }
  for (const auto& [g, e] : i.vmap) {
    auto v = eval_v(e, X, hom_of_cod);
    if (!v) throw FoldsError("InternalError", "inclusion " + i.name + ": vmor " + g);
    r.vm[g] = *v;
  }
  for (const auto& [g, e] : i.smap) {
    auto v = eval_sq(e, X, hom_of_cod);
    if (!v) throw FoldsError("InternalError", "inclusion " + i.name + ": square " + g);
    r.sq[g] = *v;
  }
  return r;
}

ShapeHom push_along(const ShapeHom& h, const DoubleFunctor& F) {
  ShapeHom r;
  for (const auto& [g, x] : h.obj) r.obj[g] = F.on_obj(x);
  for (const auto& [g, x] : h.hm) r.hm[g] = F.on_hmor(x);
  for (const auto& [g, x] : h.vm) r.vm[g] = F.on_vmor(x);
  for (const auto& [g, x] : h.sq) r.sq[g] = F.on_sq(x);
  return r;
}

namespace {

// A filter pinning the generators in the image of a generator-to-generator
// part of an inclusion, used both for the bottom map and the lift.
struct Pins {
  std::map<std::pair<char, std::string>, std::string> pin;
  bool general = false;  // inclusion has non-generator expressions
};

Pins pins_for(const ShapeInclusion& i, const ShapeHom& dom_hom) {
  Pins p;
  for (const auto& [g, og] : i.obj) {
    auto it = p.pin.find({'o', og});
    if (it != p.pin.end() && it->second != dom_hom.obj.at(g)) p.general = true;
    p.pin[{'o', og}] = dom_hom.obj.at(g);
  }
  auto handle = [&](char sort, const std::string& g, const auto& expr, const auto& dm) {
    std::string want = dm.at(g);
    bool plain = false;
    std::string target;
    if constexpr (std::is_same_v<std::decay_t<decltype(expr)>, HExprP>) {
      if (expr->tag == HExpr::Tag::Gen) {
        plain = true;
        target = expr->name;
      }
    } else if constexpr (std::is_same_v<std::decay_t<decltype(expr)>, VExprP>) {
      if (expr->tag == VExpr::Tag::Gen) {
        plain = true;
        target = expr->name;
      }
    } else {
      if (expr->tag == SqExpr::Tag::Gen) {
        plain = true;
        target = expr->name;
      }
    }
    if (!plain) {
      p.general = true;
      return;
    }
    auto it = p.pin.find({sort, target});
    if (it != p.pin.end() && it->second != want) {
      // Two dom generators map to the same cod generator with conflicting
      // requirements: unsatisfiable; represent by an impossible pin.
      p.pin[{sort, target}] = "\x01conflict";
    } else {
      p.pin[{sort, target}] = want;
    }
  };
  for (const auto& [g, e] : i.hmap) handle('h', g, e, dom_hom.hm);
  for (const auto& [g, e] : i.vmap) handle('v', g, e, dom_hom.vm);
  for (const auto& [g, e] : i.smap) handle('s', g, e, dom_hom.sq);
  return p;
}

}  // namespace

RlpResult has_rlp(const DoubleFunctor& F, const ShapeInclusion& i) {
  RlpResult res;
  const FiniteDoubleCategory& A = *F.src;
  const FiniteDoubleCategory& B = *F.tgt;
  auto tops = solve_homs(*i.dom, A);
  for (const auto& top : tops) {
    ShapeHom push = push_along(top, F);
    Pins bp = pins_for(i, push);
    HomFilter bottom_filter = [&](char sort, const std::string& g, const std::string& c) {
      auto it = bp.pin.find({sort, g});
      return it == bp.pin.end() || it->second == c;
    };
    auto bottoms = solve_homs(*i.cod, B, bottom_filter);
    for (const auto& bottom : bottoms) {
      if (bp.general && !(precompose(i, bottom, B) == push)) continue;
      ++res.problems;
      Pins lp = pins_for(i, top);
      HomFilter lift_filter = [&](char sort, const std::string& g, const std::string& c) {
        auto it = lp.pin.find({sort, g});
        if (it != lp.pin.end() && it->second != c) return false;
        // the lift must live over the bottom map
        if (sort == 'o') return F.on_obj(c) == bottom.obj.at(g);
        if (sort == 'h') return F.on_hmor(c) == bottom.hm.at(g);
        if (sort == 'v') return F.on_vmor(c) == bottom.vm.at(g);
        return F.on_sq(c) == bottom.sq.at(g);
      };
      bool found = false;
      for (const auto& lift : solve_homs(*i.cod, A, lift_filter)) {
        if (lp.general && !(precompose(i, lift, A) == top)) continue;
        found = true;
        break;
      }
      if (!found) {
        res.ok = false;
        res.counterexample = LiftingProblem{top, bottom};
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Builtin shapes and the generating sets

namespace {

using PP = std::shared_ptr<const ShapePresentation>;

PP make_shape(ShapePresentation p) {
  auto rep = validate_presentation(p);
  if (!rep.ok()) throw FoldsError("InternalError", "shape " + p.name + ": " + rep.summary());
  return std::make_shared<const ShapePresentation>(std::move(p));
}

const std::map<std::string, PP>& shape_registry() {
  static const std::map<std::string, PP> reg = [] {
    std::map<std::string, PP> m;
    auto put = [&](ShapePresentation p) {
      std::string name = p.name;
      m[name] = make_shape(std::move(p));
    };

    {
      ShapePresentation p;
      p.name = "empty";
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "pt";
      p.objects = {"x"};
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "2pt";
      p.objects = {"p0", "p1"};
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "h2";
      p.objects = {"x0", "x1"};
      p.hgens = {{"k", "x0", "x1"}};
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "v2";
      p.objects = {"x0", "x1"};
      p.vgens = {{"w", "x0", "x1"}};
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "h3";
      p.objects = {"x0", "x1", "x2"};
      p.hgens = {{"f", "x0", "x1"}, {"g", "x1", "x2"}, {"h", "x0", "x2"}};
      p.hrels = {{hcomp_e(hgen("f"), hgen("g")), hgen("h")}};
      put(p);
    }
    {
      ShapePresentation p;  // free square
      p.name = "sqfree";
      p.objects = {"a", "b", "c", "d"};
      p.hgens = {{"f", "a", "b"}, {"g", "c", "d"}};
      p.vgens = {{"u", "a", "c"}, {"v", "b", "d"}};
      p.sgens = {{"sg", hgen("f"), hgen("g"), vgen("u"), vgen("v")}};
      put(p);
    }
    {
      ShapePresentation p;  // boundary of the free square
      p.name = "sqboundary";
      p.objects = {"a", "b", "c", "d"};
      p.hgens = {{"f", "a", "b"}, {"g", "c", "d"}};
      p.vgens = {{"u", "a", "c"}, {"v", "b", "d"}};
      put(p);
    }
    {
      ShapePresentation p;  // two parallel squares
      p.name = "sqpair";
      p.objects = {"a", "b", "c", "d"};
      p.hgens = {{"f", "a", "b"}, {"g", "c", "d"}};
      p.vgens = {{"u", "a", "c"}, {"v", "b", "d"}};
      p.sgens = {{"sg", hgen("f"), hgen("g"), vgen("u"), vgen("v")},
                 {"sg2", hgen("f"), hgen("g"), vgen("u"), vgen("v")}};
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded walking loop with iso to identity
      p.name = "hA";
      p.objects = {"x"};
      p.hgens = {{"e", "x", "x"}};
      p.sgens = {{"eta", hgen("e"), hid("x"), vid("x"), vid("x")}};
      p.invertible["eta"] = ShapePresentation::kVertical;
      put(p);
    }
    {
      ShapePresentation p;
      p.name = "vA";
      p.objects = {"x"};
      p.vgens = {{"e", "x", "x"}};
      p.sgens = {{"eta", hid("x"), hid("x"), vgen("e"), vid("x")}};
      p.invertible["eta"] = ShapePresentation::kHorizontal;
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded triangle commuting up to iso
      p.name = "hT";
      p.objects = {"x", "y", "z"};
      p.hgens = {{"f", "x", "y"}, {"g", "y", "z"}, {"h", "x", "z"}};
      p.sgens = {{"tau", hcomp_e(hgen("f"), hgen("g")), hgen("h"), vid("x"), vid("z")}};
      p.invertible["tau"] = ShapePresentation::kVertical;
      put(p);
    }
    {
      ShapePresentation p;  // V-embedded triangle commuting up to iso
      p.name = "vT";
      p.objects = {"x", "y", "z"};
      p.vgens = {{"p", "x", "y"}, {"q", "y", "z"}, {"pq", "x", "z"}};
      p.sgens = {{"tau", hid("x"), hid("z"), vcomp_e(vgen("p"), vgen("q")), vgen("pq")}};
      p.invertible["tau"] = ShapePresentation::kHorizontal;
      put(p);
    }
    {
      ShapePresentation p;  // horizontal composite of squares, up to triangles
      p.name = "cH";
      p.objects = {"x", "y", "z", "x2", "y2", "z2"};
      p.hgens = {{"f1", "x", "y"},  {"g1", "y", "z"},  {"h1", "x", "z"},
                 {"f2", "x2", "y2"}, {"g2", "y2", "z2"}, {"h2", "x2", "z2"}};
      p.vgens = {{"u", "x", "x2"}, {"v", "y", "y2"}, {"w", "z", "z2"}};
      p.sgens = {{"phi1", hcomp_e(hgen("f1"), hgen("g1")), hgen("h1"), vid("x"), vid("z")},
                 {"al", hgen("f1"), hgen("f2"), vgen("u"), vgen("v")},
                 {"be", hgen("g1"), hgen("g2"), vgen("v"), vgen("w")},
                 {"phi2", hcomp_e(hgen("f2"), hgen("g2")), hgen("h2"), vid("x2"), vid("z2")}};
      p.invertible["phi1"] = ShapePresentation::kVertical;
      p.invertible["phi2"] = ShapePresentation::kVertical;
      put(p);
    }
    {
      ShapePresentation p;  // vertical composite of squares, up to triangles
      p.name = "cV";
      p.objects = {"x", "y", "z", "x2", "y2", "z2"};
      p.vgens = {{"u1", "x", "y"},  {"u2", "y", "z"},  {"w1", "x", "z"},
                 {"v1", "x2", "y2"}, {"v2", "y2", "z2"}, {"w2", "x2", "z2"}};
      p.hgens = {{"f", "x", "x2"}, {"g", "y", "y2"}, {"h", "z", "z2"}};
      p.sgens = {{"psi1", hid("x"), hid("z"), vcomp_e(vgen("u1"), vgen("u2")), vgen("w1")},
                 {"al", hgen("f"), hgen("g"), vgen("u1"), vgen("v1")},
                 {"be", hgen("g"), hgen("h"), vgen("u2"), vgen("v2")},
                 {"psi2", hid("x2"), hid("z2"), vcomp_e(vgen("v1"), vgen("v2")), vgen("w2")}};
      p.invertible["psi1"] = ShapePresentation::kHorizontal;
      p.invertible["psi2"] = ShapePresentation::kHorizontal;
      put(p);
    }
    {
      ShapePresentation p;  // free companion pair
      p.name = "sq2";
      p.objects = {"a", "b"};
      p.hgens = {{"fc", "a", "b"}};
      p.vgens = {{"u", "a", "b"}};
      p.sgens = {{"phi", hgen("fc"), hid("b"), vgen("u"), vid("b")},
                 {"psi", hid("a"), hgen("fc"), vid("a"), vgen("u")}};
      p.sqrels = {{hcmp_e(sgen("psi"), sgen("phi")), esq_e(hgen("fc"))},
                  {vcmp_e(sgen("psi"), sgen("phi")), isq_e(vgen("u"))}};
      put(p);
    }
    {
      ShapePresentation p;  // free conjoint pair
      p.name = "sq2hop";
      p.objects = {"a", "b"};
      p.hgens = {{"fc", "b", "a"}};
      p.vgens = {{"u", "a", "b"}};
      p.sgens = {{"eps", hgen("fc"), hid("b"), vid("b"), vgen("u")},
                 {"eta", hid("a"), hgen("fc"), vgen("u"), vid("a")}};
      p.sqrels = {{hcmp_e(sgen("eps"), sgen("eta")), esq_e(hgen("fc"))},
                  {vcmp_e(sgen("eta"), sgen("eps")), isq_e(vgen("u"))}};
      put(p);
    }
    {
      ShapePresentation p;  // V-embedded walking adjoint equivalence
      p.name = "vEadj";
      p.objects = {"a", "b"};
      p.vgens = {{"u", "a", "b"}, {"v", "b", "a"}};
      p.sgens = {{"eta", hid("a"), hid("a"), vid("a"), vcomp_e(vgen("u"), vgen("v"))},
                 {"eps", hid("b"), hid("b"), vcomp_e(vgen("v"), vgen("u")), vid("b")}};
      p.invertible["eta"] = ShapePresentation::kHorizontal;
      p.invertible["eps"] = ShapePresentation::kHorizontal;
      p.sqrels = {
          {hcmp_e(vcmp_e(sgen("eta"), isq_e(vgen("u"))), vcmp_e(isq_e(vgen("u")), sgen("eps"))),
           isq_e(vgen("u"))},
          {hcmp_e(vcmp_e(isq_e(vgen("v")), sgen("eta")), vcmp_e(sgen("eps"), isq_e(vgen("v")))),
           isq_e(vgen("v"))}};
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded free 2-cell
      p.name = "hSigma2";
      p.objects = {"a", "b"};
      p.hgens = {{"p", "a", "b"}, {"q", "a", "b"}};
      p.sgens = {{"al", hgen("p"), hgen("q"), vid("a"), vid("b")}};
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded free invertible 2-cell
      p.name = "hSigmaI";
      p.objects = {"a", "b"};
      p.hgens = {{"p", "a", "b"}, {"q", "a", "b"}};
      p.sgens = {{"al", hgen("p"), hgen("q"), vid("a"), vid("b")}};
      p.invertible["al"] = ShapePresentation::kVertical;
      put(p);
    }
    {
      ShapePresentation p;  // V-embedded free invertible 2-cell
      p.name = "vSigmaI";
      p.objects = {"a", "b"};
      p.vgens = {{"p", "a", "b"}, {"q", "a", "b"}};
      p.sgens = {{"al", hid("a"), hid("b"), vgen("p"), vgen("q")}};
      p.invertible["al"] = ShapePresentation::kHorizontal;
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded free composable pair of 2-cells
      p.name = "hSigma3";
      p.objects = {"a", "b"};
      p.hgens = {{"p", "a", "b"}, {"q", "a", "b"}, {"r", "a", "b"}};
      p.sgens = {{"al", hgen("p"), hgen("q"), vid("a"), vid("b")},
                 {"be", hgen("q"), hgen("r"), vid("a"), vid("b")}};
      put(p);
    }
    {
      ShapePresentation p;  // H-embedded horizontal composite of 2-cells, up to isos
      p.name = "hHcong";
      p.objects = {"x", "y", "z"};
      p.hgens = {{"f1", "x", "y"}, {"f2", "x", "y"}, {"g1", "y", "z"},
                 {"g2", "y", "z"}, {"h1", "x", "z"}, {"h2", "x", "z"}};
      p.sgens = {{"al", hgen("f1"), hgen("f2"), vid("x"), vid("y")},
                 {"be", hgen("g1"), hgen("g2"), vid("y"), vid("z")},
                 {"phi1", hcomp_e(hgen("f1"), hgen("g1")), hgen("h1"), vid("x"), vid("z")},
                 {"phi2", hcomp_e(hgen("f2"), hgen("g2")), hgen("h2"), vid("x"), vid("z")}};
      p.invertible["phi1"] = ShapePresentation::kVertical;
      p.invertible["phi2"] = ShapePresentation::kVertical;
      put(p);
    }
    return m;
  }();
  return reg;
}

ShapeInclusion make_incl(const std::string& name, PP dom, PP cod) {
  ShapeInclusion i;
  i.name = name;
  i.dom = dom;
  i.cod = cod;
  return i;
}

const std::map<std::string, ShapeInclusion>& incl_registry() {
  static const std::map<std::string, ShapeInclusion> reg = [] {
    std::map<std::string, ShapeInclusion> m;
    auto sh = [](const std::string& n) { return shape_registry().at(n); };
    {
      ShapeInclusion i = make_incl("i1", sh("empty"), sh("pt"));
      m["i1"] = i;
    }
    {
      ShapeInclusion i = make_incl("i2", sh("2pt"), sh("h2"));
      i.obj = {{"p0", "x0"}, {"p1", "x1"}};
      m["i2"] = i;
    }
    {
      ShapeInclusion i = make_incl("i3", sh("2pt"), sh("v2"));
      i.obj = {{"p0", "x0"}, {"p1", "x1"}};
      m["i3"] = i;
    }
    {
      ShapeInclusion i = make_incl("i4", sh("sqboundary"), sh("sqfree"));
      for (const auto& o : sh("sqboundary")->objects) i.obj[o] = o;
      i.hmap = {{"f", hgen("f")}, {"g", hgen("g")}};
      i.vmap = {{"u", vgen("u")}, {"v", vgen("v")}};
      m["i4"] = i;
    }
    {
      ShapeInclusion i = make_incl("i5", sh("sqpair"), sh("sqfree"));
      for (const auto& o : sh("sqpair")->objects) i.obj[o] = o;
      i.hmap = {{"f", hgen("f")}, {"g", hgen("g")}};
      i.vmap = {{"u", vgen("u")}, {"v", vgen("v")}};
      i.smap = {{"sg", sgen("sg")}, {"sg2", sgen("sg")}};
      m["i5"] = i;
    }
    {
      ShapeInclusion i = make_incl("j1", sh("pt"), sh("vEadj"));
      i.obj = {{"x", "a"}};
      m["j1"] = i;
    }
    {
      ShapeInclusion i = make_incl("j2", sh("v2"), sh("sq2"));
      i.obj = {{"x0", "a"}, {"x1", "b"}};
      i.vmap = {{"w", vgen("u")}};
      m["j2"] = i;
    }
    {
      ShapeInclusion i = make_incl("j3", sh("v2"), sh("sq2hop"));
      i.obj = {{"x0", "a"}, {"x1", "b"}};
      i.vmap = {{"w", vgen("u")}};
      m["j3"] = i;
    }
    {
      ShapeInclusion i = make_incl("j4", sh("h2"), sh("hSigmaI"));
      i.obj = {{"x0", "a"}, {"x1", "b"}};
      i.hmap = {{"k", hgen("p")}};
      m["j4"] = i;
    }
    {
      ShapeInclusion i = make_incl("j5", sh("v2"), sh("vSigmaI"));
      i.obj = {{"x0", "a"}, {"x1", "b"}};
      i.vmap = {{"w", vgen("p")}};
      m["j5"] = i;
    }
    return m;
  }();
  return reg;
}

}  // namespace

std::shared_ptr<const ShapePresentation> builtin_shape(const std::string& name) {
  auto it = shape_registry().find(name);
  if (it == shape_registry().end()) throw FoldsError("UnknownBuiltin", "shape " + name);
  return it->second;
}

ShapeInclusion builtin_inclusion(const std::string& name) {
  auto it = incl_registry().find(name);
  if (it == incl_registry().end()) throw FoldsError("UnknownBuiltin", "inclusion " + name);
  return it->second;
}

std::vector<ShapeInclusion> generating_cofibrations() {
  return {builtin_inclusion("i1"), builtin_inclusion("i2"), builtin_inclusion("i3"),
          builtin_inclusion("i4"), builtin_inclusion("i5")};
}

std::vector<ShapeInclusion> anodyne_generators() {
  return {builtin_inclusion("j1"), builtin_inclusion("j2"), builtin_inclusion("j3"),
          builtin_inclusion("j4"), builtin_inclusion("j5")};
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

struct ExprParser {
  const ShapePresentation& P;
  std::string s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ',' && s[pos] != ' ' &&
           s[pos] != '\t')
      ++pos;
    if (start == pos) throw FoldsError("SyntaxError", "expected name in expression: " + s);
    return s.substr(start, pos - start);
  }

  struct Any {
    HExprP h;
    VExprP v;
    SqExprP q;
    std::string obj;  // bare object name (only valid as a function argument)
  };

  Any parse() {
    std::string name = ident();
    ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      if (name == "idh" || name == "idv" || name == "osq") {
        std::string o = ident();
        if (!eat(')')) throw FoldsError("SyntaxError", "expected ) in " + s);
        Any r;
        if (name == "idh") r.h = hid(o);
        else if (name == "idv") r.v = vid(o);
        else r.q = osq_e(o);
        return r;
      }
      Any a = parse();
      if (name == "esq" || name == "isq" || name == "hinv" || name == "vinv") {
        if (!eat(')')) throw FoldsError("SyntaxError", "expected ) in " + s);
        Any r;
        if (name == "esq") {
          if (!a.h) throw FoldsError("SyntaxError", "esq needs a horizontal argument");
          r.q = esq_e(a.h);
        } else if (name == "isq") {
          if (!a.v) throw FoldsError("SyntaxError", "isq needs a vertical argument");
          r.q = isq_e(a.v);
        } else {
          if (!a.q) throw FoldsError("SyntaxError", name + " needs a square argument");
          r.q = name == "hinv" ? hinv_e(a.q) : vinv_e(a.q);
        }
        return r;
      }
      if (!eat(',')) throw FoldsError("SyntaxError", "expected , in " + s);
      Any b = parse();
      if (!eat(')')) throw FoldsError("SyntaxError", "expected ) in " + s);
      Any r;
      if (name == "cmp") {
        if (a.h && b.h) r.h = hcomp_e(a.h, b.h);
        else if (a.v && b.v) r.v = vcomp_e(a.v, b.v);
        else throw FoldsError("SyntaxError", "cmp arguments must both be horizontal or vertical");
      } else if (name == "hcmp") {
        if (!a.q || !b.q) throw FoldsError("SyntaxError", "hcmp needs square arguments");
        r.q = hcmp_e(a.q, b.q);
      } else if (name == "vcmp") {
        if (!a.q || !b.q) throw FoldsError("SyntaxError", "vcmp needs square arguments");
        r.q = vcmp_e(a.q, b.q);
      } else {
        throw FoldsError("SyntaxError", "unknown expression function " + name);
      }
      return r;
    }
    Any r;
    if (P.hgen_of(name)) r.h = hgen(name);
    else if (P.vgen_of(name)) r.v = vgen(name);
    else if (P.sgen_of(name)) r.q = sgen(name);
    else if (std::find(P.objects.begin(), P.objects.end(), name) != P.objects.end()) r.obj = name;
    else throw FoldsError("UnknownName", "generator " + name + " in expression");
    return r;
  }
};

ExprParser::Any parse_expr(const ShapePresentation& P, const std::string& text) {
  ExprParser p{P, text, 0};
  auto r = p.parse();
  p.ws();
  if (p.pos != text.size()) throw FoldsError("SyntaxError", "trailing input in expression " + text);
  return r;
}

std::string show_h(const HExprP& e);
std::string show_v(const VExprP& e);
std::string show_sq(const SqExprP& e);

std::string show_h(const HExprP& e) {
  switch (e->tag) {
    case HExpr::Tag::Gen: return e->name;
    case HExpr::Tag::Id: return "idh(" + e->name + ")";
    case HExpr::Tag::Comp: return "cmp(" + show_h(e->a) + "," + show_h(e->b) + ")";
  }
  return "?";
}
std::string show_v(const VExprP& e) {
  switch (e->tag) {
    case VExpr::Tag::Gen: return e->name;
    case VExpr::Tag::Id: return "idv(" + e->name + ")";
    case VExpr::Tag::Comp: return "cmp(" + show_v(e->a) + "," + show_v(e->b) + ")";
  }
  return "?";
}
std::string show_sq(const SqExprP& e) {
  switch (e->tag) {
    case SqExpr::Tag::Gen: return e->name;
    case SqExpr::Tag::VId: return "esq(" + show_h(e->h) + ")";
    case SqExpr::Tag::HId: return "isq(" + show_v(e->v) + ")";
    case SqExpr::Tag::ObjId: return "osq(" + e->name + ")";
    case SqExpr::Tag::HComp: return "hcmp(" + show_sq(e->a) + "," + show_sq(e->b) + ")";
    case SqExpr::Tag::VComp: return "vcmp(" + show_sq(e->a) + "," + show_sq(e->b) + ")";
    case SqExpr::Tag::HInv: return "hinv(" + show_sq(e->a) + ")";
    case SqExpr::Tag::VInv: return "vinv(" + show_sq(e->a) + ")";
  }
  return "?";
}

}  // namespace

ShapePresentation parse_presentation(const std::string& text) {
  ShapePresentation P;
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
      throw FoldsError("SyntaxError", "shape line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("shape ", 0) == 0) {
      P.name = strip(line.substr(6));
    } else if (line.rfind("objects:", 0) == 0) {
      for (auto& o : split_ws(line.substr(8))) P.objects.push_back(o);
    } else if (line.rfind("hmor:", 0) == 0) {
      std::string rest = strip(line.substr(5));
      auto colon = rest.find(':');
      auto arr = rest.find("->");
      if (colon == std::string::npos || arr == std::string::npos) fail("hmor: f: a -> b");
      P.hgens.push_back({strip(rest.substr(0, colon)),
                         strip(rest.substr(colon + 1, arr - colon - 1)), strip(rest.substr(arr + 2))});
    } else if (line.rfind("vmor:", 0) == 0) {
      std::string rest = strip(line.substr(5));
      auto colon = rest.find(':');
      auto arr = rest.find("=>");
      if (colon == std::string::npos || arr == std::string::npos) fail("vmor: u: a => b");
      P.vgens.push_back({strip(rest.substr(0, colon)),
                         strip(rest.substr(colon + 1, arr - colon - 1)), strip(rest.substr(arr + 2))});
    } else if (line.rfind("sq:", 0) == 0) {
      std::string rest = strip(line.substr(3));
      auto lb = rest.find('[');
      auto rb = rest.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos) fail("sq: s [top=.. bottom=.. left=.. right=..]");
      ShapePresentation::SGen g;
      g.name = strip(rest.substr(0, lb));
      for (auto& kv : split_ws(rest.substr(lb + 1, rb - lb - 1))) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("bad boundary item " + kv);
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        auto a = parse_expr(P, v);
        if (k == "top" || k == "bottom") {
          HExprP he = a.h ? a.h : nullptr;
          if (!he) fail("boundary " + k + " must be horizontal");
          (k == "top" ? g.top : g.bottom) = he;
        } else if (k == "left" || k == "right") {
          VExprP ve = a.v ? a.v : nullptr;
          if (!ve) fail("boundary " + k + " must be vertical");
          (k == "left" ? g.left : g.right) = ve;
        } else {
          fail("bad boundary key " + k);
        }
      }
      if (!g.top || !g.bottom || !g.left || !g.right) fail("incomplete boundary for " + g.name);
      P.sgens.push_back(g);
    } else if (line.rfind("invertible:", 0) == 0) {
      auto parts = split_ws(line.substr(11));
      if (parts.size() != 2) fail("invertible: s horizontal|vertical");
      int bit = parts[1] == "horizontal" ? ShapePresentation::kHorizontal
                : parts[1] == "vertical" ? ShapePresentation::kVertical
                                         : 0;
      if (!bit) fail("direction must be horizontal or vertical");
      P.invertible[parts[0]] |= bit;
    } else if (line.rfind("relation:", 0) == 0) {
      std::string rest = strip(line.substr(9));
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("relation: tree = tree");
      auto a = parse_expr(P, strip(rest.substr(0, eq)));
      auto b = parse_expr(P, strip(rest.substr(eq + 1)));
      if (a.h && b.h) P.hrels.push_back({a.h, b.h});
      else if (a.v && b.v) P.vrels.push_back({a.v, b.v});
      else if (a.q && b.q) P.sqrels.push_back({a.q, b.q});
      else fail("relation sides have different sorts");
    } else {
      fail("unrecognized line: " + line);
    }
  }
  return P;
}

ShapeInclusion parse_inclusion(
    const std::string& text,
    const std::function<std::shared_ptr<const ShapePresentation>(const std::string&)>& resolve) {
  ShapeInclusion i;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    line = strip(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw FoldsError("SyntaxError", "inclusion line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("inclusion ", 0) == 0) {
      i.name = strip(line.substr(10));
    } else if (line.rfind("dom:", 0) == 0) {
      i.dom = resolve(strip(line.substr(4)));
    } else if (line.rfind("cod:", 0) == 0) {
      i.cod = resolve(strip(line.substr(4)));
    } else {
      auto colon = line.find(':');
      auto arr = line.find("->");
      if (colon == std::string::npos || arr == std::string::npos) fail("expected 'sort: g -> expr'");
      if (!i.dom || !i.cod) fail("dom:/cod: must precede mappings");
      std::string sort = strip(line.substr(0, colon));
      std::string g = strip(line.substr(colon + 1, arr - colon - 1));
      std::string expr = strip(line.substr(arr + 2));
      if (sort == "obj") {
        i.obj[g] = expr;
      } else {
        auto a = parse_expr(*i.cod, expr);
        if (sort == "hmor") {
          if (!a.h) fail("hmor expects a horizontal expression");
          i.hmap[g] = a.h;
        } else if (sort == "vmor") {
          if (!a.v) fail("vmor expects a vertical expression");
          i.vmap[g] = a.v;
        } else if (sort == "sq") {
          if (!a.q) fail("sq expects a square expression");
          i.smap[g] = a.q;
        } else {
          fail("unknown sort " + sort);
        }
      }
    }
  }
  if (!i.dom || !i.cod) throw FoldsError("SyntaxError", "inclusion needs dom: and cod:");
  return i;
}

std::string print_presentation(const ShapePresentation& P) {
  std::ostringstream out;
  out << "shape " << (P.name.empty() ? "unnamed" : P.name) << "\n";
  out << "objects:";
  for (const auto& o : P.objects) out << " " << o;
  out << "\n";
  for (const auto& g : P.hgens) out << "hmor: " << g.name << ": " << g.src << " -> " << g.tgt << "\n";
  for (const auto& g : P.vgens) out << "vmor: " << g.name << ": " << g.src << " => " << g.tgt << "\n";
  for (const auto& g : P.sgens)
    out << "sq: " << g.name << " [top=" << show_h(g.top) << " bottom=" << show_h(g.bottom)
        << " left=" << show_v(g.left) << " right=" << show_v(g.right) << "]\n";
  for (const auto& [n, bits] : P.invertible) {
    if (bits & ShapePresentation::kHorizontal) out << "invertible: " << n << " horizontal\n";
    if (bits & ShapePresentation::kVertical) out << "invertible: " << n << " vertical\n";
  }
  for (const auto& r : P.hrels) out << "relation: " << show_h(r.lhs) << " = " << show_h(r.rhs) << "\n";
  for (const auto& r : P.vrels) out << "relation: " << show_v(r.lhs) << " = " << show_v(r.rhs) << "\n";
  for (const auto& r : P.sqrels)
    out << "relation: " << show_sq(r.lhs) << " = " << show_sq(r.rhs) << "\n";
  return out.str();
}

}  // namespace folds
