#include "folds/dblcat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace folds {

namespace {
std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return {a, b};
}
}  // namespace

const FiniteDoubleCategory::HMor* FiniteDoubleCategory::hmor(const std::string& n) const {
  for (const auto& h : hmors)
    if (h.name == n) return &h;
  return nullptr;
}
const FiniteDoubleCategory::VMor* FiniteDoubleCategory::vmor(const std::string& n) const {
  for (const auto& v : vmors)
    if (v.name == n) return &v;
  return nullptr;
}
const FiniteDoubleCategory::Sq* FiniteDoubleCategory::square(const std::string& n) const {
  for (const auto& s : squares)
    if (s.name == n) return &s;
  return nullptr;
}
bool FiniteDoubleCategory::has_object(const std::string& n) const {
  return std::find(objects.begin(), objects.end(), n) != objects.end();
}

std::string FiniteDoubleCategory::hcomp(const std::string& f, const std::string& g) const {
  auto it = hcomp_h.find(key(f, g));
  if (it == hcomp_h.end()) throw FoldsError("NonComposablePair", "hcomp " + f + " ; " + g);
  return it->second;
}
std::string FiniteDoubleCategory::vcomp(const std::string& u, const std::string& v) const {
  auto it = vcomp_v.find(key(u, v));
  if (it == vcomp_v.end()) throw FoldsError("NonComposablePair", "vcomp " + u + " ; " + v);
  return it->second;
}
std::string FiniteDoubleCategory::hcmp_sq(const std::string& a, const std::string& b) const {
  auto it = hcomp_sq.find(key(a, b));
  if (it == hcomp_sq.end()) throw FoldsError("NonComposablePair", "hcmp_sq " + a + " ; " + b);
  return it->second;
}
std::string FiniteDoubleCategory::vcmp_sq(const std::string& a, const std::string& b) const {
  auto it = vcomp_sq.find(key(a, b));
  if (it == vcomp_sq.end()) throw FoldsError("NonComposablePair", "vcmp_sq " + a + " ; " + b);
  return it->second;
}

std::string FiniteDoubleCategory::idh_of(const std::string& obj) const {
  auto it = idh.find(obj);
  if (it == idh.end()) throw FoldsError("MissingIdentity", "idh " + obj);
  return it->second;
}
std::string FiniteDoubleCategory::idv_of(const std::string& obj) const {
  auto it = idv.find(obj);
  if (it == idv.end()) throw FoldsError("MissingIdentity", "idv " + obj);
  return it->second;
}
std::string FiniteDoubleCategory::esq_of(const std::string& hm) const {
  auto it = esq.find(hm);
  if (it == esq.end()) throw FoldsError("MissingIdentity", "esq " + hm);
  return it->second;
}
std::string FiniteDoubleCategory::isq_of(const std::string& vm) const {
  auto it = isq.find(vm);
  if (it == isq.end()) throw FoldsError("MissingIdentity", "isq " + vm);
  return it->second;
}

std::vector<std::string> FiniteDoubleCategory::hmors_between(const std::string& a,
                                                             const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& h : hmors)
    if (h.src == a && h.tgt == b) out.push_back(h.name);
  return out;
}
std::vector<std::string> FiniteDoubleCategory::vmors_between(const std::string& a,
                                                             const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& v : vmors)
    if (v.src == a && v.tgt == b) out.push_back(v.name);
  return out;
}
std::vector<std::string> FiniteDoubleCategory::squares_with_boundary(
    const std::string& top, const std::string& bottom, const std::string& left,
    const std::string& right) const {
  std::vector<std::string> out;
  for (const auto& s : squares)
    if (s.top == top && s.bottom == bottom && s.left == left && s.right == right)
      out.push_back(s.name);
  return out;
}

std::optional<std::string> FiniteDoubleCategory::hinv_sq(const std::string& sname) const {
  auto it = hinv_cache_.find(sname);
  if (it != hinv_cache_.end()) return it->second;
  std::optional<std::string> res;
  const Sq* s = square(sname);
  if (s) {
    for (const auto& g : squares) {
      if (g.left != s->right || g.right != s->left) continue;
      auto ab = hcomp_sq.find(key(sname, g.name));
      auto ba = hcomp_sq.find(key(g.name, sname));
      if (ab == hcomp_sq.end() || ba == hcomp_sq.end()) continue;
      if (ab->second == isq_of(s->left) && ba->second == isq_of(s->right)) {
        res = g.name;
        break;
      }
    }
  }
  hinv_cache_[sname] = res;
  return res;
}

std::optional<std::string> FiniteDoubleCategory::vinv_sq(const std::string& sname) const {
  auto it = vinv_cache_.find(sname);
  if (it != vinv_cache_.end()) return it->second;
  std::optional<std::string> res;
  const Sq* s = square(sname);
  if (s) {
    for (const auto& g : squares) {
      if (g.top != s->bottom || g.bottom != s->top) continue;
      auto ab = vcomp_sq.find(key(sname, g.name));
      auto ba = vcomp_sq.find(key(g.name, sname));
      if (ab == vcomp_sq.end() || ba == vcomp_sq.end()) continue;
      if (ab->second == esq_of(s->top) && ba->second == esq_of(s->bottom)) {
        res = g.name;
        break;
      }
    }
  }
  vinv_cache_[sname] = res;
  return res;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_double_category(const FiniteDoubleCategory& A) {
  ValidationReport rep;
  std::set<std::string> objset(A.objects.begin(), A.objects.end());
  if (objset.size() != A.objects.size()) rep.add("DuplicateName", "objects");
  auto check_named = [&](auto const& cells, const char* what) {
    std::set<std::string> names;
    for (const auto& c : cells)
      if (!names.insert(c.name).second) rep.add("DuplicateName", std::string(what) + " " + c.name);
  };
  check_named(A.hmors, "hmor");
  check_named(A.vmors, "vmor");
  check_named(A.squares, "square");
  for (const auto& h : A.hmors)
    if (!objset.count(h.src) || !objset.count(h.tgt))
      rep.add("UnknownObject", "hmor " + h.name);
  for (const auto& v : A.vmors)
    if (!objset.count(v.src) || !objset.count(v.tgt))
      rep.add("UnknownObject", "vmor " + v.name);
  for (const auto& s : A.squares) {
    const auto *t = A.hmor(s.top), *b = A.hmor(s.bottom);
    const auto *l = A.vmor(s.left), *r = A.vmor(s.right);
    if (!t || !b || !l || !r) {
      rep.add("UnknownBoundary", "square " + s.name);
      continue;
    }
    if (l->src != t->src || r->src != t->tgt || l->tgt != b->src || r->tgt != b->tgt)
      rep.add("BoundaryMismatch", "square " + s.name);
  }
  if (!rep.ok()) return rep;

  // Identity designations.
  for (const auto& o : A.objects) {
    auto ih = A.idh.find(o);
    if (ih == A.idh.end() || !A.hmor(ih->second) || A.hmor(ih->second)->src != o ||
        A.hmor(ih->second)->tgt != o)
      rep.add("MissingIdentity", "idh " + o);
    auto iv = A.idv.find(o);
    if (iv == A.idv.end() || !A.vmor(iv->second) || A.vmor(iv->second)->src != o ||
        A.vmor(iv->second)->tgt != o)
      rep.add("MissingIdentity", "idv " + o);
  }
  if (!rep.ok()) return rep;
  for (const auto& h : A.hmors) {
    auto e = A.esq.find(h.name);
    const FiniteDoubleCategory::Sq* s = (e == A.esq.end()) ? nullptr : A.square(e->second);
    if (!s || s->top != h.name || s->bottom != h.name || s->left != A.idv_of(h.src) ||
        s->right != A.idv_of(h.tgt))
      rep.add("MissingIdentity", "esq " + h.name);
  }
  for (const auto& v : A.vmors) {
    auto e = A.isq.find(v.name);
    const FiniteDoubleCategory::Sq* s = (e == A.isq.end()) ? nullptr : A.square(e->second);
    if (!s || s->left != v.name || s->right != v.name || s->top != A.idh_of(v.src) ||
        s->bottom != A.idh_of(v.tgt))
      rep.add("MissingIdentity", "isq " + v.name);
  }
  if (!rep.ok()) return rep;
  for (const auto& o : A.objects)
    if (A.esq_of(A.idh_of(o)) != A.isq_of(A.idv_of(o)))
      rep.add("LawViolation", "object square at " + o + ": e_{id} != id_{e}");

  // Table totality, typing, closure.
  auto check_mor_table = [&](const std::map<std::pair<std::string, std::string>, std::string>& tab,
                             auto cell_of, const char* what) {
    using CellT = decltype(cell_of(std::string()));
    for (const auto& [k, val] : tab) {
      CellT a = cell_of(k.first), b = cell_of(k.second), c = cell_of(val);
      if (!a || !b || !c) {
        rep.add("UnknownName", std::string(what) + " entry");
        continue;
      }
      if (a->tgt != b->src)
        rep.add("NonComposablePair", std::string(what) + " " + k.first + ";" + k.second);
      else if (c->src != a->src || c->tgt != b->tgt)
        rep.add("BoundaryMismatch", std::string(what) + " " + k.first + ";" + k.second + " = " + val);
    }
  };
  check_mor_table(A.hcomp_h, [&](const std::string& n) { return A.hmor(n); }, "hcomp");
  check_mor_table(A.vcomp_v, [&](const std::string& n) { return A.vmor(n); }, "vcomp");
  for (const auto& f : A.hmors)
    for (const auto& g : A.hmors)
      if (f.tgt == g.src && !A.hcomp_h.count(key(f.name, g.name)))
        rep.add("NotTotal", "hcomp " + f.name + ";" + g.name);
  for (const auto& u : A.vmors)
    for (const auto& v : A.vmors)
      if (u.tgt == v.src && !A.vcomp_v.count(key(u.name, v.name)))
        rep.add("NotTotal", "vcomp " + u.name + ";" + v.name);
  if (!rep.ok()) return rep;

  for (const auto& [k, val] : A.hcomp_sq) {
    const auto *a = A.square(k.first), *b = A.square(k.second), *c = A.square(val);
    if (!a || !b || !c) {
      rep.add("UnknownName", "hcompsq entry");
      continue;
    }
    if (a->right != b->left)
      rep.add("NonComposablePair", "hcompsq " + k.first + ";" + k.second);
    else if (c->top != A.hcomp(a->top, b->top) || c->bottom != A.hcomp(a->bottom, b->bottom) ||
             c->left != a->left || c->right != b->right)
      rep.add("BoundaryMismatch", "hcompsq " + k.first + ";" + k.second + " = " + val);
  }
  for (const auto& [k, val] : A.vcomp_sq) {
    const auto *a = A.square(k.first), *b = A.square(k.second), *c = A.square(val);
    if (!a || !b || !c) {
      rep.add("UnknownName", "vcompsq entry");
      continue;
    }
    if (a->bottom != b->top)
      rep.add("NonComposablePair", "vcompsq " + k.first + ";" + k.second);
    else if (c->top != a->top || c->bottom != b->bottom || c->left != A.vcomp(a->left, b->left) ||
             c->right != A.vcomp(a->right, b->right))
      rep.add("BoundaryMismatch", "vcompsq " + k.first + ";" + k.second + " = " + val);
  }
  for (const auto& a : A.squares)
    for (const auto& b : A.squares) {
      if (a.right == b.left && !A.hcomp_sq.count(key(a.name, b.name)))
        rep.add("NotTotal", "hcompsq " + a.name + ";" + b.name);
      if (a.bottom == b.top && !A.vcomp_sq.count(key(a.name, b.name)))
        rep.add("NotTotal", "vcompsq " + a.name + ";" + b.name);
    }
  if (!rep.ok()) return rep;

  // Unit laws.
  for (const auto& f : A.hmors) {
    if (A.hcomp(A.idh_of(f.src), f.name) != f.name || A.hcomp(f.name, A.idh_of(f.tgt)) != f.name)
      rep.add("LawViolation", "hcomp unit at " + f.name);
  }
  for (const auto& u : A.vmors) {
    if (A.vcomp(A.idv_of(u.src), u.name) != u.name || A.vcomp(u.name, A.idv_of(u.tgt)) != u.name)
      rep.add("LawViolation", "vcomp unit at " + u.name);
  }
  for (const auto& s : A.squares) {
    if (A.hcmp_sq(A.isq_of(s.left), s.name) != s.name ||
        A.hcmp_sq(s.name, A.isq_of(s.right)) != s.name)
      rep.add("LawViolation", "hcompsq unit at " + s.name);
    if (A.vcmp_sq(A.esq_of(s.top), s.name) != s.name ||
        A.vcmp_sq(s.name, A.esq_of(s.bottom)) != s.name)
      rep.add("LawViolation", "vcompsq unit at " + s.name);
  }
  // Identity functoriality.
  for (const auto& f : A.hmors)
    for (const auto& g : A.hmors)
      if (f.tgt == g.src &&
          A.esq_of(A.hcomp(f.name, g.name)) != A.hcmp_sq(A.esq_of(f.name), A.esq_of(g.name)))
        rep.add("LawViolation", "esq not functorial at " + f.name + ";" + g.name);
  for (const auto& u : A.vmors)
    for (const auto& v : A.vmors)
      if (u.tgt == v.src &&
          A.isq_of(A.vcomp(u.name, v.name)) != A.vcmp_sq(A.isq_of(u.name), A.isq_of(v.name)))
        rep.add("LawViolation", "isq not functorial at " + u.name + ";" + v.name);
  if (!rep.ok()) return rep;

  // Associativity.
  for (const auto& f : A.hmors)
    for (const auto& g : A.hmors) {
      if (f.tgt != g.src) continue;
      for (const auto& h : A.hmors)
        if (g.tgt == h.src &&
            A.hcomp(A.hcomp(f.name, g.name), h.name) != A.hcomp(f.name, A.hcomp(g.name, h.name)))
          rep.add("LawViolation", "hcomp assoc " + f.name + ";" + g.name + ";" + h.name);
    }
  for (const auto& u : A.vmors)
    for (const auto& v : A.vmors) {
      if (u.tgt != v.src) continue;
      for (const auto& w : A.vmors)
        if (v.tgt == w.src &&
            A.vcomp(A.vcomp(u.name, v.name), w.name) != A.vcomp(u.name, A.vcomp(v.name, w.name)))
          rep.add("LawViolation", "vcomp assoc " + u.name + ";" + v.name + ";" + w.name);
    }
  std::map<std::string, std::vector<const FiniteDoubleCategory::Sq*>> by_left, by_top;
  std::map<std::pair<std::string, std::string>, std::vector<const FiniteDoubleCategory::Sq*>>
      by_top_left;
  for (const auto& s : A.squares) {
    by_left[s.left].push_back(&s);
    by_top[s.top].push_back(&s);
    by_top_left[key(s.top, s.left)].push_back(&s);
  }
  for (const auto& a : A.squares) {
    for (const auto* b : by_left[a.right])
      for (const auto* c : by_left[b->right])
        if (A.hcmp_sq(A.hcmp_sq(a.name, b->name), c->name) !=
            A.hcmp_sq(a.name, A.hcmp_sq(b->name, c->name)))
          rep.add("LawViolation", "hcompsq assoc " + a.name + ";" + b->name + ";" + c->name);
    for (const auto* b : by_top[a.bottom])
      for (const auto* c : by_top[b->bottom])
        if (A.vcmp_sq(A.vcmp_sq(a.name, b->name), c->name) !=
            A.vcmp_sq(a.name, A.vcmp_sq(b->name, c->name)))
          rep.add("LawViolation", "vcompsq assoc " + a.name + ";" + b->name + ";" + c->name);
  }
  if (!rep.ok()) return rep;

  // Interchange on all 2x2 grids.
  for (const auto& a : A.squares)
    for (const auto* b : by_left[a.right])
      for (const auto* c : by_top[a.bottom])
        for (const auto* d : by_top_left[key(b->bottom, c->right)]) {
          std::string lhs = A.vcmp_sq(A.hcmp_sq(a.name, b->name), A.hcmp_sq(c->name, d->name));
          std::string rhs = A.hcmp_sq(A.vcmp_sq(a.name, c->name), A.vcmp_sq(b->name, d->name));
          if (lhs != rhs) {
            rep.add("LawViolation", "interchange " + a.name + "," + b->name + "/" + c->name + "," +
                                        d->name);
            return rep;
          }
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Double functors

std::string DoubleFunctor::on_obj(const std::string& x) const {
  auto it = obj.find(x);
  if (it == obj.end()) throw FoldsError("NotTotal", "functor on object " + x);
  return it->second;
}
std::string DoubleFunctor::on_hmor(const std::string& x) const {
  auto it = hmor.find(x);
  if (it == hmor.end()) throw FoldsError("NotTotal", "functor on hmor " + x);
  return it->second;
}
std::string DoubleFunctor::on_vmor(const std::string& x) const {
  auto it = vmor.find(x);
  if (it == vmor.end()) throw FoldsError("NotTotal", "functor on vmor " + x);
  return it->second;
}
std::string DoubleFunctor::on_sq(const std::string& x) const {
  auto it = sq.find(x);
  if (it == sq.end()) throw FoldsError("NotTotal", "functor on square " + x);
  return it->second;
}

ValidationReport validate_double_functor(const DoubleFunctor& F) {
  ValidationReport rep;
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (const auto& o : A.objects) {
    auto it = F.obj.find(o);
    if (it == F.obj.end())
      rep.add("NotTotal", "object " + o);
    else if (!B.has_object(it->second))
      rep.add("UnknownName", "object image " + it->second);
  }
  if (!rep.ok()) return rep;
  for (const auto& h : A.hmors) {
    auto it = F.hmor.find(h.name);
    const FiniteDoubleCategory::HMor* img = it == F.hmor.end() ? nullptr : B.hmor(it->second);
    if (!img)
      rep.add("NotTotal", "hmor " + h.name);
    else if (img->src != F.on_obj(h.src) || img->tgt != F.on_obj(h.tgt))
      rep.add("BoundaryMismatch", "hmor " + h.name);
  }
  for (const auto& v : A.vmors) {
    auto it = F.vmor.find(v.name);
    const FiniteDoubleCategory::VMor* img = it == F.vmor.end() ? nullptr : B.vmor(it->second);
    if (!img)
      rep.add("NotTotal", "vmor " + v.name);
    else if (img->src != F.on_obj(v.src) || img->tgt != F.on_obj(v.tgt))
      rep.add("BoundaryMismatch", "vmor " + v.name);
  }
  for (const auto& s : A.squares) {
    auto it = F.sq.find(s.name);
    const FiniteDoubleCategory::Sq* img = it == F.sq.end() ? nullptr : B.square(it->second);
    if (!img)
      rep.add("NotTotal", "square " + s.name);
    else if (img->top != F.on_hmor(s.top) || img->bottom != F.on_hmor(s.bottom) ||
             img->left != F.on_vmor(s.left) || img->right != F.on_vmor(s.right))
      rep.add("BoundaryMismatch", "square " + s.name);
  }
  if (!rep.ok()) return rep;
  for (const auto& o : A.objects) {
    if (F.on_hmor(A.idh_of(o)) != B.idh_of(F.on_obj(o)))
      rep.add("LawViolation", "idh not preserved at " + o);
    if (F.on_vmor(A.idv_of(o)) != B.idv_of(F.on_obj(o)))
      rep.add("LawViolation", "idv not preserved at " + o);
  }
  for (const auto& h : A.hmors)
    if (F.on_sq(A.esq_of(h.name)) != B.esq_of(F.on_hmor(h.name)))
      rep.add("LawViolation", "esq not preserved at " + h.name);
  for (const auto& v : A.vmors)
    if (F.on_sq(A.isq_of(v.name)) != B.isq_of(F.on_vmor(v.name)))
      rep.add("LawViolation", "isq not preserved at " + v.name);
  for (const auto& [k, val] : A.hcomp_h)
    if (F.on_hmor(val) != B.hcomp(F.on_hmor(k.first), F.on_hmor(k.second)))
      rep.add("LawViolation", "hcomp not preserved " + k.first + ";" + k.second);
  for (const auto& [k, val] : A.vcomp_v)
    if (F.on_vmor(val) != B.vcomp(F.on_vmor(k.first), F.on_vmor(k.second)))
      rep.add("LawViolation", "vcomp not preserved " + k.first + ";" + k.second);
  for (const auto& [k, val] : A.hcomp_sq)
    if (F.on_sq(val) != B.hcmp_sq(F.on_sq(k.first), F.on_sq(k.second)))
      rep.add("LawViolation", "hcompsq not preserved " + k.first + ";" + k.second);
  for (const auto& [k, val] : A.vcomp_sq)
    if (F.on_sq(val) != B.vcmp_sq(F.on_sq(k.first), F.on_sq(k.second)))
      rep.add("LawViolation", "vcompsq not preserved " + k.first + ";" + k.second);
  return rep;
}

DoubleFunctor identity_functor(std::shared_ptr<const FiniteDoubleCategory> A) {
  DoubleFunctor F;
  F.name = "id_" + A->name;
  F.src = A;
  F.tgt = A;
  for (const auto& o : A->objects) F.obj[o] = o;
  for (const auto& h : A->hmors) F.hmor[h.name] = h.name;
  for (const auto& v : A->vmors) F.vmor[v.name] = v.name;
  for (const auto& s : A->squares) F.sq[s.name] = s.name;
  return F;
}

DoubleFunctor compose_functors(const DoubleFunctor& first, const DoubleFunctor& second) {
  DoubleFunctor G;
  G.name = second.name + "." + first.name;
  G.src = first.src;
  G.tgt = second.tgt;
  for (const auto& [x, y] : first.obj) G.obj[x] = second.on_obj(y);
  for (const auto& [x, y] : first.hmor) G.hmor[x] = second.on_hmor(y);
  for (const auto& [x, y] : first.vmor) G.vmor[x] = second.on_vmor(y);
  for (const auto& [x, y] : first.sq) G.sq[x] = second.on_sq(y);
  return G;
}

// ---------------------------------------------------------------------------
// 2-categories

const Finite2Category::One* Finite2Category::one(const std::string& n) const {
  for (const auto& o : ones)
    if (o.name == n) return &o;
  return nullptr;
}
const Finite2Category::Two* Finite2Category::two(const std::string& n) const {
  for (const auto& t : twos)
    if (t.name == n) return &t;
  return nullptr;
}
std::string Finite2Category::c1(const std::string& f, const std::string& g) const {
  auto it = comp1.find(key(f, g));
  if (it == comp1.end()) throw FoldsError("NonComposablePair", "comp1 " + f + ";" + g);
  return it->second;
}
std::string Finite2Category::v2(const std::string& a, const std::string& b) const {
  auto it = vcomp2.find(key(a, b));
  if (it == vcomp2.end()) throw FoldsError("NonComposablePair", "vcomp2 " + a + ";" + b);
  return it->second;
}
std::string Finite2Category::h2(const std::string& a, const std::string& b) const {
  auto it = hcomp2.find(key(a, b));
  if (it == hcomp2.end()) throw FoldsError("NonComposablePair", "hcomp2 " + a + ";" + b);
  return it->second;
}

ValidationReport validate_2category(const Finite2Category& A) {
  ValidationReport rep;
  auto obj_of_two_src = [&](const Finite2Category::Two& t) { return A.one(t.src); };
  for (const auto& o : A.ones)
    if (std::find(A.objects.begin(), A.objects.end(), o.src) == A.objects.end() ||
        std::find(A.objects.begin(), A.objects.end(), o.tgt) == A.objects.end())
      rep.add("UnknownObject", "1-cell " + o.name);
  for (const auto& t : A.twos) {
    const auto *s = A.one(t.src), *g = A.one(t.tgt);
    if (!s || !g)
      rep.add("UnknownName", "2-cell " + t.name);
    else if (s->src != g->src || s->tgt != g->tgt)
      rep.add("BoundaryMismatch", "2-cell " + t.name + " not globular");
  }
  if (!rep.ok()) return rep;
  // 1-cell category laws.
  for (const auto& f : A.ones)
    for (const auto& g : A.ones)
      if (f.tgt == g.src && !A.comp1.count(key(f.name, g.name)))
        rep.add("NotTotal", "comp1 " + f.name + ";" + g.name);
  if (!rep.ok()) return rep;
  for (const auto& o : A.objects) {
    auto it = A.id1.find(o);
    if (it == A.id1.end() || !A.one(it->second)) rep.add("MissingIdentity", "id1 " + o);
  }
  if (!rep.ok()) return rep;
  for (const auto& f : A.ones) {
    if (A.c1(A.id1.at(f.src), f.name) != f.name || A.c1(f.name, A.id1.at(f.tgt)) != f.name)
      rep.add("LawViolation", "comp1 unit " + f.name);
    auto it = A.id2.find(f.name);
    if (it == A.id2.end() || !A.two(it->second)) rep.add("MissingIdentity", "id2 " + f.name);
  }
  if (!rep.ok()) return rep;
  for (const auto& f : A.ones)
    for (const auto& g : A.ones) {
      if (f.tgt != g.src) continue;
      for (const auto& h : A.ones)
        if (g.tgt == h.src &&
            A.c1(A.c1(f.name, g.name), h.name) != A.c1(f.name, A.c1(g.name, h.name)))
          rep.add("LawViolation", "comp1 assoc");
    }
  // 2-cell structure.
  for (const auto& a : A.twos)
    for (const auto& b : A.twos) {
      if (a.tgt == b.src && !A.vcomp2.count(key(a.name, b.name)))
        rep.add("NotTotal", "vcomp2 " + a.name + ";" + b.name);
      const auto *fa = A.one(a.src), *fb = obj_of_two_src(b);
      if (fa && fb && fa->tgt == fb->src && !A.hcomp2.count(key(a.name, b.name)))
        rep.add("NotTotal", "hcomp2 " + a.name + ";" + b.name);
    }
  if (!rep.ok()) return rep;
  for (const auto& [k, val] : A.vcomp2) {
    const auto *a = A.two(k.first), *b = A.two(k.second), *c = A.two(val);
    if (!a || !b || !c || a->tgt != b->src || c->src != a->src || c->tgt != b->tgt)
      rep.add("BoundaryMismatch", "vcomp2 " + k.first + ";" + k.second);
  }
  for (const auto& [k, val] : A.hcomp2) {
    const auto *a = A.two(k.first), *b = A.two(k.second), *c = A.two(val);
    if (!a || !b || !c) {
      rep.add("UnknownName", "hcomp2");
      continue;
    }
    if (c->src != A.c1(a->src, b->src) || c->tgt != A.c1(a->tgt, b->tgt))
      rep.add("BoundaryMismatch", "hcomp2 " + k.first + ";" + k.second);
  }
  if (!rep.ok()) return rep;
  for (const auto& a : A.twos) {
    if (A.v2(A.id2.at(a.src), a.name) != a.name || A.v2(a.name, A.id2.at(a.tgt)) != a.name)
      rep.add("LawViolation", "vcomp2 unit " + a.name);
  }
  for (const auto& f : A.ones)
    for (const auto& g : A.ones)
      if (f.tgt == g.src &&
          A.h2(A.id2.at(f.name), A.id2.at(g.name)) != A.id2.at(A.c1(f.name, g.name)))
        rep.add("LawViolation", "hcomp2 of identities at " + f.name + ";" + g.name);
  for (const auto& a : A.twos)
    for (const auto& b : A.twos) {
      if (a.tgt == b.src)
        for (const auto& c : A.twos)
          if (b.tgt == c.src &&
              A.v2(A.v2(a.name, b.name), c.name) != A.v2(a.name, A.v2(b.name, c.name)))
            rep.add("LawViolation", "vcomp2 assoc");
      const auto* fa = A.one(a.src);
      const auto* fb = A.one(b.src);
      if (fa->tgt == fb->src)
        for (const auto& c : A.twos) {
          const auto* fc = A.one(c.src);
          if (fb->tgt == fc->src &&
              A.h2(A.h2(a.name, b.name), c.name) != A.h2(a.name, A.h2(b.name, c.name)))
            rep.add("LawViolation", "hcomp2 assoc");
        }
    }
  // Interchange.
  for (const auto& a : A.twos)
    for (const auto& a2 : A.twos) {
      if (a.tgt != a2.src) continue;
      for (const auto& b : A.twos) {
        if (A.one(a.src)->tgt != A.one(b.src)->src) continue;
        for (const auto& b2 : A.twos) {
          if (b.tgt != b2.src) continue;
          if (A.h2(A.v2(a.name, a2.name), A.v2(b.name, b2.name)) !=
              A.v2(A.h2(a.name, b.name), A.h2(a2.name, b2.name)))
            rep.add("LawViolation", "2cat interchange");
        }
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

FiniteDoubleCategory sq_of_2cat(const Finite2Category& A) {
  FiniteDoubleCategory D;
  D.name = "Sq(" + A.name + ")";
  D.objects = A.objects;
  for (const auto& o : A.ones) {
    D.hmors.push_back({o.name, o.src, o.tgt});
    D.vmors.push_back({o.name, o.src, o.tgt});
  }
  for (const auto& o : A.objects) {
    D.idh[o] = A.id1.at(o);
    D.idv[o] = A.id1.at(o);
  }
  D.hcomp_h = A.comp1;
  D.vcomp_v = A.comp1;

  // Squares: (top f, bottom f2, left u, right v, phi: c1(f,v) => c1(u,f2)).
  struct SqData {
    std::string f, f2, u, v, phi;
  };
  std::vector<SqData> cells;
  auto sqname = [](const SqData& s) {
    return s.f + "|" + s.f2 + "|" + s.u + "|" + s.v + "|" + s.phi;
  };
  for (const auto& f : A.ones)
    for (const auto& f2 : A.ones)
      for (const auto& u : A.ones)
        for (const auto& v : A.ones) {
          if (u.src != f.src || v.src != f.tgt || u.tgt != f2.src || v.tgt != f2.tgt) continue;
          std::string from = A.c1(f.name, v.name);
          std::string to = A.c1(u.name, f2.name);
          for (const auto& t : A.twos)
            if (t.src == from && t.tgt == to) {
              SqData s{f.name, f2.name, u.name, v.name, t.name};
              cells.push_back(s);
              D.squares.push_back({sqname(s), s.f, s.f2, s.u, s.v});
            }
        }
  for (const auto& o : A.ones) {
    D.esq[o.name] = o.name + "|" + o.name + "|" + A.id1.at(o.src) + "|" + A.id1.at(o.tgt) + "|" +
                    A.id2.at(o.name);
    D.isq[o.name] = A.id1.at(o.src) + "|" + A.id1.at(o.tgt) + "|" + o.name + "|" + o.name + "|" +
                    A.id2.at(o.name);
  }
  for (const auto& a : cells)
    for (const auto& b : cells) {
      if (a.v == b.u) {
        // horizontal: chi = v2( h2(id2 f, psi), h2(phi, id2 g2) )
        std::string chi =
            A.v2(A.h2(A.id2.at(a.f), b.phi), A.h2(a.phi, A.id2.at(b.f2)));
        SqData c{A.c1(a.f, b.f), A.c1(a.f2, b.f2), a.u, b.v, chi};
        D.hcomp_sq[key(sqname(a), sqname(b))] = sqname(c);
      }
      if (a.f2 == b.f) {
        // vertical: chi = v2( h2(phi, id2 v2), h2(id2 u, psi) )
        std::string chi =
            A.v2(A.h2(a.phi, A.id2.at(b.v)), A.h2(A.id2.at(a.u), b.phi));
        SqData c{a.f, b.f2, A.c1(a.u, b.u), A.c1(a.v, b.v), chi};
        D.vcomp_sq[key(sqname(a), sqname(b))] = sqname(c);
      }
    }
  return D;
}

FiniteDoubleCategory hop(const FiniteDoubleCategory& A) {
  FiniteDoubleCategory D;
  D.name = A.name + "^hop";
  D.objects = A.objects;
  for (const auto& h : A.hmors) D.hmors.push_back({h.name, h.tgt, h.src});
  D.vmors = A.vmors;
  for (const auto& s : A.squares) D.squares.push_back({s.name, s.top, s.bottom, s.right, s.left});
  D.idh = A.idh;
  D.idv = A.idv;
  D.esq = A.esq;
  D.isq = A.isq;
  for (const auto& [k, v] : A.hcomp_h) D.hcomp_h[key(k.second, k.first)] = v;
  D.vcomp_v = A.vcomp_v;
  for (const auto& [k, v] : A.hcomp_sq) D.hcomp_sq[key(k.second, k.first)] = v;
  D.vcomp_sq = A.vcomp_sq;
  return D;
}

Finite2Category extract_2category(const FiniteDoubleCategory& A, const std::string& direction) {
  Finite2Category C;
  C.name = (direction == "horizontal" ? "H(" : "V(") + A.name + ")";
  C.objects = A.objects;
  if (direction == "horizontal") {
    for (const auto& h : A.hmors) C.ones.push_back({h.name, h.src, h.tgt});
    C.comp1 = A.hcomp_h;
    C.id1 = A.idh;
    for (const auto& s : A.squares) {
      const auto* t = A.hmor(s.top);
      if (s.left == A.idv_of(t->src) && s.right == A.idv_of(t->tgt))
        C.twos.push_back({s.name, s.top, s.bottom});
    }
    for (const auto& h : A.hmors) C.id2[h.name] = A.esq_of(h.name);
    for (const auto& a : C.twos)
      for (const auto& b : C.twos) {
        if (a.tgt == b.src) C.vcomp2[key(a.name, b.name)] = A.vcmp_sq(a.name, b.name);
        const auto *fa = C.one(a.src), *fb = C.one(b.src);
        if (fa->tgt == fb->src) C.hcomp2[key(a.name, b.name)] = A.hcmp_sq(a.name, b.name);
      }
  } else if (direction == "vertical") {
    for (const auto& v : A.vmors) C.ones.push_back({v.name, v.src, v.tgt});
    C.comp1 = A.vcomp_v;
    C.id1 = A.idv;
    for (const auto& s : A.squares) {
      const auto* l = A.vmor(s.left);
      if (s.top == A.idh_of(l->src) && s.bottom == A.idh_of(l->tgt))
        C.twos.push_back({s.name, s.left, s.right});
    }
    for (const auto& v : A.vmors) C.id2[v.name] = A.isq_of(v.name);
    for (const auto& a : C.twos)
      for (const auto& b : C.twos) {
        if (a.tgt == b.src) C.vcomp2[key(a.name, b.name)] = A.hcmp_sq(a.name, b.name);
        const auto *fa = C.one(a.src), *fb = C.one(b.src);
        if (fa->tgt == fb->src) C.hcomp2[key(a.name, b.name)] = A.vcmp_sq(a.name, b.name);
      }
  } else {
    throw FoldsError("BadArgument", "direction must be horizontal or vertical");
  }
  return C;
}

FiniteDoubleCategory h_embed(const Finite2Category& A) {
  FiniteDoubleCategory D;
  D.name = "H(" + A.name + ")";
  D.objects = A.objects;
  for (const auto& o : A.ones) D.hmors.push_back({o.name, o.src, o.tgt});
  for (const auto& o : A.objects) {
    D.vmors.push_back({"e(" + o + ")", o, o});
    D.idv[o] = "e(" + o + ")";
    D.idh[o] = A.id1.at(o);
  }
  D.hcomp_h = A.comp1;
  for (const auto& o : A.objects)
    for (const auto& o2 : A.objects)
      if (o == o2) D.vcomp_v[key("e(" + o + ")", "e(" + o + ")")] = "e(" + o + ")";
  for (const auto& t : A.twos) {
    const auto* f = A.one(t.src);
    D.squares.push_back({t.name, t.src, t.tgt, "e(" + f->src + ")", "e(" + f->tgt + ")"});
  }
  for (const auto& o : A.ones) D.esq[o.name] = A.id2.at(o.name);
  for (const auto& o : A.objects) D.isq["e(" + o + ")"] = A.id2.at(A.id1.at(o));
  D.vcomp_sq = A.vcomp2;
  D.hcomp_sq = A.hcomp2;
  return D;
}

FiniteDoubleCategory v_embed(const Finite2Category& A) {
  FiniteDoubleCategory D;
  D.name = "V(" + A.name + ")";
  D.objects = A.objects;
  for (const auto& o : A.ones) D.vmors.push_back({o.name, o.src, o.tgt});
  for (const auto& o : A.objects) {
    D.hmors.push_back({"i(" + o + ")", o, o});
    D.idh[o] = "i(" + o + ")";
    D.idv[o] = A.id1.at(o);
  }
  D.vcomp_v = A.comp1;
  for (const auto& o : A.objects) D.hcomp_h[key("i(" + o + ")", "i(" + o + ")")] = "i(" + o + ")";
  for (const auto& t : A.twos) {
    const auto* f = A.one(t.src);
    D.squares.push_back({t.name, "i(" + f->src + ")", "i(" + f->tgt + ")", t.src, t.tgt});
  }
  for (const auto& o : A.ones) D.isq[o.name] = A.id2.at(o.name);
  for (const auto& o : A.objects) D.esq["i(" + o + ")"] = A.id2.at(A.id1.at(o));
  D.hcomp_sq = A.vcomp2;
  D.vcomp_sq = A.hcomp2;
  return D;
}

namespace {
std::string pname(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }
}  // namespace

FiniteDoubleCategory product(const FiniteDoubleCategory& A, const FiniteDoubleCategory& B) {
  FiniteDoubleCategory D;
  D.name = A.name + "x" + B.name;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects) D.objects.push_back(pname(a, b));
  for (const auto& a : A.hmors)
    for (const auto& b : B.hmors)
      D.hmors.push_back({pname(a.name, b.name), pname(a.src, b.src), pname(a.tgt, b.tgt)});
  for (const auto& a : A.vmors)
    for (const auto& b : B.vmors)
      D.vmors.push_back({pname(a.name, b.name), pname(a.src, b.src), pname(a.tgt, b.tgt)});
  for (const auto& a : A.squares)
    for (const auto& b : B.squares)
      D.squares.push_back({pname(a.name, b.name), pname(a.top, b.top), pname(a.bottom, b.bottom),
                           pname(a.left, b.left), pname(a.right, b.right)});
  for (const auto& a : A.objects)
    for (const auto& b : B.objects) {
      D.idh[pname(a, b)] = pname(A.idh_of(a), B.idh_of(b));
      D.idv[pname(a, b)] = pname(A.idv_of(a), B.idv_of(b));
    }
  for (const auto& a : A.hmors)
    for (const auto& b : B.hmors)
      D.esq[pname(a.name, b.name)] = pname(A.esq_of(a.name), B.esq_of(b.name));
  for (const auto& a : A.vmors)
    for (const auto& b : B.vmors)
      D.isq[pname(a.name, b.name)] = pname(A.isq_of(a.name), B.isq_of(b.name));
  for (const auto& [ka, va] : A.hcomp_h)
    for (const auto& [kb, vb] : B.hcomp_h)
      D.hcomp_h[key(pname(ka.first, kb.first), pname(ka.second, kb.second))] = pname(va, vb);
  for (const auto& [ka, va] : A.vcomp_v)
    for (const auto& [kb, vb] : B.vcomp_v)
      D.vcomp_v[key(pname(ka.first, kb.first), pname(ka.second, kb.second))] = pname(va, vb);
  for (const auto& [ka, va] : A.hcomp_sq)
    for (const auto& [kb, vb] : B.hcomp_sq)
      D.hcomp_sq[key(pname(ka.first, kb.first), pname(ka.second, kb.second))] = pname(va, vb);
  for (const auto& [ka, va] : A.vcomp_sq)
    for (const auto& [kb, vb] : B.vcomp_sq)
      D.vcomp_sq[key(pname(ka.first, kb.first), pname(ka.second, kb.second))] = pname(va, vb);
  return D;
}

FiniteDoubleCategory coproduct(const FiniteDoubleCategory& A, const FiniteDoubleCategory& B) {
  FiniteDoubleCategory D;
  D.name = A.name + "+" + B.name;
  auto lift = [&](const FiniteDoubleCategory& X, const std::string& pre) {
    auto p = [&](const std::string& n) { return pre + n; };
    for (const auto& o : X.objects) D.objects.push_back(p(o));
    for (const auto& h : X.hmors) D.hmors.push_back({p(h.name), p(h.src), p(h.tgt)});
    for (const auto& v : X.vmors) D.vmors.push_back({p(v.name), p(v.src), p(v.tgt)});
    for (const auto& s : X.squares)
      D.squares.push_back({p(s.name), p(s.top), p(s.bottom), p(s.left), p(s.right)});
    for (const auto& [k, v] : X.idh) D.idh[p(k)] = p(v);
    for (const auto& [k, v] : X.idv) D.idv[p(k)] = p(v);
    for (const auto& [k, v] : X.esq) D.esq[p(k)] = p(v);
    for (const auto& [k, v] : X.isq) D.isq[p(k)] = p(v);
    for (const auto& [k, v] : X.hcomp_h) D.hcomp_h[key(p(k.first), p(k.second))] = p(v);
    for (const auto& [k, v] : X.vcomp_v) D.vcomp_v[key(p(k.first), p(k.second))] = p(v);
    for (const auto& [k, v] : X.hcomp_sq) D.hcomp_sq[key(p(k.first), p(k.second))] = p(v);
    for (const auto& [k, v] : X.vcomp_sq) D.vcomp_sq[key(p(k.first), p(k.second))] = p(v);
  };
  lift(A, "l:");
  lift(B, "r:");
  return D;
}

// ---------------------------------------------------------------------------
// Companions, conjoints, equipments, weak invertibility

std::vector<CompanionPair> find_companions(const FiniteDoubleCategory& A, const std::string& u) {
  const auto* um = A.vmor(u);
  if (!um) throw FoldsError("UnknownName", "vmor " + u);
  std::vector<CompanionPair> out;
  const std::string ida = A.idh_of(um->src), idb = A.idh_of(um->tgt);
  const std::string ea = A.idv_of(um->src), eb = A.idv_of(um->tgt);
  for (const auto& f : A.hmors_between(um->src, um->tgt))
    for (const auto& phi : A.squares_with_boundary(f, idb, u, eb))
      for (const auto& psi : A.squares_with_boundary(ida, f, ea, u)) {
        if (A.hcmp_sq(psi, phi) == A.esq_of(f) && A.vcmp_sq(psi, phi) == A.isq_of(u))
          out.push_back({f, phi, psi});
      }
  return out;
}

std::vector<ConjointPair> find_conjoints(const FiniteDoubleCategory& A, const std::string& u) {
  // Companions in the horizontal opposite, transported back.
  FiniteDoubleCategory Ahop = hop(A);
  std::vector<ConjointPair> out;
  for (const auto& cp : find_companions(Ahop, u)) out.push_back({cp.hmor, cp.phi, cp.psi});
  return out;
}

EquipmentCheck is_equipment(const FiniteDoubleCategory& A) {
  EquipmentCheck res;
  for (const auto& v : A.vmors) {
    if (find_companions(A, v.name).empty()) {
      res.ok = false;
      res.failing_vmor = v.name;
      res.reason = "no companion";
      return res;
    }
    if (find_conjoints(A, v.name).empty()) {
      res.ok = false;
      res.failing_vmor = v.name;
      res.reason = "no conjoint";
      return res;
    }
  }
  return res;
}

namespace {

// Horizontally invertible squares with a prescribed boundary.
std::vector<std::string> hinvertible_with_boundary(const FiniteDoubleCategory& A,
                                                   const std::string& top,
                                                   const std::string& bottom,
                                                   const std::string& left,
                                                   const std::string& right) {
  std::vector<std::string> out;
  for (const auto& s : A.squares_with_boundary(top, bottom, left, right))
    if (A.hinv_sq(s)) out.push_back(s);
  return out;
}

}  // namespace

std::optional<WeakInverseWitness> is_weakly_vertically_invertible(const FiniteDoubleCategory& A,
                                                                  const std::string& alpha) {
  const auto* al = A.square(alpha);
  if (!al) throw FoldsError("UnknownName", "square " + alpha);
  const auto* a = A.hmor(al->top);
  const auto* a2 = A.hmor(al->bottom);
  const std::string &u = al->left, &u2 = al->right;
  // gamma: [a2, a, v, v2]
  for (const auto& g : A.squares) {
    if (g.top != al->bottom || g.bottom != al->top) continue;
    const std::string &v = g.left, &v2 = g.right;
    // eta: e_{A'} ~ v.u at A' = src a2 ; eta2: e_{B'} ~ v2.u2
    std::string idA2 = A.idh_of(a2->src), idB2 = A.idh_of(a2->tgt);
    std::string idA = A.idh_of(a->src), idB = A.idh_of(a->tgt);
    std::string vu = A.vcomp(v, u), v2u2 = A.vcomp(v2, u2);
    std::string uv = A.vcomp(u, v), u2v2 = A.vcomp(u2, v2);
    std::string gamma_alpha = A.vcmp_sq(g.name, alpha);
    std::string alpha_gamma = A.vcmp_sq(alpha, g.name);
    bool found1 = false;
    WeakInverseWitness w;
    w.gamma = g.name;
    for (const auto& eta : hinvertible_with_boundary(A, idA2, idA2, A.idv_of(a2->src), vu)) {
      for (const auto& eta2 : hinvertible_with_boundary(A, idB2, idB2, A.idv_of(a2->tgt), v2u2)) {
        if (A.hcmp_sq(eta, gamma_alpha) == A.hcmp_sq(A.esq_of(al->bottom), eta2)) {
          w.eta = eta;
          w.eta2 = eta2;
          found1 = true;
          break;
        }
      }
      if (found1) break;
    }
    if (!found1) continue;
    bool found2 = false;
    for (const auto& eps : hinvertible_with_boundary(A, idA, idA, uv, A.idv_of(a->src))) {
      for (const auto& eps2 : hinvertible_with_boundary(A, idB, idB, u2v2, A.idv_of(a->tgt))) {
        if (A.hcmp_sq(eps, A.esq_of(al->top)) == A.hcmp_sq(alpha_gamma, eps2)) {
          w.eps = eps;
          w.eps2 = eps2;
          found2 = true;
          break;
        }
      }
      if (found2) break;
    }
    if (found2) return w;
  }
  return std::nullopt;
}

bool is_vertical_equivalence(const FiniteDoubleCategory& A, const std::string& u) {
  const auto* um = A.vmor(u);
  if (!um) throw FoldsError("UnknownName", "vmor " + u);
  for (const auto& v : A.vmors_between(um->tgt, um->src)) {
    std::string uv = A.vcomp(u, v);   // src -> src
    std::string vu = A.vcomp(v, u);   // tgt -> tgt
    std::string ia = A.idh_of(um->src), ib = A.idh_of(um->tgt);
    bool e1 = !hinvertible_with_boundary(A, ia, ia, A.idv_of(um->src), uv).empty();
    bool e2 = !hinvertible_with_boundary(A, ib, ib, vu, A.idv_of(um->tgt)).empty();
    if (e1 && e2) return true;
  }
  return false;
}

}  // namespace folds
