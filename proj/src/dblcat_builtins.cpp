#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "folds/dblcat.hpp"

namespace folds {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return {a, b};
}
std::string pname(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

void add_trivial_twos(Finite2Category& C) {
  for (const auto& o : C.ones) {
    C.twos.push_back({"i2_" + o.name, o.name, o.name});
    C.id2[o.name] = "i2_" + o.name;
  }
  for (const auto& o : C.ones) C.vcomp2[key("i2_" + o.name, "i2_" + o.name)] = "i2_" + o.name;
  for (const auto& [k, v] : C.comp1) C.hcomp2[key("i2_" + k.first, "i2_" + k.second)] = "i2_" + v;
}

Finite2Category twocat_one() {
  Finite2Category C;
  C.name = "1";
  C.objects = {"*"};
  C.ones = {{"id*", "*", "*"}};
  C.id1["*"] = "id*";
  C.comp1[key("id*", "id*")] = "id*";
  add_trivial_twos(C);
  return C;
}

Finite2Category twocat_arrow() {
  Finite2Category C;
  C.name = "2";
  C.objects = {"0", "1"};
  C.ones = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"k", "0", "1"}};
  C.id1 = {{"0", "id0"}, {"1", "id1"}};
  C.comp1[key("id0", "id0")] = "id0";
  C.comp1[key("id1", "id1")] = "id1";
  C.comp1[key("id0", "k")] = "k";
  C.comp1[key("k", "id1")] = "k";
  add_trivial_twos(C);
  return C;
}

Finite2Category twocat_three() {
  Finite2Category C;
  C.name = "3";
  C.objects = {"0", "1", "2"};
  C.ones = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
            {"a", "0", "1"},   {"b", "1", "2"},   {"ab", "0", "2"}};
  C.id1 = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}};
  for (const auto& f : C.ones) {
    C.comp1[key(C.id1.at(f.src), f.name)] = f.name;
    C.comp1[key(f.name, C.id1.at(f.tgt))] = f.name;
  }
  C.comp1[key("a", "b")] = "ab";
  add_trivial_twos(C);
  return C;
}

// Free composable pair of 2-cells between parallel 1-cells a -> b.
Finite2Category twocat_sigma3() {
  Finite2Category C;
  C.name = "Sigma3";
  C.objects = {"0", "1"};
  C.ones = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"p", "0", "1"}, {"q", "0", "1"}, {"r", "0", "1"}};
  C.id1 = {{"0", "id0"}, {"1", "id1"}};
  for (const auto& f : C.ones) {
    C.comp1[key(C.id1.at(f.src), f.name)] = f.name;
    C.comp1[key(f.name, C.id1.at(f.tgt))] = f.name;
  }
  for (const auto& o : C.ones) {
    C.twos.push_back({"i2_" + o.name, o.name, o.name});
    C.id2[o.name] = "i2_" + o.name;
  }
  C.twos.push_back({"al", "p", "q"});
  C.twos.push_back({"be", "q", "r"});
  C.twos.push_back({"alb", "p", "r"});
  for (const auto& o : C.ones) C.vcomp2[key("i2_" + o.name, "i2_" + o.name)] = "i2_" + o.name;
  auto vunit = [&](const std::string& a, const std::string& s, const std::string& t) {
    C.vcomp2[key(C.id2.at(s), a)] = a;
    C.vcomp2[key(a, C.id2.at(t))] = a;
  };
  vunit("al", "p", "q");
  vunit("be", "q", "r");
  vunit("alb", "p", "r");
  C.vcomp2[key("al", "be")] = "alb";
  C.hcomp2[key("i2_id0", "i2_id0")] = "i2_id0";
  C.hcomp2[key("i2_id1", "i2_id1")] = "i2_id1";
  for (const auto& a : {"i2_p", "i2_q", "i2_r", "al", "be", "alb"}) {
    C.hcomp2[key("i2_id0", a)] = a;
    C.hcomp2[key(a, "i2_id1")] = a;
  }
  return C;
}

Finite2Category twocat_chaotic(int n, const std::string& name) {
  Finite2Category C;
  C.name = name;
  for (int i = 0; i < n; ++i) C.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      C.ones.push_back({"m" + std::to_string(i) + std::to_string(j), std::to_string(i),
                        std::to_string(j)});
  for (int i = 0; i < n; ++i) C.id1[std::to_string(i)] = "m" + std::to_string(i) + std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        C.comp1[key("m" + std::to_string(i) + std::to_string(j),
                    "m" + std::to_string(j) + std::to_string(l))] =
            "m" + std::to_string(i) + std::to_string(l);
  add_trivial_twos(C);
  return C;
}

// Free-standing 2-cell between parallel 1-cells f,g: 0 -> 1; optionally
// invertible (the suspensions of the walking arrow and the walking iso).
Finite2Category twocat_sigma(bool invertible) {
  Finite2Category C;
  C.name = invertible ? "SigmaI" : "Sigma2";
  C.objects = {"0", "1"};
  C.ones = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"f", "0", "1"}, {"g", "0", "1"}};
  C.id1 = {{"0", "id0"}, {"1", "id1"}};
  for (const auto& f : C.ones) {
    C.comp1[key(C.id1.at(f.src), f.name)] = f.name;
    C.comp1[key(f.name, C.id1.at(f.tgt))] = f.name;
  }
  for (const auto& o : C.ones) {
    C.twos.push_back({"i2_" + o.name, o.name, o.name});
    C.id2[o.name] = "i2_" + o.name;
  }
  C.twos.push_back({"al", "f", "g"});
  if (invertible) C.twos.push_back({"ali", "g", "f"});
  auto vunit = [&](const std::string& a, const std::string& s, const std::string& t) {
    C.vcomp2[key(C.id2.at(s), a)] = a;
    C.vcomp2[key(a, C.id2.at(t))] = a;
  };
  for (const auto& o : C.ones) C.vcomp2[key("i2_" + o.name, "i2_" + o.name)] = "i2_" + o.name;
  vunit("al", "f", "g");
  if (invertible) {
    vunit("ali", "g", "f");
    C.vcomp2[key("al", "ali")] = "i2_f";
    C.vcomp2[key("ali", "al")] = "i2_g";
  }
  // Horizontal composition: whiskering by the identity 1-cells only.
  std::vector<std::string> at01 = {"i2_f", "i2_g", "al"};
  if (invertible) at01.push_back("ali");
  C.hcomp2[key("i2_id0", "i2_id0")] = "i2_id0";
  C.hcomp2[key("i2_id1", "i2_id1")] = "i2_id1";
  for (const auto& a : at01) {
    C.hcomp2[key("i2_id0", a)] = a;
    C.hcomp2[key(a, "i2_id1")] = a;
  }
  return C;
}

FiniteDoubleCategory discrete_dc(int n, const std::string& name) {
  FiniteDoubleCategory D;
  D.name = name;
  for (int i = 0; i < n; ++i) {
    std::string o = std::to_string(i);
    D.objects.push_back(o);
    D.hmors.push_back({"i" + o, o, o});
    D.vmors.push_back({"e" + o, o, o});
    D.squares.push_back({"o" + o, "i" + o, "i" + o, "e" + o, "e" + o});
    D.idh[o] = "i" + o;
    D.idv[o] = "e" + o;
    D.esq["i" + o] = "o" + o;
    D.isq["e" + o] = "o" + o;
    D.hcomp_h[key("i" + o, "i" + o)] = "i" + o;
    D.vcomp_v[key("e" + o, "e" + o)] = "e" + o;
    D.hcomp_sq[key("o" + o, "o" + o)] = "o" + o;
    D.vcomp_sq[key("o" + o, "o" + o)] = "o" + o;
  }
  return D;
}

// The boundary of the free square: hxv minus its unique non-identity square.
FiniteDoubleCategory boundary_dc(const FiniteDoubleCategory& hxv) {
  FiniteDoubleCategory D = hxv;
  D.name = "boundary";
  std::string fill = pname("i2_k", "i2_k");
  D.squares.erase(std::remove_if(D.squares.begin(), D.squares.end(),
                                 [&](const auto& s) { return s.name == fill; }),
                  D.squares.end());
  auto prune = [&](std::map<std::pair<std::string, std::string>, std::string>& tab) {
    for (auto it = tab.begin(); it != tab.end();) {
      if (it->first.first == fill || it->first.second == fill || it->second == fill)
        it = tab.erase(it);
      else
        ++it;
    }
  };
  prune(D.hcomp_sq);
  prune(D.vcomp_sq);
  return D;
}

// Two parallel non-identity squares on the frame of the free square.
FiniteDoubleCategory parallel_dc(const FiniteDoubleCategory& hxv) {
  FiniteDoubleCategory D = hxv;
  D.name = "parallel";
  std::string fill = pname("i2_k", "i2_k");
  const auto* s = D.square(fill);
  D.squares.push_back({"par2", s->top, s->bottom, s->left, s->right});
  auto extend = [&](std::map<std::pair<std::string, std::string>, std::string>& tab) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::string>> add;
    auto subst = [&](const std::string& x) { return x == fill ? "par2" : x; };
    for (const auto& [k, v] : tab) {
      if (k.first == fill) add.push_back({key("par2", k.second), subst(v)});
      if (k.second == fill) add.push_back({key(k.first, "par2"), subst(v)});
    }
    for (auto& e : add) tab[e.first] = e.second;
  };
  extend(D.hcomp_sq);
  extend(D.vcomp_sq);
  return D;
}

// Functor into a target with at most one cell per boundary, induced by an
// object assignment.
DoubleFunctor thin_functor(const std::string& name, std::shared_ptr<const FiniteDoubleCategory> A,
                           std::shared_ptr<const FiniteDoubleCategory> B,
                           const std::map<std::string, std::string>& objmap) {
  DoubleFunctor F;
  F.name = name;
  F.src = A;
  F.tgt = B;
  F.obj = objmap;
  for (const auto& h : A->hmors) {
    auto cand = B->hmors_between(objmap.at(h.src), objmap.at(h.tgt));
    if (cand.size() != 1)
      throw FoldsError("NotThin", name + ": hmor " + h.name + " has " +
                                      std::to_string(cand.size()) + " candidates");
    F.hmor[h.name] = cand[0];
  }
  for (const auto& v : A->vmors) {
    auto cand = B->vmors_between(objmap.at(v.src), objmap.at(v.tgt));
    if (cand.size() != 1)
      throw FoldsError("NotThin", name + ": vmor " + v.name + " has " +
                                      std::to_string(cand.size()) + " candidates");
    F.vmor[v.name] = cand[0];
  }
  for (const auto& s : A->squares) {
    auto cand = B->squares_with_boundary(F.hmor.at(s.top), F.hmor.at(s.bottom),
                                         F.vmor.at(s.left), F.vmor.at(s.right));
    if (cand.size() != 1)
      throw FoldsError("NotThin", name + ": square " + s.name + " has " +
                                      std::to_string(cand.size()) + " candidates");
    F.sq[s.name] = cand[0];
  }
  return F;
}

DoubleFunctor product_proj(const std::string& name,
                           std::shared_ptr<const FiniteDoubleCategory> prod,
                           std::shared_ptr<const FiniteDoubleCategory> A,
                           std::shared_ptr<const FiniteDoubleCategory> B, int which) {
  DoubleFunctor F;
  F.name = name;
  F.src = prod;
  F.tgt = which == 1 ? A : B;
  auto pick = [&](const std::string& a, const std::string& b) { return which == 1 ? a : b; };
  for (const auto& a : A->objects)
    for (const auto& b : B->objects) F.obj[pname(a, b)] = pick(a, b);
  for (const auto& a : A->hmors)
    for (const auto& b : B->hmors) F.hmor[pname(a.name, b.name)] = pick(a.name, b.name);
  for (const auto& a : A->vmors)
    for (const auto& b : B->vmors) F.vmor[pname(a.name, b.name)] = pick(a.name, b.name);
  for (const auto& a : A->squares)
    for (const auto& b : B->squares) F.sq[pname(a.name, b.name)] = pick(a.name, b.name);
  return F;
}

DoubleFunctor diag_functor(const std::string& name, std::shared_ptr<const FiniteDoubleCategory> A,
                           std::shared_ptr<const FiniteDoubleCategory> AxA) {
  DoubleFunctor F;
  F.name = name;
  F.src = A;
  F.tgt = AxA;
  for (const auto& o : A->objects) F.obj[o] = pname(o, o);
  for (const auto& h : A->hmors) F.hmor[h.name] = pname(h.name, h.name);
  for (const auto& v : A->vmors) F.vmor[v.name] = pname(v.name, v.name);
  for (const auto& s : A->squares) F.sq[s.name] = pname(s.name, s.name);
  return F;
}

using DcPtr = std::shared_ptr<const FiniteDoubleCategory>;

const std::map<std::string, DcPtr>& dc_registry() {
  static const std::map<std::string, DcPtr> reg = [] {
    std::map<std::string, DcPtr> m;
    auto put = [&](const std::string& n, FiniteDoubleCategory dc) {
      dc.name = n;
      m[n] = std::make_shared<const FiniteDoubleCategory>(std::move(dc));
    };
    FiniteDoubleCategory empty;
    put("empty", empty);
    put("one", h_embed(twocat_one()));
    put("disc2", discrete_dc(2, "disc2"));
    put("disc3", discrete_dc(3, "disc3"));
    auto two = twocat_arrow();
    auto three = twocat_three();
    auto e2 = twocat_chaotic(2, "E2");
    auto e3 = twocat_chaotic(3, "E3");
    auto sigma2 = twocat_sigma(false);
    auto sigmai = twocat_sigma(true);
    put("h2", h_embed(two));
    put("v2", v_embed(two));
    put("h3", h_embed(three));
    put("v3", v_embed(three));
    FiniteDoubleCategory hxv = product(h_embed(two), v_embed(two));
    put("hxv", hxv);
    put("boundary", boundary_dc(hxv));
    put("parallel", parallel_dc(hxv));
    FiniteDoubleCategory sq2 = sq_of_2cat(two);
    put("sq2", sq2);
    put("sq2hop", hop(sq2));
    FiniteDoubleCategory sqiso = sq_of_2cat(e2);
    put("sqiso", sqiso);
    put("sqe3", sq_of_2cat(e3));
    put("sqsigmai", sq_of_2cat(sigmai));
    put("he2", h_embed(e2));
    put("he3", h_embed(e3));
    put("hsigma2", h_embed(sigma2));
    put("hsigma3", h_embed(twocat_sigma3()));
    put("hsigmai", h_embed(sigmai));
    put("vsigma2", v_embed(sigma2));
    put("vsigmai", v_embed(sigmai));
    put("sqiso2", product(sqiso, sqiso));
    return m;
  }();
  return reg;
}

using FunPtr = std::shared_ptr<const DoubleFunctor>;

const std::map<std::string, FunPtr>& fun_registry() {
  static const std::map<std::string, FunPtr> reg = [] {
    std::map<std::string, FunPtr> m;
    auto dc = [&](const std::string& n) { return dc_registry().at(n); };
    auto put = [&](DoubleFunctor F) {
      std::string name = F.name;
      m[name] = std::make_shared<const DoubleFunctor>(std::move(F));
    };
    for (const auto& [n, A] : dc_registry()) {
      DoubleFunctor id = identity_functor(A);
      id.name = "id:" + n;
      put(id);
      DoubleFunctor bg = bang_functor(A);
      bg.name = "bang:" + n;
      put(bg);
    }
    auto obj2 = [](std::map<std::string, std::string> m2) { return m2; };
    put(thin_functor("disc2_h2", dc("disc2"), dc("h2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("disc2_v2", dc("disc2"), dc("v2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("disc2_disc3", dc("disc2"), dc("disc3"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("one_h2", dc("one"), dc("h2"), obj2({{"*", "0"}})));
    {
      std::map<std::string, std::string> idobj;
      for (const auto& o : dc("boundary")->objects) idobj[o] = o;
      put(thin_functor("boundary_hxv", dc("boundary"), dc("hxv"), idobj));
      idobj.clear();
      for (const auto& o : dc("parallel")->objects) idobj[o] = o;
      put(thin_functor("parallel_hxv", dc("parallel"), dc("hxv"), idobj));
    }
    put(thin_functor("v2_sq2", dc("v2"), dc("sq2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("v2_sq2hop", dc("v2"), dc("sq2hop"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("h2_sq2", dc("h2"), dc("sq2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("h2_hxv", dc("h2"), dc("hxv"),
                     obj2({{"0", "(0,0)"}, {"1", "(1,0)"}})));
    put(thin_functor("v2_hxv", dc("v2"), dc("hxv"),
                     obj2({{"0", "(0,0)"}, {"1", "(0,1)"}})));
    put(product_proj("hxv_h2", dc("hxv"), dc("h2"), dc("v2"), 1));
    put(product_proj("hxv_v2", dc("hxv"), dc("h2"), dc("v2"), 2));
    put(thin_functor("he3_he2", dc("he3"), dc("he2"),
                     obj2({{"0", "0"}, {"1", "1"}, {"2", "1"}})));
    put(thin_functor("sqe3_sqiso", dc("sqe3"), dc("sqiso"),
                     obj2({{"0", "0"}, {"1", "1"}, {"2", "1"}})));
    put(thin_functor("sq2_sqiso", dc("sq2"), dc("sqiso"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("hsigma2_h2", dc("hsigma2"), dc("h2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("hsigmai_h2", dc("hsigmai"), dc("h2"), obj2({{"0", "0"}, {"1", "1"}})));
    put(thin_functor("vsigmai_v2", dc("vsigmai"), dc("v2"), obj2({{"0", "0"}, {"1", "1"}})));
    {
      std::map<std::string, std::string> idobj;
      for (const auto& o : dc("sqsigmai")->objects) idobj[o] = o;
      put(thin_functor("sqsigmai_sqiso", dc("sqsigmai"), dc("sqiso"), idobj));
    }
    put(product_proj("sqiso2_pi1", dc("sqiso2"), dc("sqiso"), dc("sqiso"), 1));
    put(product_proj("sqiso2_pi2", dc("sqiso2"), dc("sqiso"), dc("sqiso"), 2));
    put(diag_functor("sqiso_diag", dc("sqiso"), dc("sqiso2")));
    {
      // Inclusions of the free 2-cell into the free invertible 2-cell,
      // horizontally and vertically embedded. Cellwise the identity on the
      // generating data.
      auto cellwise = [&](const std::string& name, const std::string& from,
                          const std::string& to) {
        DoubleFunctor F;
        F.name = name;
        F.src = dc(from);
        F.tgt = dc(to);
        for (const auto& o : F.src->objects) F.obj[o] = o;
        for (const auto& h : F.src->hmors) F.hmor[h.name] = h.name;
        for (const auto& v : F.src->vmors) F.vmor[v.name] = v.name;
        for (const auto& s : F.src->squares) F.sq[s.name] = s.name;
        return F;
      };
      put(cellwise("hsigma2_hsigmai", "hsigma2", "hsigmai"));
      put(cellwise("vsigma2_vsigmai", "vsigma2", "vsigmai"));
    }
    return m;
  }();
  return reg;
}

}  // namespace

DoubleFunctor bang_functor(std::shared_ptr<const FiniteDoubleCategory> A) {
  auto one = builtin_double_category("one");
  DoubleFunctor F;
  F.name = "bang:" + A->name;
  F.src = A;
  F.tgt = one;
  for (const auto& o : A->objects) F.obj[o] = "*";
  for (const auto& h : A->hmors) F.hmor[h.name] = one->idh_of("*");
  for (const auto& v : A->vmors) F.vmor[v.name] = one->idv_of("*");
  for (const auto& s : A->squares) F.sq[s.name] = one->esq_of(one->idh_of("*"));
  return F;
}

std::shared_ptr<const FiniteDoubleCategory> builtin_double_category(const std::string& name) {
  auto it = dc_registry().find(name);
  if (it == dc_registry().end()) throw FoldsError("UnknownBuiltin", "double category " + name);
  return it->second;
}

std::vector<std::string> builtin_double_category_names() {
  std::vector<std::string> out;
  for (const auto& [n, p] : dc_registry()) {
    (void)p;
    out.push_back(n);
  }
  return out;
}

std::shared_ptr<const DoubleFunctor> builtin_functor(const std::string& name) {
  auto it = fun_registry().find(name);
  if (it == fun_registry().end()) throw FoldsError("UnknownBuiltin", "functor " + name);
  return it->second;
}

std::vector<std::string> builtin_functor_names() {
  std::vector<std::string> out;
  for (const auto& [n, p] : fun_registry()) {
    (void)p;
    out.push_back(n);
  }
  return out;
}

std::vector<std::shared_ptr<const DoubleFunctor>> corpus_functors() {
  std::vector<std::shared_ptr<const DoubleFunctor>> out;
  for (const auto& n : builtin_functor_names()) out.push_back(builtin_functor(n));
  return out;
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

// "Y . X" in function order: X first, then Y.
bool split_comp(const std::string& s, std::string& second, std::string& first) {
  auto dot = s.find(" . ");
  if (dot == std::string::npos) return false;
  second = strip(s.substr(0, dot));
  first = strip(s.substr(dot + 3));
  return true;
}

}  // namespace

FiniteDoubleCategory parse_double_category(const std::string& text) {
  FiniteDoubleCategory D;
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
      throw FoldsError("SyntaxError", "dblcat line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("dblcat ", 0) == 0) {
      D.name = strip(line.substr(7));
    } else if (line.rfind("objects:", 0) == 0) {
      for (auto& o : split_ws(line.substr(8))) D.objects.push_back(o);
    } else if (line.rfind("hmor:", 0) == 0) {
      std::string rest = strip(line.substr(5));
      auto colon = rest.find(':');
      auto arr = rest.find("->");
      if (colon == std::string::npos || arr == std::string::npos) fail("hmor: f: a -> b");
      D.hmors.push_back({strip(rest.substr(0, colon)), strip(rest.substr(colon + 1, arr - colon - 1)),
                         strip(rest.substr(arr + 2))});
    } else if (line.rfind("vmor:", 0) == 0) {
      std::string rest = strip(line.substr(5));
      auto colon = rest.find(':');
      auto arr = rest.find("=>");
      if (colon == std::string::npos || arr == std::string::npos) fail("vmor: u: a => b");
      D.vmors.push_back({strip(rest.substr(0, colon)), strip(rest.substr(colon + 1, arr - colon - 1)),
                         strip(rest.substr(arr + 2))});
    } else if (line.rfind("sq:", 0) == 0) {
      std::string rest = strip(line.substr(3));
      auto lb = rest.find('[');
      auto rb = rest.find(']');
      if (lb == std::string::npos || rb == std::string::npos) fail("sq: s [top=.. bottom=.. left=.. right=..]");
      FiniteDoubleCategory::Sq s;
      s.name = strip(rest.substr(0, lb));
      for (auto& kv : split_ws(rest.substr(lb + 1, rb - lb - 1))) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("bad boundary item " + kv);
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "top") s.top = v;
        else if (k == "bottom") s.bottom = v;
        else if (k == "left") s.left = v;
        else if (k == "right") s.right = v;
        else fail("bad boundary key " + k);
      }
      D.squares.push_back(s);
    } else if (line.rfind("idh ", 0) == 0 || line.rfind("idv ", 0) == 0 ||
               line.rfind("esq ", 0) == 0 || line.rfind("isq ", 0) == 0) {
      std::string head = line.substr(0, 3);
      auto eq = line.find('=');
      if (eq == std::string::npos) fail("identity designation needs '='");
      std::string k = strip(line.substr(4, eq - 4));
      std::string v = strip(line.substr(eq + 1));
      if (head == "idh") D.idh[k] = v;
      else if (head == "idv") D.idv[k] = v;
      else if (head == "esq") D.esq[k] = v;
      else D.isq[k] = v;
    } else if (line.rfind("hcomp:", 0) == 0 || line.rfind("vcomp:", 0) == 0 ||
               line.rfind("hcompsq:", 0) == 0 || line.rfind("vcompsq:", 0) == 0) {
      auto colon = line.find(':');
      std::string head = line.substr(0, colon);
      auto eq = line.find('=');
      if (eq == std::string::npos) fail("composition entry needs '='");
      std::string lhs = strip(line.substr(colon + 1, eq - colon - 1));
      std::string val = strip(line.substr(eq + 1));
      std::string second, first;
      if (!split_comp(lhs, second, first)) fail("expected 'g . f = h'");
      if (head == "hcomp") D.hcomp_h[key(first, second)] = val;
      else if (head == "vcomp") D.vcomp_v[key(first, second)] = val;
      else if (head == "hcompsq") D.hcomp_sq[key(first, second)] = val;
      else D.vcomp_sq[key(first, second)] = val;
    } else {
      fail("unrecognized line: " + line);
    }
  }
  return D;
}

std::string print_double_category(const FiniteDoubleCategory& A) {
  std::ostringstream out;
  out << "dblcat " << (A.name.empty() ? "unnamed" : A.name) << "\n";
  out << "objects:";
  for (const auto& o : A.objects) out << " " << o;
  out << "\n";
  for (const auto& h : A.hmors) out << "hmor: " << h.name << ": " << h.src << " -> " << h.tgt << "\n";
  for (const auto& v : A.vmors) out << "vmor: " << v.name << ": " << v.src << " => " << v.tgt << "\n";
  for (const auto& s : A.squares)
    out << "sq: " << s.name << " [top=" << s.top << " bottom=" << s.bottom << " left=" << s.left
        << " right=" << s.right << "]\n";
  for (const auto& [k, v] : A.idh) out << "idh " << k << " = " << v << "\n";
  for (const auto& [k, v] : A.idv) out << "idv " << k << " = " << v << "\n";
  for (const auto& [k, v] : A.esq) out << "esq " << k << " = " << v << "\n";
  for (const auto& [k, v] : A.isq) out << "isq " << k << " = " << v << "\n";
  for (const auto& [k, v] : A.hcomp_h)
    out << "hcomp: " << k.second << " . " << k.first << " = " << v << "\n";
  for (const auto& [k, v] : A.vcomp_v)
    out << "vcomp: " << k.second << " . " << k.first << " = " << v << "\n";
  for (const auto& [k, v] : A.hcomp_sq)
    out << "hcompsq: " << k.second << " . " << k.first << " = " << v << "\n";
  for (const auto& [k, v] : A.vcomp_sq)
    out << "vcompsq: " << k.second << " . " << k.first << " = " << v << "\n";
  return out.str();
}

DoubleFunctor parse_double_functor(const std::string& text,
                                   std::shared_ptr<const FiniteDoubleCategory> src,
                                   std::shared_ptr<const FiniteDoubleCategory> tgt) {
  DoubleFunctor F;
  F.src = src;
  F.tgt = tgt;
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
      throw FoldsError("SyntaxError", "functor line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("functor ", 0) == 0) {
      F.name = strip(line.substr(8));
      continue;
    }
    if (line.rfind("source:", 0) == 0 || line.rfind("target:", 0) == 0) continue;
    auto colon = line.find(':');
    auto arr = line.find("->");
    if (colon == std::string::npos || arr == std::string::npos) fail("expected 'sort: x -> y'");
    std::string sort = strip(line.substr(0, colon));
    std::string x = strip(line.substr(colon + 1, arr - colon - 1));
    std::string y = strip(line.substr(arr + 2));
    if (sort == "obj") F.obj[x] = y;
    else if (sort == "hmor") F.hmor[x] = y;
    else if (sort == "vmor") F.vmor[x] = y;
    else if (sort == "sq") F.sq[x] = y;
    else fail("unknown sort " + sort);
  }
  return F;
}

std::string print_double_functor(const DoubleFunctor& F) {
  std::ostringstream out;
  out << "functor " << (F.name.empty() ? "unnamed" : F.name) << "\n";
  out << "source: " << F.src->name << "\n";
  out << "target: " << F.tgt->name << "\n";
  for (const auto& [k, v] : F.obj) out << "obj: " << k << " -> " << v << "\n";
  for (const auto& [k, v] : F.hmor) out << "hmor: " << k << " -> " << v << "\n";
  for (const auto& [k, v] : F.vmor) out << "vmor: " << k << " -> " << v << "\n";
  for (const auto& [k, v] : F.sq) out << "sq: " << k << " -> " << v << "\n";
  return out.str();
}

}  // namespace folds
