#include "folds/classify.hpp"

#include <algorithm>
#include <set>

namespace folds {

namespace {

// Fully faithful on squares: over every boundary quadruple upstairs, the
// square fiber maps bijectively onto the fiber over its image boundary.
bool ff_on_squares(const DoubleFunctor& F, std::string* detail) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (const auto& t : A.hmors)
    for (const auto& b : A.hmors)
      for (const auto& l : A.vmors)
        for (const auto& r : A.vmors) {
          if (l.src != t.src || r.src != t.tgt || l.tgt != b.src || r.tgt != b.tgt) continue;
          auto up = A.squares_with_boundary(t.name, b.name, l.name, r.name);
          auto down = B.squares_with_boundary(F.on_hmor(t.name), F.on_hmor(b.name),
                                              F.on_vmor(l.name), F.on_vmor(r.name));
          std::set<std::string> img;
          for (const auto& s : up) img.insert(F.on_sq(s));
          if (img.size() != up.size() || img.size() != down.size()) {
            if (detail)
              *detail = "boundary (" + t.name + "," + b.name + "," + l.name + "," + r.name + ")";
            return false;
          }
        }
  return true;
}

// 2-isomorphisms beta: g ~ f in the horizontal 2-category of B: vertically
// invertible squares [g, f, idv, idv].
std::vector<std::string> h2isos(const FiniteDoubleCategory& B, const std::string& g,
                                const std::string& f) {
  const auto* gm = B.hmor(g);
  std::vector<std::string> out;
  for (const auto& s : B.squares_with_boundary(g, f, B.idv_of(gm->src), B.idv_of(gm->tgt)))
    if (B.vinv_sq(s)) out.push_back(s);
  return out;
}

// 2-isomorphisms beta: v ~ u in the vertical 2-category: horizontally
// invertible squares [idh, idh, v, u].
std::vector<std::string> v2isos(const FiniteDoubleCategory& B, const std::string& v,
                                const std::string& u) {
  const auto* vm = B.vmor(v);
  std::vector<std::string> out;
  for (const auto& s : B.squares_with_boundary(B.idh_of(vm->src), B.idh_of(vm->tgt), v, u))
    if (B.hinv_sq(s)) out.push_back(s);
  return out;
}

bool biequiv_condition(const DoubleFunctor& F, const std::string& tag, std::string* detail) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  if (tag == "w1") {
    for (const auto& b : B.objects) {
      bool hit = false;
      for (const auto& a : A.objects) {
        for (const auto& v : B.vmors_between(b, F.on_obj(a)))
          if (is_vertical_equivalence(B, v)) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (!hit) {
        if (detail) *detail = "object " + b;
        return false;
      }
    }
    return true;
  }
  if (tag == "w2") {
    for (const auto& a : A.objects)
      for (const auto& c : A.objects)
        for (const auto& v : B.vmors_between(F.on_obj(a), F.on_obj(c))) {
          bool hit = false;
          for (const auto& u : A.vmors_between(a, c))
            if (!v2isos(B, v, F.on_vmor(u)).empty()) {
              hit = true;
              break;
            }
          if (!hit) {
            if (detail) *detail = v + " at (" + a + "," + c + ")";
            return false;
          }
        }
    return true;
  }
  if (tag == "w3") {
    for (const auto& f : B.hmors) {
      bool hit = false;
      for (const auto& g : A.hmors) {
        std::string fg = F.on_hmor(g.name);
        const auto* fgm = B.hmor(fg);
        for (const auto& l : B.vmors_between(f.src, fgm->src)) {
          if (!is_vertical_equivalence(B, l)) continue;
          for (const auto& r : B.vmors_between(f.tgt, fgm->tgt)) {
            if (!is_vertical_equivalence(B, r)) continue;
            for (const auto& beta : B.squares_with_boundary(f.name, fg, l, r))
              if (is_weakly_vertically_invertible(B, beta)) {
                hit = true;
                break;
              }
            if (hit) break;
          }
          if (hit) break;
        }
        if (hit) break;
      }
      if (!hit) {
        if (detail) *detail = "hmor " + f.name;
        return false;
      }
    }
    return true;
  }
  if (tag == "w4") return ff_on_squares(F, detail);
  throw FoldsError("BadArgument", "unknown biequivalence condition " + tag);
}

}  // namespace

TrivFibCheck is_trivial_fibration(const DoubleFunctor& F) {
  TrivFibCheck res;
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  std::set<std::string> obj_image;
  for (const auto& [x, y] : F.obj) {
    (void)x;
    obj_image.insert(y);
  }
  for (const auto& o : B.objects)
    if (!obj_image.count(o)) {
      res.ok = false;
      res.failing = "objects: " + o + " not in the image";
      return res;
    }
  for (const auto& a : A.objects)
    for (const auto& c : A.objects) {
      for (const auto& g : B.hmors_between(F.on_obj(a), F.on_obj(c))) {
        bool hit = false;
        for (const auto& f : A.hmors_between(a, c))
          if (F.on_hmor(f) == g) {
            hit = true;
            break;
          }
        if (!hit) {
          res.ok = false;
          res.failing = "hmor fullness at (" + a + "," + c + "): " + g;
          return res;
        }
      }
      for (const auto& g : B.vmors_between(F.on_obj(a), F.on_obj(c))) {
        bool hit = false;
        for (const auto& f : A.vmors_between(a, c))
          if (F.on_vmor(f) == g) {
            hit = true;
            break;
          }
        if (!hit) {
          res.ok = false;
          res.failing = "vmor fullness at (" + a + "," + c + "): " + g;
          return res;
        }
      }
    }
  std::string detail;
  if (!ff_on_squares(F, &detail)) {
    res.ok = false;
    res.failing = "square fully-faithfulness: " + detail;
  }
  return res;
}

bool naive_fib_condition(const DoubleFunctor& F, const std::string& tag, std::string* detail) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  auto set_detail = [&](const std::string& d) {
    if (detail) *detail = d;
  };
  if (tag == "f1") {
    for (const auto& a : A.objects)
      for (const auto& v : B.vmors) {
        if (v.tgt != F.on_obj(a)) continue;
        if (!is_vertical_equivalence(B, v.name)) continue;
        bool hit = false;
        for (const auto& u : A.vmors) {
          if (u.tgt != a || F.on_vmor(u.name) != v.name) continue;
          if (is_vertical_equivalence(A, u.name)) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          set_detail("no lift of vertical equivalence " + v.name + " at " + a);
          return false;
        }
      }
    return true;
  }
  if (tag == "f2") {
    for (const auto& u : A.vmors)
      for (const auto& cp : find_companions(B, F.on_vmor(u.name))) {
        bool hit = false;
        for (const auto& up : find_companions(A, u.name))
          if (F.on_hmor(up.hmor) == cp.hmor && F.on_sq(up.phi) == cp.phi &&
              F.on_sq(up.psi) == cp.psi) {
            hit = true;
            break;
          }
        if (!hit) {
          set_detail("companion pair of " + F.on_vmor(u.name) + " does not lift at " + u.name);
          return false;
        }
      }
    return true;
  }
  if (tag == "f3") {
    for (const auto& u : A.vmors)
      for (const auto& cp : find_conjoints(B, F.on_vmor(u.name))) {
        bool hit = false;
        for (const auto& up : find_conjoints(A, u.name))
          if (F.on_hmor(up.hmor) == cp.hmor && F.on_sq(up.eps) == cp.eps &&
              F.on_sq(up.eta) == cp.eta) {
            hit = true;
            break;
          }
        if (!hit) {
          set_detail("conjoint pair of " + F.on_vmor(u.name) + " does not lift at " + u.name);
          return false;
        }
      }
    return true;
  }
  if (tag == "f4") {
    for (const auto& f : A.hmors)
      for (const auto& g : B.hmors) {
        if (g.src != F.on_obj(f.src) || g.tgt != F.on_obj(f.tgt)) continue;
        for (const auto& beta : h2isos(B, g.name, F.on_hmor(f.name))) {
          bool hit = false;
          for (const auto& f2 : A.hmors_between(f.src, f.tgt)) {
            if (F.on_hmor(f2) != g.name) continue;
            for (const auto& alpha : h2isos(A, f2, f.name))
              if (F.on_sq(alpha) == beta) {
                hit = true;
                break;
              }
            if (hit) break;
          }
          if (!hit) {
            set_detail("2-iso " + beta + ": " + g.name + " ~ F(" + f.name + ") does not lift");
            return false;
          }
        }
      }
    return true;
  }
  if (tag == "f5") {
    for (const auto& u : A.vmors)
      for (const auto& v : B.vmors) {
        if (v.src != F.on_obj(u.src) || v.tgt != F.on_obj(u.tgt)) continue;
        for (const auto& beta : v2isos(B, v.name, F.on_vmor(u.name))) {
          bool hit = false;
          for (const auto& u2 : A.vmors_between(u.src, u.tgt)) {
            if (F.on_vmor(u2) != v.name) continue;
            for (const auto& alpha : v2isos(A, u2, u.name))
              if (F.on_sq(alpha) == beta) {
                hit = true;
                break;
              }
            if (hit) break;
          }
          if (!hit) {
            set_detail("2-iso " + beta + ": " + v.name + " ~ F(" + u.name + ") does not lift");
            return false;
          }
        }
      }
    return true;
  }
  throw FoldsError("BadArgument", "unknown naive fibration condition " + tag);
}

NaiveFibCheck is_naive_fibration(const DoubleFunctor& F) {
  NaiveFibCheck res;
  for (const std::string tag : {"f1", "f2", "f3", "f4", "f5"}) {
    std::string detail;
    if (!naive_fib_condition(F, tag, &detail)) {
      res.ok = false;
      res.failing_condition = tag;
      res.detail = detail;
      return res;
    }
  }
  return res;
}

bool biequiv_w3prime(const DoubleFunctor& F, std::string* detail) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (const auto& a : A.objects)
    for (const auto& a2 : A.objects)
      for (const auto& f : B.hmors_between(F.on_obj(a), F.on_obj(a2))) {
        bool hit = false;
        for (const auto& g : A.hmors_between(a, a2))
          if (!h2isos(B, f, F.on_hmor(g)).empty()) {
            hit = true;
            break;
          }
        if (!hit) {
          if (detail) *detail = "no 2-iso " + f + " ~ Fg at (" + a + "," + a2 + ")";
          return false;
        }
      }
  return true;
}

BiequivCheck is_double_biequivalence(const DoubleFunctor& F) {
  BiequivCheck res;
  for (const std::string tag : {"w1", "w2", "w3", "w4"}) {
    std::string detail;
    if (!biequiv_condition(F, tag, &detail)) {
      res.ok = false;
      res.failing_condition = tag;
      res.detail = detail;
      return res;
    }
  }
  return res;
}

ClassifyReport classify(const DoubleFunctor& F) {
  ClassifyReport rep;
  rep.trivial_fibration = is_trivial_fibration(F).ok;
  rep.naive_fibration = is_naive_fibration(F).ok;
  rep.biequivalence = is_double_biequivalence(F).ok;
  for (const auto& i : generating_cofibrations()) rep.rlp_I[i.name] = has_rlp(F, i).ok;
  for (const auto& j : anodyne_generators()) rep.rlp_J[j.name] = has_rlp(F, j).ok;
  rep.src_equipment = is_equipment(*F.src).ok;
  rep.tgt_equipment = is_equipment(*F.tgt).ok;
  bool rlpI_all = true;
  for (const auto& [n, v] : rep.rlp_I) {
    (void)n;
    rlpI_all = rlpI_all && v;
  }
  rep.tf_iff_rlpI = (rep.trivial_fibration == rlpI_all);
  if (rep.src_equipment) {
    bool f145 = naive_fib_condition(F, "f1") && naive_fib_condition(F, "f4") &&
                naive_fib_condition(F, "f5");
    rep.nf_iff_f145 = (rep.naive_fibration == f145);
  }
  if (rep.src_equipment && rep.tgt_equipment) {
    rep.tf_iff_nf_and_biequiv =
        (rep.trivial_fibration == (rep.naive_fibration && rep.biequivalence));
    bool others = biequiv_condition(F, "w1", nullptr) && biequiv_condition(F, "w2", nullptr) &&
                  biequiv_condition(F, "w4", nullptr);
    bool with_w3p = others && biequiv_w3prime(F);
    rep.w3_iff_w3prime = (rep.biequivalence == with_w3p);
  }
  return rep;
}

}  // namespace folds
