// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "folds/classify.hpp"
#include "folds/dblcat.hpp"
#include "folds/logic.hpp"
#include "folds/nerve.hpp"
#include "folds/presheaf.hpp"
#include "folds/shape.hpp"
#include "folds/signature.hpp"

using namespace folds;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", n, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::shared_ptr<const FiniteDoubleCategory> dc(const std::string& n) {
  return builtin_double_category(n);
}

std::map<std::string, Nerve> nerve_cache;
const Nerve& dbl_nerve(const std::shared_ptr<const FiniteDoubleCategory>& X) {
  auto it = nerve_cache.find(X->name);
  if (it == nerve_cache.end())
    it = nerve_cache.emplace(X->name, compute_nerve(*X, *builtin_diagram("dblcat"))).first;
  return it->second;
}

// Cat-level surjective + full + faithful, for horizontally embedded corpus
// members (vertical data trivial).
bool is_cat_sff(const DoubleFunctor& F) {
  std::set<std::string> img;
  for (const auto& [a, b] : F.obj) {
    (void)a;
    img.insert(b);
  }
  for (const auto& o : F.tgt->objects)
    if (!img.count(o)) return false;
  for (const auto& a : F.src->objects)
    for (const auto& c : F.src->objects) {
      std::set<std::string> himg;
      for (const auto& f : F.src->hmors_between(a, c)) {
        if (!himg.insert(F.on_hmor(f)).second) return false;  // faithful
      }
      for (const auto& g : F.tgt->hmors_between(F.on_obj(a), F.on_obj(c)))
        if (!himg.count(g)) return false;  // full
    }
  return true;
}

void criterion1() {
  auto t0 = Clock::now();
  auto corpus = corpus_functors();
  int checked = 0, agreements = 0;
  std::string bad;
  auto I = generating_cofibrations();
  for (const auto& F : corpus) {
    bool tf = is_trivial_fibration(*F).ok;
    bool rlp = true;
    for (const auto& i : I) rlp = rlp && has_rlp(*F, i).ok;
    ++checked;
    if (tf == rlp)
      ++agreements;
    else if (bad.empty())
      bad = F->name;
  }
  double dt = secs_since(t0);
  bool ok = checked >= 30 && agreements == checked && dt < 60.0;
  report(1, "trivial fibration iff RLP(I)", ok,
         std::to_string(agreements) + "/" + std::to_string(checked) + " agree over " +
             std::to_string(checked) + " functors in " + std::to_string(dt) + "s" +
             (bad.empty() ? "" : ", first disagreement " + bad));
}

void criterion2() {
  auto J = anodyne_generators();
  int checked = 0, agreements = 0;
  std::string bad;
  for (const auto& n : builtin_double_category_names()) {
    auto A = dc(n);
    bool eq = is_equipment(*A).ok;
    DoubleFunctor bang = bang_functor(A);
    bool rlp = true;
    for (const auto& j : J) rlp = rlp && has_rlp(bang, j).ok;
    ++checked;
    if (eq == rlp)
      ++agreements;
    else if (bad.empty())
      bad = n;
  }
  bool ok = checked >= 15 && agreements == checked;
  report(2, "equipment iff naive fibrant", ok,
         std::to_string(agreements) + "/" + std::to_string(checked) + " double categories agree" +
             (bad.empty() ? "" : ", first disagreement " + bad));
}

void criterion3() {
  auto j2 = builtin_inclusion("j2");
  auto j3 = builtin_inclusion("j3");
  int pairs = 0;
  std::string bad;
  for (const auto& n : builtin_double_category_names()) {
    auto A = dc(n);
    for (const auto& v : A->vmors) {
      HomFilter pin = [&](char sort, const std::string& g, const std::string& c) {
        if (sort == 'v' && g == "u") return c == v.name;
        return true;
      };
      size_t lifts2 = solve_homs(*j2.cod, *A, pin).size();
      size_t comps = find_companions(*A, v.name).size();
      size_t lifts3 = solve_homs(*j3.cod, *A, pin).size();
      size_t conjs = find_conjoints(*A, v.name).size();
      ++pairs;
      if (lifts2 != comps || lifts3 != conjs) {
        if (bad.empty())
          bad = n + " at " + v.name + ": " + std::to_string(lifts2) + "/" +
                std::to_string(comps) + " companions, " + std::to_string(lifts3) + "/" +
                std::to_string(conjs) + " conjoints";
      }
    }
  }
  report(3, "companion/conjoint lifting bijection", bad.empty(),
         std::to_string(pairs) + " verticals counted exactly" + (bad.empty() ? "" : "; " + bad));
}

void criterion4() {
  int checked = 0, violations = 0;
  std::string bad;
  for (const auto& F : corpus_functors()) {
    if (!is_equipment(*F->src).ok || !is_equipment(*F->tgt).ok) continue;
    ++checked;
    bool nf = is_naive_fibration(*F).ok;
    bool f145 = naive_fib_condition(*F, "f1") && naive_fib_condition(*F, "f4") &&
                naive_fib_condition(*F, "f5");
    bool tf = is_trivial_fibration(*F).ok;
    bool we = is_double_biequivalence(*F).ok;
    if (nf != f145 || tf != (nf && we)) {
      ++violations;
      if (bad.empty()) bad = F->name;
    }
  }
  report(4, "equipment reductions NF=f1&f4&f5, TF=NF&biequiv", violations == 0,
         std::to_string(checked) + " functors between equipments, " +
             std::to_string(violations) + " violations" + (bad.empty() ? "" : " — " + bad));
}

void criterion5() {
  auto D = builtin_diagram("dblcat");
  int tfs = 0, fw_ok = 0;
  std::string bad;
  for (const auto& F : corpus_functors()) {
    if (!is_trivial_fibration(*F).ok) continue;
    ++tfs;
    const Nerve& NA = dbl_nerve(F->src);
    const Nerve& NB = dbl_nerve(F->tgt);
    if (is_fiberwise_surjective(nerve_map(*F, *D, NA, NB)).ok)
      ++fw_ok;
    else if (bad.empty())
      bad = F->name;
  }
  // Cat half: surjective-full-faithful functors between embedded categories.
  auto Dcat = builtin_diagram("cat");
  std::set<std::string> cat_objs = {"one", "h2", "h3", "he2", "he3"};
  int cats = 0, cat_ok = 0;
  for (const auto& F : corpus_functors()) {
    if (!cat_objs.count(F->src->name) || !cat_objs.count(F->tgt->name)) continue;
    if (!is_cat_sff(*F)) continue;
    ++cats;
    Nerve NA = compute_nerve(*F->src, *Dcat);
    Nerve NB = compute_nerve(*F->tgt, *Dcat);
    if (is_fiberwise_surjective(nerve_map(*F, *Dcat, NA, NB)).ok)
      ++cat_ok;
    else if (bad.empty())
      bad = "cat:" + F->name;
  }
  bool ok = tfs > 0 && fw_ok == tfs && cats > 0 && cat_ok == cats;
  report(5, "trivial fibrations give fiberwise surjective nerves", ok,
         std::to_string(fw_ok) + "/" + std::to_string(tfs) + " dblcat, " +
             std::to_string(cat_ok) + "/" + std::to_string(cats) + " cat" +
             (bad.empty() ? "" : " — " + bad));
}

void criterion6and7() {
  auto t0 = Clock::now();
  // Cat side: the iso-comma span of the equivalence 1 ~ E2 has apex the
  // chaotic two-object category, with legs onto 1 and (isomorphically) E2.
  auto Dcat = builtin_diagram("cat");
  auto sig_cat = Dcat->sig;
  auto F = builtin_functor("bang:he2");
  Nerve NP = compute_nerve(*F->src, *Dcat);
  Nerve N1 = compute_nerve(*F->tgt, *Dcat);
  Span cat_span;
  cat_span.apex = NP.structure;
  cat_span.left = nerve_map(*F, *Dcat, NP, N1);
  cat_span.right = identity_nat(NP.structure);
  auto cat_sentences = generate_sentences(sig_cat, 4, 200, 0);
  InvarianceRun cat_run = run_invariance(cat_span, cat_sentences);

  // DblCat side. V2 -> 1 is not a trivial fibration and its nerve is not
  // fiberwise surjective, so the harness must reject it; the run proper uses
  // the trivial fibration Sq(iso) -> 1 with the same parameters.
  auto Ddbl = builtin_diagram("dblcat");
  auto sig_dbl = Ddbl->sig;
  auto Fv = builtin_functor("bang:v2");
  {
    const Nerve& NA = dbl_nerve(Fv->src);
    const Nerve& NB = dbl_nerve(Fv->tgt);
    Span vspan;
    vspan.apex = NA.structure;
    vspan.left = nerve_map(*Fv, *Ddbl, NA, NB);
    vspan.right = identity_nat(NA.structure);
    InvarianceRun vrun = run_invariance(vspan, {});
    if (vrun.applicable) {
      report(6, "invariance theorem", false, "V2 -> 1 was not rejected as NotApplicable");
      report(7, "inexpressibility witness", false, "skipped");
      return;
    }
  }
  auto Ft = builtin_functor("bang:sqiso");
  bool ft_tf = is_trivial_fibration(*Ft).ok;
  const Nerve& NA = dbl_nerve(Ft->src);
  const Nerve& NB = dbl_nerve(Ft->tgt);
  Span dbl_span;
  dbl_span.apex = NA.structure;
  dbl_span.left = nerve_map(*Ft, *Ddbl, NA, NB);
  dbl_span.right = identity_nat(NA.structure);
  auto dbl_sentences = generate_sentences(sig_dbl, 4, 200, 0);
  InvarianceRun dbl_run = run_invariance(dbl_span, dbl_sentences);

  double dt = secs_since(t0);
  bool ok = cat_run.applicable && cat_run.disagreements.empty() &&
            cat_run.agree_true + cat_run.agree_false == 200 && ft_tf && dbl_run.applicable &&
            dbl_run.disagreements.empty() &&
            dbl_run.agree_true + dbl_run.agree_false == 200 && dt < 300.0;
  report(6, "invariance theorem", ok,
         "cat span: " + std::to_string(cat_run.agree_true) + " true / " +
             std::to_string(cat_run.agree_false) + " false, dblcat span (Sq(iso) -> 1): " +
             std::to_string(dbl_run.agree_true) + " true / " +
             std::to_string(dbl_run.agree_false) + " false, " +
             std::to_string(cat_run.disagreements.size() + dbl_run.disagreements.size()) +
             " disagreements, V2 -> 1 rejected, " + std::to_string(dt) + "s");

  size_t left_objs = cat_span.left.dst->at("O").size();
  size_t right_objs = cat_span.right.dst->at("O").size();
  bool ok7 = left_objs == 1 && right_objs == 2 && cat_run.disagreements.empty();
  report(7, "inexpressibility witness", ok7,
         "object counts " + std::to_string(left_objs) + " vs " + std::to_string(right_objs) +
             " differ while all 200 generated sentences agree: 'this category has a single "
             "object' lies outside the generated fragment");
}

void criterion8() {
  std::vector<std::shared_ptr<const FiniteDoubleCategory>> corpus;
  for (const auto& n : builtin_double_category_names()) corpus.push_back(dc(n));
  auto rep = check_latching_table(corpus);
  int rows_ok = 0;
  for (const auto& r : rep.rows)
    if (r.carrier_ok && r.matching_ok) ++rows_ok;
  report(8, "latching table", rep.ok && rep.boundary_counts_ok,
         "boundary counts {s,t},{u,d},{l,r},4-fan verified; " + std::to_string(rows_ok) + "/" +
             std::to_string(rep.rows.size()) + " Hom/matching bijections over " +
             std::to_string(corpus.size()) + " double categories" +
             (rep.detail.empty() ? "" : " — " + rep.detail));
}

void criterion9() {
  // Every builtin validates.
  int valid = 0, total = 0;
  std::string bad;
  for (const auto& n : builtin_double_category_names()) {
    ++total;
    if (validate_double_category(*dc(n)).ok())
      ++valid;
    else if (bad.empty())
      bad = n;
  }
  // 50 seeded mutations, each caught.
  std::mt19937_64 eng(20240817);
  const std::vector<std::string> targets = {"sq2", "sqiso", "hxv", "parallel", "sqsigmai"};
  int caught = 0, trials = 0;
  while (trials < 50) {
    FiniteDoubleCategory A = *dc(targets[eng() % targets.size()]);
    int which = static_cast<int>(eng() % 5);
    auto pick_other = [&](const std::vector<std::string>& pool, const std::string& cur) {
      std::string out = cur;
      while (pool.size() > 1 && out == cur) out = pool[eng() % pool.size()];
      return out;
    };
    std::vector<std::string> hnames, vnames, snames;
    for (const auto& h : A.hmors) hnames.push_back(h.name);
    for (const auto& v : A.vmors) vnames.push_back(v.name);
    for (const auto& s : A.squares) snames.push_back(s.name);
    bool mutated = false;
    auto mutate_tab = [&](auto& tab, const std::vector<std::string>& pool) {
      if (tab.empty()) return;
      auto it = std::next(tab.begin(), eng() % tab.size());
      std::string other = pick_other(pool, it->second);
      mutated = other != it->second;
      it->second = other;
    };
    if (which == 0) mutate_tab(A.hcomp_h, hnames);
    else if (which == 1) mutate_tab(A.vcomp_v, vnames);
    else if (which == 2) mutate_tab(A.hcomp_sq, snames);
    else if (which == 3) mutate_tab(A.vcomp_sq, snames);
    else mutate_tab(A.esq, snames);
    if (!mutated) continue;
    ++trials;
    if (!validate_double_category(A).ok()) ++caught;
  }
  bool ok = valid == total && caught == 50;
  report(9, "law-checker soundness", ok,
         std::to_string(valid) + "/" + std::to_string(total) + " builtins valid, " +
             std::to_string(caught) + "/50 mutations caught" + (bad.empty() ? "" : " — " + bad));
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6and7();
  criterion8();
  criterion9();
  std::printf("acceptance: %s (%d failing) in %.1fs\n", failures == 0 ? "ALL PASS" : "FAILURES",
              failures, secs_since(t0));
  return failures == 0 ? 0 : 1;
}
