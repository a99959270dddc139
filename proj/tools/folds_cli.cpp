// Command-line front end: validation, evaluation, classification, lifting,
// nerve computation, and the invariance harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "folds/classify.hpp"
#include "folds/dblcat.hpp"
#include "folds/logic.hpp"
#include "folds/nerve.hpp"
#include "folds/presheaf.hpp"
#include "folds/shape.hpp"
#include "folds/signature.hpp"

using namespace folds;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Report {
  std::vector<std::pair<std::string, std::string>> kv;
  void add(const std::string& k, const std::string& v) { kv.push_back({k, v}); }
  // Structured output is a self-describing document with stable key order;
  // timings are never part of it.
  void print(const std::string& format) const {
    if (format == "structured") std::cout << "report: folds/1\n";
    for (const auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FoldsError("IOError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

std::shared_ptr<const FoldsSignature> resolve_sig(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_signature(ref.substr(8));
  FoldsSignature s = parse_signature(slurp(ref));
  auto rep = validate_signature(s);
  if (!rep.ok()) throw FoldsError("ValidationFailed", rep.summary());
  return std::make_shared<const FoldsSignature>(std::move(s));
}

std::shared_ptr<const FiniteDoubleCategory> resolve_dc(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_double_category(ref.substr(8));
  return std::make_shared<const FiniteDoubleCategory>(parse_double_category(slurp(ref)));
}

std::shared_ptr<const DoubleFunctor> resolve_functor(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_functor(ref.substr(8));
  std::string text = slurp(ref);
  // Functor files reference their endpoints by source:/target: lines.
  std::string srcref, tgtref;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("source:", 0) == 0) srcref = line.substr(7);
    if (line.rfind("target:", 0) == 0) tgtref = line.substr(7);
  }
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  srcref = strip(srcref);
  tgtref = strip(tgtref);
  if (srcref.empty() || tgtref.empty())
    throw FoldsError("SyntaxError", "functor file needs source:/target: references");
  return std::make_shared<const DoubleFunctor>(
      parse_double_functor(text, resolve_dc(srcref), resolve_dc(tgtref)));
}

int cmd_validate(const std::vector<std::string>& paths, const std::string& sigref,
                 bool builtins, const std::string& format) {
  Report rep;
  bool failed = false;
  if (builtins) {
    for (const auto& which : {"cat", "twocat", "dblcat"}) {
      auto sig = builtin_signature(which);
      rep.add(std::string("signature ") + which, "ok");
      auto D = builtin_diagram(which);
      std::vector<std::shared_ptr<const FiniteDoubleCategory>> corpus = {
          builtin_double_category("one"), builtin_double_category("h2"),
          builtin_double_category("v2"), builtin_double_category("sqiso"),
          builtin_double_category("hxv")};
      auto cc = cross_check_signature(*D, corpus);
      rep.add(std::string("diagram cross-check ") + which, cc.ok() ? "ok" : cc.summary());
      failed = failed || !cc.ok();
    }
    for (const auto& n : builtin_double_category_names()) {
      auto v = validate_double_category(*builtin_double_category(n));
      rep.add("dblcat " + n, v.ok() ? "ok" : v.summary());
      failed = failed || !v.ok();
    }
  }
  for (const auto& p : paths) {
    auto dot = p.rfind('.');
    std::string ext = dot == std::string::npos ? "" : p.substr(dot + 1);
    if (ext == "sig") {
      FoldsSignature s = parse_signature(slurp(p));
      auto r = validate_signature(s);
      rep.add(p, r.ok() ? "ok" : r.summary());
      failed = failed || !r.ok();
    } else if (ext == "dc") {
      auto r = validate_double_category(parse_double_category(slurp(p)));
      rep.add(p, r.ok() ? "ok" : r.summary());
      failed = failed || !r.ok();
    } else if (ext == "shape") {
      auto r = validate_presentation(parse_presentation(slurp(p)));
      rep.add(p, r.ok() ? "ok" : r.summary());
      failed = failed || !r.ok();
    } else if (ext == "psh") {
      if (sigref.empty()) throw FoldsError("Usage", "presheaf validation needs --sig");
      Presheaf X = parse_presheaf(slurp(p), resolve_sig(sigref));
      auto r = validate_presheaf(X);
      if (r.ok()) {
        auto ls = is_l_structure(X);
        rep.add(p, ls.ok ? "ok (L-structure)"
                         : "ok (presheaf; not an L-structure at " + ls.kind + ": " + ls.e1 +
                               " vs " + ls.e2 + ")");
      } else {
        rep.add(p, r.summary());
        failed = true;
      }
    } else if (ext == "dfun") {
      auto F = resolve_functor(p);
      auto r = validate_double_functor(*F);
      rep.add(p, r.ok() ? "ok" : r.summary());
      failed = failed || !r.ok();
    } else if (ext == "fml") {
      if (sigref.empty()) throw FoldsError("Usage", "formula validation needs --sig");
      parse_formula(slurp(p), resolve_sig(sigref));
      rep.add(p, "ok");
    } else {
      throw FoldsError("Usage", "unknown file type: " + p);
    }
  }
  rep.print(format);
  return failed ? kFail : kOk;
}

int cmd_classify(const std::string& functor_ref, const std::string& format) {
  auto F = resolve_functor(functor_ref);
  auto v = validate_double_functor(*F);
  if (!v.ok()) {
    std::cout << "invalid functor: " << v.summary() << "\n";
    return kFail;
  }
  ClassifyReport r = classify(*F);
  Report rep;
  rep.add("functor", F->name);
  rep.add("trivial_fibration", r.trivial_fibration ? "true" : "false");
  rep.add("naive_fibration", r.naive_fibration ? "true" : "false");
  rep.add("double_biequivalence", r.biequivalence ? "true" : "false");
  for (const auto& [n, b] : r.rlp_I) rep.add("rlp_" + n, b ? "true" : "false");
  for (const auto& [n, b] : r.rlp_J) rep.add("rlp_" + n, b ? "true" : "false");
  rep.add("source_equipment", r.src_equipment ? "true" : "false");
  rep.add("target_equipment", r.tgt_equipment ? "true" : "false");
  auto flag = [&](const char* k, const std::optional<bool>& v2) {
    if (v2) rep.add(k, *v2 ? "pass" : "FAIL");
  };
  flag("consistent_tf_iff_rlpI", r.tf_iff_rlpI);
  flag("consistent_nf_iff_f1f4f5", r.nf_iff_f145);
  flag("consistent_tf_iff_nf_and_biequiv", r.tf_iff_nf_and_biequiv);
  flag("consistent_w3_iff_w3prime", r.w3_iff_w3prime);
  rep.print(format);
  bool flags_ok = (!r.tf_iff_rlpI || *r.tf_iff_rlpI) && (!r.nf_iff_f145 || *r.nf_iff_f145) &&
                  (!r.tf_iff_nf_and_biequiv || *r.tf_iff_nf_and_biequiv) &&
                  (!r.w3_iff_w3prime || *r.w3_iff_w3prime);
  return flags_ok ? kOk : kFail;
}

int cmd_nerve(const std::string& diagram, const std::string& input, const std::string& out_path,
              const std::string& format) {
  auto D = builtin_diagram(diagram);
  auto X = resolve_dc(input);
  Nerve N = compute_nerve(*X, *D);
  std::string text = print_presheaf(*N.structure);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
    Report rep;
    rep.add("nerve", input + " under " + diagram);
    rep.add("output", out_path);
    rep.print(format);
  }
  return kOk;
}

int cmd_lift(const std::string& functor_ref, const std::string& against,
             const std::string& format) {
  auto F = resolve_functor(functor_ref);
  std::vector<ShapeInclusion> gens;
  if (against == "I")
    gens = generating_cofibrations();
  else if (against == "J")
    gens = anodyne_generators();
  else if (against.size() == 2 && (against[0] == 'i' || against[0] == 'j'))
    gens = {builtin_inclusion(against)};
  else if (file_exists(against)) {
    auto resolve_shape = [](const std::string& ref) -> std::shared_ptr<const ShapePresentation> {
      if (ref.rfind("builtin:", 0) == 0) return builtin_shape(ref.substr(8));
      auto P = parse_presentation(slurp(ref));
      auto rep = validate_presentation(P);
      if (!rep.ok()) throw FoldsError("ValidationFailed", ref + ": " + rep.summary());
      return std::make_shared<const ShapePresentation>(std::move(P));
    };
    gens = {parse_inclusion(slurp(against), resolve_shape)};
  } else
    throw FoldsError("Usage", "--against expects I, J, a generator name i1..j5, or a file");
  Report rep;
  bool all = true;
  for (const auto& i : gens) {
    auto r = has_rlp(*F, i);
    rep.add("rlp_" + i.name, r.ok ? "true" : "false");
    all = all && r.ok;
  }
  rep.add("all", all ? "true" : "false");
  rep.print(format);
  return kOk;
}

int cmd_eval(const std::string& sigref, const std::string& structure, const std::string& nerve_of,
             const std::string& diagram, const std::string& formula,
             const std::string& interp_path, const std::string& format) {
  std::shared_ptr<const FoldsSignature> sig;
  std::shared_ptr<const Presheaf> M;
  if (!nerve_of.empty()) {
    auto D = builtin_diagram(diagram);
    sig = D->sig;
    Nerve N = compute_nerve(*resolve_dc(nerve_of), *D);
    M = N.structure;
  } else {
    if (sigref.empty()) throw FoldsError("Usage", "eval needs --sig with --structure");
    sig = resolve_sig(sigref);
    M = std::make_shared<const Presheaf>(parse_presheaf(slurp(structure), sig));
  }
  std::string ftext = file_exists(formula) ? slurp(formula) : formula;
  ParsedFormula pf = parse_formula(ftext, sig);
  std::map<std::string, std::string> alpha;
  if (!interp_path.empty()) {
    auto ctx = std::make_shared<const Presheaf>(pf.free_context.to_presheaf());
    NatTransf f = parse_nattransf(slurp(interp_path), ctx, M);
    auto v = validate_nattransf(f);
    if (!v.ok()) throw FoldsError("ValidationFailed", "interpretation: " + v.summary());
    alpha = f.comp;
  } else if (!pf.free_context.vars.empty()) {
    throw FoldsError("Usage", "formula has free variables; provide --interp");
  }
  bool value = satisfies(*M, pf.unit, alpha);
  Report rep;
  rep.add("formula", print_formula_with_context(pf));
  rep.add("value", value ? "true" : "false");
  rep.print(format);
  return kOk;
}

int cmd_invariance(const std::string& span_path, const std::string& functor_ref,
                   const std::string& diagram, int depth, int count, uint64_t seed,
                   const std::string& format) {
  Span span;
  std::string desc;
  std::shared_ptr<const FoldsSignature> sig;
  if (!functor_ref.empty()) {
    auto F = resolve_functor(functor_ref);
    auto tf = is_trivial_fibration(*F);
    if (!tf.ok) {
      Report rep;
      rep.add("verdict", "NotApplicable");
      rep.add("reason", "functor is not a trivial fibration: " + tf.failing);
      rep.print(format);
      return kFail;
    }
    auto D = builtin_diagram(diagram);
    sig = D->sig;
    Nerve NA = compute_nerve(*F->src, *D);
    Nerve NB = compute_nerve(*F->tgt, *D);
    span.apex = NA.structure;
    span.left = nerve_map(*F, *D, NA, NB);
    span.right = identity_nat(NA.structure);
    desc = "nerve span of " + F->name + " under " + diagram;
  } else {
    // Span file: either two functor references plus a diagram, or presheaf
    // legs over a signature.
    std::map<std::string, std::string> kv;
    std::istringstream in(slurp(span_path));
    std::string line;
    while (std::getline(in, line)) {
      line = strip_comment(line);
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      kv[strip(line.substr(0, colon))] = strip(line.substr(colon + 1));
    }
    if (kv.count("diagram")) {
      auto D = builtin_diagram(kv.at("diagram"));
      sig = D->sig;
      auto L = resolve_functor(kv.at("left"));
      auto R = resolve_functor(kv.at("right"));
      if (L->src.get() != R->src.get())
        throw FoldsError("SpanMismatch", "span legs must share their source");
      Nerve NP = compute_nerve(*L->src, *D);
      Nerve NL = compute_nerve(*L->tgt, *D);
      Nerve NR = compute_nerve(*R->tgt, *D);
      span.apex = NP.structure;
      span.left = nerve_map(*L, *D, NP, NL);
      span.right = nerve_map(*R, *D, NP, NR);
      desc = "nerve span of " + L->name + " / " + R->name;
    } else {
      sig = resolve_sig(kv.at("sig"));
      auto apex = std::make_shared<const Presheaf>(parse_presheaf(slurp(kv.at("apex")), sig));
      auto lfoot = std::make_shared<const Presheaf>(parse_presheaf(slurp(kv.at("leftfoot")), sig));
      auto rfoot =
          std::make_shared<const Presheaf>(parse_presheaf(slurp(kv.at("rightfoot")), sig));
      span.apex = apex;
      span.left = parse_nattransf(slurp(kv.at("left")), apex, lfoot);
      span.right = parse_nattransf(slurp(kv.at("right")), apex, rfoot);
      auto v = span.validate();
      if (!v.ok()) throw FoldsError("ValidationFailed", "span: " + v.summary());
      desc = "presheaf span from " + span_path;
    }
  }
  auto sentences = generate_sentences(sig, depth, count, seed);
  InvarianceRun run = run_invariance(span, sentences);
  Report rep;
  rep.add("span", desc);
  rep.add("sentences", std::to_string(count));
  rep.add("depth", std::to_string(depth));
  rep.add("seed", std::to_string(seed));
  if (!run.applicable) {
    rep.add("verdict", "NotApplicable");
    rep.add("reason", "a span leg is not fiberwise surjective");
    rep.print(format);
    return kFail;
  }
  rep.add("agree_true", std::to_string(run.agree_true));
  rep.add("agree_false", std::to_string(run.agree_false));
  rep.add("disagreements", std::to_string(run.disagreements.size()));
  for (const auto& d : run.disagreements) rep.add("DISAGREE", d);
  rep.print(format);
  return run.disagreements.empty() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FOLDS over double categories: validation, satisfaction, classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text|structured")->check(CLI::IsMember({"text", "structured"}));

  auto* val = app.add_subcommand("validate", "validate input files / builtins");
  std::vector<std::string> val_paths;
  std::string val_sig;
  bool val_builtins = false;
  val->add_option("paths", val_paths, "files to validate (.sig .dc .shape .psh .dfun .fml)");
  val->add_option("--sig", val_sig, "signature for .psh/.fml files");
  val->add_flag("--builtin", val_builtins, "validate the builtin corpus");

  auto* cls = app.add_subcommand("classify", "classify a double functor");
  std::string cls_fun;
  cls->add_option("--functor", cls_fun, "functor reference")->required();

  auto* nrv = app.add_subcommand("nerve", "compute the nerve of a double category");
  std::string nrv_diag = "dblcat", nrv_input, nrv_out;
  nrv->add_option("--diagram", nrv_diag, "cat|twocat|dblcat");
  nrv->add_option("--input", nrv_input, "double category reference")->required();
  nrv->add_option("-o,--output", nrv_out, "output file (default stdout)");

  auto* lft = app.add_subcommand("lift", "right lifting property checks");
  std::string lft_fun, lft_against = "I";
  lft->add_option("--functor", lft_fun, "functor reference")->required();
  lft->add_option("--against", lft_against, "I|J|i1..i5|j1..j5");

  auto* evl = app.add_subcommand("eval", "evaluate a formula in a structure");
  std::string evl_sig, evl_structure, evl_nerve, evl_diag = "dblcat", evl_formula, evl_interp;
  evl->add_option("--sig", evl_sig, "signature reference");
  evl->add_option("--structure", evl_structure, "presheaf file");
  evl->add_option("--nerve", evl_nerve, "double category whose nerve to evaluate in");
  evl->add_option("--diagram", evl_diag, "diagram for --nerve");
  evl->add_option("--formula", evl_formula, "formula file or inline text")->required();
  evl->add_option("--interp", evl_interp, "interpretation file for free variables");

  auto* inv = app.add_subcommand("invariance", "equivalence-invariance harness");
  std::string inv_span, inv_fun, inv_diag = "dblcat";
  int inv_depth = 4, inv_count = 200;
  uint64_t inv_seed = 0;
  inv->add_option("--span", inv_span, "span file");
  inv->add_option("--functor", inv_fun, "trivial fibration reference");
  inv->add_option("--diagram", inv_diag, "cat|twocat|dblcat");
  inv->add_option("--depth", inv_depth, "max quantifier/connective depth");
  inv->add_option("--count", inv_count, "number of sentences");
  inv->add_option("--seed", inv_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*val) return cmd_validate(val_paths, val_sig, val_builtins, format);
    if (*cls) return cmd_classify(cls_fun, format);
    if (*nrv) return cmd_nerve(nrv_diag, nrv_input, nrv_out, format);
    if (*lft) return cmd_lift(lft_fun, lft_against, format);
    if (*evl) return cmd_eval(evl_sig, evl_structure, evl_nerve, evl_diag, evl_formula, evl_interp,
                              format);
    if (*inv) {
      if (inv_span.empty() == inv_fun.empty())
        throw FoldsError("Usage", "provide exactly one of --span / --functor");
      return cmd_invariance(inv_span, inv_fun, inv_diag, inv_depth, inv_count, inv_seed, format);
    }
  } catch (const FoldsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string code = e.code;
    return (code == "SyntaxError" || code == "IOError" || code == "Usage" ||
            code == "UnknownBuiltin")
               ? kUsage
               : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
