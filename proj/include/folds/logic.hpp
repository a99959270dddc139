#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folds/presheaf.hpp"
#include "folds/report.hpp"
#include "folds/signature.hpp"

namespace folds {

/// Sort annotation K(a1,...,an): one argument variable per generating arrow
/// out of K, in the signature's declared arrow order. Composite dependencies
/// are derived and checked for compatibility.
struct SortAnnotation {
  std::string kind;
  std::vector<std::string> args;

  bool operator==(const SortAnnotation& o) const { return kind == o.kind && args == o.args; }
};

struct Formula;
using FormulaP = std::shared_ptr<const Formula>;

struct Formula {
  enum class Tag { True, False, Atom, And, Or, Implies, Forall, Exists };
  Tag tag = Tag::True;
  std::string rel;                // Atom
  std::vector<std::string> args;  // Atom: one per generating arrow
  std::string var;                // quantifiers
  SortAnnotation sort;
  FormulaP a, b;  // children; quantifier body in a
};

bool formula_equal(const FormulaP& x, const FormulaP& y);

FormulaP f_true();
FormulaP f_false();
FormulaP f_atom(std::string rel, std::vector<std::string> args);
FormulaP f_and(FormulaP a, FormulaP b);
FormulaP f_or(FormulaP a, FormulaP b);
FormulaP f_implies(FormulaP a, FormulaP b);
FormulaP f_forall(std::string var, SortAnnotation s, FormulaP body);
FormulaP f_exists(std::string var, SortAnnotation s, FormulaP body);

/// A formula together with the sorts of every variable occurring in it
/// (bound or free) over a fixed signature.
struct FormulaUnit {
  std::shared_ptr<const FoldsSignature> sig;
  FormulaP root;
  std::map<std::string, SortAnnotation> sorts;
};

/// Ordered variable context (a presheaf of variables).
struct Context {
  std::shared_ptr<const FoldsSignature> sig;
  std::vector<std::pair<std::string, SortAnnotation>> vars;  // dependency order

  bool has(const std::string& v) const;
  Presheaf to_presheaf() const;
};

/// Parse a formula, optionally preceded by a context declaration
/// `[x:O, f:A(x,x)]` for its free variables. Every variable must be declared
/// (by the prefix or a quantifier) before use; shadowing is rejected.
struct ParsedFormula {
  FormulaUnit unit;
  Context free_context;
};
ParsedFormula parse_formula(const std::string& text, std::shared_ptr<const FoldsSignature> sig);

std::string print_formula(const FormulaP& f);
std::string print_formula_with_context(const ParsedFormula& pf);

/// Free variables (with dependency closure) as an ordered context.
Context free_vars(const FormulaUnit& u);

/// Structural well-formedness over the unit's signature: sorts well-typed,
/// atom families compatible, quantifier dependency rule.
ValidationReport validate_formula(const FormulaUnit& u);

/// Satisfaction over an L-structure; alpha interprets (at least) the free
/// variables of phi.
bool satisfies(const Presheaf& M, const FormulaUnit& phi,
               const std::map<std::string, std::string>& alpha);

struct GeneratorConfig {
  double connective = 0.4;
  double quantifier = 0.4;
  double atom = 0.2;
};

/// Deterministic seeded sentence generation; every output passes
/// validate_formula and is closed.
std::vector<FormulaUnit> generate_sentences(std::shared_ptr<const FoldsSignature> sig, int depth,
                                            int count, uint64_t seed,
                                            const GeneratorConfig& cfg = {});

enum class Verdict { AgreeTrue, AgreeFalse, Disagree, NotApplicable };

struct InvarianceResult {
  Verdict verdict;
  bool left_value = false, right_value = false;
  std::string note;
};

/// Evaluate phi in both feet of the span (through the given interpretations
/// of its free context) and compare. Disagreement indicates a tool defect.
InvarianceResult check_invariance(const Span& span, const FormulaUnit& phi);

struct InvarianceRun {
  bool applicable = true;
  int agree_true = 0, agree_false = 0;
  std::vector<std::string> disagreements;  // printed formulas
};

/// Batch form: verifies the span legs once, then evaluates every sentence.
InvarianceRun run_invariance(const Span& span, const std::vector<FormulaUnit>& sentences);

}  // namespace folds
