#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folds/report.hpp"

namespace folds {

/// A finite double category with fully materialized composition tables.
/// Horizontal morphisms compose along hcomp (diagrammatic key order: first
/// argument is applied first / drawn left), vertical along vcomp; squares
/// compose horizontally (left-then-right) and vertically (top-then-bottom).
struct FiniteDoubleCategory {
  struct HMor {
    std::string name, src, tgt;
  };
  struct VMor {
    std::string name, src, tgt;
  };
  struct Sq {
    std::string name, top, bottom, left, right;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<HMor> hmors;
  std::vector<VMor> vmors;
  std::vector<Sq> squares;

  std::map<std::string, std::string> idh;  // object -> identity hmor
  std::map<std::string, std::string> idv;  // object -> identity vmor
  std::map<std::string, std::string> esq;  // hmor -> vertical identity square e_f
  std::map<std::string, std::string> isq;  // vmor -> horizontal identity square id_u

  // (first, second) -> composite, diagrammatic order.
  std::map<std::pair<std::string, std::string>, std::string> hcomp_h;
  std::map<std::pair<std::string, std::string>, std::string> vcomp_v;
  std::map<std::pair<std::string, std::string>, std::string> hcomp_sq;
  std::map<std::pair<std::string, std::string>, std::string> vcomp_sq;

  const HMor* hmor(const std::string& n) const;
  const VMor* vmor(const std::string& n) const;
  const Sq* square(const std::string& n) const;
  bool has_object(const std::string& n) const;

  std::string hcomp(const std::string& f, const std::string& g) const;  // f then g
  std::string vcomp(const std::string& u, const std::string& v) const;  // u then v
  std::string hcmp_sq(const std::string& a, const std::string& b) const;  // a left of b
  std::string vcmp_sq(const std::string& a, const std::string& b) const;  // a above b

  std::string idh_of(const std::string& obj) const;
  std::string idv_of(const std::string& obj) const;
  std::string esq_of(const std::string& hm) const;
  std::string isq_of(const std::string& vm) const;

  std::vector<std::string> hmors_between(const std::string& a, const std::string& b) const;
  std::vector<std::string> vmors_between(const std::string& a, const std::string& b) const;
  std::vector<std::string> squares_with_boundary(const std::string& top, const std::string& bottom,
                                                 const std::string& left,
                                                 const std::string& right) const;

  /// Inverse of a square under horizontal (resp. vertical) composition, if
  /// it exists. Memoized in mutable caches.
  std::optional<std::string> hinv_sq(const std::string& s) const;
  std::optional<std::string> vinv_sq(const std::string& s) const;

 private:
  mutable std::map<std::string, std::optional<std::string>> hinv_cache_, vinv_cache_;
};

ValidationReport validate_double_category(const FiniteDoubleCategory& A);

struct DoubleFunctor {
  std::string name;
  std::shared_ptr<const FiniteDoubleCategory> src;
  std::shared_ptr<const FiniteDoubleCategory> tgt;
  std::map<std::string, std::string> obj, hmor, vmor, sq;

  std::string on_obj(const std::string& x) const;
  std::string on_hmor(const std::string& x) const;
  std::string on_vmor(const std::string& x) const;
  std::string on_sq(const std::string& x) const;
};

ValidationReport validate_double_functor(const DoubleFunctor& F);
DoubleFunctor identity_functor(std::shared_ptr<const FiniteDoubleCategory> A);
DoubleFunctor compose_functors(const DoubleFunctor& first, const DoubleFunctor& second);
/// The unique functor A -> 1.
DoubleFunctor bang_functor(std::shared_ptr<const FiniteDoubleCategory> A);

/// A finite strict 2-category (plumbing for Sq and the diagram shapes).
struct Finite2Category {
  struct One {
    std::string name, src, tgt;
  };
  struct Two {
    std::string name, src, tgt;  // between parallel 1-cells
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<One> ones;
  std::vector<Two> twos;
  std::map<std::string, std::string> id1;  // object -> identity 1-cell
  std::map<std::string, std::string> id2;  // 1-cell -> identity 2-cell
  std::map<std::pair<std::string, std::string>, std::string> comp1;   // (f,g) -> g.f (f first)
  std::map<std::pair<std::string, std::string>, std::string> vcomp2;  // (a: f=>g, b: g=>h) -> b.a
  std::map<std::pair<std::string, std::string>, std::string> hcomp2;  // (a at A->B, b at B->C)

  const One* one(const std::string& n) const;
  const Two* two(const std::string& n) const;
  std::string c1(const std::string& f, const std::string& g) const;
  std::string v2(const std::string& a, const std::string& b) const;
  std::string h2(const std::string& a, const std::string& b) const;
};

ValidationReport validate_2category(const Finite2Category& A);

/// Double category of squares (2-morphisms v f => f' u).
FiniteDoubleCategory sq_of_2cat(const Finite2Category& A);
/// Horizontal opposite.
FiniteDoubleCategory hop(const FiniteDoubleCategory& A);
/// Horizontal / vertical 2-category of globular squares.
Finite2Category extract_2category(const FiniteDoubleCategory& A, const std::string& direction);
/// Embeddings of a 2-category as a double category (trivial other direction).
FiniteDoubleCategory h_embed(const Finite2Category& A);
FiniteDoubleCategory v_embed(const Finite2Category& A);

FiniteDoubleCategory product(const FiniteDoubleCategory& A, const FiniteDoubleCategory& B);
FiniteDoubleCategory coproduct(const FiniteDoubleCategory& A, const FiniteDoubleCategory& B);

struct CompanionPair {
  std::string hmor;  // f
  std::string phi;   // [f, id, u, e]
  std::string psi;   // [id, f, e, u]
};
struct ConjointPair {
  std::string hmor;  // f: B -> A
  std::string eps;   // [f, id, e, u]
  std::string eta;   // [id, f, u, e]
};

std::vector<CompanionPair> find_companions(const FiniteDoubleCategory& A, const std::string& u);
std::vector<ConjointPair> find_conjoints(const FiniteDoubleCategory& A, const std::string& u);

struct EquipmentCheck {
  bool ok = true;
  std::string failing_vmor;
  std::string reason;  // "no companion" / "no conjoint"
};
EquipmentCheck is_equipment(const FiniteDoubleCategory& A);

struct WeakInverseWitness {
  std::string gamma, eta, eta2, eps, eps2;
};
/// Weakly vertically invertible square: an equivalence in the horizontal
/// 2-category of A, witnessed by a weak inverse and four horizontally
/// invertible squares.
std::optional<WeakInverseWitness> is_weakly_vertically_invertible(const FiniteDoubleCategory& A,
                                                                  const std::string& alpha);

bool is_vertical_equivalence(const FiniteDoubleCategory& A, const std::string& u);

/// Named members of the builtin corpus; see builtin_double_category_names().
std::shared_ptr<const FiniteDoubleCategory> builtin_double_category(const std::string& name);
std::vector<std::string> builtin_double_category_names();

std::shared_ptr<const DoubleFunctor> builtin_functor(const std::string& name);
std::vector<std::string> builtin_functor_names();
/// The functor corpus used by the acceptance suite (identities, collapses,
/// inclusions, projections; >= 30 entries).
std::vector<std::shared_ptr<const DoubleFunctor>> corpus_functors();

FiniteDoubleCategory parse_double_category(const std::string& text);
std::string print_double_category(const FiniteDoubleCategory& A);
DoubleFunctor parse_double_functor(const std::string& text,
                                   std::shared_ptr<const FiniteDoubleCategory> src,
                                   std::shared_ptr<const FiniteDoubleCategory> tgt);
std::string print_double_functor(const DoubleFunctor& F);

}  // namespace folds
