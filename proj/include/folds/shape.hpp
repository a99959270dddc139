#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "folds/dblcat.hpp"
#include "folds/report.hpp"

namespace folds {

/// Expression trees over the generators of a presentation. Composition
/// arguments are in diagrammatic order (first = left / top).
struct HExpr;
struct VExpr;
struct SqExpr;
using HExprP = std::shared_ptr<const HExpr>;
using VExprP = std::shared_ptr<const VExpr>;
using SqExprP = std::shared_ptr<const SqExpr>;

struct HExpr {
  enum class Tag { Gen, Id, Comp } tag;
  std::string name;  // Gen: h-generator; Id: object generator
  HExprP a, b;
};
struct VExpr {
  enum class Tag { Gen, Id, Comp } tag;
  std::string name;
  VExprP a, b;
};
struct SqExpr {
  enum class Tag { Gen, VId, HId, ObjId, HComp, VComp, HInv, VInv } tag;
  std::string name;  // Gen / ObjId
  HExprP h;          // VId
  VExprP v;          // HId
  SqExprP a, b;      // compositions; a also for inverses
};

HExprP hgen(const std::string& n);
HExprP hid(const std::string& obj);
HExprP hcomp_e(HExprP a, HExprP b);
VExprP vgen(const std::string& n);
VExprP vid(const std::string& obj);
VExprP vcomp_e(VExprP a, VExprP b);
SqExprP sgen(const std::string& n);
SqExprP esq_e(HExprP h);
SqExprP isq_e(VExprP v);
SqExprP osq_e(const std::string& obj);
SqExprP hcmp_e(SqExprP a, SqExprP b);
SqExprP vcmp_e(SqExprP a, SqExprP b);
SqExprP hinv_e(SqExprP a);
SqExprP vinv_e(SqExprP a);

/// Generators-and-relations description of a (possibly infinite) double
/// category. Square generator boundaries are h/v expressions over the lower
/// generators; relations equate square (or morphism) expressions;
/// invertibility constraints require the assigned square to be invertible
/// for the given composition direction.
struct ShapePresentation {
  struct HGen {
    std::string name, src, tgt;  // src/tgt: object generator names
  };
  struct VGen {
    std::string name, src, tgt;
  };
  struct SGen {
    std::string name;
    HExprP top, bottom;
    VExprP left, right;
  };
  struct SqRel {
    SqExprP lhs, rhs;
  };
  struct HRel {
    HExprP lhs, rhs;
  };
  struct VRel {
    VExprP lhs, rhs;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<HGen> hgens;
  std::vector<VGen> vgens;
  std::vector<SGen> sgens;
  std::vector<HRel> hrels;
  std::vector<VRel> vrels;
  std::vector<SqRel> sqrels;
  static constexpr int kHorizontal = 1, kVertical = 2;
  std::map<std::string, int> invertible;  // sgen -> direction bits

  const HGen* hgen_of(const std::string& n) const;
  const VGen* vgen_of(const std::string& n) const;
  const SGen* sgen_of(const std::string& n) const;
};

ValidationReport validate_presentation(const ShapePresentation& P);

/// A double functor out of a presentation into a finite double category,
/// given by its generator assignment.
struct ShapeHom {
  std::map<std::string, std::string> obj, hm, vm, sq;

  bool operator==(const ShapeHom& o) const {
    return obj == o.obj && hm == o.hm && vm == o.vm && sq == o.sq;
  }
  bool operator<(const ShapeHom& o) const {
    return std::tie(obj, hm, vm, sq) < std::tie(o.obj, o.hm, o.vm, o.sq);
  }
};

std::optional<std::string> eval_h(const HExprP& e, const FiniteDoubleCategory& X,
                                  const ShapeHom& h);
std::optional<std::string> eval_v(const VExprP& e, const FiniteDoubleCategory& X,
                                  const ShapeHom& h);
std::optional<std::string> eval_sq(const SqExprP& e, const FiniteDoubleCategory& X,
                                   const ShapeHom& h);

/// allow(sort, generator, candidate): sort is one of 'o','h','v','s'.
using HomFilter = std::function<bool(char, const std::string&, const std::string&)>;

/// Complete, duplicate-free, deterministically ordered list of generator
/// assignments P -> X satisfying boundaries, relations, and invertibility
/// constraints.
std::vector<ShapeHom> solve_homs(const ShapePresentation& P, const FiniteDoubleCategory& X,
                                 const HomFilter& allow = nullptr);

/// A map of presentations: generators of dom assigned to expressions over
/// cod. Object generators map to object generators.
struct ShapeInclusion {
  std::string name;
  std::shared_ptr<const ShapePresentation> dom, cod;
  std::map<std::string, std::string> obj;
  std::map<std::string, HExprP> hmap;
  std::map<std::string, VExprP> vmap;
  std::map<std::string, SqExprP> smap;
};

/// Pull a hom of the codomain back along an inclusion.
ShapeHom precompose(const ShapeInclusion& i, const ShapeHom& hom_of_cod,
                    const FiniteDoubleCategory& X);

/// Check that h := the given assignment satisfies dom's relations and
/// invertibility constraints in X (used to validate inclusions semantically).
bool satisfies_presentation(const ShapePresentation& P, const FiniteDoubleCategory& X,
                            const ShapeHom& h);

/// Push a hom P -> A forward along a double functor F: A -> B.
ShapeHom push_along(const ShapeHom& h, const DoubleFunctor& F);

struct LiftingProblem {
  ShapeHom top;     // dom -> A
  ShapeHom bottom;  // cod -> B
};
struct RlpResult {
  bool ok = true;
  std::optional<LiftingProblem> counterexample;
  int problems = 0;
};

/// Right lifting property of F against an inclusion: every commuting square
/// admits a diagonal filler.
RlpResult has_rlp(const DoubleFunctor& F, const ShapeInclusion& i);

/// The generating cofibrations I (i1..i5) and anodyne generators J (j1..j5).
std::vector<ShapeInclusion> generating_cofibrations();
std::vector<ShapeInclusion> anodyne_generators();
std::shared_ptr<const ShapePresentation> builtin_shape(const std::string& name);
ShapeInclusion builtin_inclusion(const std::string& name);

ShapePresentation parse_presentation(const std::string& text);
std::string print_presentation(const ShapePresentation& P);

/// Inclusion file: `dom:` / `cod:` shape references resolved by the caller,
/// then `obj:`/`hmor:`/`vmor:`/`sq:` lines mapping dom generators to
/// expressions over the codomain.
ShapeInclusion parse_inclusion(
    const std::string& text,
    const std::function<std::shared_ptr<const ShapePresentation>(const std::string&)>& resolve);

}  // namespace folds
