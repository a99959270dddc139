#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "folds/dblcat.hpp"
#include "folds/presheaf.hpp"
#include "folds/shape.hpp"
#include "folds/signature.hpp"

namespace folds {

/// A presentation-valued functor on the opposite of a signature: a shape per
/// kind and an inclusion D(K') -> D(K) per generating arrow p: K -> K'.
struct ShapeDiagram {
  std::string name;
  std::shared_ptr<const FoldsSignature> sig;
  std::map<std::string, std::shared_ptr<const ShapePresentation>> object_of;
  std::map<std::pair<std::string, std::string>, ShapeInclusion> arrow_of;

  const ShapeInclusion& arrow(const std::string& kind, const std::string& a) const;
};

/// Builtin diagrams "cat", "twocat", "dblcat" (2-category shapes carried as
/// horizontally embedded double-category presentations).
std::shared_ptr<const ShapeDiagram> builtin_diagram(const std::string& which);

/// The nerve K |-> Hom(D(K), X) with action by precomposition, together with
/// the element table (element name K#n -> generator assignment).
struct Nerve {
  std::shared_ptr<const Presheaf> structure;
  std::map<std::string, ShapeHom> element;

  const std::string& name_of(const std::string& kind, const ShapeHom& h) const;

 private:
  friend Nerve compute_nerve(const FiniteDoubleCategory&, const ShapeDiagram&);
  std::map<std::string, std::map<std::string, std::string>> lookup_;  // kind -> key -> name
};

Nerve compute_nerve(const FiniteDoubleCategory& X, const ShapeDiagram& D);

/// Componentwise postcomposition with a double functor.
NatTransf nerve_map(const DoubleFunctor& F, const ShapeDiagram& D, const Nerve& srcN,
                    const Nerve& dstN);

/// Soundness of the signature relation list against the realization diagram,
/// checked pointwise over a corpus: every arrow inclusion pulls homs back to
/// homs, and the nerve of every corpus member is a functorial presheaf.
ValidationReport cross_check_signature(const ShapeDiagram& D,
                                       const std::vector<std::shared_ptr<const FiniteDoubleCategory>>& corpus);

/// The five kinds whose latching maps generate the (cofibration, trivial
/// fibration) weak factorization system, with the expected domain/codomain
/// shapes and boundary-weight element counts.
struct GeneratingCofibrationRow {
  std::string kind;
  std::string domain_shape;    // builtin shape name
  std::string codomain_shape;  // builtin shape name
  std::map<std::string, size_t> boundary_counts;  // kind -> expected size
};
std::vector<GeneratingCofibrationRow> generating_cofibration_table();

struct LatchingRow {
  std::string kind;
  std::string dblcat;
  bool carrier_ok = false;   // carrier is Hom(D(K), X)
  bool matching_ok = false;  // matching object ~ Hom(domain shape, X), naturally
};

struct LatchingReport {
  bool ok = true;
  bool boundary_counts_ok = true;
  std::vector<LatchingRow> rows;
  std::string detail;
};

/// The latching-map table for D_DblCat: boundary-weight element counts for
/// the kinds O, H, V, S, E', and the Hom/matching-object bijections over the
/// given corpus.
LatchingReport check_latching_table(const std::vector<std::shared_ptr<const FiniteDoubleCategory>>& corpus);

}  // namespace folds
