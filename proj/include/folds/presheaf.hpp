#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folds/report.hpp"
#include "folds/signature.hpp"

namespace folds {

/// A finite set-valued functor on a signature. Carriers are ordered lists of
/// element names, pairwise disjoint across kinds; the action is stored on
/// generating arrows only.
struct Presheaf {
  std::shared_ptr<const FoldsSignature> sig;
  std::map<std::string, std::vector<std::string>> carrier;
  // (arrow source kind, arrow name) -> element -> element
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> action;
  std::map<std::string, std::string> elem_kind;

  void add_element(const std::string& kind, const std::string& elem);
  void set_action(const std::string& srckind, const std::string& arrow, const std::string& e,
                  const std::string& img);

  const std::vector<std::string>& at(const std::string& kind) const;
  std::string act(const std::string& srckind, const std::string& arrow,
                  const std::string& e) const;
  std::string act_word(const ArrowWord& w, std::string e) const;
  std::string kind_of(const std::string& elem) const;
  size_t total_elements() const;
};

/// A family indexed by the canonical non-identity words out of a kind;
/// the value at a word lives in the carrier of the word's target.
using MatchingFamily = std::map<std::string, std::string>;

ValidationReport validate_presheaf(const Presheaf& X);

/// All matching families of X at K (the matching object M^K X), enumerated
/// deterministically. `filter`, when given, restricts the candidate elements
/// for each generating arrow (used for constrained enumerations).
std::vector<MatchingFamily> matching_object(
    const Presheaf& X, const std::string& K,
    const std::function<bool(const std::string& arrow, const std::string& elem)>& filter = nullptr);

/// The matching map m^K applied to one element.
MatchingFamily matching_image(const Presheaf& X, const std::string& K, const std::string& e);

struct LStructureCheck {
  bool ok = true;
  std::string kind;  // on failure: relation kind with two elements over one family
  std::string e1, e2;
};
LStructureCheck is_l_structure(const Presheaf& X);

/// Natural transformation between presheaves over the same signature.
/// Components are stored flat (element names are globally disjoint).
struct NatTransf {
  std::shared_ptr<const Presheaf> src;
  std::shared_ptr<const Presheaf> dst;
  std::map<std::string, std::string> comp;

  std::string operator()(const std::string& e) const;
};

ValidationReport validate_nattransf(const NatTransf& f);
NatTransf identity_nat(std::shared_ptr<const Presheaf> X);
NatTransf compose_nat(const NatTransf& first, const NatTransf& second);

struct FiberwiseCheck {
  bool ok = true;
  std::string kind;        // on failure
  std::string target_elem; // y in Y(K)
  MatchingFamily family;   // lifted family in X with no preimage
};

/// Fiberwise surjectivity: for every kind K the comparison map
/// X(K) -> Y(K) x_{M^K Y} M^K X is onto.
FiberwiseCheck is_fiberwise_surjective(const NatTransf& rho);

/// Span of fiberwise surjections out of a common apex, with an optional
/// shared context interpreted into all three structures.
struct Span {
  std::shared_ptr<const Presheaf> apex;
  NatTransf left;   // apex -> left foot
  NatTransf right;  // apex -> right foot
  std::shared_ptr<const Presheaf> context;  // optional
  std::optional<NatTransf> into_apex;       // context -> apex

  ValidationReport validate() const;
};

/// Boundary weight dL_K of a kind: the presheaf of non-identity words out of
/// K, acting by postcomposition. (Spec module signature; lives here because
/// it returns a Presheaf.)
Presheaf boundary_weight(std::shared_ptr<const FoldsSignature> sig, const std::string& K);

Presheaf parse_presheaf(const std::string& text, std::shared_ptr<const FoldsSignature> sig);
std::string print_presheaf(const Presheaf& X);
/// NatTransf file: `at K: e |-> e'` lines, against given source and target.
NatTransf parse_nattransf(const std::string& text, std::shared_ptr<const Presheaf> src,
                          std::shared_ptr<const Presheaf> dst);
std::string print_nattransf(const NatTransf& f);

}  // namespace folds
