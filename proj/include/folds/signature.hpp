#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folds/report.hpp"

namespace folds {

struct SigArrow {
  std::string name;
  std::string src;
  std::string dst;
};

/// A relation between two parallel composable words, anchored at a source
/// kind. Words are sequences of generating arrow names in diagrammatic
/// order: the first name is the arrow applied first.
struct SigRelation {
  std::string at;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

/// A composable word of generating arrows, in diagrammatic order. The empty
/// word is the identity at src (== dst).
struct ArrowWord {
  std::string src;
  std::string dst;
  std::vector<std::string> names;

  bool is_identity() const { return names.empty(); }
  std::string str() const;

  bool operator==(const ArrowWord& o) const {
    return src == o.src && dst == o.dst && names == o.names;
  }
};

/// A FOLDS signature: a finite inverse category presented by kinds,
/// generating arrows, and relations, with a distinguished set of maximal
/// relation kinds. Degrees and the canonical-word tables are derived by
/// validate_signature and cached on the object.
struct FoldsSignature {
  std::string name;
  std::vector<std::string> kinds;
  std::vector<std::string> relsymbols;
  std::vector<SigArrow> arrows;
  std::vector<SigRelation> relations;

  bool validated = false;
  std::map<std::string, int> degree;

  // Derived by validate_signature: for each kind, all non-identity canonical
  // words out of it (shortlex order), and the canonicalization map from every
  // word (as a dotted string) to its canonical representative.
  std::map<std::string, std::vector<ArrowWord>> words_from;
  std::map<std::string, std::map<std::string, ArrowWord>> canon_map;

  bool has_kind(const std::string& k) const;
  bool is_relation_kind(const std::string& k) const;
  const SigArrow* find_arrow(const std::string& src, const std::string& name) const;
  /// Generating arrows out of a kind, in declaration order.
  std::vector<const SigArrow*> arrows_from(const std::string& k) const;
  /// Rank of an arrow name in the fixed total order used for canonical words.
  int name_rank(const std::string& name) const;

  /// Canonical representative of a word (names in diagrammatic order).
  /// Requires a validated signature and a composable word.
  ArrowWord canonical(const std::string& src, const std::vector<std::string>& names) const;

  /// All non-identity canonical words src -> dst, shortlex order.
  std::vector<ArrowWord> hom_words(const std::string& src, const std::string& dst) const;
};

/// Checks the inverse-category conditions, derives degrees (longest path to
/// a sink) and the canonical word tables. On failure the report lists
/// DegreeCycle / RelationNotMaximal / IllTypedRelation / ... issues and the
/// signature stays unvalidated.
ValidationReport validate_signature(FoldsSignature& sig);

/// The three signatures from the literature: "cat", "twocat", "dblcat".
std::shared_ptr<const FoldsSignature> builtin_signature(const std::string& which);

FoldsSignature parse_signature(const std::string& text);
std::string print_signature(const FoldsSignature& sig);

}  // namespace folds
