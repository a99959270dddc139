#pragma once

#include <map>
#include <optional>
#include <string>

#include "folds/dblcat.hpp"
#include "folds/shape.hpp"

namespace folds {

struct TrivFibCheck {
  bool ok = true;
  std::string failing;  // "objects" / "hmor (a,b)" / "vmor (a,b)" / "squares ..."
};

/// Surjective on objects, full on horizontal and vertical morphisms, fully
/// faithful on squares.
TrivFibCheck is_trivial_fibration(const DoubleFunctor& F);

struct NaiveFibCheck {
  bool ok = true;
  std::string failing_condition;  // "f1".."f5"
  std::string detail;
};

/// Conditions (f1)-(f5).
NaiveFibCheck is_naive_fibration(const DoubleFunctor& F);
/// Evaluate one condition in isolation ("f1".."f5").
bool naive_fib_condition(const DoubleFunctor& F, const std::string& tag, std::string* detail = nullptr);

struct BiequivCheck {
  bool ok = true;
  std::string failing_condition;  // "w1".."w4"
  std::string detail;
};

/// Conditions (w1)-(w4).
BiequivCheck is_double_biequivalence(const DoubleFunctor& F);
/// The (w3') variant, equivalent to (w3) between equipments.
bool biequiv_w3prime(const DoubleFunctor& F, std::string* detail = nullptr);

struct ClassifyReport {
  bool trivial_fibration = false;
  bool naive_fibration = false;
  bool biequivalence = false;
  std::map<std::string, bool> rlp_I;  // per generator i1..i5
  std::map<std::string, bool> rlp_J;  // per generator j1..j5
  bool src_equipment = false, tgt_equipment = false;
  // Consistency flags (set when both ends are equipments):
  std::optional<bool> tf_iff_rlpI;
  std::optional<bool> nf_iff_f145;
  std::optional<bool> tf_iff_nf_and_biequiv;
  std::optional<bool> w3_iff_w3prime;
};

ClassifyReport classify(const DoubleFunctor& F);

}  // namespace folds
