#include "doctest.h"
#include "folds/presheaf.hpp"
#include "folds/signature.hpp"

using namespace folds;

TEST_CASE("builtin cat signature validates with the expected degrees") {
  auto sig = builtin_signature("cat");
  CHECK(sig->validated);
  CHECK(sig->kinds.size() == 5);
  CHECK(sig->arrows.size() == 8);
  CHECK(sig->degree.at("O") == 0);
  CHECK(sig->degree.at("A") == 1);
  CHECK(sig->degree.at("I'") == 2);
  CHECK(sig->degree.at("T'") == 2);
  CHECK(sig->degree.at("E'") == 2);
}

TEST_CASE("endo arrow is a degree cycle") {
  FoldsSignature s;
  s.kinds = {"K"};
  s.arrows = {{"e", "K", "K"}};
  auto rep = validate_signature(s);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].code == "DegreeCycle");
}

TEST_CASE("relation typing errors are reported") {
  FoldsSignature s;
  s.kinds = {"A", "O"};
  s.arrows = {{"s", "A", "O"}, {"t", "A", "O"}};
  s.relations = {{"A", {"s"}, {"s", "t"}}};
  auto rep = validate_signature(s);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].code == "IllTypedRelation");
}

TEST_CASE("relation symbols must be maximal") {
  FoldsSignature s;
  s.kinds = {"R'", "B"};
  s.relsymbols = {"R'"};
  s.arrows = {{"p", "B", "R'"}};
  auto rep = validate_signature(s);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].code == "RelationNotMaximal");
}

TEST_CASE("hom words of L_Cat") {
  auto sig = builtin_signature("cat");
  auto ao = sig->hom_words("A", "O");
  REQUIRE(ao.size() == 2);
  CHECK(ao[0].str() == "s");
  CHECK(ao[1].str() == "t");
  CHECK(sig->hom_words("O", "A").empty());
  // T' -> O: three classes (source, middle, target of the triangle).
  CHECK(sig->hom_words("T'", "O").size() == 3);
  // E' -> A: l and r stay distinct (no relation collapses them).
  CHECK(sig->hom_words("E'", "A").size() == 2);
  // E' -> O: the two endpoints.
  CHECK(sig->hom_words("E'", "O").size() == 2);
}

TEST_CASE("builtin dblcat signature: thirteen kinds, expected degrees, S-fan") {
  auto sig = builtin_signature("dblcat");
  CHECK(sig->kinds.size() == 13);
  CHECK(sig->degree.at("O") == 0);
  CHECK(sig->degree.at("H") == 1);
  CHECK(sig->degree.at("V") == 1);
  for (const auto& k : {"S", "I_H", "T_H", "I_V", "T_V"}) CHECK(sig->degree.at(k) == 2);
  for (const auto& k : {"I_hor'", "I_ver'", "H_c'", "V_c'", "E'"}) CHECK(sig->degree.at(k) == 3);

  auto so = sig->hom_words("S", "O");
  REQUIRE(so.size() == 4);
  // Canonical representatives pick u/d before l/r in declaration order.
  CHECK(so[0].str() == "u.s");
  CHECK(so[1].str() == "u.t");
  CHECK(so[2].str() == "d.s");
  CHECK(so[3].str() == "d.t");
  // The relations identify them with the l/r routes.
  CHECK(sig->canonical("S", {"l", "s"}).str() == "u.s");
  CHECK(sig->canonical("S", {"r", "s"}).str() == "u.t");
  CHECK(sig->canonical("S", {"l", "t"}).str() == "d.s");
  CHECK(sig->canonical("S", {"r", "t"}).str() == "d.t");
}

TEST_CASE("builtin twocat signature validates") {
  auto sig = builtin_signature("twocat");
  CHECK(sig->kinds.size() == 9);
  CHECK(sig->degree.at("C0") == 0);
  CHECK(sig->degree.at("C1") == 1);
  CHECK(sig->degree.at("C2") == 2);
  CHECK(sig->degree.at("T") == 2);
  CHECK(sig->degree.at("I1") == 2);
  for (const auto& k : {"I2'", "V'", "H'", "E'"}) CHECK(sig->degree.at(k) == 3);
}

TEST_CASE("boundary weights") {
  auto cat = builtin_signature("cat");
  auto dbl = builtin_signature("dblcat");
  SUBCASE("dblcat O is constantly empty") {
    Presheaf w = boundary_weight(dbl, "O");
    for (const auto& k : dbl->kinds) CHECK(w.at(k).empty());
  }
  SUBCASE("dblcat H has {s,t} at O") {
    Presheaf w = boundary_weight(dbl, "H");
    CHECK(w.at("O").size() == 2);
    CHECK(w.at("H").empty());
    CHECK(w.at("S").empty());
  }
  SUBCASE("cat E' has two elements at A and two at O") {
    Presheaf w = boundary_weight(cat, "E'");
    CHECK(w.at("A").size() == 2);
    CHECK(w.at("O").size() == 2);
    CHECK(validate_presheaf(w).ok());
  }
  SUBCASE("boundary weight is empty at the kind itself and in degrees >= deg K") {
    for (const auto& sig : {cat, dbl})
      for (const auto& K : sig->kinds) {
        Presheaf w = boundary_weight(sig, K);
        for (const auto& H : sig->kinds)
          if (sig->degree.at(H) >= sig->degree.at(K)) CHECK(w.at(H).empty());
      }
  }
  SUBCASE("boundary weights are functorial presheaves") {
    for (const auto& K : dbl->kinds) CHECK(validate_presheaf(boundary_weight(dbl, K)).ok());
  }
}

TEST_CASE("canonical words are closed under relation rewrites") {
  // Property: applying any relation rewrite anywhere in a word keeps the
  // canonical form.
  for (const auto& which : {"cat", "twocat", "dblcat"}) {
    auto sig = builtin_signature(which);
    for (const auto& K : sig->kinds) {
      auto it = sig->canon_map.find(K);
      if (it == sig->canon_map.end()) continue;
      for (const auto& [wstr, canon] : it->second) {
        // Re-split and canonicalize; must be idempotent.
        std::vector<std::string> names;
        std::string cur;
        for (char c : wstr + std::string(".")) {
          if (c == '.') {
            names.push_back(cur);
            cur.clear();
          } else
            cur += c;
        }
        CHECK(sig->canonical(K, names).str() == canon.str());
        CHECK(sig->canonical(K, canon.names).str() == canon.str());
      }
    }
  }
}

TEST_CASE("signature file round trip") {
  for (const auto& which : {"cat", "twocat", "dblcat"}) {
    auto sig = builtin_signature(which);
    std::string text = print_signature(*sig);
    FoldsSignature back = parse_signature(text);
    auto rep = validate_signature(back);
    REQUIRE(rep.ok());
    CHECK(back.kinds == sig->kinds);
    CHECK(back.relsymbols == sig->relsymbols);
    REQUIRE(back.arrows.size() == sig->arrows.size());
    for (size_t i = 0; i < back.arrows.size(); ++i) {
      CHECK(back.arrows[i].name == sig->arrows[i].name);
      CHECK(back.arrows[i].src == sig->arrows[i].src);
      CHECK(back.arrows[i].dst == sig->arrows[i].dst);
    }
    REQUIRE(back.relations.size() == sig->relations.size());
    for (size_t i = 0; i < back.relations.size(); ++i) {
      CHECK(back.relations[i].at == sig->relations[i].at);
      CHECK(back.relations[i].lhs == sig->relations[i].lhs);
      CHECK(back.relations[i].rhs == sig->relations[i].rhs);
    }
    CHECK(back.degree == sig->degree);
  }
}

TEST_CASE("relations collapsing generators and words of different lengths") {
  SUBCASE("two generators identified by a relation") {
    FoldsSignature s;
    s.kinds = {"A", "B"};
    s.arrows = {{"f", "A", "B"}, {"g", "A", "B"}, {"h", "A", "B"}};
    s.relations = {{"A", {"f"}, {"g"}}};
    REQUIRE(validate_signature(s).ok());
    auto words = s.hom_words("A", "B");
    REQUIRE(words.size() == 2);
    CHECK(words[0].str() == "f");
    CHECK(words[1].str() == "h");
    CHECK(s.canonical("A", {"g"}).str() == "f");
  }
  SUBCASE("a composite identified with a single generator") {
    FoldsSignature s;
    s.kinds = {"X", "Y", "Z"};
    s.arrows = {{"p", "X", "Y"}, {"q", "Y", "Z"}, {"r", "X", "Z"}};
    s.relations = {{"X", {"p", "q"}, {"r"}}};
    REQUIRE(validate_signature(s).ok());
    CHECK(s.hom_words("X", "Z").size() == 1);
    CHECK(s.canonical("X", {"p", "q"}).str() == "r");
    // The boundary weight respects the identification.
    auto sp = std::make_shared<const FoldsSignature>(s);
    Presheaf w = boundary_weight(sp, "X");
    CHECK(w.at("Z").size() == 1);
    CHECK(w.at("Y").size() == 1);
    CHECK(validate_presheaf(w).ok());
  }
}

TEST_CASE("bare relation lines instantiate at every matching kind") {
  std::string text =
      "kinds: C0 C1 I1 I2\n"
      "arrows:\n"
      "s: C1 -> C0\n"
      "t: C1 -> C0\n"
      "i: I1 -> C1\n"
      "i: I2 -> C1\n"
      "relations:\n"
      "i . s = i . t\n";
  FoldsSignature s = parse_signature(text);
  REQUIRE(validate_signature(s).ok());
  CHECK(s.relations.size() == 2);
}
