#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "folds/dblcat.hpp"
#include "folds/shape.hpp"
#include "folds/signature.hpp"

using namespace folds;

TEST_CASE("shape presentation file round trip") {
  for (const auto& n : {"sq2", "sq2hop", "vEadj", "hT", "cH", "cV", "hSigmaI"}) {
    auto P = builtin_shape(n);
    std::string text = print_presentation(*P);
    ShapePresentation back = parse_presentation(text);
    REQUIRE(validate_presentation(back).ok());
    CHECK(back.objects == P->objects);
    CHECK(back.hgens.size() == P->hgens.size());
    CHECK(back.vgens.size() == P->vgens.size());
    CHECK(back.sgens.size() == P->sgens.size());
    CHECK(back.invertible == P->invertible);
    CHECK(back.hrels.size() == P->hrels.size());
    CHECK(back.sqrels.size() == P->sqrels.size());
    // The reparsed presentation must solve identically.
    auto X = builtin_double_category("sqiso");
    CHECK(solve_homs(back, *X).size() == solve_homs(*P, *X).size());
  }
}

TEST_CASE("parsed shape expressions evaluate like the builtin ones") {
  auto P = builtin_shape("vEadj");
  ShapePresentation back = parse_presentation(print_presentation(*P));
  auto X = builtin_double_category("sq2");
  auto a = solve_homs(*P, *X);
  auto b = solve_homs(back, *X);
  CHECK(a == b);
}

TEST_CASE("inclusion files reproduce the builtin parallel-pair collapse") {
  std::string text =
      "inclusion i5copy\n"
      "dom: builtin:sqpair\n"
      "cod: builtin:sqfree\n"
      "obj: a -> a\n"
      "obj: b -> b\n"
      "obj: c -> c\n"
      "obj: d -> d\n"
      "hmor: f -> f\n"
      "hmor: g -> g\n"
      "vmor: u -> u\n"
      "vmor: v -> v\n"
      "sq: sg -> sg\n"
      "sq: sg2 -> sg\n";
  auto resolve = [](const std::string& ref) {
    REQUIRE(ref.rfind("builtin:", 0) == 0);
    return builtin_shape(ref.substr(8));
  };
  ShapeInclusion i = parse_inclusion(text, resolve);
  // Same lifting verdicts as the builtin i5 on a few functors.
  for (const auto& n : {"id:sqiso", "parallel_hxv", "bang:v2", "hsigma2_hsigmai"}) {
    auto F = builtin_functor(n);
    INFO(n);
    CHECK(has_rlp(*F, i).ok == has_rlp(*F, builtin_inclusion("i5")).ok);
  }
}

TEST_CASE("signature files reject garbage") {
  CHECK_THROWS_AS(parse_signature("arrows:\nnonsense"), FoldsError);
  CHECK_THROWS_AS(parse_signature("kinds: A\nrelations:\nfoo = bar\n"), FoldsError);
}

TEST_CASE("double category files reject garbage") {
  CHECK_THROWS_AS(parse_double_category("wat: 1"), FoldsError);
  CHECK_THROWS_AS(parse_double_category("hmor: broken"), FoldsError);
}
