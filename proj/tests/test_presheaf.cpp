#include <algorithm>
#include <functional>

#include "doctest.h"
#include "folds/presheaf.hpp"
#include "folds/signature.hpp"

using namespace folds;

namespace {

// Independent oracle: the matching object computed directly from the
// definition of the weighted limit, as assignments on ALL non-identity words
// with pointwise action compatibility, with no use of the generator-indexed
// backtracking path.
std::vector<MatchingFamily> matching_oracle(const Presheaf& X, const std::string& K) {
  const FoldsSignature& sig = *X.sig;
  std::vector<ArrowWord> words = sig.words_from.count(K) ? sig.words_from.at(K)
                                                         : std::vector<ArrowWord>{};
  std::vector<MatchingFamily> out;
  MatchingFamily cur;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == words.size()) {
      for (const auto& w : words) {
        for (const auto* a : sig.arrows_from(w.dst)) {
          std::vector<std::string> ext = w.names;
          ext.push_back(a->name);
          ArrowWord wa = sig.canonical(K, ext);
          if (cur.at(wa.str()) != X.act(w.dst, a->name, cur.at(w.str()))) return;
        }
      }
      out.push_back(cur);
      return;
    }
    for (const auto& e : X.at(words[i].dst)) {
      cur[words[i].str()] = e;
      go(i + 1);
    }
    cur.erase(words[i].str());
  };
  go(0);
  return out;
}

Presheaf terminal_presheaf(std::shared_ptr<const FoldsSignature> sig) {
  Presheaf X;
  X.sig = sig;
  for (const auto& k : sig->kinds) {
    X.carrier[k];
    X.add_element(k, "pt_" + k);
  }
  for (const auto& a : sig->arrows) X.set_action(a.src, a.name, "pt_" + a.src, "pt_" + a.dst);
  return X;
}

// A presheaf over L_Cat presenting a small category: objects, arrows with
// endpoints, identity witnesses, composition triples, equality diagonal.
struct CatData {
  std::vector<std::string> objects;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;  // name, src, tgt
  std::map<std::string, std::string> ids;                                 // obj -> id arrow
  std::map<std::pair<std::string, std::string>, std::string> comp;        // (f,g) -> g after f
};

Presheaf cat_presheaf(std::shared_ptr<const FoldsSignature> sig, const CatData& C,
                      const std::string& prefix) {
  Presheaf X;
  X.sig = sig;
  for (const auto& k : sig->kinds) X.carrier[k];
  auto p = [&](const std::string& n) { return prefix + n; };
  for (const auto& o : C.objects) X.add_element("O", p(o));
  for (const auto& [f, s, t] : C.arrows) {
    X.add_element("A", p(f));
    X.set_action("A", "s", p(f), p(s));
    X.set_action("A", "t", p(f), p(t));
  }
  for (const auto& [o, i] : C.ids) {
    std::string e = p("i:" + o);
    X.add_element("I'", e);
    X.set_action("I'", "i", e, p(i));
  }
  for (const auto& [fg, h] : C.comp) {
    std::string e = p("t:" + fg.first + ";" + fg.second);
    X.add_element("T'", e);
    X.set_action("T'", "l", e, p(fg.first));
    X.set_action("T'", "r", e, p(fg.second));
    X.set_action("T'", "c", e, p(h));
  }
  for (const auto& [f, s, t] : C.arrows) {
    (void)s;
    (void)t;
    std::string e = p("e:" + f);
    X.add_element("E'", e);
    X.set_action("E'", "l", e, p(f));
    X.set_action("E'", "r", e, p(f));
  }
  return X;
}

CatData walking_arrow() {
  CatData C;
  C.objects = {"0", "1"};
  C.arrows = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"k", "0", "1"}};
  C.ids = {{"0", "id0"}, {"1", "id1"}};
  C.comp = {{{"id0", "id0"}, "id0"}, {{"id1", "id1"}, "id1"},
            {{"id0", "k"}, "k"},     {{"k", "id1"}, "k"}};
  return C;
}

CatData point_cat() {
  CatData C;
  C.objects = {"p"};
  C.arrows = {{"idp", "p", "p"}};
  C.ids = {{"p", "idp"}};
  C.comp = {{{"idp", "idp"}, "idp"}};
  return C;
}

}  // namespace

TEST_CASE("terminal presheaf validates and is an L-structure") {
  auto sig = builtin_signature("cat");
  Presheaf X = terminal_presheaf(sig);
  CHECK(validate_presheaf(X).ok());
  CHECK(is_l_structure(X).ok);
}

TEST_CASE("action violating s.i = t.i is reported") {
  auto sig = builtin_signature("cat");
  Presheaf X;
  X.sig = sig;
  for (const auto& k : sig->kinds) X.carrier[k];
  X.add_element("O", "x");
  X.add_element("O", "y");
  X.add_element("A", "f");
  X.set_action("A", "s", "f", "x");
  X.set_action("A", "t", "f", "y");
  X.add_element("I'", "w");
  X.set_action("I'", "i", "w", "f");
  auto rep = validate_presheaf(X);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& i : rep.issues) found = found || i.code == "RelationViolated";
  CHECK(found);
}

TEST_CASE("matching object at A over two objects has four families") {
  auto sig = builtin_signature("cat");
  Presheaf X;
  X.sig = sig;
  for (const auto& k : sig->kinds) X.carrier[k];
  X.add_element("O", "x");
  X.add_element("O", "y");
  auto fams = matching_object(X, "A");
  CHECK(fams.size() == 4);
  auto oracle = matching_oracle(X, "A");
  std::sort(fams.begin(), fams.end());
  std::sort(oracle.begin(), oracle.end());
  CHECK(fams == oracle);
}

TEST_CASE("matching object at degree zero kinds is a point") {
  auto sig = builtin_signature("cat");
  Presheaf X = cat_presheaf(sig, walking_arrow(), "");
  REQUIRE(validate_presheaf(X).ok());
  auto fams = matching_object(X, "O");
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].empty());
}

TEST_CASE("matching object at E' consists of the parallel pairs") {
  auto sig = builtin_signature("cat");
  Presheaf X = cat_presheaf(sig, walking_arrow(), "");
  auto fams = matching_object(X, "E'");
  // Parallel pairs in the walking arrow: (id0,id0), (id1,id1), (k,k), and
  // nothing else since hom-sets are subsingletons.
  CHECK(fams.size() == 3);
}

TEST_CASE("matching object agrees with the brute-force weighted-limit oracle") {
  auto sig = builtin_signature("cat");
  Presheaf X = cat_presheaf(sig, walking_arrow(), "");
  for (const auto& K : sig->kinds) {
    auto got = matching_object(X, K);
    auto want = matching_oracle(X, K);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("is_l_structure rejects duplicated witnesses") {
  auto sig = builtin_signature("cat");
  Presheaf X = cat_presheaf(sig, walking_arrow(), "");
  X.add_element("E'", "dup");
  X.set_action("E'", "l", "dup", "k");
  X.set_action("E'", "r", "dup", "k");
  REQUIRE(validate_presheaf(X).ok());
  auto ls = is_l_structure(X);
  REQUIRE_FALSE(ls.ok);
  CHECK(ls.kind == "E'");
}

TEST_CASE("fiberwise surjectivity") {
  auto sig = builtin_signature("cat");
  auto Xp = std::make_shared<const Presheaf>(cat_presheaf(sig, walking_arrow(), ""));

  SUBCASE("identity is fiberwise surjective") {
    CHECK(is_fiberwise_surjective(identity_nat(Xp)).ok);
  }

  SUBCASE("the walking arrow onto the point is NOT fiberwise surjective") {
    // The collapse 2 -> 1 is not full (there is no arrow 1 -> 0 upstairs),
    // so the comparison at kind A misses the lifted family (1, 0).
    auto Yp = std::make_shared<const Presheaf>(cat_presheaf(sig, point_cat(), "T."));
    NatTransf rho;
    rho.src = Xp;
    rho.dst = Yp;
    rho.comp["0"] = "T.p";
    rho.comp["1"] = "T.p";
    rho.comp["id0"] = "T.idp";
    rho.comp["id1"] = "T.idp";
    rho.comp["k"] = "T.idp";
    rho.comp["i:0"] = "T.i:p";
    rho.comp["i:1"] = "T.i:p";
    for (const auto& e : Xp->at("T'")) rho.comp[e] = "T.t:idp;idp";
    for (const auto& e : Xp->at("E'")) rho.comp[e] = "T.e:idp";
    REQUIRE(validate_nattransf(rho).ok());
    auto fw = is_fiberwise_surjective(rho);
    REQUIRE_FALSE(fw.ok);
    CHECK(fw.kind == "A");
  }

  SUBCASE("chaotic two-object category onto the point IS fiberwise surjective") {
    CatData E2;
    E2.objects = {"a", "b"};
    E2.arrows = {{"maa", "a", "a"}, {"mab", "a", "b"}, {"mba", "b", "a"}, {"mbb", "b", "b"}};
    E2.ids = {{"a", "maa"}, {"b", "mbb"}};
    for (const auto& [f, fs, ft] : E2.arrows)
      for (const auto& [g, gs, gt] : E2.arrows) {
        if (ft != gs) continue;
        E2.comp[{f, g}] = "m" + fs + gt;
      }
    auto Mp = std::make_shared<const Presheaf>(cat_presheaf(sig, E2, ""));
    REQUIRE(validate_presheaf(*Mp).ok());
    REQUIRE(is_l_structure(*Mp).ok);
    auto Yp = std::make_shared<const Presheaf>(cat_presheaf(sig, point_cat(), "T."));
    NatTransf rho;
    rho.src = Mp;
    rho.dst = Yp;
    for (const auto& e : Mp->at("O")) rho.comp[e] = "T.p";
    for (const auto& e : Mp->at("A")) rho.comp[e] = "T.idp";
    for (const auto& e : Mp->at("I'")) rho.comp[e] = "T.i:p";
    for (const auto& e : Mp->at("T'")) rho.comp[e] = "T.t:idp;idp";
    for (const auto& e : Mp->at("E'")) rho.comp[e] = "T.e:idp";
    REQUIRE(validate_nattransf(rho).ok());
    CHECK(is_fiberwise_surjective(rho).ok);
  }
}

TEST_CASE("fiberwise surjections compose and contain isomorphisms") {
  auto sig = builtin_signature("cat");
  auto X = std::make_shared<const Presheaf>(cat_presheaf(sig, walking_arrow(), ""));
  auto id1 = identity_nat(X);
  CHECK(is_fiberwise_surjective(id1).ok);
  CHECK(is_fiberwise_surjective(compose_nat(id1, id1)).ok);
}

TEST_CASE("degree-zero fiberwise condition reduces to surjectivity of the component") {
  auto sig = builtin_signature("cat");
  Presheaf X, Y;
  X.sig = Y.sig = sig;
  for (const auto& k : sig->kinds) {
    X.carrier[k];
    Y.carrier[k];
  }
  X.add_element("O", "x");
  Y.add_element("O", "p");
  Y.add_element("O", "q");
  auto Xp = std::make_shared<const Presheaf>(X);
  auto Yp = std::make_shared<const Presheaf>(Y);
  NatTransf rho;
  rho.src = Xp;
  rho.dst = Yp;
  rho.comp["x"] = "p";
  REQUIRE(validate_nattransf(rho).ok());
  auto fw = is_fiberwise_surjective(rho);
  REQUIRE_FALSE(fw.ok);
  CHECK(fw.kind == "O");
  CHECK(fw.target_elem == "q");
}

TEST_CASE("presheaf file round trip") {
  auto sig = builtin_signature("cat");
  Presheaf X = cat_presheaf(sig, walking_arrow(), "");
  Presheaf back = parse_presheaf(print_presheaf(X), sig);
  CHECK(back.carrier == X.carrier);
  CHECK(back.action == X.action);
  CHECK(validate_presheaf(back).ok());
}

TEST_CASE("nat transf file round trip") {
  auto sig = builtin_signature("cat");
  auto X = std::make_shared<const Presheaf>(cat_presheaf(sig, walking_arrow(), ""));
  NatTransf f = identity_nat(X);
  NatTransf back = parse_nattransf(print_nattransf(f), X, X);
  CHECK(back.comp == f.comp);
}
