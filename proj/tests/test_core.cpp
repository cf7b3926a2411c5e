#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fibcat;
using helpers::cat;
using helpers::fun;
using helpers::mk;
using helpers::mkf;

TEST_CASE("canonical order: declared arrows first, identities per object") {
  CatPtr c = cat("two_plus_two");
  CHECK(c->object_count() == 4);
  CHECK(c->arrow_count() == 6);
  CHECK(c->non_identity_arrow_count() == 2);
  CHECK(c->arrow_id(0) == "fa");
  CHECK(c->arrow_id(1) == "fb");
  CHECK(c->arrow_id(2) == "id:a0");
  CHECK(c->arrow_id(5) == "id:b1");
  CHECK_FALSE(c->is_identity(1));
  CHECK(c->is_identity(2));
  CHECK(c->identity(0) == 2);
  CHECK(c->src(0) == c->object_index("a0"));
  CHECK(c->dst(0) == c->object_index("a1"));
}

TEST_CASE("composition table, compose_list, hom") {
  CatPtr c = cat("three");
  int f01 = c->require_arrow("f01"), f12 = c->require_arrow("f12"),
      f02 = c->require_arrow("f02");
  CHECK(c->compose(f12, f01) == f02);
  CHECK(c->try_compose(f01, f12) == FinCat::kNone);
  CHECK(c->compose_list({f01, f12}) == f02);
  CHECK(c->compose_list({f01}) == f01);
  CHECK(c->hom(0, 2) == std::vector<int>{f02});
  CHECK(c->hom(2, 0).empty());
  CHECK(c->arrows_into(2).size() == 3);  // f12, f02, id:2
  CHECK(c->arrows_from(0).size() == 3);  // f01, f02, id:0
  // Identity composition needs no declared entries.
  CHECK(c->compose(c->identity(1), f01) == f01);
  CHECK(c->compose(f01, c->identity(0)) == f01);
}

TEST_CASE("isomorphisms") {
  CatPtr c = cat("chaotic2");
  int u = c->require_arrow("u"), v = c->require_arrow("v");
  CHECK(c->is_iso(u));
  CHECK(c->is_iso(v));
  auto pairs = c->iso_pairs(c->object_index("p"), c->object_index("q"));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == u);
  CHECK(pairs[0].second == v);
  CatPtr t = cat("two");
  CHECK_FALSE(t->is_iso(t->require_arrow("f01")));
  CHECK(t->is_iso(t->identity(0)));
}

TEST_CASE("validation rejects structural defects") {
  auto code_of = [](auto&& thunk) -> Err {
    try {
      thunk();
    } catch (const CatError& e) {
      return e.code();
    }
    FAIL("expected a validation error");
    return Err::Parse;
  };

  // Missing composite entry for a composable pair.
  CHECK(code_of([] {
          mk("bad", {"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}});
        }) == Err::MissingComposite);

  // Dangling endpoint.
  CHECK(code_of([] { mk("bad", {"x"}, {{"f", "x", "ghost"}}); }) ==
        Err::DanglingEndpoint);

  // Declared entry contradicting an identity law.
  CHECK(code_of([] {
          mk("bad", {"x", "y"}, {{"f", "x", "y"}, {"g", "x", "y"}},
             {{"f", "id:x", "g"}});
        }) == Err::LawViolation);

  // Associativity violation on an otherwise total table.
  CHECK(code_of([] {
          mk("bad", {"x"}, {{"f", "x", "x"}, {"g", "x", "x"}},
             {{"f", "f", "g"},
              {"f", "g", "g"},
              {"g", "f", "f"},
              {"g", "g", "f"}});
        }) == Err::LawViolation);

  // Entry for a non-composable pair.
  CHECK(code_of([] {
          mk("bad", {"x", "y"}, {{"f", "x", "y"}}, {{"f", "f", "f"}});
        }) == Err::LawViolation);

  // Duplicate ids.
  CHECK(code_of([] { mk("bad", {"x", "x"}, {}); }) == Err::Parse);
  CHECK(code_of([] {
          mk("bad", {"x"}, {{"f", "x", "x"}, {"f", "x", "x"}},
             {{"f", "f", "f"}});
        }) == Err::Parse);

  // Compose entry naming an unknown arrow.
  CHECK(code_of([] {
          mk("bad", {"x"}, {{"f", "x", "x"}}, {{"f", "f", "nope"}});
        }) == Err::DanglingEndpoint);
}

TEST_CASE("lookup helpers") {
  CatPtr c = cat("two");
  CHECK(c->object_index("0") == 0);
  CHECK(c->object_index("?") == FinCat::kNone);
  CHECK(c->require_object("1") == 1);
  CHECK_THROWS_AS((void)c->require_object("?"), CatError);
  CHECK_THROWS_AS((void)c->require_arrow("?"), CatError);
  try {
    (void)c->require_object("?");
  } catch (const CatError& e) {
    CHECK(e.code() == Err::UnknownObject);
  }
}

TEST_CASE("same_structure compares ids, endpoints, and the table") {
  CatPtr a = cat("two");
  CatPtr b = mk("renamed", {"0", "1"}, {{"f01", "0", "1"}});
  CHECK(a->same_structure(*b));  // name is excluded
  CatPtr c = mk("other", {"0", "1"}, {{"g01", "0", "1"}});
  CHECK_FALSE(a->same_structure(*c));
}

TEST_CASE("dual swaps endpoints and reverses composition") {
  CatPtr c = cat("three");
  FinCat op = dual(*c, "three_op");
  int f01 = op.require_arrow("f01"), f12 = op.require_arrow("f12");
  CHECK(op.src(f01) == op.object_index("1"));
  CHECK(op.dst(f01) == op.object_index("0"));
  CHECK(op.compose(f01, f12) == op.require_arrow("f02"));
  FinCat back = dual(op, "three_op_op");
  CHECK(back.same_structure(*c));
}

TEST_CASE("functor validation and equality") {
  CatPtr two = cat("two");
  FinFunctor id2 = identity_functor(two);
  CHECK(functor_equal(id2, fun("id_two")));
  CHECK(functor_equal(compose_functors(id2, id2), id2));

  // Endpoint-incompatible arrow image is rejected.
  CHECK_THROWS_AS(mkf("bad", two, two, {{"0", "0"}, {"1", "1"}},
                      {{"f01", "id:0"}}),
                  CatError);
  // Composition must be preserved.
  CatPtr three = cat("three");
  CHECK_THROWS_AS(mkf("bad", three, three,
                      {{"0", "0"}, {"1", "1"}, {"2", "2"}},
                      {{"f01", "f01"}, {"f12", "f12"}, {"f02", "f01"}}),
                  CatError);
  // Total maps are required.
  CHECK_THROWS_AS(mkf("bad", two, two, {{"0", "0"}}, {}), CatError);
}

TEST_CASE("functor enumeration agrees with the direct search") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"two", "two"},       {"three", "two"},        {"two", "three"},
      {"two_plus_two", "two"}, {"chaotic2", "chaotic2"}, {"two", "chaotic2"},
      {"cospan", "two"}};
  for (auto& [sn, tn] : pairs) {
    CatPtr s = cat(sn), t = cat(tn);
    auto fast = enumerate_functors(s, t);
    auto slow = oracles::all_functors(*s, *t);
    CAPTURE(sn);
    CAPTURE(tn);
    CHECK(fast.size() == slow.size());
    // Same maps in some order: every oracle hit appears exactly once.
    for (const auto& m : slow) {
      int hits = 0;
      for (const auto& F : fast)
        if (F.object_map() == m.obj && F.arrow_map() == m.arr) ++hits;
      CHECK(hits == 1);
    }
  }
  CHECK(enumerate_functors(cat("two"), cat("two")).size() == 3);
  CHECK(enumerate_functors(cat("two_plus_two"), cat("two")).size() == 9);
}

TEST_CASE("functor enumeration under a commutation constraint") {
  // Sections of the fold: functors X with fold . X = id_two stay inside one
  // summand, so exactly two exist.
  FinFunctor fold = fun("fold");
  FinFunctor id2 = identity_functor(fold.target());
  OverConstraint over{&fold, &id2};
  auto sections = enumerate_functors(fold.target(), fold.source(), &over);
  CHECK(sections.size() == 2);
  for (const auto& X : sections)
    CHECK(functor_equal(compose_functors(fold, X), id2));
}

TEST_CASE("natural transformations") {
  FinFunctor p0 = fun("pt0"), p1 = fun("pt1");
  auto up = enumerate_nat_trans(p0, p1);
  REQUIRE(up.size() == 1);
  CHECK(up[0].component[0] == p0.target()->require_arrow("f01"));
  CHECK(enumerate_nat_trans(p1, p0).empty());

  FinFunctor id2 = fun("id_two");
  auto endo = enumerate_nat_trans(id2, id2);
  REQUIRE(endo.size() == 1);
  CHECK(nat_trans_is_identity(endo[0]));

  // Components must satisfy every naturality square.
  CHECK_THROWS_AS(make_nat_trans("bad", p0, p1,
                                 {p0.target()->identity(0)}),
                  CatError);

  // Verticality and inversion.
  CatPtr ch = cat("chaotic2");
  FinFunctor idc = identity_functor(ch);
  auto loops = enumerate_nat_trans(idc, idc);
  REQUIRE(loops.size() == 1);
  auto inv = nat_trans_inverse(loops[0]);
  REQUIRE(inv.has_value());
  CHECK(nat_trans_is_identity(*inv));
  FinFunctor toch = mkf("collapse", ch, cat("one"), {{"p", "*"}, {"q", "*"}},
                        {{"u", "id:*"}, {"v", "id:*"}});
  CHECK(nat_trans_vertical(loops[0], toch));
}

TEST_CASE("limits honor the environment") {
  setenv("FIBCAT_SIZE_CAP", "123", 1);
  setenv("FIBCAT_WORKERS", "3", 1);
  Limits lim = Limits::from_env();
  CHECK(lim.stage_arrow_cap == 123);
  CHECK(lim.workers == 3);
  unsetenv("FIBCAT_SIZE_CAP");
  unsetenv("FIBCAT_WORKERS");
  Limits fresh = Limits::from_env();
  CHECK(fresh.stage_arrow_cap == 200);
  CHECK(fresh.workers == 1);
}

TEST_CASE("error names are stable") {
  CHECK(std::string(err_name(Err::Parse)) == "ParseError");
  CHECK(std::string(err_name(Err::NonTermination)) == "NonTermination");
  CHECK(std::string(err_name(Err::InstanceTooLarge)) == "InstanceTooLarge");
  try {
    fail(Err::NoLift, "demo");
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.code() == Err::NoLift);
    CHECK(std::string(e.what()) == "NoLift: demo");  // messages carry the code
  }
}

TEST_CASE("reserved id forms") {
  CHECK(interchange_id_ok("f01"));
  CHECK_FALSE(interchange_id_ok(""));
  CHECK_FALSE(interchange_id_ok("id:x"));
  CHECK_FALSE(interchange_id_ok("a|b"));
  CHECK_FALSE(interchange_id_ok("g.o.f"));
  CHECK(identity_id("x") == "id:x");
}
