#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypcat/errors.hpp"
#include "hypcat/label.hpp"

using namespace hypcat;

TEST_CASE("interning is stable and injective") {
  Label a1 = intern("a");
  Label a2 = intern("a");
  Label b = intern("b");
  CHECK(a1 == a2);
  CHECK(a1 != b);
  CHECK(label_name(a1) == "a");
  CHECK(label_name(b) == "b");
}

TEST_CASE("oplus is a strict monoid on objects") {
  LabeledFinSet x = make_object({"a"});
  LabeledFinSet y = make_object({"b", "c"});
  LabeledFinSet z = make_object({"a", "b", "c"});
  LabeledFinSet unit;
  CHECK(oplus(x, y) == z);
  CHECK(oplus(x, unit) == x);
  CHECK(oplus(unit, x) == x);
  CHECK(oplus(oplus(x, y), z) == oplus(x, oplus(y, z)));
}

TEST_CASE("typed function construction validates labels and range") {
  LabeledFinSet aa = make_object({"a", "a"});
  LabeledFinSet a = make_object({"a"});
  LabeledFinSet b = make_object({"b"});
  CHECK_NOTHROW(TypedFunction::make(aa, a, {0, 0}));
  CHECK_THROWS_AS(TypedFunction::make(a, b, {0}), IllTyped);
  CHECK_THROWS_AS(TypedFunction::make(a, a, {1}), IllTyped);
  CHECK_THROWS_AS(TypedFunction::make(aa, a, {0}), IllTyped);
}

TEST_CASE("compose_fn chases indices") {
  LabeledFinSet aa = make_object({"a", "a"});
  LabeledFinSet a = make_object({"a"});
  TypedFunction f = TypedFunction::make(aa, a, {0, 0});
  TypedFunction g = TypedFunction::make(a, aa, {1});
  TypedFunction fg = compose_fn(f, g);
  CHECK(fg.map == std::vector<int>{1, 1});
  CHECK(fg.dom == aa);
  CHECK(fg.cod == aa);

  TypedFunction e = TypedFunction::make(LabeledFinSet{}, a, {});
  CHECK(compose_fn(e, TypedFunction::make(a, a, {0})).map.empty());
  CHECK(compose_fn(identity_fn(aa), f) == f);
  CHECK(compose_fn(f, identity_fn(a)) == f);
  CHECK_THROWS_AS(compose_fn(f, f), CodomainMismatch);
}

TEST_CASE("compose_fn is associative on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 8);
  auto rand_obj = [&](int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(rng() % 2 ? "a" : "b");
    return make_object(names);
  };
  auto rand_fn = [&](const LabeledFinSet& d, const LabeledFinSet& c) {
    std::vector<int> map;
    for (int i = 0; i < d.size(); ++i) {
      std::vector<int> hits;
      for (int j = 0; j < c.size(); ++j)
        if (c.labels[j] == d.labels[i]) hits.push_back(j);
      REQUIRE(!hits.empty());
      map.push_back(hits[rng() % hits.size()]);
    }
    return TypedFunction::make(d, c, map);
  };
  for (int trial = 0; trial < 100; ++trial) {
    // Chain objects that always share both labels so maps exist.
    LabeledFinSet base = make_object({"a", "b"});
    LabeledFinSet w = oplus(base, rand_obj(len(rng)));
    LabeledFinSet x = oplus(base, rand_obj(len(rng)));
    LabeledFinSet y = oplus(base, rand_obj(len(rng)));
    LabeledFinSet z = oplus(base, rand_obj(len(rng)));
    TypedFunction f = rand_fn(w, x), g = rand_fn(x, y), h = rand_fn(y, z);
    CHECK(compose_fn(compose_fn(f, g), h) == compose_fn(f, compose_fn(g, h)));
  }
}

TEST_CASE("oplus_fn shifts the second map") {
  LabeledFinSet aa = make_object({"a", "a"});
  LabeledFinSet a = make_object({"a"});
  LabeledFinSet b = make_object({"b"});
  TypedFunction f = TypedFunction::make(aa, a, {0, 0});
  TypedFunction g = TypedFunction::make(b, b, {0});
  TypedFunction fg = oplus_fn(f, g);
  CHECK(fg.map == std::vector<int>{0, 0, 1});
  CHECK(fg.dom == make_object({"a", "a", "b"}));
  CHECK(fg.cod == make_object({"a", "b"}));
}

TEST_CASE("kleisli maps flatten blockwise") {
  KleisliMap f = make_kleisli({{"l", {"m", "n"}}, {"k", {}}});
  CHECK(f(intern("l")) == std::vector<Label>{intern("m"), intern("n")});
  CHECK(f(intern("k")).empty());
  CHECK_THROWS_AS(f(intern("zz")), UnknownLabel);

  auto [flat1, off1] = flatten_relabel(make_object({"l"}), f);
  CHECK(flat1 == make_object({"m", "n"}));
  CHECK(off1 == std::vector<int>{0});

  auto [flat2, off2] = flatten_relabel(LabeledFinSet{}, f);
  CHECK(flat2.empty());
  CHECK(off2.empty());

  auto [flat3, off3] = flatten_relabel(make_object({"k", "k"}), f);
  CHECK(flat3.empty());
  CHECK(off3 == std::vector<int>{0, 0});

  auto [flat4, off4] = flatten_relabel(make_object({"l", "k", "l"}), f);
  CHECK(flat4 == make_object({"m", "n", "m", "n"}));
  CHECK(off4 == std::vector<int>{0, 2, 2});
}

TEST_CASE("flattening distributes over oplus") {
  KleisliMap f = make_kleisli({{"a", {"x", "y"}}, {"b", {"y"}}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> xs, ys;
    for (int i = 0; i < static_cast<int>(rng() % 5); ++i)
      xs.push_back(rng() % 2 ? "a" : "b");
    for (int i = 0; i < static_cast<int>(rng() % 5); ++i)
      ys.push_back(rng() % 2 ? "a" : "b");
    LabeledFinSet x = make_object(xs), y = make_object(ys);
    CHECK(flatten_relabel(oplus(x, y), f).first ==
          oplus(flatten_relabel(x, f).first, flatten_relabel(y, f).first));
  }
}
