#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypcat/errors.hpp"
#include "hypcat/instances.hpp"
#include "hypcat/term.hpp"

using namespace hypcat;

namespace {

Signature sig_rl() {
  Signature s;
  s.labels = {intern("r"), intern("l")};
  return s;
}

Signature sig_with_box() {
  Signature s;
  s.labels = {intern("a"), intern("b")};
  s.boxes["f"] = {make_object({"a"}), make_object({"b", "b"})};
  return s;
}

}  // namespace

TEST_CASE("parser builds the expected syntax trees") {
  Signature s = sig_rl();
  LabeledFinSet r = make_object({"r"});
  TermPtr got = parse_term("delta[r] * id[r] ; id[r] * mu[r]", s);
  TermPtr want = Term::make_seq(
      Term::make_par(Term::make_frob(Frob::delta, r), Term::make_id(r)),
      Term::make_par(Term::make_id(r), Term::make_frob(Frob::mu, r)));
  CHECK(term_equal(got, want));

  CHECK(term_equal(parse_term("id[]", s), Term::make_id(LabeledFinSet{})));
  CHECK(term_equal(parse_term("swap[r|l]", s),
                   Term::make_swap(r, make_object({"l"}))));
  CHECK(term_equal(parse_term("# comment\nid[r] # more\n", s),
                   Term::make_id(r)));

  // Left association and parentheses.
  TermPtr abc = parse_term("id[r] ; id[r] ; id[r]", s);
  TermPtr left = Term::make_seq(Term::make_seq(Term::make_id(r),
                                               Term::make_id(r)),
                                Term::make_id(r));
  CHECK(term_equal(abc, left));
  CHECK(term_equal(parse_term("(id[r] ; id[r]) * id[l]", s),
                   Term::make_par(Term::make_seq(Term::make_id(r),
                                                 Term::make_id(r)),
                                  Term::make_id(make_object({"l"})))));
}

TEST_CASE("parser reports errors with context") {
  Signature s = sig_with_box();
  CHECK_THROWS_AS(parse_term("id[", s), SyntaxError);
  CHECK_THROWS_AS(parse_term("id[a] ;", s), SyntaxError);
  CHECK_THROWS_AS(parse_term("id[zz]", s), UnknownLabel);
  CHECK_THROWS_AS(parse_term("gg", s), UnknownBox);
  CHECK_THROWS_AS(parse_term("", s), SyntaxError);
}

TEST_CASE("typecheck computes boundaries structurally") {
  Signature s = sig_rl();
  LabeledFinSet l = make_object({"l"});
  auto [md, mc] = typecheck(Term::make_frob(Frob::mu, l), s);
  CHECK(md == make_object({"l", "l"}));
  CHECK(mc == l);

  CHECK_THROWS_AS(typecheck(Term::make_seq(Term::make_frob(Frob::mu, l),
                                           Term::make_frob(Frob::eta, l)),
                            s),
                  TypeMismatch);

  auto [pd, pc] =
      typecheck(Term::make_par(Term::make_frob(Frob::eta, make_object({"a"})),
                               Term::make_frob(Frob::eps, make_object({"b"}))),
                Signature{{intern("a"), intern("b")}, {}});
  CHECK(pd == make_object({"b"}));
  CHECK(pc == make_object({"a"}));

  Signature sb = sig_with_box();
  auto [fd, fc] = typecheck(parse_term("f ; mu[b]", sb), sb);
  CHECK(fd == make_object({"a"}));
  CHECK(fc == make_object({"b"}));
}

TEST_CASE("evaluation folds into any instance") {
  Signature s = sig_rl();
  std::vector<Label> rl = s.labels;
  CospanInstance cospans(rl);

  HypCategory::Morph m = eval_term(parse_term("delta[l] ; mu[l]", s), cospans);
  CHECK(equal(std::any_cast<const Cospan&>(m),
              identity_cospan(make_object({"l"}))));

  LinRelInstance add(rl, LinStructure::add);
  HypCategory::Morph am =
      eval_term(parse_term("delta[r]*id[r] ; id[r]*mu[r]", s), add);
  const LinMorph& lm = std::any_cast<const LinMorph&>(am);
  LinRel want = linrel_make(2, 2,
                            {{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}});
  CHECK(linrel_equal(lm.rel, want));
  CHECK(static_cast<int>(want.basis.size()) == 3);

  HypCategory::Morph idm =
      eval_term(Term::make_id(make_object({"r", "l"})), cospans);
  CHECK(equal(std::any_cast<const Cospan&>(idm),
              identity_cospan(make_object({"r", "l"}))));

  Signature sb = sig_with_box();
  CHECK_THROWS_AS(eval_term(parse_term("f", sb), CospanInstance(sb.labels)),
                  UnboundBox);
}

TEST_CASE("boxes evaluate to their bindings") {
  Signature sb = sig_with_box();
  CospanInstance cospans(sb.labels);
  std::mt19937 rng(2);
  Cospan bound = random_cospan(make_object({"a"}), make_object({"b", "b"}),
                               sb.labels, rng);
  std::map<std::string, HypCategory::Morph> boxes{{"f", bound}};
  HypCategory::Morph got =
      eval_term(parse_term("f ; mu[b]", sb), cospans, boxes);
  Cospan want = compose(bound, frobenius_cospan(Frob::mu, make_object({"b"})));
  CHECK(equal(std::any_cast<const Cospan&>(got), want));
}

TEST_CASE("pretty prints parseable text") {
  Signature s = sig_rl();
  LabeledFinSet l = make_object({"l"});
  CHECK(pretty(Term::make_id(make_object({"a"}))) == "id[a]");
  CHECK(pretty(Term::make_seq(Term::make_frob(Frob::mu, l),
                              Term::make_frob(Frob::eps, l))) ==
        "mu[l] ; eps[l]");

  Signature sa;
  sa.labels = {intern("a"), intern("b")};
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    TermPtr t = random_term(sa.labels, rng);
    TermPtr back = parse_term(pretty(t), sa);
    CHECK(term_equal(t, back));
  }
}

TEST_CASE("decompose round trips through evaluation") {
  std::vector<Label> alphabet = {intern("a"), intern("b")};
  CospanInstance cospans(alphabet);
  Signature s;
  s.labels = alphabet;

  auto round_trip = [&](const Cospan& c) {
    TermPtr t = decompose(c);
    auto [td, tc] = typecheck(t, s);
    CHECK(td == c.dom);
    CHECK(tc == c.cod);
    Cospan back = std::any_cast<const Cospan&>(eval_term(t, cospans));
    CHECK(equal(back, c));
  };

  round_trip(identity_cospan(make_object({"a"})));
  round_trip(frobenius_cospan(Frob::mu, make_object({"a"})));
  round_trip(frobenius_cospan(Frob::eta, make_object({"b", "a"})));
  round_trip(swap_cospan(make_object({"a"}), make_object({"b", "b"})));

  std::vector<std::string> ten(10, "a"), seven(7, "a"), six(6, "a");
  round_trip(Cospan::make(make_object(ten), make_object(six),
                          make_object(seven), {1, 2, 3, 3, 1, 2, 5, 3, 5, 6},
                          {0, 1, 3, 4, 4, 6}));

  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledFinSet x = random_object(alphabet, rng, 4);
    LabeledFinSet y = random_object(alphabet, rng, 4);
    round_trip(random_cospan(x, y, alphabet, rng));
  }
}

TEST_CASE("evaluation factors through the cospan instance") {
  std::vector<Label> alphabet = {intern("a"), intern("b")};
  CospanInstance cospans(alphabet);
  LinRelInstance copy(alphabet, LinStructure::copy);
  LinRelInstance add(alphabet, LinStructure::add);
  Carriers car{{intern("a"), 2}, {intern("b"), 2}};
  FinRelInstance finrel(car);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    TermPtr t = random_term(alphabet, rng);
    Cospan c = std::any_cast<const Cospan&>(eval_term(t, cospans));
    for (const HypCategory* h :
         std::initializer_list<const HypCategory*>{&copy, &add, &finrel}) {
      HypCategory::Morph direct = eval_term(t, *h);
      HypCategory::Morph through = frob_functor(c, *h);
      CHECK(h->equal(direct, through));
    }
  }
}
