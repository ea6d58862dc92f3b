#include "hypcat/hyp.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace hypcat {

using Obj = HypCategory::Obj;
using Morph = HypCategory::Morph;

Morph HypCategory::random_morphism(const Obj& x, const Obj& y,
                                   std::mt19937& rng) const {
  return frob_functor(random_cospan(x, y, label_set(), rng), *this);
}

Morph HypCategory::act_state(const Cospan& c, const Morph& state) const {
  return compose(state, frob_functor(c, *this));
}

Morph cup(const HypCategory& h, const Obj& x) {
  return h.compose(h.frobenius(Frob::eta, x), h.frobenius(Frob::delta, x));
}

Morph cap(const HypCategory& h, const Obj& x) {
  return h.compose(h.frobenius(Frob::mu, x), h.frobenius(Frob::eps, x));
}

Morph gathr(const HypCategory& h, const Morph& f) {
  Obj x = h.dom(f);
  return h.compose(cup(h, x), h.tensor(h.identity(x), f));
}

Morph parse_name(const HypCategory& h, const Morph& g, const Obj& x,
                 const Obj& y) {
  return h.compose(h.tensor(h.identity(x), g),
                   h.tensor(cap(h, x), h.identity(y)));
}

Morph comp_morphism(const HypCategory& h, const Obj& x, const Obj& y,
                    const Obj& z) {
  return h.tensor(h.tensor(h.identity(x), cap(h, y)), h.identity(z));
}

Morph eval_term(const TermPtr& t, const HypCategory& h,
                const std::map<std::string, Morph>& boxes) {
  switch (t->kind) {
    case Term::Kind::id:
      return h.identity(t->x);
    case Term::Kind::swp:
      return h.swap(t->x, t->y);
    case Term::Kind::mu:
      return h.frobenius(Frob::mu, t->x);
    case Term::Kind::eta:
      return h.frobenius(Frob::eta, t->x);
    case Term::Kind::delta:
      return h.frobenius(Frob::delta, t->x);
    case Term::Kind::eps:
      return h.frobenius(Frob::eps, t->x);
    case Term::Kind::box: {
      auto it = boxes.find(t->box);
      if (it == boxes.end())
        throw UnboundBox("box '" + t->box + "' has no bound morphism");
      return it->second;
    }
    case Term::Kind::seq:
      return h.compose(eval_term(t->a, h, boxes), eval_term(t->b, h, boxes));
    case Term::Kind::par:
      return h.tensor(eval_term(t->a, h, boxes), eval_term(t->b, h, boxes));
  }
  throw Error("eval_term: bad term");
}

Morph frob_functor(const Cospan& c, const HypCategory& h) {
  std::vector<Label> alphabet = h.label_set();
  std::set<Label> known(alphabet.begin(), alphabet.end());
  for (const LabeledFinSet* part : {&c.dom, &c.cod, &c.apex})
    for (Label l : part->labels)
      if (!known.contains(l))
        throw UnknownLabel("frob_functor: label '" + label_name(l) +
                           "' not in the instance alphabet");
  return eval_term(decompose(c), h);
}

namespace {

/// A morphism of a base-changed instance: the underlying h2-morphism
/// between the flattened objects, plus its boundary over the source
/// alphabet.
struct BcMorph {
  Obj dom;
  Obj cod;
  Morph inner;
};

class BaseChanged final : public HypCategory {
 public:
  BaseChanged(std::shared_ptr<const HypCategory> h2, KleisliMap f)
      : h2_(std::move(h2)), f_(std::move(f)) {}

  std::string name() const override {
    return h2_->name() + " via base change";
  }
  std::vector<Label> label_set() const override { return f_.source(); }
  bool has_equality() const override { return h2_->has_equality(); }

  Obj dom(const Morph& m) const override { return un(m).dom; }
  Obj cod(const Morph& m) const override { return un(m).cod; }

  Morph identity(const Obj& x) const override {
    return BcMorph{x, x, h2_->identity(flat(x))};
  }
  Morph compose(const Morph& f, const Morph& g) const override {
    const BcMorph& a = un(f);
    const BcMorph& b = un(g);
    if (a.cod != b.dom)
      throw BoundaryMismatch("base change: compose boundary mismatch");
    return BcMorph{a.dom, b.cod, h2_->compose(a.inner, b.inner)};
  }
  Morph tensor(const Morph& f, const Morph& g) const override {
    const BcMorph& a = un(f);
    const BcMorph& b = un(g);
    return BcMorph{oplus(a.dom, b.dom), oplus(a.cod, b.cod),
                   h2_->tensor(a.inner, b.inner)};
  }
  Morph swap(const Obj& x, const Obj& y) const override {
    return BcMorph{oplus(x, y), oplus(y, x), h2_->swap(flat(x), flat(y))};
  }
  Morph frobenius(Frob kind, const Obj& x) const override {
    Obj fx = flat(x);
    Morph inner = h2_->frobenius(kind, fx);
    switch (kind) {
      case Frob::mu: return BcMorph{oplus(x, x), x, std::move(inner)};
      case Frob::eta: return BcMorph{Obj{}, x, std::move(inner)};
      case Frob::delta: return BcMorph{x, oplus(x, x), std::move(inner)};
      case Frob::eps: return BcMorph{x, Obj{}, std::move(inner)};
    }
    throw Error("base change: bad generator kind");
  }
  bool equal(const Morph& f, const Morph& g) const override {
    const BcMorph& a = un(f);
    const BcMorph& b = un(g);
    return a.dom == b.dom && a.cod == b.cod && h2_->equal(a.inner, b.inner);
  }
  Morph random_morphism(const Obj& x, const Obj& y,
                        std::mt19937& rng) const override {
    return BcMorph{x, y, h2_->random_morphism(flat(x), flat(y), rng)};
  }
  std::string show_morphism(const Morph& m) const override {
    return h2_->show_morphism(un(m).inner);
  }

 private:
  Obj flat(const Obj& x) const { return flatten_relabel(x, f_).first; }
  static const BcMorph& un(const Morph& m) {
    return std::any_cast<const BcMorph&>(m);
  }

  std::shared_ptr<const HypCategory> h2_;
  KleisliMap f_;
};

}  // namespace

std::shared_ptr<const HypCategory> base_change(
    std::shared_ptr<const HypCategory> h2, KleisliMap f) {
  return std::make_shared<BaseChanged>(std::move(h2), std::move(f));
}

namespace {

/// Tracks a named aggregated check over many random cases.
struct Agg {
  std::string name;
  bool pass = true;
  int first_failure = -1;

  void feed(bool ok, int case_no) {
    if (!ok && pass) {
      pass = false;
      first_failure = case_no;
    }
  }

  void emit(Report& rep, const std::string& context) const {
    std::string ctx = context;
    if (!pass) ctx += " (first failure at case " +
                      std::to_string(first_failure) + ")";
    rep.lines.push_back({pass, name, ctx});
  }
};

struct SuiteRunner {
  const HypCategory& h;
  std::mt19937 rng;

  bool eq(const Morph& a, const Morph& b) { return h.equal(a, b); }

  std::array<bool, 9> scfm(const Obj& x) {
    Morph mu = h.frobenius(Frob::mu, x);
    Morph eta = h.frobenius(Frob::eta, x);
    Morph delta = h.frobenius(Frob::delta, x);
    Morph eps = h.frobenius(Frob::eps, x);
    Morph id = h.identity(x);
    Morph sw = h.swap(x, x);
    Morph mu_delta = h.compose(mu, delta);
    return {
        eq(h.compose(h.tensor(mu, id), mu), h.compose(h.tensor(id, mu), mu)),
        eq(h.compose(h.tensor(eta, id), mu), id) &&
            eq(h.compose(h.tensor(id, eta), mu), id),
        eq(h.compose(sw, mu), mu),
        eq(h.compose(delta, h.tensor(delta, id)),
           h.compose(delta, h.tensor(id, delta))),
        eq(h.compose(delta, h.tensor(eps, id)), id) &&
            eq(h.compose(delta, h.tensor(id, eps)), id),
        eq(h.compose(delta, sw), delta),
        eq(h.compose(h.tensor(delta, id), h.tensor(id, mu)), mu_delta),
        eq(h.compose(h.tensor(id, delta), h.tensor(mu, id)), mu_delta),
        eq(h.compose(delta, mu), id),
    };
  }

  std::array<bool, 4> coherence(const Obj& x, const Obj& y) {
    Obj xy = oplus(x, y);
    Morph idx = h.identity(x);
    Morph idy = h.identity(y);
    Morph mid_yx = h.tensor(h.tensor(idx, h.swap(y, x)), idy);
    Morph mid_xy = h.tensor(h.tensor(idx, h.swap(x, y)), idy);
    return {
        eq(h.frobenius(Frob::mu, xy),
           h.compose(mid_yx, h.tensor(h.frobenius(Frob::mu, x),
                                      h.frobenius(Frob::mu, y)))),
        eq(h.frobenius(Frob::eta, xy),
           h.tensor(h.frobenius(Frob::eta, x), h.frobenius(Frob::eta, y))),
        eq(h.frobenius(Frob::delta, xy),
           h.compose(h.tensor(h.frobenius(Frob::delta, x),
                              h.frobenius(Frob::delta, y)),
                     mid_xy)),
        eq(h.frobenius(Frob::eps, xy),
           h.tensor(h.frobenius(Frob::eps, x), h.frobenius(Frob::eps, y))),
    };
  }

  bool unit_coherence() {
    Obj unit;
    return eq(h.frobenius(Frob::eta, unit), h.identity(unit)) &&
           eq(h.frobenius(Frob::eps, unit), h.identity(unit));
  }

  std::array<bool, 2> zigzag(const Obj& x) {
    Morph id = h.identity(x);
    Morph cu = cup(h, x);
    Morph ca = cap(h, x);
    return {
        eq(h.compose(h.tensor(cu, id), h.tensor(id, ca)), id),
        eq(h.compose(h.tensor(id, cu), h.tensor(ca, id)), id),
    };
  }
};

const std::array<const char*, 9> kScfmNames = {
    "assoc",        "unitality",     "commutativity",
    "coassoc",      "counitality",   "cocommutativity",
    "frobenius-left", "frobenius-right", "special",
};
const std::array<const char*, 4> kCoherenceNames = {
    "mu-coherence", "eta-coherence", "delta-coherence", "eps-coherence"};

}  // namespace

Report axiom_suite(const HypCategory& h, const std::vector<Label>& labels,
                   std::uint64_t seed, Suite kind, int cases) {
  Report rep;
  SuiteRunner run{h, std::mt19937(static_cast<std::mt19937::result_type>(seed))};
  std::string seed_ctx = "random n=" + std::to_string(cases) +
                         " seed=" + std::to_string(seed);
  auto pick = [&]() -> Label {
    std::uniform_int_distribution<std::size_t> d(0, labels.size() - 1);
    return labels[d(run.rng)];
  };
  auto obj1 = [](Label l) { return Obj{{l}}; };

  bool do_frob = kind == Suite::frobenius || kind == Suite::all;
  bool do_compact = kind == Suite::compact || kind == Suite::all;
  bool do_functor = kind == Suite::functor || kind == Suite::all;

  if (do_frob) {
    for (Label l : labels) {
      auto r = run.scfm(obj1(l));
      for (std::size_t i = 0; i < r.size(); ++i)
        rep.add(r[i], kScfmNames[i], "X=[" + label_name(l) + "]");
    }
    rep.add(run.unit_coherence(), "unit-coherence", "X=[]");
    for (Label l1 : labels)
      for (Label l2 : labels) {
        auto r = run.coherence(obj1(l1), obj1(l2));
        for (std::size_t i = 0; i < r.size(); ++i)
          rep.add(r[i], kCoherenceNames[i],
                  "X=[" + label_name(l1) + "] Y=[" + label_name(l2) + "]");
      }
    std::array<Agg, 9> scfm_agg;
    std::array<Agg, 4> co_agg;
    for (std::size_t i = 0; i < 9; ++i) scfm_agg[i].name = kScfmNames[i];
    for (std::size_t i = 0; i < 4; ++i) co_agg[i].name = kCoherenceNames[i];
    for (int n = 0; n < cases; ++n) {
      Obj x{{pick(), pick()}};
      auto r = run.scfm(x);
      for (std::size_t i = 0; i < 9; ++i) scfm_agg[i].feed(r[i], n);
      auto rc = run.coherence(obj1(pick()), obj1(pick()));
      for (std::size_t i = 0; i < 4; ++i) co_agg[i].feed(rc[i], n);
    }
    for (const Agg& a : scfm_agg) a.emit(rep, "X=[pair] " + seed_ctx);
    for (const Agg& a : co_agg) a.emit(rep, seed_ctx);
  }

  if (do_compact) {
    for (Label l : labels) {
      auto r = run.zigzag(obj1(l));
      rep.add(r[0], "zigzag-left", "X=[" + label_name(l) + "]");
      rep.add(r[1], "zigzag-right", "X=[" + label_name(l) + "]");
    }
    Agg zig_l{"zigzag-left"}, zig_r{"zigzag-right"}, pg{"parse-gathr"},
        gp{"gathr-parse"}, cw{"comp-works"}, rn{"remember-the-name"};
    for (int n = 0; n < cases; ++n) {
      Obj x = random_object(labels, run.rng, 2);
      Obj y = random_object(labels, run.rng, 2);
      Obj z = random_object(labels, run.rng, 2);
      auto r = run.zigzag(oplus(x, y));
      zig_l.feed(r[0], n);
      zig_r.feed(r[1], n);
      Morph f = h.random_morphism(x, y, run.rng);
      Morph g = h.random_morphism(y, z, run.rng);
      pg.feed(run.eq(parse_name(h, gathr(h, f), x, y), f), n);
      Morph st = h.random_morphism(Obj{}, oplus(x, y), run.rng);
      gp.feed(run.eq(gathr(h, parse_name(h, st, x, y)), st), n);
      cw.feed(run.eq(h.compose(h.tensor(gathr(h, f), gathr(h, g)),
                               comp_morphism(h, x, y, z)),
                     gathr(h, h.compose(f, g))),
              n);
      rn.feed(run.eq(h.compose(h.tensor(h.identity(x), gathr(h, f)),
                               comp_morphism(h, Obj{}, x, y)),
                     f),
              n);
    }
    for (const Agg* a : {&zig_l, &zig_r, &pg, &gp, &cw, &rn})
      a->emit(rep, seed_ctx);
  }

  if (do_functor) {
    Agg fid{"frob-identity"}, fcomp{"frob-compose"}, ften{"frob-tensor"},
        fsw{"frob-swap"}, fgen{"frob-generators"};
    for (int n = 0; n < cases; ++n) {
      Obj x = random_object(labels, run.rng, 2);
      Obj y = random_object(labels, run.rng, 2);
      Obj z = random_object(labels, run.rng, 2);
      Cospan c1 = random_cospan(x, y, labels, run.rng);
      Cospan c2 = random_cospan(y, z, labels, run.rng);
      fid.feed(run.eq(frob_functor(identity_cospan(x), h), h.identity(x)), n);
      fcomp.feed(run.eq(frob_functor(compose(c1, c2), h),
                        h.compose(frob_functor(c1, h), frob_functor(c2, h))),
                 n);
      ften.feed(run.eq(frob_functor(tensor(c1, c2), h),
                       h.tensor(frob_functor(c1, h), frob_functor(c2, h))),
                n);
      fsw.feed(run.eq(frob_functor(swap_cospan(x, y), h), h.swap(x, y)), n);
      bool gens = true;
      for (Frob k : {Frob::mu, Frob::eta, Frob::delta, Frob::eps})
        gens = gens &&
               run.eq(frob_functor(frobenius_cospan(k, x), h), h.frobenius(k, x));
      fgen.feed(gens, n);
    }
    for (const Agg* a : {&fid, &fcomp, &ften, &fsw, &fgen})
      a->emit(rep, seed_ctx);
  }

  return rep;
}

}  // namespace hypcat
