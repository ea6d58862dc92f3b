#include "hypcat/algebra.hpp"

#include <set>
#include <utility>

#include "hypcat/errors.hpp"

namespace hypcat {

namespace {

using Obj = CospanAlgebra::Obj;
using Elem = CospanAlgebra::Elem;
using Morph = HypCategory::Morph;

const Cospan& as_part(const Elem& a) { return std::any_cast<const Cospan&>(a); }
const PhiMorph& as_phi(const HypCategory::Morph& f) {
  return std::any_cast<const PhiMorph&>(f);
}

KleisliMap identity_kleisli(const std::vector<Label>& labels) {
  KleisliMap f;
  for (Label l : labels) f.assign[l] = {l};
  return f;
}

// ---- the initial algebra ----------------------------------------------------

class PartAlgebra : public CospanAlgebra {
 public:
  explicit PartAlgebra(std::vector<Label> alphabet)
      : alphabet_(std::move(alphabet)) {}

  std::string name() const override { return "part"; }
  std::vector<Label> label_set() const override { return alphabet_; }

  bool member(const Obj& x, const Elem& a) const override {
    const Cospan* c = std::any_cast<Cospan>(&a);
    return c && c->dom.empty() && c->cod == x;
  }
  bool equal(const Obj&, const Elem& a, const Elem& b) const override {
    return hypcat::equal(as_part(a), as_part(b));
  }
  Elem act(const Cospan& c, const Elem& a) const override {
    return compose(as_part(a), c);
  }
  Elem gamma0() const override { return identity_cospan(LabeledFinSet{}); }
  Elem gamma2(const Obj&, const Obj&, const Elem& a,
              const Elem& b) const override {
    return tensor(as_part(a), as_part(b));
  }
  Elem sample(const Obj& x, std::mt19937& rng) const override {
    return random_cospan(LabeledFinSet{}, x, alphabet_, rng);
  }
  std::string show_elem(const Obj&, const Elem& a) const override {
    return show(as_part(a));
  }

 private:
  std::vector<Label> alphabet_;
};

/// Length-n digit strings over [0, k).
std::vector<std::vector<int>> all_functions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  if (k == 0) return out;
  std::vector<int> t(n, 0);
  while (true) {
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] + 1 >= k) {
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

// ---- states of a hypergraph instance ---------------------------------------

class PsiAlgebra : public CospanAlgebra {
 public:
  explicit PsiAlgebra(std::shared_ptr<const HypCategory> h)
      : h_(std::move(h)) {}

  std::string name() const override { return "psi(" + h_->name() + ")"; }
  std::vector<Label> label_set() const override { return h_->label_set(); }

  bool member(const Obj& x, const Elem& a) const override {
    try {
      return h_->dom(a).empty() && h_->cod(a) == x;
    } catch (const std::bad_any_cast&) {
      return false;
    }
  }
  bool equal(const Obj&, const Elem& a, const Elem& b) const override {
    return h_->equal(a, b);
  }
  Elem act(const Cospan& c, const Elem& a) const override {
    return h_->act_state(c, a);
  }
  Elem gamma0() const override { return h_->identity(LabeledFinSet{}); }
  Elem gamma2(const Obj&, const Obj&, const Elem& a,
              const Elem& b) const override {
    return h_->tensor(a, b);
  }
  Elem sample(const Obj& x, std::mt19937& rng) const override {
    return h_->random_morphism(LabeledFinSet{}, x, rng);
  }
  std::string show_elem(const Obj&, const Elem& a) const override {
    return h_->show_morphism(a);
  }

 private:
  std::shared_ptr<const HypCategory> h_;
};

// ---- pullback along a relabeling -------------------------------------------

class PullbackAlgebra : public CospanAlgebra {
 public:
  PullbackAlgebra(std::shared_ptr<const CospanAlgebra> a2, KleisliMap f)
      : a2_(std::move(a2)), f_(std::move(f)) {}

  std::string name() const override { return "pullback(" + a2_->name() + ")"; }
  std::vector<Label> label_set() const override { return f_.source(); }

  bool member(const Obj& x, const Elem& a) const override {
    return a2_->member(flat(x), a);
  }
  bool equal(const Obj& x, const Elem& a, const Elem& b) const override {
    return a2_->equal(flat(x), a, b);
  }
  Elem act(const Cospan& c, const Elem& a) const override {
    return a2_->act(kleisli_map(c, f_), a);
  }
  Elem gamma0() const override { return a2_->gamma0(); }
  Elem gamma2(const Obj& x, const Obj& y, const Elem& a,
              const Elem& b) const override {
    return a2_->gamma2(flat(x), flat(y), a, b);
  }
  Elem sample(const Obj& x, std::mt19937& rng) const override {
    return a2_->sample(flat(x), rng);
  }
  std::string show_elem(const Obj& x, const Elem& a) const override {
    return a2_->show_elem(flat(x), a);
  }

 private:
  Obj flat(const Obj& x) const { return flatten_relabel(x, f_).first; }

  std::shared_ptr<const CospanAlgebra> a2_;
  KleisliMap f_;
};

}  // namespace

std::shared_ptr<const CospanAlgebra> part_algebra(std::vector<Label> alphabet) {
  return std::make_shared<PartAlgebra>(std::move(alphabet));
}

std::vector<Cospan> part_enumerate(const LabeledFinSet& x, int max_apex,
                                   const std::vector<Label>& alphabet) {
  std::vector<Cospan> out;
  std::set<std::string> seen;
  int nl = static_cast<int>(alphabet.size());
  for (int k = 0; k <= max_apex; ++k) {
    for (const auto& leg : all_functions(x.size(), k)) {
      std::vector<Label> apex(k, Label{});
      std::vector<bool> hit(k, false);
      bool consistent = true;
      for (int i = 0; i < x.size(); ++i) {
        if (hit[leg[i]] && !(apex[leg[i]] == x.labels[i])) consistent = false;
        apex[leg[i]] = x.labels[i];
        hit[leg[i]] = true;
      }
      if (!consistent) continue;
      std::vector<int> free;
      for (int j = 0; j < k; ++j)
        if (!hit[j]) free.push_back(j);
      for (const auto& pick : all_functions(static_cast<int>(free.size()), nl)) {
        std::vector<Label> labels = apex;
        for (size_t t = 0; t < free.size(); ++t)
          labels[free[t]] = alphabet[pick[t]];
        Cospan c = canonicalize(Cospan::make(
            LabeledFinSet{}, x, LabeledFinSet{labels}, {}, leg));
        if (seen.insert(show(c)).second) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::shared_ptr<const CospanAlgebra> psi(
    std::shared_ptr<const HypCategory> h) {
  return std::make_shared<PsiAlgebra>(std::move(h));
}

// ---- the hypergraph instance of an algebra ----------------------------------

HypCategory::Obj PhiInstance::dom(const Morph& f) const {
  return as_phi(f).dom;
}
HypCategory::Obj PhiInstance::cod(const Morph& f) const {
  return as_phi(f).cod;
}
HypCategory::Morph PhiInstance::identity(const Obj& x) const {
  return PhiMorph{x, x,
                  a_->act(name_cospan(identity_cospan(x)), a_->gamma0())};
}
HypCategory::Morph PhiInstance::compose(const Morph& f, const Morph& g) const {
  const PhiMorph& a = as_phi(f);
  const PhiMorph& b = as_phi(g);
  if (!(a.cod == b.dom))
    throw BoundaryMismatch("composition boundary mismatch in phi instance");
  Elem pair = a_->gamma2(oplus(a.dom, a.cod), oplus(b.dom, b.cod), a.e, b.e);
  return PhiMorph{a.dom, b.cod,
                  a_->act(comp_for(a.dom, a.cod, b.cod), pair)};
}
HypCategory::Morph PhiInstance::tensor(const Morph& f, const Morph& g) const {
  const PhiMorph& a = as_phi(f);
  const PhiMorph& b = as_phi(g);
  Elem pair = a_->gamma2(oplus(a.dom, a.cod), oplus(b.dom, b.cod), a.e, b.e);
  Cospan mid = hypcat::tensor(
      identity_cospan(a.dom),
      hypcat::tensor(swap_cospan(a.cod, b.dom), identity_cospan(b.cod)));
  return PhiMorph{oplus(a.dom, b.dom), oplus(a.cod, b.cod),
                  a_->act(mid, pair)};
}
HypCategory::Morph PhiInstance::swap(const Obj& x, const Obj& y) const {
  return PhiMorph{oplus(x, y), oplus(y, x),
                  a_->act(name_cospan(swap_cospan(x, y)), a_->gamma0())};
}
HypCategory::Morph PhiInstance::frobenius(Frob kind, const Obj& x) const {
  Cospan g = frobenius_cospan(kind, x);
  return PhiMorph{g.dom, g.cod, a_->act(name_cospan(g), a_->gamma0())};
}
bool PhiInstance::equal(const Morph& f, const Morph& g) const {
  const PhiMorph& a = as_phi(f);
  const PhiMorph& b = as_phi(g);
  return a.dom == b.dom && a.cod == b.cod &&
         a_->equal(oplus(a.dom, a.cod), a.e, b.e);
}
HypCategory::Morph PhiInstance::random_morphism(const Obj& x, const Obj& y,
                                                std::mt19937& rng) const {
  return PhiMorph{x, y, a_->sample(oplus(x, y), rng)};
}
std::string PhiInstance::show_morphism(const Morph& f) const {
  const PhiMorph& a = as_phi(f);
  return show(a.dom) + " -> " + show(a.cod) + " as " +
         a_->show_elem(oplus(a.dom, a.cod), a.e);
}
Cospan PhiInstance::comp_for(const Obj& x, const Obj& y, const Obj& z) const {
  return comp_cospan(x, y, z);
}

std::shared_ptr<const HypCategory> phi(
    std::shared_ptr<const CospanAlgebra> a) {
  return std::make_shared<PhiInstance>(std::move(a));
}

// ---- algebra morphisms -------------------------------------------------------

AlgebraMorphism initial_map(std::shared_ptr<const CospanAlgebra> a) {
  AlgebraMorphism m;
  m.f = identity_kleisli(a->label_set());
  m.alpha = [a](const Obj&, const Elem& p) {
    return a->act(as_part(p), a->gamma0());
  };
  return m;
}

AlgebraMorphism psi_on_functor(const HypFunctor& f) {
  AlgebraMorphism m;
  m.f = identity_kleisli(f.src->label_set());
  m.alpha = [map = f.map](const Obj&, const Elem& h) { return map(h); };
  return m;
}

HypFunctor nu(std::shared_ptr<const HypCategory> h) {
  HypFunctor f;
  f.src = h;
  f.dst = phi(psi(h));
  f.map = [h](const HypCategory::Morph& g) -> HypCategory::Morph {
    return PhiMorph{h->dom(g), h->cod(g), gathr(*h, g)};
  };
  return f;
}

std::shared_ptr<const CospanAlgebra> pullback_algebra(
    std::shared_ptr<const CospanAlgebra> a2, KleisliMap f) {
  return std::make_shared<PullbackAlgebra>(std::move(a2), std::move(f));
}

// ---- verification -----------------------------------------------------------

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
    if (!pass)
      ctx += " (first failure at case " + std::to_string(first_failure) + ")";
    rep.lines.push_back({pass, name, ctx});
  }
};

}  // namespace

Report check_algebra_morphism(const CospanAlgebra& a, const CospanAlgebra& b,
                              const AlgebraMorphism& m, std::uint64_t seed,
                              int cases) {
  Report rep;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<Label> labels = a.label_set();
  std::string ctx =
      "random n=" + std::to_string(cases) + " seed=" + std::to_string(seed);

  auto flat = [&](const Obj& x) { return flatten_relabel(x, m.f).first; };
  Agg nat{"morphism-naturality"}, g2{"morphism-gamma2"};
  for (int i = 0; i < cases; ++i) {
    Obj x = random_object(labels, rng, 2);
    Obj y = random_object(labels, rng, 2);
    Elem ax = a.sample(x, rng);
    Elem ay = a.sample(y, rng);
    Cospan c = random_cospan(x, y, labels, rng);
    nat.feed(b.equal(flat(y), m.alpha(y, a.act(c, ax)),
                     b.act(kleisli_map(c, m.f), m.alpha(x, ax))),
             i);
    g2.feed(b.equal(flat(oplus(x, y)),
                    m.alpha(oplus(x, y), a.gamma2(x, y, ax, ay)),
                    b.gamma2(flat(x), flat(y), m.alpha(x, ax),
                             m.alpha(y, ay))),
            i);
  }
  nat.emit(rep, ctx);
  rep.add(b.equal(LabeledFinSet{}, m.alpha(LabeledFinSet{}, a.gamma0()),
                  b.gamma0()),
          "morphism-gamma0", "");
  g2.emit(rep, ctx);
  return rep;
}

Report algebra_coherence_suite(const CospanAlgebra& a,
                               const std::vector<Label>& labels,
                               std::uint64_t seed, int cases) {
  Report rep;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::string ctx =
      "random n=" + std::to_string(cases) + " seed=" + std::to_string(seed);

  Agg act_id{"act-identity"}, act_comp{"act-compose"}, unit{"gamma2-unit"},
      assoc{"gamma2-assoc"}, sym{"gamma2-symmetry"};
  for (int i = 0; i < cases; ++i) {
    Obj x = random_object(labels, rng, 2);
    Obj y = random_object(labels, rng, 2);
    Obj z = random_object(labels, rng, 2);
    Elem ax = a.sample(x, rng);
    Elem ay = a.sample(y, rng);
    Elem az = a.sample(z, rng);
    Cospan c1 = random_cospan(x, y, labels, rng);
    Cospan c2 = random_cospan(y, z, labels, rng);

    act_id.feed(a.equal(x, a.act(identity_cospan(x), ax), ax), i);
    act_comp.feed(
        a.equal(z, a.act(compose(c1, c2), ax), a.act(c2, a.act(c1, ax))), i);
    unit.feed(a.equal(x, a.gamma2(LabeledFinSet{}, x, a.gamma0(), ax), ax) &&
                  a.equal(x, a.gamma2(x, LabeledFinSet{}, ax, a.gamma0()), ax),
              i);
    assoc.feed(
        a.equal(oplus(oplus(x, y), z),
                a.gamma2(oplus(x, y), z, a.gamma2(x, y, ax, ay), az),
                a.gamma2(x, oplus(y, z), ax, a.gamma2(y, z, ay, az))),
        i);
    sym.feed(a.equal(oplus(y, x),
                     a.act(swap_cospan(x, y), a.gamma2(x, y, ax, ay)),
                     a.gamma2(y, x, ay, ax)),
             i);
  }
  for (const Agg* g : {&act_id, &act_comp, &unit, &assoc, &sym})
    g->emit(rep, ctx);
  return rep;
}

Report verify_equivalence(std::shared_ptr<const CospanAlgebra> a,
                          std::shared_ptr<const HypCategory> h, int samples,
                          std::uint64_t seed) {
  Report rep;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::string ctx =
      "random n=" + std::to_string(samples) + " seed=" + std::to_string(seed);

  // (i) psi(phi(a)) has a's carriers, action, and laxators.
  {
    std::shared_ptr<const HypCategory> p = phi(a);
    std::shared_ptr<const CospanAlgebra> a2 = psi(p);
    std::vector<Label> labels = a->label_set();
    const Obj none{};

    Agg carrier{"psi-phi-carriers"}, action{"psi-phi-action"},
        g2{"psi-phi-gamma2"};
    for (int i = 0; i < samples; ++i) {
      Obj x = random_object(labels, rng, 2);
      Obj y = random_object(labels, rng, 2);
      Elem ax = a->sample(x, rng);
      Elem ay = a->sample(y, rng);
      Cospan c = random_cospan(x, y, labels, rng);
      Elem wx = PhiMorph{none, x, ax};

      carrier.feed(a2->member(x, wx) &&
                       a->member(x, as_phi(a2->sample(x, rng)).e),
                   i);
      action.feed(a->equal(y, as_phi(a2->act(c, wx)).e, a->act(c, ax)), i);
      g2.feed(a->equal(
                  oplus(x, y),
                  as_phi(a2->gamma2(x, y, wx, Elem(PhiMorph{none, y, ay}))).e,
                  a->gamma2(x, y, ax, ay)),
              i);
    }
    carrier.emit(rep, ctx);
    action.emit(rep, ctx);
    rep.add(a->equal(none, as_phi(a2->gamma0()).e, a->gamma0()),
            "psi-phi-gamma0", "");
    g2.emit(rep, ctx);
  }

  // (ii) nu is a hypergraph functor and a bijection on sampled hom-sets.
  {
    HypFunctor f = nu(h);
    const HypCategory& d = *f.dst;
    std::vector<Label> labels = h->label_set();

    Agg nid{"nu-identity"}, ncomp{"nu-compose"}, nten{"nu-tensor"},
        nsw{"nu-swap"}, ngen{"nu-generators"}, pg{"nu-parse-gathr"},
        gp{"nu-gathr-parse"};
    for (int i = 0; i < samples; ++i) {
      Obj x = random_object(labels, rng, 2);
      Obj y = random_object(labels, rng, 2);
      Obj z = random_object(labels, rng, 2);
      Morph mf = h->random_morphism(x, y, rng);
      Morph mg = h->random_morphism(y, z, rng);
      Morph mk = h->random_morphism(z, x, rng);

      nid.feed(d.equal(f.map(h->identity(x)), d.identity(x)), i);
      ncomp.feed(d.equal(f.map(h->compose(mf, mg)),
                         d.compose(f.map(mf), f.map(mg))),
                 i);
      nten.feed(d.equal(f.map(h->tensor(mf, mk)), d.tensor(f.map(mf), f.map(mk))),
                i);
      nsw.feed(d.equal(f.map(h->swap(x, y)), d.swap(x, y)), i);
      bool gens = true;
      for (Frob k : {Frob::mu, Frob::eta, Frob::delta, Frob::eps})
        gens = gens && d.equal(f.map(h->frobenius(k, x)), d.frobenius(k, x));
      ngen.feed(gens, i);
      pg.feed(h->equal(parse_name(*h, gathr(*h, mf), x, y), mf), i);
      Morph st = h->random_morphism(LabeledFinSet{}, oplus(x, y), rng);
      gp.feed(h->equal(gathr(*h, parse_name(*h, st, x, y)), st), i);
    }
    for (const Agg* g : {&nid, &ncomp, &nten, &nsw, &ngen, &pg, &gp})
      g->emit(rep, ctx);
  }

  // (iii) the Frobenius structure of phi(a) is the action of names.
  {
    std::shared_ptr<const HypCategory> p = phi(a);
    std::vector<Label> labels = a->label_set();

    Agg names{"frobenius-from-names"};
    for (int i = 0; i < samples; ++i) {
      Obj x = random_object(labels, rng, 2);
      Obj y = random_object(labels, rng, 2);
      Cospan c = random_cospan(x, y, labels, rng);
      Morph expect = PhiMorph{x, y, a->act(name_cospan(c), a->gamma0())};
      names.feed(p->equal(frob_functor(c, *p), expect), i);
    }
    names.emit(rep, ctx);
  }
  return rep;
}

}  // namespace hypcat
