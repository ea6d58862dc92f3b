// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails or overruns its
// time budget. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypcat/algebra.hpp"
#include "hypcat/instances.hpp"
#include "oracles.hpp"

using namespace hypcat;

namespace {

std::vector<Label> ab() { return {intern("a"), intern("b")}; }

/// A random cospan with apex at most max_apex and feet at most max_feet,
/// built apex-first so the bounds hold by construction.
Cospan random_bounded(std::mt19937& rng, const std::vector<Label>& alphabet,
                      int max_apex, int max_feet) {
  std::uniform_int_distribution<int> apex_size(0, max_apex);
  int k = apex_size(rng);
  std::uniform_int_distribution<std::size_t> pick_label(0,
                                                        alphabet.size() - 1);
  std::vector<Label> apex;
  for (int j = 0; j < k; ++j) apex.push_back(alphabet[pick_label(rng)]);

  std::uniform_int_distribution<int> foot_size(0, max_feet);
  int d = k == 0 ? 0 : foot_size(rng);
  int c = k == 0 ? 0 : foot_size(rng);
  std::uniform_int_distribution<int> point(0, k == 0 ? 0 : k - 1);
  std::vector<Label> dom, cod;
  std::vector<int> left, right;
  for (int i = 0; i < d; ++i) {
    left.push_back(point(rng));
    dom.push_back(apex[left.back()]);
  }
  for (int i = 0; i < c; ++i) {
    right.push_back(point(rng));
    cod.push_back(apex[right.back()]);
  }
  return Cospan::make(LabeledFinSet{dom}, LabeledFinSet{cod},
                      LabeledFinSet{apex}, left, right);
}

// ---- criterion 1: Frobenius axiom suites -------------------------------------

bool frobenius_suites(std::string& note) {
  CospanInstance cos(ab());
  LinRelInstance copy(ab(), LinStructure::copy);
  LinRelInstance add(ab(), LinStructure::add);
  FinRelInstance fin({{intern("a"), 2}, {intern("b"), 3}});
  for (const HypCategory* h :
       std::initializer_list<const HypCategory*>{&cos, &copy, &add, &fin}) {
    Report rep = axiom_suite(*h, ab(), 2026, Suite::frobenius, 200);
    if (!rep.all_pass()) {
      note = h->name() + ": " + std::to_string(rep.failures()) + " failures";
      return false;
    }
  }
  return true;
}

// ---- criterion 2: decompose/eval round trip ----------------------------------

bool decompose_round_trip(std::string& note) {
  CospanInstance cos(ab());
  std::mt19937 rng(2026);

  std::vector<std::string> ten(10, "a"), seven(7, "a"), six(6, "a");
  Cospan fixed = Cospan::make(make_object(ten), make_object(six),
                              make_object(seven),
                              {1, 2, 3, 3, 1, 2, 5, 3, 5, 6},
                              {0, 1, 3, 4, 4, 6});
  Cospan canon = canonicalize(fixed);
  if (canon.left != std::vector<int>{2, 3, 4, 4, 2, 3, 5, 4, 5, 6} ||
      canon.right != std::vector<int>{0, 2, 4, 1, 1, 6}) {
    note = "ten-port regression lost its canonical form";
    return false;
  }
  Cospan back = std::any_cast<const Cospan&>(eval_term(decompose(fixed), cos));
  if (!equal(back, fixed)) {
    note = "ten-port regression does not round trip";
    return false;
  }

  for (int i = 0; i < 500; ++i) {
    Cospan c = random_bounded(rng, ab(), 8, 6);
    Cospan b = std::any_cast<const Cospan&>(eval_term(decompose(c), cos));
    if (!equal(b, c)) {
      note = "failure at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---- criterion 3: compact-closure suite --------------------------------------

bool compact_suites(std::string& note) {
  CospanInstance cos(ab());
  LinRelInstance copy(ab(), LinStructure::copy);
  LinRelInstance add(ab(), LinStructure::add);
  FinRelInstance fin({{intern("a"), 2}, {intern("b"), 2}});
  for (const HypCategory* h :
       std::initializer_list<const HypCategory*>{&cos, &copy, &add, &fin}) {
    Report rep = axiom_suite(*h, ab(), 2027, Suite::compact, 200);
    if (!rep.all_pass()) {
      note = h->name() + ": " + std::to_string(rep.failures()) + " failures";
      return false;
    }
  }
  return true;
}

// ---- criterion 4: pushout vs brute force -------------------------------------

bool pushout_oracle(std::string& note) {
  std::mt19937 rng(2028);
  int done = 0;
  while (done < 300) {
    LabeledFinSet x = random_object(ab(), rng, 3);
    LabeledFinSet y = random_object(ab(), rng, 3);
    LabeledFinSet z = random_object(ab(), rng, 3);
    Cospan a = random_cospan(x, y, ab(), rng, 1);
    Cospan b = random_cospan(y, z, ab(), rng, 1);
    Cospan raw = compose_raw(a, b);
    if (raw.apex.size() > 6) continue;  // keep the bijection search exact
    ++done;
    Cospan fast = compose(a, b);
    if (!oracles::isomorphic_bruteforce(fast, raw)) {
      note = "no apex bijection at case " + std::to_string(done);
      return false;
    }
    if (!(canonicalize(raw) == fast)) {
      note = "canonical forms differ at case " + std::to_string(done);
      return false;
    }
  }
  return true;
}

// ---- criterion 5: linear relation composition vs oracle ----------------------

bool linrel_oracle(std::string& note) {
  std::mt19937 rng(2029);
  std::uniform_int_distribution<int> dim(0, 4);
  for (int i = 0; i < 300; ++i) {
    int m = dim(rng), k = dim(rng), n = dim(rng);
    LinRel r = linrel_random(m, k, rng);
    LinRel s = linrel_random(k, n, rng);
    LinRel fast = linrel_compose(r, s);
    oracles::Rows slow = oracles::oracle_compose(r.basis, m, k, s.basis, n);
    if (fast.basis != slow) {
      note = "bases differ at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---- criterion 6: kleisli relabeling functoriality ---------------------------

bool kleisli_functoriality(std::string& note) {
  std::mt19937 rng(2030);
  std::vector<Label> src = ab();
  std::vector<Label> dst = {intern("u"), intern("v")};
  std::uniform_int_distribution<int> block_len(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, dst.size() - 1);

  for (int i = 0; i < 200; ++i) {
    KleisliMap f;
    for (Label l : src) {
      std::vector<Label> block;
      int len = block_len(rng);
      for (int t = 0; t < len; ++t) block.push_back(dst[pick(rng)]);
      f.assign[l] = block;
    }
    auto flat = [&](const LabeledFinSet& x) {
      return flatten_relabel(x, f).first;
    };

    LabeledFinSet x = random_object(src, rng, 3);
    LabeledFinSet y = random_object(src, rng, 3);
    LabeledFinSet z = random_object(src, rng, 3);
    Cospan c1 = random_cospan(x, y, src, rng);
    Cospan c2 = random_cospan(y, z, src, rng);
    Cospan c3 = random_cospan(y, z, src, rng);

    bool ok =
        equal(kleisli_map(identity_cospan(x), f), identity_cospan(flat(x))) &&
        equal(kleisli_map(compose(c1, c2), f),
              compose(kleisli_map(c1, f), kleisli_map(c2, f))) &&
        equal(kleisli_map(tensor(c1, c3), f),
              tensor(kleisli_map(c1, f), kleisli_map(c3, f)));
    for (Frob kind : {Frob::mu, Frob::eta, Frob::delta, Frob::eps})
      ok = ok && equal(kleisli_map(frobenius_cospan(kind, x), f),
                       frobenius_cospan(kind, flat(x)));
    if (!ok) {
      note = "failure at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---- criterion 7: the equivalence itself -------------------------------------

bool main_equivalence(std::string& note) {
  struct Pair {
    std::shared_ptr<const CospanAlgebra> a;
    std::shared_ptr<const HypCategory> h;
  };
  auto cos = cospan_instance(ab());
  auto add = linrel_instance(ab(), LinStructure::add);
  auto copy = linrel_instance(ab(), LinStructure::copy);
  auto fin = finrel_instance({{intern("a"), 2}, {intern("b"), 2}});
  std::vector<Pair> pairs = {{part_algebra(ab()), cos},
                             {psi(add), add},
                             {psi(copy), copy},
                             {psi(fin), fin}};
  for (const Pair& p : pairs) {
    Report rep = verify_equivalence(p.a, p.h, 200, 2031);
    if (!rep.all_pass()) {
      note = p.h->name() + ": " + std::to_string(rep.failures()) + " failures";
      return false;
    }
  }
  return true;
}

// ---- criterion 8: additive name asymmetry ------------------------------------

bool name_asymmetry(std::string& note) {
  LinRelInstance add(ab(), LinStructure::add);
  std::mt19937 rng(2032);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < 100; ++i) {
    int m = dim(rng), n = dim(rng);
    std::vector<Label> dl(m, intern("a")), cl(n, intern("a"));
    LinMorph f{LabeledFinSet{dl}, LabeledFinSet{cl}, linrel_random(m, n, rng)};

    Mat flipped;
    for (const auto& row : f.rel.basis) {
      auto r = row;
      for (int j = 0; j < m; ++j) r[j] = -r[j];
      flipped.push_back(std::move(r));
    }
    HypCategory::Morph named = gathr(add, HypCategory::Morph(f));
    if (!linrel_equal(std::any_cast<const LinMorph&>(named).rel,
                      linrel_make(0, m + n, flipped))) {
      note = "sign flip mismatch at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---- criterion 9: mutation sensitivity ---------------------------------------

/// Returns the co-generator's relation reinterpreted under the requested
/// generator's boundary split: the mu/delta (and eta/eps) swap.
class SwappedStructure final : public LinRelInstance {
 public:
  using LinRelInstance::LinRelInstance;

  Morph frobenius(Frob kind, const Obj& x) const override {
    Frob other;
    switch (kind) {
      case Frob::mu: other = Frob::delta; break;
      case Frob::delta: other = Frob::mu; break;
      case Frob::eta: other = Frob::eps; break;
      default: other = Frob::eta; break;
    }
    LinMorph base =
        std::any_cast<const LinMorph&>(LinRelInstance::frobenius(other, x));
    LinMorph out =
        std::any_cast<const LinMorph&>(LinRelInstance::frobenius(kind, x));
    out.rel.basis = base.rel.basis;  // same ambient space, wrong split
    return out;
  }
};

/// Discards the middle boundary instead of fusing it.
class WrongComp final : public PhiInstance {
 public:
  using PhiInstance::PhiInstance;

 protected:
  Cospan comp_for(const Obj& x, const Obj& y, const Obj& z) const override {
    LabeledFinSet apex = oplus(oplus(x, y), oplus(y, z));
    std::vector<int> left(apex.size());
    for (int i = 0; i < apex.size(); ++i) left[i] = i;
    std::vector<int> right;
    for (int i = 0; i < x.size(); ++i) right.push_back(i);
    for (int i = 0; i < z.size(); ++i)
      right.push_back(x.size() + 2 * y.size() + i);
    return Cospan::make(apex, oplus(x, z), apex, left, right);
  }
};

bool mutation_sensitivity(std::string& note) {
  // (a) mu <-> delta swap: the Frobenius suite must notice.
  SwappedStructure swapped(ab(), LinStructure::add);
  if (axiom_suite(swapped, ab(), 2033, Suite::frobenius, 50).all_pass()) {
    note = "mu/delta swap went undetected";
    return false;
  }

  // (b) wrong composition cospan in the algebra-built instance: the same
  // suite run against the corrupted instance must notice.
  WrongComp wrong(part_algebra(ab()));
  if (axiom_suite(wrong, ab(), 2034, Suite::frobenius, 50).all_pass()) {
    note = "wrong comp cospan went undetected";
    return false;
  }

  // (c) dropped canonicalization: representative-level equality must
  // disagree with the bijection oracle somewhere once compose skips the
  // canonical form.
  std::mt19937 rng(2035);
  bool caught = false;
  for (int i = 0; i < 2000 && !caught; ++i) {
    LabeledFinSet x = random_object(ab(), rng, 3);
    LabeledFinSet y = random_object(ab(), rng, 3);
    LabeledFinSet z = random_object(ab(), rng, 3);
    Cospan a = random_cospan(x, y, ab(), rng, 1);
    Cospan b = random_cospan(y, z, ab(), rng, 1);
    Cospan raw = compose_raw(a, b);
    if (raw.apex.size() > 6) continue;  // keep the bijection search exact
    Cospan fast = compose(a, b);
    caught = oracles::isomorphic_bruteforce(fast, raw) && !(raw == fast);
  }
  if (!caught) {
    note = "dropped canonicalization went undetected";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int num;
    const char* name;
    double budget_s;
    std::function<bool(std::string&)> fn;
  };
  std::vector<Criterion> criteria = {
      {1, "frobenius-axiom-suites", 10.0, frobenius_suites},
      {2, "decompose-eval-round-trip", 10.0, decompose_round_trip},
      {3, "compact-closure-suites", 10.0, compact_suites},
      {4, "pushout-vs-bruteforce", 30.0, pushout_oracle},
      {5, "linrel-vs-oracle", 10.0, linrel_oracle},
      {6, "kleisli-functoriality", 10.0, kleisli_functoriality},
      {7, "algebra-instance-equivalence", 60.0, main_equivalence},
      {8, "additive-name-asymmetry", 5.0, name_asymmetry},
      {9, "mutation-sensitivity", 60.0, mutation_sensitivity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (ok && dt > c.budget_s) {
      ok = false;
      note = "over time budget";
    }
    if (!ok) ++failures;
    std::printf("%s %d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.num, c.name,
                dt, note.empty() ? "" : " -- ", note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
