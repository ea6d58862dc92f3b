#ifndef HYPCAT_ALGEBRA_HPP
#define HYPCAT_ALGEBRA_HPP

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hypcat/cospan.hpp"
#include "hypcat/hyp.hpp"
#include "hypcat/report.hpp"

namespace hypcat {

/// A cospan-algebra: a lax symmetric monoidal functor from labeled
/// cospans to Set, presented intensionally. Carriers are never
/// enumerated; an algebra exposes membership, equality, the action of
/// cospans, and the laxators gamma0 (an element of A(empty)) and gamma2
/// (pairing A(X) x A(Y) -> A(X (+) Y)).
///
/// Laws (checked by algebra_coherence_suite, not enforced here):
/// act(id) = id, act(c1;c2) = act(c2) . act(c1), gamma2 associative
/// with unit gamma0 and symmetric via the swap cospan's action.
class CospanAlgebra {
 public:
  using Obj = LabeledFinSet;
  using Elem = std::any;

  virtual ~CospanAlgebra() = default;

  virtual std::string name() const = 0;
  virtual std::vector<Label> label_set() const = 0;

  /// True iff a is an element of the carrier at x.
  virtual bool member(const Obj& x, const Elem& a) const = 0;
  virtual bool equal(const Obj& x, const Elem& a, const Elem& b) const = 0;

  /// The action A(c): A(X) -> A(Y) of a cospan c: X -> Y.
  virtual Elem act(const Cospan& c, const Elem& a) const = 0;

  virtual Elem gamma0() const = 0;
  virtual Elem gamma2(const Obj& x, const Obj& y, const Elem& a,
                      const Elem& b) const = 0;

  /// A pseudo-random element of the carrier at x.
  virtual Elem sample(const Obj& x, std::mt19937& rng) const = 0;

  virtual std::string show_elem(const Obj&, const Elem&) const {
    return "<element>";
  }
};

/// The initial cospan-algebra: Part(X) is the set of canonical cospans
/// empty -> X, acted on by postcomposition, with tensor as gamma2.
std::shared_ptr<const CospanAlgebra> part_algebra(std::vector<Label> alphabet);

/// All elements of Part(x) with apex size at most max_apex, canonical,
/// without duplicates. Carriers are infinite (isolated apex points are
/// unbounded), so a bound is mandatory.
std::vector<Cospan> part_enumerate(const LabeledFinSet& x, int max_apex,
                                   const std::vector<Label>& alphabet);

/// The algebra of states of a hypergraph instance: carrier at X is
/// H(empty, X), act(c, h) composes h with frob_functor(c), gamma0 is
/// the empty identity, gamma2 is tensor.
std::shared_ptr<const CospanAlgebra> psi(std::shared_ptr<const HypCategory> h);

/// A morphism of phi(A): an element of A(dom (+) cod) with a recorded
/// boundary split.
struct PhiMorph {
  LabeledFinSet dom;
  LabeledFinSet cod;
  CospanAlgebra::Elem e;
};

/// The hypergraph instance built from a cospan-algebra: hom(X, Y) is
/// A(X (+) Y), composition acts with the comp cospan on the laxator
/// pairing, and every structure morphism is the action of the matching
/// name-form cospan on gamma0.
class PhiInstance : public HypCategory {
 public:
  explicit PhiInstance(std::shared_ptr<const CospanAlgebra> a)
      : a_(std::move(a)) {}

  std::string name() const override { return "phi(" + a_->name() + ")"; }
  std::vector<Label> label_set() const override { return a_->label_set(); }
  const CospanAlgebra& algebra() const { return *a_; }

  Obj dom(const Morph& f) const override;
  Obj cod(const Morph& f) const override;
  Morph identity(const Obj& x) const override;
  Morph compose(const Morph& f, const Morph& g) const override;
  Morph tensor(const Morph& f, const Morph& g) const override;
  Morph swap(const Obj& x, const Obj& y) const override;
  Morph frobenius(Frob kind, const Obj& x) const override;
  bool equal(const Morph& f, const Morph& g) const override;
  Morph random_morphism(const Obj& x, const Obj& y,
                        std::mt19937& rng) const override;
  std::string show_morphism(const Morph& f) const override;

 protected:
  /// The composition cospan X (+) Y (+) Y (+) Z -> X (+) Z. Overridable
  /// so tests can inject a wrong cospan and watch verification fail.
  virtual Cospan comp_for(const Obj& x, const Obj& y, const Obj& z) const;

 private:
  std::shared_ptr<const CospanAlgebra> a_;
};

std::shared_ptr<const HypCategory> phi(std::shared_ptr<const CospanAlgebra> a);

/// A morphism of cospan-algebras A -> B: a Kleisli relabeling f of the
/// label sets together with a carrier map alpha: A(X) -> B(flat(X;f))
/// natural in the cospan action and monoidal for the laxators (laws
/// checked by check_algebra_morphism).
struct AlgebraMorphism {
  KleisliMap f;
  std::function<CospanAlgebra::Elem(const CospanAlgebra::Obj&,
                                    const CospanAlgebra::Elem&)>
      alpha;
};

/// An identity-on-objects structure-preserving functor between
/// hypergraph instances over the same labels, given by its morphism map.
struct HypFunctor {
  std::shared_ptr<const HypCategory> src;
  std::shared_ptr<const HypCategory> dst;
  std::function<HypCategory::Morph(const HypCategory::Morph&)> map;
};

/// The unique algebra morphism out of part_algebra: p maps to act(p,
/// gamma0).
AlgebraMorphism initial_map(std::shared_ptr<const CospanAlgebra> a);

/// Applies a hypergraph functor statewise: alpha at X sends a state
/// empty -> X of the source to its image, over the identity relabeling.
AlgebraMorphism psi_on_functor(const HypFunctor& f);

/// The name functor H -> phi(psi(H)): identity on objects, f maps to
/// its name gathr(f).
HypFunctor nu(std::shared_ptr<const HypCategory> h);

/// Precomposition with the Kleisli relabeling: carrier at X is
/// A'(flat(X;f)), act goes through kleisli_map.
std::shared_ptr<const CospanAlgebra> pullback_algebra(
    std::shared_ptr<const CospanAlgebra> a2, KleisliMap f);

/// Checks naturality (alpha . act = act . kleisli_map . alpha) and
/// monoidality (gamma0, gamma2 preserved) of m on seeded random
/// elements and cospans.
Report check_algebra_morphism(const CospanAlgebra& a, const CospanAlgebra& b,
                              const AlgebraMorphism& m, std::uint64_t seed = 0,
                              int cases = 100);

/// Checks functoriality of act and associativity, unitality, and
/// symmetry of the laxators on seeded random data.
Report algebra_coherence_suite(const CospanAlgebra& a,
                               const std::vector<Label>& labels,
                               std::uint64_t seed = 0, int cases = 100);

/// The two-sided equivalence check between a and h (which need not be
/// related): (i) psi(phi(a)) has the same carriers and action as a on
/// samples; (ii) nu(h) is a structure-preserving bijection on sampled
/// hom-sets, with parse_name as its inverse; (iii) the Frobenius
/// structure of phi(a) at any cospan c is the action of c's name on
/// gamma0.
Report verify_equivalence(std::shared_ptr<const CospanAlgebra> a,
                          std::shared_ptr<const HypCategory> h,
                          int samples = 200, std::uint64_t seed = 0);

}  // namespace hypcat

#endif
