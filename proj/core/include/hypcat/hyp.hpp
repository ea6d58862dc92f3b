#ifndef HYPCAT_HYP_HPP
#define HYPCAT_HYP_HPP

#include <any>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hypcat/cospan.hpp"
#include "hypcat/report.hpp"
#include "hypcat/term.hpp"

namespace hypcat {

/// The strict hypergraph-category contract. Objects are label lists over
/// the instance's alphabet (the object monoid is free on it); morphisms
/// are opaque values owned by the instance. Implementations must be
/// safe for concurrent calls on shared immutable state.
///
/// Instances without decidable morphism equality may return false from
/// has_equality(); the verification suites skip them.
class HypCategory {
 public:
  using Obj = LabeledFinSet;
  using Morph = std::any;

  virtual ~HypCategory() = default;

  virtual std::string name() const = 0;
  virtual std::vector<Label> label_set() const = 0;
  virtual bool has_equality() const { return true; }

  virtual Obj dom(const Morph& f) const = 0;
  virtual Obj cod(const Morph& f) const = 0;

  virtual Morph identity(const Obj& x) const = 0;
  virtual Morph compose(const Morph& f, const Morph& g) const = 0;
  virtual Morph tensor(const Morph& f, const Morph& g) const = 0;
  virtual Morph swap(const Obj& x, const Obj& y) const = 0;
  virtual Morph frobenius(Frob kind, const Obj& x) const = 0;
  virtual bool equal(const Morph& f, const Morph& g) const = 0;

  /// A pseudo-random morphism x -> y. The default draws a random cospan
  /// over the label alphabet and maps it through frob_functor; instances
  /// whose hom-sets are larger than the Frobenius-generated fragment
  /// should override.
  virtual Morph random_morphism(const Obj& x, const Obj& y,
                                std::mt19937& rng) const;

  /// Acts a cospan on a state (a morphism {} -> dom(c)), returning a
  /// state {} -> cod(c). The default composes with the cospan's
  /// frob_functor image; instances whose morphisms grow exponentially
  /// with boundary width should override with a direct action.
  virtual Morph act_state(const Cospan& c, const Morph& state) const;

  virtual std::string show_morphism(const Morph&) const {
    return "<morphism>";
  }
};

/// cup = eta ; delta and cap = mu ; eps: the canonical self-duality.
HypCategory::Morph cup(const HypCategory& h, const HypCategory::Obj& x);
HypCategory::Morph cap(const HypCategory& h, const HypCategory::Obj& x);

/// The name of f: X -> Y, a state {} -> X (+) Y: cup_X ; (id_X (*) f).
HypCategory::Morph gathr(const HypCategory& h, const HypCategory::Morph& f);

/// Inverse of gathr: (id_X (*) g) ; (cap_X (*) id_Y). The split of g's
/// codomain must be supplied.
HypCategory::Morph parse_name(const HypCategory& h,
                              const HypCategory::Morph& g,
                              const HypCategory::Obj& x,
                              const HypCategory::Obj& y);

/// comp = id_X (*) cap_Y (*) id_Z : X (+) Y (+) Y (+) Z -> X (+) Z.
HypCategory::Morph comp_morphism(const HypCategory& h,
                                 const HypCategory::Obj& x,
                                 const HypCategory::Obj& y,
                                 const HypCategory::Obj& z);

/// Evaluates a term: seq to compose, par to tensor, generators to the
/// instance's structure, boxes to their bindings (UnboundBox otherwise).
HypCategory::Morph eval_term(
    const TermPtr& t, const HypCategory& h,
    const std::map<std::string, HypCategory::Morph>& boxes = {});

/// The counit functor at h: sends a cospan to the h-morphism built from
/// its generator decomposition. Identity on the cospan instance itself.
/// Throws UnknownLabel if c uses labels outside h's alphabet.
HypCategory::Morph frob_functor(const Cospan& c, const HypCategory& h);

/// Base change along a Kleisli map f: the returned instance has objects
/// over f's source alphabet, and a morphism x -> y is an h2-morphism
/// flat(x;f) -> flat(y;f); all structure is inherited through
/// flattening.
std::shared_ptr<const HypCategory> base_change(
    std::shared_ptr<const HypCategory> h2, KleisliMap f);

/// Which equation families axiom_suite checks.
enum class Suite { frobenius, compact, functor, all };

/// Verifies, against h's equality, the nine Frobenius equations, the
/// four product-coherence equations, unit coherence, both zigzag
/// identities, the gathr/parse bijection, and the comp equations, on
/// the given labels plus `cases` seeded random objects and morphisms.
/// The functor family checks that frob_functor preserves identities,
/// composition, tensor, swaps, and generators.
Report axiom_suite(const HypCategory& h, const std::vector<Label>& labels,
                   std::uint64_t seed = 0, Suite kind = Suite::all,
                   int cases = 200);

}  // namespace hypcat

#endif
