#ifndef HYPCAT_INSTANCES_HPP
#define HYPCAT_INSTANCES_HPP

#include <memory>
#include <string>
#include <vector>

#include "hypcat/finrel.hpp"
#include "hypcat/hyp.hpp"
#include "hypcat/linrel.hpp"

namespace hypcat {

/// The free hypergraph category itself: morphisms are canonical cospans.
class CospanInstance : public HypCategory {
 public:
  explicit CospanInstance(std::vector<Label> alphabet)
      : alphabet_(std::move(alphabet)) {}

  std::string name() const override { return "cospan"; }
  std::vector<Label> label_set() const override { return alphabet_; }

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

 private:
  std::vector<Label> alphabet_;
};

/// A linear relation tagged with its boundary objects; the dimension of
/// each boundary is the object's length (labels carry no dimension).
struct LinMorph {
  LabeledFinSet dom;
  LabeledFinSet cod;
  LinRel rel;

  bool operator==(const LinMorph&) const = default;
};

/// Linear relations over the rationals, with either the copy (diagonal)
/// or the add (sum) Frobenius structure on every wire.
class LinRelInstance : public HypCategory {
 public:
  LinRelInstance(std::vector<Label> alphabet, LinStructure structure)
      : alphabet_(std::move(alphabet)), structure_(structure) {}

  std::string name() const override {
    return structure_ == LinStructure::copy ? "linrel-copy" : "linrel-add";
  }
  std::vector<Label> label_set() const override { return alphabet_; }
  LinStructure structure() const { return structure_; }

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

 private:
  std::vector<Label> alphabet_;
  LinStructure structure_;
};

/// Relations between finite products of label-indexed carriers, with the
/// copy/diagonal Frobenius structure. Small carriers keep every hom-set
/// exhaustively enumerable.
class FinRelInstance : public HypCategory {
 public:
  /// Throws IllTyped unless every carrier size is positive.
  explicit FinRelInstance(Carriers carriers);

  std::string name() const override { return "finrel"; }
  std::vector<Label> label_set() const override;
  const Carriers& carriers() const { return carriers_; }

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

  /// Pushes each state tuple through the legs directly. The cospan's own
  /// relation has one tuple per apex valuation, so the default route is
  /// exponential in the apex; this costs |state| x carrier^(apex slots
  /// the left leg misses).
  Morph act_state(const Cospan& c, const Morph& state) const override;
  std::string show_morphism(const Morph& f) const override;

 private:
  Carriers carriers_;
};

std::shared_ptr<const HypCategory> cospan_instance(
    std::vector<Label> alphabet);
std::shared_ptr<const HypCategory> linrel_instance(std::vector<Label> alphabet,
                                                   LinStructure structure);
std::shared_ptr<const HypCategory> finrel_instance(Carriers carriers);

}  // namespace hypcat

#endif
