#ifndef HYPCAT_LABEL_HPP
#define HYPCAT_LABEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypcat/errors.hpp"

namespace hypcat {

/// An interned wire label. Two labels are equal iff their symbols are
/// identical; the total order is the interning order (first seen wins),
/// so loading a signature file fixes the order of its labels by
/// declaration order.
struct Label {
  std::uint32_t id = 0;
  auto operator<=>(const Label&) const = default;
};

/// Interns a symbol, returning the same Label for the same spelling.
/// Thread-safe.
Label intern(std::string_view name);

/// The spelling of an interned label.
const std::string& label_name(Label l);

/// A labeled finite set: the underlying set is {0, ..., size()-1} and
/// element i carries labels[i]. Indices are 0-based throughout the
/// library.
struct LabeledFinSet {
  std::vector<Label> labels;

  LabeledFinSet() = default;
  explicit LabeledFinSet(std::vector<Label> ls) : labels(std::move(ls)) {}

  int size() const { return static_cast<int>(labels.size()); }
  bool empty() const { return labels.empty(); }
  bool operator==(const LabeledFinSet&) const = default;
};

/// Builds a labeled finite set from label spellings (interning them).
LabeledFinSet make_object(const std::vector<std::string>& names);

/// Monoidal product on objects: concatenation. Strictly associative
/// and unital with unit the empty list.
LabeledFinSet oplus(const LabeledFinSet& x, const LabeledFinSet& y);

/// A label-preserving function between labeled finite sets:
/// dom.labels[i] == cod.labels[map[i]] for every i.
struct TypedFunction {
  LabeledFinSet dom;
  LabeledFinSet cod;
  std::vector<int> map;

  /// Validates typing; throws IllTyped on a violation.
  static TypedFunction make(LabeledFinSet dom, LabeledFinSet cod,
                            std::vector<int> map);

  bool operator==(const TypedFunction&) const = default;
};

/// Identity function on an object.
TypedFunction identity_fn(const LabeledFinSet& x);

/// Composition f then g. Throws CodomainMismatch unless f.cod == g.dom.
TypedFunction compose_fn(const TypedFunction& f, const TypedFunction& g);

/// Monoidal product of functions: domains and codomains concatenate,
/// g's indices are shifted by |f.cod|.
TypedFunction oplus_fn(const TypedFunction& f, const TypedFunction& g);

/// A Kleisli relabeling: each label of the source set is assigned a
/// finite (possibly empty) list of target labels.
struct KleisliMap {
  std::map<Label, std::vector<Label>> assign;

  /// The block assigned to l; throws UnknownLabel if l has none.
  const std::vector<Label>& operator()(Label l) const;

  /// Source labels in label order.
  std::vector<Label> source() const;
};

/// Builds a Kleisli map from spellings.
KleisliMap make_kleisli(
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        assign);

/// Flattens an object along a Kleisli map: each element is replaced by
/// its assigned block. Returns the flattened object together with the
/// offset at which each original element's block begins.
std::pair<LabeledFinSet, std::vector<int>> flatten_relabel(
    const LabeledFinSet& x, const KleisliMap& f);

}  // namespace hypcat

#endif
