#ifndef HYPCAT_FINREL_HPP
#define HYPCAT_FINREL_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "hypcat/frob.hpp"
#include "hypcat/label.hpp"

namespace hypcat {

/// One related pair of index tuples (domain values, codomain values).
using FinTuple = std::pair<std::vector<int>, std::vector<int>>;

/// A finite relation between products of label-indexed carriers: each
/// label l names a carrier {0, ..., size(l)-1}, and the relation is the
/// sorted, duplicate-free set of its tuples.
struct FinRel {
  LabeledFinSet dom;
  LabeledFinSet cod;
  std::vector<FinTuple> tuples;

  bool operator==(const FinRel&) const = default;
};

/// Carrier sizes, one per label; all sizes positive.
using Carriers = std::map<Label, int>;

/// Sorts and deduplicates; validates tuple arities and value bounds.
FinRel finrel_make(const Carriers& car, LabeledFinSet dom, LabeledFinSet cod,
                   std::vector<FinTuple> tuples);

/// Existential join over the middle tuple. Throws BoundaryMismatch.
FinRel finrel_compose(const FinRel& r, const FinRel& s);

/// Cartesian pairing with concatenated boundaries.
FinRel finrel_tensor(const FinRel& r, const FinRel& s);

FinRel finrel_identity(const Carriers& car, const LabeledFinSet& x);
FinRel finrel_swap(const Carriers& car, const LabeledFinSet& x,
                   const LabeledFinSet& y);

/// The copy/diagonal hypergraph structure: mu relates (t,t) to t, eta is
/// total, delta and eps are their mirrors.
FinRel finrel_frobenius(const Carriers& car, Frob kind,
                        const LabeledFinSet& x);

/// Every tuple over the carriers of x, in lexicographic order.
std::vector<std::vector<int>> all_tuples(const Carriers& car,
                                         const LabeledFinSet& x);

/// A random relation: each of the |dom tuples| x |cod tuples| pairs is
/// included with probability 1/2.
FinRel finrel_random(const Carriers& car, const LabeledFinSet& x,
                     const LabeledFinSet& y, std::mt19937& rng);

std::string show(const FinRel& r);

}  // namespace hypcat

#endif
