#ifndef HYPCAT_COSPAN_HPP
#define HYPCAT_COSPAN_HPP

#include <random>
#include <string>
#include <vector>

#include "hypcat/frob.hpp"
#include "hypcat/label.hpp"

namespace hypcat {

/// A cospan dom -> apex <- cod of label-preserving functions. Values of
/// this type stand for isomorphism classes: all operations except make()
/// and compose_raw() return canonical representatives, and equality of
/// classes is equality of canonical forms (see canonicalize()).
struct Cospan {
  LabeledFinSet dom;
  LabeledFinSet cod;
  LabeledFinSet apex;
  std::vector<int> left;   // |dom| entries into apex
  std::vector<int> right;  // |cod| entries into apex

  /// Validates typing of both legs; throws IllTyped on a violation.
  static Cospan make(LabeledFinSet dom, LabeledFinSet cod, LabeledFinSet apex,
                     std::vector<int> left, std::vector<int> right);

  /// Raw representative equality (not isomorphism). Use equal() to
  /// compare morphisms.
  bool operator==(const Cospan&) const = default;
};

/// Renumbers the apex into the canonical order: elements sort by the key
/// (sorted left-preimage indices, sorted right-preimage indices, label
/// order index), lists compared lexicographically with a proper prefix
/// ordering first. Idempotent; two cospans are isomorphic over fixed feet
/// iff their canonical forms are identical.
Cospan canonicalize(const Cospan& c);

/// Morphism equality: feet match and canonical forms are identical.
bool equal(const Cospan& a, const Cospan& b);

/// Pushout composition without the final canonicalization step. The apex
/// is the disjoint union of the two apexes glued along the shared foot by
/// union-find; class order is first appearance. Throws BoundaryMismatch
/// unless a.cod == b.dom.
Cospan compose_raw(const Cospan& a, const Cospan& b);

/// Pushout composition, canonicalized.
Cospan compose(const Cospan& a, const Cospan& b);

/// Monoidal product: concatenation of feet and apexes, b's legs shifted
/// past a's apex. Canonical.
Cospan tensor(const Cospan& a, const Cospan& b);

/// Identity cospan on x: apex x, both legs the identity.
Cospan identity_cospan(const LabeledFinSet& x);

/// Symmetry x (+) y -> y (+) x with apex x (+) y.
Cospan swap_cospan(const LabeledFinSet& x, const LabeledFinSet& y);

/// Frobenius generator on an object. On a single label the apex has one
/// element; on a list the legs interleave blockwise, e.g. mu on [a,b] is
/// dom [a,b,a,b], apex [a,b], left [0,1,0,1], right [0,1].
Cospan frobenius_cospan(Frob kind, const LabeledFinSet& x);

/// The composition cospan x (+) y (+) y (+) z -> x (+) z with apex
/// x (+) y (+) z: both y blocks merge, x and z pass through.
Cospan comp_cospan(const LabeledFinSet& x, const LabeledFinSet& y,
                   const LabeledFinSet& z);

/// The name of c: X -> Y, a cospan {} -> X (+) Y with the same apex and
/// right leg c.left ++ c.right.
Cospan name_cospan(const Cospan& c);

/// Relabels a cospan along a Kleisli map by flattening feet and apex;
/// every element maps blockwise, in order, onto the block of its image.
/// Throws UnknownLabel if some label of c has no assignment.
Cospan kleisli_map(const Cospan& c, const KleisliMap& f);

/// A random cospan x -> y over the given label alphabet: legs choose
/// between sharing an existing compatible apex element and creating a
/// fresh one, then up to max_isolated isolated apex elements are added.
/// Canonical.
Cospan random_cospan(const LabeledFinSet& x, const LabeledFinSet& y,
                     const std::vector<Label>& alphabet, std::mt19937& rng,
                     int max_isolated = 2);

/// A random object over the alphabet with size in [0, max_len].
LabeledFinSet random_object(const std::vector<Label>& alphabet,
                            std::mt19937& rng, int max_len);

/// Short textual rendering, for diagnostics.
std::string show(const Cospan& c);
std::string show(const LabeledFinSet& x);

}  // namespace hypcat

#endif
