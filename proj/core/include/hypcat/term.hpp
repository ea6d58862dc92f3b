#ifndef HYPCAT_TERM_HPP
#define HYPCAT_TERM_HPP

#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypcat/cospan.hpp"
#include "hypcat/label.hpp"

namespace hypcat {

/// A box signature: the label alphabet plus named boxes with their
/// domain and codomain objects. Box names are unique identifiers and
/// must not collide with the generator keywords.
struct Signature {
  std::vector<Label> labels;
  std::map<std::string, std::pair<LabeledFinSet, LabeledFinSet>> boxes;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Abstract syntax of the Frobenius-term DSL. Generator nodes carry
/// their object (x, and y for swap); seq/par carry two children.
struct Term {
  enum class Kind { id, swp, mu, eta, delta, eps, box, seq, par };

  Kind kind;
  LabeledFinSet x;
  LabeledFinSet y;
  std::string box;
  TermPtr a;
  TermPtr b;

  static TermPtr make_id(LabeledFinSet x);
  static TermPtr make_swap(LabeledFinSet x, LabeledFinSet y);
  static TermPtr make_frob(Frob kind, LabeledFinSet x);
  static TermPtr make_box(std::string name);
  static TermPtr make_seq(TermPtr a, TermPtr b);
  static TermPtr make_par(TermPtr a, TermPtr b);
};

/// Structural equality of syntax trees.
bool term_equal(const TermPtr& a, const TermPtr& b);

/// Parses the concrete syntax
///   term := par (";" par)*
///   par  := atom ("*" atom)*
///   atom := "id[" labels "]" | "swap[" labels "|" labels "]"
///         | "mu[" labels "]" | "eta[" labels "]" | "delta[" labels "]"
///         | "eps[" labels "]" | BOXNAME | "(" term ")"
/// where labels is a comma-separated, possibly empty list. ";" binds
/// looser than "*" and both associate to the left. "#" starts a line
/// comment. Labels must belong to sig.labels and box names to sig.boxes.
/// Throws SyntaxError (with offset), UnknownLabel, UnknownBox.
TermPtr parse_term(std::string_view text, const Signature& sig);

/// Computes (dom, cod) by structural recursion; throws TypeMismatch if a
/// seq node's inner boundary disagrees and UnknownBox for unsigned boxes.
std::pair<LabeledFinSet, LabeledFinSet> typecheck(const TermPtr& t,
                                                  const Signature& sig);

/// Prints t so that parse_term(pretty(t), sig) == t.
std::string pretty(const TermPtr& t);

/// Writes c: X -> Y as a box-free term that evaluates back to c in the
/// cospan instance. Each leg factors as a permutation (compiled to
/// adjacent swaps by bubble sort, stable on ties), then a monotone block
/// map (size-k blocks become right-nested combs of k-1 mu, size-0 blocks
/// become eta; mirrored with delta/eps on the codomain side). Identity
/// stages are fused away.
TermPtr decompose(const Cospan& c);

/// A random well-typed box-free term over the alphabet: a random source
/// object followed by up to depth rows of generator atoms.
TermPtr random_term(const std::vector<Label>& alphabet, std::mt19937& rng,
                    int depth = 3, int max_width = 4);

}  // namespace hypcat

#endif
