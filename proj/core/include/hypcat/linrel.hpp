#ifndef HYPCAT_LINREL_HPP
#define HYPCAT_LINREL_HPP

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

#include "hypcat/errors.hpp"
#include "hypcat/frob.hpp"

namespace hypcat {

using Rat = mpq_class;
using Mat = std::vector<std::vector<Rat>>;

/// In-place Gauss-Jordan to reduced row echelon form: no zero rows,
/// strictly increasing pivots, elementary pivot columns. The RREF basis
/// is the unique canonical representative of a row space.
Mat rref(Mat a);

/// A row basis of {x : a x = 0} for an a with `cols` columns, in RREF.
Mat null_space(const Mat& a, int cols);

/// A linear relation m -> n: a subspace of Q^(m+n) with the m domain
/// coordinates first, stored as its canonical RREF row basis.
struct LinRel {
  int m = 0;
  int n = 0;
  Mat basis;

  bool operator==(const LinRel&) const = default;
};

/// Canonicalizes arbitrary spanning rows (each of length m+n).
LinRel linrel_make(int m, int n, Mat rows);

/// Equality of subspaces: identical RREF bases.
bool linrel_equal(const LinRel& r, const LinRel& s);

/// Relational composition: (v,x) is in the result iff some w satisfies
/// (v,w) in r and (w,x) in s. The shared coordinates are eliminated
/// exactly: a null-space computation over the rows' coefficients keeps
/// precisely the compatible pairs. Throws DimensionMismatch.
LinRel linrel_compose(const LinRel& r, const LinRel& s);

/// Direct sum, interleaved into (dom_r, dom_s, cod_r, cod_s) order.
LinRel linrel_tensor(const LinRel& r, const LinRel& s);

LinRel linrel_identity(int n);

/// The graph of the block swap (x,y) -> (y,x), x of size a, y of size b.
LinRel linrel_swap(int a, int b);

/// The two Frobenius structures on Q: copy has mu/delta the diagonal
/// {a=b=c} and eta/eps the full line; add has mu {a+b=c}, delta {a=b+c},
/// and eta/eps the zero subspace. On an n-fold object the structure acts
/// coordinatewise (blockwise interleaved).
enum class LinStructure { copy, add };

LinRel linrel_frobenius(LinStructure s, Frob kind, int n);

/// Random subspace: up to m+n rows with entries in [-3, 3].
LinRel linrel_random(int m, int n, std::mt19937& rng);

std::string show(const LinRel& r);

}  // namespace hypcat

#endif
