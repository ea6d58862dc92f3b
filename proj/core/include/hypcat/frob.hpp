#ifndef HYPCAT_FROB_HPP
#define HYPCAT_FROB_HPP

namespace hypcat {

/// The four Frobenius generator kinds.
enum class Frob { mu, eta, delta, eps };

}  // namespace hypcat

#endif
