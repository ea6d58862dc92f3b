#ifndef HYPCAT_JSON_IO_HPP
#define HYPCAT_JSON_IO_HPP

#include <map>
#include <string>

#include "hypcat/cospan.hpp"
#include "hypcat/finrel.hpp"
#include "hypcat/linrel.hpp"
#include "hypcat/term.hpp"

namespace hypcat {

/// Serialization is deterministic and bit-exact: fixed key order, fixed
/// indentation, and every cospan emitted in canonical form. All parsers
/// throw JsonError on malformed input and the make-validation errors on
/// well-formed but ill-typed data.

/// {"dom": [labels], "cod": [labels], "apex": [labels],
///  "left": [ints], "right": [ints]}
std::string cospan_to_json(const Cospan& c);
Cospan cospan_from_json(const std::string& text);

/// {"m": int, "n": int, "basis": [["num/den", ...], ...]}; parsing also
/// accepts plain integer strings.
std::string linrel_to_json(const LinRel& r);
LinRel linrel_from_json(const std::string& text);

/// {"dom": [labels], "cod": [labels], "tuples": [[[ints], [ints]], ...]}
std::string finrel_to_json(const FinRel& r);
FinRel finrel_from_json(const std::string& text, const Carriers& car);

/// {"labels": ["a", ...], "boxes": {"f": {"dom": [...], "cod": [...]}}}
std::string signature_to_json(const Signature& s);
Signature signature_from_json(const std::string& text);

/// A boxes file maps box names to instance morphisms; the values are
/// instance-specific, so this parses the outer object and hands each
/// value back out as raw JSON text.
std::map<std::string, std::string> boxes_from_json(const std::string& text);

}  // namespace hypcat

#endif
