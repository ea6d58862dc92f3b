#ifndef HYPCAT_REPORT_HPP
#define HYPCAT_REPORT_HPP

#include <string>
#include <vector>

namespace hypcat {

/// One verified equation: a short axiom name plus the context it was
/// checked in (object, sample count, seed).
struct CheckLine {
  bool pass;
  std::string name;
  std::string context;
};

struct Report {
  std::vector<CheckLine> lines;

  void add(bool pass, std::string name, std::string context) {
    lines.push_back({pass, std::move(name), std::move(context)});
  }

  void append(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool all_pass() const {
    for (const CheckLine& l : lines)
      if (!l.pass) return false;
    return true;
  }

  int failures() const {
    int n = 0;
    for (const CheckLine& l : lines)
      if (!l.pass) ++n;
    return n;
  }
};

/// Renders "PASS/FAIL <axiom-name> <context>" lines.
inline std::string to_text(const Report& r) {
  std::string out;
  for (const CheckLine& l : r.lines) {
    out += l.pass ? "PASS " : "FAIL ";
    out += l.name;
    if (!l.context.empty()) {
      out += " ";
      out += l.context;
    }
    out += "\n";
  }
  return out;
}

}  // namespace hypcat

#endif
