#include "hypcat/finrel.hpp"

#include <algorithm>
#include <sstream>

#include "hypcat/cospan.hpp"
#include "hypcat/errors.hpp"

namespace hypcat {

namespace {

int carrier(const Carriers& car, Label l) {
  auto it = car.find(l);
  if (it == car.end())
    throw UnknownLabel("no carrier for label " + label_name(l));
  return it->second;
}

void normalize(std::vector<FinTuple>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

}  // namespace

FinRel finrel_make(const Carriers& car, LabeledFinSet dom, LabeledFinSet cod,
                   std::vector<FinTuple> tuples) {
  for (const auto& [dv, cv] : tuples) {
    if (static_cast<int>(dv.size()) != dom.size() ||
        static_cast<int>(cv.size()) != cod.size())
      throw IllTyped("finite relation tuple arity mismatch");
    for (int i = 0; i < dom.size(); ++i)
      if (dv[i] < 0 || dv[i] >= carrier(car, dom.labels[i]))
        throw IllTyped("finite relation tuple value out of carrier range");
    for (int i = 0; i < cod.size(); ++i)
      if (cv[i] < 0 || cv[i] >= carrier(car, cod.labels[i]))
        throw IllTyped("finite relation tuple value out of carrier range");
  }
  normalize(tuples);
  return FinRel{std::move(dom), std::move(cod), std::move(tuples)};
}

FinRel finrel_compose(const FinRel& r, const FinRel& s) {
  if (!(r.cod == s.dom))
    throw BoundaryMismatch("finite relation composition boundary mismatch");
  std::vector<FinTuple> out;
  for (const auto& [a, w] : r.tuples)
    for (const auto& [w2, b] : s.tuples)
      if (w == w2) out.emplace_back(a, b);
  normalize(out);
  return FinRel{r.dom, s.cod, std::move(out)};
}

FinRel finrel_tensor(const FinRel& r, const FinRel& s) {
  std::vector<FinTuple> out;
  out.reserve(r.tuples.size() * s.tuples.size());
  for (const auto& [a, b] : r.tuples)
    for (const auto& [c, d] : s.tuples) {
      std::vector<int> dv = a;
      dv.insert(dv.end(), c.begin(), c.end());
      std::vector<int> cv = b;
      cv.insert(cv.end(), d.begin(), d.end());
      out.emplace_back(std::move(dv), std::move(cv));
    }
  normalize(out);
  return FinRel{oplus(r.dom, s.dom), oplus(r.cod, s.cod), std::move(out)};
}

std::vector<std::vector<int>> all_tuples(const Carriers& car,
                                         const LabeledFinSet& x) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(x.size(), 0);
  while (true) {
    out.push_back(t);
    int i = x.size() - 1;
    while (i >= 0 && t[i] + 1 >= carrier(car, x.labels[i])) {
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

FinRel finrel_identity(const Carriers& car, const LabeledFinSet& x) {
  std::vector<FinTuple> ts;
  for (auto& t : all_tuples(car, x)) ts.emplace_back(t, t);
  return FinRel{x, x, std::move(ts)};
}

FinRel finrel_swap(const Carriers& car, const LabeledFinSet& x,
                   const LabeledFinSet& y) {
  std::vector<FinTuple> ts;
  for (auto& a : all_tuples(car, x))
    for (auto& b : all_tuples(car, y)) {
      std::vector<int> dv = a;
      dv.insert(dv.end(), b.begin(), b.end());
      std::vector<int> cv = b;
      cv.insert(cv.end(), a.begin(), a.end());
      ts.emplace_back(std::move(dv), std::move(cv));
    }
  normalize(ts);
  return FinRel{oplus(x, y), oplus(y, x), std::move(ts)};
}

FinRel finrel_frobenius(const Carriers& car, Frob kind,
                        const LabeledFinSet& x) {
  auto ts = all_tuples(car, x);
  std::vector<FinTuple> rel;
  switch (kind) {
    case Frob::mu:
      for (auto& t : ts) {
        std::vector<int> tt = t;
        tt.insert(tt.end(), t.begin(), t.end());
        rel.emplace_back(std::move(tt), t);
      }
      return FinRel{oplus(x, x), x, std::move(rel)};
    case Frob::eta:
      for (auto& t : ts) rel.emplace_back(std::vector<int>{}, t);
      return FinRel{LabeledFinSet{}, x, std::move(rel)};
    case Frob::delta:
      for (auto& t : ts) {
        std::vector<int> tt = t;
        tt.insert(tt.end(), t.begin(), t.end());
        rel.emplace_back(t, std::move(tt));
      }
      return FinRel{x, oplus(x, x), std::move(rel)};
    case Frob::eps:
      for (auto& t : ts) rel.emplace_back(t, std::vector<int>{});
      return FinRel{x, LabeledFinSet{}, std::move(rel)};
  }
  throw IllTyped("unreachable");
}

FinRel finrel_random(const Carriers& car, const LabeledFinSet& x,
                     const LabeledFinSet& y, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<FinTuple> ts;
  for (auto& a : all_tuples(car, x))
    for (auto& b : all_tuples(car, y))
      if (coin(rng)) ts.emplace_back(a, b);
  return FinRel{x, y, std::move(ts)};
}

std::string show(const FinRel& r) {
  std::ostringstream os;
  os << show(r.dom) << " -> " << show(r.cod) << " {";
  bool first = true;
  for (const auto& [a, b] : r.tuples) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "|";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace hypcat
