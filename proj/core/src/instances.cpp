#include "hypcat/instances.hpp"

#include <algorithm>
#include <sstream>

#include "hypcat/errors.hpp"

namespace hypcat {

namespace {

const Cospan& as_cospan(const HypCategory::Morph& f) {
  return std::any_cast<const Cospan&>(f);
}
const LinMorph& as_lin(const HypCategory::Morph& f) {
  return std::any_cast<const LinMorph&>(f);
}
const FinRel& as_fin(const HypCategory::Morph& f) {
  return std::any_cast<const FinRel&>(f);
}

}  // namespace

// ---- cospans --------------------------------------------------------------

HypCategory::Obj CospanInstance::dom(const Morph& f) const {
  return as_cospan(f).dom;
}
HypCategory::Obj CospanInstance::cod(const Morph& f) const {
  return as_cospan(f).cod;
}
HypCategory::Morph CospanInstance::identity(const Obj& x) const {
  return identity_cospan(x);
}
HypCategory::Morph CospanInstance::compose(const Morph& f,
                                           const Morph& g) const {
  return hypcat::compose(as_cospan(f), as_cospan(g));
}
HypCategory::Morph CospanInstance::tensor(const Morph& f,
                                          const Morph& g) const {
  return hypcat::tensor(as_cospan(f), as_cospan(g));
}
HypCategory::Morph CospanInstance::swap(const Obj& x, const Obj& y) const {
  return swap_cospan(x, y);
}
HypCategory::Morph CospanInstance::frobenius(Frob kind, const Obj& x) const {
  return frobenius_cospan(kind, x);
}
bool CospanInstance::equal(const Morph& f, const Morph& g) const {
  return hypcat::equal(as_cospan(f), as_cospan(g));
}
HypCategory::Morph CospanInstance::random_morphism(const Obj& x, const Obj& y,
                                                   std::mt19937& rng) const {
  return random_cospan(x, y, alphabet_, rng);
}
std::string CospanInstance::show_morphism(const Morph& f) const {
  return show(as_cospan(f));
}

// ---- linear relations -----------------------------------------------------

HypCategory::Obj LinRelInstance::dom(const Morph& f) const {
  return as_lin(f).dom;
}
HypCategory::Obj LinRelInstance::cod(const Morph& f) const {
  return as_lin(f).cod;
}
HypCategory::Morph LinRelInstance::identity(const Obj& x) const {
  return LinMorph{x, x, linrel_identity(x.size())};
}
HypCategory::Morph LinRelInstance::compose(const Morph& f,
                                           const Morph& g) const {
  const auto& a = as_lin(f);
  const auto& b = as_lin(g);
  if (!(a.cod == b.dom))
    throw BoundaryMismatch("linear relation composition boundary mismatch");
  return LinMorph{a.dom, b.cod, linrel_compose(a.rel, b.rel)};
}
HypCategory::Morph LinRelInstance::tensor(const Morph& f,
                                          const Morph& g) const {
  const auto& a = as_lin(f);
  const auto& b = as_lin(g);
  return LinMorph{oplus(a.dom, b.dom), oplus(a.cod, b.cod),
                  linrel_tensor(a.rel, b.rel)};
}
HypCategory::Morph LinRelInstance::swap(const Obj& x, const Obj& y) const {
  return LinMorph{oplus(x, y), oplus(y, x), linrel_swap(x.size(), y.size())};
}
HypCategory::Morph LinRelInstance::frobenius(Frob kind, const Obj& x) const {
  LinRel r = linrel_frobenius(structure_, kind, x.size());
  switch (kind) {
    case Frob::mu:
      return LinMorph{oplus(x, x), x, std::move(r)};
    case Frob::eta:
      return LinMorph{LabeledFinSet{}, x, std::move(r)};
    case Frob::delta:
      return LinMorph{x, oplus(x, x), std::move(r)};
    case Frob::eps:
      return LinMorph{x, LabeledFinSet{}, std::move(r)};
  }
  throw IllTyped("unreachable");
}
bool LinRelInstance::equal(const Morph& f, const Morph& g) const {
  const auto& a = as_lin(f);
  const auto& b = as_lin(g);
  return a.dom == b.dom && a.cod == b.cod && linrel_equal(a.rel, b.rel);
}
HypCategory::Morph LinRelInstance::random_morphism(const Obj& x, const Obj& y,
                                                   std::mt19937& rng) const {
  return LinMorph{x, y, linrel_random(x.size(), y.size(), rng)};
}
std::string LinRelInstance::show_morphism(const Morph& f) const {
  return show(as_lin(f).rel);
}

// ---- finite relations -----------------------------------------------------

FinRelInstance::FinRelInstance(Carriers carriers)
    : carriers_(std::move(carriers)) {
  for (const auto& [l, n] : carriers_)
    if (n <= 0)
      throw IllTyped("carrier for label " + label_name(l) +
                     " must be positive");
}
std::vector<Label> FinRelInstance::label_set() const {
  std::vector<Label> out;
  out.reserve(carriers_.size());
  for (const auto& [l, n] : carriers_) out.push_back(l);
  return out;
}
HypCategory::Obj FinRelInstance::dom(const Morph& f) const {
  return as_fin(f).dom;
}
HypCategory::Obj FinRelInstance::cod(const Morph& f) const {
  return as_fin(f).cod;
}
HypCategory::Morph FinRelInstance::identity(const Obj& x) const {
  return finrel_identity(carriers_, x);
}
HypCategory::Morph FinRelInstance::compose(const Morph& f,
                                           const Morph& g) const {
  return finrel_compose(as_fin(f), as_fin(g));
}
HypCategory::Morph FinRelInstance::tensor(const Morph& f,
                                          const Morph& g) const {
  return finrel_tensor(as_fin(f), as_fin(g));
}
HypCategory::Morph FinRelInstance::swap(const Obj& x, const Obj& y) const {
  return finrel_swap(carriers_, x, y);
}
HypCategory::Morph FinRelInstance::frobenius(Frob kind, const Obj& x) const {
  return finrel_frobenius(carriers_, kind, x);
}
bool FinRelInstance::equal(const Morph& f, const Morph& g) const {
  return as_fin(f) == as_fin(g);
}
HypCategory::Morph FinRelInstance::random_morphism(const Obj& x, const Obj& y,
                                                   std::mt19937& rng) const {
  return finrel_random(carriers_, x, y, rng);
}
HypCategory::Morph FinRelInstance::act_state(const Cospan& c,
                                             const Morph& state) const {
  const FinRel& r = as_fin(state);
  if (!r.dom.empty() || !(r.cod == c.dom))
    throw BoundaryMismatch("act_state: state boundary must be the cospan dom");
  for (const LabeledFinSet* part : {&c.dom, &c.cod, &c.apex})
    for (Label l : part->labels)
      if (!carriers_.contains(l))
        throw UnknownLabel("act_state: label '" + label_name(l) +
                           "' not in the instance alphabet");
  // Apex slots the left leg never hits range over their whole carrier.
  std::vector<int> free, free_car;
  {
    std::vector<bool> hit(static_cast<size_t>(c.apex.size()), false);
    for (int i : c.left) hit[static_cast<size_t>(i)] = true;
    for (int j = 0; j < c.apex.size(); ++j)
      if (!hit[static_cast<size_t>(j)]) {
        free.push_back(j);
        free_car.push_back(carriers_.at(c.apex.labels[static_cast<size_t>(j)]));
      }
  }
  std::vector<FinTuple> out;
  std::vector<int> val(static_cast<size_t>(c.apex.size()));
  for (const FinTuple& t : r.tuples) {
    std::fill(val.begin(), val.end(), -1);
    bool ok = true;
    for (size_t i = 0; i < c.left.size(); ++i) {
      int& v = val[static_cast<size_t>(c.left[i])];
      if (v >= 0 && v != t.second[i]) {
        ok = false;
        break;
      }
      v = t.second[i];
    }
    if (!ok) continue;
    std::vector<int> odo(free.size(), 0);
    for (;;) {
      for (size_t k = 0; k < free.size(); ++k)
        val[static_cast<size_t>(free[k])] = odo[k];
      std::vector<int> w(c.right.size());
      for (size_t j = 0; j < c.right.size(); ++j)
        w[j] = val[static_cast<size_t>(c.right[j])];
      out.emplace_back(std::vector<int>{}, std::move(w));
      size_t k = 0;
      while (k < free.size() && ++odo[k] == free_car[k]) odo[k++] = 0;
      if (k == free.size()) break;
    }
  }
  return finrel_make(carriers_, LabeledFinSet{}, c.cod, std::move(out));
}
std::string FinRelInstance::show_morphism(const Morph& f) const {
  return show(as_fin(f));
}

// ---- factories ------------------------------------------------------------

std::shared_ptr<const HypCategory> cospan_instance(
    std::vector<Label> alphabet) {
  return std::make_shared<CospanInstance>(std::move(alphabet));
}
std::shared_ptr<const HypCategory> linrel_instance(std::vector<Label> alphabet,
                                                   LinStructure structure) {
  return std::make_shared<LinRelInstance>(std::move(alphabet), structure);
}
std::shared_ptr<const HypCategory> finrel_instance(Carriers carriers) {
  return std::make_shared<FinRelInstance>(std::move(carriers));
}

}  // namespace hypcat
