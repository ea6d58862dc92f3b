#include "hypcat/label.hpp"

#include <mutex>
#include <unordered_map>

namespace hypcat {

namespace {

struct InternTable {
  std::mutex m;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> index;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

Label intern(std::string_view name) {
  InternTable& t = table();
  std::lock_guard lock(t.m);
  auto it = t.index.find(std::string(name));
  if (it != t.index.end()) return Label{it->second};
  std::uint32_t id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.index.emplace(t.names.back(), id);
  return Label{id};
}

const std::string& label_name(Label l) {
  InternTable& t = table();
  std::lock_guard lock(t.m);
  return t.names.at(l.id);
}

LabeledFinSet make_object(const std::vector<std::string>& names) {
  std::vector<Label> ls;
  ls.reserve(names.size());
  for (const std::string& n : names) ls.push_back(intern(n));
  return LabeledFinSet{std::move(ls)};
}

LabeledFinSet oplus(const LabeledFinSet& x, const LabeledFinSet& y) {
  std::vector<Label> ls = x.labels;
  ls.insert(ls.end(), y.labels.begin(), y.labels.end());
  return LabeledFinSet{std::move(ls)};
}

TypedFunction TypedFunction::make(LabeledFinSet dom, LabeledFinSet cod,
                                  std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom.size())
    throw IllTyped("typed function: map length " +
                   std::to_string(map.size()) + " does not match domain size " +
                   std::to_string(dom.size()));
  for (int i = 0; i < dom.size(); ++i) {
    if (map[i] < 0 || map[i] >= cod.size())
      throw IllTyped("typed function: image " + std::to_string(map[i]) +
                     " of element " + std::to_string(i) + " out of range");
    if (dom.labels[i] != cod.labels[map[i]])
      throw IllTyped("typed function: label of element " + std::to_string(i) +
                     " not preserved");
  }
  return TypedFunction{std::move(dom), std::move(cod), std::move(map)};
}

TypedFunction identity_fn(const LabeledFinSet& x) {
  std::vector<int> map(x.size());
  for (int i = 0; i < x.size(); ++i) map[i] = i;
  return TypedFunction{x, x, std::move(map)};
}

TypedFunction compose_fn(const TypedFunction& f, const TypedFunction& g) {
  if (f.cod != g.dom)
    throw CodomainMismatch("compose_fn: codomain of f differs from domain of g");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return TypedFunction{f.dom, g.cod, std::move(map)};
}

TypedFunction oplus_fn(const TypedFunction& f, const TypedFunction& g) {
  int shift = f.cod.size();
  std::vector<int> map = f.map;
  map.reserve(f.map.size() + g.map.size());
  for (int i : g.map) map.push_back(i + shift);
  return TypedFunction{oplus(f.dom, g.dom), oplus(f.cod, g.cod),
                       std::move(map)};
}

const std::vector<Label>& KleisliMap::operator()(Label l) const {
  auto it = assign.find(l);
  if (it == assign.end())
    throw UnknownLabel("kleisli map: no assignment for label '" +
                       label_name(l) + "'");
  return it->second;
}

std::vector<Label> KleisliMap::source() const {
  std::vector<Label> out;
  out.reserve(assign.size());
  for (const auto& [l, _] : assign) out.push_back(l);
  return out;
}

KleisliMap make_kleisli(
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        assign) {
  KleisliMap f;
  for (const auto& [src, dst] : assign) {
    std::vector<Label> block;
    block.reserve(dst.size());
    for (const std::string& n : dst) block.push_back(intern(n));
    f.assign[intern(src)] = std::move(block);
  }
  return f;
}

std::pair<LabeledFinSet, std::vector<int>> flatten_relabel(
    const LabeledFinSet& x, const KleisliMap& f) {
  std::vector<Label> flat;
  std::vector<int> offsets;
  offsets.reserve(x.labels.size());
  for (Label l : x.labels) {
    offsets.push_back(static_cast<int>(flat.size()));
    const std::vector<Label>& block = f(l);
    flat.insert(flat.end(), block.begin(), block.end());
  }
  return {LabeledFinSet{std::move(flat)}, std::move(offsets)};
}

}  // namespace hypcat
