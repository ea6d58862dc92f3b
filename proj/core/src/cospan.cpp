#include "hypcat/cospan.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

namespace hypcat {

namespace {

/// Union-find with path halving over 0..n-1.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> identity_leg(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Cospan Cospan::make(LabeledFinSet dom, LabeledFinSet cod, LabeledFinSet apex,
                    std::vector<int> left, std::vector<int> right) {
  auto check = [&](const LabeledFinSet& foot, const std::vector<int>& leg,
                   const char* side) {
    if (static_cast<int>(leg.size()) != foot.size())
      throw IllTyped(std::string("cospan: ") + side + " leg length " +
                     std::to_string(leg.size()) + " does not match foot size " +
                     std::to_string(foot.size()));
    for (int i = 0; i < foot.size(); ++i) {
      if (leg[i] < 0 || leg[i] >= apex.size())
        throw IllTyped(std::string("cospan: ") + side + " leg image " +
                       std::to_string(leg[i]) + " out of range");
      if (foot.labels[i] != apex.labels[leg[i]])
        throw IllTyped(std::string("cospan: ") + side + " leg breaks label of element " +
                       std::to_string(i));
    }
  };
  check(dom, left, "left");
  check(cod, right, "right");
  return Cospan{std::move(dom), std::move(cod), std::move(apex),
                std::move(left), std::move(right)};
}

Cospan canonicalize(const Cospan& c) {
  int p = c.apex.size();
  // Fingerprint of an apex element: its leg preimages plus label order.
  // Distinct elements share a fingerprint only when both preimages are
  // empty, so ties never affect the canonical bytes.
  std::vector<std::tuple<std::vector<int>, std::vector<int>, std::uint32_t>>
      key(p);
  for (int k = 0; k < p; ++k) std::get<2>(key[k]) = c.apex.labels[k].id;
  for (int i = 0; i < static_cast<int>(c.left.size()); ++i)
    std::get<0>(key[c.left[i]]).push_back(i);
  for (int j = 0; j < static_cast<int>(c.right.size()); ++j)
    std::get<1>(key[c.right[j]]).push_back(j);

  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key[a] < key[b]; });

  std::vector<int> pos(p);
  std::vector<Label> labels(p);
  for (int r = 0; r < p; ++r) {
    pos[order[r]] = r;
    labels[r] = c.apex.labels[order[r]];
  }
  std::vector<int> left(c.left.size()), right(c.right.size());
  for (std::size_t i = 0; i < c.left.size(); ++i) left[i] = pos[c.left[i]];
  for (std::size_t j = 0; j < c.right.size(); ++j) right[j] = pos[c.right[j]];
  return Cospan{c.dom, c.cod, LabeledFinSet{std::move(labels)},
                std::move(left), std::move(right)};
}

bool equal(const Cospan& a, const Cospan& b) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  return canonicalize(a) == canonicalize(b);
}

Cospan compose_raw(const Cospan& a, const Cospan& b) {
  if (a.cod != b.dom)
    throw BoundaryMismatch("compose: codomain of first cospan differs from domain of second");
  int na = a.apex.size();
  int nb = b.apex.size();
  UnionFind uf(na + nb);
  for (int j = 0; j < a.cod.size(); ++j) uf.unite(a.right[j], na + b.left[j]);

  // Number the classes by first appearance; all members of a class carry
  // the same label by leg typing.
  std::vector<int> cls(na + nb, -1);
  std::vector<Label> labels;
  for (int k = 0; k < na + nb; ++k) {
    int r = uf.find(k);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(labels.size());
      labels.push_back(k < na ? a.apex.labels[k] : b.apex.labels[k - na]);
    }
    cls[k] = cls[r];
    assert((k < na ? a.apex.labels[k] : b.apex.labels[k - na]) ==
           labels[cls[k]]);
  }

  std::vector<int> left(a.left.size()), right(b.right.size());
  for (std::size_t i = 0; i < a.left.size(); ++i) left[i] = cls[a.left[i]];
  for (std::size_t j = 0; j < b.right.size(); ++j)
    right[j] = cls[na + b.right[j]];
  return Cospan{a.dom, b.cod, LabeledFinSet{std::move(labels)},
                std::move(left), std::move(right)};
}

Cospan compose(const Cospan& a, const Cospan& b) {
  return canonicalize(compose_raw(a, b));
}

Cospan tensor(const Cospan& a, const Cospan& b) {
  int shift = a.apex.size();
  std::vector<int> left = a.left;
  for (int i : b.left) left.push_back(i + shift);
  std::vector<int> right = a.right;
  for (int j : b.right) right.push_back(j + shift);
  return canonicalize(Cospan{oplus(a.dom, b.dom), oplus(a.cod, b.cod),
                             oplus(a.apex, b.apex), std::move(left),
                             std::move(right)});
}

Cospan identity_cospan(const LabeledFinSet& x) {
  return Cospan{x, x, x, identity_leg(x.size()), identity_leg(x.size())};
}

Cospan swap_cospan(const LabeledFinSet& x, const LabeledFinSet& y) {
  LabeledFinSet apex = oplus(x, y);
  std::vector<int> right;
  right.reserve(apex.labels.size());
  for (int j = 0; j < y.size(); ++j) right.push_back(x.size() + j);
  for (int i = 0; i < x.size(); ++i) right.push_back(i);
  return canonicalize(Cospan{apex, oplus(y, x), apex,
                             identity_leg(apex.size()), std::move(right)});
}

Cospan frobenius_cospan(Frob kind, const LabeledFinSet& x) {
  int n = x.size();
  std::vector<int> two;
  two.reserve(2 * n);
  for (int i = 0; i < n; ++i) two.push_back(i);
  for (int i = 0; i < n; ++i) two.push_back(i);
  std::vector<int> one = identity_leg(n);
  switch (kind) {
    case Frob::mu:
      return canonicalize(Cospan{oplus(x, x), x, x, std::move(two), std::move(one)});
    case Frob::eta:
      return canonicalize(Cospan{LabeledFinSet{}, x, x, {}, std::move(one)});
    case Frob::delta:
      return canonicalize(Cospan{x, oplus(x, x), x, std::move(one), std::move(two)});
    case Frob::eps:
      return canonicalize(Cospan{x, LabeledFinSet{}, x, std::move(one), {}});
  }
  throw Error("frobenius_cospan: bad kind");
}

Cospan comp_cospan(const LabeledFinSet& x, const LabeledFinSet& y,
                   const LabeledFinSet& z) {
  int nx = x.size(), ny = y.size(), nz = z.size();
  LabeledFinSet apex = oplus(oplus(x, y), z);
  std::vector<int> left;
  left.reserve(nx + 2 * ny + nz);
  for (int i = 0; i < nx; ++i) left.push_back(i);
  for (int j = 0; j < ny; ++j) left.push_back(nx + j);
  for (int j = 0; j < ny; ++j) left.push_back(nx + j);
  for (int k = 0; k < nz; ++k) left.push_back(nx + ny + k);
  std::vector<int> right;
  right.reserve(nx + nz);
  for (int i = 0; i < nx; ++i) right.push_back(i);
  for (int k = 0; k < nz; ++k) right.push_back(nx + ny + k);
  return canonicalize(Cospan{oplus(oplus(oplus(x, y), y), z), oplus(x, z),
                             apex, std::move(left), std::move(right)});
}

Cospan name_cospan(const Cospan& c) {
  std::vector<int> right = c.left;
  right.insert(right.end(), c.right.begin(), c.right.end());
  return canonicalize(Cospan{LabeledFinSet{}, oplus(c.dom, c.cod), c.apex,
                             {}, std::move(right)});
}

Cospan kleisli_map(const Cospan& c, const KleisliMap& f) {
  auto [dom, dom_off] = flatten_relabel(c.dom, f);
  auto [cod, cod_off] = flatten_relabel(c.cod, f);
  auto [apex, apex_off] = flatten_relabel(c.apex, f);
  std::vector<int> left(dom.size()), right(cod.size());
  for (int i = 0; i < c.dom.size(); ++i) {
    int len = static_cast<int>(f(c.dom.labels[i]).size());
    for (int t = 0; t < len; ++t)
      left[dom_off[i] + t] = apex_off[c.left[i]] + t;
  }
  for (int j = 0; j < c.cod.size(); ++j) {
    int len = static_cast<int>(f(c.cod.labels[j]).size());
    for (int t = 0; t < len; ++t)
      right[cod_off[j] + t] = apex_off[c.right[j]] + t;
  }
  return canonicalize(Cospan{std::move(dom), std::move(cod), std::move(apex),
                             std::move(left), std::move(right)});
}

LabeledFinSet random_object(const std::vector<Label>& alphabet,
                            std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<Label> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back(alphabet[pick(rng)]);
  return LabeledFinSet{std::move(ls)};
}

Cospan random_cospan(const LabeledFinSet& x, const LabeledFinSet& y,
                     const std::vector<Label>& alphabet, std::mt19937& rng,
                     int max_isolated) {
  std::vector<Label> apex;
  std::vector<int> left, right;
  auto attach = [&](Label l) {
    std::vector<int> candidates;
    for (int k = 0; k < static_cast<int>(apex.size()); ++k)
      if (apex[k] == l) candidates.push_back(k);
    // Fresh element with probability 1/2, otherwise share.
    if (candidates.empty() || std::uniform_int_distribution<int>(0, 1)(rng)) {
      apex.push_back(l);
      return static_cast<int>(apex.size()) - 1;
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
  };
  for (Label l : x.labels) left.push_back(attach(l));
  for (Label l : y.labels) right.push_back(attach(l));
  if (!alphabet.empty() && max_isolated > 0) {
    std::uniform_int_distribution<int> extra(0, max_isolated);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    int n = extra(rng);
    for (int i = 0; i < n; ++i) apex.push_back(alphabet[pick(rng)]);
  }
  return canonicalize(Cospan{x, y, LabeledFinSet{std::move(apex)},
                             std::move(left), std::move(right)});
}

std::string show(const LabeledFinSet& x) {
  std::string out = "[";
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += label_name(x.labels[i]);
  }
  return out + "]";
}

std::string show(const Cospan& c) {
  auto leg = [](const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out + "]";
  };
  return show(c.dom) + " -" + leg(c.left) + "-> " + show(c.apex) + " <-" +
         leg(c.right) + "- " + show(c.cod);
}

}  // namespace hypcat
