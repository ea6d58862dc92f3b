#include "hypcat/term.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hypcat {

TermPtr Term::make_id(LabeledFinSet x) {
  return std::make_shared<Term>(Term{Kind::id, std::move(x), {}, {}, nullptr, nullptr});
}
TermPtr Term::make_swap(LabeledFinSet x, LabeledFinSet y) {
  return std::make_shared<Term>(Term{Kind::swp, std::move(x), std::move(y), {}, nullptr, nullptr});
}
TermPtr Term::make_frob(Frob kind, LabeledFinSet x) {
  Kind k = Kind::mu;
  switch (kind) {
    case Frob::mu: k = Kind::mu; break;
    case Frob::eta: k = Kind::eta; break;
    case Frob::delta: k = Kind::delta; break;
    case Frob::eps: k = Kind::eps; break;
  }
  return std::make_shared<Term>(Term{k, std::move(x), {}, {}, nullptr, nullptr});
}
TermPtr Term::make_box(std::string name) {
  return std::make_shared<Term>(Term{Kind::box, {}, {}, std::move(name), nullptr, nullptr});
}
TermPtr Term::make_seq(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::seq, {}, {}, {}, std::move(a), std::move(b)});
}
TermPtr Term::make_par(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::par, {}, {}, {}, std::move(a), std::move(b)});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::seq:
    case Term::Kind::par:
      return term_equal(a->a, b->a) && term_equal(a->b, b->b);
    case Term::Kind::box:
      return a->box == b->box;
    case Term::Kind::swp:
      return a->x == b->x && a->y == b->y;
    default:
      return a->x == b->x;
  }
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Signature& sig;

  explicit Parser(std::string_view t, const Signature& s) : text(t), sig(s) {}

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos >= text.size();
  }

  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw SyntaxError("syntax error at offset " + std::to_string(pos) +
                        ": expected '" + std::string(1, c) + "'");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip();
    if (pos >= text.size() || !ident_start(text[pos]))
      throw SyntaxError("syntax error at offset " + std::to_string(pos) +
                        ": expected an identifier");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  Label label() {
    std::size_t at = pos;
    std::string name = ident();
    for (Label l : sig.labels)
      if (label_name(l) == name) return l;
    throw UnknownLabel("unknown label '" + name + "' at offset " +
                       std::to_string(at));
  }

  /// labels := empty | IDENT ("," IDENT)* ; terminated by ']' or '|'.
  LabeledFinSet labels() {
    std::vector<Label> ls;
    if (peek() == ']' || peek() == '|') return LabeledFinSet{std::move(ls)};
    ls.push_back(label());
    while (eat(',')) ls.push_back(label());
    return LabeledFinSet{std::move(ls)};
  }

  TermPtr atom() {
    skip();
    if (eat('(')) {
      TermPtr t = term();
      expect(')');
      return t;
    }
    std::size_t at = pos;
    std::string name = ident();
    if (name == "id" || name == "mu" || name == "eta" || name == "delta" ||
        name == "eps") {
      expect('[');
      LabeledFinSet x = labels();
      expect(']');
      if (name == "id") return Term::make_id(std::move(x));
      if (name == "mu") return Term::make_frob(Frob::mu, std::move(x));
      if (name == "eta") return Term::make_frob(Frob::eta, std::move(x));
      if (name == "delta") return Term::make_frob(Frob::delta, std::move(x));
      return Term::make_frob(Frob::eps, std::move(x));
    }
    if (name == "swap") {
      expect('[');
      LabeledFinSet x = labels();
      expect('|');
      LabeledFinSet y = labels();
      expect(']');
      return Term::make_swap(std::move(x), std::move(y));
    }
    if (!sig.boxes.contains(name))
      throw UnknownBox("unknown box '" + name + "' at offset " +
                       std::to_string(at));
    return Term::make_box(std::move(name));
  }

  TermPtr par() {
    TermPtr t = atom();
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        t = Term::make_par(std::move(t), atom());
      } else {
        break;
      }
    }
    return t;
  }

  TermPtr term() {
    TermPtr t = par();
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        t = Term::make_seq(std::move(t), par());
      } else {
        break;
      }
    }
    return t;
  }
};

}  // namespace

TermPtr parse_term(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  TermPtr t = p.term();
  if (!p.at_end())
    throw SyntaxError("syntax error at offset " + std::to_string(p.pos) +
                      ": trailing input");
  return t;
}

std::pair<LabeledFinSet, LabeledFinSet> typecheck(const TermPtr& t,
                                                  const Signature& sig) {
  switch (t->kind) {
    case Term::Kind::id:
      return {t->x, t->x};
    case Term::Kind::swp:
      return {oplus(t->x, t->y), oplus(t->y, t->x)};
    case Term::Kind::mu:
      return {oplus(t->x, t->x), t->x};
    case Term::Kind::eta:
      return {LabeledFinSet{}, t->x};
    case Term::Kind::delta:
      return {t->x, oplus(t->x, t->x)};
    case Term::Kind::eps:
      return {t->x, LabeledFinSet{}};
    case Term::Kind::box: {
      auto it = sig.boxes.find(t->box);
      if (it == sig.boxes.end())
        throw UnknownBox("unknown box '" + t->box + "'");
      return it->second;
    }
    case Term::Kind::seq: {
      auto [d1, c1] = typecheck(t->a, sig);
      auto [d2, c2] = typecheck(t->b, sig);
      if (c1 != d2)
        throw TypeMismatch("type mismatch at '" + pretty(t) + "': expected " +
                           show(c1) + ", found " + show(d2));
      return {d1, c2};
    }
    case Term::Kind::par: {
      auto [d1, c1] = typecheck(t->a, sig);
      auto [d2, c2] = typecheck(t->b, sig);
      return {oplus(d1, d2), oplus(c1, c2)};
    }
  }
  throw Error("typecheck: bad term");
}

namespace {

int prec(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::seq: return 1;
    case Term::Kind::par: return 2;
    default: return 3;
  }
}

std::string label_list(const LabeledFinSet& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += label_name(x.labels[i]);
  }
  return out;
}

void pp(const TermPtr& t, std::string& out) {
  auto child = [&](const TermPtr& c, bool needs_paren) {
    if (needs_paren) {
      out += "(";
      pp(c, out);
      out += ")";
    } else {
      pp(c, out);
    }
  };
  switch (t->kind) {
    case Term::Kind::id: out += "id[" + label_list(t->x) + "]"; return;
    case Term::Kind::swp:
      out += "swap[" + label_list(t->x) + "|" + label_list(t->y) + "]";
      return;
    case Term::Kind::mu: out += "mu[" + label_list(t->x) + "]"; return;
    case Term::Kind::eta: out += "eta[" + label_list(t->x) + "]"; return;
    case Term::Kind::delta: out += "delta[" + label_list(t->x) + "]"; return;
    case Term::Kind::eps: out += "eps[" + label_list(t->x) + "]"; return;
    case Term::Kind::box: out += t->box; return;
    case Term::Kind::seq:
      child(t->a, prec(t->a) < 1);
      out += " ; ";
      child(t->b, prec(t->b) <= 1);
      return;
    case Term::Kind::par:
      child(t->a, prec(t->a) < 2);
      out += " * ";
      child(t->b, prec(t->b) <= 2);
      return;
  }
}

}  // namespace

std::string pretty(const TermPtr& t) {
  std::string out;
  pp(t, out);
  return out;
}

namespace {

TermPtr seq_chain(TermPtr acc, TermPtr next) {
  if (!next) return acc;
  return acc ? Term::make_seq(std::move(acc), std::move(next)) : next;
}

/// Compiles "wire at position i must end at position target[i]" into
/// rows of adjacent transpositions (bubble sort). Null when already in
/// order.
TermPtr perm_term(std::vector<int> target, std::vector<Label> ls) {
  TermPtr acc;
  int n = static_cast<int>(target.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (target[i] > target[i + 1]) {
        TermPtr row = Term::make_swap(LabeledFinSet{{ls[i]}},
                                      LabeledFinSet{{ls[i + 1]}});
        if (i > 0)
          row = Term::make_par(
              Term::make_id(LabeledFinSet{
                  std::vector<Label>(ls.begin(), ls.begin() + i)}),
              std::move(row));
        if (i + 2 < n)
          row = Term::make_par(
              std::move(row),
              Term::make_id(LabeledFinSet{
                  std::vector<Label>(ls.begin() + i + 2, ls.end())}));
        acc = seq_chain(std::move(acc), std::move(row));
        std::swap(target[i], target[i + 1]);
        std::swap(ls[i], ls[i + 1]);
        changed = true;
      }
    }
  }
  return acc;
}

/// k-ary multiplication comb, k >= 2: ((id * ... * mu) ; ... ; mu).
TermPtr mu_comb(Label l, int k) {
  TermPtr acc;
  for (int t = k; t >= 2; --t) {
    TermPtr stage = Term::make_frob(Frob::mu, LabeledFinSet{{l}});
    if (t > 2)
      stage = Term::make_par(
          Term::make_id(LabeledFinSet{std::vector<Label>(t - 2, l)}),
          std::move(stage));
    acc = seq_chain(std::move(acc), std::move(stage));
  }
  return acc;
}

/// Mirror comb of deltas, 1 -> k.
TermPtr delta_comb(Label l, int k) {
  TermPtr acc;
  for (int t = 2; t <= k; ++t) {
    TermPtr stage = Term::make_frob(Frob::delta, LabeledFinSet{{l}});
    if (t > 2)
      stage = Term::make_par(
          Term::make_id(LabeledFinSet{std::vector<Label>(t - 2, l)}),
          std::move(stage));
    acc = seq_chain(std::move(acc), std::move(stage));
  }
  return acc;
}

/// The monotone block layer of one leg: per apex element, a comb
/// joining (mu side) or emitting (delta side) its preimage block. Null
/// when every block has size one.
TermPtr block_layer(const std::vector<int>& counts,
                    const std::vector<Label>& apex, bool mu_side) {
  bool trivial = true;
  for (int c : counts)
    if (c != 1) trivial = false;
  if (trivial) return nullptr;
  TermPtr acc;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    Label l = apex[k];
    TermPtr piece;
    if (counts[k] == 0) {
      piece = Term::make_frob(mu_side ? Frob::eta : Frob::eps,
                              LabeledFinSet{{l}});
    } else if (counts[k] == 1) {
      piece = Term::make_id(LabeledFinSet{{l}});
    } else {
      piece = mu_side ? mu_comb(l, counts[k]) : delta_comb(l, counts[k]);
    }
    acc = acc ? Term::make_par(std::move(acc), std::move(piece)) : piece;
  }
  return acc;
}

}  // namespace

TermPtr decompose(const Cospan& c0) {
  Cospan c = canonicalize(c0);
  int p = c.apex.size();

  // Left leg: stable sort of domain wires by image, then combs.
  int m = c.dom.size();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.left[a] < c.left[b]; });
  std::vector<int> target_l(m);
  for (int s = 0; s < m; ++s) target_l[order[s]] = s;
  TermPtr t1 = perm_term(target_l, c.dom.labels);
  std::vector<int> counts_l(p, 0);
  for (int i : c.left) ++counts_l[i];
  TermPtr t2 = block_layer(counts_l, c.apex.labels, true);

  // Right leg mirror: combs emit wires in image-sorted order, then a
  // permutation restores the codomain order.
  int n = c.cod.size();
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::stable_sort(tau.begin(), tau.end(),
                   [&](int a, int b) { return c.right[a] < c.right[b]; });
  std::vector<int> counts_r(p, 0);
  for (int j : c.right) ++counts_r[j];
  TermPtr t3 = block_layer(counts_r, c.apex.labels, false);
  std::vector<Label> sorted_cod(n);
  for (int s = 0; s < n; ++s) sorted_cod[s] = c.cod.labels[tau[s]];
  TermPtr t4 = perm_term(tau, std::move(sorted_cod));

  TermPtr t = seq_chain(seq_chain(seq_chain(std::move(t1), std::move(t2)),
                                  std::move(t3)),
                        std::move(t4));
  return t ? t : Term::make_id(c.dom);
}

TermPtr random_term(const std::vector<Label>& alphabet, std::mt19937& rng,
                    int depth, int max_width) {
  auto pick_label = [&] {
    std::uniform_int_distribution<std::size_t> d(0, alphabet.size() - 1);
    return alphabet[d(rng)];
  };
  LabeledFinSet cur = random_object(alphabet, rng, max_width);
  TermPtr acc;
  int rows = std::uniform_int_distribution<int>(0, depth)(rng);
  for (int r = 0; r < rows; ++r) {
    std::vector<Label> out;
    TermPtr row;
    auto add = [&](TermPtr piece) {
      row = row ? Term::make_par(std::move(row), std::move(piece)) : piece;
    };
    int pos = 0;
    int n = cur.size();
    while (pos < n) {
      Label l = cur.labels[pos];
      int choice = std::uniform_int_distribution<int>(0, 4)(rng);
      if (choice == 3 && pos + 1 < n && cur.labels[pos + 1] == l) {
        add(Term::make_frob(Frob::mu, LabeledFinSet{{l}}));
        out.push_back(l);
        pos += 2;
      } else if (choice == 4 && pos + 1 < n) {
        Label l2 = cur.labels[pos + 1];
        add(Term::make_swap(LabeledFinSet{{l}}, LabeledFinSet{{l2}}));
        out.push_back(l2);
        out.push_back(l);
        pos += 2;
      } else if (choice == 1) {
        add(Term::make_frob(Frob::delta, LabeledFinSet{{l}}));
        out.push_back(l);
        out.push_back(l);
        pos += 1;
      } else if (choice == 2) {
        add(Term::make_frob(Frob::eps, LabeledFinSet{{l}}));
        pos += 1;
      } else {
        add(Term::make_id(LabeledFinSet{{l}}));
        out.push_back(l);
        pos += 1;
      }
    }
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      Label l = pick_label();
      add(Term::make_frob(Frob::eta, LabeledFinSet{{l}}));
      out.push_back(l);
    }
    if (!row) row = Term::make_id(LabeledFinSet{});
    acc = acc ? Term::make_seq(std::move(acc), std::move(row)) : row;
    cur = LabeledFinSet{std::move(out)};
  }
  return acc ? acc : Term::make_id(cur);
}

}  // namespace hypcat
