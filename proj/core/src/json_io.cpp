#include "hypcat/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "hypcat/errors.hpp"

namespace hypcat {

namespace {

using ojson = nlohmann::ordered_json;

ojson parse_text(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const std::exception& e) {
    throw JsonError(std::string("malformed JSON: ") + e.what());
  }
}

const ojson& field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw JsonError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> str_array(const ojson& j, const char* key) {
  const ojson& a = field(j, key);
  if (!a.is_array()) throw JsonError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : a) {
    if (!v.is_string())
      throw JsonError(std::string(key) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<int> int_array(const ojson& a, const char* what) {
  if (!a.is_array()) throw JsonError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : a) {
    if (!v.is_number_integer())
      throw JsonError(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

ojson labels_json(const LabeledFinSet& x) {
  ojson a = ojson::array();
  for (Label l : x.labels) a.push_back(label_name(l));
  return a;
}

Rat rat_from_string(const std::string& s) {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw JsonError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw JsonError("not a rational: \"" + s + "\"");
  }
}

}  // namespace

std::string cospan_to_json(const Cospan& c) {
  Cospan k = canonicalize(c);
  ojson j;
  j["dom"] = labels_json(k.dom);
  j["cod"] = labels_json(k.cod);
  j["apex"] = labels_json(k.apex);
  j["left"] = k.left;
  j["right"] = k.right;
  return j.dump(2);
}

Cospan cospan_from_json(const std::string& text) {
  ojson j = parse_text(text);
  return canonicalize(Cospan::make(
      make_object(str_array(j, "dom")), make_object(str_array(j, "cod")),
      make_object(str_array(j, "apex")), int_array(field(j, "left"), "left"),
      int_array(field(j, "right"), "right")));
}

std::string linrel_to_json(const LinRel& r) {
  ojson j;
  j["m"] = r.m;
  j["n"] = r.n;
  ojson basis = ojson::array();
  for (const auto& row : r.basis) {
    ojson jr = ojson::array();
    for (const Rat& v : row)
      jr.push_back(v.get_num().get_str() + "/" + v.get_den().get_str());
    basis.push_back(std::move(jr));
  }
  j["basis"] = std::move(basis);
  return j.dump(2);
}

LinRel linrel_from_json(const std::string& text) {
  ojson j = parse_text(text);
  const ojson& jm = field(j, "m");
  const ojson& jn = field(j, "n");
  if (!jm.is_number_integer() || !jn.is_number_integer() || jm.get<int>() < 0 ||
      jn.get<int>() < 0)
    throw JsonError("m and n must be nonnegative integers");
  const ojson& jb = field(j, "basis");
  if (!jb.is_array()) throw JsonError("basis must be an array");
  Mat rows;
  for (const auto& jr : jb) {
    if (!jr.is_array()) throw JsonError("basis rows must be arrays");
    std::vector<Rat> row;
    for (const auto& v : jr) {
      if (!v.is_string())
        throw JsonError("basis entries must be rational strings");
      row.push_back(rat_from_string(v.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  return linrel_make(jm.get<int>(), jn.get<int>(), std::move(rows));
}

std::string finrel_to_json(const FinRel& r) {
  ojson j;
  j["dom"] = labels_json(r.dom);
  j["cod"] = labels_json(r.cod);
  ojson ts = ojson::array();
  for (const auto& [a, b] : r.tuples) ts.push_back(ojson::array({a, b}));
  j["tuples"] = std::move(ts);
  return j.dump(2);
}

FinRel finrel_from_json(const std::string& text, const Carriers& car) {
  ojson j = parse_text(text);
  const ojson& jt = field(j, "tuples");
  if (!jt.is_array()) throw JsonError("tuples must be an array");
  std::vector<FinTuple> ts;
  for (const auto& p : jt) {
    if (!p.is_array() || p.size() != 2)
      throw JsonError("tuples entries must be [dom, cod] pairs");
    ts.emplace_back(int_array(p.at(0), "tuple"), int_array(p.at(1), "tuple"));
  }
  return finrel_make(car, make_object(str_array(j, "dom")),
                     make_object(str_array(j, "cod")), std::move(ts));
}

std::string signature_to_json(const Signature& s) {
  ojson j;
  ojson ls = ojson::array();
  for (Label l : s.labels) ls.push_back(label_name(l));
  j["labels"] = std::move(ls);
  ojson bs = ojson::object();
  for (const auto& [name, io] : s.boxes) {
    ojson b;
    b["dom"] = labels_json(io.first);
    b["cod"] = labels_json(io.second);
    bs[name] = std::move(b);
  }
  j["boxes"] = std::move(bs);
  return j.dump(2);
}

Signature signature_from_json(const std::string& text) {
  static const char* keywords[] = {"id", "swap", "mu", "eta", "delta", "eps"};
  ojson j = parse_text(text);
  Signature sig;
  for (const std::string& name : str_array(j, "labels")) {
    Label l = intern(name);
    for (Label seen : sig.labels)
      if (seen == l) throw JsonError("duplicate label \"" + name + "\"");
    sig.labels.push_back(l);
  }
  if (j.contains("boxes")) {
    const ojson& bs = j.at("boxes");
    if (!bs.is_object()) throw JsonError("boxes must be an object");
    for (const auto& [name, b] : bs.items()) {
      for (const char* kw : keywords)
        if (name == kw)
          throw JsonError("box name \"" + name + "\" collides with a keyword");
      LabeledFinSet dom = make_object(str_array(b, "dom"));
      LabeledFinSet cod = make_object(str_array(b, "cod"));
      for (const LabeledFinSet* o : {&dom, &cod})
        for (Label l : o->labels)
          if (std::find(sig.labels.begin(), sig.labels.end(), l) ==
              sig.labels.end())
            throw UnknownLabel("box \"" + name + "\" uses undeclared label " +
                               label_name(l));
      sig.boxes[name] = {std::move(dom), std::move(cod)};
    }
  }
  return sig;
}

std::map<std::string, std::string> boxes_from_json(const std::string& text) {
  ojson j = parse_text(text);
  if (!j.is_object()) throw JsonError("boxes file must be a JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [name, v] : j.items()) out[name] = v.dump(2);
  return out;
}

}  // namespace hypcat
