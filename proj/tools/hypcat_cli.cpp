#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypcat/algebra.hpp"
#include "hypcat/errors.hpp"
#include "hypcat/instances.hpp"
#include "hypcat/json_io.hpp"

namespace {

using namespace hypcat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes content plus a trailing newline to path, or stdout if empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content << "\n";
}

std::vector<Label> parse_labels(const std::string& csv) {
  std::vector<Label> out;
  std::stringstream ss(csv);
  std::string cur;
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(intern(cur));
  if (out.empty()) throw Error("empty label set");
  return out;
}

Carriers uniform_carriers(const std::vector<Label>& labels, int size) {
  Carriers car;
  for (Label l : labels) car[l] = size;
  return car;
}

std::shared_ptr<const HypCategory> pick_instance(
    const std::string& inst, const std::vector<Label>& labels, int carrier) {
  if (inst == "cospan") return cospan_instance(labels);
  if (inst == "linrel-copy") return linrel_instance(labels, LinStructure::copy);
  if (inst == "linrel-add") return linrel_instance(labels, LinStructure::add);
  return finrel_instance(uniform_carriers(labels, carrier));
}

/// Parses per-instance box bindings and checks them against the
/// signature's declared boundaries.
std::map<std::string, HypCategory::Morph> bind_boxes(
    const std::string& inst, const Signature& sig,
    const std::map<std::string, std::string>& raw, const Carriers& car) {
  std::map<std::string, HypCategory::Morph> out;
  for (const auto& [name, text] : raw) {
    auto it = sig.boxes.find(name);
    if (it == sig.boxes.end())
      throw UnknownBox("box \"" + name + "\" is not in the signature");
    const auto& [bd, bc] = it->second;
    if (inst == "cospan") {
      Cospan c = cospan_from_json(text);
      if (!(c.dom == bd && c.cod == bc))
        throw TypeMismatch("binding for box \"" + name +
                           "\" does not match its declared boundary");
      out[name] = std::move(c);
    } else if (inst == "linrel-copy" || inst == "linrel-add") {
      LinRel r = linrel_from_json(text);
      if (r.m != bd.size() || r.n != bc.size())
        throw TypeMismatch("binding for box \"" + name +
                           "\" does not match its declared boundary");
      out[name] = LinMorph{bd, bc, std::move(r)};
    } else {
      FinRel r = finrel_from_json(text, car);
      if (!(r.dom == bd && r.cod == bc))
        throw TypeMismatch("binding for box \"" + name +
                           "\" does not match its declared boundary");
      out[name] = std::move(r);
    }
  }
  return out;
}

std::string morph_json(const std::string& inst, const HypCategory::Morph& m) {
  if (inst == "cospan") return cospan_to_json(std::any_cast<const Cospan&>(m));
  if (inst == "linrel-copy" || inst == "linrel-add")
    return linrel_to_json(std::any_cast<const LinMorph&>(m).rel);
  return finrel_to_json(std::any_cast<const FinRel&>(m));
}

std::string to_dot(const Cospan& raw) {
  Cospan c = canonicalize(raw);
  std::ostringstream os;
  os << "graph cospan {\n";
  for (int j = 0; j < c.apex.size(); ++j)
    os << "  a" << j << " [shape=circle, label=\""
       << label_name(c.apex.labels[j]) << "\"];\n";
  for (int i = 0; i < c.dom.size(); ++i)
    os << "  d" << i << " [shape=box, label=\"d" << i << ":"
       << label_name(c.dom.labels[i]) << "\"];\n";
  for (int i = 0; i < c.cod.size(); ++i)
    os << "  c" << i << " [shape=box, label=\"c" << i << ":"
       << label_name(c.cod.labels[i]) << "\"];\n";
  for (int i = 0; i < c.dom.size(); ++i)
    os << "  d" << i << " -- a" << c.left[i] << ";\n";
  for (int i = 0; i < c.cod.size(); ++i)
    os << "  c" << i << " -- a" << c.right[i] << ";\n";
  os << "}";
  return os.str();
}

/// Evaluates a term file in an instance, with optional box bindings.
HypCategory::Morph run_eval(const std::string& inst,
                            const std::string& sig_path,
                            const std::string& in_path,
                            const std::string& boxes_path, int carrier) {
  Signature sig = signature_from_json(read_file(sig_path));
  TermPtr t = parse_term(read_file(in_path), sig);
  std::shared_ptr<const HypCategory> h =
      pick_instance(inst, sig.labels, carrier);
  std::map<std::string, HypCategory::Morph> boxes;
  if (!boxes_path.empty())
    boxes = bind_boxes(inst, sig, boxes_from_json(read_file(boxes_path)),
                       uniform_carriers(sig.labels, carrier));
  return eval_term(t, *h, boxes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "labeled cospans, Frobenius terms, and hypergraph-category instances"};
  app.require_subcommand(1);

  std::string sig_path, in_path, out_path, boxes_path;
  std::string a_path, b_path;
  std::string inst = "cospan", suite = "frobenius", labels_csv = "a,b";
  int carrier = 2, samples = 200;
  std::uint64_t seed = 0;

  CLI::App* cmd_parse = app.add_subcommand(
      "parse", "evaluate a term file to a canonical cospan JSON");
  cmd_parse->add_option("--sig", sig_path, "signature JSON")->required();
  cmd_parse->add_option("--in", in_path, "term file")->required();
  cmd_parse->add_option("--boxes", boxes_path, "box bindings JSON");
  cmd_parse->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_compose =
      app.add_subcommand("compose", "compose two cospan JSON files");
  cmd_compose->add_option("a", a_path, "first cospan")->required();
  cmd_compose->add_option("b", b_path, "second cospan")->required();
  cmd_compose->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_tensor =
      app.add_subcommand("tensor", "tensor two cospan JSON files");
  cmd_tensor->add_option("a", a_path, "first cospan")->required();
  cmd_tensor->add_option("b", b_path, "second cospan")->required();
  cmd_tensor->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_eq = app.add_subcommand(
      "eq", "compare two cospan JSON files (exit 0 equal, 1 not)");
  cmd_eq->add_option("a", a_path, "first cospan")->required();
  cmd_eq->add_option("b", b_path, "second cospan")->required();

  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "write a cospan as a generator term");
  cmd_decompose->add_option("in", in_path, "cospan JSON")->required();
  cmd_decompose->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_eval = app.add_subcommand(
      "eval", "evaluate a term file in a chosen instance");
  cmd_eval->add_option("--instance", inst, "target instance")
      ->check(CLI::IsMember({"cospan", "linrel-copy", "linrel-add", "finrel"}))
      ->required();
  cmd_eval->add_option("--sig", sig_path, "signature JSON")->required();
  cmd_eval->add_option("--in", in_path, "term file")->required();
  cmd_eval->add_option("--boxes", boxes_path, "box bindings JSON");
  cmd_eval->add_option("--carriers", carrier, "finrel carrier size")
      ->check(CLI::PositiveNumber);
  cmd_eval->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_check = app.add_subcommand(
      "check", "run an axiom suite against an instance");
  cmd_check->add_option("--suite", suite, "equation family")
      ->check(CLI::IsMember({"frobenius", "compact", "functor"}))
      ->required();
  cmd_check->add_option("--instance", inst, "target instance")
      ->check(CLI::IsMember({"cospan", "linrel-copy", "linrel-add", "finrel"}))
      ->required();
  cmd_check->add_option("--labels", labels_csv, "label alphabet (default a,b)");
  cmd_check->add_option("--carriers", carrier, "finrel carrier size")
      ->check(CLI::PositiveNumber);
  cmd_check->add_option("--seed", seed, "random seed");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify-equiv", "verify the algebra/instance equivalence");
  cmd_verify->add_option("--instance", inst, "target instance")
      ->check(CLI::IsMember({"cospan", "linrel-copy", "linrel-add", "finrel"}))
      ->required();
  cmd_verify->add_option("--labels", labels_csv,
                         "label alphabet (default a,b)");
  cmd_verify->add_option("--carriers", carrier, "finrel carrier size")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--samples", samples, "sample count")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", seed, "random seed");

  CLI::App* cmd_dot =
      app.add_subcommand("dot", "render a cospan JSON as Graphviz");
  cmd_dot->add_option("in", in_path, "cospan JSON")->required();
  cmd_dot->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (cmd_parse->parsed()) {
      HypCategory::Morph m =
          run_eval("cospan", sig_path, in_path, boxes_path, carrier);
      emit(out_path, cospan_to_json(std::any_cast<const Cospan&>(m)));
      return 0;
    }
    if (cmd_compose->parsed() || cmd_tensor->parsed()) {
      Cospan a = cospan_from_json(read_file(a_path));
      Cospan b = cospan_from_json(read_file(b_path));
      Cospan c = cmd_compose->parsed() ? compose(a, b) : tensor(a, b);
      emit(out_path, cospan_to_json(c));
      return 0;
    }
    if (cmd_eq->parsed()) {
      Cospan a = cospan_from_json(read_file(a_path));
      Cospan b = cospan_from_json(read_file(b_path));
      return equal(a, b) ? 0 : 1;
    }
    if (cmd_decompose->parsed()) {
      Cospan c = cospan_from_json(read_file(in_path));
      emit(out_path, pretty(decompose(c)));
      return 0;
    }
    if (cmd_eval->parsed()) {
      HypCategory::Morph m =
          run_eval(inst, sig_path, in_path, boxes_path, carrier);
      emit(out_path, morph_json(inst, m));
      return 0;
    }
    if (cmd_check->parsed()) {
      std::vector<Label> labels = parse_labels(labels_csv);
      std::shared_ptr<const HypCategory> h =
          pick_instance(inst, labels, carrier);
      Suite kind = suite == "frobenius" ? Suite::frobenius
                   : suite == "compact" ? Suite::compact
                                        : Suite::functor;
      Report rep = axiom_suite(*h, labels, seed, kind);
      std::cout << to_text(rep);
      return rep.all_pass() ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
      std::vector<Label> labels = parse_labels(labels_csv);
      std::shared_ptr<const HypCategory> h =
          pick_instance(inst, labels, carrier);
      std::shared_ptr<const CospanAlgebra> a =
          inst == "cospan" ? part_algebra(labels) : psi(h);
      Report rep = verify_equivalence(a, h, samples, seed);
      std::cout << to_text(rep);
      return rep.all_pass() ? 0 : 1;
    }
    if (cmd_dot->parsed()) {
      emit(out_path, to_dot(cospan_from_json(read_file(in_path))));
      return 0;
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
