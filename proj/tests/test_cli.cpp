#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hypcat/instances.hpp"
#include "hypcat/json_io.hpp"

using namespace hypcat;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hypcat_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

RunResult run(const std::string& args) {
  fs::path out_p = work_dir() / "stdout.txt";
  fs::path err_p = work_dir() / "stderr.txt";
  std::string cmd = std::string(HYPCAT_CLI_PATH) + " " + args + " > " +
                    out_p.string() + " 2> " + err_p.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out_p), slurp(err_p)};
}

fs::path file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  spit(p, content);
  return p;
}

std::string plain_sig() { return R"({"labels": ["a", "b"], "boxes": {}})"; }

}  // namespace

TEST_CASE("parse evaluates a term file to canonical cospan JSON") {
  fs::path sig = file("sig.json", plain_sig());
  fs::path term = file("cap.term", "mu[a] ; eps[a]\n");

  Cospan cap = compose(frobenius_cospan(Frob::mu, make_object({"a"})),
                       frobenius_cospan(Frob::eps, make_object({"a"})));
  RunResult r = run("parse --sig " + sig.string() + " --in " + term.string());
  CHECK(r.code == 0);
  CHECK(r.out == cospan_to_json(cap) + "\n");
  CHECK(r.err.empty());

  // Byte-identical across runs.
  RunResult again =
      run("parse --sig " + sig.string() + " --in " + term.string());
  CHECK(again.out == r.out);

  // --out writes the same bytes to a file.
  fs::path out = work_dir() / "cap.json";
  RunResult to_file = run("parse --sig " + sig.string() + " --in " +
                          term.string() + " --out " + out.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(out) == r.out);
}

TEST_CASE("compose and tensor operate on cospan files") {
  LabeledFinSet a1 = make_object({"a"});
  fs::path mu = file("mu.json", cospan_to_json(frobenius_cospan(Frob::mu, a1)));
  fs::path delta =
      file("delta.json", cospan_to_json(frobenius_cospan(Frob::delta, a1)));
  fs::path eta =
      file("eta.json", cospan_to_json(frobenius_cospan(Frob::eta, a1)));

  // Specialness: delta then mu is the identity.
  RunResult r = run("compose " + delta.string() + " " + mu.string());
  CHECK(r.code == 0);
  CHECK(r.out == cospan_to_json(identity_cospan(a1)) + "\n");

  RunResult t = run("tensor " + mu.string() + " " + eta.string());
  CHECK(t.code == 0);
  CHECK(t.out == cospan_to_json(tensor(frobenius_cospan(Frob::mu, a1),
                                       frobenius_cospan(Frob::eta, a1))) +
                     "\n");

  // Boundary mismatch is an error, reported on one line.
  RunResult bad = run("compose " + mu.string() + " " + mu.string());
  CHECK(bad.code == 2);
  CHECK(bad.err.substr(0, 7) == "error: ");
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}

TEST_CASE("eq distinguishes equal, unequal, and error") {
  LabeledFinSet a1 = make_object({"a"});
  fs::path mu = file("mu.json", cospan_to_json(frobenius_cospan(Frob::mu, a1)));
  fs::path delta =
      file("delta.json", cospan_to_json(frobenius_cospan(Frob::delta, a1)));

  // eq compares isomorphism classes: a hand-written representative with
  // a permuted apex is still the identity.
  fs::path id2 = file("id2.json",
                      R"({"dom": ["a", "b"], "cod": ["a", "b"],
                          "apex": ["b", "a"], "left": [1, 0],
                          "right": [1, 0]})");
  fs::path idc = file("idc.json",
                      cospan_to_json(identity_cospan(make_object({"a", "b"}))));
  CHECK(run("eq " + id2.string() + " " + idc.string()).code == 0);
  CHECK(run("eq " + mu.string() + " " + delta.string()).code == 1);

  RunResult missing = run("eq " + mu.string() + " " +
                          (work_dir() / "nope.json").string());
  CHECK(missing.code == 2);
  CHECK(missing.err.substr(0, 7) == "error: ");

  fs::path garbage = file("garbage.json", "{\"dom\": [");
  CHECK(run("eq " + mu.string() + " " + garbage.string()).code == 2);
}

TEST_CASE("decompose emits a term that parses back to the same cospan") {
  std::vector<std::string> ten(10, "a"), seven(7, "a"), six(6, "a");
  Cospan c = canonicalize(
      Cospan::make(make_object(ten), make_object(six), make_object(seven),
                   {1, 2, 3, 3, 1, 2, 5, 3, 5, 6}, {0, 1, 3, 4, 4, 6}));
  fs::path in = file("ten.json", cospan_to_json(c));
  fs::path term_out = work_dir() / "ten.term";

  RunResult d = run("decompose " + in.string() + " --out " + term_out.string());
  CHECK(d.code == 0);

  fs::path sig = file("sig.json", plain_sig());
  RunResult back =
      run("parse --sig " + sig.string() + " --in " + term_out.string());
  CHECK(back.code == 0);
  CHECK(back.out == cospan_to_json(c) + "\n");
}

TEST_CASE("eval targets each instance") {
  fs::path sig = file("sig_r.json", R"({"labels": ["r"], "boxes": {}})");
  fs::path term = file("plumb.term", "delta[r]*id[r] ; id[r]*mu[r]\n");

  RunResult add = run("eval --instance linrel-add --sig " + sig.string() +
                      " --in " + term.string());
  CHECK(add.code == 0);
  CHECK(add.out ==
        linrel_to_json(linrel_make(
            2, 2, {{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}})) +
            "\n");

  fs::path idterm = file("id.term", "delta[r] ; mu[r]\n");
  RunResult fr = run("eval --instance finrel --carriers 3 --sig " +
                     sig.string() + " --in " + idterm.string());
  CHECK(fr.code == 0);
  Carriers car{{intern("r"), 3}};
  CHECK(fr.out ==
        finrel_to_json(finrel_identity(car, make_object({"r"}))) + "\n");

  RunResult cos = run("eval --instance cospan --sig " + sig.string() +
                      " --in " + idterm.string());
  CHECK(cos.code == 0);
  CHECK(cos.out == cospan_to_json(identity_cospan(make_object({"r"}))) + "\n");
}

TEST_CASE("eval binds boxes against their declared boundaries") {
  fs::path sig = file("sig_f.json",
                      R"({"labels": ["a", "b"],
                          "boxes": {"f": {"dom": ["a"], "cod": ["b", "b"]}}})");
  std::mt19937 rng(2);
  Cospan bound =
      random_cospan(make_object({"a"}), make_object({"b", "b"}),
                    {intern("a"), intern("b")}, rng);
  fs::path boxes =
      file("boxes.json", "{\"f\": " + cospan_to_json(bound) + "}");
  fs::path term = file("boxed.term", "f ; mu[b]\n");

  RunResult r = run("eval --instance cospan --sig " + sig.string() + " --in " +
                    term.string() + " --boxes " + boxes.string());
  CHECK(r.code == 0);
  Cospan want =
      compose(bound, frobenius_cospan(Frob::mu, make_object({"b"})));
  CHECK(r.out == cospan_to_json(want) + "\n");

  // A binding with the wrong boundary is rejected.
  fs::path badbox = file(
      "badbox.json",
      "{\"f\": " + cospan_to_json(identity_cospan(make_object({"a"}))) + "}");
  RunResult bad = run("eval --instance cospan --sig " + sig.string() +
                      " --in " + term.string() + " --boxes " +
                      badbox.string());
  CHECK(bad.code == 2);
  CHECK(bad.err.substr(0, 7) == "error: ");
}

TEST_CASE("check runs axiom suites and reports by exit code") {
  RunResult r = run("check --suite frobenius --instance linrel-add --seed 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS special") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  RunResult c = run(
      "check --suite compact --instance finrel --labels a,b --carriers 2");
  CHECK(c.code == 0);
  CHECK(c.out.find("PASS zigzag-left") != std::string::npos);

  // Unknown suite name is a usage error.
  CHECK(run("check --suite nonsense --instance cospan").code == 2);
}

TEST_CASE("verify-equiv exercises the equivalence end to end") {
  RunResult r = run(
      "verify-equiv --instance finrel --labels a,b --carriers 2 "
      "--samples 40 --seed 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS psi-phi-action") != std::string::npos);
  CHECK(r.out.find("PASS nu-compose") != std::string::npos);
  CHECK(r.out.find("PASS frobenius-from-names") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  RunResult part = run("verify-equiv --instance cospan --samples 40");
  CHECK(part.code == 0);
  CHECK(part.out.find("FAIL") == std::string::npos);
}

TEST_CASE("dot renders an undirected hypergraph drawing") {
  LabeledFinSet a1 = make_object({"a"});
  Cospan cap = compose(frobenius_cospan(Frob::mu, a1),
                       frobenius_cospan(Frob::eps, a1));
  fs::path in = file("cap.json", cospan_to_json(cap));
  RunResult r = run("dot " + in.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("graph cospan {") != std::string::npos);
  // One apex circle, two domain ports, two edges, no codomain ports.
  CHECK(r.out.find("a0 [shape=circle, label=\"a\"]") != std::string::npos);
  CHECK(r.out.find("d1 [shape=box") != std::string::npos);
  CHECK(r.out.find("c0") == std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '-') >= 4);
  CHECK(r.out.find("d0 -- a0") != std::string::npos);
  CHECK(r.out.find("d1 -- a0") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with one-line diagnostics") {
  RunResult none = run("");
  CHECK(none.code == 2);

  RunResult unknown = run("frobnicate");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.substr(0, 7) == "error: ");

  RunResult incomplete = run("parse --sig only.json");
  CHECK(incomplete.code == 2);

  fs::path sig = file("sig.json", plain_sig());
  fs::path bad = file("bad.term", "mu[a] ; ; mu[a]\n");
  RunResult syntax =
      run("parse --sig " + sig.string() + " --in " + bad.string());
  CHECK(syntax.code == 2);
  CHECK(syntax.err.substr(0, 7) == "error: ");
  CHECK(std::count(syntax.err.begin(), syntax.err.end(), '\n') == 1);

  // Help is not an error.
  CHECK(run("--help").code == 0);
}
