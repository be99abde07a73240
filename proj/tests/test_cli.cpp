#include <doctest.h>

#include <sstream>

#include "pointless/cli.hpp"
#include "pointless/frame_io.hpp"
#include "pointless/tensor.hpp"

using namespace pointless;
using namespace pointless::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(std::string command, std::vector<std::string> inputs, std::vector<std::string> tests = {}) {
  Invocation inv;
  inv.command = std::move(command);
  inv.inputs = std::move(inputs);
  inv.tests = std::move(tests);
  std::ostringstream out, err;
  int s = run(inv, out, err);
  return {s, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(POINTLESS_DATA_DIR) + "/frames/" + file; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("validate") {
  auto m3 = call("validate", {data("m3.frame")});
  CHECK(m3.status == kViolation);
  CHECK(has(m3.out, "witness: a b c"));
  CHECK(has(m3.out, "RESULT valid=no violation=not_distributive"));

  auto d = call("validate", {data("diamond.frame")});
  CHECK(d.status == kOk);
  CHECK(has(d.out, "RESULT valid=yes elements=4"));

  CHECK(call("validate", {"@n5"}).status == kViolation);
  CHECK(call("validate", {"@chain7"}).status == kOk);
}

TEST_CASE("parse and usage errors are status 2") {
  auto broken = call("validate", {data("broken.frame")});
  CHECK(broken.status == kUsage);
  CHECK(has(broken.err, "line 4"));
  CHECK(call("validate", {}).status == kUsage);
  CHECK(call("validate", {"/nonexistent/file.frame"}).status == kUsage);
  CHECK(call("validate", {"@nosuch"}).status == kUsage);
  CHECK(call("tensor", {"@chain5", "@chain5"}).status == kUsage);
}

TEST_CASE("unknown commands are rejected before reading inputs") {
  auto r = call("frobnicate", {"/nonexistent/file.frame"});
  CHECK(r.status == kUsage);
  CHECK(has(r.err, "unknown command"));
  CHECK_FALSE(has(r.err, "cannot open"));
  CHECK_FALSE(known_command("frobnicate"));
  CHECK(commands().size() == 9);
}

TEST_CASE("commands that need a frame report a violation on a lattice that is not one") {
  auto r = call("points", {data("m3.frame")});
  CHECK(r.status == kViolation);
}

TEST_CASE("exp-sierpinski") {
  auto r = call("exp-sierpinski", {data("diamond.frame")});
  CHECK(r.status == kOk);
  CHECK(has(r.out, "RESULT elements=6 iso=ok"));
  CHECK(has(call("exp-sierpinski", {"@terminal"}).out, "RESULT elements=3 iso=ok"));
  CHECK(has(call("exp-sierpinski", {"@chain3"}).out, "RESULT elements=4 iso=ok"));
}

TEST_CASE("counterexample") {
  auto r = call("counterexample", {});
  CHECK(r.status == kOk);
  CHECK(has(r.out, "RESULT coeff_after_pushforward=top pushforward_of_coeff=bottom agree=no"));
  CHECK(has(r.out, "#"));
  CHECK(call("counterexample", {"@terminal"}).status == kUsage);
}

TEST_CASE("tensor and dot") {
  auto t = call("tensor", {"@sierpinski", data("sierpinski.frame")});
  CHECK(t.status == kOk);
  CHECK(has(t.out, "RESULT elements=6 covers=6"));
  CHECK(count(t.out, " -> ") == 6);

  auto c3 = call("dot", {"@chain3"});
  CHECK(count(c3.out, "[label=") == 3);
  CHECK(count(c3.out, " -> ") == 2);
  auto sq = call("dot", {"@diamond"});
  CHECK(count(sq.out, "[label=") == 4);
  CHECK(count(sq.out, " -> ") == 4);

  // edges of S (x) S are exactly the computed covers
  auto ss = TensorFrame::make(sierpinski(), sierpinski());
  std::string dot = emit_dot(ss.frame());
  CHECK(count(dot, "[label=") == 6);
  CHECK(count(dot, " -> ") == ss.frame().poset().covers().size());
}

TEST_CASE("presentation input") {
  auto r = call("points", {data("square.pres")});
  CHECK(r.status == kOk);
  CHECK(has(r.out, "RESULT points=4"));
  auto v = call("validate", {data("square.pres")});
  CHECK(has(v.out, "RESULT valid=yes elements=6"));
}

TEST_CASE("way-below and local compactness") {
  auto w = call("waybelow", {"@diamond"});
  CHECK(has(w.out, "RESULT pairs=9 compact=4"));
  auto lc = call("locally-compact", {"@chain4"});
  CHECK(lc.status == kOk);
  CHECK(has(lc.out, "RESULT locally_compact=yes"));
}

TEST_CASE("verify-exponential") {
  auto s = call("verify-exponential", {"@sierpinski"}, {"@sierpinski"});
  CHECK(s.status == kOk);
  CHECK(has(s.out, "homs=6 bijection=yes"));
  auto b = call("verify-exponential", {"@sierpinski", "@sierpinski"}, {"@terminal"});
  CHECK(b.status == kOk);
  CHECK(has(b.out, "assignments=3 homs=3 bijection=yes"));
  CHECK(call("verify-exponential", {"@sierpinski"}, {"@m3"}).status == kViolation);
}

TEST_CASE("reports are deterministic") {
  for (auto cmd : {"points", "waybelow", "exp-sierpinski", "dot"}) {
    auto a = call(cmd, {"@diamond"});
    auto b = call(cmd, {"@diamond"});
    CHECK(a.out == b.out);
  }
  CHECK(call("tensor", {"@diamond", "@sierpinski"}).out == call("tensor", {"@diamond", "@sierpinski"}).out);
  CHECK(call("counterexample", {}).out == call("counterexample", {}).out);
}
