#include "pointless/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pointless/chain.hpp"
#include "pointless/exponential.hpp"
#include "pointless/frame_io.hpp"
#include "pointless/presentation.hpp"
#include "pointless/tensor.hpp"
#include "pointless/waybelow.hpp"

namespace pointless::cli {

namespace {

// Thrown for bad arguments; mapped to kUsage.
struct UsageError : Error {
  using Error::Error;
};

std::size_t ideal_cap(const Caps& c) { return c.unsafe ? std::numeric_limits<std::size_t>::max() : c.ideals; }

void check_generators(const Caps& c, std::size_t n, const std::string& what) {
  if (!c.unsafe && n > c.generators)
    throw ResourceError(what + " has more than " + std::to_string(c.generators) +
                            " generators (use --unsafe-caps to proceed)",
                        n);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// First keyword of the first line that is neither blank nor a comment.
std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream words(line);
    std::string w;
    if (words >> w) return w;
  }
  return {};
}

std::string base_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string s = slash == std::string::npos ? path : path.substr(slash + 1);
  if (auto dot = s.find('.'); dot != std::string::npos && dot > 0) s.resize(dot);
  return s;
}

Frame require_frame(const LoadedInput& in) {
  if (in.frame) return *in.frame;
  // load_input only leaves the frame empty when check_frame failed
  throw FrameError(in.name + " is not a frame: " + check_frame(in.poset).message);
}

std::string set_str(const Frame& f, const Bits& b) {
  std::string s = "{";
  bool first = true;
  b.for_each([&](Elem e) {
    s += (first ? "" : ",") + f.label(e);
    first = false;
  });
  return s + "}";
}

std::size_t column_width(const Frame& f) {
  std::size_t w = 1;
  for (Elem e = 0; e < f.size(); ++e) w = std::max(w, f.label(e).size());
  return w;
}

struct Context {
  const Invocation& inv;
  std::ostream& out;
  std::ostream& err;

  LoadedInput input(std::size_t i) const { return load_input(inv.inputs.at(i), inv.caps); }
  Frame frame(std::size_t i) const { return require_frame(input(i)); }
};

void expect_inputs(const Invocation& inv, std::size_t lo, std::size_t hi) {
  if (inv.inputs.size() < lo || inv.inputs.size() > hi) {
    std::ostringstream m;
    m << inv.command << " takes ";
    if (lo == hi)
      m << lo;
    else
      m << lo << " to " << hi;
    m << " input(s), got " << inv.inputs.size();
    throw UsageError(m.str());
  }
}

int cmd_validate(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  LoadedInput in = c.input(0);
  FrameReport r = check_frame(in.poset);
  c.out << in.name << ": " << in.poset.size() << " elements, " << in.poset.covers().size() << " covers\n";
  if (r.valid()) {
    c.out << "frame: yes\n";
    c.out << "RESULT valid=yes elements=" << in.poset.size() << "\n";
    return kOk;
  }
  c.out << "frame: no\n" << r.message << "\n";
  c.out << "witness:";
  for (Elem e : r.witness) c.out << ' ' << in.poset.name(e);
  c.out << "\n";
  const char* kind = r.violation == FrameReport::Violation::no_meet   ? "no_meet"
                     : r.violation == FrameReport::Violation::no_join ? "no_join"
                                                                       : "not_distributive";
  c.out << "RESULT valid=no violation=" << kind << "\n";
  return kViolation;
}

int cmd_points(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  Frame f = c.frame(0);
  auto ps = points(f);
  c.out << "points of " << f.name() << " (opens sent to top):\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Bits filter(f.size());
    for (Elem e = 0; e < f.size(); ++e)
      if (ps[i](e) == 1) filter.set(e);
    c.out << "  p" << i << " " << set_str(f, filter) << "\n";
  }
  c.out << "specialization order:\n";
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (i != j && specialization_leq(ps[i], ps[j])) c.out << "  p" << i << " <= p" << j << "\n";
  c.out << "RESULT points=" << ps.size() << "\n";
  return kOk;
}

int cmd_tensor(const Context& c) {
  expect_inputs(c.inv, 2, 2);
  Frame l = c.frame(0);
  Frame r = c.frame(1);
  check_generators(c.inv.caps, l.size() * r.size(), "the product semilattice");
  auto t = TensorFrame::make(l, r, ideal_cap(c.inv.caps));
  c.out << l.name() << " (x) " << r.name() << ": " << t.size() << " elements\n";
  c.out << emit_dot(t.frame());
  c.out << "rectangles (row (x) column):\n";
  std::size_t w = std::max(column_width(l), column_width(t.frame()));
  c.out << std::setw(static_cast<int>(w)) << "";
  for (Elem y = 0; y < r.size(); ++y) c.out << ' ' << std::setw(static_cast<int>(w)) << r.label(y);
  c.out << "\n";
  for (Elem x = 0; x < l.size(); ++x) {
    c.out << std::setw(static_cast<int>(w)) << l.label(x);
    for (Elem y = 0; y < r.size(); ++y)
      c.out << ' ' << std::setw(static_cast<int>(w)) << t.frame().label(t.rect(x, y));
    c.out << "\n";
  }
  c.out << "RESULT elements=" << t.size() << " covers=" << t.frame().poset().covers().size() << "\n";
  return kOk;
}

int cmd_waybelow(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  Frame f = c.frame(0);
  std::size_t w = column_width(f);
  std::size_t pairs = 0;
  c.out << "way-below on " << f.name() << " (row << column):\n";
  c.out << std::setw(static_cast<int>(w)) << "";
  for (Elem b = 0; b < f.size(); ++b) c.out << ' ' << std::setw(static_cast<int>(w)) << f.label(b);
  c.out << "\n";
  for (Elem a = 0; a < f.size(); ++a) {
    c.out << std::setw(static_cast<int>(w)) << f.label(a);
    for (Elem b = 0; b < f.size(); ++b) {
      const bool wb = way_below(f, a, b);
      pairs += wb;
      c.out << ' ' << std::setw(static_cast<int>(w)) << (wb ? "1" : ".");
    }
    c.out << "\n";
  }
  std::size_t compact = 0;
  for (Elem a = 0; a < f.size(); ++a) compact += is_compact(f, a);
  c.out << "RESULT pairs=" << pairs << " compact=" << compact << "\n";
  return kOk;
}

int cmd_locally_compact(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  Frame f = c.frame(0);
  auto lc = locally_compact(f);
  c.out << f.name() << ": " << (lc.locally_compact ? "locally compact" : "not locally compact") << "\n";
  if (lc.witness) c.out << "witness: " << f.label(*lc.witness) << " is not the join of what is way below it\n";
  c.out << "RESULT locally_compact=" << (lc.locally_compact ? "yes" : "no");
  if (lc.witness) c.out << " witness=" << f.label(*lc.witness);
  c.out << "\n";
  return lc.locally_compact ? kOk : kViolation;
}

int cmd_exp_sierpinski(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  Frame a = c.frame(0);
  check_generators(c.inv.caps, a.size(), "the exponent");
  auto e = sierpinski_exp(a, ideal_cap(c.inv.caps));
  auto iso = exp_iso_check(e);
  c.out << "S^" << a.name() << ": " << e.size() << " elements\n";
  c.out << emit_dot(e.frame());
  c.out << "upper-set oracle: " << (iso.ok ? "isomorphic" : "mismatch: " + iso.mismatch) << "\n";
  c.out << "RESULT elements=" << e.size() << " iso=" << (iso.ok ? "ok" : "fail") << "\n";
  return iso.ok ? kOk : kViolation;
}

int cmd_verify_exponential(const Context& c) {
  expect_inputs(c.inv, 1, 2);
  Frame a = c.frame(0);
  std::vector<Frame> zs;
  for (const auto& source : c.inv.tests) zs.push_back(require_frame(load_input(source, c.inv.caps)));
  if (zs.empty()) zs = {terminal(), sierpinski()};

  if (c.inv.inputs.size() == 1) {
    check_generators(c.inv.caps, a.size(), "the exponent");
    auto e = sierpinski_exp(a, ideal_cap(c.inv.caps));
    auto rep = verify_universal(e, zs);
    c.out << "S^" << a.name() << " against " << zs.size() << " test frame(s)\n";
    for (const auto& k : rep.cases)
      c.out << "  Z=" << k.z << ": |Z(x)A|=" << k.tensor_elements << " homs=" << k.hom_count
            << " bijection=" << (k.bijection ? "yes" : "no") << "\n";
    c.out << "naturality squares: " << rep.squares << "\n";
    if (!rep.ok) c.out << "failure: " << rep.failure << "\n";
    c.out << "RESULT verified=" << (rep.ok ? "yes" : "no") << " cases=" << rep.cases.size()
          << " squares=" << rep.squares << "\n";
    return rep.ok ? kOk : kViolation;
  }

  Frame b = c.frame(1);
  auto rep = verify_bexp_universal(a, b, zs, c.inv.threads);
  c.out << b.name() << "^" << a.name() << " against " << zs.size() << " test frame(s)\n";
  for (const auto& k : rep.cases)
    c.out << "  Z=" << k.z << ": assignments=" << k.assignments << " homs=" << k.homs
          << " bijection=" << (k.bijection ? "yes" : "no") << "\n";
  if (!rep.ok) c.out << "failure: " << rep.failure << "\n";
  c.out << "RESULT verified=" << (rep.ok ? "yes" : "no") << " cases=" << rep.cases.size() << "\n";
  return rep.ok ? kOk : kViolation;
}

int cmd_counterexample(const Context& c) {
  expect_inputs(c.inv, 0, 0);
  using namespace chains;
  auto u = StaircaseIdeal::diagonal();
  auto r = counterexample_report(u);
  auto tv = [](bool b) { return b ? "top" : "bottom"; };
  c.out << "u = area under the decaying curve in (descending chain) (x) (omega+1)\n";
  c.out << "point 0 of the descending chain, column s = inf\n";
  c.out << "  coeff_s after pushforward: " << tv(r.coeff_after_pushforward) << "\n";
  c.out << "  pushforward of coeff_s:    " << tv(r.pushforward_of_coeff) << "\n";
  c.out << "  agree: " << (r.equal() ? "yes" : "no") << "\n";
  std::size_t restored = 0;
  const std::uint64_t truncations = 32;
  for (std::uint64_t n = 0; n < truncations; ++n) restored += counterexample_report(StaircaseIdeal::truncated_diagonal(n)).equal();
  c.out << "finite truncations that agree: " << restored << "/" << truncations << "\n";
  c.out << sketch(u);
  c.out << "RESULT coeff_after_pushforward=" << tv(r.coeff_after_pushforward)
        << " pushforward_of_coeff=" << tv(r.pushforward_of_coeff) << " agree=" << (r.equal() ? "yes" : "no")
        << "\n";
  return kOk;
}

int cmd_dot(const Context& c) {
  expect_inputs(c.inv, 1, 1);
  c.out << emit_dot(c.frame(0));
  return kOk;
}

using Handler = int (*)(const Context&);

const std::vector<std::pair<std::string_view, Handler>>& table() {
  static const std::vector<std::pair<std::string_view, Handler>> t{
      {"validate", cmd_validate},
      {"points", cmd_points},
      {"tensor", cmd_tensor},
      {"waybelow", cmd_waybelow},
      {"locally-compact", cmd_locally_compact},
      {"exp-sierpinski", cmd_exp_sierpinski},
      {"verify-exponential", cmd_verify_exponential},
      {"counterexample", cmd_counterexample},
      {"dot", cmd_dot},
  };
  return t;
}

}  // namespace

const std::vector<std::string_view>& commands() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& [n, h] : table()) v.push_back(n);
    return v;
  }();
  return names;
}

bool known_command(std::string_view name) {
  return std::find(commands().begin(), commands().end(), name) != commands().end();
}

LoadedInput load_input(const std::string& source, const Caps& caps) {
  LoadedInput in;
  if (!source.empty() && source.front() == '@') {
    auto p = builtin_poset(source.substr(1));
    if (!p) throw UsageError("unknown built-in frame " + source);
    in.name = source.substr(1);
    in.poset = std::move(*p);
  } else {
    std::string text = read_file(source);
    if (first_keyword(text) == "gens") {
      Presentation p = parse_presentation_text(text);
      check_generators(caps, p.size(), source);
      auto pf = PresentedFrame::build(std::move(p), ideal_cap(caps), base_name(source));
      in.name = pf.frame().name();
      in.poset = pf.frame().poset();
      in.frame = pf.frame();
      return in;
    }
    NamedPoset np = parse_frame_text(text);
    in.name = np.name.empty() ? base_name(source) : np.name;
    in.poset = std::move(np.poset);
  }
  if (check_frame(in.poset).valid()) in.frame = Frame::from_poset(in.poset, in.name);
  return in;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  auto it = std::find_if(table().begin(), table().end(), [&](const auto& e) { return e.first == inv.command; });
  if (it == table().end()) {
    err << "error: unknown command '" << inv.command << "'\n";
    return kUsage;
  }
  std::ofstream file;
  std::ostringstream buffer;
  try {
    Context c{inv, buffer, err};
    int status = it->second(c);
    if (inv.output.empty()) {
      out << buffer.str();
    } else {
      file.open(inv.output, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << inv.output << "\n";
        return kUsage;
      }
      file << buffer.str();
    }
    return status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const StructureError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const FrameError& e) {
    out << buffer.str();
    err << "not a frame: " << e.what() << "\n";
    out << "RESULT valid=no\n";
    return kViolation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pointless::cli
