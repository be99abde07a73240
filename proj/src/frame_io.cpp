#include "pointless/frame_io.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

namespace pointless {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

NamedPoset parse_frame_text(std::istream& in) {
  NamedPoset result;
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;
  std::vector<std::pair<Elem, Elem>> covers;
  std::vector<std::size_t> cover_lines;
  bool have_header = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "frame") {
      if (have_header) throw ParseError(lineno, "second 'frame' header");
      if (t.size() != 2) throw ParseError(lineno, "expected 'frame <name>'");
      result.name = t[1];
      have_header = true;
    } else if (!have_header) {
      throw ParseError(lineno, "expected 'frame <name>' header before '" + t[0] + "'");
    } else if (t[0] == "elem") {
      if (t.size() != 2) throw ParseError(lineno, "expected 'elem <id>'");
      if (!index.emplace(t[1], names.size()).second)
        throw ParseError(lineno, "duplicate element '" + t[1] + "'");
      names.push_back(t[1]);
    } else if (t[0] == "cover") {
      if (t.size() != 3) throw ParseError(lineno, "expected 'cover <lower> <upper>'");
      auto lo = index.find(t[1]);
      auto hi = index.find(t[2]);
      if (lo == index.end()) throw ParseError(lineno, "unknown element '" + t[1] + "'");
      if (hi == index.end()) throw ParseError(lineno, "unknown element '" + t[2] + "'");
      if (lo->second == hi->second) throw ParseError(lineno, "element covers itself: '" + t[1] + "'");
      covers.emplace_back(lo->second, hi->second);
      cover_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + t[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'frame <name>' header");
  if (names.empty()) throw ParseError(lineno, "frame declares no elements");

  try {
    result.poset = Poset::from_covers(names, covers);
  } catch (const StructureError&) {
    // Find the first cover line that closes a cycle.
    for (std::size_t k = 1; k <= covers.size(); ++k) {
      std::vector<std::pair<Elem, Elem>> prefix(covers.begin(), covers.begin() + static_cast<long>(k));
      try {
        Poset::from_covers(names, prefix);
      } catch (const StructureError& e) {
        throw ParseError(cover_lines[k - 1], e.what());
      }
    }
    throw;
  }
  return result;
}

NamedPoset parse_frame_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_frame_text(in);
}

std::string to_frame_text(const Frame& f) {
  std::ostringstream out;
  out << "frame " << (f.name().empty() ? "unnamed" : f.name()) << "\n";
  for (Elem e = 0; e < f.size(); ++e) out << "elem " << f.label(e) << "\n";
  for (auto [a, b] : f.poset().covers()) out << "cover " << f.label(a) << " " << f.label(b) << "\n";
  return out.str();
}

std::string emit_dot(const Frame& f) {
  std::ostringstream out;
  out << "digraph " << quote(f.name().empty() ? "frame" : f.name()) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (Elem e = 0; e < f.size(); ++e) out << "  n" << e << " [label=" << quote(f.label(e)) << "];\n";
  for (auto [a, b] : f.poset().covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pointless
