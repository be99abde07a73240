#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "pointless/frame.hpp"

namespace pointless {

/// Input text that does not follow the line format; carries the line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct NamedPoset {
  std::string name;
  Poset poset;
};

/// Reads the frame description format:
///
///     frame <name>
///     elem <id>
///     cover <lower> <upper>
///
/// Blank lines and `#` comments are ignored. The order is the
/// reflexive-transitive closure of the covers. Whether the result is a frame
/// is left to check_frame; a cyclic order is reported as a ParseError naming
/// the cover line that closes the cycle.
NamedPoset parse_frame_text(std::istream& in);
NamedPoset parse_frame_text(std::string_view text);

/// Writes f in the format read by parse_frame_text (covers only).
std::string to_frame_text(const Frame& f);

/// Hasse diagram in DOT: one node per element in index order, one edge per
/// covering pair, drawn bottom to top.
std::string emit_dot(const Frame& f);

}  // namespace pointless
