#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pointless/frame.hpp"

namespace pointless::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

struct Caps {
  std::size_t generators = 16;
  std::size_t ideals = 4096;
  /// Lifts both limits; the user asked for it explicitly.
  bool unsafe = false;
};

/// One subcommand with its inputs. Inputs are file paths or built-ins
/// written `@name` (@terminal, @sierpinski, @diamond, @chainN, @m3, @n5).
struct Invocation {
  std::string command;
  std::vector<std::string> inputs;
  /// Test frames Z for verify-exponential.
  std::vector<std::string> tests;
  Caps caps;
  unsigned threads = 1;
  /// Empty for standard output.
  std::string output;
};

const std::vector<std::string_view>& commands();
bool known_command(std::string_view name);

/// Executes inv, writing the report to out (or inv.output) and diagnostics
/// to err. Returns kOk, kViolation or kUsage.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Frame text or presentation text, told apart by the first keyword.
struct LoadedInput {
  std::string name;
  Poset poset;
  /// Set when the input is a frame (always, for presentations).
  std::optional<Frame> frame;
};

/// Throws ParseError, StructureError or ResourceError.
LoadedInput load_input(const std::string& source, const Caps& caps);

}  // namespace pointless::cli
