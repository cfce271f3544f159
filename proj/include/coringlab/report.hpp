#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/instance.hpp"

namespace coringlab {

struct RunOptions {
  std::optional<DegreeWindow> window;
  std::optional<std::uint64_t> cap;
  bool timing = true;
  // JSON texts. A coring element is a list of [key, coordinates] pairs with
  // keys given as in instance files, e.g. [["e", [1, 0]], ["s", [0, 1]]], or
  // {"d": coordinates} for the coboundary of a unit. A witness is a
  // coordinate list.
  std::optional<std::string> element;
  std::optional<std::string> other;
  std::optional<std::string> witness;
};

struct Report {
  std::string json;  // deterministic apart from the "timing" member
  std::string text;
  int exit_code = 0;  // 0 computed, 1 property violation
};

const std::vector<std::string>& command_names();

// Throws ValidationError for bad options or an unknown command and
// VariantError when the command does not apply to the instance; callers map
// both to exit code 2.
Report run_command(const Instance& inst, const std::string& command, const RunOptions& opts = {});

// "-2..2" -> {-2, 2}; throws ValidationError.
DegreeWindow parse_window(const std::string& text);

}  // namespace coringlab
