// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_DIAGNOSTICS_HPP
#define PLINT_DIAGNOSTICS_HPP

#include <string>
#include <tuple>
#include <vector>

namespace plint {

/// Non-fatal diagnostic. `file` is empty and `line` 0 for project-level
/// warnings.
struct Warning {
  std::string file;
  int line = 0;
  std::string message;

  auto operator<=>(const Warning&) const = default;
};

using Warnings = std::vector<Warning>;

}  // namespace plint

#endif  // PLINT_DIAGNOSTICS_HPP
