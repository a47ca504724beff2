// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace dyadic::cli {

/// Exit codes of the `dyadic` tool.
enum ExitCode : int {
  kPass = 0,
  kThresholdFail = 1,
  kConfigError = 2,
  kBudgetExceeded = 3,
};

/// Entry point: `dyadic <weights|oracle|sweep|extrapolate> [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyadic::cli
