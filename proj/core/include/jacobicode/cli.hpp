// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace jacobicode {

/// Command-line front end. Returns 0 on success, 1 on input or usage errors
/// and 2 on internal tripwires or failed self tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jacobicode
