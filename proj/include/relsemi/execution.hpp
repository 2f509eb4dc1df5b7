// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace relsemi {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path is kept for testing and benchmarking.
enum class Execution { serial, parallel };

/// Caps the number of OpenMP threads (0 leaves the runtime default).
void set_max_threads(int n);

}  // namespace relsemi
