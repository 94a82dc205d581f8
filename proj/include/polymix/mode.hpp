#pragma once

namespace polymix {

/// Kernel selection: the OpenMP path is the default, the serial path is the
/// reference implementation kept for testing and benchmarking.
enum class Exec { serial, parallel };

}  // namespace polymix
