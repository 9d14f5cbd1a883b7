#pragma once

namespace tb {

// Kernels that have an OpenMP version keep their serial loop as the
// reference; tests compare the two and bench_kernels times them.
enum class Execution { serial, parallel };

}  // namespace tb
