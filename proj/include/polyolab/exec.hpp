#pragma once

namespace polyolab {

// Kernels with an OpenMP implementation also keep a serial one for testing.
enum class Exec { serial, parallel };

}  // namespace polyolab
