#ifndef TRIDIST_EXEC_HPP
#define TRIDIST_EXEC_HPP

namespace tridist {

// Batch kernels come in two variants: a serial reference implementation and
// an OpenMP one. Both produce identical results; tests compare them and the
// bench tool measures the gap.
enum class Exec { serial, parallel };

int hardware_threads();

}  // namespace tridist

#endif
