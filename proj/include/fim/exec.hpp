#ifndef FIM_EXEC_HPP
#define FIM_EXEC_HPP

namespace fim {

/// Execution policy for the data-parallel kernels.  Serial and parallel
/// variants of a kernel are required to produce bit-identical results;
/// the serial path is kept as the reference implementation for tests.
enum class Exec {
  serial,
  parallel,
};

}  // namespace fim

#endif  // FIM_EXEC_HPP
