#pragma once

// Data-parallel kernels behind the Weyl engine. Each kernel has a serial
// reference implementation and an OpenMP one; the two must agree exactly,
// including output order.

#include <cstddef>
#include <span>
#include <vector>

#include "flagvar/roots.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar::kernels {

/// Graded BFS from the identity by left multiplication with simple
/// reflections, restricted to elements with w(alpha) > 0 for alpha in
/// `keep_positive` (empty set: the whole group). Output sorted by
/// (depth, matrix). Throws CapExceeded once more than `cap` elements are
/// found.
GradedElements graded_bfs_serial(const RootSystem& rs, const NodeSet& keep_positive, std::size_t cap);
GradedElements graded_bfs_parallel(const RootSystem& rs, const NodeSet& keep_positive, std::size_t cap);

/// Sign-flip lengths of a batch of elements.
std::vector<int> lengths_serial(const RootSystem& rs, std::span<const WeylElement> elements);
std::vector<int> lengths_parallel(const RootSystem& rs, std::span<const WeylElement> elements);

inline GradedElements graded_bfs(const RootSystem& rs, const NodeSet& keep_positive, std::size_t cap,
                                 Execution exec) {
  return exec == Execution::serial ? graded_bfs_serial(rs, keep_positive, cap)
                                   : graded_bfs_parallel(rs, keep_positive, cap);
}

inline std::vector<int> lengths(const RootSystem& rs, std::span<const WeylElement> elements,
                                 Execution exec) {
  return exec == Execution::serial ? lengths_serial(rs, elements) : lengths_parallel(rs, elements);
}

}  // namespace flagvar::kernels
