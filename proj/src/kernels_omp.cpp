#include <omp.h>

#include <algorithm>

#include "flagvar/error.hpp"
#include "flagvar/kernels.hpp"

namespace flagvar::kernels {

// Level-synchronous BFS. Every level is kept sorted, so membership in the
// previous level is a binary search and the merged output is independent
// of the thread schedule. Neighbours of a level-k element lie in levels
// k - 1 and k + 1 only.
GradedElements graded_bfs_parallel(const RootSystem& rs, const NodeSet& keep_positive, std::size_t cap) {
  const int rank = rs.rank();
  std::vector<WeylElement> previous;
  std::vector<WeylElement> current{WeylElement::identity(rank)};
  GradedElements out;
  int depth = 0;

  while (!current.empty()) {
    for (const auto& w : current) {
      out.elements.push_back(w);
      out.lengths.push_back(depth);
    }
    if (out.elements.size() > cap) throw CapExceeded("breadth-first enumeration exceeded its bound", cap);

    const auto level_size = static_cast<std::ptrdiff_t>(current.size());
    std::vector<std::vector<WeylElement>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
      auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::ptrdiff_t k = 0; k < level_size; ++k) {
        for (int i = 0; i < rank; ++i) {
          WeylElement next = current[static_cast<std::size_t>(k)].left_multiply_simple(rs, i);
          if (!is_minimal_representative(next, keep_positive)) continue;
          if (std::binary_search(previous.begin(), previous.end(), next)) continue;
          local.push_back(std::move(next));
        }
      }
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
    }

    std::vector<WeylElement> next_level;
    for (auto& local : per_thread) {
      const auto mid = static_cast<std::ptrdiff_t>(next_level.size());
      next_level.insert(next_level.end(), local.begin(), local.end());
      std::inplace_merge(next_level.begin(), next_level.begin() + mid, next_level.end());
    }
    next_level.erase(std::unique(next_level.begin(), next_level.end()), next_level.end());

    previous = std::move(current);
    current = std::move(next_level);
    ++depth;
  }
  return out;
}

std::vector<int> lengths_parallel(const RootSystem& rs, std::span<const WeylElement> elements) {
  std::vector<int> out(elements.size());
  const auto n = static_cast<std::ptrdiff_t>(elements.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = length(rs, elements[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace flagvar::kernels
