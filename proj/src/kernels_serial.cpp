#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "flagvar/error.hpp"
#include "flagvar/kernels.hpp"

namespace flagvar::kernels {

GradedElements graded_bfs_serial(const RootSystem& rs, const NodeSet& keep_positive, std::size_t cap) {
  std::unordered_map<WeylElement, int, WeylElementHash> depth;
  std::deque<WeylElement> queue;
  const WeylElement e = WeylElement::identity(rs.rank());
  depth.emplace(e, 0);
  queue.push_back(e);
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    const int d = depth.at(w);
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = w.left_multiply_simple(rs, i);
      if (!is_minimal_representative(next, keep_positive)) continue;
      if (!depth.emplace(next, d + 1).second) continue;
      if (depth.size() > cap) throw CapExceeded("breadth-first enumeration exceeded its bound", cap);
      queue.push_back(std::move(next));
    }
  }

  std::vector<std::pair<int, WeylElement>> found;
  found.reserve(depth.size());
  for (auto& [w, d] : depth) found.emplace_back(d, w);
  std::sort(found.begin(), found.end());
  GradedElements out;
  out.elements.reserve(found.size());
  out.lengths.reserve(found.size());
  for (auto& [d, w] : found) {
    out.lengths.push_back(d);
    out.elements.push_back(w);
  }
  return out;
}

std::vector<int> lengths_serial(const RootSystem& rs, std::span<const WeylElement> elements) {
  std::vector<int> out(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) out[k] = length(rs, elements[k]);
  return out;
}

}  // namespace flagvar::kernels
