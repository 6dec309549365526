#pragma once

// Reference computations kept deliberately naive and independent of the
// engine: plain vectors, std::set/std::map deduplication, full matrix
// products, breadth-first search over words. They consume only a Cartan
// matrix (entry [i][j] = <alpha_j, alpha_i^vee>).

#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace flagvar::oracle {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

/// All roots: the orbit of the simple roots under the simple reflections.
std::set<Vec> root_orbit(const Mat& cartan);

/// Matrix of s_i on root coordinates.
Mat reflection_matrix(const Mat& cartan, int i);
Mat multiply(const Mat& a, const Mat& b);

/// Every Weyl group element with its word length (BFS distance from the
/// identity in the Cayley graph). Returns an empty map if more than `cap`
/// elements turn up.
std::map<Mat, int> weyl_bfs(const Mat& cartan, std::size_t cap);

/// Coefficient list of sum_w q^{l(w)} from a BFS table.
std::vector<std::size_t> poincare_polynomial(const std::map<Mat, int>& table);

/// Column j of `w` is a positive vector for every j with in_levi[j].
bool columns_positive(const Mat& w, const std::vector<bool>& in_levi);

}  // namespace flagvar::oracle
