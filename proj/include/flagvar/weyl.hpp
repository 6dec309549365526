#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flagvar/roots.hpp"

namespace flagvar {

/// A Weyl group element in canonical form: the integer matrix of its action
/// on root-lattice coordinates. Column j is w(alpha_j). Entries are root
/// coordinates, so they fit in a signed byte for every finite type.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);

  int rank() const { return rank_; }
  int at(int row, int col) const { return entries_[row * kMaxRank + col]; }
  void set(int row, int col, int value) { entries_[row * kMaxRank + col] = static_cast<std::int8_t>(value); }

  IntVector apply(std::span<const int> v) const;
  /// True when w(alpha_node) is a positive root.
  bool sends_simple_to_positive(int node) const;

  /// s_node * w (row operation).
  WeylElement left_multiply_simple(const RootSystem& rs, int node) const;
  /// w * s_node (column operation).
  WeylElement right_multiply_simple(const RootSystem& rs, int node) const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement& other) const = default;
  /// Lexicographic on the row-major matrix.
  std::strong_ordering operator<=>(const WeylElement& other) const;

  std::size_t hash() const;
  std::string matrix_string() const;

 private:
  std::int32_t rank_ = 0;
  std::array<std::int8_t, kMaxRank * kMaxRank> entries_{};
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Serial reference or OpenMP-parallel kernel. Both produce identical output.
enum class Execution { serial, parallel };

struct EnumerationPolicy {
  std::size_t cap = 10'000'000;
  /// E7 and E8 full-group enumeration is refused unless this is set.
  bool allow_large_types = false;
};

/// s_alpha for a simple node. Throws DomainError for a non-simple index.
WeylElement simple_reflection(const RootSystem& rs, int node);

/// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);

/// Reduced word, 0-based generator indices, built by peeling the smallest
/// right descent. w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
/// "s1 s3 s2" (1-based); the identity renders as "e".
std::string format_word(std::span<const int> word);

WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// Longest element of the parabolic subgroup generated by `subset`, found by
/// greedy ascent. subset = S gives w0; the empty set gives the identity.
WeylElement longest_element(const RootSystem& rs, const NodeSet& subset);

/// w is the minimal element of its left coset w W_I iff w(alpha) > 0 for
/// every alpha in I.
bool is_minimal_representative(const WeylElement& w, const NodeSet& levi);

/// Elements graded by length and sorted (length, matrix) within the list.
struct GradedElements {
  std::vector<WeylElement> elements;
  std::vector<int> lengths;
  bool operator==(const GradedElements&) const = default;
};

struct CosetTable {
  NodeSet levi;
  std::vector<WeylElement> representatives;  // sorted (length, matrix)
  std::vector<int> lengths;
  std::vector<std::size_t> grading;  // grading[k] = #representatives of length k
};

/// Order of W_I, from the classification of the components of I.
std::uint64_t parabolic_order(const RootSystem& rs, const NodeSet& subset);

/// W^P by graded breadth-first search from the identity, keeping only
/// minimal representatives at each level. Throws CapExceeded.
CosetTable minimal_coset_reps(const RootSystem& rs, const NodeSet& levi,
                              const EnumerationPolicy& policy = {},
                              Execution exec = Execution::parallel);

/// W^P by enumerating all of W and filtering. Cross-check path; subject to
/// the full-group gating.
CosetTable minimal_coset_reps_by_filter(const RootSystem& rs, const NodeSet& levi,
                                        const EnumerationPolicy& policy = {});

/// w -> w0 w w0^P. Throws DomainError when w is not in W^P.
WeylElement duality_involution(const RootSystem& rs, const WeylElement& w, const NodeSet& levi);

/// All of W by breadth-first closure over generator multiplication. Lengths
/// are BFS depths in the Cayley graph; no sign-flip counting involved.
GradedElements enumerate_group(const RootSystem& rs, const EnumerationPolicy& policy = {},
                               Execution exec = Execution::parallel);

struct GroupCount {
  std::size_t order = 0;
  /// poincare[k] = number of elements of length k.
  std::vector<std::size_t> poincare;
};

GroupCount enumerate_bruteforce(const RootSystem& rs, const EnumerationPolicy& policy = {},
                                Execution exec = Execution::parallel);

/// Throws CapExceeded when full-group enumeration of `rs` is not allowed.
void check_full_group_allowed(const RootSystem& rs, const EnumerationPolicy& policy);

}  // namespace flagvar
