#include "flagvar/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "flagvar/error.hpp"
#include "flagvar/kernels.hpp"

namespace flagvar {

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(int rank) {
  if (rank < 1 || rank > kMaxRank) throw DomainError("Weyl element rank out of range");
  WeylElement w;
  w.rank_ = rank;
  for (int i = 0; i < rank; ++i) w.set(i, i, 1);
  return w;
}

IntVector WeylElement::apply(std::span<const int> v) const {
  IntVector out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

bool WeylElement::sends_simple_to_positive(int node) const {
  for (int i = 0; i < rank_; ++i) {
    if (at(i, node) != 0) return at(i, node) > 0;
  }
  return false;
}

WeylElement WeylElement::left_multiply_simple(const RootSystem& rs, int node) const {
  WeylElement out = *this;
  for (int col = 0; col < rank_; ++col) {
    int value = 0;
    for (int k = 0; k < rank_; ++k) value -= rs.cartan_entry(node, k) * at(k, col);
    out.set(node, col, at(node, col) + value);
  }
  return out;
}

WeylElement WeylElement::right_multiply_simple(const RootSystem& rs, int node) const {
  WeylElement out = *this;
  for (int col = 0; col < rank_; ++col) {
    const int a = rs.cartan_entry(node, col);
    if (a == 0) continue;
    for (int row = 0; row < rank_; ++row) out.set(row, col, at(row, col) - a * at(row, node));
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank_ != b.rank_) throw DomainError("multiplying Weyl elements of different rank");
  WeylElement out;
  out.rank_ = a.rank_;
  for (int i = 0; i < a.rank_; ++i) {
    for (int j = 0; j < a.rank_; ++j) {
      int s = 0;
      for (int k = 0; k < a.rank_; ++k) s += a.at(i, k) * b.at(k, j);
      out.set(i, j, s);
    }
  }
  return out;
}

std::strong_ordering WeylElement::operator<=>(const WeylElement& other) const {
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (auto c = at(i, j) <=> other.at(i, j); c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t WeylElement::hash() const {
  // FNV-1a over the used entries
  std::size_t h = 1469598103934665603ULL;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      h ^= static_cast<std::uint8_t>(at(i, j));
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string WeylElement::matrix_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rank_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < rank_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Basic operations

WeylElement simple_reflection(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.rank()) {
    throw DomainError("s" + std::to_string(node + 1) + " is not a simple reflection of " + rs.type().label());
  }
  return WeylElement::identity(rs.rank()).left_multiply_simple(rs, node);
}

int length(const RootSystem& rs, const WeylElement& w) {
  // height(w(beta)) = sum_j beta_j * height(w(alpha_j)); a root is negative
  // exactly when its height is.
  const int n = rs.rank();
  std::array<int, kMaxRank> column_height{};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) column_height[j] += w.at(i, j);
  }
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    int h = 0;
    for (int j = 0; j < n; ++j) h += beta[j] * column_height[j];
    count += h < 0 ? 1 : 0;
  }
  return count;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word;
  WeylElement current = w;
  while (true) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!current.sends_simple_to_positive(i)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    word.push_back(descent);
    current = current.right_multiply_simple(rs, descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int node : word) {
    if (node < 0 || node >= rs.rank()) {
      throw DomainError("generator s" + std::to_string(node + 1) + " outside the rank of " + rs.type().label());
    }
    w = w.right_multiply_simple(rs, node);
  }
  return w;
}

std::string format_word(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string out;
  for (int node : word) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(node + 1);
  }
  return out;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word = reduced_word(rs, w);
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

WeylElement longest_element(const RootSystem& rs, const NodeSet& subset) {
  WeylElement w = WeylElement::identity(rs.rank());
  const std::vector<int> nodes = subset.nodes();
  for (int node : nodes) {
    if (node >= rs.rank()) throw DomainError("node outside the rank of " + rs.type().label());
  }
  bool ascended = true;
  while (ascended) {
    ascended = false;
    for (int node : nodes) {
      if (w.sends_simple_to_positive(node)) {
        w = w.right_multiply_simple(rs, node);
        ascended = true;
        break;
      }
    }
  }
  return w;
}

bool is_minimal_representative(const WeylElement& w, const NodeSet& levi) {
  for (int node = 0; node < w.rank(); ++node) {
    if (levi.contains(node) && !w.sends_simple_to_positive(node)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t parabolic_order(const RootSystem& rs, const NodeSet& subset) {
  std::uint64_t order = 1;
  NodeSet remaining = subset;
  while (!remaining.empty()) {
    const int node = remaining.nodes().front();
    const DynkinComponent c = rs.dynkin_component(subset, node);
    order *= weyl_group_order(c.type);
    for (int v : c.nodes) remaining.erase(v);
  }
  return order;
}

void check_full_group_allowed(const RootSystem& rs, const EnumerationPolicy& policy) {
  const CartanType t = rs.type();
  if (t.family == Family::E && t.rank >= 7 && !policy.allow_large_types) {
    throw CapExceeded("full enumeration of W(" + t.label() + ") is refused without the large-type override",
                      policy.cap);
  }
  const std::uint64_t order = weyl_group_order(t);
  if (order > policy.cap) {
    throw CapExceeded("|W(" + t.label() + ")| = " + std::to_string(order) + " exceeds the enumeration bound",
                      policy.cap);
  }
}

namespace {

CosetTable make_table(const NodeSet& levi, GradedElements graded) {
  CosetTable table;
  table.levi = levi;
  table.representatives = std::move(graded.elements);
  table.lengths = std::move(graded.lengths);
  const int top = table.lengths.empty() ? 0 : table.lengths.back();
  table.grading.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int l : table.lengths) ++table.grading[static_cast<std::size_t>(l)];
  return table;
}

}  // namespace

CosetTable minimal_coset_reps(const RootSystem& rs, const NodeSet& levi, const EnumerationPolicy& policy,
                              Execution exec) {
  if (levi.empty()) check_full_group_allowed(rs, policy);
  const std::uint64_t predicted = weyl_group_order(rs.type()) / parabolic_order(rs, levi);
  if (predicted > policy.cap) {
    throw CapExceeded("|W^P| = " + std::to_string(predicted) + " exceeds the enumeration bound", policy.cap);
  }
  return make_table(levi, kernels::graded_bfs(rs, levi, policy.cap, exec));
}

CosetTable minimal_coset_reps_by_filter(const RootSystem& rs, const NodeSet& levi, const EnumerationPolicy& policy) {
  GradedElements all = enumerate_group(rs, policy);
  GradedElements kept;
  for (const auto& w : all.elements) {
    if (is_minimal_representative(w, levi)) kept.elements.push_back(w);
  }
  kept.lengths = kernels::lengths(rs, kept.elements, Execution::parallel);
  std::vector<std::size_t> order(kept.elements.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (kept.lengths[a] != kept.lengths[b]) return kept.lengths[a] < kept.lengths[b];
    return kept.elements[a] < kept.elements[b];
  });
  GradedElements sorted;
  for (std::size_t k : order) {
    sorted.elements.push_back(kept.elements[k]);
    sorted.lengths.push_back(kept.lengths[k]);
  }
  return make_table(levi, std::move(sorted));
}

WeylElement duality_involution(const RootSystem& rs, const WeylElement& w, const NodeSet& levi) {
  if (!is_minimal_representative(w, levi)) {
    throw DomainError("element " + format_word(reduced_word(rs, w)) + " is not a minimal coset representative");
  }
  return longest_element(rs, NodeSet::all(rs.rank())) * w * longest_element(rs, levi);
}

GradedElements enumerate_group(const RootSystem& rs, const EnumerationPolicy& policy, Execution exec) {
  check_full_group_allowed(rs, policy);
  return kernels::graded_bfs(rs, NodeSet{}, policy.cap, exec);
}

GroupCount enumerate_bruteforce(const RootSystem& rs, const EnumerationPolicy& policy, Execution exec) {
  const GradedElements all = enumerate_group(rs, policy, exec);
  GroupCount count;
  count.order = all.elements.size();
  for (int l : all.lengths) {
    if (static_cast<std::size_t>(l) >= count.poincare.size()) count.poincare.resize(static_cast<std::size_t>(l) + 1, 0);
    ++count.poincare[static_cast<std::size_t>(l)];
  }
  return count;
}

}  // namespace flagvar
