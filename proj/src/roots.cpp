#include "flagvar/roots.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagvar/error.hpp"

namespace flagvar {

// ---------------------------------------------------------------------------
// Cartan types

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool is_valid_cartan_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

CartanType parse_cartan_type(std::string_view text) {
  if (text.empty()) throw ParseError("empty Cartan type", 0);
  const char head = text[0];
  if (head < 'A' || head > 'G') {
    throw ParseError("Cartan type must start with a letter A-G, got '" + std::string(text) + "'", 0);
  }
  if (text.size() == 1) throw ParseError("missing rank in Cartan type '" + std::string(text) + "'", 1);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("non-digit in rank of Cartan type '" + std::string(text) + "'", i);
    }
    if (i > 4) throw ParseError("rank too long in Cartan type '" + std::string(text) + "'", i);
    rank = rank * 10 + (text[i] - '0');
  }
  const auto family = static_cast<Family>(head);
  if (!is_valid_cartan_type(family, rank)) {
    throw DomainError("invalid Cartan type/rank pair (" + std::string(1, head) + ", " +
                      std::to_string(rank) + ")");
  }
  if (rank > kMaxRank) {
    throw DomainError("Cartan type " + std::string(text) + " exceeds the supported rank " +
                      std::to_string(kMaxRank));
  }
  return CartanType{family, rank};
}

IntMatrix cartan_matrix(CartanType type) {
  if (!is_valid_cartan_type(type.family, type.rank)) {
    throw DomainError("invalid Cartan type/rank pair (" + std::string(1, static_cast<char>(type.family)) +
                      ", " + std::to_string(type.rank) + ")");
  }
  const int n = type.rank;
  IntMatrix m(n, IntVector(n, 0));
  auto link = [&m](int i, int j) {
    m[i][j] = -1;
    m[j][i] = -1;
  };
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      m[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      m[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      m[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      link(0, 1);
      m[0][1] = -3;  // alpha_1 short
      break;
  }
  return m;
}

std::uint64_t weyl_group_order(CartanType type) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Node sets

NodeSet NodeSet::from_nodes(std::span<const int> nodes) {
  NodeSet s;
  for (int v : nodes) s.insert(v);
  return s;
}

NodeSet NodeSet::all(int rank) {
  NodeSet s;
  s.bits_ = rank >= 32 ? ~0u : ((1u << rank) - 1u);
  return s;
}

int NodeSet::size() const { return std::popcount(bits_); }

NodeSet NodeSet::complement(int rank) const {
  NodeSet s;
  s.bits_ = all(rank).bits_ & ~bits_;
  return s;
}

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

NodeSet parse_node_list(std::string_view text, int rank) {
  NodeSet result;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_spaces();
  if (pos == text.size()) return result;
  while (true) {
    skip_spaces();
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (pos - start >= 3) throw ParseError("node index too long in '" + std::string(text) + "'", pos);
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected a node index in '" + std::string(text) + "'", pos);
    if (value < 1 || value > rank) {
      throw ParseError("node " + std::to_string(value) + " outside 1.." + std::to_string(rank), start);
    }
    if (result.contains(value - 1)) {
      throw ParseError("node " + std::to_string(value) + " listed twice", start);
    }
    result.insert(value - 1);
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in node list '" + std::string(text) + "'", pos);
    ++pos;
  }
  return result;
}

std::string format_node_list(const NodeSet& nodes) {
  std::string out;
  for (int v : nodes.nodes()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagram classification

int DynkinComponent::local_index(int original_node) const {
  auto it = std::find(relabel.begin(), relabel.end(), original_node);
  if (it == relabel.end()) {
    throw DomainError("node " + std::to_string(original_node + 1) + " is not in this component");
  }
  return static_cast<int>(it - relabel.begin());
}

namespace {

bool is_connected(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && m[v][u] != 0) {
        seen[u] = true;
        ++count;
        queue.push_back(u);
      }
    }
  }
  return count == n;
}

// First relabelling (lexicographic in the assigned original nodes) with
// m[p[a]][p[b]] == target[a][b] for all a, b.
bool match_relabelling(const IntMatrix& m, const IntMatrix& target, std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> used(n, false);
  perm.assign(n, -1);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = m[v][v] == target[k][k];
      for (int prev = 0; ok && prev < k; ++prev) {
        ok = m[v][perm[prev]] == target[k][prev] && m[perm[prev]][v] == target[prev][k];
      }
      if (!ok) continue;
      used[v] = true;
      perm[k] = v;
      if (place(k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace

DynkinComponent classify_connected(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0 || !is_connected(cartan)) {
    throw DomainError("Cartan matrix is empty or its diagram is disconnected");
  }
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    if (!is_valid_cartan_type(f, n)) continue;
    const CartanType candidate{f, n};
    std::vector<int> perm;
    if (match_relabelling(cartan, cartan_matrix(candidate), perm)) {
      DynkinComponent c;
      c.nodes.resize(n);
      std::iota(c.nodes.begin(), c.nodes.end(), 0);
      c.type = candidate;
      c.relabel = std::move(perm);
      return c;
    }
  }
  throw DomainError("Cartan matrix of size " + std::to_string(n) + " is not of finite type");
}

// ---------------------------------------------------------------------------
// Root system

namespace {

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[col], a[pivot]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

// (alpha_i, alpha_i) propagated along the diagram, scaled so the shortest is 2.
std::vector<int> simple_norms(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Rational> norm(n, 0);
  norm[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || m[i][j] == 0 || norm[j] != 0) continue;
      norm[j] = norm[i] * m[i][j] / m[j][i];
      queue.push_back(j);
    }
  }
  const Rational smallest = *std::min_element(norm.begin(), norm.end());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    Rational scaled = 2 * norm[i] / smallest;
    if (scaled.get_den() != 1) throw std::logic_error("non-integral root norm");
    out[i] = static_cast<int>(scaled.get_num().get_si());
  }
  return out;
}

bool root_order(const IntVector& a, const IntVector& b) {
  const int ha = RootSystem::height(a);
  const int hb = RootSystem::height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type), cartan_(cartan_matrix(type)) {
  if (type.rank > kMaxRank) {
    throw DomainError("Cartan type " + type.label() + " exceeds the supported rank " +
                      std::to_string(kMaxRank));
  }
  const int n = type.rank;
  norms_ = simple_norms(cartan_);
  inverse_cartan_ = invert(cartan_);

  // Positive roots: closure of the simple roots under the simple
  // reflections. s_i permutes R+ \ {alpha_i}, so the walk never leaves R+.
  std::set<IntVector> found;
  std::vector<IntVector> work;
  for (int i = 0; i < n; ++i) {
    found.insert(simple_root(i));
    work.push_back(simple_root(i));
  }
  while (!work.empty()) {
    IntVector beta = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += cartan_[i][j] * beta[j];
      if (p == 0) continue;
      IntVector image = beta;
      image[i] -= p;
      if (!is_positive(image)) continue;  // beta == alpha_i
      if (found.insert(image).second) work.push_back(std::move(image));
    }
  }
  positive_.assign(found.begin(), found.end());
  std::sort(positive_.begin(), positive_.end(), root_order);

  for (const auto& beta : positive_) {
    IntVector neg(beta);
    for (int& x : neg) x = -x;
    all_.push_back(std::move(neg));
  }
  all_.insert(all_.end(), positive_.begin(), positive_.end());
  std::sort(all_.begin(), all_.end(), root_order);
  for (int k = 0; k < static_cast<int>(all_.size()); ++k) root_index_.emplace(all_[k], k);
}

IntVector RootSystem::simple_root(int node) const {
  if (node < 0 || node >= rank()) {
    throw DomainError("simple root index " + std::to_string(node + 1) + " outside 1.." +
                      std::to_string(rank()));
  }
  IntVector v(rank(), 0);
  v[node] = 1;
  return v;
}

bool RootSystem::is_root(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != rank()) return false;
  return root_index_.count(IntVector(v.begin(), v.end())) != 0;
}

bool RootSystem::is_positive(std::span<const int> v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

int RootSystem::height(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

int RootSystem::count_positive_roots_in(const NodeSet& subset) const {
  int count = 0;
  for (const auto& beta : positive_) {
    bool inside = true;
    for (int j = 0; j < rank() && inside; ++j) inside = beta[j] == 0 || subset.contains(j);
    count += inside ? 1 : 0;
  }
  return count;
}

IntVector RootSystem::sum_positive_roots_outside(const NodeSet& subset) const {
  IntVector sum(rank(), 0);
  for (const auto& beta : positive_) {
    bool inside = true;
    for (int j = 0; j < rank() && inside; ++j) inside = beta[j] == 0 || subset.contains(j);
    if (inside) continue;
    for (int j = 0; j < rank(); ++j) sum[j] += beta[j];
  }
  return sum;
}

std::vector<int> RootSystem::dynkin_neighbours(int node) const {
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j) {
    if (adjacent(node, j)) out.push_back(j);
  }
  return out;
}

Rational RootSystem::norm(std::span<const int> v) const {
  // (alpha_i, alpha_j) = C[i][j] * |alpha_i|^2 / 2
  Rational total = 0;
  for (int i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (v[j] == 0) continue;
      total += Rational(v[i] * v[j] * cartan_[i][j] * norms_[i]) / 2;
    }
  }
  return total;
}

Coroot RootSystem::coroot(std::span<const int> beta) const {
  if (!is_root(beta)) throw DomainError("vector is not a root of " + type_.label());
  const Rational beta_norm = norm(beta);
  Coroot c{type_, IntVector(rank(), 0)};
  for (int j = 0; j < rank(); ++j) {
    Rational k = Rational(beta[j] * norms_[j]) / beta_norm;
    if (k.get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
    c.coords[j] = static_cast<int>(k.get_num().get_si());
  }
  return c;
}

Coroot RootSystem::simple_coroot(int node) const { return coroot(simple_root(node)); }

Weight RootSystem::fundamental_weight(int node) const {
  if (node < 0 || node >= rank()) {
    throw DomainError("fundamental weight index " + std::to_string(node + 1) + " outside 1.." +
                      std::to_string(rank()));
  }
  Weight w{type_, IntVector(rank(), 0)};
  w.coords[node] = 1;
  return w;
}

Weight RootSystem::rho() const { return Weight{type_, IntVector(rank(), 1)}; }

Weight RootSystem::weight_of(std::span<const int> root_coords) const {
  Weight w{type_, IntVector(rank(), 0)};
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) w.coords[i] += cartan_[i][j] * root_coords[j];
  }
  return w;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  if (w.type != type_) throw DomainError("weight of " + w.type.label() + " used with " + type_.label());
  std::vector<Rational> r(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) r[i] += inverse_cartan_[i][j] * w.coords[j];
  }
  return r;
}

Weight RootSystem::weight_from_root_coordinates(std::span<const Rational> coords) const {
  Weight w{type_, IntVector(rank(), 0)};
  for (int i = 0; i < rank(); ++i) {
    Rational m = 0;
    for (int j = 0; j < rank(); ++j) m += cartan_[i][j] * coords[j];
    if (m.get_den() != 1) throw DomainError("root coordinates do not describe an integral weight");
    w.coords[i] = static_cast<int>(m.get_num().get_si());
  }
  return w;
}

IntMatrix RootSystem::cartan_submatrix(std::span<const int> nodes) const {
  const std::size_t k = nodes.size();
  IntMatrix sub(k, IntVector(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) sub[a][b] = cartan_[nodes[a]][nodes[b]];
  }
  return sub;
}

DynkinComponent RootSystem::dynkin_component(const NodeSet& subset, int node) const {
  if (node < 0 || node >= rank() || !subset.contains(node)) {
    throw DomainError("node " + std::to_string(node + 1) + " is not in the subset {" +
                      format_node_list(subset) + "}");
  }
  std::set<int> seen{node};
  std::deque<int> queue{node};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : dynkin_neighbours(v)) {
      if (subset.contains(u) && seen.insert(u).second) queue.push_back(u);
    }
  }
  std::vector<int> nodes(seen.begin(), seen.end());
  DynkinComponent c = classify_connected(cartan_submatrix(nodes));
  for (int& r : c.relabel) r = nodes[r];
  c.nodes = std::move(nodes);
  return c;
}

// ---------------------------------------------------------------------------
// Pairings

int pairing(const Weight& lambda, const Coroot& beta) {
  if (lambda.type != beta.type) {
    throw DomainError("pairing a weight of " + lambda.type.label() + " with a coroot of " +
                      beta.type.label());
  }
  int total = 0;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) total += lambda.coords[i] * beta.coords[i];
  return total;
}

Rational pairing_via_root_coordinates(const RootSystem& rs, const Weight& lambda, const Coroot& beta) {
  if (lambda.type != rs.type() || beta.type != rs.type()) {
    throw DomainError("pairing across different root systems");
  }
  const std::vector<Rational> r = rs.root_coordinates(lambda);
  Rational total = 0;
  for (int k = 0; k < rs.rank(); ++k) {
    if (beta.coords[k] == 0) continue;
    // <lambda, alpha_k^vee> = sum_j C[k][j] r_j
    Rational on_simple = 0;
    for (int j = 0; j < rs.rank(); ++j) on_simple += rs.cartan_entry(k, j) * r[j];
    total += beta.coords[k] * on_simple;
  }
  return total;
}

}  // namespace flagvar
