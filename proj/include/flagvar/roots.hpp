#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagvar/rational.hpp"

namespace flagvar {

/// Largest rank handled by the library. Weyl group elements are stored as
/// fixed-size rank x rank matrices, so this bounds every type (E8 fits).
inline constexpr int kMaxRank = 8;

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  bool operator==(const CartanType&) const = default;
  auto operator<=>(const CartanType&) const = default;
};

/// True for A(n>=1), B(n>=2), C(n>=3), D(n>=4), E6-E8, F4, G2.
bool is_valid_cartan_type(Family family, int rank);

/// Parses `[A-G][0-9]+`. Throws ParseError (bad syntax) or DomainError
/// (well-formed but not a valid finite type, or rank above kMaxRank).
CartanType parse_cartan_type(std::string_view text);

/// Cartan matrix in Bourbaki numbering, entry [i][j] = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix(CartanType type);

/// A subset of the simple roots, nodes numbered from 0.
class NodeSet {
 public:
  NodeSet() = default;
  static NodeSet from_nodes(std::span<const int> nodes);
  static NodeSet all(int rank);

  bool contains(int node) const { return (bits_ >> node) & 1u; }
  void insert(int node) { bits_ |= (1u << node); }
  void erase(int node) { bits_ &= ~(1u << node); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  NodeSet complement(int rank) const;
  std::vector<int> nodes() const;
  std::uint32_t bits() const { return bits_; }

  bool operator==(const NodeSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Parses a comma-separated list of 1-based Bourbaki indices ("1,3"); the
/// empty string is the empty set. Throws ParseError on bad syntax, an index
/// outside 1..rank, or a repeated index.
NodeSet parse_node_list(std::string_view text, int rank);

/// "1,3" style rendering, 1-based.
std::string format_node_list(const NodeSet& nodes);

/// A coroot in the basis of simple coroots.
struct Coroot {
  CartanType type;
  IntVector coords;
};

/// A weight in the basis of fundamental weights.
struct Weight {
  CartanType type;
  IntVector coords;
};

/// A connected piece of a Dynkin diagram, classified and relabelled in the
/// Bourbaki order of its own type: `relabel[k]` is the original node that
/// becomes node k of `type`.
struct DynkinComponent {
  std::vector<int> nodes;  // sorted original nodes
  CartanType type;
  std::vector<int> relabel;

  /// Position of an original node in the relabelled diagram.
  int local_index(int original_node) const;
};

/// Classifies a connected Cartan matrix. Returns the type and the
/// lexicographically smallest relabelling that reproduces the Bourbaki
/// matrix of that type. Throws DomainError when the matrix is not a
/// connected finite-type Cartan matrix.
DynkinComponent classify_connected(const IntMatrix& cartan);

/// Immutable root system data for one Cartan type.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  int cartan_entry(int i, int j) const { return cartan_[i][j]; }

  /// Sorted by height, then lexicographically descending (so alpha_1 comes
  /// first among the simple roots).
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  /// Negative roots first (from -theta up), then the positive ones.
  const std::vector<IntVector>& all_roots() const { return all_; }
  IntVector simple_root(int node) const;
  const IntVector& highest_root() const { return positive_.back(); }

  bool is_root(std::span<const int> v) const;
  static bool is_positive(std::span<const int> v);
  static int height(std::span<const int> v);

  /// Number of positive roots supported on the nodes of `subset`.
  int count_positive_roots_in(const NodeSet& subset) const;
  /// Sum of the positive roots not supported on `subset`.
  IntVector sum_positive_roots_outside(const NodeSet& subset) const;

  /// Neighbours of `node` in the Dynkin diagram.
  std::vector<int> dynkin_neighbours(int node) const;
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  /// (alpha_i, alpha_i) with the short simple roots normalised to 2.
  int simple_root_norm(int node) const { return norms_[node]; }
  /// (beta, beta) for an arbitrary lattice vector, same normalisation.
  Rational norm(std::span<const int> v) const;

  /// beta^vee in simple-coroot coordinates. Throws DomainError when `beta`
  /// is not a root.
  Coroot coroot(std::span<const int> beta) const;
  Coroot simple_coroot(int node) const;

  Weight fundamental_weight(int node) const;
  /// Sum of the fundamental weights.
  Weight rho() const;
  /// The weight of a root-lattice vector: coordinates C * v.
  Weight weight_of(std::span<const int> root_coords) const;
  /// Root-lattice coordinates of a weight via the inverse Cartan matrix.
  std::vector<Rational> root_coordinates(const Weight& w) const;
  /// Inverse of root_coordinates. Throws DomainError if the result is not
  /// integral.
  Weight weight_from_root_coordinates(std::span<const Rational> coords) const;
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_cartan_; }

  /// Connected component of the subdiagram on `subset` containing `node`.
  /// Throws DomainError when `node` is not in `subset`.
  DynkinComponent dynkin_component(const NodeSet& subset, int node) const;

  /// Principal submatrix of the Cartan matrix on the given nodes.
  IntMatrix cartan_submatrix(std::span<const int> nodes) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<int> norms_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<IntVector> positive_;
  std::vector<IntVector> all_;
  std::map<IntVector, int> root_index_;
};

/// <lambda, beta^vee>. Throws DomainError if the two come from different
/// root systems.
int pairing(const Weight& lambda, const Coroot& beta);

/// The same pairing computed through root coordinates: lambda is converted
/// with the inverse Cartan matrix and paired against the simple coroots
/// making up beta^vee. Exact rational result.
Rational pairing_via_root_coordinates(const RootSystem& rs, const Weight& lambda,
                                      const Coroot& beta);

/// Order of the Weyl group of a valid type, from the closed-form product of
/// degrees. Used only for enumeration gating.
std::uint64_t weyl_group_order(CartanType type);

}  // namespace flagvar
