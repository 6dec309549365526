#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flagvar/divisor.hpp"
#include "flagvar/rational.hpp"
#include "flagvar/roots.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {

/// G/P for a root system and the Levi set I of P. I = {} is G/B; I = S is
/// a point.
class FlagVariety {
 public:
  FlagVariety(std::shared_ptr<const RootSystem> rs, const NodeSet& levi);
  FlagVariety(CartanType type, const NodeSet& levi);

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const NodeSet& levi() const { return levi_; }
  /// S \ I: the nodes indexing the B-stable prime divisors.
  NodeSet omitted() const { return levi_.complement(rs_->rank()); }
  int picard_rank() const { return omitted().size(); }
  bool is_point() const { return omitted().empty(); }

  /// e.g. "A3/P[levi 1,3]".
  std::string describe() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  NodeSet levi_;
};

/// l(w0 w0^P), checked against |R+| - |R+_I|. Disagreement throws
/// std::logic_error.
int dimension(const FlagVariety& x);

struct SchubertCell {
  WeylElement representative;
  int dimension = 0;
};

struct SchubertCellTable {
  std::vector<SchubertCell> cells;  // ordered (dimension, matrix)
  std::vector<std::size_t> betti;   // betti[k] = #cells of dimension k
};

SchubertCellTable schubert_cells(const FlagVariety& x, const EnumerationPolicy& policy = {},
                                 Execution exec = Execution::parallel);

/// [Y^w] . [Y_v] for w, v in W^P of equal length: 1 if w == v, else 0.
/// Throws DomainError on a length mismatch or a non-minimal element.
int poincare_dual_pairing(const FlagVariety& x, const WeylElement& w, const WeylElement& v);

/// D_alpha . [B s_beta P/P] computed as <omega_alpha, beta^vee> through root
/// coordinates. Throws DomainError if alpha or beta lies in I.
int curve_divisor_pairing(const FlagVariety& x, int alpha, int beta);

/// The fibre of pi_alpha: the maximal-parabolic flag variety of the Dynkin
/// component of I u {alpha} through alpha, relabelled in its own Bourbaki
/// order.
struct FiberType {
  CartanType type;
  int marked_node = 0;              // local index of alpha
  std::vector<int> original_nodes;  // local index -> node of the ambient diagram
  int dimension = 0;

  /// Levi set of the fibre in local labels: everything but the marked node.
  NodeSet local_levi() const;
  std::string describe() const;
};

struct Fibration {
  int alpha = 0;
  FlagVariety total;
  FlagVariety base;  // Levi set I u {alpha}
  FiberType fiber;
};

/// pi_alpha : G/P -> G/P'. Throws DomainError if alpha is in I.
Fibration fibration(const FlagVariety& x, int alpha);

/// Successive fibrations over alpha_1 < ... < alpha_r in S\I: step k maps
/// the base of step k-1 forward. The last base is a point.
std::vector<Fibration> fibration_tower(const FlagVariety& x);

/// Coefficients c_alpha of -K_X = sum c_alpha D_alpha, computed as
/// <sum of R+ \ R+_I, alpha^vee>.
std::map<int, int> anticanonical_coefficients(const FlagVariety& x);

/// Coefficient of H_beta in D|_{X_beta}: sum_alpha a_alpha * (D_alpha . C_beta).
/// Throws DomainError if beta is in I.
Rational restrict_divisor_to_fiber(const FlagVariety& x, const QDivisor& d, int beta);

}  // namespace flagvar
