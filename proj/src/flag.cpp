#include "flagvar/flag.hpp"

#include <stdexcept>

#include "flagvar/error.hpp"

namespace flagvar {

FlagVariety::FlagVariety(std::shared_ptr<const RootSystem> rs, const NodeSet& levi)
    : rs_(std::move(rs)), levi_(levi) {
  if (!rs_) throw std::invalid_argument("flag variety without a root system");
  if ((levi_.bits() & ~NodeSet::all(rs_->rank()).bits()) != 0) {
    throw DomainError("Levi set mentions nodes outside the rank of " + rs_->type().label());
  }
}

FlagVariety::FlagVariety(CartanType type, const NodeSet& levi)
    : FlagVariety(std::make_shared<const RootSystem>(type), levi) {}

std::string FlagVariety::describe() const {
  return rs_->type().label() + "/P[levi " + (levi_.empty() ? std::string("{}") : format_node_list(levi_)) + "]";
}

int dimension(const FlagVariety& x) {
  const RootSystem& rs = x.root_system();
  const WeylElement top = longest_element(rs, NodeSet::all(rs.rank())) * longest_element(rs, x.levi());
  const int by_length = length(rs, top);
  const int by_roots =
      static_cast<int>(rs.positive_roots().size()) - rs.count_positive_roots_in(x.levi());
  if (by_length != by_roots) {
    throw std::logic_error("dimension mismatch for " + x.describe() + ": l(w0 w0^P) = " +
                           std::to_string(by_length) + " but |R+| - |R+_I| = " + std::to_string(by_roots));
  }
  return by_length;
}

SchubertCellTable schubert_cells(const FlagVariety& x, const EnumerationPolicy& policy, Execution exec) {
  const CosetTable table = minimal_coset_reps(x.root_system(), x.levi(), policy, exec);
  SchubertCellTable out;
  out.cells.reserve(table.representatives.size());
  for (std::size_t k = 0; k < table.representatives.size(); ++k) {
    out.cells.push_back({table.representatives[k], table.lengths[k]});
  }
  out.betti = table.grading;
  return out;
}

int poincare_dual_pairing(const FlagVariety& x, const WeylElement& w, const WeylElement& v) {
  const RootSystem& rs = x.root_system();
  if (!is_minimal_representative(v, x.levi())) {
    throw DomainError("element " + format_word(reduced_word(rs, v)) + " is not a minimal coset representative");
  }
  const int lw = length(rs, w);
  const int lv = length(rs, v);
  if (lw != lv) {
    throw DomainError("pairing needs equal lengths, got " + std::to_string(lw) + " and " + std::to_string(lv));
  }
  // [Y^w] is carried by the Schubert variety indexed by the dual element;
  // its Poincare partner is the dual of that.
  const WeylElement carrier = duality_involution(rs, w, x.levi());
  const WeylElement partner = duality_involution(rs, carrier, x.levi());
  return partner == v ? 1 : 0;
}

namespace {

void require_omitted(const FlagVariety& x, int node, const char* role) {
  if (node < 0 || node >= x.root_system().rank()) {
    throw DomainError(std::string(role) + " node " + std::to_string(node + 1) + " outside 1.." +
                      std::to_string(x.root_system().rank()));
  }
  if (x.levi().contains(node)) {
    throw DomainError(std::string(role) + " node " + std::to_string(node + 1) +
                      " lies in the Levi set; only nodes of S\\I index divisors and fibrations");
  }
}

}  // namespace

int curve_divisor_pairing(const FlagVariety& x, int alpha, int beta) {
  require_omitted(x, alpha, "divisor");
  require_omitted(x, beta, "curve");
  const RootSystem& rs = x.root_system();
  const Rational value =
      pairing_via_root_coordinates(rs, rs.fundamental_weight(alpha), rs.simple_coroot(beta));
  if (value.get_den() != 1) throw std::logic_error("non-integral divisor-curve pairing");
  return static_cast<int>(value.get_num().get_si());
}

NodeSet FiberType::local_levi() const {
  NodeSet levi = NodeSet::all(type.rank);
  levi.erase(marked_node);
  return levi;
}

std::string FiberType::describe() const {
  return type.label() + "/P[omit " + std::to_string(marked_node + 1) + "]";
}

Fibration fibration(const FlagVariety& x, int alpha) {
  require_omitted(x, alpha, "fibration");
  const RootSystem& rs = x.root_system();
  NodeSet j = x.levi();
  j.insert(alpha);

  const DynkinComponent component = rs.dynkin_component(j, alpha);
  FiberType fiber;
  fiber.type = component.type;
  fiber.original_nodes = component.relabel;
  fiber.marked_node = component.local_index(alpha);
  fiber.dimension = dimension(FlagVariety(fiber.type, fiber.local_levi()));

  Fibration f{alpha, x, FlagVariety(x.root_system_ptr(), j), std::move(fiber)};
  const int total = dimension(x);
  const int base = dimension(f.base);
  if (total != base + f.fiber.dimension) {
    throw std::logic_error("dimension additivity fails for " + x.describe() + " along node " +
                           std::to_string(alpha + 1));
  }
  return f;
}

std::vector<Fibration> fibration_tower(const FlagVariety& x) {
  std::vector<Fibration> tower;
  FlagVariety current = x;
  for (int alpha : x.omitted().nodes()) {
    tower.push_back(fibration(current, alpha));
    current = tower.back().base;
  }
  return tower;
}

std::map<int, int> anticanonical_coefficients(const FlagVariety& x) {
  const RootSystem& rs = x.root_system();
  const Weight sum = rs.weight_of(rs.sum_positive_roots_outside(x.levi()));
  std::map<int, int> out;
  for (int alpha : x.omitted().nodes()) out.emplace(alpha, pairing(sum, rs.simple_coroot(alpha)));
  return out;
}

Rational restrict_divisor_to_fiber(const FlagVariety& x, const QDivisor& d, int beta) {
  require_omitted(x, beta, "fibre");
  if (!(d.support() == x.omitted())) throw DomainError("divisor does not live on " + x.describe());
  Rational total = 0;
  for (int alpha : x.omitted().nodes()) {
    const Rational a = d.coefficient(alpha);
    if (a != 0) total += a * curve_divisor_pairing(x, alpha, beta);
  }
  return total;
}

}  // namespace flagvar
