#include "flagvar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "flagvar/error.hpp"
#include "flagvar/flag.hpp"
#include "flagvar/kernels.hpp"
#include "flagvar/lct.hpp"
#include "flagvar/oracle.hpp"

namespace flagvar {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::vector<CartanType> default_verify_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
          {Family::B, 4}, {Family::C, 3}, {Family::C, 4}, {Family::D, 4}, {Family::G, 2}};
}

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

using CheckFn = std::function<std::string(const RootSystem&, const EnumerationPolicy&, std::mt19937_64&)>;

struct Check {
  std::string name;
  CheckFn run;
};

std::vector<NodeSet> all_subsets(int rank) {
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
    NodeSet s;
    for (int i = 0; i < rank; ++i) {
      if ((mask >> i) & 1u) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

oracle::Mat to_matrix(const WeylElement& w) {
  oracle::Mat m(w.rank(), oracle::Vec(w.rank()));
  for (int i = 0; i < w.rank(); ++i) {
    for (int j = 0; j < w.rank(); ++j) m[i][j] = w.at(i, j);
  }
  return m;
}

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q{num(rng), den(rng)};
  q.canonicalize();
  return q;
}

QDivisor random_divisor(const FlagVariety& x, std::mt19937_64& rng) {
  std::map<int, Rational> coeffs;
  for (int alpha : x.omitted().nodes()) coeffs.emplace(alpha, random_rational(rng, 12, 6));
  return QDivisor(x.omitted(), std::move(coeffs));
}

std::string count_detail(const std::string& what, std::size_t n) {
  return what + " " + std::to_string(n);
}

// ---------------------------------------------------------------------------

std::string check_root_closure(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  const std::set<oracle::Vec> orbit = oracle::root_orbit(rs.cartan());
  const std::set<IntVector> roots(rs.all_roots().begin(), rs.all_roots().end());
  require(roots.size() == rs.all_roots().size(), "duplicate roots");
  require(std::set<oracle::Vec>(roots.begin(), roots.end()) == orbit, "closure differs from reflection orbit");
  require(rs.all_roots().size() == 2 * rs.positive_roots().size(), "|R| != 2|R+|");
  return count_detail("|R| =", roots.size());
}

std::string check_weight_duality(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  for (int a = 0; a < rs.rank(); ++a) {
    for (int b = 0; b < rs.rank(); ++b) {
      const Rational via_roots = pairing_via_root_coordinates(rs, rs.fundamental_weight(a), rs.simple_coroot(b));
      require(via_roots == (a == b ? 1 : 0), "<omega, alpha^vee> != delta via root coordinates");
      require(pairing(rs.fundamental_weight(a), rs.simple_coroot(b)) == (a == b ? 1 : 0), "direct pairing");
      require(pairing(rs.weight_of(rs.simple_root(a)), rs.simple_coroot(b)) == rs.cartan_entry(b, a),
              "root pairing does not reproduce the Cartan matrix");
    }
  }
  return "rank " + std::to_string(rs.rank()) + " pairings";
}

std::string check_negation(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  for (const auto& beta : rs.all_roots()) {
    IntVector neg = beta;
    for (int& v : neg) v = -v;
    require(rs.is_root(neg), "-beta missing");
    require(RootSystem::is_positive(beta) != RootSystem::is_positive(neg), "sign partition");
  }
  return count_detail("roots", rs.all_roots().size());
}

std::string check_cartan_entries(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) {
      const int a = rs.cartan_entry(i, j);
      if (i == j) {
        require(a == 2, "diagonal entry != 2");
      } else {
        require(a <= 0 && a >= -3, "off-diagonal entry out of range");
        require((a == 0) == (rs.cartan_entry(j, i) == 0), "asymmetric zero pattern");
      }
    }
  }
  return "ok";
}

std::string check_order_vs_oracle(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  const GroupCount count = enumerate_bruteforce(rs, policy);
  const auto table = oracle::weyl_bfs(rs.cartan(), policy.cap);
  require(!table.empty(), "oracle exceeded its bound");
  require(count.order == table.size(), "engine and oracle orders differ");
  require(count.poincare == oracle::poincare_polynomial(table), "Poincare polynomials differ");
  return count_detail("|W| =", count.order);
}

std::string check_palindromic(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  const GroupCount count = enumerate_bruteforce(rs, policy);
  std::vector<std::size_t> reversed(count.poincare.rbegin(), count.poincare.rend());
  require(reversed == count.poincare, "Poincare polynomial is not palindromic");
  return "degree " + std::to_string(count.poincare.size() - 1);
}

std::string check_longest(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  const WeylElement w0 = longest_element(rs, NodeSet::all(rs.rank()));
  require(length(rs, w0) == static_cast<int>(rs.positive_roots().size()), "l(w0) != |R+|");
  require(w0 * w0 == WeylElement::identity(rs.rank()), "w0 is not an involution");
  return "l(w0) = " + std::to_string(length(rs, w0));
}

std::string check_length_parity(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  const GradedElements all = enumerate_group(rs, policy);
  const std::vector<int> lengths = kernels::lengths(rs, all.elements, Execution::parallel);
  for (std::size_t k = 0; k < all.elements.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      const int l = length(rs, all.elements[k].right_multiply_simple(rs, i));
      require(l == lengths[k] + 1 || l == lengths[k] - 1, "l(ws) - l(w) is not +-1");
    }
  }
  return count_detail("elements", all.elements.size());
}

std::string check_length_routes(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  const GradedElements all = enumerate_group(rs, policy);
  const auto table = oracle::weyl_bfs(rs.cartan(), policy.cap);
  require(!table.empty(), "oracle exceeded its bound");
  for (std::size_t k = 0; k < all.elements.size(); ++k) {
    const WeylElement& w = all.elements[k];
    const int flips = length(rs, w);
    const std::vector<int> word = reduced_word(rs, w);
    require(flips == static_cast<int>(word.size()), "sign-flip length != reduced word length");
    require(from_word(rs, word) == w, "reduced word does not multiply back");
    require(flips == all.lengths[k], "sign-flip length != BFS depth");
    auto it = table.find(to_matrix(w));
    require(it != table.end() && it->second == flips, "length disagrees with oracle distance");
  }
  return count_detail("elements", all.elements.size());
}

std::string check_coset_counts(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  const GradedElements all = enumerate_group(rs, policy);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    std::size_t parabolic = 0;
    for (const auto& w : all.elements) {
      const std::vector<int> word = reduced_word(rs, w);
      parabolic += std::all_of(word.begin(), word.end(), [&](int s) { return levi.contains(s); }) ? 1 : 0;
    }
    const CosetTable bfs = minimal_coset_reps(rs, levi, policy);
    const CosetTable filtered = minimal_coset_reps_by_filter(rs, levi, policy);
    require(bfs.representatives == filtered.representatives && bfs.lengths == filtered.lengths,
            "BFS and filtered W^P differ for I = {" + format_node_list(levi) + "}");
    require(bfs.representatives.size() * parabolic == all.elements.size(),
            "|W^P| |W_P| != |W| for I = {" + format_node_list(levi) + "}");
    require(parabolic == parabolic_order(rs, levi), "|W_P| disagrees with the closed form");
    ++cases;
  }
  return count_detail("Levi sets", cases);
}

std::string check_kernels_agree(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  check_full_group_allowed(rs, policy);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const GradedElements serial = kernels::graded_bfs_serial(rs, levi, policy.cap);
    const GradedElements parallel = kernels::graded_bfs_parallel(rs, levi, policy.cap);
    require(serial == parallel, "serial and parallel BFS differ for I = {" + format_node_list(levi) + "}");
    require(kernels::lengths_serial(rs, serial.elements) == kernels::lengths_parallel(rs, serial.elements),
            "serial and parallel length kernels differ");
    ++cases;
  }
  return count_detail("Levi sets", cases);
}

std::string check_dimension_additivity(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    for (int alpha : x.omitted().nodes()) {
      const Fibration f = fibration(x, alpha);
      require(dimension(x) == dimension(f.base) + f.fiber.dimension, "additivity fails");
      ++cases;
    }
  }
  return count_detail("fibrations", cases);
}

std::string check_pairing_identity(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    for (int a : x.omitted().nodes()) {
      for (int b : x.omitted().nodes()) {
        require(curve_divisor_pairing(x, a, b) == (a == b ? 1 : 0),
                "pairing matrix is not the identity for I = {" + format_node_list(levi) + "}");
      }
    }
    ++cases;
  }
  return count_detail("Levi sets", cases);
}

std::string check_duality(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t elements = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    const int dim = dimension(x);
    const CosetTable table = minimal_coset_reps(rs, levi, policy);
    std::set<WeylElement> images;
    for (std::size_t k = 0; k < table.representatives.size(); ++k) {
      const WeylElement& w = table.representatives[k];
      const WeylElement d = duality_involution(rs, w, levi);
      require(is_minimal_representative(d, levi), "dual element leaves W^P");
      require(length(rs, d) == dim - table.lengths[k], "dual length is not complementary");
      require(duality_involution(rs, d, levi) == w, "duality is not an involution");
      images.insert(d);
      ++elements;
    }
    require(images.size() == table.representatives.size(), "duality is not a bijection");
  }
  return count_detail("elements", elements);
}

std::string check_betti(const RootSystem& rs, const EnumerationPolicy& policy, std::mt19937_64&) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    const SchubertCellTable cells = schubert_cells(x, policy);
    std::size_t total = 0;
    for (auto b : cells.betti) total += b;
    require(total == cells.cells.size(), "sum of Betti numbers != |W^P|");
    std::vector<std::size_t> reversed(cells.betti.rbegin(), cells.betti.rend());
    require(reversed == cells.betti, "Betti numbers not palindromic");
    require(static_cast<int>(cells.betti.size()) - 1 == dimension(x), "top degree != dimension");
    ++cases;
  }
  return count_detail("Levi sets", cases);
}

std::string check_anticanonical(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  const FlagVariety x(std::make_shared<const RootSystem>(rs), NodeSet{});
  for (const auto& [alpha, c] : anticanonical_coefficients(x)) require(c == 2, "-K_{G/B} coefficient != 2");
  return "all 2";
}

std::string check_restriction_linear(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64& rng) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    if (x.is_point()) continue;
    for (int trial = 0; trial < 4; ++trial) {
      const QDivisor d = random_divisor(x, rng);
      const QDivisor e = random_divisor(x, rng);
      const Rational lambda = random_rational(rng, 9, 4) + Rational(1, 7);
      const Rational mu = random_rational(rng, 9, 4) + Rational(1, 5);
      const QDivisor combo = d.scaled(lambda).plus(e.scaled(mu));
      for (int beta : x.omitted().nodes()) {
        require(restrict_divisor_to_fiber(x, combo, beta) ==
                    lambda * restrict_divisor_to_fiber(x, d, beta) + mu * restrict_divisor_to_fiber(x, e, beta),
                "restriction is not linear");
        require(restrict_divisor_to_fiber(x, d, beta) == d.coefficient(beta), "restriction != a_beta");
      }
      ++cases;
    }
  }
  return count_detail("random trials", cases);
}

std::string check_scaling_law(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64& rng) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    if (x.is_point()) continue;
    for (int trial = 0; trial < 4; ++trial) {
      const QDivisor d = random_divisor(x, rng);
      const Rational c = random_rational(rng, 40, 4) + Rational(1, 9);
      const ThresholdResult before = lct_b_stable(x, d);
      const ThresholdResult after = lct_b_stable(x, scale(d, c));
      require(before.value.is_infinite() == after.value.is_infinite(), "scaling changed finiteness");
      if (!before.value.is_infinite()) require(after.value.finite() * c == before.value.finite(), "lct(cD) c != lct(D)");
      ++cases;
    }
  }
  return count_detail("random trials", cases);
}

std::string check_monotonicity(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64& rng) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    if (x.is_point()) continue;
    const QDivisor d = random_divisor(x, rng);
    const QDivisor e = random_divisor(x, rng);
    const ThresholdValue small = lct_b_stable(x, d.plus(e)).value;
    const ThresholdValue large = lct_b_stable(x, d).value;
    require(large.is_infinite() || (!small.is_infinite() && small.finite() <= large.finite()),
            "adding an effective divisor raised the threshold");
    ++cases;
  }
  return count_detail("random trials", cases);
}

std::string check_verdicts(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64& rng) {
  auto shared = std::make_shared<const RootSystem>(rs);
  const FlagVariety x(shared, NodeSet{});
  std::size_t cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const QDivisor d = random_divisor(x, rng);
    for (const ThresholdResult& r : {lct_b_stable(x, d), lct_lower_bound_general(x, d)}) {
      require(r.klt == r.value.exceeds(1), "klt verdict != (value > 1)");
      require(r.lc == r.value.at_least(1), "lc verdict != (value >= 1)");
      require(r.value.is_infinite() == d.is_zero(), "infinite threshold iff zero divisor");
    }
    ++cases;
  }
  return count_detail("random trials", cases);
}

std::string check_global_gb(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64&) {
  const ThresholdResult r = global_lct(FlagVariety(std::make_shared<const RootSystem>(rs), NodeSet{}));
  require(!r.value.is_infinite() && r.value.finite() == Rational(1, 2), "lct(G/B) != 1/2");
  require(!r.derived_extension, "G/B result flagged as extension");
  return "1/2";
}

std::string check_two_routes(const RootSystem& rs, const EnumerationPolicy&, std::mt19937_64& rng) {
  auto shared = std::make_shared<const RootSystem>(rs);
  std::size_t cases = 0;
  for (const NodeSet& levi : all_subsets(rs.rank())) {
    const FlagVariety x(shared, levi);
    if (x.is_point()) continue;
    const QDivisor d = random_divisor(x, rng);
    require(lct_b_stable(x, d).value == fiberwise_threshold(x, d), "fibrewise route disagrees");
    ++cases;
  }
  return count_detail("random trials", cases);
}

const std::vector<Check>& checks() {
  static const std::vector<Check> list = {
      {"roots.closure_vs_orbit", check_root_closure},
      {"roots.weight_duality", check_weight_duality},
      {"roots.negation_symmetry", check_negation},
      {"roots.cartan_entries", check_cartan_entries},
      {"weyl.order_vs_oracle", check_order_vs_oracle},
      {"weyl.poincare_palindromic", check_palindromic},
      {"weyl.longest_element", check_longest},
      {"weyl.length_parity", check_length_parity},
      {"weyl.length_routes", check_length_routes},
      {"weyl.coset_counts", check_coset_counts},
      {"weyl.kernels_agree", check_kernels_agree},
      {"flag.dimension_additivity", check_dimension_additivity},
      {"flag.pairing_identity", check_pairing_identity},
      {"flag.duality", check_duality},
      {"flag.betti", check_betti},
      {"flag.anticanonical_gb", check_anticanonical},
      {"flag.restriction_linear", check_restriction_linear},
      {"lct.scaling_law", check_scaling_law},
      {"lct.monotonicity", check_monotonicity},
      {"lct.verdicts", check_verdicts},
      {"lct.global_gb", check_global_gb},
      {"lct.two_routes", check_two_routes},
  };
  return list;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& c : checks()) names.push_back(c.name);
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const auto& list = checks();
  std::vector<RootSystem> systems;
  systems.reserve(options.types.size());
  for (const auto& t : options.types) systems.emplace_back(t);

  const std::size_t total = systems.size() * list.size();
  std::vector<CheckResult> results(total);
  const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t task = 0; task < n; ++task) {
    const std::size_t t = static_cast<std::size_t>(task) / list.size();
    const Check& check = list[static_cast<std::size_t>(task) % list.size()];
    CheckResult& r = results[static_cast<std::size_t>(task)];
    r.name = check.name;
    r.type = systems[t].type().label();
    std::seed_seq seed(r.name.begin(), r.name.end());
    std::mt19937_64 rng(seed);
    rng.discard(static_cast<unsigned long long>(systems[t].rank()) * 7919u + static_cast<unsigned long long>(systems[t].type().family));
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check.run(systems[t], options.policy, rng);
      r.status = CheckStatus::pass;
    } catch (const CapExceeded& e) {
      r.status = CheckStatus::skipped;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return results;
}

}  // namespace flagvar
