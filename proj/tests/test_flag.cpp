#include <doctest.h>

#include <random>

#include "flagvar/error.hpp"
#include "flagvar/flag.hpp"
#include "oracles.hpp"

using namespace flagvar;

namespace {

NodeSet nodes(std::initializer_list<int> list) {
  NodeSet s;
  for (int v : list) s.insert(v);
  return s;
}

NodeSet omit(int rank, std::initializer_list<int> list) { return nodes(list).complement(rank); }

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

QDivisor prime_divisor(const FlagVariety& x, int alpha) { return QDivisor(x.omitted(), {{alpha, Rational(1)}}); }

}  // namespace

TEST_SUITE("flag") {
  TEST_CASE("dimension") {
    CHECK(dimension(FlagVariety({Family::A, 1}, NodeSet{})) == 1);
    // Gr(2,4): |R+(A3)| - |R+(A1 x A1)| = 6 - 2
    CHECK(testing::type_a_positive_roots(3) - 2 * testing::type_a_positive_roots(1) == 4);
    CHECK(dimension(FlagVariety({Family::A, 3}, nodes({0, 2}))) == 4);
    CHECK(dimension(FlagVariety({Family::A, 3}, NodeSet{})) == 6);
    CHECK(dimension(FlagVariety({Family::A, 3}, NodeSet::all(3))) == 0);
    CHECK(dimension(FlagVariety({Family::E, 8}, NodeSet{})) == 120);
  }

  TEST_CASE("Picard rank and Levi validation") {
    CHECK(FlagVariety({Family::A, 3}, nodes({0, 2})).picard_rank() == 1);
    CHECK(FlagVariety({Family::D, 4}, NodeSet{}).picard_rank() == 4);
    CHECK_THROWS_AS(FlagVariety({Family::A, 2}, nodes({3})), DomainError);
  }

  TEST_CASE("Schubert cells") {
    CHECK(schubert_cells(FlagVariety({Family::A, 3}, nodes({0, 2}))).betti ==
          std::vector<std::size_t>{1, 1, 2, 1, 1});
    CHECK(schubert_cells(FlagVariety({Family::A, 2}, NodeSet{})).betti == std::vector<std::size_t>{1, 2, 2, 1});
    const SchubertCellTable point = schubert_cells(FlagVariety({Family::A, 2}, NodeSet::all(2)));
    CHECK(point.cells.size() == 1);
    CHECK(point.cells[0].dimension == 0);
    // Projective space P^4 = A4 omitting node 1: one cell per dimension.
    CHECK(schubert_cells(FlagVariety({Family::A, 4}, omit(4, {0}))).betti == std::vector<std::size_t>(5, 1));
  }

  TEST_CASE("Poincare dual pairing") {
    const FlagVariety gr({Family::A, 3}, nodes({0, 2}));
    const SchubertCellTable cells = schubert_cells(gr);
    std::vector<WeylElement> middle;
    for (const auto& c : cells.cells) {
      if (c.dimension == 2) middle.push_back(c.representative);
    }
    REQUIRE(middle.size() == 2);
    CHECK(poincare_dual_pairing(gr, middle[0], middle[0]) == 1);
    CHECK(poincare_dual_pairing(gr, middle[1], middle[1]) == 1);
    CHECK(poincare_dual_pairing(gr, middle[0], middle[1]) == 0);
    CHECK(poincare_dual_pairing(gr, middle[1], middle[0]) == 0);

    const FlagVariety point({Family::A, 2}, NodeSet::all(2));
    CHECK(poincare_dual_pairing(point, WeylElement::identity(2), WeylElement::identity(2)) == 1);

    CHECK_THROWS_AS(poincare_dual_pairing(gr, cells.cells[0].representative, middle[0]), DomainError);
    const RootSystem& rs = gr.root_system();
    CHECK_THROWS_AS(poincare_dual_pairing(gr, simple_reflection(rs, 0), simple_reflection(rs, 0)), DomainError);
  }

  TEST_CASE("curve-divisor pairing") {
    const FlagVariety gb({Family::B, 3}, NodeSet{});
    CHECK(curve_divisor_pairing(gb, 0, 0) == 1);
    CHECK(curve_divisor_pairing(gb, 0, 2) == 0);
    CHECK(curve_divisor_pairing(gb, 2, 1) == 0);
    const FlagVariety gr({Family::A, 3}, nodes({0, 2}));
    CHECK(curve_divisor_pairing(gr, 1, 1) == 1);
    CHECK_THROWS_AS(curve_divisor_pairing(gr, 0, 1), DomainError);
    CHECK_THROWS_AS(curve_divisor_pairing(gr, 1, 2), DomainError);
  }

  TEST_CASE("fibrations of type A match the Grassmannian fibres") {
    SUBCASE("Fl(1,2; C^3) forgetting d1") {
      const Fibration f = fibration(FlagVariety({Family::A, 2}, NodeSet{}), 0);
      CHECK(f.base.levi() == nodes({0}));
      CHECK(dimension(f.base) == 2);
      CHECK(f.fiber.type == CartanType{Family::A, 1});
      CHECK(f.fiber.dimension == 1);
    }
    SUBCASE("Fl(1,2,3; C^4) forgetting d2") {
      const Fibration f = fibration(FlagVariety({Family::A, 3}, NodeSet{}), 1);
      CHECK(f.fiber.type == CartanType{Family::A, 1});
      CHECK(f.fiber.original_nodes == std::vector<int>{1});
      CHECK(f.fiber.dimension == 1);
    }
    SUBCASE("maximal parabolic: base is a point and the fibre is X") {
      const FlagVariety gr({Family::A, 4}, omit(4, {1}));
      const Fibration f = fibration(gr, 1);
      CHECK(f.base.is_point());
      CHECK(f.fiber.type == CartanType{Family::A, 4});
      CHECK(f.fiber.marked_node == 1);
      CHECK(f.fiber.dimension == dimension(gr));
    }
    SUBCASE("every partial flag variety of A_n, n <= 6") {
      for (int n = 1; n <= 6; ++n) {
        for (const NodeSet& levi : all_subsets(n)) {
          const FlagVariety x({Family::A, n}, levi);
          // d_1 < ... < d_r are the omitted nodes (1-based), d_0 = 0, d_{r+1} = n + 1
          std::vector<int> d{0};
          for (int v : x.omitted().nodes()) d.push_back(v + 1);
          d.push_back(n + 1);
          for (std::size_t s = 1; s + 1 < d.size(); ++s) {
            const int k = d[s] - d[s - 1];
            const int m = d[s + 1] - d[s - 1];
            const Fibration f = fibration(x, d[s] - 1);
            CAPTURE(x.describe());
            CHECK(f.fiber.type == CartanType{Family::A, m - 1});
            CHECK(f.fiber.marked_node + 1 == k);
            CHECK(f.fiber.dimension == k * (m - k));
          }
        }
      }
    }
    SUBCASE("alpha inside I is rejected") {
      CHECK_THROWS_AS(fibration(FlagVariety({Family::A, 3}, nodes({0, 2})), 0), DomainError);
    }
  }

  TEST_CASE("fibres of other types") {
    const Fibration b = fibration(FlagVariety({Family::B, 3}, nodes({1, 2})), 0);
    CHECK(b.fiber.type == CartanType{Family::B, 3});
    CHECK(b.fiber.dimension == 5);  // odd quadric Q^5
    const Fibration spinor = fibration(FlagVariety({Family::B, 3}, nodes({0, 1})), 2);
    CHECK(spinor.fiber.dimension == 6);  // OG(3,7)
    const Fibration c = fibration(FlagVariety({Family::C, 3}, nodes({0, 1})), 2);
    CHECK(c.fiber.type == CartanType{Family::C, 3});
    CHECK(c.fiber.dimension == 6);  // Lagrangian Grassmannian LG(3,6)
    const Fibration g = fibration(FlagVariety({Family::G, 2}, NodeSet{}), 1);
    CHECK(g.fiber.type == CartanType{Family::A, 1});
    const Fibration e = fibration(FlagVariety({Family::E, 6}, omit(6, {0})), 0);
    CHECK(e.fiber.dimension == 16);  // Cayley plane
  }

  TEST_CASE("fibration towers") {
    SUBCASE("A2 full flags") {
      const auto tower = fibration_tower(FlagVariety({Family::A, 2}, NodeSet{}));
      REQUIRE(tower.size() == 2);
      CHECK(tower[0].fiber.dimension == 1);
      CHECK(dimension(tower[0].base) == 2);
      CHECK(tower[1].fiber.dimension == 2);
      CHECK(tower[1].base.is_point());
    }
    SUBCASE("maximal parabolic is a single step") {
      CHECK(fibration_tower(FlagVariety({Family::D, 4}, omit(4, {1}))).size() == 1);
    }
    SUBCASE("A3 full flags, three steps ending at a point") {
      const auto tower = fibration_tower(FlagVariety({Family::A, 3}, NodeSet{}));
      REQUIRE(tower.size() == 3);
      CHECK(tower.back().base.is_point());
      int total = 0;
      for (const auto& f : tower) total += f.fiber.dimension;
      CHECK(total == 6);
    }
    SUBCASE("fibre dimensions add up to dim X everywhere") {
      for (CartanType t : {CartanType{Family::B, 4}, CartanType{Family::F, 4}, CartanType{Family::D, 5}}) {
        for (const NodeSet& levi : all_subsets(t.rank)) {
          const FlagVariety x(t, levi);
          int total = 0;
          for (const auto& f : fibration_tower(x)) total += f.fiber.dimension;
          CHECK(total == dimension(x));
        }
      }
    }
    SUBCASE("a point has an empty tower") {
      CHECK(fibration_tower(FlagVariety({Family::A, 2}, NodeSet::all(2))).empty());
    }
  }

  TEST_CASE("anticanonical coefficients") {
    for (CartanType t : {CartanType{Family::A, 1}, CartanType{Family::B, 3}, CartanType{Family::C, 4},
                         CartanType{Family::D, 4}, CartanType{Family::E, 6}, CartanType{Family::E, 8},
                         CartanType{Family::F, 4}, CartanType{Family::G, 2}}) {
      for (const auto& [alpha, c] : anticanonical_coefficients(FlagVariety(t, NodeSet{}))) CHECK(c == 2);
    }
    SUBCASE("Gr(2,4) by explicit summation") {
      // R+(A3) \ {a1, a3}: a2, a1+a2, a2+a3, a1+a2+a3 -> sum (2,4,2); pair with a2^vee = row (-1,2,-1).
      const IntVector sum{2, 4, 2};
      const int c = -sum[0] + 2 * sum[1] - sum[2];
      CHECK(c == 4);
      CHECK(anticanonical_coefficients(FlagVariety({Family::A, 3}, nodes({0, 2}))) == std::map<int, int>{{1, 4}});
    }
    SUBCASE("Fano index n of Gr(k,n)") {
      for (int n = 2; n <= 7; ++n) {
        for (int k = 1; k < n; ++k) {
          const FlagVariety gr({Family::A, n - 1}, omit(n - 1, {k - 1}));
          CHECK(anticanonical_coefficients(gr).at(k - 1) == n);
        }
      }
    }
  }

  TEST_CASE("restriction to fibres") {
    const FlagVariety x({Family::A, 3}, NodeSet{});
    CHECK(restrict_divisor_to_fiber(x, prime_divisor(x, 1), 1) == 1);
    CHECK(restrict_divisor_to_fiber(x, prime_divisor(x, 1), 2) == 0);
    const QDivisor twice(x.omitted(), {{0, 2}, {1, 2}, {2, 2}});
    for (int beta = 0; beta < 3; ++beta) CHECK(restrict_divisor_to_fiber(x, twice, beta) == 2);

    const FlagVariety gr({Family::A, 3}, nodes({0, 2}));
    CHECK_THROWS_AS(restrict_divisor_to_fiber(gr, QDivisor(gr.omitted(), {{1, 1}}), 0), DomainError);
    CHECK_THROWS_AS(restrict_divisor_to_fiber(gr, twice, 1), DomainError);  // divisor from another variety
  }

  TEST_CASE("restriction is linear (random rational coefficients)") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(0, 30), den(1, 9);
    auto rational = [&] {
      Rational q{num(rng), den(rng)};
      q.canonicalize();
      return q;
    };
    for (CartanType t : {CartanType{Family::C, 4}, CartanType{Family::D, 4}, CartanType{Family::G, 2}}) {
      for (const NodeSet& levi : all_subsets(t.rank)) {
        const FlagVariety x(t, levi);
        if (x.is_point()) continue;
        std::map<int, Rational> a, b;
        for (int v : x.omitted().nodes()) {
          a[v] = rational();
          b[v] = rational();
        }
        const QDivisor d(x.omitted(), a), e(x.omitted(), b);
        const Rational lambda = rational() + 1, mu = rational() + Rational(1, 3);
        const QDivisor combo = d.scaled(lambda).plus(e.scaled(mu));
        for (int beta : x.omitted().nodes()) {
          CHECK(restrict_divisor_to_fiber(x, combo, beta) ==
                lambda * restrict_divisor_to_fiber(x, d, beta) + mu * restrict_divisor_to_fiber(x, e, beta));
        }
      }
    }
  }
}
