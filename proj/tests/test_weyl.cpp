#include <doctest.h>

#include <set>

#include "flagvar/error.hpp"
#include "flagvar/kernels.hpp"
#include "flagvar/oracle.hpp"
#include "flagvar/weyl.hpp"
#include "oracles.hpp"

using namespace flagvar;

namespace {

oracle::Mat to_matrix(const WeylElement& w) {
  oracle::Mat m(w.rank(), oracle::Vec(w.rank()));
  for (int i = 0; i < w.rank(); ++i) {
    for (int j = 0; j < w.rank(); ++j) m[i][j] = w.at(i, j);
  }
  return m;
}

NodeSet nodes(std::initializer_list<int> list) {
  NodeSet s;
  for (int v : list) s.insert(v);
  return s;
}

// Maximal BFS distance in the oracle table.
int oracle_max_length(const std::map<oracle::Mat, int>& table) {
  int best = 0;
  for (const auto& [m, d] : table) best = std::max(best, d);
  return best;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("simple reflections") {
    const RootSystem a2({Family::A, 2});
    const WeylElement e = WeylElement::identity(2);
    for (int i = 0; i < 2; ++i) {
      const WeylElement s = simple_reflection(a2, i);
      CHECK(s * s == e);
      CHECK(s.apply(a2.simple_root(i)) == IntVector(i == 0 ? IntVector{-1, 0} : IntVector{0, -1}));
    }
    CHECK(length(a2, simple_reflection(a2, 0) * simple_reflection(a2, 1)) == 2);

    const RootSystem a1({Family::A, 1});
    const WeylElement s = simple_reflection(a1, 0);
    CHECK(s.rank() == 1);
    CHECK(s.at(0, 0) == -1);

    CHECK_THROWS_AS(simple_reflection(a2, 2), DomainError);
    CHECK_THROWS_AS(simple_reflection(a2, -1), DomainError);
  }

  TEST_CASE("s_alpha permutes the other positive roots") {
    for (CartanType t : {CartanType{Family::B, 3}, CartanType{Family::G, 2}, CartanType{Family::F, 4}}) {
      const RootSystem rs(t);
      for (int i = 0; i < rs.rank(); ++i) {
        const WeylElement s = simple_reflection(rs, i);
        std::set<IntVector> images;
        for (const auto& beta : rs.positive_roots()) {
          if (beta == rs.simple_root(i)) continue;
          const IntVector img = s.apply(beta);
          CHECK(RootSystem::is_positive(img));
          images.insert(img);
        }
        CHECK(images.size() == rs.positive_roots().size() - 1);
      }
    }
  }

  TEST_CASE("lengths of identity and longest elements") {
    const RootSystem a2({Family::A, 2});
    const RootSystem b2({Family::B, 2});
    CHECK(length(a2, WeylElement::identity(2)) == 0);

    const auto a2_table = oracle::weyl_bfs(a2.cartan(), 1000);
    const auto b2_table = oracle::weyl_bfs(b2.cartan(), 1000);
    CHECK(oracle_max_length(a2_table) == 3);
    CHECK(oracle_max_length(b2_table) == 4);

    const WeylElement w0_a2 = longest_element(a2, NodeSet::all(2));
    CHECK(length(a2, w0_a2) == 3);
    CHECK(a2_table.at(to_matrix(w0_a2)) == 3);
    CHECK(w0_a2 * w0_a2 == WeylElement::identity(2));
    CHECK(length(b2, longest_element(b2, NodeSet::all(2))) == 4);
  }

  TEST_CASE("longest element of a parabolic subgroup") {
    const RootSystem a3({Family::A, 3});
    CHECK(longest_element(a3, NodeSet{}) == WeylElement::identity(3));
    const WeylElement w = longest_element(a3, nodes({0, 2}));
    CHECK(length(a3, w) == 2);
    CHECK(w == simple_reflection(a3, 0) * simple_reflection(a3, 2));
    CHECK(w * w == WeylElement::identity(3));
  }

  TEST_CASE("l(w0) = |R+| across types") {
    for (CartanType t : {CartanType{Family::A, 1}, CartanType{Family::A, 4}, CartanType{Family::A, 5},
                         CartanType{Family::B, 4}, CartanType{Family::C, 4}, CartanType{Family::D, 4},
                         CartanType{Family::D, 5}, CartanType{Family::F, 4}, CartanType{Family::G, 2},
                         CartanType{Family::E, 8}}) {
      const RootSystem rs(t);
      const WeylElement w0 = longest_element(rs, NodeSet::all(rs.rank()));
      CHECK(length(rs, w0) == static_cast<int>(rs.positive_roots().size()));
      CHECK(w0 * w0 == WeylElement::identity(rs.rank()));
    }
  }

  TEST_CASE("reduced words") {
    const RootSystem a3({Family::A, 3});
    const WeylElement w = from_word(a3, std::vector<int>{0, 2, 1});
    const std::vector<int> word = reduced_word(a3, w);
    CHECK(word.size() == 3);
    CHECK(from_word(a3, word) == w);
    CHECK(format_word(word).size() == 8);
    CHECK(format_word(std::vector<int>{0, 2, 1}) == "s1 s3 s2");
    CHECK(format_word(std::vector<int>{}) == "e");
    // non-reduced input collapses
    CHECK(reduced_word(a3, from_word(a3, std::vector<int>{1, 1})).empty());
    CHECK(inverse(a3, w) * w == WeylElement::identity(3));
  }

  TEST_CASE("sign-flip length, reduced word and oracle distance agree exhaustively") {
    for (CartanType t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}, CartanType{Family::G, 2}}) {
      CAPTURE(t.label());
      const RootSystem rs(t);
      const auto table = oracle::weyl_bfs(rs.cartan(), 100000);
      const GradedElements all = enumerate_group(rs);
      REQUIRE(all.elements.size() == table.size());
      for (std::size_t k = 0; k < all.elements.size(); ++k) {
        const WeylElement& w = all.elements[k];
        const int l = length(rs, w);
        CHECK(l == static_cast<int>(reduced_word(rs, w).size()));
        CHECK(l == all.lengths[k]);
        CHECK(table.at(to_matrix(w)) == l);
        for (int i = 0; i < rs.rank(); ++i) CHECK(std::abs(length(rs, w.right_multiply_simple(rs, i)) - l) == 1);
      }
    }
  }

  TEST_CASE("group orders against independent counts") {
    const EnumerationPolicy policy;
    CHECK(enumerate_bruteforce(RootSystem({Family::A, 3}), policy).order == testing::count_permutations(4));
    CHECK(testing::count_permutations(4) == 24);
    const RootSystem g2({Family::G, 2});
    CHECK(enumerate_bruteforce(g2, policy).order == testing::dihedral_order(g2.cartan_entry(0, 1), g2.cartan_entry(1, 0)));
    CHECK(enumerate_bruteforce(g2, policy).order == 12);
    CHECK(enumerate_bruteforce(RootSystem({Family::B, 3}), policy).order == testing::count_signed_permutations(3));
    CHECK(enumerate_bruteforce(RootSystem({Family::D, 4}), policy).order == testing::count_signed_permutations(4, true));
    CHECK(enumerate_bruteforce(RootSystem({Family::F, 4}), policy).order == 1152);
    const RootSystem f4({Family::F, 4});
    CHECK(oracle::weyl_bfs(f4.cartan(), 10000).size() == 1152);
  }

  TEST_CASE("Poincare polynomials are palindromic and match the oracle") {
    for (CartanType t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}, CartanType{Family::C, 3},
                         CartanType{Family::G, 2}, CartanType{Family::D, 4}}) {
      const RootSystem rs(t);
      const GroupCount c = enumerate_bruteforce(rs);
      std::vector<std::size_t> rev(c.poincare.rbegin(), c.poincare.rend());
      CHECK(rev == c.poincare);
      CHECK(c.poincare == oracle::poincare_polynomial(oracle::weyl_bfs(rs.cartan(), 100000)));
    }
    // [2]_q [3]_q for A2
    CHECK(enumerate_bruteforce(RootSystem({Family::A, 2})).poincare == std::vector<std::size_t>{1, 2, 2, 1});
  }

  TEST_CASE("minimal coset representatives") {
    const RootSystem a3({Family::A, 3});
    SUBCASE("Gr(2,4)") {
      const NodeSet levi = nodes({0, 2});
      const CosetTable table = minimal_coset_reps(a3, levi);
      CHECK(table.representatives.size() == 6);
      CHECK(table.grading == std::vector<std::size_t>{1, 1, 2, 1, 1});
      // oracle: filter all 24 elements by positivity of w(alpha_1), w(alpha_3)
      const auto all = oracle::weyl_bfs(a3.cartan(), 1000);
      std::map<int, std::size_t> graded;
      for (const auto& [m, d] : all) {
        if (oracle::columns_positive(m, {true, false, true})) ++graded[d];
      }
      CHECK(graded == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
      for (const auto& w : table.representatives) CHECK(is_minimal_representative(w, levi));
    }
    SUBCASE("I = S gives the identity only") {
      const CosetTable table = minimal_coset_reps(a3, NodeSet::all(3));
      CHECK(table.representatives == std::vector<WeylElement>{WeylElement::identity(3)});
    }
    SUBCASE("A2 with I empty is all of W") {
      const RootSystem a2({Family::A, 2});
      CHECK(minimal_coset_reps(a2, NodeSet{}).representatives.size() == 6);
    }
    SUBCASE("BFS and full-group filtering agree; |W^P||W_P| = |W|") {
      for (CartanType t : {CartanType{Family::A, 4}, CartanType{Family::B, 4}, CartanType{Family::C, 3},
                           CartanType{Family::D, 4}, CartanType{Family::G, 2}, CartanType{Family::F, 4}}) {
        const RootSystem rs(t);
        const std::size_t order = enumerate_bruteforce(rs).order;
        for (std::uint32_t mask = 0; mask < (1u << rs.rank()); ++mask) {
          NodeSet levi;
          for (int i = 0; i < rs.rank(); ++i) {
            if ((mask >> i) & 1u) levi.insert(i);
          }
          const CosetTable bfs = minimal_coset_reps(rs, levi);
          const CosetTable filtered = minimal_coset_reps_by_filter(rs, levi);
          CHECK(bfs.representatives == filtered.representatives);
          CHECK(bfs.lengths == filtered.lengths);
          CHECK(bfs.representatives.size() * parabolic_order(rs, levi) == order);
        }
      }
    }
  }

  TEST_CASE("duality involution") {
    const RootSystem a3({Family::A, 3});
    const NodeSet levi = nodes({0, 2});
    const WeylElement w0 = longest_element(a3, NodeSet::all(3));
    const WeylElement w0p = longest_element(a3, levi);
    CHECK(duality_involution(a3, WeylElement::identity(3), levi) == w0 * w0p);
    CHECK(length(a3, w0 * w0p) == 4);

    const CosetTable table = minimal_coset_reps(a3, levi);
    std::set<WeylElement> images;
    for (std::size_t k = 0; k < table.representatives.size(); ++k) {
      const WeylElement d = duality_involution(a3, table.representatives[k], levi);
      CHECK(is_minimal_representative(d, levi));
      CHECK(length(a3, d) == 4 - table.lengths[k]);
      CHECK(duality_involution(a3, d, levi) == table.representatives[k]);
      images.insert(d);
    }
    CHECK(images.size() == 6);

    CHECK_THROWS_AS(duality_involution(a3, simple_reflection(a3, 0), levi), DomainError);
  }

  TEST_CASE("enumeration caps") {
    const RootSystem a4({Family::A, 4});
    EnumerationPolicy tight;
    tight.cap = 100;
    CHECK_THROWS_AS(enumerate_bruteforce(a4, tight), CapExceeded);
    CHECK_THROWS_AS(minimal_coset_reps(a4, NodeSet{}, tight), CapExceeded);
    CHECK(minimal_coset_reps(a4, nodes({0, 1, 2}), tight).representatives.size() == 5);
    CHECK_THROWS_AS(kernels::graded_bfs_serial(a4, NodeSet{}, 100), CapExceeded);
    CHECK_THROWS_AS(kernels::graded_bfs_parallel(a4, NodeSet{}, 100), CapExceeded);

    const RootSystem e8({Family::E, 8});
    CHECK_THROWS_AS(enumerate_bruteforce(e8), CapExceeded);
    EnumerationPolicy override_only;
    override_only.allow_large_types = true;
    CHECK_THROWS_AS(enumerate_bruteforce(e8, override_only), CapExceeded);  // still above 10^7
    CHECK_THROWS_AS(enumerate_bruteforce(RootSystem({Family::E, 7})), CapExceeded);
    // Small quotients of E8 need no full-group enumeration.
    NodeSet levi = NodeSet::all(8);
    levi.erase(7);
    CHECK(minimal_coset_reps(e8, levi).representatives.size() == 240);
  }
}
