#include <doctest.h>
#include <omp.h>

#include "flagvar/kernels.hpp"

using namespace flagvar;

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel BFS produce identical graded output") {
    for (int threads : {1, 3, 8}) {
      omp_set_num_threads(threads);
      CAPTURE(threads);
      for (CartanType t : {CartanType{Family::A, 4}, CartanType{Family::B, 3}, CartanType{Family::D, 4},
                           CartanType{Family::G, 2}, CartanType{Family::F, 4}, CartanType{Family::E, 6}}) {
        CAPTURE(t.label());
        const RootSystem rs(t);
        for (std::uint32_t mask : {0u, 1u, 5u, (1u << rs.rank()) - 2u}) {
          NodeSet levi;
          for (int i = 0; i < rs.rank(); ++i) {
            if ((mask >> i) & 1u) levi.insert(i);
          }
          const GradedElements serial = kernels::graded_bfs_serial(rs, levi, 1'000'000);
          const GradedElements parallel = kernels::graded_bfs_parallel(rs, levi, 1'000'000);
          CHECK(serial == parallel);
        }
      }
    }
    omp_set_num_threads(omp_get_num_procs());
  }

  TEST_CASE("output is sorted by (length, matrix)") {
    const RootSystem rs({Family::B, 4});
    const GradedElements g = kernels::graded_bfs_parallel(rs, NodeSet{}, 1'000'000);
    CHECK(g.elements.size() == 384);
    for (std::size_t k = 1; k < g.elements.size(); ++k) {
      const bool ordered = g.lengths[k - 1] < g.lengths[k] ||
                           (g.lengths[k - 1] == g.lengths[k] && g.elements[k - 1] < g.elements[k]);
      CHECK(ordered);
    }
  }

  TEST_CASE("length kernels agree") {
    omp_set_num_threads(4);
    const RootSystem rs({Family::E, 6});
    const GradedElements g = kernels::graded_bfs_parallel(rs, NodeSet{}, 1'000'000);
    const auto serial = kernels::lengths_serial(rs, g.elements);
    CHECK(serial == kernels::lengths_parallel(rs, g.elements));
    CHECK(serial == g.lengths);
    omp_set_num_threads(omp_get_num_procs());
  }
}
