// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.

#include <algorithm>   // for max
#include <functional>  // for function
#include <random>      // for mt19937_64
#include <set>         // for set
#include <vector>      // for vector

#include "catch_amalgamated.hpp"

#include "numsg/irreducible_tree.hpp"
#include "numsg/kunz.hpp"
#include "numsg/oracle.hpp"
#include "support/brute.hpp"

namespace numsg {

  using V = std::vector<int_type>;

  namespace {
    NumericalSemigroup gen(std::initializer_list<int_type> g) {
      return NumericalSemigroup::from_generators(GeneratorSet(g));
    }

    // Calls fn on every vector with 1 <= x_i <= floor((F - i)/m) + 1.
    void for_each_in_box(int_type m, int_type F,
                         std::function<void(KunzVector const&)> const& fn) {
      KunzVector v{m, V(static_cast<std::size_t>(m - 1), 1)};
      V          hi;
      for (int_type i = 1; i < m; ++i) {
        hi.push_back(std::max<int_type>(1, (F - i) / m + 1));
      }
      while (true) {
        fn(v);
        std::size_t k = 0;
        while (k < hi.size() && v.coords[k] == hi[k]) {
          v.coords[k] = 1;
          ++k;
        }
        if (k == hi.size()) {
          return;
        }
        ++v.coords[k];
      }
    }
  }  // namespace

  TEST_CASE("apery_set", "[kunz]") {
    auto const s  = gen({5, 7, 9, 11});
    auto const ap = apery_set(s, 5);
    CHECK(ap.sorted() == V{0, 7, 9, 11, 18});
    CHECK(ap.by_residue() == V{0, 11, 7, 18, 9});
    CHECK(test::apery_by_definition(s, 5) == ap.sorted());
    CHECK(apery_set(s, 7).sorted() == test::apery_by_definition(s, 7));
    CHECK_THROWS_AS(apery_set(s, 8), InvalidInput);
    CHECK_THROWS_AS(apery_set(s, 0), InvalidInput);
    CHECK_THROWS_AS(AperySet(3, V{0, 4}), InvalidInput);
  }

  TEST_CASE("kunz_vector", "[kunz]") {
    auto const v = kunz_vector(gen({5, 7, 9, 11}));
    CHECK(v.m == 5);
    CHECK(v.coords == V{2, 1, 3, 1});
    CHECK(genus_from_kunz(v) == 7);
    CHECK(kunz_vector(gen({6, 8, 9})).coords == V{4, 1, 1, 2, 2});
    CHECK_THROWS_AS(kunz_vector(NumericalSemigroup()), PreconditionViolation);
  }

  TEST_CASE("semigroup_from_kunz", "[kunz]") {
    CHECK(semigroup_from_kunz({5, {2, 1, 3, 1}}) == gen({5, 7, 9, 11}));
    CHECK(semigroup_from_kunz({3, {1, 1}}) == gen({3, 4, 5}));
    // w(1) = 4, w(2) = 5, but 4 + 4 = 8 is less than w(2) = 11
    CHECK_THROWS_AS(semigroup_from_kunz({3, {1, 3}}), NotNumericalSemigroup);
    CHECK_THROWS_AS(semigroup_from_kunz({3, {1}}), NotNumericalSemigroup);
    CHECK_THROWS_AS(semigroup_from_kunz({3, {0, 1}}), NotNumericalSemigroup);
  }

  TEST_CASE("Kunz round trip and genus on random semigroups",
            "[kunz][property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      auto const s = NumericalSemigroup::from_generators(
          GeneratorSet(test::random_generators(rng, 12, 40)));
      if (s.multiplicity() < 2) {
        continue;
      }
      auto const v = kunz_vector(s);
      REQUIRE(semigroup_from_kunz(v) == s);
      REQUIRE(genus_from_kunz(v) == s.genus());
      REQUIRE(satisfies_membership_system(v, s.frobenius()));
      REQUIRE(satisfies_irreducible_system(v, s.frobenius())
              == s.is_irreducible());
    }
  }

  TEST_CASE("membership and irreducible systems: examples", "[kunz]") {
    KunzVector const v{5, {2, 1, 3, 1}};
    CHECK(satisfies_membership_system(v, 13));
    CHECK(satisfies_irreducible_system(v, 13));
    CHECK_FALSE(satisfies_membership_system(v, 12));
    CHECK_FALSE(satisfies_membership_system(v, 15));

    KunzVector const floor{5, {3, 3, 3, 2}};
    CHECK(semigroup_from_kunz(floor).frobenius() == 13);
    CHECK(satisfies_membership_system(floor, 13));
    auto const c = check_irreducible_system(floor, 13);
    CHECK_FALSE(c);
    CHECK(c.violated == "x_1 + ... + x_{m-1} = 7");

    CHECK(satisfies_irreducible_system(kunz_vector(gen({3, 7, 11})), 8));
    CHECK(satisfies_irreducible_system(kunz_vector(gen({6, 8, 9})), 19));
    // pseudo-symmetric: w(1) + w(3) = 6 + 13 = F + m, and w(2) = F/2 + m
    CHECK(satisfies_irreducible_system(kunz_vector(gen({5, 6, 13})), 14));
    CHECK(satisfies_irreducible_system(kunz_vector(gen({3, 5, 7})), 4));
    CHECK(satisfies_irreducible_system(kunz_vector(gen({4, 7, 9})), 10));

    CHECK_FALSE(check_membership_system({5, {2, 1, 3}}, 13));
    CHECK_FALSE(check_membership_system(v, 0));
    CHECK_FALSE(check_membership_system(v, 10));
  }

  TEST_CASE("membership system solutions are exactly L(m, F)",
            "[kunz][property]") {
    OracleConfig cfg;
    for (int_type F = 1; F <= 14; ++F) {
      for (int_type m = 2; m <= F + 1; ++m) {
        if (F % m == 0) {
          continue;
        }
        cfg.with_multiplicity = m;
        std::set<NumericalSemigroup> expected;
        for (auto const& s : brute_force_L(F, cfg)) {
          expected.insert(s);
        }
        std::set<NumericalSemigroup> expected_irr;
        for (auto const& s : brute_force_irreducibles(F, cfg)) {
          expected_irr.insert(s);
        }
        std::size_t solutions = 0;
        std::size_t irr       = 0;
        for_each_in_box(m, F, [&](KunzVector const& v) {
          bool const mem = satisfies_membership_system(v, F);
          bool const ip  = satisfies_irreducible_system(v, F);
          if (mem) {
            ++solutions;
            REQUIRE(expected.count(semigroup_from_kunz(v)) == 1);
          }
          if (ip) {
            ++irr;
            REQUIRE(expected_irr.count(semigroup_from_kunz(v)) == 1);
          }
        });
        REQUIRE(solutions == expected.size());
        REQUIRE(irr == expected_irr.size());
      }
    }
  }

  TEST_CASE("apery_update_along_edge", "[kunz]") {
    auto const child  = gen({5, 6, 9});
    auto const parent = gen({5, 7, 9, 11});
    CHECK(child.ratio() == 6);
    CHECK(apery_update_along_edge(apery_set(child, 5), 6, 13)
          == apery_set(parent, 5));

    CHECK_THROWS_AS(apery_update_along_edge(apery_set(parent, 5), 7, 13),
                    InconsistentEdge);
    CHECK_THROWS_AS(apery_update_along_edge(apery_set(child, 5), 4, 13),
                    InconsistentEdge);
  }

  TEST_CASE("apery_update_along_edge on every tree edge", "[kunz][property]") {
    for (int_type F = 3; F <= 30; ++F) {
      for (int_type m = 2; 2 * m <= F + 2; ++m) {
        if (F % m == 0) {
          continue;
        }
        auto const tree = enumerate_irreducibles(m, F);
        for (std::size_t i = 1; i < tree.size(); ++i) {
          auto const& c = tree.nodes[i];
          auto const& p =
              tree.nodes[static_cast<std::size_t>(tree.parent_index[i])];
          REQUIRE(apery_update_along_edge(apery_set(c, m), c.ratio(), F)
                  == apery_set(p, m));
        }
      }
    }
  }

}  // namespace numsg
