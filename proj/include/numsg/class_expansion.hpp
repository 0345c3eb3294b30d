// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Two numerical semigroups with multiplicity m and Frobenius number F are
// equivalent when they have the same elements strictly between m and F / 2
// (the set theta(S)). When m >= 3, F > 2m and m does not divide F, each class
// [S] is an interval of the inclusion lattice:
//
//   * its minimum Z([S]) = <theta(S) u {m}> u {F + 1, ->} (the "floor"),
//   * its maximum is its unique irreducible member U([S]) (the "seed"),
//   * its members are Z([S]) u T(B) for B a subset of D(S) = U([S]) \ Z([S]),
//     where T(B) is the union of the tails (b + Z([S])) n D(S), b in B.
//
// Enumerating the tree of irreducibles and expanding every class therefore
// lists every numerical semigroup with multiplicity m and Frobenius number F,
// each exactly once. The remaining (m, F) pairs have closed forms.

#ifndef NUMSG_CLASS_EXPANSION_HPP_
#define NUMSG_CLASS_EXPANSION_HPP_

#include <algorithm>      // for sort, set_union, binary_search
#include <bit>            // for popcount
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <iterator>       // for back_inserter
#include <map>            // for map
#include <optional>       // for optional
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "detail/parallel.hpp"
#include "errors.hpp"
#include "irreducible_tree.hpp"
#include "numerical_semigroup.hpp"

namespace numsg {

  //! Knobs shared by the enumeration routines.
  struct EnumerationOptions {
    //! Refuse to expand a class whose D(S) (or a depth-2 powerset base) has
    //! more elements than this. At most 64.
    std::size_t d_set_limit = 30;
    //! Number of threads used for independent pieces of work.
    unsigned workers = 1;
  };

  inline constexpr std::size_t max_d_set_limit = 64;

  //! True when some numerical semigroup has multiplicity \p m and Frobenius
  //! number \p F: either (m, F) = (1, -1), or F >= m - 1 >= 1 and m does not
  //! divide F.
  inline bool semigroup_exists(int_type m, int_type F) noexcept {
    if (m == 1 && F == -1) {
      return true;
    }
    return m >= 2 && F >= m - 1 && F % m != 0;
  }

  //! Elements s of \p s with m < s < F / 2.
  inline std::vector<int_type> theta(NumericalSemigroup const& s) {
    std::vector<int_type> out;
    int_type const        m = s.multiplicity();
    int_type const        F = s.frobenius();
    for (int_type x : s.small_elements()) {
      if (x > m && 2 * x < F) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! No minimal generator lies in [F / 2, F].
  inline bool is_homogeneous(NumericalSemigroup const& s) {
    int_type const F = s.frobenius();
    for (int_type x : s.minimal_generators()) {
      if (2 * x >= F && x <= F) {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    inline void check_class_hypotheses(NumericalSemigroup const& s) {
      int_type const m = s.multiplicity();
      int_type const F = s.frobenius();
      if (m < 3 || F <= 2 * m) {
        throw PreconditionViolation(
            "class machinery requires m >= 3 and F > 2m, got m = "
            + std::to_string(m) + ", F = " + std::to_string(F));
      }
    }

    inline void check_limit(std::size_t n, std::size_t limit, char const* what) {
      std::size_t const bound = std::min(limit, max_d_set_limit);
      if (n > bound) {
        throw LimitExceeded(std::string(what) + " has " + std::to_string(n)
                            + " elements, above the limit of "
                            + std::to_string(bound));
      }
    }

    inline std::vector<int_type> mask_to_set(std::uint64_t          mask,
                                             std::vector<int_type> const& d) {
      std::vector<int_type> out;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if ((mask >> i) & 1U) {
          out.push_back(d[i]);
        }
      }
      return out;
    }

    // All distinct unions of subfamilies of `tails` (including the empty
    // union), optionally dropping every union with more than `max_size`
    // elements; unions only grow, so pruning is exact.
    inline std::vector<std::uint64_t>
    distinct_unions(std::vector<std::uint64_t> const& tails,
                    std::optional<int>                max_size = std::nullopt) {
      std::vector<std::uint64_t>        family{0};
      std::unordered_set<std::uint64_t> seen{0};
      for (std::uint64_t t : tails) {
        std::size_t const n = family.size();
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t const u = family[i] | t;
          if (max_size && std::popcount(u) > *max_size) {
            continue;
          }
          if (seen.insert(u).second) {
            family.push_back(u);
          }
        }
      }
      return family;
    }

    // floor u X, where X is a subset of D(S); a numerical semigroup because
    // any two elements of X sum past F and X is closed under adding floor.
    inline NumericalSemigroup add_elements(NumericalSemigroup const&   floor,
                                           std::vector<int_type> const& x) {
      std::vector<int_type> small;
      small.reserve(floor.small_elements().size() + x.size());
      std::set_union(floor.small_elements().begin(),
                     floor.small_elements().end(),
                     x.begin(),
                     x.end(),
                     std::back_inserter(small));
      return Unchecked::make(floor.frobenius(), std::move(small));
    }
  }  // namespace detail

  //! Z([S]) = <theta(S) u {m}> u {F + 1, ->}, the least member of the class
  //! of \p s. Requires m >= 3 and F > 2m.
  inline NumericalSemigroup class_floor(NumericalSemigroup const& s) {
    detail::check_class_hypotheses(s);
    int_type const        m = s.multiplicity();
    int_type const        F = s.frobenius();
    std::vector<int_type> gens{m};
    auto const            th = theta(s);
    gens.insert(gens.end(), th.begin(), th.end());
    for (int_type x = F + 1; x <= F + m; ++x) {
      gens.push_back(x);
    }
    return NumericalSemigroup::from_generators(GeneratorSet(std::move(gens)));
  }

  //! U([S]) = S u {x not in S : F - x not in S, x > F / 2}, the unique
  //! irreducible member of the class of \p s.
  inline NumericalSemigroup irreducible_closure(NumericalSemigroup const& s) {
    detail::check_class_hypotheses(s);
    int_type const        F = s.frobenius();
    std::vector<int_type> small;
    for (int_type x = 0; x <= F + 1; ++x) {
      if (s.contains(x) || (2 * x > F && !s.contains(F - x))) {
        small.push_back(x);
      }
    }
    return NumericalSemigroup::from_small_elements(std::move(small), F);
  }

  //! T({d}) = (d + floor) n D for every d in \p d_set.
  inline std::map<int_type, std::vector<int_type>>
  singleton_tails(NumericalSemigroup const&    floor,
                  std::vector<int_type> const& d_set) {
    std::map<int_type, std::vector<int_type>> out;
    for (int_type d : d_set) {
      auto& tail = out[d];
      for (int_type z : floor.small_elements()) {
        if (std::binary_search(d_set.begin(), d_set.end(), d + z)) {
          tail.push_back(d + z);
        }
      }
    }
    return out;
  }

  //! The class of an irreducible seed, with the data used to build it.
  struct ClassExpansion {
    NumericalSemigroup                        seed;
    NumericalSemigroup                        floor;
    std::vector<int_type>                     d_set;
    std::map<int_type, std::vector<int_type>> singleton_tails;
    //! The distinct sets T(B), ordered by size and then lexicographically.
    std::vector<std::vector<int_type>> tail_sets;
    //! members[i] = floor u tail_sets[i].
    std::vector<NumericalSemigroup> members;
  };

  namespace detail {
    struct ClassSkeleton {
      NumericalSemigroup                        floor;
      std::vector<int_type>                     d_set;
      std::map<int_type, std::vector<int_type>> tails;
      std::vector<std::uint64_t>                tail_masks;
    };

    inline ClassSkeleton class_skeleton(NumericalSemigroup const& seed,
                                        std::size_t               limit) {
      detail::check_class_hypotheses(seed);
      if (!seed.is_irreducible()) {
        throw PreconditionViolation("class expansion needs an irreducible seed, "
                                    "got "
                                    + to_string(seed));
      }
      ClassSkeleton sk{class_floor(seed), {}, {}, {}};
      for (int_type x : seed.small_elements()) {
        if (!sk.floor.contains(x)) {
          sk.d_set.push_back(x);
        }
      }
      check_limit(sk.d_set.size(), limit, "D(S)");
      sk.tails = singleton_tails(sk.floor, sk.d_set);
      for (int_type d : sk.d_set) {
        std::uint64_t mask = 0;
        for (int_type t : sk.tails[d]) {
          auto const i = static_cast<std::size_t>(
              std::lower_bound(sk.d_set.begin(), sk.d_set.end(), t)
              - sk.d_set.begin());
          mask |= std::uint64_t{1} << i;
        }
        sk.tail_masks.push_back(mask);
      }
      return sk;
    }
  }  // namespace detail

  //! Every member of the class of the irreducible \p seed.
  //!
  //! Requires m >= 3 and F > 2m. Throws LimitExceeded when D(S) is larger
  //! than options.d_set_limit.
  inline ClassExpansion expand_class(NumericalSemigroup const& seed,
                                     EnumerationOptions const& options = {}) {
    auto sk     = detail::class_skeleton(seed, options.d_set_limit);
    auto family = detail::distinct_unions(sk.tail_masks);

    std::vector<std::vector<int_type>> sets;
    sets.reserve(family.size());
    for (auto mask : family) {
      sets.push_back(detail::mask_to_set(mask, sk.d_set));
    }
    std::sort(sets.begin(), sets.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::vector<NumericalSemigroup> members;
    members.reserve(sets.size());
    for (auto const& x : sets) {
      members.push_back(detail::add_elements(sk.floor, x));
    }
    return ClassExpansion{seed,
                          std::move(sk.floor),
                          std::move(sk.d_set),
                          std::move(sk.tails),
                          std::move(sets),
                          std::move(members)};
  }

  //! The members of the class of \p seed with genus \p g, sorted.
  //!
  //! These are floor u X with |X| = genus(floor) - g; an out-of-range \p g
  //! gives an empty result.
  inline std::vector<NumericalSemigroup>
  expand_class_with_genus(NumericalSemigroup const& seed,
                          int_type                  g,
                          EnumerationOptions const& options = {}) {
    auto           sk   = detail::class_skeleton(seed, options.d_set_limit);
    int_type const need = sk.floor.genus() - g;
    if (need < 0 || need > static_cast<int_type>(sk.d_set.size())) {
      return {};
    }
    auto family = detail::distinct_unions(sk.tail_masks, static_cast<int>(need));

    std::vector<NumericalSemigroup> out;
    for (auto mask : family) {
      if (std::popcount(mask) == need) {
        out.push_back(
            detail::add_elements(sk.floor, detail::mask_to_set(mask, sk.d_set)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace detail {
    // {0, m} u A u {F + 1, ->} for every A in {m + 1, ..., F - 1}, when
    // m < F < 2m.
    inline std::vector<NumericalSemigroup>
    depth_two_family(int_type m, int_type F, std::size_t limit) {
      auto const free = static_cast<std::size_t>(F - m - 1);
      check_limit(free, limit, "the depth-2 free set {m+1, ..., F-1}");
      std::vector<NumericalSemigroup> out;
      out.reserve(std::size_t{1} << free);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
        std::vector<int_type> small{0, m};
        for (std::size_t i = 0; i < free; ++i) {
          if ((mask >> i) & 1U) {
            small.push_back(m + 1 + static_cast<int_type>(i));
          }
        }
        small.push_back(F + 1);
        out.push_back(Unchecked::make(F, std::move(small)));
      }
      return out;
    }
  }  // namespace detail

  //! Every numerical semigroup with multiplicity \p m and Frobenius number
  //! \p F, sorted. Empty when there is none.
  inline std::vector<NumericalSemigroup>
  enumerate_L(int_type m, int_type F, EnumerationOptions const& options = {}) {
    if (!semigroup_exists(m, F)) {
      return {};
    }
    if (m == 1) {
      return {NumericalSemigroup()};
    }
    if (F == m - 1) {
      return {detail::Unchecked::make(F, {0, m})};
    }
    if (m == 2) {
      return {NumericalSemigroup::from_generators(GeneratorSet{2, F + 2})};
    }
    if (F < 2 * m) {
      auto out = detail::depth_two_family(m, F, options.d_set_limit);
      sort_unique(out);
      return out;
    }
    auto const tree    = enumerate_irreducibles(m, F, options.workers);
    auto const classes = detail::parallel_map(
        tree.nodes, options.workers, [&options](NumericalSemigroup const& s) {
          return expand_class(s, options).members;
        });
    std::vector<NumericalSemigroup> out;
    for (auto const& c : classes) {
      out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! The Frobenius numbers F with ceil(mg / (m - 1)) - 1 <= F <= 2g - 1 and
  //! m not dividing F. Requires 2 <= m <= g.
  inline std::vector<int_type> genus_range(int_type m, int_type g) {
    if (m < 2 || m > g) {
      throw PreconditionViolation("Frobenius range needs 2 <= m <= g, got m = "
                                  + std::to_string(m)
                                  + ", g = " + std::to_string(g));
    }
    std::vector<int_type> out;
    for (int_type F = detail::ceil_div(m * g, m - 1) - 1; F <= 2 * g - 1; ++F) {
      if (F % m != 0) {
        out.push_back(F);
      }
    }
    return out;
  }

  //! True when some numerical semigroup has multiplicity \p m and genus \p g.
  inline bool semigroup_exists_with_genus(int_type m, int_type g) noexcept {
    return (m == 1 && g == 0) || (m >= 2 && m <= g + 1);
  }

  //! Every numerical semigroup with multiplicity \p m, genus \p g and, when
  //! given, Frobenius number \p F; sorted.
  inline std::vector<NumericalSemigroup>
  enumerate_L_genus(int_type                  m,
                    int_type                  g,
                    std::optional<int_type>   F       = std::nullopt,
                    EnumerationOptions const& options = {}) {
    if (!semigroup_exists_with_genus(m, g)) {
      return {};
    }
    if (m == 1) {
      if (F && *F != -1) {
        return {};
      }
      return {NumericalSemigroup()};
    }
    if (m == g + 1) {
      if (F && *F != g) {
        return {};
      }
      return {detail::Unchecked::make(g, {0, m})};
    }
    std::vector<int_type> frobs = genus_range(m, g);
    if (F) {
      if (!std::binary_search(frobs.begin(), frobs.end(), *F)) {
        return {};
      }
      frobs = {*F};
    }
    std::vector<NumericalSemigroup> out;
    for (int_type f : frobs) {
      if (m >= 3 && f > 2 * m) {
        auto const tree  = enumerate_irreducibles(m, f, options.workers);
        auto const parts = detail::parallel_map(
            tree.nodes, options.workers, [&](NumericalSemigroup const& s) {
              return expand_class_with_genus(s, g, options);
            });
        for (auto const& p : parts) {
          out.insert(out.end(), p.begin(), p.end());
        }
      } else {
        for (auto& s : enumerate_L(m, f, options)) {
          if (s.genus() == g) {
            out.push_back(std::move(s));
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace numsg

#endif  // NUMSG_CLASS_EXPANSION_HPP_
