// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// The irreducible numerical semigroups with multiplicity m and Frobenius
// number F form a rooted tree. The root C(m, F) is the unique one whose ratio
// exceeds F / 2. Every other node T has as parent
//
//   (T \ {r(T)}) u {F - r(T)},
//
// and the children of a node S are obtained by swapping x for F - x, for each
// x in alpha(S). All functions here use root-to-leaves vocabulary: "parent" is
// the node closer to C(m, F).

#ifndef NUMSG_IRREDUCIBLE_TREE_HPP_
#define NUMSG_IRREDUCIBLE_TREE_HPP_

#include <algorithm>  // for sort, lower_bound
#include <cstddef>    // for size_t, ptrdiff_t
#include <optional>   // for optional, nullopt
#include <string>     // for string, to_string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "detail/parallel.hpp"
#include "errors.hpp"
#include "numerical_semigroup.hpp"

namespace numsg {

  //! True when some irreducible numerical semigroup has multiplicity \p m and
  //! Frobenius number \p F, that is 2m <= F + 2 and m does not divide F.
  //! Requires m >= 1 and F >= 3.
  inline bool irreducible_exists(int_type m, int_type F) {
    if (m < 1 || F < 3) {
      throw PreconditionViolation(
          "irreducible existence is decided for m >= 1 and F >= 3, got m = "
          + std::to_string(m) + ", F = " + std::to_string(F));
    }
    return 2 * m <= F + 2 && F % m != 0;
  }

  namespace detail {
    // (S \ {removed}) u {added}, checked for closure.
    inline NumericalSemigroup swap_element(NumericalSemigroup const& s,
                                           int_type                  removed,
                                           int_type                  added) {
      std::vector<int_type> small;
      small.reserve(s.small_elements().size());
      for (int_type x : s.small_elements()) {
        if (x != removed) {
          small.push_back(x);
        }
      }
      small.insert(std::lower_bound(small.begin(), small.end(), added), added);
      return NumericalSemigroup::from_small_elements(std::move(small),
                                                     s.frobenius());
    }

    // The generic generator formula for the root, valid for every m when F is
    // odd and for m != 3 when F is even. The extra generator F + m is
    // redundant but harmless.
    inline GeneratorSet root_generators_generic(int_type m, int_type F) {
      int_type const parity = F % 2;
      int_type const base   = (F + 2 - parity) / 2;
      int_type       r      = base % m;
      if (r == 0) {
        r = m;
      }
      std::vector<int_type> gens{m, F + m};
      for (int_type x = 0; x < m; ++x) {
        if (x != m - r && x != r - (2 - parity)) {
          gens.push_back(base + x);
        }
      }
      return GeneratorSet(std::move(gens));
    }

    inline void check_irreducible_mf(NumericalSemigroup const& s) {
      if (s.frobenius() < 3 || !s.is_irreducible()) {
        throw PreconditionViolation(
            "expected an irreducible numerical semigroup with F >= 3, got "
            + to_string(s));
      }
    }
  }  // namespace detail

  //! C(m, F), the unique irreducible semigroup with multiplicity m,
  //! Frobenius number F and ratio greater than F / 2.
  inline NumericalSemigroup root(int_type m, int_type F) {
    if (!irreducible_exists(m, F)) {
      throw NoIrreducibles("no irreducible numerical semigroup has m = "
                           + std::to_string(m) + " and F = "
                           + std::to_string(F));
    }
    if (F % 2 == 0 && m == 3) {
      return NumericalSemigroup::from_generators(
          GeneratorSet{3, F / 2 + 3, F + 3});
    }
    return NumericalSemigroup::from_generators(
        detail::root_generators_generic(m, F));
  }

  //! The minimal generators x of \p s that can be swapped for F - x to give a
  //! child in the tree: F/2 < x < F, 2x - F not in S, 3x != 2F, 4x != 3F and
  //! m < F - x < r(S).
  inline std::vector<int_type> alpha(NumericalSemigroup const& s) {
    detail::check_irreducible_mf(s);
    int_type const F = s.frobenius();
    int_type const m = s.multiplicity();
    int_type const r = s.ratio();

    std::vector<int_type> out;
    for (int_type x : s.minimal_generators()) {
      if (2 * x > F && x < F && !s.contains(2 * x - F) && 3 * x != 2 * F
          && 4 * x != 3 * F && m < F - x && F - x < r) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! The children of \p s, sorted.
  inline std::vector<NumericalSemigroup>
  children(NumericalSemigroup const& s) {
    std::vector<NumericalSemigroup> out;
    int_type const                  F = s.frobenius();
    for (int_type x : alpha(s)) {
      out.push_back(detail::swap_element(s, x, F - x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! The parent of \p s, or nothing when \p s is the root.
  inline std::optional<NumericalSemigroup>
  parent(NumericalSemigroup const& s) {
    detail::check_irreducible_mf(s);
    int_type const F = s.frobenius();
    int_type const r = s.ratio();
    if (2 * r > F) {
      return std::nullopt;
    }
    return detail::swap_element(s, r, F - r);
  }

  //! \p s followed by its ancestors, ending at the root.
  inline std::vector<NumericalSemigroup>
  path_to_root(NumericalSemigroup const& s) {
    std::vector<NumericalSemigroup> path{s};
    while (auto p = parent(path.back())) {
      path.push_back(std::move(*p));
    }
    return path;
  }

  //! Every irreducible numerical semigroup with given multiplicity and
  //! Frobenius number, with tree structure.
  //!
  //! Nodes are stored level by level starting from the root at index 0;
  //! within a level they are sorted. parent_index[0] is -1.
  struct IrreducibleTree {
    int_type                        m;
    int_type                        F;
    std::vector<NumericalSemigroup> nodes;
    std::vector<std::ptrdiff_t>     parent_index;

    [[nodiscard]] std::size_t size() const noexcept {
      return nodes.size();
    }

    [[nodiscard]] NumericalSemigroup const& root() const {
      return nodes.front();
    }

    [[nodiscard]] std::vector<std::size_t> children_of(std::size_t i) const {
      std::vector<std::size_t> out;
      for (std::size_t j = 0; j < parent_index.size(); ++j) {
        if (parent_index[j] == static_cast<std::ptrdiff_t>(i)) {
          out.push_back(j);
        }
      }
      return out;
    }
  };

  //! Breadth-first construction of the tree of irreducibles.
  //!
  //! Throws NoIrreducibles when irreducible_exists(m, F) is false. Each
  //! frontier is expanded by up to \p workers threads; the result does not
  //! depend on \p workers.
  inline IrreducibleTree enumerate_irreducibles(int_type m,
                                                int_type F,
                                                unsigned workers = 1) {
    IrreducibleTree tree{m, F, {root(m, F)}, {-1}};

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      auto kids = detail::parallel_map(
          frontier, workers, [&tree](std::size_t i) {
            return children(tree.nodes[i]);
          });
      std::vector<std::pair<NumericalSemigroup, std::size_t>> level;
      for (std::size_t k = 0; k < frontier.size(); ++k) {
        for (auto& c : kids[k]) {
          level.emplace_back(std::move(c), frontier[k]);
        }
      }
      std::sort(level.begin(), level.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      frontier.clear();
      for (auto& [node, p] : level) {
        frontier.push_back(tree.nodes.size());
        tree.nodes.push_back(std::move(node));
        tree.parent_index.push_back(static_cast<std::ptrdiff_t>(p));
      }
    }
    return tree;
  }

}  // namespace numsg

#endif  // NUMSG_IRREDUCIBLE_TREE_HPP_
