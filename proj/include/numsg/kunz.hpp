// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Apery sets and Kunz coordinates.
//
// For a numerical semigroup S with multiplicity m, w(i) is the least element
// of S congruent to i modulo m, and w(i) = q_i m + i. The vector
// (q_1, ..., q_{m-1}) is the Kunz coordinate vector of S; it determines S,
// its genus is q_1 + ... + q_{m-1} and F(S) = max w(i) - m.
//
// This file also checks the two integer systems whose solutions are the Kunz
// vectors of L(m, F) (the "membership" system) and of the irreducible
// members of L(m, F) (the "irreducible" system). Checks short-circuit on the
// first violated constraint and report which one failed.

#ifndef NUMSG_KUNZ_HPP_
#define NUMSG_KUNZ_HPP_

#include <algorithm>  // for sort, max_element
#include <cstddef>    // for size_t
#include <numeric>    // for accumulate
#include <optional>   // for optional
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "errors.hpp"
#include "numerical_semigroup.hpp"

namespace numsg {

  //! Apery set of a semigroup with respect to n, indexed by residue:
  //! element(i) is the least member congruent to i modulo n.
  class AperySet {
   public:
    AperySet(int_type n, std::vector<int_type> by_residue)
        : _n(n), _w(std::move(by_residue)) {
      if (_n < 1 || static_cast<int_type>(_w.size()) != _n) {
        throw InvalidInput("an Apery set with respect to "
                           + std::to_string(_n) + " needs exactly "
                           + std::to_string(_n) + " elements");
      }
    }

    [[nodiscard]] int_type modulus() const noexcept {
      return _n;
    }

    [[nodiscard]] int_type element(int_type residue) const {
      return _w.at(static_cast<std::size_t>(residue));
    }

    [[nodiscard]] std::vector<int_type> const& by_residue() const noexcept {
      return _w;
    }

    [[nodiscard]] std::vector<int_type> sorted() const {
      auto out = _w;
      std::sort(out.begin(), out.end());
      return out;
    }

    friend bool operator==(AperySet const&, AperySet const&) = default;

   private:
    int_type              _n;
    std::vector<int_type> _w;
  };

  //! Ap(S, n) = {s in S : s - n not in S}. Requires n in S and n > 0.
  inline AperySet apery_set(NumericalSemigroup const& s, int_type n) {
    if (n <= 0 || !s.contains(n)) {
      throw InvalidInput("Apery set requested relative to "
                         + std::to_string(n) + ", which is not a positive "
                         + "element of " + to_string(s));
    }
    std::vector<int_type> w(static_cast<std::size_t>(n), -1);
    w[0]              = 0;
    std::size_t found = 1;
    for (int_type x = 1; found < w.size(); ++x) {
      auto const r = static_cast<std::size_t>(x % n);
      if (w[r] < 0 && s.contains(x)) {
        w[r] = x;
        ++found;
      }
    }
    return AperySet(n, std::move(w));
  }

  //! Kunz coordinates (q_1, ..., q_{m-1}) relative to the multiplicity m.
  struct KunzVector {
    int_type              m;
    std::vector<int_type> coords;

    friend bool operator==(KunzVector const&, KunzVector const&) = default;
  };

  inline KunzVector kunz_vector(NumericalSemigroup const& s) {
    int_type const m = s.multiplicity();
    if (m < 2) {
      throw PreconditionViolation("Kunz coordinates need multiplicity >= 2");
    }
    auto const            ap = apery_set(s, m);
    std::vector<int_type> q;
    for (int_type i = 1; i < m; ++i) {
      q.push_back((ap.element(i) - i) / m);
    }
    return KunzVector{m, std::move(q)};
  }

  //! g(S) = q_1 + ... + q_{m-1}.
  inline int_type genus_from_kunz(KunzVector const& v) {
    return std::accumulate(v.coords.begin(), v.coords.end(), int_type{0});
  }

  //! Outcome of a system check; \c violated names the first failed
  //! constraint.
  struct SystemCheck {
    bool        ok = true;
    std::string violated;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  namespace detail {
    inline SystemCheck fail(std::string what) {
      return SystemCheck{false, std::move(what)};
    }

    inline SystemCheck check_shape(KunzVector const& v) {
      if (v.m < 2) {
        return fail("multiplicity " + std::to_string(v.m) + " < 2");
      }
      if (static_cast<int_type>(v.coords.size()) != v.m - 1) {
        return fail("expected " + std::to_string(v.m - 1) + " coordinates, got "
                    + std::to_string(v.coords.size()));
      }
      for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i] < 1) {
          return fail("x_" + std::to_string(i + 1) + " >= 1");
        }
      }
      return {};
    }

    // x_i + x_j - x_{(i+j) mod m} >= -floor((i+j)/m), 1 <= i <= j <= m-1,
    // i + j != m.
    inline SystemCheck check_superadditivity(KunzVector const& v) {
      int_type const m = v.m;
      auto           x = [&v](int_type i) {
        return v.coords[static_cast<std::size_t>(i - 1)];
      };
      for (int_type i = 1; i < m; ++i) {
        for (int_type j = i; j < m; ++j) {
          if (i + j == m) {
            continue;
          }
          int_type const delta = (i + j) / m;
          if (x(i) + x(j) - x(i + j - m * delta) < -delta) {
            return fail("x_" + std::to_string(i) + " + x_" + std::to_string(j)
                        + " - x_" + std::to_string(i + j - m * delta)
                        + " >= " + std::to_string(-delta));
          }
        }
      }
      return {};
    }
  }  // namespace detail

  //! The semigroup whose Kunz vector is \p v. Throws NotNumericalSemigroup
  //! when \p v is not a valid Kunz vector.
  inline NumericalSemigroup semigroup_from_kunz(KunzVector const& v) {
    if (auto c = detail::check_shape(v); !c) {
      throw NotNumericalSemigroup("invalid Kunz vector: " + c.violated);
    }
    if (auto c = detail::check_superadditivity(v); !c) {
      throw NotNumericalSemigroup("Kunz vector is not superadditive: "
                                  + c.violated);
    }
    int_type const        m = v.m;
    std::vector<int_type> w{0};
    for (int_type i = 1; i < m; ++i) {
      w.push_back(v.coords[static_cast<std::size_t>(i - 1)] * m + i);
    }
    int_type const F = *std::max_element(w.begin(), w.end()) - m;
    if (F > max_frobenius) {
      throw LimitExceeded("Frobenius number " + std::to_string(F)
                          + " exceeds the supported bound");
    }
    std::vector<int_type> small;
    for (int_type x = 0; x <= F + 1; ++x) {
      if (x >= w[static_cast<std::size_t>(x % m)]) {
        small.push_back(x);
      }
    }
    return detail::Unchecked::make(F, std::move(small));
  }

  //! Does \p v satisfy the system whose integer solutions are the Kunz
  //! vectors of the semigroups with multiplicity v.m and Frobenius number
  //! \p F? The pinned coordinate is x_i = (F - i)/m + 1 for i = F mod m; the
  //! others satisfy x_i < (F - i)/m + 1, evaluated as w(i) < F + m.
  inline SystemCheck check_membership_system(KunzVector const& v, int_type F) {
    if (auto c = detail::check_shape(v); !c) {
      return c;
    }
    int_type const m = v.m;
    if (F < 1) {
      return detail::fail("F = " + std::to_string(F) + " >= 1");
    }
    if (F % m == 0) {
      return detail::fail("no coordinate can be pinned: m = "
                          + std::to_string(m) + " divides F = "
                          + std::to_string(F));
    }
    int_type const pinned = F % m;
    for (int_type i = 1; i < m; ++i) {
      int_type const w = v.coords[static_cast<std::size_t>(i - 1)] * m + i;
      if (i == pinned) {
        if (w != F + m) {
          return detail::fail("x_" + std::to_string(i)
                              + " = " + std::to_string((F - i) / m + 1));
        }
      } else if (w >= F + m) {
        return detail::fail("x_" + std::to_string(i) + " < (F - "
                            + std::to_string(i) + ")/m + 1");
      }
    }
    return detail::check_superadditivity(v);
  }

  inline bool satisfies_membership_system(KunzVector const& v, int_type F) {
    return static_cast<bool>(check_membership_system(v, F));
  }

  //! Membership system plus x_1 + ... + x_{m-1} = ceil((F + 1)/2) and
  //! x_i + x_j + d1 = floor(F/m) + 1 whenever 1 <= i <= j <= m-1 and
  //! i + j = F mod m, with d1 = floor((i + j)/m); that is,
  //! w(i) + w(j) = F + m. For even F the pair i = j = (F/2) mod m is
  //! skipped, since there w(i) = F/2 + m.
  //!
  //! With q, r the quotient and remainder of ceil((F + 1)/2) by m, the right
  //! hand side is 2q + 1 + floor((2r - 1)/m) for odd F and
  //! 2q + 1 + floor((2r - 2)/m) for even F.
  inline SystemCheck check_irreducible_system(KunzVector const& v, int_type F) {
    if (auto c = check_membership_system(v, F); !c) {
      return c;
    }
    int_type const m    = v.m;
    int_type const half = detail::ceil_div(F + 1, 2);
    if (genus_from_kunz(v) != half) {
      return detail::fail("x_1 + ... + x_{m-1} = " + std::to_string(half));
    }
    int_type const q   = half / m;
    int_type const r   = half % m;
    int_type const d2  = detail::floor_div(2 * r - 1 - (F + 1) % 2, m);
    int_type const mid = F % 2 == 0 ? (F / 2) % m : -1;
    for (int_type i = 1; i < m; ++i) {
      for (int_type j = i; j < m; ++j) {
        if ((i + j) % m != F % m || (i == j && i == mid)) {
          continue;
        }
        int_type const d1  = (i + j) / m;
        int_type const lhs = v.coords[static_cast<std::size_t>(i - 1)]
                             + v.coords[static_cast<std::size_t>(j - 1)] + d1;
        if (lhs != 2 * q + 1 + d2) {
          return detail::fail("x_" + std::to_string(i) + " + x_"
                              + std::to_string(j) + " + " + std::to_string(d1)
                              + " = " + std::to_string(2 * q + 1 + d2));
        }
      }
    }
    return {};
  }

  inline bool satisfies_irreducible_system(KunzVector const& v, int_type F) {
    return static_cast<bool>(check_irreducible_system(v, F));
  }

  //! Apery set of the parent S of a tree edge from that of the child T:
  //!
  //!   Ap(S, m) = (Ap(T, m) \ {r(T), m + F - r(T)}) u {F - r(T), m + r(T)}.
  //!
  //! \p child_ratio is r(T). Throws InconsistentEdge when the removed
  //! elements are not where the formula expects them.
  inline AperySet apery_update_along_edge(AperySet const& child_apery,
                                          int_type        child_ratio,
                                          int_type        F) {
    int_type const m  = child_apery.modulus();
    int_type const r  = child_ratio;
    if (m < 2 || r <= 0 || 2 * r >= F) {
      throw InconsistentEdge("ratio " + std::to_string(r)
                             + " cannot be the ratio of a non-root node for F = "
                             + std::to_string(F));
    }
    auto       w  = child_apery.by_residue();
    auto const ir = static_cast<std::size_t>(r % m);
    auto const is = static_cast<std::size_t>((F - r) % m);
    if (ir == 0 || ir == is || w[ir] != r || w[is] != m + F - r) {
      throw InconsistentEdge("Apery set does not contain " + std::to_string(r)
                             + " and " + std::to_string(m + F - r)
                             + " in their residue classes");
    }
    w[ir] = m + r;
    w[is] = F - r;
    return AperySet(m, std::move(w));
  }

}  // namespace numsg

#endif  // NUMSG_KUNZ_HPP_
