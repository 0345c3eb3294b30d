// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// This file contains the immutable value type NumericalSemigroup and the
// GeneratorSet strong type. A numerical semigroup S is stored canonically by
// its Frobenius number F and its "small elements", the members of S in
// [0, F + 1]; every integer greater than F belongs to S.

#ifndef NUMSG_NUMERICAL_SEMIGROUP_HPP_
#define NUMSG_NUMERICAL_SEMIGROUP_HPP_

#include <algorithm>   // for sort, unique, binary_search
#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for int64_t
#include <functional>  // for hash, greater
#include <initializer_list>  // for initializer_list
#include <limits>      // for numeric_limits
#include <numeric>     // for gcd
#include <queue>       // for priority_queue
#include <span>        // for span
#include <string>      // for string, to_string
#include <utility>     // for move, pair
#include <vector>      // for vector

#include "errors.hpp"

namespace numsg {

  using int_type = std::int64_t;

  //! Largest Frobenius number accepted by the single-semigroup operations.
  inline constexpr int_type max_frobenius = 1'000'000;

  namespace detail {
    // floor(a / b) for b > 0
    constexpr int_type floor_div(int_type a, int_type b) noexcept {
      int_type q = a / b;
      return (a % b != 0 && a < 0) ? q - 1 : q;
    }

    // ceil(a / b) for b > 0
    constexpr int_type ceil_div(int_type a, int_type b) noexcept {
      return -floor_div(-a, b);
    }

    inline std::string join(std::span<int_type const> xs, char sep = ',') {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
          out += sep;
        }
        out += std::to_string(xs[i]);
      }
      return out;
    }
  }  // namespace detail

  //! A strictly increasing list of positive integers.
  //!
  //! The constructor sorts and removes duplicates; it does not check that the
  //! gcd is 1 (that is the job of NumericalSemigroup::from_generators).
  class GeneratorSet {
   public:
    GeneratorSet() = default;

    explicit GeneratorSet(std::vector<int_type> gens) : _gens(std::move(gens)) {
      std::sort(_gens.begin(), _gens.end());
      _gens.erase(std::unique(_gens.begin(), _gens.end()), _gens.end());
      if (!_gens.empty() && _gens.front() <= 0) {
        throw InvalidInput("generators must be positive integers, found "
                           + std::to_string(_gens.front()));
      }
    }

    GeneratorSet(std::initializer_list<int_type> gens)
        : GeneratorSet(std::vector<int_type>(gens)) {}

    [[nodiscard]] std::span<int_type const> values() const noexcept {
      return _gens;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _gens.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _gens.empty();
    }
    [[nodiscard]] auto begin() const noexcept {
      return _gens.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _gens.cend();
    }
    [[nodiscard]] int_type operator[](std::size_t i) const {
      return _gens[i];
    }

    friend bool operator==(GeneratorSet const&, GeneratorSet const&) = default;

   private:
    std::vector<int_type> _gens;
  };

  class NumericalSemigroup;

  namespace detail {
    struct Unchecked;
  }

  //! Immutable numerical semigroup.
  //!
  //! Equality and ordering are structural: two values compare by their small
  //! elements lexicographically (the small elements end in F + 1, so they
  //! determine F).
  class NumericalSemigroup {
   public:
    //! The semigroup N, encoded with Frobenius number -1.
    NumericalSemigroup() : _frobenius(-1), _small{0}, _member{true} {}

    //! The monoid generated by \p gens.
    //!
    //! Throws InvalidInput on an empty list and NotNumericalSemigroup when the
    //! gcd of the generators is not 1.
    static NumericalSemigroup from_generators(GeneratorSet const& gens) {
      if (gens.empty()) {
        throw InvalidInput("empty generator list");
      }
      int_type g = 0;
      for (int_type x : gens) {
        g = std::gcd(g, x);
      }
      if (g != 1) {
        throw NotNumericalSemigroup("not a numerical semigroup: gcd of {"
                                    + detail::join(gens.values())
                                    + "} is " + std::to_string(g));
      }
      int_type const m = gens[0];
      if (m == 1) {
        return NumericalSemigroup();
      }
      if (m > max_frobenius + 1) {
        throw LimitExceeded("multiplicity " + std::to_string(m)
                            + " exceeds the supported bound");
      }
      // Least element of each residue class modulo m (shortest paths in the
      // residue graph); these determine the whole semigroup.
      auto const mm = static_cast<std::size_t>(m);
      std::vector<int_type> w(mm, std::numeric_limits<int_type>::max());
      w[0] = 0;
      using entry = std::pair<int_type, std::size_t>;
      std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
      queue.emplace(0, 0);
      while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != w[r]) {
          continue;
        }
        for (int_type x : gens) {
          auto const nr = (r + static_cast<std::size_t>(x % m)) % mm;
          if (d + x < w[nr]) {
            w[nr] = d + x;
            queue.emplace(w[nr], nr);
          }
        }
      }
      int_type const frob = *std::max_element(w.begin(), w.end()) - m;
      if (frob > max_frobenius) {
        throw LimitExceeded("Frobenius number " + std::to_string(frob)
                            + " exceeds the supported bound "
                            + std::to_string(max_frobenius));
      }
      std::vector<int_type> small;
      for (int_type x = 0; x <= frob + 1; ++x) {
        if (x >= w[static_cast<std::size_t>(x % m)]) {
          small.push_back(x);
        }
      }
      return NumericalSemigroup(frob, std::move(small));
    }

    //! Validate and wrap a small-elements list.
    //!
    //! The list must be strictly increasing, start with 0, end with
    //! \p frobenius + 1, not contain \p frobenius, and be closed under
    //! addition up to \p frobenius.
    static NumericalSemigroup from_small_elements(std::vector<int_type> elems,
                                                  int_type frobenius) {
      if (frobenius < -1) {
        throw InvalidInput("Frobenius number must be at least -1, found "
                           + std::to_string(frobenius));
      }
      if (frobenius > max_frobenius) {
        throw LimitExceeded("Frobenius number " + std::to_string(frobenius)
                            + " exceeds the supported bound "
                            + std::to_string(max_frobenius));
      }
      if (elems.empty() || elems.front() != 0) {
        throw NotNumericalSemigroup("small elements must start with 0");
      }
      for (std::size_t i = 1; i < elems.size(); ++i) {
        if (elems[i] <= elems[i - 1]) {
          throw InvalidInput("small elements must be strictly increasing");
        }
      }
      if (elems.back() != frobenius + 1) {
        throw NotNumericalSemigroup(
            "small elements must end with F + 1 = "
            + std::to_string(frobenius + 1) + ", found "
            + std::to_string(elems.back()));
      }
      if (std::binary_search(elems.begin(), elems.end(), frobenius)) {
        throw NotNumericalSemigroup("the Frobenius number "
                                    + std::to_string(frobenius)
                                    + " is listed as an element");
      }
      NumericalSemigroup s(frobenius, std::move(elems));
      auto const& small = s._small;
      for (std::size_t i = 1; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
          int_type const sum = small[i] + small[j];
          if (sum > frobenius) {
            break;
          }
          if (!s.contains(sum)) {
            throw NotNumericalSemigroup(
                "not closed under addition: " + std::to_string(small[i]) + " + "
                + std::to_string(small[j]) + " = " + std::to_string(sum)
                + " is missing");
          }
        }
      }
      return s;
    }

    [[nodiscard]] bool contains(int_type x) const noexcept {
      if (x < 0) {
        return false;
      }
      if (x > _frobenius) {
        return true;
      }
      return _member[static_cast<std::size_t>(x)];
    }

    [[nodiscard]] int_type frobenius() const noexcept {
      return _frobenius;
    }

    [[nodiscard]] int_type multiplicity() const noexcept {
      return _frobenius < 0 ? 1 : _small[1];
    }

    //! Number of gaps.
    [[nodiscard]] int_type genus() const noexcept {
      return (_frobenius + 1) - static_cast<int_type>(_small.size() - 1);
    }

    //! ceil((F + 1) / m), so that F + 1 = depth * m - r with 0 <= r < m.
    [[nodiscard]] int_type depth() const noexcept {
      return detail::ceil_div(_frobenius + 1, multiplicity());
    }

    //! Least element that is not a multiple of the multiplicity.
    [[nodiscard]] int_type ratio() const {
      if (_frobenius < 0) {
        throw UndefinedRatio("the ratio of N is undefined");
      }
      int_type const m = multiplicity();
      for (int_type x : _small) {
        if (x % m != 0) {
          return x;
        }
      }
      int_type x = _frobenius + 2;
      while (x % m == 0) {
        ++x;
      }
      return x;
    }

    [[nodiscard]] std::vector<int_type> const& small_elements() const noexcept {
      return _small;
    }

    [[nodiscard]] std::vector<int_type> gaps() const {
      std::vector<int_type> out;
      for (int_type x = 1; x <= _frobenius; ++x) {
        if (!contains(x)) {
          out.push_back(x);
        }
      }
      return out;
    }

    //! The minimal system of generators.
    //!
    //! Every minimal generator other than m is the least element of its
    //! residue class modulo m, and such an element is minimal exactly when
    //! it is not the sum of two nonzero elements of the same kind.
    [[nodiscard]] GeneratorSet minimal_generators() const {
      if (_frobenius < 0) {
        return GeneratorSet{1};
      }
      int_type const m   = multiplicity();
      auto const     mm  = static_cast<std::size_t>(m);
      auto           apy = std::vector<int_type>(mm, -1);
      apy[0]             = 0;
      std::size_t found  = 1;
      for (int_type x = 1; found < mm; ++x) {
        auto const r = static_cast<std::size_t>(x % m);
        if (apy[r] < 0 && contains(x)) {
          apy[r] = x;
          ++found;
        }
      }
      std::vector<int_type> gens{m};
      for (std::size_t i = 1; i < mm; ++i) {
        bool minimal = true;
        for (std::size_t j = 1; j < mm && minimal; ++j) {
          std::size_t const k = (i + mm - j) % mm;
          if (k != 0 && apy[j] + apy[k] == apy[i]) {
            minimal = false;
          }
        }
        if (minimal) {
          gens.push_back(apy[i]);
        }
      }
      return GeneratorSet(std::move(gens));
    }

    //! genus == ceil((F + 1) / 2).
    [[nodiscard]] bool is_irreducible() const noexcept {
      return genus() == detail::ceil_div(_frobenius + 1, 2);
    }

    [[nodiscard]] bool is_symmetric() const noexcept {
      return is_irreducible() && _frobenius % 2 != 0;
    }

    [[nodiscard]] bool is_pseudo_symmetric() const noexcept {
      return is_irreducible() && _frobenius >= 0 && _frobenius % 2 == 0;
    }

    //! True when every element of \p this belongs to \p other.
    [[nodiscard]] bool is_subset_of(NumericalSemigroup const& other) const {
      if (other._frobenius > _frobenius) {
        for (int_type x = _frobenius + 1; x <= other._frobenius; ++x) {
          if (!other.contains(x)) {
            return false;
          }
        }
      }
      return std::all_of(_small.begin(), _small.end(), [&](int_type x) {
        return other.contains(x);
      });
    }

    friend bool operator==(NumericalSemigroup const& a,
                           NumericalSemigroup const& b) noexcept {
      return a._small == b._small;
    }

    friend std::strong_ordering operator<=>(NumericalSemigroup const& a,
                                            NumericalSemigroup const& b) {
      return a._small <=> b._small;
    }

   private:
    friend struct detail::Unchecked;

    NumericalSemigroup(int_type frobenius, std::vector<int_type> small)
        : _frobenius(frobenius),
          _small(std::move(small)),
          _member(static_cast<std::size_t>(frobenius + 2), false) {
      for (int_type x : _small) {
        _member[static_cast<std::size_t>(x)] = true;
      }
    }

    int_type              _frobenius;
    std::vector<int_type> _small;
    std::vector<bool>     _member;
  };

  namespace detail {
    // Construction without the closure check, for callers that hold a proof
    // that the set is a numerical semigroup.
    struct Unchecked {
      static NumericalSemigroup make(int_type frobenius,
                                     std::vector<int_type> small) {
        return NumericalSemigroup(frobenius, std::move(small));
      }
    };
  }  // namespace detail

  //! Human readable form, "<a,b,c>" from the minimal generators.
  inline std::string to_string(NumericalSemigroup const& s) {
    auto const gens = s.minimal_generators();
    return "<" + detail::join(gens.values()) + ">";
  }

  //! Sort and deduplicate a list of semigroups.
  inline void sort_unique(std::vector<NumericalSemigroup>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

}  // namespace numsg

template <>
struct std::hash<numsg::NumericalSemigroup> {
  std::size_t operator()(numsg::NumericalSemigroup const& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : s.small_elements()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};

#endif  // NUMSG_NUMERICAL_SEMIGROUP_HPP_
