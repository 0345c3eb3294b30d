// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Exhaustive search over gap sets, used as ground truth for the enumeration
// pipeline. Every candidate gap set G u {F}, G a subset of {1, ..., F - 1},
// is tested for additive closure of its complement with plain bit
// operations. Nothing here calls the generator, tree or class code.

#ifndef NUMSG_ORACLE_HPP_
#define NUMSG_ORACLE_HPP_

#include <algorithm>  // for sort
#include <bit>        // for popcount, countr_zero
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <optional>   // for optional
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "detail/parallel.hpp"
#include "errors.hpp"
#include "numerical_semigroup.hpp"

namespace numsg {

  struct OracleConfig {
    //! Refuse any F above this; at most hard_max_frobenius.
    int_type max_frobenius = 20;
    std::optional<int_type> with_multiplicity;
    std::optional<int_type> with_genus;
    unsigned                workers = 1;

    static constexpr int_type hard_max_frobenius = 24;
  };

  namespace oracle_detail {
    using mask_type = std::uint32_t;

    struct Candidate {
      mask_type elements;  // bits 0..F+1
      mask_type gaps;      // bits 1..F
    };

    inline void check_range(int_type F, OracleConfig const& cfg) {
      if (cfg.max_frobenius > OracleConfig::hard_max_frobenius) {
        throw InvalidInput("oracle cap " + std::to_string(cfg.max_frobenius)
                           + " is above the hard maximum "
                           + std::to_string(OracleConfig::hard_max_frobenius)
                           + " (2^(F-1) candidates are scanned)");
      }
      if (F < 1) {
        throw InvalidInput("the oracle needs F >= 1, got " + std::to_string(F));
      }
      if (F > cfg.max_frobenius) {
        throw LimitExceeded("the oracle scans 2^(F-1) gap sets; F = "
                            + std::to_string(F) + " is above the cap of "
                            + std::to_string(cfg.max_frobenius));
      }
    }

    inline bool closed(Candidate const& c, int_type F) {
      for (int_type a = 1; a < F; ++a) {
        if (((c.elements >> a) & 1U) && ((c.elements << a) & c.gaps) != 0) {
          return false;
        }
      }
      return true;
    }

    // No gap x with F - x also a gap and 2x != F.
    inline bool irreducible(Candidate const& c, int_type F) {
      for (int_type x = 1; x < F; ++x) {
        if (((c.gaps >> x) & 1U) && ((c.gaps >> (F - x)) & 1U) && 2 * x != F) {
          return false;
        }
      }
      return true;
    }

    template <typename Keep>
    std::vector<NumericalSemigroup>
    scan(int_type F, OracleConfig const& cfg, Keep&& keep) {
      check_range(F, cfg);
      mask_type const total = mask_type{1} << (F - 1);
      mask_type const all   = (mask_type{1} << (F + 2)) - 1;

      unsigned const           nchunks = cfg.workers == 0 ? 1 : cfg.workers;
      std::vector<std::size_t> chunks(nchunks);
      for (std::size_t i = 0; i < nchunks; ++i) {
        chunks[i] = i;
      }
      auto found = detail::parallel_map(
          chunks, nchunks, [&](std::size_t chunk) {
            std::vector<mask_type> out;
            mask_type const lo = static_cast<mask_type>(
                (std::uint64_t{total} * chunk) / nchunks);
            mask_type const hi = static_cast<mask_type>(
                (std::uint64_t{total} * (chunk + 1)) / nchunks);
            for (mask_type g = lo; g < hi; ++g) {
              Candidate c;
              c.gaps     = (g << 1) | (mask_type{1} << F);
              c.elements = all & ~c.gaps;
              if (cfg.with_genus && std::popcount(c.gaps) != *cfg.with_genus) {
                continue;
              }
              if (cfg.with_multiplicity
                  && std::countr_zero(c.elements >> 1) + 1
                         != *cfg.with_multiplicity) {
                continue;
              }
              if (closed(c, F) && keep(c)) {
                out.push_back(c.elements);
              }
            }
            return out;
          });

      std::vector<NumericalSemigroup> result;
      for (auto const& part : found) {
        for (mask_type e : part) {
          std::vector<int_type> small;
          for (int_type x = 0; x <= F + 1; ++x) {
            if ((e >> x) & 1U) {
              small.push_back(x);
            }
          }
          result.push_back(
              NumericalSemigroup::from_small_elements(std::move(small), F));
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }
  }  // namespace oracle_detail

  //! Every numerical semigroup with Frobenius number \p F, optionally
  //! restricted by multiplicity and genus; sorted.
  inline std::vector<NumericalSemigroup>
  brute_force_L(int_type F, OracleConfig const& cfg = {}) {
    return oracle_detail::scan(
        F, cfg, [](oracle_detail::Candidate const&) { return true; });
  }

  //! The irreducible members of brute_force_L(F, cfg), detected by the
  //! absence of gaps x, F - x with x != F / 2.
  inline std::vector<NumericalSemigroup>
  brute_force_irreducibles(int_type F, OracleConfig const& cfg = {}) {
    return oracle_detail::scan(F, cfg, [F](oracle_detail::Candidate const& c) {
      return oracle_detail::irreducible(c, F);
    });
  }

}  // namespace numsg

#endif  // NUMSG_ORACLE_HPP_
