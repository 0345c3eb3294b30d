// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Command line front end. Kept in a header so the test suite can drive the
// parser and the dispatcher with string streams.
//
// Exit codes: 0 on success (empty results included), 1 when oracle-check
// finds a mismatch, 2 on an invalid query, 3 when a size limit is hit.

#ifndef NUMSG_CLI_HPP_
#define NUMSG_CLI_HPP_

#include <algorithm>  // for sort, count_if
#include <cstddef>    // for size_t, ptrdiff_t
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "class_expansion.hpp"
#include "errors.hpp"
#include "irreducible_tree.hpp"
#include "kunz.hpp"
#include "numerical_semigroup.hpp"
#include "oracle.hpp"
#include "output.hpp"

namespace numsg::cli {

  enum class Command {
    exists,
    irreducibles,
    enumerate,
    class_,
    genus_enumerate,
    kunz,
    oracle_check
  };

  enum class Format { text, json };

  struct Query {
    Command                 command = Command::exists;
    std::optional<int_type> m;
    std::optional<int_type> F;
    std::optional<int_type> g;
    std::optional<int_type> depth;
    std::vector<int_type>   generators;
    Format                  format      = Format::text;
    bool                    count_only  = false;
    bool                    with_kunz   = false;
    unsigned                workers     = 1;
    std::size_t             d_set_limit = 30;
  };

  struct ParseResult {
    std::optional<Query> query;
    int                  exit_code = 0;
  };

  inline constexpr char const* dset_limit_env = "SEMIGROUP_ENUM_DSET_LIMIT";

  inline ParseResult
  parse(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate numerical semigroups by multiplicity, Frobenius "
                 "number and genus",
                 "numsg"};
    app.require_subcommand(1);

    Query       q;
    std::string format = "text";
    int_type    m = 0, F = 0, g = 0, depth = 0;

    auto common = [&](CLI::App* sub, bool with_depth) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"text", "json"}));
      sub->add_flag("--count", q.count_only, "Print only the number of results");
      sub->add_flag("--kunz", q.with_kunz, "Include Kunz coordinates");
      sub->add_option("--workers", q.workers, "Worker threads")
          ->check(CLI::Range(1U, 1024U));
      sub->add_option("--d-set-limit",
                      q.d_set_limit,
                      "Largest D(S) a class expansion may enumerate")
          ->check(CLI::Range(std::size_t{1}, max_d_set_limit))
          ->envname(dset_limit_env);
      if (with_depth) {
        sub->add_option("--depth", depth, "Keep only semigroups of this depth")
            ->check(CLI::PositiveNumber);
      }
    };

    auto* exists = app.add_subcommand(
        "exists", "Decide whether L(m,F) and I(m,F) are nonempty");
    exists->add_option("m", m)->required();
    exists->add_option("F", F)->required();
    exists->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* irr = app.add_subcommand(
        "irreducibles", "List the tree of irreducibles with given m and F");
    irr->add_option("m", m)->required();
    irr->add_option("F", F)->required();
    common(irr, false);

    auto* en = app.add_subcommand(
        "enumerate", "List all semigroups with given multiplicity and Frobenius");
    en->add_option("m", m)->required();
    en->add_option("F", F)->required();
    common(en, true);

    auto* cl = app.add_subcommand(
        "class", "Expand the equivalence class of a semigroup");
    cl->add_option("--generators", q.generators, "Generators of a member")
        ->delimiter(',')
        ->required();
    auto* cl_genus = cl->add_option("--genus", g, "Keep members of this genus");
    common(cl, false);

    auto* ge = app.add_subcommand(
        "genus-enumerate", "List all semigroups with given multiplicity and genus");
    ge->add_option("m", m)->required();
    ge->add_option("g", g)->required();
    auto* ge_frob
        = ge->add_option("--frobenius", F, "Restrict to one Frobenius number");
    common(ge, true);

    auto* kz = app.add_subcommand(
        "kunz", "Kunz coordinates of a semigroup or of I(m,F)");
    auto* kz_m   = kz->add_option("m", m);
    auto* kz_f   = kz->add_option("F", F);
    auto* kz_gen = kz->add_option("--generators", q.generators)->delimiter(',');
    kz_gen->excludes(kz_m)->excludes(kz_f);
    common(kz, false);

    auto* oc = app.add_subcommand(
        "oracle-check", "Compare enumerate against brute force");
    oc->group("");
    oc->add_option("m", m)->required();
    oc->add_option("F", F)->required();
    common(oc, false);

    try {
      app.parse(argc, argv);
      if (kz->parsed() && kz_gen->count() == 0
          && (kz_m->count() == 0 || kz_f->count() == 0)) {
        throw CLI::ValidationError("kunz",
                                   "give either m and F or --generators");
      }
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return ParseResult{std::nullopt, code == 0 ? 0 : 2};
    }

    q.format = format == "json" ? Format::json : Format::text;
    if (exists->parsed()) {
      q.command = Command::exists;
    } else if (irr->parsed()) {
      q.command = Command::irreducibles;
    } else if (en->parsed()) {
      q.command = Command::enumerate;
    } else if (cl->parsed()) {
      q.command = Command::class_;
      if (cl_genus->count() > 0) {
        q.g = g;
      }
    } else if (ge->parsed()) {
      q.command = Command::genus_enumerate;
      q.g       = g;
      if (ge_frob->count() > 0) {
        q.F = F;
      }
    } else if (kz->parsed()) {
      q.command = Command::kunz;
    } else {
      q.command = Command::oracle_check;
    }
    if (q.command != Command::class_ && q.command != Command::genus_enumerate
        && q.generators.empty()) {
      q.m = m;
      q.F = F;
    } else if (q.command == Command::genus_enumerate) {
      q.m = m;
    }
    if (depth > 0) {
      q.depth = depth;
    }
    return ParseResult{q, 0};
  }

  namespace detail {
    inline std::string existence_reason(int_type m, int_type F) {
      if (semigroup_exists(m, F)) {
        return "";
      }
      if (m == 1) {
        return "multiplicity 1 forces F = -1";
      }
      if (m < 1) {
        return "multiplicity must be positive";
      }
      if (F < m - 1) {
        return "F >= m - 1 fails (" + std::to_string(F) + " < "
               + std::to_string(m - 1) + ")";
      }
      return "m divides F (" + std::to_string(m) + " | " + std::to_string(F)
             + ")";
    }

    inline std::string irreducible_reason(int_type m, int_type F) {
      if (F < 3) {
        return "the tree of irreducibles is defined for F >= 3";
      }
      if (m < 1) {
        return "multiplicity must be positive";
      }
      if (irreducible_exists(m, F)) {
        return "";
      }
      if (2 * m > F + 2) {
        return "m <= (F + 2)/2 fails (" + std::to_string(m) + " > "
               + std::to_string(F + 2) + "/2)";
      }
      return "m divides F (" + std::to_string(m) + " | " + std::to_string(F)
             + ")";
    }

    inline std::string genus_reason(int_type                m,
                                    int_type                g,
                                    std::optional<int_type> F) {
      if (!semigroup_exists_with_genus(m, g)) {
        return "(m, g) = (1, 0) or 2 <= m <= g + 1 fails for m = "
               + std::to_string(m) + ", g = " + std::to_string(g);
      }
      if (!F) {
        return "";
      }
      if (m == 1 || m == g + 1) {
        int_type const want = m == 1 ? -1 : g;
        return *F == want ? ""
                          : "the only Frobenius number for this (m, g) is "
                                + std::to_string(want);
      }
      auto const range = genus_range(m, g);
      if (std::binary_search(range.begin(), range.end(), *F)) {
        return "";
      }
      if (*F % m == 0) {
        return "m divides F (" + std::to_string(m) + " | " + std::to_string(*F)
               + ")";
      }
      return "F must lie in [ceil(mg/(m-1)) - 1, 2g - 1] = ["
             + std::to_string(numsg::detail::ceil_div(m * g, m - 1) - 1) + ", "
             + std::to_string(2 * g - 1) + "]";
    }

    class Emitter {
     public:
      Emitter(Query const& q, std::ostream& out) : _q(q), _out(out) {}

      void emit(NumericalSemigroup const&     s,
                std::optional<std::ptrdiff_t> parent = std::nullopt) {
        if (_q.depth && s.depth() != *_q.depth) {
          return;
        }
        ++_count;
        if (_q.count_only) {
          return;
        }
        auto const r = make_record(s, _q.with_kunz, parent);
        if (_q.format == Format::json) {
          _out << to_json(r).dump() << '\n';
        } else {
          _out << to_text(r) << '\n';
        }
      }

      void finish() {
        if (_q.count_only) {
          _out << _count << '\n';
        }
      }

     private:
      Query const&  _q;
      std::ostream& _out;
      std::size_t   _count = 0;
    };

    inline EnumerationOptions options(Query const& q) {
      return EnumerationOptions{q.d_set_limit, q.workers};
    }

    // Tree nodes sorted, with parent indices remapped to the sorted order.
    inline std::pair<std::vector<NumericalSemigroup>, std::vector<std::ptrdiff_t>>
    sorted_tree(IrreducibleTree const& tree) {
      std::vector<std::size_t> order(tree.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return tree.nodes[a] < tree.nodes[b];
      });
      std::vector<std::ptrdiff_t> where(tree.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        where[order[i]] = static_cast<std::ptrdiff_t>(i);
      }
      std::vector<NumericalSemigroup> nodes;
      std::vector<std::ptrdiff_t>     parents;
      for (std::size_t i : order) {
        nodes.push_back(tree.nodes[i]);
        auto const p = tree.parent_index[i];
        parents.push_back(p < 0 ? -1 : where[static_cast<std::size_t>(p)]);
      }
      return {std::move(nodes), std::move(parents)};
    }

    inline int run_exists(Query const& q, std::ostream& out) {
      int_type const m      = *q.m;
      int_type const F      = *q.F;
      auto const     why_l  = existence_reason(m, F);
      auto const     why_i  = irreducible_reason(m, F);
      bool const     has_l  = why_l.empty();
      bool const     has_i  = why_i.empty();
      bool const     tree_n = F >= 3 && m >= 1;
      if (q.format == Format::json) {
        nlohmann::ordered_json j;
        j["m"]            = m;
        j["frobenius"]    = F;
        j["semigroups"]   = has_l;
        j["irreducibles"] = tree_n ? nlohmann::ordered_json(has_i)
                                   : nlohmann::ordered_json(nullptr);
        if (!has_l) {
          j["semigroups_reason"] = why_l;
        }
        if (!has_i) {
          j["irreducibles_reason"] = why_i;
        }
        out << j.dump() << '\n';
        return 0;
      }
      out << "L(" << m << "," << F << ") nonempty: " << (has_l ? "yes" : "no");
      if (!has_l) {
        out << " (" << why_l << ")";
      }
      out << '\n';
      out << "I(" << m << "," << F << ") nonempty: ";
      if (!tree_n) {
        out << "n/a (" << why_i << ")";
      } else {
        out << (has_i ? "yes" : "no");
        if (!has_i) {
          out << " (" << why_i << ")";
        }
      }
      out << '\n';
      return 0;
    }

    inline int run_irreducibles(Query const& q,
                                std::ostream& out,
                                std::ostream& err) {
      Emitter e(q, out);
      auto    why = irreducible_reason(*q.m, *q.F);
      if (!why.empty()) {
        err << "no irreducible numerical semigroups: " << why << '\n';
        e.finish();
        return 0;
      }
      auto [nodes, parents]
          = sorted_tree(enumerate_irreducibles(*q.m, *q.F, q.workers));
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        e.emit(nodes[i], parents[i]);
      }
      e.finish();
      return 0;
    }

    inline int run_enumerate(Query const& q, std::ostream& out, std::ostream& err) {
      Emitter e(q, out);
      auto    why = existence_reason(*q.m, *q.F);
      if (!why.empty()) {
        err << "no numerical semigroups: " << why << '\n';
      }
      for (auto const& s : enumerate_L(*q.m, *q.F, options(q))) {
        e.emit(s);
      }
      e.finish();
      return 0;
    }

    inline int run_genus(Query const& q, std::ostream& out, std::ostream& err) {
      Emitter e(q, out);
      auto    why = genus_reason(*q.m, *q.g, q.F);
      if (!why.empty()) {
        err << "no numerical semigroups: " << why << '\n';
      }
      for (auto const& s : enumerate_L_genus(*q.m, *q.g, q.F, options(q))) {
        e.emit(s);
      }
      e.finish();
      return 0;
    }

    inline int run_class(Query const& q, std::ostream& out, std::ostream& err) {
      auto const s
          = NumericalSemigroup::from_generators(GeneratorSet(q.generators));
      if (s.multiplicity() < 3 || s.frobenius() <= 2 * s.multiplicity()) {
        err << "class expansion needs multiplicity >= 3 and F > 2m; "
            << to_string(s) << " has m = " << s.multiplicity()
            << ", F = " << s.frobenius() << '\n';
        return 2;
      }
      auto const seed = irreducible_closure(s);
      Emitter    e(q, out);
      if (q.g) {
        for (auto const& t : expand_class_with_genus(seed, *q.g, options(q))) {
          e.emit(t);
        }
      } else {
        auto members = expand_class(seed, options(q)).members;
        std::sort(members.begin(), members.end());
        for (auto const& t : members) {
          e.emit(t);
        }
      }
      e.finish();
      return 0;
    }

    inline int run_kunz(Query q, std::ostream& out, std::ostream& err) {
      q.with_kunz = true;
      if (!q.generators.empty()) {
        auto const s
            = NumericalSemigroup::from_generators(GeneratorSet(q.generators));
        if (s.multiplicity() < 2) {
          err << "Kunz coordinates need multiplicity >= 2\n";
          return 2;
        }
        auto const r   = make_record(s, true);
        auto const ap  = apery_set(s, s.multiplicity());
        auto const mem = check_membership_system(*r.kunz, s.frobenius());
        auto const irr = check_irreducible_system(*r.kunz, s.frobenius());
        if (q.format == Format::json) {
          nlohmann::ordered_json j = to_json(r);
          j["apery_set"]           = ap.sorted();
          j["membership_system"]   = mem.ok;
          j["irreducible_system"]  = irr.ok;
          out << j.dump() << '\n';
        } else {
          out << to_text(r) << '\n';
          out << "apery=" << numsg::detail::join(ap.sorted()) << '\n';
          out << "membership_system="
              << (mem.ok ? "ok" : "violated: " + mem.violated) << '\n';
          out << "irreducible_system="
              << (irr.ok ? "ok" : "violated: " + irr.violated) << '\n';
        }
        return 0;
      }
      return run_irreducibles(q, out, err);
    }

    inline int run_oracle_check(Query const& q,
                                std::ostream& out,
                                std::ostream& err) {
      OracleConfig cfg;
      cfg.max_frobenius     = OracleConfig::hard_max_frobenius;
      cfg.with_multiplicity = *q.m;
      cfg.workers           = q.workers;
      if (*q.F < 1 || *q.F > cfg.max_frobenius) {
        err << "oracle-check supports 1 <= F <= " << cfg.max_frobenius << '\n';
        return 2;
      }
      auto const pipeline = enumerate_L(*q.m, *q.F, options(q));
      auto const oracle   = brute_force_L(*q.F, cfg);
      if (pipeline == oracle) {
        out << "match " << pipeline.size() << '\n';
        return 0;
      }
      out << "mismatch pipeline=" << pipeline.size()
          << " oracle=" << oracle.size() << '\n';
      return 1;
    }
  }  // namespace detail

  inline int run(Query const& q, std::ostream& out, std::ostream& err) {
    try {
      switch (q.command) {
        case Command::exists:
          return detail::run_exists(q, out);
        case Command::irreducibles:
          return detail::run_irreducibles(q, out, err);
        case Command::enumerate:
          return detail::run_enumerate(q, out, err);
        case Command::class_:
          return detail::run_class(q, out, err);
        case Command::genus_enumerate:
          return detail::run_genus(q, out, err);
        case Command::kunz:
          return detail::run_kunz(q, out, err);
        case Command::oracle_check:
          return detail::run_oracle_check(q, out, err);
      }
    } catch (LimitExceeded const& e) {
      err << "limit exceeded: " << e.what() << '\n';
      return 3;
    } catch (NumsgError const& e) {
      err << "invalid query: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

  inline int main_entry(int                argc,
                        char const* const* argv,
                        std::ostream&      out,
                        std::ostream&      err) {
    auto parsed = parse(argc, argv, out, err);
    if (!parsed.query) {
      return parsed.exit_code;
    }
    return run(*parsed.query, out, err);
  }

}  // namespace numsg::cli

#endif  // NUMSG_CLI_HPP_
