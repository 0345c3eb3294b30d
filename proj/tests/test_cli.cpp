// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.

#include <cstdlib>  // for setenv, unsetenv
#include <sstream>  // for ostringstream, istringstream
#include <string>   // for string, getline
#include <vector>   // for vector

#include "catch_amalgamated.hpp"

#include "numsg/cli.hpp"

namespace numsg {

  namespace {
    struct Run {
      int         code;
      std::string out;
      std::string err;
    };

    Run run(std::vector<std::string> args) {
      args.insert(args.begin(), "numsg");
      std::vector<char const*> argv;
      for (auto const& a : args) {
        argv.push_back(a.c_str());
      }
      std::ostringstream out, err;
      int const          code = cli::main_entry(
          static_cast<int>(argv.size()), argv.data(), out, err);
      return Run{code, out.str(), err.str()};
    }

    std::vector<std::string> lines(std::string const& s) {
      std::vector<std::string> out;
      std::istringstream       in(s);
      for (std::string line; std::getline(in, line);) {
        out.push_back(line);
      }
      return out;
    }
  }  // namespace

  TEST_CASE("enumerate --count", "[cli]") {
    auto r = run({"enumerate", "11", "25", "--count"});
    CHECK(r.code == 0);
    CHECK(r.out == "896\n");

    auto full = run({"enumerate", "11", "25"});
    CHECK(lines(full.out).size() == 896);

    auto par = run({"enumerate", "11", "25", "--workers", "4"});
    CHECK(par.out == full.out);
  }

  TEST_CASE("enumerate text and depth filter", "[cli]") {
    auto r = run({"enumerate", "5", "8"});
    REQUIRE(r.code == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 4);
    for (auto const& line : l) {
      CHECK(line.rfind("m=5 F=8 ", 0) == 0);
      CHECK(line.find(" d=2 ") != std::string::npos);
    }
    CHECK(run({"enumerate", "5", "8", "--depth", "3", "--count"}).out == "0\n");
    CHECK(run({"enumerate", "5", "8", "--depth", "2", "--count"}).out == "4\n");
  }

  TEST_CASE("empty results report a reason", "[cli]") {
    auto r = run({"enumerate", "4", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("m divides F") != std::string::npos);

    auto e = run({"exists", "8", "13"});
    CHECK(e.code == 0);
    CHECK(e.out
          == "L(8,13) nonempty: yes\nI(8,13) nonempty: no (m <= (F + 2)/2 "
             "fails (8 > 15/2))\n");
  }

  TEST_CASE("irreducibles", "[cli]") {
    auto r = run({"irreducibles", "5", "13"});
    REQUIRE(r.code == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "m=5 F=13 g=7 d=3 gens=5,6,9 irreducible=1 parent=1");
    CHECK(l[1] == "m=5 F=13 g=7 d=3 gens=5,7,9,11 irreducible=1 parent=-1");
    CHECK(run({"irreducibles", "5", "13", "--count"}).out == "2\n");
  }

  TEST_CASE("genus-enumerate", "[cli]") {
    auto r = run({"genus-enumerate", "5", "10", "--frobenius", "13"});
    REQUIRE(r.code == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[0].find("gens=5,9,16,17 ") != std::string::npos);
    CHECK(run({"genus-enumerate", "2", "5", "--count"}).out == "1\n");
  }

  TEST_CASE("class", "[cli]") {
    CHECK(run({"class", "--generators", "5,7,9,11", "--count"}).out == "12\n");
    CHECK(run({"class", "--generators", "5,9,16,17", "--count"}).out == "12\n");
    CHECK(run({"class", "--generators", "5,7,9,11", "--genus", "10", "--count"})
              .out
          == "3\n");
    CHECK(run({"class", "--generators", "2,9"}).code == 2);
  }

  TEST_CASE("kunz", "[cli]") {
    auto r = run({"kunz", "--generators", "5,7,9,11"});
    REQUIRE(r.code == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0].find("kunz=2,1,3,1") != std::string::npos);
    CHECK(l[1] == "apery=0,7,9,11,18");
    CHECK(l[2] == "membership_system=ok");
    CHECK(l[3] == "irreducible_system=ok");

    auto t = run({"kunz", "5", "13"});
    CHECK(lines(t.out).size() == 2);
    CHECK(t.out.find("kunz=") != std::string::npos);

    CHECK(run({"kunz", "5"}).code == 2);
  }

  TEST_CASE("JSON lines round trip", "[cli]") {
    auto r = run({"enumerate", "5", "13", "--format", "json", "--kunz"});
    REQUIRE(r.code == 0);
    auto const expected = enumerate_L(5, 13);
    auto const l        = lines(r.out);
    REQUIRE(l.size() == expected.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      auto const rec = record_from_json(nlohmann::json::parse(l[i]));
      CHECK(rec == make_record(expected[i], true));
      CHECK(NumericalSemigroup::from_small_elements(rec.small_elements,
                                                    rec.frobenius)
            == expected[i]);
    }
    auto c = run({"enumerate", "5", "13", "--count"});
    CHECK(c.out == std::to_string(l.size()) + "\n");
  }

  TEST_CASE("invalid queries", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"enumerate", "5"}).code == 2);
    CHECK(run({"enumerate", "x", "13"}).code == 2);
    CHECK(run({"enumerate", "5", "13", "--format", "xml"}).code == 2);
    CHECK(run({"enumerate", "5", "13", "--d-set-limit", "65"}).code == 2);
    CHECK(run({"class", "--generators", "4,6"}).code == 2);
    CHECK(run({"oracle-check", "5", "30"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("limits", "[cli]") {
    auto r = run({"enumerate", "20", "37", "--d-set-limit", "3", "--count"});
    CHECK(r.code == 3);
    CHECK(r.err.find("limit exceeded") != std::string::npos);

    ::setenv(cli::dset_limit_env, "3", 1);
    CHECK(run({"enumerate", "20", "37", "--count"}).code == 3);
    ::setenv(cli::dset_limit_env, "30", 1);
    CHECK(run({"enumerate", "5", "13", "--count"}).code == 0);
    ::unsetenv(cli::dset_limit_env);
  }

  TEST_CASE("oracle-check", "[cli]") {
    auto const n = enumerate_L(5, 13).size();
    CHECK(run({"oracle-check", "5", "13"}).out
          == "match " + std::to_string(n) + "\n");
  }

}  // namespace numsg
