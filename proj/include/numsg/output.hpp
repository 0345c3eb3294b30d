// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Serialization of semigroups as text lines and JSON lines.
//
// Text:  m=<m> F=<F> g=<g> d=<q> gens=<a,b,c> irreducible=<0|1>
//        followed by " parent=<i>" for tree nodes and " kunz=<q1,...>" when
//        Kunz coordinates are requested.
// JSON:  {"multiplicity", "frobenius", "genus", "depth",
//         "minimal_generators", "small_elements", ["kunz",] "irreducible"
//         [, "parent_index"]}, keys in that order.

#ifndef NUMSG_OUTPUT_HPP_
#define NUMSG_OUTPUT_HPP_

#include <cstddef>   // for ptrdiff_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "json.hpp"

#include "kunz.hpp"
#include "numerical_semigroup.hpp"

namespace numsg {

  struct OutputRecord {
    int_type                      multiplicity;
    int_type                      frobenius;
    int_type                      genus;
    int_type                      depth;
    std::vector<int_type>         minimal_generators;
    std::vector<int_type>         small_elements;
    std::optional<KunzVector>     kunz;
    bool                          irreducible;
    std::optional<std::ptrdiff_t> parent_index;

    friend bool operator==(OutputRecord const&, OutputRecord const&) = default;
  };

  inline OutputRecord make_record(NumericalSemigroup const&     s,
                                  bool                          with_kunz = false,
                                  std::optional<std::ptrdiff_t> parent
                                  = std::nullopt) {
    auto const gens = s.minimal_generators();
    return OutputRecord{
        s.multiplicity(),
        s.frobenius(),
        s.genus(),
        s.depth(),
        std::vector<int_type>(gens.begin(), gens.end()),
        s.small_elements(),
        (with_kunz && s.multiplicity() >= 2) ? std::optional(kunz_vector(s))
                                             : std::nullopt,
        s.is_irreducible(),
        parent};
  }

  inline std::string to_text(OutputRecord const& r) {
    std::string out = "m=" + std::to_string(r.multiplicity)
                      + " F=" + std::to_string(r.frobenius)
                      + " g=" + std::to_string(r.genus)
                      + " d=" + std::to_string(r.depth)
                      + " gens=" + detail::join(r.minimal_generators)
                      + " irreducible=" + (r.irreducible ? "1" : "0");
    if (r.parent_index) {
      out += " parent=" + std::to_string(*r.parent_index);
    }
    if (r.kunz) {
      out += " kunz=" + detail::join(r.kunz->coords);
    }
    return out;
  }

  inline nlohmann::ordered_json to_json(KunzVector const& v) {
    nlohmann::ordered_json j;
    j["m"]      = v.m;
    j["coords"] = v.coords;
    return j;
  }

  inline nlohmann::ordered_json to_json(OutputRecord const& r) {
    nlohmann::ordered_json j;
    j["multiplicity"]       = r.multiplicity;
    j["frobenius"]          = r.frobenius;
    j["genus"]              = r.genus;
    j["depth"]              = r.depth;
    j["minimal_generators"] = r.minimal_generators;
    j["small_elements"]     = r.small_elements;
    if (r.kunz) {
      j["kunz"] = to_json(*r.kunz);
    }
    j["irreducible"] = r.irreducible;
    if (r.parent_index) {
      j["parent_index"] = *r.parent_index;
    }
    return j;
  }

  //! Parse a record produced by to_json. Throws nlohmann::json exceptions on
  //! missing or mistyped keys.
  inline OutputRecord record_from_json(nlohmann::json const& j) {
    OutputRecord r{};
    r.multiplicity       = j.at("multiplicity").get<int_type>();
    r.frobenius          = j.at("frobenius").get<int_type>();
    r.genus              = j.at("genus").get<int_type>();
    r.depth              = j.at("depth").get<int_type>();
    r.minimal_generators = j.at("minimal_generators").get<std::vector<int_type>>();
    r.small_elements     = j.at("small_elements").get<std::vector<int_type>>();
    if (j.contains("kunz")) {
      r.kunz = KunzVector{j["kunz"].at("m").get<int_type>(),
                          j["kunz"].at("coords").get<std::vector<int_type>>()};
    }
    r.irreducible = j.at("irreducible").get<bool>();
    if (j.contains("parent_index")) {
      r.parent_index = j["parent_index"].get<std::ptrdiff_t>();
    }
    return r;
  }

}  // namespace numsg

#endif  // NUMSG_OUTPUT_HPP_
