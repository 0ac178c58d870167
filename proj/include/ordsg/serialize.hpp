// Text and JSON forms of elements and reports.
//
// Element syntax per instance:
//   free monoid        "abba" (the empty word is "")
//   triangular         [["1","1/2"],["0","3"]]
//   nat_add            "5" (JSON integers are also accepted)
//   left_zero          carrier name, e.g. "p"
//   K[A]               [["ab","1/2"],["b","3"]] (zero is [])
// Rationals are always written as reduced strings.

#ifndef ORDSG_SERIALIZE_HPP_
#define ORDSG_SERIALIZE_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for visit
#include <vector>       // for vector

#include "json.hpp"

#include "commute.hpp"
#include "core.hpp"
#include "error.hpp"
#include "pagano.hpp"
#include "products.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "semiring.hpp"
#include "small-instances.hpp"
#include "subset.hpp"
#include "tri-matrix.hpp"
#include "word.hpp"

namespace ordsg {

  using Json = nlohmann::ordered_json;

  //! Parses JSON text, rethrowing syntax errors as ParseError.
  Json parse_json(std::string_view text);

  Json     rational_to_json(Rational const& x);
  Rational rational_from_json(Json const& j);
  Json     matrix_to_json(Matrix const& m);
  Matrix   matrix_from_json(Json const& j);

  Json element_to_json(FreeMonoid const& inst, Word const& x);
  Word element_from_json(FreeMonoid const& inst, Json const& j);

  Json      element_to_json(TriangularSemigroup const& inst, TriMatrix const& x);
  TriMatrix element_from_json(TriangularSemigroup const& inst, Json const& j);

  Json     element_to_json(NatAdd const& inst, Rational const& x);
  Rational element_from_json(NatAdd const& inst, Json const& j);

  Json element_to_json(NonNegRationals const& inst, Rational const& x);
  Rational element_from_json(NonNegRationals const& inst, Json const& j);

  Json            element_to_json(LeftZero const& inst, LeftZeroElement const& x);
  LeftZeroElement element_from_json(LeftZero const& inst, Json const& j);

  template <OrderedSemiring K, OrderedSemigroup A>
  Json element_to_json(SemigroupSemiring<K, A> const&                 inst,
                       element_t<SemigroupSemiring<K, A>> const& f) {
    Json out = Json::array();
    for (auto const& [key, c] : f.terms()) {
      out.push_back(Json::array({element_to_json(inst.base(), key),
                                 element_to_json(inst.coefficients(), c)}));
    }
    return out;
  }

  template <OrderedSemiring K, OrderedSemigroup A>
  element_t<SemigroupSemiring<K, A>>
  element_from_json(SemigroupSemiring<K, A> const& inst, Json const& j) {
    Json const& arr = j.is_string() ? parse_json(j.get<std::string>()) : j;
    if (!arr.is_array()) {
      throw DomainError("expected an array of [key, coefficient] pairs");
    }
    std::vector<typename SemigroupSemiring<K, A>::term_type> terms;
    for (auto const& t : arr) {
      if (!t.is_array() || t.size() != 2) {
        throw DomainError("expected a [key, coefficient] pair, got "
                          + t.dump());
      }
      terms.emplace_back(element_from_json(inst.base(), t[0]),
                         element_from_json(inst.coefficients(), t[1]));
    }
    return inst.make(std::move(terms));
  }

  //! The canonical text of an element: a JSON string value is written bare,
  //! anything else as compact JSON.
  template <OrderedSemigroup S>
  std::string render_element(S const& inst, element_t<S> const& x) {
    Json const j = element_to_json(inst, x);
    return j.is_string() ? j.template get<std::string>() : j.dump();
  }

  //! Inverse of render_element.
  template <OrderedSemigroup S>
  element_t<S> parse_element(S const& inst, std::string_view text) {
    auto const first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '[') {
      return element_from_json(inst, parse_json(text));
    }
    return element_from_json(inst, Json(std::string(text)));
  }

  template <OrderedSemigroup S>
  Json elements_to_json(S const& inst, std::vector<element_t<S>> const& xs) {
    Json out = Json::array();
    for (auto const& x : xs) {
      out.push_back(element_to_json(inst, x));
    }
    return out;
  }

  template <OrderedSemigroup S>
  Json subset_to_json(S const& inst, FiniteSubset<element_t<S>> const& xs) {
    return elements_to_json(inst, xs.elements());
  }

  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> subset_from_json(S const& inst, Json const& j) {
    if (!j.is_array()) {
      throw DomainError("expected an array of elements, got " + j.dump());
    }
    std::vector<element_t<S>> xs;
    for (auto const& x : j) {
      xs.push_back(element_from_json(inst, x));
    }
    return make_subset(inst, std::move(xs));
  }

  Json bound_to_json(BoundCheck const& b);
  Json pagano_to_json(PaganoWitness const& w);

  template <OrderedSemigroup S>
  Json law_report_to_json(S const& inst, LawReport<element_t<S>> const& r) {
    Json out{{"law", r.law},
             {"trials", r.trials},
             {"failures", r.failures},
             {"applicable", r.applicable}};
    if (r.witness) {
      out["witness"] = elements_to_json(inst, *r.witness);
    }
    if (!r.note.empty()) {
      out["note"] = r.note;
    }
    return out;
  }

  template <OrderedSemigroup S>
  Json verdict_to_json(S const& inst, DoublingVerdict<element_t<S>> const& v) {
    Json out{{"size", v.size},
             {"square-size", v.square_size},
             {"pairwise-commuting", v.pairwise_commuting},
             {"small-doubling", v.small_doubling},
             {"theorem-consistent", v.theorem_consistent}};
    if (v.noncommuting_witness) {
      out["noncommuting-pair"] = Json::array(
          {element_to_json(inst, v.noncommuting_witness->first),
           element_to_json(inst, v.noncommuting_witness->second)});
    }
    return out;
  }

  template <OrderedSemigroup S>
  Json chain_to_json(S const& inst, NeumannChain<element_t<S>> const& c) {
    return {{"chain", elements_to_json(inst, c.chain)},
            {"strictly-increasing", c.strictly_increasing}};
  }

  template <OrderedSemigroup S>
  Json periodicity_to_json(S const&                               inst,
                           PeriodicityRecord<element_t<S>> const& r) {
    Json out{{"element", element_to_json(inst, r.element)}};
    if (auto p = std::get_if<Periodic>(&r.status)) {
      out["periodic"] = true;
      out["index"]    = p->index;
      out["period"]   = p->period;
    } else {
      out["periodic"]        = false;
      out["aperiodic-up-to"] = std::get<AperiodicUpTo>(r.status).bound;
    }
    return out;
  }

  template <OrderedSemigroup S>
  Json scan_hits_to_json(S const&                                  inst,
                         std::vector<ScanHit<element_t<S>>> const& hits) {
    Json out = Json::array();
    for (auto const& h : hits) {
      out.push_back({{"elements", elements_to_json(inst, h.elements)},
                     {"annotation", h.annotation}});
    }
    return out;
  }

  template <OrderedSemigroup S>
  Json scan_report_to_json(S const& inst, ScanReport<element_t<S>> const& r) {
    Json params = Json::object();
    for (auto const& [k, v] : r.parameters) {
      params[k] = v;
    }
    Json counters = Json::object();
    for (auto const& [k, v] : r.counters) {
      counters[k] = v;
    }
    return {{"scan-name", r.scan_name},
            {"instance", r.instance_name},
            {"universe-recipe", r.universe_recipe},
            {"subset-size-range", Json::array({r.kmin, r.kmax})},
            {"subsets-examined", r.subsets_examined},
            {"violations", r.violations},
            {"violation-hits", scan_hits_to_json(inst, r.violation_hits)},
            {"extremal-count", r.extremal_count},
            {"extremal-hits", scan_hits_to_json(inst, r.extremal_hits)},
            {"observations", scan_hits_to_json(inst, r.observations)},
            {"parameters", params},
            {"counters", counters},
            {"notes", r.notes},
            {"applicable", r.applicable}};
  }

  //! Indented "key: value" lines for --format text.
  std::string json_to_text(Json const& j);

}  // namespace ordsg

#endif  // ORDSG_SERIALIZE_HPP_
