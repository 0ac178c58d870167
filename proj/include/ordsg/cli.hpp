// Configuration and execution of one command-line operation.

#ifndef ORDSG_CLI_HPP_
#define ORDSG_CLI_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "serialize.hpp"

namespace ordsg {

  //! Every field is a key of the JSON object model (the key is the field
  //! name with '_' replaced by '-'). Element-valued fields hold the JSON form
  //! of the element, or its text form as a JSON string.
  struct RunConfig {
    std::string operation;
    std::string instance = "free_monoid";
    std::size_t alphabet_size = 2;
    std::size_t dim           = 3;
    std::vector<std::string> carrier{"p", "q"};

    std::uint64_t seed        = 0;
    std::size_t   cap_product = 1'000'000;
    std::size_t   cap_enum    = 10'000'000;
    unsigned      jobs        = 1;
    std::string   format      = "json";
    std::string   out;

    std::optional<std::size_t> max_word_len;
    std::optional<Json>        universe;
    std::optional<std::size_t> universe_sample;

    std::optional<std::size_t> kmin, kmax, trials, depth, n, max_n;
    std::optional<std::string> kind;
    std::optional<Json>        set, sets, sizes, y, a, b;
    // batch only
    std::optional<std::string> file;
  };

  //! Rejects unknown keys and ill-typed values with InvalidArgument.
  RunConfig run_config_from_json(Json const& j);
  //! Only set optionals are written; the result round-trips.
  Json run_config_to_json(RunConfig const& cfg);

  //! Checks everything that does not need the instance: operation and
  //! instance names, which keys the operation accepts, required keys and
  //! numeric ranges. Throws InvalidArgument.
  void validate(RunConfig const& cfg);

  std::vector<std::string> const& operation_names();

  struct RunResult {
    // 0 no violations, 1 violations or counterexample, 2 usage error
    int  status = 0;
    Json report;
  };

  //! Validates, runs exactly one operation and never throws: errors become
  //! status 2 with an "error" field in the report.
  RunResult run(RunConfig const& cfg);

  //! Runs every config in a batch document (an array of configs, a single
  //! config, or {"runs": [...]}) and returns the worst status.
  RunResult run_batch(Json const& doc);

  //! CLI helpers turning flag text into config values. A value starting
  //! with '[' or '{' is JSON; otherwise sets are comma separated and lists
  //! of sets are separated by ';'.
  Json element_text_to_json(std::string const& text);
  Json set_text_to_json(std::string const& text);
  Json sets_text_to_json(std::string const& text);
  Json sizes_text_to_json(std::string const& text);

  //! The report rendered for output in the configured format.
  std::string format_report(Json const& report, std::string const& format);

}  // namespace ordsg

#endif  // ORDSG_CLI_HPP_
