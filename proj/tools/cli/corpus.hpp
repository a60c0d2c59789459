#pragma once

// Corpus files, the registered checks and the parallel runner.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hcb/error.hpp"
#include "hcb/serialize.hpp"

namespace hcb::cli {

struct CorpusEntry {
  std::size_t index = 0;  // position in the file
  std::string type;
  Weight lambda;
  std::optional<Weight> mu;
  std::vector<std::string> tags;
};

/// Raised for malformed corpus files; the message names the entry and field.
class CorpusError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

std::vector<CorpusEntry> parse_corpus(const Json& doc);
/// Parses text; JSON syntax errors report the line number.
std::vector<CorpusEntry> parse_corpus_text(const std::string& text);
std::vector<CorpusEntry> load_corpus(const std::string& path);
Json entry_to_json(const CorpusEntry& entry);

enum class Status { pass, fail, skip };
const char* to_string(Status s);

struct CheckResult {
  Status status = Status::pass;
  std::string witness;  // set on failure: the offending element, pair or word
  Json detail = Json::object();
  double elapsed_ms = 0;
};

struct RunOptions {
  std::size_t workers = 1;
  std::uint64_t seed = 20240611;
  std::size_t words_per_block = 500;
  std::size_t max_word_length = 12;
  std::size_t random_stabilizer_weights = 50;
};

struct CheckContext {
  const CorpusEntry& entry;
  CartanPtr datum;
  IntegralPtr id;
  std::uint64_t seed;
  const RunOptions& options;
};

struct CheckSpec {
  std::string name;
  std::function<CheckResult(const CheckContext&)> run;
};

/// Every check executed on each entry, in report order.
const std::vector<CheckSpec>& registered_checks();

struct EntryReport {
  CorpusEntry entry;
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::string error;  // set when the entry could not be set up at all
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<EntryReport> entries;
  double elapsed_ms = 0;

  std::size_t count(Status s) const;
  bool all_passed() const;
};

RunReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& options);

/// The JSON report; timings are included unless disabled.
Json report_to_json(const RunReport& report, bool include_timings = true);
std::string report_table(const RunReport& report);

/// Removes every "elapsed_ms" member recursively.
Json strip_timings(Json j);

}  // namespace hcb::cli
