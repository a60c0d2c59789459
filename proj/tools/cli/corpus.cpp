#include "corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "generators.hpp"
#include "hcb/error.hpp"

namespace hcb::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string entry_name(std::size_t k) { return "entry " + std::to_string(k); }

}  // namespace

std::vector<CorpusEntry> parse_corpus(const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries")) throw CorpusError("corpus: top level must be an object with \"entries\"");
  for (const auto& [key, value] : doc.items()) {
    if (key != "entries") throw CorpusError("corpus: unknown top-level field '" + key + "'");
  }
  const Json& arr = doc["entries"];
  if (!arr.is_array()) throw CorpusError("corpus: \"entries\" must be an array");
  std::vector<CorpusEntry> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const Json& e = arr[k];
    const std::string where = entry_name(k);
    if (!e.is_object()) throw CorpusError(where + ": must be an object");
    for (const auto& [key, value] : e.items()) {
      if (key != "type" && key != "lambda" && key != "mu" && key != "tags") {
        throw CorpusError(where + ": unknown field '" + key + "'");
      }
    }
    CorpusEntry entry;
    entry.index = k;
    if (!e.contains("type") || !e["type"].is_string()) throw CorpusError(where + " (field 'type'): missing or not a string");
    entry.type = e["type"].get<std::string>();
    CartanPtr datum;
    try {
      datum = build_root_system(entry.type);
    } catch (const InvalidInput& err) {
      throw CorpusError(where + " (field 'type'): " + err.what());
    }
    auto weight = [&](const char* field) {
      try {
        return weight_from_json(e[field], datum->rank());
      } catch (const InvalidInput& err) {
        throw CorpusError(where + " (field '" + field + "'): " + err.what());
      }
    };
    if (!e.contains("lambda")) throw CorpusError(where + " (field 'lambda'): missing");
    entry.lambda = weight("lambda");
    if (e.contains("mu")) entry.mu = weight("mu");
    if (e.contains("tags")) {
      if (!e["tags"].is_array()) throw CorpusError(where + " (field 'tags'): must be an array of strings");
      for (const auto& t : e["tags"]) {
        if (!t.is_string()) throw CorpusError(where + " (field 'tags'): must be an array of strings");
        entry.tags.push_back(t.get<std::string>());
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> parse_corpus_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    const std::size_t pos = std::min<std::size_t>(err.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos > 0 ? pos - 1 : 0), '\n');
    throw CorpusError("corpus: JSON syntax error at line " + std::to_string(line) + ": " + err.what());
  }
  return parse_corpus(doc);
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("corpus: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus_text(ss.str());
}

Json entry_to_json(const CorpusEntry& entry) {
  Json j{{"type", entry.type}, {"lambda", weight_to_json(entry.lambda)}};
  if (entry.mu) j["mu"] = weight_to_json(*entry.mu);
  if (!entry.tags.empty()) j["tags"] = entry.tags;
  return j;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "?";
}

std::size_t RunReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    for (const auto& [name, r] : e.checks) n += r.status == s ? 1 : 0;
  }
  return n;
}

bool RunReport::all_passed() const {
  return count(Status::fail) == 0 &&
         std::none_of(entries.begin(), entries.end(), [](const EntryReport& e) { return !e.error.empty(); });
}

namespace {

EntryReport run_entry(const CorpusEntry& entry, const RunOptions& options) {
  EntryReport report;
  report.entry = entry;
  CartanPtr datum;
  IntegralPtr id;
  try {
    datum = build_root_system(entry.type);
    id = integral_datum(datum, entry.lambda);
  } catch (const std::exception& err) {
    report.error = err.what();
    return report;
  }
  const std::uint64_t entry_seed = Rng::mix(options.seed, entry.index);
  const auto& checks = registered_checks();
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const CheckContext ctx{entry, datum, id, Rng::mix(entry_seed, k), options};
    const auto t0 = Clock::now();
    CheckResult r;
    try {
      r = checks[k].run(ctx);
    } catch (const std::exception& err) {
      r.status = Status::fail;
      r.witness = std::string("exception: ") + err.what();
    }
    r.elapsed_ms = ms_since(t0);
    report.checks.emplace_back(checks[k].name, std::move(r));
  }
  return report;
}

}  // namespace

RunReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& options) {
  RunReport report;
  report.seed = options.seed;
  report.entries.resize(entries.size());
  const auto t0 = Clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < entries.size(); k = next++) report.entries[k] = run_entry(entries[k], options);
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(options.workers, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  report.elapsed_ms = ms_since(t0);
  return report;
}

Json report_to_json(const RunReport& report, bool include_timings) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json j = entry_to_json(e.entry);
    j["index"] = e.entry.index;
    if (!e.error.empty()) j["error"] = e.error;
    Json checks = Json::array();
    for (const auto& [name, r] : e.checks) {
      Json c{{"name", name}, {"status", to_string(r.status)}};
      if (r.status == Status::fail) c["witness"] = r.witness;
      if (!r.detail.empty()) c["detail"] = r.detail;
      if (include_timings) c["elapsed_ms"] = r.elapsed_ms;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    entries.push_back(std::move(j));
  }
  Json summary{{"entries", report.entries.size()},
               {"passed", report.count(Status::pass)},
               {"failed", report.count(Status::fail)},
               {"skipped", report.count(Status::skip)},
               {"all_passed", report.all_passed()}};
  if (include_timings) summary["elapsed_ms"] = report.elapsed_ms;
  return Json{{"seed", report.seed}, {"entries", std::move(entries)}, {"summary", std::move(summary)}};
}

std::string report_table(const RunReport& report) {
  std::ostringstream os;
  const auto& checks = registered_checks();
  os << std::left << std::setw(5) << "#" << std::setw(6) << "type" << std::setw(26) << "lambda";
  for (const auto& c : checks) os << ' ' << c.name.substr(0, 4);
  os << "  ms\n";
  for (const auto& e : report.entries) {
    std::string lam = e.entry.lambda.to_string();
    if (lam.size() > 25) lam = lam.substr(0, 22) + "...";
    os << std::left << std::setw(5) << e.entry.index << std::setw(6) << e.entry.type << std::setw(26) << lam;
    double ms = 0;
    if (!e.error.empty()) {
      os << " ERROR: " << e.error << '\n';
      continue;
    }
    for (const auto& [name, r] : e.checks) {
      os << ' ' << std::setw(4) << (r.status == Status::pass ? "ok" : r.status == Status::skip ? "-" : "FAIL");
      ms += r.elapsed_ms;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.1f", ms);
    os << buf << '\n';
  }
  for (const auto& e : report.entries) {
    for (const auto& [name, r] : e.checks) {
      if (r.status == Status::fail) os << "FAIL entry " << e.entry.index << ' ' << name << ": " << r.witness << '\n';
    }
  }
  os << report.count(Status::pass) << " passed, " << report.count(Status::fail) << " failed, "
     << report.count(Status::skip) << " skipped over " << report.entries.size() << " entries\n";
  return os.str();
}

Json strip_timings(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timings(v);
  }
  return j;
}

}  // namespace hcb::cli
