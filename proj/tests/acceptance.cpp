// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/corpus.hpp"
#include "hcb/serialize.hpp"
#include "oracles.hpp"

#ifndef HCB_DEFAULT_CORPUS
#define HCB_DEFAULT_CORPUS "corpus/default.json"
#endif

using namespace hcb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
};

struct CheckTally {
  std::size_t pass = 0, fail = 0, skip = 0;
  double seconds = 0;
  std::vector<std::string> witnesses;
};

std::map<std::string, CheckTally> tally(const Json& report) {
  std::map<std::string, CheckTally> out;
  for (const auto& e : report["entries"]) {
    for (const auto& c : e["checks"]) {
      CheckTally& t = out[c["name"].get<std::string>()];
      const std::string status = c["status"];
      (status == "pass" ? t.pass : status == "fail" ? t.fail : t.skip)++;
      t.seconds += c.value("elapsed_ms", 0.0) / 1000.0;
      if (status == "fail" && t.witnesses.size() < 3) {
        t.witnesses.push_back(e["type"].get<std::string>() + " " + e["lambda"].dump() + ": " + c.value("witness", ""));
      }
    }
  }
  return out;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Suite-level criteria read off the corpus report.
Outcome from_suite(const std::map<std::string, CheckTally>& t, const std::string& name, std::size_t entries,
                   double limit, bool every_entry, std::size_t min_pass = 1) {
  Outcome o;
  auto it = t.find(name);
  if (it == t.end()) {
    o.require(false, "check '" + name + "' did not run");
    return o;
  }
  const CheckTally& c = it->second;
  o.require(c.fail == 0, std::to_string(c.fail) + " failures");
  for (const auto& w : c.witnesses) o.require(false, w);
  if (every_entry) o.require(c.pass == entries, std::to_string(c.pass) + "/" + std::to_string(entries) + " entries passed");
  o.require(c.pass >= min_pass, "only " + std::to_string(c.pass) + " passing entries, need " + std::to_string(min_pass));
  o.require(c.seconds < limit, "took " + fmt(c.seconds) + ", limit " + fmt(limit));
  if (o.pass) {
    o.detail = std::to_string(c.pass) + " pass, " + std::to_string(c.skip) + " skip, " + fmt(c.seconds);
  }
  return o;
}

Outcome corpus_shape(const Json& report) {
  Outcome o;
  const auto& entries = report["entries"];
  std::set<std::string> types;
  std::set<std::string> dens;
  for (const auto& e : entries) {
    types.insert(e["type"].get<std::string>());
    mpz_class den = 1;
    for (const auto& x : e["lambda"]) {
      const Rational q = parse_rational(x.get<std::string>());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    dens.insert(den.get_str());
    o.require(!e.contains("error"), "entry " + std::to_string(e["index"].get<long long>()) + " errored");
  }
  o.require(entries.size() >= 40, "corpus has only " + std::to_string(entries.size()) + " entries");
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) o.require(types.count(t) == 1, std::string("no ") + t + " entry");
  for (const char* d : {"1", "2", "3"}) o.require(dens.count(d) == 1, std::string("no lambda with denominator ") + d);
  return o;
}

WeylElement one_line_a3(const CartanDatum& d, std::vector<int> oneline) {
  std::vector<int> word;
  for (std::size_t pass = 0; pass < oneline.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < oneline.size(); ++i) {
      if (oneline[i] > oneline[i + 1]) {
        std::swap(oneline[i], oneline[i + 1]);
        word.push_back(static_cast<int>(i));
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return d.from_word(word);
}

Outcome regression_block() {
  Outcome o;
  const auto d = build_root_system("A3");
  const Weight lam = parse_weight("0,1/2,0");
  const auto id = integral_datum(d, lam);

  // Brute force over W(A3).
  std::vector<WeylElement> ext, integral;
  for (const auto& w : generate_group(d)) {
    const Weight diff = w.act(lam) - lam;
    if (diff.is_integral()) ext.push_back(w);
    if (weight_lattice_tests(*d, diff).in_root_lattice) integral.push_back(w);
  }
  std::sort(ext.begin(), ext.end());
  std::sort(integral.begin(), integral.end());
  o.require(ext.size() == 8, "brute force |W_ext| = " + std::to_string(ext.size()));
  auto lib_ext = id->w_ext();
  std::sort(lib_ext.begin(), lib_ext.end());
  o.require(lib_ext == ext, "extended integral group differs from brute force");

  const WeylElement s1 = d->simple_reflection(0), s3 = d->simple_reflection(2);
  std::vector<WeylElement> klein{d->identity(), s1, s3, s1 * s3};
  std::sort(klein.begin(), klein.end());
  o.require(integral == klein, "brute-force integral group is not <s1, s3>");
  auto lib_int = id->w_int().elements();
  std::sort(lib_int.begin(), lib_int.end());
  o.require(lib_int == klein, "library integral group is not <s1, s3>");
  o.require(s1 * s3 == s3 * s1 && s1 * s1 == d->identity() && s3 * s3 == d->identity(), "<s1, s3> is not (Z/2)^2");

  std::vector<WeylElement> chamber;
  for (const auto& w : ext) {
    bool keeps = true;
    for (std::size_t r : {std::size_t{0}, std::size_t{2}}) keeps = keeps && d->is_positive(w.root_image(r));
    if (keeps) chamber.push_back(w);
  }
  o.require(chamber.size() == 2, "brute force chamber size " + std::to_string(chamber.size()));
  o.require(id->chamber().size() == 2, "library chamber size " + std::to_string(id->chamber().size()));
  if (chamber.size() == 2 && id->chamber().size() == 2) {
    const WeylElement c = chamber[0].is_identity() ? chamber[1] : chamber[0];
    o.require(id->chamber()[1] == c, "chamber elements differ");
    o.require(c == one_line_a3(*d, {3, 4, 1, 2}), "c is not (13)(24)");
    o.require(c * s1 * d->inverse(c) == s3, "c s1 c^-1 != s3");
    o.require(lattice_class(*d, c.act(lam) - lam).to_string() == "2 mod 4", "brute force class of c.lambda - lambda");
    o.require(tau(*id, c).to_string() == "2 mod 4", "tau(c) = " + tau(*id, c).to_string());
  }
  if (o.pass) o.detail = "|W_ext| = 8, W_int = <s1, s3>, C = {e, s2s1s3s2}, tau(c) = 2 mod 4";
  return o;
}

Outcome kl_sanity(const std::map<std::string, CheckTally>& t, std::size_t entries) {
  Outcome o = from_suite(t, "kl", entries, 180.0, true);
  const std::string suite = o.detail;
  const auto d = build_root_system("A3");
  const auto id = integral_datum(d, parse_weight("0,0,0"));
  const KLCache cache(id->w_int_ptr());
  const WeylElement w = one_line_a3(*d, {3, 4, 1, 2});
  const LaurentPoly expect = LaurentPoly::monomial(0) + LaurentPoly::monomial(1);
  o.require(cache.kl_polynomial(d->identity(), w) == expect, "P_{e,3412} = " + cache.kl_polynomial(d->identity(), w).to_string("q"));
  const auto& g = id->w_int();
  const auto table = oracle::kl_by_r_polynomials(g, oracle::subword_bruhat(g));
  o.require(table[g.require_index(w)][0] == expect, "R-polynomial oracle gives " + table[g.require_index(w)][0].to_string("q"));
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (!(cache.polynomial(x, y) == table[y][x])) o.require(false, "A3 table differs from oracle");
    }
  }
  // Largest group in scope: the fill checks every polynomial as it goes.
  const auto t0 = Clock::now();
  const auto f4 = integral_datum(build_root_system("F4"), parse_weight("0,0,0,0"));
  const KLCache big(f4->w_int_ptr());
  long long top = 0;
  try {
    top = big.polynomial(0, f4->w_int().longest_index()).at_one();
  } catch (const std::exception& e) {
    o.require(false, std::string("F4: ") + e.what());
  }
  const double secs = seconds_since(t0);
  o.require(top == 1, "P_{e,w0} in F4 is not 1");
  o.require(secs < 180.0, "F4 table took " + fmt(secs));
  if (o.pass) o.detail = suite + "; 3412 matches oracle; F4 (1152) in " + fmt(secs);
  return o;
}

Outcome characters() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t weights = 0;
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto d = build_root_system(label);
    const std::size_t n = d->rank();
    // Dimension grows in every coordinate, so a DFS raising coordinates from
    // the left reaches every highest weight inside the bound exactly once.
    std::function<void(IntVector&, std::size_t)> visit = [&](IntVector& hw, std::size_t from) {
      const Weight top = Weight::from_integers(hw);
      const long long dim = weyl_dimension(*d, top);
      if (dim > 5000) return;
      ++weights;
      const long long mass = total_mass(*d, top);
      if (mass != dim) {
        o.require(false, std::string(label) + " " + top.to_string() + ": dim " + std::to_string(dim) + ", mass " +
                             std::to_string(mass));
      }
      for (std::size_t i = from; i < n; ++i) {
        ++hw[i];
        visit(hw, i);
        --hw[i];
      }
    };
    IntVector hw(n, 0);
    visit(hw, 0);
  }
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const auto d = build_root_system(label);
    std::size_t top = 0;
    for (std::size_t k = 0; k < d->num_positive_roots(); ++k) {
      if (d->root(k).height > d->root(top).height) top = k;
    }
    const long long z = zero_weight_multiplicity(*d, Weight::from_integers(d->root(top).as_weight));
    o.require(z == static_cast<long long>(d->rank()), std::string(label) + " adjoint zero weight multiplicity " + std::to_string(z));
  }
  const double secs = seconds_since(t0);
  o.require(weights > 100, "only " + std::to_string(weights) + " highest weights enumerated");
  o.require(secs < 120.0, "took " + fmt(secs));
  if (o.pass) o.detail = std::to_string(weights) + " highest weights, " + fmt(secs);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus = argc > 1 ? argv[1] : HCB_DEFAULT_CORPUS;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string first = (dir / "hcb_acceptance_1.json").string();
  const std::string second = (dir / "hcb_acceptance_2.json").string();

  std::ostringstream sink;
  const auto t0 = Clock::now();
  const int code1 = cli::run_cli({"run", "--corpus", corpus, "--seed", "20240611", "--out", first}, sink, std::cerr);
  const double corpus_seconds = seconds_since(t0);
  std::cout << sink.str();
  if (code1 != 0 && code1 != 1) {
    std::cout << "corpus run failed with exit code " << code1 << "\n";
    for (int k = 1; k <= 10; ++k) std::cout << "FAIL criterion " << k << ": corpus did not run\n";
    return 1;
  }
  std::ifstream in(first);
  const Json report = Json::parse(in);
  const auto t = tally(report);
  const std::size_t n = report["entries"].size();

  std::vector<std::pair<std::string, Outcome>> results;

  Outcome c1 = corpus_shape(report);
  Outcome s1 = from_suite(t, "tau_homomorphism", n, 60.0, true);
  c1.require(s1.pass, s1.detail);
  if (c1.pass) c1.detail = s1.detail;
  results.emplace_back("tau homomorphism and kernel", c1);
  results.emplace_back("semidirect product structure", from_suite(t, "semidirect", n, 60.0, true));
  results.emplace_back("triple count identity", from_suite(t, "triple_count", n, 120.0, false));
  results.emplace_back("translation of Verma modules", from_suite(t, "translation", n, 120.0, false, 10));
  results.emplace_back("subgeneric and regular certificates", from_suite(t, "subgeneric", n, 60.0, true));
  results.emplace_back("A3 regression block", regression_block());
  results.emplace_back("Kazhdan-Lusztig sanity", kl_sanity(t, n));
  results.emplace_back("rewriter confluence (500 words per block)", from_suite(t, "rewriter", n, 60.0, true));
  results.emplace_back("Freudenthal against Weyl dimension", characters());

  Outcome c10;
  const auto t1 = Clock::now();
  std::ostringstream sink2, err2;
  const int code2 = cli::run_cli({"run", "--corpus", corpus, "--seed", "20240611", "--no-timings", "--out", second}, sink2, err2);
  std::ifstream in2(second);
  const std::string bytes2{std::istreambuf_iterator<char>(in2), std::istreambuf_iterator<char>()};
  const std::string bytes1 = cli::strip_timings(report).dump(2) + "\n";
  const double rerun = seconds_since(t1);
  c10.require(code2 == code1, "exit codes differ");
  c10.require(bytes1 == bytes2, "reports differ");
  c10.require(rerun < 2 * corpus_seconds, "rerun took " + fmt(rerun) + " against corpus " + fmt(corpus_seconds));
  if (c10.pass) c10.detail = std::to_string(bytes2.size()) + " identical bytes, " + fmt(rerun) + " against corpus " + fmt(corpus_seconds);
  results.emplace_back("CLI determinism", c10);

  bool all = true;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& [name, o] = results[k];
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << name << " (" << o.detail << ")\n";
  }
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  return all ? 0 : 1;
}
