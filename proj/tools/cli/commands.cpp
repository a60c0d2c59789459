#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "corpus.hpp"
#include "hcb/error.hpp"

namespace hcb::cli {

namespace {

// Weights come as "-1,1/2,0" or as the JSON arrays the tool itself prints.
Weight read_weight(const CartanDatum& d, const std::string& text, const char* flag) {
  try {
    if (!text.empty() && text.front() == '[') return weight_from_json(Json::parse(text), d.rank());
    Weight w = parse_weight(text);
    if (w.rank() != d.rank()) {
      throw InvalidInput("has " + std::to_string(w.rank()) + " coordinates, expected " + std::to_string(d.rank()));
    }
    return w;
  } catch (const Json::exception& err) {
    throw InvalidInput(std::string(flag) + ": " + err.what());
  } catch (const InvalidInput& err) {
    throw InvalidInput(std::string(flag) + ": " + err.what());
  }
}

// "e", "2-1-3", "s2s1" or a JSON array of 1-based indices.
WeylElement read_element(const CartanDatum& d, const std::string& text, const char* flag) {
  try {
    if (!text.empty() && text.front() == '[') return element_from_json(d, Json::parse(text));
    return parse_element(d, text);
  } catch (const Json::exception& err) {
    throw InvalidInput(std::string(flag) + ": " + err.what());
  } catch (const InvalidInput& err) {
    throw InvalidInput(std::string(flag) + ": " + err.what());
  }
}

BimoduleWord read_word(const IntegralPtr& id, const std::string& text) {
  try {
    return word_from_json(id, Json::parse(text));
  } catch (const Json::exception& err) {
    throw InvalidInput(std::string("--word: ") + err.what());
  } catch (const InvalidInput& err) {
    throw InvalidInput(std::string("--word: ") + err.what());
  }
}

struct Args {
  std::string type;
  std::string lambda;
  std::string mu;
  std::string left_stab;
  std::string right_stab;
  std::string word;
  std::string x;
  std::string w;
  std::string highest;
  std::string corpus;
  std::string out_path;
  bool no_timings = false;
  std::size_t workers = 1;
  std::uint64_t seed = RunOptions{}.seed;
  std::size_t words = RunOptions{}.words_per_block;
};

Json do_integral(const Args& a) {
  const CartanPtr d = build_root_system(a.type);
  return integral_to_json(*integral_datum(d, read_weight(*d, a.lambda, "--lambda")));
}

Json do_xi(const Args& a) {
  const CartanPtr d = build_root_system(a.type);
  const Weight mu = read_weight(*d, a.mu, "--mu");
  const Weight lambda = read_weight(*d, a.lambda, "--lambda");
  const auto pairs = enumerate_xi(d, mu, lambda);
  Json arr = Json::array();
  for (const auto& p : pairs) arr.push_back(Json{{"mu", weight_to_json(p.mu)}, {"lambda", weight_to_json(p.lambda)}});
  return Json{{"type", d->type_label()},
              {"mu", weight_to_json(mu)},
              {"lambda", weight_to_json(lambda)},
              {"compatible", are_compatible(d, mu, lambda)},
              {"count", pairs.size()},
              {"double_coset_count", xi_double_coset_count(d, mu, lambda)},
              {"pairs", arr}};
}

Json do_cosets(const Args& a) {
  const CartanPtr d = build_root_system(a.type);
  const IntegralPtr id = integral_datum(d, read_weight(*d, a.lambda, "--lambda"));
  const auto left = dot_stabilizer(d, read_weight(*d, a.left_stab, "--left-stab"));
  const auto right = dot_stabilizer(d, read_weight(*d, a.right_stab, "--right-stab"));
  return cosets_to_json(*d, double_cosets(*d, id->w_ext(), left, right));
}

Json do_bimod(const Args& a, const std::string& mode) {
  const CartanPtr d = build_root_system(a.type);
  const Weight lambda = read_weight(*d, a.lambda, "--lambda");
  if (mode == "index") {
    if (a.mu.empty()) throw InvalidInput("bimod index: --mu is required");
    const auto index = indecomposable_index(d, read_weight(*d, a.mu, "--mu"), lambda);
    Json labels = Json::array();
    for (const auto& l : index.labels) {
      labels.push_back(Json{{"c", element_to_json(*d, index.ambient->chamber()[l.chamber])},
                            {"rep", element_to_json(*d, l.representative)},
                            {"size", l.coset_size}});
    }
    return Json{{"mu", weight_to_json(index.mu)},
                {"lambda", weight_to_json(index.lambda)},
                {"count", index.labels.size()},
                {"labels", labels}};
  }
  if (a.word.empty()) throw InvalidInput("bimod " + mode + ": --word is required");
  const IntegralPtr id = integral_datum(d, lambda);
  const BimoduleWord word = read_word(id, a.word);
  if (mode == "grade") return Json{{"word", word_to_json(word)}, {"grading", grading(word).to_string()}};
  const BimoduleWord nf = normalize(word);
  Json j = word_to_json(nf);
  j["rank_left"] = rank_left(nf);
  return j;
}

Json do_hecke(const Args& a, const std::string& mode) {
  const CartanPtr d = build_root_system(a.type);
  const Weight lambda = a.lambda.empty() ? Weight::zero(d->rank()) : read_weight(*d, a.lambda, "--lambda");
  const IntegralPtr id = integral_datum(d, lambda);
  HeckeAlgebra h(id);
  if (mode == "kl") {
    if (a.x.empty() || a.w.empty()) throw InvalidInput("hecke kl: --x and --w are required");
    const WeylElement x = read_element(*d, a.x, "--x");
    const WeylElement w = read_element(*d, a.w, "--w");
    const LaurentPoly p = h.kl().kl_polynomial(x, w);
    return Json{{"x", element_to_json(*d, x)}, {"w", element_to_json(*d, w)}, {"poly", poly_to_json(p)}, {"text", p.to_string("q")}};
  }
  if (a.word.empty()) throw InvalidInput("hecke decompose: --word is required");
  const BimoduleWord word = normalize(read_word(id, a.word));
  const HeckeElement ch = bs_character(h, word);
  Json j = decomposition_to_json(h, decompose(h, ch));
  j["word"] = word_to_json(word);
  j["character"] = hecke_to_json(h, ch);
  return j;
}

Json do_catO(const Args& a, const std::string& mode) {
  const CartanPtr d = build_root_system(a.type);
  if (mode == "weights") {
    if (a.highest.empty()) throw InvalidInput("catO weights: --highest is required");
    return multiset_to_json(irrep_weight_multiset(*d, read_weight(*d, a.highest, "--highest")));
  }
  if (a.lambda.empty() || a.mu.empty() || a.w.empty()) throw InvalidInput("catO translate: --lambda, --mu and --w are required");
  const Weight lambda = read_weight(*d, a.lambda, "--lambda");
  const Weight mu = read_weight(*d, a.mu, "--mu");
  return translation_to_json(*d, translate_verma(d, lambda, mu, read_element(*d, a.w, "--w")));
}

int do_run(const Args& a, std::ostream& out, std::ostream& err) {
  RunOptions options;
  options.workers = a.workers;
  options.seed = a.seed;
  options.words_per_block = a.words;
  const RunReport report = run_corpus(load_corpus(a.corpus), options);
  const std::string doc = report_to_json(report, !a.no_timings).dump(2) + "\n";
  if (a.out_path.empty()) {
    out << doc;
    err << report_table(report);
  } else {
    std::ofstream f(a.out_path);
    if (!f) throw InvalidInput("--out: cannot write " + a.out_path);
    f << doc;
    out << report_table(report);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral Weyl group, Soergel word and Hecke algebra computations", "hcb"};
  app.require_subcommand(1);
  Args a;

  auto* integral = app.add_subcommand("integral", "Integral root data of a weight");
  integral->add_option("--type", a.type, "Cartan type, e.g. A3 or A1xA1")->required();
  integral->add_option("--lambda", a.lambda, "Weight, e.g. 0,1/2,0")->required();

  auto* xi = app.add_subcommand("xi", "Proper pairs for two dot orbits");
  xi->add_option("--type", a.type)->required();
  xi->add_option("--mu", a.mu)->required();
  xi->add_option("--lambda", a.lambda)->required();

  auto* cosets = app.add_subcommand("cosets", "Double cosets of dot stabilizers in the extended integral group");
  cosets->add_option("--type", a.type)->required();
  cosets->add_option("--lambda", a.lambda)->required();
  cosets->add_option("--left-stab", a.left_stab, "Weight whose stabilizer acts on the left")->required();
  cosets->add_option("--right-stab", a.right_stab, "Weight whose stabilizer acts on the right")->required();

  auto* bimod = app.add_subcommand("bimod", "Graded words in B_s and twists");
  bimod->require_subcommand(1);
  for (const char* mode : {"normalize", "grade", "index"}) {
    auto* sub = bimod->add_subcommand(mode);
    sub->add_option("--type", a.type)->required();
    sub->add_option("--lambda", a.lambda)->required();
    sub->add_option("--word", a.word, "JSON array such as [\"B:s1\",\"R:2-1-3-2\"]");
    sub->add_option("--mu", a.mu);
  }

  auto* hecke = app.add_subcommand("hecke", "Kazhdan-Lusztig polynomials and decompositions");
  hecke->require_subcommand(1);
  auto* kl = hecke->add_subcommand("kl");
  kl->add_option("--type", a.type)->required();
  kl->add_option("--lambda", a.lambda, "Defaults to 0");
  kl->add_option("--x", a.x, "Element as 1-2-1, s1s2s1 or [1,2,1]")->required();
  kl->add_option("--w", a.w)->required();
  auto* dec = hecke->add_subcommand("decompose");
  dec->add_option("--type", a.type)->required();
  dec->add_option("--lambda", a.lambda, "Defaults to 0");
  dec->add_option("--word", a.word)->required();

  auto* cato = app.add_subcommand("catO", "Characters and translation of Verma modules");
  cato->require_subcommand(1);
  auto* weights = cato->add_subcommand("weights");
  weights->add_option("--type", a.type)->required();
  weights->add_option("--highest", a.highest)->required();
  auto* translate = cato->add_subcommand("translate");
  translate->add_option("--type", a.type)->required();
  translate->add_option("--lambda", a.lambda)->required();
  translate->add_option("--mu", a.mu)->required();
  translate->add_option("--w", a.w)->required();

  auto* run = app.add_subcommand("run", "Run every check on a corpus");
  run->add_option("--corpus", a.corpus)->required();
  run->add_option("--workers", a.workers)->check(CLI::Range(1, 256));
  run->add_option("--seed", a.seed);
  run->add_option("--words", a.words, "Random words per block for the rewriting checks");
  run->add_option("--out", a.out_path, "Write the JSON report here instead of standard output");
  run->add_flag("--no-timings", a.no_timings, "Omit elapsed times so reports compare byte for byte");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  try {
    std::optional<Json> doc;
    if (integral->parsed()) doc = do_integral(a);
    if (xi->parsed()) doc = do_xi(a);
    if (cosets->parsed()) doc = do_cosets(a);
    for (auto* sub : bimod->get_subcommands()) doc = do_bimod(a, sub->get_name());
    for (auto* sub : hecke->get_subcommands()) doc = do_hecke(a, sub->get_name());
    for (auto* sub : cato->get_subcommands()) doc = do_catO(a, sub->get_name());
    if (run->parsed()) return do_run(a, out, err);
    if (doc) out << doc->dump(2) << '\n';
    return 0;
  } catch (const CorpusError& e) {
    err << "schema error: " << e.what() << '\n';
    return 3;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace hcb::cli
