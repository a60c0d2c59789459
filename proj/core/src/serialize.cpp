#include "hcb/serialize.hpp"

#include <cctype>

#include "hcb/error.hpp"

namespace hcb {

Json weight_to_json(const Weight& w) {
  Json j = Json::array();
  for (const auto& q : w.coords()) j.push_back(to_string(q));
  return j;
}

Weight weight_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw InvalidInput("weight must be an array of rationals");
  if (j.size() != rank) {
    throw InvalidInput("weight has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(rank));
  }
  std::vector<Rational> coords;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    try {
      if (e.is_string()) {
        coords.push_back(parse_rational(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        coords.push_back(Rational(static_cast<long>(e.get<long long>())));
      } else {
        throw InvalidInput("expected a string or integer");
      }
    } catch (const InvalidInput& err) {
      throw InvalidInput("weight coordinate " + std::to_string(k) + ": " + err.what());
    }
  }
  return Weight(std::move(coords));
}

Json cartan_to_json(const CartanDatum& datum) {
  return Json{{"type", datum.type_label()}, {"rank", datum.rank()}, {"cartan_matrix", datum.cartan_matrix()}};
}

Json element_to_json(const CartanDatum& datum, const WeylElement& w) {
  Json j = Json::array();
  for (int i : datum.reduced_word(w)) j.push_back(i + 1);
  return j;
}

WeylElement element_from_json(const CartanDatum& datum, const Json& j) {
  if (!j.is_array()) throw InvalidInput("Weyl element must be an array of simple indices");
  std::vector<int> word;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput("Weyl element letters must be integers");
    const long long i = e.get<long long>();
    if (i < 1 || i > static_cast<long long>(datum.rank())) throw InvalidInput("simple index " + std::to_string(i) + " out of range");
    word.push_back(static_cast<int>(i - 1));
  }
  return datum.from_word(word);
}

std::string element_label(const CartanDatum& datum, const WeylElement& w) {
  const auto word = datum.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string element_dashed(const CartanDatum& datum, const WeylElement& w) {
  const auto word = datum.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) {
    if (!s.empty()) s += "-";
    s += std::to_string(i + 1);
  }
  return s;
}

WeylElement parse_element(const CartanDatum& datum, std::string_view text) {
  if (text == "e" || text.empty()) return datum.identity();
  std::vector<int> word;
  std::string digits;
  auto flush = [&]() {
    if (digits.empty()) return;
    const int i = std::stoi(digits);
    if (i < 1 || i > static_cast<int>(datum.rank())) throw InvalidInput("simple index " + digits + " out of range");
    word.push_back(i - 1);
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (digits.size() > 3) throw InvalidInput("malformed Weyl element '" + std::string(text) + "'");
    } else if (ch == '-' || ch == 's' || ch == ',' || ch == ' ') {
      flush();
    } else {
      throw InvalidInput("malformed Weyl element '" + std::string(text) + "'");
    }
  }
  flush();
  if (word.empty()) throw InvalidInput("malformed Weyl element '" + std::string(text) + "'");
  return datum.from_word(word);
}

Json integral_to_json(const IntegralDatum& id) {
  const CartanDatum& d = id.datum();
  Json simples = Json::array();
  for (std::size_t k = 0; k < id.num_integral_simples(); ++k) {
    const std::size_t r = id.integral_simples()[k];
    simples.push_back(Json{{"index", k + 1},
                           {"root", d.root(r).simple_coords},
                           {"reflection", element_to_json(d, d.reflection(r))}});
  }
  Json chamber = Json::array();
  Json tau_map = Json::object();
  for (const auto& c : id.chamber()) {
    chamber.push_back(element_to_json(d, c));
    tau_map[element_label(d, c)] = tau(id, c).to_string();
  }
  return Json{{"type", d.type_label()},
              {"lambda", weight_to_json(id.lambda())},
              {"integral_simples", simples},
              {"integral_root_count", id.integral_roots().size()},
              {"w_int_order", id.w_int().size()},
              {"w_ext_order", id.w_ext().size()},
              {"chamber_order", id.chamber().size()},
              {"chamber", chamber},
              {"tau", tau_map},
              {"lambda_sharp", weight_to_json(lambda_sharp(id))}};
}

Json cosets_to_json(const CartanDatum& datum, const DoubleCosetDecomposition& dec) {
  auto gens = [&](const SubgroupHandle& h) {
    Json j = Json::array();
    for (const auto& g : h.generators) j.push_back(element_to_json(datum, g));
    return j;
  };
  Json cosets = Json::array();
  for (const auto& c : dec.cosets) {
    cosets.push_back(Json{{"rep", element_to_json(datum, c.representative)}, {"size", c.members.size()}});
  }
  return Json{{"left_gens", gens(dec.left)},
              {"right_gens", gens(dec.right)},
              {"ambient_size", dec.ambient_size},
              {"count", dec.cosets.size()},
              {"cosets", cosets}};
}

std::string letter_to_string(const IntegralDatum& id, const Letter& letter) {
  if (letter.is_bs()) return "B:s" + std::to_string(letter.index + 1);
  return "R:" + element_dashed(id.datum(), id.chamber().at(letter.index));
}

Letter parse_letter(const IntegralDatum& id, std::string_view text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'B' && text[0] != 'R')) {
    throw InvalidInput("malformed word letter '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(2);
  if (text[0] == 'R') {
    const WeylElement c = parse_element(id.datum(), body);
    const auto idx = id.chamber_index(c);
    if (!idx) throw InvalidInput("twist '" + std::string(body) + "' is not in the chamber subgroup");
    return Letter::R(*idx);
  }
  std::string_view num = body;
  if (!num.empty() && num.front() == 's') num.remove_prefix(1);
  if (num.empty() || num.size() > 3 ||
      !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidInput("malformed word letter '" + std::string(text) + "'");
  }
  const std::size_t k = std::stoul(std::string(num));
  if (k < 1 || k > id.num_integral_simples()) {
    throw InvalidInput("'" + std::string(text) + "': integral simple index out of range 1.." +
                       std::to_string(id.num_integral_simples()));
  }
  return Letter::B(k - 1);
}

Json word_to_json(const BimoduleWord& word) {
  Json letters = Json::array();
  for (const auto& l : word.letters()) letters.push_back(letter_to_string(*word.ambient(), l));
  return Json{{"letters", letters}, {"grading", grading(word).to_string()}};
}

BimoduleWord word_from_json(const IntegralPtr& id, const Json& j) {
  const Json& arr = j.is_object() && j.contains("letters") ? j["letters"] : j;
  if (!arr.is_array()) throw InvalidInput("word must be a JSON array of letters");
  std::vector<Letter> letters;
  for (const auto& e : arr) {
    if (!e.is_string()) throw InvalidInput("word letters must be strings");
    letters.push_back(parse_letter(*id, e.get<std::string>()));
  }
  return BimoduleWord(id, std::move(letters));
}

Json poly_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("polynomial must be an object of exponent: coefficient");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw InvalidInput("polynomial coefficients must be integers");
    p += LaurentPoly::monomial(std::stoi(k), v.get<long long>());
  }
  return p;
}

namespace {

Json label_json(const HeckeAlgebra& hecke, std::size_t c, std::size_t x) {
  const CartanDatum& d = hecke.integral().datum();
  return Json{{"c", element_to_json(d, hecke.integral().chamber()[c])}, {"x", element_to_json(d, hecke.group().element(x))}};
}

}  // namespace

Json hecke_to_json(const HeckeAlgebra& hecke, const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [label, p] : h.terms()) {
    Json t = label_json(hecke, label.first, label.second);
    t["poly"] = poly_to_json(p);
    terms.push_back(std::move(t));
  }
  return Json{{"basis", "standard"}, {"terms", terms}};
}

Json decomposition_to_json(const HeckeAlgebra& hecke, const std::vector<DecompositionTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) {
    Json j = label_json(hecke, t.c, t.x);
    j["poly"] = poly_to_json(t.coefficient);
    j["multiplicity"] = t.multiplicity;
    arr.push_back(std::move(j));
  }
  return Json{{"basis", "KL"}, {"terms", arr}};
}

Json multiset_to_json(const WeightMultiset& m) {
  Json arr = Json::array();
  for (const auto& e : m) arr.push_back(Json{{"weight", weight_to_json(e.weight)}, {"mult", e.mult}});
  return arr;
}

Json translation_to_json(const CartanDatum& datum, const TranslationResult& r) {
  auto key_json = [&](const VermaKey& k) {
    return Json{{"dominant", weight_to_json(k.dominant)}, {"w", element_to_json(datum, k.coset_rep)}};
  };
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json j{{"weight", weight_to_json(t.weight)}, {"key", key_json(t.key)}, {"coefficient", t.coefficient}};
    terms.push_back(std::move(j));
  }
  return Json{{"terms", terms},
              {"expected", key_json(r.expected)},
              {"matches_expected", r.matches_expected},
              {"stabilizers_nested", r.stabilizers_nested},
              {"extremal_weight", weight_to_json(r.extremal_weight)},
              {"extremal_multiplicity", r.extremal_multiplicity},
              {"only_extremal", r.only_extremal}};
}

}  // namespace hcb
