#pragma once

// JSON encodings shared by the command line tool and the tests.

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "hcb/catO.hpp"
#include "hcb/coxeter.hpp"
#include "hcb/hecke.hpp"
#include "hcb/integral.hpp"
#include "hcb/laurent.hpp"
#include "hcb/soergel.hpp"

namespace hcb {

using Json = nlohmann::ordered_json;

/// ["1/2", "0", "-1"].
Json weight_to_json(const Weight& w);
/// Accepts strings or integers. Throws InvalidInput naming the offending entry.
Weight weight_from_json(const Json& j, std::size_t rank);

Json cartan_to_json(const CartanDatum& datum);

/// Smallest reduced word, 1-based.
Json element_to_json(const CartanDatum& datum, const WeylElement& w);
WeylElement element_from_json(const CartanDatum& datum, const Json& j);
/// "e" or "s1s3s2".
std::string element_label(const CartanDatum& datum, const WeylElement& w);
/// "e" or "2-1-3-2".
std::string element_dashed(const CartanDatum& datum, const WeylElement& w);
/// Inverse of element_dashed; also accepts "s2s1".
WeylElement parse_element(const CartanDatum& datum, std::string_view text);

Json integral_to_json(const IntegralDatum& id);
Json cosets_to_json(const CartanDatum& datum, const DoubleCosetDecomposition& dec);

/// "R:2-1-3-2", "R:e" or "B:s1" (B indices count integral simples from 1).
std::string letter_to_string(const IntegralDatum& id, const Letter& letter);
Letter parse_letter(const IntegralDatum& id, std::string_view text);
Json word_to_json(const BimoduleWord& word);
/// Array of letter strings; the shift is the zero class.
BimoduleWord word_from_json(const IntegralPtr& id, const Json& j);

/// {"-1": 1, "1": 1}.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json hecke_to_json(const HeckeAlgebra& hecke, const HeckeElement& h);
Json decomposition_to_json(const HeckeAlgebra& hecke, const std::vector<DecompositionTerm>& terms);

Json multiset_to_json(const WeightMultiset& m);
Json translation_to_json(const CartanDatum& datum, const TranslationResult& r);

}  // namespace hcb
