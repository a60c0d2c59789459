#include <algorithm>
#include <set>
#include <unordered_map>

#include "corpus.hpp"
#include "generators.hpp"
#include "hcb/error.hpp"

namespace hcb::cli {

namespace {

CheckResult fail(std::string witness, Json detail = Json::object()) {
  CheckResult r;
  r.status = Status::fail;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

CheckResult skip(std::string why) {
  CheckResult r;
  r.status = Status::skip;
  r.detail = Json{{"reason", std::move(why)}};
  return r;
}

CheckResult pass(Json detail = Json::object()) {
  CheckResult r;
  r.detail = std::move(detail);
  return r;
}

std::string label(const CartanDatum& d, const WeylElement& w) { return element_label(d, w); }

std::vector<WeylElement> sorted(std::vector<WeylElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Local integral-simple indices whose reflection fixes x under the dot action.
std::vector<std::size_t> wall_indices(const IntegralDatum& id, const Weight& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < id.num_integral_simples(); ++i) {
    if (id.datum().pairing(x + id.datum().rho(), id.integral_simples()[i]) == 0) out.push_back(i);
  }
  return out;
}

Weight dominant_lambda(const CheckContext& ctx) { return dominant_dot_rep(*ctx.id, ctx.entry.lambda).dominant; }

// ------------------------------------------------------------------ checks

CheckResult check_tau(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  const auto& ext = id.w_ext();
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index;
  std::vector<LatticeClass> t;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    index.emplace(ext[a], a);
    t.push_back(tau(id, ext[a]));
  }
  if (!tau(id, d.identity()).is_zero()) return fail("tau(e) is not zero");
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    for (std::size_t b = 0; b < ext.size(); ++b) {
      auto it = index.find(ext[a] * ext[b]);
      if (it == index.end()) return fail("w_ext not closed: " + label(d, ext[a]) + " * " + label(d, ext[b]));
      if (t[it->second] != t[a] + t[b]) {
        return fail("tau(w1 w2) != tau(w1) + tau(w2) for w1 = " + label(d, ext[a]) + ", w2 = " + label(d, ext[b]));
      }
      ++pairs;
    }
  }
  std::size_t kernel = 0;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    const bool in_kernel = t[a].is_zero();
    kernel += in_kernel ? 1 : 0;
    if (in_kernel != id.w_int().contains(ext[a])) {
      return fail("kernel of tau differs from the integral Weyl group at " + label(d, ext[a]));
    }
  }
  if (kernel != id.w_int().size()) return fail("kernel has " + std::to_string(kernel) + " elements");
  return pass({{"w_ext_order", ext.size()}, {"pairs", pairs}, {"kernel_order", kernel}});
}

CheckResult check_semidirect(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  const auto& ch = id.chamber();
  const std::size_t npos = d.num_positive_roots();
  for (const auto& a : ch) {
    for (const auto& b : ch) {
      if (!(a * b == b * a)) return fail("chamber not abelian: " + label(d, a) + ", " + label(d, b));
      if (!id.chamber_index(a * b)) return fail("chamber not closed: " + label(d, a) + " * " + label(d, b));
    }
    if (!a.is_identity() && id.w_int().contains(a)) return fail("chamber meets the integral group at " + label(d, a));
  }
  if (ch.size() * id.w_int().size() != id.w_ext().size()) {
    return fail("|C| |W_int| = " + std::to_string(ch.size() * id.w_int().size()) + " but |W_ext| = " +
                std::to_string(id.w_ext().size()));
  }
  const auto& pi = id.integral_simples();
  for (std::size_t c = 0; c < ch.size(); ++c) {
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const std::size_t r = ch[c].root_image(pi[i]);
      if (r >= npos || std::find(pi.begin(), pi.end(), r) == pi.end()) {
        return fail("conjugation by " + label(d, ch[c]) + " moves simple " + std::to_string(i + 1) + " off the simple system");
      }
      const std::size_t j = id.conjugate_simple(c, i);
      if (!(ch[c] * id.w_int().simple_reflection(i) * d.inverse(ch[c]) == id.w_int().simple_reflection(j))) {
        return fail("c s_i c^-1 != s_j for c = " + label(d, ch[c]) + ", i = " + std::to_string(i + 1));
      }
      image.insert(j);
    }
    if (image.size() != pi.size()) return fail("conjugation by " + label(d, ch[c]) + " is not a permutation");
  }
  const Weight lam = dominant_lambda(ctx);
  for (const auto& c : ch) {
    if (!classify_weight(d, dot_action(d, c, lam)).dominant) {
      return fail("c . lambda not dominant for c = " + label(d, c) + ", lambda = " + lam.to_string());
    }
  }
  for (const auto& w : id.w_ext()) {
    const auto dec = chamber_decompose(id, w);
    if (!(dec.c * dec.u == w)) return fail("chamber_decompose does not multiply back at " + label(d, w));
  }
  return pass({{"chamber_order", ch.size()}, {"w_int_order", id.w_int().size()}, {"w_ext_order", id.w_ext().size()}});
}

CheckResult check_integral_conjugation(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  Rng rng(ctx.seed);
  const auto& group = weyl_group(ctx.datum)->elements();
  std::vector<WeylElement> sample;
  if (group.size() <= 48) {
    sample = group;
  } else {
    for (int k = 0; k < 16; ++k) sample.push_back(random_element(rng, group));
  }
  for (const auto& w : sample) {
    const IntegralPtr moved = integral_datum(ctx.datum, dot_action(d, w, id.lambda()));
    std::vector<std::size_t> expect;
    for (std::size_t k : id.integral_roots()) expect.push_back(w.root_image(k));
    std::sort(expect.begin(), expect.end());
    if (expect != moved->integral_roots()) return fail("integral roots of w.lambda differ from w(roots) for w = " + label(d, w));
    if (moved->w_int().size() != id.w_int().size()) return fail("integral group order changes under w = " + label(d, w));
  }
  for (int k = 0; k < 8; ++k) {
    Weight shift = random_weight(rng, d.rank(), 3, {1});
    const IntegralPtr other = integral_datum(ctx.datum, id.lambda() + shift);
    if (other->integral_roots() != id.integral_roots()) {
      return fail("integral roots change under the integral shift " + shift.to_string());
    }
  }
  return pass({{"conjugates_checked", sample.size()}});
}

CheckResult check_dominance(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  Rng rng(ctx.seed);
  std::vector<Weight> sample{id.lambda(), dominant_lambda(ctx)};
  for (int k = 0; k < 40; ++k) sample.push_back(id.lambda() + random_weight(rng, d.rank(), 3, {1}));
  std::size_t dominant = 0;
  for (const auto& nu : sample) {
    const bool full = classify_weight(d, nu).dominant;
    if (full != is_integrally_dominant(id, nu)) return fail("dominance tests disagree at " + nu.to_string());
    dominant += full ? 1 : 0;
  }
  return pass({{"weights", sample.size()}, {"dominant", dominant}});
}

CheckResult check_stabilizer(const CheckContext& ctx) {
  const CartanDatum& d = *ctx.datum;
  Rng rng(ctx.seed);
  std::vector<Weight> sample{ctx.entry.lambda};
  if (ctx.entry.mu) sample.push_back(*ctx.entry.mu);
  for (std::size_t k = 0; k < ctx.options.random_stabilizer_weights; ++k) {
    sample.push_back(random_weight(rng, d.rank(), 2, {1, 2, 3}));
  }
  std::size_t nontrivial = 0;
  for (const auto& x : sample) {
    const auto fast = dot_stabilizer(ctx.datum, x).elements;
    const auto slow = sorted(brute_force_stabilizer(ctx.datum, x));
    if (fast != slow) return fail("dot stabilizer differs from brute force at " + x.to_string());
    nontrivial += fast.size() > 1 ? 1 : 0;
  }
  return pass({{"weights", sample.size()}, {"singular", nontrivial}});
}

CheckResult check_triple_count(const CheckContext& ctx) {
  const Weight mu = ctx.entry.mu.value_or(ctx.entry.lambda);
  const Weight& lambda = ctx.entry.lambda;
  if (!are_compatible(ctx.datum, mu, lambda)) {
    if (!enumerate_xi(ctx.datum, mu, lambda).empty()) return fail("incompatible orbits but a nonempty proper pair set");
    if (xi_double_coset_count(ctx.datum, mu, lambda) != 0) return fail("incompatible orbits but double cosets exist");
    return pass({{"compatible", false}});
  }
  const std::size_t xi = enumerate_xi(ctx.datum, mu, lambda).size();
  const std::size_t cosets = xi_double_coset_count(ctx.datum, mu, lambda);
  const auto index = indecomposable_index(ctx.datum, mu, lambda);
  const std::size_t labels = index.labels.size();
  Json detail{{"compatible", true}, {"xi", xi}, {"double_cosets", cosets}, {"labels", labels}};
  if (xi != cosets || cosets != labels) {
    return fail("counts differ for mu = " + mu.to_string() + ", lambda = " + lambda.to_string(), detail);
  }
  return pass(detail);
}

CheckResult check_translation(const CheckContext& ctx) {
  if (!ctx.entry.mu) return skip("no mu");
  const auto aligned = align_pair(ctx.datum, *ctx.entry.mu, ctx.entry.lambda);
  if (!aligned) return skip("orbits not compatible");
  const auto& [mu, lam] = *aligned;
  const CartanDatum& d = *ctx.datum;
  const auto sl = dot_stabilizer(ctx.datum, lam).elements;
  const auto sm = dot_stabilizer(ctx.datum, mu).elements;
  if (!std::includes(sm.begin(), sm.end(), sl.begin(), sl.end())) return skip("stabilizers not nested");
  std::size_t count = 0;
  for (const auto& w : ctx.id->w_int().elements()) {
    const auto r = translate_verma(ctx.datum, lam, mu, w);
    const std::string where = "w = " + label(d, w) + ", lambda = " + lam.to_string() + ", mu = " + mu.to_string();
    if (!r.stabilizers_nested) return fail("nesting flag inconsistent at " + where);
    if (!r.only_extremal) return fail("a weight other than w(mu - lambda) survives the filter at " + where);
    if (r.extremal_multiplicity != 1) return fail("extremal weight multiplicity " + std::to_string(r.extremal_multiplicity) + " at " + where);
    if (!r.matches_expected) return fail("translation is not Delta(w.mu) at " + where, translation_to_json(d, r));
    if (!(r.terms.front().weight == dot_action(d, w, mu))) return fail("surviving weight is not w.mu at " + where);
    ++count;
  }
  return pass({{"lambda", weight_to_json(lam)}, {"mu", weight_to_json(mu)}, {"elements", count}});
}

CheckResult check_subgeneric(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  Json found = Json::array();
  for (std::size_t i = 1; i <= id.num_integral_simples(); ++i) {
    const Weight m = find_subgeneric(id, i);
    const std::string where = "index " + std::to_string(i) + ": " + m.to_string();
    if (!(m - id.lambda()).is_integral()) return fail("not in lambda + weight lattice, " + where);
    if (!classify_weight(d, m).dominant) return fail("not dominant, " + where);
    const auto stab = sorted(brute_force_stabilizer(ctx.datum, m));
    if (stab != sorted({d.identity(), d.reflection(id.integral_simples()[i - 1])})) return fail("wrong stabilizer, " + where);
    found.push_back(weight_to_json(m));
  }
  const Weight r = find_regular_dominant(id);
  const WeightClass wc = classify_weight(d, r);
  if (!(r - id.lambda()).is_integral() || !wc.dominant || !wc.regular || brute_force_stabilizer(ctx.datum, r).size() != 1) {
    return fail("regular dominant certificate fails at " + r.to_string());
  }
  return pass({{"subgeneric", found}, {"regular", weight_to_json(r)}});
}

CheckResult check_kl(const CheckContext& ctx) {
  HeckeAlgebra h(ctx.id);
  const CoxeterSystem& g = h.group();
  const CartanDatum& d = g.datum();
  std::size_t polys = 0;
  for (std::size_t w = 0; w < g.size(); ++w) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      const LaurentPoly& p = h.kl().polynomial(x, w);
      if (!g.bruhat_leq(x, w)) {
        if (!p.is_zero()) return fail("P_{x,w} nonzero off the Bruhat interval for x = " + label(d, g.element(x)));
        continue;
      }
      ++polys;
      if (x == w) {
        if (!(p == LaurentPoly::constant(1))) return fail("P_{w,w} != 1 at " + label(d, g.element(w)));
        continue;
      }
      if (!p.nonnegative() || p.coefficient(0) != 1 || p.min_degree() < 0 ||
          2 * p.max_degree() > g.length(w) - g.length(x) - 1) {
        return fail("KL polynomial " + p.to_string("q") + " fails the sanity conditions for x = " + label(d, g.element(x)) +
                    ", w = " + label(d, g.element(w)));
      }
    }
    const HeckeElement b = h.kl_basis(0, w);
    if (!(b.coefficient({0, w}) == LaurentPoly::constant(1))) return fail("b_w does not have leading coefficient 1");
    for (const auto& [lab, p] : b.terms()) {
      if (lab.first != 0 || !g.bruhat_leq(lab.second, w)) return fail("b_w has support outside the Bruhat interval");
    }
  }
  const LaurentPoly quantum2 = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1);
  for (std::size_t s = 0; s < g.rank(); ++s) {
    const HeckeElement bs = h.generator(s);
    if (!(h.multiply(bs, bs) == bs.scaled(quantum2))) return fail("b_s b_s != (v + v^-1) b_s for s = " + std::to_string(s + 1));
  }
  // Left multiplication by b_s in the KL basis: nonnegative, and (v + v^-1) b_w on descents.
  Rng rng(ctx.seed);
  std::vector<std::size_t> ws;
  if (g.size() <= 200) {
    for (std::size_t w = 0; w < g.size(); ++w) ws.push_back(w);
  } else {
    for (int k = 0; k < 200; ++k) ws.push_back(rng.below(g.size()));
  }
  for (std::size_t s = 0; s < g.rank(); ++s) {
    for (std::size_t w : ws) {
      const auto terms = decompose(h, h.multiply(h.generator(s), h.kl_basis(0, w)));
      if (g.length(g.left_multiply(w, s)) < g.length(w)) {
        if (terms.size() != 1 || terms[0].x != w || !(terms[0].coefficient == quantum2)) {
          return fail("b_s b_w != (v + v^-1) b_w on a descent, w = " + label(d, g.element(w)));
        }
      } else {
        const auto top = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.x == g.left_multiply(w, s); });
        if (top == terms.end() || top->multiplicity != 1) return fail("b_s b_w lacks b_sw, w = " + label(d, g.element(w)));
      }
    }
  }
  return pass({{"group_order", g.size()}, {"polynomials", polys}});
}

CheckResult check_rewriter(const CheckContext& ctx) {
  Rng rng(ctx.seed);
  HeckeAlgebra h(ctx.id);
  const bool characters = h.group().size() <= 200;
  std::size_t total_steps = 0;
  for (std::size_t k = 0; k < ctx.options.words_per_block; ++k) {
    const BimoduleWord w = random_word(rng, ctx.id, ctx.options.max_word_length);
    const std::string where = word_to_json(w).dump();
    const BimoduleWord canonical = normalize(w);
    if (!is_normal(canonical)) return fail("normalize returned a reducible word " + where);
    for (int order = 0; order < 3; ++order) {
      const auto [nf, steps] = random_normalize(rng, w);
      if (!(nf == canonical)) return fail("rewrite orders disagree on " + where);
      if (steps > std::max<std::size_t>(1, w.size() * w.size())) return fail("more than length^2 steps on " + where);
      total_steps += steps;
    }
    if (!(grading(canonical) == grading(w))) return fail("grading changed by rewriting " + where);
    if (canonical.bs_count() != w.bs_count()) return fail("Bs count changed by rewriting " + where);
    if (rank_left(canonical) != rank_left(w)) return fail("rank changed by rewriting " + where);
    const auto& ls = canonical.letters();
    for (std::size_t p = 1; p < ls.size(); ++p) {
      if (ls[p].is_rw()) return fail("normal form has a twist after position 0: " + where);
    }
    if (!ls.empty() && ls[0].is_rw() && ls[0].index == 0) return fail("normal form keeps a trivial twist: " + where);
    if (characters && k < 50 && !(bs_character(h, canonical) == bs_character(h, w))) {
      return fail("character changed by rewriting " + where);
    }
  }
  return pass({{"words", ctx.options.words_per_block}, {"random_steps", total_steps}});
}

CheckResult check_p_objects(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const CartanDatum& d = id.datum();
  HeckeAlgebra h(ctx.id);
  const Weight mu = dominant_lambda(ctx);
  Rng rng(ctx.seed);
  std::vector<std::vector<std::size_t>> subsets{{}};
  for (std::size_t i = 0; i < id.num_integral_simples(); ++i) subsets.push_back({i});
  if (id.num_integral_simples() > 0) {
    std::vector<std::size_t> longer;
    for (int k = 0; k < 3; ++k) longer.push_back(rng.below(id.num_integral_simples()));
    subsets.push_back(longer);
  }
  std::size_t built = 0;
  for (std::size_t c = 0; c < id.chamber().size(); ++c) {
    for (const auto& I : subsets) {
      const PObject p = build_p_object(ctx.id, make_p_object_spec(ctx.id, c, I, mu));
      const std::string where = "c = " + label(d, id.chamber()[c]) + ", |I| = " + std::to_string(I.size());
      std::vector<Letter> expect;
      if (c != 0) expect.push_back(Letter::R(c));
      for (std::size_t i : I) expect.push_back(Letter::B(i));
      if (p.predicted_image.letters() != expect) return fail("predicted image is not [Rw(c), Bs(...)] at " + where);
      if (!is_normal(p.predicted_image)) return fail("predicted image not normal at " + where);
      const LatticeClass want = lattice_class(d, dot_action(d, id.chamber()[c], mu) - id.lambda());
      if (!(grading(p.predicted_image) == want)) return fail("image grading is not the class of c.mu - lambda at " + where);
      if (p.factorization.size() != 2 * I.size() + 2) return fail("factorization length wrong at " + where);
      if (I.size() == 1) {
        const auto terms = decompose(h, bs_character(h, p.predicted_image));
        if (terms.size() != 1 || terms[0].c != c || terms[0].x != h.group().left_multiply(0, I[0]) || terms[0].multiplicity != 1) {
          return fail("image of a one-letter P object does not decompose to a single label at " + where);
        }
      }
      ++built;
    }
  }
  return pass({{"objects", built}});
}

CheckResult check_hecke_labels(const CheckContext& ctx) {
  const IntegralDatum& id = *ctx.id;
  const Weight lam = dominant_lambda(ctx);
  if (!classify_weight(id.datum(), lam).regular) return skip("lambda is singular");
  if (id.w_int().size() > 200) return skip("integral group too large for the exhaustive label sweep");
  HeckeAlgebra h(ctx.id);
  std::set<HeckeLabel> seen;
  for (std::size_t c = 0; c < id.chamber().size(); ++c) {
    for (std::size_t x = 0; x < h.group().size(); ++x) {
      std::vector<Letter> letters{Letter::R(c)};
      for (int s : h.group().word(x)) letters.push_back(Letter::B(static_cast<std::size_t>(s)));
      const BimoduleWord w = normalize(BimoduleWord(ctx.id, letters));
      bool top = false;
      for (const auto& t : decompose(h, bs_character(h, w))) {
        seen.insert({t.c, t.x});
        top = top || (t.c == c && t.x == x && t.multiplicity == 1);
      }
      if (!top) return fail("label (" + label(id.datum(), id.chamber()[c]) + ", " + label(id.datum(), h.group().element(x)) + ") missing");
    }
  }
  const std::size_t count = xi_double_coset_count(ctx.datum, lam, lam);
  if (seen.size() != id.w_ext().size() || count != seen.size()) {
    return fail("label count " + std::to_string(seen.size()) + " vs |W_ext| " + std::to_string(id.w_ext().size()) +
                " vs double cosets " + std::to_string(count));
  }
  return pass({{"labels", seen.size()}});
}

CheckResult check_singular(const CheckContext& ctx) {
  if (!ctx.entry.mu) return skip("no mu");
  const auto aligned = align_pair(ctx.datum, *ctx.entry.mu, ctx.entry.lambda);
  if (!aligned) return skip("orbits not compatible");
  const auto& [mu, lam] = *aligned;
  const IntegralPtr id = integral_datum(ctx.datum, lam);
  const auto I = wall_indices(*id, mu);
  const auto J = wall_indices(*id, lam);
  if (!std::includes(I.begin(), I.end(), J.begin(), J.end())) return skip("stabilizers not nested");
  const SingularWord sw = translation_round_trip(id, I, J);
  if (!validate_singular_word(sw)) return fail("round-trip chain rejected");
  const std::size_t wm = dot_stabilizer(ctx.datum, mu).order();
  const std::size_t wl = dot_stabilizer(ctx.datum, lam).order();
  if (rank_left(sw) != wm / wl) {
    return fail("rank " + std::to_string(rank_left(sw)) + " != |W_mu / W_lambda| = " + std::to_string(wm / wl));
  }
  if (rank_left_restricted(sw) != wm * (wm / wl)) return fail("restricted rank mismatch");
  SingularWord bad = sw;
  bad.chain.pop_back();
  if (validate_singular_word(bad)) return fail("even-length chain accepted");
  return pass({{"index", wm / wl}});
}

CheckResult check_characters(const CheckContext& ctx) {
  const CartanDatum& d = *ctx.datum;
  std::vector<Weight> highest;
  if (ctx.entry.mu && (*ctx.entry.mu - ctx.entry.lambda).is_integral()) {
    highest.push_back(linear_dominant_rep(d, *ctx.entry.mu - ctx.entry.lambda));
  }
  const bool irreducible = d.components().size() == 1;
  if (irreducible) highest.push_back(Weight::from_integers(d.root(d.num_positive_roots() - 1).as_weight));
  for (const auto& hw : highest) {
    const auto ms = irrep_weight_multiset(d, hw);
    long long mass = 0;
    std::map<IntVector, long long> mult;
    for (const auto& e : ms) {
      mass += e.mult;
      mult[e.weight.to_integers()] = e.mult;
    }
    if (mass != weyl_dimension(d, hw) || mass != total_mass(d, hw)) return fail("total mass differs from Weyl dimension at " + hw.to_string());
    for (const auto& [nu, m] : mult) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        auto it = mult.find(d.simple_reflection(i).act(nu));
        if (it == mult.end() || it->second != m) return fail("multiset not W-invariant at " + Weight::from_integers(nu).to_string());
      }
    }
  }
  if (irreducible) {
    const Weight theta = highest.back();
    if (zero_weight_multiplicity(d, theta) != static_cast<long long>(d.rank())) return fail("adjoint zero weight multiplicity != rank");
  }
  return pass({{"highest_weights", highest.size()}});
}

}  // namespace

const std::vector<CheckSpec>& registered_checks() {
  static const std::vector<CheckSpec> checks{
      {"tau_homomorphism", check_tau},
      {"semidirect", check_semidirect},
      {"integral_conjugation", check_integral_conjugation},
      {"dominance_tests", check_dominance},
      {"stabilizer", check_stabilizer},
      {"triple_count", check_triple_count},
      {"translation", check_translation},
      {"subgeneric", check_subgeneric},
      {"kl", check_kl},
      {"rewriter", check_rewriter},
      {"p_objects", check_p_objects},
      {"hecke_labels", check_hecke_labels},
      {"singular_words", check_singular},
      {"characters", check_characters},
  };
  return checks;
}

}  // namespace hcb::cli
