#include "hcb/soergel.hpp"

#include <algorithm>

#include "hcb/error.hpp"

namespace hcb {

BimoduleWord::BimoduleWord(IntegralPtr ambient, std::vector<Letter> letters, std::optional<LatticeClass> grading_shift)
    : ambient_(std::move(ambient)), letters_(std::move(letters)) {
  if (!ambient_) throw InvalidInput("BimoduleWord: missing integral datum");
  shift_ = grading_shift ? *grading_shift : ambient_->classes().zero();
  if (shift_.moduli() != ambient_->classes().moduli()) throw InvalidInput("BimoduleWord: shift from a different group");
  for (const auto& l : letters_) {
    if (l.is_bs() && l.index >= ambient_->num_integral_simples()) {
      throw InvalidInput("BimoduleWord: Bs index " + std::to_string(l.index + 1) + " is not an integral simple");
    }
    if (l.is_rw() && l.index >= ambient_->chamber().size()) throw InvalidInput("BimoduleWord: twist outside the chamber");
  }
}

std::size_t BimoduleWord::bs_count() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](const Letter& l) { return l.is_bs(); }));
}

BimoduleWord BimoduleWord::with_letters(std::vector<Letter> letters) const {
  return BimoduleWord(ambient_, std::move(letters), shift_);
}

bool BimoduleWord::operator==(const BimoduleWord& other) const {
  return ambient_ == other.ambient_ && letters_ == other.letters_ && shift_ == other.shift_;
}

LatticeClass grading(const BimoduleWord& word) {
  const IntegralDatum& id = *word.ambient();
  LatticeClass g = word.grading_shift();
  for (const auto& l : word.letters()) {
    if (l.is_rw()) g = g + tau(id, id.chamber()[l.index]);
  }
  return g;
}

std::vector<Redex> redexes(const BimoduleWord& word) {
  const auto& ls = word.letters();
  std::vector<Redex> out;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    if (ls[p].is_rw() && ls[p].index == 0) out.push_back({p, RewriteRule::drop_unit});
    if (p + 1 == ls.size() || !ls[p + 1].is_rw()) continue;
    out.push_back({p, ls[p].is_bs() ? RewriteRule::push_twist : RewriteRule::fuse});
  }
  return out;
}

BimoduleWord apply_rewrite(const BimoduleWord& word, const Redex& redex) {
  const IntegralDatum& id = *word.ambient();
  std::vector<Letter> ls = word.letters();
  const std::size_t p = redex.position;
  auto bad = [&]() { throw InvalidInput("apply_rewrite: no such redex at position " + std::to_string(p)); };
  switch (redex.rule) {
    case RewriteRule::drop_unit:
      if (p >= ls.size() || !ls[p].is_rw() || ls[p].index != 0) bad();
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p));
      break;
    case RewriteRule::push_twist: {
      if (p + 1 >= ls.size() || !ls[p].is_bs() || !ls[p + 1].is_rw()) bad();
      const std::size_t c = ls[p + 1].index;
      const std::size_t t = ls[p].index;
      ls[p] = Letter::R(c);
      ls[p + 1] = Letter::B(id.conjugate_simple(c, t));
      break;
    }
    case RewriteRule::fuse: {
      if (p + 1 >= ls.size() || !ls[p].is_rw() || !ls[p + 1].is_rw()) bad();
      const WeylElement fused = id.chamber()[ls[p + 1].index] * id.chamber()[ls[p].index];
      const auto idx = id.chamber_index(fused);
      if (!idx) throw InvariantViolation("chamber subgroup is not closed under products");
      ls[p] = Letter::R(*idx);
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p + 1));
      break;
    }
  }
  return word.with_letters(std::move(ls));
}

std::optional<BimoduleWord> rewrite_step(const BimoduleWord& word) {
  const auto rs = redexes(word);
  if (rs.empty()) return std::nullopt;
  return apply_rewrite(word, rs.front());
}

bool is_normal(const BimoduleWord& word) { return redexes(word).empty(); }

BimoduleWord normalize(const BimoduleWord& word) {
  const std::size_t n = word.size();
  BimoduleWord cur = word;
  std::size_t steps = 0;
  while (auto next = rewrite_step(cur)) {
    cur = std::move(*next);
    if (++steps > n * n) throw InvariantViolation("normalize: rewriting exceeded length^2 steps");
  }
  return cur;
}

unsigned long long rank_left(const BimoduleWord& word) {
  const std::size_t b = word.bs_count();
  if (b >= 64) throw BoundExceeded("rank_left: more than 63 Bs letters");
  return 1ULL << b;
}

unsigned long long parabolic_order(const IntegralDatum& id, const std::vector<std::size_t>& subset) {
  std::vector<WeylElement> gens;
  for (std::size_t i : subset) {
    if (i >= id.num_integral_simples()) throw InvalidInput("parabolic subset index out of range");
    gens.push_back(id.w_int().simple_reflection(i));
  }
  return make_subgroup(id.datum(), std::move(gens), SubgroupKind::parabolic).order();
}

namespace {

std::vector<std::size_t> sorted_set(std::vector<std::size_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const auto sa = sorted_set(a);
  const auto sb = sorted_set(b);
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

}  // namespace

bool validate_singular_word(const SingularWord& word) {
  if (!word.ambient || word.chain.empty() || word.chain.size() % 2 == 0) return false;
  const IntegralDatum& id = *word.ambient;
  if (word.twist >= id.chamber().size()) return false;
  const std::size_t k = id.num_integral_simples();
  auto in_range = [&](const std::vector<std::size_t>& s) {
    return std::all_of(s.begin(), s.end(), [&](std::size_t i) { return i < k; });
  };
  if (!in_range(word.I) || !in_range(word.J)) return false;
  for (std::size_t p = 0; p < word.chain.size(); ++p) {
    if (!in_range(word.chain[p])) return false;
    if (p == 0) continue;
    const bool ok = p % 2 == 1 ? subset_of(word.chain[p - 1], word.chain[p]) : subset_of(word.chain[p], word.chain[p - 1]);
    if (!ok) return false;
  }
  std::vector<std::size_t> lead;
  for (std::size_t i : word.I) lead.push_back(id.conjugate_simple(word.twist, i));
  return sorted_set(lead) == sorted_set(word.chain.front()) && sorted_set(word.J) == sorted_set(word.chain.back());
}

unsigned long long rank_left(const SingularWord& word) {
  if (!validate_singular_word(word)) throw InvalidInput("rank_left: invalid singular word");
  const IntegralDatum& id = *word.ambient;
  unsigned long long r = 1;
  for (std::size_t p = 1; p + 1 < word.chain.size(); p += 2) {
    r *= parabolic_order(id, word.chain[p]) / parabolic_order(id, word.chain[p + 1]);
  }
  return r;
}

unsigned long long rank_left_restricted(const SingularWord& word) {
  return rank_left(word) * parabolic_order(*word.ambient, word.I);
}

SingularWord translation_round_trip(IntegralPtr ambient, std::vector<std::size_t> I, std::vector<std::size_t> J) {
  SingularWord w;
  w.ambient = std::move(ambient);
  w.chain = {I, I, J, I, I};
  w.I = I;
  w.J = std::move(I);
  return w;
}

PObjectSpec make_p_object_spec(const IntegralPtr& id, std::size_t c, std::vector<std::size_t> I, const Weight& mu) {
  PObjectSpec spec;
  spec.c = c;
  spec.mu = mu;
  spec.nu = find_regular_dominant(*id);
  for (std::size_t i : I) {
    if (!spec.nu_i.count(i)) spec.nu_i.emplace(i, find_subgeneric(*id, i + 1));
  }
  spec.I = std::move(I);
  return spec;
}

PObject build_p_object(const IntegralPtr& id, const PObjectSpec& spec) {
  const CartanDatum& d = id->datum();
  const Weight& lambda = id->lambda();
  if (spec.c >= id->chamber().size()) throw InvalidInput("build_p_object: twist outside the chamber");
  if (!(spec.mu - lambda).is_integral()) throw InvalidInput("build_p_object: mu - lambda is not in the weight lattice");
  if (!(spec.nu - lambda).is_integral()) throw InvalidInput("build_p_object: nu is not in lambda + weight lattice");
  const WeightClass nc = classify_weight(d, spec.nu);
  if (!nc.dominant || !nc.regular) throw InvalidInput("build_p_object: nu is not regular dominant");
  for (std::size_t i : spec.I) {
    if (i >= id->num_integral_simples()) throw InvalidInput("build_p_object: index out of range");
    auto it = spec.nu_i.find(i);
    if (it == spec.nu_i.end()) throw InvalidInput("build_p_object: missing subgeneric weight for s" + std::to_string(i + 1));
    const Weight& w = it->second;
    if (!(w - lambda).is_integral()) throw InvalidInput("build_p_object: subgeneric weight not in lambda + weight lattice");
    const WeightClass wc = classify_weight(d, w);
    if (!wc.dominant || wc.zero_pairing_roots != std::vector<std::size_t>{id->integral_simples()[i]}) {
      throw InvalidInput("build_p_object: " + w.to_string() + " is not subgeneric for s" + std::to_string(i + 1));
    }
  }

  PObject out{{}, BimoduleWord(id), BimoduleWord(id)};
  const Weight cmu = dot_action(d, id->chamber()[spec.c], spec.mu);
  auto p = [](const Weight& a, const Weight& b) { return "P^{" + a.to_string() + "," + b.to_string() + "}"; };
  out.factorization.push_back(p(cmu, spec.nu));
  for (std::size_t i : spec.I) {
    out.factorization.push_back(p(spec.nu, spec.nu_i.at(i)));
    out.factorization.push_back(p(spec.nu_i.at(i), spec.nu));
  }
  out.factorization.push_back(p(spec.nu, lambda));

  std::vector<Letter> letters{Letter::R(spec.c)};
  for (std::size_t i : spec.I) letters.push_back(Letter::B(i));
  out.word = BimoduleWord(id, std::move(letters), lattice_class(d, spec.mu - lambda));
  out.predicted_image = normalize(out.word);
  return out;
}

IndecomposableIndex indecomposable_index(const CartanPtr& datum, const Weight& mu, const Weight& lambda) {
  const auto aligned = align_pair(datum, mu, lambda);
  if (!aligned) throw InvalidInput("indecomposable_index: " + mu.to_string() + " and " + lambda.to_string() + " are not compatible");
  IndecomposableIndex out;
  out.mu = aligned->first;
  out.lambda = aligned->second;
  out.ambient = integral_datum(datum, out.lambda);
  const IntegralDatum& id = *out.ambient;
  const SubgroupHandle right = dot_stabilizer(datum, out.lambda);
  for (std::size_t c = 0; c < id.chamber().size(); ++c) {
    const SubgroupHandle left = dot_stabilizer(datum, dot_action(*datum, id.chamber()[c], out.mu));
    const auto dec = double_cosets(*datum, id.w_int().elements(), left, right);
    for (const auto& coset : dec.cosets) out.labels.push_back({c, coset.representative, coset.members.size()});
  }
  const std::size_t expected = xi_double_coset_count(datum, out.mu, out.lambda);
  if (out.labels.size() != expected) {
    throw InvariantViolation("indecomposable_index: per-twist stratification gives " + std::to_string(out.labels.size()) +
                             " labels, double cosets give " + std::to_string(expected));
  }
  return out;
}

}  // namespace hcb
