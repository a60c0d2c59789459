#include "hcb/integral.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hcb/error.hpp"

namespace hcb {

namespace {

Weight unit_weight(std::size_t rank, std::size_t j) {
  Weight w = Weight::zero(rank);
  w[j] = 1;
  return w;
}

Rational simple_height(const CartanDatum& datum, const Weight& nu) {
  Rational h = 0;
  for (const auto& q : datum.simple_root_coords(nu)) h += q;
  return h;
}

void require_rank(const CartanDatum& datum, const Weight& w, const char* what) {
  if (w.rank() != datum.rank()) throw InvalidInput(std::string(what) + ": weight rank mismatch");
}

}  // namespace

bool IntegralDatum::in_w_ext(const WeylElement& w) const { return w_ext_index_.count(w) != 0; }

std::optional<std::size_t> IntegralDatum::chamber_index(const WeylElement& c) const {
  auto it = std::find(chamber_.begin(), chamber_.end(), c);
  if (it == chamber_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - chamber_.begin());
}

IntegralPtr integral_datum(const CartanPtr& datum, const Weight& lambda, std::size_t bound) {
  require_rank(*datum, lambda, "integral_datum");
  const CoxeterPtr weyl = weyl_group(datum, bound);
  std::shared_ptr<IntegralDatum> id(new IntegralDatum());
  id->datum_ = datum;
  id->lambda_ = lambda;
  const std::size_t npos = datum->num_positive_roots();

  id->integral_mask_.assign(datum->num_roots(), 0);
  for (std::size_t k = 0; k < datum->num_roots(); ++k) {
    if (is_integer(datum->pairing(lambda, k))) {
      id->integral_mask_[k] = 1;
      id->integral_roots_.push_back(k);
      if (k < npos) id->integral_positive_.push_back(k);
    }
  }

  // beta is simple in the integral system iff s_beta makes only beta negative.
  std::vector<std::size_t> simples;
  for (std::size_t b : id->integral_positive_) {
    const WeylElement s = datum->reflection(b);
    std::size_t flipped = 0;
    for (std::size_t k : id->integral_positive_) flipped += s.root_image(k) >= npos ? 1 : 0;
    if (flipped == 1) simples.push_back(b);
  }
  id->w_int_ = std::make_shared<const CoxeterSystem>(datum, std::move(simples), bound);

  for (const auto& w : weyl->elements()) {
    if ((w.act(lambda) - lambda).is_integral()) {
      id->w_ext_index_.emplace(w, id->w_ext_.size());
      id->w_ext_.push_back(w);
    }
  }

  // <w.x + rho, alpha^vee> = <x + rho, (w^{-1} alpha)^vee>, so w preserves the
  // dominant chamber of the integral system iff it preserves its positive roots.
  const auto& pi = id->integral_simples();
  for (const auto& w : id->w_ext_) {
    const bool keeps = std::all_of(pi.begin(), pi.end(), [&](std::size_t b) { return w.root_image(b) < npos; });
    if (keeps) id->chamber_.push_back(w);
  }
  id->chamber_handle_.kind = SubgroupKind::chamber;
  id->chamber_handle_.generators = id->chamber_;
  id->chamber_handle_.elements = id->chamber_;
  std::sort(id->chamber_handle_.elements.begin(), id->chamber_handle_.elements.end());

  for (const auto& c : id->chamber_) {
    std::vector<std::size_t> row(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) {
      auto it = std::find(pi.begin(), pi.end(), c.root_image(pi[i]));
      if (it == pi.end()) throw InvariantViolation("chamber element does not permute the integral simple roots");
      row[i] = static_cast<std::size_t>(it - pi.begin());
    }
    id->conjugation_.push_back(std::move(row));
  }
  return id;
}

LatticeClass tau(const IntegralDatum& id, const WeylElement& w) {
  if (!id.in_w_ext(w)) throw InvalidInput("tau: element is not in the extended integral Weyl group");
  return lattice_class(id.datum(), w.act(id.lambda()) - id.lambda());
}

ChamberDecomposition chamber_decompose(const IntegralDatum& id, const WeylElement& w) {
  if (!id.in_w_ext(w)) throw InvalidInput("chamber_decompose: element is not in the extended integral Weyl group");
  const std::size_t npos = id.datum().num_positive_roots();
  const CoxeterSystem& wi = id.w_int();
  WeylElement c = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < wi.rank(); ++i) {
      if (c.root_image(wi.simple_roots()[i]) >= npos) {
        c = c * wi.simple_reflection(i);
        moved = true;
        break;
      }
    }
  }
  ChamberDecomposition out{c, id.datum().inverse(c) * w};
  if (!id.chamber_index(out.c) || !wi.contains(out.u)) {
    throw InvariantViolation("chamber decomposition failed for an element of length " + std::to_string(w.length()));
  }
  return out;
}

Weight lambda_sharp(const IntegralDatum& id) {
  const CartanDatum& d = id.datum();
  const auto& pi = id.integral_simples();
  const std::size_t k = pi.size();
  if (k == 0) return Weight::zero(d.rank());
  RationalMatrix m(k, RationalVector(k));
  RationalVector b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(static_cast<long>(d.root(pi[i]).pairing(d.root(pi[j]).as_weight)));
    b[i] = d.pairing(id.lambda(), pi[i]);
  }
  const RationalVector x = solve_rational_system(m, b);
  Weight out = Weight::zero(d.rank());
  for (std::size_t j = 0; j < k; ++j) out += Weight::from_integers(d.root(pi[j]).as_weight) * x[j];
  return out;
}

DominantRep dominant_dot_rep(const IntegralDatum& id, const Weight& nu) {
  const CartanDatum& d = id.datum();
  require_rank(d, nu, "dominant_dot_rep");
  if (!(nu - id.lambda()).is_integral()) {
    throw InvalidInput("dominant_dot_rep: " + nu.to_string() + " is not in lambda + weight lattice");
  }
  const CoxeterSystem& wi = id.w_int();
  DominantRep rep{d.identity(), nu};
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < wi.rank(); ++i) {
      if (d.pairing(rep.dominant + d.rho(), wi.simple_roots()[i]) < 0) {
        rep.dominant = dot_action(d, wi.simple_reflection(i), rep.dominant);
        rep.w = wi.simple_reflection(i) * rep.w;
        moved = true;
        break;
      }
    }
  }
  return rep;
}

bool is_integrally_dominant(const IntegralDatum& id, const Weight& nu) {
  const Weight shifted = nu + id.datum().rho();
  for (std::size_t k : id.integral_positive_roots()) {
    if (id.datum().pairing(shifted, k) < 0) return false;
  }
  return true;
}

Weight find_regular_dominant(const IntegralDatum& id) {
  const CartanDatum& d = id.datum();
  for (long m = 0; m <= 1'000'000; ++m) {
    Weight candidate = id.lambda() + d.rho() * Rational(m);
    const WeightClass wc = classify_weight(d, candidate);
    if (wc.dominant && wc.regular) return candidate;
  }
  throw InvariantViolation("find_regular_dominant: scan did not terminate");
}

Weight find_subgeneric(const IntegralDatum& id, std::size_t index) {
  const CartanDatum& d = id.datum();
  const auto& pi = id.integral_simples();
  if (index < 1 || index > pi.size()) {
    throw InvalidInput("find_subgeneric: index " + std::to_string(index) + " out of range 1.." + std::to_string(pi.size()));
  }
  const std::size_t target = index - 1;
  const std::size_t beta = pi[target];

  // Step 1: u(alpha_j) = beta by height descent, then move onto the wall of beta.
  WeylElement u = d.identity();
  IntVector cur = d.root(beta).simple_coords;
  while (true) {
    const auto k = d.find_root(cur);
    if (d.root(*k).height == 1) break;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (d.root(*k).as_weight[i] > 0) {
        cur = d.root(d.simple_reflection(i).root_image(*k)).simple_coords;
        u = u * d.simple_reflection(i);
        break;
      }
    }
  }
  std::size_t j = 0;
  while (cur[j] == 0) ++j;
  const Rational wall = d.pairing(id.lambda() + d.rho(), beta);
  const Weight mu_prime = id.lambda() - u.act(unit_weight(d.rank(), j)) * wall;
  if (d.pairing(mu_prime + d.rho(), beta) != 0) throw InvariantViolation("find_subgeneric: step 1 missed the wall");

  // Step 2: an integral delta pairing to 0 with beta and to m with the other integral simples.
  IntMatrix rows(pi.size(), IntVector(d.rank()));
  for (std::size_t a = 0; a < pi.size(); ++a) rows[a] = d.root(pi[a]).coroot_coords;
  std::optional<IntVector> delta;
  for (long long m = 1; m <= 1'000'000 && !delta; ++m) {
    IntVector rhs(pi.size(), m);
    rhs[target] = 0;
    delta = solve_integer_system(rows, rhs);
  }
  if (!delta) throw InvariantViolation("find_subgeneric: no integral direction found");
  const Weight step = Weight::from_integers(*delta);

  // Step 3: walk along delta until only the wall of beta is left.
  const std::vector<WeylElement> expected = [&]() {
    std::vector<WeylElement> e{d.identity(), d.reflection(beta)};
    std::sort(e.begin(), e.end());
    return e;
  }();
  Weight candidate = mu_prime;
  for (long l = 0; l <= 1'000'000; ++l, candidate += step) {
    const WeightClass wc = classify_weight(d, candidate);
    if (wc.dominant && wc.zero_pairing_roots == std::vector<std::size_t>{beta}) {
      if (dot_stabilizer(id.datum_ptr(), candidate).elements != expected) {
        throw InvariantViolation("find_subgeneric: certificate failed for " + candidate.to_string());
      }
      return candidate;
    }
  }
  throw InvariantViolation("find_subgeneric: scan did not terminate");
}

bool are_compatible(const CartanPtr& datum, const Weight& x, const Weight& y) {
  require_rank(*datum, x, "are_compatible");
  require_rank(*datum, y, "are_compatible");
  for (const auto& w : weyl_group(datum)->elements()) {
    if ((dot_action(*datum, w, x) - y).is_integral()) return true;
  }
  return false;
}

std::optional<std::pair<Weight, Weight>> align_pair(const CartanPtr& datum, const Weight& mu, const Weight& lambda) {
  require_rank(*datum, mu, "align_pair");
  require_rank(*datum, lambda, "align_pair");
  const IntegralPtr id = integral_datum(datum, lambda);
  const Weight lam = dominant_dot_rep(*id, lambda).dominant;
  if ((mu - lam).is_integral() && classify_weight(*datum, mu).dominant) return std::pair{mu, lam};
  for (const auto& w : weyl_group(datum)->elements()) {
    Weight y = dot_action(*datum, w, mu);
    if ((y - lam).is_integral() && classify_weight(*datum, y).dominant) return std::pair{std::move(y), lam};
  }
  return std::nullopt;
}

std::vector<ProperPair> enumerate_xi(const CartanPtr& datum, const Weight& mu, const Weight& lambda) {
  const auto aligned = align_pair(datum, mu, lambda);
  if (!aligned) return {};
  const auto& [mu0, lam] = *aligned;

  std::vector<Weight> orbit_points;
  std::unordered_set<Weight, WeightHash> seen;
  for (const auto& w : weyl_group(datum)->elements()) {
    Weight y = dot_action(*datum, w, mu0);
    if ((y - lam).is_integral() && seen.insert(y).second) orbit_points.push_back(std::move(y));
  }
  const SubgroupHandle stab = dot_stabilizer(datum, lam);

  std::vector<ProperPair> pairs;
  std::unordered_set<Weight, WeightHash> visited;
  for (const auto& nu : orbit_points) {
    if (visited.count(nu)) continue;
    std::optional<std::pair<Rational, Weight>> best;
    for (const auto& x : stab.elements) {
      Weight y = dot_action(*datum, x, nu);
      if (!visited.insert(y).second) continue;
      Rational h = simple_height(*datum, y);
      if (!best || h < best->first || (h == best->first && y < best->second)) best = std::pair{h, y};
    }
    pairs.push_back({best->second, lam});
  }
#if HCB_CHECKED
  if (pairs.size() != xi_double_coset_count(datum, mu, lambda)) {
    throw InvariantViolation("proper pair count disagrees with the double coset count for mu = " + mu.to_string() +
                             ", lambda = " + lambda.to_string());
  }
#endif
  return pairs;
}

std::size_t xi_double_coset_count(const CartanPtr& datum, const Weight& mu, const Weight& lambda) {
  const auto aligned = align_pair(datum, mu, lambda);
  if (!aligned) return 0;
  const IntegralPtr id = integral_datum(datum, aligned->second);
  return double_cosets(*datum, id->w_ext(), dot_stabilizer(datum, aligned->first), dot_stabilizer(datum, aligned->second))
      .cosets.size();
}

}  // namespace hcb
