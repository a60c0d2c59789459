#include "hcb/catO.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "hcb/coxeter.hpp"
#include "hcb/error.hpp"

namespace hcb {

namespace {

__extension__ typedef __int128 i128;

// The invariant form scaled to integer entries.
struct IntegerForm {
  std::vector<std::vector<long long>> g;

  explicit IntegerForm(const CartanDatum& datum) {
    const auto& q = datum.fundamental_gram();
    mpz_class den = 1;
    for (const auto& row : q) {
      for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    g.assign(q.size(), std::vector<long long>(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) g[i][j] = to_integer(q[i][j] * Rational(den));
    }
  }

  i128 operator()(const IntVector& a, const IntVector& b) const {
    i128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      i128 row = 0;
      for (std::size_t j = 0; j < b.size(); ++j) row += static_cast<i128>(g[i][j]) * b[j];
      acc += row * a[i];
    }
    return acc;
  }
};

void reflect_linear(const CartanDatum& datum, IntVector& v, std::size_t i) {
  const long long c = v[i];
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * datum.cartan_matrix()[j][i];
}

IntVector dominant_of(const CartanDatum& datum, IntVector v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) {
        reflect_linear(datum, v, i);
        moved = true;
      }
    }
  }
  return v;
}

IntVector require_dominant_integral(const CartanDatum& datum, const Weight& highest) {
  if (highest.rank() != datum.rank()) throw InvalidInput("highest weight rank mismatch");
  if (!highest.is_integral()) throw InvalidInput("highest weight " + highest.to_string() + " is not integral");
  IntVector h = highest.to_integers();
  if (std::any_of(h.begin(), h.end(), [](long long x) { return x < 0; })) {
    throw InvalidInput("highest weight " + highest.to_string() + " is not dominant");
  }
  return h;
}

long long depth_below(const CartanDatum& datum, const IntVector& top, const IntVector& v) {
  IntVector diff(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) diff[i] = top[i] - v[i];
  Rational h = 0;
  for (const auto& q : datum.simple_root_coords(Weight::from_integers(diff))) h += q;
  return to_integer(h);
}

}  // namespace

std::map<IntVector, long long> dominant_weight_multiplicities(const CartanDatum& datum, const Weight& highest) {
  const IntVector lam = require_dominant_integral(datum, highest);
  const std::size_t n = datum.rank();
  const std::size_t npos = datum.num_positive_roots();

  // Dominant weights below lam, reached through dominant weights only.
  std::map<IntVector, long long> depth{{lam, 0}};
  std::deque<IntVector> queue{lam};
  while (!queue.empty()) {
    const IntVector mu = queue.front();
    queue.pop_front();
    const long long dmu = depth.at(mu);
    for (std::size_t k = 0; k < npos; ++k) {
      IntVector nu = mu;
      bool dominant = true;
      for (std::size_t j = 0; j < n; ++j) {
        nu[j] -= datum.root(k).as_weight[j];
        dominant = dominant && nu[j] >= 0;
      }
      if (dominant && depth.emplace(nu, dmu + datum.root(k).height).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<std::pair<long long, IntVector>> order;
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());

  const IntegerForm form(datum);
  IntVector lr = lam;
  for (auto& x : lr) x += 1;
  const i128 top = form(lr, lr);

  std::map<IntVector, long long> mult;
  mult[lam] = 1;
  auto mult_of = [&](const IntVector& v) {
    auto it = mult.find(dominant_of(datum, v));
    return it == mult.end() ? 0LL : it->second;
  };
  // tail[(v, k)] = sum over j >= 1 of m(v + j alpha_k) (v + j alpha_k, alpha_k);
  // consecutive dominant weights share most of a string, so this is memoized.
  std::map<std::pair<std::size_t, IntVector>, i128> tail;
  auto string_sum = [&](const IntVector& start, std::size_t k) {
    const IntVector& alpha = datum.root(k).as_weight;
    std::vector<std::pair<IntVector, i128>> pending;  // (v, term at v + alpha)
    IntVector v = start;
    i128 acc = 0;
    while (true) {
      auto hit = tail.find({k, v});
      if (hit != tail.end()) {
        acc = hit->second;
        break;
      }
      IntVector up = v;
      for (std::size_t j = 0; j < n; ++j) up[j] += alpha[j];
      const long long m = mult_of(up);
      if (m == 0) break;  // weight strings are unbroken
      pending.emplace_back(v, static_cast<i128>(m) * form(up, alpha));
      v = std::move(up);
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      acc += it->second;
      tail.emplace(std::pair{k, std::move(it->first)}, acc);
    }
    return acc;
  };

  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const IntVector& mu = order[idx].second;
    i128 sum = 0;
    for (std::size_t k = 0; k < npos; ++k) sum += string_sum(mu, k);
    IntVector mr = mu;
    for (auto& x : mr) x += 1;
    const i128 den = top - form(mr, mr);
    if (den <= 0 || (2 * sum) % den != 0) {
      throw InvariantViolation("Freudenthal recursion produced a non-integral multiplicity at " +
                               Weight::from_integers(mu).to_string());
    }
    const i128 m = 2 * sum / den;
    if (m <= 0 || m > static_cast<i128>(1) << 62) {
      throw InvariantViolation("Freudenthal multiplicity out of range at " + Weight::from_integers(mu).to_string());
    }
    mult[mu] = static_cast<long long>(m);
  }
  return mult;
}

WeightMultiset irrep_weight_multiset(const CartanDatum& datum, const Weight& highest) {
  const IntVector lam = require_dominant_integral(datum, highest);
  std::vector<std::pair<std::pair<long long, IntVector>, long long>> all;
  for (const auto& [mu, m] : dominant_weight_multiplicities(datum, highest)) {
    std::set<IntVector> orbit{mu};
    std::deque<IntVector> queue{mu};
    while (!queue.empty()) {
      const IntVector v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < v.size(); ++i) {
        IntVector u = v;
        reflect_linear(datum, u, i);
        if (orbit.insert(u).second) queue.push_back(std::move(u));
      }
    }
    for (const auto& v : orbit) all.push_back({{depth_below(datum, lam, v), v}, m});
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return a.first.second > b.first.second;
  });
  WeightMultiset out;
  out.reserve(all.size());
  for (auto& [key, m] : all) out.push_back({Weight::from_integers(key.second), m});
  return out;
}

long long total_mass(const CartanDatum& datum, const Weight& highest) {
  const unsigned long long order = datum.weyl_group_order();
  std::map<std::vector<char>, unsigned long long> stabilizer_order;
  long long mass = 0;
  for (const auto& [mu, m] : dominant_weight_multiplicities(datum, highest)) {
    std::vector<char> zeros(mu.size());
    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      zeros[i] = mu[i] == 0;
      if (zeros[i]) gens.push_back(datum.simple_reflection(i));
    }
    auto it = stabilizer_order.find(zeros);
    if (it == stabilizer_order.end()) {
      it = stabilizer_order.emplace(zeros, make_subgroup(datum, std::move(gens), SubgroupKind::parabolic).order()).first;
    }
    mass += m * static_cast<long long>(order / it->second);
  }
  return mass;
}

long long weyl_dimension(const CartanDatum& datum, const Weight& highest) {
  require_dominant_integral(datum, highest);
  Rational dim = 1;
  const Weight shifted = highest + datum.rho();
  for (std::size_t k = 0; k < datum.num_positive_roots(); ++k) {
    dim *= datum.pairing(shifted, k) / datum.pairing(datum.rho(), k);
  }
  return to_integer(dim);
}

long long zero_weight_multiplicity(const CartanDatum& datum, const Weight& highest) {
  const auto mult = dominant_weight_multiplicities(datum, highest);
  auto it = mult.find(IntVector(datum.rank(), 0));
  return it == mult.end() ? 0 : it->second;
}

Weight linear_dominant_rep(const CartanDatum& datum, const Weight& x) {
  if (x.rank() != datum.rank()) throw InvalidInput("linear_dominant_rep: weight rank mismatch");
  Weight v = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (v[i] < 0) {
        const Rational c = v[i];
        for (std::size_t j = 0; j < v.rank(); ++j) v[j] -= c * static_cast<long>(datum.cartan_matrix()[j][i]);
        moved = true;
      }
    }
  }
  return v;
}

Weight dot_chamber_rep(const CartanDatum& datum, const Weight& x) {
  return linear_dominant_rep(datum, x + datum.rho()) - datum.rho();
}

bool linked(const CartanDatum& datum, const Weight& x, const Weight& y) {
  return dot_chamber_rep(datum, x) == dot_chamber_rep(datum, y);
}

VermaKey verma_key(const IntegralDatum& id, const Weight& y) {
  const CartanDatum& d = id.datum();
  const DominantRep rep = dominant_dot_rep(id, y);
  const WeylElement uinv = d.inverse(rep.w);
  std::optional<WeylElement> best;
  for (const auto& s : dot_stabilizer(id.datum_ptr(), rep.dominant).elements) {
    WeylElement candidate = uinv * s;
    if (!best || canonical_less(d, candidate, *best)) best = std::move(candidate);
  }
  return {rep.dominant, *best};
}

TranslationResult translate_verma(const CartanPtr& datum, const Weight& lambda, const Weight& mu, const WeylElement& w) {
  const CartanDatum& d = *datum;
  if (!classify_weight(d, lambda).dominant) throw InvalidInput("translate_verma: lambda is not dominant");
  if (!classify_weight(d, mu).dominant) throw InvalidInput("translate_verma: mu is not dominant");
  if (!(mu - lambda).is_integral()) throw InvalidInput("translate_verma: mu - lambda is not in the weight lattice");
  const IntegralPtr id = integral_datum(datum, lambda);
  if (!id->w_int().contains(w)) throw InvalidInput("translate_verma: w is not in the integral Weyl group");

  TranslationResult out;
  const Weight diff = mu - lambda;
  out.extremal_weight = w.act(diff);
  const Weight base = dot_action(d, w, lambda);
  bool only_extremal = true;
  for (const auto& [nu, m] : irrep_weight_multiset(d, linear_dominant_rep(d, diff))) {
    if (nu == out.extremal_weight) out.extremal_multiplicity = m;
    const Weight y = base + nu;
    if (!linked(d, y, mu)) continue;
    if (!(nu == out.extremal_weight)) only_extremal = false;
    VermaKey key = verma_key(*id, y);
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const VermaTerm& t) { return t.key == key; });
    if (it == out.terms.end()) {
      out.terms.push_back({std::move(key), y, m});
    } else {
      it->coefficient += m;
    }
  }
  out.only_extremal = only_extremal;

  const auto sl = dot_stabilizer(datum, lambda);
  const auto sm = dot_stabilizer(datum, mu);
  out.stabilizers_nested = std::includes(sm.elements.begin(), sm.elements.end(), sl.elements.begin(), sl.elements.end());
  out.expected = verma_key(*id, dot_action(d, w, mu));
  out.matches_expected = out.terms.size() == 1 && out.terms[0].coefficient == 1 && out.terms[0].key == out.expected;
  return out;
}

}  // namespace hcb
