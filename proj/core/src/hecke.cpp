#include "hcb/hecke.hpp"

#include <algorithm>
#include <string>

#include "hcb/error.hpp"

namespace hcb {

// ---------------------------------------------------------------- KLCache

void KLCache::fill() const {
  std::call_once(once_, [this]() {
    const CoxeterSystem& g = *group_;
    const std::size_t n = g.size();
    table_.assign(n, std::vector<LaurentPoly>(n));
    std::vector<std::vector<std::pair<std::size_t, long long>>> mus(n);  // z < v with mu(z, v) != 0
    auto q_power = [](int k) { return LaurentPoly::monomial(k); };

    for (std::size_t w = 0; w < n; ++w) {
      auto& row = table_[w];
      if (w == 0) {
        row[0] = LaurentPoly::constant(1);
      } else {
        const std::size_t s = static_cast<std::size_t>(g.word(w)[0]);
        const std::size_t v = g.left_multiply(w, s);
        for (std::size_t x = 0; x < n; ++x) {
          if (!g.bruhat_leq(x, w)) continue;
          const std::size_t sx = g.left_multiply(x, s);
          const int c = g.length(sx) < g.length(x) ? 1 : 0;
          LaurentPoly p = q_power(1 - c) * table_[v][sx] + q_power(c) * table_[v][x];
          for (const auto& [z, m] : mus[v]) {
            if (g.length(g.left_multiply(z, s)) > g.length(z)) continue;
            const LaurentPoly& pxz = table_[z][x];
            if (pxz.is_zero()) continue;
            p -= pxz.shifted((g.length(w) - g.length(z)) / 2).scaled(m);
          }
          row[x] = std::move(p);
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        const LaurentPoly& p = row[x];
        const bool leq = g.bruhat_leq(x, w);
        auto fail = [&](const std::string& what) {
          throw InvariantViolation("KL polynomial P_{x,w} " + what + " for x = #" + std::to_string(x) +
                                   ", w = #" + std::to_string(w) + ": " + p.to_string("q"));
        };
        if (!leq) {
          if (!p.is_zero()) fail("nonzero although x is not below w");
          continue;
        }
        if (x == w) {
          if (!(p == LaurentPoly::constant(1))) fail("differs from 1 on the diagonal");
          continue;
        }
        if (p.is_zero() || p.coefficient(0) != 1) fail("has constant term other than 1");
        if (p.min_degree() < 0 || 2 * p.max_degree() > g.length(w) - g.length(x) - 1) fail("violates the degree bound");
        if (!p.nonnegative()) fail("has a negative coefficient");
        const int gap = g.length(w) - g.length(x);
        if (gap % 2 == 1) {
          const long long m = p.coefficient((gap - 1) / 2);
          if (m != 0) mus[w].emplace_back(x, m);
        }
      }
    }
  });
}

const LaurentPoly& KLCache::polynomial(std::size_t x, std::size_t w) const {
  fill();
  return table_.at(w).at(x);
}

LaurentPoly KLCache::kl_polynomial(const WeylElement& x, const WeylElement& w) const {
  return polynomial(group_->require_index(x), group_->require_index(w));
}

long long KLCache::mu(std::size_t x, std::size_t w) const {
  const int gap = group_->length(w) - group_->length(x);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return polynomial(x, w).coefficient((gap - 1) / 2);
}

// ---------------------------------------------------------------- HeckeElement

LaurentPoly HeckeElement::coefficient(const HeckeLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const HeckeLabel& label, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(label, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
  HeckeElement out = *this;
  for (const auto& [l, p] : other.terms_) out.add(l, p);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& other) const {
  HeckeElement out = *this;
  for (const auto& [l, p] : other.terms_) out.add(l, p.scaled(-1));
  return out;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& p) const {
  HeckeElement out;
  for (const auto& [l, q] : terms_) out.add(l, q * p);
  return out;
}

// ---------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(IntegralPtr id) : id_(std::move(id)), kl_(id_->w_int_ptr()) {
  const CartanDatum& d = id_->datum();
  const CoxeterSystem& g = id_->w_int();
  const auto& chamber = id_->chamber();
  for (const auto& c : chamber) {
    const WeylElement cinv = d.inverse(c);
    std::vector<std::size_t> row(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) row[x] = g.require_index(c * g.element(x) * cinv);
    conj_.push_back(std::move(row));
    std::vector<std::size_t> prod(chamber.size());
    for (std::size_t k = 0; k < chamber.size(); ++k) {
      const auto idx = id_->chamber_index(c * chamber[k]);
      if (!idx) throw InvariantViolation("chamber subgroup is not closed under products");
      prod[k] = *idx;
    }
    chamber_product_.push_back(std::move(prod));
  }
}

HeckeElement HeckeAlgebra::standard(std::size_t c, std::size_t x) const {
  if (c >= id_->chamber().size() || x >= group().size()) throw InvalidInput("Hecke label out of range");
  HeckeElement h;
  h.add({c, x}, LaurentPoly::constant(1));
  return h;
}

HeckeElement HeckeAlgebra::generator(std::size_t s) const {
  if (s >= group().rank()) throw InvalidInput("Hecke generator index out of range");
  HeckeElement h;
  h.add({0, group().left_multiply(0, s)}, LaurentPoly::constant(1));
  h.add({0, 0}, LaurentPoly::monomial(1));
  return h;
}

HeckeElement HeckeAlgebra::kl_basis(std::size_t c, std::size_t x) const {
  if (c >= id_->chamber().size() || x >= group().size()) throw InvalidInput("Hecke label out of range");
  const CoxeterSystem& g = group();
  HeckeElement h;
  for (std::size_t y = 0; y < g.size(); ++y) {
    const LaurentPoly& p = kl_.polynomial(y, x);
    if (p.is_zero()) continue;
    h.add({c, y}, p.substitute_power(-2).shifted(g.length(x) - g.length(y)));
  }
  return h;
}

namespace {

HeckeElement times_simple(const CoxeterSystem& g, const HeckeElement& h, std::size_t s) {
  HeckeElement out;
  const LaurentPoly quad = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  for (const auto& [label, p] : h.terms()) {
    const auto [c, z] = label;
    const std::size_t zs = g.right_multiply(z, s);
    out.add({c, zs}, p);
    if (g.length(zs) < g.length(z)) out.add({c, z}, p * quad);
  }
  return out;
}

}  // namespace

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  const CoxeterSystem& g = group();
  HeckeElement out;
  for (const auto& [lb, q] : b.terms()) {
    const auto [c2, y] = lb;
    // (T_c H_x)(T_c2 H_y) = T_{c c2} H_{c2 x c2^{-1}} H_y
    HeckeElement moved;
    for (const auto& [la, p] : a.terms()) moved.add({chamber_product_[la.first][c2], conj_[c2][la.second]}, p * q);
    for (int s : g.word(y)) moved = times_simple(g, moved, static_cast<std::size_t>(s));
    out = out + moved;
  }
  return out;
}

HeckeElement bs_character(const HeckeAlgebra& hecke, const BimoduleWord& word) {
  if (word.ambient() != hecke.integral_ptr() && word.ambient()->lambda() != hecke.integral().lambda()) {
    throw InvalidInput("bs_character: word belongs to a different integral datum");
  }
  HeckeElement h = hecke.one();
  for (const auto& l : word.letters()) {
    h = hecke.multiply(h, l.is_bs() ? hecke.generator(l.index) : hecke.twist(l.index));
  }
  return h;
}

std::vector<DecompositionTerm> decompose(const HeckeAlgebra& hecke, const HeckeElement& h) {
  std::vector<DecompositionTerm> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    // The largest label has maximal length in its twist sector, so it is the
    // leading term of the basis element with that label.
    HeckeLabel top = rest.terms().begin()->first;
    for (const auto& [label, p] : rest.terms()) {
      if (hecke.group().length(label.second) > hecke.group().length(top.second) ||
          (hecke.group().length(label.second) == hecke.group().length(top.second) && label > top)) {
        top = label;
      }
    }
    const LaurentPoly coeff = rest.coefficient(top);
    if (!coeff.nonnegative()) {
      throw InvariantViolation("decompose: negative coefficient " + coeff.to_string() + " at label (" +
                               std::to_string(top.first) + ", " + std::to_string(top.second) + ")");
    }
    out.push_back({top.first, top.second, coeff, coeff.at_one()});
    rest = rest - hecke.kl_basis(top.first, top.second).scaled(coeff);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return std::pair{a.c, a.x} < std::pair{b.c, b.x}; });
  return out;
}

}  // namespace hcb
