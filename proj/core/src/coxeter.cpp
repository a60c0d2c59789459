#include "hcb/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>

#include "hcb/error.hpp"

namespace hcb {

namespace {

std::vector<std::uint16_t> inverse_perm(const WeylElement::Perm& p) {
  std::vector<std::uint16_t> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<std::uint16_t>(k);
  return inv;
}

// s_beta is a left descent of w iff w^{-1}(beta) is negative.
bool maps_negative_onto(const WeylElement& w, std::size_t beta, std::size_t npos) {
  const auto& p = w.root_perm();
  for (std::size_t k = npos; k < p.size(); ++k) {
    if (p[k] == beta) return true;
  }
  return false;
}

}  // namespace

CoxeterSystem::CoxeterSystem(CartanPtr datum, std::vector<std::size_t> simple_roots, std::size_t bound)
    : datum_(std::move(datum)), simple_roots_(std::move(simple_roots)) {
  const CartanDatum& d = *datum_;
  const std::size_t npos = d.num_positive_roots();
  for (std::size_t b : simple_roots_) {
    if (b >= npos) throw InvalidInput("CoxeterSystem: simple roots must be positive root indices");
  }
  for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
    for (std::size_t j = 0; j < simple_roots_.size(); ++j) {
      if (i == j) continue;
      if (simple_roots_[i] == simple_roots_[j] ||
          d.root(simple_roots_[j]).pairing(d.root(simple_roots_[i]).as_weight) > 0) {
        throw InvalidInput("CoxeterSystem: roots do not form a simple system");
      }
    }
  }
  for (std::size_t b : simple_roots_) simple_reflections_.push_back(d.reflection(b));

  in_subsystem_.assign(d.num_roots(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t b : simple_roots_) {
    in_subsystem_[b] = 1;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& s : simple_reflections_) {
      const std::size_t img = s.root_image(k);
      if (!in_subsystem_[img]) {
        in_subsystem_[img] = 1;
        queue.push_back(img);
      }
    }
  }
  for (std::size_t k = 0; k < npos; ++k) {
    if (in_subsystem_[k]) positive_roots_.push_back(k);
  }

  const std::size_t r = rank();
  std::vector<WeylElement> layer{d.identity()};
  elements_.push_back(d.identity());
  lengths_.push_back(0);
  words_.emplace_back();
  index_.emplace(d.identity(), 0);
  int len = 0;
  while (!layer.empty()) {
    ++len;
    std::unordered_map<WeylElement, std::vector<int>, WeylElementHash> fresh;
    for (const auto& u : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        WeylElement v = simple_reflections_[i] * u;
        if (index_.count(v) || fresh.count(v)) continue;
        fresh.emplace(std::move(v), std::vector<int>{});
      }
    }
    std::vector<std::pair<std::vector<int>, WeylElement>> next;
    next.reserve(fresh.size());
    for (auto& [v, unused] : fresh) {
      std::vector<int> w;
      for (std::size_t i = 0; i < r; ++i) {
        auto it = index_.find(simple_reflections_[i] * v);
        if (it != index_.end()) {
          w.push_back(static_cast<int>(i));
          const auto& tail = words_[it->second];
          w.insert(w.end(), tail.begin(), tail.end());
          break;
        }
      }
      next.emplace_back(std::move(w), v);
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    layer.clear();
    for (auto& [w, v] : next) {
      index_.emplace(v, elements_.size());
      elements_.push_back(v);
      lengths_.push_back(len);
      words_.push_back(std::move(w));
      layer.push_back(std::move(v));
    }
    if (elements_.size() > bound) {
      throw BoundExceeded("group enumeration exceeded bound of " + std::to_string(bound) + " elements");
    }
  }

  left_.resize(elements_.size() * r);
  right_.resize(elements_.size() * r);
  for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
    for (std::size_t i = 0; i < r; ++i) {
      left_[idx * r + i] = static_cast<std::uint32_t>(index_.at(simple_reflections_[i] * elements_[idx]));
      right_[idx * r + i] = static_cast<std::uint32_t>(index_.at(elements_[idx] * simple_reflections_[i]));
    }
  }
}

std::optional<std::size_t> CoxeterSystem::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CoxeterSystem::require_index(const WeylElement& w) const {
  auto idx = index_of(w);
  if (!idx) throw InvalidInput("element does not lie in the subgroup");
  return *idx;
}

int CoxeterSystem::length(const WeylElement& w) const {
  const std::size_t npos = datum_->num_positive_roots();
  int len = 0;
  for (std::size_t k : positive_roots_) len += w.root_image(k) >= npos ? 1 : 0;
  return len;
}

bool CoxeterSystem::is_left_descent(const WeylElement& w, std::size_t i) const {
  return maps_negative_onto(w, simple_roots_.at(i), datum_->num_positive_roots());
}

bool CoxeterSystem::is_right_descent(const WeylElement& w, std::size_t i) const {
  return w.root_image(simple_roots_.at(i)) >= datum_->num_positive_roots();
}

std::vector<int> CoxeterSystem::reduced_word(const WeylElement& w) const {
  if (auto idx = index_of(w)) return words_[*idx];
  throw InvalidInput("reduced_word: element does not lie in the subgroup");
}

void CoxeterSystem::build_bruhat() const {
  std::call_once(bruhat_once_, [this]() {
    const std::size_t n = elements_.size();
    const std::size_t blocks = (n + 63) / 64;
    bruhat_.assign(n, std::vector<std::uint64_t>(blocks, 0));
    bruhat_[0][0] = 1;
    // If s w < w then {x <= w} = {x <= s w} union s{x <= s w}.
    for (std::size_t idx = 1; idx < n; ++idx) {
      const std::size_t i = static_cast<std::size_t>(words_[idx][0]);
      const std::size_t sw = left_multiply(idx, i);
      auto& row = bruhat_[idx];
      row = bruhat_[sw];
      for (std::size_t x = 0; x < n; ++x) {
        if (bruhat_[sw][x / 64] >> (x % 64) & 1) {
          const std::size_t sx = left_multiply(x, i);
          row[sx / 64] |= std::uint64_t{1} << (sx % 64);
        }
      }
    }
  });
}

bool CoxeterSystem::bruhat_leq(std::size_t x, std::size_t w) const {
  build_bruhat();
  return (bruhat_.at(w).at(x / 64) >> (x % 64)) & 1;
}

bool CoxeterSystem::bruhat_leq(const WeylElement& x, const WeylElement& w) const {
  return bruhat_leq(require_index(x), require_index(w));
}

CoxeterPtr weyl_group(const CartanPtr& datum, std::size_t bound) {
  if (datum->weyl_group_order() > bound) {
    throw BoundExceeded("|W(" + datum->type_label() + ")| = " + std::to_string(datum->weyl_group_order()) +
                        " exceeds bound " + std::to_string(bound));
  }
  static std::mutex mutex;
  static std::map<std::string, CoxeterPtr> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(datum->type_label());
    if (it != cache.end()) return it->second;
  }
  std::vector<std::size_t> simples(datum->rank());
  for (std::size_t i = 0; i < simples.size(); ++i) simples[i] = i;
  auto group = std::make_shared<const CoxeterSystem>(datum, std::move(simples), bound);
  if (group->size() != datum->weyl_group_order()) {
    throw InvariantViolation("enumerated " + std::to_string(group->size()) + " elements of W(" + datum->type_label() +
                             "), expected " + std::to_string(datum->weyl_group_order()));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(datum->type_label(), std::move(group)).first->second;
}

std::vector<WeylElement> generate_group(const CartanPtr& datum, std::size_t bound) {
  return weyl_group(datum, bound)->elements();
}

bool bruhat_leq(const CartanDatum& datum, const WeylElement& x, const WeylElement& w) {
  const std::size_t npos = datum.num_positive_roots();
  WeylElement a = x;
  WeylElement b = w;
  while (true) {
    if (b.is_identity()) return a.is_identity();
    if (a.length() > b.length()) return false;
    const auto inv = inverse_perm(b.root_perm());
    std::size_t i = 0;
    while (inv[i] < npos) ++i;
    const WeylElement& s = datum.simple_reflection(i);
    if (maps_negative_onto(a, i, npos)) a = s * a;
    b = s * b;
  }
}

bool canonical_less(const CartanDatum& datum, const WeylElement& a, const WeylElement& b) {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la < lb;
  return datum.reduced_word(a) < datum.reduced_word(b);
}

void sort_canonical(const CartanDatum& datum, std::vector<WeylElement>& elements) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys;
  keys.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    keys.push_back({{elements[k].length(), datum.reduced_word(elements[k])}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> sorted;
  sorted.reserve(elements.size());
  for (const auto& key : keys) sorted.push_back(std::move(elements[key.second]));
  elements = std::move(sorted);
}

const char* to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::parabolic: return "parabolic";
    case SubgroupKind::reflection: return "reflection";
    case SubgroupKind::chamber: return "chamber";
    case SubgroupKind::generic: return "generic";
  }
  return "generic";
}

bool SubgroupHandle::contains(const WeylElement& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

SubgroupHandle make_subgroup(const CartanDatum& datum, std::vector<WeylElement> generators, SubgroupKind kind,
                             std::size_t bound) {
  SubgroupHandle h;
  h.kind = kind;
  std::unordered_set<WeylElement, WeylElementHash> seen{datum.identity()};
  std::deque<WeylElement> queue{datum.identity()};
  while (!queue.empty()) {
    const WeylElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      WeylElement y = x * g;
      if (seen.insert(y).second) {
        queue.push_back(std::move(y));
        if (seen.size() > bound) throw BoundExceeded("subgroup closure exceeded bound of " + std::to_string(bound));
      }
    }
  }
  h.elements.assign(seen.begin(), seen.end());
  std::sort(h.elements.begin(), h.elements.end());
  h.generators = std::move(generators);
  return h;
}

SubgroupHandle reflection_subgroup(const CartanDatum& datum, std::span<const std::size_t> roots, SubgroupKind kind) {
  std::vector<WeylElement> gens;
  gens.reserve(roots.size());
  for (std::size_t k : roots) gens.push_back(datum.reflection(k));
  return make_subgroup(datum, std::move(gens), kind);
}

std::vector<WeylElement> brute_force_stabilizer(const CartanPtr& datum, const Weight& lambda) {
  std::vector<WeylElement> out;
  for (const auto& w : weyl_group(datum)->elements()) {
    if (dot_action(*datum, w, lambda) == lambda) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupHandle dot_stabilizer(const CartanPtr& datum, const Weight& lambda) {
  const WeightClass wc = classify_weight(*datum, lambda);
  SubgroupHandle h = reflection_subgroup(*datum, wc.zero_pairing_roots);
#if HCB_CHECKED
  if (h.elements != brute_force_stabilizer(datum, lambda)) {
    throw InvariantViolation("dot stabilizer of " + lambda.to_string() + " is not generated by its reflections");
  }
#endif
  return h;
}

DoubleCosetDecomposition double_cosets(const CartanDatum& datum, std::span<const WeylElement> ambient,
                                       const SubgroupHandle& left, const SubgroupHandle& right) {
  std::vector<WeylElement> order(ambient.begin(), ambient.end());
  sort_canonical(datum, order);
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> position;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!position.emplace(order[k], k).second) throw InvalidInput("double_cosets: ambient set has repeated elements");
  }
  for (const auto* sub : {&left, &right}) {
    for (const auto& g : sub->elements) {
      if (!position.count(g)) throw InvalidInput("double_cosets: subgroup is not contained in the ambient set");
    }
  }

  DoubleCosetDecomposition dec;
  dec.left = left;
  dec.right = right;
  dec.ambient_size = order.size();
  std::vector<char> visited(order.size(), 0);
  for (std::size_t start = 0; start < order.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> members{start};
    visited[start] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const WeylElement& x = order[members[head]];
      auto visit = [&](const WeylElement& y) {
        auto it = position.find(y);
        if (it == position.end()) throw InvalidInput("double_cosets: ambient set is not closed under H x K");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          members.push_back(it->second);
        }
      };
      for (const auto& h : left.generators) visit(h * x);
      for (const auto& k : right.generators) visit(x * k);
    }
    std::sort(members.begin(), members.end());
    DoubleCoset coset;
    coset.representative = order[start];
    for (std::size_t m : members) coset.members.push_back(order[m]);
    dec.cosets.push_back(std::move(coset));
  }
  return dec;
}

}  // namespace hcb
