#include "hcb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

#include "hcb/error.hpp"

namespace hcb {

// ---------------------------------------------------------------- Weight

Weight Weight::from_integers(const IntVector& coords) {
  std::vector<Rational> c(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = Rational(static_cast<long>(coords[i]));
  return Weight(std::move(c));
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

IntVector Weight::to_integers() const {
  IntVector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = to_integer(coords_[i]);
  return out;
}

namespace {
void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) {
    throw InvalidInput("weight rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}
}  // namespace

Weight Weight::operator+(const Weight& other) const {
  Weight out = *this;
  out += other;
  return out;
}

Weight Weight::operator-(const Weight& other) const {
  Weight out = *this;
  out -= other;
  return out;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& q : out.coords_) q = -q;
  return out;
}

Weight Weight::operator*(const Rational& scalar) const {
  Weight out = *this;
  for (auto& q : out.coords_) q *= scalar;
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

bool Weight::operator<(const Weight& other) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(), other.coords_.begin(), other.coords_.end(),
                                      [](const Rational& a, const Rational& b) { return a < b; });
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += hcb::to_string(coords_[i]);
  }
  return s + ")";
}

Weight parse_weight(std::string_view csv) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    coords.push_back(parse_rational(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = w.rank();
  for (const auto& q : w.coords()) {
    const std::size_t part = std::hash<long>{}(q.get_num().get_si()) * 31 + std::hash<long>{}(q.get_den().get_si());
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- Root

Rational Root::pairing(const Weight& nu) const {
  if (nu.rank() != coroot_coords.size()) throw InvalidInput("pairing: weight rank mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < coroot_coords.size(); ++i) {
    if (coroot_coords[i] != 0) acc += nu[i] * static_cast<long>(coroot_coords[i]);
  }
  return acc;
}

long long Root::pairing(const IntVector& nu) const {
  long long acc = 0;
  for (std::size_t i = 0; i < coroot_coords.size(); ++i) acc += coroot_coords[i] * nu[i];
  return acc;
}

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(Perm root_perm, std::size_t rank, std::vector<std::int16_t> flat_matrix)
    : perm_(std::move(root_perm)), rank_(rank), matrix_(std::move(flat_matrix)) {}

IntMatrix WeylElement::weight_matrix() const {
  IntMatrix m(rank_, IntVector(rank_));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) m[i][j] = matrix_[i * rank_ + j];
  }
  return m;
}

int WeylElement::length() const {
  const std::size_t npos = perm_.size() / 2;
  int len = 0;
  for (std::size_t k = 0; k < npos; ++k) len += perm_[k] >= npos ? 1 : 0;
  return len;
}

bool WeylElement::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != k) return false;
  }
  return true;
}

Weight WeylElement::act(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw InvalidInput("Weyl action: weight rank mismatch");
  std::vector<Rational> out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      const long e = matrix_[i * rank_ + j];
      if (e != 0) out[i] += lambda[j] * e;
    }
  }
  return Weight(std::move(out));
}

IntVector WeylElement::act(const IntVector& lambda) const {
  if (lambda.size() != rank_) throw InvalidInput("Weyl action: weight rank mismatch");
  IntVector out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) out[i] += matrix_[i * rank_ + j] * lambda[j];
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (perm_.size() != other.perm_.size() || rank_ != other.rank_) {
    throw InvalidInput("Weyl product: elements of different groups");
  }
  Perm p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = perm_[other.perm_[k]];
  std::vector<std::int16_t> m(rank_ * rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t k = 0; k < rank_; ++k) {
      const int a = matrix_[i * rank_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) m[i * rank_ + j] = static_cast<std::int16_t>(m[i * rank_ + j] + a * other.matrix_[k * rank_ + j]);
    }
  }
  return WeylElement(std::move(p), rank_, std::move(m));
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : w.root_perm()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------- construction

namespace {

IntMatrix irreducible_cartan(char series, int n) {
  IntMatrix a(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'F':
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);  // alpha_1, alpha_2 long
      link(2, 3, -1, -1);
      break;
    case 'G':
      link(0, 1, -3, -1);  // alpha_1 short
      break;
    default:
      throw InvalidInput(std::string("unknown Cartan series '") + series + "'");
  }
  return a;
}

void check_series_rank(char series, int n, std::string_view token) {
  auto fail = [&]() { throw InvalidInput("rank out of supported range in '" + std::string(token) + "'"); };
  if (n < 1 || n > 8) fail();
  switch (series) {
    case 'A': break;
    case 'B':
    case 'C':
      if (n < 2) fail();
      break;
    case 'D':
      if (n < 3) fail();
      break;
    case 'E':
      if (n < 6) fail();
      break;
    case 'F':
      if (n != 4) fail();
      break;
    case 'G':
      if (n != 2) fail();
      break;
    default:
      throw InvalidInput("unknown type label '" + std::string(token) + "'");
  }
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

unsigned long long irreducible_order(char series, int n) {
  switch (series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152ULL;
    case 'G': return 12ULL;
  }
  return 0;
}

}  // namespace

CartanPtr build_root_system(std::string_view type_label) {
  if (type_label.empty()) throw InvalidInput("empty type label");
  std::shared_ptr<CartanDatum> d(new CartanDatum());
  d->type_label_ = std::string(type_label);

  std::vector<std::pair<char, int>> factors;
  std::size_t start = 0;
  while (start <= type_label.size()) {
    const auto sep = type_label.find('x', start);
    const std::string_view token =
        type_label.substr(start, sep == std::string_view::npos ? type_label.npos : sep - start);
    if (token.size() < 2 || !std::isupper(static_cast<unsigned char>(token[0]))) {
      throw InvalidInput("unknown type label '" + std::string(type_label) + "'");
    }
    const std::string_view digits = token.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 2) {
      throw InvalidInput("unknown type label '" + std::string(type_label) + "'");
    }
    const int n = std::stoi(std::string(digits));
    check_series_rank(token[0], n, token);
    factors.emplace_back(token[0], n);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }

  std::size_t total = 0;
  for (auto [s, n] : factors) total += static_cast<std::size_t>(n);
  d->cartan_.assign(total, IntVector(total, 0));
  int offset = 0;
  for (auto [s, n] : factors) {
    const IntMatrix block = irreducible_cartan(s, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d->cartan_[offset + i][offset + j] = block[i][j];
    }
    d->components_.push_back({s, n, offset});
    offset += n;
  }
  d->finalize();
  return d;
}

void CartanDatum::finalize() {
  const std::size_t n = rank();
  const IntMatrix& a = cartan_;

  // Symmetrizer from d_i a_ij = d_j a_ji, per connected component.
  std::vector<Rational> dq(n, 0);
  for (const auto& comp : components_) {
    dq[comp.offset] = 1;
    std::deque<std::size_t> queue{static_cast<std::size_t>(comp.offset)};
    std::vector<char> seen(n, 0);
    seen[comp.offset] = 1;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || seen[j]) continue;
        Rational ratio(mpz_class(static_cast<long>(a[i][j])), mpz_class(static_cast<long>(a[j][i])));
        ratio.canonicalize();
        dq[j] = dq[i] * ratio;
        seen[j] = 1;
        queue.push_back(j);
      }
    }
    Rational min = dq[comp.offset];
    for (int k = 0; k < comp.rank; ++k) {
      min = std::min(min, dq[comp.offset + k]);
    }
    for (int k = 0; k < comp.rank; ++k) {
      dq[comp.offset + k] /= min;
    }
  }
  symmetrizer_.resize(n);
  for (std::size_t i = 0; i < n; ++i) symmetrizer_[i] = to_integer(dq[i]);

  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0) || a[i][j] * a[j][i] >= 4) {
        throw InvalidInput("not a finite-type Cartan matrix");
      }
    }
  }

  // Positive roots by increasing height via root strings.
  auto pair_simple = [&](const IntVector& beta, std::size_t i) {
    long long acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += beta[j] * a[i][j];
    return acc;  // <beta, alpha_i^vee>
  };
  std::vector<IntVector> positive;
  std::vector<IntVector> sorted_known;
  auto known = [&](const IntVector& v) { return std::binary_search(sorted_known.begin(), sorted_known.end(), v); };
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  while (!layer.empty()) {
    for (const auto& r : layer) positive.push_back(r);
    sorted_known = positive;
    std::sort(sorted_known.begin(), sorted_known.end());
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        long long p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known(down)) break;
          ++p;
        }
        const long long q = p - pair_simple(beta, i);
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    layer = std::move(next);
  }
  num_positive_ = positive.size();

  auto make_root = [&](const IntVector& c) {
    Root r;
    r.simple_coords = c;
    r.height = std::accumulate(c.begin(), c.end(), 0LL);
    r.as_weight.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) r.as_weight[j] += a[j][i] * c[i];
    }
    long long norm = 0;  // (beta, beta)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) norm += c[i] * c[j] * symmetrizer_[i] * a[i][j];
    }
    r.coroot_coords.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const long long num = c[i] * 2 * symmetrizer_[i];
      if (num % norm != 0) throw InvariantViolation("non-integral coroot coordinate");
      r.coroot_coords[i] = num / norm;
    }
    return r;
  };
  roots_.clear();
  for (const auto& c : positive) roots_.push_back(make_root(c));
  for (const auto& c : positive) {
    IntVector neg = c;
    for (auto& x : neg) x = -x;
    roots_.push_back(make_root(neg));
  }
  root_lookup_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) root_lookup_.emplace_back(roots_[k].simple_coords, k);
  std::sort(root_lookup_.begin(), root_lookup_.end());

  rho_ = Weight(std::vector<Rational>(n, 1));
  weight_classes_ = QuotientGroup(a);
  cartan_inverse_ = rational_inverse(a);
  gram_.assign(n, RationalVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) gram_[k][j] = cartan_inverse_[j][k] * static_cast<long>(symmetrizer_[j]);
  }

  WeylElement::Perm id_perm(roots_.size());
  std::iota(id_perm.begin(), id_perm.end(), 0);
  identity_ = element_from_perm(id_perm);
  simple_reflections_.clear();
  for (std::size_t i = 0; i < n; ++i) simple_reflections_.push_back(reflection(i));
}

std::optional<std::size_t> CartanDatum::find_root(const IntVector& simple_coords) const {
  auto it = std::lower_bound(root_lookup_.begin(), root_lookup_.end(), simple_coords,
                             [](const auto& entry, const IntVector& key) { return entry.first < key; });
  if (it == root_lookup_.end() || it->first != simple_coords) return std::nullopt;
  return it->second;
}

RationalVector CartanDatum::simple_root_coords(const Weight& lambda) const {
  const std::size_t n = rank();
  if (lambda.rank() != n) throw InvalidInput("simple_root_coords: rank mismatch");
  RationalVector out(n, 0);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) out[l] += cartan_inverse_[l][j] * lambda[j];
  }
  return out;
}

Rational CartanDatum::inner_product(const Weight& x, const Weight& y) const {
  const std::size_t n = rank();
  if (x.rank() != n || y.rank() != n) throw InvalidInput("inner_product: rank mismatch");
  Rational acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += x[k] * gram_[k][j] * y[j];
  }
  return acc;
}

WeylElement CartanDatum::reflection(std::size_t root_index) const {
  if (root_index >= roots_.size()) throw InvalidInput("reflection: root index out of range");
  const Root& alpha = roots_[root_index];
  const std::size_t n = rank();
  WeylElement::Perm perm(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const long long p = alpha.pairing(roots_[k].as_weight);
    IntVector image = roots_[k].simple_coords;
    for (std::size_t i = 0; i < n; ++i) image[i] -= p * alpha.simple_coords[i];
    const auto idx = find_root(image);
    if (!idx) throw InvariantViolation("reflection does not permute the roots");
    perm[k] = static_cast<std::uint16_t>(*idx);
  }
  std::vector<std::int16_t> m(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      m[j * n + l] = static_cast<std::int16_t>((j == l ? 1 : 0) - alpha.as_weight[j] * alpha.coroot_coords[l]);
    }
  }
  return WeylElement(std::move(perm), n, std::move(m));
}

WeylElement CartanDatum::element_from_perm(WeylElement::Perm perm) const {
  if (perm.size() != roots_.size()) throw InvalidInput("element_from_perm: wrong permutation size");
  const std::size_t n = rank();
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  std::vector<std::int16_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Root& r = roots_[inv[i]];
    for (std::size_t l = 0; l < n; ++l) m[i * n + l] = static_cast<std::int16_t>(r.coroot_coords[l]);
  }
  return WeylElement(std::move(perm), n, std::move(m));
}

WeylElement CartanDatum::inverse(const WeylElement& w) const {
  WeylElement::Perm inv(w.root_perm().size());
  for (std::size_t k = 0; k < inv.size(); ++k) inv[w.root_perm()[k]] = static_cast<std::uint16_t>(k);
  return element_from_perm(std::move(inv));
}

WeylElement CartanDatum::from_word(std::span<const int> word) const {
  WeylElement w = identity_;
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank()) throw InvalidInput("simple reflection index out of range");
    w = w * simple_reflections_[static_cast<std::size_t>(i)];
  }
  return w;
}

std::vector<int> CartanDatum::reduced_word(const WeylElement& w) const {
  const std::size_t npos = num_positive_;
  std::vector<std::uint16_t> inv(w.root_perm().size());
  for (std::size_t k = 0; k < inv.size(); ++k) inv[w.root_perm()[k]] = static_cast<std::uint16_t>(k);
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i < rank() && inv[i] < npos) ++i;
    if (i == rank()) break;
    word.push_back(static_cast<int>(i));
    // w <- s_i w, so w^{-1} <- w^{-1} s_i.
    const auto& s = simple_reflections_[i].root_perm();
    std::vector<std::uint16_t> next(inv.size());
    for (std::size_t k = 0; k < inv.size(); ++k) next[k] = inv[s[k]];
    inv = std::move(next);
  }
  return word;
}

unsigned long long CartanDatum::weyl_group_order() const {
  unsigned long long order = 1;
  for (const auto& c : components_) order *= irreducible_order(c.series, c.rank);
  return order;
}

// ---------------------------------------------------------------- operations

Weight dot_action(const CartanDatum& datum, const WeylElement& w, const Weight& lambda) {
  if (lambda.rank() != datum.rank()) throw InvalidInput("dot_action: weight rank mismatch");
  return w.act(lambda + datum.rho()) - datum.rho();
}

WeightClass classify_weight(const CartanDatum& datum, const Weight& lambda) {
  if (lambda.rank() != datum.rank()) throw InvalidInput("classify_weight: weight rank mismatch");
  WeightClass c;
  c.dominant = true;
  c.antidominant = true;
  const Weight shifted = lambda + datum.rho();
  for (std::size_t k = 0; k < datum.num_positive_roots(); ++k) {
    const Rational p = datum.pairing(shifted, k);
    if (p == 0) {
      c.zero_pairing_roots.push_back(k);
    } else if (is_integer(p)) {
      if (p < 0) c.dominant = false;
      if (p > 0) c.antidominant = false;
    }
  }
  c.regular = c.zero_pairing_roots.empty();
  return c;
}

LatticeClass lattice_class(const CartanDatum& datum, const Weight& lambda) {
  if (lambda.rank() != datum.rank()) throw InvalidInput("lattice_class: weight rank mismatch");
  if (!lambda.is_integral()) throw InvalidInput("lattice_class: " + lambda.to_string() + " is not in the weight lattice");
  return datum.weight_classes().class_of(lambda.to_integers());
}

LatticeMembership weight_lattice_tests(const CartanDatum& datum, const Weight& lambda) {
  if (lambda.rank() != datum.rank()) throw InvalidInput("weight_lattice_tests: weight rank mismatch");
  LatticeMembership m;
  m.in_weight_lattice = lambda.is_integral();
  const RationalVector simple = datum.simple_root_coords(lambda);
  m.in_root_lattice = std::all_of(simple.begin(), simple.end(), [](const Rational& q) { return is_integer(q); });
  if (m.in_weight_lattice) m.weight_class = lattice_class(datum, lambda);
  return m;
}

}  // namespace hcb
