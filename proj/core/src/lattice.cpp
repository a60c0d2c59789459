#include "hcb/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>
#include <utility>

#include "hcb/error.hpp"

namespace hcb {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_positive(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Modular inverse of a modulo m when gcd(a, m) = 1.
std::optional<long long> mod_inverse(long long a, long long m) {
  long long r0 = m, r1 = mod_positive(a, m);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) return std::nullopt;
  return mod_positive(s0, m);
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i += k * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, long long k) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] += k * m[j][c];
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, long long k) {
  for (auto& row : m) row[i] += k * row[j];
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidInput("matrix dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      const long long aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  SmithForm f{identity_matrix(m), a, identity_matrix(n), {}};
  IntMatrix& d = f.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d[i][j] == 0) continue;
          if (!best || std::llabs(d[i][j]) < std::llabs(d[best->first][best->second])) best = {{i, j}};
        }
      }
      return best;
    };
    auto pivot = find_pivot();
    if (!pivot) break;

    while (true) {
      swap_rows(d, t, pivot->first);
      swap_rows(f.U, t, pivot->first);
      swap_cols(d, t, pivot->second);
      swap_cols(f.V, t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        const long long q = floor_div(d[i][t], d[t][t]);
        add_row(d, i, t, -q);
        add_row(f.U, i, t, -q);
        if (d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        const long long q = floor_div(d[t][j], d[t][t]);
        add_col(d, j, t, -q);
        add_col(f.V, j, t, -q);
        if (d[t][j] != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce divisibility of the remaining block by the pivot.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (d[i][j] % d[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        add_row(d, t, *bad_row, 1);
        add_row(f.U, t, *bad_row, 1);
      }
      // Re-pivot on the smallest entry of row t / column t.
      std::pair<std::size_t, std::size_t> best{t, t};
      for (std::size_t i = t; i < m; ++i) {
        if (d[i][t] != 0 && std::llabs(d[i][t]) < std::llabs(d[best.first][best.second])) best = {i, t};
      }
      for (std::size_t j = t; j < n; ++j) {
        if (d[t][j] != 0 && std::llabs(d[t][j]) < std::llabs(d[best.first][best.second])) best = {t, j};
      }
      pivot = best;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : f.U[t]) x = -x;
    }
    f.invariant_factors.push_back(d[t][t]);
  }
  return f;
}

std::optional<IntVector> solve_integer_system(const IntMatrix& b, const IntVector& y) {
  if (b.size() != y.size()) throw InvalidInput("solve_integer_system: dimension mismatch");
  const std::size_t n = b.empty() ? 0 : b[0].size();
  const SmithForm f = smith_normal_form(b);
  IntVector uy(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) uy[i] += f.U[i][k] * y[k];
  }
  IntVector z(n, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const long long di = i < f.invariant_factors.size() ? f.invariant_factors[i] : 0;
    if (di == 0) {
      if (uy[i] != 0) return std::nullopt;
      continue;
    }
    if (uy[i] % di != 0) return std::nullopt;
    z[i] = uy[i] / di;
  }
  IntVector x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) x[i] += f.V[i][k] * z[k];
  }
  return x;
}

RationalVector solve_rational_system(const RationalMatrix& m, const RationalVector& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw InvalidInput("solve_rational_system: dimension mismatch");
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw InvalidInput("solve_rational_system: matrix not square");
    aug[i].push_back(b[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidInput("solve_rational_system: singular matrix");
    std::swap(aug[piv], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

RationalMatrix rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, RationalVector(n));
  RationalMatrix rm(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rm[i][j] = static_cast<long>(a[i][j]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n, 0);
    e[j] = 1;
    const RationalVector col = solve_rational_system(rm, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

LatticeClass::LatticeClass(std::vector<long long> residues, std::vector<long long> moduli)
    : residues_(std::move(residues)), moduli_(std::move(moduli)) {
  if (residues_.size() != moduli_.size()) throw InvalidInput("LatticeClass: size mismatch");
  for (std::size_t i = 0; i < moduli_.size(); ++i) residues_[i] = mod_positive(residues_[i], moduli_[i]);
}

LatticeClass LatticeClass::zero(const std::vector<long long>& moduli) {
  return LatticeClass(std::vector<long long>(moduli.size(), 0), moduli);
}

bool LatticeClass::is_zero() const {
  return std::all_of(residues_.begin(), residues_.end(), [](long long r) { return r == 0; });
}

LatticeClass LatticeClass::operator+(const LatticeClass& other) const {
  if (moduli_ != other.moduli_) throw InvalidInput("LatticeClass: adding classes of different groups");
  std::vector<long long> r(residues_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = residues_[i] + other.residues_[i];
  return LatticeClass(std::move(r), moduli_);
}

LatticeClass LatticeClass::operator-() const {
  std::vector<long long> r(residues_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -residues_[i];
  return LatticeClass(std::move(r), moduli_);
}

LatticeClass LatticeClass::operator-(const LatticeClass& other) const { return *this + (-other); }

std::string LatticeClass::to_string() const {
  if (moduli_.empty()) return "0 mod 1";
  auto one = [&](std::size_t i) { return std::to_string(residues_[i]) + " mod " + std::to_string(moduli_[i]); };
  if (moduli_.size() == 1) return one(0);
  std::string s = "(";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += ", ";
    s += one(i);
  }
  return s + ")";
}

QuotientGroup::QuotientGroup(const IntMatrix& relations) {
  const SmithForm f = smith_normal_form(relations);
  if (f.invariant_factors.size() != relations.size()) {
    throw InvalidInput("QuotientGroup: relation matrix is singular");
  }
  for (std::size_t l = 0; l < f.invariant_factors.size(); ++l) {
    const long long d = f.invariant_factors[l];
    if (d == 1) continue;
    IntVector row = f.U[l];
    for (auto& x : row) x = mod_positive(x, d);
    // Normalize so the first basis vector of full order maps to 1.
    for (long long entry : row) {
      if (auto inv = mod_inverse(entry, d)) {
        for (auto& x : row) x = mod_positive(x * *inv, d);
        break;
      }
    }
    moduli_.push_back(d);
    rows_.push_back(std::move(row));
  }
}

long long QuotientGroup::order() const {
  return std::accumulate(moduli_.begin(), moduli_.end(), 1LL, std::multiplies<>());
}

LatticeClass QuotientGroup::class_of(const IntVector& x) const {
  std::vector<long long> r(rows_.size(), 0);
  for (std::size_t l = 0; l < rows_.size(); ++l) {
    if (rows_[l].size() != x.size()) throw InvalidInput("QuotientGroup: dimension mismatch");
    long long acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc = mod_positive(acc + mod_positive(rows_[l][j], moduli_[l]) * mod_positive(x[j], moduli_[l]), moduli_[l]);
    r[l] = acc;
  }
  return LatticeClass(std::move(r), moduli_);
}

}  // namespace hcb
