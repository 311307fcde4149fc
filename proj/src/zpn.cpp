#include "pgs/zpn.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "pgs/errors.hpp"

namespace pgs::zpn {

Int ipow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

Int reduce(Int a, Int m) {
  a %= m;
  return a < 0 ? a + m : a;
}

unsigned valuation(Int a, Int p, unsigned N) {
  if (a == 0) return N;
  unsigned v = 0;
  while (a % p == 0 && v < N) {
    a /= p;
    ++v;
  }
  return v;
}

Int inverse_mod(Int a, Int m) {
  Int g = m, x = 0, y = 1;
  Int r = reduce(a, m);
  while (r != 0) {
    Int q = g / r;
    std::tie(g, r) = std::pair{r, g - q * r};
    std::tie(x, y) = std::pair{y, x - q * y};
  }
  if (g != 1) throw NotInvertible("residue is not a unit");
  return reduce(x, m);
}

namespace {

Int checked_modulus(std::uint32_t p, unsigned N) {
  if (p < 2 || N < 1) throw BadParameters("modulus needs p >= 2 and N >= 1");
  Int q = 1;
  for (unsigned i = 0; i < N; ++i) {
    q *= p;
    if (q > (Int{1} << 31)) throw ParameterTooLarge("p^N exceeds 2^31");
  }
  return q;
}

void axpy(Vec& y, Int t, const Vec& x, Int q) {
  if (t == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = reduce(y[i] - t * x[i], q);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int a) { return a == 0; });
}

}  // namespace

ModMatrix::ModMatrix(std::uint32_t p, unsigned N, std::size_t rows,
                     std::size_t cols)
    : p_(p), N_(N), q_(checked_modulus(p, N)), rows_(rows), cols_(cols),
      data_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(std::uint32_t p, unsigned N, std::size_t n) {
  ModMatrix m(p, N, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::from_rows(std::uint32_t p, unsigned N,
                               const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ModMatrix m(p, N, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw BadParameters("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void ModMatrix::set(std::size_t i, std::size_t j, Int value) {
  data_[i * cols_ + j] = reduce(value, q_);
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_ || q_ != rhs.q_)
    throw BadParameters("incompatible matrix product");
  ModMatrix out(p_, N_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        acc = (acc + (*this)(i, k) * rhs(k, j)) % q_;
      out.data_[i * out.cols_ + j] = acc;
    }
  return out;
}

Vec ModMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw BadParameters("vector length mismatch");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t k = 0; k < cols_; ++k)
      acc = (acc + (*this)(i, k) * reduce(v[k], q_)) % q_;
    out[i] = acc;
  }
  return out;
}

ModMatrix ModMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw BadParameters("power of a non-square matrix");
  ModMatrix result = identity(p_, N_, rows_);
  ModMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t ModMatrix::rank_mod_p() const {
  const Int p = p_;
  std::vector<Vec> a(rows_, Vec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a[i][j] = (*this)(i, j) % p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && a[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(a[piv], a[rank]);
    const Int inv = inverse_mod(a[rank][col], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != rank && a[i][col] != 0) axpy(a[i], a[i][col], a[rank], p);
    ++rank;
  }
  return rank;
}

std::uint64_t matrix_power_order(const ModMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw BadParameters("matrix order of a non-square matrix");
  if (m.rank_mod_p() < n) throw NotInvertible("matrix is singular mod p");

  // Unipotent mod p: (M - I)^n == 0 over F_p.
  ModMatrix shifted(m.p(), 1, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      shifted.set(i, j, m(i, j) - (i == j ? 1 : 0));
  const ModMatrix nil = shifted.pow(n);
  bool unipotent = true;
  for (std::size_t i = 0; i < n && unipotent; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (nil(i, j) != 0) {
        unipotent = false;
        break;
      }

  if (unipotent) {
    std::uint64_t order = 1;
    ModMatrix power = m;
    for (unsigned steps = 0; !power.is_identity(); ++steps) {
      if (steps > 64) throw InternalInconsistency("unipotent order overflow");
      power = power.pow(m.p());
      order *= m.p();
    }
    return order;
  }

  // Brute force, capped at p^(N*rows) (the size of the matrix ring).
  long double cap = 1;
  for (std::size_t i = 0; i < n * m.N(); ++i) cap *= m.p();
  std::uint64_t order = 1;
  ModMatrix power = m;
  while (!power.is_identity()) {
    power = power * m;
    ++order;
    if (order > cap || order > 50'000'000)
      throw InternalInconsistency("matrix order exceeds its cap");
  }
  return order;
}

EchelonBasis::EchelonBasis(std::uint32_t p, unsigned N, std::size_t dim)
    : p_(p), N_(N), q_(checked_modulus(p, N)), dim_(dim) {}

unsigned EchelonBasis::log_order() const {
  unsigned total = 0;
  for (unsigned v : valuations_) total += N_ - v;
  return total;
}

EchelonBasis echelonize(std::uint32_t p, unsigned N, std::size_t dim,
                        std::span<const Vec> vectors) {
  EchelonBasis out(p, N, dim);
  const Int q = out.q_;
  std::vector<Vec> pending;
  for (const Vec& v : vectors) {
    if (v.size() != dim) throw BadParameters("vectors of unequal length");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = reduce(v[i], q);
    if (!is_zero(r)) pending.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < dim && !pending.empty(); ++col) {
    std::size_t best = pending.size();
    unsigned best_v = N;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i][col] == 0) continue;
      const unsigned v = valuation(pending[i][col], p, N);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == pending.size()) continue;

    Vec row = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const Int pv = ipow(p, best_v);
    const Int unit_inv = inverse_mod(row[col] / pv, q);
    for (auto& x : row) x = x * unit_inv % q;

    for (Vec& other : pending)
      if (other[col] != 0) axpy(other, other[col] / pv, row, q);

    Vec shifted(dim);
    const Int annihilator = ipow(p, N - best_v);
    for (std::size_t i = 0; i < dim; ++i) shifted[i] = row[i] * annihilator % q;
    if (!is_zero(shifted)) pending.push_back(std::move(shifted));
    std::erase_if(pending, is_zero);

    out.rows_.push_back(std::move(row));
    out.pivots_.push_back(col);
    out.valuations_.push_back(best_v);
  }

  for (std::size_t j = 0; j < out.rows_.size(); ++j) {
    const Int pv = ipow(p, out.valuations_[j]);
    const std::size_t col = out.pivots_[j];
    for (std::size_t i = 0; i < j; ++i) {
      const Int t = out.rows_[i][col] / pv;
      axpy(out.rows_[i], t, out.rows_[j], q);
    }
  }
  return out;
}

bool submodule_member(std::span<const Int> v, const EchelonBasis& basis) {
  if (v.size() != basis.dim()) throw BadParameters("vector length mismatch");
  const Int q = basis.modulus();
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = reduce(v[i], q);
  for (std::size_t k = 0; k < basis.rows().size(); ++k) {
    const std::size_t col = basis.pivot_columns()[k];
    for (std::size_t c = 0; c < col; ++c)
      if (r[c] != 0) return false;
    const Int pv = ipow(basis.p(), basis.pivot_valuations()[k]);
    if (r[col] % pv != 0) return false;
    axpy(r, r[col] / pv, basis.rows()[k], q);
  }
  return is_zero(r);
}

unsigned AbelianInvariants::log_order() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Vec AbelianInvariants::to_canonical(std::span<const Int> x) const {
  if (x.size() != ambient_) throw BadParameters("vector length mismatch");
  const Int q = ipow(p_, N_);
  Vec y(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t s = slots_[k];
    Int acc = 0;
    for (std::size_t i = 0; i < ambient_; ++i)
      acc = (acc + reduce(x[i], q) * forward_[i][s]) % q;
    y[k] = acc % moduli_[k];
  }
  return y;
}

Vec AbelianInvariants::from_canonical(std::span<const Int> y) const {
  if (y.size() != rank()) throw BadParameters("vector length mismatch");
  const Int q = ipow(p_, N_);
  Vec x(ambient_, 0);
  for (std::size_t k = 0; k < rank(); ++k) {
    const Int yk = reduce(y[k], moduli_[k]);
    const Vec& row = backward_[slots_[k]];
    for (std::size_t j = 0; j < ambient_; ++j) x[j] = (x[j] + yk * row[j]) % q;
  }
  return x;
}

AbelianInvariants quotient_structure(const EchelonBasis& basis,
                                     bool require_headroom) {
  const std::uint32_t p = basis.p();
  const unsigned N = basis.N();
  const Int q = basis.modulus();
  const std::size_t n = basis.dim();
  std::vector<Vec> a = basis.rows();
  const std::size_t r = a.size();

  std::vector<Vec> fwd(n, Vec(n, 0)), bwd(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) fwd[i][i] = bwd[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : fwd) std::swap(row[x], row[y]);
    std::swap(bwd[x], bwd[y]);
  };
  // col_j -= t * col_k, tracked as a change of basis.
  auto col_op = [&](std::size_t j, std::size_t k, Int t) {
    for (auto& row : a) row[j] = reduce(row[j] - t * row[k], q);
    for (auto& row : fwd) row[j] = reduce(row[j] - t * row[k], q);
    for (std::size_t c = 0; c < n; ++c)
      bwd[k][c] = reduce(bwd[k][c] + t * bwd[j][c], q);
  };

  std::vector<unsigned> diag;
  for (std::size_t k = 0; k < std::min(r, n); ++k) {
    std::size_t bi = r, bj = n;
    unsigned bv = N;
    for (std::size_t i = k; i < r; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j] == 0) continue;
        const unsigned v = valuation(a[i][j], p, N);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == r) break;
    std::swap(a[bi], a[k]);
    swap_cols(bj, k);
    const Int pv = ipow(p, bv);
    const Int unit_inv = inverse_mod(a[k][k] / pv, q);
    for (auto& x : a[k]) x = x * unit_inv % q;
    for (std::size_t i = k + 1; i < r; ++i)
      if (a[i][k] != 0) axpy(a[i], a[i][k] / pv, a[k], q);
    for (std::size_t j = k + 1; j < n; ++j)
      if (a[k][j] != 0) col_op(j, k, a[k][j] / pv);
    diag.push_back(bv);
  }

  AbelianInvariants inv;
  inv.p_ = p;
  inv.N_ = N;
  inv.ambient_ = n;
  std::vector<std::pair<unsigned, std::size_t>> kept;
  for (std::size_t s = 0; s < n; ++s) {
    const unsigned e = s < diag.size() ? diag[s] : N;
    if (e == 0) continue;
    if (require_headroom && e == N)
      throw ExponentTooSmall("quotient exponent reaches the working modulus");
    kept.emplace_back(e, s);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [e, s] : kept) {
    inv.exponents_.push_back(e);
    inv.moduli_.push_back(ipow(p, e));
    inv.slots_.push_back(s);
  }
  inv.forward_ = std::move(fwd);
  inv.backward_ = std::move(bwd);
  return inv;
}

}  // namespace pgs::zpn
