#include "pgs/lie.hpp"

#include <algorithm>

#include "pgs/errors.hpp"
#include "pgs/zpn.hpp"

namespace pgs::lie {
namespace {

// Homogeneous-by-degree polynomials in the free associative algebra on two
// letters, truncated at degree k: poly[d][w] is the coefficient of the word
// of length d whose letters are the binary digits of w (s = 0, t = 1).
using Poly = std::vector<std::vector<std::int64_t>>;

Poly zero_poly(unsigned k) {
  Poly p(k + 1);
  for (unsigned d = 0; d <= k; ++d) p[d].assign(std::size_t{1} << d, 0);
  return p;
}

Poly letter(unsigned k, unsigned which) {
  Poly p = zero_poly(k);
  p[1][which] = 1;
  return p;
}

Poly poly_bracket(const Poly& a, const Poly& b, unsigned k, std::int64_t mod) {
  Poly out = zero_poly(k);
  for (unsigned da = 1; da <= k; ++da)
    for (unsigned db = 1; da + db <= k; ++db)
      for (std::size_t wa = 0; wa < a[da].size(); ++wa) {
        if (a[da][wa] == 0) continue;
        for (std::size_t wb = 0; wb < b[db].size(); ++wb) {
          if (b[db][wb] == 0) continue;
          const std::int64_t c = a[da][wa] * b[db][wb] % mod;
          auto& ab = out[da + db][(wa << db) | wb];
          auto& ba = out[da + db][(wb << da) | wa];
          ab = (ab + c) % mod;
          ba = ((ba - c) % mod + mod) % mod;
        }
      }
  return out;
}

// Solves sum_l c_l basis[l] = target over F_p (basis vectors independent).
Coeffs solve_mod_p(const std::vector<std::vector<std::int64_t>>& basis,
                   const std::vector<std::int64_t>& target, std::int64_t p) {
  const std::size_t m = basis.size();
  const std::size_t rows = target.size();
  // Augmented matrix: rows = word coordinates, columns = unknowns + rhs.
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(m + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t l = 0; l < m; ++l) a[r][l] = zpn::reduce(basis[l][r], p);
    a[r][m] = zpn::reduce(target[r], p);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(m, rows);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) throw InternalInconsistency("Hall basis is dependent");
    std::swap(a[piv], a[row]);
    const std::int64_t inv = zpn::inverse_mod(a[row][col], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r)
      if (r != row && a[r][col] != 0) {
        const std::int64_t f = a[r][col];
        for (std::size_t c = 0; c <= m; ++c) a[r][c] = zpn::reduce(a[r][c] - f * a[row][c], p);
      }
    pivot_row[col] = row++;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][m] != 0) throw InternalInconsistency("bracket is outside the Lie span");
  Coeffs out(m);
  for (std::size_t l = 0; l < m; ++l) out[l] = static_cast<std::uint32_t>(a[pivot_row[l]][m]);
  return out;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FreeNilpotentLie FreeNilpotentLie::make(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw BadParameters(std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxClass)
    throw BadParameters("free nilpotent Lie algebra supported for class 1..4 only");
  FreeNilpotentLie lie(p, k);
  const std::int64_t mod = p;

  // Basic commutators: name, weight, and definition as [left, right].
  struct Def {
    const char* name;
    unsigned weight;
    int left, right;
  };
  static constexpr Def kDefs[] = {
      {"s", 1, -1, -1},          {"t", 1, -1, -1},
      {"[t,s]", 2, 1, 0},        {"[t,s,s]", 3, 2, 0},
      {"[t,s,t]", 3, 2, 1},      {"[t,s,s,s]", 4, 3, 0},
      {"[t,s,s,t]", 4, 3, 1},    {"[t,s,t,t]", 4, 4, 1},
  };
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < std::size(kDefs); ++i) {
    const Def& d = kDefs[i];
    if (d.weight > k) break;
    lie.names_.push_back(d.name);
    lie.weights_.push_back(d.weight);
    if (d.left < 0) {
      polys.push_back(letter(k, static_cast<unsigned>(i)));
    } else {
      polys.push_back(poly_bracket(polys[d.left], polys[d.right], k, mod));
    }
  }

  const std::size_t n = lie.names_.size();
  lie.table_.assign(n * n, Coeffs(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned w = lie.weights_[i] + lie.weights_[j];
      if (w > k) continue;
      const Poly br = poly_bracket(polys[i], polys[j], k, mod);
      std::vector<std::size_t> idx;
      std::vector<std::vector<std::int64_t>> basis;
      for (std::size_t l = 0; l < n; ++l)
        if (lie.weights_[l] == w) {
          idx.push_back(l);
          basis.push_back(polys[l][w]);
        }
      const Coeffs c = solve_mod_p(basis, br[w], mod);
      for (std::size_t a = 0; a < idx.size(); ++a) lie.table_[i * n + j][idx[a]] = c[a];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (auto c = lie.table_[i * n + j][l])
          lie.sparse_.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                                 static_cast<std::uint16_t>(l), c});

  // Only the BCH terms that survive in class k need invertible denominators.
  if (k >= 2) {
    if (p == 2) throw BadParameters("BCH for class >= 2 needs p > 2");
    lie.half_ = static_cast<std::uint32_t>(zpn::inverse_mod(2, mod));
  }
  if (k >= 3) {
    if (p <= 3) throw BadParameters("BCH for class >= 3 needs p > 3");
    lie.twelfth_ = static_cast<std::uint32_t>(zpn::inverse_mod(12, mod));
  }
  if (k >= 4) lie.twentyfourth_ = static_cast<std::uint32_t>(zpn::inverse_mod(24, mod));
  return lie;
}

Coeffs FreeNilpotentLie::add(const Coeffs& x, const Coeffs& y) const {
  Coeffs out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = (x[i] + y[i]) % p_;
  return out;
}

Coeffs FreeNilpotentLie::scale(const Coeffs& x, std::uint32_t k) const {
  Coeffs out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    out[i] = static_cast<std::uint32_t>(std::uint64_t{x[i]} * k % p_);
  return out;
}

Coeffs FreeNilpotentLie::bracket(const Coeffs& x, const Coeffs& y) const {
  std::vector<std::uint64_t> acc(dim(), 0);
  for (const Term& t : sparse_)
    acc[t.l] += std::uint64_t{x[t.i]} * y[t.j] % p_ * t.c;
  Coeffs out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return out;
}

Coeffs FreeNilpotentLie::bch(const Coeffs& x, const Coeffs& y) const {
  Coeffs z = add(x, y);
  if (k_ < 2) return z;
  const Coeffs xy = bracket(x, y);
  z = add(z, scale(xy, half_));
  if (k_ < 3) return z;
  const Coeffs xxy = bracket(x, xy);
  const Coeffs yxy = bracket(y, xy);
  z = add(z, scale(xxy, twelfth_));
  z = add(z, scale(yxy, p_ - twelfth_));
  if (k_ < 4) return z;
  const Coeffs yxxy = bracket(y, xxy);
  return add(z, scale(yxxy, p_ - twentyfourth_));
}

// ---------------------------------------------------------------------------

LazardGroup::LazardGroup(FreeNilpotentLie lie, std::string label)
    : FiniteGroup(lie.p(), lie.dim(), std::move(label)), lie_(std::move(lie)) {}

std::shared_ptr<const LazardGroup> LazardGroup::make(std::uint32_t p, unsigned k) {
  FreeNilpotentLie lie = FreeNilpotentLie::make(p, k);
  std::shared_ptr<LazardGroup> g(new LazardGroup(
      std::move(lie), "B2(" + std::to_string(p) + "," + std::to_string(k) + ")"));
  Element s(g->lie_.dim()), t(g->lie_.dim());
  s[0] = 1;
  t[1] = 1;
  g->add_generator("s", s);
  g->add_generator("t", t);
  Element d = t;
  for (unsigned i = 1; i < k; ++i) d = commutator(*g, d, s);
  g->add_named("d", d);
  return g;
}

Element LazardGroup::from_coeffs(const Coeffs& c) const {
  Element e(lie_.dim());
  for (std::size_t i = 0; i < lie_.dim(); ++i) e[i] = static_cast<Element::Coord>(c[i] % lie_.p());
  return e;
}

Coeffs LazardGroup::to_coeffs(const Element& e) const {
  Coeffs c(lie_.dim());
  for (std::size_t i = 0; i < lie_.dim(); ++i) c[i] = e[i];
  return c;
}

unsigned LazardGroup::min_weight(const Element& e) const {
  for (std::size_t i = 0; i < lie_.dim(); ++i)
    if (e[i] != 0) return lie_.weights()[i];
  return lie_.nilpotence_class() + 1;
}

Element LazardGroup::multiply(const Element& a, const Element& b) const {
  return from_coeffs(lie_.bch(to_coeffs(a), to_coeffs(b)));
}

Element LazardGroup::invert(const Element& a) const {
  Element out(lie_.dim());
  for (std::size_t i = 0; i < lie_.dim(); ++i)
    out[i] = static_cast<Element::Coord>((lie_.p() - a[i]) % lie_.p());
  return out;
}

}  // namespace pgs::lie
