#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "pgs/errors.hpp"
#include "pgs/lie.hpp"

using namespace pgs;
using lie::Coeffs;
using lie::FreeNilpotentLie;

namespace {

// Truncated free associative algebra on s, t over F_p: word -> coefficient.
struct Assoc {
  std::int64_t p;
  unsigned k;
  using Poly = std::map<std::string, std::int64_t>;

  Poly norm(Poly a) const {
    Poly out;
    for (auto& [w, c] : a) {
      const std::int64_t r = ((c % p) + p) % p;
      if (r && w.size() <= k) out[w] = r;
    }
    return out;
  }
  Poly add(const Poly& a, const Poly& b, std::int64_t sb = 1) const {
    Poly out = a;
    for (auto& [w, c] : b) out[w] += sb * c;
    return norm(out);
  }
  Poly mul(const Poly& a, const Poly& b) const {
    Poly out;
    for (auto& [u, x] : a)
      for (auto& [v, y] : b)
        if (u.size() + v.size() <= k) out[u + v] += x * y % p;
    return norm(out);
  }
  Poly scale(const Poly& a, std::int64_t c) const {
    Poly out;
    for (auto& [w, x] : a) out[w] = x * c;
    return norm(out);
  }
  Poly bracket(const Poly& a, const Poly& b) const { return add(mul(a, b), mul(b, a), -1); }
  std::int64_t inv(std::int64_t a) const {
    for (std::int64_t x = 1; x < p; ++x)
      if (a % p * x % p == 1) return x;
    return 0;
  }
  Poly exp(const Poly& x) const {
    Poly out{{"", 1}}, term{{"", 1}};
    for (unsigned n = 1; n <= k; ++n) {
      term = scale(mul(term, x), inv(n));
      out = add(out, term);
    }
    return out;
  }
  // log(1 + w) for w without constant term.
  Poly log1p(const Poly& w) const {
    Poly out, pw{{"", 1}};
    for (unsigned n = 1; n <= k; ++n) {
      pw = mul(pw, w);
      out = add(out, scale(pw, (n % 2 ? 1 : p - 1) * inv(n)));
    }
    return out;
  }
};

// Left-normed bracket named like "[t,s,s]".
Assoc::Poly expand_name(const Assoc& A, const std::string& name) {
  std::vector<std::string> letters;
  for (char ch : name)
    if (ch == 's' || ch == 't') letters.emplace_back(1, ch);
  Assoc::Poly acc{{letters[0], 1}};
  for (std::size_t i = 1; i < letters.size(); ++i) acc = A.bracket(acc, {{letters[i], 1}});
  return A.norm(acc);
}

Assoc::Poly expand(const Assoc& A, const FreeNilpotentLie& L, const Coeffs& x) {
  Assoc::Poly out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out = A.add(out, A.scale(expand_name(A, L.basis_names()[i]), x[i]));
  return out;
}

// Witt's formula for rank 2.
unsigned witt(unsigned n) {
  auto mobius = [](unsigned d) {
    int m = 1;
    for (unsigned q = 2; q <= d; ++q)
      if (d % q == 0) {
        d /= q;
        if (d % q == 0) return 0;
        m = -m;
      }
    return m;
  };
  int s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * (1 << (n / d));
  return static_cast<unsigned>(s) / n;
}

Coeffs random_coeffs(std::mt19937_64& rng, std::size_t dim, std::uint32_t p) {
  Coeffs c(dim);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
  return c;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("Hall basis dimensions follow Witt's formula") {
  auto L = FreeNilpotentLie::make(5, 4);
  std::map<unsigned, unsigned> count;
  for (unsigned w : L.weights()) ++count[w];
  for (unsigned n = 1; n <= 4; ++n) CHECK(count[n] == witt(n));
  CHECK(L.basis_names() ==
        std::vector<std::string>{"s", "t", "[t,s]", "[t,s,s]", "[t,s,t]", "[t,s,s,s]", "[t,s,s,t]", "[t,s,t,t]"});
}

TEST_CASE("structure constants agree with the associative expansion") {
  for (auto [p, k] : {std::pair{5u, 4u}, {7u, 4u}, {3u, 2u}, {5u, 3u}}) {
    auto L = FreeNilpotentLie::make(p, k);
    Assoc A{p, k};
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        const auto lhs = A.bracket(expand_name(A, L.basis_names()[i]), expand_name(A, L.basis_names()[j]));
        CHECK(expand(A, L, L.structure_constant(i, j)) == lhs);
      }
  }
}

TEST_CASE("antisymmetry and Jacobi") {
  auto L = FreeNilpotentLie::make(5, 4);
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const auto x = random_coeffs(rng, L.dim(), 5), y = random_coeffs(rng, L.dim(), 5),
               z = random_coeffs(rng, L.dim(), 5);
    CHECK(L.add(L.bracket(x, y), L.bracket(y, x)) == Coeffs(L.dim(), 0));
    const auto j = L.add(L.add(L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x))),
                         L.bracket(z, L.bracket(x, y)));
    CHECK(j == Coeffs(L.dim(), 0));
  }
}

TEST_CASE("BCH matches log(exp x exp y)") {
  for (auto [p, k] : {std::pair{5u, 4u}, {7u, 4u}, {5u, 3u}, {5u, 2u}}) {
    auto L = FreeNilpotentLie::make(p, k);
    Assoc A{p, k};
    std::mt19937_64 rng(p * 10 + k);
    for (int rep = 0; rep < 40; ++rep) {
      const auto x = random_coeffs(rng, L.dim(), p), y = random_coeffs(rng, L.dim(), p);
      const auto w = A.add(A.mul(A.exp(expand(A, L, x)), A.exp(expand(A, L, y))), {{"", 1}}, -1);
      CHECK(expand(A, L, L.bch(x, y)) == A.log1p(w));
    }
  }
}

TEST_CASE("Lazard groups") {
  auto g = lie::LazardGroup::make(3, 2);
  CHECK(g->order() == 27);
  for (const auto& x : oracle::elements(*g)) CHECK(g->power(x, 3).is_zero());
  CHECK(oracle::naive_ucs_orders(*g) == std::vector<std::uint64_t>{1, 3, 27});

  auto g53 = lie::LazardGroup::make(5, 3);
  CHECK(g53->order() == 3125);
  for (const auto& x : oracle::elements(*g53)) CHECK(g53->power(x, 5).is_zero());

  auto g52 = lie::LazardGroup::make(5, 2);
  for (const auto& x : oracle::elements(*g52)) {
    auto c = g52->to_coeffs(x);
    CHECK(g52->to_coeffs(g52->invert(x)) == g52->algebra().scale(c, 4));
    CHECK(g52->algebra().bch(c, g52->algebra().scale(c, 4)) == Coeffs(c.size(), 0));
  }

  // B2(5,4) is too large to enumerate in a unit test; sample.
  auto g54 = lie::LazardGroup::make(5, 4);
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10000; ++rep) {
    const auto x = g54->from_coeffs(random_coeffs(rng, 8, 5));
    CHECK(g54->power(x, 5).is_zero());
  }
  const auto d = *g54->named("d");
  CHECK(g54->min_weight(d) == 4);
  CHECK(g54->min_weight(g54->identity()) == 5);
}

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(lie::LazardGroup::make(2, 2), BadParameters);
  CHECK_THROWS_AS(lie::LazardGroup::make(3, 3), BadParameters);
  CHECK_THROWS_AS(lie::LazardGroup::make(7, 5), BadParameters);
  CHECK_NOTHROW(FreeNilpotentLie::make(2, 1));
}

}  // TEST_SUITE
