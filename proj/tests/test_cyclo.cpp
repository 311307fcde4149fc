#include "doctest.h"
#include "oracles.hpp"
#include "pgs/cyclo.hpp"
#include "pgs/errors.hpp"
#include "pgs/limits.hpp"

using namespace pgs;
using cyclo::CycloRing;
using oracle::Vec;

namespace {

// Schoolbook product in Z[x]/(Phi_p), coefficients mod q.
Vec poly_mul(const Vec& a, const Vec& b, std::int64_t p, std::int64_t q) {
  const std::size_t n = static_cast<std::size_t>(p - 1);
  Vec full(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) full[i + j] = (full[i + j] + a[i] * b[j]) % q;
  // x^k for k >= p-1: x^(p-1) = -(1 + x + ... + x^(p-2)), and x^p = 1.
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    const std::int64_t c = full[k];
    full[k] = 0;
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i) full[i] = ((full[i] - c) % q + q) % q;
    } else {
      full[k - p] = (full[k - p] + c) % q;
    }
  }
  full.resize(n);
  for (auto& x : full) x = (x % q + q) % q;
  return full;
}

Vec w_minus_1(std::int64_t p, std::int64_t q) {
  Vec v(p - 1, 0);
  v[0] = q - 1;
  if (p > 2) v[1] = 1;
  else v[0] = (q - 2) % q;  // w = -1
  return v;
}

std::uint64_t ideal_quotient_order(std::int64_t p, unsigned N, unsigned c) {
  const std::int64_t q = oracle::ipow(p, N);
  Vec t(p - 1, 0);
  t[0] = 1;
  for (unsigned i = 0; i < c; ++i) t = poly_mul(t, w_minus_1(p, q), p, q);
  std::vector<Vec> gens;
  Vec w(p - 1, 0);
  if (p > 2) w[1] = 1;
  else w[0] = q - 1;
  for (std::int64_t j = 0; j < p - 1; ++j) {
    gens.push_back(t);
    t = poly_mul(t, w, p, q);
  }
  return static_cast<std::uint64_t>(oracle::ipow(q, p - 1)) / oracle::span(gens, q, p - 1).size();
}

// Order of the action on the quotient itself, entries reduced per invariant.
std::uint64_t action_order(const cyclo::BottomGroup& b) {
  const auto& mod = b.invariants.moduli();
  const std::size_t r = mod.size();
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    const auto A = b.action.pow(m);
    bool id = true;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (A(i, j) % mod[i] != (i == j ? 1 : 0)) id = false;
    if (id) return m;
  }
  return 0;
}

}  // namespace

TEST_SUITE("cyclo") {

TEST_CASE("ring_make filtrations") {
  auto r23 = CycloRing::make(2, 3);
  CHECK(r23.rank() == 1);
  CHECK(zpn::quotient_structure(r23.ideal(3)).moduli() == zpn::Vec{8});
  for (unsigned k = 0; k <= 3; ++k) CHECK(r23.ideal(k).rows() == std::vector<zpn::Vec>{{1 << k}});

  auto r32 = CycloRing::make(3, 2);
  CHECK(r32.N() == 2);
  CHECK(zpn::quotient_structure(r32.ideal(2)).moduli() == zpn::Vec{3, 3});
  CHECK(zpn::quotient_structure(CycloRing::make(3, 3).ideal(3)).moduli() == zpn::Vec{9, 3});

  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned c = 1; c <= (p == 5 ? 4u : 5u); ++c) {
      auto r = CycloRing::make(p, c);
      CHECK(r.N() == (c + p - 2) / (p - 1) + 1);
      CHECK(r.omega_matrix().pow(p).is_identity());
      for (unsigned k = 0; k < c; ++k) {
        CHECK(r.ideal(k).log_order() == r.ideal(k + 1).log_order() + 1);
        // |R / I^k| by brute force
        CHECK(static_cast<std::uint64_t>(oracle::ipow(p, zpn::quotient_structure(r.ideal(k)).log_order())) ==
              ideal_quotient_order(p, r.N(), k));
      }
    }
}

TEST_CASE("ring_make respects the enumeration bound") {
  ScopedLimits lim({100, 20000});
  CHECK_THROWS_AS(CycloRing::make(5, 3), ParameterTooLarge);
  CHECK_NOTHROW(CycloRing::make(3, 4));
}

TEST_CASE("multiplication") {
  auto r = CycloRing::make(3, 3);
  const std::int64_t q = r.modulus();
  CHECK(q == 27);
  const auto x = r.from_coeffs({4, 7});
  CHECK(r.mul(r.one(), x) == x);
  // w * w = w^2 = -1 - w
  CHECK(r.mul(r.omega(), r.omega()).coeffs == zpn::Vec{q - 1, q - 1});
  // (w - 1)^2 = -3w
  CHECK(r.pow(r.omega_minus_one(), 2).coeffs == zpn::Vec{0, q - 3});

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto R = CycloRing::make(p, 3);
    const std::int64_t q = R.modulus();
    zpn::Vec a(p - 1), b(p - 1);
    for (std::size_t i = 0; i < p - 1; ++i) {
      a[i] = static_cast<std::int64_t>((3 * i + 1) % q);
      b[i] = static_cast<std::int64_t>((5 * i * i + 2) % q);
    }
    CHECK(R.mul(R.from_coeffs(a), R.from_coeffs(b)).coeffs == poly_mul(a, b, p, q));
    // w^(p-2) * w = w^(p-1) = -(1 + ... + w^(p-2))
    if (p > 2) CHECK(R.mul(R.pow(R.omega(), p - 2), R.omega()).coeffs == zpn::Vec(p - 1, q - 1));
  }
}

TEST_CASE("eq_powers_witness") {
  auto r2 = CycloRing::make(2, 3);
  CHECK(r2.eq_powers_witness().coeffs == zpn::Vec{r2.modulus() - 1});
  auto r3 = CycloRing::make(3, 3);
  CHECK(r3.eq_powers_witness().coeffs == zpn::Vec{0, r3.modulus() - 1});

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto R = CycloRing::make(p, p);
    const std::int64_t q = R.modulus();
    const auto z = R.eq_powers_witness();
    CHECK(R.is_unit(z));
    std::int64_t sum = 0;
    for (auto c : z.coeffs) sum += c;
    CHECK(sum % p != 0);
    Vec lhs(p - 1, 0);
    lhs[0] = 1;
    for (unsigned i = 0; i + 1 < p; ++i) lhs = poly_mul(lhs, w_minus_1(p, q), p, q);
    Vec rhs = z.coeffs;
    for (auto& c : rhs) c = (c * p) % q;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("s-sequence law in E / I^c") {
  for (auto [p, c] : {std::pair{3u, 5u}, {5u, 6u}, {2u, 4u}, {7u, 7u}}) {
    auto R = CycloRing::make(p, c);
    const auto Q = zpn::quotient_structure(R.ideal(c));
    const auto zeta = R.eq_powers_witness();
    std::vector<cyclo::RingElem> s{R.one()};
    for (unsigned k = 1; k < c; ++k) s.push_back(R.mul(R.omega_minus_one(), s.back()));
    for (unsigned k = 0; k + p - 1 < c; ++k) {
      const auto lhs = s[k + p - 1];
      const auto rhs = R.scale(R.mul(zeta, s[k]), p);
      CHECK(Q.to_canonical(R.sub(lhs, rhs).coeffs) == Q.to_canonical(zpn::Vec(p - 1, 0)));
    }
  }
}

TEST_CASE("mc_bottom") {
  auto b23 = CycloRing::make(2, 3).mc_bottom();
  CHECK(b23.invariants.moduli() == zpn::Vec{8});
  CHECK(b23.action(0, 0) == 7);

  auto b32 = CycloRing::make(3, 2).mc_bottom();
  CHECK(b32.invariants.moduli() == zpn::Vec{3, 3});
  CHECK(action_order(b32) == 3);

  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned c = 2; c <= 4; ++c) {
      auto b = CycloRing::make(p, c).mc_bottom();
      CHECK(b.invariants.log_order() == c);
      CHECK(action_order(b) == p);
    }
}

TEST_CASE("ideal products stay in the filtration") {
  auto R = CycloRing::make(3, 6);
  for (unsigned j = 0; j <= 6; ++j)
    for (unsigned k = 0; j + k <= 6; ++k)
      for (const auto& a : R.ideal(j).rows())
        for (const auto& b : R.ideal(k).rows())
          CHECK(zpn::submodule_member(R.mul(R.from_coeffs(a), R.from_coeffs(b)).coeffs, R.ideal(j + k)));
}

}  // TEST_SUITE
