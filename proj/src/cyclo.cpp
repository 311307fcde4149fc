#include "pgs/cyclo.hpp"

#include <string>

#include "pgs/errors.hpp"
#include "pgs/limits.hpp"

namespace pgs::cyclo {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiply two coefficient vectors in Z[x]/(Phi_p) without reduction mod p^N.
Vec poly_mul_exact(const Vec& a, const Vec& b, std::uint32_t p) {
  Vec full(p, 0);  // modulo x^p - 1 first
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) full[(i + j) % p] += a[i] * b[j];
  // x^(p-1) = -(1 + x + ... + x^(p-2))
  Vec out(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) out[i] = full[i] - full[p - 1];
  return out;
}

}  // namespace

CycloRing::CycloRing(std::uint32_t p, unsigned c)
    : p_(p), c_(c), N_((c + p - 2) / (p - 1) + 1), q_(zpn::ipow(p, N_)),
      omega_matrix_(p, N_, p - 1, p - 1) {
  const std::size_t n = p - 1;
  for (std::size_t j = 0; j + 1 < n; ++j) omega_matrix_.set(j + 1, j, 1);
  for (std::size_t i = 0; i < n; ++i) omega_matrix_.set(i, n - 1, -1);

  RingElem power = one();
  const RingElem step = omega_minus_one();
  for (unsigned k = 0; k <= c; ++k) {
    std::vector<Vec> gens;
    RingElem g = power;
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(g.coeffs);
      g = mul(g, omega());
    }
    ideals_.push_back(zpn::echelonize(p, N_, n, gens));
    power = mul(power, step);
  }
}

CycloRing CycloRing::make(std::uint32_t p, unsigned c) {
  if (!is_prime(p)) throw BadParameters(std::to_string(p) + " is not prime");
  if (c < 1) throw BadParameters("class must be at least 1");
  long double size = 1;
  for (unsigned i = 0; i < c; ++i) size *= p;
  if (size > static_cast<long double>(current_limits().max_order))
    throw ParameterTooLarge("p^c exceeds the enumeration bound");
  CycloRing ring(p, c);
  for (unsigned k = 0; k < c; ++k)
    if (ring.ideals_[k].log_order() != ring.ideals_[k + 1].log_order() + 1)
      throw InternalInconsistency("ideal filtration step is not of index p");
  return ring;
}

RingElem CycloRing::from_coeffs(Vec coeffs) const {
  if (coeffs.size() != rank()) throw BadParameters("ring element length");
  for (auto& x : coeffs) x = zpn::reduce(x, q_);
  return RingElem{std::move(coeffs)};
}

RingElem CycloRing::one() const {
  Vec v(rank(), 0);
  v[0] = 1;
  return RingElem{v};
}

RingElem CycloRing::omega() const {
  Vec v(rank(), 0);
  if (p_ == 2) {
    v[0] = q_ - 1;
  } else {
    v[1] = 1;
  }
  return RingElem{v};
}

RingElem CycloRing::omega_minus_one() const { return sub(omega(), one()); }

RingElem CycloRing::add(const RingElem& a, const RingElem& b) const {
  Vec v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = (a.coeffs[i] + b.coeffs[i]) % q_;
  return RingElem{v};
}

RingElem CycloRing::sub(const RingElem& a, const RingElem& b) const {
  Vec v(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    v[i] = zpn::reduce(a.coeffs[i] - b.coeffs[i], q_);
  return RingElem{v};
}

RingElem CycloRing::scale(const RingElem& a, Int k) const {
  Vec v(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    v[i] = zpn::reduce(a.coeffs[i] * zpn::reduce(k, q_), q_);
  return RingElem{v};
}

RingElem CycloRing::mul(const RingElem& a, const RingElem& b) const {
  Vec v = poly_mul_exact(a.coeffs, b.coeffs, p_);
  for (auto& x : v) x = zpn::reduce(x, q_);
  return RingElem{v};
}

RingElem CycloRing::pow(const RingElem& a, unsigned e) const {
  RingElem r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

RingElem CycloRing::eq_powers_witness() const {
  // (w - 1)^(p-1) over Z exactly; every coefficient is divisible by p.
  Vec base(rank(), 0), acc(rank(), 0);
  acc[0] = 1;
  if (p_ == 2) {
    base[0] = -2;
  } else {
    base[0] = -1;
    base[1] = 1;
  }
  for (std::uint32_t i = 0; i + 1 < p_; ++i) acc = poly_mul_exact(acc, base, p_);
  Vec zeta(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (acc[i] % static_cast<Int>(p_) != 0)
      throw InternalInconsistency("(w-1)^(p-1) is not divisible by p");
    zeta[i] = zpn::reduce(acc[i] / static_cast<Int>(p_), q_);
  }
  RingElem z{zeta};
  if (!is_unit(z)) throw InternalInconsistency("zeta is not a unit");
  return z;
}

bool CycloRing::is_unit(const RingElem& r) const {
  Int sum = 0;
  for (Int x : r.coeffs) sum = (sum + x) % static_cast<Int>(p_);
  return sum != 0;
}

BottomGroup CycloRing::mc_bottom() const {
  zpn::AbelianInvariants inv = zpn::quotient_structure(ideals_.at(c_), true);
  const std::size_t r = inv.rank();
  zpn::ModMatrix action(p_, N_, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec e(r, 0);
    e[j] = 1;
    const Vec image = inv.to_canonical(omega_matrix_.apply(inv.from_canonical(e)));
    for (std::size_t i = 0; i < r; ++i) action.set(i, j, image[i]);
  }
  return BottomGroup{std::move(inv), std::move(action)};
}

}  // namespace pgs::cyclo
