#pragma once

#include <cstdint>
#include <vector>

#include "pgs/zpn.hpp"

// The ring Z_p[w] (w a primitive p-th root of unity) truncated to
// Z[x]/(Phi_p(x)) with coefficients mod p^N, and its filtration by the powers
// of the maximal ideal I = (w - 1).

namespace pgs::cyclo {

using zpn::Int;
using zpn::Vec;

/// Coefficients on the basis 1, w, ..., w^(p-2), reduced mod p^N.
struct RingElem {
  Vec coeffs;
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// E/I^c in invariant coordinates, plus multiplication by w acting on them.
struct BottomGroup {
  zpn::AbelianInvariants invariants;
  zpn::ModMatrix action;
};

class CycloRing {
 public:
  /// Ring for truncation class c, with N = ceil(c/(p-1)) + 1. Throws
  /// ParameterTooLarge when p^c exceeds the current enumeration bound.
  static CycloRing make(std::uint32_t p, unsigned c);

  std::uint32_t p() const { return p_; }
  unsigned c() const { return c_; }
  unsigned N() const { return N_; }
  std::size_t rank() const { return p_ - 1; }
  Int modulus() const { return q_; }

  const zpn::ModMatrix& omega_matrix() const { return omega_matrix_; }
  // I^k for 0 <= k <= c.
  const zpn::EchelonBasis& ideal(unsigned k) const { return ideals_.at(k); }

  RingElem from_coeffs(Vec coeffs) const;
  RingElem one() const;
  RingElem omega() const;
  RingElem omega_minus_one() const;
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem scale(const RingElem& a, Int k) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem pow(const RingElem& a, unsigned e) const;

  /// The unit zeta with (w - 1)^(p-1) = p * zeta.
  RingElem eq_powers_witness() const;
  /// True when r is invertible, i.e. r(1) is nonzero mod p.
  bool is_unit(const RingElem& r) const;

  BottomGroup mc_bottom() const;

 private:
  CycloRing(std::uint32_t p, unsigned c);

  std::uint32_t p_;
  unsigned c_;
  unsigned N_;
  Int q_;
  zpn::ModMatrix omega_matrix_;
  std::vector<zpn::EchelonBasis> ideals_;
};

}  // namespace pgs::cyclo
