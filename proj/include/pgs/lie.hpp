#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pgs/group.hpp"

// Free nilpotent Lie algebra of rank 2 over F_p and the exponent-p group it
// defines through the truncated Baker-Campbell-Hausdorff series.

namespace pgs::lie {

using Coeffs = std::vector<std::uint32_t>;

class FreeNilpotentLie {
 public:
  static constexpr unsigned kMaxClass = 4;

  /// Hall basis of weights 1..k (dimensions 2, 1, 2, 3) with structure
  /// constants computed in the free associative algebra. Requires k <= 4.
  static FreeNilpotentLie make(std::uint32_t p, unsigned k);

  std::uint32_t p() const { return p_; }
  unsigned nilpotence_class() const { return k_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  // [e_i, e_j] in basis coordinates.
  const Coeffs& structure_constant(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  Coeffs add(const Coeffs& x, const Coeffs& y) const;
  Coeffs scale(const Coeffs& x, std::uint32_t k) const;
  Coeffs bracket(const Coeffs& x, const Coeffs& y) const;
  /// z = x + y + 1/2[x,y] + 1/12([x,[x,y]] - [y,[x,y]]) - 1/24[y,[x,[x,y]]],
  /// keeping only the terms of weight <= k.
  Coeffs bch(const Coeffs& x, const Coeffs& y) const;

 private:
  FreeNilpotentLie(std::uint32_t p, unsigned k) : p_(p), k_(k) {}

  std::uint32_t p_;
  unsigned k_;
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  std::vector<Coeffs> table_;
  struct Term {
    std::uint16_t i, j, l;
    std::uint32_t c;
  };
  std::vector<Term> sparse_;
  std::uint32_t half_ = 0, twelfth_ = 0, twentyfourth_ = 0;
};

/// The Lazard group of a free nilpotent Lie algebra: carrier = Lie algebra,
/// product = BCH, inverse = negation. Generators "s", "t"; the named element
/// "d" is the left-normed group commutator [t, s, ..., s] of weight k.
class LazardGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const LazardGroup> make(std::uint32_t p, unsigned k);

  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;

  const FreeNilpotentLie& algebra() const { return lie_; }
  Element from_coeffs(const Coeffs& c) const;
  Coeffs to_coeffs(const Element& e) const;
  // Least weight carrying a nonzero coordinate (k + 1 for the identity).
  unsigned min_weight(const Element& e) const;

 private:
  LazardGroup(FreeNilpotentLie lie, std::string label);
  FreeNilpotentLie lie_;
};

}  // namespace pgs::lie
