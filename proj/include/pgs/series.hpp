#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pgs/group.hpp"

namespace pgs {

enum class ChainKind { Upper, LowerReversed, User };

/// Ascending chain {1} = G_0 <= G_1 <= ... <= G_n = G.
class CentralSeriesChain {
 public:
  CentralSeriesChain(std::vector<EnumeratedSubgroup> terms, ChainKind kind);

  ChainKind kind() const { return kind_; }
  const std::vector<EnumeratedSubgroup>& terms() const { return terms_; }
  const EnumeratedSubgroup& operator[](std::size_t i) const { return terms_.at(i); }
  // n, the number of steps.
  std::size_t length() const { return terms_.size() - 1; }
  std::vector<std::uint64_t> orders() const;

  friend bool operator==(const CentralSeriesChain& a, const CentralSeriesChain& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<EnumeratedSubgroup> terms_;
  ChainKind kind_;
};

/// Z_0 = 1, Z_(i+1) = preimage of Z(G/Z_i).
CentralSeriesChain upper_central_series(const FiniteGroup& g);
/// gamma_c+1 = 1 < gamma_c < ... < gamma_1 = G (terms listed ascending).
CentralSeriesChain lower_central_series(const FiniteGroup& g);
// gamma_1 .. gamma_(c+1) in the usual descending order.
std::vector<EnumeratedSubgroup> lower_central_terms(const FiniteGroup& g);
unsigned nilpotence_class(const FiniteGroup& g);

/// Least i with g in chain[i]. Throws NotInGroup when g is outside the top.
unsigned layer_index(const CentralSeriesChain& chain, const Element& g);

struct SpectrumReport {
  std::uint32_t p = 0;
  unsigned nilpotence_class = 0;
  std::set<unsigned> spectrum;
  // Least (canonical order) element of order p in each occupied layer.
  std::map<unsigned, Element> witnesses;
  std::vector<std::uint64_t> layer_orders;  // |Z_0|, |Z_1|, ..., |Z_c|
};

SpectrumReport spectrum(const FiniteGroup& g);
SpectrumReport spectrum(const FiniteGroup& g, const CentralSeriesChain& upper);

/// Every term a subgroup, ascending from 1 to G, and [G_i, G] <= G_(i-1).
bool is_central_series(const FiniteGroup& g, const CentralSeriesChain& chain);

/// For every m >= 2 and x in G_m \ G_(m-1) there is y with
/// [x, y] in G_(m-1) \ G_(m-2). Throws PreconditionFailed when the chain is
/// not a central series.
bool satisfies_ucs_characterization(const FiniteGroup& g, const CentralSeriesChain& chain);

}  // namespace pgs
