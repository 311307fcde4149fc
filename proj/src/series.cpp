#include "pgs/series.hpp"

#include "pgs/errors.hpp"
#include "pgs/group_types.hpp"

namespace pgs {
namespace {

// Non-owning handle for building quotients of a group the caller owns.
GroupPtr borrow(const FiniteGroup& g) { return GroupPtr(GroupPtr(), &g); }

std::vector<Element> generator_values(const FiniteGroup& g) {
  std::vector<Element> out;
  for (const auto& n : g.generators()) out.push_back(n.value);
  return out;
}

const std::vector<Element>& spanning_set(const EnumeratedSubgroup& h) {
  return h.generators().empty() ? h.elements() : h.generators();
}

}  // namespace

CentralSeriesChain::CentralSeriesChain(std::vector<EnumeratedSubgroup> terms, ChainKind kind)
    : terms_(std::move(terms)), kind_(kind) {
  if (terms_.empty()) throw BadParameters("a series needs at least one term");
}

std::vector<std::uint64_t> CentralSeriesChain::orders() const {
  std::vector<std::uint64_t> out;
  for (const auto& t : terms_) out.push_back(t.size());
  return out;
}

CentralSeriesChain upper_central_series(const FiniteGroup& g) {
  const auto& all = enumerate_group(g);
  std::vector<EnumeratedSubgroup> terms{trivial_subgroup(g)};
  while (terms.back().size() < all.size()) {
    EnumeratedSubgroup next = terms.size() == 1 ? center(g) : [&] {
      auto q = QuotientGroup::make(borrow(g), terms.back());
      const EnumeratedSubgroup zq = center(*q);
      std::vector<Element> pre;
      for (const auto& x : all.elements())
        if (zq.contains(q->project(x))) pre.push_back(x);
      return EnumeratedSubgroup(std::move(pre));
    }();
    if (next.size() == terms.back().size())
      throw InternalInconsistency(g.label() + ": upper central series stabilised below G");
    terms.push_back(std::move(next));
  }
  return CentralSeriesChain(std::move(terms), ChainKind::Upper);
}

std::vector<EnumeratedSubgroup> lower_central_terms(const FiniteGroup& g) {
  const auto gens = generator_values(g);
  std::vector<EnumeratedSubgroup> terms{whole_group(g)};
  while (terms.back().size() > 1) {
    std::vector<Element> comms;
    for (const auto& x : spanning_set(terms.back()))
      for (const auto& s : gens) comms.push_back(commutator(g, x, s));
    EnumeratedSubgroup next = normal_closure(g, comms);
    if (next.size() == terms.back().size())
      throw InternalInconsistency(g.label() + ": lower central series stabilised above 1");
    terms.push_back(std::move(next));
  }
  return terms;
}

CentralSeriesChain lower_central_series(const FiniteGroup& g) {
  auto terms = lower_central_terms(g);
  return CentralSeriesChain({std::make_move_iterator(terms.rbegin()),
                             std::make_move_iterator(terms.rend())},
                            ChainKind::LowerReversed);
}

unsigned nilpotence_class(const FiniteGroup& g) {
  // Same length as the upper series and cheaper: no quotients are built.
  return static_cast<unsigned>(lower_central_terms(g).size() - 1);
}

unsigned layer_index(const CentralSeriesChain& chain, const Element& g) {
  for (std::size_t i = 0; i < chain.terms().size(); ++i)
    if (chain[i].contains(g)) return static_cast<unsigned>(i);
  throw NotInGroup("element " + g.to_string() + " is not in the top of the series");
}

SpectrumReport spectrum(const FiniteGroup& g) { return spectrum(g, upper_central_series(g)); }

SpectrumReport spectrum(const FiniteGroup& g, const CentralSeriesChain& upper) {
  SpectrumReport r;
  r.p = g.prime();
  r.nilpotence_class = static_cast<unsigned>(upper.length());
  r.layer_orders = upper.orders();
  const Element id = g.identity();
  for (const auto& x : enumerate_group(g).elements()) {
    if (x == id || g.power(x, g.prime()) != id) continue;
    const unsigned i = layer_index(upper, x);
    if (r.spectrum.insert(i).second) r.witnesses.emplace(i, x);
  }
  return r;
}

bool is_central_series(const FiniteGroup& g, const CentralSeriesChain& chain) {
  const auto& all = enumerate_group(g);
  const auto& terms = chain.terms();
  if (terms.front().size() != 1 || !terms.front().contains(g.identity())) return false;
  if (terms.back().size() != all.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    for (const auto& x : t.elements())
      if (!all.contains(x)) return false;
    for (const auto& x : t.elements())
      for (const auto& s : spanning_set(t))
        if (!t.contains(g.multiply(x, s))) return false;
    if (i == 0) continue;
    if (!terms[i - 1].is_subset_of(t)) return false;
    if (!is_normal(g, terms[i - 1])) return false;
    for (const auto& x : spanning_set(t))
      for (const auto& s : g.generators())
        if (!terms[i - 1].contains(commutator(g, x, s.value))) return false;
  }
  return true;
}

bool satisfies_ucs_characterization(const FiniteGroup& g, const CentralSeriesChain& chain) {
  if (!is_central_series(g, chain))
    throw PreconditionFailed(g.label() + ": the chain is not a central series");
  const auto& terms = chain.terms();
  const auto& all = enumerate_group(g).elements();
  for (std::size_t m = 2; m < terms.size(); ++m) {
    const auto& below = terms[m - 2];
    for (const auto& x : terms[m].elements()) {
      if (terms[m - 1].contains(x)) continue;
      // y -> [x, y] G_(m-2) is a homomorphism, so generators usually decide.
      bool found = false;
      for (const auto& s : g.generators())
        if (!below.contains(commutator(g, x, s.value))) {
          found = true;
          break;
        }
      for (std::size_t j = 0; !found && j < all.size(); ++j)
        found = !below.contains(commutator(g, x, all[j]));
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace pgs
