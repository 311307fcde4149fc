#include "pgs/group.hpp"

#include <algorithm>
#include <bit>

#include "pgs/errors.hpp"
#include "pgs/group_types.hpp"
#include "pgs/limits.hpp"

namespace pgs {

// ---------------------------------------------------------------------------
// EnumeratedSubgroup

EnumeratedSubgroup::EnumeratedSubgroup(std::vector<Element> sorted,
                                       std::vector<Element> generators)
    : elements_(std::move(sorted)), generators_(std::move(generators)) {
  index_.reserve(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);
}

std::optional<std::uint32_t> EnumeratedSubgroup::index_of(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool EnumeratedSubgroup::is_subset_of(const EnumeratedSubgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Element& g) { return other.contains(g); });
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::uint32_t p, std::size_t coords, std::string label)
    : prime_(p), coords_(coords), label_(std::move(label)) {
  if (coords > Element::kCapacity)
    throw ResourceLimit("group needs more than " +
                        std::to_string(Element::kCapacity) + " coordinates");
}

void FiniteGroup::add_generator(std::string name, Element value) {
  generators_.push_back({name, value});
  named_.push_back({std::move(name), std::move(value)});
}

void FiniteGroup::add_named(std::string name, Element value) {
  named_.push_back({std::move(name), std::move(value)});
}

std::optional<Element> FiniteGroup::named(std::string_view name) const {
  for (const auto& n : named_)
    if (n.name == name) return n.value;
  return std::nullopt;
}

Element FiniteGroup::power(const Element& g, std::int64_t n) const {
  Element base = n < 0 ? invert(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Element result = identity();
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Element FiniteGroup::conjugate(const Element& g, const Element& by) const {
  return multiply(invert(by), multiply(g, by));
}

void FiniteGroup::seed_enumeration(
    std::shared_ptr<const EnumeratedSubgroup> e) const {
  std::lock_guard lock(cache_mu_);
  enumeration_ = std::move(e);
}

std::shared_ptr<const EnumeratedSubgroup> FiniteGroup::enumeration() const {
  std::lock_guard lock(cache_mu_);
  if (enumeration_) {
    if (enumeration_->size() > current_limits().max_order)
      throw ResourceLimit(label_ + ": order " +
                          std::to_string(enumeration_->size()) +
                          " exceeds the enumeration bound");
    return enumeration_;
  }
  const std::uint64_t bound = current_limits().max_order;
  std::vector<Element> elems{identity()};
  ElementSet seen{identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators_) {
      Element e = multiply(elems[i], gen.value);
      if (seen.insert(e).second) {
        elems.push_back(e);
        if (elems.size() > bound)
          throw ResourceLimit(label_ + ": order exceeds the enumeration bound " +
                              std::to_string(bound));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::vector<Element> gens;
  for (const auto& g : generators_) gens.push_back(g.value);
  enumeration_ = std::make_shared<const EnumeratedSubgroup>(std::move(elems),
                                                            std::move(gens));
  return enumeration_;
}

// ---------------------------------------------------------------------------
// SubgroupBuilder

SubgroupBuilder::SubgroupBuilder(const FiniteGroup& group)
    : group_(group), bound_(current_limits().max_order) {
  elements_.push_back(group.identity());
  members_.insert(group.identity());
}

bool SubgroupBuilder::add(const Element& g) {
  if (members_.contains(g)) return false;
  generators_.push_back(g);
  const std::size_t base = elements_.size();
  // Right cosets H r of the old subgroup H; right multiplication by any
  // generator permutes them.
  std::vector<Element> reps{group_.identity()};
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      Element r = group_.multiply(reps[ri], generators_[gi]);
      if (members_.contains(r)) continue;
      reps.push_back(r);
      for (std::size_t j = 0; j < base; ++j) {
        Element x = group_.multiply(elements_[j], r);
        members_.insert(x);
        elements_.push_back(std::move(x));
      }
      if (elements_.size() > bound_)
        throw ResourceLimit(group_.label() +
                            ": subgroup closure exceeds the enumeration bound " +
                            std::to_string(bound_));
    }
  }
  return true;
}

EnumeratedSubgroup SubgroupBuilder::finish() const {
  std::vector<Element> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  return EnumeratedSubgroup(std::move(sorted), generators_);
}

// ---------------------------------------------------------------------------
// Operations

namespace {

const std::vector<Element>& spanning_set(const EnumeratedSubgroup& h) {
  return h.generators().empty() ? h.elements() : h.generators();
}

std::vector<Element> generator_values(const FiniteGroup& g) {
  std::vector<Element> out;
  for (const auto& n : g.generators()) out.push_back(n.value);
  return out;
}

}  // namespace

std::uint64_t element_order(const FiniteGroup& g, const Element& x) {
  const Element id = g.identity();
  std::uint64_t order = 1;
  Element y = x;
  while (y != id) {
    y = g.power(y, g.prime());
    order *= g.prime();
    if (order > (std::uint64_t{1} << 48))
      throw InternalInconsistency(g.label() + ": element of non p-power order");
  }
  return order;
}

Element commutator(const FiniteGroup& g, const Element& x, const Element& y) {
  return g.multiply(g.multiply(g.invert(x), g.invert(y)), g.multiply(x, y));
}

Element commutator(const FiniteGroup& g, const Element& x,
                   std::span<const Element> ys) {
  Element c = x;
  for (const auto& y : ys) c = commutator(g, c, y);
  return c;
}

EnumeratedSubgroup subgroup_closure(const FiniteGroup& g,
                                    std::span<const Element> gens) {
  SubgroupBuilder b(g);
  for (const auto& x : gens) b.add(x);
  return b.finish();
}

const EnumeratedSubgroup& enumerate_group(const FiniteGroup& g) {
  return *g.enumeration();
}

EnumeratedSubgroup trivial_subgroup(const FiniteGroup& g) {
  return EnumeratedSubgroup({g.identity()});
}

EnumeratedSubgroup whole_group(const FiniteGroup& g) {
  const auto& e = enumerate_group(g);
  return EnumeratedSubgroup(e.elements(), generator_values(g));
}

EnumeratedSubgroup centralizer(const FiniteGroup& g,
                               std::span<const Element> with) {
  std::vector<Element> out;
  for (const auto& x : enumerate_group(g).elements()) {
    bool commutes = true;
    for (const auto& s : with)
      if (g.multiply(x, s) != g.multiply(s, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return EnumeratedSubgroup(std::move(out));
}

EnumeratedSubgroup center(const FiniteGroup& g) {
  const auto gens = generator_values(g);
  return centralizer(g, gens);
}

bool is_central(const FiniteGroup& g, const Element& x) {
  for (const auto& s : g.generators())
    if (g.multiply(x, s.value) != g.multiply(s.value, x)) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const EnumeratedSubgroup& n) {
  for (const auto& x : spanning_set(n))
    for (const auto& s : g.generators())
      if (!n.contains(g.conjugate(x, s.value))) return false;
  return true;
}

EnumeratedSubgroup normal_closure(const FiniteGroup& g,
                                  std::span<const Element> xs) {
  SubgroupBuilder b(g);
  for (const auto& x : xs) b.add(x);
  // Conjugates of every accepted generator by every group generator; the
  // generator list grows while it is scanned.
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const Element x = b.generators()[i];
    for (const auto& s : g.generators()) b.add(g.conjugate(x, s.value));
  }
  return b.finish();
}

EnumeratedSubgroup normal_closure(const FiniteGroup& g, const Element& x) {
  return normal_closure(g, std::span<const Element>(&x, 1));
}

bool is_pth_power(const FiniteGroup& g, const Element& z) {
  for (const auto& x : enumerate_group(g).elements())
    if (g.power(x, g.prime()) == z) return true;
  return false;
}

EnumeratedSubgroup omega1_subgroup(const FiniteGroup& g) {
  SubgroupBuilder b(g);
  const Element id = g.identity();
  for (const auto& x : enumerate_group(g).elements())
    if (!b.contains(x) && g.power(x, g.prime()) == id) b.add(x);
  return b.finish();
}

bool generated_by_order_p(const FiniteGroup& g) {
  return omega1_subgroup(g).size() == enumerate_group(g).size();
}

GroupPtr direct_product(std::vector<GroupPtr> factors) {
  return ProductGroup::make(std::move(factors));
}

GroupPtr quotient_group(GroupPtr g, const EnumeratedSubgroup& n) {
  return QuotientGroup::make(std::move(g), n);
}

// ---------------------------------------------------------------------------
// Direct factor search

namespace {

struct NormalSub {
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> members;
};

class Lattice {
 public:
  Lattice(const FiniteGroup& g, const EnumeratedSubgroup& all)
      : g_(g), all_(all), n_(all.size()), words_((n_ + 63) / 64) {}

  std::uint32_t index(const Element& x) const {
    auto i = all_.index_of(x);
    if (!i) throw InternalInconsistency("product left the group");
    return *i;
  }

  NormalSub from_subgroup(const EnumeratedSubgroup& h) const {
    NormalSub s{std::vector<std::uint64_t>(words_, 0), {}};
    for (const auto& x : h.elements()) {
      const auto i = index(x);
      s.bits[i / 64] |= std::uint64_t{1} << (i % 64);
      s.members.push_back(i);
    }
    return s;
  }

  bool has(const NormalSub& s, std::uint32_t i) const {
    return (s.bits[i / 64] >> (i % 64)) & 1;
  }

  // Product XY of two normal subgroups, built from right cosets of X.
  NormalSub join(const NormalSub& x, const NormalSub& y) const {
    bool inside = true;
    for (std::size_t w = 0; w < words_; ++w)
      if (y.bits[w] & ~x.bits[w]) {
        inside = false;
        break;
      }
    if (inside) return x;
    NormalSub out = x;
    for (std::uint32_t b : y.members) {
      if (has(out, b)) continue;
      const Element& eb = all_.elements()[b];
      for (std::uint32_t a : x.members) {
        const auto i = index(g_.multiply(all_.elements()[a], eb));
        out.bits[i / 64] |= std::uint64_t{1} << (i % 64);
        out.members.push_back(i);
      }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
  }

  bool trivially_intersect(const NormalSub& a, const NormalSub& b) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t both = a.bits[w] & b.bits[w];
      if (w == 0) both &= ~std::uint64_t{1};  // the identity has index 0
      if (both) return false;
    }
    return true;
  }

  EnumeratedSubgroup to_subgroup(const NormalSub& s) const {
    std::vector<Element> elems;
    for (auto i : s.members) elems.push_back(all_.elements()[i]);
    return EnumeratedSubgroup(std::move(elems));
  }

  std::size_t n() const { return n_; }

 private:
  const FiniteGroup& g_;
  const EnumeratedSubgroup& all_;
  std::size_t n_;
  std::size_t words_;
};

}  // namespace

std::optional<DirectDecomposition> direct_factor_search(const FiniteGroup& g) {
  const auto limits = current_limits();
  const auto all_ptr = g.enumeration();
  const EnumeratedSubgroup& all = *all_ptr;
  const std::size_t n = all.size();
  if (n > limits.decompose_bound)
    throw ResourceLimit(g.label() + ": order " + std::to_string(n) +
                        " exceeds the decomposition bound " +
                        std::to_string(limits.decompose_bound));
  if (n == 1) return std::nullopt;

  Lattice lat(g, all);
  std::vector<NormalSub> subs;
  absl::flat_hash_map<std::vector<std::uint64_t>, std::uint32_t> seen;
  absl::flat_hash_map<std::size_t, std::vector<std::uint32_t>> by_order;
  // Bounds the lattice itself; abelian groups with many subgroups find a
  // complement long before this.
  const std::size_t max_subs = 200'000;

  std::optional<DirectDecomposition> found;
  auto insert = [&](NormalSub s) -> std::optional<std::uint32_t> {
    auto [it, fresh] = seen.try_emplace(s.bits, static_cast<std::uint32_t>(subs.size()));
    if (!fresh) return it->second;
    const std::size_t order = s.members.size();
    subs.push_back(std::move(s));
    const std::uint32_t id = it->second;
    by_order[order].push_back(id);
    if (subs.size() > max_subs)
      throw ResourceLimit(g.label() + ": normal subgroup lattice too large");
    if (order > 1 && order < n && n % order == 0) {
      auto partners = by_order.find(n / order);
      if (partners != by_order.end())
        for (std::uint32_t other : partners->second) {
          if (other == id) continue;
          if (lat.trivially_intersect(subs[id], subs[other])) {
            const bool id_first = subs[id].members < subs[other].members;
            const auto& a = subs[id_first ? id : other];
            const auto& b = subs[id_first ? other : id];
            found = DirectDecomposition{lat.to_subgroup(a), lat.to_subgroup(b)};
            break;
          }
        }
    }
    return id;
  };

  insert(lat.from_subgroup(trivial_subgroup(g)));

  // Normal closures of single elements, one per conjugacy class.
  std::vector<std::uint32_t> closures;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n && !found; ++i) {
    if (done[i]) continue;
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(i)};
    done[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators()) {
        const auto j = lat.index(g.conjugate(all.elements()[orbit[k]], s.value));
        if (!done[j]) {
          done[j] = true;
          orbit.push_back(j);
        }
      }
    if (i == 0) continue;
    const auto id = insert(lat.from_subgroup(normal_closure(g, all.elements()[i])));
    if (std::find(closures.begin(), closures.end(), *id) == closures.end())
      closures.push_back(*id);
  }

  for (std::size_t a = 0; a < subs.size() && !found; ++a)
    for (std::size_t ci = 0; ci < closures.size() && !found; ++ci) {
      NormalSub j = lat.join(subs[a], subs[closures[ci]]);
      insert(std::move(j));
    }
  return found;
}

}  // namespace pgs
