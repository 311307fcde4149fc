#include "pgs/group_types.hpp"

#include <algorithm>

#include "pgs/errors.hpp"

namespace pgs {

// ---------------------------------------------------------------------------
// SemidirectGroup

SemidirectGroup::SemidirectGroup(std::string label, Spec spec)
    : FiniteGroup(spec.p, 1 + spec.bottom_moduli.size(), std::move(label)),
      spec_(std::move(spec)),
      rank_(spec_.bottom_moduli.size()) {
  const std::uint64_t m = spec_.top_order;
  if (m == 0 || m > 65536) throw BadParameters(this->label() + ": top order out of range");
  for (auto q : spec_.bottom_moduli)
    if (q < 2 || q > 65536) throw BadParameters(this->label() + ": bottom modulus out of range");
  if (spec_.action.size() != rank_)
    throw BadParameters(this->label() + ": action matrix has wrong size");
  for (const auto& row : spec_.action)
    if (row.size() != rank_) throw BadParameters(this->label() + ": action matrix has wrong size");

  const std::size_t r2 = rank_ * rank_;
  powers_.assign(m * r2, 0);
  for (std::size_t i = 0; i < rank_; ++i) powers_[i * rank_ + i] = 1;
  std::vector<zpn::Int> a(r2);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      a[i * rank_ + j] = zpn::reduce(spec_.action[i][j], spec_.bottom_moduli[i]);

  auto mul = [&](const zpn::Int* x, const zpn::Int* y, zpn::Int* out) {
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) {
        zpn::Int acc = 0;
        for (std::size_t k = 0; k < rank_; ++k)
          acc = (acc + x[i * rank_ + k] * y[k * rank_ + j]) % spec_.bottom_moduli[i];
        out[i * rank_ + j] = acc;
      }
  };
  if (rank_ > 0)
    for (std::uint64_t u = 1; u < m; ++u)
      mul(&powers_[(u - 1) * r2], a.data(), &powers_[u * r2]);

  // A^m must be the identity and A invertible mod p.
  if (rank_ > 0) {
    std::vector<zpn::Int> top(r2);
    mul(&powers_[(m - 1) * r2], a.data(), top.data());
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        if (top[i * rank_ + j] != (i == j ? 1 : 0))
          throw BadParameters(this->label() + ": action order does not divide the top order");
  }
}

std::shared_ptr<const SemidirectGroup> SemidirectGroup::make(
    std::string label, Spec spec, std::vector<NamedElement> generators,
    std::vector<NamedElement> extras) {
  std::shared_ptr<SemidirectGroup> g(
      new SemidirectGroup(std::move(label), std::move(spec)));
  for (auto& n : generators) g->add_generator(std::move(n.name), n.value);
  for (auto& n : extras) g->add_named(std::move(n.name), n.value);
  return g;
}

Element SemidirectGroup::make_element(std::uint64_t top,
                                      std::span<const zpn::Int> bottom) const {
  if (bottom.size() != rank_) throw BadParameters("bottom vector length");
  Element e(1 + rank_);
  e[0] = static_cast<Element::Coord>(top % spec_.top_order);
  for (std::size_t i = 0; i < rank_; ++i)
    e[1 + i] = static_cast<Element::Coord>(zpn::reduce(bottom[i], spec_.bottom_moduli[i]));
  return e;
}

void SemidirectGroup::act(std::uint64_t power, const Element& v, Element& out) const {
  if (rank_ == 0) return;
  const zpn::Int* a = &powers_[power * rank_ * rank_];
  for (std::size_t i = 0; i < rank_; ++i) {
    zpn::Int acc = 0;
    for (std::size_t k = 0; k < rank_; ++k) acc += a[i * rank_ + k] * v[1 + k];
    out[1 + i] = static_cast<Element::Coord>(acc % spec_.bottom_moduli[i]);
  }
}

Element SemidirectGroup::multiply(const Element& a, const Element& b) const {
  Element out(1 + rank_);
  out[0] = static_cast<Element::Coord>((a[0] + b[0]) % spec_.top_order);
  act(b[0], a, out);
  for (std::size_t i = 0; i < rank_; ++i)
    out[1 + i] = static_cast<Element::Coord>((out[1 + i] + b[1 + i]) % spec_.bottom_moduli[i]);
  return out;
}

Element SemidirectGroup::invert(const Element& a) const {
  const std::uint64_t m = spec_.top_order;
  const std::uint64_t t = (m - a[0]) % m;
  Element out(1 + rank_);
  out[0] = static_cast<Element::Coord>(t);
  act(t, a, out);
  for (std::size_t i = 0; i < rank_; ++i) {
    const auto q = spec_.bottom_moduli[i];
    out[1 + i] = static_cast<Element::Coord>((q - out[1 + i]) % q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ProductGroup

namespace {

std::string product_label(const std::vector<GroupPtr>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i]->label();
  }
  return factors.size() == 1 ? s : "(" + s + ")";
}

}  // namespace

ProductGroup::ProductGroup(std::vector<GroupPtr> factors, std::uint32_t p,
                           std::size_t coords, std::string label)
    : FiniteGroup(p, coords, std::move(label)), factors_(std::move(factors)) {
  std::size_t at = 0;
  for (const auto& f : factors_) {
    offsets_.push_back(at);
    at += f->coordinate_count();
  }
}

std::shared_ptr<const ProductGroup> ProductGroup::make(std::vector<GroupPtr> factors) {
  if (factors.empty()) throw BadParameters("direct product of no factors");
  const std::uint32_t p = factors.front()->prime();
  std::size_t coords = 0;
  for (const auto& f : factors) {
    if (f->prime() != p) throw BadParameters("direct product of groups for different primes");
    coords += f->coordinate_count();
  }
  std::string label = product_label(factors);
  std::shared_ptr<ProductGroup> g(new ProductGroup(std::move(factors), p, coords, std::move(label)));
  for (std::size_t i = 0; i < g->factors_.size(); ++i) {
    const std::string prefix = "f" + std::to_string(i) + ".";
    const auto& f = *g->factors_[i];
    for (const auto& gen : f.generators())
      g->add_generator(prefix + gen.name, g->embed(i, gen.value));
  }
  for (std::size_t i = 0; i < g->factors_.size(); ++i) {
    const std::string prefix = "f" + std::to_string(i) + ".";
    const auto& f = *g->factors_[i];
    for (std::size_t k = f.generators().size(); k < f.named_elements().size(); ++k) {
      const auto& n = f.named_elements()[k];
      g->add_named(prefix + n.name, g->embed(i, n.value));
    }
  }
  return g;
}

Element ProductGroup::component(const Element& g, std::size_t i) const {
  return g.slice(offsets_[i], factors_[i]->coordinate_count());
}

Element ProductGroup::embed(std::size_t i, const Element& x) const {
  std::vector<Element> parts;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    parts.push_back(k == i ? x : factors_[k]->identity());
  return Element::concat(parts);
}

Element ProductGroup::combine(std::span<const Element> parts) const {
  if (parts.size() != factors_.size()) throw BadParameters("wrong number of components");
  return Element::concat(parts);
}

Element ProductGroup::multiply(const Element& a, const Element& b) const {
  Element out(coordinate_count());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t n = factors_[i]->coordinate_count();
    const Element c = factors_[i]->multiply(a.slice(offsets_[i], n), b.slice(offsets_[i], n));
    for (std::size_t k = 0; k < n; ++k) out[offsets_[i] + k] = c[k];
  }
  return out;
}

Element ProductGroup::invert(const Element& a) const {
  Element out(coordinate_count());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t n = factors_[i]->coordinate_count();
    const Element c = factors_[i]->invert(a.slice(offsets_[i], n));
    for (std::size_t k = 0; k < n; ++k) out[offsets_[i] + k] = c[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuotientGroup

QuotientGroup::QuotientGroup(GroupPtr parent, EnumeratedSubgroup kernel, std::string label)
    : FiniteGroup(parent->prime(), parent->coordinate_count(),
                  label.empty() ? parent->label() + "/<" + std::to_string(kernel.size()) + ">"
                                : std::move(label)),
      parent_(std::move(parent)),
      parent_elements_(parent_->enumeration()),
      kernel_(std::move(kernel)) {
  const auto& elems = parent_elements_->elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  rep_of_.assign(elems.size(), kUnset);
  std::vector<Element> reps;
  // Elements are scanned in canonical order, so the first element met in a
  // coset is its minimum.
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (rep_of_[i] != kUnset) continue;
    reps.push_back(elems[i]);
    for (const auto& k : kernel_.elements()) {
      auto j = parent_elements_->index_of(parent_->multiply(elems[i], k));
      if (!j) throw InternalInconsistency("coset left the parent group");
      rep_of_[*j] = i;
    }
  }
  std::vector<Element> gens;
  for (const auto& g : parent_->generators()) {
    add_generator(g.name, project(g.value));
    gens.push_back(project(g.value));
  }
  for (std::size_t k = parent_->generators().size(); k < parent_->named_elements().size(); ++k) {
    const auto& n = parent_->named_elements()[k];
    add_named(n.name, project(n.value));
  }
  seed_enumeration(std::make_shared<const EnumeratedSubgroup>(std::move(reps), std::move(gens)));
}

std::shared_ptr<const QuotientGroup> QuotientGroup::make(GroupPtr parent,
                                                         const EnumeratedSubgroup& n,
                                                         std::string label) {
  if (!n.contains(parent->identity())) throw NotNormal("kernel lacks the identity");
  for (const auto& x : n.elements())
    if (!parent->enumeration()->contains(x)) throw NotInGroup("kernel is not inside the group");
  if (!is_normal(*parent, n)) throw NotNormal(parent->label() + ": subgroup is not normal");
  return std::shared_ptr<const QuotientGroup>(new QuotientGroup(std::move(parent), n, std::move(label)));
}

Element QuotientGroup::project(const Element& g) const {
  auto i = parent_elements_->index_of(g);
  if (!i) throw NotInGroup(label() + ": element is not in the parent group");
  return parent_elements_->elements()[rep_of_[*i]];
}

Element QuotientGroup::multiply(const Element& a, const Element& b) const {
  return project(parent_->multiply(a, b));
}

Element QuotientGroup::invert(const Element& a) const {
  return project(parent_->invert(a));
}

// ---------------------------------------------------------------------------
// SubgroupGroup

SubgroupGroup::SubgroupGroup(std::string label, GroupPtr parent)
    : FiniteGroup(parent->prime(), parent->coordinate_count(), std::move(label)),
      parent_(std::move(parent)) {}

std::shared_ptr<const SubgroupGroup> SubgroupGroup::make(
    std::string label, GroupPtr parent, std::vector<NamedElement> generators,
    std::vector<NamedElement> extras) {
  std::shared_ptr<SubgroupGroup> g(new SubgroupGroup(std::move(label), std::move(parent)));
  for (auto& n : generators) g->add_generator(std::move(n.name), n.value);
  for (auto& n : extras) g->add_named(std::move(n.name), n.value);
  return g;
}

Element SubgroupGroup::multiply(const Element& a, const Element& b) const {
  return parent_->multiply(a, b);
}

Element SubgroupGroup::invert(const Element& a) const { return parent_->invert(a); }

}  // namespace pgs
