#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgs/element.hpp"

namespace pgs {

struct NamedElement {
  std::string name;
  Element value;
};

/// A subgroup given by its full carrier, sorted in canonical order.
class EnumeratedSubgroup {
 public:
  // `sorted` must be strictly increasing and contain the identity.
  explicit EnumeratedSubgroup(std::vector<Element> sorted,
                              std::vector<Element> generators = {});

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  // A generating set; empty generates the trivial subgroup.
  const std::vector<Element>& generators() const { return generators_; }
  bool contains(const Element& g) const { return index_.contains(g); }
  std::optional<std::uint32_t> index_of(const Element& g) const;
  bool is_subset_of(const EnumeratedSubgroup& other) const;

  friend bool operator==(const EnumeratedSubgroup& a,
                         const EnumeratedSubgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  ElementMap<std::uint32_t> index_;
};

/// A finite p-group given by total multiply/invert operations on coordinate
/// vectors, a named generating set, and optional extra named elements.
///
/// Instances are immutable after construction; the carrier enumeration is a
/// write-once cache guarded by a mutex.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::uint32_t prime() const { return prime_; }
  std::size_t coordinate_count() const { return coords_; }
  const std::string& label() const { return label_; }
  Element identity() const { return Element(coords_); }

  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;

  const std::vector<NamedElement>& generators() const { return generators_; }
  // Generators first, then the distinguished extras (s1..sc, d, ...).
  const std::vector<NamedElement>& named_elements() const { return named_; }
  std::optional<Element> named(std::string_view name) const;

  Element power(const Element& g, std::int64_t n) const;
  Element conjugate(const Element& g, const Element& by) const;

  /// The carrier, computed on first use by breadth-first closure of the
  /// generators. Throws ResourceLimit beyond current_limits().max_order.
  std::shared_ptr<const EnumeratedSubgroup> enumeration() const;
  std::uint64_t order() const { return enumeration()->size(); }

 protected:
  FiniteGroup(std::uint32_t p, std::size_t coords, std::string label);
  void add_generator(std::string name, Element value);
  void add_named(std::string name, Element value);
  void seed_enumeration(std::shared_ptr<const EnumeratedSubgroup> e) const;

 private:
  std::uint32_t prime_;
  std::size_t coords_;
  std::string label_;
  std::vector<NamedElement> generators_;
  std::vector<NamedElement> named_;
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const EnumeratedSubgroup> enumeration_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Incremental subgroup closure. Each accepted generator extends the current
/// subgroup H to <H, g> by enumerating right cosets of H, so the total cost is
/// linear in the final order.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteGroup& group);
  // Returns false when g was already in the subgroup.
  bool add(const Element& g);
  bool contains(const Element& g) const { return members_.contains(g); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& elements() const { return elements_; }
  EnumeratedSubgroup finish() const;

 private:
  const FiniteGroup& group_;
  std::vector<Element> elements_;
  ElementSet members_;
  std::vector<Element> generators_;
  std::uint64_t bound_;
};

// Group-core operations. Everything that enumerates honours the current
// Limits and throws ResourceLimit when they are exceeded.

std::uint64_t element_order(const FiniteGroup& g, const Element& x);
// x^-1 y^-1 x y
Element commutator(const FiniteGroup& g, const Element& x, const Element& y);
// Left-normed [x, y1, y2, ...].
Element commutator(const FiniteGroup& g, const Element& x,
                   std::span<const Element> ys);

EnumeratedSubgroup subgroup_closure(const FiniteGroup& g,
                                    std::span<const Element> gens);
const EnumeratedSubgroup& enumerate_group(const FiniteGroup& g);
EnumeratedSubgroup trivial_subgroup(const FiniteGroup& g);
EnumeratedSubgroup whole_group(const FiniteGroup& g);

// Elements commuting with every element of `with` (pass generators).
EnumeratedSubgroup centralizer(const FiniteGroup& g,
                               std::span<const Element> with);
EnumeratedSubgroup center(const FiniteGroup& g);
bool is_central(const FiniteGroup& g, const Element& x);
bool is_normal(const FiniteGroup& g, const EnumeratedSubgroup& n);

EnumeratedSubgroup normal_closure(const FiniteGroup& g,
                                  std::span<const Element> xs);
EnumeratedSubgroup normal_closure(const FiniteGroup& g, const Element& x);

bool is_pth_power(const FiniteGroup& g, const Element& z);
EnumeratedSubgroup omega1_subgroup(const FiniteGroup& g);
bool generated_by_order_p(const FiniteGroup& g);

GroupPtr direct_product(std::vector<GroupPtr> factors);
/// G/N with canonical representatives (the minimum of each coset). Throws
/// NotNormal when N is not normal.
GroupPtr quotient_group(GroupPtr g, const EnumeratedSubgroup& n);

struct DirectDecomposition {
  EnumeratedSubgroup first;
  EnumeratedSubgroup second;
};

/// Searches the lattice of normal subgroups (the join-closure of the normal
/// closures of single elements) for a pair of nontrivial normal subgroups
/// with trivial intersection and product G. Throws ResourceLimit when |G|
/// exceeds current_limits().decompose_bound.
std::optional<DirectDecomposition> direct_factor_search(const FiniteGroup& g);

}  // namespace pgs
