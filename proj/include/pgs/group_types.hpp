#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pgs/group.hpp"
#include "pgs/zpn.hpp"

namespace pgs {

/// Cyclic top <b> of order m acting on a finite abelian bottom
/// Z/q_1 x ... x Z/q_r. Elements are (t, v) meaning b^t v, and conjugation
/// by b is b^-1 v b = A v, so (t, v)(u, w) = (t + u, A^u v + w).
class SemidirectGroup final : public FiniteGroup {
 public:
  struct Spec {
    std::uint32_t p = 0;
    std::uint64_t top_order = 1;
    std::vector<zpn::Int> bottom_moduli;
    // r x r integer matrix; column j is the image of the j-th basis vector.
    std::vector<zpn::Vec> action;
  };

  // Generator and extra names refer to elements given as (t, v...).
  static std::shared_ptr<const SemidirectGroup> make(
      std::string label, Spec spec, std::vector<NamedElement> generators,
      std::vector<NamedElement> extras = {});

  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;

  const Spec& spec() const { return spec_; }
  bool in_bottom(const Element& g) const { return g[0] == 0; }
  Element make_element(std::uint64_t top, std::span<const zpn::Int> bottom) const;

 private:
  SemidirectGroup(std::string label, Spec spec);
  void act(std::uint64_t power, const Element& v, Element& out) const;

  Spec spec_;
  std::size_t rank_;
  std::vector<zpn::Int> powers_;  // A^u, row-major, for u in [0, m)
};

class ProductGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const ProductGroup> make(std::vector<GroupPtr> factors);

  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;

  const std::vector<GroupPtr>& factors() const { return factors_; }
  Element component(const Element& g, std::size_t i) const;
  Element embed(std::size_t i, const Element& x) const;
  Element combine(std::span<const Element> parts) const;

 private:
  ProductGroup(std::vector<GroupPtr> factors, std::uint32_t p,
               std::size_t coords, std::string label);
  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> offsets_;
};

class QuotientGroup final : public FiniteGroup {
 public:
  // An empty label is derived from the parent's.
  static std::shared_ptr<const QuotientGroup> make(GroupPtr parent,
                                                   const EnumeratedSubgroup& n,
                                                   std::string label = {});

  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;

  const GroupPtr& parent() const { return parent_; }
  const EnumeratedSubgroup& kernel() const { return kernel_; }
  // Canonical representative (coset minimum) of a parent element.
  Element project(const Element& g) const;

 private:
  QuotientGroup(GroupPtr parent, EnumeratedSubgroup kernel, std::string label);
  GroupPtr parent_;
  std::shared_ptr<const EnumeratedSubgroup> parent_elements_;
  EnumeratedSubgroup kernel_;
  std::vector<std::uint32_t> rep_of_;
};

/// The subgroup of `parent` generated by the given named elements, presented
/// as a group in its own right (elements keep the parent's encoding).
class SubgroupGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const SubgroupGroup> make(
      std::string label, GroupPtr parent, std::vector<NamedElement> generators,
      std::vector<NamedElement> extras = {});

  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  const GroupPtr& parent() const { return parent_; }

 private:
  SubgroupGroup(std::string label, GroupPtr parent);
  GroupPtr parent_;
};

}  // namespace pgs
