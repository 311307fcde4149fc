#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "pgs/cyclo.hpp"
#include "pgs/group.hpp"
#include "pgs/group_types.hpp"
#include "pgs/lie.hpp"

namespace pgs {

/// Cyclic group of order p^e with generator "d" (e = 0 gives the trivial group).
GroupPtr make_cyclic(std::uint32_t p, unsigned e);

/// Metacyclic <x, y : x^(p^c), y^(p^c), [x,y] = x^p> for odd p, and
/// <x, y : x^(2^c), y^(2^(c-1)), [x,y] = x^2> for p = 2. Requires c >= 2
/// (c >= 3 when p = 2).
std::shared_ptr<const SemidirectGroup> make_Dc(std::uint32_t p, unsigned c);

struct McInstance {
  std::shared_ptr<const SemidirectGroup> group;
  cyclo::CycloRing ring;
  zpn::AbelianInvariants bottom;
  // Bottom element (top coordinate 0) with ring coordinates r.
  Element embed(const cyclo::RingElem& r) const;
};

/// <a> of order p acting by w on E/I^c; maximal class c, order p^(c+1).
/// Generators "a", "s1"; extras "s2" .. "sc" with s_(n+1) = [s_n, a].
McInstance make_mc_instance(std::uint32_t p, unsigned c);
std::shared_ptr<const SemidirectGroup> make_Mc(std::uint32_t p, unsigned c);

/// (Z/p^e)^k extended by b acting as a_i -> a_i a_(i+1), a_k -> a_k a_1^p,
/// with b of order p^(t+1) where p^t is the order of that automorphism. For
/// s > 0 the subgroup <a_1^p, .., a_s^p, a_(s+1), .., a_k, b>.
GroupPtr make_homocyclic(std::uint32_t p, unsigned k, unsigned e, unsigned s);

/// Free 2-generator group of exponent p and class k (2 <= k <= min(p-1, 4)).
std::shared_ptr<const lie::LazardGroup> make_B2(std::uint32_t p, unsigned k);

/// (D_c x B2(p,k)) / <x^(p^(c-1)) d>. `d_word` is evaluated in B2 and must be
/// a nontrivial element of gamma_k; by default d = [t, s, .., s].
GroupPtr make_second_example(std::uint32_t p, unsigned k, unsigned c,
                             std::optional<std::string> d_word = std::nullopt);

/// M_(c_1) x .. x M_(c_n) x D_c, with D_c dropped when c = c_n. A single
/// remaining factor is returned as itself.
GroupPtr make_partb_decomposable(std::uint32_t p, const std::vector<unsigned>& cs,
                                 unsigned c);

struct PartBInstance {
  std::shared_ptr<const ProductGroup> H;  // M_(c_i) factors, then D_c unless degenerate
  GroupPtr G;
  Element a;
  Element y_power;  // embedded y^p
  // (p, [p], p): G = H = M_p and the index / a^p statements are vacuous.
  bool degenerate = false;
  std::uint32_t p = 0;
  std::vector<unsigned> cs;
  unsigned c = 0;
};

PartBInstance make_partb_instance(std::uint32_t p, const std::vector<unsigned>& cs,
                                  unsigned c);
GroupPtr make_partb_indecomposable(std::uint32_t p, const std::vector<unsigned>& cs,
                                   unsigned c);

/// (G1 x G2) / <(z1, z2)>; z_i must be central of order p.
GroupPtr central_quotient_diagonal(const GroupPtr& g1, const GroupPtr& g2,
                                   const Element& z1, const Element& z2);

/// word := term ("*" term)*, term := name ("^" signed-integer)?
Element evaluate_word(const FiniteGroup& g, std::string_view word);

/// G / <z> for a central element z given as a word.
GroupPtr central_quotient(const GroupPtr& g, std::string_view word);

// ---------------------------------------------------------------------------
// Recipes

struct GroupDescription;

struct McDesc { std::uint32_t p; unsigned c; };
struct DcDesc { std::uint32_t p; unsigned c; };
struct CyclicDesc { std::uint32_t p; unsigned e; };
struct HomocyclicDesc { std::uint32_t p; unsigned k, e, s; };
struct B2Desc { std::uint32_t p; unsigned k; };
struct SecondExampleDesc {
  std::uint32_t p;
  unsigned k, c;
  std::optional<std::string> d;
};
struct PartBDesc {
  std::uint32_t p;
  std::vector<unsigned> cs;
  unsigned c;
  bool indecomposable;
};
struct ProductDesc { std::vector<GroupDescription> factors; };
struct CentralQuotientDesc {
  std::shared_ptr<const GroupDescription> group;
  std::string word;
};

struct GroupDescription {
  std::variant<McDesc, DcDesc, CyclicDesc, HomocyclicDesc, B2Desc, SecondExampleDesc,
               PartBDesc, ProductDesc, CentralQuotientDesc>
      node;
};

/// Throws ParseError (with the byte offset for malformed JSON).
GroupDescription parse_description(std::string_view text);
GroupDescription description_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupDescription& d);
GroupPtr build_from_description(const GroupDescription& d);

}  // namespace pgs
