#include "pgs/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pgs/errors.hpp"
#include "pgs/limits.hpp"

namespace pgs {
namespace {

using zpn::Int;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw BadParameters(std::to_string(p) + " is not prime");
}

// p^e, or 0 when it exceeds `cap`.
std::uint64_t capped_pow(std::uint64_t p, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / p) return 0;
    r *= p;
  }
  return r;
}

void require_order_within_bound(const std::string& what, std::uint64_t p, unsigned log_order) {
  const std::uint64_t bound = current_limits().max_order;
  if (capped_pow(p, log_order, bound) == 0)
    throw ParameterTooLarge(what + ": order " + std::to_string(p) + "^" +
                            std::to_string(log_order) + " exceeds the enumeration bound " +
                            std::to_string(bound));
}

std::uint64_t coordinate_modulus(std::uint64_t p, unsigned e, const std::string& what) {
  const std::uint64_t q = capped_pow(p, e, 65536);
  if (q == 0) throw ParameterTooLarge(what + ": cyclic factor too large for the encoding");
  return q;
}

std::string params(std::initializer_list<std::uint64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::string list(const std::vector<unsigned>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

NamedElement named(std::string name, Element value) { return {std::move(name), value}; }

}  // namespace

// ---------------------------------------------------------------------------
// Families

GroupPtr make_cyclic(std::uint32_t p, unsigned e) {
  require_prime(p);
  const std::uint64_t q = coordinate_modulus(p, e, "cyclic");
  require_order_within_bound("cyclic", p, e);
  SemidirectGroup::Spec spec{p, q, {}, {}};
  Element d{static_cast<Element::Coord>(q == 1 ? 0 : 1)};
  return SemidirectGroup::make(q == 1 ? "C(1)" : "C(" + std::to_string(q) + ")", std::move(spec),
                               {named("d", d)});
}

std::shared_ptr<const SemidirectGroup> make_Dc(std::uint32_t p, unsigned c) {
  require_prime(p);
  if (p == 2 ? c < 3 : c < 2)
    throw BadParameters("Dc(" + std::to_string(p) + "," + std::to_string(c) + ") needs c >= " +
                        (p == 2 ? "3 for p = 2" : "2"));
  const std::uint64_t q = coordinate_modulus(p, c, "Dc");
  require_order_within_bound("Dc", p, p == 2 ? 2 * c - 1 : 2 * c);
  const std::uint64_t top = p == 2 ? q / 2 : q;
  SemidirectGroup::Spec spec{p, top, {static_cast<Int>(q)}, {{static_cast<Int>(1 + p)}}};
  return SemidirectGroup::make("Dc" + params({p, c}), std::move(spec),
                               {named("x", Element{0, 1}), named("y", Element{1, 0})});
}

Element McInstance::embed(const cyclo::RingElem& r) const {
  const zpn::Vec v = bottom.to_canonical(r.coeffs);
  return group->make_element(0, v);
}

McInstance make_mc_instance(std::uint32_t p, unsigned c) {
  require_prime(p);
  if (c < 2) throw BadParameters("Mc needs c >= 2");
  require_order_within_bound("Mc", p, c + 1);
  cyclo::CycloRing ring = cyclo::CycloRing::make(p, c);
  cyclo::BottomGroup bottom = ring.mc_bottom();
  const std::size_t r = bottom.invariants.rank();

  SemidirectGroup::Spec spec{p, p, bottom.invariants.moduli(), {}};
  for (std::size_t i = 0; i < r; ++i) {
    zpn::Vec row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = bottom.action(i, j);
    spec.action.push_back(std::move(row));
  }

  // Build the group once without names to get make_element, then with names.
  auto bare = SemidirectGroup::make("Mc" + params({p, c}), spec, {});
  std::vector<NamedElement> extras;
  cyclo::RingElem s = ring.one();
  Element s1;
  for (unsigned n = 1; n <= c; ++n) {
    Element e = bare->make_element(0, bottom.invariants.to_canonical(s.coeffs));
    if (n == 1)
      s1 = e;
    else
      extras.push_back(named("s" + std::to_string(n), e));
    s = ring.mul(s, ring.omega_minus_one());
  }
  const Element a = bare->make_element(1, zpn::Vec(r, 0));
  auto g = SemidirectGroup::make("Mc" + params({p, c}), std::move(spec),
                                 {named("a", a), named("s1", s1)}, std::move(extras));
  return McInstance{std::move(g), std::move(ring), std::move(bottom.invariants)};
}

std::shared_ptr<const SemidirectGroup> make_Mc(std::uint32_t p, unsigned c) {
  return make_mc_instance(p, c).group;
}

GroupPtr make_homocyclic(std::uint32_t p, unsigned k, unsigned e, unsigned s) {
  require_prime(p);
  if (k < 1 || k > p - 1) throw BadParameters("homocyclic needs 1 <= k <= p-1");
  if (e < 1) throw BadParameters("homocyclic needs e >= 1");
  if (s >= k) throw BadParameters("homocyclic needs 0 <= s < k");
  const std::uint64_t q = coordinate_modulus(p, e, "homocyclic");

  zpn::ModMatrix beta(p, e, k, k);
  for (unsigned i = 0; i + 1 < k; ++i) {
    beta.set(i, i, 1);
    beta.set(i + 1, i, 1);
  }
  beta.set(k - 1, k - 1, 1);
  beta.set(0, k - 1, (k == 1 ? 1 : 0) + p);
  const std::uint64_t beta_order = zpn::matrix_power_order(beta);
  unsigned t = 0;
  for (std::uint64_t m = beta_order; m > 1; m /= p) ++t;
  const std::uint64_t top = coordinate_modulus(p, t + 1, "homocyclic");
  require_order_within_bound("homocyclic", p, k * e + t + 1);

  SemidirectGroup::Spec spec{p, top, zpn::Vec(k, static_cast<Int>(q)), {}};
  for (unsigned i = 0; i < k; ++i) {
    zpn::Vec row(k);
    for (unsigned j = 0; j < k; ++j) row[j] = beta(i, j);
    spec.action.push_back(std::move(row));
  }
  std::vector<NamedElement> gens;
  for (unsigned i = 0; i < k; ++i) {
    Element a(1 + k);
    a[1 + i] = 1;
    gens.push_back(named("a" + std::to_string(i + 1), a));
  }
  Element b(1 + k);
  b[0] = 1;
  gens.push_back(named("b", b));
  const std::string label = "homocyclic" + params({p, k, e, s});
  auto full = SemidirectGroup::make(s == 0 ? label : label + ".ambient", std::move(spec), gens);
  if (s == 0) return full;

  std::vector<NamedElement> sub;
  for (unsigned i = 0; i < k; ++i) {
    if (i < s)
      sub.push_back(named("a" + std::to_string(i + 1) + "p", full->power(gens[i].value, p)));
    else
      sub.push_back(gens[i]);
  }
  sub.push_back(gens.back());
  return SubgroupGroup::make(label, full, std::move(sub));
}

std::shared_ptr<const lie::LazardGroup> make_B2(std::uint32_t p, unsigned k) {
  require_prime(p);
  if (k < 2 || k > std::min<unsigned>(p - 1, lie::FreeNilpotentLie::kMaxClass))
    throw BadParameters("B2" + params({p, k}) + " needs 2 <= k <= min(p-1, 4)");
  static constexpr unsigned kDims[] = {0, 2, 3, 5, 8};
  require_order_within_bound("B2", p, kDims[k]);
  return lie::LazardGroup::make(p, k);
}

GroupPtr make_second_example(std::uint32_t p, unsigned k, unsigned c,
                             std::optional<std::string> d_word) {
  require_prime(p);
  if (k < 2 || k > std::min<unsigned>(p - 1, lie::FreeNilpotentLie::kMaxClass))
    throw BadParameters("second_example needs 2 <= k <= min(p-1, 4)");
  if (c < k) throw BadParameters("second_example needs c >= k");
  auto dc = make_Dc(p, c);
  auto b2 = make_B2(p, k);
  require_order_within_bound("second_example", p, 2 * c + static_cast<unsigned>(b2->algebra().dim()));

  const Element d = d_word ? evaluate_word(*b2, *d_word) : *b2->named("d");
  if (b2->min_weight(d) < k) throw BadParameters("second_example: d is not in gamma_k");
  const Element z1 = dc->power(*dc->named("x"), static_cast<std::int64_t>(capped_pow(p, c - 1, ~0ull)));
  // In a direct product z is a p-th power iff each component is.
  if (is_pth_power(*dc, z1) && is_pth_power(*b2, d))
    throw PthPowerViolation("second_example: x^(p^(c-1)) d is a p-th power");

  auto product = ProductGroup::make({dc, b2});
  const Element z = product->combine(std::vector<Element>{z1, d});
  const Element zs[] = {z};
  return QuotientGroup::make(product, subgroup_closure(*product, zs),
                             "second_example" + params({p, k, c}));
}

namespace {

void validate_partb(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c) {
  require_prime(p);
  if (cs.empty()) throw BadParameters("partb needs at least one c_i");
  if (cs.front() < p) throw BadParameters("partb needs p <= c_1");
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i] <= cs[i - 1]) throw BadParameters("partb needs c_1 < c_2 < ... < c_n");
  if (cs.back() > c) throw BadParameters("partb needs c_n <= c");
}

}  // namespace

GroupPtr make_partb_decomposable(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c) {
  validate_partb(p, cs, c);
  std::vector<GroupPtr> factors;
  for (unsigned ci : cs) factors.push_back(make_Mc(p, ci));
  if (c != cs.back()) factors.push_back(make_Dc(p, c));
  if (factors.size() == 1) return factors.front();
  return ProductGroup::make(std::move(factors));
}

PartBInstance make_partb_instance(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c) {
  validate_partb(p, cs, c);
  PartBInstance out;
  out.p = p;
  out.cs = cs;
  out.c = c;
  const std::size_t n = cs.size();

  if (n == 1 && cs.front() == c) {
    out.degenerate = true;
    out.H = ProductGroup::make({make_Mc(p, c)});
    out.G = out.H;
    out.a = out.H->named("f0.a").value();
    out.y_power = out.H->identity();
    return out;
  }

  std::vector<GroupPtr> factors;
  for (unsigned ci : cs) factors.push_back(make_Mc(p, ci));
  factors.push_back(make_Dc(p, c));
  out.H = ProductGroup::make(factors);
  const ProductGroup& H = *out.H;

  std::vector<Element> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back(*factors[i]->named("a"));
  parts.push_back(*factors[n]->named("y"));
  out.a = H.combine(parts);

  std::vector<NamedElement> gens{named("a", out.a)};
  for (std::size_t i = 0; i < n; ++i) {
    const FiniteGroup& m = *factors[i];
    const std::string idx = std::to_string(i + 1);
    gens.push_back(named("x" + idx, H.embed(i, m.multiply(*m.named("a"), *m.named("s1")))));
    for (unsigned j = 2; j <= cs[i]; ++j)
      gens.push_back(named("t" + idx + "_" + std::to_string(j),
                           H.embed(i, *m.named("s" + std::to_string(j)))));
  }
  const FiniteGroup& d = *factors[n];
  out.y_power = H.embed(n, d.power(*d.named("y"), p));
  gens.push_back(named("x", H.embed(n, *d.named("x"))));
  gens.push_back(named("yp", out.y_power));
  out.G = SubgroupGroup::make("partb_indec(" + std::to_string(p) + "," + list(cs) + "," +
                                  std::to_string(c) + ")",
                              out.H, std::move(gens));
  return out;
}

GroupPtr make_partb_indecomposable(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c) {
  PartBInstance inst = make_partb_instance(p, cs, c);
  if (inst.degenerate) return inst.H->factors().front();
  return inst.G;
}

GroupPtr central_quotient_diagonal(const GroupPtr& g1, const GroupPtr& g2, const Element& z1,
                                   const Element& z2) {
  const std::pair<const GroupPtr*, const Element*> sides[] = {{&g1, &z1}, {&g2, &z2}};
  for (const auto& [g, z] : sides) {
    if (!(*g)->enumeration()->contains(*z))
      throw NotInGroup((*g)->label() + ": element " + z->to_string() + " is not in the group");
    if (!is_central(**g, *z))
      throw NotCentral((*g)->label() + ": element " + z->to_string() + " is not central");
    if (element_order(**g, *z) != (*g)->prime())
      throw WrongOrder((*g)->label() + ": element " + z->to_string() + " does not have order p");
  }
  auto product = ProductGroup::make({g1, g2});
  const Element zs[] = {product->combine(std::vector<Element>{z1, z2})};
  return QuotientGroup::make(product, subgroup_closure(*product, zs));
}

// ---------------------------------------------------------------------------
// Words

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool valid_name(std::string_view name) {
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = name.find('.', start);
    const std::string_view seg = name.substr(start, dot == std::string_view::npos ? name.npos : dot - start);
    if (dot == std::string_view::npos) return valid_identifier(seg);
    if (seg.size() < 2 || seg[0] != 'f' ||
        !std::all_of(seg.begin() + 1, seg.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      return false;
    start = dot + 1;
  }
}

}  // namespace

Element evaluate_word(const FiniteGroup& g, std::string_view word) {
  if (word.empty()) throw ParseError("empty word");
  Element result = g.identity();
  std::size_t start = 0;
  while (start <= word.size()) {
    const std::size_t star = word.find('*', start);
    const std::string_view term =
        word.substr(start, star == std::string_view::npos ? word.npos : star - start);
    const std::size_t caret = term.find('^');
    const std::string_view name = term.substr(0, caret);
    if (!valid_name(name))
      throw ParseError("word '" + std::string(word) + "': bad generator name '" + std::string(name) + "'");
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = term.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (first == last || ec != std::errc() || ptr != last)
        throw ParseError("word '" + std::string(word) + "': bad exponent '" + std::string(digits) + "'");
    }
    const auto value = g.named(name);
    if (!value)
      throw ParseError("word '" + std::string(word) + "': " + g.label() + " has no element named '" +
                       std::string(name) + "'");
    result = g.multiply(result, g.power(*value, exponent));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return result;
}

GroupPtr central_quotient(const GroupPtr& g, std::string_view word) {
  const Element z = evaluate_word(*g, word);
  if (!is_central(*g, z)) throw NotCentral(g->label() + ": " + std::string(word) + " is not central");
  const Element zs[] = {z};
  return QuotientGroup::make(g, subgroup_closure(*g, zs),
                             g->label() + "/<" + std::string(word) + ">");
}

// ---------------------------------------------------------------------------
// Recipes

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t uint_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > 1'000'000) throw ParseError(std::string("field '") + key + "' is out of range");
  return x;
}

std::uint32_t prime_field(const json& j) { return static_cast<std::uint32_t>(uint_field(j, "p")); }
unsigned small_field(const json& j, const char* key) { return static_cast<unsigned>(uint_field(j, key)); }

std::vector<unsigned> uint_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<unsigned> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 1'000'000)
      throw ParseError(std::string("field '") + key + "' must hold non-negative integers");
    out.push_back(x.get<unsigned>());
  }
  return out;
}

}  // namespace

GroupDescription description_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("group description must be a JSON object");
  std::string kind;
  if (auto it = j.find("family"); it != j.end()) {
    if (!it->is_string()) throw ParseError("'family' must be a string");
    kind = it->get<std::string>();
  } else if (auto op = j.find("op"); op != j.end()) {
    if (!op->is_string()) throw ParseError("'op' must be a string");
    kind = op->get<std::string>();
  } else {
    throw ParseError("group description needs 'family' or 'op'");
  }

  if (kind == "Mc") return {McDesc{prime_field(j), small_field(j, "c")}};
  if (kind == "Dc") return {DcDesc{prime_field(j), small_field(j, "c")}};
  if (kind == "cyclic") return {CyclicDesc{prime_field(j), small_field(j, "e")}};
  if (kind == "homocyclic")
    return {HomocyclicDesc{prime_field(j), small_field(j, "k"), small_field(j, "e"),
                           j.contains("s") ? small_field(j, "s") : 0u}};
  if (kind == "B2") return {B2Desc{prime_field(j), small_field(j, "k")}};
  if (kind == "second_example") {
    SecondExampleDesc d{prime_field(j), small_field(j, "k"), small_field(j, "c"), std::nullopt};
    if (auto it = j.find("d"); it != j.end()) {
      if (!it->is_string()) throw ParseError("'d' must be a word string");
      d.d = it->get<std::string>();
    }
    return {d};
  }
  if (kind == "partb" || kind == "partb_indec") {
    bool indec = kind == "partb_indec";
    if (auto it = j.find("indecomposable"); it != j.end()) {
      if (!it->is_boolean()) throw ParseError("'indecomposable' must be a boolean");
      indec = it->get<bool>();
    }
    return {PartBDesc{prime_field(j), uint_list(j, "cs"), small_field(j, "c"), indec}};
  }
  if (kind == "product") {
    const json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) throw ParseError("'factors' must be a non-empty array");
    ProductDesc d;
    for (const auto& f : fs) d.factors.push_back(description_from_json(f));
    return {std::move(d)};
  }
  if (kind == "central_quotient") {
    const json& w = field(j, "word");
    if (!w.is_string()) throw ParseError("'word' must be a string");
    return {CentralQuotientDesc{
        std::make_shared<const GroupDescription>(description_from_json(field(j, "group"))),
        w.get<std::string>()}};
  }
  throw ParseError("unknown group family '" + kind + "'");
}

GroupDescription parse_description(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return description_from_json(j);
}

json to_json(const GroupDescription& d) {
  struct Visitor {
    json operator()(const McDesc& x) const { return {{"family", "Mc"}, {"p", x.p}, {"c", x.c}}; }
    json operator()(const DcDesc& x) const { return {{"family", "Dc"}, {"p", x.p}, {"c", x.c}}; }
    json operator()(const CyclicDesc& x) const { return {{"family", "cyclic"}, {"p", x.p}, {"e", x.e}}; }
    json operator()(const HomocyclicDesc& x) const {
      return {{"family", "homocyclic"}, {"p", x.p}, {"k", x.k}, {"e", x.e}, {"s", x.s}};
    }
    json operator()(const B2Desc& x) const { return {{"family", "B2"}, {"p", x.p}, {"k", x.k}}; }
    json operator()(const SecondExampleDesc& x) const {
      json j = {{"family", "second_example"}, {"p", x.p}, {"k", x.k}, {"c", x.c}};
      if (x.d) j["d"] = *x.d;
      return j;
    }
    json operator()(const PartBDesc& x) const {
      return {{"family", "partb"}, {"p", x.p}, {"cs", x.cs}, {"c", x.c},
              {"indecomposable", x.indecomposable}};
    }
    json operator()(const ProductDesc& x) const {
      json fs = json::array();
      for (const auto& f : x.factors) fs.push_back(to_json(f));
      return {{"op", "product"}, {"factors", fs}};
    }
    json operator()(const CentralQuotientDesc& x) const {
      return {{"op", "central_quotient"}, {"group", to_json(*x.group)}, {"word", x.word}};
    }
  };
  return std::visit(Visitor{}, d.node);
}

GroupPtr build_from_description(const GroupDescription& d) {
  struct Visitor {
    GroupPtr operator()(const McDesc& x) const { return make_Mc(x.p, x.c); }
    GroupPtr operator()(const DcDesc& x) const { return make_Dc(x.p, x.c); }
    GroupPtr operator()(const CyclicDesc& x) const { return make_cyclic(x.p, x.e); }
    GroupPtr operator()(const HomocyclicDesc& x) const { return make_homocyclic(x.p, x.k, x.e, x.s); }
    GroupPtr operator()(const B2Desc& x) const { return make_B2(x.p, x.k); }
    GroupPtr operator()(const SecondExampleDesc& x) const {
      return make_second_example(x.p, x.k, x.c, x.d);
    }
    GroupPtr operator()(const PartBDesc& x) const {
      return x.indecomposable ? make_partb_indecomposable(x.p, x.cs, x.c)
                              : make_partb_decomposable(x.p, x.cs, x.c);
    }
    GroupPtr operator()(const ProductDesc& x) const {
      std::vector<GroupPtr> fs;
      for (const auto& f : x.factors) fs.push_back(build_from_description(f));
      return ProductGroup::make(std::move(fs));
    }
    GroupPtr operator()(const CentralQuotientDesc& x) const {
      return central_quotient(build_from_description(*x.group), x.word);
    }
  };
  return std::visit(Visitor{}, d.node);
}

}  // namespace pgs
