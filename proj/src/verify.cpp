#include "pgs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "pgs/errors.hpp"
#include "pgs/group_types.hpp"
#include "pgs/limits.hpp"

namespace pgs {
namespace {

using nlohmann::json;

json elem(const Element& e) { return e.to_string(); }

json set_json(const std::set<unsigned>& s) { return json(std::vector<unsigned>(s.begin(), s.end())); }

std::string set_string(const std::set<unsigned>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.multiply(gens[i].value, gens[j].value) != g.multiply(gens[j].value, gens[i].value))
        return false;
  return true;
}

std::vector<Element> order_p_elements(const FiniteGroup& g) {
  std::vector<Element> out;
  const Element id = g.identity();
  for (const auto& x : enumerate_group(g).elements())
    if (x != id && g.power(x, g.prime()) == id) out.push_back(x);
  return out;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Statements

TheoremPart1Report verify_theorem_part1(const FiniteGroup& g) {
  TheoremPart1Report r;
  r.spectrum = spectrum(g);
  const unsigned p = g.prime();
  for (unsigned k : r.spectrum.spectrum) {
    if (k < 2) continue;
    for (unsigned j = 1; j <= std::min(k, p - 1); ++j)
      if (!r.spectrum.spectrum.contains(j))
        r.violations.push_back("layer " + std::to_string(k) + " holds an element of order p but layer " +
                               std::to_string(j) + " does not");
  }
  r.pass = r.violations.empty();
  return r;
}

Lemma2Report verify_lemma2(const FiniteGroup& g) {
  Lemma2Report r;
  r.applicable = g.prime() % 2 == 1 && !is_abelian(g) && generated_by_order_p(g);
  // The witness is searched for even when the hypotheses fail.
  const CentralSeriesChain ucs = upper_central_series(g);
  const Element id = g.identity();
  if (ucs.length() >= 2)
    for (const auto& x : ucs[2].elements()) {
      if (ucs[1].contains(x) || g.power(x, g.prime()) != id) continue;
      r.witness = x;
      break;
    }
  r.pass = !r.applicable || r.witness.has_value();
  return r;
}

std::optional<QuestionWitness> find_question_witness(const FiniteGroup& g) {
  if (is_abelian(g)) throw PreconditionFailed(g.label() + ": needs a nonabelian group");
  const Element id = g.identity();
  const auto p = static_cast<std::int64_t>(g.prime());
  auto good = [&](const Element& x, const Element& y) {
    return g.multiply(x, y) != g.multiply(y, x) && g.power(g.multiply(x, y), p) == id;
  };

  if (p % 2 == 1) {
    const Lemma2Report l2 = verify_lemma2(g);
    if (l2.witness) {
      const Element t = *l2.witness;
      for (const auto& x : order_p_elements(g))
        if (g.multiply(x, t) != g.multiply(t, x)) {
          if (!good(x, t)) throw InternalInconsistency(g.label() + ": (xt)^p != 1 for t in Z_2");
          return QuestionWitness{x, t, true};
        }
    }
  }
  const auto xs = order_p_elements(g);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (good(xs[i], xs[j])) return QuestionWitness{xs[i], xs[j], false};
  return std::nullopt;
}

RegularityReport verify_regularity_power(const FiniteGroup& g, std::uint64_t seed,
                                         std::uint64_t exhaustive_limit, std::uint64_t samples) {
  const unsigned c = nilpotence_class(g);
  if (c >= g.prime())
    throw PreconditionFailed(g.label() + ": class " + std::to_string(c) + " is not below p");
  RegularityReport r;
  const auto xs = order_p_elements(g);
  const auto& all = enumerate_group(g).elements();
  const Element id = g.identity();
  auto test = [&](const Element& x, const Element& y) {
    ++r.pairs_checked;
    if (g.power(commutator(g, x, y), g.prime()) != id && !r.counterexample)
      r.counterexample = std::make_pair(x, y);
  };
  if (xs.empty()) {
    r.exhaustive = true;
  } else if (static_cast<std::uint64_t>(xs.size()) * all.size() <= exhaustive_limit) {
    r.exhaustive = true;
    for (const auto& x : xs)
      for (const auto& y : all) test(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) test(xs[rng() % xs.size()], all[rng() % all.size()]);
  }
  r.pass = !r.counterexample;
  return r;
}

ProductSpectrumReport verify_product_spectrum(const GroupPtr& g1, const GroupPtr& g2) {
  if (g1->order() == 1 || g2->order() == 1)
    throw PreconditionFailed("the product law is stated for nontrivial factors");
  ProductSpectrumReport r;
  r.first = spectrum(*g1);
  r.second = spectrum(*g2);
  r.product = spectrum(*ProductGroup::make({g1, g2}));
  std::set<unsigned> u = r.first.spectrum;
  u.insert(r.second.spectrum.begin(), r.second.spectrum.end());
  r.pass = r.product.spectrum == u &&
           r.product.nilpotence_class == std::max(r.first.nilpotence_class, r.second.nilpotence_class);
  return r;
}

PropSameReport verify_prop_same(const GroupPtr& g1, const GroupPtr& g2, const Element& z1,
                                const Element& z2, std::uint64_t seed) {
  const std::pair<const GroupPtr*, const Element*> sides[] = {{&g1, &z1}, {&g2, &z2}};
  for (const auto& [g, z] : sides) {
    if (!is_central(**g, *z)) throw NotCentral((*g)->label() + ": z is not central");
    if (element_order(**g, *z) != (*g)->prime()) throw WrongOrder((*g)->label() + ": z does not have order p");
  }
  auto product = ProductGroup::make({g1, g2});
  const Element z = product->combine(std::vector<Element>{z1, z2});
  if (is_pth_power(*product, z))
    throw PreconditionFailed("z1 z2 = " + z.to_string() + " is a p-th power");
  const Element zs[] = {z};
  auto q = QuotientGroup::make(product, subgroup_closure(*product, zs));

  PropSameReport r;
  const CentralSeriesChain ucs_g = upper_central_series(*product);
  const CentralSeriesChain ucs_q = upper_central_series(*q);
  r.product = spectrum(*product, ucs_g);
  r.quotient = spectrum(*q, ucs_q);
  if (r.product.nilpotence_class != r.quotient.nilpotence_class)
    r.violations.push_back("class " + std::to_string(r.quotient.nilpotence_class) + " of Q differs from " +
                           std::to_string(r.product.nilpotence_class));
  if (r.product.spectrum != r.quotient.spectrum)
    r.violations.push_back("spectrum " + set_string(r.quotient.spectrum) + " of Q differs from " +
                           set_string(r.product.spectrum));

  const CentralSeriesChain ucs1 = upper_central_series(*g1);
  const CentralSeriesChain ucs2 = upper_central_series(*g2);
  auto term = [](const CentralSeriesChain& ch, std::size_t n) -> const EnumeratedSubgroup& {
    return ch[std::min(n, ch.length())];
  };
  const std::size_t c = std::max<std::size_t>(1, r.product.nilpotence_class);
  auto check = [&](const Element& x) {
    ++r.sublemma_checked;
    const Element qx = q->project(x);
    const Element x1 = product->component(x, 0), x2 = product->component(x, 1);
    for (std::size_t n = 1; n <= c; ++n) {
      const bool in_q = term(ucs_q, n).contains(qx);
      const bool in_factors = term(ucs1, n).contains(x1) && term(ucs2, n).contains(x2);
      if (in_q != in_factors && r.violations.size() < 8)
        r.violations.push_back("sub-lemma fails at n = " + std::to_string(n) + " for " + x.to_string());
    }
  };
  const auto& all = enumerate_group(*product).elements();
  if (all.size() <= 200'000) {
    r.sublemma_exhaustive = true;
    for (const auto& x : all) check(x);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20'000; ++i) check(all[rng() % all.size()]);
  }
  r.pass = r.violations.empty();
  return r;
}

LemmaFactReport verify_lemma_fact(std::uint32_t p, unsigned c) {
  auto g = make_Mc(p, c);
  LemmaFactReport r;
  for (const auto& x : enumerate_group(*g).elements()) {
    if (g->in_bottom(x)) continue;
    ++r.checked;
    if (element_order(*g, x) != p && !r.counterexample) r.counterexample = x;
  }
  r.pass = !r.counterexample && r.checked == ipow(p, c) * (p - 1);
  return r;
}

ZetaReport verify_zeta(std::uint32_t p) {
  const cyclo::CycloRing ring = cyclo::CycloRing::make(p, p);
  ZetaReport r;
  r.zeta = ring.eq_powers_witness();
  const cyclo::RingElem lhs = ring.pow(ring.omega_minus_one(), p - 1);
  r.pass = ring.is_unit(r.zeta) && ring.scale(r.zeta, p) == lhs;
  return r;
}

EqPowersReport verify_eq_powers(std::uint32_t p, unsigned c) {
  if (c < p) throw PreconditionFailed("the power identity needs c >= p");
  const McInstance m = make_mc_instance(p, c);
  const FiniteGroup& g = *m.group;
  const Element a = *g.named("a");
  const std::vector<Element> as(p - 1, a);
  const cyclo::RingElem zeta = m.ring.eq_powers_witness();
  EqPowersReport r;
  for (unsigned k = 1; k + p - 1 <= c; ++k) {
    r.ks.push_back(k);
    const Element sk = *g.named("s" + std::to_string(k));
    const Element target = *g.named("s" + std::to_string(k + p - 1));
    const Element via_group = commutator(g, sk, as);
    // p zeta (w - 1)^(k-1) in the ring, then into the bottom group.
    const cyclo::RingElem r_sk = m.ring.pow(m.ring.omega_minus_one(), k - 1);
    const Element via_ring = m.embed(m.ring.scale(m.ring.mul(zeta, r_sk), p));
    if (via_group != target)
      r.violations.push_back("[s" + std::to_string(k) + ", a, ..., a] != s" + std::to_string(k + p - 1));
    if (via_ring != target)
      r.violations.push_back("p zeta s" + std::to_string(k) + " != s" + std::to_string(k + p - 1));
  }
  r.pass = r.violations.empty() && !r.ks.empty();
  return r;
}

PartBReport verify_partb_structure(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c) {
  const PartBInstance inst = make_partb_instance(p, cs, c);
  const ProductGroup& H = *inst.H;
  const FiniteGroup& G = *inst.G;
  PartBReport r;
  r.order_h = H.order();
  r.order_g = G.order();

  // G = <a, U> with U = <X_1, .., X_n, E> of index p^(n+1) in H, so
  // |H:G| = p^n and U is maximal in G.
  std::vector<Element> u_gens;
  for (const auto& n : G.generators())
    if (n.name != "a") u_gens.push_back(n.value);
  const std::uint64_t order_u = inst.degenerate ? 0 : subgroup_closure(H, u_gens).size();
  r.checks["index"] = inst.degenerate || r.order_h == ipow(p, static_cast<unsigned>(cs.size())) * r.order_g;
  r.checks["maximal_u"] = inst.degenerate || r.order_g == p * order_u;
  r.checks["a_power"] = inst.degenerate || G.power(inst.a, p) == inst.y_power;

  // gamma_k(G) is the product of the factor gammas for 2 <= k <= c.
  const auto gamma_g = lower_central_terms(G);
  std::vector<std::vector<EnumeratedSubgroup>> gamma_f;
  for (const auto& f : H.factors()) gamma_f.push_back(lower_central_terms(*f));
  bool gammas = true;
  for (unsigned k = 2; k <= c && gammas; ++k) {
    const EnumeratedSubgroup& gk = gamma_g[std::min<std::size_t>(k - 1, gamma_g.size() - 1)];
    std::uint64_t size = 1;
    std::vector<const EnumeratedSubgroup*> parts;
    for (const auto& terms : gamma_f) {
      parts.push_back(&terms[std::min<std::size_t>(k - 1, terms.size() - 1)]);
      size *= parts.back()->size();
    }
    if (size != gk.size()) {
      gammas = false;
      r.violations.push_back("|gamma_" + std::to_string(k) + "(G)| = " + std::to_string(gk.size()) +
                             " but the product of factor gammas has order " + std::to_string(size));
      break;
    }
    // Every combination of factor elements lies in gamma_k(G).
    std::vector<std::size_t> idx(parts.size(), 0);
    std::vector<Element> comp(parts.size());
    for (;;) {
      for (std::size_t i = 0; i < parts.size(); ++i) comp[i] = parts[i]->elements()[idx[i]];
      if (!gk.contains(H.combine(comp))) {
        gammas = false;
        r.violations.push_back("gamma_" + std::to_string(k) + "(G) misses a product element");
        break;
      }
      std::size_t i = 0;
      while (i < parts.size() && ++idx[i] == parts[i]->size()) idx[i++] = 0;
      if (i == parts.size()) break;
    }
  }
  r.checks["gammas"] = gammas;
  r.checks["center"] = center(G) == center(H);

  r.spectrum = spectrum(G);
  for (unsigned i = 1; i < p; ++i) r.expected_spectrum.insert(i);
  r.expected_spectrum.insert(cs.begin(), cs.end());
  r.checks["spectrum"] = r.spectrum.spectrum == r.expected_spectrum;
  r.checks["class"] = r.spectrum.nilpotence_class == c;
  for (const auto& [name, ok] : r.checks)
    if (!ok && name != "gammas") r.violations.push_back(name + " check failed");
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& kv) { return kv.second; });
  return r;
}

// ---------------------------------------------------------------------------
// Records

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::PreconditionFailed: return "precondition_failed";
    case Status::ResourceLimit: return "resource_limit";
    case Status::Error: return "error";
  }
  return "error";
}

json record_json(const CheckRecord& r, bool timings) {
  json j = {{"check", r.check},
            {"params", r.params},
            {"pass", r.status == Status::Pass},
            {"status", status_name(r.status)}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.message.empty()) j["message"] = r.message;
  j["millis"] = timings ? static_cast<std::int64_t>(r.millis + 0.5) : 0;
  return j;
}

std::string record_line(const CheckRecord& r, bool timings) {
  std::string s = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL"
                  : r.status == Status::PreconditionFailed ? "N/A " : r.status == Status::ResourceLimit ? "LIMIT"
                  : "ERROR";
  s += " " + r.check + " " + r.params.dump();
  if (!r.message.empty()) s += " -- " + r.message;
  if (timings) s += " (" + std::to_string(static_cast<std::int64_t>(r.millis + 0.5)) + " ms)";
  return s;
}

json spectrum_json(const SpectrumReport& r) {
  json w = json::object();
  for (const auto& [i, x] : r.witnesses) w[std::to_string(i)] = elem(x);
  return {{"p", r.p},
          {"class", r.nilpotence_class},
          {"spectrum", set_json(r.spectrum)},
          {"layer_orders", r.layer_orders},
          {"witnesses", w}};
}

int exit_code(const std::vector<CheckRecord>& records) {
  bool limit = false;
  for (const auto& r : records) {
    if (r.status == Status::Fail || r.status == Status::Error) return 1;
    if (r.status == Status::ResourceLimit) limit = true;
  }
  return limit ? 3 : 0;
}

namespace {

struct Outcome {
  bool pass = false;
  json witness;
  std::string message;
  std::optional<Status> status;  // overrides the pass/fail verdict
};

CheckRecord run_check(const std::string& check, json params, const std::function<Outcome()>& body) {
  CheckRecord r;
  r.check = check;
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    r.status = o.status.value_or(o.pass ? Status::Pass : Status::Fail);
    r.witness = std::move(o.witness);
    r.message = std::move(o.message);
  } catch (const PreconditionFailed& e) {
    r.status = Status::PreconditionFailed;
    r.message = e.what();
  } catch (const ResourceLimit& e) {
    r.status = Status::ResourceLimit;
    r.message = e.what();
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.message = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "; " : "") + xs[i];
  return s;
}

json desc_json(const GroupDescription& d) { return to_json(d); }

GroupDescription mc(std::uint32_t p, unsigned c) { return {McDesc{p, c}}; }
GroupDescription dc(std::uint32_t p, unsigned c) { return {DcDesc{p, c}}; }
GroupDescription cyc(std::uint32_t p, unsigned e) { return {CyclicDesc{p, e}}; }
GroupDescription homo(std::uint32_t p, unsigned k, unsigned e, unsigned s) { return {HomocyclicDesc{p, k, e, s}}; }
GroupDescription b2(std::uint32_t p, unsigned k) { return {B2Desc{p, k}}; }
GroupDescription second(std::uint32_t p, unsigned k, unsigned c) { return {SecondExampleDesc{p, k, c, std::nullopt}}; }
GroupDescription partb(std::uint32_t p, std::vector<unsigned> cs, unsigned c, bool indec) {
  return {PartBDesc{p, std::move(cs), c, indec}};
}
GroupDescription product(std::vector<GroupDescription> fs) { return {ProductDesc{std::move(fs)}}; }

GroupDescription example_k() {
  return {CentralQuotientDesc{std::make_shared<const GroupDescription>(product({dc(3, 2), cyc(3, 2)})),
                              "f0.x^3*f1.d^3"}};
}

struct CatalogEntry {
  GroupDescription desc;
  std::uint64_t order;
};

std::vector<CatalogEntry> catalog(std::uint32_t p) {
  switch (p) {
    case 2:
      return {{mc(2, 2), 8},     {mc(2, 3), 16},       {mc(2, 4), 32},
              {dc(2, 3), 32},    {dc(2, 4), 128},      {cyc(2, 1), 2},
              {cyc(2, 2), 4},    {cyc(2, 3), 8},       {homo(2, 1, 3, 0), 32},
              {partb(2, {2}, 3, true), 128}};
    case 3:
      return {{mc(3, 2), 27},  {mc(3, 3), 81},          {mc(3, 4), 243},
              {dc(3, 2), 81},  {cyc(3, 1), 3},          {cyc(3, 2), 9},
              {homo(3, 2, 1, 0), 81}, {homo(3, 1, 2, 0), 81}, {b2(3, 2), 27}};
    default:
      return {{mc(5, 2), 125}, {mc(5, 3), 625}, {b2(5, 2), 125}, {cyc(5, 1), 5},
              {cyc(5, 2), 25}, {dc(5, 2), 625}, {homo(5, 2, 1, 0), 625}};
  }
}

// Words "f<i>.name^e" naming central elements of order p of factor i.
std::vector<std::string> central_order_p_words(const FiniteGroup& f, std::size_t i) {
  std::vector<std::string> out;
  ElementSet seen;
  for (const auto& n : f.named_elements()) {
    const std::uint64_t ord = element_order(f, n.value);
    if (ord == 1) continue;
    const std::uint64_t e = ord / f.prime();
    const Element z = f.power(n.value, static_cast<std::int64_t>(e));
    if (!is_central(f, z) || !seen.insert(z).second) continue;
    out.push_back("f" + std::to_string(i) + "." + n.name + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  return out;
}

}  // namespace

std::vector<GroupDescription> random_recipes(std::uint64_t seed, std::size_t count,
                                             std::uint64_t max_order) {
  std::mt19937_64 rng(seed);
  constexpr std::uint32_t primes[] = {2, 3, 5};
  // Factors must be buildable under the enumeration bound.
  max_order = std::min(max_order, current_limits().max_order);
  std::vector<GroupDescription> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    const std::uint32_t p = primes[rng() % 3];
    auto cat = catalog(p);
    std::erase_if(cat, [&](const CatalogEntry& e) { return e.order > max_order; });
    if (cat.empty()) continue;
    const std::size_t nf = 2 + rng() % 2;
    std::vector<GroupDescription> fs;
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < nf; ++i) {
      const auto& e = cat[rng() % cat.size()];
      fs.push_back(e.desc);
      order *= e.order;
    }
    if (order > max_order) continue;
    const bool quotient = rng() % 2 == 1;
    GroupDescription prod = product(fs);
    if (!quotient) {
      out.push_back(std::move(prod));
      continue;
    }
    const std::size_t i = rng() % nf;
    const std::size_t j = (i + 1 + rng() % (nf - 1)) % nf;
    const auto wi = central_order_p_words(*build_from_description(fs[i]), i);
    const auto wj = central_order_p_words(*build_from_description(fs[j]), j);
    if (wi.empty() || wj.empty()) {
      out.push_back(std::move(prod));
      continue;
    }
    std::string a = wi[rng() % wi.size()], b = wj[rng() % wj.size()];
    if (j < i) std::swap(a, b);
    out.push_back({CentralQuotientDesc{std::make_shared<const GroupDescription>(std::move(prod)),
                                       a + "*" + b}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The suite

namespace {

using Sink = std::vector<CheckRecord>;

Outcome spectrum_outcome(const SpectrumReport& s, const std::set<unsigned>& want, unsigned want_class,
                         std::uint64_t want_order = 0) {
  Outcome o;
  o.witness = spectrum_json(s);
  const std::uint64_t order = s.layer_orders.back();
  o.pass = s.spectrum == want && s.nilpotence_class == want_class && (want_order == 0 || order == want_order);
  if (!o.pass)
    o.message = "got order " + std::to_string(order) + ", class " + std::to_string(s.nilpotence_class) +
                ", spectrum " + set_string(s.spectrum) + "; expected class " + std::to_string(want_class) +
                ", spectrum " + set_string(want);
  return o;
}

void suite_dc(Sink& out) {
  for (auto [p, c] : {std::pair{3u, 2u}, {3, 3}, {5, 2}, {2, 3}, {2, 4}})
    out.push_back(run_check("dc_spectrum", desc_json(dc(p, c)), [p = p, c = c] {
      const std::uint64_t order = p == 2 ? ipow(2, 2 * c - 1) : ipow(p, 2 * c);
      return spectrum_outcome(spectrum(*make_Dc(p, c)), {1}, c, order);
    }));
}

void suite_mc(Sink& out) {
  for (auto [p, c] : {std::pair{2u, 2u}, {2, 3}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}})
    out.push_back(run_check("mc_spectrum", desc_json(mc(p, c)), [p = p, c = c] {
      std::set<unsigned> want{c};
      for (unsigned i = 1; i <= std::min(c - 1, p - 1); ++i) want.insert(i);
      return spectrum_outcome(spectrum(*make_Mc(p, c)), want, c, ipow(p, c + 1));
    }));
}

std::vector<GroupDescription> family_instances() {
  std::vector<GroupDescription> v;
  for (auto [p, c] : {std::pair{3u, 2u}, {3, 3}, {5, 2}, {2, 3}, {2, 4}}) v.push_back(dc(p, c));
  for (auto [p, c] : {std::pair{2u, 2u}, {2, 3}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}})
    v.push_back(mc(p, c));
  v.push_back(homo(3, 2, 1, 0));
  v.push_back(homo(3, 2, 2, 0));
  v.push_back(homo(3, 2, 2, 1));
  v.push_back(homo(5, 3, 1, 0));
  v.push_back(b2(3, 2));
  v.push_back(b2(5, 2));
  v.push_back(b2(5, 3));
  v.push_back(second(3, 2, 2));
  v.push_back(second(3, 2, 3));
  for (bool indec : {false, true}) {
    v.push_back(partb(2, {2}, 3, indec));
    v.push_back(partb(2, {2, 3}, 4, indec));
    v.push_back(partb(3, {3}, 3, indec));
    v.push_back(partb(3, {3}, 4, indec));
  }
  v.push_back(example_k());
  return v;
}

Outcome theorem_outcome(const FiniteGroup& g) {
  const TheoremPart1Report r = verify_theorem_part1(g);
  Outcome o;
  o.pass = r.pass;
  o.witness = spectrum_json(r.spectrum);
  o.message = join(r.violations);
  return o;
}

void suite_theorem(Sink& out, std::uint64_t seed, std::size_t n_random) {
  for (const auto& d : family_instances())
    out.push_back(run_check("theorem_part1", desc_json(d),
                            [&d] { return theorem_outcome(*build_from_description(d)); }));
  const auto recipes = random_recipes(seed, n_random, 200'000);
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    json params = {{"seed", seed}, {"recipe", i}, {"group", desc_json(recipes[i])}};
    out.push_back(run_check("theorem_part1", params,
                            [&] { return theorem_outcome(*build_from_description(recipes[i])); }));
  }
  if (recipes.size() < n_random)
    out.push_back(run_check("theorem_part1", {{"seed", seed}, {"recipes", recipes.size()}}, [] {
      return Outcome{false, nullptr, "too few random recipes were generated"};
    }));
}

std::vector<GroupDescription> lemma2_instances() {
  return {mc(3, 2), mc(3, 3), b2(3, 2), b2(5, 2), second(3, 2, 2)};
}

void suite_lemma2(Sink& out) {
  for (const auto& d : lemma2_instances())
    out.push_back(run_check("lemma2", desc_json(d), [&d] {
      const Lemma2Report r = verify_lemma2(*build_from_description(d));
      Outcome o;
      o.pass = r.pass && r.witness.has_value();
      o.witness = {{"applicable", r.applicable}};
      if (r.witness) o.witness["t"] = elem(*r.witness);
      if (!o.pass) o.message = "no element of order p in Z_2 \\ Z_1";
      return o;
    }));
  out.push_back(run_check("lemma2", desc_json(dc(3, 2)), [] {
    const Lemma2Report r = verify_lemma2(*make_Dc(3, 2));
    return Outcome{!r.applicable, {{"applicable", r.applicable}}, r.applicable ? "expected not applicable" : ""};
  }));
}

void suite_question(Sink& out) {
  for (const auto& d : lemma2_instances())
    out.push_back(run_check("question", desc_json(d), [&d] {
      const auto w = find_question_witness(*build_from_description(d));
      Outcome o;
      o.pass = w.has_value();
      if (w) o.witness = {{"x", elem(w->x)}, {"y", elem(w->y)}, {"from_construction", w->from_construction}};
      else o.message = "no witness found";
      return o;
    }));
  for (unsigned c : {2u, 3u, 4u})
    out.push_back(run_check("question", desc_json(mc(2, c)), [c] {
      const auto w = find_question_witness(*make_Mc(2, c));
      Outcome o;
      o.pass = !w.has_value();
      o.witness = {{"found", w.has_value()}};
      if (w) o.message = "unexpected witness " + w->x.to_string() + ", " + w->y.to_string();
      return o;
    }));
}

void suite_zeta(Sink& out) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    out.push_back(run_check("zeta", {{"p", p}}, [p] {
      const ZetaReport r = verify_zeta(p);
      return Outcome{r.pass, {{"zeta", r.zeta.coeffs}}, r.pass ? "" : "(w-1)^(p-1) != p zeta or zeta not a unit"};
    }));
}

void suite_eq_powers(Sink& out) {
  for (auto [p, c] : {std::pair{3u, 4u}, {5, 5}, {2, 3}})
    out.push_back(run_check("eq_powers", {{"p", p}, {"c", c}}, [p = p, c = c] {
      const EqPowersReport r = verify_eq_powers(p, c);
      return Outcome{r.pass, {{"k", r.ks}}, join(r.violations)};
    }));
}

void suite_lemma_fact(Sink& out) {
  for (auto [p, c] : {std::pair{2u, 3u}, {3, 3}, {3, 4}, {5, 2}})
    out.push_back(run_check("lemma_fact", {{"p", p}, {"c", c}}, [p = p, c = c] {
      const LemmaFactReport r = verify_lemma_fact(p, c);
      Outcome o{r.pass, {{"checked", r.checked}}, ""};
      if (r.counterexample) o.message = "element " + r.counterexample->to_string() + " has order != p";
      return o;
    }));
}

void suite_product(Sink& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  constexpr std::uint32_t primes[] = {2, 3, 5};
  std::size_t made = 0;
  for (std::size_t attempt = 0; made < 20 && attempt < 2000; ++attempt) {
    const std::uint32_t p = primes[rng() % 3];
    const auto cat = catalog(p);
    const auto& a = cat[rng() % cat.size()];
    const auto& b = cat[rng() % cat.size()];
    if (a.order * b.order > 200'000) continue;
    ++made;
    json params = {{"seed", seed}, {"pair", made - 1}, {"first", desc_json(a.desc)}, {"second", desc_json(b.desc)}};
    out.push_back(run_check("product_spectrum", params, [&a, &b] {
      const ProductSpectrumReport r =
          verify_product_spectrum(build_from_description(a.desc), build_from_description(b.desc));
      Outcome o;
      o.pass = r.pass;
      o.witness = {{"first", set_json(r.first.spectrum)},
                   {"second", set_json(r.second.spectrum)},
                   {"product", set_json(r.product.spectrum)},
                   {"classes", {r.first.nilpotence_class, r.second.nilpotence_class, r.product.nilpotence_class}}};
      if (!r.pass) o.message = "union or class law violated";
      return o;
    }));
  }
}

Outcome prop_same_outcome(const PropSameReport& r) {
  Outcome o;
  o.pass = r.pass;
  o.witness = {{"class", r.quotient.nilpotence_class},
               {"spectrum", set_json(r.quotient.spectrum)},
               {"product_spectrum", set_json(r.product.spectrum)},
               {"sublemma_checked", r.sublemma_checked},
               {"sublemma_exhaustive", r.sublemma_exhaustive}};
  o.message = join(r.violations);
  return o;
}

void suite_prop_same(Sink& out, std::uint64_t seed) {
  struct Case {
    GroupDescription g1, g2;
    std::string z1, z2;
  };
  const std::vector<Case> cases = {
      {dc(3, 3), b2(3, 2), "x^9", "d"},
      {dc(3, 2), b2(3, 2), "x^3", "d"},
      {mc(3, 3), mc(3, 2), "s3", "s2"},
      {dc(5, 2), b2(5, 2), "x^5", "d"},
      {mc(3, 4), b2(3, 2), "s4", "d"},
  };
  for (const auto& cs : cases) {
    json params = {{"first", desc_json(cs.g1)}, {"second", desc_json(cs.g2)}, {"z1", cs.z1}, {"z2", cs.z2}};
    out.push_back(run_check("prop_same", params, [&cs, seed] {
      auto g1 = build_from_description(cs.g1), g2 = build_from_description(cs.g2);
      const PropSameReport r = verify_prop_same(g1, g2, evaluate_word(*g1, cs.z1), evaluate_word(*g2, cs.z2), seed);
      Outcome o = prop_same_outcome(r);
      // Symmetry: swapping the factors gives the same verdict.
      const PropSameReport s = verify_prop_same(g2, g1, evaluate_word(*g2, cs.z2), evaluate_word(*g1, cs.z1), seed);
      if (s.pass != r.pass || s.quotient.spectrum != r.quotient.spectrum) {
        o.pass = false;
        o.message += "swapped factors give a different verdict";
      }
      return o;
    }));
  }
}

void suite_example_k(Sink& out) {
  out.push_back(run_check("example_k", desc_json(example_k()), [] {
    auto d2 = make_Dc(3, 2);
    auto c9 = make_cyclic(3, 2);
    const Element z1 = d2->power(*d2->named("x"), 3), z2 = c9->power(*c9->named("d"), 3);
    auto k = central_quotient_diagonal(d2, c9, z1, z2);
    const SpectrumReport sk = spectrum(*k);
    const SpectrumReport sh = spectrum(*ProductGroup::make({d2, c9}));
    bool guarded = false;
    try {
      verify_prop_same(d2, c9, z1, z2);
    } catch (const PreconditionFailed&) {
      guarded = true;
    }
    Outcome o;
    o.pass = guarded && sk.spectrum == std::set<unsigned>{1, 2} && sh.spectrum == std::set<unsigned>{1};
    o.witness = {{"K", spectrum_json(sk)}, {"H", spectrum_json(sh)}, {"precondition_failed", guarded}};
    if (!o.pass) o.message = "K spectrum " + set_string(sk.spectrum) + ", H spectrum " + set_string(sh.spectrum);
    return o;
  }));
}

void suite_first_example(Sink& out) {
  struct Case {
    unsigned p, k, e, s, cls;
    std::set<unsigned> spec;
  };
  const std::vector<Case> cases = {
      {3, 2, 1, 0, 2, {1, 2}}, {3, 2, 2, 0, 4, {1, 2}}, {3, 2, 2, 1, 3, {1, 2}}, {5, 3, 1, 0, 3, {1, 2, 3}}};
  for (const auto& cs : cases)
    out.push_back(run_check("first_example", desc_json(homo(cs.p, cs.k, cs.e, cs.s)), [&cs] {
      return spectrum_outcome(spectrum(*make_homocyclic(cs.p, cs.k, cs.e, cs.s)), cs.spec, cs.cls);
    }));
}

void suite_second_example(Sink& out) {
  out.push_back(run_check("second_example", desc_json(second(3, 2, 2)), [] {
    auto q = make_second_example(3, 2, 2);
    Outcome o = spectrum_outcome(spectrum(*q), {1, 2}, 2, 729);
    const auto split = direct_factor_search(*q);
    o.witness["decomposable"] = split.has_value();
    if (split) {
      o.pass = false;
      o.message += "found a direct decomposition";
    }
    return o;
  }));
  out.push_back(run_check("second_example", desc_json(second(3, 2, 3)), [] {
    return spectrum_outcome(spectrum(*make_second_example(3, 2, 3)), {1, 2}, 3, 6561);
  }));
}

void suite_partb(Sink& out) {
  struct Case {
    std::uint32_t p;
    std::vector<unsigned> cs;
    unsigned c;
  };
  const std::vector<Case> cases = {{2, {2}, 3}, {2, {2, 3}, 4}, {3, {3}, 3}, {3, {3}, 4}};
  for (const auto& cs : cases)
    out.push_back(run_check("partb", desc_json(partb(cs.p, cs.cs, cs.c, true)), [&cs] {
      const PartBReport r = verify_partb_structure(cs.p, cs.cs, cs.c);
      Outcome o;
      o.pass = r.pass;
      o.witness = {{"checks", r.checks},
                   {"order_H", r.order_h},
                   {"order_G", r.order_g},
                   {"class", r.spectrum.nilpotence_class},
                   {"spectrum", set_json(r.spectrum.spectrum)}};
      o.message = join(r.violations);
      return o;
    }));
  out.push_back(run_check("partb_decompose", desc_json(partb(2, {2}, 3, false)), [] {
    const auto split = direct_factor_search(*make_partb_decomposable(2, {2}, 3));
    Outcome o{split.has_value(), nullptr, split ? "" : "no split found"};
    if (split) o.witness = {{"orders", {split->first.size(), split->second.size()}}};
    return o;
  }));
  out.push_back(run_check("partb_decompose", desc_json(partb(2, {2}, 3, true)), [] {
    auto g = make_partb_indecomposable(2, {2}, 3);
    const auto split = direct_factor_search(*g);
    return Outcome{!split && g->order() == 128, {{"order", g->order()}, {"decomposable", split.has_value()}},
                   split ? "found a direct decomposition" : ""};
  }));
}

void suite_regularity(Sink& out, std::uint64_t seed) {
  const std::vector<GroupDescription> cases = {mc(3, 2), b2(5, 4), product({cyc(3, 1), cyc(3, 1), cyc(3, 1)}),
                                               b2(5, 3), mc(5, 3)};
  for (const auto& d : cases)
    out.push_back(run_check("regularity", desc_json(d), [&d, seed] {
      const RegularityReport r = verify_regularity_power(*build_from_description(d), seed);
      Outcome o{r.pass, {{"pairs", r.pairs_checked}, {"exhaustive", r.exhaustive}}, ""};
      if (r.counterexample)
        o.message = "(x^-1 x^y)^p != 1 for x = " + r.counterexample->first.to_string() +
                    ", y = " + r.counterexample->second.to_string();
      return o;
    }));
}

// Insert <z> for the least central z of order p below Z_1 when |Z_1| > p.
std::optional<CentralSeriesChain> refine_upper(const FiniteGroup& g, const CentralSeriesChain& ucs) {
  if (ucs.length() == 0 || ucs[1].size() <= g.prime()) return std::nullopt;
  const Element id = g.identity();
  for (const auto& z : ucs[1].elements()) {
    if (z == id || g.power(z, g.prime()) != id) continue;
    const Element zs[] = {z};
    std::vector<EnumeratedSubgroup> terms{ucs[0], subgroup_closure(g, zs)};
    for (std::size_t i = 1; i < ucs.terms().size(); ++i) terms.push_back(ucs[i]);
    return CentralSeriesChain(std::move(terms), ChainKind::User);
  }
  return std::nullopt;
}

void suite_ucs(Sink& out) {
  std::vector<GroupDescription> groups;
  for (auto [p, c] : {std::pair{3u, 2u}, {3, 3}, {5, 2}, {2, 3}, {2, 4}}) groups.push_back(dc(p, c));
  for (auto [p, c] : {std::pair{2u, 2u}, {2, 3}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}})
    groups.push_back(mc(p, c));
  for (auto d : {homo(3, 2, 1, 0), homo(3, 2, 2, 1), b2(3, 2), b2(5, 2), second(3, 2, 2),
                 partb(2, {2}, 3, false), partb(2, {2}, 3, true), partb(3, {3}, 3, true), example_k()})
    groups.push_back(d);

  for (const auto& d : groups)
    out.push_back(run_check("ucs_characterization", desc_json(d), [&d] {
      auto g = build_from_description(d);
      if (g->order() > 729) throw PreconditionFailed("order above 3^6");
      const CentralSeriesChain ucs = upper_central_series(*g);
      std::vector<std::pair<std::string, CentralSeriesChain>> chains{{"upper", ucs},
                                                                     {"lower_reversed", lower_central_series(*g)}};
      if (auto r = refine_upper(*g, ucs)) chains.emplace_back("refined", std::move(*r));
      Outcome o{true, json::object(), ""};
      for (const auto& [name, chain] : chains) {
        if (!is_central_series(*g, chain)) {
          o.pass = false;
          o.message += name + " is not a central series; ";
          continue;
        }
        const bool sat = satisfies_ucs_characterization(*g, chain);
        const bool equal = chain == ucs;
        o.witness[name] = {{"satisfies", sat}, {"equals_upper", equal}};
        if (sat != equal) {
          o.pass = false;
          o.message += name + ": characterization disagrees with equality; ";
        }
      }
      return o;
    }));

  // The refined series 1 < <x^3> < Z < G of D_2(3) is central but not upper.
  out.push_back(run_check("ucs_characterization", {{"group", desc_json(dc(3, 2))}, {"chain", "1 < <x^3> < Z < G"}}, [] {
    auto g = make_Dc(3, 2);
    const Element x3[] = {g->power(*g->named("x"), 3)};
    CentralSeriesChain chain({trivial_subgroup(*g), subgroup_closure(*g, x3), center(*g), whole_group(*g)},
                             ChainKind::User);
    const bool central = is_central_series(*g, chain);
    const bool sat = central && satisfies_ucs_characterization(*g, chain);
    return Outcome{central && !sat, {{"central", central}, {"satisfies", sat}}, ""};
  }));
  out.push_back(run_check("ucs_characterization", {{"group", desc_json(dc(3, 2))}, {"chain", "1 < <x> < G"}}, [] {
    auto g = make_Dc(3, 2);
    const Element x[] = {*g->named("x")};
    CentralSeriesChain chain({trivial_subgroup(*g), subgroup_closure(*g, x), whole_group(*g)}, ChainKind::User);
    const bool central = is_central_series(*g, chain);
    return Outcome{!central, {{"central", central}}, central ? "accepted a non-central series" : ""};
  }));
}

void suite_lcs_layers(Sink& out) {
  out.push_back(run_check("lcs_layers", desc_json(dc(3, 3)), [] {
    auto g = make_Dc(3, 3);
    const auto gamma = lower_central_terms(*g);  // gamma_1 .. gamma_(c+1)
    const unsigned c = static_cast<unsigned>(gamma.size() - 1);
    std::map<unsigned, std::uint64_t> counts;
    for (const auto& x : order_p_elements(*g)) {
      unsigned k = 1;
      while (k < c && gamma[k].contains(x)) ++k;
      ++counts[k];
    }
    Outcome o{true, json::object(), ""};
    for (const auto& [k, n] : counts) {
      o.witness[std::to_string(k)] = n;
      if (k != 1 && k != c) {
        o.pass = false;
        o.message = "order-p element in lower layer " + std::to_string(k);
      }
    }
    return o;
  }));
}

using SuiteFn = std::function<void(Sink&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"dc_spectrum", [](Sink& s, const SuiteOptions&) { suite_dc(s); }},
      {"eq_powers", [](Sink& s, const SuiteOptions&) { suite_eq_powers(s); }},
      {"example_k", [](Sink& s, const SuiteOptions&) { suite_example_k(s); }},
      {"first_example", [](Sink& s, const SuiteOptions&) { suite_first_example(s); }},
      {"lcs_layers", [](Sink& s, const SuiteOptions&) { suite_lcs_layers(s); }},
      {"lemma2", [](Sink& s, const SuiteOptions&) { suite_lemma2(s); }},
      {"lemma_fact", [](Sink& s, const SuiteOptions&) { suite_lemma_fact(s); }},
      {"mc_spectrum", [](Sink& s, const SuiteOptions&) { suite_mc(s); }},
      {"partb", [](Sink& s, const SuiteOptions&) { suite_partb(s); }},
      {"product_spectrum", [](Sink& s, const SuiteOptions& o) { suite_product(s, o.seed); }},
      {"prop_same", [](Sink& s, const SuiteOptions& o) { suite_prop_same(s, o.seed); }},
      {"question", [](Sink& s, const SuiteOptions&) { suite_question(s); }},
      {"regularity", [](Sink& s, const SuiteOptions& o) { suite_regularity(s, o.seed); }},
      {"second_example", [](Sink& s, const SuiteOptions&) { suite_second_example(s); }},
      {"theorem_part1", [](Sink& s, const SuiteOptions& o) { suite_theorem(s, o.seed, o.random_recipes); }},
      {"ucs_characterization", [](Sink& s, const SuiteOptions&) { suite_ucs(s); }},
      {"zeta", [](Sink& s, const SuiteOptions&) { suite_zeta(s); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

std::vector<CheckRecord> run_paper_suite(const SuiteOptions& options) {
  for (const auto& f : options.filter) {
    const auto names = suite_check_names();
    if (std::find(names.begin(), names.end(), f) == names.end())
      throw BadParameters("unknown check '" + f + "'");
  }
  std::vector<CheckRecord> out;
  for (const auto& [name, fn] : suite_table()) {
    if (!options.filter.empty() &&
        std::find(options.filter.begin(), options.filter.end(), name) == options.filter.end())
      continue;
    // The partb runner also emits partb_decompose records.
    Sink sink;
    fn(sink, options);
    for (auto& r : sink)
      if (options.filter.empty() ||
          std::find(options.filter.begin(), options.filter.end(), r.check) != options.filter.end())
        out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.check < b.check; });
  return out;
}

// ---------------------------------------------------------------------------
// Single-group checks

std::vector<std::string> description_check_names() {
  return {"theorem_part1", "lemma2", "question", "regularity", "prop_same", "ucs_characterization"};
}

std::vector<CheckRecord> verify_description(const GroupDescription& d, const std::vector<std::string>& checks,
                                            std::uint64_t seed) {
  const auto known = description_check_names();
  for (const auto& c : checks)
    if (std::find(known.begin(), known.end(), c) == known.end()) throw BadParameters("unknown check '" + c + "'");
  GroupPtr g = build_from_description(d);
  const json params = to_json(d);
  std::vector<CheckRecord> out;
  for (const auto& c : checks) {
    if (c == "theorem_part1") {
      out.push_back(run_check(c, params, [&] { return theorem_outcome(*g); }));
    } else if (c == "lemma2") {
      out.push_back(run_check(c, params, [&] {
        const Lemma2Report r = verify_lemma2(*g);
        if (!r.applicable) throw PreconditionFailed("needs odd p, nonabelian, generated by elements of order p");
        Outcome o{r.pass, nullptr, r.pass ? "" : "no element of order p in Z_2 \\ Z_1"};
        if (r.witness) o.witness = {{"t", elem(*r.witness)}};
        return o;
      }));
    } else if (c == "question") {
      out.push_back(run_check(c, params, [&] {
        const auto w = find_question_witness(*g);
        Outcome o{true, {{"found", w.has_value()}}, ""};
        if (w) o.witness = {{"found", true}, {"x", elem(w->x)}, {"y", elem(w->y)}};
        // For odd p a witness must exist; for p = 2 either answer is a finding.
        if (!w && g->prime() % 2 == 1) {
          if (!generated_by_order_p(*g))
            throw PreconditionFailed("no witness, and G is not generated by elements of order p");
          o.pass = false;
          o.message = "no witness found for odd p";
        }
        return o;
      }));
    } else if (c == "regularity") {
      out.push_back(run_check(c, params, [&] {
        const RegularityReport r = verify_regularity_power(*g, seed);
        Outcome o{r.pass, {{"pairs", r.pairs_checked}, {"exhaustive", r.exhaustive}}, ""};
        if (r.counterexample)
          o.message = "counterexample " + r.counterexample->first.to_string() + ", " +
                      r.counterexample->second.to_string();
        return o;
      }));
    } else if (c == "prop_same") {
      out.push_back(run_check(c, params, [&]() -> Outcome {
        GroupPtr g1, g2;
        Element z1, z2;
        if (auto* se = std::get_if<SecondExampleDesc>(&d.node)) {
          g1 = make_Dc(se->p, se->c);
          auto b = make_B2(se->p, se->k);
          g2 = b;
          z1 = g1->power(*g1->named("x"), static_cast<std::int64_t>(ipow(se->p, se->c - 1)));
          z2 = se->d ? evaluate_word(*b, *se->d) : *b->named("d");
        } else if (auto* cq = std::get_if<CentralQuotientDesc>(&d.node)) {
          auto* pd = std::get_if<ProductDesc>(&cq->group->node);
          if (!pd || pd->factors.size() != 2)
            throw PreconditionFailed("the group is not a quotient of a product of two factors");
          g1 = build_from_description(pd->factors[0]);
          g2 = build_from_description(pd->factors[1]);
          auto prod = ProductGroup::make({g1, g2});
          const Element z = evaluate_word(*prod, cq->word);
          z1 = prod->component(z, 0);
          z2 = prod->component(z, 1);
        } else {
          throw PreconditionFailed("the group is not a diagonal central quotient");
        }
        try {
          return prop_same_outcome(verify_prop_same(g1, g2, z1, z2, seed));
        } catch (const PreconditionFailed& e) {
          // Report what the unguarded quotient does.
          const SpectrumReport sq = spectrum(*g);
          const SpectrumReport sp = spectrum(*ProductGroup::make({g1, g2}));
          return Outcome{false,
                         {{"quotient", spectrum_json(sq)}, {"product", spectrum_json(sp)}},
                         std::string(e.what()) + "; quotient spectrum " + set_string(sq.spectrum) +
                             ", product spectrum " + set_string(sp.spectrum),
                         Status::PreconditionFailed};
        }
      }));
    } else if (c == "ucs_characterization") {
      out.push_back(run_check(c, params, [&] {
        const CentralSeriesChain ucs = upper_central_series(*g);
        const CentralSeriesChain lcs = lower_central_series(*g);
        const bool a = satisfies_ucs_characterization(*g, ucs);
        const bool b = satisfies_ucs_characterization(*g, lcs);
        const bool eq = lcs == ucs;
        return Outcome{a && b == eq,
                       {{"upper", a}, {"lower_reversed", b}, {"lower_equals_upper", eq}},
                       a && b == eq ? "" : "characterization disagrees with equality"};
      }));
    }
  }
  return out;
}

}  // namespace pgs
