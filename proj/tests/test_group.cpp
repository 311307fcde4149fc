#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pgs/constructions.hpp"
#include "pgs/errors.hpp"
#include "pgs/limits.hpp"
#include "pgs/series.hpp"

using namespace pgs;

namespace {

Element named(const FiniteGroup& g, const std::string& n) {
  auto e = g.named(n);
  REQUIRE(e.has_value());
  return *e;
}

// x^a y^b in <x, y : [x, y] = x^p>, stored as (a mod p^c, b mod ord(y)).
struct Metacyclic {
  std::int64_t p, xm, ym;
  using E = std::array<std::int64_t, 2>;
  E mul(const E& u, const E& v) const {
    // y^b x^c = x^(c (1+p)^(-b)) y^b
    std::int64_t inv = 1;
    for (std::int64_t k = 1; k < xm; ++k)
      if ((k * (1 + p)) % xm == 1) inv = k;
    std::int64_t t = 1;
    for (std::int64_t i = 0; i < u[1]; ++i) t = t * inv % xm;
    return {(u[0] + v[0] * t) % xm, (u[1] + v[1]) % ym};
  }
};

using Perm = std::vector<int>;
Perm compose(const Perm& a, const Perm& b) {  // first a, then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

using Mat3 = std::array<std::int64_t, 9>;
Mat3 matmul(const Mat3& a, const Mat3& b, std::int64_t p) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
      c[3 * i + j] = s % p;
    }
  return c;
}

void check_axioms(const FiniteGroup& g, std::uint64_t seed) {
  const auto all = oracle::elements(g);
  const ElementSet set(all.begin(), all.end());
  std::mt19937_64 rng(seed);
  const Element e = g.identity();
  for (int i = 0; i < 1000; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(set.contains(g.multiply(a, b)));
    CHECK(g.multiply(a, e) == a);
    CHECK(g.multiply(e, a) == a);
    CHECK(g.multiply(a, g.invert(a)) == e);
  }
}

}  // namespace

TEST_SUITE("group_core") {

TEST_CASE("model isomorphisms") {
  for (auto [p, c] : {std::pair{3, 2}, {2, 3}, {5, 2}, {3, 3}, {2, 4}}) {
    auto g = make_Dc(p, c);
    std::int64_t xm = oracle::ipow(p, c), ym = p == 2 ? xm / 2 : xm;
    Metacyclic m{p, xm, ym};
    CAPTURE(p);
    CAPTURE(c);
    CHECK(g->generators()[0].name == "x");
    CHECK(oracle::isomorphic_on_generators<Metacyclic::E>(*g, {{1, 0}, {0, 1}}, {0, 0},
                                                            [&](auto& a, auto& b) { return m.mul(a, b); }));
  }
  // M_c(2) is dihedral of order 2^(c+1): a a reflection, s1 a rotation.
  for (unsigned c = 2; c <= 5; ++c) {
    const int n = 1 << c;
    Perm id(n), rot(n), ref(n);
    for (int i = 0; i < n; ++i) id[i] = i, rot[i] = (i + 1) % n, ref[i] = (n - i) % n;
    auto g = make_Mc(2, c);
    CHECK(oracle::isomorphic_on_generators<Perm>(*g, {ref, rot}, id, compose));
  }
  // Exponent-p class-2 groups on two generators are Heisenberg groups.
  for (std::int64_t p : {3, 5}) {
    Mat3 id{1, 0, 0, 0, 1, 0, 0, 0, 1}, u{1, 1, 0, 0, 1, 0, 0, 0, 1}, v{1, 0, 0, 0, 1, 1, 0, 0, 1};
    auto mul = [p](const Mat3& a, const Mat3& b) { return matmul(a, b, p); };
    CHECK(oracle::isomorphic_on_generators<Mat3>(*make_Mc(p, 2), {u, v}, id, mul));
    CHECK(oracle::isomorphic_on_generators<Mat3>(*make_B2(p, 2), {u, v}, id, mul));
  }
}

TEST_CASE("group axioms") {
  std::uint64_t seed = 1;
  for (GroupPtr g : std::vector<GroupPtr>{make_Dc(3, 2), make_Mc(3, 4), make_B2(5, 3), make_homocyclic(3, 2, 1, 0),
                                          make_second_example(3, 2, 2),
                                          direct_product({make_Mc(2, 3), make_Dc(2, 3)})})
    check_axioms(*g, seed++);
}

TEST_CASE("element_order") {
  auto d = make_Dc(3, 2);
  CHECK(element_order(*d, d->identity()) == 1);
  CHECK(element_order(*d, named(*d, "x")) == 9);
  auto m = make_Mc(3, 3);
  CHECK(element_order(*m, named(*m, "s1")) == 9);
  for (GroupPtr g : std::vector<GroupPtr>{make_Dc(3, 3), make_Mc(5, 3), make_B2(3, 2)})
    for (const auto& x : oracle::elements(*g)) {
      const auto o = element_order(*g, x);
      CHECK(o == oracle::naive_order(*g, x));
      CHECK(g->order() % o == 0);
      if (o > 1) CHECK(element_order(*g, g->power(x, g->prime())) == o / g->prime());
    }
}

TEST_CASE("commutator") {
  auto d = make_Dc(3, 2);
  const Element x = named(*d, "x"), y = named(*d, "y");
  CHECK(commutator(*d, x, x).is_zero());
  CHECK(commutator(*d, x, y) == d->power(x, 3));
  CHECK(d->multiply(x, commutator(*d, x, y)) == d->conjugate(x, y));
  auto m = make_Mc(3, 3);
  CHECK(commutator(*m, named(*m, "s1"), named(*m, "a")) == named(*m, "s2"));
  const std::array<Element, 2> aa{named(*m, "a"), named(*m, "a")};
  CHECK(commutator(*m, named(*m, "s1"), aa) == named(*m, "s3"));
}

TEST_CASE("subgroup_closure and enumeration") {
  auto d2 = make_Dc(3, 2);
  CHECK(subgroup_closure(*d2, {}).size() == 1);
  const std::array<Element, 1> x{named(*d2, "x")};
  CHECK(subgroup_closure(*d2, x).size() == 9);

  auto m3 = make_Mc(3, 3);
  const std::array<Element, 2> s23{named(*m3, "s2"), named(*m3, "s3")};
  const auto z2 = subgroup_closure(*m3, s23);
  CHECK(z2.size() == 9);
  CHECK(z2 == upper_central_series(*m3)[2]);
  CHECK(oracle::as_set(z2) == oracle::naive_closure(*m3, {s23.begin(), s23.end()}));

  CHECK(enumerate_group(*make_Mc(3, 2)).size() == 27);
  CHECK(enumerate_group(*d2).size() == 81);
  CHECK(enumerate_group(*make_cyclic(3, 0)).size() == 1);

  ScopedLimits lim({50, 20000});
  CHECK_THROWS_AS(make_Dc(3, 2)->order(), ResourceLimit);
}

TEST_CASE("center and centralizer") {
  CHECK(center(*make_cyclic(5, 2)).size() == 25);
  CHECK(center(*make_Dc(3, 2)).size() == 9);
  CHECK(center(*make_Mc(3, 3)).size() == 3);
  for (GroupPtr g : std::vector<GroupPtr>{make_Dc(2, 3), make_Mc(3, 4), make_B2(3, 2), make_second_example(3, 2, 2)})
    CHECK(oracle::as_set(center(*g)) == oracle::naive_center(*g));
  auto d = make_Dc(3, 2);
  const std::array<Element, 1> x{named(*d, "x")};
  const auto cx = centralizer(*d, x);
  for (const auto& h : oracle::elements(*d))
    CHECK(cx.contains(h) == (d->multiply(h, x[0]) == d->multiply(x[0], h)));
}

TEST_CASE("quotient_group") {
  auto m3 = make_Mc(3, 3);
  auto triv = quotient_group(m3, trivial_subgroup(*m3));
  CHECK(triv->order() == 81);
  auto q = quotient_group(m3, center(*m3));
  CHECK(q->order() == 27);
  CHECK(nilpotence_class(*q) == 2);

  auto d8 = make_Mc(2, 2);
  auto v4 = quotient_group(d8, center(*d8));
  CHECK(v4->order() == 4);
  for (const auto& x : oracle::elements(*v4)) CHECK(v4->multiply(x, x).is_zero());

  auto d = make_Dc(3, 2);
  const std::array<Element, 1> y{named(*d, "y")};
  CHECK_THROWS_AS(quotient_group(d, subgroup_closure(*d, y)), NotNormal);

  // the representative map is a homomorphism
  for (GroupPtr g : std::vector<GroupPtr>{make_Dc(3, 3), make_Mc(3, 5), make_B2(3, 2)}) {
    const auto n = lower_central_terms(*g)[1];
    auto qg = QuotientGroup::make(g, n);
    CHECK(qg->order() * n.size() == g->order());
    const auto all = oracle::elements(*g);
    for (const auto& a : all)
      for (std::size_t j = 0; j < all.size(); j += 7) {
        const auto& b = all[j];
        CHECK(qg->multiply(qg->project(a), qg->project(b)) == qg->project(g->multiply(a, b)));
      }
  }
}

TEST_CASE("direct_product") {
  auto d2 = make_Dc(3, 2);
  auto c9 = make_cyclic(3, 2);
  auto dc = direct_product({d2, c9});
  CHECK(dc->order() == 81 * 9);
  CHECK(dc->generators()[0].name == "f0.x");

  auto m2 = make_Mc(3, 2);
  auto mm = ProductGroup::make({m2, m2});
  const auto z = center(*mm);
  CHECK(z.size() == 9);
  for (const auto& e : z.elements()) {
    CHECK(is_central(*m2, mm->component(e, 0)));
    CHECK(is_central(*m2, mm->component(e, 1)));
  }
  CHECK(nilpotence_class(*direct_product({make_Mc(3, 3), d2})) == 3);
}

TEST_CASE("is_pth_power") {
  auto d2 = make_Dc(3, 2);
  CHECK(is_pth_power(*d2, d2->identity()));

  auto prod = ProductGroup::make({d2, make_cyclic(3, 2)});
  const Element xd3 = evaluate_word(*prod, "f0.x^3*f1.d^3");
  CHECK(is_pth_power(*prod, xd3));

  auto prod2 = ProductGroup::make({make_Dc(3, 2), make_B2(3, 2)});
  CHECK_FALSE(is_pth_power(*prod2, evaluate_word(*prod2, "f0.x^3*f1.d")));

  for (GroupPtr g : std::vector<GroupPtr>{GroupPtr(prod2), make_Mc(3, 4), make_Dc(2, 3)}) {
    std::set<Element> powers;
    for (const auto& x : oracle::elements(*g)) powers.insert(g->power(x, g->prime()));
    for (const auto& x : oracle::elements(*g)) CHECK(is_pth_power(*g, x) == powers.contains(x));
  }
}

TEST_CASE("omega1 and generation by elements of order p") {
  auto d2 = make_Dc(3, 2);
  CHECK(omega1_subgroup(*d2) == center(*d2));
  CHECK(omega1_subgroup(*d2).size() == 9);
  CHECK(omega1_subgroup(*make_Mc(3, 2)).size() == 27);
  CHECK(omega1_subgroup(*make_cyclic(5, 3)).size() == 5);

  CHECK(generated_by_order_p(*make_homocyclic(3, 2, 1, 0)) == false);
  CHECK(generated_by_order_p(*direct_product({make_cyclic(3, 1), make_cyclic(3, 1)})));
  for (unsigned c = 2; c <= 4; ++c) CHECK(generated_by_order_p(*make_Mc(3, c)));
  CHECK_FALSE(generated_by_order_p(*d2));

  for (GroupPtr g : std::vector<GroupPtr>{make_Mc(3, 4), make_second_example(3, 2, 2)}) {
    std::vector<Element> ps;
    for (const auto& x : oracle::elements(*g))
      if (oracle::naive_order(*g, x) <= g->prime()) ps.push_back(x);
    CHECK(oracle::as_set(omega1_subgroup(*g)) == oracle::naive_closure(*g, ps));
  }
}

TEST_CASE("normal_closure") {
  auto d2 = make_Dc(3, 2);
  const Element x = named(*d2, "x");
  CHECK(normal_closure(*d2, x).size() == 9);
  const Element z = d2->power(x, 3);
  CHECK(normal_closure(*d2, z).size() == 3);
  auto m2 = make_Mc(3, 2);
  // extraspecial of order 27: the closure of a noncentral element is <a> Z
  const Element a = named(*m2, "a");
  CHECK(normal_closure(*m2, a).size() == 9);
  CHECK(oracle::as_set(normal_closure(*m2, a)) == oracle::naive_normal_closure(*m2, a));
  for (GroupPtr g : std::vector<GroupPtr>{make_Mc(3, 4), make_Dc(2, 3)})
    for (const auto& e : oracle::elements(*g))
      CHECK(oracle::as_set(normal_closure(*g, e)) == oracle::naive_normal_closure(*g, e));
}

TEST_CASE("direct_factor_search") {
  CHECK_FALSE(direct_factor_search(*make_cyclic(3, 1)).has_value());
  auto g = direct_product({make_Dc(3, 2), make_Mc(3, 2)});
  const auto r = direct_factor_search(*g);
  REQUIRE(r.has_value());
  CHECK(r->first.size() * r->second.size() == g->order());
  CHECK(r->first.size() > 1);
  CHECK(r->second.size() > 1);
  CHECK(is_normal(*g, r->first));
  CHECK(is_normal(*g, r->second));
  for (const auto& e : r->first.elements()) CHECK((e.is_zero() || !r->second.contains(e)));

  CHECK_FALSE(direct_factor_search(*make_second_example(3, 2, 2)).has_value());
  CHECK_FALSE(direct_factor_search(*make_Mc(3, 4)).has_value());
  CHECK(direct_factor_search(*direct_product({make_cyclic(2, 1), make_cyclic(2, 2)})).has_value());

  ScopedLimits lim({2'000'000, 80});
  CHECK_THROWS_AS(direct_factor_search(*make_Dc(3, 2)), ResourceLimit);
}

}  // TEST_SUITE
