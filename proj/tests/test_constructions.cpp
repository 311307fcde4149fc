#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "pgs/constructions.hpp"
#include "pgs/errors.hpp"
#include "pgs/series.hpp"

using namespace pgs;

namespace {

Element named(const FiniteGroup& g, const std::string& n) {
  auto e = g.named(n);
  REQUIRE(e.has_value());
  return *e;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

GroupPtr from(std::string_view json) { return build_from_description(parse_description(json)); }

const char* kExampleK =
    R"({"op":"central_quotient","group":{"op":"product","factors":[{"family":"Dc","p":3,"c":2},)"
    R"({"family":"cyclic","p":3,"e":2}]},"word":"f0.x^3*f1.d^3"})";

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("D_c") {
  auto d32 = make_Dc(3, 2);
  CHECK(d32->order() == 81);
  CHECK(nilpotence_class(*d32) == 2);
  CHECK(omega1_subgroup(*d32) == center(*d32));
  CHECK(center(*d32).size() == 9);

  auto d23 = make_Dc(2, 3);
  CHECK(d23->order() == 32);
  CHECK(nilpotence_class(*d23) == 3);
  CHECK(omega1_subgroup(*d23) == center(*d23));
  CHECK(center(*d23).size() == 4);
  CHECK(oracle::naive_ucs_orders(*d23) == upper_central_series(*d23).orders());

  CHECK(spectrum(*make_Dc(3, 3)).spectrum == std::set<unsigned>{1});

  CHECK_THROWS_AS(make_Dc(2, 2), BadParameters);
  CHECK_THROWS_AS(make_Dc(3, 1), BadParameters);
}

TEST_CASE("M_c") {
  auto m22 = make_Mc(2, 2);
  CHECK(m22->order() == 8);
  auto m33 = make_Mc(3, 3);
  CHECK(m33->order() == 81);
  CHECK(nilpotence_class(*m33) == 3);
  CHECK(oracle::naive_ucs_orders(*m33) == std::vector<std::uint64_t>{1, 3, 9, 81});

  auto m34 = make_Mc(3, 4);
  const auto gammas = lower_central_terms(*m34);
  for (unsigned k = 2; k <= 4; ++k) {
    std::vector<Element> s;
    for (unsigned i = k; i <= 4; ++i) s.push_back(named(*m34, "s" + std::to_string(i)));
    CHECK(gammas[k - 1] == subgroup_closure(*m34, s));
  }
  CHECK_THROWS_AS(make_Mc(3, 1), BadParameters);
}

TEST_CASE("elements of M_c outside the bottom group have order p") {
  for (auto [p, c] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 3u}, {3u, 5u}, {5u, 3u}}) {
    auto g = make_Mc(p, c);
    std::vector<Element> s;
    for (unsigned i = 1; i <= c; ++i) s.push_back(named(*g, "s" + std::to_string(i)));
    const auto bottom = subgroup_closure(*g, s);
    CHECK(bottom.size() * p == g->order());
    for (const auto& x : oracle::elements(*g))
      if (!bottom.contains(x)) CHECK(oracle::naive_order(*g, x) == p);
  }
}

TEST_CASE("homocyclic") {
  auto g = make_homocyclic(3, 2, 1, 0);
  CHECK(g->order() == 81);
  CHECK(element_order(*g, named(*g, "b")) == 9);
  const auto ucs = upper_central_series(*g);
  CHECK(ucs.length() == 2);
  CHECK(spectrum(*g, ucs).spectrum == std::set<unsigned>{1, 2});
  // a_(k-i+1)^(p^(e-1)) lies in layer i
  CHECK(layer_index(ucs, named(*g, "a2")) == 1);
  CHECK(layer_index(ucs, named(*g, "a1")) == 2);

  auto h = make_homocyclic(3, 2, 2, 1);
  CHECK(nilpotence_class(*h) == 3);
  CHECK(h->generators()[0].name == "a1p");

  auto big = make_homocyclic(3, 2, 2, 0);
  const auto u = upper_central_series(*big);
  CHECK(layer_index(u, big->power(named(*big, "a2"), 3)) == 1);
  CHECK(layer_index(u, big->power(named(*big, "a1"), 3)) == 2);

  // k = 1 is the metacyclic family
  for (auto [p, e] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}}) {
    auto a = make_homocyclic(p, 1, e, 0);
    auto d = make_Dc(p, e);
    CHECK(a->order() == d->order());
    CHECK(upper_central_series(*a).orders() == upper_central_series(*d).orders());
    CHECK(spectrum(*a).spectrum == spectrum(*d).spectrum);
  }
  CHECK_THROWS_AS(make_homocyclic(3, 2, 1, 2), BadParameters);
  CHECK_THROWS_AS(make_homocyclic(3, 3, 1, 0), BadParameters);
}

TEST_CASE("B2") {
  auto g = make_B2(3, 2);
  CHECK(g->order() == 27);
  CHECK(nilpotence_class(*g) == 2);
  auto h = make_B2(5, 3);
  CHECK(h->order() == 3125);
  CHECK(nilpotence_class(*h) == 3);
  CHECK(is_power_of(h->order(), 5));
}

TEST_CASE("second example") {
  auto q = make_second_example(3, 2, 2);
  CHECK(q->order() == 729);
  const auto s = spectrum(*q);
  CHECK(s.nilpotence_class == 2);
  CHECK(s.spectrum == std::set<unsigned>{1, 2});

  auto q3 = make_second_example(3, 2, 3);
  const auto s3 = spectrum(*q3);
  CHECK(s3.nilpotence_class == 3);
  CHECK(s3.spectrum == std::set<unsigned>{1, 2});

  // an explicit d of weight k gives the same invariants
  auto qd = make_second_example(3, 2, 2, "d^2");
  CHECK(spectrum(*qd).spectrum == std::set<unsigned>{1, 2});

  CHECK_THROWS_AS(make_second_example(3, 2, 2, "s^3"), InputError);  // d = 1
  CHECK_THROWS_AS(make_second_example(3, 2, 2, "s"), BadParameters);  // not in gamma_k
  CHECK_THROWS_AS(make_second_example(3, 2, 1), BadParameters);       // c < k
}

TEST_CASE("part (b) decomposable") {
  auto h = make_partb_decomposable(2, {2}, 3);
  CHECK(h->order() == 256);
  CHECK(spectrum(*h).spectrum == std::set<unsigned>{1, 2});

  auto m = make_partb_decomposable(3, {3}, 3);
  CHECK(m->label() == "Mc(3,3)");
  CHECK(spectrum(*m).spectrum == std::set<unsigned>{1, 2, 3});

  CHECK(spectrum(*make_partb_decomposable(2, {2, 3}, 4)).spectrum == std::set<unsigned>{1, 2, 3});
  CHECK_THROWS_AS(make_partb_decomposable(3, {2}, 3), BadParameters);     // c_1 < p
  CHECK_THROWS_AS(make_partb_decomposable(2, {3, 2}, 4), BadParameters);  // not increasing
}

TEST_CASE("part (b) indecomposable") {
  auto inst = make_partb_instance(2, {2}, 3);
  const FiniteGroup& G = *inst.G;
  const FiniteGroup& H = *inst.H;
  CHECK(G.order() == 128);
  CHECK(H.order() == 256);
  const auto s = spectrum(G);
  CHECK(s.nilpotence_class == 3);
  CHECK(s.spectrum == std::set<unsigned>{1, 2});
  CHECK(center(G) == center(H));
  CHECK(G.power(inst.a, 2) == inst.y_power);

  auto i34 = make_partb_instance(3, {3}, 4);
  const auto gG = lower_central_terms(*i34.G);
  const auto gH = lower_central_terms(*i34.H);
  REQUIRE(gG.size() == gH.size());
  for (std::size_t k = 1; k < gG.size(); ++k) CHECK(gG[k] == gH[k]);

  // [z, a] stays in the factor that z came from
  auto i234 = make_partb_instance(2, {2, 3}, 4);
  const auto& prod = *i234.H;
  for (const auto& n : i234.G->generators()) {
    if (n.name == "a") continue;
    const Element c = commutator(prod, n.value, i234.a);
    for (std::size_t f = 0; f < prod.factors().size(); ++f) {
      const bool here = !prod.component(n.value, f).is_zero();
      if (!here) CHECK(prod.component(c, f).is_zero());
    }
  }
}

TEST_CASE("central quotients") {
  auto d = make_Dc(3, 2);
  auto c9 = make_cyclic(3, 2);
  const Element z1 = d->power(named(*d, "x"), 3), z2 = c9->power(named(*c9, "d"), 3);
  auto k = central_quotient_diagonal(d, c9, z1, z2);
  CHECK(k->order() == 243);
  CHECK(spectrum(*k).spectrum == std::set<unsigned>{1, 2});
  CHECK(spectrum(*direct_product({d, c9})).spectrum == std::set<unsigned>{1});

  CHECK_THROWS_AS(central_quotient_diagonal(d, c9, z1, c9->identity()), WrongOrder);
  CHECK_THROWS_AS(central_quotient_diagonal(d, c9, named(*d, "x"), z2), InputError);
  auto m = make_Mc(3, 3);
  CHECK_THROWS_AS(central_quotient_diagonal(m, c9, named(*m, "a"), z2), NotCentral);

  CHECK(from(kExampleK)->order() == 243);
  CHECK(spectrum(*from(kExampleK)).spectrum == std::set<unsigned>{1, 2});
}

TEST_CASE("descriptions") {
  CHECK(from(R"({"family":"Mc","p":3,"c":3})")->order() == 81);
  CHECK(from(R"({"op":"product","factors":[{"family":"Dc","p":3,"c":2},{"family":"Mc","p":3,"c":2}]})")->order() ==
        81 * 27);
  for (const char* text :
       {R"({"family":"homocyclic","p":3,"k":2,"e":1})", R"({"family":"B2","p":5,"k":2})",
        R"({"family":"second_example","p":3,"k":2,"c":2})",
        R"({"family":"partb","p":2,"cs":[2],"c":3,"indecomposable":true})", kExampleK}) {
    const auto d = parse_description(text);
    CHECK(to_json(description_from_json(to_json(d))) == to_json(d));
    const auto g = build_from_description(d);
    CHECK(is_power_of(g->order(), g->prime()));
  }

  CHECK_THROWS_AS(parse_description(R"({"family":"Mc","p":3)"), ParseError);
  try {
    parse_description(R"({"family":"Mc","p":3)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_description(R"({"family":"Nope","p":3})"), ParseError);
  CHECK_THROWS_AS(parse_description(R"({"family":"Mc","p":3})"), ParseError);
  CHECK_THROWS_AS(from(R"({"family":"Mc","p":4,"c":2})"), InputError);  // p not prime

  auto d = make_Dc(3, 2);
  CHECK(evaluate_word(*d, "x^3*y") == d->multiply(d->power(named(*d, "x"), 3), named(*d, "y")));
  CHECK(evaluate_word(*d, "x^-1") == d->invert(named(*d, "x")));
  for (const char* bad : {"x^", "x *y", "", "x**y", "q", "X", "x^1.5"})
    CHECK_THROWS_AS(evaluate_word(*d, bad), ParseError);
}

}  // TEST_SUITE
