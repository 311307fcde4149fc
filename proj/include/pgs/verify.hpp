#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pgs/constructions.hpp"
#include "pgs/series.hpp"

namespace pgs {

inline constexpr std::uint64_t kDefaultSeed = 20240605;

// ---------------------------------------------------------------------------
// Individual statements

struct TheoremPart1Report {
  bool pass = false;
  SpectrumReport spectrum;
  std::vector<std::string> violations;
};

/// If layer k >= 2 holds an element of order p, then so does every layer
/// 1..min(k, p-1).
TheoremPart1Report verify_theorem_part1(const FiniteGroup& g);

struct Lemma2Report {
  bool applicable = false;  // p odd, G nonabelian, G = Omega_1(G)
  bool pass = false;        // vacuous when not applicable
  // Least element of order p in Z_2 \ Z_1, searched for in every case.
  std::optional<Element> witness;
};

Lemma2Report verify_lemma2(const FiniteGroup& g);

struct QuestionWitness {
  Element x, y;  // non-commuting, both of order p, (xy)^p = 1
  bool from_construction = false;
};

/// For odd p, x of order p outside C(t) with t from verify_lemma2; otherwise
/// an exhaustive scan over pairs of elements of order p. Throws
/// PreconditionFailed for abelian G.
std::optional<QuestionWitness> find_question_witness(const FiniteGroup& g);

struct RegularityReport {
  bool pass = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<Element, Element>> counterexample;
};

/// (x^-1 x^y)^p = 1 for x of order p. Exhaustive over pairs when that is at
/// most `exhaustive_limit` pairs, otherwise `samples` seeded random pairs.
/// Throws PreconditionFailed when the class is at least p.
RegularityReport verify_regularity_power(const FiniteGroup& g, std::uint64_t seed = kDefaultSeed,
                                         std::uint64_t exhaustive_limit = 1'000'000,
                                         std::uint64_t samples = 20'000);

struct ProductSpectrumReport {
  bool pass = false;
  SpectrumReport first, second, product;
};

/// Spectrum of G1 x G2 is the union and the class is the maximum. Throws
/// PreconditionFailed for a trivial factor.
ProductSpectrumReport verify_product_spectrum(const GroupPtr& g1, const GroupPtr& g2);

struct PropSameReport {
  bool pass = false;
  SpectrumReport product, quotient;
  bool sublemma_exhaustive = false;
  std::uint64_t sublemma_checked = 0;
  std::vector<std::string> violations;
};

/// Q = (G1 x G2)/<z1 z2> has the class and spectrum of G1 x G2, and the
/// image of (x1, x2) lies in Z_n(Q) iff x_i lies in Z_n(G_i) for n >= 1.
/// Throws PreconditionFailed when z1 z2 is a p-th power.
PropSameReport verify_prop_same(const GroupPtr& g1, const GroupPtr& g2, const Element& z1,
                                const Element& z2, std::uint64_t seed = kDefaultSeed);

struct LemmaFactReport {
  bool pass = false;
  std::uint64_t checked = 0;
  std::optional<Element> counterexample;
};

/// Every element of M_c outside the bottom group has order p.
LemmaFactReport verify_lemma_fact(std::uint32_t p, unsigned c);

struct ZetaReport {
  bool pass = false;
  cyclo::RingElem zeta;
};

/// (w - 1)^(p-1) = p zeta with zeta a unit.
ZetaReport verify_zeta(std::uint32_t p);

struct EqPowersReport {
  bool pass = false;
  std::vector<unsigned> ks;
  std::vector<std::string> violations;
};

/// [s_k, a, .., a] (p-1 times) = s_(k+p-1) = p zeta s_k in M_c for all
/// k + p - 1 <= c. Throws PreconditionFailed when c < p.
EqPowersReport verify_eq_powers(std::uint32_t p, unsigned c);

struct PartBReport {
  bool pass = false;
  // index (|H:G| = p^n), maximal_u (|G:U| = p for U = <X_i, E>), gammas,
  // center, a_power, spectrum, class
  std::map<std::string, bool> checks;
  std::uint64_t order_h = 0, order_g = 0;
  SpectrumReport spectrum;
  std::set<unsigned> expected_spectrum;
  std::vector<std::string> violations;
};

PartBReport verify_partb_structure(std::uint32_t p, const std::vector<unsigned>& cs, unsigned c);

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, PreconditionFailed, ResourceLimit, Error };
const char* status_name(Status s);

struct CheckRecord {
  std::string check;
  nlohmann::json params;
  Status status = Status::Error;
  nlohmann::json witness;  // null when absent
  std::string message;
  double millis = 0;
};

nlohmann::json record_json(const CheckRecord& r, bool timings = true);
std::string record_line(const CheckRecord& r, bool timings = true);
nlohmann::json spectrum_json(const SpectrumReport& r);

/// 0 when nothing failed, 1 on a failure or error, else 3 when a resource
/// limit was hit.
int exit_code(const std::vector<CheckRecord>& records);

/// Products of 2-3 catalog groups of order at most `max_order`, half of them
/// divided by a diagonal central subgroup of order p.
std::vector<GroupDescription> random_recipes(std::uint64_t seed, std::size_t count,
                                             std::uint64_t max_order);

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> filter;  // check names; empty runs everything
  std::size_t random_recipes = 50;
};

std::vector<std::string> suite_check_names();
/// Records are ordered by check name, then by instance.
std::vector<CheckRecord> run_paper_suite(const SuiteOptions& options = {});

std::vector<std::string> description_check_names();
/// The checks that apply to a single described group.
std::vector<CheckRecord> verify_description(const GroupDescription& d,
                                            const std::vector<std::string>& checks,
                                            std::uint64_t seed = kDefaultSeed);

}  // namespace pgs
