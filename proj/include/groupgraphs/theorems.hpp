#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "groupgraphs/group.hpp"

namespace groupgraphs {

enum class TheoremId {
  T1_1_pgroup_kappa1,
  T1_2_abelian_kappa1_iff_pgroup,
  T1_3_dominatable_iff_cyclic_sylow,
  T1_4_dom_set_of_product,
  T1_5_proper_disconnected_iff_p,
  T1_6_kappa_upper_bound,
  T1_7_kappa_equals_n,
  T2_1_power_enhanced_equiv,
  L2_1_complete_iff_cyclic,
  L2_2_quaternion_dominatable,
  L2_3_coprime_product_dominatable,
  L2_4_coprime_commuting_adjacent,
  L2_5_pgroup_path_subgroup,
  L2_6_same_order_nonadjacent,
  L2_7_dominating_unique_p,
  T3_1_components_pgroup,
  T3_2_components_product,
  T4_1_dihedral,
  T4_2_quaternion,
  C4_3_quaternion_star_connected,
  L4_sym_no_dom,
  T4_4_symmetric_kappa1,
  L4_alt_no_dom,
  T4_7_alternating_kappa1,
  C3_power_kappa1,
  C3_power_bound,
};

std::span<const TheoremId> all_theorems();
const char* to_string(TheoremId id) noexcept;
/// One-line statement of what the checker asserts.
const char* describe(TheoremId id) noexcept;
/// Exact name, or a prefix ending at an underscore boundary ("T3_1").
/// Ambiguous or unknown prefixes give nullopt.
std::optional<TheoremId> parse_theorem_id(std::string_view text);

enum class Outcome { Pass, Fail, HypothesisNotMet, Error };
const char* to_string(Outcome o) noexcept;

struct VertexSet {
  std::vector<Element> elements;  // sorted
  std::vector<std::string> labels;
  bool operator==(const VertexSet& o) const { return elements == o.elements; }
};

/// Expected / computed values: nothing, a boolean, an integer, an integer
/// tuple, or a set of group elements.
using Value = std::variant<std::monostate, bool, std::int64_t, std::vector<std::int64_t>, VertexSet>;
std::string render(const Value& v);

struct VerificationRecord {
  TheoremId theorem{};
  GroupSpec group;
  std::size_t order = 0;
  Value expected;
  Value computed;
  Outcome outcome = Outcome::Error;
  double elapsed_ms = 0.0;
  std::string note;
};

struct CheckOptions {
  BuildOptions build;
};

/// Builds the group, validates the theorem's hypotheses and compares the
/// closed-form expectation with the computed graph invariant. Unmet side
/// conditions give Outcome::HypothesisNotMet. Group construction errors
/// propagate as exceptions.
VerificationRecord check(TheoremId id, const GroupSpec& spec, const CheckOptions& options = {});

/// m - phi(m) with m the product over primes of p^(smallest exponent of p).
/// Throws HypothesisNotMet for cyclic invariant lists.
std::int64_t upper_bound_value(const AbelianSpec& spec);

enum class Family {
  Abelian,           // every abelian group, cyclic ones included
  AbelianP,          // non-cyclic abelian p-groups
  AbelianByCyclic,   // G1 x Z_n, G1 non-cyclic abelian with no cyclic Sylow subgroup, gcd(|G1|, n) = 1
  CoprimeProducts,   // corpus group G x Z_n with gcd(|G|, n) = 1
  PGroups,           // non-cyclic abelian p-groups, dihedral 2-groups, generalized quaternion groups
  Dihedral,
  Quaternion,
  Symmetric,
  Alternating,
  Corpus,            // the full verification corpus
};

const char* to_string(Family f) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;

/// `min`/`max` bound the family parameter (n of dihedral:n, the exponent of
/// quaternion:n, the degree of symmetric/alternating, n of Z_n for
/// CoprimeProducts); `max_order` bounds group orders where it applies.
struct FamilyRange {
  Family family = Family::Corpus;
  std::uint32_t min = 0;
  std::uint32_t max = 0;
  std::uint64_t max_order = 0;
  bool slow = false;  // Corpus: include symmetric:8
};

std::vector<GroupSpec> family_members(const FamilyRange& range);

/// Abelian groups up to order 100, the G1 x Z_n instances with
/// G1 in {Z2xZ2, Z3xZ3, Z2xZ4} and n in {3, 5, 7, 9}, dihedral 2..40,
/// quaternion 3..9, symmetric 3..7 (8 when slow) and alternating 4..7.
std::vector<GroupSpec> corpus(bool slow = false);

FamilyRange default_range(TheoremId id, bool slow = false);

struct SweepOptions {
  unsigned workers = 1;
  CheckOptions check;
};

struct SweepSummary {
  std::size_t pass = 0, fail = 0, hypothesis_not_met = 0, error = 0;
  std::size_t total() const { return pass + fail + hypothesis_not_met + error; }
};

struct SweepReport {
  std::vector<VerificationRecord> records;  // in instance order
  SweepSummary summary;
};

/// Runs check() over every spec; exceptions become Outcome::Error rows.
/// Record order follows `specs` regardless of worker scheduling.
SweepReport sweep_specs(TheoremId id, std::span<const GroupSpec> specs, const SweepOptions& options = {});
SweepReport sweep(TheoremId id, const FamilyRange& range, const SweepOptions& options = {});

SweepSummary summarize(std::span<const VerificationRecord> records);

}  // namespace groupgraphs
