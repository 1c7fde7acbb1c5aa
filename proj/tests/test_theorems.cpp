#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "groupgraphs/analytics.hpp"
#include "groupgraphs/error.hpp"
#include "groupgraphs/report.hpp"
#include "groupgraphs/theorems.hpp"
#include "oracles.hpp"

using namespace groupgraphs;

namespace {

VerificationRecord run(TheoremId id, const char* spec) { return check(id, parse_group_spec(spec)); }

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == 26);
  std::set<std::string> names;
  for (auto id : all_theorems()) {
    names.insert(to_string(id));
    CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK(std::string(describe(id)).size() > 10);
  }
  CHECK(names.size() == 26);
  CHECK(parse_theorem_id("T3_1") == TheoremId::T3_1_components_pgroup);
  CHECK(parse_theorem_id("L4_sym") == TheoremId::L4_sym_no_dom);
  CHECK_FALSE(parse_theorem_id("T1").has_value());
  CHECK_FALSE(parse_theorem_id("C3").has_value());
  CHECK_FALSE(parse_theorem_id("T9_9").has_value());
  CHECK_FALSE(parse_theorem_id("T3_").has_value());
}

TEST_CASE("check examples") {
  const auto t31 = run(TheoremId::T3_1_components_pgroup, "abelian:2,2,2");
  CHECK(t31.outcome == Outcome::Pass);
  CHECK(t31.expected == Value{std::int64_t{7}});
  CHECK(t31.computed == Value{std::int64_t{7}});

  const auto t16 = run(TheoremId::T1_6_kappa_upper_bound, "abelian:2,2,3");
  CHECK(t16.outcome == Outcome::Pass);
  CHECK(t16.expected == Value{std::int64_t{4}});
  CHECK(t16.computed == Value{std::int64_t{3}});

  const auto t44 = run(TheoremId::T4_4_symmetric_kappa1, "symmetric:4");
  CHECK(t44.outcome == Outcome::Pass);
  CHECK(t44.expected == Value{true});

  const auto t11 = run(TheoremId::T1_1_pgroup_kappa1, "cyclic:8");
  CHECK(t11.outcome == Outcome::HypothesisNotMet);
  CHECK(t11.note.find("cyclic") != std::string::npos);
}

TEST_CASE("upper_bound_value") {
  CHECK(upper_bound_value(AbelianSpec{{2, 2}}) == 1);
  CHECK(upper_bound_value(AbelianSpec{{2, 2, 3}}) == 4);
  CHECK(upper_bound_value(AbelianSpec{{4, 8, 9, 27}}) == 24);
  CHECK_THROWS_AS(upper_bound_value(AbelianSpec{{4, 3}}), HypothesisNotMet);
  CHECK_THROWS_AS(upper_bound_value(AbelianSpec{{8}}), HypothesisNotMet);
}

TEST_CASE("hypothesis guards") {
  struct Case {
    TheoremId id;
    const char* spec;
  };
  for (const auto& c : {Case{TheoremId::T1_1_pgroup_kappa1, "quaternion:4"},
                        Case{TheoremId::T1_1_pgroup_kappa1, "symmetric:3"},
                        Case{TheoremId::T1_2_abelian_kappa1_iff_pgroup, "cyclic:12"},
                        Case{TheoremId::T1_2_abelian_kappa1_iff_pgroup, "dihedral:4"},
                        Case{TheoremId::T1_4_dom_set_of_product, "abelian:4*cyclic:3"},
                        Case{TheoremId::T1_4_dom_set_of_product, "abelian:2,2*cyclic:6"},
                        Case{TheoremId::T1_5_proper_disconnected_iff_p, "abelian:2,2,4"},
                        Case{TheoremId::T1_7_kappa_equals_n, "abelian:2,2,3,3*cyclic:5"},
                        Case{TheoremId::L2_2_quaternion_dominatable, "abelian:2,4"},
                        Case{TheoremId::L2_3_coprime_product_dominatable, "abelian:2,2*cyclic:4"},
                        Case{TheoremId::L2_5_pgroup_path_subgroup, "cyclic:6"},
                        Case{TheoremId::L2_7_dominating_unique_p, "cyclic:6"},
                        Case{TheoremId::T3_2_components_product, "abelian:2,2,3,3"},
                        Case{TheoremId::T4_1_dihedral, "symmetric:3"},
                        Case{TheoremId::T4_2_quaternion, "dihedral:4"},
                        Case{TheoremId::L4_sym_no_dom, "symmetric:2"},
                        Case{TheoremId::L4_alt_no_dom, "alternating:3"},
                        Case{TheoremId::T4_4_symmetric_kappa1, "alternating:5"},
                        Case{TheoremId::T4_7_alternating_kappa1, "alternating:6"}}) {
    CAPTURE(to_string(c.id));
    CAPTURE(c.spec);
    CHECK(run(c.id, c.spec).outcome == Outcome::HypothesisNotMet);
  }
}

TEST_CASE("T1_4 set equality on an implicit split") {
  // Z2 x Z2 x Z3 given as invariants: Dom must be {g : o(g) | 3}.
  const auto r = run(TheoremId::T1_4_dom_set_of_product, "abelian:2,2,3");
  CHECK(r.outcome == Outcome::Pass);
  REQUIRE(std::holds_alternative<VertexSet>(r.computed));
  CHECK(std::get<VertexSet>(r.computed).elements.size() == 3);
}

TEST_CASE("biconditionals are exercised in both directions") {
  SweepOptions opts;
  opts.workers = 4;
  auto count_values = [](const SweepReport& rep) {
    std::size_t t = 0, f = 0;
    for (const auto& r : rep.records)
      if (r.outcome == Outcome::Pass) (std::get<bool>(r.expected) ? t : f)++;
    return std::pair{t, f};
  };
  FamilyRange abelian64{Family::Abelian, 0, 0, 64};
  const auto t12 = sweep(TheoremId::T1_2_abelian_kappa1_iff_pgroup, abelian64, opts);
  CHECK(t12.summary.fail == 0);
  CHECK(t12.summary.error == 0);
  const auto [pg, npg] = count_values(t12);
  CHECK(pg > 10);
  CHECK(npg > 10);

  const auto t13 = sweep(TheoremId::T1_3_dominatable_iff_cyclic_sylow, abelian64, opts);
  CHECK(t13.summary.fail == 0);
  const auto [dom, nodom] = count_values(t13);
  CHECK(dom > 10);
  CHECK(nodom > 5);

  const auto t15 = sweep(TheoremId::T1_5_proper_disconnected_iff_p, default_range(TheoremId::T1_5_proper_disconnected_iff_p),
                         opts);
  CHECK(t15.summary.fail == 0);
  const auto [disc, conn] = count_values(t15);
  CHECK(disc > 10);
  CHECK(conn > 0);
}

TEST_CASE("every theorem's default sweep has no failures or errors") {
  SweepOptions opts;
  opts.workers = 4;
  for (auto id : all_theorems()) {
    CAPTURE(to_string(id));
    const auto rep = sweep(id, default_range(id), opts);
    CHECK(rep.summary.total() == rep.records.size());
    CHECK(rep.summary.fail == 0);
    CHECK(rep.summary.error == 0);
    CHECK(rep.summary.pass > 0);
  }
}

TEST_CASE("sweeps are deterministic and independent of worker count") {
  const auto range = default_range(TheoremId::T1_6_kappa_upper_bound);
  SweepOptions one, many;
  many.workers = 8;
  ReportOptions csv{ReportFormat::Csv, false};
  const auto a = sweep(TheoremId::T1_6_kappa_upper_bound, range, one);
  const auto b = sweep(TheoremId::T1_6_kappa_upper_bound, range, many);
  CHECK(render_report(a.records, csv) == render_report(b.records, csv));
}

TEST_CASE("errors become rows") {
  std::vector<GroupSpec> specs{CyclicSpec{4}, SymmetricSpec{8}, CayleyFileSpec{"/nonexistent/file"}};
  const auto rep = sweep_specs(TheoremId::L2_1_complete_iff_cyclic, specs);
  REQUIRE(rep.records.size() == 3);
  CHECK(rep.records[0].outcome == Outcome::Pass);
  CHECK(rep.records[1].outcome == Outcome::Error);
  CHECK(rep.records[1].note.find("order cap") != std::string::npos);
  CHECK(rep.records[2].outcome == Outcome::Error);
  CHECK(rep.summary.error == 2);
}

TEST_CASE("family members") {
  const auto abelian_p = family_members({Family::AbelianP, 0, 0, 81});
  for (const auto& s : abelian_p) {
    const Group g = build_group(s);
    REQUIRE(is_p_group(g).has_value());
    REQUIRE_FALSE(is_cyclic(g));
  }
  const auto by_cyclic = family_members({Family::AbelianByCyclic, 0, 0, 200});
  for (const auto& s : by_cyclic) {
    const auto& f = s.as<ProductSpec>().factors;
    REQUIRE(f.size() == 2);
    REQUIRE(std::gcd(nominal_order(f[0]), nominal_order(f[1])) == 1);
    REQUIRE(nominal_order(s) <= 200);
  }
  CHECK(family_members({Family::Dihedral, 2, 40}).size() == 39);
  CHECK(family_members({Family::Quaternion, 3, 9}).size() == 7);
  const auto pg = family_members({Family::PGroups, 0, 0, 64});
  for (const auto& s : pg) {
    REQUIRE(nominal_order(s) <= 64);
    REQUIRE(is_p_group(build_group(s)).has_value());
  }
  const auto c = corpus();
  CHECK(std::count(c.begin(), c.end(), GroupSpec(SymmetricSpec{7})) == 1);
  CHECK(std::count(c.begin(), c.end(), GroupSpec(SymmetricSpec{8})) == 0);
  const auto slow = corpus(true);
  CHECK(std::count(slow.begin(), slow.end(), GroupSpec(SymmetricSpec{8})) == 1);
  CHECK(parse_family("abelian-p") == Family::AbelianP);
  for (auto f : {Family::Abelian, Family::AbelianP, Family::AbelianByCyclic, Family::CoprimeProducts,
                 Family::PGroups, Family::Dihedral, Family::Quaternion, Family::Symmetric, Family::Alternating,
                 Family::Corpus})
    CHECK(parse_family(to_string(f)) == f);
}

TEST_CASE("record values render") {
  CHECK(render(Value{}) == "");
  CHECK(render(Value{true}) == "true");
  CHECK(render(Value{std::int64_t{-3}}) == "-3");
  CHECK(render(Value{std::vector<std::int64_t>{6, 1}}) == "(6,1)");
  CHECK(render(Value{VertexSet{{0, 1}, {"e", "x"}}}) == "{e; x}");
}
