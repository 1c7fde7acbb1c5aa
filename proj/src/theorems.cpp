#include "groupgraphs/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "groupgraphs/analytics.hpp"
#include "groupgraphs/error.hpp"
#include "groupgraphs/graph.hpp"
#include "groupgraphs/number_theory.hpp"

namespace groupgraphs {
namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  const char* statement;
};

constexpr std::array<TheoremInfo, 26> kTheorems{{
    {TheoremId::T1_1_pgroup_kappa1, "T1_1_pgroup_kappa1",
     "p-group neither cyclic nor generalized quaternion: kappa(Ge) = 1"},
    {TheoremId::T1_2_abelian_kappa1_iff_pgroup, "T1_2_abelian_kappa1_iff_pgroup",
     "non-cyclic abelian: kappa(Ge) = 1 iff G is a p-group"},
    {TheoremId::T1_3_dominatable_iff_cyclic_sylow, "T1_3_dominatable_iff_cyclic_sylow",
     "abelian: Ge dominatable iff G has a cyclic Sylow subgroup"},
    {TheoremId::T1_4_dom_set_of_product, "T1_4_dom_set_of_product",
     "G1 x Zn, G1 without cyclic Sylow, gcd(|G1|, n) = 1: Dom(Ge) = {(e, x)}"},
    {TheoremId::T1_5_proper_disconnected_iff_p, "T1_5_proper_disconnected_iff_p",
     "non-p-group G1 x Zn as above: proper enhanced graph disconnected iff G1 is a p-group"},
    {TheoremId::T1_6_kappa_upper_bound, "T1_6_kappa_upper_bound",
     "non-cyclic abelian: kappa(Ge) <= m - phi(m), m = prod p_i^t_i1"},
    {TheoremId::T1_7_kappa_equals_n, "T1_7_kappa_equals_n",
     "G1 x Zn, G1 a p-group without cyclic Sylow, n > 1 coprime: kappa(Ge) = n"},
    {TheoremId::T2_1_power_enhanced_equiv, "T2_1_power_enhanced_equiv",
     "any group: deleted power graph connected iff deleted enhanced graph connected"},
    {TheoremId::L2_1_complete_iff_cyclic, "L2_1_complete_iff_cyclic", "Ge complete iff G cyclic"},
    {TheoremId::L2_2_quaternion_dominatable, "L2_2_quaternion_dominatable",
     "non-abelian 2-group: Ge dominatable iff G generalized quaternion"},
    {TheoremId::L2_3_coprime_product_dominatable, "L2_3_coprime_product_dominatable",
     "gcd(|G|, n) = 1, n > 1: Ge(G x Zn) dominatable"},
    {TheoremId::L2_4_coprime_commuting_adjacent, "L2_4_coprime_commuting_adjacent",
     "x, y != e commuting with coprime orders are adjacent in Ge"},
    {TheoremId::L2_5_pgroup_path_subgroup, "L2_5_pgroup_path_subgroup",
     "p-group: o(a) = p joined by a path to b in deleted Ge implies <a> in <b>"},
    {TheoremId::L2_6_same_order_nonadjacent, "L2_6_same_order_nonadjacent",
     "same-order generators of distinct cyclic subgroups are not adjacent in Ge"},
    {TheoremId::L2_7_dominating_unique_p, "L2_7_dominating_unique_p",
     "non-cyclic: each dominating v != e has a prime p | o(v) with a unique order-p subgroup"},
    {TheoremId::T3_1_components_pgroup, "T3_1_components_pgroup",
     "non-cyclic abelian p-group of rank r: proper Ge has (p^r - 1)/(p - 1) components"},
    {TheoremId::T3_2_components_product, "T3_2_components_product",
     "Z_p^t1 x ... x Z_p^tr x Zn, r >= 2, gcd(p, n) = 1: (p^r - 1)/(p - 1) components"},
    {TheoremId::T4_1_dihedral, "T4_1_dihedral", "dihedral of order 2n: proper Ge has n + 1 components, kappa = 1"},
    {TheoremId::T4_2_quaternion, "T4_2_quaternion",
     "generalized quaternion Q_2^n: proper Ge has 2^(n-2) + 1 components, kappa = 2"},
    {TheoremId::C4_3_quaternion_star_connected, "C4_3_quaternion_star_connected",
     "generalized quaternion: deleted Ge connected, proper Ge disconnected"},
    {TheoremId::L4_sym_no_dom, "L4_sym_no_dom", "symmetric n >= 3: Dom(Ge) = {e}"},
    {TheoremId::T4_4_symmetric_kappa1, "T4_4_symmetric_kappa1",
     "symmetric n >= 3: kappa(Ge) = 1 iff n or n - 1 is prime"},
    {TheoremId::L4_alt_no_dom, "L4_alt_no_dom", "alternating n >= 4: Dom(Ge) = {e}"},
    {TheoremId::T4_7_alternating_kappa1, "T4_7_alternating_kappa1",
     "alternating n >= 7 with a prime among n, n-1, n-2, n/2, (n-1)/2, (n-2)/2: kappa(Ge) = 1"},
    {TheoremId::C3_power_kappa1, "C3_power_kappa1", "non-cyclic abelian: kappa(P) = 1 iff G is a p-group"},
    {TheoremId::C3_power_bound, "C3_power_bound", "non-cyclic abelian: kappa(P) <= m - phi(m)"},
}};

const TheoremInfo& info(TheoremId id) {
  return kTheorems[static_cast<std::size_t>(id)];
}

enum class Compare { Equal, AtMost };

struct Evaluation {
  Value expected;
  Value computed;
  Compare rule = Compare::Equal;
  std::string note;
};

[[noreturn]] void not_met(const std::string& why) { throw HypothesisNotMet(why); }

VertexSet vertex_set(const SimpleGraph& g, const std::vector<SimpleGraph::Vertex>& positions) {
  VertexSet out;
  for (auto v : positions) {
    out.elements.push_back(g.element(v));
    out.labels.push_back(g.label(v));
  }
  return out;
}

VertexSet element_set(const Group& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  VertexSet out;
  out.elements = std::move(elements);
  for (auto e : out.elements) out.labels.push_back(g.label(e));
  return out;
}

bool dominatable(const SimpleGraph& enhanced) {
  const auto dom = dominating_vertices(enhanced);
  return std::any_of(dom.begin(), dom.end(), [&](auto v) { return enhanced.element(v) != Group::identity(); });
}

std::int64_t kappa_of(const SimpleGraph& g) { return static_cast<std::int64_t>(vertex_connectivity(g).kappa); }

void require_abelian_noncyclic(const Group& g) {
  if (!g.is_abelian()) not_met("group is not abelian");
  if (is_cyclic(g)) not_met("group is cyclic");
}

/// Splits an abelian group as G1 x Z_n with gcd(|G1|, n) = 1.
struct CyclicSplit {
  std::optional<Group> g1;         // built for product specs
  std::uint64_t g1_order = 1;
  std::uint64_t n = 1;
  std::vector<std::uint32_t> g1_invariants;
  std::vector<Element> expected_dom;  // the elements (e, x)
};

std::map<std::uint64_t, std::vector<std::uint32_t>> by_prime(const std::vector<std::uint32_t>& invariants) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> out;
  for (auto f : invariants) out[prime_power_base(f)].push_back(f);
  return out;
}

bool no_cyclic_sylow(const std::vector<std::uint32_t>& invariants) {
  const auto blocks = by_prime(invariants);
  return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.second.size() >= 2; });
}

/// Product(G1..., Cyclic(n)) is split literally; any other abelian group is
/// split into its non-cyclic primary parts (G1) and cyclic ones (Z_n).
CyclicSplit split_off_cyclic(const Group& g, const BuildOptions& build) {
  CyclicSplit s;
  if (const auto* p = std::get_if<ProductSpec>(&g.spec().value);
      p != nullptr && p->factors.size() >= 2 && p->factors.back().is<CyclicSpec>()) {
    s.n = p->factors.back().as<CyclicSpec>().n;
    std::vector<GroupSpec> rest(p->factors.begin(), p->factors.end() - 1);
    GroupSpec g1spec = rest.size() == 1 ? rest.front() : GroupSpec(ProductSpec{rest});
    s.g1.emplace(build_group(g1spec, build));
    s.g1_order = s.g1->order();
    if (s.g1->is_abelian()) s.g1_invariants = abelian_invariants(*s.g1);
    // (e, x) has index x: the identity of G1 is 0 and Z_n varies fastest.
    for (Element x = 0; x < s.n; ++x) s.expected_dom.push_back(x);
    return s;
  }
  const auto invariants = abelian_invariants(g);
  for (const auto& [p, block] : by_prime(invariants)) {
    if (block.size() >= 2) {
      s.g1_invariants.insert(s.g1_invariants.end(), block.begin(), block.end());
      for (auto f : block) s.g1_order *= f;
    } else {
      s.n *= block.front();
    }
  }
  for (Element e = 0; e < g.order(); ++e)
    if (s.n % g.element_order(e) == 0) s.expected_dom.push_back(e);
  return s;
}

void require_cyclic_split(const Group& g, const CyclicSplit& s) {
  if (!g.is_abelian()) not_met("group is not abelian");
  if (s.g1 && !s.g1->is_abelian()) not_met("G1 is not abelian");
  if (s.g1_order < 2 || !no_cyclic_sylow(s.g1_invariants)) not_met("G1 has a cyclic Sylow subgroup");
  if (gcd(s.g1_order, s.n) != 1) not_met("gcd(|G1|, n) != 1");
}

std::int64_t components_formula(std::uint64_t p, unsigned r) {
  return static_cast<std::int64_t>((ipow(p, r) - 1) / (p - 1));
}

Evaluation evaluate(TheoremId id, const Group& g, const CheckOptions& options) {
  using V = std::int64_t;
  Evaluation ev;
  switch (id) {
    case TheoremId::T1_1_pgroup_kappa1: {
      if (!is_p_group(g)) not_met("not a p-group");
      if (is_cyclic(g)) not_met("group is cyclic");
      if (is_generalized_quaternion(g)) not_met("group is generalized quaternion");
      ev.expected = V{1};
      ev.computed = kappa_of(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::T1_2_abelian_kappa1_iff_pgroup: {
      require_abelian_noncyclic(g);
      const auto k = kappa_of(build_enhanced_power_graph(g));
      ev.expected = is_p_group(g).has_value();
      ev.computed = k == 1;
      ev.note = "kappa=" + std::to_string(k);
      break;
    }
    case TheoremId::T1_3_dominatable_iff_cyclic_sylow: {
      if (!g.is_abelian()) not_met("group is not abelian");
      if (g.order() < 2) not_met("trivial group");
      bool any = false;
      for (const auto& [p, e] : factorize(g.order())) any = any || has_cyclic_sylow(g, p);
      ev.expected = any;
      ev.computed = dominatable(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::T1_4_dom_set_of_product: {
      if (!g.is_abelian()) not_met("group is not abelian");
      const auto split = split_off_cyclic(g, options.build);
      require_cyclic_split(g, split);
      const auto enhanced = build_enhanced_power_graph(g);
      ev.expected = element_set(g, split.expected_dom);
      ev.computed = vertex_set(enhanced, dominating_vertices(enhanced));
      break;
    }
    case TheoremId::T1_5_proper_disconnected_iff_p: {
      if (!g.is_abelian()) not_met("group is not abelian");
      const auto split = split_off_cyclic(g, options.build);
      require_cyclic_split(g, split);
      if (is_p_group(g)) not_met("G is a p-group");
      const bool g1_is_p = prime_power_base(split.g1_order) != 0;
      ev.expected = g1_is_p;
      ev.computed = !is_connected(derive_graph(g, GraphKind::EnhancedProper));
      break;
    }
    case TheoremId::T1_6_kappa_upper_bound: {
      require_abelian_noncyclic(g);
      const auto bound = upper_bound_value(AbelianSpec{abelian_invariants(g)});
      const auto k = kappa_of(build_enhanced_power_graph(g));
      ev.expected = bound;
      ev.computed = k;
      ev.rule = Compare::AtMost;
      ev.note = "gap=" + std::to_string(bound - k);
      break;
    }
    case TheoremId::T1_7_kappa_equals_n: {
      if (!g.is_abelian()) not_met("group is not abelian");
      const auto split = split_off_cyclic(g, options.build);
      require_cyclic_split(g, split);
      if (prime_power_base(split.g1_order) == 0) not_met("G1 is not a p-group");
      if (split.n < 2) not_met("n = 1 (G is a p-group)");
      ev.expected = static_cast<V>(split.n);
      ev.computed = kappa_of(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::T2_1_power_enhanced_equiv: {
      if (g.order() < 2) not_met("trivial group");
      const SimpleGraph::Vertex id = 0;
      const std::span<const SimpleGraph::Vertex> e(&id, 1);
      ev.expected = is_connected(build_power_graph(g).without(e));
      ev.computed = is_connected(build_enhanced_power_graph(g).without(e));
      break;
    }
    case TheoremId::L2_1_complete_iff_cyclic: {
      ev.expected = is_cyclic(g);
      ev.computed = is_complete(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::L2_2_quaternion_dominatable: {
      if (is_p_group(g) != std::optional<std::uint64_t>{2}) not_met("not a 2-group");
      if (g.is_abelian()) not_met("group is abelian");
      ev.expected = is_generalized_quaternion(g);
      ev.computed = dominatable(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::L2_3_coprime_product_dominatable: {
      const auto* p = std::get_if<ProductSpec>(&g.spec().value);
      if (p == nullptr || p->factors.size() < 2 || !p->factors.back().is<CyclicSpec>())
        not_met("spec is not a product G x cyclic:n");
      const std::uint64_t n = p->factors.back().as<CyclicSpec>().n;
      const std::uint64_t base = g.order() / n;
      if (n < 2) not_met("n = 1");
      if (gcd(base, n) != 1) not_met("gcd(|G|, n) != 1");
      ev.expected = true;
      ev.computed = dominatable(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::L2_4_coprime_commuting_adjacent: {
      const auto enhanced = build_enhanced_power_graph(g);
      V violations = 0;
      for (Element x = 1; x < g.order(); ++x)
        for (Element y = x + 1; y < g.order(); ++y)
          if (gcd(g.element_order(x), g.element_order(y)) == 1 && g.commute(x, y) && !enhanced.adjacent(x, y))
            ++violations;
      ev.expected = V{0};
      ev.computed = violations;
      break;
    }
    case TheoremId::L2_5_pgroup_path_subgroup: {
      const auto p = is_p_group(g);
      if (!p) not_met("not a p-group");
      const SimpleGraph::Vertex id = 0;
      const auto deleted = build_enhanced_power_graph(g).without(std::span<const SimpleGraph::Vertex>(&id, 1));
      const auto parts = components(deleted);
      std::vector<std::vector<Element>> powers(g.order());
      V violations = 0;
      for (SimpleGraph::Vertex a = 0; a < deleted.size(); ++a) {
        if (g.element_order(deleted.element(a)) != *p) continue;
        for (SimpleGraph::Vertex b = 0; b < deleted.size(); ++b) {
          if (parts.component_id[a] != parts.component_id[b]) continue;
          const Element eb = deleted.element(b);
          if (powers[eb].empty()) powers[eb] = powers_of(g, eb);
          if (std::find(powers[eb].begin(), powers[eb].end(), deleted.element(a)) == powers[eb].end()) ++violations;
        }
      }
      ev.expected = V{0};
      ev.computed = violations;
      break;
    }
    case TheoremId::L2_6_same_order_nonadjacent: {
      const auto enhanced = build_enhanced_power_graph(g);
      // Canonical id of <x>: its smallest-index generator.
      std::vector<Element> subgroup_id(g.order());
      for (Element x = 0; x < g.order(); ++x) {
        Element best = x;
        for (auto m : powers_of(g, x))
          if (g.element_order(m) == g.element_order(x)) best = std::min(best, m);
        subgroup_id[x] = best;
      }
      V violations = 0;
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = x + 1; y < g.order(); ++y)
          if (g.element_order(x) == g.element_order(y) && subgroup_id[x] != subgroup_id[y] && enhanced.adjacent(x, y))
            ++violations;
      ev.expected = V{0};
      ev.computed = violations;
      break;
    }
    case TheoremId::L2_7_dominating_unique_p: {
      if (is_cyclic(g)) not_met("group is cyclic");
      const auto enhanced = build_enhanced_power_graph(g);
      V violations = 0, checked = 0;
      for (auto v : dominating_vertices(enhanced)) {
        const Element e = enhanced.element(v);
        if (e == Group::identity()) continue;
        ++checked;
        bool found = false;
        for (const auto& [p, k] : factorize(g.element_order(e)))
          found = found || count_elements_of_order(g, static_cast<std::uint32_t>(p)) == p - 1;
        if (!found) ++violations;
      }
      ev.expected = V{0};
      ev.computed = violations;
      ev.note = "dominating_checked=" + std::to_string(checked);
      break;
    }
    case TheoremId::T3_1_components_pgroup: {
      require_abelian_noncyclic(g);
      const auto p = is_p_group(g);
      if (!p) not_met("not a p-group");
      const auto r = static_cast<unsigned>(abelian_invariants(g).size());
      ev.expected = components_formula(*p, r);
      ev.computed = static_cast<V>(components(derive_graph(g, GraphKind::EnhancedProper)).count);
      ev.note = "p=" + std::to_string(*p) + " r=" + std::to_string(r);
      break;
    }
    case TheoremId::T3_2_components_product: {
      require_abelian_noncyclic(g);
      std::uint64_t prime = 0;
      unsigned rank = 0;
      for (const auto& [p, block] : by_prime(abelian_invariants(g))) {
        if (block.size() < 2) continue;
        if (prime != 0) not_met("more than one non-cyclic primary part");
        prime = p;
        rank = static_cast<unsigned>(block.size());
      }
      ev.expected = components_formula(prime, rank);
      ev.computed = static_cast<V>(components(derive_graph(g, GraphKind::EnhancedProper)).count);
      ev.note = "p=" + std::to_string(prime) + " r=" + std::to_string(rank);
      break;
    }
    case TheoremId::T4_1_dihedral: {
      if (!g.spec().is<DihedralSpec>()) not_met("spec is not dihedral:n");
      const V n = g.spec().as<DihedralSpec>().n;
      ev.expected = std::vector<V>{n + 1, 1};
      ev.computed = std::vector<V>{static_cast<V>(components(derive_graph(g, GraphKind::EnhancedProper)).count),
                                   kappa_of(build_enhanced_power_graph(g))};
      ev.note = "(components, kappa)";
      break;
    }
    case TheoremId::T4_2_quaternion: {
      if (!g.spec().is<QuaternionSpec>()) not_met("spec is not quaternion:n");
      const unsigned n = g.spec().as<QuaternionSpec>().n;
      ev.expected = std::vector<V>{static_cast<V>(ipow(2, n - 2) + 1), 2};
      ev.computed = std::vector<V>{static_cast<V>(components(derive_graph(g, GraphKind::EnhancedProper)).count),
                                   kappa_of(build_enhanced_power_graph(g))};
      ev.note = "(components, kappa)";
      break;
    }
    case TheoremId::C4_3_quaternion_star_connected: {
      if (!g.spec().is<QuaternionSpec>()) not_met("spec is not quaternion:n");
      ev.expected = std::vector<V>{1, 0};
      ev.computed = std::vector<V>{is_connected(derive_graph(g, GraphKind::EnhancedDeleted)) ? 1 : 0,
                                   is_connected(derive_graph(g, GraphKind::EnhancedProper)) ? 1 : 0};
      ev.note = "(deleted connected, proper connected)";
      break;
    }
    case TheoremId::L4_sym_no_dom:
    case TheoremId::L4_alt_no_dom: {
      const bool sym = id == TheoremId::L4_sym_no_dom;
      if (sym ? !g.spec().is<SymmetricSpec>() : !g.spec().is<AlternatingSpec>())
        not_met(sym ? "spec is not symmetric:n" : "spec is not alternating:n");
      const auto n = sym ? g.spec().as<SymmetricSpec>().n : g.spec().as<AlternatingSpec>().n;
      if (n < (sym ? 3u : 4u)) not_met("degree too small");
      const auto enhanced = build_enhanced_power_graph(g);
      ev.expected = element_set(g, {Group::identity()});
      ev.computed = vertex_set(enhanced, dominating_vertices(enhanced));
      break;
    }
    case TheoremId::T4_4_symmetric_kappa1: {
      if (!g.spec().is<SymmetricSpec>()) not_met("spec is not symmetric:n");
      const auto n = g.spec().as<SymmetricSpec>().n;
      if (n < 3) not_met("n < 3");
      const auto k = kappa_of(build_enhanced_power_graph(g));
      ev.expected = is_prime(n) || is_prime(n - 1);
      ev.computed = k == 1;
      ev.note = "kappa=" + std::to_string(k);
      break;
    }
    case TheoremId::T4_7_alternating_kappa1: {
      if (!g.spec().is<AlternatingSpec>()) not_met("spec is not alternating:n");
      const std::uint64_t n = g.spec().as<AlternatingSpec>().n;
      if (n < 7) not_met("n < 7");
      bool prime_found = is_prime(n) || is_prime(n - 1) || is_prime(n - 2);
      for (std::uint64_t m : {n, n - 1, n - 2})
        if (m % 2 == 0) prime_found = prime_found || is_prime(m / 2);
      if (!prime_found) not_met("no listed quantity is prime (connected branch not checked)");
      ev.expected = V{1};
      ev.computed = kappa_of(build_enhanced_power_graph(g));
      break;
    }
    case TheoremId::C3_power_kappa1: {
      require_abelian_noncyclic(g);
      const auto k = kappa_of(build_power_graph(g));
      ev.expected = is_p_group(g).has_value();
      ev.computed = k == 1;
      ev.note = "kappa=" + std::to_string(k);
      break;
    }
    case TheoremId::C3_power_bound: {
      require_abelian_noncyclic(g);
      const auto bound = upper_bound_value(AbelianSpec{abelian_invariants(g)});
      const auto k = kappa_of(build_power_graph(g));
      ev.expected = bound;
      ev.computed = k;
      ev.rule = Compare::AtMost;
      ev.note = "gap=" + std::to_string(bound - k);
      break;
    }
  }
  return ev;
}

bool passes(const Evaluation& ev) {
  if (ev.rule == Compare::AtMost) return std::get<std::int64_t>(ev.computed) <= std::get<std::int64_t>(ev.expected);
  return ev.expected == ev.computed;
}

struct FamilyName {
  Family family;
  const char* name;
};

constexpr std::array<FamilyName, 10> kFamilies{{
    {Family::Abelian, "abelian"},
    {Family::AbelianP, "abelian-p"},
    {Family::AbelianByCyclic, "abelian-x-cyclic"},
    {Family::CoprimeProducts, "coprime-products"},
    {Family::PGroups, "p-groups"},
    {Family::Dihedral, "dihedral"},
    {Family::Quaternion, "quaternion"},
    {Family::Symmetric, "symmetric"},
    {Family::Alternating, "alternating"},
    {Family::Corpus, "corpus"},
}};

std::uint64_t spec_order(const GroupSpec& s) { return nominal_order(s); }

bool noncyclic_p_invariants(const AbelianSpec& a) {
  const auto blocks = by_prime(a.invariants);
  return blocks.size() == 1 && a.invariants.size() >= 2;
}

}  // namespace

std::span<const TheoremId> all_theorems() {
  static const auto ids = [] {
    std::array<TheoremId, kTheorems.size()> out{};
    for (std::size_t i = 0; i < kTheorems.size(); ++i) out[i] = kTheorems[i].id;
    return out;
  }();
  return ids;
}

const char* to_string(TheoremId id) noexcept { return info(id).name; }
const char* describe(TheoremId id) noexcept { return info(id).statement; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  std::optional<TheoremId> match;
  for (const auto& t : kTheorems) {
    const std::string_view name = t.name;
    if (name == text) return t.id;
    if (name.size() > text.size() && name.substr(0, text.size()) == text && name[text.size()] == '_') {
      if (match) return std::nullopt;
      match = t.id;
    }
  }
  return match;
}

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::HypothesisNotMet: return "hypothesis-not-met";
    case Outcome::Error: return "error";
  }
  return "error";
}

std::string render(const Value& v) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const std::vector<std::int64_t>& t) const {
      std::string out = "(";
      for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
      return out + ")";
    }
    std::string operator()(const VertexSet& s) const {
      std::string out = "{";
      for (std::size_t i = 0; i < s.labels.size(); ++i) out += (i ? "; " : "") + s.labels[i];
      return out + "}";
    }
  } visitor;
  return std::visit(visitor, v);
}

std::int64_t upper_bound_value(const AbelianSpec& spec) {
  const auto blocks = by_prime(spec.invariants);
  if (std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.second.size() == 1; }))
    throw HypothesisNotMet("abelian invariants describe a cyclic group");
  std::uint64_t m = 1;
  for (const auto& [p, block] : blocks) m *= *std::min_element(block.begin(), block.end());
  return static_cast<std::int64_t>(m - euler_phi(m));
}

VerificationRecord check(TheoremId id, const GroupSpec& spec, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.theorem = id;
  rec.group = spec;
  const Group g = build_group(spec, options.build);
  rec.order = g.order();
  try {
    Evaluation ev = evaluate(id, g, options);
    rec.outcome = passes(ev) ? Outcome::Pass : Outcome::Fail;
    rec.expected = std::move(ev.expected);
    rec.computed = std::move(ev.computed);
    rec.note = std::move(ev.note);
  } catch (const HypothesisNotMet& e) {
    rec.outcome = Outcome::HypothesisNotMet;
    rec.note = e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

const char* to_string(Family f) noexcept {
  for (const auto& x : kFamilies)
    if (x.family == f) return x.name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  for (const auto& x : kFamilies)
    if (text == x.name) return x.family;
  return std::nullopt;
}

std::vector<GroupSpec> corpus(bool slow) {
  std::vector<GroupSpec> out = enumerate_abelian_groups(100);
  for (const auto& g1 : {std::vector<std::uint32_t>{2, 2}, {3, 3}, {2, 4}})
    for (std::uint32_t n : {3u, 5u, 7u, 9u}) {
      if (gcd(g1[0], n) != 1) continue;
      out.emplace_back(ProductSpec{{AbelianSpec{g1}, CyclicSpec{n}}});
    }
  for (std::uint32_t n = 2; n <= 40; ++n) out.emplace_back(DihedralSpec{n});
  for (std::uint32_t n = 3; n <= 9; ++n) out.emplace_back(QuaternionSpec{n});
  for (std::uint32_t n = 3; n <= (slow ? 8u : 7u); ++n) out.emplace_back(SymmetricSpec{n});
  for (std::uint32_t n = 4; n <= 7; ++n) out.emplace_back(AlternatingSpec{n});
  return out;
}

std::vector<GroupSpec> family_members(const FamilyRange& r) {
  std::vector<GroupSpec> out;
  auto in_range = [&](std::uint32_t n) { return n >= r.min && (r.max == 0 || n <= r.max); };
  switch (r.family) {
    case Family::Abelian:
      return enumerate_abelian_groups(static_cast<std::uint32_t>(r.max_order));
    case Family::AbelianP:
      for (auto& s : enumerate_abelian_groups(static_cast<std::uint32_t>(r.max_order)))
        if (noncyclic_p_invariants(s.as<AbelianSpec>())) out.push_back(std::move(s));
      return out;
    case Family::AbelianByCyclic:
      for (auto& s : enumerate_abelian_groups(static_cast<std::uint32_t>(r.max_order))) {
        const auto& inv = s.as<AbelianSpec>().invariants;
        if (!no_cyclic_sylow(inv)) continue;
        const std::uint64_t order = spec_order(s);
        for (std::uint64_t n = 2; order * n <= r.max_order; ++n)
          if (gcd(order, n) == 1 && in_range(static_cast<std::uint32_t>(n)))
            out.emplace_back(ProductSpec{{s, CyclicSpec{static_cast<std::uint32_t>(n)}}});
      }
      return out;
    case Family::CoprimeProducts:
      for (const auto& base : corpus(false)) {
        const std::uint64_t order = spec_order(base);
        for (std::uint64_t n = std::max<std::uint32_t>(2, r.min); (r.max == 0 || n <= r.max) && order * n <= r.max_order;
             ++n)
          if (gcd(order, n) == 1) out.emplace_back(ProductSpec{{base, CyclicSpec{static_cast<std::uint32_t>(n)}}});
      }
      return out;
    case Family::PGroups:
      for (auto& s : enumerate_abelian_groups(static_cast<std::uint32_t>(r.max_order)))
        if (noncyclic_p_invariants(s.as<AbelianSpec>())) out.push_back(std::move(s));
      for (std::uint32_t n = 4; 2ull * n <= r.max_order; n *= 2) out.emplace_back(DihedralSpec{n});
      for (std::uint32_t n = 3; (1ull << n) <= r.max_order; ++n) out.emplace_back(QuaternionSpec{n});
      return out;
    case Family::Dihedral:
      for (std::uint32_t n = std::max(2u, r.min); n <= r.max; ++n) out.emplace_back(DihedralSpec{n});
      return out;
    case Family::Quaternion:
      for (std::uint32_t n = std::max(3u, r.min); n <= r.max; ++n) out.emplace_back(QuaternionSpec{n});
      return out;
    case Family::Symmetric:
      for (std::uint32_t n = std::max(1u, r.min); n <= r.max; ++n) out.emplace_back(SymmetricSpec{n});
      return out;
    case Family::Alternating:
      for (std::uint32_t n = std::max(1u, r.min); n <= r.max; ++n) out.emplace_back(AlternatingSpec{n});
      return out;
    case Family::Corpus:
      return corpus(r.slow);
  }
  return out;
}

FamilyRange default_range(TheoremId id, bool slow) {
  switch (id) {
    case TheoremId::T1_1_pgroup_kappa1: return {Family::PGroups, 0, 0, 128};
    case TheoremId::T1_2_abelian_kappa1_iff_pgroup:
    case TheoremId::T1_3_dominatable_iff_cyclic_sylow:
    case TheoremId::T1_6_kappa_upper_bound:
    case TheoremId::C3_power_kappa1:
    case TheoremId::C3_power_bound: return {Family::Abelian, 0, 0, 100};
    case TheoremId::T1_4_dom_set_of_product:
    case TheoremId::T1_5_proper_disconnected_iff_p:
    case TheoremId::T1_7_kappa_equals_n: return {Family::AbelianByCyclic, 0, 0, 200};
    case TheoremId::L2_3_coprime_product_dominatable: return {Family::CoprimeProducts, 2, 15, kDefaultOrderCap};
    case TheoremId::T3_1_components_pgroup: return {Family::AbelianP, 0, 0, 100};
    case TheoremId::T3_2_components_product: return {Family::Abelian, 0, 0, 100};
    case TheoremId::L2_2_quaternion_dominatable: return {Family::PGroups, 0, 0, 512};
    case TheoremId::L2_5_pgroup_path_subgroup: return {Family::PGroups, 0, 0, 64};
    case TheoremId::T4_1_dihedral: return {Family::Dihedral, 2, 40, 0};
    case TheoremId::T4_2_quaternion:
    case TheoremId::C4_3_quaternion_star_connected: return {Family::Quaternion, 3, 9, 0};
    case TheoremId::L4_sym_no_dom:
    case TheoremId::T4_4_symmetric_kappa1: return {Family::Symmetric, 3, slow ? 8u : 7u, 0};
    case TheoremId::L4_alt_no_dom: return {Family::Alternating, 4, 7, 0};
    case TheoremId::T4_7_alternating_kappa1: return {Family::Alternating, 7, 7, 0};
    case TheoremId::T2_1_power_enhanced_equiv:
    case TheoremId::L2_1_complete_iff_cyclic:
    case TheoremId::L2_4_coprime_commuting_adjacent:
    case TheoremId::L2_6_same_order_nonadjacent:
    case TheoremId::L2_7_dominating_unique_p: {
      FamilyRange r{Family::Corpus};
      r.slow = slow;
      return r;
    }
  }
  return {Family::Corpus};
}

SweepSummary summarize(std::span<const VerificationRecord> records) {
  SweepSummary s;
  for (const auto& r : records) {
    switch (r.outcome) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail: ++s.fail; break;
      case Outcome::HypothesisNotMet: ++s.hypothesis_not_met; break;
      case Outcome::Error: ++s.error; break;
    }
  }
  return s;
}

SweepReport sweep_specs(TheoremId id, std::span<const GroupSpec> specs, const SweepOptions& options) {
  SweepReport report;
  report.records.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        report.records[i] = check(id, specs[i], options.check);
      } catch (const std::exception& e) {
        VerificationRecord& r = report.records[i];
        r.theorem = id;
        r.group = specs[i];
        r.order = nominal_order(specs[i]);
        r.outcome = Outcome::Error;
        r.note = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(specs.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  report.summary = summarize(report.records);
  return report;
}

SweepReport sweep(TheoremId id, const FamilyRange& range, const SweepOptions& options) {
  const auto specs = family_members(range);
  return sweep_specs(id, specs, options);
}

}  // namespace groupgraphs
