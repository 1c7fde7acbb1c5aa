#include "groupgraphs/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "groupgraphs/error.hpp"
#include "groupgraphs/number_theory.hpp"

namespace groupgraphs {
namespace {

template <typename Cell>
class TableMultiplier final : public Multiplier {
 public:
  TableMultiplier(std::size_t order, std::vector<Cell> cells) : order_(order), cells_(std::move(cells)) {}
  Element multiply(Element a, Element b) const override {
    return cells_[static_cast<std::size_t>(a) * order_ + b];
  }

 private:
  std::size_t order_;
  std::vector<Cell> cells_;
};

std::shared_ptr<const Multiplier> materialize(std::size_t order, const Multiplier& mul) {
  if (order <= 65536) {
    std::vector<std::uint16_t> cells(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        cells[a * order + b] = static_cast<std::uint16_t>(mul.multiply(Element(a), Element(b)));
    return std::make_shared<TableMultiplier<std::uint16_t>>(order, std::move(cells));
  }
  std::vector<std::uint32_t> cells(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) cells[a * order + b] = mul.multiply(Element(a), Element(b));
  return std::make_shared<TableMultiplier<std::uint32_t>>(order, std::move(cells));
}

class CyclicMultiplier final : public Multiplier {
 public:
  explicit CyclicMultiplier(std::uint32_t n) : n_(n) {}
  Element multiply(Element a, Element b) const override {
    return static_cast<Element>((std::uint64_t{a} + b) % n_);
  }

 private:
  std::uint32_t n_;
};

class DihedralMultiplier final : public Multiplier {
 public:
  explicit DihedralMultiplier(std::uint32_t n) : n_(n) {}
  // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
  Element multiply(Element x, Element y) const override {
    const std::uint32_t a = x % n_, b = x / n_, c = y % n_, d = y / n_;
    const std::uint32_t rot = b == 0 ? (a + c) % n_ : (a + n_ - c) % n_;
    return ((b + d) % 2) * n_ + rot;
  }

 private:
  std::uint32_t n_;
};

class QuaternionMultiplier final : public Multiplier {
 public:
  explicit QuaternionMultiplier(std::uint32_t m) : m_(m) {}
  // x has order m, y x = x^-1 y, y^2 = x^(m/2).
  Element multiply(Element p, Element q) const override {
    const std::uint32_t a = p % m_, b = p / m_, c = q % m_, d = q / m_;
    if (b == 0) return d * m_ + (a + c) % m_;
    const std::uint32_t base = (a + m_ - c) % m_;
    if (d == 0) return m_ + base;
    return (base + m_ / 2) % m_;
  }

 private:
  std::uint32_t m_;
};

class ProductMultiplier final : public Multiplier {
 public:
  explicit ProductMultiplier(std::vector<std::shared_ptr<const Group>> factors) : factors_(std::move(factors)) {
    stride_.resize(factors_.size());
    std::size_t s = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      stride_[i] = s;
      s *= factors_[i]->order();
    }
  }
  Element multiply(Element a, Element b) const override {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::size_t n = factors_[i]->order();
      const auto ai = static_cast<Element>(a / stride_[i] % n);
      const auto bi = static_cast<Element>(b / stride_[i] % n);
      out += factors_[i]->multiply(ai, bi) * stride_[i];
    }
    return static_cast<Element>(out);
  }

 private:
  std::vector<std::shared_ptr<const Group>> factors_;
  std::vector<std::size_t> stride_;
};

// ---- permutations -------------------------------------------------------

constexpr unsigned kMaxDegree = 12;

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t lex_rank(const std::uint8_t* p, unsigned degree) {
  static const auto fact = [] {
    std::array<std::uint64_t, kMaxDegree + 1> f{};
    for (unsigned i = 0; i <= kMaxDegree; ++i) f[i] = factorial(i);
    return f;
  }();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (unsigned i = 0; i < degree; ++i) {
    const unsigned v = p[i];
    const unsigned smaller_unused = v - static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)));
    rank += smaller_unused * fact[degree - 1 - i];
    used |= 1u << v;
  }
  return rank;
}

bool is_even(const std::uint8_t* p, unsigned degree) {
  unsigned transpositions = 0;
  std::uint32_t seen = 0;
  for (unsigned i = 0; i < degree; ++i) {
    if (seen & (1u << i)) continue;
    unsigned len = 0;
    for (unsigned j = i; !(seen & (1u << j)); j = p[j]) {
      seen |= 1u << j;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string cycle_label(const std::uint8_t* p, unsigned degree) {
  std::string out;
  std::uint32_t seen = 0;
  for (unsigned i = 0; i < degree; ++i) {
    if ((seen & (1u << i)) || p[i] == i) continue;
    out += '(';
    for (unsigned j = i; !(seen & (1u << j)); j = p[j]) {
      seen |= 1u << j;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

/// Permutations of a fixed degree stored in lexicographic order.
class PermutationMultiplier final : public Multiplier {
 public:
  PermutationMultiplier(unsigned degree, std::vector<std::uint8_t> points, std::vector<std::uint64_t> ranks,
                        bool full_symmetric)
      : degree_(degree), points_(std::move(points)), ranks_(std::move(ranks)), full_(full_symmetric) {}

  Element multiply(Element a, Element b) const override {
    std::array<std::uint8_t, kMaxDegree> c{};
    const std::uint8_t* pa = &points_[std::size_t(a) * degree_];
    const std::uint8_t* pb = &points_[std::size_t(b) * degree_];
    for (unsigned i = 0; i < degree_; ++i) c[i] = pa[pb[i]];
    return index_of(c.data());
  }

  Element index_of(const std::uint8_t* p) const {
    const std::uint64_t r = lex_rank(p, degree_);
    if (full_) return static_cast<Element>(r);
    const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
    return static_cast<Element>(it - ranks_.begin());
  }

 private:
  unsigned degree_;
  std::vector<std::uint8_t> points_;
  std::vector<std::uint64_t> ranks_;
  bool full_;
};

struct PermutationList {
  unsigned degree = 0;
  std::vector<std::uint8_t> points;  // flat, degree entries per element
  std::vector<std::uint64_t> ranks;
  std::size_t size() const { return degree == 0 ? 1 : points.size() / degree; }
};

Group make_permutation_group(const GroupSpec& spec, PermutationList list, bool full, bool abelian) {
  const std::size_t n = list.degree == 0 ? 1 : list.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = list.degree == 0 ? "e" : cycle_label(&list.points[i * list.degree], list.degree);
  if (list.degree == 0) {
    // degree-0 group: the trivial group
    return Group(spec, 1, std::make_shared<CyclicMultiplier>(1), std::move(labels), true);
  }
  auto mul = std::make_shared<PermutationMultiplier>(list.degree, std::move(list.points), std::move(list.ranks), full);
  return Group(spec, n, std::move(mul), std::move(labels), abelian);
}

PermutationList all_permutations(unsigned degree, bool even_only) {
  PermutationList list;
  list.degree = degree;
  std::vector<std::uint8_t> p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::uint64_t rank = 0;
  do {
    if (!even_only || is_even(p.data(), degree)) {
      list.points.insert(list.points.end(), p.begin(), p.end());
      list.ranks.push_back(rank);
    }
    ++rank;
  } while (std::next_permutation(p.begin(), p.end()));
  return list;
}

std::vector<std::vector<unsigned>> parse_cycles(const std::string& text, unsigned& degree) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(i, "expected '(' in cycle notation '" + text + "'");
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError(i, "unterminated cycle in '" + text + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError(i, "expected a point in cycle notation '" + text + "'");
      unsigned v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + unsigned(text[i++] - '0');
      if (v < 1 || v > kMaxDegree)
        throw ParseError(i, "permutation point " + std::to_string(v) + " outside 1.." + std::to_string(kMaxDegree));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError(i, "point " + std::to_string(v) + " repeated in a cycle of '" + text + "'");
      cycle.push_back(v);
      degree = std::max(degree, v);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

Group build_from_generators(const GroupSpec& spec, const PermGeneratorsSpec& s, const BuildOptions& options) {
  unsigned degree = 0;
  std::vector<std::vector<std::vector<unsigned>>> parsed;
  for (const auto& g : s.generators) parsed.push_back(parse_cycles(g, degree));
  if (degree == 0) return make_permutation_group(spec, PermutationList{}, true, true);

  std::vector<std::vector<std::uint8_t>> gens;
  for (const auto& cycles : parsed) {
    std::vector<std::uint8_t> p(degree);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    // Cycles compose right-to-left: apply the rightmost cycle first.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<std::uint8_t> c(degree);
      std::iota(c.begin(), c.end(), std::uint8_t{0});
      for (std::size_t k = 0; k < it->size(); ++k)
        c[(*it)[k] - 1] = static_cast<std::uint8_t>((*it)[(k + 1) % it->size()] - 1);
      std::vector<std::uint8_t> next(degree);
      for (unsigned i = 0; i < degree; ++i) next[i] = c[p[i]];
      p = std::move(next);
    }
    gens.push_back(std::move(p));
  }

  bool abelian = true;
  for (std::size_t a = 0; a < gens.size() && abelian; ++a)
    for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
      for (unsigned i = 0; i < degree; ++i)
        if (gens[a][gens[b][i]] != gens[b][gens[a][i]]) {
          abelian = false;
          break;
        }

  std::vector<std::uint8_t> id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::unordered_set<std::uint64_t> seen{lex_rank(id.data(), degree)};
  std::vector<std::vector<std::uint8_t>> frontier{id}, found{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::uint8_t> q(degree);
        for (unsigned i = 0; i < degree; ++i) q[i] = g[p[i]];
        if (seen.insert(lex_rank(q.data(), degree)).second) {
          if (seen.size() > options.order_cap)
            throw Error(ErrorCode::OrderCap, "permutation generators produce a group larger than the order cap " +
                                                 std::to_string(options.order_cap));
          found.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end());
  PermutationList list;
  list.degree = degree;
  for (const auto& p : found) {
    list.points.insert(list.points.end(), p.begin(), p.end());
    list.ranks.push_back(lex_rank(p.data(), degree));
  }
  return make_permutation_group(spec, std::move(list), false, abelian);
}

// ---- Cayley tables ------------------------------------------------------

class CayleyLoaded final : public Multiplier {
 public:
  CayleyLoaded(std::size_t n, std::vector<std::uint32_t> cells) : n_(n), cells_(std::move(cells)) {}
  Element multiply(Element a, Element b) const override { return cells_[std::size_t(a) * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> cells_;
};

Group build_from_cayley(const GroupSpec& spec, const CayleyFileSpec& s, const BuildOptions& options) {
  std::ifstream in(s.path);
  if (!in) throw Error(ErrorCode::Io, "cannot open Cayley file '" + s.path + "'");
  auto bad = [&](const std::string& msg) { return Error(ErrorCode::Parse, "Cayley file '" + s.path + "': " + msg); };
  long long order = 0;
  if (!(in >> order) || order < 1) throw bad("line 1 must hold a positive order");
  if (static_cast<std::uint64_t>(order) > options.order_cap)
    throw Error(ErrorCode::OrderCap, "Cayley table order " + std::to_string(order) + " exceeds the order cap " +
                                         std::to_string(options.order_cap));
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::uint32_t> cells(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = 0;
    if (!(in >> v)) throw bad("expected " + std::to_string(n * n) + " table entries, found " + std::to_string(i));
    if (v < 0 || v >= order)
      throw bad("entry " + std::to_string(v) + " at row " + std::to_string(i / n) + " outside [0, " +
                std::to_string(n) + ")");
    cells[i] = static_cast<std::uint32_t>(v);
  }
  std::string extra;
  if (in >> extra) throw bad("trailing content after the table");

  for (std::size_t g = 0; g < n; ++g)
    if (cells[g] != g || cells[g * n] != g) throw bad("index 0 is not the identity");
  std::vector<std::uint8_t> row_seen(n), col_seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(row_seen.begin(), row_seen.end(), 0);
    std::fill(col_seen.begin(), col_seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[cells[a * n + b]]++) throw bad("row " + std::to_string(a) + " repeats an element");
      if (col_seen[cells[b * n + a]]++) throw bad("column " + std::to_string(a) + " repeats an element");
    }
  }

  bool abelian = true;
  for (std::size_t a = 0; a < n && abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cells[a * n + b] != cells[b * n + a]) {
        abelian = false;
        break;
      }

  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (std::size_t g = 1; g < n; ++g) labels[g] = "g" + std::to_string(g);
  Group group(spec, n, std::make_shared<CayleyLoaded>(n, std::move(cells)), std::move(labels), abelian);
  const auto axioms = check_group_axioms(group);
  if (!axioms.ok) throw bad(axioms.failure);
  return group;
}

// ---- cyclic / abelian / product -----------------------------------------

std::string join_tuple(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ")";
}

Group build_product(const GroupSpec& spec, std::vector<std::shared_ptr<const Group>> factors,
                    const BuildOptions& options, bool numeric_tuple_labels) {
  std::size_t order = 1;
  bool abelian = true;
  for (const auto& f : factors) {
    order *= f->order();
    abelian = abelian && f->is_abelian();
  }
  if (order > options.order_cap)
    throw Error(ErrorCode::OrderCap, "direct product of order " + std::to_string(order) + " exceeds the order cap " +
                                         std::to_string(options.order_cap));
  std::vector<std::string> labels(order);
  std::vector<std::string> parts(factors.size());
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      const auto n = factors[i]->order();
      const auto c = static_cast<Element>(rest % n);
      rest /= n;
      parts[i] = numeric_tuple_labels ? std::to_string(c) : factors[i]->label(c);
    }
    labels[idx] = join_tuple(parts);
  }
  return Group(spec, order, std::make_shared<ProductMultiplier>(std::move(factors)), std::move(labels), abelian);
}

Group build_cyclic(const GroupSpec& spec, std::uint32_t n) {
  std::vector<std::string> labels(n);
  for (std::uint32_t k = 0; k < n; ++k) labels[k] = std::to_string(k);
  return Group(spec, n, std::make_shared<CyclicMultiplier>(n), std::move(labels), true);
}

std::string power_label(const char* sym, std::uint32_t k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

Group build_unchecked(const GroupSpec& spec, const BuildOptions& options);

Group build_dihedral(const GroupSpec& spec, std::uint32_t n) {
  std::vector<std::string> labels(2 * std::size_t(n));
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < n; ++i) {
      std::string l = power_label("r", i) + (j ? "s" : "");
      labels[j * n + i] = l.empty() ? "e" : l;
    }
  return Group(spec, 2 * std::size_t(n), std::make_shared<DihedralMultiplier>(n), std::move(labels), n <= 2);
}

Group build_quaternion(const GroupSpec& spec, std::uint32_t exponent) {
  const std::uint32_t m = 1u << (exponent - 1);
  std::vector<std::string> labels(2 * std::size_t(m));
  for (std::uint32_t b = 0; b < 2; ++b)
    for (std::uint32_t a = 0; a < m; ++a) {
      std::string l = power_label("x", a) + (b ? "y" : "");
      labels[b * m + a] = l.empty() ? "e" : l;
    }
  return Group(spec, 2 * std::size_t(m), std::make_shared<QuaternionMultiplier>(m), std::move(labels), false);
}

Group build_unchecked(const GroupSpec& spec, const BuildOptions& options) {
  if (const auto* s = std::get_if<CyclicSpec>(&spec.value)) return build_cyclic(spec, s->n);
  if (const auto* s = std::get_if<AbelianSpec>(&spec.value)) {
    std::vector<std::shared_ptr<const Group>> factors;
    for (auto f : s->invariants) factors.push_back(std::make_shared<Group>(build_cyclic(CyclicSpec{f}, f)));
    return build_product(spec, std::move(factors), options, true);
  }
  if (const auto* s = std::get_if<DihedralSpec>(&spec.value)) return build_dihedral(spec, s->n);
  if (const auto* s = std::get_if<QuaternionSpec>(&spec.value)) return build_quaternion(spec, s->n);
  if (const auto* s = std::get_if<SymmetricSpec>(&spec.value))
    return make_permutation_group(spec, all_permutations(s->n, false), true, s->n <= 2);
  if (const auto* s = std::get_if<AlternatingSpec>(&spec.value))
    return make_permutation_group(spec, all_permutations(s->n, true), false, s->n <= 3);
  if (const auto* s = std::get_if<ProductSpec>(&spec.value)) {
    std::vector<std::shared_ptr<const Group>> factors;
    for (const auto& f : s->factors) factors.push_back(std::make_shared<Group>(build_group(f, options)));
    return build_product(spec, std::move(factors), options, false);
  }
  if (const auto* s = std::get_if<CayleyFileSpec>(&spec.value)) return build_from_cayley(spec, *s, options);
  return build_from_generators(spec, std::get<PermGeneratorsSpec>(spec.value), options);
}

void partitions_desc(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Group::Group(GroupSpec spec, std::size_t order, std::shared_ptr<const Multiplier> mul,
             std::vector<std::string> labels, bool abelian)
    : spec_(std::move(spec)), order_(order), mul_(std::move(mul)), labels_(std::move(labels)), abelian_(abelian) {
  const bool already_cheap = dynamic_cast<const CyclicMultiplier*>(mul_.get()) != nullptr ||
                             dynamic_cast<const CayleyLoaded*>(mul_.get()) != nullptr;
  if (order_ <= kTableLimit && !already_cheap) {
    mul_ = materialize(order_, *mul_);
    has_table_ = true;
  }
  inverse_.resize(order_);
  element_order_.resize(order_);
  for (std::size_t g = 0; g < order_; ++g) {
    Element prev = identity();
    Element cur = static_cast<Element>(g);
    std::uint32_t k = 1;
    while (cur != identity()) {
      prev = cur;
      cur = multiply(cur, static_cast<Element>(g));
      ++k;
      if (k > order_) throw Error(ErrorCode::Parse, "element " + std::to_string(g) + " has no finite order");
    }
    element_order_[g] = k;
    inverse_[g] = g == 0 ? identity() : prev;
  }
}

Element Group::power(Element g, std::uint64_t k) const {
  k %= element_order_[g];
  Element result = identity();
  Element base = g;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  validate(spec);
  const std::uint64_t nominal = nominal_order(spec);
  if (nominal > options.order_cap)
    throw Error(ErrorCode::OrderCap, to_string(spec) + " has order " + std::to_string(nominal) +
                                         ", above the order cap " + std::to_string(options.order_cap));
  return build_unchecked(spec, options);
}

std::vector<Element> powers_of(const Group& g, Element generator) {
  std::vector<Element> out;
  out.reserve(g.element_order(generator));
  Element cur = Group::identity();
  for (std::uint32_t k = 0; k < g.element_order(generator); ++k) {
    out.push_back(cur);
    cur = g.multiply(cur, generator);
  }
  return out;
}

CyclicSubgroup cyclic_subgroup(const Group& g, Element generator) {
  CyclicSubgroup out;
  out.generator = generator;
  out.members = powers_of(g, generator);
  const auto n = g.element_order(generator);
  for (auto m : out.members)
    if (g.element_order(m) == n) out.generators_all.push_back(m);
  std::sort(out.members.begin(), out.members.end());
  std::sort(out.generators_all.begin(), out.generators_all.end());
  return out;
}

bool is_cyclic(const Group& g) {
  const auto orders = g.element_orders();
  return std::any_of(orders.begin(), orders.end(), [&](std::uint32_t o) { return o == g.order(); });
}

std::optional<std::uint64_t> is_p_group(const Group& g) {
  const auto p = prime_power_base(g.order());
  if (p == 0) return std::nullopt;
  return p;
}

bool has_cyclic_sylow(const Group& g, std::uint64_t p) {
  if (!g.is_abelian()) throw Error(ErrorCode::Unsupported, "has_cyclic_sylow is implemented for abelian groups only");
  if (p < 2 || !is_prime(p) || g.order() % p != 0)
    throw Error(ErrorCode::Domain, std::to_string(p) + " is not a prime dividing |G| = " + std::to_string(g.order()));
  std::uint64_t part = 1;
  for (std::uint64_t n = g.order(); n % p == 0; n /= p) part *= p;
  const auto orders = g.element_orders();
  return std::any_of(orders.begin(), orders.end(), [&](std::uint32_t o) { return o == part; });
}

std::vector<Element> center(const Group& g) {
  std::vector<Element> out;
  if (g.is_abelian()) {
    out.resize(g.order());
    std::iota(out.begin(), out.end(), Element{0});
    return out;
  }
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element h = 0; h < g.order() && central; ++h) central = g.commute(z, h);
    if (central) out.push_back(z);
  }
  return out;
}

std::size_t count_elements_of_order(const Group& g, std::uint32_t k) {
  const auto orders = g.element_orders();
  return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), k));
}

std::vector<std::uint32_t> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::Unsupported, "abelian_invariants needs an abelian group");
  std::vector<std::uint32_t> out;
  const auto orders = g.element_orders();
  for (const auto& [p, e] : factorize(g.order())) {
    // |G[p^k]| = p^(sum_i min(t_i, k)); its increments count the t_i >= k.
    std::vector<unsigned> at_least;  // at_least[k-1] = #{i : t_i >= k}
    unsigned prev_log = 0;
    for (unsigned k = 1; k <= e; ++k) {
      const std::uint64_t pk = ipow(p, k);
      const auto count = std::count_if(orders.begin(), orders.end(), [&](std::uint32_t o) { return pk % o == 0; });
      unsigned log = 0;
      for (auto c = static_cast<std::uint64_t>(count); c > 1; c /= p) ++log;
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<std::uint32_t> exps;
    for (unsigned k = 1; k <= e; ++k) {
      const unsigned next = k < e ? at_least[k] : 0;
      for (unsigned c = 0; c < at_least[k - 1] - next; ++c) exps.push_back(k);
    }
    std::sort(exps.begin(), exps.end());
    for (auto t : exps) out.push_back(static_cast<std::uint32_t>(ipow(p, t)));
  }
  return out;
}

bool is_generalized_quaternion(const Group& g) {
  if (is_p_group(g) != std::optional<std::uint64_t>{2} || g.order() < 8) return false;
  return !is_cyclic(g) && count_elements_of_order(g, 2) == 1;
}

std::vector<GroupSpec> enumerate_abelian_groups(std::uint32_t max_order) {
  if (max_order < 1) throw Error(ErrorCode::Domain, "enumerate_abelian_groups needs max_order >= 1");
  std::vector<GroupSpec> out;
  for (std::uint32_t order = 2; order <= max_order; ++order) {
    std::vector<std::vector<std::uint32_t>> per_prime_options{{}};
    for (const auto& [p, e] : factorize(order)) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions_desc(e, e, cur, parts);
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& prefix : per_prime_options)
        for (const auto& part : parts) {
          auto inv = prefix;
          std::vector<std::uint32_t> block;
          for (auto t : part) block.push_back(static_cast<std::uint32_t>(ipow(p, t)));
          std::sort(block.begin(), block.end());
          inv.insert(inv.end(), block.begin(), block.end());
          next.push_back(std::move(inv));
        }
      per_prime_options = std::move(next);
    }
    for (auto& inv : per_prime_options) out.emplace_back(AbelianSpec{std::move(inv)});
  }
  return out;
}

AxiomCheck check_group_axioms(const Group& g, std::size_t exhaustive_limit, std::size_t samples) {
  const std::size_t n = g.order();
  auto fail = [](std::string msg) { return AxiomCheck{false, std::move(msg)}; };
  for (Element x = 0; x < n; ++x) {
    if (g.multiply(0, x) != x || g.multiply(x, 0) != x) return fail("identity law fails at " + g.label(x));
    if (g.multiply(x, g.inverse(x)) != 0 || g.multiply(g.inverse(x), x) != 0)
      return fail("inverse law fails at " + g.label(x));
  }
  auto assoc = [&](Element a, Element b, Element c) {
    return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
  };
  if (n <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.multiply(a, b);
        for (Element c = 0; c < n; ++c)
          if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c)))
            return fail("associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
      }
    return {};
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (!assoc(a, b, c))
      return fail("associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
  }
  return {};
}

}  // namespace groupgraphs
