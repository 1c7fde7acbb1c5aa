#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupgraphs/group_spec.hpp"

namespace groupgraphs {

/// Index of a group element. The identity is always 0.
using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 10080;
/// Groups up to this order get a materialized multiplication table.
inline constexpr std::uint64_t kTableLimit = 5040;

struct BuildOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
};

/// Computes products on demand. Implementations must be thread-safe for
/// concurrent reads.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual Element multiply(Element a, Element b) const = 0;
};

/// A finite group realized on element indices [0, order). Immutable once
/// built; safe to share between threads.
class Group {
 public:
  Group(GroupSpec spec, std::size_t order, std::shared_ptr<const Multiplier> mul,
        std::vector<std::string> labels, bool abelian);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element multiply(Element a, Element b) const { return mul_->multiply(a, b); }
  Element inverse(Element g) const { return inverse_[g]; }
  std::uint32_t element_order(Element g) const { return element_order_[g]; }
  std::span<const std::uint32_t> element_orders() const { return element_order_; }
  const std::string& label(Element g) const { return labels_[g]; }
  bool is_abelian() const { return abelian_; }
  bool has_table() const { return has_table_; }

  /// g^k for k >= 0.
  Element power(Element g, std::uint64_t k) const;
  bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }

 private:
  GroupSpec spec_;
  std::size_t order_;
  std::shared_ptr<const Multiplier> mul_;
  std::vector<std::string> labels_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  bool abelian_;
  bool has_table_ = false;
};

/// Builds the group described by `spec`. Element numbering:
///   cyclic:N      k -> k
///   abelian / products  row-major tuples of factor indices, first factor slowest
///   dihedral:N    r^i s^j -> j*N + i
///   quaternion:N  x^a y^b -> b*2^(N-1) + a
///   symmetric / alternating / perm  permutations in lexicographic one-line order
/// Throws Error(OrderCap) above options.order_cap, Error(Parse)/Error(Io) for
/// bad input files, Error(Domain) for invalid specs.
Group build_group(const GroupSpec& spec, const BuildOptions& options = {});

struct CyclicSubgroup {
  Element generator = 0;
  std::vector<Element> members;         // sorted
  std::vector<Element> generators_all;  // sorted, Gen(generator)
};

CyclicSubgroup cyclic_subgroup(const Group& g, Element generator);

/// Members of <generator> in power order: e, g, g^2, ...
std::vector<Element> powers_of(const Group& g, Element generator);

bool is_cyclic(const Group& g);

/// The prime p when |G| = p^r with r >= 1.
std::optional<std::uint64_t> is_p_group(const Group& g);

/// Abelian groups only: true iff G has an element whose order is the full
/// p-part of |G|. Throws Error(Unsupported) for non-abelian input and
/// Error(Domain) when p does not divide |G|.
bool has_cyclic_sylow(const Group& g, std::uint64_t p);

std::vector<Element> center(const Group& g);

/// Primary invariants (prime powers, grouped by increasing prime and
/// increasing exponent) of an abelian group, recovered from element-order
/// counts. Throws Error(Unsupported) for non-abelian input.
std::vector<std::uint32_t> abelian_invariants(const Group& g);

/// 2-group that is non-cyclic with a unique involution.
bool is_generalized_quaternion(const Group& g);

std::size_t count_elements_of_order(const Group& g, std::uint32_t k);

/// One AbelianSpec per isomorphism class of abelian group with
/// 2 <= order <= max_order, ordered by group order and then by partition
/// (fewest parts first) of each prime exponent.
std::vector<GroupSpec> enumerate_abelian_groups(std::uint32_t max_order);

struct AxiomCheck {
  bool ok = true;
  std::string failure;
};

/// Identity, inverse and associativity checks: exhaustive up to
/// `exhaustive_limit`, otherwise `samples` random triples (fixed seed).
AxiomCheck check_group_axioms(const Group& g, std::size_t exhaustive_limit = 512,
                              std::size_t samples = 1'000'000);

}  // namespace groupgraphs
