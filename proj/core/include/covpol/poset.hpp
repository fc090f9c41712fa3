#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covpol/bitset.hpp"
#include "covpol/polynomial.hpp"

namespace covpol {

struct CycleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotUniqueError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotGradedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite poset on elements 0..N-1 with an opaque label per element.
///
/// Stores the full order relation as bitset rows (up_set(x) = everything
/// above x) plus the Hasse diagram as cover lists.  Immutable once built;
/// every query is const, so instances can be shared across threads.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure + transitive reduction of an arbitrary
  // acyclic relation.  Pairs are (x, y) meaning x <= y.  Throws CycleError.
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& leq_pairs);

  // Builder for callers that already know the Hasse diagram (products,
  // ideal lattices, root posets).  Pairs are (x, y) with y covering x.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& cover_pairs);

  static Poset antichain(int n);
  static Poset chain(int n);

  int size() const { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  const Bitset& up_set(int x) const { return up_[x]; }      // {y : x <= y}
  const Bitset& down_set(int x) const { return down_[x]; }  // {y : y <= x}
  const std::vector<int>& covers_up(int x) const { return covers_up_[x]; }
  const std::vector<int>& covers_down(int x) const { return covers_down_[x]; }

  int kappa(int x) const { return static_cast<int>(covers_down_[x].size()); }
  int iota(int x) const { return static_cast<int>(covers_up_[x].size()); }
  long long edge_count() const;
  std::vector<std::pair<int, int>> hasse_edges() const;  // (lower, upper)

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::vector<int> linear_extension() const;  // minimal elements first

  Polynomial upper_covering_polynomial() const;  // sum_x q^kappa(x)
  Polynomial lower_covering_polynomial() const;  // sum_x q^iota(x)
  Polynomial deviation_polynomial() const;       // (K_up - K_low)/(q-1)^2

  // Coefficient of q^k = number of k-element antichains.  Backtracking over
  // a fixed element order, pruning by comparability; output-sensitive.
  Polynomial antichain_polynomial() const;

  Poset opposite() const;
  Poset induced(const std::vector<int>& keep) const;
  Poset remove_top() const;     // NotUniqueError without a unique maximum
  Poset remove_bottom() const;  // NotUniqueError without a unique minimum

  // Ordered wedge/vee triple counts: (sum kappa(kappa-1), sum iota(iota-1)).
  // Always satisfies wedge - vee = 2 * deviation(1).
  std::pair<long long, long long> triple_counts() const;

  bool is_lattice() const;
  bool is_distributive_lattice() const;

  // True when every maximal chain has the same number of elements; that
  // number is written to *chain_size when non-null.
  bool is_graded(int* chain_size = nullptr) const;

  // Direct triple scan of the order axioms; intended for small N.
  bool check_order_axioms() const;

 private:
  void finish_from_covers();  // fills up_/down_ from covers_up_

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> covers_up_, covers_down_;
};

Poset disjoint_sum(const Poset& a, const Poset& b);
Poset direct_product(const Poset& a, const Poset& b);

// Brute-force permutation search; test-scale helper, guarded to n <= 10.
bool are_isomorphic(const Poset& a, const Poset& b);

// Random DAG on n elements: each pair (i, j), i < j, becomes a relation with
// probability edge_prob.  Deterministic for a fixed generator state.
Poset random_poset(std::mt19937_64& rng, int n, double edge_prob);

/// Upward-closed subset of a carrier poset, as a bitset over its elements.
using UpperIdeal = Bitset;

bool is_upper_ideal(const Poset& p, const UpperIdeal& ideal);
int ideal_kappa(const Poset& p, const UpperIdeal& ideal);  // |min(I)|
int ideal_iota(const Poset& p, const UpperIdeal& ideal);   // |max(P \ I)|

// All upper ideals of p in canonical order (cardinality, then word-lex).
// Throws BudgetError past `budget` ideals.
std::vector<UpperIdeal> enumerate_upper_ideals(const Poset& p,
                                               std::size_t budget = 1'000'000);

/// Vertex/edge statistics of J*(p) computed per ideal from |min(I)| and
/// |max(P \ I)| without materializing the lattice.
struct UpperIdealStats {
  long long count = 0;
  long long edges = 0;
  Polynomial upper;  // K_up of J*(p)
  Polynomial lower;  // K_low of J*(p)
};
UpperIdealStats upper_ideal_stats(const Poset& p, std::size_t budget = 1'000'000);

// Explicit lattice J*(p) of upper ideals ordered by inclusion; covers differ
// by exactly one element.  Meant for cross-checks at moderate sizes.
Poset upper_ideal_lattice(const Poset& p, std::size_t budget = 1'000'000);

}  // namespace covpol
