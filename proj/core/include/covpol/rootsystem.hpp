#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covpol/poset.hpp"

namespace covpol {

enum class Family { A, B, C, D, E, F, G, BC };

struct RootSystemType {
  Family family{};
  int rank = 0;

  static RootSystemType parse(const std::string& s);  // "A5", "BC3", "E8"
  std::string str() const;
  bool reduced() const { return family != Family::BC; }
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
  bool operator==(const RootSystemType&) const = default;
};

/// Positive root in simple-root coordinates (c_1..c_n with gamma = sum c_i
/// alpha_i).  Coordinates may be negative for intermediate reflection images.
struct Root {
  std::vector<int> coords;
  int height() const;
  bool is_positive() const;  // all coords >= 0, not all zero
  bool operator==(const Root&) const = default;
  std::string str() const;  // "2,3,4,6,5,4,3,2"
};

/// Positive roots of an irreducible root system with the Cartan, affine and
/// length data the ideal machinery needs.
///
/// Conventions: Bourbaki node numbering; cartan(i, j) = (alpha_i, alpha_j^vee);
/// lengths normalized so long roots have squared length 2.  Reduced types are
/// generated by root-string closure from the Cartan matrix; BC_n is the union
/// of the B_n and C_n positive systems in the epsilon basis, re-expressed over
/// Pi(B_n).  Immutable after build().
class RootSystem {
 public:
  static RootSystem build(RootSystemType t);  // std::invalid_argument on bad rank

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int index_of(const Root& r) const;  // -1 when absent

  int simple_index(int i) const { return simple_idx_[i - 1]; }  // i in 1..n
  bool is_simple(int idx) const;
  int theta_index() const { return theta_idx_; }
  const Root& theta() const { return roots_[theta_idx_]; }

  // (alpha_i, alpha_j^vee) for i, j in 1..n.
  int cartan(int i, int j) const { return ext_cartan_[i][j]; }
  // Indices 0..n with alpha_0 = delta - theta.
  const std::vector<std::vector<int>>& extended_cartan() const { return ext_cartan_; }
  // (1, c_1..c_n): coefficients of delta over the affine simple roots.
  const std::vector<int>& marks() const { return marks_; }
  // (alpha_j, theta^vee) for j in 0..n (entry 0 is -2).
  const std::vector<int>& theta_covector() const { return theta_covector_; }

  int coxeter_number() const;  // reduced types only; throws for BC

  // (gamma, alpha_j^vee), j in 1..n; valid for any integer coordinate vector.
  int pairing(const Root& gamma, int j) const;

  bool is_long(int root_idx) const { return long_flag_[root_idx]; }
  // Squared length equals theta's under the normalized form.
  bool is_long(const Root& r) const;

  // Index of roots_[i] + roots_[j] in the root list, -1 when not a root.
  int sum_index(int i, int j) const { return sum_idx_[i][j]; }

  // Poset on the positive roots: gamma covers mu iff gamma - mu is simple.
  // Element k of the poset is positive_roots()[k].
  Poset root_poset() const;
  Poset without_simples() const;  // induced subposet on the non-simple roots
  Poset with_zero() const;        // adds a bottom element under the simples

  // Roots whose principal upper ideal is abelian; reduced types only.
  std::vector<int> commutative_roots() const;

  // Orthonormal-basis coordinates; available for the B, C and BC families.
  const std::vector<int>& epsilon_coords(int idx) const;
  int index_of_epsilon(const std::vector<int>& eps) const;  // -1 when absent

 private:
  RootSystemType type_;
  std::vector<Root> roots_;  // sorted by (height, lex coords)
  std::vector<int> simple_idx_;
  int theta_idx_ = -1;
  std::vector<std::vector<int>> ext_cartan_;  // (n+1) x (n+1)
  std::vector<int> marks_;
  std::vector<int> theta_covector_;
  std::optional<int> coxeter_;
  std::vector<bool> long_flag_;
  std::vector<std::vector<int>> sum_idx_;
  std::vector<std::vector<int>> eps_coords_;  // empty unless B/C/BC
};

/// Order isomorphisms of the BC correspondence: positive roots of BC_n onto
/// the non-simple positive roots of B_{n+1} and C_{n+1}, and the induced
/// isomorphism between the full B_{n+1} and C_{n+1} root posets.
struct BCCorrespondence {
  RootSystem bc, b, c;            // BC_n, B_{n+1}, C_{n+1}
  std::vector<int> bc_to_b;       // root index maps
  std::vector<int> bc_to_c;
  std::vector<int> b_to_c;
};
BCCorrespondence bc_correspondence(int n);

}  // namespace covpol
