#pragma once

#include <string>
#include <vector>

namespace unicusp {

// Lattice-path view of membership on [1, 2g]: one step per integer,
// R on members, U on gaps.  Columns are indexed by the members (the R
// steps); squares_above counts the unit squares between the path and
// the top edge of the g x g square in that column, which coincides
// with the number of gaps strictly above the member.
struct DyckColumn {
  long long member = 0;
  long long squares_above = 0;
};

struct DyckPath {
  std::string steps;                // length 2g over {R, U}
  std::vector<DyckColumn> columns;  // g entries, one per member in [1, 2g]
};

// Cofinite additive submonoid of N containing 0, canonically
// represented by its membership table on [0, conductor].  Immutable
// after construction; all queries are pure.
class NumericalSemigroup {
 public:
  NumericalSemigroup();  // the full semigroup N

  // Throws std::invalid_argument when gcd(generators) != 1 ("not
  // cofinite") or the list is empty / contains nonpositive entries.
  static NumericalSemigroup from_generators(std::vector<long long> generators);

  // Throws std::invalid_argument when the complement of the gap set
  // is not closed under addition.
  static NumericalSemigroup from_gaps(std::vector<long long> gap_set);

  // Semigroup generated by the products (a_1...a_n)/a_i for pairwise
  // coprime a_i >= 2, n >= 2.  For n = 3 the conductor is checked
  // against 2*a1*a2*a3 - (a1*a2 + a1*a3 + a2*a3) + 1.
  static NumericalSemigroup supersymmetric(const std::vector<long long>& a);

  // Rebuild a genus-g semigroup from its membership table on [1, 2g];
  // everything above 2g is a member.  Throws std::invalid_argument on
  // inconsistent input (wrong gap count, complement not closed).
  static NumericalSemigroup from_truncation(const std::vector<bool>& member_on_1_to_2g,
                                            long long genus);

  const std::vector<long long>& minimal_generators() const { return generators_; }
  const std::vector<long long>& gaps() const { return gaps_; }
  long long genus() const { return static_cast<long long>(gaps_.size()); }
  long long conductor() const { return conductor_; }
  long long frobenius() const { return conductor_ - 1; }  // -1 for N

  bool contains(long long x) const;

  // Number of gaps strictly greater than `member`.  Throws
  // std::domain_error when `member` does not belong to the semigroup.
  long long rho(long long member) const;

  // For every x in [0, c-1], exactly one of x and c-1-x is a member.
  bool is_symmetric() const;
  bool is_hyperelliptic() const { return contains(2); }

  DyckPath dyck_path() const;

  std::vector<long long> members_up_to(long long bound) const;

  bool operator==(const NumericalSemigroup& other) const { return gaps_ == other.gaps_; }
  bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

 private:
  std::vector<long long> generators_;
  std::vector<long long> gaps_;
  long long conductor_ = 0;
  std::vector<char> member_;  // table on [0, conductor_]

  void derive_from_table();
};

// All semigroups of genus exactly `genus`, each once, via the
// semigroup tree (children remove one minimal generator above the
// Frobenius number; visited in ascending removed-generator order).
// Throws std::length_error when genus exceeds `genus_bound`.
std::vector<NumericalSemigroup> enumerate_genus(long long genus, long long genus_bound = 18);

}  // namespace unicusp
