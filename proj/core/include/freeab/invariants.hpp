#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "freeab/ring.hpp"

namespace freeab {

// Canonical isomorphism-class data of a finitely generated module.
//
// Over Z: free rank plus invariant factors t_1 | t_2 | ... (each > 1).
// Over Z/n: the module is a finite abelian group; free_rank is 0 and
//   torsion lists its invariant factors (a free summand Z/n shows up as n).
// Over F_p and Q: dimension only, stored in free_rank.
struct GroupInvariants {
  RingSpec ring = RingSpec::integers();
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  // Invariants of the module  (+)_i A/(d_i)  given the cyclic annihilators
  // d_i as integers (0 meaning a free summand). Takes care of merging the
  // factors into a divisibility chain.
  static GroupInvariants from_cyclic(const RingSpec& ring, const std::vector<BigInt>& orders);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }

  // Cardinality; empty when infinite.
  std::optional<BigInt> order() const;

  GroupInvariants direct_sum(const GroupInvariants& other) const;
  GroupInvariants power(std::size_t k) const;

  // "free_rank: r\ntorsion: [a, b]"
  std::string to_string() const;

  friend bool operator==(const GroupInvariants& a, const GroupInvariants& b) {
    return a.ring == b.ring && a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend std::ostream& operator<<(std::ostream& os, const GroupInvariants& g) { return os << g.to_string(); }
};

}  // namespace freeab
