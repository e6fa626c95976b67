#include "freeab/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace freeab {

namespace {

// Pairwise gcd/lcm sweep; afterwards v[0] | v[1] | ...
void to_divisor_chain(std::vector<BigInt>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      BigInt g = gcd(v[i], v[j]);
      BigInt l = lcm(v[i], v[j]);
      v[i] = g;
      v[j] = l;
    }
  }
  v.erase(std::remove(v.begin(), v.end(), BigInt(1)), v.end());
}

}  // namespace

GroupInvariants GroupInvariants::from_cyclic(const RingSpec& ring, const std::vector<BigInt>& orders) {
  GroupInvariants g;
  g.ring = ring;
  const BigInt n(static_cast<long>(ring.modulus()));
  for (BigInt d : orders) {
    d = abs(d);
    switch (ring.kind()) {
      case RingKind::Integers:
        if (d == 0) {
          ++g.free_rank;
        } else if (d != 1) {
          g.torsion.push_back(d);
        }
        break;
      case RingKind::IntegersMod: {
        BigInt c = gcd(d, n);  // gcd(0, n) = n: a free summand
        if (c != 1) g.torsion.push_back(c);
        break;
      }
      case RingKind::PrimeField:
      case RingKind::Rationals:
        if (d == 0 || (ring.kind() == RingKind::PrimeField && d % n == 0)) ++g.free_rank;
        break;
    }
  }
  to_divisor_chain(g.torsion);
  return g;
}

std::optional<BigInt> GroupInvariants::order() const {
  BigInt total = 1;
  if (free_rank > 0) {
    if (ring.kind() != RingKind::PrimeField) return std::nullopt;
    BigInt p(static_cast<long>(ring.modulus()));
    for (std::size_t i = 0; i < free_rank; ++i) total *= p;
  }
  for (const auto& t : torsion) total *= t;
  return total;
}

GroupInvariants GroupInvariants::direct_sum(const GroupInvariants& other) const {
  if (!(ring == other.ring)) throw RingMismatch("direct sum of invariants over " + ring.name() + " and " + other.ring.name());
  GroupInvariants g = *this;
  g.free_rank += other.free_rank;
  g.torsion.insert(g.torsion.end(), other.torsion.begin(), other.torsion.end());
  to_divisor_chain(g.torsion);
  return g;
}

GroupInvariants GroupInvariants::power(std::size_t k) const {
  GroupInvariants g;
  g.ring = ring;
  for (std::size_t i = 0; i < k; ++i) g = g.direct_sum(*this);
  return g;
}

std::string GroupInvariants::to_string() const {
  std::ostringstream os;
  os << "free_rank: " << free_rank << "\ntorsion: [";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? ", " : "") << torsion[i].get_str();
  os << ']';
  return os.str();
}

}  // namespace freeab
