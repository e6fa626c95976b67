#pragma once

// Batch audits behind the audit-* commands.
//
// Each audit walks a fixed list of cases (exhaustive or drawn from a seeded
// generator up front), hands contiguous slices to worker threads and
// merges the slices back in case order, so reports do not depend on --jobs.

#include <cstdint>
#include <string>
#include <vector>

#include "freeab/freeab.hpp"

namespace freeab::cli {

struct AuditOptions {
  RingSpec ring = RingSpec::integers_mod(4);
  Side side = Side::Right;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_rank = 2;
  std::size_t max_module = 16;
  long long max_entry = 3;
  std::size_t jobs = 1;
  std::size_t cases = 500;
  std::size_t case_ceiling = 50'000'000;
};

struct AuditReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;  // first few violations, in case order
  std::vector<std::string> table;    // audit-herzog only

  std::string summary() const;
};

// Random morphisms: eval(coker f) = ker(eval f), eval(ker f) = coker(eval f)
// at every test module, plus d(d f) = f and the two duality comparisons.
AuditReport audit_exactness(const AuditOptions& opt);

// Every chain with ranks <= max_rank against every module of order <=
// max_module: |eval(X, M)| = |eval(dX, M*)|. Finite rings only.
AuditReport audit_elementary_duality(const AuditOptions& opt);

// Membership classes of all single-pair specs at tested scale, on both
// sides of the transform. Finite rings only.
AuditReport audit_herzog(const AuditOptions& opt);

// Modules the exactness audit evaluates at: the finite battery over Z/n,
// otherwise A itself and a few cyclic quotients.
template <ExactRing R>
std::vector<FpModule<R>> test_modules(const R& ring, Side side, std::size_t max_module) {
  if constexpr (std::is_same_v<R, ModularRing>) {
    return finite_modules(ring, side, max_module);
  } else {
    std::vector<FpModule<R>> out{FpModule<R>::free(ring, side, 1)};
    if constexpr (std::is_same_v<R, IntegerRing>) {
      for (std::size_t k = 2; k <= std::min<std::size_t>(max_module, 12); ++k) {
        out.push_back(FpModule<R>::cyclic(ring, side, static_cast<long long>(k)));
      }
    }
    return out;
  }
}

// "[2, 4]" for Z/2 + Z/4; "A" for a free summand.
std::string module_label(const GroupInvariants& inv);

}  // namespace freeab::cli
