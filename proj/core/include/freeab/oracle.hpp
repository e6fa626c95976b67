#pragma once

// Brute-force oracles over finite rings.
//
// Nothing in this header touches the Smith form: modules are enumerated
// coset by coset in the ambient free module (Z/n)^b, and every decision is
// made by exhaustive search. These routines exist to cross-check the
// algebraic code paths and are only practical at desk scale.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "freeab/module.hpp"

namespace freeab {

// A finite module with its elements listed explicitly.
class FiniteModule {
 public:
  // Refuses ambient spaces larger than `max_ambient` vectors.
  explicit FiniteModule(const FpModule<ModularRing>& m, std::size_t max_ambient = std::size_t{1} << 22);

  const FpModule<ModularRing>& presentation() const noexcept { return module_; }
  std::size_t order() const noexcept { return reps_.size(); }
  std::size_t gens() const noexcept { return module_.gens(); }
  std::size_t zero() const noexcept { return 0; }

  // Lexicographically least representative of element i.
  std::span<const std::int64_t> rep(std::size_t i) const { return {reps_[i].data(), reps_[i].size()}; }

  // Element index of an arbitrary ambient vector.
  std::size_t index_of(std::span<const std::int64_t> ambient) const;

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * order() + b]; }
  std::size_t scale(std::int64_t r, std::size_t a) const { return scale_[static_cast<std::size_t>(r) * order() + a]; }

 private:
  std::size_t encode(std::span<const std::int64_t> v) const;

  FpModule<ModularRing> module_;
  std::int64_t q_;
  std::vector<std::uint32_t> coset_;  // ambient index -> element index
  std::vector<std::vector<std::int64_t>> reps_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> scale_;
};

// One representative per coset, |M| in total, in lexicographic order of
// the least representatives.
template <ExactRing R>
std::vector<ModuleElement<R>> enumerate_elements(const FpModule<R>& m) {
  if constexpr (std::is_same_v<R, ModularRing>) {
    FiniteModule table(m);
    auto shared = std::make_shared<const FpModule<R>>(m);
    std::vector<ModuleElement<R>> out;
    out.reserve(table.order());
    for (std::size_t i = 0; i < table.order(); ++i) {
      auto r = table.rep(i);
      out.emplace_back(shared, Matrix<R>::from_values(m.ring(), 1, m.gens(), {r.begin(), r.end()}));
    }
    return out;
  } else {
    throw Unsupported("element enumeration over the infinite ring " + m.ring().spec().name());
  }
}

// Tuples in M^k indexed by their base-|M| encoding; component 0 is least
// significant.
class TupleSpace {
 public:
  TupleSpace(std::size_t order, std::size_t length);
  std::size_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return length_; }
  void decode(std::size_t code, std::vector<std::size_t>& out) const;
  std::size_t encode(const std::vector<std::size_t>& tuple) const;

 private:
  std::size_t order_, length_, size_;
};

// x -> x * A for x in M^rows(A), as element indices.
void apply_matrix(const FiniteModule& m, const Matrix<ModularRing>& a, const std::vector<std::size_t>& x,
                  std::vector<std::size_t>& out);

// |{x in M^m : xU = 0} / ({yV} intersected)|  by enumeration.
std::size_t brute_subquotient_order(const Matrix<ModularRing>& u, const Matrix<ModularRing>& v, const FiniteModule& m);

// xU = 0  implies  x = yV  for some y.
bool brute_pair_holds(const Matrix<ModularRing>& u, const Matrix<ModularRing>& v, const FiniteModule& m);

// Exhaustive search for S, T with  C == G1 S + T F2  (same shapes as
// homotopy_solve). Refuses more than `max_unknowns` unknowns.
std::optional<HomotopySolution<ModularRing>> brute_homotopy(const Matrix<ModularRing>& g1, const Matrix<ModularRing>& f2,
                                                            const Matrix<ModularRing>& c, std::size_t max_unknowns = 24);

}  // namespace freeab
