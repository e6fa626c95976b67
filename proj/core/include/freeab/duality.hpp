#pragma once

// Arrow-reversal duality between right and left chain categories, the pair
// swap on definable data, and the audits built on them.

#include <optional>
#include <string>

#include "freeab/bridge.hpp"

namespace freeab {

// Same stored matrices, reversed order, opposite side.
template <ExactRing R>
ChainObject<R> dual_object(const ChainObject<R>& x) {
  return ChainObject<R>(opposite(x.side()), x.second(), x.first());
}

// d(f) : d(Y) -> d(X) with components (M3, M2, M1) as stored.
template <ExactRing R>
ChainMorphism<R> dual_morphism(const ChainMorphism<R>& f) {
  return ChainMorphism<R>::make(dual_object(f.target()), dual_object(f.source()), f.m3(), f.m2(), f.m1());
}

template <ExactRing R>
DefinableSpec<R> herzog_transform(const DefinableSpec<R>& spec) {
  std::vector<typename DefinableSpec<R>::Pair> pairs;
  pairs.reserve(spec.size());
  for (const auto& [u, v] : spec.pairs()) pairs.emplace_back(v, u);
  return DefinableSpec<R>(spec.ring(), opposite(spec.side()), std::move(pairs));
}

struct ElementaryDualityReport {
  GroupInvariants direct;  // eval(X, M)
  GroupInvariants dual;    // eval(dX, M*)
  BigInt direct_order;
  BigInt dual_order;
  bool holds() const { return direct_order == dual_order; }
};

template <ExactRing R>
ElementaryDualityReport elementary_duality_check(const ChainObject<R>& x, const FpModule<R>& m) {
  FpModule<R> star = char_dual(m);
  ElementaryDualityReport r;
  r.direct = eval_object(x, m);
  r.dual = eval_object(dual_object(x), star);
  r.direct_order = *r.direct.order();
  r.dual_order = *r.dual.order();
  return r;
}

// d(coker f) -> ker(d f). The two objects coincide, so this is the
// identity triple; make() re-checks both squares.
template <ExactRing R>
ChainMorphism<R> dual_cokernel_comparison(const ChainMorphism<R>& f) {
  ChainObject<R> dc = dual_object(cokernel(f).object);
  ChainObject<R> kd = kernel(dual_morphism(f)).object;
  auto id = ChainMorphism<R>::identity(dc);
  return ChainMorphism<R>::make(dc, kd, id.m1(), id.m2(), id.m3());
}

// d(ker f) -> coker(d f), likewise the identity triple.
template <ExactRing R>
ChainMorphism<R> dual_kernel_comparison(const ChainMorphism<R>& f) {
  ChainObject<R> dk = dual_object(kernel(f).object);
  ChainObject<R> cd = cokernel(dual_morphism(f)).object;
  auto id = ChainMorphism<R>::identity(dk);
  return ChainMorphism<R>::make(dk, cd, id.m1(), id.m2(), id.m3());
}

// |eval(dX, N)| against Ker(X' (x) N -> Y' (x) N) for kappa_inv(X) = f: X' -> Y'.
struct TensorOracleReport {
  GroupInvariants dual_eval;
  GroupInvariants tensor_kernel;
  bool holds() const { return dual_eval == tensor_kernel; }
};

template <ExactRing R>
TensorOracleReport tensor_oracle(const ChainObject<R>& x, const FpModule<R>& n) {
  if (n.side() == x.side()) throw SideMismatch("tensor oracle needs a module on the opposite side of X");
  ModuleMap<R> f = kappa_inv(x).module_map(x.side());
  return {eval_object(dual_object(x), n), tensor_induced(f, n).kernel_invariants()};
}

struct ExactnessReport {
  bool cokernel_side = false;  // d(coker f) ~ ker(d f)
  bool kernel_side = false;    // d(ker f) ~ coker(d f)
  std::optional<bool> tensor;  // only when a test module was supplied
  bool holds() const { return cokernel_side && kernel_side && tensor.value_or(true); }
};

template <ExactRing R>
ExactnessReport dual_exactness_audit(const ChainMorphism<R>& f, const FpModule<R>* test_module = nullptr) {
  ExactnessReport r;
  r.cokernel_side = is_isomorphism(dual_cokernel_comparison(f));
  r.kernel_side = is_isomorphism(dual_kernel_comparison(f));
  if (test_module) r.tensor = tensor_oracle(f.source(), *test_module).holds();
  return r;
}

}  // namespace freeab
