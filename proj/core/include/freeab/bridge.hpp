#pragma once

// Presentations of finitely presented functors, chain objects, and
// evaluation of chains at modules.
//
// A PresentedMorphism is a commuting square of free modules
//
//        b              a
//   A^m ---> A^k   A^m ---> A^n ---> X ---> 0
//                   |        | c
//                   v        v
//             A^k ---> A^l ---> Y ---> 0
//                  d
//
// in column convention (c a = d b), describing f : X -> Y. The functor it
// presents is  M |-> coker(Hom(Y, M) -> Hom(X, M)).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "freeab/chain.hpp"

namespace freeab {

template <ExactRing R>
class PresentedMorphism {
 public:
  // a: n x m, b: k x m, c: l x n, d: l x k with c a = d b.
  PresentedMorphism(Matrix<R> a, Matrix<R> b, Matrix<R> c, Matrix<R> d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require_same_ring(a_.ring(), b_.ring(), "presented morphism");
    require_same_ring(a_.ring(), c_.ring(), "presented morphism");
    require_same_ring(a_.ring(), d_.ring(), "presented morphism");
    if (b_.cols() != a_.cols() || c_.cols() != a_.rows() || d_.rows() != c_.rows() || d_.cols() != b_.rows()) {
      throw ShapeError("presented morphism shapes a " + a_.shape_string() + ", b " + b_.shape_string() + ", c " +
                       c_.shape_string() + ", d " + d_.shape_string());
    }
    if (!(c_ * a_ == d_ * b_)) throw InvalidMorphism("left square", "c * a != d * b");
  }

  // The same f read off a module map with relation rows: a and d are the
  // transposed relation matrices, c the transposed map, b any lift.
  static PresentedMorphism from_module_map(const ModuleMap<R>& f) {
    Matrix<R> a = f.source().relations().transpose();
    Matrix<R> d = f.target().relations().transpose();
    Matrix<R> c = f.matrix().transpose();
    auto b = solve_left(d, c * a);
    if (!b) throw Error("module map is not well defined: relations do not map into relations");
    return PresentedMorphism(std::move(a), std::move(*b), std::move(c), std::move(d));
  }

  const R& ring() const noexcept { return a_.ring(); }
  const Matrix<R>& a() const noexcept { return a_; }
  const Matrix<R>& b() const noexcept { return b_; }
  const Matrix<R>& c() const noexcept { return c_; }
  const Matrix<R>& d() const noexcept { return d_; }

  FpModule<R> source_module(Side side) const { return FpModule<R>(ring(), side, a_.rows(), a_.transpose()); }
  FpModule<R> target_module(Side side) const { return FpModule<R>(ring(), side, d_.rows(), d_.transpose()); }
  ModuleMap<R> module_map(Side side) const { return ModuleMap<R>(source_module(side), target_module(side), c_.transpose()); }

  friend bool operator==(const PresentedMorphism&, const PresentedMorphism&) = default;

 private:
  Matrix<R> a_, b_, c_, d_;
};

// (A^(m+k) -[[a, 0], [b, -1]]-> A^(n+k) -[c, -d]-> A^l)
template <ExactRing R>
ChainObject<R> kappa(const PresentedMorphism<R>& f, Side side = Side::Right) {
  const R& ring = f.ring();
  const std::size_t m = f.a().cols(), n = f.a().rows(), k = f.b().rows();
  Matrix<R> s(ring, n + k, m + k);
  s.paste(0, 0, f.a());
  s.paste(n, 0, f.b());
  s.paste(n, m, Matrix<R>::identity(ring, k).negated());
  Matrix<R> t = hstack(f.c(), f.d().negated());
  return ChainObject<R>::from_columns(side, s, t);
}

// For (A^m -u-> A^n -v-> A^p): a = u, b = 1, c = v, d = v u.
template <ExactRing R>
PresentedMorphism<R> kappa_inv(const ChainObject<R>& x) {
  const Matrix<R> u = x.column_first(), v = x.column_second();
  return PresentedMorphism<R>(u, Matrix<R>::identity(x.ring(), u.cols()), v, v * u);
}

// X -> kappa(kappa_inv(X)) given by ([1; 1], [1; 0], 1).
template <ExactRing R>
ChainMorphism<R> kappa_comparison(const ChainObject<R>& x) {
  const R& ring = x.ring();
  const Ranks r = x.ranks();
  ChainObject<R> y = kappa(kappa_inv(x), x.side());
  Matrix<R> c1 = vstack(Matrix<R>::identity(ring, r.r1), Matrix<R>::identity(ring, r.r1));
  Matrix<R> c2 = vstack(Matrix<R>::identity(ring, r.r2), Matrix<R>(ring, r.r1, r.r2));
  return ChainMorphism<R>::from_columns(x, y, c1, c2, Matrix<R>::identity(ring, r.r3));
}

namespace detail {

template <ExactRing R>
void require_evaluable(const ChainObject<R>& x, const FpModule<R>& m) {
  require_same_ring(x.ring(), m.ring(), "evaluation");
  if (x.side() != m.side()) {
    throw SideMismatch("evaluating a " + side_name(x.side()) + " chain at a " + side_name(m.side()) + " module");
  }
}

}  // namespace detail

// {x in M^r2 : x S = 0} / {y T : y in M^r3}, meet taken with the former.
template <ExactRing R>
Subquotient<R> eval_subquotient(const ChainObject<R>& x, const FpModule<R>& m) {
  detail::require_evaluable(x, m);
  return solution_subquotient_presented(x.column_first(), x.column_second(), m);
}

template <ExactRing R>
GroupInvariants eval_object(const ChainObject<R>& x, const FpModule<R>& m) {
  detail::require_evaluable(x, m);
  return solution_invariants(x.column_first(), x.column_second(), m);
}

// For f : X -> Y, the map eval(Y, M) -> eval(X, M), [x] |-> [x M2].
template <ExactRing R>
ModuleMap<R> eval_morphism(const ChainMorphism<R>& f, const FpModule<R>& m) {
  return induced_map(eval_subquotient(f.target(), m), eval_subquotient(f.source(), m), f.column(2), m.gens());
}

// Cyclic summands of M grouped by annihilator, in a fixed order.
template <ExactRing R>
struct CyclicProfile {
  Side side;
  std::vector<std::pair<typename R::value_type, std::size_t>> summands;
};

template <ExactRing R>
CyclicProfile<R> cyclic_profile(const FpModule<R>& m) {
  std::map<BigInt, std::pair<typename R::value_type, std::size_t>> grouped;
  for (const auto& d : cyclic_decomposition(m)) {
    auto [it, fresh] = grouped.try_emplace(cyclic_order(m.ring(), d), d, 0);
    ++it->second.second;
  }
  CyclicProfile<R> p{m.side(), {}};
  for (auto& [key, entry] : grouped) p.summands.push_back(entry);
  return p;
}

// Evaluates one chain object at many modules, remembering the value on
// each cyclic module it has seen.
template <ExactRing R>
class ObjectEvaluator {
 public:
  explicit ObjectEvaluator(ChainObject<R> x)
      : x_(std::move(x)), s_(x_.column_first()), t_(x_.column_second()), spec_(x_.ring().spec()) {}

  const ChainObject<R>& object() const noexcept { return x_; }

  GroupInvariants evaluate(const FpModule<R>& m) {
    detail::require_evaluable(x_, m);
    return evaluate(cyclic_profile(m));
  }

  GroupInvariants evaluate(const CyclicProfile<R>& p) {
    if (p.side != x_.side()) throw SideMismatch("evaluation side mismatch");
    GroupInvariants total;
    total.ring = spec_;
    for (const auto& [d, count] : p.summands) total = total.direct_sum(cyclic(d).power(count));
    return total;
  }

  const GroupInvariants& cyclic(const typename R::value_type& d) {
    const R& ring = x_.ring();
    BigInt key = cyclic_order(ring, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FpModule<R> cyc = FpModule<R>::diagonal(ring, x_.side(), {d});
    GroupInvariants v = fp_invariants(solution_subquotient_presented(s_, t_, cyc).module);
    return cache_.emplace(std::move(key), std::move(v)).first->second;
  }

 private:
  ChainObject<R> x_;
  Matrix<R> s_, t_;
  RingSpec spec_;
  std::map<BigInt, GroupInvariants> cache_;
};

// M lies in the class cut out by X: eval(X, M) = 0.
template <ExactRing R>
bool omega_contains(const ChainObject<R>& x, const FpModule<R>& m) {
  return eval_object(x, m).is_zero();
}

// Finite list of matrix pairs. Right side: (U, V) reads
//   x U = 0  implies  x = y V     (x in M^rows(U), y in M^rows(V));
// left side: (P, Q) reads  P x = 0  implies  x = Q y.
template <ExactRing R>
class DefinableSpec {
 public:
  using Pair = std::pair<Matrix<R>, Matrix<R>>;

  DefinableSpec(R ring, Side side, std::vector<Pair> pairs = {})
      : ring_(std::move(ring)), side_(side), pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) validate(i);
  }

  const R& ring() const noexcept { return ring_; }
  Side side() const noexcept { return side_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  void add(Matrix<R> u, Matrix<R> v) {
    pairs_.emplace_back(std::move(u), std::move(v));
    try {
      validate(pairs_.size() - 1);
    } catch (...) {
      pairs_.pop_back();
      throw;
    }
  }

  // The chain (first = U, second = V) in this side's storage convention.
  ChainObject<R> pair_object(std::size_t i) const { return ChainObject<R>(side_, pairs_.at(i).first, pairs_.at(i).second); }

  friend bool operator==(const DefinableSpec& a, const DefinableSpec& b) {
    return a.ring_.spec() == b.ring_.spec() && a.side_ == b.side_ && a.pairs_ == b.pairs_;
  }

 private:
  void validate(std::size_t i) const {
    const auto& [u, v] = pairs_[i];
    require_same_ring(ring_, u.ring(), "definable spec");
    require_same_ring(ring_, v.ring(), "definable spec");
    const bool right = side_ == Side::Right;
    const std::size_t need = right ? u.rows() : u.cols();
    const std::size_t have = right ? v.cols() : v.rows();
    if (need != have) {
      throw ShapeError("pair " + std::to_string(i) + ": " + (right ? "V has " : "Q has ") + std::to_string(have) +
                       (right ? " columns, U has " : " rows, P has ") + std::to_string(need) +
                       (right ? " rows" : " columns"));
    }
  }

  R ring_;
  Side side_;
  std::vector<Pair> pairs_;
};

// Index of the first pair M fails, if any.
template <ExactRing R>
std::optional<std::size_t> definable_failure(const DefinableSpec<R>& spec, const FpModule<R>& m) {
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!omega_contains(spec.pair_object(i), m)) return i;
  }
  return std::nullopt;
}

template <ExactRing R>
bool definable_contains(const DefinableSpec<R>& spec, const FpModule<R>& m) {
  require_same_ring(spec.ring(), m.ring(), "definable_contains");
  if (spec.side() != m.side()) throw SideMismatch("definable_contains: spec and module sides differ");
  return !definable_failure(spec, m).has_value();
}

// Every map X -> M extends along f : X -> Y, i.e. Hom(f, M) is onto.
// Decided on Hom modules directly, without building a chain object.
template <ExactRing R>
bool injective_wrt(const FpModule<R>& m, const PresentedMorphism<R>& f) {
  require_same_ring(m.ring(), f.ring(), "injective_wrt");
  ModuleMap<R> hom = hom_induced(f.module_map(m.side()), m);
  return fp_invariants(hom.cokernel()).is_zero();
}

}  // namespace freeab
