#pragma once

// Finitely presented modules over the base ring.
//
// A module is stored as  A^gens / rowspan(relations): each row of the
// relation matrix is one relation among the generators. Since every base
// ring is commutative the same data presents a right or a left module; the
// side is a tag that must agree with the chain objects it is paired with.
//
// All invariants are computed through free covers and the Smith form; the
// enumerative routines in oracle.hpp are kept separate for cross-checking.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "freeab/invariants.hpp"
#include "freeab/solve.hpp"

namespace freeab {

enum class Side { Right, Left };

constexpr Side opposite(Side s) { return s == Side::Right ? Side::Left : Side::Right; }
inline std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }
Side parse_side(const std::string& text);

// Integer annihilator of the cyclic module A/(v), 0 for a free summand.
inline BigInt cyclic_order(const IntegerRing&, const BigInt& v) { return abs(v); }
inline BigInt cyclic_order(const ModularRing&, std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt cyclic_order(const RationalField&, const BigRational& v) { return sgn(v) == 0 ? 0 : 1; }

template <ExactRing R>
class FpModule {
 public:
  using value_type = typename R::value_type;

  FpModule(R ring, Side side, std::size_t gens, Matrix<R> relations)
      : ring_(std::move(ring)), side_(side), gens_(gens), relations_(std::move(relations)) {
    require_same_ring(ring_, relations_.ring(), "module relations");
    if (relations_.cols() != gens_) {
      throw ShapeError("relation matrix " + relations_.shape_string() + " does not have " + std::to_string(gens_) +
                       " columns");
    }
  }

  static FpModule free(const R& ring, Side side, std::size_t rank) { return {ring, side, rank, Matrix<R>(ring, 0, rank)}; }
  static FpModule zero(const R& ring, Side side) { return free(ring, side, 0); }

  // (+)_i A/(d_i)
  static FpModule diagonal(const R& ring, Side side, const std::vector<value_type>& orders) {
    Matrix<R> rel(ring, orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
    return {ring, side, orders.size(), std::move(rel)};
  }

  static FpModule cyclic(const R& ring, Side side, long long order) {
    return diagonal(ring, side, {ring.from_int(order)});
  }

  const R& ring() const noexcept { return ring_; }
  Side side() const noexcept { return side_; }
  std::size_t gens() const noexcept { return gens_; }
  const Matrix<R>& relations() const noexcept { return relations_; }

  FpModule with_side(Side s) const { return {ring_, s, gens_, relations_}; }

  FpModule direct_sum(const FpModule& other) const {
    require_same_ring(ring_, other.ring_, "module direct sum");
    if (side_ != other.side_) throw SideMismatch("direct sum of a right and a left module");
    return {ring_, side_, gens_ + other.gens_, block_diag(relations_, other.relations_)};
  }

  FpModule power(std::size_t k) const {
    FpModule m = zero(ring_, side_);
    for (std::size_t i = 0; i < k; ++i) m = m.direct_sum(*this);
    return m;
  }

 private:
  R ring_;
  Side side_;
  std::size_t gens_;
  Matrix<R> relations_;
};

// Non-unit cyclic annihilators d_i with M ~ (+)_i A/(d_i); zeros are free
// summands. Order: the Smith diagonal, then the free generators.
template <ExactRing R>
std::vector<typename R::value_type> cyclic_decomposition(const FpModule<R>& m) {
  const R& ring = m.ring();
  std::vector<typename R::value_type> diag = smith_diagonal(m.relations());
  std::vector<typename R::value_type> out;
  for (const auto& d : diag) {
    if (!ring.divides(d, ring.one())) out.push_back(d);
  }
  for (std::size_t i = diag.size(); i < m.gens(); ++i) out.push_back(ring.zero());
  return out;
}

template <ExactRing R>
GroupInvariants invariants_from_orders(const R& ring, const std::vector<typename R::value_type>& orders) {
  std::vector<BigInt> ints;
  ints.reserve(orders.size());
  for (const auto& d : orders) ints.push_back(cyclic_order(ring, d));
  return GroupInvariants::from_cyclic(ring.spec(), ints);
}

template <ExactRing R>
GroupInvariants fp_invariants(const FpModule<R>& m) {
  return invariants_from_orders(m.ring(), cyclic_decomposition(m));
}

// The same module rewritten in its diagonal presentation.
template <ExactRing R>
FpModule<R> diagonal_form(const FpModule<R>& m) {
  return FpModule<R>::diagonal(m.ring(), m.side(), cyclic_decomposition(m));
}

// A submodule quotient N/D of a free module, D inside N, both given by
// generating rows; `generators` are the rows of N in ambient coordinates.
template <ExactRing R>
struct Subquotient {
  FpModule<R> module;
  Matrix<R> generators;
};

template <ExactRing R>
Subquotient<R> subquotient(const Matrix<R>& numerator, const Matrix<R>& denominator, Side side) {
  if (numerator.cols() != denominator.cols()) {
    throw ShapeError("subquotient ambient mismatch " + numerator.shape_string() + " vs " + denominator.shape_string());
  }
  const R& ring = numerator.ring();
  // Drop zero generators; they change nothing but cost Smith work.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < numerator.rows(); ++i) {
    auto row = numerator.row(i);
    if (std::any_of(row.begin(), row.end(), [&](const auto& v) { return !ring.is_zero(v); })) keep.push_back(i);
  }
  Matrix<R> gens(ring, keep.size(), numerator.cols());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < numerator.cols(); ++j) gens(k, j) = numerator(keep[k], j);

  auto coeff = solve_right(gens, denominator);
  if (!coeff) throw Error("subquotient: denominator is not contained in numerator");
  Matrix<R> rel = vstack(*coeff, left_kernel(gens));
  return {FpModule<R>(ring, side, gens.rows(), std::move(rel)), std::move(gens)};
}

// A homomorphism of presented modules: generator i of the source goes to
// row i of `matrix` (in target generators).
template <ExactRing R>
class ModuleMap {
 public:
  ModuleMap(FpModule<R> source, FpModule<R> target, Matrix<R> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != source_.gens() || matrix_.cols() != target_.gens()) {
      throw ShapeError("module map matrix " + matrix_.shape_string() + " for " + std::to_string(source_.gens()) +
                       " -> " + std::to_string(target_.gens()) + " generators");
    }
  }

  const FpModule<R>& source() const noexcept { return source_; }
  const FpModule<R>& target() const noexcept { return target_; }
  const Matrix<R>& matrix() const noexcept { return matrix_; }

  // Relations of the source must land in the relations of the target.
  bool is_well_defined() const {
    return solve_right(target_.relations(), source_.relations() * matrix_).has_value();
  }

  Subquotient<R> kernel() const {
    // x H lies in rowspan(R_target):  [x w] [H; R_target] = 0.
    Matrix<R> lk = left_kernel(vstack(matrix_, target_.relations()));
    Matrix<R> numerator = lk.block(0, 0, lk.rows(), source_.gens());
    return subquotient(numerator, source_.relations(), source_.side());
  }

  FpModule<R> cokernel() const {
    return FpModule<R>(target_.ring(), target_.side(), target_.gens(), vstack(target_.relations(), matrix_));
  }

  GroupInvariants kernel_invariants() const { return fp_invariants(kernel().module); }
  GroupInvariants cokernel_invariants() const { return fp_invariants(cokernel()); }

  GroupInvariants image_invariants() const {
    Matrix<R> numerator = vstack(matrix_, target_.relations());
    return fp_invariants(subquotient(numerator, target_.relations(), target_.side()).module);
  }

 private:
  FpModule<R> source_;
  FpModule<R> target_;
  Matrix<R> matrix_;
};

namespace detail {

// Ambient coordinates for M^k when M = A^b / rowspan(rel): index i*b + g.
template <ExactRing R>
Matrix<R> expand(const Matrix<R>& u, std::size_t b) {
  return kronecker(u, Matrix<R>::identity(u.ring(), b));
}

}  // namespace detail

// { x in M^m : x U = 0 } / { y V : y in M^p }  (intersected with the
// former when the chain is not a complex), for x, y rows of elements of M.
// U is m x n, V is p x m. `generators` lives in A^(m * gens(M)).
template <ExactRing R>
Subquotient<R> solution_subquotient_presented(const Matrix<R>& u, const Matrix<R>& v, const FpModule<R>& m) {
  require_same_ring(u.ring(), m.ring(), "solution subquotient");
  require_same_ring(v.ring(), m.ring(), "solution subquotient");
  if (v.cols() != u.rows()) {
    throw ShapeError("solution subquotient: U is " + u.shape_string() + ", V is " + v.shape_string());
  }
  const R& ring = m.ring();
  const std::size_t b = m.gens();
  const Matrix<R>& rel = m.relations();
  Matrix<R> uu = detail::expand(u, b);
  Matrix<R> vv = detail::expand(v, b);
  Matrix<R> rel_n = kronecker(Matrix<R>::identity(ring, u.cols()), rel);
  Matrix<R> rel_m = kronecker(Matrix<R>::identity(ring, u.rows()), rel);

  Matrix<R> lk = left_kernel(vstack(uu, rel_n));
  Matrix<R> solutions = lk.block(0, 0, lk.rows(), uu.rows());
  return subquotient(vstack(solutions, vv), vstack(vv, rel_m), m.side());
}

// Same quotient, invariants only. M is split into cyclic summands first and
// the answers added up.
template <ExactRing R>
GroupInvariants solution_invariants(const Matrix<R>& u, const Matrix<R>& v, const FpModule<R>& m) {
  const R& ring = m.ring();
  std::vector<typename R::value_type> orders = cyclic_decomposition(m);
  std::map<BigInt, std::size_t> multiplicity;
  std::map<BigInt, typename R::value_type> representative;
  for (const auto& d : orders) {
    BigInt key = cyclic_order(ring, d);
    ++multiplicity[key];
    representative.emplace(key, d);
  }
  GroupInvariants total;
  total.ring = ring.spec();
  for (const auto& [key, count] : multiplicity) {
    FpModule<R> cyc = FpModule<R>::diagonal(ring, m.side(), {representative.at(key)});
    GroupInvariants piece = fp_invariants(solution_subquotient_presented(u, v, cyc).module);
    total = total.direct_sum(piece.power(count));
  }
  return total;
}

// Public form: Right side reads  xU = 0 mod yV  with U m x n, V p x m;
// Left side reads  Ux = 0 mod Vy  with U n x m, V m x p.
template <ExactRing R>
GroupInvariants solution_subquotient(const Matrix<R>& u, const Matrix<R>& v, const FpModule<R>& m) {
  if (m.side() == Side::Right) return solution_invariants(u, v, m);
  return solution_invariants(u.transpose(), v.transpose(), m);
}

// Map of subquotients induced by x -> x * alpha on ambient rows.
// `alpha` is (source rows) x (target rows) of the underlying free modules
// of rank source_k and target_k over M with b generators.
template <ExactRing R>
ModuleMap<R> induced_map(const Subquotient<R>& source, const Subquotient<R>& target, const Matrix<R>& alpha,
                         std::size_t b) {
  Matrix<R> images = source.generators * detail::expand(alpha, b);
  auto coeff = solve_right(target.generators, images);
  if (!coeff) throw Error("induced map leaves the target subquotient");
  return ModuleMap<R>(source.module, target.module, std::move(*coeff));
}

// Character dual of a finite module: same invariants, opposite side,
// diagonal presentation.
template <ExactRing R>
FpModule<R> char_dual(const FpModule<R>& m) {
  GroupInvariants inv = fp_invariants(m);
  if (!inv.order()) throw Unsupported("character dual of an infinite module");
  const R& ring = m.ring();
  std::vector<typename R::value_type> orders;
  for (std::size_t i = 0; i < inv.free_rank; ++i) orders.push_back(ring.zero());
  for (const auto& t : inv.torsion) orders.push_back(ring.from_big(t));
  return FpModule<R>::diagonal(ring, opposite(m.side()), orders);
}

// X (x) N over the commutative base ring, presented on generator pairs.
template <ExactRing R>
FpModule<R> tensor_product(const FpModule<R>& x, const FpModule<R>& n) {
  require_same_ring(x.ring(), n.ring(), "tensor product");
  if (x.side() == n.side()) throw SideMismatch("tensor product needs a right and a left module");
  const R& ring = x.ring();
  Matrix<R> rel = vstack(kronecker(x.relations(), Matrix<R>::identity(ring, n.gens())),
                         kronecker(Matrix<R>::identity(ring, x.gens()), n.relations()));
  return FpModule<R>(ring, x.side(), x.gens() * n.gens(), std::move(rel));
}

template <ExactRing R>
GroupInvariants tensor_invariants(const FpModule<R>& x, const FpModule<R>& n) {
  return fp_invariants(tensor_product(x, n));
}

// f (x) N for f : X -> Y.
template <ExactRing R>
ModuleMap<R> tensor_induced(const ModuleMap<R>& f, const FpModule<R>& n) {
  const R& ring = n.ring();
  return ModuleMap<R>(tensor_product(f.source(), n), tensor_product(f.target(), n),
                      kronecker(f.matrix(), Matrix<R>::identity(ring, n.gens())));
}

// Hom(X, M) as a subquotient of M^gens(X): tuples killing every relation.
template <ExactRing R>
Subquotient<R> hom_module(const FpModule<R>& x, const FpModule<R>& m) {
  return solution_subquotient_presented(x.relations().transpose(), Matrix<R>(x.ring(), 0, x.gens()), m);
}

// Hom(f, M) : Hom(Y, M) -> Hom(X, M), g -> g f.
template <ExactRing R>
ModuleMap<R> hom_induced(const ModuleMap<R>& f, const FpModule<R>& m) {
  return induced_map(hom_module(f.target(), m), hom_module(f.source(), m), f.matrix().transpose(), m.gens());
}

// An element of a presented module, tied to that module.
template <ExactRing R>
class ModuleElement {
 public:
  ModuleElement(std::shared_ptr<const FpModule<R>> module, Matrix<R> rep)
      : module_(std::move(module)), rep_(std::move(rep)) {
    if (rep_.rows() != 1 || rep_.cols() != module_->gens()) {
      throw ShapeError("element representative " + rep_.shape_string() + " for " + std::to_string(module_->gens()) +
                       " generators");
    }
  }

  const FpModule<R>& module() const { return *module_; }
  const Matrix<R>& rep() const noexcept { return rep_; }

  bool is_zero() const { return solve_right(module_->relations(), rep_).has_value(); }

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    a.require_same_module(b);
    return {a.module_, a.rep_ + b.rep_};
  }
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    a.require_same_module(b);
    return {a.module_, a.rep_ - b.rep_};
  }
  ModuleElement scaled(const typename R::value_type& c) const { return {module_, rep_.scaled(c)}; }

  // Same coset of the relation submodule.
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    a.require_same_module(b);
    return (a - b).is_zero();
  }

 private:
  void require_same_module(const ModuleElement& other) const {
    if (module_ != other.module_) throw Error("element arithmetic across different modules");
  }

  std::shared_ptr<const FpModule<R>> module_;
  Matrix<R> rep_;
};

}  // namespace freeab
