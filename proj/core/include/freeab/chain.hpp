#pragma once

// Three-term matrix chains and morphisms modulo null-homotopy.
//
// Storage follows the side flag. On the right, A^r is a column space and a
// map A^r -> A^s is an s x r matrix acting from the left; on the left the
// same map is an r x s matrix acting on row vectors from the right. Over a
// commutative ring the two are transposes of each other, and every
// algorithm below works on the right-side ("column") form.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freeab/module.hpp"

namespace freeab {

struct Ranks {
  std::size_t r1 = 0, r2 = 0, r3 = 0;
  friend bool operator==(const Ranks&, const Ranks&) = default;
};

template <ExactRing R>
class ChainObject {
 public:
  // `first` and `second` in the storage convention of `side`.
  ChainObject(Side side, Matrix<R> first, Matrix<R> second)
      : side_(side), first_(std::move(first)), second_(std::move(second)) {
    require_same_ring(first_.ring(), second_.ring(), "chain object");
    const Matrix<R> s = column_first(), t = column_second();
    if (t.cols() != s.rows()) {
      throw ShapeError("chain maps do not compose: first is " + first_.shape_string() + ", second is " +
                       second_.shape_string() + " (" + side_name(side_) + " side)");
    }
  }

  // Built from right-side matrices S: A^r1 -> A^r2, T: A^r2 -> A^r3.
  static ChainObject from_columns(Side side, const Matrix<R>& s, const Matrix<R>& t) {
    if (side == Side::Right) return ChainObject(side, s, t);
    return ChainObject(side, s.transpose(), t.transpose());
  }

  // (0 -> A^r -> 0)
  static ChainObject middle(const R& ring, Side side, std::size_t r) {
    return from_columns(side, Matrix<R>(ring, r, 0), Matrix<R>(ring, 0, r));
  }

  const R& ring() const noexcept { return first_.ring(); }
  Side side() const noexcept { return side_; }
  const Matrix<R>& first() const noexcept { return first_; }
  const Matrix<R>& second() const noexcept { return second_; }

  Matrix<R> column_first() const { return side_ == Side::Right ? first_ : first_.transpose(); }
  Matrix<R> column_second() const { return side_ == Side::Right ? second_ : second_.transpose(); }

  Ranks ranks() const {
    if (side_ == Side::Right) return {first_.cols(), first_.rows(), second_.rows()};
    return {first_.rows(), first_.cols(), second_.cols()};
  }

  // Stored matrices and side agree exactly.
  friend bool operator==(const ChainObject& a, const ChainObject& b) {
    return a.side_ == b.side_ && a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  Side side_;
  Matrix<R> first_;
  Matrix<R> second_;
};

template <ExactRing R>
void require_compatible(const ChainObject<R>& a, const ChainObject<R>& b, const char* what) {
  require_same_ring(a.ring(), b.ring(), what);
  if (a.side() != b.side()) throw SideMismatch(std::string(what) + ": right and left chain objects");
}

// s: X2 -> Y1, t: X3 -> Y2 in the storage convention of the side.
template <ExactRing R>
struct HomotopyWitness {
  Matrix<R> s;
  Matrix<R> t;
};

template <ExactRing R>
class ChainMorphism {
 public:
  // Components in the storage convention; throws InvalidMorphism naming the
  // square that fails.
  static ChainMorphism make(const ChainObject<R>& source, const ChainObject<R>& target, Matrix<R> m1, Matrix<R> m2,
                            Matrix<R> m3) {
    ChainMorphism f(source, target, std::move(m1), std::move(m2), std::move(m3));
    f.check();
    return f;
  }

  // Components given as right-side matrices X_i -> Y_i.
  static ChainMorphism from_columns(const ChainObject<R>& source, const ChainObject<R>& target, const Matrix<R>& c1,
                                    const Matrix<R>& c2, const Matrix<R>& c3) {
    if (source.side() == Side::Right) return make(source, target, c1, c2, c3);
    return make(source, target, c1.transpose(), c2.transpose(), c3.transpose());
  }

  static ChainMorphism identity(const ChainObject<R>& x) {
    const Ranks r = x.ranks();
    const R& ring = x.ring();
    return ChainMorphism(x, x, Matrix<R>::identity(ring, r.r1), Matrix<R>::identity(ring, r.r2),
                         Matrix<R>::identity(ring, r.r3));
  }

  static ChainMorphism zero(const ChainObject<R>& source, const ChainObject<R>& target) {
    require_compatible(source, target, "zero morphism");
    return from_columns(source, target, Matrix<R>(source.ring(), target.ranks().r1, source.ranks().r1),
                        Matrix<R>(source.ring(), target.ranks().r2, source.ranks().r2),
                        Matrix<R>(source.ring(), target.ranks().r3, source.ranks().r3));
  }

  const ChainObject<R>& source() const noexcept { return source_; }
  const ChainObject<R>& target() const noexcept { return target_; }
  const R& ring() const noexcept { return source_.ring(); }
  Side side() const noexcept { return source_.side(); }

  const Matrix<R>& m1() const noexcept { return m_[0]; }
  const Matrix<R>& m2() const noexcept { return m_[1]; }
  const Matrix<R>& m3() const noexcept { return m_[2]; }
  const Matrix<R>& component(int i) const { return m_.at(static_cast<std::size_t>(i - 1)); }

  Matrix<R> column(int i) const {
    return side() == Side::Right ? component(i) : component(i).transpose();
  }

  friend ChainMorphism operator+(const ChainMorphism& a, const ChainMorphism& b) {
    a.require_parallel(b, "morphism sum");
    return ChainMorphism(a.source_, a.target_, a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2]);
  }
  friend ChainMorphism operator-(const ChainMorphism& a, const ChainMorphism& b) {
    a.require_parallel(b, "morphism difference");
    return ChainMorphism(a.source_, a.target_, a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2]);
  }
  ChainMorphism operator-() const {
    return ChainMorphism(source_, target_, m_[0].negated(), m_[1].negated(), m_[2].negated());
  }
  ChainMorphism scaled(const typename R::value_type& c) const {
    return ChainMorphism(source_, target_, m_[0].scaled(c), m_[1].scaled(c), m_[2].scaled(c));
  }

  // Raw triple equality; equality in the category is equal_mod_homotopy.
  friend bool operator==(const ChainMorphism& a, const ChainMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.m_ == b.m_;
  }

 private:
  ChainMorphism(ChainObject<R> source, ChainObject<R> target, Matrix<R> m1, Matrix<R> m2, Matrix<R> m3)
      : source_(std::move(source)), target_(std::move(target)), m_{std::move(m1), std::move(m2), std::move(m3)} {}

  void check() const {
    require_compatible(source_, target_, "chain morphism");
    const Ranks rs = source_.ranks(), rt = target_.ranks();
    const std::size_t src[3] = {rs.r1, rs.r2, rs.r3}, tgt[3] = {rt.r1, rt.r2, rt.r3};
    for (int i = 0; i < 3; ++i) {
      const Matrix<R> c = column(i + 1);
      if (c.rows() != tgt[i] || c.cols() != src[i]) {
        throw ShapeError("component M" + std::to_string(i + 1) + " is " + m_[static_cast<std::size_t>(i)].shape_string() +
                         ", ranks need " + std::to_string(side() == Side::Right ? tgt[i] : src[i]) + "x" +
                         std::to_string(side() == Side::Right ? src[i] : tgt[i]));
      }
    }
    const Matrix<R> xs = source_.column_first(), xt = source_.column_second();
    const Matrix<R> ys = target_.column_first(), yt = target_.column_second();
    const Matrix<R> c1 = column(1), c2 = column(2), c3 = column(3);
    if (!(ys * c1 == c2 * xs)) {
      throw InvalidMorphism("first square", side() == Side::Right ? "Y.S * M1 != M2 * X.S" : "X.S * M2 != M1 * Y.S");
    }
    if (!(yt * c2 == c3 * xt)) {
      throw InvalidMorphism("second square", side() == Side::Right ? "Y.T * M2 != M3 * X.T" : "X.T * M3 != M2 * Y.T");
    }
  }

  void require_parallel(const ChainMorphism& b, const char* what) const {
    if (!(source_ == b.source_) || !(target_ == b.target_)) throw Error(std::string(what) + ": morphisms are not parallel");
  }

  ChainObject<R> source_;
  ChainObject<R> target_;
  std::vector<Matrix<R>> m_;

  template <ExactRing Q>
  friend ChainMorphism<Q> compose(const ChainMorphism<Q>& psi, const ChainMorphism<Q>& phi);
};

// psi after phi.
template <ExactRing R>
ChainMorphism<R> compose(const ChainMorphism<R>& psi, const ChainMorphism<R>& phi) {
  if (!(phi.target() == psi.source())) throw Error("compose: target of the first map is not the source of the second");
  if (phi.side() == Side::Right) {
    return ChainMorphism<R>(phi.source(), psi.target(), psi.m1() * phi.m1(), psi.m2() * phi.m2(), psi.m3() * phi.m3());
  }
  return ChainMorphism<R>(phi.source(), psi.target(), phi.m1() * psi.m1(), phi.m2() * psi.m2(), phi.m3() * psi.m3());
}

namespace detail {

template <ExactRing R>
HomotopyWitness<R> to_witness(Side side, HomotopySolution<R> sol) {
  if (side == Side::Right) return {std::move(sol.s), std::move(sol.t)};
  return {sol.s.transpose(), sol.t.transpose()};
}

}  // namespace detail

// Some (s, t) with  M2 = Y.S s + t X.T  (right-side form), or nothing.
template <ExactRing R>
std::optional<HomotopyWitness<R>> is_null_homotopic(const ChainMorphism<R>& f) {
  auto sol = homotopy_solve(f.target().column_first(), f.source().column_second(), f.column(2));
  if (!sol) return std::nullopt;
  return detail::to_witness(f.side(), std::move(*sol));
}

template <ExactRing R>
bool verify_witness(const ChainMorphism<R>& f, const HomotopyWitness<R>& w) {
  const bool right = f.side() == Side::Right;
  const Matrix<R> s = right ? w.s : w.s.transpose();
  const Matrix<R> t = right ? w.t : w.t.transpose();
  const Matrix<R> g1 = f.target().column_first(), f2 = f.source().column_second();
  if (g1.cols() != s.rows() || s.cols() != f.column(2).cols() || t.rows() != f.column(2).rows() ||
      t.cols() != f2.rows()) {
    return false;
  }
  return g1 * s + t * f2 == f.column(2);
}

template <ExactRing R>
bool equal_mod_homotopy(const ChainMorphism<R>& a, const ChainMorphism<R>& b) {
  return is_null_homotopic(a - b).has_value();
}

// X ~ 0 iff id_X is null-homotopic:  I = S s + t T.
template <ExactRing R>
std::optional<HomotopyWitness<R>> is_zero_object(const ChainObject<R>& x) {
  const std::size_t r2 = x.ranks().r2;
  auto sol = homotopy_solve(x.column_first(), x.column_second(), Matrix<R>::identity(x.ring(), r2));
  if (!sol) return std::nullopt;
  return detail::to_witness(x.side(), std::move(*sol));
}

template <ExactRing R>
struct Biproduct {
  ChainObject<R> object;
  ChainMorphism<R> i1, i2, p1, p2;
};

template <ExactRing R>
Biproduct<R> biproduct(const ChainObject<R>& x, const ChainObject<R>& y) {
  require_compatible(x, y, "biproduct");
  const R& ring = x.ring();
  ChainObject<R> sum = ChainObject<R>::from_columns(x.side(), block_diag(x.column_first(), y.column_first()),
                                                    block_diag(x.column_second(), y.column_second()));
  const Ranks rx = x.ranks(), ry = y.ranks();
  auto incl = [&](std::size_t a, std::size_t b, bool first) {
    Matrix<R> m(ring, a + b, first ? a : b);
    m.paste(first ? 0 : a, 0, Matrix<R>::identity(ring, first ? a : b));
    return m;
  };
  auto i1 = ChainMorphism<R>::from_columns(x, sum, incl(rx.r1, ry.r1, true), incl(rx.r2, ry.r2, true),
                                           incl(rx.r3, ry.r3, true));
  auto i2 = ChainMorphism<R>::from_columns(y, sum, incl(rx.r1, ry.r1, false), incl(rx.r2, ry.r2, false),
                                           incl(rx.r3, ry.r3, false));
  auto p1 = ChainMorphism<R>::from_columns(sum, x, i1.column(1).transpose(), i1.column(2).transpose(),
                                           i1.column(3).transpose());
  auto p2 = ChainMorphism<R>::from_columns(sum, y, i2.column(1).transpose(), i2.column(2).transpose(),
                                           i2.column(3).transpose());
  return {std::move(sum), std::move(i1), std::move(i2), std::move(p1), std::move(p2)};
}

template <ExactRing R>
ChainMorphism<R> direct_sum_morphism(const ChainMorphism<R>& f, const ChainMorphism<R>& g) {
  Biproduct<R> src = biproduct(f.source(), g.source());
  Biproduct<R> tgt = biproduct(f.target(), g.target());
  return ChainMorphism<R>::from_columns(src.object, tgt.object, block_diag(f.column(1), g.column(1)),
                                        block_diag(f.column(2), g.column(2)), block_diag(f.column(3), g.column(3)));
}

template <ExactRing R>
struct Kernel {
  ChainObject<R> object;
  ChainMorphism<R> inclusion;  // K -> X
};

template <ExactRing R>
struct Cokernel {
  ChainObject<R> object;
  ChainMorphism<R> projection;  // Y -> C
};

// K = (X1 (+) Y1 -[S 0; 0 1]-> X2 (+) Y1 -[T 0; M2 S']-> X3 (+) Y2),
// k = ([1 0], [1 0], [1 0]). The Y1 summand keeps y M2 and u T apart so
// that the evaluated denominator is exactly (Ker meet Im T*) + M2*(Ker S'*).
template <ExactRing R>
Kernel<R> kernel(const ChainMorphism<R>& f) {
  const R& ring = f.ring();
  const ChainObject<R>& x = f.source();
  const ChainObject<R>& y = f.target();
  const Ranks rx = x.ranks(), ry = y.ranks();
  Matrix<R> s = block_diag(x.column_first(), Matrix<R>::identity(ring, ry.r1));
  Matrix<R> t(ring, rx.r3 + ry.r2, rx.r2 + ry.r1);
  t.paste(0, 0, x.column_second());
  t.paste(rx.r3, 0, f.column(2));
  t.paste(rx.r3, rx.r2, y.column_first());
  ChainObject<R> k = ChainObject<R>::from_columns(x.side(), s, t);
  auto proj = [&](std::size_t keep, std::size_t drop) {
    Matrix<R> m(ring, keep, keep + drop);
    m.paste(0, 0, Matrix<R>::identity(ring, keep));
    return m;
  };
  auto inc = ChainMorphism<R>::from_columns(k, x, proj(rx.r1, ry.r1), proj(rx.r2, ry.r1), proj(rx.r3, ry.r2));
  return {std::move(k), std::move(inc)};
}

// C = (Y1 (+) X2 -[S' M2; 0 T]-> Y2 (+) X3 -[T' 0; 0 1]-> Y3 (+) X3),
// c = ([1; 0], [1; 0], [1; 0]). Dual to the kernel: d(coker f) = ker(d f)
// on the nose.
template <ExactRing R>
Cokernel<R> cokernel(const ChainMorphism<R>& f) {
  const R& ring = f.ring();
  const ChainObject<R>& x = f.source();
  const ChainObject<R>& y = f.target();
  const Ranks rx = x.ranks(), ry = y.ranks();
  Matrix<R> s(ring, ry.r2 + rx.r3, ry.r1 + rx.r2);
  s.paste(0, 0, y.column_first());
  s.paste(0, ry.r1, f.column(2));
  s.paste(ry.r2, ry.r1, x.column_second());
  Matrix<R> t = block_diag(y.column_second(), Matrix<R>::identity(ring, rx.r3));
  ChainObject<R> c = ChainObject<R>::from_columns(y.side(), s, t);
  auto inc = [&](std::size_t keep, std::size_t extra) {
    Matrix<R> m(ring, keep + extra, keep);
    m.paste(0, 0, Matrix<R>::identity(ring, keep));
    return m;
  };
  auto proj = ChainMorphism<R>::from_columns(y, c, inc(ry.r1, rx.r2), inc(ry.r2, rx.r3), inc(ry.r3, rx.r3));
  return {std::move(c), std::move(proj)};
}

template <ExactRing R>
bool is_isomorphism(const ChainMorphism<R>& f) {
  return is_zero_object(kernel(f).object).has_value() && is_zero_object(cokernel(f).object).has_value();
}

// A two-sided inverse up to homotopy, when f is an isomorphism. Solves for
// a morphism g: Y -> X with f g ~ id_Y; in an abelian category a right
// inverse of an isomorphism is its inverse.
template <ExactRing R>
std::optional<ChainMorphism<R>> inverse(const ChainMorphism<R>& f) {
  if (!is_isomorphism(f)) return std::nullopt;
  const R& ring = f.ring();
  const ChainObject<R>& x = f.source();
  const ChainObject<R>& y = f.target();
  const Ranks rx = x.ranks(), ry = y.ranks();
  const Matrix<R> xs = x.column_first(), xt = x.column_second();
  const Matrix<R> ys = y.column_first(), yt = y.column_second();
  auto id = [&](std::size_t n) { return Matrix<R>::identity(ring, n); };

  LinearSystem<R> sys(ring);
  const std::size_t g1 = sys.add_unknown(rx.r1, ry.r1);
  const std::size_t g2 = sys.add_unknown(rx.r2, ry.r2);
  const std::size_t g3 = sys.add_unknown(rx.r3, ry.r3);
  const std::size_t s = sys.add_unknown(ry.r1, ry.r2);
  const std::size_t t = sys.add_unknown(ry.r2, ry.r3);
  const Matrix<R> minus_id_r2 = id(rx.r2).negated();
  const Matrix<R> minus_id_r3 = id(rx.r3).negated();

  std::size_t e1 = sys.add_equation(rx.r2, ry.r1);  // X.S g1 - g2 Y.S = 0
  sys.add_term(e1, xs, g1, id(ry.r1));
  sys.add_term(e1, minus_id_r2, g2, ys);
  std::size_t e2 = sys.add_equation(rx.r3, ry.r2);  // X.T g2 - g3 Y.T = 0
  sys.add_term(e2, xt, g2, id(ry.r2));
  sys.add_term(e2, minus_id_r3, g3, yt);
  std::size_t e3 = sys.add_equation(id(ry.r2));  // f2 g2 - Y.S s - t Y.T = 1
  sys.add_term(e3, f.column(2), g2, id(ry.r2));
  sys.add_term(e3, ys.negated(), s, id(ry.r2));
  sys.add_term(e3, id(ry.r2).negated(), t, yt);

  auto blocks = sys.solve();
  if (!blocks) throw Error("inverse: no right inverse found for an isomorphism");
  return ChainMorphism<R>::from_columns(y, x, (*blocks)[g1], (*blocks)[g2], (*blocks)[g3]);
}

// Generators of the module of chain maps X -> Y (before dividing out
// homotopies).
template <ExactRing R>
std::vector<ChainMorphism<R>> hom_generators(const ChainObject<R>& x, const ChainObject<R>& y) {
  require_compatible(x, y, "hom generators");
  const R& ring = x.ring();
  const Ranks rx = x.ranks(), ry = y.ranks();
  LinearSystem<R> sys(ring);
  const std::size_t a1 = sys.add_unknown(ry.r1, rx.r1);
  const std::size_t a2 = sys.add_unknown(ry.r2, rx.r2);
  const std::size_t a3 = sys.add_unknown(ry.r3, rx.r3);
  std::size_t e1 = sys.add_equation(ry.r2, rx.r1);  // Y.S a1 - a2 X.S = 0
  sys.add_term(e1, y.column_first(), a1, Matrix<R>::identity(ring, rx.r1));
  sys.add_term(e1, Matrix<R>::identity(ring, ry.r2).negated(), a2, x.column_first());
  std::size_t e2 = sys.add_equation(ry.r3, rx.r2);  // Y.T a2 - a3 X.T = 0
  sys.add_term(e2, y.column_second(), a2, Matrix<R>::identity(ring, rx.r2));
  sys.add_term(e2, Matrix<R>::identity(ring, ry.r3).negated(), a3, x.column_second());
  std::vector<ChainMorphism<R>> out;
  for (auto& blocks : sys.kernel()) {
    out.push_back(ChainMorphism<R>::from_columns(x, y, blocks[a1], blocks[a2], blocks[a3]));
  }
  return out;
}

// Bounded search for an isomorphism X -> Y. Tries the identity triple when
// the ranks agree, then small combinations of Hom generators: coefficients
// in {0, 1} for at most `max_generators` generators. A miss is inconclusive.
template <ExactRing R>
std::optional<std::pair<ChainMorphism<R>, ChainMorphism<R>>> objects_isomorphic(const ChainObject<R>& x,
                                                                                 const ChainObject<R>& y,
                                                                                 std::size_t max_generators = 12) {
  require_compatible(x, y, "objects_isomorphic");
  auto attempt = [](const ChainMorphism<R>& f) -> std::optional<std::pair<ChainMorphism<R>, ChainMorphism<R>>> {
    auto g = inverse(f);
    if (!g) return std::nullopt;
    return std::make_pair(f, *g);
  };
  const bool x_zero = is_zero_object(x).has_value();
  const bool y_zero = is_zero_object(y).has_value();
  if (x_zero || y_zero) {
    if (x_zero != y_zero) return std::nullopt;
    return attempt(ChainMorphism<R>::zero(x, y));
  }
  if (x.ranks() == y.ranks()) {
    try {
      auto f = ChainMorphism<R>::identity(x);
      if (auto r = attempt(ChainMorphism<R>::make(x, y, f.m1(), f.m2(), f.m3()))) return r;
    } catch (const InvalidMorphism&) {
    }
  }
  std::vector<ChainMorphism<R>> gens = hom_generators(x, y);
  if (gens.size() > max_generators) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(max_generators), gens.end());
  const std::size_t total = std::size_t{1} << gens.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::optional<ChainMorphism<R>> f;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!(mask >> g & 1)) continue;
      f = f ? *f + gens[g] : gens[g];
    }
    if (auto r = attempt(*f)) return r;
  }
  return std::nullopt;
}

// (A^a -rel-> A^b -> 0) for a module with a relation rows.
template <ExactRing R>
ChainObject<R> embed_presented(const FpModule<R>& m) {
  return ChainObject<R>::from_columns(m.side(), m.relations().transpose(), Matrix<R>(m.ring(), 0, m.gens()));
}

}  // namespace freeab
