#include "freeab/oracle.hpp"

#include <limits>

namespace freeab {

namespace {

constexpr std::uint32_t kUnlabelled = std::numeric_limits<std::uint32_t>::max();

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) throw Unsupported(std::string(what) + ": search space too large");
    v *= base;
  }
  return v;
}

}  // namespace

FiniteModule::FiniteModule(const FpModule<ModularRing>& m, std::size_t max_ambient)
    : module_(m), q_(m.ring().modulus()) {
  const std::size_t b = m.gens();
  const std::size_t ambient = checked_power(static_cast<std::size_t>(q_), b, max_ambient, "module enumeration");
  const ModularRing& ring = m.ring();

  // Relation subgroup: additive closure of the relation rows.
  std::vector<char> in_rel(ambient, 0);
  std::vector<std::size_t> rel_list{0};
  in_rel[0] = 1;
  std::vector<std::int64_t> va(b), vb(b);
  for (std::size_t head = 0; head < rel_list.size(); ++head) {
    std::size_t code = rel_list[head];
    for (std::size_t g = b; g-- > 0;) {
      va[g] = static_cast<std::int64_t>(code % static_cast<std::size_t>(q_));
      code /= static_cast<std::size_t>(q_);
    }
    for (std::size_t r = 0; r < m.relations().rows(); ++r) {
      auto row = m.relations().row(r);
      for (std::size_t g = 0; g < b; ++g) vb[g] = ring.add(va[g], row[g]);
      std::size_t next = encode(vb);
      if (!in_rel[next]) {
        in_rel[next] = 1;
        rel_list.push_back(next);
      }
    }
  }

  // Cosets, labelled in increasing ambient order so the first member seen
  // is the least representative.
  coset_.assign(ambient, kUnlabelled);
  std::vector<std::int64_t> base(b), shifted(b), rel(b);
  for (std::size_t v = 0; v < ambient; ++v) {
    if (coset_[v] != kUnlabelled) continue;
    const auto label = static_cast<std::uint32_t>(reps_.size());
    std::size_t code = v;
    for (std::size_t g = b; g-- > 0;) {
      base[g] = static_cast<std::int64_t>(code % static_cast<std::size_t>(q_));
      code /= static_cast<std::size_t>(q_);
    }
    reps_.push_back(base);
    for (std::size_t r : rel_list) {
      std::size_t rc = r;
      for (std::size_t g = b; g-- > 0;) {
        rel[g] = static_cast<std::int64_t>(rc % static_cast<std::size_t>(q_));
        rc /= static_cast<std::size_t>(q_);
      }
      for (std::size_t g = 0; g < b; ++g) shifted[g] = ring.add(base[g], rel[g]);
      coset_[encode(shifted)] = label;
    }
  }

  const std::size_t n = reps_.size();
  add_.resize(n * n);
  std::vector<std::int64_t> tmp(b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t g = 0; g < b; ++g) tmp[g] = ring.add(reps_[i][g], reps_[j][g]);
      add_[i * n + j] = coset_[encode(tmp)];
    }
  scale_.resize(static_cast<std::size_t>(q_) * n);
  for (std::int64_t r = 0; r < q_; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < b; ++g) tmp[g] = ring.mul(r, reps_[i][g]);
      scale_[static_cast<std::size_t>(r) * n + i] = coset_[encode(tmp)];
    }
}

std::size_t FiniteModule::encode(std::span<const std::int64_t> v) const {
  std::size_t code = 0;
  for (std::int64_t x : v) code = code * static_cast<std::size_t>(q_) + static_cast<std::size_t>(x);
  return code;
}

std::size_t FiniteModule::index_of(std::span<const std::int64_t> ambient) const {
  if (ambient.size() != gens()) throw ShapeError("ambient vector length does not match generator count");
  std::vector<std::int64_t> canon(ambient.size());
  for (std::size_t g = 0; g < ambient.size(); ++g) canon[g] = module_.ring().from_int(ambient[g]);
  return coset_[encode(canon)];
}

TupleSpace::TupleSpace(std::size_t order, std::size_t length)
    : order_(order), length_(length), size_(checked_power(order, length, std::size_t{1} << 28, "tuple space")) {}

void TupleSpace::decode(std::size_t code, std::vector<std::size_t>& out) const {
  out.resize(length_);
  for (std::size_t i = 0; i < length_; ++i) {
    out[i] = code % order_;
    code /= order_;
  }
}

std::size_t TupleSpace::encode(const std::vector<std::size_t>& tuple) const {
  std::size_t code = 0;
  for (std::size_t i = length_; i-- > 0;) code = code * order_ + tuple[i];
  return code;
}

void apply_matrix(const FiniteModule& m, const Matrix<ModularRing>& a, const std::vector<std::size_t>& x,
                  std::vector<std::size_t>& out) {
  out.assign(a.cols(), m.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == m.zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      out[j] = m.add(out[j], m.scale(a(i, j), x[i]));
    }
  }
}

namespace {

bool all_zero(const FiniteModule& m, const std::vector<std::size_t>& v) {
  for (std::size_t e : v) {
    if (e != m.zero()) return false;
  }
  return true;
}

std::vector<char> image_set(const Matrix<ModularRing>& v, const FiniteModule& m, const TupleSpace& target) {
  std::vector<char> image(target.size(), 0);
  TupleSpace source(m.order(), v.rows());
  std::vector<std::size_t> y, out;
  for (std::size_t code = 0; code < source.size(); ++code) {
    source.decode(code, y);
    apply_matrix(m, v, y, out);
    image[target.encode(out)] = 1;
  }
  return image;
}

}  // namespace

std::size_t brute_subquotient_order(const Matrix<ModularRing>& u, const Matrix<ModularRing>& v, const FiniteModule& m) {
  if (v.cols() != u.rows()) throw ShapeError("brute_subquotient_order: V columns must equal U rows");
  TupleSpace space(m.order(), u.rows());
  std::vector<char> image = image_set(v, m, space);
  std::size_t kernel = 0, meet = 0;
  std::vector<std::size_t> x, out;
  for (std::size_t code = 0; code < space.size(); ++code) {
    space.decode(code, x);
    apply_matrix(m, u, x, out);
    if (!all_zero(m, out)) continue;
    ++kernel;
    if (image[code]) ++meet;
  }
  return kernel / meet;
}

bool brute_pair_holds(const Matrix<ModularRing>& u, const Matrix<ModularRing>& v, const FiniteModule& m) {
  if (v.cols() != u.rows()) throw ShapeError("brute_pair_holds: V columns must equal U rows");
  TupleSpace space(m.order(), u.rows());
  std::vector<char> image = image_set(v, m, space);
  std::vector<std::size_t> x, out;
  for (std::size_t code = 0; code < space.size(); ++code) {
    if (image[code]) continue;
    space.decode(code, x);
    apply_matrix(m, u, x, out);
    if (all_zero(m, out)) return false;
  }
  return true;
}

std::optional<HomotopySolution<ModularRing>> brute_homotopy(const Matrix<ModularRing>& g1,
                                                            const Matrix<ModularRing>& f2,
                                                            const Matrix<ModularRing>& c, std::size_t max_unknowns) {
  if (g1.rows() != c.rows() || f2.cols() != c.cols()) throw ShapeError("brute_homotopy: shape mismatch");
  const ModularRing& ring = c.ring();
  const std::size_t y1 = g1.cols(), x2 = c.cols(), y2 = c.rows(), x3 = f2.rows();
  const std::size_t ns = y1 * x2, nt = y2 * x3, k = ns + nt;
  if (k > max_unknowns) throw Unsupported("brute_homotopy: too many unknowns");
  const auto q = static_cast<std::size_t>(ring.modulus());
  checked_power(q, k, std::size_t{1} << 28, "brute_homotopy");

  // Effect of raising one unknown by 1 on the residual  G1 S + T F2.
  const std::size_t eqs = y2 * x2;
  std::vector<std::vector<std::int64_t>> delta(k, std::vector<std::int64_t>(eqs, 0));
  for (std::size_t i = 0; i < y1; ++i)
    for (std::size_t j = 0; j < x2; ++j)
      for (std::size_t p = 0; p < y2; ++p) delta[i * x2 + j][p * x2 + j] = g1(p, i);
  for (std::size_t i = 0; i < y2; ++i)
    for (std::size_t j = 0; j < x3; ++j)
      for (std::size_t q2 = 0; q2 < x2; ++q2) delta[ns + i * x3 + j][i * x2 + q2] = f2(j, q2);

  std::vector<std::int64_t> value(eqs, 0), digits(k, 0);
  std::vector<std::int64_t> target(c.values().begin(), c.values().end());
  auto found = [&] {
    HomotopySolution<ModularRing> sol{Matrix<ModularRing>(ring, y1, x2), Matrix<ModularRing>(ring, y2, x3)};
    for (std::size_t i = 0; i < y1; ++i)
      for (std::size_t j = 0; j < x2; ++j) sol.s(i, j) = digits[i * x2 + j];
    for (std::size_t i = 0; i < y2; ++i)
      for (std::size_t j = 0; j < x3; ++j) sol.t(i, j) = digits[ns + i * x3 + j];
    return sol;
  };
  // Odometer: every step adds 1 to a run of low digits, and adding 1 to a
  // digit q-1 wraps it to 0, so each touched digit contributes one delta.
  for (;;) {
    if (value == target) return found();
    std::size_t d = 0;
    for (; d < k; ++d) {
      digits[d] = (digits[d] + 1) % static_cast<std::int64_t>(q);
      for (std::size_t e = 0; e < eqs; ++e) {
        if (delta[d][e] != 0) value[e] = ring.add(value[e], delta[d][e]);
      }
      if (digits[d] != 0) break;
    }
    if (d == k) return std::nullopt;
  }
}

}  // namespace freeab
