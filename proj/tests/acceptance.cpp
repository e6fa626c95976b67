// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares the algebraic code path against an
// independent oracle or a closed-form expectation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "freeab/freeab.hpp"

using namespace freeab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!r.pass) ++failures;
  std::printf("%s %d %s: %s [%.1f s]\n", r.pass ? "PASS" : "FAIL", id, title.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
}

template <ExactRing R>
Matrix<R> empty(const R& ring, std::size_t rows, std::size_t cols) {
  return Matrix<R>(ring, rows, cols);
}

ModularRing zmod(std::int64_t n) { return ModularRing(RingSpec::integers_mod(n)); }

// A morphism (0 -> A^x2 -F2-> A^x3) => (A^y1 -G1-> A^y2 -> 0) with middle
// component C. Both squares are trivially commutative, so every homotopy
// problem (G1, F2, C) is realised by a genuine chain map.
ChainMorphism<ModularRing> homotopy_instance(const Matrix<ModularRing>& g1, const Matrix<ModularRing>& f2,
                                             const Matrix<ModularRing>& c) {
  const ModularRing& ring = c.ring();
  auto x = ChainObject<ModularRing>::from_columns(Side::Right, empty(ring, f2.cols(), 0), f2);
  auto y = ChainObject<ModularRing>::from_columns(Side::Right, g1, empty(ring, 0, g1.rows()));
  return ChainMorphism<ModularRing>::from_columns(x, y, empty(ring, g1.cols(), 0), c, empty(ring, 0, f2.rows()));
}

Matrix<ModularRing> matrix_from_digits(const ModularRing& ring, std::size_t rows, std::size_t cols, std::size_t& code) {
  const auto q = static_cast<std::size_t>(ring.modulus());
  Matrix<ModularRing> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, code /= q) m(i, j) = static_cast<std::int64_t>(code % q);
  return m;
}

struct HomotopyTally {
  std::size_t cases = 0, solvable = 0, mismatches = 0;

  void check(const Matrix<ModularRing>& g1, const Matrix<ModularRing>& f2, const Matrix<ModularRing>& c) {
    auto f = homotopy_instance(g1, f2, c);
    auto w = is_null_homotopic(f);
    auto brute = brute_homotopy(g1, f2, c);
    ++cases;
    if (brute) ++solvable;
    if (w.has_value() != brute.has_value() || (w && !verify_witness(f, *w))) ++mismatches;
  }
};

Outcome criterion_homotopy() {
  // Shapes (y1, x2, y2, x3) with each dimension <= 4 and y1 x2 + y2 x3 <= 8
  // unknowns. All instances of a shape are run when there are at most
  // kExhaustive of them; otherwise kSampled instances are drawn, half of
  // them built to be solvable.
  constexpr std::size_t kExhaustive = 16384, kSampled = 128;
  Rng rng(kDefaultSeed);
  HomotopyTally tally;
  std::size_t shapes = 0, exhaustive_shapes = 0;
  for (std::int64_t n : {2, 4}) {
    ModularRing ring = zmod(n);
    const auto q = static_cast<std::size_t>(n);
    for (std::size_t y1 = 0; y1 <= 4; ++y1)
      for (std::size_t x2 = 0; x2 <= 4; ++x2)
        for (std::size_t y2 = 0; y2 <= 4; ++y2)
          for (std::size_t x3 = 0; x3 <= 4; ++x3) {
            if (y1 * x2 + y2 * x3 > 8) continue;
            ++shapes;
            const std::size_t entries = y2 * y1 + x3 * x2 + y2 * x2;
            std::size_t count = 1;
            bool small = true;
            for (std::size_t e = 0; e < entries && small; ++e) {
              count *= q;
              small = count <= kExhaustive;
            }
            if (small) {
              ++exhaustive_shapes;
              for (std::size_t code = 0; code < count; ++code) {
                std::size_t rest = code;
                auto g1 = matrix_from_digits(ring, y2, y1, rest);
                auto f2 = matrix_from_digits(ring, x3, x2, rest);
                auto c = matrix_from_digits(ring, y2, x2, rest);
                tally.check(g1, f2, c);
              }
              continue;
            }
            for (std::size_t k = 0; k < kSampled; ++k) {
              auto g1 = random_matrix(ring, y2, y1, rng), f2 = random_matrix(ring, x3, x2, rng);
              auto c = k % 2 ? g1 * random_matrix(ring, y1, x2, rng) + random_matrix(ring, y2, x3, rng) * f2
                             : random_matrix(ring, y2, x2, rng);
              tally.check(g1, f2, c);
            }
          }
  }
  const std::size_t small_cases = tally.cases;

  // Larger shapes: 9..16 unknowns over F2, 9..10 over Z/4.
  std::size_t larger = 0;
  for (std::int64_t n : {2, 4}) {
    ModularRing ring = zmod(n);
    const std::size_t hi = n == 2 ? 16 : 10, want = n == 2 ? 300 : 200;
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (std::size_t made = 0; made < want;) {
      const std::size_t y1 = dim(rng), x2 = dim(rng), y2 = dim(rng), x3 = dim(rng);
      const std::size_t unknowns = y1 * x2 + y2 * x3;
      if (unknowns < 9 || unknowns > hi) continue;
      auto g1 = random_matrix(ring, y2, y1, rng), f2 = random_matrix(ring, x3, x2, rng);
      auto c = made % 2 ? g1 * random_matrix(ring, y1, x2, rng) + random_matrix(ring, y2, x3, rng) * f2
                        : random_matrix(ring, y2, x2, rng);
      tally.check(g1, f2, c);
      ++made;
      ++larger;
    }
  }
  return {tally.mismatches == 0,
          std::to_string(shapes) + " shapes (" + std::to_string(exhaustive_shapes) + " exhaustive), " +
              std::to_string(small_cases) + " small + " + std::to_string(larger) + " larger cases, " +
              std::to_string(tally.solvable) + " solvable, " + std::to_string(tally.mismatches) + " mismatches"};
}

Outcome criterion_exactness() {
  Rng rng(kDefaultSeed + 2);
  std::size_t morphisms = 0, checks = 0, violations = 0;
  for (std::int64_t n : {4, 6}) {
    ModularRing ring = zmod(n);
    auto mods = finite_modules(ring, Side::Right, 16);
    for (int i = 0; i < 300; ++i) {
      auto f = random_morphism(ring, Side::Right, 3, rng);
      auto ker = kernel(f).object, coker = cokernel(f).object;
      ++morphisms;
      for (const auto& m : mods) {
        auto map = eval_morphism(f, m);
        ++checks;
        if (*eval_object(coker, m).order() != *map.kernel_invariants().order()) ++violations;
        if (*eval_object(ker, m).order() != *map.cokernel_invariants().order()) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(morphisms) + " morphisms, " + std::to_string(checks) +
                               " (morphism, module) pairs, " + std::to_string(violations) + " violations"};
}

template <ExactRing R>
bool kappa_round_trip(const ChainObject<R>& x) {
  return is_isomorphism(kappa_comparison(x));
}

Outcome criterion_kappa() {
  Rng rng(kDefaultSeed + 3);
  const IntegerRing zz;
  ModularRing z6 = zmod(6);
  std::size_t objects = 0, failed = 0;
  for (int i = 0; i < 200; ++i) {
    const Side side = i % 2 ? Side::Left : Side::Right;
    failed += !kappa_round_trip(random_object(zz, side, 3, rng));
    failed += !kappa_round_trip(random_object(z6, side, 3, rng));
    objects += 2;
  }
  // f: A -> 0 presented by a = 1x0, b = 0x0, c = 0x1, d = 0x0.
  PresentedMorphism<IntegerRing> to_zero(empty(zz, 1, 0), empty(zz, 0, 0), empty(zz, 0, 1), empty(zz, 0, 0));
  const bool exact = kappa(to_zero, Side::Right) == ChainObject<IntegerRing>::middle(zz, Side::Right, 1);
  return {failed == 0 && exact, std::to_string(objects) + " objects, " + std::to_string(failed) +
                                    " comparisons not invertible; kappa(A -> 0) " +
                                    (exact ? "equals" : "differs from") + " (0 -> A -> 0)"};
}

Outcome criterion_duality() {
  Rng rng(kDefaultSeed + 4);
  const IntegerRing zz;
  ModularRing z4 = zmod(4), z6 = zmod(6);
  std::size_t involution_fail = 0, involution_cases = 0;
  for (int i = 0; i < 500; ++i) {
    const Side side = i % 2 ? Side::Left : Side::Right;
    auto x = random_object(zz, side, 3, rng);
    auto y = random_object(z6, side, 3, rng);
    involution_fail += !(dual_object(dual_object(x)) == x) + !(dual_object(dual_object(y)) == y);
    auto f = random_morphism(i % 3 ? z4 : z6, side, 2, rng);
    auto g = random_morphism(zz, side, 2, rng);
    involution_fail += !(dual_morphism(dual_morphism(f)) == f) + !(dual_morphism(dual_morphism(g)) == g);
    involution_cases += 4;
  }

  std::size_t exact_cases = 0, exact_fail = 0;
  for (int i = 0; i < 120; ++i) {
    auto fz = random_morphism(zz, Side::Right, 3, rng);
    auto f6 = random_morphism(z6, Side::Left, 3, rng);
    exact_fail += !is_isomorphism(dual_cokernel_comparison(fz)) + !is_isomorphism(dual_cokernel_comparison(f6));
    exact_cases += 2;
  }

  std::size_t tensor_cases = 0, tensor_fail = 0;
  auto mods = finite_modules(z4, Side::Left, 16);
  for_each_chain(z4, Side::Right, 2, [&](const ChainObject<ModularRing>& x) {
    ModuleMap<ModularRing> f = kappa_inv(x).module_map(Side::Right);
    ObjectEvaluator<ModularRing> dual(dual_object(x));
    for (const auto& n : mods) {
      ++tensor_cases;
      if (!(dual.evaluate(n) == tensor_induced(f, n).kernel_invariants())) ++tensor_fail;
    }
  });
  return {involution_fail + exact_fail + tensor_fail == 0,
          "involution " + std::to_string(involution_cases - involution_fail) + "/" + std::to_string(involution_cases) +
              ", dual(coker) ~ ker(dual) " + std::to_string(exact_cases - exact_fail) + "/" +
              std::to_string(exact_cases) + ", tensor oracle " + std::to_string(tensor_cases - tensor_fail) + "/" +
              std::to_string(tensor_cases)};
}

// The battery shared by membership and closure: random single-pair specs
// for every shape (m, n, p) in [0, 3]^3, plus two-pair specs.
std::vector<DefinableSpec<ModularRing>> membership_specs(const ModularRing& ring, Rng& rng) {
  std::vector<DefinableSpec<ModularRing>> specs;
  constexpr int kPerShape = 40, kTwoPair = 1000;
  std::uniform_int_distribution<std::size_t> dim(0, 3);
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t p = 0; p <= 3; ++p)
        for (int k = 0; k < kPerShape; ++k) {
          DefinableSpec<ModularRing> s(ring, Side::Right);
          s.add(random_matrix(ring, m, n, rng), random_matrix(ring, p, m, rng));
          specs.push_back(std::move(s));
        }
  for (int k = 0; k < kTwoPair; ++k) {
    DefinableSpec<ModularRing> s(ring, Side::Right);
    for (int j = 0; j < 2; ++j) {
      const std::size_t m = dim(rng), n = dim(rng), p = dim(rng);
      s.add(random_matrix(ring, m, n, rng), random_matrix(ring, p, m, rng));
    }
    specs.push_back(std::move(s));
  }
  return specs;
}

Outcome criterion_membership(const std::vector<DefinableSpec<ModularRing>>& specs,
                             const std::vector<FpModule<ModularRing>>& mods) {
  std::vector<FiniteModule> tables;
  tables.reserve(mods.size());
  for (const auto& m : mods) tables.emplace_back(m);
  std::size_t cases = 0, disagree = 0;
  for (const auto& spec : specs) {
    for (std::size_t i = 0; i < mods.size(); ++i) {
      bool brute = true;
      for (const auto& [u, v] : spec.pairs()) brute = brute && brute_pair_holds(u, v, tables[i]);
      ++cases;
      if (brute != definable_contains(spec, mods[i])) ++disagree;
    }
  }
  return {disagree == 0, std::to_string(specs.size()) + " specs x " + std::to_string(mods.size()) + " modules, " +
                             std::to_string(cases - disagree) + "/" + std::to_string(cases) + " agree"};
}

Outcome criterion_elementary_duality() {
  std::size_t cases = 0, violations = 0, objects = 0;
  for (std::int64_t n : {4, 6}) {
    ModularRing ring = zmod(n);
    auto mods = finite_modules(ring, Side::Right, 16);
    std::vector<CyclicProfile<ModularRing>> direct, star;
    for (const auto& m : mods) {
      direct.push_back(cyclic_profile(m));
      star.push_back(cyclic_profile(char_dual(m)));
    }
    for_each_chain(ring, Side::Right, 2, [&](const ChainObject<ModularRing>& x) {
      ObjectEvaluator<ModularRing> ex(x), ed(dual_object(x));
      ++objects;
      for (std::size_t i = 0; i < mods.size(); ++i) {
        ++cases;
        if (*ex.evaluate(direct[i]).order() != *ed.evaluate(star[i]).order()) ++violations;
      }
    });
  }
  return {violations == 0, std::to_string(objects) + " objects, " + std::to_string(cases) + " cases, " +
                               std::to_string(violations) + " violations"};
}

Outcome criterion_worked_pair() {
  const IntegerRing zz;
  DefinableSpec<IntegerRing> torsion_free(zz, Side::Right, {{Matrix<IntegerRing>::from_rows(zz, {{2}}), empty(zz, 0, 1)}});
  auto transform = herzog_transform(torsion_free);
  const bool shape = transform.side() == Side::Left && transform.size() == 1 &&
                     transform.pairs()[0].first == empty(zz, 0, 1) &&
                     transform.pairs()[0].second == Matrix<IntegerRing>::from_rows(zz, {{2}});
  const bool a = definable_contains(torsion_free, FpModule<IntegerRing>::free(zz, Side::Right, 1));
  const bool b = !definable_contains(torsion_free, FpModule<IntegerRing>::cyclic(zz, Side::Right, 2));
  const bool c = definable_contains(transform, FpModule<IntegerRing>::cyclic(zz, Side::Left, 3));
  const bool d = !definable_contains(transform, FpModule<IntegerRing>::free(zz, Side::Left, 1));
  auto mark = [](bool ok) { return ok ? "ok" : "wrong"; };
  return {shape && a && b && c && d, std::string("transform ") + mark(shape) + ", Z in " + mark(a) + ", Z/2 out " +
                                         mark(b) + ", Z/3 in dual " + mark(c) + ", Z out of dual " + mark(d)};
}

Outcome criterion_closure(const std::vector<DefinableSpec<ModularRing>>& specs,
                          const std::vector<FpModule<ModularRing>>& mods) {
  std::vector<std::vector<FpModule<ModularRing>>> sums(mods.size());
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i; j < mods.size(); ++j) sums[i].push_back(mods[i].direct_sum(mods[j]));
  std::size_t cases = 0, violations = 0;
  for (const auto& spec : specs) {
    std::vector<bool> in(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) in[i] = definable_contains(spec, mods[i]);
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = i; j < mods.size(); ++j) {
        ++cases;
        if (definable_contains(spec, sums[i][j - i]) != (in[i] && in[j])) ++violations;
      }
  }
  return {violations == 0, std::to_string(cases) + " (spec, M, N) cases, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  report(1, "homotopy solver vs brute force", criterion_homotopy);
  report(2, "evaluation exactness", criterion_exactness);
  report(3, "kappa round trip", criterion_kappa);
  report(4, "duality involution and exactness", criterion_duality);

  ModularRing z6 = zmod(6);
  Rng rng(kDefaultSeed + 5);
  auto specs = membership_specs(z6, rng);
  auto mods = finite_modules(z6, Side::Right, 36);
  report(5, "definable membership vs brute force", [&] { return criterion_membership(specs, mods); });
  report(6, "elementary duality", criterion_elementary_duality);
  report(7, "worked pp-pair decisions", criterion_worked_pair);
  report(8, "direct-sum closure", [&] { return criterion_closure(specs, mods); });
  return failures == 0 ? 0 : 1;
}
