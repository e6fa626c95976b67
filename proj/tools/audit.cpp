#include "audit.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace freeab::cli {

namespace {

constexpr std::size_t kMaxDetails = 20;
constexpr std::size_t kMaxChains = std::size_t{1} << 40;

// Slices [0, total) into chunks, runs fn(begin, end) -> Partial on up to
// `jobs` threads and returns the partials in chunk order.
template <class Partial, class Fn>
std::vector<Partial> partitioned(std::size_t total, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(jobs, 1);
  const std::size_t chunks = total == 0 ? 0 : std::min(total, jobs * 8);
  std::vector<Partial> parts(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      parts[c] = fn(total * c / chunks, total * (c + 1) / chunks);
    }
  };
  if (jobs == 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < std::min(jobs, chunks); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return parts;
}

struct Partial {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;

  void fail(std::string what) {
    ++violations;
    if (details.size() < kMaxDetails) details.push_back(std::move(what));
  }
};

void merge(AuditReport& r, std::vector<Partial>& parts) {
  for (auto& p : parts) {
    r.checked += p.checked;
    r.violations += p.violations;
    for (auto& d : p.details) {
      if (r.details.size() < kMaxDetails) r.details.push_back(std::move(d));
    }
  }
}

std::string ranks_label(const Ranks& r) {
  return "[" + std::to_string(r.r1) + ", " + std::to_string(r.r2) + ", " + std::to_string(r.r3) + "]";
}

ModularRing finite_ring(const RingSpec& spec, const char* audit) {
  if (!spec.is_finite()) throw Unsupported(std::string(audit) + " enumerates modules and needs a finite ring, got " + spec.name());
  return ModularRing(spec);
}

// Exhaustive chain enumeration as a flat index space.
class ChainIndex {
 public:
  ChainIndex(const ModularRing& ring, Side side, std::size_t max_rank) : ring_(ring), side_(side) {
    const auto q = static_cast<std::size_t>(ring.modulus());
    for (const Ranks& r : rank_triples(max_rank)) {
      std::size_t n = 1;
      for (std::size_t i = 0; i < r.r2 * (r.r1 + r.r3); ++i) {
        if (__builtin_mul_overflow(n, q, &n) || n > kMaxChains) throw Unsupported("too many chain objects at --max-rank " + std::to_string(max_rank));
      }
      shapes_.push_back(r);
      starts_.push_back(total_);
      total_ += n;
      if (total_ > kMaxChains) throw Unsupported("too many chain objects at --max-rank " + std::to_string(max_rank));
    }
  }

  std::size_t size() const noexcept { return total_; }

  std::pair<Ranks, std::size_t> locate(std::size_t g) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), g);
    const auto k = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return {shapes_[k], g - starts_[k]};
  }

  ChainObject<ModularRing> at(std::size_t g) const {
    auto [r, i] = locate(g);
    return chain_from_index(ring_, side_, r, i);
  }

 private:
  ModularRing ring_;
  Side side_;
  std::vector<Ranks> shapes_;
  std::vector<std::size_t> starts_;
  std::size_t total_ = 0;
};

template <ExactRing R>
AuditReport exactness_on(const R& ring, const AuditOptions& opt) {
  Rng rng(opt.seed);
  std::vector<ChainMorphism<R>> cases;
  cases.reserve(opt.cases);
  for (std::size_t i = 0; i < opt.cases; ++i) cases.push_back(random_morphism(ring, opt.side, opt.max_rank, rng, opt.max_entry));
  const std::vector<FpModule<R>> modules = test_modules(ring, opt.side, opt.max_module);
  AuditReport report;
  auto parts = partitioned<Partial>(cases.size(), opt.jobs, [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (std::size_t i = begin; i < end; ++i) {
      const ChainMorphism<R>& f = cases[i];
      const std::string tag = "case " + std::to_string(i);
      if (!(dual_morphism(dual_morphism(f)) == f)) p.fail(tag + ": d(d f) differs from f");
      const ExactnessReport dx = dual_exactness_audit(f);
      if (!dx.cokernel_side) p.fail(tag + ": d(coker f) -> ker(d f) is not an isomorphism");
      if (!dx.kernel_side) p.fail(tag + ": d(ker f) -> coker(d f) is not an isomorphism");
      const ChainObject<R> k = kernel(f).object;
      const ChainObject<R> c = cokernel(f).object;
      for (const FpModule<R>& m : modules) {
        ++p.checked;
        const ModuleMap<R> ef = eval_morphism(f, m);
        const GroupInvariants ec = eval_object(c, m), ek = eval_object(k, m);
        const GroupInvariants kf = ef.kernel_invariants(), cf = ef.cokernel_invariants();
        const std::string at = tag + " at " + module_label(fp_invariants(m));
        if (!(ec == kf)) p.fail(at + ": eval(coker f) has " + ec.to_string() + " but ker(eval f) has " + kf.to_string());
        if (!(ek == cf)) p.fail(at + ": eval(ker f) has " + ek.to_string() + " but coker(eval f) has " + cf.to_string());
      }
    }
    return p;
  });
  merge(report, parts);
  return report;
}

}  // namespace

std::string module_label(const GroupInvariants& inv) {
  std::ostringstream os;
  if (inv.free_rank) os << "A^" << inv.free_rank << (inv.torsion.empty() ? "" : " + ");
  if (!inv.free_rank || !inv.torsion.empty()) {
    os << '[';
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) os << (i ? ", " : "") << inv.torsion[i].get_str();
    os << ']';
  }
  return os.str();
}

std::string AuditReport::summary() const {
  return "checked " + std::to_string(checked) + " cases, " + std::to_string(violations) + " violations";
}

AuditReport audit_exactness(const AuditOptions& opt) {
  return with_ring(opt.ring, [&](const auto& ring) { return exactness_on(ring, opt); });
}

AuditReport audit_elementary_duality(const AuditOptions& opt) {
  const ModularRing ring = finite_ring(opt.ring, "audit-elementary-duality");
  const std::vector<FpModule<ModularRing>> modules = finite_modules(ring, opt.side, opt.max_module);
  std::vector<CyclicProfile<ModularRing>> direct, dual;
  std::vector<std::string> labels;
  for (const auto& m : modules) {
    direct.push_back(cyclic_profile(m));
    dual.push_back(cyclic_profile(char_dual(m)));
    labels.push_back(module_label(fp_invariants(m)));
  }
  const ChainIndex chains(ring, opt.side, opt.max_rank);
  if (chains.size() * modules.size() > opt.case_ceiling) {
    throw Unsupported("audit-elementary-duality: " + std::to_string(chains.size() * modules.size()) +
                      " cases exceed the ceiling of " + std::to_string(opt.case_ceiling));
  }
  AuditReport report;
  if (modules.empty()) return report;
  auto parts = partitioned<Partial>(chains.size(), opt.jobs, [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (std::size_t g = begin; g < end; ++g) {
      ChainObject<ModularRing> x = chains.at(g);
      ObjectEvaluator<ModularRing> ex(x);
      ObjectEvaluator<ModularRing> ed(dual_object(x));
      for (std::size_t i = 0; i < modules.size(); ++i) {
        ++p.checked;
        const BigInt a = *ex.evaluate(direct[i]).order();
        const BigInt b = *ed.evaluate(dual[i]).order();
        if (a != b) {
          auto [r, k] = chains.locate(g);
          p.fail("ranks " + ranks_label(r) + " chain " + std::to_string(k) + " at " + labels[i] + ": |eval(X, M)| = " +
                 a.get_str() + ", |eval(dX, M*)| = " + b.get_str());
        }
      }
    }
    return p;
  });
  merge(report, parts);
  return report;
}

namespace {

using Bits = std::uint64_t;

std::string bit_string(Bits b, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (b >> i & 1) ? '1' : '0';
  return s;
}

bool subset(Bits a, Bits b) { return (a & ~b) == 0; }

struct HerzogPartial : Partial {
  std::map<Bits, std::pair<Bits, std::size_t>> classes;  // right bits -> (left bits, objects)
};

}  // namespace

AuditReport audit_herzog(const AuditOptions& opt) {
  const ModularRing ring = finite_ring(opt.ring, "audit-herzog");
  const Side other = opposite(opt.side);
  const std::vector<FpModule<ModularRing>> right = finite_modules(ring, opt.side, opt.max_module);
  const std::vector<FpModule<ModularRing>> left = finite_modules(ring, other, opt.max_module);
  if (right.size() > 64) throw Unsupported("audit-herzog: more than 64 test modules; lower --max-module");
  // M_i* is isomorphic to left[match[i]].
  std::vector<std::size_t> match(right.size(), left.size());
  std::vector<CyclicProfile<ModularRing>> rp, lp;
  for (const auto& m : right) rp.push_back(cyclic_profile(m));
  for (const auto& m : left) lp.push_back(cyclic_profile(m));
  for (std::size_t i = 0; i < right.size(); ++i) {
    const GroupInvariants d = fp_invariants(char_dual(right[i]));
    for (std::size_t j = 0; j < left.size(); ++j) {
      if (fp_invariants(left[j]) == d) match[i] = j;
    }
    if (match[i] == left.size()) throw Error("audit-herzog: no test module matches a character dual");
  }
  const ChainIndex chains(ring, opt.side, opt.max_rank);
  const std::size_t work = chains.size() * (right.size() + left.size());
  if (work > opt.case_ceiling) {
    throw Unsupported("audit-herzog: " + std::to_string(work) + " evaluations exceed the ceiling of " +
                      std::to_string(opt.case_ceiling));
  }
  AuditReport report;
  if (right.empty()) return report;

  auto parts = partitioned<HerzogPartial>(chains.size(), opt.jobs, [&](std::size_t begin, std::size_t end) {
    HerzogPartial p;
    for (std::size_t g = begin; g < end; ++g) {
      // The single-pair spec {(first, second)} and its transform.
      ChainObject<ModularRing> x = chains.at(g);
      DefinableSpec<ModularRing> spec(ring, opt.side, {{x.first(), x.second()}});
      DefinableSpec<ModularRing> t = herzog_transform(spec);
      ++p.checked;
      auto [r, k] = chains.locate(g);
      const std::string tag = "ranks " + ranks_label(r) + " chain " + std::to_string(k);
      if (!(herzog_transform(t) == spec)) p.fail(tag + ": transforming twice does not restore the spec");
      ObjectEvaluator<ModularRing> ex(spec.pair_object(0));
      ObjectEvaluator<ModularRing> et(t.pair_object(0));
      Bits rb = 0, lb = 0;
      for (std::size_t i = 0; i < right.size(); ++i) {
        if (ex.evaluate(rp[i]).is_zero()) rb |= Bits{1} << i;
      }
      for (std::size_t j = 0; j < left.size(); ++j) {
        if (et.evaluate(lp[j]).is_zero()) lb |= Bits{1} << j;
      }
      for (std::size_t i = 0; i < right.size(); ++i) {
        if ((rb >> i & 1) != (lb >> match[i] & 1)) {
          p.fail(tag + ": M in the spec class is not matched by M* in the transformed class");
          break;
        }
      }
      auto [it, fresh] = p.classes.try_emplace(rb, lb, 0);
      if (!fresh && it->second.first != lb) p.fail(tag + ": one right class has two transformed classes");
      ++it->second.second;
    }
    return p;
  });

  std::map<Bits, std::pair<Bits, std::size_t>> classes;
  for (auto& p : parts) {
    for (const auto& [rb, entry] : p.classes) {
      auto [it, fresh] = classes.try_emplace(rb, entry.first, 0);
      if (!fresh && it->second.first != entry.first) {
        p.fail("class " + bit_string(rb, right.size()) + " has two transformed classes");
      }
      it->second.second += entry.second;
    }
  }
  std::vector<Partial> plain(parts.begin(), parts.end());
  merge(report, plain);

  // Inclusion between classes must survive the transform in both directions.
  for (const auto& [a, ea] : classes) {
    for (const auto& [b, eb] : classes) {
      if (subset(a, b) != subset(ea.first, eb.first)) {
        ++report.violations;
        if (report.details.size() < kMaxDetails) {
          report.details.push_back("inclusion of " + bit_string(a, right.size()) + " in " + bit_string(b, right.size()) +
                                   " is not preserved by the transform");
        }
      }
    }
  }

  std::string header = "modules (" + side_name(opt.side) + "):";
  for (const auto& m : right) header += " " + module_label(fp_invariants(m));
  report.table.push_back(header);
  header = "modules (" + side_name(other) + "):";
  for (const auto& m : left) header += " " + module_label(fp_invariants(m));
  report.table.push_back(header);
  report.table.push_back("class  " + side_name(opt.side) + "  " + side_name(other) + "  objects");
  std::size_t id = 0;
  for (const auto& [rb, entry] : classes) {
    report.table.push_back(std::to_string(id++) + "  " + bit_string(rb, right.size()) + "  " +
                           bit_string(entry.first, left.size()) + "  " + std::to_string(entry.second));
  }
  report.table.push_back(std::to_string(classes.size()) + " classes at tested scale");
  return report;
}

}  // namespace freeab::cli
