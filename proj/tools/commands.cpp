#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "audit.hpp"
#include "document.hpp"

namespace freeab::cli {

namespace {

struct Globals {
  std::string ring;
  std::string side;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_rank = 2;
  std::size_t max_module = 16;
  long long max_entry = 3;
  std::size_t jobs = 1;
  std::size_t cases = 500;
  std::size_t case_ceiling = 50'000'000;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

Document load(const std::string& path, const Globals& g) {
  Document d = read_document(path);
  if (!g.ring.empty() && !(RingSpec::parse(g.ring) == d.ring)) {
    throw DocumentError(0, d.origin + ": document ring " + d.ring.name() + " differs from --ring " + g.ring);
  }
  if (!g.side.empty()) {
    const Side s = parse_side(g.side);
    if (d.side && *d.side != s) throw DocumentError(0, d.origin + ": document side differs from --side " + g.side);
    d.side = s;
  }
  return d;
}

void expect(const Document& d, std::initializer_list<PayloadKind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), d.kind) != kinds.end()) return;
  std::string names;
  for (PayloadKind k : kinds) names += (names.empty() ? "" : " or ") + payload_name(k);
  throw DocumentError(0, d.origin + ": expected a " + names + " document, got " + payload_name(d.kind));
}

void same_ring(const Document& a, const Document& b) {
  if (!(a.ring == b.ring)) throw RingMismatch(a.origin + " is over " + a.ring.name() + ", " + b.origin + " over " + b.ring.name());
}

// A module document without a side takes the side of what it is paired with.
Document paired(Document m, Side side) {
  if (!m.side) m.side = side;
  return m;
}

OrderedJson document_json(const RingSpec& ring, Side side, PayloadKind kind, OrderedJson payload) {
  OrderedJson j;
  j["ring"] = ring.name();
  j["side"] = side_name(side);
  j[payload_name(kind)] = std::move(payload);
  return j;
}

void print(Io& io, const RingSpec& ring, Side side, PayloadKind kind, const OrderedJson& payload) {
  io.out << write_document(ring, side, kind, payload);
}

// "label: {...}" with the document on one line.
void print_line(Io& io, const std::string& label, const RingSpec& ring, Side side, PayloadKind kind, OrderedJson payload) {
  io.out << label << ": " << document_json(ring, side, kind, std::move(payload)).dump() << '\n';
}

template <class Fn>
int dispatch(const RingSpec& spec, Fn&& fn) {
  return with_ring(spec, [&](const auto& ring) -> int { return fn(ring); });
}

ModularRing finite(const RingSpec& spec, const std::string& what) {
  if (!spec.is_finite()) throw Unsupported(what + " enumerates elements and needs a finite ring, got " + spec.name());
  return ModularRing(spec);
}

// ---- decisions --------------------------------------------------------------

int cmd_zero_test(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Chain, PayloadKind::Morphism});
  return dispatch(d.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    std::optional<HomotopyWitness<R>> w;
    Side side = d.side_or(Side::Right);
    if (d.kind == PayloadKind::Chain) {
      w = is_zero_object(read_chain(d, ring));
    } else {
      w = is_null_homotopic(read_morphism(d, ring));
    }
    io.out << (w ? "yes" : "no") << '\n';
    if (w) print_line(io, "witness", d.ring, side, PayloadKind::Witness, witness_json(*w));
    return kComputed;
  });
}

int cmd_mor_equal(Io& io, const Globals& g, const std::string& pa, const std::string& pb) {
  Document a = load(pa, g), b = load(pb, g);
  expect(a, {PayloadKind::Morphism});
  expect(b, {PayloadKind::Morphism});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    auto f = read_morphism(a, ring);
    auto h = read_morphism(b, ring);
    auto w = is_null_homotopic(f - h);
    io.out << (w ? "yes" : "no") << '\n';
    if (w) print_line(io, "witness", a.ring, f.side(), PayloadKind::Witness, witness_json(*w));
    return kComputed;
  });
}

int cmd_iso_check(Io& io, const Globals& g, const std::vector<std::string>& paths) {
  if (paths.empty() || paths.size() > 2) throw DocumentError(0, "iso-check takes one morphism or two chain objects");
  Document a = load(paths[0], g);
  if (paths.size() == 1) {
    expect(a, {PayloadKind::Morphism});
    return dispatch(a.ring, [&](const auto& ring) {
      auto f = read_morphism(a, ring);
      auto inv = inverse(f);
      io.out << (inv ? "yes" : "no") << '\n';
      if (inv) print_line(io, "witness", a.ring, f.side(), PayloadKind::Morphism, morphism_json(*inv));
      return kComputed;
    });
  }
  Document b = load(paths[1], g);
  expect(a, {PayloadKind::Chain});
  expect(b, {PayloadKind::Chain});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    auto x = read_chain(a, ring);
    auto y = read_chain(b, ring);
    require_compatible(x, y, "iso-check");
    if (auto iso = objects_isomorphic(x, y)) {
      io.out << "yes\n";
      print_line(io, "witness", a.ring, x.side(), PayloadKind::Morphism, morphism_json(iso->first));
      print_line(io, "inverse", a.ring, x.side(), PayloadKind::Morphism, morphism_json(iso->second));
      return kComputed;
    }
    // Isomorphic objects agree on every module.
    for (const FpModule<R>& m : test_modules(ring, x.side(), g.max_module)) {
      if (!(eval_object(x, m) == eval_object(y, m))) {
        io.out << "no\n";
        print_line(io, "distinguished by", a.ring, x.side(), PayloadKind::Module, module_json(m));
        return kComputed;
      }
    }
    io.out << "unknown\n";
    io.err << "no isomorphism among the searched combinations and no test module of order <= " << g.max_module
           << " tells the objects apart\n";
    return kComputed;
  });
}

int cmd_omega(Io& io, const Globals& g, const std::string& px, const std::string& pm) {
  Document a = load(px, g);
  expect(a, {PayloadKind::Chain});
  Document b = paired(load(pm, g), a.side_or(Side::Right));
  expect(b, {PayloadKind::Module});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    io.out << (omega_contains(read_chain(a, ring), read_module(b, ring)) ? "yes" : "no") << '\n';
    return kComputed;
  });
}

int cmd_definable_check(Io& io, const Globals& g, const std::string& ps, const std::string& pm) {
  Document a = load(ps, g);
  expect(a, {PayloadKind::Spec});
  Document b = paired(load(pm, g), a.side_or(Side::Right));
  expect(b, {PayloadKind::Module});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    auto spec = read_spec(a, ring);
    auto m = read_module(b, ring);
    if (spec.side() != m.side()) throw SideMismatch("definable-check: spec and module sides differ");
    auto fail = definable_failure(spec, m);
    io.out << (fail ? "no" : "yes") << '\n';
    if (fail) io.out << "failing pair: " << *fail << '\n';
    return kComputed;
  });
}

int cmd_check_witness(Io& io, const Globals& g, const std::string& pf, const std::string& pw) {
  Document a = load(pf, g);
  expect(a, {PayloadKind::Chain, PayloadKind::Morphism});
  Document b = load(pw, g);
  if (b.kind == PayloadKind::Morphism) {
    // An inverse: both composites must be homotopic to identities.
    expect(a, {PayloadKind::Morphism});
    same_ring(a, b);
    return dispatch(a.ring, [&](const auto& ring) {
      using R = std::decay_t<decltype(ring)>;
      auto f = read_morphism(a, ring);
      auto h = read_morphism(b, ring);
      bool ok = h.source() == f.target() && h.target() == f.source() &&
                equal_mod_homotopy(compose(h, f), ChainMorphism<R>::identity(f.source())) &&
                equal_mod_homotopy(compose(f, h), ChainMorphism<R>::identity(f.target()));
      io.out << (ok ? "yes" : "no") << '\n';
      return ok ? kComputed : kViolated;
    });
  }
  expect(b, {PayloadKind::Witness});
  same_ring(a, b);
  if (a.side_or(Side::Right) != b.side_or(Side::Right)) throw SideMismatch("check-witness: sides differ");
  return dispatch(a.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    auto w = read_witness(b, ring);
    bool ok;
    if (a.kind == PayloadKind::Chain) {
      ok = verify_witness(ChainMorphism<R>::identity(read_chain(a, ring)), w);
    } else {
      ok = verify_witness(read_morphism(a, ring), w);
    }
    io.out << (ok ? "yes" : "no") << '\n';
    return ok ? kComputed : kViolated;
  });
}

// ---- constructions ------------------------------------------------------------

int cmd_compose(Io& io, const Globals& g, const std::string& ppsi, const std::string& pphi) {
  Document a = load(ppsi, g), b = load(pphi, g);
  expect(a, {PayloadKind::Morphism});
  expect(b, {PayloadKind::Morphism});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    auto psi = read_morphism(a, ring);
    auto phi = read_morphism(b, ring);
    auto c = compose(psi, phi);
    print(io, a.ring, c.side(), PayloadKind::Morphism, morphism_json(c));
    return kComputed;
  });
}

int cmd_kernel(Io& io, const Globals& g, const std::string& path, bool co) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Morphism});
  return dispatch(d.ring, [&](const auto& ring) {
    auto f = read_morphism(d, ring);
    if (co) {
      print(io, d.ring, f.side(), PayloadKind::Morphism, morphism_json(cokernel(f).projection));
    } else {
      print(io, d.ring, f.side(), PayloadKind::Morphism, morphism_json(kernel(f).inclusion));
    }
    return kComputed;
  });
}

int cmd_kappa(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Presented});
  return dispatch(d.ring, [&](const auto& ring) {
    const Side side = d.side_or(Side::Right);
    print(io, d.ring, side, PayloadKind::Chain, chain_json(kappa(read_presented(d, ring), side)));
    return kComputed;
  });
}

int cmd_kappa_inv(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Chain});
  return dispatch(d.ring, [&](const auto& ring) {
    auto x = read_chain(d, ring);
    print(io, d.ring, x.side(), PayloadKind::Presented, presented_json(kappa_inv(x)));
    return kComputed;
  });
}

int cmd_dual(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Chain, PayloadKind::Morphism, PayloadKind::Module});
  return dispatch(d.ring, [&](const auto& ring) {
    const Side side = opposite(d.side_or(Side::Right));
    if (d.kind == PayloadKind::Chain) {
      print(io, d.ring, side, PayloadKind::Chain, chain_json(dual_object(read_chain(d, ring))));
    } else if (d.kind == PayloadKind::Morphism) {
      print(io, d.ring, side, PayloadKind::Morphism, morphism_json(dual_morphism(read_morphism(d, ring))));
    } else {
      print(io, d.ring, side, PayloadKind::Module, module_json(char_dual(read_module(d, ring))));
    }
    return kComputed;
  });
}

int cmd_herzog(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Spec});
  return dispatch(d.ring, [&](const auto& ring) {
    auto t = herzog_transform(read_spec(d, ring));
    print(io, d.ring, t.side(), PayloadKind::Spec, spec_json(t));
    return kComputed;
  });
}

int cmd_eval(Io& io, const Globals& g, const std::string& px, const std::string& pm) {
  Document a = load(px, g);
  expect(a, {PayloadKind::Chain});
  Document b = paired(load(pm, g), a.side_or(Side::Right));
  expect(b, {PayloadKind::Module});
  same_ring(a, b);
  return dispatch(a.ring, [&](const auto& ring) {
    io.out << eval_object(read_chain(a, ring), read_module(b, ring)).to_string() << '\n';
    return kComputed;
  });
}

// Canonical re-print of any document.
int cmd_show(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  return dispatch(d.ring, [&](const auto& ring) {
    const Side side = d.side_or(Side::Right);
    switch (d.kind) {
      case PayloadKind::Matrix:
        print(io, d.ring, side, d.kind, matrix_json(read_matrix(d, ring)));
        break;
      case PayloadKind::Chain:
        print(io, d.ring, side, d.kind, chain_json(read_chain(d, ring)));
        break;
      case PayloadKind::Morphism:
        print(io, d.ring, side, d.kind, morphism_json(read_morphism(d, ring)));
        break;
      case PayloadKind::Presented:
        print(io, d.ring, side, d.kind, presented_json(read_presented(d, ring)));
        break;
      case PayloadKind::Spec:
        print(io, d.ring, side, d.kind, spec_json(read_spec(d, ring)));
        break;
      case PayloadKind::Module:
        print(io, d.ring, side, d.kind, module_json(read_module(d, ring)));
        break;
      case PayloadKind::Witness:
        print(io, d.ring, side, d.kind, witness_json(read_witness(d, ring)));
        break;
    }
    return kComputed;
  });
}

// ---- oracle ---------------------------------------------------------------

int agreement(Io& io, const std::string& snf, const std::string& brute) {
  io.out << "snf: " << snf << "\nbrute: " << brute << "\nagree: " << (snf == brute ? "yes" : "no") << '\n';
  return snf == brute ? kComputed : kViolated;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int oracle_eval(Io& io, const Globals& g, const std::string& px, const std::string& pm) {
  Document a = load(px, g);
  expect(a, {PayloadKind::Chain});
  Document b = paired(load(pm, g), a.side_or(Side::Right));
  expect(b, {PayloadKind::Module});
  same_ring(a, b);
  const ModularRing ring = finite(a.ring, "oracle eval");
  auto x = read_chain(a, ring);
  auto m = read_module(b, ring);
  const std::string snf = eval_object(x, m).order()->get_str();
  const std::string brute = std::to_string(brute_subquotient_order(x.column_first(), x.column_second(), FiniteModule(m)));
  return agreement(io, snf, brute);
}

int oracle_zero_test(Io& io, const Globals& g, const std::string& path) {
  Document d = load(path, g);
  expect(d, {PayloadKind::Chain, PayloadKind::Morphism});
  const ModularRing ring = finite(d.ring, "oracle zero-test");
  if (d.kind == PayloadKind::Chain) {
    auto x = read_chain(d, ring);
    auto brute = brute_homotopy(x.column_first(), x.column_second(), Matrix<ModularRing>::identity(ring, x.ranks().r2));
    return agreement(io, yes_no(is_zero_object(x).has_value()), yes_no(brute.has_value()));
  }
  auto f = read_morphism(d, ring);
  auto brute = brute_homotopy(f.target().column_first(), f.source().column_second(), f.column(2));
  return agreement(io, yes_no(is_null_homotopic(f).has_value()), yes_no(brute.has_value()));
}

int oracle_mor_equal(Io& io, const Globals& g, const std::string& pa, const std::string& pb) {
  Document a = load(pa, g), b = load(pb, g);
  expect(a, {PayloadKind::Morphism});
  expect(b, {PayloadKind::Morphism});
  same_ring(a, b);
  const ModularRing ring = finite(a.ring, "oracle mor-equal");
  auto diff = read_morphism(a, ring) - read_morphism(b, ring);
  auto brute = brute_homotopy(diff.target().column_first(), diff.source().column_second(), diff.column(2));
  return agreement(io, yes_no(is_null_homotopic(diff).has_value()), yes_no(brute.has_value()));
}

int oracle_definable(Io& io, const Globals& g, const std::string& ps, const std::string& pm) {
  Document a = load(ps, g);
  expect(a, {PayloadKind::Spec});
  Document b = paired(load(pm, g), a.side_or(Side::Right));
  expect(b, {PayloadKind::Module});
  same_ring(a, b);
  const ModularRing ring = finite(a.ring, "oracle definable-check");
  auto spec = read_spec(a, ring);
  auto m = read_module(b, ring);
  const FiniteModule table(m);
  bool brute = true;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto x = spec.pair_object(i);
    brute = brute && brute_pair_holds(x.column_first(), x.column_second(), table);
  }
  return agreement(io, yes_no(definable_contains(spec, m)), yes_no(brute));
}

// ---- audits -----------------------------------------------------------------

AuditOptions audit_options(const Globals& g) {
  AuditOptions o;
  o.ring = RingSpec::parse(g.ring.empty() ? "zmod4" : g.ring);
  o.side = g.side.empty() ? Side::Right : parse_side(g.side);
  o.seed = g.seed;
  o.max_rank = g.max_rank;
  o.max_module = g.max_module;
  o.max_entry = g.max_entry;
  o.jobs = g.jobs;
  o.cases = g.cases;
  o.case_ceiling = g.case_ceiling;
  return o;
}

int report(Io& io, const AuditReport& r) {
  for (const auto& line : r.table) io.out << line << '\n';
  for (const auto& line : r.details) io.out << "violation: " << line << '\n';
  io.out << r.summary() << '\n';
  return r.violations ? kViolated : kComputed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  Globals g;
  CLI::App app{"Exact computations with three-term chains of free modules", "freeab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring", g.ring, "base ring: zz, qq, zmod<n>, gf<p>");
  app.add_option("--side", g.side, "right or left");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--max-rank", g.max_rank, "largest free rank in enumerated chains");
  app.add_option("--max-module", g.max_module, "largest order of a test module");
  app.add_option("--max-entry", g.max_entry, "entry bound for random integers");
  app.add_option("--jobs", g.jobs, "worker threads for audits")->check(CLI::PositiveNumber);
  app.add_option("--cases", g.cases, "number of random cases");
  app.add_option("--case-ceiling", g.case_ceiling, "refuse audits with more cases than this");

  std::function<int()> action;
  auto one = [&](const char* name, const char* help, const char* what, std::function<int(const std::string&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, std::string(what) + " document, - for stdin")->required();
    sub->callback([&action, file, fn] { action = [file, fn] { return fn(*file); }; });
  };
  // Two-document commands keep their arguments in a vector.
  auto two = [&](const char* name, const char* help, const char* what,
                 std::function<int(const std::string&, const std::string&)> fn, CLI::App* parent = nullptr) {
    auto* sub = (parent ? parent : &app)->add_subcommand(name, help);
    auto files = std::make_shared<std::vector<std::string>>();
    sub->add_option("files", *files, std::string("documents ") + what)->required()->expected(2);
    sub->callback([&action, files, fn] { action = [files, fn] { return fn((*files)[0], (*files)[1]); }; });
  };

  one("zero-test", "is the chain object zero / the morphism null-homotopic", "FILE",
      [&](const std::string& p) { return cmd_zero_test(io, g, p); });
  two("mor-equal", "are two parallel morphisms equal up to homotopy", "F G",
      [&](const std::string& a, const std::string& b) { return cmd_mor_equal(io, g, a, b); });
  two("compose", "PSI after PHI", "PSI PHI",
      [&](const std::string& a, const std::string& b) { return cmd_compose(io, g, a, b); });
  one("kernel", "kernel inclusion of a morphism", "FILE", [&](const std::string& p) { return cmd_kernel(io, g, p, false); });
  one("cokernel", "cokernel projection of a morphism", "FILE",
      [&](const std::string& p) { return cmd_kernel(io, g, p, true); });
  {
    auto* sub = app.add_subcommand("iso-check", "is a morphism an isomorphism / are two objects isomorphic");
    auto files = std::make_shared<std::vector<std::string>>();
    sub->add_option("files", *files, "one morphism or two chain objects")->required()->expected(1, 2);
    sub->callback([&, files] { action = [&, files] { return cmd_iso_check(io, g, *files); }; });
  }
  one("kappa", "chain object of a presented morphism", "FILE", [&](const std::string& p) { return cmd_kappa(io, g, p); });
  one("kappa-inv", "presented morphism of a chain object", "FILE",
      [&](const std::string& p) { return cmd_kappa_inv(io, g, p); });
  one("dual", "arrow-reversal dual of a chain or morphism, character dual of a module", "FILE",
      [&](const std::string& p) { return cmd_dual(io, g, p); });
  two("eval", "evaluate a chain object at a module", "X M",
      [&](const std::string& a, const std::string& b) { return cmd_eval(io, g, a, b); });
  two("omega", "does X vanish at M", "X M",
      [&](const std::string& a, const std::string& b) { return cmd_omega(io, g, a, b); });
  two("definable-check", "does M satisfy every pair of the spec", "SPEC M",
      [&](const std::string& a, const std::string& b) { return cmd_definable_check(io, g, a, b); });
  one("herzog-transform", "swap each pair and flip the side", "FILE",
      [&](const std::string& p) { return cmd_herzog(io, g, p); });
  two("check-witness", "re-verify a printed witness", "FILE WITNESS",
      [&](const std::string& a, const std::string& b) { return cmd_check_witness(io, g, a, b); });
  one("show", "re-print a document in canonical form", "FILE", [&](const std::string& p) { return cmd_show(io, g, p); });

  app.add_subcommand("audit-exactness", "evaluation exactness on random morphisms")->callback([&] {
    action = [&] { return report(io, audit_exactness(audit_options(g))); };
  });
  app.add_subcommand("audit-elementary-duality", "|eval(X, M)| = |eval(dX, M*)| on the exhaustive battery")->callback([&] {
    action = [&] { return report(io, audit_elementary_duality(audit_options(g))); };
  });
  app.add_subcommand("audit-herzog", "membership classes under the pair transform, at tested scale")->callback([&] {
    action = [&] { return report(io, audit_herzog(audit_options(g))); };
  });

  auto* oracle = app.add_subcommand("oracle", "recheck a decision by brute force over a finite ring");
  oracle->require_subcommand(1);
  two("eval", "order of eval(X, M)", "X M",
      [&](const std::string& a, const std::string& b) { return oracle_eval(io, g, a, b); }, oracle);
  {
    auto* sub = oracle->add_subcommand("zero-test", "zero object / null homotopy");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "document file")->required();
    sub->callback([&, file] { action = [&, file] { return oracle_zero_test(io, g, *file); }; });
  }
  two("mor-equal", "equality up to homotopy", "F G",
      [&](const std::string& a, const std::string& b) { return oracle_mor_equal(io, g, a, b); }, oracle);
  two("definable-check", "membership in a definable class", "SPEC M",
      [&](const std::string& a, const std::string& b) { return oracle_definable(io, g, a, b); }, oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kComputed : kInputError;
  }
  try {
    return action ? action() : kInputError;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace freeab::cli
