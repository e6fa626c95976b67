#pragma once

// Text documents for the command line: one JSON object holding a ring, an
// optional side and one payload.
//
//   {"ring": "zmod4", "side": "right", "chain": {"S": [[2]], "T": []}}
//
// Matrices are arrays of rows. `[]` has no rows and takes its column count
// from the surrounding shapes; `{"shape": [r, c]}` spells out an empty (or
// zero) matrix. Entries are integers, decimal strings for large integers,
// or "p/q" strings over Q; all are reduced to canonical form on load.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "freeab/freeab.hpp"

namespace freeab::cli {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Input problem tied to a line of the document (0 when unknown).
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Finds the line of a key path in the raw text, for diagnostics.
class Locator {
 public:
  explicit Locator(std::string text = {}) : text_(std::move(text)) {}
  std::size_t line(const std::vector<std::string>& path) const;

 private:
  std::string text_;
};

enum class PayloadKind { Matrix, Chain, Morphism, Presented, Spec, Module, Witness };
std::string payload_name(PayloadKind k);

struct Document {
  RingSpec ring = RingSpec::integers();
  std::optional<Side> side;
  PayloadKind kind = PayloadKind::Matrix;
  Json payload;
  Locator locator;
  std::string origin;  // file name, for messages

  Side side_or(Side fallback) const { return side.value_or(fallback); }
  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& message) const;
};

Document parse_document(const std::string& text, const std::string& origin = "<input>");
Document read_document(const std::string& path);  // "-" reads stdin

// Serialises with matrices kept on one line each.
std::string write_document(const RingSpec& ring, std::optional<Side> side, PayloadKind kind, const OrderedJson& payload);

// ---- matrices -------------------------------------------------------------

// A matrix whose column count may still be open (`[]`).
struct RawMatrix {
  std::size_t rows = 0;
  std::optional<std::size_t> cols;
  Json entries;  // array of rows
  std::vector<std::string> path;
};

RawMatrix raw_matrix(const Document& doc, const Json& value, std::vector<std::string> path);

template <ExactRing R>
typename R::value_type parse_entry(const Document& doc, const R& ring, const Json& v, const std::vector<std::string>& path) {
  try {
    if (v.is_number_integer()) return ring.from_int(v.get<long long>());
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if constexpr (std::is_same_v<R, RationalField>) {
        BigRational q(s);
        q.canonicalize();
        if (q.get_den() == 0) doc.fail(path, "zero denominator in entry '" + s + "'");
        return q;
      } else {
        if (s.find('/') != std::string::npos) doc.fail(path, "fractions are only allowed over qq");
        return ring.from_big(BigInt(s));
      }
    }
  } catch (const std::invalid_argument&) {
    doc.fail(path, "malformed entry " + v.dump());
  }
  doc.fail(path, "matrix entries must be integers or strings, got " + v.dump());
}

template <ExactRing R>
Matrix<R> resolve(const Document& doc, const R& ring, const RawMatrix& raw, std::optional<std::size_t> expected_cols = {}) {
  std::size_t cols = raw.cols ? *raw.cols : expected_cols.value_or(0);
  if (raw.cols && expected_cols && *raw.cols != *expected_cols) {
    doc.fail(raw.path, "matrix has " + std::to_string(*raw.cols) + " columns, expected " + std::to_string(*expected_cols));
  }
  Matrix<R> m(ring, raw.rows, cols);
  if (raw.entries.is_array()) {
    for (std::size_t i = 0; i < raw.rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(doc, ring, raw.entries[i][j], raw.path);
  }
  return m;
}

template <ExactRing R>
OrderedJson entry_json(const R& ring, const typename R::value_type& v) {
  if constexpr (std::is_same_v<R, ModularRing>) {
    (void)ring;
    return v;
  } else if constexpr (std::is_same_v<R, IntegerRing>) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
  } else {
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
    return v.get_str();
  }
}

template <ExactRing R>
OrderedJson matrix_json(const Matrix<R>& m) {
  if (m.rows() == 0 || m.cols() == 0) return OrderedJson{{"shape", {m.rows(), m.cols()}}};
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m.ring(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- typed payloads -------------------------------------------------------

const Json& member(const Document& doc, const Json& obj, const std::string& key, const std::vector<std::string>& path);

template <ExactRing R>
Matrix<R> read_matrix(const Document& doc, const R& ring) {
  return resolve(doc, ring, raw_matrix(doc, doc.payload, {"matrix"}));
}

template <ExactRing R>
ChainObject<R> chain_from_json(const Document& doc, const R& ring, Side side, const Json& obj, std::vector<std::string> path) {
  if (!obj.is_object()) doc.fail(path, "a chain is an object with keys S and T");
  auto p = [&](const std::string& k) {
    auto q = path;
    q.push_back(k);
    return q;
  };
  RawMatrix s = raw_matrix(doc, member(doc, obj, "S", path), p("S"));
  RawMatrix t = raw_matrix(doc, member(doc, obj, "T", path), p("T"));
  std::optional<Ranks> declared;
  if (obj.contains("ranks")) {
    const Json& r = obj["ranks"];
    if (!r.is_array() || r.size() != 3 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned() ||
        !r[2].is_number_unsigned()) {
      doc.fail(p("ranks"), "ranks must be three non-negative integers");
    }
    declared = Ranks{r[0].get<std::size_t>(), r[1].get<std::size_t>(), r[2].get<std::size_t>()};
  }
  Matrix<R> first(ring), second(ring);
  if (side == Side::Right) {
    // S: r2 x r1, T: r3 x r2.
    std::optional<std::size_t> r1 = declared ? std::optional(declared->r1) : std::nullopt;
    first = resolve(doc, ring, s, s.cols ? s.cols : r1);
    second = resolve(doc, ring, t, first.rows());
  } else {
    // S: r1 x r2, T: r2 x r3.
    std::optional<std::size_t> r3 = declared ? std::optional(declared->r3) : std::nullopt;
    second = resolve(doc, ring, t, t.cols ? t.cols : r3);
    first = resolve(doc, ring, s, second.rows());
  }
  try {
    ChainObject<R> x(side, std::move(first), std::move(second));
    if (declared && !(x.ranks() == *declared)) {
      const Ranks r = x.ranks();
      doc.fail(p("ranks"), "declared ranks do not match the matrices, which give [" + std::to_string(r.r1) + ", " +
                               std::to_string(r.r2) + ", " + std::to_string(r.r3) + "]");
    }
    return x;
  } catch (const ShapeError& e) {
    doc.fail(path, e.what());
  }
}

template <ExactRing R>
OrderedJson chain_json(const ChainObject<R>& x) {
  const Ranks r = x.ranks();
  OrderedJson j;
  j["S"] = matrix_json(x.first());
  j["T"] = matrix_json(x.second());
  j["ranks"] = {r.r1, r.r2, r.r3};
  return j;
}

template <ExactRing R>
ChainObject<R> read_chain(const Document& doc, const R& ring) {
  return chain_from_json(doc, ring, doc.side_or(Side::Right), doc.payload, {"chain"});
}

template <ExactRing R>
ChainMorphism<R> read_morphism(const Document& doc, const R& ring) {
  const Side side = doc.side_or(Side::Right);
  const Json& obj = doc.payload;
  ChainObject<R> src = chain_from_json(doc, ring, side, member(doc, obj, "source", {"morphism"}), {"morphism", "source"});
  ChainObject<R> tgt = chain_from_json(doc, ring, side, member(doc, obj, "target", {"morphism"}), {"morphism", "target"});
  const Ranks rs = src.ranks(), rt = tgt.ranks();
  const std::size_t s[3] = {rs.r1, rs.r2, rs.r3}, t[3] = {rt.r1, rt.r2, rt.r3};
  std::vector<Matrix<R>> comps;
  for (int i = 0; i < 3; ++i) {
    const std::string key = "M" + std::to_string(i + 1);
    RawMatrix raw = raw_matrix(doc, member(doc, obj, key, {"morphism"}), {"morphism", key});
    // Right: target rank x source rank; left: source rank x target rank.
    const std::size_t cols = side == Side::Right ? s[i] : t[i];
    const std::size_t rows = side == Side::Right ? t[i] : s[i];
    Matrix<R> m = resolve(doc, ring, raw, cols);
    if (m.rows() != rows) {
      doc.fail({"morphism", key}, key + " is " + m.shape_string() + ", ranks need " + std::to_string(rows) + "x" +
                                      std::to_string(cols));
    }
    comps.push_back(std::move(m));
  }
  try {
    return ChainMorphism<R>::make(src, tgt, comps[0], comps[1], comps[2]);
  } catch (const InvalidMorphism& e) {
    doc.fail({"morphism", e.square() == "first square" ? "M1" : "M3"}, e.what());
  }
}

template <ExactRing R>
OrderedJson morphism_json(const ChainMorphism<R>& f) {
  OrderedJson j;
  j["source"] = chain_json(f.source());
  j["target"] = chain_json(f.target());
  j["M1"] = matrix_json(f.m1());
  j["M2"] = matrix_json(f.m2());
  j["M3"] = matrix_json(f.m3());
  return j;
}

template <ExactRing R>
PresentedMorphism<R> read_presented(const Document& doc, const R& ring) {
  const Json& obj = doc.payload;
  RawMatrix a = raw_matrix(doc, member(doc, obj, "a", {"presented"}), {"presented", "a"});
  RawMatrix b = raw_matrix(doc, member(doc, obj, "b", {"presented"}), {"presented", "b"});
  RawMatrix c = raw_matrix(doc, member(doc, obj, "c", {"presented"}), {"presented", "c"});
  RawMatrix d = raw_matrix(doc, member(doc, obj, "d", {"presented"}), {"presented", "d"});
  // a: n x m, b: k x m, c: l x n, d: l x k.
  std::optional<std::size_t> m = a.cols ? a.cols : b.cols;
  Matrix<R> ma = resolve(doc, ring, a, m);
  Matrix<R> mb = resolve(doc, ring, b, ma.cols());
  Matrix<R> mc = resolve(doc, ring, c, ma.rows());
  Matrix<R> md = resolve(doc, ring, d, mb.rows());
  try {
    return PresentedMorphism<R>(std::move(ma), std::move(mb), std::move(mc), std::move(md));
  } catch (const InvalidMorphism& e) {
    doc.fail({"presented", "c"}, e.what());
  } catch (const ShapeError& e) {
    doc.fail({"presented"}, e.what());
  }
}

template <ExactRing R>
OrderedJson presented_json(const PresentedMorphism<R>& f) {
  OrderedJson j;
  j["a"] = matrix_json(f.a());
  j["b"] = matrix_json(f.b());
  j["c"] = matrix_json(f.c());
  j["d"] = matrix_json(f.d());
  return j;
}

template <ExactRing R>
DefinableSpec<R> read_spec(const Document& doc, const R& ring) {
  const Side side = doc.side_or(Side::Right);
  const Json& pairs = member(doc, doc.payload, "pairs", {"spec"});
  if (!pairs.is_array()) doc.fail({"spec", "pairs"}, "pairs must be an array of {U, V} objects");
  DefinableSpec<R> spec(ring, side);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Json& pr = pairs[i];
    if (!pr.is_object()) doc.fail({"spec", "pairs"}, "pair " + std::to_string(i) + " is not an object");
    RawMatrix u = raw_matrix(doc, member(doc, pr, "U", {"spec", "pairs"}), {"spec", "pairs", "U"});
    RawMatrix v = raw_matrix(doc, member(doc, pr, "V", {"spec", "pairs"}), {"spec", "pairs", "V"});
    Matrix<R> mu(ring), mv(ring);
    if (side == Side::Right) {
      // U: m x n, V: p x m.
      mu = resolve(doc, ring, u);
      mv = resolve(doc, ring, v, v.cols ? v.cols : std::optional(mu.rows()));
    } else {
      // P: r x m, Q: m x p.
      mv = resolve(doc, ring, v);
      mu = resolve(doc, ring, u, u.cols ? u.cols : std::optional(mv.rows()));
    }
    try {
      spec.add(std::move(mu), std::move(mv));
    } catch (const ShapeError& e) {
      doc.fail({"spec", "pairs", "V"}, e.what());
    }
  }
  return spec;
}

template <ExactRing R>
OrderedJson spec_json(const DefinableSpec<R>& spec) {
  OrderedJson pairs = OrderedJson::array();
  for (const auto& [u, v] : spec.pairs()) {
    OrderedJson p;
    p["U"] = matrix_json(u);
    p["V"] = matrix_json(v);
    pairs.push_back(std::move(p));
  }
  OrderedJson j;
  j["pairs"] = std::move(pairs);
  return j;
}

template <ExactRing R>
FpModule<R> read_module(const Document& doc, const R& ring) {
  const Json& obj = doc.payload;
  if (!obj.is_object()) doc.fail({"module"}, "a module is an object with keys gens and relations");
  std::optional<std::size_t> gens;
  if (obj.contains("gens")) {
    if (!obj["gens"].is_number_unsigned()) doc.fail({"module", "gens"}, "gens must be a non-negative integer");
    gens = obj["gens"].get<std::size_t>();
  }
  Matrix<R> rel(ring, 0, gens.value_or(0));
  if (obj.contains("relations")) {
    RawMatrix raw = raw_matrix(doc, obj["relations"], {"module", "relations"});
    rel = resolve(doc, ring, raw, gens ? gens : raw.cols);
  } else if (!gens) {
    doc.fail({"module"}, "a module needs gens or relations");
  }
  return FpModule<R>(ring, doc.side_or(Side::Right), rel.cols(), std::move(rel));
}

template <ExactRing R>
OrderedJson module_json(const FpModule<R>& m) {
  OrderedJson j;
  j["gens"] = m.gens();
  j["relations"] = matrix_json(m.relations());
  return j;
}

template <ExactRing R>
HomotopyWitness<R> read_witness(const Document& doc, const R& ring) {
  const Json& obj = doc.payload;
  RawMatrix s = raw_matrix(doc, member(doc, obj, "s", {"witness"}), {"witness", "s"});
  RawMatrix t = raw_matrix(doc, member(doc, obj, "t", {"witness"}), {"witness", "t"});
  return {resolve(doc, ring, s), resolve(doc, ring, t)};
}

template <ExactRing R>
OrderedJson witness_json(const HomotopyWitness<R>& w) {
  OrderedJson j;
  j["s"] = matrix_json(w.s);
  j["t"] = matrix_json(w.t);
  return j;
}

}  // namespace freeab::cli
