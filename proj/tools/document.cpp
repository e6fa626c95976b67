#include "document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace freeab::cli {

namespace {

std::size_t line_at(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

struct KindKey {
  PayloadKind kind;
  const char* key;
};

constexpr KindKey kKinds[] = {
    {PayloadKind::Matrix, "matrix"},       {PayloadKind::Chain, "chain"}, {PayloadKind::Morphism, "morphism"},
    {PayloadKind::Presented, "presented"}, {PayloadKind::Spec, "spec"},   {PayloadKind::Module, "module"},
    {PayloadKind::Witness, "witness"},
};

bool is_scalar_array(const OrderedJson& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_scalar_array(e)) return false;
  }
  return true;
}

void emit(std::ostringstream& os, const OrderedJson& j, int indent) {
  if (j.is_object() && !j.empty() && !(j.size() == 1 && j.contains("shape"))) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << std::string(indent + 2, ' ') << OrderedJson(it.key()).dump() << ": ";
      emit(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << '}';
  } else if (j.is_array() && !is_scalar_array(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << std::string(indent + 2, ' ');
      emit(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << ']';
  } else {
    // Matrices and scalars stay on one line, with a space after commas.
    std::string s = j.dump();
    std::string out;
    bool in_string = false;
    for (char ch : s) {
      if (ch == '"') in_string = !in_string;
      out += ch;
      if (ch == ',' && !in_string) out += ' ';
      if (ch == ':' && !in_string) out += ' ';
    }
    os << out;
  }
}

}  // namespace

std::size_t Locator::line(const std::vector<std::string>& path) const {
  std::size_t pos = 0;
  std::size_t found = std::string::npos;
  for (const auto& key : path) {
    std::size_t at = text_.find('"' + key + '"', pos);
    if (at == std::string::npos) break;
    found = at;
    pos = at + key.size() + 2;
  }
  return found == std::string::npos ? 1 : line_at(text_, found);
}

std::string payload_name(PayloadKind k) {
  for (const auto& e : kKinds) {
    if (e.kind == k) return e.key;
  }
  return "?";
}

void Document::fail(const std::vector<std::string>& path, const std::string& message) const {
  throw DocumentError(locator.line(path), (origin.empty() ? "" : origin + ": ") + message);
}

Document parse_document(const std::string& text, const std::string& origin) {
  Document doc;
  doc.origin = origin;
  doc.locator = Locator(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(line_at(text, e.byte), origin + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DocumentError(1, origin + ": a document is a JSON object");
  if (!j.contains("ring") || !j["ring"].is_string()) doc.fail({"ring"}, "missing ring descriptor (e.g. \"ring\": \"zmod4\")");
  try {
    doc.ring = RingSpec::parse(j["ring"].get<std::string>());
  } catch (const Error& e) {
    doc.fail({"ring"}, e.what());
  }
  if (j.contains("side")) {
    if (!j["side"].is_string()) doc.fail({"side"}, "side must be \"right\" or \"left\"");
    try {
      doc.side = parse_side(j["side"].get<std::string>());
    } catch (const Error& e) {
      doc.fail({"side"}, e.what());
    }
  }
  int payloads = 0;
  for (const auto& e : kKinds) {
    if (j.contains(e.key)) {
      ++payloads;
      doc.kind = e.kind;
      doc.payload = j[e.key];
    }
  }
  if (payloads != 1) {
    doc.fail({}, payloads == 0 ? "no payload (matrix, chain, morphism, presented, spec, module or witness)"
                               : "a document holds exactly one payload");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "ring" || k == "side") continue;
    bool known = false;
    for (const auto& e : kKinds) known = known || k == e.key;
    if (!known) doc.fail({k}, "unknown key '" + k + "'");
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw DocumentError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text, path == "-" ? "<stdin>" : path);
}

std::string write_document(const RingSpec& ring, std::optional<Side> side, PayloadKind kind, const OrderedJson& payload) {
  OrderedJson j;
  j["ring"] = ring.name();
  if (side) j["side"] = side_name(*side);
  j[payload_name(kind)] = payload;
  std::ostringstream os;
  emit(os, j, 0);
  os << '\n';
  return os.str();
}

RawMatrix raw_matrix(const Document& doc, const Json& value, std::vector<std::string> path) {
  RawMatrix raw;
  raw.path = std::move(path);
  if (value.is_object()) {
    if (!value.contains("shape") || !value["shape"].is_array() || value["shape"].size() != 2 ||
        !value["shape"][0].is_number_unsigned() || !value["shape"][1].is_number_unsigned()) {
      doc.fail(raw.path, "matrix objects need \"shape\": [rows, cols]");
    }
    raw.rows = value["shape"][0].get<std::size_t>();
    raw.cols = value["shape"][1].get<std::size_t>();
    if (value.contains("rows")) {
      raw.entries = value["rows"];
    } else {
      raw.entries = Json::array();
      for (std::size_t i = 0; i < raw.rows; ++i) raw.entries.push_back(Json::array());
      for (auto& row : raw.entries)
        for (std::size_t c = 0; c < *raw.cols; ++c) row.push_back(0);
    }
    if (!raw.entries.is_array() || raw.entries.size() != raw.rows) doc.fail(raw.path, "row count does not match shape");
    for (const auto& row : raw.entries) {
      if (!row.is_array() || row.size() != *raw.cols) doc.fail(raw.path, "row length does not match shape");
    }
    return raw;
  }
  if (!value.is_array()) doc.fail(raw.path, "a matrix is an array of rows");
  raw.rows = value.size();
  raw.entries = value;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_array()) doc.fail(raw.path, "row " + std::to_string(i) + " is not an array");
    if (i == 0) raw.cols = value[i].size();
    if (value[i].size() != *raw.cols) doc.fail(raw.path, "ragged rows: row " + std::to_string(i) + " has " +
                                                             std::to_string(value[i].size()) + " entries, row 0 has " +
                                                             std::to_string(*raw.cols));
  }
  return raw;
}

const Json& member(const Document& doc, const Json& obj, const std::string& key, const std::vector<std::string>& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    auto p = path;
    doc.fail(p, "missing key '" + key + "'");
  }
  return obj[key];
}

}  // namespace freeab::cli
