#pragma once

// JSON file format for semi-braces:
//
//   {
//     "name": "c6",
//     "size": 6,
//     "labels": ["1", "xi", ...],     (optional)
//     "dot": [[...], ...],
//     "circ": [[...], ...]
//   }
//
// Indices are 0-based. No other keys are accepted. serialize() writes the
// canonical layout above, one matrix row per line.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "semibrace.hpp"

namespace semibrace {

struct SemibraceDocument {
  std::string                              name;
  std::size_t                              size = 0;
  std::optional<std::vector<std::string>>  labels;
  std::vector<std::vector<Elem>>           dot;
  std::vector<std::vector<Elem>>           circ;  // empty for dot-only documents

  friend bool operator==(SemibraceDocument const&, SemibraceDocument const&) = default;
};

namespace detail {

inline std::size_t line_of_offset(std::string const& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

inline std::size_t line_of_key(std::string const& text, std::string const& key) {
  auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

[[noreturn]] inline void schema_error(std::string const& text,
                                      std::string const& key,
                                      std::string const& field,
                                      std::string const& what,
                                      std::string const& code = "SchemaError") {
  std::size_t line = line_of_key(text, key);
  throw Error(ErrorKind::validation, code,
              (line ? "line " + std::to_string(line) + ", " : std::string())
                  + "field '" + field + "': " + what);
}

inline std::vector<std::vector<Elem>> read_matrix(nlohmann::json const& j,
                                                  std::string const&    text,
                                                  std::string const&    key,
                                                  std::size_t           n) {
  if (!j.is_array() || j.size() != n) {
    schema_error(text, key, key, "expected an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<Elem>> rows(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto const& row = j[a];
    std::string const field = key + "[" + std::to_string(a) + "]";
    if (!row.is_array() || row.size() != n) {
      schema_error(text, key, field, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      auto const& v = row[b];
      std::string const cell = field + "[" + std::to_string(b) + "]";
      if (!v.is_number_integer()) {
        schema_error(text, key, cell, "expected an integer");
      }
      auto x = v.get<long long>();
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        schema_error(text, key, cell,
                     std::to_string(x) + " is outside [0, " + std::to_string(n) + ")",
                     "RangeError");
      }
      rows[a].push_back(static_cast<Elem>(x));
    }
  }
  return rows;
}

inline void write_matrix(std::ostringstream& os, std::vector<std::vector<Elem>> const& m) {
  os << "[\n";
  for (std::size_t a = 0; a < m.size(); ++a) {
    os << "    [";
    for (std::size_t b = 0; b < m[a].size(); ++b) {
      os << (b ? ", " : "") << m[a][b];
    }
    os << ']' << (a + 1 < m.size() ? "," : "") << '\n';
  }
  os << "  ]";
}

}  // namespace detail

/// Parses a document. With `require_circ` false the "circ" key is optional
/// (dot-only documents, used as enumeration input).
inline SemibraceDocument parse_document(std::string const& text, bool require_circ = true) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(ErrorKind::validation, "SchemaError",
                "line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": "
                    + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::validation, "SchemaError", "line 1: document must be a JSON object");
  }
  for (auto const& [key, value] : j.items()) {
    if (key != "name" && key != "size" && key != "labels" && key != "dot" && key != "circ") {
      detail::schema_error(text, key, key, "unknown field");
    }
  }
  SemibraceDocument doc;
  if (!j.contains("name") || !j["name"].is_string()) {
    detail::schema_error(text, "name", "name", "required string");
  }
  doc.name = j["name"].get<std::string>();
  if (!j.contains("size") || !j["size"].is_number_integer() || j["size"].get<long long>() < 1) {
    detail::schema_error(text, "size", "size", "required positive integer");
  }
  doc.size = j["size"].get<std::size_t>();
  if (j.contains("labels")) {
    auto const& l = j["labels"];
    if (!l.is_array() || l.size() != doc.size) {
      detail::schema_error(text, "labels", "labels",
                           "expected an array of " + std::to_string(doc.size) + " strings");
    }
    std::vector<std::string> labels;
    for (auto const& s : l) {
      if (!s.is_string()) {
        detail::schema_error(text, "labels", "labels", "expected strings");
      }
      labels.push_back(s.get<std::string>());
    }
    doc.labels = std::move(labels);
  }
  if (!j.contains("dot")) {
    detail::schema_error(text, "dot", "dot", "required matrix");
  }
  doc.dot = detail::read_matrix(j["dot"], text, "dot", doc.size);
  if (j.contains("circ")) {
    doc.circ = detail::read_matrix(j["circ"], text, "circ", doc.size);
  } else if (require_circ) {
    detail::schema_error(text, "circ", "circ", "required matrix");
  }
  return doc;
}

inline std::string serialize(SemibraceDocument const& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << nlohmann::json(doc.name).dump() << ",\n";
  os << "  \"size\": " << doc.size << ",\n";
  if (doc.labels) {
    os << "  \"labels\": " << nlohmann::json(*doc.labels).dump(-1, ' ', false) << ",\n";
  }
  os << "  \"dot\": ";
  detail::write_matrix(os, doc.dot);
  if (!doc.circ.empty()) {
    os << ",\n  \"circ\": ";
    detail::write_matrix(os, doc.circ);
  }
  os << "\n}\n";
  return os.str();
}

/// Canonical form of a document text: serialize(parse(text)).
inline std::string canonicalize(std::string const& text) { return serialize(parse_document(text)); }

inline Checked<LeftSemiBrace> to_semibrace(SemibraceDocument const& doc) {
  if (doc.circ.empty()) {
    return Failure{"SchemaError", {}, "document has no circ table"};
  }
  return verify_left_semibrace(OpTable::from_rows(doc.dot), OpTable::from_rows(doc.circ));
}

inline SemibraceDocument to_document(LeftSemiBrace const&                    B,
                                     std::string                             name,
                                     std::optional<std::vector<std::string>> labels = {}) {
  return {std::move(name), B.size(), std::move(labels), B.dot_table().rows(),
          B.circ_group().table().rows()};
}

/// Matched-product input: {"B": document, "S": document,
/// "delta": |B| permutations of S, "sigma": |S| permutations of B}.
inline MatchedData parse_matched_data(std::string const& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(ErrorKind::validation, "SchemaError",
                "line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": "
                    + e.what());
  }
  for (char const* key : {"B", "S", "delta", "sigma"}) {
    if (!j.is_object() || !j.contains(key)) {
      detail::schema_error(text, key, key, "required field");
    }
  }
  auto B = to_semibrace(parse_document(j["B"].dump())).value();
  auto S = to_semibrace(parse_document(j["S"].dump())).value();
  auto read_perms = [&](char const* key, std::size_t count, std::size_t degree) {
    auto const& a = j[key];
    if (!a.is_array() || a.size() != count) {
      detail::schema_error(text, key, key, "expected " + std::to_string(count) + " permutations");
    }
    std::vector<Permutation> out;
    for (auto const& row : a) {
      if (!row.is_array() || row.size() != degree) {
        detail::schema_error(text, key, key,
                             "each permutation needs " + std::to_string(degree) + " entries");
      }
      Permutation p;
      for (auto const& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0
            || v.get<std::size_t>() >= degree) {
          detail::schema_error(text, key, key, "entry out of range", "RangeError");
        }
        p.push_back(v.get<Elem>());
      }
      out.push_back(std::move(p));
    }
    return out;
  };
  auto delta = read_perms("delta", B.size(), S.size());
  auto sigma = read_perms("sigma", S.size(), B.size());
  return MatchedData{std::move(B), std::move(S), std::move(delta), std::move(sigma)};
}

}  // namespace semibrace
