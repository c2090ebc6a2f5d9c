#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semilat/enumeration.hpp"
#include "semilat/reduction.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/transformation.hpp"

namespace semilat::io {

/// A malformed input line; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// "0 0 2" for 0->0, 1->0, 2->2.
inline std::string format_transformation(const Transformation& a) {
  std::string s;
  for (std::size_t x = 0; x < a.n(); ++x) {
    if (x) s += ' ';
    s += std::to_string(a[x]);
  }
  return s;
}

inline Transformation parse_transformation(const std::string& text, std::size_t line = 1) {
  std::istringstream in(text);
  std::vector<long> images;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
    images.push_back(v);
  }
  if (images.empty()) throw ParseError(line, "empty transformation");
  if (images.size() > kMaxPoints)
    throw ParseError(line, "more than " + std::to_string(kMaxPoints) + " points");
  try {
    return Transformation::make(images.size(), std::span<const long>(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

/// Contents of a transformation file: an optional "n=.. t=.. size=.."
/// header and one image word per line; '#' starts a comment.
struct TransformationFile {
  std::optional<std::size_t> n;
  std::optional<std::size_t> t;
  std::optional<std::size_t> size;
  std::vector<Transformation> elements;
};

inline TransformationFile read_transformations(std::istream& in) {
  TransformationFile f;
  std::string raw;
  std::size_t line = 0;
  bool seen_element = false;
  while (std::getline(in, raw)) {
    ++line;
    auto text = raw.substr(0, raw.find('#'));
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (text.find('=') != std::string::npos) {
      if (seen_element) throw ParseError(line, "header after transformations");
      std::istringstream hs(text);
      std::string field;
      while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(line, "bad header field '" + field + "'");
        auto key = field.substr(0, eq);
        std::size_t value = 0;
        try {
          std::size_t used = 0;
          value = std::stoul(field.substr(eq + 1), &used);
          if (used != field.size() - eq - 1) throw std::invalid_argument(field);
        } catch (const std::exception&) {
          throw ParseError(line, "bad header value in '" + field + "'");
        }
        if (key == "n") f.n = value;
        else if (key == "t") f.t = value;
        else if (key == "size") f.size = value;
        else throw ParseError(line, "unknown header key '" + key + "'");
      }
      continue;
    }
    auto a = parse_transformation(text, line);
    if (!f.n) f.n = a.n();
    if (a.n() != *f.n)
      throw ParseError(line, "expected " + std::to_string(*f.n) + " points, got " +
                                 std::to_string(a.n()));
    f.elements.push_back(a);
    seen_element = true;
  }
  if (f.size && *f.size != f.elements.size())
    throw ParseError(line, "header size " + std::to_string(*f.size) + " but " +
                               std::to_string(f.elements.size()) + " transformations");
  return f;
}

/// "n=3 t=0 size=4" followed by one image word per element.
inline std::string format_semilattice_text(const Semilattice& s,
                                           std::optional<std::size_t> t = std::nullopt) {
  std::string out = "n=" + std::to_string(s.n());
  if (t) out += " t=" + std::to_string(*t);
  out += " size=" + std::to_string(s.size()) + "\n";
  for (const auto& e : s) out += format_transformation(e) + "\n";
  return out;
}

using nlohmann::json;

inline json to_json(const Transformation& a) {
  json arr = json::array();
  for (auto y : a.images()) arr.push_back(static_cast<int>(y));
  return arr;
}

struct SemilatticeAnnotations {
  std::optional<bool> is_maximal;
  std::optional<bool> is_boolean;
  std::optional<std::vector<Transformation>> atoms;
};

inline json to_json(const Semilattice& s, const SemilatticeAnnotations& notes = {}) {
  json j;
  j["n"] = s.n();
  json elems = json::array();
  for (const auto& e : s) elems.push_back(to_json(e));
  j["elements"] = std::move(elems);
  if (notes.is_maximal) j["is_maximal"] = *notes.is_maximal;
  if (notes.is_boolean) j["is_boolean"] = *notes.is_boolean;
  if (notes.atoms) {
    json atoms = json::array();
    for (const auto& a : *notes.atoms) atoms.push_back(to_json(a));
    j["atoms"] = std::move(atoms);
  }
  return j;
}

inline json to_json(const ReductionResult& r) {
  return {
      {"anchor", {{"t", r.anchor.t}, {"u", r.anchor.u}}},
      {"star", to_json(r.star_image)},
      {"restricted", to_json(r.restricted)},
      {"sizes",
       {{"S", r.source_size}, {"S_star", r.star_image.size()}, {"S_star_u", r.restricted.size()}}},
  };
}

template <typename T>
json to_json(const PosetRelation<T>& rel) {
  json carrier = json::array();
  for (const auto& c : rel.carrier()) {
    if constexpr (std::is_same_v<T, Transformation>) carrier.push_back(to_json(c));
    else carrier.push_back(c);
  }
  json leq = json::array();
  for (std::size_t i = 0; i < rel.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rel.size(); ++j) row.push_back(rel.leq(i, j) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  return {{"carrier", std::move(carrier)}, {"leq", std::move(leq)}};
}

inline json to_json(const SpectrumReport& r) {
  json hist = json::array();
  json witnesses = json::object();
  for (const auto& [size, entry] : r.entries) {
    hist.push_back({{"size", size}, {"count", entry.count}});
    witnesses[std::to_string(size)] = to_json(entry.witness);
  }
  return {{"n", r.n},
          {"max_size", r.max_size},
          {"total_maximal", r.total},
          {"histogram", std::move(hist)},
          {"witnesses", std::move(witnesses)}};
}

inline std::string spectrum_csv(const SpectrumReport& r, bool header = true) {
  std::string out = header ? "n,size,count\n" : "";
  for (const auto& [size, entry] : r.entries)
    out += std::to_string(r.n) + "," + std::to_string(size) + "," +
           std::to_string(entry.count) + "\n";
  return out;
}

/// Canonical rendering used for regression fixtures.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace semilat::io
