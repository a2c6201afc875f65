#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rankinv/error.hpp"
#include "rankinv/field.hpp"

namespace rankinv {

/// `p e base_modulus m ext_modulus`, coefficients low degree first.
struct FieldSpec {
  std::uint32_t p = 2, e = 1;
  std::vector<std::uint32_t> base{0, 1};
  std::uint32_t m = 1;
  std::vector<std::uint32_t> ext;

  std::uint64_t q() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    return q;
  }
  FieldPtr build() const { return Field::create(p, e, base, m, ext); }

  std::string to_line() const {
    std::ostringstream os;
    os << p << ' ' << e;
    for (auto c : base) os << ' ' << c;
    os << ' ' << m;
    for (auto c : ext) os << ' ' << c;
    return os.str();
  }

  /// Default key: gf<q^m>, or gf<q^m>/<q> over a non-prime base.
  std::string default_key() const {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < m; ++i) order *= q();
    return "gf" + std::to_string(order) + (e > 1 ? "/" + std::to_string(q()) : "");
  }
};

/// Parses the numeric part of a catalog line; commas count as spaces.
inline FieldSpec parse_field_spec(const std::string& text) {
  std::string t = text;
  for (auto& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<std::uint64_t> v;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError("non-numeric token '" + tok + "' in field spec");
    v.push_back(std::stoull(tok));
  }
  std::size_t i = 0;
  auto take = [&](const char* what) -> std::uint32_t {
    if (i >= v.size()) throw ParseError(std::string("field spec ends before ") + what);
    if (v[i] > 0xffffffffULL) throw ParseError(std::string("field spec value too large for ") + what);
    return static_cast<std::uint32_t>(v[i++]);
  };
  FieldSpec s;
  s.p = take("p");
  s.e = take("e");
  if (s.e == 0 || s.e > 20) throw ParseError("base degree e out of range");
  s.base.clear();
  for (std::uint32_t j = 0; j <= s.e; ++j) s.base.push_back(take("base modulus"));
  s.m = take("m");
  if (s.m == 0 || s.m > 20) throw ParseError("extension degree m out of range");
  for (std::uint32_t j = 0; j <= s.m; ++j) s.ext.push_back(take("extension modulus"));
  if (i != v.size()) throw ParseError("trailing tokens in field spec");
  return s;
}

class FieldCatalog {
 public:
  /// Built-in entries, optionally extended or overridden by $RANKINV_CATALOG.
  static FieldCatalog standard() {
    FieldCatalog cat = builtin();
    if (const char* path = std::getenv("RANKINV_CATALOG"); path && *path) cat.load_file(path);
    return cat;
  }

  static FieldCatalog builtin() {
    FieldCatalog cat;
    const char* lines[] = {
        "gf4 2 1 0 1 2 1 1 1",
        "gf8 2 1 0 1 3 1 1 0 1",
        "gf16 2 1 0 1 4 1 1 0 0 1",
        "gf32 2 1 0 1 5 1 0 1 0 0 1",
        "gf64 2 1 0 1 6 1 1 0 0 0 0 1",
        "gf128 2 1 0 1 7 1 1 0 0 0 0 0 1",
        "gf256 2 1 0 1 8 1 0 1 1 1 0 0 0 1",
        "gf512 2 1 0 1 9 1 0 0 0 1 0 0 0 0 1",
        "gf1024 2 1 0 1 10 1 0 0 1 0 0 0 0 0 0 1",
        "gf4096 2 1 0 1 12 1 1 0 0 1 0 1 0 0 0 0 0 1",
        "gf9 3 1 0 1 2 2 1 1",
        "gf27 3 1 0 1 3 1 2 0 1",
        "gf81 3 1 0 1 4 2 1 0 0 1",
        "gf243 3 1 0 1 5 1 2 0 0 0 1",
        "gf729 3 1 0 1 6 2 1 0 0 0 0 1",
        "gf2187 3 1 0 1 7 1 0 2 0 0 0 0 1",
        "gf25 5 1 0 1 2 2 1 1",
        "gf125 5 1 0 1 3 2 3 0 1",
        "gf16/4 2 2 1 1 1 2 2 1 1",
        "gf64/4 2 2 1 1 1 3 2 0 0 1",
        "gf256/4 2 2 1 1 1 4 2 1 0 1 1",
    };
    for (const char* l : lines) cat.add_line(l);
    return cat;
  }

  /// Optional leading non-numeric key, then the numeric spec.
  void add_line(const std::string& line) {
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) return;
    std::string key, rest;
    if (first.find_first_not_of("0123456789,") != std::string::npos) {
      key = first;
      std::getline(in, rest);
    } else {
      rest = line;
    }
    FieldSpec spec = parse_field_spec(rest);
    if (key.empty()) key = spec.default_key();
    entries_[key] = spec;
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open field catalog '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      add_line(line);
    }
  }

  std::optional<FieldSpec> find(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Catalog key, or an inline numeric spec.
  FieldSpec resolve(const std::string& key_or_spec) const {
    if (auto s = find(key_or_spec)) return *s;
    if (key_or_spec.find_first_not_of("0123456789, \t") == std::string::npos) return parse_field_spec(key_or_spec);
    throw ParseError("unknown field '" + key_or_spec + "'");
  }

  /// First entry (by key) with the given q and m.
  std::optional<std::pair<std::string, FieldSpec>> find_by_size(std::uint64_t q, std::uint32_t m) const {
    for (const auto& [k, s] : entries_)
      if (s.q() == q && s.m == m) return std::make_pair(k, s);
    return std::nullopt;
  }

  const std::map<std::string, FieldSpec>& entries() const { return entries_; }

 private:
  std::map<std::string, FieldSpec> entries_;
};

}  // namespace rankinv
