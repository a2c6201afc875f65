#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rankinv/code.hpp"
#include "rankinv/error.hpp"
#include "rankinv/field.hpp"
#include "rankinv/geometry.hpp"
#include "rankinv/hilbert.hpp"

namespace rankinv {

/// Element as its F_q coefficients, low degree first. Each coefficient is
/// written as its index in F_q; digits are concatenated when q <= 10 and
/// separated by ':' otherwise.
inline std::string format_element(const Field& F, Element a) {
  const auto c = F.coefficients(a);
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (F.q() > 10 && j > 0) out += ':';
    out += std::to_string(c[j]);
  }
  return out;
}

inline Element parse_element(const Field& F, const std::string& tok) {
  std::vector<std::uint32_t> c;
  if (F.q() > 10) {
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ':')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad element '" + tok + "'");
      c.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    }
  } else {
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw ParseError("bad element '" + tok + "'");
      c.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  if (c.size() != F.m()) throw ParseError("element '" + tok + "' needs " + std::to_string(F.m()) + " coefficients");
  for (auto x : c)
    if (x >= F.q()) throw ParseError("coefficient out of range in '" + tok + "'");
  return F.from_coefficients(c);
}

inline std::string format_vector(const Field& F, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_element(F, v[i]);
  }
  return out;
}

namespace detail {

/// Non-comment lines of a text file; a `# field <spec>` comment is captured.
struct TextBody {
  std::vector<std::string> lines;
  std::optional<std::string> field;
};

inline TextBody read_body(std::istream& in) {
  TextBody body;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const std::string rest = line.substr(first + 1);
      const auto p = rest.find_first_not_of(" \t");
      if (p != std::string::npos && rest.compare(p, 5, "field") == 0) {
        std::string spec = rest.substr(p + 5);
        const auto a = spec.find_first_not_of(" \t"), b = spec.find_last_not_of(" \t\r");
        if (a != std::string::npos) body.field = spec.substr(a, b - a + 1);
      }
      continue;
    }
    body.lines.push_back(line);
  }
  return body;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::stringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

inline std::uint64_t parse_uint(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError(std::string("integer out of range for ") + what);
  }
}

}  // namespace detail

/// Field spec from a `# field` comment, if any, without parsing the rest.
inline std::optional<std::string> peek_field_comment(const std::string& text) {
  std::istringstream in(text);
  return detail::read_body(in).field;
}

/// Header `q m n k`, then k rows of n elements.
inline void write_code(std::ostream& out, const RankMetricCode& code, const std::string& field_key = {}) {
  const Field& F = code.F();
  if (!field_key.empty()) out << "# field " << field_key << '\n';
  out << F.q() << ' ' << F.m() << ' ' << code.n() << ' ' << code.k() << '\n';
  for (std::size_t r = 0; r < code.k(); ++r) out << format_vector(F, code.generator().row_vec(r)) << '\n';
}

inline RankMetricCode read_code(std::istream& in, const FieldPtr& field) {
  auto body = detail::read_body(in);
  if (body.lines.empty()) throw ParseError("empty code file");
  const auto head = detail::tokens(body.lines[0]);
  if (head.size() != 4) throw ParseError("code header must be 'q m n k'");
  const auto q = detail::parse_uint(head[0], "q"), m = detail::parse_uint(head[1], "m");
  const auto n = detail::parse_uint(head[2], "n"), k = detail::parse_uint(head[3], "k");
  if (q != field->q() || m != field->m())
    throw ParseError("code header q=" + head[0] + " m=" + head[1] + " does not match field " + field->name());
  if (body.lines.size() != k + 1) throw ParseError("expected " + head[3] + " generator rows");
  Matrix G(field, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    const auto row = detail::tokens(body.lines[r + 1]);
    if (row.size() != n) throw ParseError("row " + std::to_string(r + 1) + " does not have n entries");
    for (std::size_t c = 0; c < n; ++c) G(r, c) = parse_element(*field, row[c]);
  }
  return RankMetricCode(std::move(G));
}

inline std::string code_to_string(const RankMetricCode& code, const std::string& field_key = {}) {
  std::ostringstream out;
  write_code(out, code, field_key);
  return out.str();
}

inline RankMetricCode code_from_string(const std::string& text, const FieldPtr& field) {
  std::istringstream in(text);
  return read_code(in, field);
}

/// Header `k s`, then the C(k,2) coefficients A_{i,j} in pair order.
inline void write_form(std::ostream& out, const Field& F, const FsForm& p, const std::string& field_key = {}) {
  if (!field_key.empty()) out << "# field " << field_key << '\n';
  out << p.k << ' ' << p.s << '\n' << format_vector(F, p.coeffs) << '\n';
}

inline FsForm read_form(std::istream& in, const Field& F) {
  auto body = detail::read_body(in);
  if (body.lines.empty()) throw ParseError("empty form file");
  const auto head = detail::tokens(body.lines[0]);
  if (head.size() != 2) throw ParseError("form header must be 'k s'");
  FsForm p;
  p.k = detail::parse_uint(head[0], "k");
  p.s = detail::parse_uint(head[1], "s");
  if (p.k < 2) throw ParseError("forms need k >= 2");
  std::vector<std::string> toks;
  for (std::size_t i = 1; i < body.lines.size(); ++i)
    for (auto& t : detail::tokens(body.lines[i])) toks.push_back(t);
  if (toks.size() != FsForm::pair_count(p.k)) throw ParseError("form needs C(k,2) coefficients");
  for (const auto& t : toks) p.coeffs.push_back(parse_element(F, t));
  return p;
}

/// One point per line: entries, then the weight.
inline void write_linear_set(std::ostream& out, const LinearSet& ls) {
  for (std::size_t i = 0; i < ls.points.size(); ++i)
    out << format_vector(*ls.field, ls.points[i]) << ' ' << ls.weights[i] << '\n';
}

}  // namespace rankinv
