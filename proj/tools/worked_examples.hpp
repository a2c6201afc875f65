#pragma once

// Fixed example codes with their stored expected invariants.

#include <functional>
#include <string>
#include <vector>

#include "rankinv/rankinv.hpp"

namespace rankinv::examples {

struct Check {
  std::string name;
  std::string expected;
  std::function<std::string()> actual;
};

inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

inline FieldPtr gf(const char* key) { return FieldCatalog::builtin().find(key)->build(); }

/// Rows of alpha-exponents; -1 stands for 0.
inline RankMetricCode from_exponents(const FieldPtr& F, const std::vector<std::vector<int>>& e) {
  std::vector<Vec> rows;
  for (const auto& r : e) {
    Vec row;
    for (int x : r) row.push_back(x < 0 ? F->zero() : F->pow(F->generator(), static_cast<std::uint64_t>(x)));
    rows.push_back(row);
  }
  return RankMetricCode(Matrix::from_rows(F, rows));
}

inline RankMetricCode basic_example() {
  auto F = gf("gf8");
  return from_exponents(F, {{0, -1, 1}, {-1, 0, 0}});
}

inline std::pair<RankMetricCode, RankMetricCode> six_three_pair() {
  auto F = gf("gf256");
  return {from_exponents(F, {{0, -1, -1, 95, 173, 98}, {-1, 0, -1, 54, 218, 109}, {-1, -1, 0, 12, 98, 135}}),
          from_exponents(F, {{0, -1, -1, 8, 35, 75}, {-1, 0, -1, 250, 88, 163}, {-1, -1, 0, 51, 116, 141}})};
}

inline std::pair<RankMetricCode, RankMetricCode> four_two_pair() {
  auto F = gf("gf16");
  return {from_exponents(F, {{0, -1, -1, 12}, {-1, 0, 14, 10}}), from_exponents(F, {{0, -1, 1, 5}, {-1, 0, 4, 10}})};
}

inline std::pair<RankMetricCode, RankMetricCode> length_pair() {
  auto F = gf("gf4");
  return {from_exponents(F, {{0, -1, 1}, {-1, 0, -1}}), from_exponents(F, {{0, -1, 1, -1}, {-1, 0, -1, 1}})};
}

inline std::string galois_dims(const RankMetricCode& c) {
  std::string out;
  for (std::uint64_t a = 0; a < c.F().m(); ++a)
    for (std::uint64_t b = a + 1; b < c.F().m(); ++b) out += std::to_string(galois_intersection_dim(c, a, b));
  return out;
}

inline std::string points_text(const LinearSet& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.points.size(); ++i)
    out += (i ? ";" : "") + format_vector(*ls.field, ls.points[i]) + "/" + std::to_string(ls.weights[i]);
  return out;
}

inline std::vector<Check> checks() {
  std::vector<Check> out;
  out.push_back({"basic: linear set", "000 100/1;100 000/2;100 011/1;100 100/1;100 101/1",
                 [] { return points_text(linear_set(basic_example())); }});
  out.push_back({"basic: extended matrix columns", "7", [] {
                   return std::to_string(extended_matrix(system_of(basic_example())).columns.size());
                 }});
  out.push_back({"basic: h-sequence", "1,2,3,4,5,5,5,5", [] { return join(hilbert_sequence(basic_example(), 7).values); }});
  out.push_back({"basic: ideal dims", "0,0,0,0,0,1,2,3", [] { return join(hilbert_sequence(basic_example(), 7).ideal_dims); }});
  out.push_back({"basic: scattered", "false", [] { return is_scattered(linear_set(basic_example())) ? "true" : "false"; }});
  out.push_back({"[6,3] C1: h-sequence", "1,3,6,10,15,21,28,35,42,49,56,62,63,63",
                 [] { return join(hilbert_sequence(six_three_pair().first, 13).values); }});
  out.push_back({"[6,3] C2: h-sequence", "1,3,6,10,15,21,28,35,42,49,56,61,63,63",
                 [] { return join(hilbert_sequence(six_three_pair().second, 13).values); }});
  out.push_back({"[6,3] qsum dims", "6,6", [] {
                   auto [a, b] = six_three_pair();
                   return std::to_string(qsum_dim(a, 1)) + "," + std::to_string(qsum_dim(b, 1));
                 }});
  out.push_back({"[6,3] Galois intersections", std::string(28, '0') + "/" + std::string(28, '0'), [] {
                   auto [a, b] = six_three_pair();
                   return galois_dims(a) + "/" + galois_dims(b);
                 }});
  out.push_back({"[4,2] h-sequences", "1,2,3,4,5,6,7,8,9,9/1,2,3,4,5,6,7,8,9,9", [] {
                   auto [a, b] = four_two_pair();
                   return join(hilbert_sequence(a, 9).values) + "/" + join(hilbert_sequence(b, 9).values);
                 }});
  out.push_back({"[4,2] Galois intersections", "000000/111111", [] {
                   auto [a, b] = four_two_pair();
                   return galois_dims(a) + "/" + galois_dims(b);
                 }});
  out.push_back({"[4,2] C1 qsum dim", "4", [] { return std::to_string(qsum_dim(four_two_pair().first, 1)); }});
  out.push_back({"F_4 pair: linear sets", "PG(1,4) x2", [] {
                   auto [a, b] = length_pair();
                   auto la = linear_set(a), lb = linear_set(b);
                   const bool same = la.points == lb.points && la.size() == 5;
                   return same ? std::string("PG(1,4) x2") : points_text(la) + " vs " + points_text(lb);
                 }});
  out.push_back({"F_4 pair: h-sequences", "1,2,3,4,5,5/1,2,3,4,5,5", [] {
                   auto [a, b] = length_pair();
                   return join(hilbert_sequence(a, 5).values) + "/" + join(hilbert_sequence(b, 5).values);
                 }});
  return out;
}

}  // namespace rankinv::examples
