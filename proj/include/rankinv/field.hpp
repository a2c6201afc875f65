#pragma once

// Arithmetic in F_{q^m} built as a two-level tower:
//   F_q     = F_p[y] / (base_modulus),   q = p^e
//   F_{q^m} = F_q[x] / (ext_modulus)
//
// An element is stored as a single integer index holding its polynomial-basis
// coefficients, low degree first: index = sum_j c_j q^j with c_j in F_q, and
// each c_j = sum_t d_t p^t with d_t in F_p. F_q sits inside F_{q^m} as the
// constants, i.e. the indices below q.
//
// The polynomial routines (schoolbook product, extended Euclid, square and
// multiply) are the reference arithmetic. Exp/log/Zech tables are built from
// them once per field and serve the hot paths used by elimination.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankinv/error.hpp"

namespace rankinv {

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

struct Element {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

using Vec = std::vector<Element>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Poly = std::vector<std::uint32_t>;  // low degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

struct PrimeRing {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    // extended Euclid on integers
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t qq = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - qq * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - qq * s1};
    }
    if (r0 != 1) throw MathError("element is not invertible");
    std::int64_t v = s0 % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(v < 0 ? v + p : v);
  }
  std::uint32_t size() const { return p; }
};

template <class Ring>
Poly poly_mul(const Ring& R, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = R.add(out[i + j], R.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

template <class Ring>
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = R.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

/// Quotient and remainder; `b` must be nonzero.
template <class Ring>
std::pair<Poly, Poly> poly_divmod(const Ring& R, Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw MathError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  const std::uint32_t lead_inv = R.inv(b.back());
  Poly quot(a.size() - b.size() + 1, 0);
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const std::uint32_t c = R.mul(a[shift + b.size() - 1], lead_inv);
    quot[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = R.sub(a[shift + j], R.mul(c, b[j]));
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

/// Inverse of `a` modulo `mod` via extended Euclid.
template <class Ring>
Poly poly_inverse_mod(const Ring& R, Poly a, const Poly& mod) {
  trim(a);
  Poly r0 = mod, r1 = a, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [qq, rem] = poly_divmod(R, r0, r1);
    Poly t2 = poly_sub(R, t0, poly_mul(R, qq, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw MathError("element is not invertible");
  const std::uint32_t c = R.inv(r0[0]);
  for (auto& x : t0) x = R.mul(x, c);
  return poly_divmod(R, t0, mod).second;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
template <class Ring>
bool poly_is_irreducible(const Ring& R, const Poly& f) {
  const std::size_t deg = f.size() - 1;
  const std::uint32_t size = R.size();
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= size;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % size);
        v /= size;
      }
      if (poly_divmod(R, f, g).second.empty()) return false;
    }
  }
  return true;
}

/// F_q = F_p[y]/(modulus), elements as base-p digit indices.
class BaseField {
 public:
  BaseField(std::uint32_t p, std::uint32_t e, Poly modulus) : fp_{p}, e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
    if (e_ > 1 && static_cast<std::uint64_t>(q_) * q_ <= kMaxFieldOrder) {
      mul_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_poly(a, b);
    }
  }

  std::uint32_t size() const { return q_; }
  std::uint32_t p() const { return fp_.p; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return fp_.add(a, b);
    if (fp_.p == 2) return a ^ b;
    return digitwise(a, b, [&](std::uint32_t x, std::uint32_t y) { return fp_.add(x, y); });
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return fp_.sub(a, b);
    if (fp_.p == 2) return a ^ b;
    return digitwise(a, b, [&](std::uint32_t x, std::uint32_t y) { return fp_.sub(x, y); });
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return fp_.mul(a, b);
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_poly(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw MathError("inverse of zero");
    if (e_ == 1) return fp_.inv(a);
    return from_poly(poly_inverse_mod(fp_, to_poly(a), modulus_));
  }

  Poly to_poly(std::uint32_t a) const {
    Poly out(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      out[i] = a % fp_.p;
      a /= fp_.p;
    }
    trim(out);
    return out;
  }
  std::uint32_t from_poly(const Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * fp_.p + a[i];
    return v;
  }

 private:
  template <class Op>
  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, Op op) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += op(a % fp_.p, b % fp_.p) * scale;
      a /= fp_.p;
      b /= fp_.p;
      scale *= fp_.p;
    }
    return out;
  }
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    return from_poly(poly_divmod(fp_, poly_mul(fp_, to_poly(a), to_poly(b)), modulus_).second);
  }

  PrimeRing fp_;
  std::uint32_t e_;
  std::uint32_t q_ = 1;
  Poly modulus_;
  std::vector<std::uint32_t> mul_table_;
};

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds F_{q^m}, q = p^e. Moduli are monic, coefficients low degree first;
  /// ext_modulus coefficients are F_q indices. Throws MathError when p is not
  /// prime, a modulus is not monic of the stated degree, or is reducible, and
  /// BudgetError when q^m exceeds kMaxFieldOrder.
  static FieldPtr create(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> base_modulus, std::uint32_t m,
                         std::vector<std::uint32_t> ext_modulus) {
    return FieldPtr(new Field(p, e, std::move(base_modulus), m, std::move(ext_modulus)));
  }

  /// Prime-base shortcut: F_{p^m} over F_p.
  static FieldPtr create_prime_base(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> ext_modulus) {
    return create(p, 1, {0, 1}, m, std::move(ext_modulus));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& base_modulus() const { return base_modulus_; }
  const std::vector<std::uint32_t>& ext_modulus() const { return ext_modulus_; }

  /// e.g. "GF(8)/GF(2) x^3+x+1".
  std::string name() const {
    std::ostringstream os;
    os << "GF(" << order_ << ")/GF(" << q_ << ") ";
    bool first = true;
    for (std::size_t i = ext_modulus_.size(); i-- > 0;) {
      const std::uint32_t c = ext_modulus_[i];
      if (c == 0) continue;
      if (!first) os << '+';
      first = false;
      if (c != 1 || i == 0) os << (q_ > 10 && e_ > 1 ? "[" + std::to_string(c) + "]" : std::to_string(c));
      if (i >= 1) os << 'x';
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  /// The class of x in F_q[x]/(ext_modulus) (a primitive element when m = 1).
  Element generator() const { return m_ > 1 ? Element{q_} : primitive_; }
  Element primitive() const { return primitive_; }
  Element from_index(std::uint64_t v) const {
    if (v >= order_) throw MathError("element index out of range");
    return {static_cast<std::uint32_t>(v)};
  }
  /// Constant c of F_q embedded in F_{q^m}.
  Element from_subfield_index(std::uint32_t c) const {
    if (c >= q_) throw MathError("F_q index out of range");
    return {c};
  }

  /// F_q coefficients of x in the polynomial basis 1, x, ..., x^{m-1}.
  std::vector<std::uint32_t> coefficients(Element a) const {
    std::vector<std::uint32_t> out(m_);
    std::uint32_t v = a.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
      out[j] = v % q_;
      v /= q_;
    }
    return out;
  }
  Element from_coefficients(std::span<const std::uint32_t> c) const {
    if (c.size() != m_) throw MathError("coefficient vector must have length m");
    std::uint32_t v = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      if (c[j] >= q_) throw MathError("coefficient out of range for F_q");
      v = v * q_ + c[j];
    }
    return {v};
  }

  // Hot-path arithmetic.
  Element add(Element a, Element b) const {
    if (p_ == 2) return {a.value ^ b.value};
    if (a.value == 0) return b;
    if (b.value == 0) return a;
    const std::uint32_t la = log_[a.value];
    std::uint32_t d = log_[b.value] + cyc_ - la;
    if (d >= cyc_) d -= cyc_;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return {0};
    std::uint32_t r = la + z;
    if (r >= cyc_) r -= cyc_;
    return {exp_[r]};
  }
  Element neg(Element a) const {
    if (p_ == 2 || a.value == 0) return a;
    std::uint32_t r = log_[a.value] + half_;
    if (r >= cyc_) r -= cyc_;
    return {exp_[r]};
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a.value == 0 || b.value == 0) return {0};
    std::uint32_t r = log_[a.value] + log_[b.value];
    if (r >= cyc_) r -= cyc_;
    return {exp_[r]};
  }
  Element inv(Element a) const {
    if (a.value == 0) throw MathError("inverse of zero");
    const std::uint32_t l = log_[a.value];
    return {exp_[l == 0 ? 0 : cyc_ - l]};
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t n) const {
    if (n == 0) return one();
    if (a.value == 0) return zero();
    return {exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a.value]) * (n % cyc_)) % cyc_)]};
  }

  /// dst[j] -= c * src[j] for j >= from.
  void sub_scaled(std::span<Element> dst, std::span<const Element> src, Element c, std::size_t from = 0) const {
    if (c.value == 0) return;
    const std::uint32_t lc = log_[c.value];
    const std::uint32_t lneg = p_ == 2 ? lc : (lc + half_) % cyc_;
    for (std::size_t j = from; j < dst.size(); ++j) {
      const std::uint32_t s = src[j].value;
      if (s == 0) continue;
      std::uint32_t r = lneg + log_[s];
      if (r >= cyc_) r -= cyc_;
      dst[j] = p_ == 2 ? Element{dst[j].value ^ exp_[r]} : add(dst[j], Element{exp_[r]});
    }
  }

  // Reference arithmetic (polynomial basis).
  Element add_reference(Element a, Element b) const {
    std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
      out += base_.add(x % q_, y % q_) * scale;
      x /= q_;
      y /= q_;
      scale *= q_;
    }
    return {out};
  }
  Element mul_reference(Element a, Element b) const {
    return from_poly(detail::poly_divmod(base_, detail::poly_mul(base_, to_poly(a), to_poly(b)), ext_modulus_).second);
  }
  Element inv_reference(Element a) const {
    if (a.value == 0) throw MathError("inverse of zero");
    return from_poly(detail::poly_inverse_mod(base_, to_poly(a), ext_modulus_));
  }
  Element pow_reference(Element a, std::uint64_t n) const {
    Element acc = one();
    while (n > 0) {
      if (n & 1) acc = mul_reference(acc, a);
      a = mul_reference(a, a);
      n >>= 1;
    }
    return acc;
  }

  /// x^{q^s}; s-fold application of the tabulated q-power map.
  Element frobenius(Element a, std::uint64_t s) const {
    for (std::uint64_t i = 0, n = s % m_; i < n; ++i) a = {qpow_[a.value]};
    return a;
  }

  /// Tr_{q^m/q^delta}(x) = sum_{i < m/delta} x^{q^{delta i}}.
  Element trace(Element a, std::uint32_t delta) const {
    check_divides(delta);
    Element acc = zero(), cur = a;
    for (std::uint32_t i = 0; i < m_ / delta; ++i) {
      acc = add(acc, cur);
      cur = frobenius(cur, delta);
    }
    return acc;
  }

  bool in_subfield(Element a, std::uint32_t delta) const {
    check_divides(delta);
    return frobenius(a, delta) == a;
  }

  /// All elements of F_{q^delta} inside F_{q^m}, ascending index.
  Vec subfield_elements(std::uint32_t delta) const {
    check_divides(delta);
    Vec out;
    for (std::uint32_t v = 0; v < order_; ++v)
      if (in_subfield({v}, delta)) out.push_back({v});
    return out;
  }

  /// Lexicographic order of the coefficient vectors (c_0, c_1, ...), the
  /// F_q coefficients themselves compared by index.
  bool coeff_lex_less(Element a, Element b) const {
    std::uint32_t x = a.value, y = b.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
      const std::uint32_t cx = x % q_, cy = y % q_;
      if (cx != cy) return cx < cy;
      x /= q_;
      y /= q_;
    }
    return false;
  }

  /// Matrix of the q-power map on the polynomial basis: column j holds the
  /// F_q coefficients of (x^j)^q.
  const std::vector<std::vector<std::uint32_t>>& qpower_matrix() const { return qpow_matrix_; }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> base_modulus, std::uint32_t m,
        std::vector<std::uint32_t> ext_modulus)
      : p_(p), e_(e), m_(m), base_modulus_(std::move(base_modulus)), ext_modulus_(std::move(ext_modulus)),
        base_(validate_base(p, e, base_modulus_)) {
    q_ = base_.size();
    std::uint64_t ord = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      ord *= q_;
      if (ord > kMaxFieldOrder) throw BudgetError("field order exceeds 2^20");
    }
    order_ = static_cast<std::uint32_t>(ord);
    validate_ext();
    cyc_ = order_ - 1;
    half_ = p_ == 2 ? 0 : cyc_ / 2;
    build_tables();
  }

  static detail::BaseField validate_base(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& mod) {
    if (!detail::is_prime(p)) throw MathError("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw MathError("base extension degree must be >= 1");
    if (mod.size() != e + 1) throw MathError("base modulus degree does not match e");
    if (mod.back() != 1) throw MathError("base modulus must be monic");
    for (auto c : mod)
      if (c >= p) throw MathError("base modulus coefficient out of range");
    if (!detail::poly_is_irreducible(detail::PrimeRing{p}, mod)) throw MathError("base modulus is reducible");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) throw BudgetError("field order exceeds 2^20");
    }
    return detail::BaseField(p, e, mod);
  }

  void validate_ext() const {
    if (m_ < 1) throw MathError("extension degree must be >= 1");
    if (ext_modulus_.size() != m_ + 1) throw MathError("extension modulus degree does not match m");
    if (ext_modulus_.back() != 1) throw MathError("extension modulus must be monic");
    for (auto c : ext_modulus_)
      if (c >= q_) throw MathError("extension modulus coefficient out of range");
    if (!detail::poly_is_irreducible(base_, ext_modulus_)) throw MathError("extension modulus is reducible");
  }

  void check_divides(std::uint32_t delta) const {
    if (delta == 0 || m_ % delta != 0) throw MathError("subfield degree must divide m");
  }

  detail::Poly to_poly(Element a) const {
    detail::Poly out(m_);
    std::uint32_t v = a.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
      out[j] = v % q_;
      v /= q_;
    }
    detail::trim(out);
    return out;
  }
  Element from_poly(const detail::Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * q_ + a[i];
    return {v};
  }

  void build_tables() {
    exp_.assign(std::max<std::uint32_t>(cyc_, 1), 0);
    log_.assign(order_, kNoLog);

    // primitive element: smallest index whose order is q^m - 1
    const auto factors = detail::prime_factors(cyc_);
    primitive_ = one();
    for (std::uint32_t v = 1; v < order_; ++v) {
      const Element g{v};
      bool ok = pow_reference(g, cyc_) == one();
      for (auto f : factors)
        if (ok && pow_reference(g, cyc_ / f) == one()) ok = false;
      if (ok) {
        primitive_ = g;
        break;
      }
    }

    Element cur = one();
    for (std::uint32_t i = 0; i < cyc_; ++i) {
      if (log_[cur.value] != kNoLog) throw MathError("internal: primitive element search failed");
      exp_[i] = cur.value;
      log_[cur.value] = i;
      cur = mul_reference(cur, primitive_);
    }

    if (p_ != 2) {
      zech_.assign(cyc_, kNoLog);
      for (std::uint32_t t = 0; t < cyc_; ++t) {
        const Element s = add_reference(one(), Element{exp_[t]});
        zech_[t] = s.value == 0 ? kNoLog : log_[s.value];
      }
    }

    // q-power map, tabulated by applying its matrix to every element
    qpow_matrix_.assign(m_, std::vector<std::uint32_t>(m_, 0));
    std::vector<Element> basis_images(m_);
    for (std::uint32_t j = 0; j < m_; ++j) {
      const Element xj = pow_reference(m_ > 1 ? Element{q_} : one(), j);
      basis_images[j] = pow_reference(xj, q_);
      qpow_matrix_[j] = coefficients(basis_images[j]);
    }
    qpow_.assign(order_, 0);
    for (std::uint32_t v = 0; v < order_; ++v) {
      Element acc = zero();
      std::uint32_t rest = v;
      for (std::uint32_t j = 0; j < m_; ++j) {
        const std::uint32_t c = rest % q_;
        rest /= q_;
        if (c != 0) acc = add(acc, mul(Element{c}, basis_images[j]));
      }
      qpow_[v] = acc.value;
    }
  }

  std::uint32_t p_, e_, m_;
  std::uint32_t q_ = 0, order_ = 0, cyc_ = 0, half_ = 0;
  std::vector<std::uint32_t> base_modulus_, ext_modulus_;
  detail::BaseField base_;
  Element primitive_{1};
  std::vector<std::uint32_t> exp_, log_, zech_, qpow_;
  std::vector<std::vector<std::uint32_t>> qpow_matrix_;
};

/// Vector helpers over a field.
inline Vec frobenius(const Field& F, std::span<const Element> v, std::uint64_t s) {
  Vec out(v.begin(), v.end());
  for (auto& x : out) x = F.frobenius(x, s);
  return out;
}

inline Vec scaled(const Field& F, std::span<const Element> v, Element c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.mul(c, v[i]);
  return out;
}

inline bool is_zero_vector(std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [](Element x) { return x.value == 0; });
}

/// x^{[s]} - x entrywise.
inline Vec frobenius_difference(const Field& F, std::span<const Element> v, std::uint64_t s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.sub(F.frobenius(v[i], s), v[i]);
  return out;
}

}  // namespace rankinv
