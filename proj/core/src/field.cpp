#include "msrlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace msrlab {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t pack(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2) return false;
  const std::uint32_t m = static_cast<std::uint32_t>(poly.size() - 1);
  if (m == 1) return true;
  // Enumerate every monic divisor candidate of degree 1..m/2.
  for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly f = digits(static_cast<std::uint32_t>(c), p, deg);
      f.push_back(1);
      if (poly_mod(poly, f, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::InvalidPolynomial, "degree must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits(static_cast<std::uint32_t>(c), p, m);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorKind::ReduciblePolynomial, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly)
    : p_(p), m_(m), q_(1), poly_(std::move(poly)) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::InvalidPolynomial, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorKind::InvalidParams, "field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    if (!poly_.empty())
      throw Error(ErrorKind::InvalidPolynomial, "prime field takes no reduction polynomial");
  } else {
    if (poly_.size() != m + 1)
      throw Error(ErrorKind::InvalidPolynomial,
                  "reduction polynomial must have degree " + std::to_string(m));
    for (auto c : poly_)
      if (c >= p) throw Error(ErrorKind::InvalidPolynomial, "coefficient out of range");
    if (poly_.back() != 1) throw Error(ErrorKind::InvalidPolynomial, "polynomial must be monic");
    if (!is_irreducible(p, poly_))
      throw Error(ErrorKind::ReduciblePolynomial, "reduction polynomial is reducible");
  }

  // Find a primitive element and fill the exp/log tables.
  exp_.assign(q_ == 1 ? 1 : q_ - 1, 0);
  log_.assign(q_, 0);
  const std::uint32_t group = q_ - 1;
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t ord = 0;
    do {
      exp_[ord] = x;
      x = slow_mul(x, g);
      ++ord;
    } while (x != 1 && ord < group);
    if (x == 1 && ord == group) break;
  }
  for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly) {
  return std::make_shared<const Field>(p, m, std::move(poly));
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  const Poly da = digits(a, p_, m_), db = digits(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  Poly r = poly_mod(prod, poly_, p_);
  r.resize(m_, 0);
  return pack(r, p_);
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0, scale = 1;
  while (a != 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FieldElem::FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorKind::FieldMismatch, "null field");
  if (!field_->contains(value_))
    throw Error(ErrorKind::InvalidParams, "value " + std::to_string(value_) + " outside " + field_->name());
}

void FieldElem::require_same(const FieldElem& o) const {
  if (!same_field(field_, o.field_))
    throw Error(ErrorKind::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inverse() const { return {field_, field_->inv(value_)}; }

FieldElem arith(ArithOp op, const FieldElem& a, const std::optional<FieldElem>& b) {
  switch (op) {
    case ArithOp::Add:
      if (!b) throw Error(ErrorKind::InvalidParams, "add needs two operands");
      return a + *b;
    case ArithOp::Mul:
      if (!b) throw Error(ErrorKind::InvalidParams, "mul needs two operands");
      return a * *b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inverse();
  }
  throw Error(ErrorKind::InvalidParams, "unknown op");
}

}  // namespace msrlab
