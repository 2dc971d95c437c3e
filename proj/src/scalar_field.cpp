#include "desargues/scalar_field.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>
#include <vector>

namespace desargues {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AlreadySquare: return "AlreadySquare";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::DependentPairs: return "DependentPairs";
    case ErrorCode::DegenerateComplement: return "DegenerateComplement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroCoefficients: return "ZeroCoefficients";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ProportionalPencil: return "ProportionalPencil";
    case ErrorCode::DependentLine: return "DependentLine";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::DegeneratePosition: return "DegeneratePosition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantError: return "InvariantError";
  }
  return "Unknown";
}

namespace detail {

struct FieldNode {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;
  std::optional<Field> base;
  std::optional<Scalar> d;
  int depth = 0;
  // sqrt_table[x] = least r with r*r = x (mod p), or -1. Empty for large p.
  std::vector<std::int32_t> sqrt_table;
};

}  // namespace detail

namespace {

constexpr std::int64_t kMaxPrime = std::int64_t{1} << 31;
constexpr std::int64_t kSqrtTableLimit = std::int64_t{1} << 20;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  return mod(t0, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Tonelli-Shanks; only used above the table limit. Returns -1 for non-squares.
std::int64_t tonelli_shanks(std::int64_t n, std::int64_t p) {
  if (n == 0) return 0;
  if (pow_mod(n, (p - 1) / 2, p) != 1) return -1;
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::int64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p),
               r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, t2 = t;
    while (t2 != 1) { t2 = t2 * t2 % p; ++i; }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return std::min(r, p - r);
}

[[noreturn]] void mismatch(const Field& f, const Field& g) {
  throw Error(ErrorCode::FieldMismatch, f.to_string() + " vs " + g.to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  static const Field q{std::make_shared<const detail::FieldNode>()};
  return q;
}

Field Field::prime(std::int64_t p) {
  if (p == 2) throw Error(ErrorCode::CharacteristicTwo, "characteristic 2 excluded");
  if (p >= kMaxPrime || !is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime below 2^31");
  auto node = std::make_shared<detail::FieldNode>();
  node->kind = FieldKind::PrimeField;
  node->p = p;
  if (p <= kSqrtTableLimit) {
    node->sqrt_table.assign(static_cast<std::size_t>(p), -1);
    for (std::int64_t r = (p - 1) / 2; r >= 0; --r)
      node->sqrt_table[static_cast<std::size_t>(r * r % p)] = static_cast<std::int32_t>(r);
  }
  return Field{std::move(node)};
}

Field Field::extension(const Field& base, const Scalar& d) {
  Scalar lifted = embed(d, base);
  if (sqrt_in_field(lifted))
    throw Error(ErrorCode::AlreadySquare,
                lifted.to_string() + " is already a square in " + base.to_string());
  auto node = std::make_shared<detail::FieldNode>();
  node->kind = FieldKind::QuadExt;
  node->p = base.characteristic();
  node->base = base;
  node->d = lifted;
  node->depth = base.depth() + 1;
  return Field{std::move(node)};
}

FieldKind Field::kind() const { return node_->kind; }
std::int64_t Field::characteristic() const { return node_->p; }
int Field::depth() const { return node_->depth; }

const Field& Field::base() const {
  if (!node_->base) throw Error(ErrorCode::FieldMismatch, to_string() + " has no base field");
  return *node_->base;
}

const Scalar& Field::radicand() const {
  if (!node_->d) throw Error(ErrorCode::FieldMismatch, to_string() + " has no radicand");
  return *node_->d;
}

bool operator==(const Field& lhs, const Field& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  if (a.kind != b.kind || a.p != b.p || a.depth != b.depth) return false;
  if (a.kind != FieldKind::QuadExt) return true;
  return *a.base == *b.base && *a.d == *b.d;
}

bool Field::embeds_into(const Field& target) const {
  if (target.depth() < depth()) return false;
  const Field* f = &target;
  while (f->depth() > depth()) f = &f->base();
  return *f == *this;
}

Field common_field(const Field& f, const Field& g) {
  if (f.embeds_into(g)) return g;
  if (g.embeds_into(f)) return f;
  mismatch(f, g);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, Rational(n));
    case FieldKind::PrimeField: return Scalar(*this, mod(n, node_->p));
    case FieldKind::QuadExt: return from_parts(base().from_int(n), base().zero());
  }
  return zero();
}

Scalar Field::from_integer(const Integer& n) const {
  switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, Rational(n));
    case FieldKind::PrimeField: {
      Integer r = n % node_->p;
      if (r < 0) r += node_->p;
      return Scalar(*this, static_cast<std::int64_t>(r));
    }
    case FieldKind::QuadExt: return from_parts(base().from_integer(n), base().zero());
  }
  return zero();
}

Scalar Field::from_rational(const Rational& q) const {
  if (kind() == FieldKind::Rationals) return Scalar(*this, q);
  return from_integer(numerator(q)) / from_integer(denominator(q));
}

Scalar Field::from_parts(const Scalar& u, const Scalar& v) const {
  if (kind() != FieldKind::QuadExt)
    throw Error(ErrorCode::FieldMismatch, to_string() + " is not a quadratic extension");
  return Scalar(*this, std::make_shared<const std::array<Scalar, 2>>(
                           std::array<Scalar, 2>{embed(u, base()), embed(v, base())}));
}

std::string Field::to_string() const {
  switch (kind()) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "GF(" + std::to_string(node_->p) + ")";
    case FieldKind::QuadExt:
      return base().to_string() + "(sqrt(" + radicand().to_string() + "))";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<Rational>(rep_) == 0;
    case FieldKind::PrimeField: return std::get<std::int64_t>(rep_) == 0;
    case FieldKind::QuadExt: return ext_u().is_zero() && ext_v().is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<Rational>(rep_) == 1;
    case FieldKind::PrimeField: return std::get<std::int64_t>(rep_) == 1;
    case FieldKind::QuadExt: return ext_u().is_one() && ext_v().is_zero();
  }
  return false;
}

const Rational& Scalar::rational() const {
  if (field_.kind() != FieldKind::Rationals)
    throw Error(ErrorCode::FieldMismatch, "not a rational: " + to_string());
  return std::get<Rational>(rep_);
}

std::int64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::PrimeField)
    throw Error(ErrorCode::FieldMismatch, "not a prime-field residue: " + to_string());
  return std::get<std::int64_t>(rep_);
}

const Scalar& Scalar::ext_u() const {
  if (field_.kind() != FieldKind::QuadExt)
    throw Error(ErrorCode::FieldMismatch, "not an extension element: " + to_string());
  return (*std::get<ExtParts>(rep_))[0];
}

const Scalar& Scalar::ext_v() const {
  if (field_.kind() != FieldKind::QuadExt)
    throw Error(ErrorCode::FieldMismatch, "not an extension element: " + to_string());
  return (*std::get<ExtParts>(rep_))[1];
}

bool Scalar::is_canonical_positive() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<Rational>(rep_) > 0;
    case FieldKind::PrimeField: {
      std::int64_t r = std::get<std::int64_t>(rep_);
      return r != 0 && r <= (field_.characteristic() - 1) / 2;
    }
    case FieldKind::QuadExt:
      return ext_u().is_zero() ? ext_v().is_canonical_positive()
                               : ext_u().is_canonical_positive();
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: {
      const Rational& q = std::get<Rational>(rep_);
      std::ostringstream os;
      os << numerator(q);
      if (denominator(q) != 1) os << '/' << denominator(q);
      return os.str();
    }
    case FieldKind::PrimeField: return std::to_string(std::get<std::int64_t>(rep_));
    case FieldKind::QuadExt:
      return "(" + ext_u().to_string() + " + " + ext_v().to_string() + "*sqrt(" +
             field_.radicand().to_string() + "))";
  }
  return "?";
}

Scalar embed(const Scalar& x, const Field& target) {
  if (x.field_ == target) return x;
  if (target.kind() != FieldKind::QuadExt || target.depth() <= x.field_.depth())
    mismatch(x.field_, target);
  Scalar u = embed(x, target.base());
  Scalar v = target.base().zero();
  return Scalar(target, std::make_shared<const std::array<Scalar, 2>>(
                            std::array<Scalar, 2>{std::move(u), std::move(v)}));
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (!(x.field_ == y.field_)) {
    Field f = common_field(x.field_, y.field_);
    return embed(x, f) + embed(y, f);
  }
  switch (x.field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(x.field_, std::get<Rational>(x.rep_) + std::get<Rational>(y.rep_));
    case FieldKind::PrimeField:
      return Scalar(x.field_, mod(std::get<std::int64_t>(x.rep_) + std::get<std::int64_t>(y.rep_),
                                  x.field_.characteristic()));
    case FieldKind::QuadExt:
      return x.field_.from_parts(x.ext_u() + y.ext_u(), x.ext_v() + y.ext_v());
  }
  return x;
}

Scalar operator-(const Scalar& x) {
  switch (x.field_.kind()) {
    case FieldKind::Rationals: return Scalar(x.field_, Rational(-std::get<Rational>(x.rep_)));
    case FieldKind::PrimeField:
      return Scalar(x.field_, mod(-std::get<std::int64_t>(x.rep_), x.field_.characteristic()));
    case FieldKind::QuadExt: return x.field_.from_parts(-x.ext_u(), -x.ext_v());
  }
  return x;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (!(x.field_ == y.field_)) {
    Field f = common_field(x.field_, y.field_);
    return embed(x, f) * embed(y, f);
  }
  switch (x.field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(x.field_, std::get<Rational>(x.rep_) * std::get<Rational>(y.rep_));
    case FieldKind::PrimeField:
      return Scalar(x.field_, std::get<std::int64_t>(x.rep_) * std::get<std::int64_t>(y.rep_) %
                                  x.field_.characteristic());
    case FieldKind::QuadExt: {
      const Scalar& d = x.field_.radicand();
      return x.field_.from_parts(x.ext_u() * y.ext_u() + d * x.ext_v() * y.ext_v(),
                                 x.ext_u() * y.ext_v() + x.ext_v() * y.ext_u());
    }
  }
  return x;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, Rational(1) / std::get<Rational>(rep_));
    case FieldKind::PrimeField:
      return Scalar(field_, inv_mod(std::get<std::int64_t>(rep_), field_.characteristic()));
    case FieldKind::QuadExt: {
      // (u + v r)^-1 = (u - v r) / (u^2 - d v^2); the norm is nonzero since d
      // is not a square in the base.
      const Scalar& u = ext_u();
      const Scalar& v = ext_v();
      Scalar norm_inv = (u * u - field_.radicand() * v * v).inv();
      return field_.from_parts(u * norm_inv, -v * norm_inv);
    }
  }
  return *this;
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (!(x.field_ == y.field_)) {
    Field f = common_field(x.field_, y.field_);
    return embed(x, f) == embed(y, f);
  }
  switch (x.field_.kind()) {
    case FieldKind::Rationals: return std::get<Rational>(x.rep_) == std::get<Rational>(y.rep_);
    case FieldKind::PrimeField:
      return std::get<std::int64_t>(x.rep_) == std::get<std::int64_t>(y.rep_);
    case FieldKind::QuadExt: return x.ext_u() == y.ext_u() && x.ext_v() == y.ext_v();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Square roots

namespace {

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Scalar canonical(Scalar r) {
  if (!r.is_zero() && !r.is_canonical_positive()) return -r;
  return r;
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  const Field& field = x.field();
  if (x.is_zero()) return x;
  switch (field.kind()) {
    case FieldKind::Rationals: {
      const Rational& q = x.rational();
      auto num = integer_sqrt(numerator(q));
      auto den = integer_sqrt(denominator(q));
      if (!num || !den) return std::nullopt;
      return field.from_rational(Rational(*num, *den));
    }
    case FieldKind::PrimeField: {
      const auto& table = field.node_->sqrt_table;
      std::int64_t r = table.empty()
                           ? tonelli_shanks(x.residue(), field.characteristic())
                           : table[static_cast<std::size_t>(x.residue())];
      if (r < 0) return std::nullopt;
      return field.from_int(r);
    }
    case FieldKind::QuadExt: {
      const Field& base = field.base();
      const Scalar& d = field.radicand();
      const Scalar& u = x.ext_u();
      const Scalar& v = x.ext_v();
      if (v.is_zero()) {
        if (auto a = sqrt_in_field(u)) return canonical(field.from_parts(*a, base.zero()));
        if (auto b = sqrt_in_field(u / d)) return canonical(field.from_parts(base.zero(), *b));
        return std::nullopt;
      }
      // (a + b r)^2 = u + v r  <=>  a^2 + d b^2 = u, 2ab = v; then
      // (a^2 - d b^2)^2 = u^2 - d v^2, so a^2 = (u +- n) / 2 with n^2 the norm.
      auto n = sqrt_in_field(u * u - d * v * v);
      if (!n) return std::nullopt;
      Scalar half = base.from_int(2).inv();
      for (const Scalar& candidate : {(u + *n) * half, (u - *n) * half}) {
        auto a = sqrt_in_field(candidate);
        if (!a || a->is_zero()) continue;
        Scalar b = v / (base.from_int(2) * *a);
        return canonical(field.from_parts(*a, b));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace desargues
