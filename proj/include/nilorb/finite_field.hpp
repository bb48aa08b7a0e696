/**
 * @file finite_field.hpp
 * @brief Arithmetic in GF(2^e) for 1 <= e <= 8.
 *
 * Elements are stored as e-bit coefficient vectors (bit i is the coefficient
 * of x^i).  Every Field instance is interned and lives for the whole program,
 * so matrices and elements carry a plain `const Field*`.
 */
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

/// Raw field scalar; its meaning depends on the owning Field.
using Scalar = std::uint8_t;

namespace detail {

// Carry-less product of two polynomials of degree < 8.
constexpr unsigned clmul8(unsigned a, unsigned b)
{
  unsigned r = 0;
  for (int i = 0; i < 8; ++i)
    if (b & (1u << i))
      r ^= a << i;
  return r;
}

constexpr int poly_degree(unsigned p)
{
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

constexpr unsigned poly_mod(unsigned a, unsigned m)
{
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
    a ^= m << (d - dm);
  return a;
}

// Minimal-weight irreducible polynomials, indexed by degree.
inline constexpr std::array<unsigned, 9> kStandardModulus = {
    0,      // unused
    0x3,    // x + 1
    0x7,    // x^2 + x + 1
    0xB,    // x^3 + x + 1
    0x13,   // x^4 + x + 1
    0x25,   // x^5 + x^2 + 1
    0x43,   // x^6 + x + 1
    0x83,   // x^7 + x + 1
    0x11D,  // x^8 + x^4 + x^3 + x^2 + 1
};

}  // namespace detail

/// True iff `modulus` is an irreducible polynomial over F2 of exact degree e.
inline bool is_irreducible(int e, unsigned modulus)
{
  if (e < 1 || detail::poly_degree(modulus) != e)
    return false;
  // Exhaustive trial division by every polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d)
    for (unsigned f = 1u << d; f < (2u << d); ++f)
      if (detail::poly_mod(modulus, f) == 0)
        return false;
  return true;
}

/// A request beyond the sizes the brute-force components handle.
struct SizeLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// GF(2^e) defined by a fixed irreducible modulus, with precomputed tables.
class Field {
public:
  /// The field of degree e with the library's fixed modulus.
  static const Field& standard(int e)
  {
    if (e < 1 || e > 8)
      throw std::invalid_argument("field degree must be in 1..8");
    return with_modulus(e, detail::kStandardModulus[static_cast<std::size_t>(e)]);
  }

  /// The field GF(2^e) defined by `modulus`; verified irreducible.
  static const Field& with_modulus(int e, unsigned modulus)
  {
    static std::mutex mutex;
    static std::deque<std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    for (const auto& f : registry)
      if (f->e_ == e && f->modulus_ == modulus)
        return *f;
    if (e < 1 || e > 8)
      throw std::invalid_argument("field degree must be in 1..8");
    if (!is_irreducible(e, modulus))
      throw std::invalid_argument("modulus is not irreducible of degree " + std::to_string(e));
    registry.push_back(std::unique_ptr<Field>(new Field(e, modulus)));
    return *registry.back();
  }

  /// Field of order q = 2^e using the standard modulus.
  static const Field& of_order(unsigned q)
  {
    for (int e = 1; e <= 8; ++e)
      if (q == (1u << e))
        return standard(e);
    throw std::invalid_argument("field order must be 2^e with 1 <= e <= 8, got " + std::to_string(q));
  }

  int degree() const { return e_; }
  unsigned modulus() const { return modulus_; }
  unsigned order() const { return 1u << e_; }

  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>(a ^ b); }
  Scalar mul(Scalar a, Scalar b) const { return mul_[index(a, b)]; }
  Scalar square(Scalar a) const { return mul(a, a); }
  Scalar sqrt(Scalar a) const { return sqrt_[a]; }

  Scalar inv(Scalar a) const
  {
    if (a == 0)
      throw std::domain_error("inversion of zero in " + header());
    return inv_[a];
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// Absolute trace to F2; x^2 + x = c is solvable iff trace(c) == 0.
  Scalar trace(Scalar c) const
  {
    Scalar t = 0, p = c;
    for (int i = 0; i < e_; ++i) {
      t ^= p;
      p = square(p);
    }
    return t;
  }

  /// Some x with x^2 + x = c, or nothing when c is not of that form.
  std::optional<Scalar> artin_schreier_solve(Scalar c) const
  {
    if (as_root_[c] < 0)
      return std::nullopt;
    return static_cast<Scalar>(as_root_[c]);
  }

  /// Smallest element (as an integer) outside {x^2 + x}.
  Scalar nonsplit_delta() const { return delta_; }

  bool contains(Scalar a) const { return a < order(); }

  /// "GF(2^e)/<modulus bits>", e.g. "GF(2^2)/111".
  std::string header() const
  {
    std::string bits;
    for (int i = e_; i >= 0; --i)
      bits.push_back((modulus_ >> i) & 1u ? '1' : '0');
    return "GF(2^" + std::to_string(e_) + ")/" + bits;
  }

  /// "GF(2^e)" without the modulus.
  std::string short_name() const { return "GF(2^" + std::to_string(e_) + ")"; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

private:
  Field(int e, unsigned modulus)
    : e_(e), modulus_(modulus)
  {
    const unsigned q = order();
    mul_.resize(q * q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        mul_[a * q + b] = static_cast<Scalar>(detail::poly_mod(detail::clmul8(a, b), modulus));
    inv_.assign(q, 0);
    sqrt_.assign(q, 0);
    as_root_.assign(q, -1);
    for (unsigned a = 1; a < q; ++a)
      for (unsigned b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1)
          inv_[a] = static_cast<Scalar>(b);
    for (unsigned a = 0; a < q; ++a) {
      const Scalar sq = mul_[a * q + a];
      sqrt_[sq] = static_cast<Scalar>(a);
      const unsigned image = sq ^ a;
      if (as_root_[image] < 0)
        as_root_[image] = static_cast<int>(a);
    }
    delta_ = 0;
    for (unsigned c = 0; c < q; ++c)
      if (as_root_[c] < 0) {
        delta_ = static_cast<Scalar>(c);
        break;
      }
  }

  std::size_t index(Scalar a, Scalar b) const
  {
    return (static_cast<std::size_t>(a) << e_) | b;
  }

  int e_;
  unsigned modulus_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> inv_;
  std::vector<Scalar> sqrt_;
  std::vector<int> as_root_;
  Scalar delta_ = 0;
};

/// A scalar tagged with its field.  Mixing fields throws.
class FieldElement {
public:
  FieldElement(const Field& field, Scalar bits)
    : field_(&field), bits_(bits)
  {
    if (!field.contains(bits))
      throw std::invalid_argument("element " + std::to_string(bits) + " outside " + field.header());
  }

  const Field& field() const { return *field_; }
  Scalar bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
  {
    a.check(b);
    return {*a.field_, a.field_->add(a.bits_, b.bits_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
  {
    a.check(b);
    return {*a.field_, a.field_->mul(a.bits_, b.bits_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b)
  {
    a.check(b);
    return {*a.field_, a.field_->div(a.bits_, b.bits_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b)
  {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

  FieldElement inverse() const { return {*field_, field_->inv(bits_)}; }
  FieldElement sqrt() const { return {*field_, field_->sqrt(bits_)}; }
  FieldElement squared() const { return {*field_, field_->square(bits_)}; }

private:
  void check(const FieldElement& other) const
  {
    if (field_ != other.field_)
      throw std::invalid_argument("mismatched fields: " + field_->header() + " vs " + other.field_->header());
  }

  const Field* field_;
  Scalar bits_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inverse(); }
inline FieldElement sqrt(const FieldElement& a) { return a.sqrt(); }

inline std::optional<FieldElement> artin_schreier_solve(const FieldElement& c)
{
  auto x = c.field().artin_schreier_solve(c.bits());
  if (!x)
    return std::nullopt;
  return FieldElement(c.field(), *x);
}

inline FieldElement nonsplit_delta(const Field& field) { return {field, field.nonsplit_delta()}; }

/// Lower-case hex rendering of a scalar ("0".."ff").
inline std::string scalar_to_hex(Scalar s)
{
  static const char* digits = "0123456789abcdef";
  std::string out;
  if (s >= 16)
    out.push_back(digits[s >> 4]);
  out.push_back(digits[s & 15]);
  return out;
}

/// Parses "3", "0x3", "ff"; throws on garbage or values outside the field.
inline Scalar scalar_from_hex(const Field& field, const std::string& text)
{
  std::string t = text;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X'))
    t = t.substr(2);
  if (t.empty() || t.size() > 2)
    throw std::invalid_argument("bad hex scalar '" + text + "'");
  unsigned v = 0;
  for (char c : t) {
    v <<= 4;
    if (c >= '0' && c <= '9')
      v |= static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v |= static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v |= static_cast<unsigned>(c - 'A' + 10);
    else
      throw std::invalid_argument("bad hex scalar '" + text + "'");
  }
  if (!field.contains(static_cast<Scalar>(v)) || v > 255)
    throw std::invalid_argument("scalar '" + text + "' outside " + field.header());
  return static_cast<Scalar>(v);
}

/// Parses "GF(2^e)" or "GF(2^e)/<bits>".
inline const Field& field_from_header(const std::string& header)
{
  const auto open = header.find("GF(2^");
  const auto close = header.find(')');
  if (open != 0 || close == std::string::npos)
    throw std::invalid_argument("bad field header '" + header + "'");
  const int e = std::stoi(header.substr(5, close - 5));
  if (close + 1 == header.size())
    return Field::standard(e);
  if (header[close + 1] != '/')
    throw std::invalid_argument("bad field header '" + header + "'");
  unsigned modulus = 0;
  for (char c : header.substr(close + 2)) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bad modulus bits in '" + header + "'");
    modulus = (modulus << 1) | static_cast<unsigned>(c - '0');
  }
  return Field::with_modulus(e, modulus);
}

}  // namespace nilorb
