#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trs {

/// Raised for violated preconditions in any domain operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field element: integer in [0, q) read as little-endian base-p digits in
/// the polynomial basis of the field modulus.
enum class Elem : std::uint16_t {};

constexpr unsigned val(Elem a) { return static_cast<unsigned>(a); }
constexpr Elem elem(unsigned v) { return static_cast<Elem>(v); }

inline constexpr Elem kZero = elem(0);
inline constexpr Elem kOne = elem(1);

/// GF(p^m), q <= 2^16. Immutable after construction; share through FieldPtr.
class Field {
 public:
  /// Builds GF(p^m). Without a modulus the lexicographically smallest monic
  /// irreducible of degree m is used. `modulus` lists m+1 base-p digits,
  /// constant term first, leading digit 1.
  static std::shared_ptr<const Field> make(unsigned p, unsigned m,
                                           std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[val(a) * q_ + val(b)];
    return add_digits(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[val(a) * q_ + val(neg_[val(b)])];
    return add_digits(a, b, true);
  }
  Elem neg(Elem a) const { return neg_[val(a)]; }
  Elem mul(Elem a, Elem b) const {
    if (a == kZero || b == kZero) return kZero;
    return exp_[log_[val(a)] + log_[val(b)]];
  }
  /// Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Generator of F_q^* used for the exp/log tables (smallest by value).
  Elem primitive() const { return exp_[1]; }
  /// Discrete log base primitive(); a != 0.
  unsigned log(Elem a) const { return log_[val(a)]; }
  Elem exp(unsigned e) const { return exp_[e % (q_ - 1)]; }

  /// Element from an integer label; throws if label >= q.
  Elem from_int(long long v) const;
  /// Image of an integer in the prime subfield (reduced mod p).
  Elem from_integer_mod_p(long long v) const;
  std::vector<Elem> elements() const;

  /// Digits of a in base p, little-endian, length m.
  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(const std::vector<unsigned>& d) const;

  std::string describe() const;

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b, bool subtract) const;

  unsigned p_ = 0;
  unsigned m_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> exp_;  // length 2(q-1)
  std::vector<unsigned> log_;
  std::vector<Elem> inv_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;  // q*q, only for small q
};

using FieldPtr = std::shared_ptr<const Field>;

struct MultiplicativeSubgroup {
  unsigned order = 0;
  std::vector<Elem> elements;  // sorted by value

  bool contains(Elem a) const;
};

struct AdditiveSubgroup {
  unsigned order = 0;
  std::vector<Elem> elements;  // sorted by value
  std::vector<Elem> basis;     // GF(p)-basis
  bool is_subfield = false;

  bool contains(Elem a) const;
};

bool is_prime(unsigned long long n);

/// One subgroup per divisor of q-1, sorted by order (includes F_q^* itself).
std::vector<MultiplicativeSubgroup> multiplicative_subgroups(const Field& f);

/// All GF(p)-subspaces of the given order p^j with j < m.
std::vector<AdditiveSubgroup> additive_subgroups(const Field& f, unsigned order);

/// Proper subfields, one per proper divisor d of m, ascending by order.
std::vector<AdditiveSubgroup> subfields(const Field& f);

/// Gaussian binomial [m choose j]_p.
unsigned long long gaussian_binomial(unsigned m, unsigned j, unsigned p);

}  // namespace trs
