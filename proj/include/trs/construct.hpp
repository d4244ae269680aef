#pragma once

#include <compare>
#include <span>
#include <vector>

#include "trs/galois.hpp"
#include "trs/linalg.hpp"
#include "trs/poly.hpp"

namespace trs {

/// A finite field element or the point at infinity. Orders finite points by
/// label with infinity last.
class EvalPoint {
 public:
  static constexpr EvalPoint finite(Elem a) { return EvalPoint(a, false); }
  static constexpr EvalPoint infinity() { return EvalPoint(kZero, true); }

  constexpr bool is_infinity() const { return inf_; }
  /// Only meaningful for finite points.
  constexpr Elem value() const { return value_; }

  friend constexpr bool operator==(const EvalPoint&, const EvalPoint&) = default;
  friend constexpr auto operator<=>(const EvalPoint& a, const EvalPoint& b) {
    if (a.inf_ != b.inf_) return a.inf_ <=> b.inf_;
    return val(a.value_) <=> val(b.value_);
  }

 private:
  constexpr EvalPoint(Elem v, bool inf) : value_(v), inf_(inf) {}
  Elem value_;
  bool inf_;
};

using EvalPoints = std::vector<EvalPoint>;

EvalPoints finite_points(std::span<const Elem> values);
/// Throws DomainError on repeated points.
void require_distinct(std::span<const EvalPoint> alpha);
bool contains_infinity(std::span<const EvalPoint> alpha);
/// Finite values in order, infinity dropped.
std::vector<Elem> finite_values(std::span<const EvalPoint> alpha);

struct LinearCode {
  FieldPtr field;
  Matrix generator;  // k x n

  std::size_t n() const { return generator.cols(); }
  std::size_t k() const { return generator.rows(); }
};

/// Parameters of the twisted code ev(V_{k,t,h,eta}) at alpha.
struct TwistedCodeSpec {
  FieldPtr field;
  EvalPoints alpha;
  unsigned k = 0;
  unsigned t = 1;
  unsigned h = 0;
  Elem eta = kOne;
  /// Also admit n-k < t <= q-1-k; such codes may lose rank.
  bool long_twist = false;

  std::size_t n() const { return alpha.size(); }
  /// Degree of the twist monomial, k - 1 + t.
  unsigned top_degree() const { return k - 1 + t; }
  void validate() const;
};

/// Roth-Lempel code: evaluation columns of `points` followed by the column
/// (0, ..., 0, 1, delta)^T. Length |points| + 1.
struct RothLempelSpec {
  FieldPtr field;
  EvalPoints points;
  unsigned k = 0;
  Elem delta = kZero;

  std::size_t n() const { return points.size() + 1; }
};

/// Evaluates f at each point; infinity yields the coefficient of x^ell.
std::vector<Elem> evaluate(const Field& f, const Poly& poly, std::span<const EvalPoint> alpha, unsigned ell);

/// Polynomial sum a_i x^i + eta a_h x^(k-1+t) for message a.
Poly twisted_polynomial(const TwistedCodeSpec& spec, std::span<const Elem> message);

LinearCode twisted_code(const TwistedCodeSpec& spec);
LinearCode rs_code(FieldPtr field, std::span<const EvalPoint> alpha, unsigned k);
LinearCode grs_code(FieldPtr field, std::span<const EvalPoint> alpha, unsigned k, std::span<const Elem> multipliers);

/// (*)-twisted: (t,h) = (1,0), alpha within G + {0}, (-1)^k / eta outside G.
TwistedCodeSpec star_twisted(FieldPtr field, const MultiplicativeSubgroup& group, EvalPoints alpha, unsigned k,
                             Elem eta);
/// (+)-twisted: (t,h) = (1,k-1), alpha within V + {inf}, 1/eta outside V.
TwistedCodeSpec plus_twisted(FieldPtr field, const AdditiveSubgroup& group, EvalPoints alpha, unsigned k, Elem eta);

LinearCode roth_lempel_code(const RothLempelSpec& spec);

}  // namespace trs
