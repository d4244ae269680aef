#include "trs/construct.hpp"

#include <algorithm>
#include <string>

namespace trs {

EvalPoints finite_points(std::span<const Elem> values) {
  EvalPoints out;
  out.reserve(values.size());
  for (Elem v : values) out.push_back(EvalPoint::finite(v));
  return out;
}

void require_distinct(std::span<const EvalPoint> alpha) {
  EvalPoints sorted(alpha.begin(), alpha.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("evaluation points are not pairwise distinct");
}

bool contains_infinity(std::span<const EvalPoint> alpha) {
  return std::any_of(alpha.begin(), alpha.end(), [](const EvalPoint& a) { return a.is_infinity(); });
}

std::vector<Elem> finite_values(std::span<const EvalPoint> alpha) {
  std::vector<Elem> out;
  for (const auto& a : alpha)
    if (!a.is_infinity()) out.push_back(a.value());
  return out;
}

void TwistedCodeSpec::validate() const {
  if (!field) throw DomainError("twisted code spec has no field");
  const std::size_t nn = alpha.size();
  if (k < 1) throw DomainError("dimension k must be >= 1");
  if (k >= nn) throw DomainError("dimension k must be smaller than the length n");
  if (k > field->q()) throw DomainError("dimension k must not exceed q");
  if (nn > field->q() + 1) throw DomainError("length exceeds q + 1");
  if (t < 1) throw DomainError("twist t must be >= 1");
  if (t > nn - k && !(long_twist && k + t <= field->q() - 1))
    throw DomainError(long_twist ? "twist t must satisfy t <= max(n - k, q - 1 - k)" : "twist t must satisfy t <= n - k");
  if (h >= k) throw DomainError("hook h must satisfy h < k");
  if (eta == kZero) throw DomainError("eta must be nonzero");
  if (val(eta) >= field->q()) throw DomainError("eta out of range");
  for (const auto& a : alpha)
    if (!a.is_infinity() && val(a.value()) >= field->q()) throw DomainError("evaluation point out of range");
  require_distinct(alpha);
}

std::vector<Elem> evaluate(const Field& f, const Poly& p, std::span<const EvalPoint> alpha, unsigned ell) {
  if (poly::degree(p) > static_cast<int>(ell)) throw DomainError("polynomial degree exceeds ell");
  require_distinct(alpha);
  std::vector<Elem> out;
  out.reserve(alpha.size());
  for (const auto& a : alpha) out.push_back(a.is_infinity() ? poly::coeff(p, ell) : poly::eval(f, p, a.value()));
  return out;
}

Poly twisted_polynomial(const TwistedCodeSpec& spec, std::span<const Elem> message) {
  if (message.size() != spec.k) throw DomainError("message length must equal k");
  const Field& f = *spec.field;
  Poly p(spec.top_degree() + 1, kZero);
  std::copy(message.begin(), message.end(), p.begin());
  p[spec.top_degree()] = f.add(p[spec.top_degree()], f.mul(spec.eta, message[spec.h]));
  return p;
}

LinearCode twisted_code(const TwistedCodeSpec& spec) {
  spec.validate();
  const Field& f = *spec.field;
  LinearCode code{spec.field, Matrix(spec.k, spec.n())};
  std::vector<Elem> unit(spec.k, kZero);
  for (unsigned i = 0; i < spec.k; ++i) {
    unit.assign(spec.k, kZero);
    unit[i] = kOne;
    const auto row = evaluate(f, twisted_polynomial(spec, unit), spec.alpha, spec.top_degree());
    std::copy(row.begin(), row.end(), code.generator.row(i).begin());
  }
  return code;
}

LinearCode rs_code(FieldPtr field, std::span<const EvalPoint> alpha, unsigned k) {
  std::vector<Elem> ones(alpha.size(), kOne);
  return grs_code(std::move(field), alpha, k, ones);
}

LinearCode grs_code(FieldPtr field, std::span<const EvalPoint> alpha, unsigned k, std::span<const Elem> multipliers) {
  if (multipliers.size() != alpha.size()) throw DomainError("multiplier count must equal n");
  if (k < 1 || k >= alpha.size()) throw DomainError("need 1 <= k < n");
  for (Elem v : multipliers)
    if (v == kZero) throw DomainError("GRS column multipliers must be nonzero");
  require_distinct(alpha);
  const Field& f = *field;
  LinearCode code{field, Matrix(k, alpha.size())};
  for (unsigned i = 0; i < k; ++i) {
    Poly mono(i + 1, kZero);
    mono[i] = kOne;
    const auto row = evaluate(f, mono, alpha, k - 1);
    for (std::size_t j = 0; j < alpha.size(); ++j) code.generator(i, j) = f.mul(row[j], multipliers[j]);
  }
  return code;
}

TwistedCodeSpec star_twisted(FieldPtr field, const MultiplicativeSubgroup& group, EvalPoints alpha, unsigned k,
                             Elem eta) {
  const Field& f = *field;
  if (group.order >= f.q() - 1) throw DomainError("(*)-twisted codes need a proper multiplicative subgroup");
  for (const auto& a : alpha) {
    if (a.is_infinity() || (a.value() != kZero && !group.contains(a.value())))
      throw DomainError("evaluation point outside G + {0}");
  }
  if (eta == kZero) throw DomainError("eta must be nonzero");
  Elem sign_inv = f.inv(eta);
  if (k % 2 == 1) sign_inv = f.neg(sign_inv);
  if (group.contains(sign_inv)) throw DomainError("(-1)^k / eta lies in G");
  TwistedCodeSpec spec{std::move(field), std::move(alpha), k, 1, 0, eta};
  spec.validate();
  return spec;
}

TwistedCodeSpec plus_twisted(FieldPtr field, const AdditiveSubgroup& group, EvalPoints alpha, unsigned k, Elem eta) {
  const Field& f = *field;
  if (group.order >= f.q()) throw DomainError("(+)-twisted codes need a proper additive subgroup");
  for (const auto& a : alpha)
    if (!a.is_infinity() && !group.contains(a.value())) throw DomainError("evaluation point outside V + {inf}");
  if (eta == kZero) throw DomainError("eta must be nonzero");
  if (group.contains(f.inv(eta))) throw DomainError("1 / eta lies in V");
  TwistedCodeSpec spec{std::move(field), std::move(alpha), k, 1, k - 1, eta};
  spec.validate();
  return spec;
}

LinearCode roth_lempel_code(const RothLempelSpec& spec) {
  if (!spec.field) throw DomainError("Roth-Lempel spec has no field");
  const Field& f = *spec.field;
  if (spec.k < 2) throw DomainError("Roth-Lempel codes need k >= 2");
  if (spec.points.size() < spec.k + 1) throw DomainError("Roth-Lempel point set too small: need |S| >= k + 1");
  if (spec.points.size() + 1 > f.q() + 2) throw DomainError("Roth-Lempel point set too large");
  if (val(spec.delta) >= f.q()) throw DomainError("delta out of range");
  const LinearCode base = rs_code(spec.field, spec.points, spec.k);
  LinearCode code{spec.field, Matrix(spec.k, spec.n())};
  for (unsigned i = 0; i < spec.k; ++i)
    for (std::size_t j = 0; j < spec.points.size(); ++j) code.generator(i, j) = base.generator(i, j);
  const std::size_t last = spec.points.size();
  code.generator(spec.k - 2, last) = kOne;
  code.generator(spec.k - 1, last) = spec.delta;
  return code;
}

}  // namespace trs
