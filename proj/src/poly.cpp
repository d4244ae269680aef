#include "trs/poly.hpp"

#include <algorithm>

namespace trs::poly {

Poly trimmed(Poly a) {
  while (!a.empty() && a.back() == kZero) a.pop_back();
  return a;
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != kZero) return static_cast<int>(i);
  return -1;
}

Elem coeff(const Poly& a, std::size_t i) { return i < a.size() ? a[i] : kZero; }

Elem eval(const Field& f, const Poly& a, Elem x) {
  Elem acc = kZero;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(coeff(a, i), coeff(b, i));
  return trimmed(std::move(out));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(coeff(a, i), coeff(b, i));
  return trimmed(std::move(out));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == kZero) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return trimmed(std::move(out));
}

Poly scale(const Field& f, const Poly& a, Elem s) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], s);
  return trimmed(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw DomainError("polynomial division by zero");
  Poly r = trimmed(a);
  const int da = degree(r);
  if (da < db) return {{}, r};
  Poly qt(static_cast<std::size_t>(da - db + 1), kZero);
  const Elem lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (int i = da; i >= db; --i) {
    const Elem c = f.mul(coeff(r, static_cast<std::size_t>(i)), lead_inv);
    if (c == kZero) continue;
    const std::size_t shift = static_cast<std::size_t>(i - db);
    qt[shift] = c;
    for (int j = 0; j <= db; ++j) {
      const std::size_t idx = shift + static_cast<std::size_t>(j);
      r[idx] = f.sub(r[idx], f.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  return {trimmed(std::move(qt)), trimmed(std::move(r))};
}

Poly from_roots(const Field& f, std::span<const Elem> roots) {
  Poly out{kOne};
  for (Elem r : roots) {
    Poly next(out.size() + 1, kZero);
    const Elem nr = f.neg(r);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], out[i]);
      next[i] = f.add(next[i], f.mul(out[i], nr));
    }
    out = std::move(next);
  }
  return out;
}

Poly interpolate(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation size mismatch");
  const Poly full = from_roots(f, xs);
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == kZero) continue;
    // full / (x - xs[i]) by synthetic division
    Poly basis(xs.size(), kZero);
    Elem carry = kZero;
    for (std::size_t j = full.size() - 1; j-- > 0;) {
      carry = f.add(full[j + 1], f.mul(carry, xs[i]));
      basis[j] = carry;
    }
    const Elem denom = eval(f, basis, xs[i]);
    out = add(f, out, scale(f, basis, f.div(ys[i], denom)));
  }
  return out;
}

}  // namespace trs::poly
