#include "trs/mdscheck.hpp"

#include <algorithm>
#include <numeric>

namespace trs {

namespace {

// Depth-first k-subset walk keeping one locator per prefix length.
class LocatorWalk {
 public:
  LocatorWalk(const Field& f, std::span<const Elem> points, unsigned k,
              const std::function<bool(std::span<const std::size_t>, std::span<const Elem>)>& visit)
      : f_(f), points_(points), k_(k), visit_(visit), subset_(k), sigma_(k + 1, Poly(k + 1, kZero)) {
    sigma_[0][0] = kOne;
  }

  bool run() {
    if (k_ > points_.size()) return false;
    return descend(0, 0);
  }

 private:
  bool descend(std::size_t depth, std::size_t start) {
    if (depth == k_) return visit_(subset_, sigma_[k_]);
    const std::size_t last = points_.size() - (k_ - depth);
    for (std::size_t i = start; i <= last; ++i) {
      subset_[depth] = i;
      // sigma_{d+1} = sigma_d * (x - a)
      const Poly& cur = sigma_[depth];
      Poly& next = sigma_[depth + 1];
      const Elem na = f_.neg(points_[i]);
      next[0] = f_.mul(cur[0], na);
      for (std::size_t j = 1; j <= depth + 1; ++j) next[j] = f_.add(cur[j - 1], f_.mul(cur[j], na));
      for (std::size_t j = depth + 2; j <= k_; ++j) next[j] = kZero;
      if (descend(depth + 1, i + 1)) return true;
    }
    return false;
  }

  const Field& f_;
  std::span<const Elem> points_;
  unsigned k_;
  const std::function<bool(std::span<const std::size_t>, std::span<const Elem>)>& visit_;
  std::vector<std::size_t> subset_;
  std::vector<Poly> sigma_;
};

// Series 1/rev(sigma): c_0 = 1, c_i = -sum_{j=1..min(i,k)} sigma_{k-j} c_{i-j}.
void reverse_series(const Field& f, std::span<const Elem> sigma, unsigned len, std::vector<Elem>& c) {
  const std::size_t k = sigma.size() - 1;
  c.assign(len, kZero);
  if (len == 0) return;
  c[0] = kOne;
  for (unsigned i = 1; i < len; ++i) {
    Elem acc = kZero;
    for (std::size_t j = 1; j <= std::min<std::size_t>(i, k); ++j) acc = f.add(acc, f.mul(sigma[k - j], c[i - j]));
    c[i] = f.neg(acc);
  }
}

// s(t,h) = sum_{l=0}^{min(t-1,h)} c_{t-1-l} sigma_{h-l}
Elem pivot_from_series(const Field& f, std::span<const Elem> sigma, std::span<const Elem> c, unsigned t, unsigned h) {
  Elem acc = kZero;
  const unsigned top = std::min(t - 1, h);
  for (unsigned l = 0; l <= top; ++l) acc = f.add(acc, f.mul(c[t - 1 - l], sigma[h - l]));
  return acc;
}

std::vector<std::size_t> finite_indices(std::span<const EvalPoint> alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!alpha[i].is_infinity()) out.push_back(i);
  return out;
}

MdsWitness make_witness(std::span<const std::size_t> local, std::span<const std::size_t> to_alpha, Poly g) {
  MdsWitness w;
  for (std::size_t i : local) w.subset.push_back(to_alpha[i]);
  w.g = std::move(g);
  return w;
}

}  // namespace

bool scan_locators(const Field& f, std::span<const Elem> points, unsigned k,
                   const std::function<bool(std::span<const std::size_t>, std::span<const Elem>)>& visit) {
  LocatorWalk walk(f, points, k, visit);
  return walk.run();
}

Elem singular_inverse_eta(const Field& f, std::span<const Elem> sigma, unsigned t, unsigned h) {
  std::vector<Elem> c;
  reverse_series(f, sigma, t, c);
  return pivot_from_series(f, sigma, c, t, h);
}

Poly kernel_polynomial(const Field& f, std::span<const Elem> sigma, unsigned t) {
  std::vector<Elem> c;
  reverse_series(f, sigma, t, c);
  Poly g(t);
  for (unsigned l = 0; l < t; ++l) g[l] = c[t - 1 - l];
  return g;
}

MdsVerdict is_mds_minors(const LinearCode& code) {
  const Field& f = *code.field;
  const std::size_t n = code.n(), k = code.k();
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    Matrix sub = select_columns(code.generator, cols);
    if (determinant(f, sub) == kZero) {
      Matrix left = nullspace(f, transpose(sub));
      MdsWitness w;
      w.subset = cols;
      w.g.assign(left.row(0).begin(), left.row(0).end());
      return {false, std::move(w)};
    }
    std::size_t i = k;
    while (i-- > 0 && cols[i] == n - k + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++cols[i];
    for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return {};
}

MdsVerdict is_mds_condition_star(const Field& f, std::span<const EvalPoint> alpha, unsigned k, Elem eta) {
  if (contains_infinity(alpha)) throw DomainError("the (1,0) product criterion does not support infinity");
  if (eta == kZero) throw DomainError("eta must be nonzero");
  const auto values = finite_values(alpha);
  const auto index = finite_indices(alpha);
  Elem target = f.inv(eta);  // need (-1)^k prod != 1/eta
  if (k % 2 == 1) target = f.neg(target);
  std::optional<MdsWitness> witness;
  scan_locators(f, values, k, [&](std::span<const std::size_t> subset, std::span<const Elem>) {
    Elem prod = kOne;
    for (std::size_t i : subset) prod = f.mul(prod, values[i]);
    if (prod != target) return false;
    witness = make_witness(subset, index, Poly{kOne});
    return true;
  });
  if (witness) return {false, std::move(witness)};
  return {};
}

MdsVerdict is_mds_condition_plus(const Field& f, std::span<const EvalPoint> alpha, unsigned k, Elem eta) {
  if (eta == kZero) throw DomainError("eta must be nonzero");
  const auto values = finite_values(alpha);
  const auto index = finite_indices(alpha);
  const Elem target = f.neg(f.inv(eta));  // need sum != -1/eta
  std::optional<MdsWitness> witness;
  scan_locators(f, values, k, [&](std::span<const std::size_t> subset, std::span<const Elem>) {
    Elem sum = kZero;
    for (std::size_t i : subset) sum = f.add(sum, values[i]);
    if (sum != target) return false;
    witness = make_witness(subset, index, Poly{kOne});
    return true;
  });
  if (witness) return {false, std::move(witness)};
  return {};
}

MdsVerdict is_mds_general(const TwistedCodeSpec& spec, GeneralCriterionOptions options) {
  spec.validate();
  const Field& f = *spec.field;
  if (contains_infinity(spec.alpha) && spec.h != spec.k - 1) {
    if (!options.allow_inf_any_hook)
      throw DomainError("infinity as evaluation point is only supported for h = k-1 (use --allow-inf-any-hook)");
    MdsVerdict v = is_mds_minors(twisted_code(spec));
    if (!v.is_mds) {
      // Re-express the offending codeword as g * sigma over its finite points.
      const Poly full = twisted_polynomial(spec, v.witness->g);
      std::vector<Elem> roots;
      for (std::size_t i : v.witness->subset)
        if (!spec.alpha[i].is_infinity()) roots.push_back(spec.alpha[i].value());
      v.witness->g = poly::divmod(f, full, poly::from_roots(f, roots)).first;
    }
    return v;
  }
  const auto values = finite_values(spec.alpha);
  const auto index = finite_indices(spec.alpha);
  const Elem inv_eta = f.inv(spec.eta);
  std::vector<Elem> series;
  std::optional<MdsWitness> witness;
  scan_locators(f, values, spec.k, [&](std::span<const std::size_t> subset, std::span<const Elem> sigma) {
    reverse_series(f, sigma, spec.t, series);
    if (pivot_from_series(f, sigma, series, spec.t, spec.h) != inv_eta) return false;
    witness = make_witness(subset, index, kernel_polynomial(f, sigma, spec.t));
    return true;
  });
  if (witness) return {false, std::move(witness)};
  return {};
}

Poly witness_polynomial(const TwistedCodeSpec& spec, const MdsWitness& witness) {
  const Field& f = *spec.field;
  std::vector<Elem> roots;
  for (std::size_t i : witness.subset)
    if (!spec.alpha[i].is_infinity()) roots.push_back(spec.alpha[i].value());
  return poly::mul(f, witness.g, poly::from_roots(f, roots));
}

std::vector<std::vector<std::uint8_t>> mds_eta_masks(const Field& f, std::span<const EvalPoint> alpha, unsigned k,
                                                     std::span<const TwistPair> pairs) {
  const unsigned q = f.q();
  const auto values = finite_values(alpha);
  const bool has_inf = values.size() != alpha.size();
  std::vector<std::vector<std::uint8_t>> bad_inverse(pairs.size(), std::vector<std::uint8_t>(q, 0));
  std::vector<std::uint8_t> all_bad(pairs.size(), 0);

  unsigned max_t = 1;
  for (const auto& pr : pairs) max_t = std::max(max_t, pr.t);

  if (has_inf) {
    // With f(inf) = eta a_h = 0 the twist vanishes; a degree k-1 polynomial
    // through k-1 finite points must then miss its x^h coefficient.
    std::vector<std::uint8_t> hook_dead(k, 0);
    bool any_low_hook = false;
    for (const auto& pr : pairs) any_low_hook |= pr.h + 1 < k;
    if (any_low_hook && k >= 2) {
      scan_locators(f, values, k - 1, [&](std::span<const std::size_t>, std::span<const Elem> sigma) {
        for (unsigned h = 0; h + 1 < k; ++h)
          if (sigma[h] == kZero) hook_dead[h] = 1;
        return false;
      });
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p].h + 1 < k && hook_dead[pairs[p].h]) all_bad[p] = 1;
  }

  std::vector<Elem> series;
  scan_locators(f, values, k, [&](std::span<const std::size_t>, std::span<const Elem> sigma) {
    reverse_series(f, sigma, max_t, series);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const Elem s = pivot_from_series(f, sigma, series, pairs[p].t, pairs[p].h);
      bad_inverse[p][val(s)] = 1;
    }
    return false;
  });

  std::vector<std::vector<std::uint8_t>> masks(pairs.size(), std::vector<std::uint8_t>(q, 0));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (all_bad[p]) continue;
    for (unsigned v = 1; v < q; ++v) masks[p][v] = bad_inverse[p][val(f.inv(elem(v)))] ? 0 : 1;
  }
  return masks;
}

bool is_k_sum_generator(const Field& f, std::span<const EvalPoint> set, unsigned k, GroupKind kind) {
  std::vector<Elem> members;
  for (const auto& a : set) {
    if (a.is_infinity()) continue;
    if (kind == GroupKind::Multiplicative && a.value() == kZero) continue;
    members.push_back(a.value());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (k > members.size()) throw DomainError("k exceeds the size of the set");
  if (k == 0) return false;

  // reach[c][g]: g is a c-fold distinct sum (product) of the members seen so far.
  // Multiplicative elements are indexed by discrete log.
  const unsigned q = f.q();
  const unsigned size = kind == GroupKind::Additive ? q : q - 1;
  std::vector<std::vector<std::uint8_t>> reach(k + 1, std::vector<std::uint8_t>(size, 0));
  reach[0][0] = 1;  // additive 0, or log 1 = 0
  for (Elem s : members) {
    const unsigned shift = kind == GroupKind::Additive ? 0 : f.log(s);
    for (unsigned c = std::min<unsigned>(k, static_cast<unsigned>(members.size())); c >= 1; --c) {
      const auto& prev = reach[c - 1];
      auto& cur = reach[c];
      for (unsigned g = 0; g < size; ++g) {
        if (!prev[g]) continue;
        const unsigned target = kind == GroupKind::Additive ? val(f.add(elem(g), s)) : (g + shift) % size;
        cur[target] = 1;
      }
    }
  }
  return std::all_of(reach[k].begin(), reach[k].end(), [](std::uint8_t b) { return b != 0; });
}

GroupDescriptor describe_group(const Field& f, GroupKind kind) {
  if (kind == GroupKind::Multiplicative) return {GroupStructure::Cyclic, f.q() - 1};
  if (f.m() == 1) return {GroupStructure::Cyclic, f.q()};
  if (f.p() == 2) return {GroupStructure::ElementaryAbelian2, f.q()};
  return {GroupStructure::Other, f.q()};
}

std::optional<unsigned> m_bound(const GroupDescriptor& group, unsigned k) {
  if (group.order % 2 != 0) return std::nullopt;
  const unsigned r = group.order / 2;
  if (r < 6 || k < 3 || k + 2 > r) return std::nullopt;
  const bool exceptional_group = group.structure == GroupStructure::ElementaryAbelian2 ||
                                 group.structure == GroupStructure::Z4TimesElementary2;
  if (exceptional_group && (k == 3 || k == r - 2)) return r + 1;
  return r;
}

}  // namespace trs
