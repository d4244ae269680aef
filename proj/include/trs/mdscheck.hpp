#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "trs/construct.hpp"

namespace trs {

/// Monic locator prod_{i in subset} (x - alpha_i); coefficients[j] = sigma_j.
struct LocatorPolynomial {
  std::vector<std::size_t> subset;
  Poly coefficients;
};

/// A k-subset on which a nonzero codeword vanishes. For twisted criteria the
/// offending polynomial is g * prod_{finite i in subset}(x - alpha_i). For the
/// minor test on a bare generator matrix, g holds the message vector instead.
struct MdsWitness {
  std::vector<std::size_t> subset;
  Poly g;
};

struct MdsVerdict {
  bool is_mds = true;
  std::optional<MdsWitness> witness;
};

/// Calls visit(subset, sigma) for every k-subset of `points` in lexicographic
/// order, building sigma incrementally along the subset prefix. Stops early
/// when visit returns true; returns whether it stopped early.
bool scan_locators(const Field& f, std::span<const Elem> points, unsigned k,
                   const std::function<bool(std::span<const std::size_t>, std::span<const Elem>)>& visit);

/// Value s such that A_I is singular exactly when 1/eta == s, obtained by
/// eliminating the unit lower-triangular body of A_I. `sigma` has k+1 entries.
Elem singular_inverse_eta(const Field& f, std::span<const Elem> sigma, unsigned t, unsigned h);

/// Kernel vector of A_I written as the polynomial g = sum g_j x^j, with
/// g_{t-1} = 1.
Poly kernel_polynomial(const Field& f, std::span<const Elem> sigma, unsigned t);

/// Ground truth: every k x k minor of the generator is nonzero.
MdsVerdict is_mds_minors(const LinearCode& code);

/// (t,h) = (1,0) criterion: eta (-1)^k prod alpha_i != 1 on all k-subsets.
MdsVerdict is_mds_condition_star(const Field& f, std::span<const EvalPoint> alpha, unsigned k, Elem eta);

/// (t,h) = (1,k-1) criterion: eta sum alpha_i != -1 on all finite k-subsets.
MdsVerdict is_mds_condition_plus(const Field& f, std::span<const EvalPoint> alpha, unsigned k, Elem eta);

struct GeneralCriterionOptions {
  /// Accept infinity with h != k-1 by deferring to the minor test.
  bool allow_inf_any_hook = false;
};

MdsVerdict is_mds_general(const TwistedCodeSpec& spec, GeneralCriterionOptions options = {});

/// g * prod (x - alpha_i) over the finite witness points.
Poly witness_polynomial(const TwistedCodeSpec& spec, const MdsWitness& witness);

struct TwistPair {
  unsigned t = 1;
  unsigned h = 0;
  friend bool operator==(const TwistPair&, const TwistPair&) = default;
};

/// For each pair, mask[v] == 1 iff eta = v gives an MDS twisted code at alpha
/// (mask[0] is always 0). Infinity is supported for every hook: with h < k-1 an
/// extra eta-independent condition applies, namely that no (k-1)-subset of
/// the finite points has vanishing x^h locator coefficient.
std::vector<std::vector<std::uint8_t>> mds_eta_masks(const Field& f, std::span<const EvalPoint> alpha, unsigned k,
                                                     std::span<const TwistPair> pairs);

enum class GroupKind { Additive, Multiplicative };

/// Every group element is a sum (or product) of k distinct members of S.
/// Infinity is stripped first; for the multiplicative group zero is ignored.
bool is_k_sum_generator(const Field& f, std::span<const EvalPoint> set, unsigned k, GroupKind kind);

enum class GroupStructure { Cyclic, ElementaryAbelian2, Z4TimesElementary2, Other };

struct GroupDescriptor {
  GroupStructure structure = GroupStructure::Other;
  unsigned order = 0;
};

GroupDescriptor describe_group(const Field& f, GroupKind kind);

/// M(k, A) for |A| = 2r, r >= 6, 3 <= k <= r-2; nullopt outside that range.
std::optional<unsigned> m_bound(const GroupDescriptor& group, unsigned k);

}  // namespace trs
