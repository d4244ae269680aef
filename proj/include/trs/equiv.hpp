#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trs/construct.hpp"

namespace trs {

/// [I | A] after moving the lexicographically first information set to the front.
struct SystematicForm {
  Matrix redundancy;                     // A, k x (n-k)
  std::vector<std::size_t> permutation;  // original column index of each systematic column
};

SystematicForm systematic_form(const LinearCode& code);

/// Generator of the orthogonal complement; [I | A] maps to [-A^T | I].
LinearCode dual(const LinearCode& code);

/// GRS test on an MDS code via the 3x3 minors of the entrywise inverse of A.
bool is_grs(const LinearCode& code);

/// Deterministic identifier of a monomial-equivalence class of MDS codes.
struct CanonicalSignature {
  unsigned n = 0;
  unsigned k = 0;
  unsigned q = 0;
  std::vector<std::uint16_t> digits;  // normalized non-frame columns, sorted

  std::vector<std::uint8_t> bytes() const;
  std::string hex() const;

  friend bool operator==(const CanonicalSignature&, const CanonicalSignature&) = default;
  friend auto operator<=>(const CanonicalSignature&, const CanonicalSignature&) = default;
};

/// Minimum over all ordered projective frames of the normalized column set,
/// computed on the side (code or dual) of smaller dimension. Throws
/// DomainError for non-MDS input.
CanonicalSignature canonical_form(const LinearCode& code);

/// Exhaustive search over coordinate permutations with the column scaling
/// solved as a linear system. Works for any codes; limited to n <= 9.
bool equivalent_bruteforce(const LinearCode& a, const LinearCode& b);

/// Monomial equivalence: signatures for MDS pairs, brute force otherwise.
bool are_equivalent(const LinearCode& a, const LinearCode& b);

/// Applies the isometry c -> (v_1 c_pi(1), ..., v_n c_pi(n)) to every row.
LinearCode apply_monomial(const LinearCode& code, std::span<const std::size_t> perm, std::span<const Elem> scale);

struct ClassCount {
  std::size_t total = 0;
  std::size_t inequivalent = 0;
  std::size_t non_grs = 0;

  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

/// Groups MDS codes of identical (q, n, k) by signature.
ClassCount count_classes(std::span<const LinearCode> codes);

}  // namespace trs
