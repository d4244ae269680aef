#include "trs/equiv.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "trs/mdscheck.hpp"

namespace trs {

SystematicForm systematic_form(const LinearCode& code) {
  const Field& f = *code.field;
  RowEchelon e = rref(f, code.generator);
  if (e.pivots.size() < code.k()) throw DomainError("generator matrix is rank deficient");
  SystematicForm out;
  out.permutation = e.pivots;
  std::vector<bool> pivot(code.n(), false);
  for (std::size_t c : e.pivots) pivot[c] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < code.n(); ++c)
    if (!pivot[c]) rest.push_back(c);
  out.redundancy = select_columns(e.reduced, rest);
  out.permutation.insert(out.permutation.end(), rest.begin(), rest.end());
  return out;
}

LinearCode dual(const LinearCode& code) {
  if (rank(*code.field, code.generator) < code.k()) throw DomainError("generator matrix is rank deficient");
  return {code.field, nullspace(*code.field, code.generator)};
}

bool is_grs(const LinearCode& code) {
  if (!is_mds_minors(code).is_mds) throw DomainError("GRS test requires an MDS code");
  const std::size_t k = code.k(), r = code.n() - code.k();
  if (k < 3 || r < 3) return true;
  const Field& f = *code.field;
  const SystematicForm sf = systematic_form(code);
  Matrix inv_a(k, r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) inv_a(i, j) = f.inv(sf.redundancy(i, j));
  Matrix minor(3, 3);
  for (std::size_t i0 = 0; i0 < k; ++i0)
    for (std::size_t i1 = i0 + 1; i1 < k; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < k; ++i2)
        for (std::size_t j0 = 0; j0 < r; ++j0)
          for (std::size_t j1 = j0 + 1; j1 < r; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < r; ++j2) {
              const std::size_t rows[3] = {i0, i1, i2};
              const std::size_t cols[3] = {j0, j1, j2};
              for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) minor(a, b) = inv_a(rows[a], cols[b]);
              if (determinant(f, minor) != kZero) return false;
            }
  return true;
}

std::vector<std::uint8_t> CanonicalSignature::bytes() const {
  std::vector<std::uint8_t> out;
  auto push16 = [&](unsigned v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
  };
  push16(n);
  push16(k);
  out.push_back(static_cast<std::uint8_t>(q >> 16));
  push16(q & 0xffff);
  for (auto d : digits) push16(d);
  return out;
}

std::string CanonicalSignature::hex() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes()) {
    s.push_back(kHex[b >> 4]);
    s.push_back(kHex[b & 0xf]);
  }
  return s;
}

namespace {

// Per-frame normalized columns packed big-endian into fixed-width words so
// that word-wise lexicographic order equals digit-wise order.
class FramePacker {
 public:
  FramePacker(unsigned q, unsigned digits_per_column) : digits_(digits_per_column) {
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(q - 1)));
    per_word_ = std::max(1u, 64u / bits_);
    words_ = digits_ == 0 ? 1 : (digits_ + per_word_ - 1) / per_word_;
  }
  unsigned words() const { return words_; }

  void pack(const unsigned* digits, std::uint64_t* out) const {
    for (unsigned w = 0; w < words_; ++w) {
      std::uint64_t word = 0;
      for (unsigned i = 0; i < per_word_; ++i) {
        const unsigned idx = w * per_word_ + i;
        word = (word << bits_) | (idx < digits_ ? digits[idx] : 0u);
      }
      out[w] = word;
    }
  }

  void unpack(const std::uint64_t* in, std::vector<std::uint16_t>& out) const {
    for (unsigned w = 0; w < words_; ++w)
      for (unsigned i = 0; i < per_word_; ++i) {
        const unsigned idx = w * per_word_ + i;
        if (idx >= digits_) continue;
        const unsigned shift = bits_ * (per_word_ - 1 - i);
        out.push_back(static_cast<std::uint16_t>((in[w] >> shift) & ((1ull << bits_) - 1)));
      }
  }

 private:
  unsigned digits_;
  unsigned bits_;
  unsigned per_word_;
  unsigned words_;
};

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] != n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

CanonicalSignature canonical_form(const LinearCode& code) {
  const Field& f = *code.field;
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (k == 0 || k >= n) throw DomainError("canonical form needs 1 <= k < n");
  const Matrix gen = (n - k < k) ? dual(code).generator : code.generator;
  const std::size_t d = gen.rows();
  if (rank(f, gen) < d) throw DomainError("canonical form requires an MDS code");

  CanonicalSignature sig{static_cast<unsigned>(n), static_cast<unsigned>(k), f.q(), {}};
  const std::size_t rest = n - d - 1;
  if (rest == 0 || d == 1) {
    // Every frame maps the code to the same normalized matrix.
    for (std::size_t c = 0; c < rest * (d - 1); ++c) sig.digits.push_back(1);
    if (d == 1) {
      for (std::size_t c = 0; c < n; ++c)
        if (gen(0, c) == kZero) throw DomainError("canonical form requires an MDS code");
    }
    return sig;
  }

  const FramePacker packer(f.q(), static_cast<unsigned>(d - 1));
  const unsigned w = packer.words();
  std::vector<std::uint64_t> best, frame(rest * w);
  std::vector<std::size_t> order(rest);
  std::vector<std::uint64_t> sorted(rest * w);
  std::vector<unsigned> digits(d);

  std::vector<std::size_t> basis(d);
  std::iota(basis.begin(), basis.end(), 0);
  std::vector<std::size_t> perm(d);
  Matrix sys(d, n), scaled(d, n);
  std::vector<std::size_t> others;
  do {
    auto inv = inverse(f, select_columns(gen, basis));
    if (!inv) throw DomainError("canonical form requires an MDS code");
    sys = multiply(f, *inv, gen);
    others.clear();
    for (std::size_t c = 0, b = 0; c < n; ++c) {
      if (b < d && basis[b] == c) {
        ++b;
        continue;
      }
      others.push_back(c);
    }
    for (std::size_t c : others)
      for (std::size_t r = 0; r < d; ++r)
        if (sys(r, c) == kZero) throw DomainError("canonical form requires an MDS code");

    for (std::size_t unit : others) {
      for (std::size_t r = 0; r < d; ++r) {
        const Elem s = f.inv(sys(r, unit));
        for (std::size_t c : others) scaled(r, c) = f.mul(sys(r, c), s);
      }
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::size_t slot = 0;
        for (std::size_t c : others) {
          if (c == unit) continue;
          const Elem lead_inv = f.inv(scaled(perm[0], c));
          for (std::size_t r = 1; r < d; ++r) digits[r - 1] = val(f.mul(scaled(perm[r], c), lead_inv));
          packer.pack(digits.data(), frame.data() + slot * w);
          ++slot;
        }
        if (w == 1) {
          std::sort(frame.begin(), frame.end());
          if (best.empty() || frame < best) best = frame;
        } else {
          std::iota(order.begin(), order.end(), 0);
          std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(frame.begin() + a * w, frame.begin() + (a + 1) * w,
                                                frame.begin() + b * w, frame.begin() + (b + 1) * w);
          });
          for (std::size_t i = 0; i < rest; ++i)
            std::copy_n(frame.begin() + order[i] * w, w, sorted.begin() + i * w);
          if (best.empty() || sorted < best) best = sorted;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  } while (next_combination(basis, n));

  for (std::size_t i = 0; i < rest; ++i) packer.unpack(best.data() + i * w, sig.digits);
  return sig;
}

LinearCode apply_monomial(const LinearCode& code, std::span<const std::size_t> perm, std::span<const Elem> scale) {
  if (perm.size() != code.n() || scale.size() != code.n()) throw DomainError("monomial map size mismatch");
  const Field& f = *code.field;
  LinearCode out{code.field, Matrix(code.k(), code.n())};
  for (std::size_t i = 0; i < code.k(); ++i)
    for (std::size_t j = 0; j < code.n(); ++j) {
      if (scale[j] == kZero) throw DomainError("monomial scaling must be nonzero");
      out.generator(i, j) = f.mul(scale[j], code.generator(i, perm[j]));
    }
  return out;
}

bool equivalent_bruteforce(const LinearCode& a, const LinearCode& b) {
  const Field& f = *a.field;
  if (a.n() != b.n() || a.k() != b.k() || f.q() != b.field->q()) return false;
  const std::size_t n = a.n(), k = a.k();
  if (n > 9) throw DomainError("brute-force equivalence is limited to n <= 9");
  const Matrix parity = nullspace(f, b.generator);  // rows span the dual of b
  const std::size_t r = parity.rows();
  if (r == 0) return true;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix system(k * r, n);
  do {
    // Unknown v: sum_j a[i][perm j] v_j parity[l][j] = 0 for all i, l.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < r; ++l)
        for (std::size_t j = 0; j < n; ++j) system(i * r + l, j) = f.mul(a.generator(i, perm[j]), parity(l, j));
    const Matrix sol = nullspace(f, system);
    const std::size_t dim = sol.rows();
    if (dim == 0) continue;
    unsigned long long combos = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      combos *= f.q();
      if (combos > 50'000'000ull) throw DomainError("brute-force equivalence: scaling space too large");
    }
    std::vector<Elem> v(n);
    for (unsigned long long code = 1; code < combos; ++code) {
      std::fill(v.begin(), v.end(), kZero);
      unsigned long long c = code;
      for (std::size_t i = 0; i < dim; ++i) {
        const Elem coef = elem(static_cast<unsigned>(c % f.q()));
        c /= f.q();
        if (coef == kZero) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coef, sol(i, j)));
      }
      if (std::none_of(v.begin(), v.end(), [](Elem x) { return x == kZero; })) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.field->q() != b.field->q()) return false;
  const bool mds_a = is_mds_minors(a).is_mds;
  const bool mds_b = is_mds_minors(b).is_mds;
  if (mds_a != mds_b) return false;
  if (mds_a) return canonical_form(a) == canonical_form(b);
  return equivalent_bruteforce(a, b);
}

ClassCount count_classes(std::span<const LinearCode> codes) {
  ClassCount out;
  if (codes.empty()) return out;
  const std::size_t n = codes[0].n(), k = codes[0].k();
  const unsigned q = codes[0].field->q();
  std::map<CanonicalSignature, std::size_t> reps;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& c = codes[i];
    if (c.n() != n || c.k() != k || c.field->q() != q) throw DomainError("count_classes: mixed code parameters");
    reps.try_emplace(canonical_form(c), i);
  }
  out.total = codes.size();
  out.inequivalent = reps.size();
  for (const auto& [sig, idx] : reps)
    if (!is_grs(codes[idx])) ++out.non_grs;
  return out;
}

}  // namespace trs
