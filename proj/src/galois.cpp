#include "trs/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace trs {

namespace {

constexpr unsigned kMaxOrder = 1u << 16;
constexpr unsigned kAddTableLimit = 1024;

using Digits = std::vector<unsigned>;

// Remainder of a by the monic polynomial mod over GF(p); digits little-endian.
Digits poly_mod(Digits a, const Digits& mod, unsigned p) {
  const std::size_t dm = mod.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * mod[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Digits& divisor, const Digits& a, unsigned p) {
  Digits r = poly_mod(a, divisor, p);
  return std::all_of(r.begin(), r.end(), [](unsigned d) { return d == 0; });
}

// Monic polynomial of degree d whose lower digits encode `code` in base p.
Digits monic_from_code(unsigned long long code, unsigned d, unsigned p) {
  Digits out(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    out[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  out[d] = 1;
  return out;
}

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

bool is_irreducible(const Digits& poly, unsigned p) {
  const unsigned m = static_cast<unsigned>(poly.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    const unsigned long long count = ipow(p, d);
    for (unsigned long long code = 0; code < count; ++code) {
      if (divides(monic_from_code(code, d, p), poly, p)) return false;
    }
  }
  return true;
}

Digits to_digits(unsigned v, unsigned p, unsigned m) {
  Digits d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

unsigned from_digit_vector(const Digits& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

unsigned slow_mul(unsigned a, unsigned b, const Digits& mod, unsigned p, unsigned m) {
  const Digits da = to_digits(a, p, m);
  const Digits db = to_digits(b, p, m);
  Digits prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  Digits r = poly_mod(prod, mod, p);
  r.resize(m, 0);
  return from_digit_vector(r, p);
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds 2^16");
  }

  Digits mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1) throw DomainError("modulus must have m+1 digits");
    if (mod.back() != 1) throw DomainError("modulus must be monic");
    for (unsigned d : mod)
      if (d >= p) throw DomainError("modulus digit out of range");
    if (!is_irreducible(mod, p)) throw DomainError("modulus is reducible");
  } else {
    const unsigned long long count = ipow(p, m);
    bool found = false;
    for (unsigned long long code = 0; code < count && !found; ++code) {
      Digits cand = monic_from_code(code, m, p);
      if (is_irreducible(cand, p)) {
        mod = std::move(cand);
        found = true;
      }
    }
    if (!found) throw DomainError("no irreducible polynomial found");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<unsigned>(q);
  f->modulus_ = mod;
  const unsigned qq = f->q_;

  // Smallest primitive element by label.
  unsigned gen = 0;
  for (unsigned g = 1; g < qq && gen == 0; ++g) {
    unsigned x = g;
    unsigned order = 1;
    while (x != 1) {
      x = slow_mul(x, g, mod, p, m);
      ++order;
    }
    if (order == qq - 1) gen = g;
  }
  if (qq == 2) gen = 1;

  f->exp_.resize(2 * (qq - 1));
  f->log_.assign(qq, 0);
  unsigned x = 1;
  for (unsigned e = 0; e < qq - 1; ++e) {
    f->exp_[e] = elem(x);
    f->exp_[e + qq - 1] = elem(x);
    f->log_[x] = e;
    x = slow_mul(x, gen, mod, p, m);
  }

  f->neg_.resize(qq);
  for (unsigned v = 0; v < qq; ++v) {
    Digits d = to_digits(v, p, m);
    for (auto& di : d) di = (p - di) % p;
    f->neg_[v] = elem(from_digit_vector(d, p));
  }
  f->inv_.assign(qq, kZero);
  for (unsigned v = 1; v < qq; ++v) f->inv_[v] = f->exp_[(qq - 1 - f->log_[v]) % (qq - 1)];

  if (qq <= kAddTableLimit) {
    f->add_table_.resize(static_cast<std::size_t>(qq) * qq);
    for (unsigned a = 0; a < qq; ++a)
      for (unsigned b = 0; b < qq; ++b) f->add_table_[a * qq + b] = f->add_digits(elem(a), elem(b), false);
  }
  return f;
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
  unsigned x = val(a), y = val(b);
  if (m_ == 1) return elem(subtract ? (x + p_ - y) % p_ : (x + y) % p_);
  unsigned out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const unsigned dx = x % p_, dy = y % p_;
    x /= p_;
    y /= p_;
    out += scale * (subtract ? (dx + p_ - dy) % p_ : (dx + dy) % p_);
    scale *= p_;
  }
  return elem(out);
}

Elem Field::inv(Elem a) const {
  if (a == kZero) throw DomainError("division by zero");
  return inv_[val(a)];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == kZero) {
    if (e == 0) return kOne;
    if (e < 0) throw DomainError("division by zero");
    return kZero;
  }
  const long long ord = q_ - 1;
  long long r = (static_cast<long long>(log_[val(a)]) * (e % ord)) % ord;
  if (r < 0) r += ord;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::from_int(long long v) const {
  if (v < 0 || v >= static_cast<long long>(q_))
    throw DomainError("element label " + std::to_string(v) + " out of range for q=" + std::to_string(q_));
  return elem(static_cast<unsigned>(v));
}

Elem Field::from_integer_mod_p(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return elem(static_cast<unsigned>(r));
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (unsigned v = 0; v < q_; ++v) out[v] = elem(v);
  return out;
}

std::vector<unsigned> Field::digits(Elem a) const { return to_digits(val(a), p_, m_); }

Elem Field::from_digits(const std::vector<unsigned>& d) const {
  if (d.size() != m_) throw DomainError("digit vector length must equal m");
  for (unsigned x : d)
    if (x >= p_) throw DomainError("digit out of range");
  return elem(from_digit_vector(d, p_));
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") = GF(" << p_ << ")[x]/(";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (modulus_[i] != 1 || i == 0) os << modulus_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

bool MultiplicativeSubgroup::contains(Elem a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

bool AdditiveSubgroup::contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }

std::vector<MultiplicativeSubgroup> multiplicative_subgroups(const Field& f) {
  const unsigned n = f.q() - 1;
  std::vector<MultiplicativeSubgroup> out;
  for (unsigned d : divisors(n)) {
    MultiplicativeSubgroup g;
    g.order = d;
    const unsigned step = n / d;
    for (unsigned i = 0; i < d; ++i) g.elements.push_back(f.exp(i * step));
    std::sort(g.elements.begin(), g.elements.end());
    out.push_back(std::move(g));
  }
  return out;
}

unsigned long long gaussian_binomial(unsigned m, unsigned j, unsigned p) {
  if (j > m) return 0;
  unsigned long long num = 1, den = 1;
  for (unsigned i = 0; i < j; ++i) {
    num *= ipow(p, m - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

namespace {

// Elements spanned by the rows of a basis, sorted.
std::vector<Elem> span(const Field& f, const std::vector<Elem>& basis) {
  std::vector<Elem> out{kZero};
  for (Elem b : basis) {
    const std::size_t sz = out.size();
    Elem mult = kZero;
    for (unsigned c = 1; c < f.p(); ++c) {
      mult = f.add(mult, b);
      for (std::size_t i = 0; i < sz; ++i) out.push_back(f.add(out[i], mult));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<AdditiveSubgroup> additive_subgroups(const Field& f, unsigned order) {
  const unsigned p = f.p(), m = f.m();
  unsigned j = 0;
  unsigned long long pw = 1;
  while (pw < order) {
    pw *= p;
    ++j;
  }
  if (pw != order) throw DomainError("subgroup order must be a power of the characteristic");
  if (j >= m) throw DomainError("subgroup order must be proper");

  // Each j-dim subspace of GF(p)^m has a unique reduced row echelon basis;
  // enumerate pivot sets, then the free entries.
  std::vector<AdditiveSubgroup> out;
  std::vector<unsigned> pivots(j);
  std::iota(pivots.begin(), pivots.end(), 0u);
  while (true) {
    // Free positions: row r, column c > pivots[r], c not a pivot.
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < j; ++r)
      for (unsigned c = pivots[r] + 1; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    const unsigned long long combos = ipow(p, static_cast<unsigned>(free.size()));
    for (unsigned long long code = 0; code < combos; ++code) {
      std::vector<Digits> rows(j, Digits(m, 0));
      for (unsigned r = 0; r < j; ++r) rows[r][pivots[r]] = 1;
      unsigned long long c = code;
      for (auto [r, col] : free) {
        rows[r][col] = static_cast<unsigned>(c % p);
        c /= p;
      }
      AdditiveSubgroup g;
      g.order = order;
      for (auto& row : rows) g.basis.push_back(f.from_digits(row));
      g.elements = span(f, g.basis);
      out.push_back(std::move(g));
    }
    // Next pivot combination.
    int i = static_cast<int>(j) - 1;
    while (i >= 0 && pivots[i] == m - j + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (unsigned r = i + 1; r < j; ++r) pivots[r] = pivots[r - 1] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const AdditiveSubgroup& a, const AdditiveSubgroup& b) { return a.elements < b.elements; });
  return out;
}

std::vector<AdditiveSubgroup> subfields(const Field& f) {
  std::vector<AdditiveSubgroup> out;
  for (unsigned d : divisors(f.m())) {
    if (d == f.m()) continue;
    const long long frob = static_cast<long long>(ipow(f.p(), d));
    AdditiveSubgroup s;
    for (Elem a : f.elements())
      if (f.pow(a, frob) == a) s.elements.push_back(a);
    s.order = static_cast<unsigned>(s.elements.size());
    s.is_subfield = true;
    std::vector<Elem> basis;
    std::vector<Elem> spanned{kZero};
    for (Elem a : s.elements) {
      if (std::binary_search(spanned.begin(), spanned.end(), a)) continue;
      basis.push_back(a);
      spanned = span(f, basis);
    }
    s.basis = std::move(basis);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace trs
