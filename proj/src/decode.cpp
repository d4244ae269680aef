#include "trs/decode.hpp"

#include <algorithm>
#include <map>

namespace trs {

namespace {

// Gao's key-equation decoder for RS codes on finite points; radius
// floor((N-K)/2). Returns the message polynomial or nothing.
std::optional<Poly> gao_decode(const Field& f, std::span<const Elem> xs, unsigned k, std::span<const Elem> ys) {
  const std::size_t n = xs.size();
  if (k > n) return std::nullopt;
  if (k == 0) {
    // Only the zero codeword; decodable if within radius n/2.
    const auto nonzero = static_cast<std::size_t>(std::count_if(ys.begin(), ys.end(), [](Elem y) { return y != kZero; }));
    if (2 * nonzero <= n) return Poly{};
    return std::nullopt;
  }
  Poly r0 = poly::from_roots(f, xs);
  Poly r1 = poly::interpolate(f, xs, ys);
  Poly v0{}, v1{kOne};
  const int stop = static_cast<int>((n + k) / 2);  // deg r < (n+k)/2
  while (poly::degree(r1) >= stop) {
    auto [qt, rem] = poly::divmod(f, r0, r1);
    Poly v2 = poly::sub(f, v0, poly::mul(f, qt, v1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (poly::degree(v1) < 0) return std::nullopt;
  auto [msg, rem] = poly::divmod(f, r1, v1);
  if (poly::degree(rem) >= 0) return std::nullopt;
  if (poly::degree(msg) >= static_cast<int>(k)) return std::nullopt;
  return msg;
}

Poly shifted_monomial(unsigned deg, Elem c) {
  Poly p(deg + 1, kZero);
  p[deg] = c;
  return p;
}

}  // namespace

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw DomainError("length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::optional<RsDecoding> rs_decode(const Field& f, std::span<const EvalPoint> alpha, unsigned k,
                                    std::span<const Elem> received, unsigned tau) {
  const std::size_t n = alpha.size();
  if (received.size() != n) throw DomainError("received word length must equal n");
  if (k < 1 || k >= n) throw DomainError("need 1 <= k < n");
  if (2 * tau > n - k) throw DomainError("tau exceeds floor((n-k)/2)");
  require_distinct(alpha);

  std::vector<Elem> xs, ys;
  std::size_t inf_pos = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].is_infinity()) {
      inf_pos = i;
      continue;
    }
    xs.push_back(alpha[i].value());
    ys.push_back(received[i]);
  }

  std::vector<Poly> found;
  if (inf_pos == n) {
    if (auto m = gao_decode(f, xs, k, ys)) found.push_back(*m);
  } else {
    // Infinity trusted: the x^(k-1) coefficient is known.
    const Elem top = received[inf_pos];
    std::vector<Elem> stripped(ys);
    for (std::size_t i = 0; i < xs.size(); ++i) stripped[i] = f.sub(ys[i], f.mul(top, f.pow(xs[i], k - 1)));
    if (auto m = gao_decode(f, xs, k - 1, stripped)) found.push_back(poly::add(f, *m, shifted_monomial(k - 1, top)));
    // Infinity in error.
    if (auto m = gao_decode(f, xs, k, ys)) found.push_back(*m);
  }

  std::optional<RsDecoding> best;
  for (auto& m : found) {
    auto cw = evaluate(f, m, alpha, k - 1);
    const std::size_t d = hamming_distance(cw, received);
    if (d > tau) continue;
    if (!best || d < best->distance) best = RsDecoding{std::move(cw), m, d};
  }
  return best;
}

std::vector<Elem> encode(const TwistedCodeSpec& spec, std::span<const Elem> message) {
  spec.validate();
  return evaluate(*spec.field, twisted_polynomial(spec, message), spec.alpha, spec.top_degree());
}

DecodeResult twisted_decode(const TwistedCodeSpec& spec, std::span<const Elem> received, unsigned tau) {
  spec.validate();
  const Field& f = *spec.field;
  const std::size_t n = spec.n();
  const unsigned k = spec.k;
  if (received.size() != n) throw DomainError("received word length must equal n");
  if (2 * tau > n - k) throw DomainError("tau exceeds floor((n-k)/2)");
  const unsigned ell = spec.top_degree();

  std::size_t inf_pos = n;
  EvalPoints finite;
  std::vector<Elem> xs;
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.alpha[i].is_infinity()) {
      inf_pos = i;
    } else {
      finite.push_back(spec.alpha[i]);
      xs.push_back(spec.alpha[i].value());
    }
  }
  const bool has_inf = inf_pos != n;
  // Decoder radius for every inner call; candidates are filtered by tau afterwards.
  auto radius = [](std::size_t len, unsigned dim) { return static_cast<unsigned>((len - dim) / 2); };

  DecodeResult result;
  std::map<std::vector<Elem>, DecodeCandidate> unique;

  auto accept = [&](const Poly& low, Elem guess) {
    // low: a_0..a_{k-1} with a_h == guess
    if (poly::coeff(low, spec.h) != guess) return;
    std::vector<Elem> msg(k, kZero);
    for (unsigned i = 0; i < k; ++i) msg[i] = poly::coeff(low, i);
    auto cw = encode(spec, msg);
    const std::size_t d = hamming_distance(cw, received);
    if (d > tau) return;
    DecodeCandidate cand{cw, msg, guess, d};
    auto it = unique.find(cw);
    if (it == unique.end() || val(guess) < val(it->second.guess)) unique[cw] = std::move(cand);
  };

  for (unsigned gv = 0; gv < f.q(); ++gv) {
    const Elem g = elem(gv);
    ++result.hook_guesses;
    const Elem twist = f.mul(spec.eta, g);
    std::vector<Elem> w;  // finite coordinates with the twist removed
    for (std::size_t i = 0; i < xs.size(); ++i) w.push_back(f.sub(received[i < inf_pos ? i : i + 1], f.mul(twist, f.pow(xs[i], ell))));

    if (!has_inf) {
      ++result.rs_calls;
      if (auto dec = rs_decode(f, finite, k, w, radius(n, k))) accept(dec->message, g);
      continue;
    }
    const Elem r_inf = received[inf_pos];
    if (spec.h == k - 1) {
      // The infinity coordinate eta*a_{k-1} becomes the RS infinity value a_{k-1}.
      EvalPoints pts = finite;
      pts.push_back(EvalPoint::infinity());
      std::vector<Elem> word = w;
      word.push_back(f.div(r_inf, spec.eta));
      ++result.rs_calls;
      if (auto dec = rs_decode(f, pts, k, word, radius(n, k))) accept(dec->message, g);
      continue;
    }
    if (r_inf != twist) {
      // Infinity disagrees with this guess, so it carries an error.
      ++result.rs_calls;
      if (xs.size() > k)
        if (auto dec = rs_decode(f, finite, k, w, radius(xs.size(), k))) accept(dec->message, g);
      continue;
    }
    // Infinity consistent with the guess: a_h is pinned; guess a_{k-1} as well
    // and decode the remaining degree < k-1 part.
    for (unsigned cv = 0; cv < f.q(); ++cv) {
      const Elem c = elem(cv);
      std::vector<Elem> w2(w);
      for (std::size_t i = 0; i < xs.size(); ++i)
        w2[i] = f.sub(w2[i], f.add(f.mul(g, f.pow(xs[i], spec.h)), f.mul(c, f.pow(xs[i], k - 1))));
      ++result.rs_calls;
      std::optional<Poly> low;
      if (k == 1) {
        low = Poly{};
      } else if (auto dec = rs_decode(f, finite, k - 1, w2, radius(xs.size(), k - 1))) {
        low = dec->message;
      }
      if (!low || poly::coeff(*low, spec.h) != kZero) continue;
      Poly full = *low;
      full.resize(k, kZero);
      full[spec.h] = g;
      full[k - 1] = c;
      accept(full, g);
    }
  }

  for (auto& [cw, cand] : unique) result.candidates.push_back(std::move(cand));
  std::sort(result.candidates.begin(), result.candidates.end(), [](const DecodeCandidate& a, const DecodeCandidate& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return val(a.guess) < val(b.guess);
  });
  return result;
}

}  // namespace trs
