#include "trs/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace trs {

std::string to_string(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::Plus: return "plus";
    case Family::Twisted: return "twisted";
    case Family::RothLempel: return "rl";
  }
  return "?";
}

std::string to_string(InfinityPolicy p) {
  switch (p) {
    case InfinityPolicy::Excluded: return "none";
    case InfinityPolicy::HookOnly: return "strict";
    case InfinityPolicy::AnyHook: return "liberal";
  }
  return "?";
}

std::string to_string(TwistRange r) {
  switch (r) {
    case TwistRange::Redundancy: return "redundancy";
    case TwistRange::FieldOrder: return "field";
  }
  return "?";
}

TwistRange parse_twist_range(const std::string& s) {
  if (s == "redundancy") return TwistRange::Redundancy;
  if (s == "field") return TwistRange::FieldOrder;
  throw DomainError("unknown twist range '" + s + "'");
}

Family parse_family(const std::string& s) {
  if (s == "star") return Family::Star;
  if (s == "plus") return Family::Plus;
  if (s == "twisted") return Family::Twisted;
  if (s == "rl") return Family::RothLempel;
  throw DomainError("unknown family '" + s + "'");
}

InfinityPolicy parse_infinity_policy(const std::string& s) {
  if (s == "none") return InfinityPolicy::Excluded;
  if (s == "strict") return InfinityPolicy::HookOnly;
  if (s == "liberal") return InfinityPolicy::AnyHook;
  throw DomainError("unknown infinity policy '" + s + "'");
}

std::string CensusRow::csv_header() { return "q,n,k,family,t,h,total,inequivalent,non_grs"; }

std::string CensusRow::csv_line() const {
  std::ostringstream os;
  os << q << ',' << n << ',' << k << ',' << to_string(family) << ',';
  if (t) os << *t;
  os << ',';
  if (h) os << *h;
  os << ',' << total << ',' << inequivalent << ',' << non_grs;
  return os.str();
}

FieldPtr field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    unsigned m = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1) break;
    return Field::make(p, m);
  }
  throw DomainError(std::to_string(q) + " is not a prime power");
}

namespace {

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRS_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_dimensions(unsigned n, unsigned k, const CensusOptions& options) {
  if (k < 1 || k >= n) throw DomainError("census needs 1 <= k < n");
  if (!options.allow_small_dimensions && !(2 < k && k + 2 < n))
    throw DomainError("census restricted to 2 < k < n-2 (pass allow_small_dimensions to relax)");
}

// All n-subsets of `points`, in lexicographic order of indices.
void for_each_subset(std::span<const EvalPoint> points, unsigned n,
                     const std::function<void(std::size_t, const EvalPoints&)>& visit) {
  if (n > points.size()) return;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  EvalPoints subset(n, EvalPoint::infinity());
  std::size_t ordinal = 0;
  while (true) {
    for (unsigned i = 0; i < n; ++i) subset[i] = points[idx[i]];
    visit(ordinal++, subset);
    std::size_t i = n;
    while (i-- > 0 && idx[i] == points.size() - n + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string describe_points(std::span<const EvalPoint> pts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ',';
    if (pts[i].is_infinity())
      os << "inf";
    else
      os << val(pts[i].value());
  }
  os << ']';
  return os.str();
}

std::string describe_spec(const TwistedCodeSpec& s) {
  std::ostringstream os;
  os << "alpha=" << describe_points(s.alpha) << " t=" << s.t << " h=" << s.h << " eta=" << val(s.eta);
  return os.str();
}

struct Found {
  std::size_t members = 0;
  std::uint64_t first = 0;
  LinearCode representative;
  std::string origin;
};

// Per-worker accumulator; merged deterministically by smallest ordinal.
struct Tally {
  std::size_t total = 0;
  std::map<CanonicalSignature, Found> classes;
  // (ordinal, family, member signatures)
  std::vector<std::tuple<std::uint64_t, EtaFamily, std::vector<CanonicalSignature>>> families;

  const CanonicalSignature& add(LinearCode code, std::uint64_t ordinal, const std::function<std::string()>& origin) {
    ++total;
    CanonicalSignature sig = canonical_form(code);
    auto [it, inserted] = classes.try_emplace(std::move(sig));
    Found& f = it->second;
    ++f.members;
    if (inserted || ordinal < f.first) {
      f.first = ordinal;
      f.representative = std::move(code);
      f.origin = origin();
    }
    return it->first;
  }

  void merge(Tally&& other) {
    total += other.total;
    for (auto& [sig, found] : other.classes) {
      auto [it, inserted] = classes.try_emplace(sig, std::move(found));
      if (inserted) continue;
      it->second.members += found.members;
      if (found.first < it->second.first) {
        it->second.first = found.first;
        it->second.representative = std::move(found.representative);
        it->second.origin = std::move(found.origin);
      }
    }
    for (auto& fam : other.families) families.push_back(std::move(fam));
  }
};

// Runs work(worker, ordinal, subset) over all n-subsets of points, sharded by ordinal.
Tally run_sharded(std::span<const EvalPoint> points, unsigned n, unsigned jobs,
                  const std::function<void(Tally&, std::size_t, const EvalPoints&)>& work) {
  jobs = resolve_jobs(jobs);
  std::vector<Tally> tallies(jobs);
  auto body = [&](unsigned w) {
    for_each_subset(points, n, [&](std::size_t ordinal, const EvalPoints& subset) {
      if (ordinal % jobs == w) work(tallies[w], ordinal, subset);
    });
  };
  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  Tally out;
  for (auto& t : tallies) out.merge(std::move(t));
  return out;
}

CensusResult finish(Tally&& tally, CensusRow row, std::chrono::steady_clock::time_point start) {
  CensusResult res;
  res.row = row;
  res.row.total = tally.total;
  for (auto& [sig, found] : tally.classes) {
    ClassInfo info;
    info.members = found.members;
    info.grs = is_grs(found.representative);
    info.representative = std::move(found.representative);
    info.origin = std::move(found.origin);
    res.classes.emplace(sig, std::move(info));
  }
  res.row.inequivalent = res.classes.size();
  res.row.non_grs = static_cast<std::size_t>(
      std::count_if(res.classes.begin(), res.classes.end(), [](const auto& kv) { return !kv.second.grs; }));
  std::sort(tally.families.begin(), tally.families.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  const std::size_t all_etas = res.row.q - 1;
  for (auto& [ordinal, fam, sigs] : tally.families) {
    fam.mds_etas = sigs.size();
    for (const auto& s : sigs) fam.grs_etas += res.classes.at(s).grs ? 1 : 0;
    if (contains_infinity(fam.alpha)) {
      res.max_grs_etas_infinite = std::max(res.max_grs_etas_infinite, fam.grs_etas);
    } else {
      res.max_grs_etas_finite = std::max(res.max_grs_etas_finite, fam.grs_etas);
      if (fam.mds_etas == all_etas && fam.t <= res.row.n - res.row.k)
        res.max_grs_etas_finite_all_mds = std::max(res.max_grs_etas_finite_all_mds, fam.grs_etas);
    }
    if (fam.grs_etas > CensusResult::grs_eta_limit) res.grs_heavy_families.push_back(std::move(fam));
  }
  res.row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CensusRow make_row(unsigned q, unsigned n, unsigned k, Family family) {
  CensusRow row;
  row.q = q;
  row.n = n;
  row.k = k;
  row.family = family;
  return row;
}

EvalPoints all_points(const Field& f, bool with_infinity) {
  EvalPoints pts = finite_points(f.elements());
  if (with_infinity) pts.push_back(EvalPoint::infinity());
  return pts;
}

}  // namespace

CensusResult census_star(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options) {
  check_dimensions(n, k, options);
  const auto start = std::chrono::steady_clock::now();
  const Field& f = *field;
  Tally tally;
  std::uint64_t base = 0;
  for (const auto& group : multiplicative_subgroups(f)) {
    if (group.order >= f.q() - 1) continue;
    EvalPoints pts{EvalPoint::finite(kZero)};
    for (Elem g : group.elements) pts.push_back(EvalPoint::finite(g));
    std::vector<Elem> etas;
    for (unsigned v = 1; v < f.q(); ++v) {
      Elem s = f.inv(elem(v));
      if (k % 2 == 1) s = f.neg(s);
      if (!group.contains(s)) etas.push_back(elem(v));
    }
    Tally part = run_sharded(pts, n, options.jobs, [&](Tally& t, std::size_t ordinal, const EvalPoints& alpha) {
      for (Elem eta : etas) {
        TwistedCodeSpec spec = star_twisted(field, group, alpha, k, eta);
        t.add(twisted_code(spec), base + ordinal * f.q() + val(eta), [&] { return describe_spec(spec); });
      }
    });
    tally.merge(std::move(part));
    base += std::uint64_t{1} << 40;
  }
  CensusRow row = make_row(f.q(), n, k, Family::Star);
  row.t = 1;
  row.h = 0;
  row.inf_policy = InfinityPolicy::Excluded;
  return finish(std::move(tally), row, start);
}

CensusResult census_plus(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options) {
  check_dimensions(n, k, options);
  const auto start = std::chrono::steady_clock::now();
  const Field& f = *field;
  Tally tally;
  std::uint64_t base = 0;
  unsigned order = 1;
  for (unsigned j = 0; j < f.m(); ++j, order *= f.p()) {
    for (const auto& group : additive_subgroups(f, order)) {
      EvalPoints pts = finite_points(group.elements);
      pts.push_back(EvalPoint::infinity());
      std::vector<Elem> etas;
      for (unsigned v = 1; v < f.q(); ++v)
        if (!group.contains(f.inv(elem(v)))) etas.push_back(elem(v));
      Tally part = run_sharded(pts, n, options.jobs, [&](Tally& t, std::size_t ordinal, const EvalPoints& alpha) {
        for (Elem eta : etas) {
          TwistedCodeSpec spec = plus_twisted(field, group, alpha, k, eta);
          t.add(twisted_code(spec), base + ordinal * f.q() + val(eta), [&] { return describe_spec(spec); });
        }
      });
      tally.merge(std::move(part));
      base += std::uint64_t{1} << 40;
    }
  }
  CensusRow row = make_row(f.q(), n, k, Family::Plus);
  row.t = 1;
  row.h = k - 1;
  row.inf_policy = InfinityPolicy::AnyHook;
  return finish(std::move(tally), row, start);
}

namespace {

unsigned max_twist(unsigned q, unsigned n, unsigned k, TwistRange range) {
  if (range == TwistRange::Redundancy) return n - k;
  return q > k ? q - 1 - k : 0;
}

std::vector<TwistPair> admissible_pairs(unsigned q, unsigned n, unsigned k, const CensusOptions& options) {
  std::vector<TwistPair> pairs;
  for (unsigned t = 1; t <= max_twist(q, n, k, options.twist_range); ++t)
    for (unsigned h = 0; h < k; ++h) {
      if (options.t && *options.t != t) continue;
      if (options.h && *options.h != h) continue;
      pairs.push_back({t, h});
    }
  return pairs;
}

}  // namespace

CensusResult census_twisted(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options) {
  check_dimensions(n, k, options);
  if (options.t && (*options.t < 1 || *options.t > max_twist(field->q(), n, k, options.twist_range)))
    throw DomainError("twist t out of range");
  if (options.h && *options.h >= k) throw DomainError("hook h must satisfy h < k");
  const auto start = std::chrono::steady_clock::now();
  const Field& f = *field;
  const auto pairs = admissible_pairs(f.q(), n, k, options);
  std::vector<TwistPair> hook_top_pairs;
  for (const auto& p : pairs)
    if (p.h == k - 1) hook_top_pairs.push_back(p);
  const bool track_families = 2 < k && k + 2 < n;
  const std::uint64_t stride = static_cast<std::uint64_t>(pairs.size()) * f.q();

  const EvalPoints pts = all_points(f, options.inf_policy != InfinityPolicy::Excluded);
  Tally tally = run_sharded(pts, n, options.jobs, [&](Tally& t, std::size_t ordinal, const EvalPoints& alpha) {
    const bool has_inf = alpha.back().is_infinity();
    const std::vector<TwistPair>& use =
        has_inf && options.inf_policy == InfinityPolicy::HookOnly ? hook_top_pairs : pairs;
    if (use.empty()) return;
    const auto masks = mds_eta_masks(f, alpha, k, use);
    for (std::size_t p = 0; p < use.size(); ++p) {
      std::vector<CanonicalSignature> family;
      const std::size_t pair_index = static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), use[p]) - pairs.begin());
      for (unsigned v = 1; v < f.q(); ++v) {
        if (!masks[p][v]) continue;
        TwistedCodeSpec spec{field, alpha, k, use[p].t, use[p].h, elem(v), true};
        const auto& sig = t.add(twisted_code(spec), ordinal * stride + pair_index * f.q() + v,
                                [&] { return describe_spec(spec); });
        if (track_families) family.push_back(sig);
      }
      if (track_families && !family.empty())
        t.families.emplace_back(ordinal * stride + pair_index * f.q(), EtaFamily{alpha, use[p].t, use[p].h},
                                std::move(family));
    }
  });
  CensusRow row = make_row(f.q(), n, k, Family::Twisted);
  row.t = options.t;
  row.h = options.h;
  row.twist_range = options.twist_range;
  row.inf_policy = options.inf_policy;
  return finish(std::move(tally), row, start);
}

CensusResult census_roth_lempel(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options) {
  check_dimensions(n, k, options);
  const auto start = std::chrono::steady_clock::now();
  const Field& f = *field;
  const EvalPoints pts = all_points(f, options.inf_policy != InfinityPolicy::Excluded);
  Tally tally = run_sharded(pts, n - 1, options.jobs, [&](Tally& t, std::size_t ordinal, const EvalPoints& set) {
    // delta admissible iff no (k-1)-subset of the finite points sums to it.
    const auto values = finite_values(set);
    std::vector<std::uint8_t> hit(f.q(), 0);
    scan_locators(f, values, k - 1, [&](std::span<const std::size_t>, std::span<const Elem> sigma) {
      hit[val(f.neg(sigma[k - 2]))] = 1;
      return false;
    });
    for (unsigned v = 0; v < f.q(); ++v) {
      if (hit[v]) continue;
      RothLempelSpec spec{field, set, k, elem(v)};
      t.add(roth_lempel_code(spec), ordinal * f.q() + v,
            [&] { return "S=" + describe_points(set) + " delta=" + std::to_string(v); });
    }
  });
  CensusRow row = make_row(f.q(), n, k, Family::RothLempel);
  row.inf_policy = options.inf_policy;
  return finish(std::move(tally), row, start);
}

CensusResult run_census(Family family, const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options) {
  switch (family) {
    case Family::Star: return census_star(field, n, k, options);
    case Family::Plus: return census_plus(field, n, k, options);
    case Family::Twisted: return census_twisted(field, n, k, options);
    case Family::RothLempel: return census_roth_lempel(field, n, k, options);
  }
  throw DomainError("unknown family");
}

std::map<std::pair<unsigned, unsigned>, bool> exotic_existence(const FieldPtr& field, unsigned n, unsigned k,
                                                               const CensusOptions& options) {
  check_dimensions(n, k, options);
  const Field& f = *field;
  std::vector<TwistPair> open = admissible_pairs(f.q(), n, k, options);
  std::map<std::pair<unsigned, unsigned>, bool> out;
  for (const auto& p : open) out[{p.t, p.h}] = false;
  const EvalPoints pts = all_points(f, options.inf_policy != InfinityPolicy::Excluded);
  // Sequential on purpose: early exit per pair needs a shared view of what is open.
  for_each_subset(pts, n, [&](std::size_t, const EvalPoints& alpha) {
    if (open.empty()) return;
    std::vector<TwistPair> use;
    const bool has_inf = alpha.back().is_infinity();
    for (const auto& p : open)
      if (!has_inf || options.inf_policy == InfinityPolicy::AnyHook || p.h == k - 1) use.push_back(p);
    if (use.empty()) return;
    const auto masks = mds_eta_masks(f, alpha, k, use);
    for (std::size_t p = 0; p < use.size(); ++p) {
      if (std::none_of(masks[p].begin(), masks[p].end(), [](std::uint8_t b) { return b != 0; })) continue;
      out[{use[p].t, use[p].h}] = true;
      open.erase(std::find(open.begin(), open.end(), use[p]));
    }
  });
  return out;
}

std::size_t cross_family_overlap(const CensusResult& a, const CensusResult& b) {
  if (a.row.q != b.row.q || a.row.n != b.row.n || a.row.k != b.row.k)
    throw DomainError("cross-family overlap needs identical (q, n, k)");
  std::size_t common = 0;
  for (const auto& [sig, info] : a.classes) common += b.classes.count(sig);
  return common;
}

}  // namespace trs
