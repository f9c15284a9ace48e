#include "driftlab/walker.hpp"

#include <cmath>
#include <thread>

namespace driftlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct ClosureTable {
  std::vector<complexd> a, b;
  std::vector<bool> anti;
  std::vector<double> cdf;
  bool uniform = true;
};

ClosureTable make_table(const std::vector<LabeledIsometry>& closure,
                        const std::vector<double>& dist) {
  if (closure.empty()) throw std::invalid_argument("walk: empty generating set");
  if (dist.size() != closure.size())
    throw std::invalid_argument("walk: step distribution size mismatch");
  ClosureTable t;
  double total = 0.0;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    t.a.push_back(closure[i].map.a);
    t.b.push_back(closure[i].map.b);
    t.anti.push_back(closure[i].map.antiholomorphic);
    total += dist[i];
    t.cdf.push_back(total);
    if (dist[i] != dist[0]) t.uniform = false;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("walk: step distribution must sum to 1");
  return t;
}

inline std::uint32_t draw_index(const ClosureTable& t, SplitMix64& rng) {
  if (t.uniform) return rng.next_below(static_cast<std::uint32_t>(t.a.size()));
  double u = rng.next_unit();
  std::uint32_t i = 0;
  while (i + 1 < t.cdf.size() && u >= t.cdf[i]) ++i;
  return i;
}

Isometry walk_product(const ClosureTable& t, int n, SplitMix64& rng,
                      int renormalize_every) {
  complexd a{1.0, 0.0}, b{0.0, 0.0};
  bool flag = false;
  double log_scale = 0.0;
  int renorm = renormalize_every > 0 ? renormalize_every : 64;
  for (int step = 1; step <= n; ++step) {
    std::uint32_t i = draw_index(t, rng);
    complexd sa = t.a[i], sb = t.b[i];
    if (flag) {
      sa = std::conj(sa);
      sb = std::conj(sb);
    }
    complexd na = a * sa + b * std::conj(sb);
    complexd nb = a * sb + b * std::conj(sa);
    a = na;
    b = nb;
    flag = flag != static_cast<bool>(t.anti[i]);
    if (step % renorm == 0) {
      double m = std::abs(a);
      a /= m;
      b /= m;
      log_scale += std::log(m);
    }
  }
  Isometry out;
  out.a = a;
  out.b = b;
  out.antiholomorphic = flag;
  out.log_scale = log_scale;
  return out;
}

// Conjugate the closure by the translation taking base_point to 0 so that
// displacements measure d(w . base, base).
std::vector<LabeledIsometry> rebase(const std::vector<LabeledIsometry>& closure,
                                    complexd base_point) {
  if (base_point == complexd{0.0, 0.0}) return closure;
  Isometry T = translation_to_origin(base_point);
  Isometry Ti = inverse(T);
  std::vector<LabeledIsometry> out;
  for (const LabeledIsometry& g : closure)
    out.push_back({g.label, compose(T, compose(g.map, Ti))});
  return out;
}

// Runs fn(trial_index) for every trial on a worker pool; results must be
// written by index so that aggregation order is independent of scheduling.
template <typename Fn>
void parallel_trials(int N, int threads, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  int T = threads > 0 ? threads : (hw > 0 ? static_cast<int>(hw) : 1);
  T = std::min<int>(T, N);
  if (T <= 1) {
    for (int t = 0; t < N; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < T; ++w) {
    int lo = static_cast<int>(static_cast<std::int64_t>(N) * w / T);
    int hi = static_cast<int>(static_cast<std::int64_t>(N) * (w + 1) / T);
    pool.emplace_back([lo, hi, &fn] {
      for (int t = lo; t < hi; ++t) fn(t);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

Isometry run_walk(const std::vector<LabeledIsometry>& closure,
                  const std::vector<double>& step_distribution, int n,
                  SplitMix64& rng, int renormalize_every) {
  ClosureTable t = make_table(closure, step_distribution);
  return walk_product(t, n, rng, renormalize_every);
}

std::vector<int> sample_walk_indices(const GeneratorSet& gens, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_walk_indices: n must be positive");
  ClosureTable table = make_table(symmetric_closure(gens), gens.step_distribution);
  SplitMix64 rng = SplitMix64::for_trial(seed, 0);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(static_cast<int>(draw_index(table, rng)));
  return out;
}

DriftEstimate estimate_drift_mc(const GeneratorSet& gens, const WalkConfig& config) {
  if (config.n < 1 || config.N < 1)
    throw std::invalid_argument("estimate_drift_mc: n and N must be positive");
  ClosureTable table =
      make_table(rebase(symmetric_closure(gens), config.base_point),
                 gens.step_distribution);

  std::vector<double> per_trial(config.N);
  parallel_trials(config.N, config.threads, [&](int trial) {
    SplitMix64 rng = SplitMix64::for_trial(config.seed, static_cast<std::uint64_t>(trial));
    Isometry w = walk_product(table, config.n, rng, config.renormalize_every);
    per_trial[trial] = displacement_of(w) / config.n;
  });

  double sum = 0.0;
  for (double x : per_trial) sum += x;
  double mean = sum / config.N;
  double ss = 0.0;
  for (double x : per_trial) ss += (x - mean) * (x - mean);
  double stderr_ = config.N > 1 ? std::sqrt(ss / (config.N - 1)) / std::sqrt(double(config.N)) : 0.0;

  DriftEstimate est;
  est.mean = mean;
  est.stderr_ = stderr_;
  est.n = config.n;
  est.N = config.N;
  est.method = DriftMethod::monte_carlo;
  return est;
}

DriftEstimate exact_mean_displacement(const GeneratorSet& gens, int n,
                                      std::size_t budget) {
  if (n < 1) throw std::invalid_argument("exact_mean_displacement: n must be >= 1");
  if (budget == 0) budget = default_enumeration_budget();
  auto closure = symmetric_closure(gens);
  const std::size_t k = closure.size();
  std::size_t words = 1;
  for (int i = 0; i < n; ++i) {
    if (words > budget / k)
      throw std::length_error("exact_mean_displacement: word count exceeds budget");
    words *= k;
  }

  const std::vector<double>& p = gens.step_distribution;
  double acc = 0.0;
  // Depth-first over the prefix tree so each prefix product is composed once.
  auto rec = [&](auto&& self, const Isometry& prefix, double weight, int depth) -> void {
    if (depth == n) {
      acc += weight * displacement_of(prefix);
      return;
    }
    for (std::size_t j = 0; j < k; ++j)
      self(self, compose(prefix, closure[j].map), weight * p[j], depth + 1);
  };
  rec(rec, identity_isometry(), 1.0, 0);

  DriftEstimate est;
  est.mean = acc / n;
  est.stderr_ = 0.0;
  est.n = n;
  est.N = static_cast<std::int64_t>(words);
  est.method = DriftMethod::exact;
  return est;
}

BoundarySample sample_harmonic_measure(const GeneratorSet& gens, int n, int N,
                                       std::uint64_t seed) {
  if (n < 1 || N < 1)
    throw std::invalid_argument("sample_harmonic_measure: n and N must be positive");
  ClosureTable table = make_table(symmetric_closure(gens), gens.step_distribution);

  BoundarySample out;
  out.n = n;
  out.angles.resize(N);
  std::vector<char> converged(N);
  parallel_trials(N, 0, [&](int trial) {
    SplitMix64 rng = SplitMix64::for_trial(seed, static_cast<std::uint64_t>(trial));
    Isometry w = walk_product(table, n, rng, 64);
    // endpoint w . 0 = b / conj(a); its argument is arg(a b)
    out.angles[trial] = canonical_angle(std::arg(w.a * w.b));
    // 1 - |w . 0| = e^{-2 log_scale} / (|a| (|a| + |b|))
    double log_gap = -2.0 * w.log_scale - std::log(std::abs(w.a)) -
                     std::log(std::abs(w.a) + std::abs(w.b));
    converged[trial] = log_gap < std::log(1e-6) ? 1 : 0;
  });

  std::int64_t c = 0;
  for (char v : converged) c += v;
  out.converged_fraction = static_cast<double>(c) / N;
  out.warning = out.converged_fraction < 0.99;
  return out;
}

std::vector<std::int64_t> angle_histogram(const std::vector<double>& angles, int bins) {
  if (bins < 1) throw std::invalid_argument("angle_histogram: bins must be positive");
  std::vector<std::int64_t> h(bins, 0);
  for (double t : angles) {
    int i = static_cast<int>(t / kTwoPi * bins);
    if (i >= bins) i = bins - 1;
    if (i < 0) i = 0;
    ++h[i];
  }
  return h;
}

std::string method_name(DriftMethod m) {
  switch (m) {
    case DriftMethod::monte_carlo: return "monte_carlo";
    case DriftMethod::exact: return "exact";
    case DriftMethod::spectral: return "spectral";
  }
  return "unknown";
}

}  // namespace driftlab
