#include "slowent/torus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string_view>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include "slowent/parallel.hpp"
#include "slowent/rng.hpp"
#include "slowent/simd.hpp"

namespace slowent {

namespace {

void check_partition(const CodingConfig& cfg) {
  if (cfg.d == 0) throw TorusError("d must be at least 1");
  if (cfg.q < 2) throw TorusError("q must be at least 2");
  double cells = 1;
  for (std::size_t i = 0; i < cfg.d; ++i) cells *= static_cast<double>(cfg.q);
  if (cells > 65536) throw TorusError("q^d must not exceed 65536");
}

// Largest mismatch count strictly below radius * n.
std::size_t strict_limit(double radius, std::size_t n) {
  const double bound = radius * static_cast<double>(n);
  const double c = std::ceil(bound * (1 - 1e-12));
  return c < 1 ? 0 : static_cast<std::size_t>(c) - 1;
}

bool within(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit) {
  return simd::mismatches_u16_bounded(a, b, n, limit) <= limit;
}

void fill_code(std::vector<std::uint64_t> x, std::uint64_t alpha, std::size_t q, std::uint16_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = cell_of(x, q);
    step(x, alpha);
  }
}

}  // namespace

void CodingConfig::validate() const {
  check_partition(*this);
  if (n < 10) throw TorusError("n must be at least 10");
  if (!(epsilon > 0 && epsilon < 1)) throw TorusError("epsilon must lie in (0, 1)");
  if (samples == 0) throw TorusError("samples must be positive");
  if (!window.empty() && window.size() != d) throw TorusError("window needs one width per coordinate");
  for (double w : window)
    if (!(w > 0 && w <= 1)) throw TorusError("window widths must lie in (0, 1]");
}

double CodingConfig::window_volume() const {
  double v = 1;
  for (double w : window) v *= w;
  return v;
}

std::uint64_t to_fixed(double x) {
  x -= std::floor(x);
  if (!(x < 1)) x = 0;
  return static_cast<std::uint64_t>(std::ldexp(x, 64));
}

double from_fixed(std::uint64_t x) { return std::ldexp(static_cast<double>(x), -64); }

void step(std::vector<std::uint64_t>& x, std::uint64_t alpha) {
  for (std::size_t i = x.size(); i-- > 1;) x[i] += x[i - 1];
  x[0] += alpha;
}

std::uint16_t cell_of(const std::vector<std::uint64_t>& x, std::size_t q) {
  std::size_t cell = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    const auto c = static_cast<std::size_t>((static_cast<unsigned __int128>(x[i]) * q) >> 64);
    cell = cell * q + c;
  }
  return static_cast<std::uint16_t>(cell);
}

TorusOrbitCoding orbit_code(const std::vector<double>& x, const CodingConfig& cfg) {
  check_partition(cfg);
  if (x.size() != cfg.d) throw TorusError("point has the wrong dimension");
  std::vector<std::uint64_t> fx(cfg.d);
  TorusOrbitCoding out;
  for (std::size_t i = 0; i < cfg.d; ++i) {
    fx[i] = to_fixed(x[i]);
    out.point.push_back(from_fixed(fx[i]));
  }
  out.code.resize(cfg.n);
  fill_code(fx, to_fixed(cfg.alpha), cfg.q, out.code.data(), cfg.n);
  return out;
}

double hamming(const TorusOrbitCoding& a, const TorusOrbitCoding& b) {
  if (a.code.size() != b.code.size()) throw TorusError("codes have different lengths");
  if (a.code.empty()) return 0.0;
  return static_cast<double>(simd::mismatches_u16(a.code.data(), b.code.data(), a.code.size())) /
         static_cast<double>(a.code.size());
}

SpanningEstimate spanning_count(const CodingConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n, m = cfg.samples;
  const std::uint64_t alpha = to_fixed(cfg.alpha);

  std::vector<std::uint16_t> codes(m * n);
  parallel_chunks(m, cfg.threads, [&](std::size_t begin, std::size_t end, unsigned) {
    std::vector<std::uint64_t> x(cfg.d);
    for (std::size_t s = begin; s < end; ++s) {
      CounterRng rng(cfg.seed, 0, s);
      for (std::size_t i = 0; i < cfg.d; ++i) x[i] = to_fixed(rng.uniform() * (cfg.window.empty() ? 1.0 : cfg.window[i]));
      fill_code(x, alpha, cfg.q, codes.data() + s * n, n);
    }
  });

  // Identical codes collapse to one weighted representative, first occurrence wins.
  std::vector<std::size_t> rep, weight;
  {
    std::unordered_map<std::string_view, std::size_t> seen;
    seen.reserve(m);
    const auto bytes = reinterpret_cast<const char*>(codes.data());
    for (std::size_t s = 0; s < m; ++s) {
      const std::string_view key(bytes + s * n * sizeof(std::uint16_t), n * sizeof(std::uint16_t));
      auto [it, fresh] = seen.try_emplace(key, rep.size());
      if (fresh) {
        rep.push_back(s);
        weight.push_back(0);
      }
      ++weight[it->second];
    }
  }
  const std::size_t distinct = rep.size();
  auto code = [&](std::size_t i) { return codes.data() + rep[i] * n; };

  // Symmetric neighbor lists under d < eps; rows are interleaved across
  // workers to balance the triangular loop, then merged in a fixed order.
  const std::size_t limit = strict_limit(cfg.epsilon, n);
  const unsigned workers = worker_count(cfg.threads);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(workers);
  parallel_chunks(workers, workers, [&](std::size_t wb, std::size_t we, unsigned) {
    for (std::size_t w = wb; w < we; ++w)
      for (std::size_t i = w; i < distinct; i += workers)
        for (std::size_t j = i + 1; j < distinct; ++j)
          if (within(code(i), code(j), n, limit)) found[w].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  });
  std::vector<std::vector<std::uint32_t>> adj(distinct);
  for (std::size_t i = 0; i < distinct; ++i) adj[i].push_back(static_cast<std::uint32_t>(i));
  for (const auto& list : found)
    for (auto [i, j] : list) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Lazy greedy set cover on sample weights; ties go to the lower index.
  const auto need = static_cast<std::size_t>(std::ceil((1 - cfg.epsilon) * static_cast<double>(m) - 1e-9));
  std::vector<char> covered(distinct, 0);
  auto gain = [&](std::size_t c) {
    std::size_t g = 0;
    for (auto j : adj[c])
      if (!covered[j]) g += weight[j];
    return g;
  };
  using Entry = std::pair<std::size_t, std::size_t>;  // (gain, distinct - index)
  std::priority_queue<Entry> heap;
  for (std::size_t i = 0; i < distinct; ++i) heap.emplace(gain(i), distinct - i);
  SpanningEstimate est;
  est.distinct = distinct;
  est.window_volume = cfg.window_volume();
  while (est.covered < need && !heap.empty()) {
    const auto [stale, key] = heap.top();
    heap.pop();
    const std::size_t c = distinct - key;
    const std::size_t g = gain(c);
    if (g == 0) continue;
    if (!heap.empty() && g < heap.top().first) {
      heap.emplace(g, key);
      continue;
    }
    ++est.greedy;
    for (auto j : adj[c])
      if (!covered[j]) {
        covered[j] = 1;
        est.covered += weight[j];
      }
  }

  // Two points of a 2 eps-separated set never share a ball {d < eps}, and
  // every covered sample lies in a chosen ball, so this never exceeds greedy.
  const std::size_t sep_limit = strict_limit(2 * cfg.epsilon, n);
  std::vector<std::size_t> sep;
  for (std::size_t i = 0; i < distinct; ++i) {
    if (!covered[i]) continue;
    bool far = true;
    for (std::size_t s : sep)
      if (within(code(i), code(s), n, sep_limit)) {
        far = false;
        break;
      }
    if (far) sep.push_back(i);
  }
  est.separated = sep.size();
  return est;
}

CodingSeries empirical_slow_entropy(const CodingConfig& cfg, const std::vector<std::size_t>& n_grid) {
  if (n_grid.size() < 4) throw TorusError("n grid needs at least 4 points");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1]) throw TorusError("n grid must be strictly increasing");
  CodingSeries out;
  std::vector<double> x, y;
  for (std::size_t n : n_grid) {
    CodingConfig c = cfg;
    c.n = n;
    const SpanningEstimate e = spanning_count(c);
    out.points.push_back({n, e});
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(std::log(e.scaled_greedy()));
  }
  if (std::all_of(y.begin(), y.end(), [&](double v) { return !std::isfinite(v); }))
    throw TorusError("degenerate fit: no centers selected");
  out.fit = fit_slope(x, y);
  return out;
}

std::vector<std::size_t> cell_histogram(const std::vector<double>& x, const CodingConfig& cfg, std::size_t length) {
  CodingConfig c = cfg;
  c.n = length;
  const TorusOrbitCoding orbit = orbit_code(x, c);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < cfg.d; ++i) cells *= cfg.q;
  std::vector<std::size_t> counts(cells, 0);
  for (auto cell : orbit.code) ++counts[cell];
  return counts;
}

ChiSquare chi_square_uniform(const std::vector<std::size_t>& counts) {
  if (counts.size() < 2) throw TorusError("chi-square test needs at least two cells");
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  if (total == 0) throw TorusError("chi-square test needs observations");
  const double expected = total / static_cast<double>(counts.size());
  ChiSquare out;
  for (auto c : counts) out.statistic += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  out.dof = static_cast<double>(counts.size() - 1);
  out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
  return out;
}

}  // namespace slowent
