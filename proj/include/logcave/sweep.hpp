/**
 * @brief Grid classification over exact rational lattices, and floating-point
 *        sampling of the boundary surfaces for plotting.
 */
#pragma once

#include "logcave/classify.hpp"
#include "logcave/qfield.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace logcave::sweep {

inline constexpr std::uint64_t kMaxCells = 100'000'000;

struct Axis {
  Rational lo;
  Rational hi;
  Rational step;

  /// floor((hi - lo) / step) + 1
  std::uint64_t count() const {
    mpz_class q;
    Rational span = (hi - lo) / step;
    mpz_fdiv_q(q.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    if (!q.fits_ulong_p() || q.get_ui() >= kMaxCells) return kMaxCells + 1;
    return q.get_ui() + 1;
  }
  Rational at(std::uint64_t i) const { return lo + step * Rational(mpz_class(static_cast<unsigned long>(i))); }
};

struct GridSpec {
  Parity parity = Parity::Even;
  /// One axis per half coordinate x_0..x_n.
  std::vector<Axis> axes;
  ClassifyOptions classify;
};

struct CellResult {
  std::vector<Rational> coords;
  Verdict verdict = Verdict::Unknown;
  std::uint32_t iterate = 0;

  friend bool operator==(const CellResult&, const CellResult&) = default;
};

inline void validate(const GridSpec& spec) {
  if (spec.axes.empty()) throw std::invalid_argument("grid needs at least one axis");
  for (const auto& ax : spec.axes) {
    if (ax.lo >= ax.hi) throw std::invalid_argument("axis needs lo < hi");
    if (sgn(ax.step) <= 0) throw std::invalid_argument("axis step must be positive");
  }
}

/// Product of the per-axis counts; kMaxCells + 1 once it overflows the cap.
inline std::uint64_t cell_count(const GridSpec& spec) {
  std::uint64_t total = 1;
  for (const auto& ax : spec.axes) {
    const auto c = ax.count();
    if (c > kMaxCells || total > kMaxCells / c) return kMaxCells + 1;
    total *= c;
  }
  return total;
}

/// Coordinates of the cell with row-major index `index` (last axis fastest).
inline std::vector<Rational> cell_coords(const GridSpec& spec, std::uint64_t index) {
  std::vector<Rational> coords(spec.axes.size());
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const auto c = spec.axes[a].count();
    coords[a] = spec.axes[a].at(index % c);
    index /= c;
  }
  return coords;
}

inline CellResult classify_cell(const GridSpec& spec, std::vector<Rational> coords) {
  SymmetricSeq seq{coords, spec.parity};
  auto cert = seqops::classify(seq.expand(), spec.classify);
  return {std::move(coords), cert.verdict, cert.iterate};
}

/// Classifies every cell. Output is row-major and identical for any worker
/// count; workers == 0 means hardware concurrency.
inline std::vector<CellResult> classify_grid(const GridSpec& spec, unsigned workers = 0) {
  validate(spec);
  const std::uint64_t total = cell_count(spec);
  if (total > kMaxCells) throw std::invalid_argument("grid exceeds 10^8 cells");

  std::vector<CellResult> results(total);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < total;)
      results[i] = classify_cell(spec, cell_coords(spec, i));
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  if (workers <= 1) {
    work();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return results;
}

inline void write_csv(std::ostream& os, const std::vector<CellResult>& cells, std::size_t axis_count) {
  for (std::size_t a = 0; a < axis_count; ++a) os << 'x' << a << ',';
  os << "verdict,iterate\n";
  for (const auto& cell : cells) {
    for (const auto& c : cell.coords) os << to_string(c) << ',';
    os << to_string(cell.verdict) << ',' << cell.iterate << '\n';
  }
}

inline int gray_level(Verdict v) {
  switch (v) {
    case Verdict::CertifiedInfLogconcave: return 255;
    case Verdict::NotLogconcave: return 0;
    case Verdict::Unknown: return 128;
  }
  return 128;
}

/// Plain PGM (P2), one pixel per cell. Two axes only: the first axis runs
/// left to right, the second bottom to top.
inline void write_pgm(std::ostream& os, const GridSpec& spec, const std::vector<CellResult>& cells) {
  if (spec.axes.size() != 2) throw std::invalid_argument("PGM output needs exactly two axes");
  const auto width = spec.axes[0].count();
  const auto height = spec.axes[1].count();
  if (cells.size() != width * height) throw std::invalid_argument("cell count does not match grid");
  os << "P2\n" << width << ' ' << height << "\n255\n";
  for (std::uint64_t row = 0; row < height; ++row) {
    const std::uint64_t y = height - 1 - row;
    for (std::uint64_t x = 0; x < width; ++x) {
      if (x) os << ' ';
      os << gray_level(cells[x * height + y].verdict);
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Surface sampling (floating point, plot data only)

struct SampleRange {
  double lo = 0;
  double hi = 0;
  std::uint32_t steps = 1;

  double at(std::uint32_t i) const {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

struct SurfaceSampleSpec {
  std::size_t j = 0;
  Parity parity = Parity::Even;
  std::size_t n = 1;
  SampleRange x;
  /// One range per free exponent, in the order given by free_exponents().
  std::vector<SampleRange> d;
  int precision = 6;
};

/// Indices i of the exponents d_i that parametrize H_j. The remaining one is
/// pinned: d_1 = 1 on H_0, d_{j+1} = d_j on interior H_j, d_n = 0 on H_n.
inline std::vector<std::size_t> free_exponents(std::size_t j, std::size_t n) {
  if (n < 1 || j > n) throw std::invalid_argument("surface index out of range");
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= n; ++i) {
    if (j == 0 && i == 1) continue;
    if (j > 0 && j < n && i == j + 1) continue;
    if (j == n && i == n) continue;
    idx.push_back(i);
  }
  return idx;
}

/// Point of H_j for base x >= 1 and free exponents (strictly decreasing,
/// all in (0, 1)), as x^{1 + d_1 + ... + d_i} with coordinate j scaled by
/// phi, or by 2 / phi for H_n in the even / odd case.
inline std::vector<long double> surface_point(std::size_t j, Parity parity, std::size_t n, long double x,
                                              const std::vector<long double>& free_d) {
  const auto idx = free_exponents(j, n);
  if (free_d.size() != idx.size()) throw std::invalid_argument("wrong number of exponents");
  if (x < 1) throw std::invalid_argument("surface parameter x must be at least 1");
  for (std::size_t k = 0; k < free_d.size(); ++k) {
    if (!(free_d[k] > 0 && free_d[k] < 1)) throw std::invalid_argument("exponents must lie in (0, 1)");
    if (k > 0 && !(free_d[k] < free_d[k - 1])) throw std::invalid_argument("exponents must strictly decrease");
  }

  std::vector<long double> d(n + 1, 0);  // d[1..n]
  for (std::size_t k = 0; k < idx.size(); ++k) d[idx[k]] = free_d[k];
  if (j == 0) d[1] = 1;
  else if (j < n) d[j + 1] = d[j];
  else d[n] = 0;

  const long double phi = (1 + std::sqrt(5.0L)) / 2;
  std::vector<long double> coords(n + 1);
  long double exponent = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) exponent += d[i];
    coords[i] = std::pow(x, exponent);
  }
  if (j < n) coords[j] *= phi;
  else coords[n] = (parity == Parity::Even ? 2.0L : phi) * coords[n - 1];
  return coords;
}

struct SurfaceSample {
  long double x;
  std::vector<long double> d;
  std::vector<long double> coords;
};

/// Evaluates H_j on the lattice x-range times d-ranges, skipping lattice
/// points whose exponents are not strictly decreasing inside (0, 1).
inline std::vector<SurfaceSample> sample_surface(const SurfaceSampleSpec& spec) {
  const auto idx = free_exponents(spec.j, spec.n);
  if (spec.d.size() != idx.size())
    throw std::invalid_argument("surface H" + std::to_string(spec.j) + " takes " + std::to_string(idx.size()) +
                                " exponent ranges");
  if (spec.x.steps == 0) throw std::invalid_argument("x range needs at least one step");
  for (const auto& r : spec.d)
    if (r.steps == 0) throw std::invalid_argument("exponent range needs at least one step");

  std::vector<SurfaceSample> out;
  std::vector<std::uint32_t> counter(spec.d.size(), 0);
  for (std::uint32_t xi = 0; xi < spec.x.steps; ++xi) {
    const long double x = spec.x.at(xi);
    std::fill(counter.begin(), counter.end(), 0);
    while (true) {
      std::vector<long double> ds(spec.d.size());
      bool ok = x >= 1;
      for (std::size_t k = 0; k < ds.size(); ++k) {
        ds[k] = spec.d[k].at(counter[k]);
        if (!(ds[k] > 0 && ds[k] < 1) || (k > 0 && !(ds[k] < ds[k - 1]))) ok = false;
      }
      if (ok) out.push_back({x, ds, surface_point(spec.j, spec.parity, spec.n, x, ds)});

      bool wrapped = true;
      for (std::size_t k = ds.size(); k-- > 0;) {
        if (++counter[k] < spec.d[k].steps) {
          wrapped = false;
          break;
        }
        counter[k] = 0;
      }
      if (wrapped) break;
    }
  }
  return out;
}

inline void write_surface_csv(std::ostream& os, const SurfaceSampleSpec& spec,
                              const std::vector<SurfaceSample>& samples) {
  const auto idx = free_exponents(spec.j, spec.n);
  os << "param:x";
  for (auto i : idx) os << ",param:d" << i;
  for (std::size_t i = 0; i <= spec.n; ++i) os << ",coord:" << i;
  os << '\n';
  std::ostringstream line;
  line << std::fixed << std::setprecision(spec.precision);
  for (const auto& s : samples) {
    line.str({});
    line << s.x;
    for (auto v : s.d) line << ',' << v;
    for (auto v : s.coords) line << ',' << v;
    os << line.str() << '\n';
  }
}

}  // namespace logcave::sweep
