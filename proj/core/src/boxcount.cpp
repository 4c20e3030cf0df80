#include "regal/boxcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace regal {

PointCloud cloud_from_cpoints(const std::vector<CPoint>& pts) {
  PointCloud cloud;
  if (pts.empty()) return cloud;
  cloud.dim = 2 * static_cast<int>(pts.front().z.size());
  cloud.coords.reserve(pts.size() * static_cast<size_t>(cloud.dim));
  for (const CPoint& p : pts) {
    if (2 * static_cast<int>(p.z.size()) != cloud.dim)
      throw std::invalid_argument("cloud_from_cpoints: mixed dimensions");
    for (const Cplx& z : p.z) {
      cloud.coords.push_back(z.real());
      cloud.coords.push_back(z.imag());
    }
  }
  return cloud;
}

namespace {

struct Fit {
  double slope = 0.0, residual = 0.0;
};

// LSQ slope of log N vs log(1/eps) over [lo, hi]; residual = max deviation.
Fit fit_loglog(const std::vector<double>& scales, const std::vector<long long>& counts, int lo,
               int hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int npts = hi - lo + 1;
  for (int i = lo; i <= hi; ++i) {
    const double x = std::log(1.0 / scales[static_cast<size_t>(i)]);
    const double y = std::log(static_cast<double>(counts[static_cast<size_t>(i)]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  Fit fit;
  const double denom = npts * sxx - sx * sx;
  if (denom == 0.0) throw std::runtime_error("box_dimension: degenerate scale ladder");
  fit.slope = (npts * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / npts;
  for (int i = lo; i <= hi; ++i) {
    const double x = std::log(1.0 / scales[static_cast<size_t>(i)]);
    const double y = std::log(static_cast<double>(counts[static_cast<size_t>(i)]));
    fit.residual = std::max(fit.residual, std::abs(fit.slope * x + intercept - y));
  }
  return fit;
}

void resolve_fit_window(const BoxCountOptions& opts, int nscales, int* lo, int* hi) {
  *lo = opts.fit_lo >= 0 ? opts.fit_lo : (nscales >= 5 ? 1 : 0);
  *hi = opts.fit_hi >= 0 ? opts.fit_hi : (nscales >= 5 ? nscales - 2 : nscales - 1);
  if (*lo < 0 || *hi >= nscales || *hi - *lo + 1 < 2)
    throw std::invalid_argument("box_dimension: bad fit window");
}

void validate_ladder(const BoxCountOptions& opts) {
  if (opts.coarse_level < 0 || opts.fine_level < opts.coarse_level + 2)
    throw std::invalid_argument("box_dimension: need at least 3 scales");
}

BoxCountResult finish(BoxCountResult r, const BoxCountOptions& opts) {
  int lo = 0, hi = 0;
  resolve_fit_window(opts, static_cast<int>(r.scales.size()), &lo, &hi);
  const Fit fit = fit_loglog(r.scales, r.counts, lo, hi);
  r.slope = std::clamp(fit.slope, 0.0, static_cast<double>(r.ambient_dim));
  r.residual = fit.residual;
  r.fit_lo = lo;
  r.fit_hi = hi;
  return r;
}

}  // namespace

BoxCountResult box_dimension(const PointCloud& cloud, const std::vector<double>& window_lo,
                             const std::vector<double>& window_hi, const BoxCountOptions& opts,
                             const std::string& target) {
  validate_ladder(opts);
  const int D = cloud.dim;
  if (D < 1 || cloud.size() == 0) throw std::invalid_argument("box_dimension: empty cloud");
  if (static_cast<int>(window_lo.size()) != D || static_cast<int>(window_hi.size()) != D)
    throw std::invalid_argument("box_dimension: window dimension mismatch");
  double diam = 0.0;
  for (int d = 0; d < D; ++d) {
    if (!(window_hi[d] > window_lo[d]))
      throw std::invalid_argument("box_dimension: empty window extent");
    diam = std::max(diam, window_hi[d] - window_lo[d]);
  }

  BoxCountResult r;
  r.target = target;
  r.ambient_dim = D;
  for (int j = opts.coarse_level; j <= opts.fine_level; ++j) {
    const double eps = diam * std::pow(2.0, -j);
    // Cells per axis and the packed-key capacity guard (keys must fit 64 bits).
    std::vector<uint64_t> cells(static_cast<size_t>(D));
    long double capacity = 1.0L;
    for (int d = 0; d < D; ++d) {
      cells[static_cast<size_t>(d)] =
          static_cast<uint64_t>(std::ceil((window_hi[d] - window_lo[d]) / eps));
      cells[static_cast<size_t>(d)] = std::max<uint64_t>(1, cells[static_cast<size_t>(d)]);
      capacity *= static_cast<long double>(cells[static_cast<size_t>(d)]);
    }
    if (capacity > 9.0e18L)
      throw std::invalid_argument("box_dimension: scale ladder exceeds 64-bit cell indexing");

    std::unordered_set<uint64_t> occupied;
    occupied.reserve(cloud.size());
    for (size_t i = 0; i < cloud.size(); ++i) {
      uint64_t key = 0;
      bool inside = true;
      for (int d = 0; d < D; ++d) {
        const double x = cloud.at(i, d);
        if (x < window_lo[d] || x > window_hi[d]) {
          inside = false;
          break;
        }
        uint64_t idx = static_cast<uint64_t>((x - window_lo[d]) / eps);
        if (idx >= cells[static_cast<size_t>(d)]) idx = cells[static_cast<size_t>(d)] - 1;
        key = key * cells[static_cast<size_t>(d)] + idx;
      }
      if (inside) occupied.insert(key);
    }
    if (occupied.empty())
      throw std::runtime_error("box_dimension: no cloud points inside the window");
    r.scales.push_back(eps);
    r.counts.push_back(static_cast<long long>(occupied.size()));
  }
  return finish(std::move(r), opts);
}

BoxCountResult box_dimension(const PointCloud& cloud, const BoxCountOptions& opts,
                             const std::string& target) {
  const int D = cloud.dim;
  if (D < 1 || cloud.size() == 0) throw std::invalid_argument("box_dimension: empty cloud");
  std::vector<double> lo(static_cast<size_t>(D), std::numeric_limits<double>::infinity());
  std::vector<double> hi(static_cast<size_t>(D), -std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < cloud.size(); ++i)
    for (int d = 0; d < D; ++d) {
      lo[static_cast<size_t>(d)] = std::min(lo[static_cast<size_t>(d)], cloud.at(i, d));
      hi[static_cast<size_t>(d)] = std::max(hi[static_cast<size_t>(d)], cloud.at(i, d));
    }
  double diam = 0.0;
  for (int d = 0; d < D; ++d)
    diam = std::max(diam, hi[static_cast<size_t>(d)] - lo[static_cast<size_t>(d)]);
  if (diam == 0.0) diam = 1.0;  // single point: any window works, slope is 0
  for (int d = 0; d < D; ++d) {
    lo[static_cast<size_t>(d)] -= 0.01 * diam;
    hi[static_cast<size_t>(d)] += 0.01 * diam;
  }
  return box_dimension(cloud, lo, hi, opts, target);
}

BoxCountResult box_dimension_indicator(const std::function<bool(double, double)>& indicator,
                                       double x0, double x1, double y0, double y1,
                                       const BoxCountOptions& opts, const std::string& target) {
  validate_ladder(opts);
  if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("box_dimension: empty window");
  const double diam = std::max(x1 - x0, y1 - y0);
  BoxCountResult r;
  r.target = target;
  r.ambient_dim = 2;
  for (int j = opts.coarse_level; j <= opts.fine_level; ++j) {
    const double eps = diam * std::pow(2.0, -j);
    const long long mx = std::max<long long>(1, static_cast<long long>(std::ceil((x1 - x0) / eps)));
    const long long my = std::max<long long>(1, static_cast<long long>(std::ceil((y1 - y0) / eps)));
    long long count = 0;
    for (long long ix = 0; ix < mx; ++ix)
      for (long long iy = 0; iy < my; ++iy)
        if (indicator(x0 + (ix + 0.5) * eps, y0 + (iy + 0.5) * eps)) ++count;
    if (count == 0) throw std::runtime_error("box_dimension: indicator empty in the window");
    r.scales.push_back(eps);
    r.counts.push_back(count);
  }
  return finish(std::move(r), opts);
}

}  // namespace regal
