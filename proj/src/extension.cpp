#include "pffc/extension.hpp"

#include <algorithm>
#include <cmath>

#include "pffc/errors.hpp"

namespace pffc {

double mcshane_whitney_extend_1d(const std::function<double(double)>& f,
                                 double lo, double hi, double lipschitz,
                                 double x) {
  if (!(lo < hi)) throw SolverError("extension: need lo < hi");
  if (lipschitz < 0.0) throw SolverError("extension: negative Lipschitz");

  auto objective = [&](double z) { return f(z) + lipschitz * std::abs(x - z); };

  constexpr int kGrid = 1024;
  double best_z = lo;
  double best = objective(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double z = lo + (hi - lo) * i / kGrid;
    const double v = objective(z);
    if (v < best) {
      best = v;
      best_z = z;
    }
  }

  // golden-section refinement around the best grid cell (objective convex,
  // hence unimodal)
  const double cell = (hi - lo) / kGrid;
  double a = std::max(lo, best_z - cell);
  double b = std::min(hi, best_z + cell);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-13 * std::max(1.0, std::abs(best_z))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = objective(d);
    }
  }
  return std::min({best, fc, fd});
}

}  // namespace pffc
