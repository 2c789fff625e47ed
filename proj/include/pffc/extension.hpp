#ifndef PFFC_EXTENSION_HPP_
#define PFFC_EXTENSION_HPP_

#include <functional>

namespace pffc {

// Lipschitz- and convexity-preserving extension of a 1-D convex function
// from [lo, hi] to the real line:
//   f~(x) = inf_{z in [lo, hi]} { f(z) + lipschitz * |x - z| }.
// The infimum of the convex integrand is located by a coarse grid followed
// by golden-section refinement; accurate to about 1e-9 for moderate
// Lipschitz constants.
double mcshane_whitney_extend_1d(const std::function<double(double)>& f,
                                 double lo, double hi, double lipschitz,
                                 double x);

}  // namespace pffc

#endif  // PFFC_EXTENSION_HPP_
