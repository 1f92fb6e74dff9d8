#ifndef BERGKERN_FD_HPP
#define BERGKERN_FD_HPP

#include <complex>
#include <functional>

namespace bergkern::fd {

using cplx = std::complex<double>;
using Field1 = std::function<double(cplx)>;

/// d^2 f / dz dzbar = Laplacian/4 via the 4-real-direction central stencil.
inline double wirtinger_mixed_1d(const Field1& f, cplx z, double h) {
    const cplx ih(0.0, h);
    return (f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z)) / (4.0 * h * h);
}

/// df/dz = (d/dx - i d/dy) f / 2, central differences.
inline cplx wirtinger_first_1d(const Field1& f, cplx z, double h) {
    const cplx ih(0.0, h);
    const double fx = (f(z + h) - f(z - h)) / (2.0 * h);
    const double fy = (f(z + ih) - f(z - ih)) / (2.0 * h);
    return 0.5 * cplx(fx, -fy);
}

} // namespace bergkern::fd

#endif
