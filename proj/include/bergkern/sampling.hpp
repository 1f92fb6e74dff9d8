#ifndef BERGKERN_SAMPLING_HPP
#define BERGKERN_SAMPLING_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "bergkern/errors.hpp"

namespace bergkern::sampling {

using cplx = std::complex<double>;

/// Deterministic Halton sequence, one prime base per axis. The seed offsets
/// the start index, so identical seeds replay the identical point stream.
class HaltonSequence {
public:
    HaltonSequence(int dims, std::uint64_t seed);

    std::vector<double> next();

private:
    int dims_;
    std::uint64_t index_;
};

/// One block of complex coordinates drawn from a gauge shell lo <= g <= hi.
/// With ball_gauge the block is a spherical shell in the L2 gauge; otherwise
/// every coordinate is drawn independently from the disc shell (the natural
/// shell of the polydisc gauge).
struct ShellSpec {
    double lo;
    double hi;
    int cdim;
    bool ball_gauge = true;
};

/// Product sampler over shell blocks; yields points in C^(sum cdim).
class ShellProductSampler {
public:
    ShellProductSampler(std::vector<ShellSpec> blocks, std::uint64_t seed);

    std::vector<cplx> next();

    int complex_dim() const { return total_; }

private:
    std::vector<ShellSpec> blocks_;
    HaltonSequence halton_;
    int total_;
};

} // namespace bergkern::sampling

#endif
