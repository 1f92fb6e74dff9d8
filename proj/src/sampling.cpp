#include "bergkern/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace bergkern::sampling {

namespace {

constexpr std::array<int, 16> kPrimes{2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * double(i % base);
        i /= base;
    }
    return r;
}

} // namespace

HaltonSequence::HaltonSequence(int dims, std::uint64_t seed) : dims_(dims) {
    if (dims < 1 || dims > int(kPrimes.size())) {
        throw DomainError("HaltonSequence: unsupported dimension count");
    }
    index_ = 1 + seed * 7919; // window offset per seed
}

std::vector<double> HaltonSequence::next() {
    std::vector<double> out(dims_);
    for (int k = 0; k < dims_; ++k) {
        out[k] = radical_inverse(index_, kPrimes[k]);
    }
    ++index_;
    return out;
}

ShellProductSampler::ShellProductSampler(std::vector<ShellSpec> blocks, std::uint64_t seed)
    : blocks_(std::move(blocks)),
      halton_([&] {
          int dims = 0;
          for (const auto& b : blocks_) {
              dims += b.ball_gauge ? 2 * b.cdim + 1 : 2 * b.cdim;
          }
          return dims;
      }(), seed),
      total_(0) {
    for (const auto& b : blocks_) {
        if (b.cdim < 1 || !(b.lo >= 0.0) || !(b.hi > b.lo)) {
            throw DomainError("ShellProductSampler: bad shell spec");
        }
        total_ += b.cdim;
    }
}

std::vector<cplx> ShellProductSampler::next() {
    const std::vector<double> u = halton_.next();
    std::vector<cplx> out;
    out.reserve(total_);
    std::size_t k = 0;
    for (const auto& b : blocks_) {
        if (!b.ball_gauge) {
            for (int c = 0; c < b.cdim; ++c) {
                const double r = b.lo + (b.hi - b.lo) * u[k++];
                const double phi = 2.0 * std::numbers::pi * u[k++];
                out.push_back(std::polar(r, phi));
            }
            continue;
        }
        // direction from Box-Muller pairs, radius linear across the shell
        std::vector<double> g(2 * b.cdim);
        for (int c = 0; c < b.cdim; ++c) {
            const double u1 = std::max(u[k++], 1e-300);
            const double u2 = u[k++];
            const double mag = std::sqrt(-2.0 * std::log(u1));
            g[2 * c] = mag * std::cos(2.0 * std::numbers::pi * u2);
            g[2 * c + 1] = mag * std::sin(2.0 * std::numbers::pi * u2);
        }
        double norm = 0.0;
        for (const double x : g) {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            norm = 1.0;
        }
        const double r = b.lo + (b.hi - b.lo) * u[k++];
        for (int c = 0; c < b.cdim; ++c) {
            out.emplace_back(r * g[2 * c] / norm, r * g[2 * c + 1] / norm);
        }
    }
    return out;
}

} // namespace bergkern::sampling
