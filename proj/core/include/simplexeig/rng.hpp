#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace simplexeig {

// splitmix64 stream with Box-Muller gaussians. Hand-rolled so that seeded
// checks produce the same bytes on every platform, which the deterministic
// output contract requires.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian();

    // uniform direction on the unit sphere in R^n
    Eigen::VectorXd unit_vector(int n);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace simplexeig
