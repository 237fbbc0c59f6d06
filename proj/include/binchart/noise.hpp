#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "binchart/rng.hpp"

namespace binchart {

// Centered error distributions, all symmetric about 0 so that an in-control
// observation is positive with probability exactly 1/2. `scale` is sigma for
// the gaussian and the standard scale parameter for laplace/cauchy. Jump
// heights are interpreted in raw scale units for every family.
struct ErrorDist {
    enum class Family { Gaussian, Laplace, Cauchy };

    Family family = Family::Gaussian;
    double scale = 1.0;

    void validate() const;

    double cdf(double x) const;
    double density_at_zero() const;

    // P(Y + m >= 0) for Y drawn from this distribution: p1 = 1 - F(-m).
    double shift_probability(double m) const;
};

ErrorDist::Family parse_family(const std::string& name);
std::string family_name(ErrorDist::Family family);

// Draws from an ErrorDist. Hot loops keep one sampler per run so the cached
// state of the underlying std distributions is reused.
class NoiseSampler {
public:
    explicit NoiseSampler(const ErrorDist& dist);

    double next(Rng& rng);

private:
    ErrorDist dist_;
    std::normal_distribution<double> normal_;
    std::cauchy_distribution<double> cauchy_;
};

// Single draw; convenience wrapper for non-hot paths.
double sample_error(const ErrorDist& dist, Rng& rng);

// First-order equivalent drift of a jump of height delta_m / sqrt(N):
// Delta = f(0) * delta_m, with f the error density.
double jump_to_delta(const ErrorDist& dist, double delta_m);

// Observation model: target + jump * 1(index >= change_index) + error.
// Indices are 0-based; change_index = 0 means every observation carries the
// shift, which is the simulation protocol for out-of-control run lengths.
struct ChangePointSpec {
    double target = 0.0;
    double jump = 0.0;
    long change_index = 0;
};

class ChangePointStream {
public:
    ChangePointStream(const ChangePointSpec& spec, const ErrorDist& dist)
        : spec_(spec), sampler_(dist) {}

    double next(Rng& rng) {
        const double mean =
            spec_.target + (index_ >= spec_.change_index ? spec_.jump : 0.0);
        ++index_;
        return mean + sampler_.next(rng);
    }

    long index() const { return index_; }

private:
    ChangePointSpec spec_;
    NoiseSampler sampler_;
    long index_ = 0;
};

// Local-alternative model for the rescaled theory: a horizon of N bits whose
// success probability moves from p0 to p1 = p0 + delta/sqrt(N) at the 1-based
// index floor(N * theta).
struct LocalAlternative {
    double p0 = 0.5;
    double delta = 0.0;
    double theta = 0.5;
    long horizon = 0;  // N

    void validate() const;

    double p1() const;
    long change_index() const;  // q = floor(N * theta)

    // Success probability of the i-th bit, i = 1..N.
    double success_prob(long i) const {
        return i >= change_index() ? p1() : p0;
    }
};

// One bit of the triangular array, i = 1..N.
inline Bit draw_bit(double success_prob, Rng& rng) {
    // 53-bit uniform in (0,1); never exactly 0 or 1.
    const double u =
        (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    return u < success_prob ? Bit{1} : Bit{0};
}

std::vector<Bit> gen_bernoulli_stream(const LocalAlternative& la, Rng& rng);

using Bit = std::uint8_t;

// Locally dependent image noise: eps_ij = h_ij * xi_ij where xi is an i.i.d.
// standard normal field and h_ij is a function of xi values inside the sliced
// neighborhood of pixel (i,j) — own column strictly below row j, adjacent
// columns within `radius` up to row j-1+radius. The pixel's own innovation is
// never part of that set, so sign(eps) has conditional success probability
// exactly 1/2 at every row: the binarized column stream is a martingale
// difference sequence plus the constant 1/2.
struct ImageNoiseModel {
    enum class Variance {
        Unit,            // h == 1: reduces to i.i.d. noise
        NeighborEnergy,  // h = sqrt(1 + mean of squared neighborhood values)
        Custom
    };

    int width = 0;
    int height = 0;
    int radius = 1;
    Variance variance = Variance::NeighborEnergy;
    std::function<double(const std::vector<double>&)> custom_h;

    void validate() const;
};

// The xi field is generated column-by-column from counter-based substreams of
// the root seed, so any consumer sees identical values for a given pixel
// regardless of which column is being analyzed and in which order.
std::vector<double> image_xi_column(const ImageNoiseModel& model,
                                    std::uint64_t root_seed, int column);

// Conditional scale h at (column, row) and the observation column itself.
double image_h_value(const ImageNoiseModel& model,
                     const std::vector<std::vector<double>>& xi_band,
                     int band_center, int row);

// eps_{column,row}, rows 0..height-1, analyzed bottom to top.
std::vector<double> image_column_stream(const ImageNoiseModel& model,
                                        std::uint64_t root_seed, int column);

}  // namespace binchart
