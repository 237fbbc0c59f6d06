#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binchart {

using Bit = std::uint8_t;

enum class Sided { TwoSided, UpperOnly };

enum class Signal { InControl, UpperSignal, LowerSignal };

struct ChartLimits {
    double ucl = 0.0;
    double lcl = 0.0;
};

// Thresholds an observation at zero. Ties at exactly zero map to 1; for
// continuous error distributions this event has probability zero, so the
// in-control success probability stays 1/2. Non-finite input is rejected.
Bit binarize(double y);

// Control limits M*p0 +- k*sqrt(M*p0*(1-p0)) for the count of ones in a
// window of length M. For p0 = 1/2 the limits are symmetric about M/2.
ChartLimits buffer_limits(int window_len, double p0, double k);

// Same formula with the block size N in place of M.
ChartLimits classic_limits(int sample_size, double p0, double k);

// Signals use strict inequalities: an alarm fires when the integer count
// leaves the open interval (lcl, ucl). Since the count is integer and the
// limits are generically non-integer this is unambiguous; when k*sqrt(M/4)
// happens to be an integer we keep the strict rule.
inline Signal evaluate_count(int count, const ChartLimits& limits, Sided sided) {
    if (static_cast<double>(count) > limits.ucl) return Signal::UpperSignal;
    if (sided == Sided::TwoSided && static_cast<double>(count) < limits.lcl)
        return Signal::LowerSignal;
    return Signal::InControl;
}

// Moving-window binary chart. The window holds the M most recent binarized
// observations; the running count is updated incrementally on each step and
// checked against fixed binomial limits.
//
// Timing convention: the check at step n uses the window *including* the
// observation that just arrived, and run lengths count observations consumed
// after initialization (1-based). No check is made on the pre-run content
// itself.
class BufferChart {
public:
    BufferChart(int window_len, double k, double p0, Sided sided,
                std::span<const Bit> pre_run);

    struct StepResult {
        int count;
        Signal signal;
    };

    // Pushes z, evicts the oldest bit, and evaluates the updated window.
    StepResult step(Bit z) {
        const Bit evicted = ring_[pos_];
        ring_[pos_] = z;
        pos_ = (pos_ + 1 == ring_.size()) ? 0 : pos_ + 1;
        count_ += static_cast<int>(z) - static_cast<int>(evicted);
        return {count_, evaluate_count(count_, limits_, sided_)};
    }

    int window_len() const { return static_cast<int>(ring_.size()); }
    int count() const { return count_; }
    double base_prob() const { return p0_; }
    double threshold() const { return k_; }
    Sided sided() const { return sided_; }
    const ChartLimits& limits() const { return limits_; }

    // Window content oldest to newest; used by tests to recount.
    std::vector<Bit> window() const;

private:
    std::vector<Bit> ring_;   // circular, pos_ points at the oldest bit
    std::size_t pos_ = 0;
    int count_ = 0;
    double k_;
    double p0_;
    Sided sided_;
    ChartLimits limits_;
};

// Classic block chart: counts ones over disjoint blocks of N observations
// and checks the count only when a block completes.
class ClassicNpChart {
public:
    ClassicNpChart(int sample_size, double k, double p0, Sided sided);

    struct StepResult {
        bool block_complete;
        int count;      // valid when block_complete
        Signal signal;  // InControl while a block is filling
    };

    StepResult step(Bit z) {
        acc_ += z;
        ++filled_;
        if (filled_ < sample_size_) return {false, acc_, Signal::InControl};
        StepResult r{true, acc_, evaluate_count(acc_, limits_, sided_)};
        acc_ = 0;
        filled_ = 0;
        return r;
    }

    int sample_size() const { return sample_size_; }
    const ChartLimits& limits() const { return limits_; }

private:
    int sample_size_;
    int acc_ = 0;
    int filled_ = 0;
    Sided sided_;
    ChartLimits limits_;
};

struct RunResult {
    long steps = 0;      // 1-based index of the first signaling observation
    bool censored = false;
    Signal signal = Signal::InControl;
};

// Feeds observations from `next_obs` until the chart signals or max_steps
// observations have been consumed.
template <typename NextObs>
RunResult run_length(BufferChart& chart, NextObs&& next_obs, long max_steps);

template <typename NextObs>
RunResult classic_run_length(ClassicNpChart& chart, NextObs&& next_obs, long max_steps);

void require_positive_max_steps(long max_steps);

template <typename NextObs>
RunResult run_length(BufferChart& chart, NextObs&& next_obs, long max_steps) {
    require_positive_max_steps(max_steps);
    for (long n = 1; n <= max_steps; ++n) {
        const auto r = chart.step(binarize(next_obs()));
        if (r.signal != Signal::InControl) return {n, false, r.signal};
    }
    return {max_steps, true, Signal::InControl};
}

template <typename NextObs>
RunResult classic_run_length(ClassicNpChart& chart, NextObs&& next_obs, long max_steps) {
    require_positive_max_steps(max_steps);
    for (long n = 1; n <= max_steps; ++n) {
        const auto r = chart.step(binarize(next_obs()));
        if (r.block_complete && r.signal != Signal::InControl)
            return {n, false, r.signal};
    }
    return {max_steps, true, Signal::InControl};
}

}  // namespace binchart
