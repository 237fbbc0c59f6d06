#include "binchart/chart.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace binchart {

Bit binarize(double y) {
    if (!std::isfinite(y))
        throw std::invalid_argument("binarize: observation is not finite");
    return y >= 0.0 ? Bit{1} : Bit{0};
}

namespace {

void check_limit_params(int len, double p0, double k, const char* what) {
    if (len < 1)
        throw std::invalid_argument(std::string(what) + ": window/sample size must be >= 1");
    if (!(p0 > 0.0 && p0 < 1.0))
        throw std::invalid_argument(std::string(what) + ": p0 must lie in (0,1)");
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::invalid_argument(std::string(what) + ": k must be finite and >= 0");
}

ChartLimits make_limits(int len, double p0, double k) {
    const double center = len * p0;
    const double spread = k * std::sqrt(len * p0 * (1.0 - p0));
    return {center + spread, center - spread};
}

}  // namespace

ChartLimits buffer_limits(int window_len, double p0, double k) {
    check_limit_params(window_len, p0, k, "buffer_limits");
    return make_limits(window_len, p0, k);
}

ChartLimits classic_limits(int sample_size, double p0, double k) {
    check_limit_params(sample_size, p0, k, "classic_limits");
    return make_limits(sample_size, p0, k);
}

BufferChart::BufferChart(int window_len, double k, double p0, Sided sided,
                         std::span<const Bit> pre_run)
    : k_(k), p0_(p0), sided_(sided), limits_(buffer_limits(window_len, p0, k)) {
    if (static_cast<int>(pre_run.size()) != window_len)
        throw std::invalid_argument("BufferChart: pre_run length " +
                                    std::to_string(pre_run.size()) +
                                    " does not match window length " +
                                    std::to_string(window_len));
    ring_.assign(pre_run.begin(), pre_run.end());
    for (Bit b : ring_) {
        if (b > 1) throw std::invalid_argument("BufferChart: pre_run bits must be 0 or 1");
        count_ += b;
    }
}

std::vector<Bit> BufferChart::window() const {
    std::vector<Bit> out;
    out.reserve(ring_.size());
    for (std::size_t i = 0; i < ring_.size(); ++i)
        out.push_back(ring_[(pos_ + i) % ring_.size()]);
    return out;
}

ClassicNpChart::ClassicNpChart(int sample_size, double k, double p0, Sided sided)
    : sample_size_(sample_size), sided_(sided),
      limits_(classic_limits(sample_size, p0, k)) {}

void require_positive_max_steps(long max_steps) {
    if (max_steps <= 0)
        throw std::invalid_argument("run_length: max_steps must be positive");
}

}  // namespace binchart
