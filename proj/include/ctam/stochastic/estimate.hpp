#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "ctam/stochastic/dynamics.hpp"

namespace ctam {

namespace detail {

// Regularized incomplete beta I_x(a, b) via the standard continued fraction.
inline double beta_cf(double a, double b, double x) {
    const int max_iter = 300;
    const double eps = 3e-14, fpmin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

inline double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

// Inverse of I_x(a, b) in x by bisection; monotone, so this is robust.
inline double inv_inc_beta(double a, double b, double p) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (reg_inc_beta(a, b, mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

// Exact (conservative) Clopper-Pearson interval for k successes in n trials
// at the given confidence level.
struct interval {
    double low = 0.0;
    double high = 1.0;
};

inline interval clopper_pearson(std::uint64_t k, std::uint64_t n, double confidence = 0.99) {
    if (n == 0) throw zero_trials("clopper_pearson: n = 0");
    double alpha = 1.0 - confidence;
    interval iv;
    double kk = static_cast<double>(k), nn = static_cast<double>(n);
    iv.low = (k == 0) ? 0.0 : detail::inv_inc_beta(kk, nn - kk + 1.0, alpha / 2.0);
    iv.high = (k == n) ? 1.0 : detail::inv_inc_beta(kk + 1.0, nn - kk, 1.0 - alpha / 2.0);
    return iv;
}

struct trial_row {
    std::uint64_t stream = 0;
    std::uint64_t steps = 0;
    trial_outcome outcome = trial_outcome::terminal;
    bool event = false;
};

struct estimate_result {
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t cap_exceeded = 0;
    std::vector<trial_row> rows; // one per trial, in stream order
};

using assembly_event = std::function<bool(const assembly&)>;

// Monte Carlo estimate of P[event holds on the terminal assembly], with a
// 99% Clopper-Pearson interval. Trial i runs on stream base.stream + i, so
// results are bit-identical whether trials run sequentially or in parallel.
// Cap-exceeded trials count as event-false (conservative) and are also
// reported separately.
inline estimate_result estimate_event_probability(const tile_system& sys,
                                                  const concentration_map& conc,
                                                  const assembly_event& event,
                                                  std::uint64_t trials, random_source base,
                                                  std::uint64_t step_cap,
                                                  unsigned threads = 0,
                                                  double confidence = 0.99) {
    if (trials == 0) throw zero_trials("estimate_event_probability: trials = 0");
    if (threads == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : hw;
    }
    if (threads > trials) threads = static_cast<unsigned>(trials);

    estimate_result res;
    res.trials = trials;
    res.rows.resize(trials);

    std::vector<double> weights = conc.pair_with(sys); // validate pairing upfront

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            random_source rng(base.seed(), base.stream() + i);
            sim_state st(sys, weights);
            std::uint64_t steps = 0;
            while (!st.frontier_empty() && steps < step_cap) {
                st.step(rng);
                ++steps;
            }
            trial_row& row = res.rows[i];
            row.stream = rng.stream();
            row.steps = steps;
            if (st.frontier_empty()) {
                row.outcome = trial_outcome::terminal;
                row.event = event(st.to_assembly());
            } else {
                row.outcome = trial_outcome::cap_exceeded;
                row.event = false;
            }
        }
    };

    if (threads <= 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t begin = t * chunk;
            std::uint64_t end = std::min<std::uint64_t>(begin + chunk, trials);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (const trial_row& row : res.rows) {
        if (row.event) ++res.successes;
        if (row.outcome == trial_outcome::cap_exceeded) ++res.cap_exceeded;
    }
    res.estimate = static_cast<double>(res.successes) / static_cast<double>(trials);
    interval iv = clopper_pearson(res.successes, trials, confidence);
    res.ci_low = iv.low;
    res.ci_high = iv.high;
    return res;
}

} // namespace ctam
