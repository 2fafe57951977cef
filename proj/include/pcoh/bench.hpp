#pragma once

#include "pcoh/cohomology.hpp"
#include "pcoh/random_poset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pcoh {

/// Worker count: hardware concurrency, capped by POSET_COHOM_THREADS when set
/// to a positive integer.
inline std::size_t bench_thread_cap() {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POSET_COHOM_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) hw = std::min<std::size_t>(hw, v);
    }
    return hw;
}

struct BenchOptions {
    std::size_t count = 100;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::rationals();
};

struct BenchInstance {
    std::uint64_t seed = 0;
    double p = 0.0;
    double seconds = 0.0;
    HHTable hh;
};

struct BenchResult {
    std::vector<BenchInstance> instances;
    std::size_t threads = 1;
    double max_seconds = 0.0;
    double mean_seconds = 0.0;
    double median_seconds = 0.0;
    std::size_t slowest = 0;  // index into instances
};

/// Hochschild timing sweep: `count` posets on n points with per-instance
/// density and seed drawn from one master stream, so results are reproducible
/// regardless of thread schedule. Timed per instance: the full Hochschild
/// dimension computation on the already-built poset.
inline BenchResult run_bench(const BenchOptions& opt) {
    std::mt19937_64 master(opt.seed);
    std::vector<std::pair<double, std::uint64_t>> plan(opt.count);
    for (auto& [p, s] : plan) {
        p = std::ldexp(static_cast<double>(master() >> 11), -53);
        s = master();
    }

    BenchResult res;
    res.instances.assign(opt.count, {});
    res.threads = std::max<std::size_t>(1, std::min(bench_thread_cap(), std::max<std::size_t>(1, opt.count)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= opt.count) return;
                auto poset = random_poset_document(opt.n, plan[i].first, plan[i].second).to_poset();
                const auto t0 = std::chrono::steady_clock::now();
                auto hh = hochschild_dims(poset, opt.field);
                const auto t1 = std::chrono::steady_clock::now();
                res.instances[i] = {plan[i].second, plan[i].first,
                                    std::chrono::duration<double>(t1 - t0).count(), std::move(hh)};
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < res.threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    if (!res.instances.empty()) {
        std::vector<double> times;
        times.reserve(res.instances.size());
        double total = 0.0;
        for (std::size_t i = 0; i < res.instances.size(); ++i) {
            const double s = res.instances[i].seconds;
            times.push_back(s);
            total += s;
            if (s > res.max_seconds) {
                res.max_seconds = s;
                res.slowest = i;
            }
        }
        res.mean_seconds = total / static_cast<double>(times.size());
        std::sort(times.begin(), times.end());
        const std::size_t m = times.size() / 2;
        res.median_seconds =
            times.size() % 2 == 1 ? times[m] : 0.5 * (times[m - 1] + times[m]);
    }
    return res;
}

}  // namespace pcoh
