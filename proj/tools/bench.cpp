// Times each OpenMP kernel against its serial reference and checks that the
// two agree bit for bit, which is the determinism contract: fixed block
// boundaries reduced in a fixed order, so thread count never changes output.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polylab/equidist.hpp"
#include "polylab/factorcount.hpp"
#include "polylab/intpoly.hpp"

using namespace polylab;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%-5.2f %s\n", name.c_str(), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP off)\n");
#endif
    std::printf("%-28s %13s %13s   %-6s %s\n", "kernel", "serial", "parallel", "ratio",
                "outputs");
    bool all_match = true;

    {
        const IntPoly p = IntPoly::parse("1,0,0,0,-1");  // x^4 - 1
        const WeightScheme w(15.0);
        auto t0 = Clock::now();
        const FactorEstimate a = ref::weighted_root_sum_exact(p, w);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const FactorEstimate b = weighted_root_sum_exact(p, w);
        const double tp = ms_since(t0);
        const bool match = a.value == b.value;
        all_match &= match;
        row("window-sum exact X=15", ts, tp, match);
    }

    {
        WalkSpec w{Prime(31), 3, {}};
        for (uint64_t i = 0; i < 22; ++i) w.exponents.push_back(i);
        auto t0 = Clock::now();
        const WalkDistribution a = ref::walk_distribution_bruteforce(w);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const WalkDistribution b = walk_distribution_bruteforce(w);
        const double tp = ms_since(t0);
        bool match = a.prob.size() == b.prob.size();
        for (size_t i = 0; match && i < a.prob.size(); ++i) match = a.prob[i] == b.prob[i];
        all_match &= match;
        row("walk bruteforce q=31 n=22", ts, tp, match);
    }

    {
        const IntPoly p = IntPoly::parse("-1,1");  // x - 1
        const WeightScheme w(25.0);
        const uint64_t n = 2'000'000;
#ifdef _OPENMP
        const int save = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        auto t0 = Clock::now();
        const FactorEstimate a = weighted_root_sum_mc(p, w, n, 7);
        const double ts = ms_since(t0);
#ifdef _OPENMP
        omp_set_num_threads(save);
#endif
        t0 = Clock::now();
        const FactorEstimate b = weighted_root_sum_mc(p, w, n, 7);
        const double tp = ms_since(t0);
        const bool match = a.value == b.value && a.std_error == b.std_error;
        all_match &= match;
        row("window-sum mc X=25 n=2e6", ts, tp, match);
    }

    std::printf("%s\n", all_match ? "all kernels agree with their references"
                                  : "kernel disagreement detected");
    return all_match ? 0 : 1;
}
