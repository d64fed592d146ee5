// Timing of the closed-form counting against the brute-force enumeration,
// and of the comparison sweep with one worker versus all of them.

#include "comparison.hpp"
#include "hex_oracle.hpp"
#include "hex_packing.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <random>

using namespace swarm;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_counting(int samples) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u_dist(0.5, 10.0);
    std::uniform_real_distribution<double> th_dist(0.0, 1.0471975);
    std::uniform_real_distribution<double> t_dist(1.0, 50.0);

    long long sink = 0;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng_a = rng;
    for (int i = 0; i < samples; ++i) {
        const SwarmParams p(1, 1, u_dist(rng_a));
        const hex::HexConfig cfg(th_dist(rng_a));
        sink += hex::count_total(t_dist(rng_a), cfg, p);
    }
    const double closed = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng_b = rng;
    for (int i = 0; i < samples; ++i) {
        const SwarmParams p(1, 1, u_dist(rng_b));
        const hex::HexConfig cfg(th_dist(rng_b));
        sink -= oracle::count(t_dist(rng_b), cfg, p);
    }
    const double brute = seconds_since(t0);

    std::printf("hex counting, %d configs: closed form %.3fs, enumeration %.3fs (x%.1f)%s\n",
                samples, closed, brute, brute / closed,
                sink == 0 ? " [counts agree]" : " [COUNTS DIFFER]");
}

void bench_sweep() {
    const compare::SweepSpec spec{0.5, 7.0, 24, 1e4, 1.0, 1.0, 100};
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    auto t0 = std::chrono::steady_clock::now();
    auto serial = compare::sweep(spec);
    const double one = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    t0 = std::chrono::steady_clock::now();
    auto parallel = compare::sweep(spec);
    const double many = seconds_since(t0);

    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].f_h_at_T == parallel[i].f_h_at_T && serial[i].f_p == parallel[i].f_p;
    std::printf("comparison sweep, %d points: 1 thread %.3fs, all threads %.3fs (x%.2f), %s\n",
                spec.points, one, many, one / many, same ? "identical output" : "OUTPUT DIFFERS");
}

}  // namespace

int main() {
    bench_counting(300);
    bench_sweep();
    return 0;
}
