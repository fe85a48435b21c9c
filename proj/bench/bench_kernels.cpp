// Serial reference kernels against the fast / OpenMP versions.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "canalg/kernels.hpp"
#include "canalg/zeroset.hpp"

using namespace canalg;

namespace {

double time_of(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* what, const std::string& input, double serial, double fast, bool agree) {
    std::printf("%-14s %-22s %10.4f %10.4f %8.1fx  %s\n", what, input.c_str(), serial, fast, serial / fast,
                agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-14s %-22s %10s %10s %9s\n", "kernel", "input", "serial s", "fast s", "speedup");

    for (auto [m, s] : {std::pair{3, 500L}, {7, 1000L}, {7, 2000L}}) {
        std::int64_t a = 0, b = 0;
        const double ts = time_of([&] { a = kernels::arm_min_reference(m, s); });
        const double tf = time_of([&] { b = kernels::arm_min(m, s); });
        row("arm_min", "m=" + std::to_string(m) + " s=" + std::to_string(s), ts, tf, a == b);
    }

    for (auto [arms, p] : {std::pair{std::vector<int>{2, 3, 7}, 150L}, {{5, 5, 5, 5, 5}, 200L}, {{2, 3, 7}, 300L}}) {
        const CanonicalType t(arms);
        std::vector<std::int64_t> a, b;
        const double ts = time_of([&] { a = kernels::slice_minima_serial(t, p); });
        const double tf = time_of([&] { b = kernels::slice_minima_parallel(t, p); });
        row("slice_minima", t.str() + " p=" + std::to_string(p), ts, tf, a == b);
    }

    for (auto [arms, p] : {std::pair{std::vector<int>{2, 2, 2}, 5L}, {{2, 2, 3}, 4L}}) {
        const CanonicalType t(arms);
        std::size_t a = 0, b = 0;
        const double ts = time_of([&] { for_each_Zp(t, p, [&](const ZTriple&) { return ++a, true; }, Schedule::Serial); });
        const double tf = time_of([&] { for_each_Zp(t, p, [&](const ZTriple&) { return ++b, true; }, Schedule::Parallel); });
        row("Z_p", t.str() + " p=" + std::to_string(p), ts, tf, a == b);
    }
}
