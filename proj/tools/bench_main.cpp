#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "sgp/kernels.hpp"
#include "sgp/membership.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/words.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Best of three runs, microseconds.
long long time_best(const std::function<void()>& fn) {
    long long best = -1;
    for (int run = 0; run < 3; ++run) {
        auto t0 = Clock::now();
        fn();
        auto t1 = Clock::now();
        long long us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        if (best < 0 || us < best) best = us;
    }
    return best;
}

void report(const std::string& name, int order, long long serial_us, long long parallel_us) {
    double speedup = parallel_us > 0 ? static_cast<double>(serial_us) / parallel_us : 0.0;
    std::cout << std::left << std::setw(26) << name << " n=" << std::setw(5) << order
              << " serial " << std::setw(10) << serial_us << " us   parallel " << std::setw(10)
              << parallel_us << " us   speedup " << std::fixed << std::setprecision(2)
              << speedup << "x\n";
}

}  // namespace

int main() {
    sgp::Semigroup a2 = sgp::build_named("A2");
    sgp::Semigroup c2 = sgp::build_named("C2");
    std::vector<sgp::Semigroup> fixtures;
    fixtures.push_back(sgp::direct_product(a2, sgp::direct_product(a2, c2)));  // order 50
    fixtures.push_back(sgp::direct_product(fixtures[0], c2));                  // order 100
    fixtures.push_back(sgp::direct_product(fixtures[1], c2));                  // order 200

    std::cout << "associativity scan, first violation (none expected)\n";
    for (const sgp::Semigroup& s : fixtures) {
        volatile bool sink = false;
        long long serial_us = time_best(
            [&] { sink = sgp::associativity_violation_serial(s.table, s.n).has_value(); });
        long long parallel_us = time_best(
            [&] { sink = sgp::associativity_violation_parallel(s.table, s.n).has_value(); });
        (void)sink;
        report("associativity", s.n, serial_us, parallel_us);
    }

    std::cout << "\nidentity scan, xyxzx = xzxyx (holds on these fixtures)\n";
    std::vector<int> lhs = {0, 1, 0, 2, 0};
    std::vector<int> rhs = {0, 2, 0, 1, 0};
    for (const sgp::Semigroup& s : fixtures) {
        volatile bool sink = false;
        long long serial_us = time_best(
            [&] { sink = sgp::identity_violation_serial(s, lhs, rhs, 3).has_value(); });
        long long parallel_us = time_best(
            [&] { sink = sgp::identity_violation_parallel(s, lhs, rhs, 3).has_value(); });
        (void)sink;
        report("identity xyxzx=xzxyx", s.n, serial_us, parallel_us);
    }

    std::cout << "\nfull membership pipeline (dispatching kernels)\n";
    for (const sgp::Semigroup& s : fixtures) {
        long long us = time_best([&] { (void)sgp::membership_ac2(s); });
        std::cout << "membership n=" << s.n << ": " << us << " us\n";
    }
    return 0;
}
