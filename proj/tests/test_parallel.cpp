#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <numeric>

#include "csknot/parallel.hpp"

using namespace csknot;

TEST_CASE("parallel_for covers every index exactly once") {
    for (int threads : {1, 0, 4}) {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i] += 1; });
        CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("parallel_for with per-slot writes matches the serial reference") {
    std::vector<long> serial(500), parallel(500);
    const auto work = [](std::size_t i) { return static_cast<long>(i * i % 97); };
    parallel_for(serial.size(), 1, [&](std::size_t i) { serial[i] = work(i); });
    parallel_for(parallel.size(), 0, [&](std::size_t i) { parallel[i] = work(i); });
    CHECK(serial == parallel);
}

TEST_CASE("zero and one item counts") {
    std::atomic<int> n{0};
    parallel_for(0, 0, [&](std::size_t) { ++n; });
    CHECK(n == 0);
    parallel_for(1, 0, [&](std::size_t) { ++n; });
    CHECK(n == 1);
}
