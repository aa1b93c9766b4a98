#pragma once

// Deterministic work splitting: the index range is cut into one chunk per
// worker, each worker reduces its chunk locally, and the partials are merged
// in chunk order, so results never depend on the degree of parallelism.

#include <thread>
#include <vector>

namespace excseq {

template <class Body>
long long parallel_count(long long total, int jobs, Body&& body) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || total < 2) {
        long long acc = 0;
        for (long long i = 0; i < total; ++i) acc += body(i);
        return acc;
    }
    int workers = static_cast<int>(std::min<long long>(jobs, total));
    std::vector<long long> partial(static_cast<size_t>(workers), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w]() {
            long long lo = total * w / workers;
            long long hi = total * (w + 1) / workers;
            long long acc = 0;
            for (long long i = lo; i < hi; ++i) acc += body(i);
            partial[static_cast<size_t>(w)] = acc;
        });
    for (auto& t : threads) t.join();
    long long acc = 0;
    for (long long p : partial) acc += p;
    return acc;
}

// Pairwise-compatible chain counting over a catalog, split by first element.
// ok(a, b) must say whether b may follow a given that a precedes it.
template <class PairOk>
long long count_sequences_pairwise(int catalog_size, int k, PairOk&& ok, int jobs) {
    if (k == 0) return 1;
    auto count_from = [&](long long first) {
        std::vector<int> seq{static_cast<int>(first)};
        long long acc = 0;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(seq.size()) == k) {
                ++acc;
                return;
            }
            for (int cand = 0; cand < catalog_size; ++cand) {
                bool fits = true;
                for (int prev : seq)
                    if (!ok(prev, cand)) { fits = false; break; }
                if (!fits) continue;
                seq.push_back(cand);
                self(self);
                seq.pop_back();
            }
        };
        rec(rec);
        return acc;
    };
    return parallel_count(catalog_size, jobs, count_from);
}

}  // namespace excseq
