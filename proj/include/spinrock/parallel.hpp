#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

/* Minimal index-parallel loop used for independent matrix entries. */

namespace spinrock {

template <class Fn>
void parallel_for(int jobs, int n, Fn&& fn)
{
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int workers = std::min(jobs, n);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace spinrock
