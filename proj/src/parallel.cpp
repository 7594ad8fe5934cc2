#include "weylstat/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weylstat {

void parallel_chunks(int num_chunks, int threads, const std::function<void(int)>& fn) {
    if (threads < 1) threads = 1;
    if (threads > 64) threads = 64;
    if (num_chunks <= 0) return;

    if (threads == 1) {
        for (int c = 0; c < num_chunks; ++c) fn(c);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= num_chunks) return;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const int nw = std::min(threads, num_chunks);
    pool.reserve(static_cast<size_t>(nw));
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace weylstat
