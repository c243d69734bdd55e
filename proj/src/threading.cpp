#include "dnnclust/threading.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dnnclust {

int default_thread_count() {
    const char* env = std::getenv("DNNCLUST_THREADS");
    if (!env) return 1;
    try {
        int v = std::stoi(env);
        return v >= 1 ? v : 1;
    } catch (...) {
        return 1;
    }
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (threads <= 0) threads = default_thread_count();
    auto t = static_cast<std::size_t>(threads);
    if (t > n) t = n == 0 ? 1 : n;
    if (t <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(t);
    std::size_t chunk = (n + t - 1) / t;
    for (std::size_t w = 0; w < t; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        workers.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : workers) th.join();
}

} // namespace dnnclust
