#include "walkmom/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace walkmom {

unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_chunks(std::int64_t count, unsigned threads,
                     const std::function<void(unsigned, std::int64_t, std::int64_t)>& fn) {
    if (count <= 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::int64_t>(effective_threads(threads), count));
    if (workers == 1) {
        fn(0, 0, count);
        return;
    }
    const std::int64_t base = count / workers;
    const std::int64_t extra = count % workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::int64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t end = begin + base + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace walkmom
