#ifndef SIEVELAB_PARALLEL_HPP
#define SIEVELAB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace sievelab {

/// Worker count: SIEVE_LAB_WORKERS when set to a positive integer, else the
/// requested value (at least 1).
inline int resolve_workers(int requested) {
    if (const char* env = std::getenv("SIEVE_LAB_WORKERS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return requested < 1 ? 1 : requested;
}

/// out[i] = fn(in[i]) computed on up to `workers` threads. Results land in
/// input order, so output does not depend on scheduling. The first
/// exception (by index) is rethrown after all workers stop.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, int workers, Fn fn) -> std::vector<decltype(fn(in.front()))> {
    using Out = decltype(fn(in.front()));
    std::vector<Out> out(in.size());
    std::vector<std::exception_ptr> errors(in.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < in.size(); i = next++) {
            try {
                out[i] = fn(in[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(workers < 1 ? 1 : workers, in.size());
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace sievelab

#endif  // SIEVELAB_PARALLEL_HPP
