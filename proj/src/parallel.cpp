#include "macfock/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>

#ifdef MACFOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace macfock {

bool parallel_enabled() {
#ifdef MACFOCK_HAVE_OPENMP
    if (std::getenv("MACFOCK_SERIAL")) return false;
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (!parallel_enabled() || n < 2) {
        serial_for(n, fn);
        return;
    }
#ifdef MACFOCK_HAVE_OPENMP
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
#else
    serial_for(n, fn);
#endif
}

}  // namespace macfock
