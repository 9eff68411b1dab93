#include "macfock/laurentn.hpp"

#include <stdexcept>

#ifdef MACFOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace macfock {

LaurentN LaurentN::constant(int nvars, const QSeries& c) {
    LaurentN r(nvars);
    r.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return r;
}

void LaurentN::add_term(const std::vector<int>& exps, const QSeries& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("LaurentN: arity mismatch");
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) it->second += c;
    if (it->second.known_zero()) terms_.erase(it);
}

QSeries LaurentN::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? QSeries() : it->second;
}

LaurentN LaurentN::operator+(const LaurentN& o) const {
    LaurentN r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

namespace {

LaurentN mul_range(const LaurentN& a, const LaurentN& b, std::size_t lo, std::size_t hi) {
    LaurentN r(a.nvars());
    std::vector<int> key(static_cast<std::size_t>(a.nvars()));
    auto it = a.terms().begin();
    std::advance(it, static_cast<long>(lo));
    for (std::size_t idx = lo; idx < hi; ++idx, ++it) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t v = 0; v < key.size(); ++v) key[v] = it->first[v] + eb[v];
            r.add_term(key, it->second * cb);
        }
    }
    return r;
}

}  // namespace

LaurentN laurent_mul_serial(const LaurentN& a, const LaurentN& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("LaurentN: arity mismatch");
    return mul_range(a, b, 0, a.terms().size());
}

LaurentN laurent_mul_parallel(const LaurentN& a, const LaurentN& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("LaurentN: arity mismatch");
#ifdef MACFOCK_HAVE_OPENMP
    const std::size_t n = a.terms().size();
    int nthreads = omp_get_max_threads();
    if (nthreads <= 1 || n < 2) return laurent_mul_serial(a, b);
    std::vector<LaurentN> partial(static_cast<std::size_t>(nthreads), LaurentN(a.nvars()));
    std::exception_ptr error;
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        std::size_t lo = n * static_cast<std::size_t>(tid) / static_cast<std::size_t>(nthreads);
        std::size_t hi = n * (static_cast<std::size_t>(tid) + 1) / static_cast<std::size_t>(nthreads);
        try {
            if (lo < hi) partial[static_cast<std::size_t>(tid)] = mul_range(a, b, lo, hi);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    LaurentN r(a.nvars());
    for (auto& p : partial) r += p;
    return r;
#else
    return laurent_mul_serial(a, b);
#endif
}

LaurentN LaurentN::operator*(const LaurentN& o) const {
    if (terms_.size() * o.terms_.size() >= 4096 && terms_.size() >= 16)
        return laurent_mul_parallel(*this, o);
    return laurent_mul_serial(*this, o);
}

LaurentN LaurentN::invert_vars() const {
    LaurentN r(nvars_);
    std::vector<int> key(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t v = 0; v < key.size(); ++v) key[v] = -e[v];
        r.add_term(key, c);
    }
    return r;
}

int LaurentN::cutoff_floor() const {
    int f = QSeries::kExact;
    for (const auto& [e, c] : terms_) f = std::min(f, c.cutoff());
    return f;
}

}  // namespace macfock
