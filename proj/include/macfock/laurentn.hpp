#pragma once

#include <vector>

#include "macfock/qseries.hpp"

namespace macfock {

// Sparse Laurent polynomial in x_1..x_n with QSeries coefficients.
// Coefficients that are unknown-zero (empty below a finite cutoff) are kept,
// so precision information survives arithmetic.
class LaurentN {
  public:
    explicit LaurentN(int nvars = 1) : nvars_(nvars) {}
    static LaurentN constant(int nvars, const QSeries& c);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, QSeries>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const QSeries& c);
    QSeries coefficient(const std::vector<int>& exps) const;
    QSeries constant_term() const { return coefficient(std::vector<int>(static_cast<std::size_t>(nvars_), 0)); }

    LaurentN operator+(const LaurentN& o) const;
    LaurentN operator*(const LaurentN& o) const;
    LaurentN& operator+=(const LaurentN& o) { return *this = *this + o; }
    LaurentN& operator*=(const LaurentN& o) { return *this = *this * o; }

    LaurentN invert_vars() const;  // x_i -> 1/x_i

    // smallest coefficient cutoff over all terms (QSeries::kExact if all exact)
    int cutoff_floor() const;

  private:
    int nvars_;
    std::map<std::vector<int>, QSeries> terms_;

    friend LaurentN laurent_mul_serial(const LaurentN&, const LaurentN&);
    friend LaurentN laurent_mul_parallel(const LaurentN&, const LaurentN&);
};

// product kernels: the parallel one shards the left operand across threads
LaurentN laurent_mul_serial(const LaurentN& a, const LaurentN& b);
LaurentN laurent_mul_parallel(const LaurentN& a, const LaurentN& b);

}  // namespace macfock
