#pragma once

#include <string>
#include <vector>

#include "macfock/poly.hpp"

namespace macfock {

// Weakly decreasing sequence of positive integers.  Partitions are ordered by
// size first, then reverse-lexicographically within a degree ((3) before (2,1)
// before (1,1,1)); this is the canonical order used for serialization,
// Gram-Schmidt sweeps, and all deterministic iteration.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s);  // "2,1"; empty string -> []

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;  // 1-based, 0 beyond the length

    Partition conjugate() const;

    // box statistics, boxes are (row i, column j), both 1-based
    bool has_cell(int i, int j) const;
    int arm(int i, int j) const;
    int leg(int i, int j) const;

    int nstat() const;         // n(lambda) = sum (i-1) lambda_i
    Int zcent() const;         // order of the S_n centralizer of cycle type lambda
    long sum_squares() const;  // sum lambda_i^2

    bool contains(const Partition& mu) const;  // mu subset of this diagram
    // dominance within a fixed degree: true iff |*this|=|o| and *this <= o
    bool dominated_by(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;  // canonical order (degree, then revlex)

    std::string str() const;  // "[2,1]", "[]"

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n in the canonical reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

// All partitions of size 0..n, degree-major in the canonical order.
std::vector<Partition> partitions_up_to(int n);

}  // namespace macfock
