#pragma once

#include <map>
#include <mutex>
#include <string>

#include "macfock/symfunc.hpp"

namespace macfock {

struct MacdonaldRecord {
    Partition mu;
    SymFunc P;  // monic orthogonal Macdonald polynomial (power-sum basis)
    SymFunc J;  // integral form
    SymFunc H;  // modified polynomial
    FieldElem norm_qt;    // (P,P)_{q,t}
    FieldElem norm_herm;  // <H,H>
};

// Macdonald polynomial table with an optional on-disk cache (one structured
// text file per degree, versioned; a mismatched header recomputes).
class Macdonald {
  public:
    static constexpr const char* kCacheVersion = "macfock-cache v1";
    static constexpr const char* kMonomialOrder = "grlex-u>v>m";

    explicit Macdonald(std::string cache_dir = "");

    const MacdonaldRecord& record(const Partition& mu);
    SymFunc P(const Partition& mu) { return record(mu).P; }
    SymFunc J(const Partition& mu) { return record(mu).J; }
    SymFunc H(const Partition& mu) { return record(mu).H; }
    FieldElem norm_qt(const Partition& mu) { return record(mu).norm_qt; }
    FieldElem norm_herm(const Partition& mu) { return record(mu).norm_herm; }

    // builds (or loads) every record of degree <= d
    void ensure_degree(int d);

    // expansion of f in the H basis via c_la = <H_la, f> / <H_la, H_la>
    std::map<Partition, FieldElem> to_H_basis(const SymFunc& f);
    SymFunc from_H_basis(const std::map<Partition, FieldElem>& coeffs);

    // T H_la = (q^{n(la')} t^{n(la)})^power H_la, extended diagonally
    SymFunc apply_T(const SymFunc& f, int power = 1);
    static FieldElem t_eigenvalue(const Partition& la, int power = 1);

    // interpolation polynomial H*_mu = T^-1 exp(sum (-1)^{n+1} d/dp_n) T H_mu
    SymFunc interpolation_Hstar(const Partition& mu);

    // whether H*_mu vanishes at the negated ideal point of la
    bool verify_vanishing(const Partition& mu, const Partition& la);
    FieldElem hstar_value(const Partition& mu, const Partition& la);

    // Fourier pairing (f, H_mu) = f(-x_mu) H_mu(-x_empty)
    FieldElem fourier_pair(const SymFunc& f, const Partition& mu);

    const std::string& cache_dir() const { return cache_dir_; }

  private:
    void build_degree(int d);
    bool load_degree(int d);
    void save_degree(int d) const;
    std::string cache_file(int d) const;

    std::string cache_dir_;
    std::map<Partition, MacdonaldRecord> records_;
    std::map<int, bool> degree_done_;
    mutable std::recursive_mutex mutex_;
};

}  // namespace macfock
