#include "macfock/macdonald.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "macfock/basis.hpp"
#include "macfock/localization.hpp"
#include "macfock/parallel.hpp"

namespace macfock {

Macdonald::Macdonald(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

const MacdonaldRecord& Macdonald::record(const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    ensure_degree(mu.size());
    return records_.at(mu);
}

void Macdonald::ensure_degree(int d) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    for (int k = 0; k <= d; ++k) {
        if (degree_done_.count(k)) continue;
        if (!load_degree(k)) {
            build_degree(k);
            if (!cache_dir_.empty()) save_degree(k);
        }
        degree_done_[k] = true;
    }
}

void Macdonald::build_degree(int d) {
    auto parts = partitions_of(d);
    std::size_t n = parts.size();

    // Gram-Schmidt in the monomial basis, least dominant partition first;
    // the canonical order refines dominance, so sweeping from the back
    // orthogonalizes each m_mu against every previously built P_nu.
    std::vector<SymFunc> mbasis(n), P(n);
    std::vector<FieldElem> norms(n);
    for (std::size_t i = 0; i < n; ++i) mbasis[i] = monomial_sym(parts[i]);
    for (std::size_t ii = n; ii-- > 0;) {
        SymFunc f = mbasis[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            f -= P[j].scale(inner_qt(P[j], mbasis[ii]) / norms[j]);
        P[ii] = std::move(f);
        norms[ii] = inner_qt(P[ii], P[ii]);
        if (norms[ii].is_zero()) throw std::logic_error("Gram-Schmidt: degenerate norm");
    }

    std::vector<MacdonaldRecord> recs(n);
    parallel_for(n, [&](std::size_t i) {
        const Partition& mu = parts[i];
        MacdonaldRecord r;
        r.mu = mu;
        r.P = P[i];
        r.norm_qt = norms[i];
        FieldElem jfactor(1), one(1);
        for (int row = 1; row <= mu.length(); ++row)
            for (int col = 1; col <= mu.part(row); ++col)
                jfactor *= one - FieldElem::q().pow(mu.arm(row, col)) *
                                     FieldElem::t().pow(mu.leg(row, col) + 1);
        r.J = r.P.scale(jfactor);
        SymFunc j_tinv = r.J.map_coeffs([](const FieldElem& c) { return c.invert_v(); });
        r.H = upsilon(j_tinv).scale(FieldElem::t().pow(mu.nstat()));
        r.norm_herm = herm(r.H, r.H);
        recs[i] = std::move(r);
    });
    for (auto& r : recs) records_.emplace(r.mu, std::move(r));
}

std::map<Partition, FieldElem> Macdonald::to_H_basis(const SymFunc& f) {
    std::map<Partition, FieldElem> out;
    if (f.is_zero()) return out;
    ensure_degree(f.degree());
    for (int d = 0; d <= f.degree(); ++d) {
        SymFunc fd = f.component(d);
        if (fd.is_zero()) continue;
        for (const auto& la : partitions_of(d)) {
            const auto& rec = records_.at(la);
            FieldElem c = herm(rec.H, fd) / rec.norm_herm;
            if (!c.is_zero()) out.emplace(la, c);
        }
    }
    return out;
}

SymFunc Macdonald::from_H_basis(const std::map<Partition, FieldElem>& coeffs) {
    SymFunc f;
    for (const auto& [la, c] : coeffs) f += record(la).H.scale(c);
    return f;
}

FieldElem Macdonald::t_eigenvalue(const Partition& la, int power) {
    return FieldElem::monomial(2 * la.conjugate().nstat(), 2 * la.nstat(), 0).pow(power);
}

SymFunc Macdonald::apply_T(const SymFunc& f, int power) {
    auto coeffs = to_H_basis(f);
    SymFunc out;
    for (const auto& [la, c] : coeffs) out += record(la).H.scale(c * t_eigenvalue(la, power));
    return out;
}

SymFunc Macdonald::interpolation_Hstar(const Partition& mu) {
    // T is diagonal on H_mu, so conjugating the lowering exponential by T
    // only requires the T^-1 on the way out.
    SymFunc f = record(mu).H.scale(t_eigenvalue(mu));
    SymFunc total, power = f;
    Int factorial(1);
    int j = 0;
    while (!power.is_zero()) {
        total += power.scale(FieldElem(1) / FieldElem(factorial));
        SymFunc next;
        for (int k = 1; k <= power.degree(); ++k) {
            SymFunc dk = power.d_p(k);
            next += (k % 2 == 0) ? -dk : dk;
        }
        power = std::move(next);
        ++j;
        factorial *= j;
    }
    return apply_T(total, -1);
}

FieldElem Macdonald::hstar_value(const Partition& mu, const Partition& la) {
    return evaluate(interpolation_Hstar(mu), ideal_point(la).negate());
}

bool Macdonald::verify_vanishing(const Partition& mu, const Partition& la) {
    return hstar_value(mu, la).is_zero();
}

FieldElem Macdonald::fourier_pair(const SymFunc& f, const Partition& mu) {
    AlphabetPoint neg_x_mu = ideal_point(mu).negate();
    AlphabetPoint neg_x_empty = ideal_point(Partition()).negate();
    return evaluate(f, neg_x_mu) * evaluate(record(mu).H, neg_x_empty);
}

// ---------------------------------------------------------------------------
// on-disk cache
// ---------------------------------------------------------------------------

std::string Macdonald::cache_file(int d) const {
    return cache_dir_ + "/macdonald_deg" + std::to_string(d) + ".txt";
}

bool Macdonald::load_degree(int d) {
    if (cache_dir_.empty()) return false;
    std::ifstream in(cache_file(d));
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != kCacheVersion) return false;
    if (!std::getline(in, line) || line != std::string("order ") + kMonomialOrder) return false;
    if (!std::getline(in, line) || line != "degree " + std::to_string(d)) return false;

    auto parts = partitions_of(d);
    std::map<Partition, MacdonaldRecord> loaded;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line.rfind("record ", 0) != 0) return false;
            MacdonaldRecord r;
            r.mu = Partition::parse(line.substr(7));
            auto field = [&](const char* tag) {
                std::string l;
                if (!std::getline(in, l) || l.rfind(tag, 0) != 0) throw std::runtime_error("cache: bad record");
                return l.substr(std::string(tag).size());
            };
            r.P = SymFunc::deserialize(field("P "));
            r.J = SymFunc::deserialize(field("J "));
            r.H = SymFunc::deserialize(field("H "));
            r.norm_qt = FieldElem::parse(field("norm_qt "));
            r.norm_herm = FieldElem::parse(field("norm_herm "));
            loaded.emplace(r.mu, std::move(r));
        }
    } catch (const std::exception&) {
        return false;
    }
    for (const auto& mu : parts)
        if (!loaded.count(mu)) return false;
    for (auto& [mu, r] : loaded) records_.emplace(mu, std::move(r));
    return true;
}

void Macdonald::save_degree(int d) const {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    std::string tmp = cache_file(d) + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // caching is advisory; failures never break results
        out << kCacheVersion << "\n";
        out << "order " << kMonomialOrder << "\n";
        out << "degree " << d << "\n";
        for (const auto& mu : partitions_of(d)) {
            const auto& r = records_.at(mu);
            out << "record " << mu.str() << "\n";
            out << "P " << r.P.serialize() << "\n";
            out << "J " << r.J.serialize() << "\n";
            out << "H " << r.H.serialize() << "\n";
            out << "norm_qt " << r.norm_qt.str() << "\n";
            out << "norm_herm " << r.norm_herm.str() << "\n";
        }
    }
    std::filesystem::rename(tmp, cache_file(d), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace macfock
