#include "macfock/qseries.hpp"

#include <stdexcept>

namespace macfock {

QSeries QSeries::monomial(int exp2, const Rat& c) {
    QSeries s;
    if (c != 0) s.terms_.emplace(exp2, c);
    return s;
}

Rat QSeries::coeff(int exp2) const {
    if (exp2 >= cutoff_) throw std::logic_error("QSeries: coefficient beyond the cutoff");
    auto it = terms_.find(exp2);
    return it == terms_.end() ? Rat(0) : it->second;
}

void QSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || it->first >= cutoff_) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(*this);
    r.cutoff_ = std::min(cutoff_, o.cutoff_);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    r.normalize();
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r;
    // unknown tail of one factor meets the lowest exponent of the other
    auto floor_of = [](const QSeries& s) {
        return s.terms_.empty() ? (s.is_exact() ? static_cast<long>(kExact) : s.cutoff_)
                                : static_cast<long>(s.valuation());
    };
    long c1 = is_exact() ? kExact : std::min(static_cast<long>(cutoff_) + floor_of(o), static_cast<long>(kExact));
    long c2 = o.is_exact() ? kExact : std::min(static_cast<long>(o.cutoff_) + floor_of(*this), static_cast<long>(kExact));
    r.cutoff_ = static_cast<int>(std::min({c1, c2, static_cast<long>(kExact)}));
    if (terms_.empty() || o.terms_.empty()) return r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            int e = ea + eb;
            if (e >= r.cutoff_) continue;
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

QSeries QSeries::scale(const Rat& c) const {
    QSeries r;
    r.cutoff_ = cutoff_;
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

QSeries QSeries::shift(int exp2) const {
    QSeries r;
    r.cutoff_ = is_exact() ? kExact : cutoff_ + exp2;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e + exp2, x);
    return r;
}

QSeries QSeries::truncate(int cutoff2) const {
    QSeries r(*this);
    r.cutoff_ = std::min(cutoff_, cutoff2);
    r.normalize();
    return r;
}

QSeries QSeries::inverse(int cutoff2) const {
    if (terms_.empty()) throw std::domain_error("QSeries: inverse of zero");
    int v = valuation();
    // the inverse is reliable below cutoff - 2v; the unit part below that + v
    long target = cutoff2;
    if (!is_exact()) target = std::min(target, static_cast<long>(cutoff_) - 2L * v);
    long unit_limit = target + v;
    if (unit_limit <= 0) {
        QSeries r;
        r.cutoff_ = static_cast<int>(target);
        return r;
    }
    Rat lead = terms_.begin()->second;
    QSeries unit = shift(-v).truncate(static_cast<int>(unit_limit));
    // 1/unit = (1/lead) sum_j rem^j with rem = 1 - unit/lead of positive valuation
    QSeries rem = QSeries::one() - unit.scale(1 / lead);
    QSeries geom = QSeries::one(), acc = QSeries::one();
    while (true) {
        geom = (geom * rem).truncate(static_cast<int>(unit_limit));
        if (geom.terms().empty()) break;
        acc += geom;
    }
    QSeries result = acc.scale(1 / lead).shift(-v);
    return result.truncate(static_cast<int>(target));
}

int QSeries::comparable_cutoff(const QSeries& a, const QSeries& b) {
    return std::min(a.cutoff_, b.cutoff_);
}

int QSeries::first_difference(const QSeries& a, const QSeries& b) {
    int limit = comparable_cutoff(a, b);
    QSeries d = a - b;
    for (const auto& [e, c] : d.terms())
        if (e < limit && c != 0) return e;
    return kExact;
}

std::string QSeries::str() const {
    if (terms_.empty()) return is_exact() ? "0" : "O(q^" + std::to_string(cutoff_) + "/2)";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        if (e != 0) {
            out += "*q^";
            out += (e % 2 == 0) ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)";
        }
    }
    if (!is_exact()) out += " + O(q^" + std::to_string(cutoff_) + "/2)";
    return out;
}

QSeries specialize_qk(const FieldElem& f, int k, int cutoff2) {
    auto poly_to_series = [&](const Poly& p) {
        QSeries s;
        for (const auto& t : p.terms()) {
            if (mono::exp_m(t.key) != 0)
                throw std::domain_error("specialize_qk: element involves the mass variable");
            int e2 = mono::exp_u(t.key) + k * mono::exp_v(t.key);
            s += QSeries::monomial(e2, Rat(t.coeff));
        }
        return s;
    };
    QSeries num = poly_to_series(f.num());
    QSeries den = poly_to_series(f.den());
    if (den.terms().size() == 1) {
        auto [e, c] = *den.terms().begin();
        return num.shift(-e).scale(1 / c);
    }
    if (num.known_zero()) return QSeries();
    return num.div(den, cutoff2);
}

QSeries pochhammer_inf(int a2, int cutoff2) {
    if (a2 <= 0) throw std::invalid_argument("pochhammer_inf: argument must have positive valuation");
    QSeries prod = QSeries::one().truncate(cutoff2);
    for (int e = a2; e < cutoff2; e += 2)
        prod = prod * (QSeries::one() - QSeries::monomial(e, Rat(1)));
    return prod.truncate(cutoff2);
}

}  // namespace macfock
