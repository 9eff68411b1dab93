#include "macfock/localization.hpp"

#include <mutex>
#include <stdexcept>

namespace macfock {

Character Character::monomial(int i, int j, long mult) {
    Character c;
    c.add(i, j, Int(mult));
    return c;
}

void Character::add(int i, int j, const Int& mult) {
    if (mult == 0) return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = terms_.emplace(key, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

Character Character::operator+(const Character& o) const {
    Character r(*this);
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

Character Character::operator-(const Character& o) const { return *this + (-o); }

Character Character::operator-() const {
    Character r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Character Character::operator*(const Character& o) const {
    Character r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Character Character::conjugate() const {
    Character r;
    for (const auto& [k, c] : terms_) r.add(-k.first, -k.second, c);
    return r;
}

Character Character::adams(int k) const {
    Character r;
    for (const auto& [key, c] : terms_) r.add(key.first * k, key.second * k, c);
    return r;
}

Int Character::total_multiplicity() const {
    Int s(0);
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

FieldElem Character::to_field() const {
    FieldElem s;
    for (const auto& [k, c] : terms_)
        s += FieldElem(c) * FieldElem::monomial(2 * k.first, 2 * k.second, 0);
    return s;
}

// ---------------------------------------------------------------------------

Character box_char(const Partition& la) {
    Character c;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j) c.add(j - 1, i - 1, Int(1));
    return c;
}

Character tangent_char(const Partition& la) {
    Character c;
    for (int i = 1; i <= la.length(); ++i) {
        for (int j = 1; j <= la.part(i); ++j) {
            int a = la.arm(i, j), l = la.leg(i, j);
            c.add(a + 1, -l, Int(1));
            c.add(-a, l + 1, Int(1));
        }
    }
    return c;
}

namespace {

// chi(O) - chi(I_la, I_mu) for the Euler pairing chi(F,G) = conj(F) G (1-q^s)(1-t^s);
// for sigma = +1 this collapses to qt B_mu + conj(B_la) - (1-q)(1-t) conj(B_la) B_mu,
// for sigma = -1 to B_mu + (qt)^-1 conj(B_la) - (qt)^-1 (1-q)(1-t) conj(B_la) B_mu.
Character ext_with_sign(const Partition& la, const Partition& mu, int sigma) {
    Character bmu = box_char(mu);
    Character bla_c = box_char(la).conjugate();
    Character euler = Character::monomial(0, 0) - Character::monomial(1, 0) -
                      Character::monomial(0, 1) + Character::monomial(1, 1);
    Character core = bla_c * bmu * euler;
    if (sigma > 0) return Character::monomial(1, 1) * bmu + bla_c - core;
    Character inv = Character::monomial(-1, -1);
    return bmu + inv * bla_c - inv * core;
}

int ext_sign() {
    static std::once_flag flag;
    static int sigma = 0;
    std::call_once(flag, [] {
        std::vector<Partition> seeds = {Partition({1}), Partition({2}), Partition({1, 1})};
        for (int s : {+1, -1}) {
            bool ok = true;
            for (const auto& la : seeds)
                if (ext_with_sign(la, la, s) != tangent_char(la)) ok = false;
            if (ok) {
                sigma = s;
                return;
            }
        }
        throw std::logic_error("ext_char: no duality sign reproduces the tangent character");
    });
    return sigma;
}

}  // namespace

Character ext_char(const Partition& la, const Partition& mu) { return ext_with_sign(la, mu, ext_sign()); }

AlphabetPoint ideal_point(const Partition& la) {
    Character b = box_char(la);
    return AlphabetPoint([b](int k) {
        FieldElem one(1);
        FieldElem dk = (one - FieldElem::q().pow(k)) * (one - FieldElem::t().pow(k));
        return one - dk * b.adams(k).to_field();
    });
}

AlphabetPoint boson_point(const Partition& la, const FieldElem& w) {
    return AlphabetPoint([la, w](int k) {
        FieldElem one(1);
        FieldElem qk = FieldElem::q().pow(k), tk = FieldElem::t().pow(k);
        FieldElem s = one / (one - qk);
        for (int i = 1; i <= la.length(); ++i) s += qk.pow(i - 1) * (tk.pow(la.part(i)) - one);
        return (w * FieldElem::sqrt_qt()).pow(k) * s;
    });
}

FieldElem lambda_genus(const Character& c, const FieldElem& marker) {
    FieldElem prod(1);
    FieldElem one(1);
    for (const auto& [k, mult] : c.terms()) {
        if (mult < 0) throw std::domain_error("lambda_genus: negative multiplicity");
        FieldElem factor = one - marker * FieldElem::monomial(2 * k.first, 2 * k.second, 0);
        prod *= factor.pow(static_cast<int>(mult.get_si()));
    }
    return prod;
}

FieldElem geometric_V_pairing(const SymFunc& f, const Partition& mu) {
    AlphabetPoint x = ideal_point(mu);
    FieldElem s;
    for (const auto& [nu, c] : f.terms()) {
        FieldElem prod = c.conjugate() * FieldElem::sqrt_qt().pow(-nu.size());
        for (int p : nu.parts()) prod *= x(p);
        s += prod;
    }
    return s;
}

FieldElem w_element_shift() { return (FieldElem::q() * FieldElem::t()).inverse(); }

FieldElem geometric_W_element(const Partition& la, const Partition& mu) {
    return lambda_genus(ext_char(la, mu), FieldElem::m() * w_element_shift());
}

}  // namespace macfock
