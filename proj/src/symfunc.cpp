#include "macfock/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macfock {

SymFunc SymFunc::constant(const FieldElem& c) { return term(Partition(), c); }

SymFunc SymFunc::p(int k) {
    if (k < 1) throw std::invalid_argument("p_k needs k >= 1");
    return term(Partition({k}), FieldElem(1));
}

SymFunc SymFunc::p_mu(const Partition& mu) { return term(mu, FieldElem(1)); }

SymFunc SymFunc::term(const Partition& mu, const FieldElem& c) {
    SymFunc f;
    if (!c.is_zero()) f.terms_.emplace(mu, c);
    return f;
}

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
}

FieldElem SymFunc::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? FieldElem() : it->second;
}

void SymFunc::add_term(const Partition& mu, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r(*this);
    for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
    SymFunc r(*this);
    for (auto& [mu, c] : r.terms_) c = -c;
    return r;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : o.terms_) r.add_term(merge_parts(mu, nu), c * d);
    return r;
}

SymFunc SymFunc::scale(const FieldElem& c) const {
    SymFunc r;
    if (c.is_zero()) return r;
    for (const auto& [mu, x] : terms_) r.terms_.emplace(mu, x * c);
    return r;
}

SymFunc SymFunc::component(int d) const {
    SymFunc r;
    for (const auto& [mu, c] : terms_)
        if (mu.size() == d) r.terms_.emplace(mu, c);
    return r;
}

SymFunc SymFunc::truncate(int max_deg) const {
    SymFunc r;
    for (const auto& [mu, c] : terms_)
        if (mu.size() <= max_deg) r.terms_.emplace(mu, c);
    return r;
}

SymFunc SymFunc::mul_p(int k) const {
    SymFunc r;
    Partition pk({k});
    for (const auto& [mu, c] : terms_) r.terms_.emplace(merge_parts(mu, pk), c);
    return r;
}

SymFunc SymFunc::d_p(int k) const {
    SymFunc r;
    for (const auto& [mu, c] : terms_) {
        int mult = 0;
        std::vector<int> rest;
        bool removed = false;
        for (int p : mu.parts()) {
            if (p == k) ++mult;
            if (p == k && !removed) {
                removed = true;
            } else {
                rest.push_back(p);
            }
        }
        if (mult > 0) r.add_term(Partition(std::move(rest)), c * FieldElem(mult));
    }
    return r;
}

SymFunc SymFunc::conjugate_coeffs() const {
    return map_coeffs([](const FieldElem& c) { return c.conjugate(); });
}

SymFunc SymFunc::map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const {
    SymFunc r;
    for (const auto& [mu, c] : terms_) r.add_term(mu, f(c));
    return r;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string pname = mu.empty() ? "" : "p" + mu.str();
        if (pname.empty()) {
            out += c.str();
        } else if (c.is_one()) {
            out += pname;
        } else {
            out += "(" + c.str() + ")*" + pname;
        }
    }
    return out;
}

std::string SymFunc::serialize() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
        if (!out.empty()) out += " ; ";
        out += mu.str() + " " + c.str();
    }
    return out;
}

SymFunc SymFunc::deserialize(const std::string& s) {
    SymFunc f;
    if (s == "0" || s.empty()) return f;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" ; ", pos);
        std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t sp = item.find(' ');
        if (sp == std::string::npos) throw std::invalid_argument("SymFunc: bad record: " + item);
        f.add_term(Partition::parse(item.substr(0, sp)), FieldElem::parse(item.substr(sp + 1)));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return f;
}

// ---------------------------------------------------------------------------
// alphabet points
// ---------------------------------------------------------------------------

AlphabetPoint::AlphabetPoint(std::function<FieldElem(int)> rule) : state_(std::make_shared<State>()) {
    state_->rule = std::move(rule);
}

FieldElem AlphabetPoint::operator()(int k) const {
    if (!state_) throw std::logic_error("AlphabetPoint: empty rule");
    if (k < 1) throw std::invalid_argument("AlphabetPoint: k must be >= 1");
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(k);
    if (it != state_->memo.end()) return it->second;
    FieldElem v = state_->rule(k);
    state_->memo.emplace(k, v);
    return v;
}

AlphabetPoint AlphabetPoint::finite(const std::vector<FieldElem>& values) {
    return AlphabetPoint([values](int k) {
        FieldElem s;
        for (const auto& v : values) s += v.pow(k);
        return s;
    });
}

AlphabetPoint AlphabetPoint::principal(const Partition& mu) {
    return AlphabetPoint([mu](int k) {
        // sum_{i>=1} q^(-k mu_i) t^(k(i-1)) resummed against the geometric tail
        FieldElem one(1);
        FieldElem qk = FieldElem::q().pow(k), tk = FieldElem::t().pow(k);
        FieldElem s = one / (one - tk);
        for (int i = 1; i <= mu.length(); ++i)
            s += (qk.pow(-mu.part(i)) - one) * tk.pow(i - 1);
        return s;
    });
}

AlphabetPoint AlphabetPoint::negate() const {
    AlphabetPoint self(*this);
    return AlphabetPoint([self](int k) { return -self(k); });
}

// ---------------------------------------------------------------------------
// pairings and involutions
// ---------------------------------------------------------------------------

FieldElem weight_qt(const Partition& mu) {
    FieldElem one(1), w(1);
    for (int p : mu.parts()) w *= (one - FieldElem::q().pow(p)) / (one - FieldElem::t().pow(p));
    return w;
}

FieldElem weight_prime(const Partition& mu) {
    FieldElem one(1), w(1);
    for (int p : mu.parts()) w *= (one - FieldElem::q().pow(p)) * (one - FieldElem::t().pow(p));
    return w;
}

FieldElem weight_w(const Partition& mu) {
    FieldElem w(1);
    for (int p : mu.parts()) {
        FieldElem us = FieldElem::u().pow(p), vs = FieldElem::v().pow(p);
        w *= (us - us.inverse()) * (vs - vs.inverse());
    }
    return w;
}

namespace {

FieldElem diagonal_pairing(const SymFunc& f, const SymFunc& g, FieldElem (*weight)(const Partition&),
                           bool conjugate_first) {
    FieldElem s;
    for (const auto& [mu, cf] : f.terms()) {
        FieldElem cg = g.coeff(mu);
        if (cg.is_zero()) continue;
        FieldElem a = conjugate_first ? cf.conjugate() : cf;
        s += a * cg * FieldElem(mu.zcent()) * weight(mu);
    }
    return s;
}

}  // namespace

FieldElem inner_qt(const SymFunc& f, const SymFunc& g) { return diagonal_pairing(f, g, weight_qt, false); }

FieldElem inner_prime(const SymFunc& f, const SymFunc& g) {
    return diagonal_pairing(f, g, weight_prime, false);
}

FieldElem herm(const SymFunc& f, const SymFunc& g) { return diagonal_pairing(f, g, weight_w, true); }

SymFunc omega(const SymFunc& f) {
    SymFunc r;
    for (const auto& [mu, c] : f.terms()) {
        int sign = (mu.size() - mu.length()) % 2 ? -1 : 1;
        r.add_term(mu, sign < 0 ? -c : c);
    }
    return r;
}

SymFunc upsilon(const SymFunc& f, bool inverse) {
    SymFunc r;
    FieldElem one(1);
    for (const auto& [mu, c] : f.terms()) {
        FieldElem w(1);
        for (int p : mu.parts()) w *= one - FieldElem::t().pow(-p);
        r.add_term(mu, inverse ? c * w : c / w);
    }
    return r;
}

FieldElem evaluate(const SymFunc& f, const AlphabetPoint& x) {
    FieldElem s;
    for (const auto& [mu, c] : f.terms()) {
        FieldElem prod(1);
        for (int p : mu.parts()) prod *= x(p);
        s += c * prod;
    }
    return s;
}

}  // namespace macfock
