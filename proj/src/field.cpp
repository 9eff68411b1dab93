#include "macfock/field.hpp"

#include <cctype>
#include <stdexcept>

namespace macfock {

FieldElem::FieldElem(const Rat& r) : num_(Int(r.get_num())), den_(Int(r.get_den())) { reduce(); }

FieldElem::FieldElem(const Poly& num, const Poly& den) : num_(num), den_(den) { reduce(); }

FieldElem FieldElem::from_poly(Poly p) {
    FieldElem f;
    f.num_ = std::move(p);
    f.den_ = Poly(1L);
    return f;
}

FieldElem FieldElem::rational(long num, long den) { return FieldElem(Poly(num), Poly(den)); }

FieldElem FieldElem::monomial(int eu, int ev, int em) {
    int nu = std::max(eu, 0), nv = std::max(ev, 0), nm = std::max(em, 0);
    int du = std::max(-eu, 0), dv = std::max(-ev, 0), dm = std::max(-em, 0);
    FieldElem f;
    f.num_ = Poly(Int(1), mono::pack(nu, nv, nm));
    f.den_ = Poly(Int(1), mono::pack(du, dv, dm));
    return f;
}

void FieldElem::reduce() {
    if (den_.is_zero()) throw std::domain_error("FieldElem: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.div_exact(g);
        den_ = *den_.div_exact(g);
    }
    if (den_.leading().coeff < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    FieldElem r;
    Poly g = Poly::gcd(den_, o.den_);
    if (g.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        if (r.num_.is_zero()) {
            r.den_ = Poly(1L);
            return r;
        }
    } else {
        Poly db = *den_.div_exact(g);
        Poly dd = *o.den_.div_exact(g);
        Poly n = num_ * dd + o.num_ * db;
        if (n.is_zero()) return FieldElem();
        Poly h = Poly::gcd(n, g);
        if (!h.is_one()) {
            n = *n.div_exact(h);
            g = *g.div_exact(h);
        }
        r.num_ = std::move(n);
        r.den_ = g * db * dd;
    }
    if (r.den_.leading().coeff < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return FieldElem();
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    FieldElem r;
    r.num_ = *num_.div_exact(g1) * *o.num_.div_exact(g2);
    r.den_ = *den_.div_exact(g2) * *o.den_.div_exact(g1);
    if (r.den_.leading().coeff < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: division by zero");
    FieldElem r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading().coeff < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r(1);
    FieldElem base(*this);
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

namespace {

// p(u^-1, v^-1 or not, m) rendered as (shifted polynomial, monomial u^a v^b to divide by)
Poly reverse_exponents(const Poly& p, bool inv_u, bool inv_v, int& au, int& av) {
    au = inv_u ? p.degree(0) : 0;
    av = inv_v ? p.degree(1) : 0;
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        int eu = mono::exp_u(t.key), ev = mono::exp_v(t.key);
        out.push_back({mono::pack(inv_u ? au - eu : eu, inv_v ? av - ev : ev, mono::exp_m(t.key)), t.coeff});
    }
    std::sort(out.begin(), out.end(), [](const Poly::Term& a, const Poly::Term& b) { return a.key > b.key; });
    return Poly::from_sorted(std::move(out));
}

FieldElem invert_vars(const FieldElem& f, bool inv_u, bool inv_v) {
    if (f.is_zero()) return f;
    int nu, nv, du, dv;
    Poly n = reverse_exponents(f.num(), inv_u, inv_v, nu, nv);
    Poly d = reverse_exponents(f.den(), inv_u, inv_v, du, dv);
    // f -> (n / u^nu v^nv) / (d / u^du v^dv) = n u^du v^dv / (d u^nu v^nv)
    return FieldElem(n.mul_term(Int(1), mono::pack(du, dv, 0)), d.mul_term(Int(1), mono::pack(nu, nv, 0)));
}

}  // namespace

FieldElem FieldElem::conjugate() const { return invert_vars(*this, true, true); }

FieldElem FieldElem::invert_v() const { return invert_vars(*this, false, true); }

FieldElem FieldElem::swap_qt() const {
    if (is_zero()) return *this;
    return FieldElem(num_.swap_uv(), den_.swap_uv());
}

FieldElem FieldElem::adams(int k) const {
    if (k < 1) throw std::invalid_argument("adams: k must be positive");
    if (is_zero()) return *this;
    FieldElem r;
    r.num_ = num_.adams(k);
    r.den_ = den_.adams(k);
    r.reduce();
    return r;
}

namespace {

Poly shear_mass(const Poly& p) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        int em = mono::exp_m(t.key);
        out.push_back({mono::pack(mono::exp_u(t.key) + 2 * em, mono::exp_v(t.key) + 2 * em, em), t.coeff});
    }
    std::sort(out.begin(), out.end(), [](const Poly::Term& a, const Poly::Term& b) { return a.key > b.key; });
    return Poly::from_sorted(std::move(out));
}

}  // namespace

FieldElem FieldElem::redefine_mass() const {
    if (is_zero()) return *this;
    return FieldElem(shear_mass(num_), shear_mass(den_));
}

bool FieldElem::m_free() const { return num_.degree(2) <= 0 && den_.degree(2) <= 0; }

std::map<int, FieldElem> FieldElem::expand_m() const {
    if (den_.degree(2) > 0) throw std::domain_error("expand_m: denominator involves m");
    std::map<int, std::vector<Poly::Term>> buckets;
    for (const auto& t : num_.terms()) {
        int em = mono::exp_m(t.key);
        buckets[em].push_back({mono::pack(mono::exp_u(t.key), mono::exp_v(t.key), 0), t.coeff});
    }
    std::map<int, FieldElem> out;
    for (auto& [e, terms] : buckets) {
        std::sort(terms.begin(), terms.end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.key > b.key; });
        out.emplace(e, FieldElem(Poly::from_sorted(std::move(terms)), den_));
    }
    return out;
}

std::string FieldElem::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + " / " + wrap(den_);
}

// ---------------------------------------------------------------------------
// parsing of the canonical serialization
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("FieldElem parse error at position " + std::to_string(pos) + ": " + what);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    // exponent after '^': either an integer or (a/2) with odd a
    int half_exponent(bool halves) {
        if (eat('(')) {
            Int a = integer();
            if (!eat('/')) fail("expected '/' in fractional exponent");
            Int b = integer();
            if (!eat(')')) fail("expected ')'");
            if (b != 2 || !halves) fail("unsupported fractional exponent");
            return static_cast<int>(a.get_si());
        }
        Int a = integer();
        return static_cast<int>(a.get_si()) * (halves ? 2 : 1);
    }

    // single term: optional integer and '*'-joined variable powers
    Poly term() {
        Int coeff(1);
        int eu = 0, ev = 0, em = 0;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            any = true;
            if (!eat('*')) return Poly(coeff, mono::pack(0, 0, 0));
        }
        while (true) {
            char c = peek();
            int* slot = nullptr;
            bool halves = false;
            if (c == 'q') {
                slot = &eu;
                halves = true;
            } else if (c == 't') {
                slot = &ev;
                halves = true;
            } else if (c == 'm') {
                slot = &em;
            } else {
                break;
            }
            ++pos;
            any = true;
            int e = eat('^') ? half_exponent(halves) : (halves ? 2 : 1);
            if (e < 0) fail("negative exponent in polynomial");
            *slot += e;
            if (!eat('*')) break;
        }
        if (!any) fail("expected term");
        return Poly(coeff, mono::pack(eu, ev, em));
    }

    Poly poly() {
        Poly r;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            Poly t = term();
            r += neg ? -t : t;
            skip_ws();
            if (eat('+')) {
                neg = false;
            } else if (eat('-')) {
                neg = true;
            } else {
                break;
            }
        }
        return r;
    }

    Poly group() {
        if (eat('(')) {
            Poly p = poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        return poly();
    }
};

}  // namespace

FieldElem FieldElem::parse(const std::string& s) {
    Parser p(s);
    if (p.peek() == '0') {
        std::size_t save = p.pos;
        ++p.pos;
        if (p.peek() == '\0') return FieldElem();
        p.pos = save;
    }
    Poly num = p.group();
    Poly den(1L);
    if (p.eat('/')) den = p.group();
    p.skip_ws();
    if (p.pos != p.s.size()) p.fail("trailing input");
    return FieldElem(num, den);
}

}  // namespace macfock
