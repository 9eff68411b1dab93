#include "macfock/zfun.hpp"

#include <stdexcept>

namespace macfock {

QuiverSpec QuiverSpec::adjoint() {
    QuiverSpec s;
    s.r = 0;
    s.couplings = {"qq"};
    s.masses = {FieldElem::m()};
    return s;
}

void QuiverSpec::validate() const {
    if (r < 0) throw std::invalid_argument("QuiverSpec: r must be nonnegative");
    if (couplings.size() != static_cast<std::size_t>(r) + 1 ||
        masses.size() != static_cast<std::size_t>(r) + 1)
        throw std::invalid_argument("QuiverSpec: need r+1 couplings and masses");
}

std::vector<FieldElem> z_inst_trace_r0(int order) {
    TruncOp W = truncop_W(order);
    std::vector<FieldElem> out(static_cast<std::size_t>(order) + 1);
    for (int d = 0; d <= order; ++d) out[static_cast<std::size_t>(d)] = W.trace(d);
    return out;
}

namespace {

using Matrix = std::vector<std::vector<FieldElem>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    Matrix c(a.size(), std::vector<FieldElem>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

void enumerate_degrees(int slots, int total_max, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 0) {
        emit(cur);
        return;
    }
    int used = 0;
    for (int v : cur) used += v;
    for (int d = 0; d + used <= total_max; ++d) {
        cur.push_back(d);
        enumerate_degrees(slots - 1, total_max, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

CouplingSeries z_inst_trace(const QuiverSpec& spec, int order) {
    spec.validate();
    std::vector<TruncOp> W;
    W.reserve(spec.masses.size());
    for (const auto& mass : spec.masses) W.push_back(truncop_W(order, mass));

    CouplingSeries out;
    std::vector<int> cur;
    enumerate_degrees(spec.r + 1, order, cur, [&](const std::vector<int>& deg) {
        // coefficient of prod qq_i^{deg_i}:
        // Tr[ W_0|{d_1 -> d_0} W_1|{d_2 -> d_1} ... W_r|{d_0 -> d_r} ]
        int n = spec.r + 1;
        Matrix prod;
        bool first = true;
        for (int i = 0; i < n; ++i) {
            int dout = deg[static_cast<std::size_t>(i)];
            int din = deg[static_cast<std::size_t>((i + 1) % n)];
            const Matrix& blk = W[static_cast<std::size_t>(i)].block(dout, din);
            prod = first ? blk : mat_mul(prod, blk);
            first = false;
        }
        FieldElem tr;
        for (std::size_t i = 0; i < prod.size(); ++i) tr += prod[i][i];
        out.emplace(deg, tr);
    });
    return out;
}

std::vector<FieldElem> z_inst_closed(int order, bool redefine_mass) {
    FieldElem one(1);
    FieldElem m = FieldElem::m();
    if (redefine_mass) m = m * FieldElem::q() * FieldElem::t();
    FieldElem q = FieldElem::q(), t = FieldElem::t();
    FieldElem qfac = m / FieldElem::sqrt_qt();  // qq-marker multiplier inside Q = qq m/sqrt(qt)

    // exponent: sum_{n>=1} sum_{j>=1} qq^{nj} qfac^{nj} (m^n-q^n)(m^n-t^n) / (n m^n (1-q^n)(1-t^n))
    std::vector<FieldElem> expo(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        FieldElem base = (m.pow(n) - q.pow(n)) * (m.pow(n) - t.pow(n)) /
                         (FieldElem(n) * m.pow(n) * (one - q.pow(n)) * (one - t.pow(n)));
        for (int j = 1; n * j <= order; ++j)
            expo[static_cast<std::size_t>(n * j)] += qfac.pow(n * j) * base;
    }
    // exp of a series with zero constant term
    std::vector<FieldElem> out(static_cast<std::size_t>(order) + 1);
    out[0] = one;
    for (int p = 1; p <= order; ++p) {
        FieldElem s;
        for (int k = 1; k <= p; ++k)
            s += FieldElem(k) * expo[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(p - k)];
        out[static_cast<std::size_t>(p)] = s / FieldElem(p);
    }
    return out;
}

std::map<std::pair<int, int>, FieldElem> z_pert(int order) {
    FieldElem one(1);
    FieldElem m = FieldElem::m();
    // exponent coefficients of q^i t^j: sum over n dividing gcd-style pairs
    std::map<std::pair<int, int>, FieldElem> expo;
    for (int n = 1; n <= order / 2; ++n) {
        FieldElem c = (one - m.pow(n)) / FieldElem(n);
        for (int i = n; i <= order - n; i += n)
            for (int j = n; i + j <= order; j += n) expo[{i, j}] += c;
    }
    // exp as sum_k expo^k / k!; every expo term has total degree >= 2
    std::map<std::pair<int, int>, FieldElem> out;
    out[{0, 0}] = one;
    std::map<std::pair<int, int>, FieldElem> power = expo;
    Int factorial(1);
    for (int k = 1; 2 * k <= order; ++k) {
        factorial *= k;
        for (const auto& [ij, c] : power) {
            FieldElem add = c / FieldElem(factorial);
            auto [it, inserted] = out.emplace(ij, add);
            if (!inserted) it->second += add;
        }
        // next power of the exponent, truncated at total order
        if (2 * (k + 1) > order) break;
        std::map<std::pair<int, int>, FieldElem> next;
        for (const auto& [ij1, c1] : power)
            for (const auto& [ij2, c2] : expo) {
                int i = ij1.first + ij2.first, j = ij1.second + ij2.second;
                if (i + j > order) continue;
                auto [it, inserted] = next.emplace(std::make_pair(i, j), c1 * c2);
                if (!inserted) it->second += c1 * c2;
            }
        power = std::move(next);
        if (power.empty()) break;
    }
    out.erase({0, 0});
    return out;
}

Report compare_zfun(int order, bool redefine_mass) {
    Report rep;
    rep.identity = "zfun: Tr qq^{L_0} W(m) vs closed-form instanton series";
    rep.set_param("order", std::to_string(order));
    rep.set_param("mass-redefinition", redefine_mass ? "on" : "off");
    auto trace = z_inst_trace_r0(order);
    auto closed = z_inst_closed(order, redefine_mass);
    for (int d = 0; d <= order; ++d) {
        if (trace[static_cast<std::size_t>(d)] != closed[static_cast<std::size_t>(d)]) {
            rep.fail_with("qq^" + std::to_string(d) +
                          ": trace = " + trace[static_cast<std::size_t>(d)].str() +
                          ", closed = " + closed[static_cast<std::size_t>(d)].str());
            break;
        }
    }
    return rep;
}

}  // namespace macfock
