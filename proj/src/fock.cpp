#include "macfock/fock.hpp"

#include <sstream>
#include <stdexcept>

#include "macfock/parallel.hpp"

namespace macfock {

AdamsRule::AdamsRule(const FieldElem& f) {
    rule_ = [f](int k) { return f.adams(k); };
}

AdamsRule AdamsRule::custom(std::function<FieldElem(int)> rule) {
    AdamsRule r{FieldElem()};
    r.rule_ = std::move(rule);
    return r;
}

FieldElem AdamsRule::operator()(int k) const { return rule_(k); }

SymFunc alpha(int n, const SymFunc& f) {
    if (n == 0) throw std::invalid_argument("alpha: n must be nonzero");
    FieldElem one(1);
    if (n < 0) {
        int k = -n;
        FieldElem c = one / ((one - FieldElem::q().pow(k)) * (one - FieldElem::t().pow(k)));
        return f.mul_p(k).scale(c);
    }
    return f.d_p(n).scale(FieldElem(n) * FieldElem::sqrt_qt().pow(n));
}

namespace {

// coefficient of the degree-r raising part of exp(sum_k f_k p_k / k):
// sum over kappa |- r of (prod f_{kappa_i} / z(kappa)) p_kappa
SymFunc raising_component(const AdamsRule& f, int r) {
    SymFunc out;
    for (const auto& kappa : partitions_of(r)) {
        FieldElem c = FieldElem(1) / FieldElem(kappa.zcent());
        for (int part : kappa.parts()) c *= f(part);
        out.add_term(kappa, c);
    }
    return out;
}

}  // namespace

SymFunc gamma_minus_component(const AdamsRule& f, int r, const SymFunc& g) {
    return raising_component(f, r) * g;
}

SymFunc gamma_plus_component(const AdamsRule& f, int s, const SymFunc& g) {
    SymFunc out;
    for (const auto& kappa : partitions_of(s)) {
        // exp(sum f_k d/dp_k) carries no 1/k, so the multinomial weight is
        // the product of multiplicity factorials only
        Int denom(1);
        int run = 0;
        for (int i = 1; i <= kappa.length(); ++i) {
            run = (i > 1 && kappa.part(i) == kappa.part(i - 1)) ? run + 1 : 1;
            denom *= run;
        }
        FieldElem c = FieldElem(1) / FieldElem(denom);
        for (int part : kappa.parts()) c *= f(part);
        SymFunc d = g;
        for (int part : kappa.parts()) {
            d = d.d_p(part);
            if (d.is_zero()) break;
        }
        out += d.scale(c);
    }
    return out;
}

SymFunc gamma_minus(const AdamsRule& f, const SymFunc& g, int max_deg) {
    SymFunc out;
    for (int r = 0; r <= max_deg; ++r) {
        SymFunc piece = gamma_minus_component(f, r, g);
        out += piece.truncate(max_deg);
    }
    return out;
}

SymFunc gamma_plus(const AdamsRule& f, const SymFunc& g) {
    SymFunc out;
    for (int s = 0; s <= std::max(g.degree(), 0); ++s) out += gamma_plus_component(f, s, g);
    return out;
}

SymFunc op_V(Macdonald& mac, const SymFunc& f, int max_deg) {
    if (f.degree() > max_deg) throw std::invalid_argument("op_V: input degree exceeds window");
    FieldElem one(1);
    SymFunc g = gamma_plus(AdamsRule(one), f);  // e^{phi_-(sqrt(qt))} = Gamma_+(1)
    FieldElem arg = -one / ((one - FieldElem::q()) * (one - FieldElem::t()));
    g = gamma_minus(AdamsRule(arg), g, max_deg);  // e^{phi_+(1)}
    g = mac.apply_T(g, 1);
    SymFunc out;
    for (int d = 0; d <= std::max(g.degree(), 0); ++d) {
        SymFunc comp = g.component(d);
        out += (d % 2) ? -comp : comp;  // (-1)^{L_0}
    }
    return out;
}

SymFunc op_W(const SymFunc& f, int max_deg) {
    if (f.degree() > max_deg) throw std::invalid_argument("op_W: input degree exceeds window");
    FieldElem one(1), m = FieldElem::m();
    FieldElem qt = FieldElem::q() * FieldElem::t();
    SymFunc g = gamma_plus(AdamsRule(one - m), f);
    FieldElem arg = (qt / m - one) / ((one - FieldElem::q()) * (one - FieldElem::t()));
    g = gamma_minus(AdamsRule(arg), g, max_deg);
    FieldElem ratio = m / FieldElem::sqrt_qt();
    SymFunc out;
    for (int d = 0; d <= std::max(g.degree(), 0); ++d) out += g.component(d).scale(ratio.pow(d));
    return out;
}

std::vector<FieldElem> pochhammer_qt_series(const FieldElem& scale, int order) {
    FieldElem one(1);
    // log coefficients: E_k = -scale^k / (k (1-q^k)(1-t^k))
    std::vector<FieldElem> E(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k)
        E[static_cast<std::size_t>(k)] =
            -scale.pow(k) /
            (FieldElem(k) * (one - FieldElem::q().pow(k)) * (one - FieldElem::t().pow(k)));
    // exp of the series: c_n = (1/n) sum_{k=1}^n k E_k c_{n-k}
    std::vector<FieldElem> c(static_cast<std::size_t>(order) + 1);
    c[0] = one;
    for (int n = 1; n <= order; ++n) {
        FieldElem s;
        for (int k = 1; k <= n; ++k)
            s += FieldElem(k) * E[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
        c[static_cast<std::size_t>(n)] = s / FieldElem(n);
    }
    return c;
}

// ---------------------------------------------------------------------------
// TruncOp
// ---------------------------------------------------------------------------

TruncOp TruncOp::build(int max_deg, int max_raise, int max_lower,
                       const std::function<SymFunc(const Partition&)>& apply) {
    TruncOp op;
    op.max_deg_ = max_deg;
    op.max_raise_ = max_raise;
    op.max_lower_ = max_lower;
    std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(max_deg) + 1);
    for (int d = 0; d <= max_deg; ++d) parts[static_cast<std::size_t>(d)] = partitions_of(d);

    // results per input partition, computed independently
    std::vector<std::pair<Partition, SymFunc>> images;
    for (int din = 0; din <= max_deg; ++din)
        for (const auto& mu : parts[static_cast<std::size_t>(din)]) images.emplace_back(mu, SymFunc());
    parallel_for(images.size(), [&](std::size_t i) { images[i].second = apply(images[i].first); });

    std::map<Partition, SymFunc> image_of;
    for (auto& [mu, img] : images) image_of.emplace(mu, std::move(img));

    for (int dout = 0; dout <= max_deg; ++dout) {
        for (int din = 0; din <= max_deg; ++din) {
            if (dout - din > max_raise || din - dout > max_lower) continue;
            const auto& in_list = parts[static_cast<std::size_t>(din)];
            const auto& out_list = parts[static_cast<std::size_t>(dout)];
            std::vector<std::vector<FieldElem>> mat(out_list.size(),
                                                    std::vector<FieldElem>(in_list.size()));
            bool nonzero = false;
            for (std::size_t j = 0; j < in_list.size(); ++j) {
                SymFunc img = image_of.at(in_list[j]).component(dout);
                for (std::size_t i = 0; i < out_list.size(); ++i) {
                    mat[i][j] = img.coeff(out_list[i]);
                    if (!mat[i][j].is_zero()) nonzero = true;
                }
            }
            (void)nonzero;
            op.blocks_.emplace(std::make_pair(dout, din), std::move(mat));
            op.exact_.emplace(std::make_pair(dout, din), true);
        }
    }
    return op;
}

TruncOp TruncOp::identity(int max_deg) {
    return diagonal_degree(max_deg, [](int) { return FieldElem(1); });
}

TruncOp TruncOp::diagonal_degree(int max_deg, const std::function<FieldElem(int)>& scale) {
    return build(max_deg, 0, 0,
                 [&](const Partition& mu) { return SymFunc::p_mu(mu).scale(scale(mu.size())); });
}

bool TruncOp::exact(int dout, int din) const {
    auto it = exact_.find(std::make_pair(dout, din));
    if (it != exact_.end()) return it->second;
    // blocks ruled out by the raise/lower bounds are exactly zero
    return dout >= 0 && din >= 0 && dout <= max_deg_ && din <= max_deg_;
}

const std::vector<std::vector<FieldElem>>& TruncOp::block(int dout, int din) const {
    auto key = std::make_pair(dout, din);
    auto it = exact_.find(key);
    if (it == exact_.end()) throw std::out_of_range("TruncOp: block outside the window");
    if (!it->second) throw std::logic_error("TruncOp: window violation (inexact block)");
    return blocks_.at(key);
}

FieldElem TruncOp::entry(const Partition& out, const Partition& in) const {
    int dout = out.size(), din = in.size();
    if (dout - din > max_raise_ || din - dout > max_lower_) return FieldElem();
    const auto& mat = block(dout, din);
    auto onum = partitions_of(dout);
    auto inum = partitions_of(din);
    std::size_t i = 0, j = 0;
    while (onum[i] != out) ++i;
    while (inum[j] != in) ++j;
    return mat[i][j];
}

TruncOp TruncOp::compose(const TruncOp& a, const TruncOp& b) {
    TruncOp c;
    c.max_deg_ = std::min(a.max_deg_, b.max_deg_);
    c.max_raise_ = std::min(a.max_raise_ + b.max_raise_, kUnbounded);
    c.max_lower_ = std::min(a.max_lower_ + b.max_lower_, kUnbounded);
    for (int dout = 0; dout <= c.max_deg_; ++dout) {
        auto out_list = partitions_of(dout);
        for (int din = 0; din <= c.max_deg_; ++din) {
            if (dout - din > c.max_raise_ || din - dout > c.max_lower_) continue;
            auto in_list = partitions_of(din);
            // intermediate degrees permitted by the factors' bounds
            long lo = std::max({0L, static_cast<long>(dout) - a.max_raise_,
                                static_cast<long>(din) - b.max_lower_});
            long hi = std::min(static_cast<long>(dout) + static_cast<long>(a.max_lower_),
                               static_cast<long>(din) + static_cast<long>(b.max_raise_));
            bool ok = hi <= a.max_deg_ && hi <= b.max_deg_;
            std::vector<std::vector<FieldElem>> mat(out_list.size(),
                                                    std::vector<FieldElem>(in_list.size()));
            if (ok) {
                for (long d = lo; d <= hi; ++d) {
                    if (!a.exact(dout, static_cast<int>(d)) || !b.exact(static_cast<int>(d), din)) {
                        ok = false;
                        break;
                    }
                    auto ka = std::make_pair(dout, static_cast<int>(d));
                    auto kb = std::make_pair(static_cast<int>(d), din);
                    if (!a.blocks_.count(ka) || !b.blocks_.count(kb)) continue;
                    const auto& ma = a.blocks_.at(ka);
                    const auto& mb = b.blocks_.at(kb);
                    for (std::size_t i = 0; i < mat.size(); ++i)
                        for (std::size_t j = 0; j < in_list.size(); ++j)
                            for (std::size_t k = 0; k < mb.size(); ++k)
                                mat[i][j] += ma[i][k] * mb[k][j];
                }
            }
            c.blocks_.emplace(std::make_pair(dout, din), std::move(mat));
            c.exact_.emplace(std::make_pair(dout, din), ok);
        }
    }
    return c;
}

TruncOp TruncOp::adjoint() const {
    TruncOp r;
    r.max_deg_ = max_deg_;
    r.max_raise_ = max_lower_;
    r.max_lower_ = max_raise_;
    for (const auto& [key, mat] : blocks_) {
        auto [dout, din] = key;
        auto out_list = partitions_of(dout);  // columns of the adjoint block
        auto in_list = partitions_of(din);    // rows of the adjoint block
        std::vector<std::vector<FieldElem>> adj(in_list.size(),
                                                std::vector<FieldElem>(out_list.size()));
        for (std::size_t i = 0; i < in_list.size(); ++i) {
            FieldElem wi = FieldElem(in_list[i].zcent()) * weight_w(in_list[i]);
            for (std::size_t j = 0; j < out_list.size(); ++j) {
                FieldElem wj = FieldElem(out_list[j].zcent()) * weight_w(out_list[j]);
                adj[i][j] = mat[j][i].conjugate() * wj / wi;
            }
        }
        r.blocks_.emplace(std::make_pair(din, dout), std::move(adj));
        r.exact_.emplace(std::make_pair(din, dout), exact_.at(key));
    }
    return r;
}

FieldElem TruncOp::trace(int d) const {
    if (d < 0 || d > max_deg_) throw std::out_of_range("TruncOp: trace degree outside the window");
    const auto& mat = block(d, d);
    FieldElem s;
    for (std::size_t i = 0; i < mat.size(); ++i) s += mat[i][i];
    return s;
}

SymFunc TruncOp::apply(const SymFunc& f) const {
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        int din = mu.size();
        if (din > max_deg_) throw std::out_of_range("TruncOp: input outside the window");
        auto in_list = partitions_of(din);
        std::size_t j = 0;
        while (in_list[j] != mu) ++j;
        for (int dout = 0; dout <= max_deg_; ++dout) {
            if (dout - din > max_raise_ || din - dout > max_lower_) continue;
            const auto& mat = block(dout, din);
            auto out_list = partitions_of(dout);
            for (std::size_t i = 0; i < out_list.size(); ++i)
                if (!mat[i][j].is_zero()) out.add_term(out_list[i], c * mat[i][j]);
        }
    }
    return out;
}

std::string TruncOp::debug_serialize() const {
    std::ostringstream out;
    out << "window 0.." << max_deg_ << " raise " << max_raise_ << " lower " << max_lower_ << "\n";
    for (const auto& [key, mat] : blocks_) {
        bool any = false;
        for (const auto& row : mat)
            for (const auto& e : row)
                if (!e.is_zero()) any = true;
        if (!any) continue;
        out << "block " << key.first << " <- " << key.second << (exact_.at(key) ? "" : " (inexact)")
            << "\n";
        for (const auto& row : mat) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " | " : "  ") << row[j].str();
            out << "\n";
        }
    }
    return out.str();
}

TruncOp truncop_V(Macdonald& mac, int max_deg) {
    mac.ensure_degree(max_deg);
    return TruncOp::build(max_deg, TruncOp::kUnbounded, TruncOp::kUnbounded,
                          [&mac, max_deg](const Partition& mu) {
                              return op_V(mac, SymFunc::p_mu(mu), max_deg);
                          });
}

TruncOp truncop_W(int max_deg) {
    return TruncOp::build(max_deg, TruncOp::kUnbounded, TruncOp::kUnbounded,
                          [max_deg](const Partition& mu) { return op_W(SymFunc::p_mu(mu), max_deg); });
}

TruncOp truncop_W(int max_deg, const FieldElem& mass) {
    return TruncOp::build(max_deg, TruncOp::kUnbounded, TruncOp::kUnbounded,
                          [max_deg, &mass](const Partition& mu) {
                              SymFunc w = op_W(SymFunc::p_mu(mu), max_deg);
                              return w.map_coeffs([&](const FieldElem& c) {
                                  // substitute the mass marker: m -> mass
                                  auto coeffs = c.expand_m();
                                  FieldElem s;
                                  for (const auto& [e, ce] : coeffs) s += ce * mass.pow(e);
                                  return s;
                              });
                          });
}

// ---------------------------------------------------------------------------
// identity checks
// ---------------------------------------------------------------------------

Report check_thm1(Macdonald& mac, int max_deg, int m_order) {
    Report rep;
    rep.identity = "thm1: W(m) = (m)_{q,t} V* (m/sqrt(qt))^{L_0} V";
    rep.set_param("max-degree", std::to_string(max_deg));
    rep.set_param("m-order", std::to_string(m_order));

    int window = std::max(max_deg, m_order);
    TruncOp V = truncop_V(mac, window);
    TruncOp Vstar = V.adjoint();
    std::vector<FieldElem> poch = pochhammer_qt_series(FieldElem(1), m_order);
    FieldElem inv_sqrt_qt = FieldElem::sqrt_qt().inverse();

    for (int a = 0; a <= max_deg && rep.passed(); ++a) {
        auto in_list = partitions_of(a);
        for (int b = 0; b <= max_deg && rep.passed(); ++b) {
            auto out_list = partitions_of(b);
            // RHS m-coefficients: sum_{k+d=j} poch_k (qt)^{-d/2} (V*)[b<-d] V[d<-a]
            std::vector<std::vector<std::vector<FieldElem>>> rhs(
                static_cast<std::size_t>(m_order) + 1,
                std::vector<std::vector<FieldElem>>(out_list.size(),
                                                    std::vector<FieldElem>(in_list.size())));
            for (int d = 0; d <= m_order; ++d) {
                const auto& mv = V.block(d, a);
                const auto& mvs = Vstar.block(b, d);
                auto mid = partitions_of(d);
                std::vector<std::vector<FieldElem>> prod(out_list.size(),
                                                         std::vector<FieldElem>(in_list.size()));
                for (std::size_t i = 0; i < out_list.size(); ++i)
                    for (std::size_t j = 0; j < in_list.size(); ++j)
                        for (std::size_t k = 0; k < mid.size(); ++k) prod[i][j] += mvs[i][k] * mv[k][j];
                FieldElem scale = inv_sqrt_qt.pow(d);
                for (int k = 0; k + d <= m_order; ++k)
                    for (std::size_t i = 0; i < out_list.size(); ++i)
                        for (std::size_t j = 0; j < in_list.size(); ++j) {
                            FieldElem add = poch[static_cast<std::size_t>(k)] * scale * prod[i][j];
                            rhs[static_cast<std::size_t>(k + d)][i][j] += add;
                        }
            }
            // LHS: m-polynomial entries of W
            for (std::size_t j = 0; j < in_list.size() && rep.passed(); ++j) {
                SymFunc w = op_W(SymFunc::p_mu(in_list[j]), max_deg);
                for (std::size_t i = 0; i < out_list.size() && rep.passed(); ++i) {
                    auto mcoeffs = w.coeff(out_list[i]).expand_m();
                    for (int deg = 0; deg <= m_order; ++deg) {
                        FieldElem lhs;
                        auto it = mcoeffs.find(deg);
                        if (it != mcoeffs.end()) lhs = it->second;
                        if (lhs != rhs[static_cast<std::size_t>(deg)][i][j]) {
                            rep.fail_with("entry <" + out_list[i].str() + "," + in_list[j].str() +
                                          "> at m^" + std::to_string(deg) + ": lhs = " + lhs.str() +
                                          ", rhs = " + rhs[static_cast<std::size_t>(deg)][i][j].str());
                            break;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

Report check_comm_phi(int order, int deg) {
    Report rep;
    rep.identity = "comm_phi: e^{phi_-(z)} e^{phi_+(w)} = (sqrt(qt) w/z)_{q,t} e^{phi_+(w)} e^{phi_-(z)}";
    rep.set_param("marker-order", std::to_string(order));
    rep.set_param("max-degree", std::to_string(deg));

    FieldElem one(1);
    AdamsRule raise_rule(-one / ((one - FieldElem::q()) * (one - FieldElem::t())));
    AdamsRule lower_rule(FieldElem::sqrt_qt());
    std::vector<FieldElem> central = pochhammer_qt_series(FieldElem::sqrt_qt(), order);

    for (int d = 0; d <= deg && rep.passed(); ++d) {
        for (const auto& mu : partitions_of(d)) {
            SymFunc f = SymFunc::p_mu(mu);
            for (int r = 0; r <= order && rep.passed(); ++r) {
                for (int s = 0; s <= order; ++s) {
                    SymFunc lhs = gamma_plus_component(lower_rule, s, gamma_minus_component(raise_rule, r, f));
                    SymFunc rhs;
                    for (int j = 0; j <= std::min(r, s); ++j) {
                        SymFunc term = gamma_minus_component(
                            raise_rule, r - j, gamma_plus_component(lower_rule, s - j, f));
                        rhs += term.scale(central[static_cast<std::size_t>(j)]);
                    }
                    if (lhs != rhs) {
                        rep.fail_with("input p_" + mu.str() + " at w-order " + std::to_string(r) +
                                      ", z-order " + std::to_string(s));
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

Report check_heisenberg(int max_index, int max_deg) {
    Report rep;
    rep.identity = "heisenberg: [alpha_n, alpha_m] = delta_{n+m} n w(n)^{-1}";
    rep.set_param("max-index", std::to_string(max_index));
    rep.set_param("max-degree", std::to_string(max_deg));
    for (int n = -max_index; n <= max_index && rep.passed(); ++n) {
        if (n == 0) continue;
        for (int m = -max_index; m <= max_index && rep.passed(); ++m) {
            if (m == 0) continue;
            for (int d = 0; d <= max_deg; ++d) {
                for (const auto& mu : partitions_of(d)) {
                    SymFunc f = SymFunc::p_mu(mu);
                    SymFunc comm = alpha(n, alpha(m, f)) - alpha(m, alpha(n, f));
                    SymFunc expect;
                    if (n + m == 0)
                        expect = f.scale(FieldElem(n) / weight_w(Partition({std::abs(n)})));
                    if (comm != expect) {
                        rep.fail_with("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                      " on p_" + mu.str());
                        break;
                    }
                }
                if (!rep.passed()) break;
            }
        }
    }
    return rep;
}

}  // namespace macfock
