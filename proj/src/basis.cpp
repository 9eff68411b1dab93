#include "macfock/basis.hpp"

#include <mutex>
#include <stdexcept>

namespace macfock {

namespace {

// number of functions from the parts of mu (as a sequence) to the slots of
// lambda such that the parts landing in slot i sum to lambda_i
Int count_refinements(const Partition& mu, const Partition& lambda) {
    std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
    const auto& parts = mu.parts();
    Int total(0);
    std::function<void(std::size_t, Int)> go = [&](std::size_t idx, Int ways) {
        if (idx == parts.size()) {
            for (int r : remaining)
                if (r != 0) return;
            total += ways;
            return;
        }
        for (std::size_t s = 0; s < remaining.size(); ++s) {
            if (remaining[s] >= parts[idx]) {
                remaining[s] -= parts[idx];
                go(idx + 1, ways);
                remaining[s] += parts[idx];
            }
        }
    };
    go(0, Int(1));
    return total;
}

struct DegreeTables {
    std::vector<Partition> list;                       // canonical order within the degree
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<FieldElem>> p_in_m;        // row mu: p_mu = sum_l row[l] m_l
    std::vector<std::vector<FieldElem>> m_in_p;        // row mu: m_mu = sum_l row[l] p_l
    std::vector<std::vector<Int>> character;           // character[l][m] = chi^lambda(mu)
};

const DegreeTables& tables(int d) {
    static std::mutex mutex;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.list = partitions_of(d);
    for (std::size_t i = 0; i < t.list.size(); ++i) t.index.emplace(t.list[i], i);
    std::size_t n = t.list.size();

    t.p_in_m.assign(n, std::vector<FieldElem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = count_refinements(t.list[i], t.list[j]);
            if (c != 0) t.p_in_m[i][j] = FieldElem(c);
        }

    // invert: nonzero entries have lambda >= mu in dominance, so in canonical
    // order the matrix is lower triangular with nonzero diagonal
    t.m_in_p.assign(n, std::vector<FieldElem>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FieldElem> row(n);
        row[i] = FieldElem(1);
        // solve row = sum_k x_k p_in_m[k] for x, sweeping columns from i down
        std::vector<FieldElem> x(n);
        for (std::size_t j = i + 1; j-- > 0;) {
            FieldElem v = row[j];
            for (std::size_t k = j + 1; k <= i; ++k) v -= x[k] * t.p_in_m[k][j];
            x[j] = v / t.p_in_m[j][j];
        }
        t.m_in_p[i] = std::move(x);
    }

    t.character.assign(n, std::vector<Int>(n));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) t.character[l][m] = sym_character(t.list[l], t.list[m]);

    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace

Int sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| = |mu|");
    if (lambda.size() == 0) return Int(1);
    // beta numbers: first-column hook lengths lambda_i + len - i
    std::vector<int> beta;
    int len = lambda.length();
    for (int i = 1; i <= len; ++i) beta.push_back(lambda.part(i) + len - i);
    std::function<Int(std::vector<int>, std::size_t)> go = [&](std::vector<int> b, std::size_t k) -> Int {
        if (k == mu.parts().size()) return Int(1);
        int r = mu.parts()[k];
        Int sum(0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            int target = b[i] - r;
            if (target < 0) continue;
            bool occupied = false;
            int crossings = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (j == i) continue;
                if (b[j] == target) occupied = true;
                if (b[j] > target && b[j] < b[i]) ++crossings;
            }
            if (occupied) continue;
            std::vector<int> nb = b;
            nb[i] = target;
            Int sub = go(std::move(nb), k + 1);
            sum += (crossings % 2) ? -sub : sub;
        }
        return sum;
    };
    return go(std::move(beta), 0);
}

SymFunc monomial_sym(const Partition& mu) {
    const auto& t = tables(mu.size());
    std::size_t i = t.index.at(mu);
    SymFunc f;
    for (std::size_t j = 0; j < t.list.size(); ++j)
        if (!t.m_in_p[i][j].is_zero()) f.add_term(t.list[j], t.m_in_p[i][j]);
    return f;
}

SymFunc schur_sym(const Partition& mu) {
    const auto& t = tables(mu.size());
    std::size_t l = t.index.at(mu);
    SymFunc f;
    for (std::size_t m = 0; m < t.list.size(); ++m) {
        if (t.character[l][m] == 0) continue;
        f.add_term(t.list[m], FieldElem(t.character[l][m]) / FieldElem(t.list[m].zcent()));
    }
    return f;
}

Expansion basis_convert(const SymFunc& f, Basis target) {
    Expansion out;
    if (target == Basis::power) {
        for (const auto& [mu, c] : f.terms()) out.emplace(mu, c);
        return out;
    }
    for (const auto& [mu, c] : f.terms()) {
        const auto& t = tables(mu.size());
        std::size_t i = t.index.at(mu);
        for (std::size_t j = 0; j < t.list.size(); ++j) {
            FieldElem w;
            if (target == Basis::monomial) {
                w = t.p_in_m[i][j];
            } else {
                // p_mu = sum_lambda chi^lambda(mu) s_lambda
                w = FieldElem(t.character[j][i]);
            }
            if (w.is_zero()) continue;
            auto [it, inserted] = out.emplace(t.list[j], c * w);
            if (!inserted) {
                it->second += c * w;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SymFunc from_expansion(const Expansion& e, Basis source) {
    SymFunc f;
    for (const auto& [mu, c] : e) {
        switch (source) {
            case Basis::power:
                f.add_term(mu, c);
                break;
            case Basis::monomial:
                f += monomial_sym(mu).scale(c);
                break;
            case Basis::schur:
                f += schur_sym(mu).scale(c);
                break;
        }
    }
    return f;
}

}  // namespace macfock
