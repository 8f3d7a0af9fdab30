#include "motzeta/monodromy.hpp"

#include "motzeta/zeta_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace motzeta {

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
    for (const auto& [d, e] : o.exps) {
        Int& slot = exps[d];
        slot += e;
        if (slot == 0) exps.erase(d);
    }
    return *this;
}

CycloProduct CycloProduct::operator*(const CycloProduct& o) const {
    CycloProduct r(*this);
    r *= o;
    return r;
}

Int CycloProduct::degree() const {
    Int s = 0;
    for (const auto& [d, e] : exps) s += Int(d) * e;
    return s;
}

std::string CycloProduct::to_string() const {
    if (exps.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, e] : exps) {
        if (!first) out << " * ";
        first = false;
        out << "(t";
        if (d != 1) out << "^" << d;
        out << " - 1)^" << e.get_str();
    }
    return out.str();
}

CycloProduct acampo_zeta(const SncModelData& m) {
    auto chi = euler_open_strata(m);
    CycloProduct z;
    for (const auto& c : m.components) {
        Int& slot = z.exps[c.N];
        slot -= chi.at(c.id);
    }
    for (auto it = z.exps.begin(); it != z.exps.end();)
        it = (it->second == 0) ? z.exps.erase(it) : std::next(it);
    return z;
}

std::map<long, Int> cyclotomic_multiplicities(const CycloProduct& z) {
    std::map<long, Int> c;
    for (const auto& [d, e] : z.exps)
        for (long m = 1; m <= d; ++m)
            if (d % m == 0) c[m] += e;
    for (auto it = c.begin(); it != c.end();)
        it = (it->second == 0) ? c.erase(it) : std::next(it);
    return c;
}

std::set<long> certified_eigenvalues(const CycloProduct& z) {
    std::set<long> out;
    for (const auto& [m, cm] : cyclotomic_multiplicities(z)) out.insert(m);
    return out;
}

LaurentPoly cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // t^m - 1 divided by the proper cyclotomic factors; exact division in
    // Z[t] by monic divisors.
    LaurentPoly num = LaurentPoly::monomial(1, m) - LaurentPoly(1);
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        LaurentPoly div = cyclotomic_polynomial(d);
        // long division, monic divisor
        LaurentPoly q;
        LaurentPoly rem = num;
        const long db = div.max_exp();
        while (!rem.is_zero() && rem.max_exp() >= db) {
            LaurentPoly t = LaurentPoly::monomial(rem.leading_coeff(), rem.max_exp() - db);
            q += t;
            rem -= t * div;
        }
        if (!rem.is_zero()) throw std::logic_error("cyclotomic division not exact");
        num = q;
    }
    return num;
}

std::string MPReport::predicted_eigenvalue() const {
    return "exp(-2*pi*i*" + rat_str(min_weight) + ")";
}

MPReport check_monodromy_property(const SncModelData& m) {
    require_valid(m);
    MPReport rep;
    rep.min_weight = min_weight(m);
    rep.delta = degeneracy_index(m);

    auto cm = cyclotomic_multiplicities(acampo_zeta(m));
    ZetaExpr z = zeta_from_model(m);
    auto poles = z.candidate_poles();
    rep.all_certified = true;
    for (auto it = poles.rbegin(); it != poles.rend(); ++it) {
        MPPoleEntry e;
        e.q = it->first;
        e.m = to_long(Int(e.q.get_den()));
        auto cit = cm.find(e.m);
        e.c_m = cit == cm.end() ? Int(0) : cit->second;
        e.certified = (e.c_m != 0);
        if (!e.certified) rep.all_certified = false;
        rep.poles.push_back(std::move(e));
    }
    return rep;
}

} // namespace motzeta
