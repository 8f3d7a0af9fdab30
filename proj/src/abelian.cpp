#include "motzeta/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motzeta {

std::map<long, Int> eulerian_numerator(long t) {
    if (t < 0) throw std::invalid_argument("toric rank must be >= 0");
    std::map<long, Int> p; // P_0 = T
    p[1] = 1;
    for (long k = 1; k <= t; ++k) {
        // P_k = T (P'(1-T) + k P)
        std::map<long, Int> next;
        for (const auto& [e, c] : p) {
            // T P' contributes e c T^e, its (1-T) twist -e c T^(e+1),
            // and k T P contributes k c T^(e+1).
            next[e] += Int(e) * c;
            next[e + 1] += Int(k - e) * c;
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        p = std::move(next);
    }
    return p;
}

ZetaExpr zeta_semiabelian(const SemiAbelianInput& inp) {
    if (inp.t < 0) throw std::invalid_argument("toric rank must be >= 0");
    if (!inp.class0.is_zero()) {
        auto dim = virtual_dim(inp.class0);
        if (dim && inp.t > *dim)
            throw std::invalid_argument("toric rank exceeds the dimension of the fiber class");
    }
    const MotClass scale = inp.class0 * MotClass::lefschetz(-inp.ord);
    DenomMultiset den;
    den[DenomFactor{0, 1}] = static_cast<int>(inp.t) + 1;
    std::vector<GeomTerm> terms;
    for (const auto& [e, c] : eulerian_numerator(inp.t))
        terms.push_back(GeomTerm{scale * MotClass(Int(c)), e, den});
    return ZetaExpr(std::move(terms));
}

std::vector<std::string> validate_oracle_table(const AbelianOracleTable& tab) {
    std::vector<std::string> diag;
    if (tab.e < 1) diag.push_back("e must be >= 1");
    if (tab.c < 0) diag.push_back("base change conductor must be >= 0");
    if (tab.t_pot < 0) diag.push_back("potential toric rank must be >= 0");
    if (tab.rows.empty()) diag.push_back("table has no rows");
    for (const auto& [d, row] : tab.rows) {
        if (d < 1) diag.push_back("row index " + std::to_string(d) + " must be >= 1");
        if (row.t < 0) diag.push_back("row " + std::to_string(d) + ": toric rank must be >= 0");
        Rat scaled = row.ord * tab.e;
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            diag.push_back("row " + std::to_string(d) + ": ord not in (1/e)Z");
    }
    if (!diag.empty()) return diag;

    // fact (1): ord(m + qe) = ord(m) + c e q.
    for (const auto& [m, rm] : tab.rows)
        for (const auto& [d, rd] : tab.rows) {
            if (d <= m || (d - m) % tab.e != 0) continue;
            const long q = (d - m) / tab.e;
            Rat expect = rm.ord + tab.c * tab.e * q;
            if (rd.ord != expect)
                diag.push_back("fact (1) violated: ord(" + std::to_string(d) + ") = " +
                               rat_str(rd.ord) + ", expected ord(" + std::to_string(m) + ") + c e " +
                               std::to_string(q) + " = " + rat_str(expect));
        }

    // fact (2): class(md) = d^(t(m)) class(m), t(md) = t(m), d prime to e'.
    for (const auto& [m, rm] : tab.rows)
        for (const auto& [md, rmd] : tab.rows) {
            if (md <= m || md % m != 0) continue;
            const long d = md / m;
            const long eprime = tab.e / std::gcd(m, tab.e);
            if (std::gcd(d, eprime) != 1) continue;
            MotClass expect = rm.cls * MotClass(int_pow(Int(d), static_cast<unsigned long>(rm.t)));
            if (rmd.cls != expect)
                diag.push_back("fact (2) violated: class(" + std::to_string(md) + ") != " +
                               std::to_string(d) + "^t(" + std::to_string(m) + ") * class(" +
                               std::to_string(m) + ")");
            if (rmd.t != rm.t)
                diag.push_back("fact (2) violated: toric rank t(" + std::to_string(md) +
                               ") = " + std::to_string(rmd.t) + " != t(" + std::to_string(m) +
                               ") = " + std::to_string(rm.t));
        }
    return diag;
}

ScaledExpansion zeta_truncated(const AbelianOracleTable& tab, int depth) {
    if (tab.e < 1) throw std::invalid_argument("e must be >= 1");
    ScaledExpansion out;
    out.e = tab.e;
    for (long d = 1; d <= depth; ++d) {
        auto it = tab.rows.find(d);
        if (it == tab.rows.end())
            throw std::invalid_argument("missing row d = " + std::to_string(d));
        Rat scaled = it->second.ord * tab.e; // e * ord in Z
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw std::invalid_argument("row " + std::to_string(d) + ": ord not in (1/e)Z");
        const long eord = to_long(Int(scaled.get_num()));
        // class_d L^(-ord_d) with L^(-ord) = w^(-2 e ord), w = u^(1/e)
        LaurentPoly coeff =
            it->second.cls.substitute_pow(tab.e) * LaurentPoly::monomial(1, -2 * eord);
        out.coeffs.push_back(std::move(coeff));
    }
    return out;
}

MotClass chevalley_class(const MotClass& sharp, long unipotent_rank, long toric_rank) {
    if (unipotent_rank < 0 || toric_rank < 0)
        throw std::invalid_argument("ranks must be >= 0");
    return sharp * MotClass::lefschetz(unipotent_rank) *
           (MotClass::lefschetz() - MotClass(1)).pow(static_cast<unsigned long>(toric_rank));
}

AbelianVerdict check_abelian_theorem(const ZetaExpr& z, const Rat& c, long t_pot) {
    AbelianVerdict v;
    auto poles = z.candidate_poles();
    Rat cc(c);
    cc.canonicalize();
    std::ostringstream detail;
    if (poles.size() != 1) {
        detail << "expected a unique pole, found " << poles.size();
        v.detail = detail.str();
        return v;
    }
    const auto& [q, upper] = *poles.begin();
    if (q != cc) {
        detail << "pole at " << rat_str(q) << ", expected " << rat_str(cc);
        v.detail = detail.str();
        return v;
    }
    if (upper != t_pot + 1) {
        detail << "pole order " << upper << ", expected " << (t_pot + 1);
        v.detail = detail.str();
        return v;
    }
    auto [lower, up] = z.certify_pole_order(cc);
    if (lower != t_pot + 1 || up != t_pot + 1) {
        detail << "certified order (" << lower << ", " << up << "), expected ("
               << (t_pot + 1) << ", " << (t_pot + 1) << ")";
        v.detail = detail.str();
        return v;
    }
    v.pass = true;
    v.detail = "unique pole " + rat_str(cc) + " of order " + std::to_string(t_pot + 1);
    return v;
}

} // namespace motzeta
