#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/numbers.hpp"
#include "motzeta/zeta_expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace motzeta {

// Semi-abelian reduction data (e = 1): class of the Neron special fiber,
// toric rank t, and the order of the distinguished-up-to-unit volume form.
struct SemiAbelianInput {
    MotClass class0;
    long t = 0;
    long ord = 0;
};

// Z = class0 L^(-ord) sum_{d>=1} d^t T^d, realized through the Eulerian
// identity sum d^t T^d = P_t(T)/(1-T)^(t+1) with P_t = T(P'_{t-1}(1-T) +
// t P_{t-1}). Unique pole at 0 of order t+1.
ZetaExpr zeta_semiabelian(const SemiAbelianInput& inp);

// Numerator polynomial P_t of the Eulerian identity (integer coefficients).
std::map<long, Int> eulerian_numerator(long t);

struct OracleRow {
    MotClass cls;
    Rat ord;
    long t = 0;
};

// Finite table of base-change data for a ramified abelian variety: the
// validators check the two key facts the unique-pole proof rests on.
struct AbelianOracleTable {
    long e = 1;
    Rat c;      // base change conductor, >= 0
    long t_pot = 0;
    std::map<long, OracleRow> rows; // d -> row
};

// fact (1): ord(m + qe) = ord(m) + c e q for all positive m, q;
// fact (2): class(md) = d^(t(m)) class(m) and t(md) = t(m) whenever d is
// prime to e' = e / gcd(m, e). Every related pair of present rows is
// checked exactly; violations are listed, never thrown.
std::vector<std::string> validate_oracle_table(const AbelianOracleTable& tab);

// Coefficients of T^1 .. T^D: class_d L^(-ord_d), written in the refined
// variable w = u^(1/e) so exponents stay integral.
struct ScaledExpansion {
    long e = 1; // coefficients are Laurent polynomials in w = u^(1/e)
    std::vector<LaurentPoly> coeffs;
};

// Throws std::invalid_argument on a missing row or ord granularity not in
// (1/e)Z.
ScaledExpansion zeta_truncated(const AbelianOracleTable& tab, int depth);

// Chevalley decomposition class identity: [G] = [G#] L^u (L-1)^tau.
MotClass chevalley_class(const MotClass& sharp, long unipotent_rank, long toric_rank);

struct AbelianVerdict {
    bool pass = false;
    std::string detail;
};

// Passes iff the candidate poles are exactly {c : t_pot + 1} and the
// certified order at c is (t_pot + 1, t_pot + 1).
AbelianVerdict check_abelian_theorem(const ZetaExpr& z, const Rat& c, long t_pot);

} // namespace motzeta
