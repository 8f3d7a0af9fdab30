#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/numbers.hpp"
#include "motzeta/snc_model.hpp"

#include <map>
#include <set>
#include <string>

namespace motzeta {

// prod_d (t^d - 1)^(e_d), sparse in d with no zero exponents stored.
// Multiplication is pointwise addition of exponent maps.
struct CycloProduct {
    std::map<long, Int> exps;

    CycloProduct& operator*=(const CycloProduct& o);
    CycloProduct operator*(const CycloProduct& o) const;
    bool operator==(const CycloProduct& o) const { return exps == o.exps; }

    // Total degree sum_d d * e_d (the degree of the alternating product).
    Int degree() const;
    std::string to_string() const;
};

// A'Campo: e_d = -sum over components with N_i = d of chi(E_i^o).
CycloProduct acampo_zeta(const SncModelData& m);

// Rewrite through t^d - 1 = prod_{m|d} Phi_m: c_m = sum_{d : m|d} e_d,
// zero values omitted.
std::map<long, Int> cyclotomic_multiplicities(const CycloProduct& z);

// Orders m with c_m != 0: every primitive m-th root of unity is forced to
// be a monodromy eigenvalue. c_m = 0 is inconclusive, never a refutation.
std::set<long> certified_eigenvalues(const CycloProduct& z);

// Phi_m as an integer polynomial in t (computed by exact division).
LaurentPoly cyclotomic_polynomial(long m);

struct MPPoleEntry {
    Rat q;
    long m = 1;    // denominator of q in reduced form
    Int c_m;       // cyclotomic multiplicity at m
    bool certified = false;
};

struct MPReport {
    std::vector<MPPoleEntry> poles; // largest pole first
    bool all_certified = false;     // verdict; "inconclusive" is never "refuted"
    Rat min_weight;
    long delta = 0;
    // Prediction block (emitted, not verified): eigenvalue
    // exp(-2 pi i min(omega)) with a Jordan block of size >= delta + 1.
    std::string predicted_eigenvalue() const;
    long jordan_block_at_least() const { return delta + 1; }
};

MPReport check_monodromy_property(const SncModelData& m);

} // namespace motzeta
