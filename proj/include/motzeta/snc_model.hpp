#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/numbers.hpp"
#include "motzeta/zeta_expr.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace motzeta {

// One irreducible component E_i of the special fiber: multiplicity N_i in
// X_k and coefficient nu_i of div_X(omega) as a section of the logarithmic
// relative canonical bundle omega_{X/R}(X_red - X_k). Negative nu is legal
// (Kodaira type II has nu = -1 on the multiplicity-6 component).
struct Component {
    std::string id;
    long N = 1;
    long nu = 0;
};

// A connected piece of the open stratum E_J^o, together with the class of
// its mu_{N_J}-cover (an input, not derived) and optional facet incidences:
// for each j in J (|J| >= 2) the piece of stratum J \ {j} containing this
// one.
struct StratumPiece {
    std::string id;
    std::vector<std::string> J;
    MotClass tilde_class;
    std::map<std::string, std::string> facets; // component id -> piece id; empty = absent
    bool has_facets() const { return !facets.empty(); }
};

struct SncModelData {
    std::string name;
    long dim = 1;
    std::vector<Component> components;
    std::vector<StratumPiece> pieces;

    const Component* find_component(const std::string& id) const;
    const StratumPiece* find_piece(const std::string& id) const;
};

// Empty iff all structural invariants hold; one human-readable diagnostic
// per violation, each naming the offending component/piece.
std::vector<std::string> validate(const SncModelData& m);

// Throws std::invalid_argument carrying the diagnostics when validation
// fails.
void require_valid(const SncModelData& m);

// Z = sum over pieces of tilde_class (L-1)^(|J|-1) prod_j L^(-nu_j) T^(N_j)
//     / (1 - L^(-nu_j) T^(N_j)).
ZetaExpr zeta_from_model(const SncModelData& m);

Rat min_weight(const SncModelData& m);   // min(nu_i/N_i) + 1
Rat largest_pole(const SncModelData& m); // 1 - min_weight = -min(nu_i/N_i)

struct Skeleton {
    std::vector<std::string> faces; // piece ids, all ratios minimal
    long delta = 0;                 // max |J| - 1 over faces
    Rat min_weight;
    std::map<std::string, Rat> vertex_weights; // per component: nu/N + 1
};

Skeleton essential_skeleton(const SncModelData& m);
long degeneracy_index(const SncModelData& m);

// Affine weight at barycentric-style coordinates w on the face of `piece`:
// sum_j w_j nu_j + 1 under the constraint sum_j w_j N_j = 1, w_j >= 0.
// Missing coordinates count as zero. Throws std::invalid_argument when the
// constraint fails.
Rat weight_at(const SncModelData& m, const std::string& piece_id,
              const std::map<std::string, Rat>& w);

// Betti numbers over Q of the piece Delta-complex (one face per piece),
// boundary ranks by exact Gaussian elimination. Throws std::domain_error
// when facet data is missing. The skeleton variant restricts to skeleton
// faces.
std::vector<long> dual_complex_homology(const SncModelData& m);
std::vector<long> skeleton_homology(const SncModelData& m);

struct PseudoManifoldReport {
    bool connected = false;
    bool pure = false;
    bool codim1_at_most_two = false; // every codim-1 face in <= 2 top faces
    std::vector<std::string> boundary; // codim-1 faces in exactly one top face
    bool closed() const { return connected && pure && codim1_at_most_two && boundary.empty(); }
};

PseudoManifoldReport pseudo_manifold_check(const SncModelData& m);

// Component id -> chi(E_i^o) = chi(sum of singleton tilde classes) / N_i;
// throws std::domain_error ("inconsistent cover class") on non-divisibility.
std::map<std::string, Int> euler_open_strata(const SncModelData& m);

// sum_i N_i chi(E_i^o); invariant under stratum blow-ups.
Int nearby_euler(const SncModelData& m);

// Blow-up of a maximal stratum piece with |J| >= 2 and equal multiplicities
// N_j (semistable-style data, trivial cover transport). New exceptional
// component: N_0 = sum N_j, nu_0 = sum nu_j; the piece is replaced by one
// piece {0} u S per proper subset S of J with class tilde(P)(L-1)^(|J|-1-|S|).
SncModelData blowup_stratum(const SncModelData& m, const std::string& piece_id);

} // namespace motzeta
