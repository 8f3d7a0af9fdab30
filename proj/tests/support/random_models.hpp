#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/snc_model.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace motzeta::testing {

// Random Laurent polynomial (arbitrary signs, possibly negative exponents).
inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 4,
                                  long min_exp = -3, long max_exp = 5,
                                  long coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp(min_exp, max_exp);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

// Class of effective-variety shape: even top degree 2*dim, positive
// leading coefficient, arbitrary lower terms.
inline MotClass random_effective_class(std::mt19937_64& rng, long dim) {
    std::uniform_int_distribution<long> lead(1, 3);
    MotClass c = MotClass::monomial(lead(rng), 2 * dim);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> exp(0, std::max(0L, 2 * dim - 1));
    std::uniform_int_distribution<int> nterms(0, 3);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) c += MotClass::monomial(coeff(rng), exp(rng));
    if (c.is_zero() || c.leading_coeff() <= 0 || c.max_exp() != 2 * dim)
        c = MotClass::monomial(1, 2 * dim);
    return c;
}

// Random valid small model (<= 5 components, |J| <= 3) shaped like the
// combinatorial shadow of an actual snc-degeneration:
//  - equal weight ratios only through identical (N, nu) pairs,
//  - pieces face-closed (one piece per index set),
//  - effective-shape cover classes,
//  - no (dim+1)-clique whose common ratio is not the minimal one.
inline SncModelData random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dim_d(1, 3);
    std::uniform_int_distribution<int> ncomp_d(1, 5);
    std::uniform_int_distribution<int> nshape_d(1, 3);
    std::uniform_int_distribution<long> N_d(1, 4);
    std::uniform_int_distribution<long> nu_d(-2, 3);

    SncModelData m;
    m.dim = dim_d(rng);
    m.name = "random";
    const int ncomp = ncomp_d(rng);

    // Shapes with pairwise distinct ratios; component 0 carries the
    // minimal one, so min(omega) is realized at a known vertex.
    std::vector<std::pair<long, long>> shapes; // (N, nu)
    std::set<Rat> ratios;
    const int want = std::min(nshape_d(rng), ncomp);
    while (static_cast<int>(shapes.size()) < want) {
        long N = N_d(rng), nu = nu_d(rng);
        Rat r(nu, N);
        r.canonicalize();
        if (ratios.insert(r).second) shapes.emplace_back(N, nu);
    }
    std::size_t min_shape = 0;
    for (std::size_t s = 1; s < shapes.size(); ++s)
        if (make_rat(shapes[s].second, shapes[s].first) <
            make_rat(shapes[min_shape].second, shapes[min_shape].first))
            min_shape = s;
    std::uniform_int_distribution<std::size_t> shape_pick(0, shapes.size() - 1);
    for (int i = 0; i < ncomp; ++i) {
        auto [N, nu] = shapes[i == 0 ? min_shape : shape_pick(rng)];
        m.components.push_back(Component{"c" + std::to_string(i), N, nu});
    }
    Rat min_ratio = make_rat(m.components[0].nu, m.components[0].N);
    for (const auto& c : m.components) min_ratio = std::min(min_ratio, make_rat(c.nu, c.N));

    // Index sets: spanning tree of edges for connectivity, plus random
    // extras; close under subsets. For curves (dim 1) an edge is already a
    // full-dimensional clique, so the tree is starred through the minimal
    // vertex to keep constant-ratio cliques at the minimal ratio only.
    std::set<std::vector<int>> sets;
    for (int i = 0; i < ncomp; ++i) sets.insert({i});
    std::uniform_int_distribution<int> comp_pick(0, ncomp - 1);
    for (int i = 1; i < ncomp; ++i) {
        std::uniform_int_distribution<int> prev(0, i - 1);
        std::vector<int> e{m.dim == 1 ? 0 : prev(rng), i};
        std::sort(e.begin(), e.end());
        sets.insert(e);
    }
    const long maxJ = std::min<long>(3, m.dim + 1);
    std::uniform_int_distribution<int> extra_d(0, 3);
    const int extras = extra_d(rng);
    for (int k = 0; k < extras && ncomp >= 2; ++k) {
        std::uniform_int_distribution<long> size_d(2, std::min<long>(maxJ, ncomp));
        const long size = size_d(rng);
        std::set<int> J;
        while (static_cast<long>(J.size()) < size) J.insert(comp_pick(rng));
        std::vector<int> Jv(J.begin(), J.end());
        // Reject a full-dimensional clique of constant non-minimal ratio.
        if (static_cast<long>(Jv.size()) == m.dim + 1) {
            bool all_same = true;
            Rat r0 = make_rat(m.components[Jv[0]].nu, m.components[Jv[0]].N);
            for (int idx : Jv) {
                Rat r = make_rat(m.components[idx].nu, m.components[idx].N);
                if (r != r0) { all_same = false; break; }
            }
            if (all_same && r0 != min_ratio) continue;
        }
        sets.insert(Jv);
        // Face closure (proper nonempty subsets).
        if (Jv.size() == 3) {
            sets.insert({Jv[0], Jv[1]});
            sets.insert({Jv[0], Jv[2]});
            sets.insert({Jv[1], Jv[2]});
        }
    }

    int pid = 0;
    for (const auto& J : sets) {
        StratumPiece p;
        p.id = "p" + std::to_string(pid++);
        for (int idx : J) p.J.push_back(m.components[idx].id);
        p.tilde_class = random_effective_class(rng, std::max(0L, m.dim + 1 - static_cast<long>(J.size())));
        m.pieces.push_back(std::move(p));
    }
    return m;
}

} // namespace motzeta::testing
