#include "motzeta/snc_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motzeta {

namespace {

std::map<std::string, std::size_t> component_index(const SncModelData& m) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < m.components.size(); ++i) idx[m.components[i].id] = i;
    return idx;
}

std::map<std::string, std::size_t> piece_index(const SncModelData& m) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < m.pieces.size(); ++i) idx[m.pieces[i].id] = i;
    return idx;
}

// J as sorted component indices (canonical vertex order for boundary maps).
std::vector<std::size_t> sorted_J(const StratumPiece& p,
                                  const std::map<std::string, std::size_t>& cidx) {
    std::vector<std::size_t> js;
    js.reserve(p.J.size());
    for (const auto& id : p.J) js.push_back(cidx.at(id));
    std::sort(js.begin(), js.end());
    return js;
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

long rank_over_Q(std::vector<std::vector<Rat>> mat) {
    long rank = 0;
    const std::size_t rows = mat.size();
    const std::size_t cols = rows == 0 ? 0 : mat[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && mat[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(mat[pivot], mat[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Rat factor = mat[i][c] / mat[r][c];
            for (std::size_t j = c; j < cols; ++j) mat[i][j] -= factor * mat[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Betti numbers of the Delta-complex spanned by the given piece indices.
std::vector<long> betti_of(const SncModelData& m, const std::vector<std::size_t>& faces) {
    auto cidx = component_index(m);
    auto pidx = piece_index(m);

    std::set<std::size_t> face_set(faces.begin(), faces.end());
    long maxdim = 0;
    std::map<long, std::vector<std::size_t>> by_dim; // dim -> piece indices
    for (std::size_t i : faces) {
        const long d = static_cast<long>(m.pieces[i].J.size()) - 1;
        by_dim[d].push_back(i);
        maxdim = std::max(maxdim, d);
        if (d >= 1 && !m.pieces[i].has_facets())
            throw std::domain_error("facet data required for homology (piece '" +
                                    m.pieces[i].id + "')");
    }

    // Position of each face within its dimension layer.
    std::map<std::size_t, std::size_t> pos;
    for (auto& [d, v] : by_dim)
        for (std::size_t k = 0; k < v.size(); ++k) pos[v[k]] = k;

    std::vector<long> betti;
    std::vector<long> rank(static_cast<std::size_t>(maxdim) + 2, 0);
    for (long d = 1; d <= maxdim; ++d) {
        const auto& top = by_dim.count(d) ? by_dim[d] : std::vector<std::size_t>{};
        const auto& low = by_dim.count(d - 1) ? by_dim[d - 1] : std::vector<std::size_t>{};
        if (top.empty() || low.empty()) continue;
        std::vector<std::vector<Rat>> mat(low.size(), std::vector<Rat>(top.size(), Rat(0)));
        for (std::size_t c = 0; c < top.size(); ++c) {
            const StratumPiece& p = m.pieces[top[c]];
            auto js = sorted_J(p, cidx);
            for (std::size_t k = 0; k < js.size(); ++k) {
                const std::string& drop = m.components[js[k]].id;
                auto fit = p.facets.find(drop);
                if (fit == p.facets.end())
                    throw std::domain_error("facet data required for homology (piece '" +
                                            p.id + "')");
                std::size_t fi = pidx.at(fit->second);
                if (!face_set.count(fi))
                    throw std::domain_error("facet '" + fit->second +
                                            "' escapes the complex (piece '" + p.id + "')");
                const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
                mat[pos.at(fi)][c] += sign;
            }
        }
        rank[static_cast<std::size_t>(d)] = rank_over_Q(std::move(mat));
    }
    for (long d = 0; d <= maxdim; ++d) {
        const long nd = by_dim.count(d) ? static_cast<long>(by_dim[d].size()) : 0;
        betti.push_back(nd - rank[static_cast<std::size_t>(d)] -
                        rank[static_cast<std::size_t>(d) + 1]);
    }
    return betti;
}

std::vector<std::size_t> skeleton_face_indices(const SncModelData& m) {
    require_valid(m);
    auto cidx = component_index(m);
    // Minimal ratio nu/N over components.
    Rat minr = make_rat(m.components[0].nu, m.components[0].N);
    for (const auto& c : m.components) minr = std::min(minr, make_rat(c.nu, c.N));
    std::vector<std::size_t> faces;
    for (std::size_t i = 0; i < m.pieces.size(); ++i) {
        bool all_min = true;
        for (const auto& id : m.pieces[i].J) {
            const Component& c = m.components[cidx.at(id)];
            if (make_rat(c.nu, c.N) != minr) { all_min = false; break; }
        }
        if (all_min) faces.push_back(i);
    }
    return faces;
}

} // namespace

const Component* SncModelData::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const StratumPiece* SncModelData::find_piece(const std::string& id) const {
    for (const auto& p : pieces)
        if (p.id == id) return &p;
    return nullptr;
}

std::vector<std::string> validate(const SncModelData& m) {
    std::vector<std::string> diag;
    if (m.dim < 1) diag.push_back("dimension must be positive");
    std::set<std::string> cids;
    for (const auto& c : m.components) {
        if (c.N < 1) diag.push_back("multiplicity must be positive (component '" + c.id + "')");
        if (!cids.insert(c.id).second)
            diag.push_back("duplicate component id '" + c.id + "'");
    }
    if (m.components.empty()) diag.push_back("model has no components");

    std::set<std::string> pids;
    std::set<std::string> singleton_covered;
    for (std::size_t i = 0; i < m.pieces.size(); ++i) {
        const auto& p = m.pieces[i];
        if (!pids.insert(p.id).second) diag.push_back("duplicate piece id '" + p.id + "'");
        if (p.J.empty()) {
            diag.push_back("piece '" + p.id + "' has empty J");
            continue;
        }
        std::set<std::string> Jset(p.J.begin(), p.J.end());
        if (Jset.size() != p.J.size())
            diag.push_back("piece '" + p.id + "' repeats a component in J");
        for (const auto& id : Jset)
            if (!cids.count(id))
                diag.push_back("piece '" + p.id + "' references unknown component '" + id + "'");
        if (static_cast<long>(Jset.size()) > m.dim + 1)
            diag.push_back("stratum exceeds dimension bound (piece '" + p.id + "', |J|=" +
                           std::to_string(Jset.size()) + " > dim+1=" + std::to_string(m.dim + 1) +
                           ")");
        if (Jset.size() == 1) singleton_covered.insert(*Jset.begin());
    }
    for (const auto& c : m.components)
        if (!singleton_covered.count(c.id))
            diag.push_back("component '" + c.id + "' has no singleton piece");

    // Facet references: entries for each j in J, pointing at pieces with
    // index set J \ {j}.
    auto pidx = piece_index(m);
    for (const auto& p : m.pieces) {
        if (!p.has_facets()) continue;
        std::set<std::string> Jset(p.J.begin(), p.J.end());
        if (Jset.size() < 2) {
            diag.push_back("piece '" + p.id + "' has facets but |J| < 2");
            continue;
        }
        for (const auto& id : Jset) {
            auto it = p.facets.find(id);
            if (it == p.facets.end()) {
                diag.push_back("piece '" + p.id + "' is missing the facet for '" + id + "'");
                continue;
            }
            auto target = pidx.find(it->second);
            if (target == pidx.end()) {
                diag.push_back("piece '" + p.id + "' facet references unknown piece '" +
                               it->second + "'");
                continue;
            }
            std::set<std::string> expect(Jset);
            expect.erase(id);
            const auto& tJ = m.pieces[target->second].J;
            if (std::set<std::string>(tJ.begin(), tJ.end()) != expect)
                diag.push_back("piece '" + p.id + "' facet for '" + id +
                               "' has the wrong index set");
        }
        for (const auto& [id, tgt] : p.facets)
            if (!Jset.count(id))
                diag.push_back("piece '" + p.id + "' facet key '" + id + "' is not in J");
    }

    // Connectedness of the dual complex.
    if (!m.components.empty() && diag.empty()) {
        auto cidx = component_index(m);
        DisjointSet ds(m.components.size());
        for (const auto& p : m.pieces)
            for (std::size_t k = 1; k < p.J.size(); ++k)
                ds.unite(cidx.at(p.J[0]), cidx.at(p.J[k]));
        const std::size_t root = ds.find(0);
        for (std::size_t i = 1; i < m.components.size(); ++i)
            if (ds.find(i) != root) {
                diag.push_back("dual complex is disconnected");
                break;
            }
    }
    return diag;
}

void require_valid(const SncModelData& m) {
    auto diag = validate(m);
    if (diag.empty()) return;
    std::ostringstream out;
    out << "invalid model '" << m.name << "':";
    for (const auto& d : diag) out << "\n  - " << d;
    throw std::invalid_argument(out.str());
}

ZetaExpr zeta_from_model(const SncModelData& m) {
    require_valid(m);
    auto cidx = component_index(m);
    std::vector<GeomTerm> terms;
    terms.reserve(m.pieces.size());
    for (const auto& p : m.pieces) {
        GeomTerm t;
        long nu_sum = 0, N_sum = 0;
        for (const auto& id : p.J) {
            const Component& c = m.components[cidx.at(id)];
            t.denom[DenomFactor{-c.nu, c.N}] += 1;
            nu_sum += c.nu;
            N_sum += c.N;
        }
        t.coeff = p.tilde_class *
                  (MotClass::lefschetz() - MotClass(1)).pow(p.J.size() - 1) *
                  MotClass::lefschetz(-nu_sum);
        t.tpow = N_sum;
        if (t.tpow < 1) throw std::logic_error("model zeta term with zero T power");
        terms.push_back(std::move(t));
    }
    return ZetaExpr(std::move(terms));
}

Rat min_weight(const SncModelData& m) {
    require_valid(m);
    Rat minr = make_rat(m.components[0].nu, m.components[0].N);
    for (const auto& c : m.components) minr = std::min(minr, make_rat(c.nu, c.N));
    return Rat(minr + 1);
}

Rat largest_pole(const SncModelData& m) {
    Rat q = Rat(1) - min_weight(m);
    q.canonicalize();
    return q;
}

Skeleton essential_skeleton(const SncModelData& m) {
    Skeleton sk;
    auto faces = skeleton_face_indices(m);
    sk.min_weight = min_weight(m);
    long maxJ = 1;
    for (std::size_t i : faces) {
        sk.faces.push_back(m.pieces[i].id);
        maxJ = std::max<long>(maxJ, static_cast<long>(m.pieces[i].J.size()));
    }
    sk.delta = maxJ - 1;
    for (const auto& c : m.components) {
        sk.vertex_weights[c.id] = Rat(make_rat(c.nu, c.N) + 1);
    }
    return sk;
}

long degeneracy_index(const SncModelData& m) { return essential_skeleton(m).delta; }

Rat weight_at(const SncModelData& m, const std::string& piece_id,
              const std::map<std::string, Rat>& w) {
    require_valid(m);
    const StratumPiece* p = m.find_piece(piece_id);
    if (!p) throw std::invalid_argument("unknown piece '" + piece_id + "'");
    std::set<std::string> Jset(p->J.begin(), p->J.end());
    Rat constraint(0), value(1);
    for (const auto& [id, wj] : w) {
        if (!Jset.count(id))
            throw std::invalid_argument("coordinate '" + id + "' is not in J of '" + piece_id + "'");
        if (wj < 0) throw std::invalid_argument("coordinate '" + id + "' is negative");
        const Component* c = m.find_component(id);
        constraint += wj * c->N;
        value += wj * c->nu;
    }
    if (constraint != 1)
        throw std::invalid_argument("constraint sum w_j N_j = 1 violated (got " +
                                    rat_str(constraint) + ")");
    value.canonicalize();
    return value;
}

std::vector<long> dual_complex_homology(const SncModelData& m) {
    require_valid(m);
    std::vector<std::size_t> all(m.pieces.size());
    std::iota(all.begin(), all.end(), 0);
    return betti_of(m, all);
}

std::vector<long> skeleton_homology(const SncModelData& m) {
    return betti_of(m, skeleton_face_indices(m));
}

PseudoManifoldReport pseudo_manifold_check(const SncModelData& m) {
    PseudoManifoldReport rep;
    auto faces = skeleton_face_indices(m);
    auto pidx = piece_index(m);
    std::set<std::size_t> face_set(faces.begin(), faces.end());

    long delta = 0;
    for (std::size_t i : faces)
        delta = std::max<long>(delta, static_cast<long>(m.pieces[i].J.size()) - 1);

    for (std::size_t i : faces)
        if (m.pieces[i].J.size() >= 2 && !m.pieces[i].has_facets())
            throw std::domain_error("facet data required for pseudo-manifold check (piece '" +
                                    m.pieces[i].id + "')");

    // Face adjacency through facet links.
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < faces.size(); ++k) pos[faces[k]] = k;
    DisjointSet ds(faces.size());
    std::set<std::size_t> is_facet;
    std::map<std::size_t, int> top_count; // codim-1 face -> #incidences in top faces
    for (std::size_t i : faces) {
        const auto& p = m.pieces[i];
        for (const auto& [drop, tgt] : p.facets) {
            std::size_t fi = pidx.at(tgt);
            if (!face_set.count(fi)) continue; // cannot happen: skeleton is face-closed
            ds.unite(pos.at(i), pos.at(fi));
            is_facet.insert(fi);
            if (static_cast<long>(p.J.size()) - 1 == delta) top_count[fi] += 1;
        }
    }
    rep.connected = true;
    if (!faces.empty()) {
        const std::size_t root = ds.find(0);
        for (std::size_t k = 1; k < faces.size(); ++k)
            if (ds.find(k) != root) { rep.connected = false; break; }
    }

    rep.pure = true;
    for (std::size_t i : faces) {
        const bool maximal = !is_facet.count(i);
        if (maximal && static_cast<long>(m.pieces[i].J.size()) - 1 != delta) rep.pure = false;
    }

    rep.codim1_at_most_two = true;
    for (std::size_t i : faces) {
        if (static_cast<long>(m.pieces[i].J.size()) - 1 != delta - 1) continue;
        const int n = top_count.count(i) ? top_count.at(i) : 0;
        if (n > 2) rep.codim1_at_most_two = false;
        if (n == 1) rep.boundary.push_back(m.pieces[i].id);
    }
    std::sort(rep.boundary.begin(), rep.boundary.end());
    return rep;
}

std::map<std::string, Int> euler_open_strata(const SncModelData& m) {
    require_valid(m);
    std::map<std::string, Int> chi;
    std::map<std::string, MotClass> singleton_sum;
    for (const auto& p : m.pieces)
        if (p.J.size() == 1) singleton_sum[p.J[0]] += p.tilde_class;
    for (const auto& c : m.components) {
        Int e = euler_char(singleton_sum[c.id]);
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), Int(c.N).get_mpz_t());
        if (r != 0)
            throw std::domain_error("inconsistent cover class for component '" + c.id +
                                    "': chi = " + e.get_str() + " not divisible by N = " +
                                    std::to_string(c.N));
        chi[c.id] = q;
    }
    return chi;
}

Int nearby_euler(const SncModelData& m) {
    Int total = 0;
    for (const auto& [id, chi] : euler_open_strata(m)) {
        const Component* c = m.find_component(id);
        total += Int(c->N) * chi;
    }
    return total;
}

SncModelData blowup_stratum(const SncModelData& m, const std::string& piece_id) {
    require_valid(m);
    auto cidx = component_index(m);
    auto pidx = piece_index(m);
    const StratumPiece* P = m.find_piece(piece_id);
    if (!P) throw std::invalid_argument("unknown piece '" + piece_id + "'");
    const std::size_t r = P->J.size();
    if (r < 2) throw std::invalid_argument("stratum blow-up requires |J| >= 2");

    long commonN = -1, nu0 = 0, N0 = 0;
    for (const auto& id : P->J) {
        const Component& c = m.components[cidx.at(id)];
        if (commonN == -1) commonN = c.N;
        else if (c.N != commonN)
            throw std::invalid_argument("unsupported: nontrivial cover transport (unequal N_j)");
        nu0 += c.nu;
        N0 += c.N;
    }

    // The center must be maximal: no deeper piece may sit inside it.
    std::set<std::string> PJ(P->J.begin(), P->J.end());
    for (const auto& q : m.pieces) {
        std::set<std::string> QJ(q.J.begin(), q.J.end());
        if (QJ.size() <= PJ.size() || !std::includes(QJ.begin(), QJ.end(), PJ.begin(), PJ.end()))
            continue;
        // Descend q through facet maps down to P's index set.
        const StratumPiece* cur = &q;
        bool resolved = true;
        for (const auto& id : QJ) {
            if (PJ.count(id)) continue;
            auto it = cur->facets.find(id);
            if (it == cur->facets.end()) { resolved = false; break; }
            cur = &m.pieces[pidx.at(it->second)];
        }
        if (!resolved)
            throw std::invalid_argument("facet data required to verify that '" + piece_id +
                                        "' is a maximal piece");
        if (cur->id == P->id)
            throw std::invalid_argument("unsupported: piece '" + piece_id +
                                        "' is not maximal (contains '" + q.id + "')");
    }

    SncModelData out(m);
    out.name = m.name + "+blowup(" + piece_id + ")";

    std::string exc = "exc_" + piece_id;
    while (out.find_component(exc)) exc += "'";
    out.components.push_back(Component{exc, N0, nu0});

    // Remove P.
    out.pieces.erase(std::remove_if(out.pieces.begin(), out.pieces.end(),
                                    [&](const StratumPiece& p) { return p.id == piece_id; }),
                     out.pieces.end());

    // Whether facets can be transported: P and its iterated facets must
    // carry facet data down to the singleton level.
    auto descend = [&](const std::set<std::string>& S) -> const StratumPiece* {
        const StratumPiece* cur = P;
        for (const auto& id : PJ) {
            if (S.count(id)) continue;
            auto it = cur->facets.find(id);
            if (it == cur->facets.end()) return nullptr;
            cur = &m.pieces[pidx.at(it->second)];
        }
        return cur;
    };
    bool with_facets = true;
    const MotClass Lm1 = MotClass::lefschetz() - MotClass(1);

    // Enumerate proper subsets S of J in P's stored order.
    std::vector<std::string> Jv(P->J);
    const std::size_t subsets = (1u << r);
    std::vector<StratumPiece> fresh;
    std::string base = piece_id + "@exc";
    {
        std::set<std::string> taken;
        for (const auto& p : out.pieces) taken.insert(p.id);
        auto collides = [&] {
            for (const auto& id : taken)
                if (id.rfind(base, 0) == 0) return true;
            return false;
        };
        while (collides()) base += "'";
    }
    auto subset_id = [&](unsigned mask) {
        std::string id = base;
        for (std::size_t k = 0; k < r; ++k)
            if (mask & (1u << k)) id += "_" + Jv[k];
        return id;
    };
    for (unsigned mask = 0; mask + 1 < subsets; ++mask) {
        StratumPiece np;
        np.id = subset_id(mask);
        np.J.push_back(exc);
        std::set<std::string> S;
        for (std::size_t k = 0; k < r; ++k)
            if (mask & (1u << k)) {
                np.J.push_back(Jv[k]);
                S.insert(Jv[k]);
            }
        np.tilde_class = P->tilde_class * Lm1.pow(r - 1 - S.size());
        if (with_facets && np.J.size() >= 2) {
            const StratumPiece* old_face = descend(S);
            if (!old_face) {
                with_facets = false;
            } else {
                np.facets[exc] = old_face->id;
                for (std::size_t k = 0; k < r; ++k)
                    if (mask & (1u << k)) np.facets[Jv[k]] = subset_id(mask & ~(1u << k));
            }
        }
        fresh.push_back(std::move(np));
    }
    if (!with_facets)
        for (auto& np : fresh) np.facets.clear();
    for (auto& np : fresh) out.pieces.push_back(std::move(np));

    require_valid(out);
    return out;
}

} // namespace motzeta
