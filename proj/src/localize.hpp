#pragma once
#include <array>
#include <algorithm>
#include <map>
#include <memory>
#include <vector>
#include "cyclo.hpp"

namespace em {

// Localization graph for genus-0 maps to P^2: vertices carry fixed-point
// colors 0,1,2 (adjacent colors distinct), edges carry map degrees.  aut is
// the order of the color- and degree-preserving automorphism group.
struct ColoredTree {
    struct Edge { int u, v, d; };
    std::vector<int> color;
    std::vector<Edge> edges;
    long aut = 1;

    int total_degree() const {
        int s = 0;
        for (auto& e : edges) s += e.d;
        return s;
    }
};

namespace treegen {

// Rooted colored tree with edge degrees; children are kept sorted by
// (edge degree, canonical key) so the key is canonical and aut can be read
// off from runs of identical children.
struct RTree {
    int color;
    int nv;  // vertices in the subtree
    int ds;  // sum of edge degrees in the subtree
    long aut;
    std::string key;
    std::vector<std::pair<int, std::shared_ptr<const RTree>>> children;
};
using RPtr = std::shared_ptr<const RTree>;

class Enumerator {
public:
    // All rooted trees with root color c and edge-degree sum s.
    const std::vector<RPtr>& rooted(int c, int s) {
        auto it = memo_.find({c, s});
        if (it != memo_.end()) return it->second;
        std::vector<RPtr> out;
        if (s == 0) {
            out.push_back(leaf(c));
        } else {
            // candidate children: (edge degree ed, subtree T), cost ed + T.ds
            std::vector<std::pair<int, RPtr>> items;
            for (int ed = 1; ed <= s; ++ed)
                for (int ds2 = 0; ds2 + ed <= s; ++ds2)
                    for (int cc = 0; cc < 3; ++cc) {
                        if (cc == c) continue;
                        for (auto& t : rooted(cc, ds2)) items.push_back({ed, t});
                    }
            std::sort(items.begin(), items.end(), [](auto& x, auto& y) {
                return x.first != y.first ? x.first < y.first
                                          : x.second->key < y.second->key;
            });
            std::vector<std::pair<int, RPtr>> cur;
            pick(c, s, items, 0, cur, out);
        }
        return memo_.emplace(std::make_pair(c, s), std::move(out)).first->second;
    }

    // Isomorphism classes of free trees with total edge degree d.
    std::vector<ColoredTree> free_trees(int d) {
        std::vector<ColoredTree> out;
        for (int c = 0; c < 3; ++c)
            for (auto& t : rooted(c, d)) {
                if (t->nv < 2) continue;
                // unique centroid at the root: every child part < nv/2
                bool ok = true;
                for (auto& [ed, ch] : t->children)
                    if (2 * ch->nv >= t->nv) ok = false;
                if (ok) out.push_back(materialize_rooted(t));
            }
        // bicentral trees: two halves of equal vertex count joined by an
        // edge; root colors differ so the halves are never isomorphic
        for (int ed = 1; ed <= d; ++ed)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    for (int s1 = 0; s1 + ed <= d; ++s1)
                        for (auto& t1 : rooted(c1, s1))
                            for (auto& t2 : rooted(c2, d - ed - s1)) {
                                if (t1->nv != t2->nv) continue;
                                out.push_back(materialize_pair(t1, t2, ed));
                            }
        return out;
    }

private:
    std::map<std::pair<int, int>, std::vector<RPtr>> memo_;

    static RPtr leaf(int c) {
        auto t = std::make_shared<RTree>();
        t->color = c;
        t->nv = 1;
        t->ds = 0;
        t->aut = 1;
        t->key = "(" + std::to_string(c) + ")";
        return t;
    }

    // choose a non-decreasing sequence of items with cost sum exactly s
    static void pick(int c, int s, const std::vector<std::pair<int, RPtr>>& items,
                     size_t start, std::vector<std::pair<int, RPtr>>& cur,
                     std::vector<RPtr>& out) {
        if (s == 0) {
            if (!cur.empty()) out.push_back(assemble(c, cur));
            return;
        }
        for (size_t i = start; i < items.size(); ++i) {
            int cost = items[i].first + items[i].second->ds;
            if (cost > s) continue;
            cur.push_back(items[i]);
            pick(c, s - cost, items, i, cur, out);
            cur.pop_back();
        }
    }

    static RPtr assemble(int c, const std::vector<std::pair<int, RPtr>>& children) {
        auto t = std::make_shared<RTree>();
        t->color = c;
        t->nv = 1;
        t->ds = 0;
        t->aut = 1;
        t->children = children;
        t->key = "(" + std::to_string(c);
        long run = 0;
        for (size_t i = 0; i < children.size(); ++i) {
            auto& [ed, ch] = children[i];
            t->nv += ch->nv;
            t->ds += ed + ch->ds;
            t->key += "[" + std::to_string(ed) + ch->key + "]";
            ++run;
            bool last = (i + 1 == children.size());
            if (last || children[i + 1].first != ed ||
                children[i + 1].second->key != ch->key) {
                long f = 1;
                for (long j = 2; j <= run; ++j) f *= j;
                t->aut *= f;
                for (long j = 0; j < run; ++j) t->aut *= ch->aut;
                run = 0;
            }
        }
        t->key += ")";
        return t;
    }

    static int emit(const RPtr& t, int parent, int pdeg, ColoredTree& g) {
        int id = (int)g.color.size();
        g.color.push_back(t->color);
        if (parent >= 0) g.edges.push_back({parent, id, pdeg});
        for (auto& [ed, ch] : t->children) emit(ch, id, ed, g);
        return id;
    }

    static ColoredTree materialize_rooted(const RPtr& t) {
        ColoredTree g;
        g.aut = t->aut;
        emit(t, -1, 0, g);
        return g;
    }

    static ColoredTree materialize_pair(const RPtr& t1, const RPtr& t2, int ed) {
        ColoredTree g;
        g.aut = t1->aut * t2->aut;
        int r1 = emit(t1, -1, 0, g);
        int r2 = (int)g.color.size();
        emit(t2, -1, 0, g);
        g.edges.push_back({r1, r2, ed});
        return g;
    }
};

} // namespace treegen

inline std::vector<ColoredTree> enumerate_trees(int d) {
    treegen::Enumerator e;
    return e.free_trees(d);
}

// Fixed-point amplitude of a single graph at torus weights lam, including
// the 1/|Aut| prefactor.  Edge factors combine the tangent Euler class of
// the degree-d cover of the coordinate line with the O(-3) obstruction
// along the edge; vertex factors carry tangent weights, the local O(-3)
// fiber weight and the genus-0 psi-class simplification.
inline Cyclo amplitude(const ColoredTree& g, const std::array<Cyclo, 3>& lam) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (lam[i] == lam[j])
                throw std::domain_error("amplitude: coincident weights");
    int n = (int)g.color.size();
    std::vector<int> val(n, 0);
    std::vector<Cyclo> flagsum(n, Cyclo(0));  // sum over flags of 1/omega_F
    Cyclo acc(1);
    for (auto& e : g.edges) {
        int i = g.color[e.u], j = g.color[e.v];
        int k = 3 - i - j;
        long d = e.d;
        Cyclo wF = (lam[i] - lam[j]) / Cyclo(d);
        flagsum[e.u] = flagsum[e.u] + wF.inv();
        flagsum[e.v] = flagsum[e.v] + (-wF).inv();
        val[e.u]++; val[e.v]++;
        Cyclo obs(1);
        for (long a = 1; a <= 3 * d - 1; ++a)
            obs = obs * (-(Cyclo(a) * lam[i] + Cyclo(3 * d - a) * lam[j]) / Cyclo(d));
        Rat fac(1);
        for (long a = 2; a <= d; ++a) fac *= a;
        Cyclo h0 = Cyclo(Rat((d % 2) ? -1 : 1) * fac * fac / rat_pow(Rat(d), 2 * d)) *
                   cyclo_pow(lam[i] - lam[j], 2 * d);
        for (long a = 0; a <= d; ++a)
            h0 = h0 * ((Cyclo(a) * lam[i] + Cyclo(d - a) * lam[j]) / Cyclo(d) - lam[k]);
        acc = acc * obs / (Cyclo(d) * h0);
    }
    for (int v = 0; v < n; ++v) {
        int i = g.color[v];
        Cyclo ei(1);
        for (int k = 0; k < 3; ++k)
            if (k != i) ei = ei * (lam[i] - lam[k]);
        acc = acc * cyclo_pow(ei, val[v] - 1) * cyclo_pow(-Cyclo(3) * lam[i], val[v] - 1);
        if (val[v] != 3 || !is_zero(flagsum[v]))
            acc = acc * cyclo_pow(flagsum[v], val[v] - 3);
        // per-flag 1/omega_F
        for (auto& e : g.edges) {
            if (e.u == v) acc = acc * (Cyclo(e.d) / (lam[i] - lam[g.color[e.v]]));
            if (e.v == v) acc = acc * (Cyclo(e.d) / (lam[i] - lam[g.color[e.u]]));
        }
    }
    return acc / Cyclo(g.aut);
}

// Colored degree (d1, d2, d3): each edge contributes its degree to the
// component indexed by the color missing from its endpoints.
inline std::array<int, 3> colored_degree(const ColoredTree& g) {
    std::array<int, 3> d{0, 0, 0};
    for (auto& e : g.edges) d[3 - g.color[e.u] - g.color[e.v]] += e.d;
    return d;
}

// Refined generating function: per total degree, map (d1,d2,d3) -> coefficient
// of x1^d1 x2^d2 x3^d3 w^(d1+d2+d3).
struct RefinedGF {
    int dmax = 0;
    std::map<std::array<int, 3>, Rat> coeff;

    Rat specialize(const std::array<Rat, 3>& x, int degree) const {
        Rat s(0);
        for (auto& [d, c] : coeff)
            if (d[0] + d[1] + d[2] == degree)
                s += c * rat_pow(x[0], d[0]) * rat_pow(x[1], d[1]) * rat_pow(x[2], d[2]);
        return s;
    }
};

inline std::array<Cyclo, 3> basic_weights() {
    return {Cyclo(1), Cyclo::omega(), Cyclo::omega() * Cyclo::omega()};
}

inline std::map<std::array<int, 3>, Cyclo>
refined_sum(int dmax, const std::array<Cyclo, 3>& lam) {
    std::map<std::array<int, 3>, Cyclo> out;
    treegen::Enumerator e;
    for (int d = 1; d <= dmax; ++d)
        for (auto& g : e.free_trees(d)) {
            auto cd = colored_degree(g);
            auto it = out.find(cd);
            Cyclo a = amplitude(g, lam);
            if (it == out.end()) out.emplace(cd, a);
            else it->second = it->second + a;
        }
    return out;
}

inline RefinedGF refined_gf(int dmax) {
    RefinedGF gf;
    gf.dmax = dmax;
    for (auto& [d, c] : refined_sum(dmax, basic_weights())) {
        if (!c.rational())
            throw std::domain_error("refined_gf: non-rational coefficient");
        if (!is_zero(c)) gf.coeff.emplace(d, c.a);
    }
    return gf;
}

// Weights are admissible when the refined sum they produce agrees with the
// reference weights (1, w, w^2) up to a simultaneous permutation of the
// x-variables, checked through the given test degree.
inline bool check_admissibility(const std::array<Cyclo, 3>& lam, int test_degree = 3) {
    std::map<std::array<int, 3>, Cyclo> trial;
    try {
        trial = refined_sum(test_degree, lam);
    } catch (const std::domain_error&) {
        return false;  // degenerate weights never admissible
    }
    auto ref = refined_sum(test_degree, basic_weights());
    std::array<int, 3> perm{0, 1, 2};
    do {
        bool ok = true;
        for (auto& [d, c] : ref) {
            std::array<int, 3> pd{d[perm[0]], d[perm[1]], d[perm[2]]};
            auto it = trial.find(pd);
            Cyclo tv = (it == trial.end()) ? Cyclo(0) : it->second;
            if (!(tv == c)) { ok = false; break; }
        }
        if (ok) {
            for (auto& [d, c] : trial)
                if (ref.find({d[perm[0]], d[perm[1]], d[perm[2]]}) == ref.end() &&
                    !is_zero(c))
                    ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace em
