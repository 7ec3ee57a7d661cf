#include "gqg/modules.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gqg/qcombinatorics.hpp"

namespace gqg {

unsigned CharacterTable::multiplicity(const Weight& nu) const {
    auto it = mult.find(nu);
    return it == mult.end() ? 0 : it->second;
}

Weight CharacterTable::support_max() const {
    std::vector<long> m(lambda.rank(), 0);
    for (const auto& [nu, c] : mult)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], nu[i]);
    return Weight(m);
}

SimpleModule::SimpleModule(const BicharTable& t, const OmegaTable& w, const Weight& lambda,
                           const Weight& mu, const Weight& depth)
    : t_(&t), w_(&w), lambda_(lambda), mu_(mu), depth_(depth) {
    if (!depth_.nonnegative()) throw Error("module depth must be nonnegative");
    build();
}

CycScalar SimpleModule::hw_k(unsigned i) const {
    Weight alpha = Weight::unit(rank(), i - 1);
    return lambda_functional(*t_, *w_, lambda_, mu_, alpha, Weight::zero(rank()));
}

CycScalar SimpleModule::hw_l(unsigned i) const {
    Weight alpha = Weight::unit(rank(), i - 1);
    return lambda_functional(*t_, *w_, lambda_, mu_, Weight::zero(rank()), alpha);
}

void SimpleModule::build() {
    const CycField& f = field();
    size_t l = rank();

    Block root;
    root.dim = 1;
    root.emat.assign(l, {});
    root.fmat.assign(l, {});
    blocks_.emplace(Weight::zero(l), std::move(root));

    for (const Weight& nu : weights_below(depth_)) {
        if (nu.is_zero()) continue;
        Block blk;
        blk.emat.assign(l, {});
        blk.fmat.assign(l, {});

        // spanning symbols (i, k): F_{i+1} applied to basis vector k below
        struct Symbol {
            unsigned i;
            unsigned k;
        };
        std::vector<Symbol> symbols;
        for (unsigned i = 0; i < l; ++i) {
            Weight below = nu - Weight::unit(l, i);
            if (!below.nonnegative()) continue;
            unsigned d = dim(below);
            for (unsigned k = 0; k < d; ++k) symbols.push_back({i, k});
        }

        // footprint of a symbol: the tuple (E_{j+1} F_{i+1} b_k)_j over all
        // valid j, flattened
        std::vector<size_t> seg_offset(l + 1, 0);
        for (unsigned j = 0; j < l; ++j) {
            Weight down = nu - Weight::unit(l, j);
            seg_offset[j + 1] = seg_offset[j] + (down.nonnegative() ? dim(down) : 0);
        }
        size_t width = seg_offset[l];

        std::vector<Vec> footprints;
        footprints.reserve(symbols.size());
        for (const Symbol& s : symbols) {
            Weight prev = nu - Weight::unit(l, s.i);
            Vec fp = zero_vec(f, width);
            for (unsigned j = 0; j < l; ++j) {
                Weight down = nu - Weight::unit(l, j);
                if (!down.nonnegative() || dim(down) == 0) continue;
                // E_{j+1} F_{i+1} b_k = F_{i+1} (E_{j+1} b_k) + delta_ij s_i(prev) b_k
                Vec part = zero_vec(f, dim(down));
                Weight prev_down = prev - Weight::unit(l, j);
                if (prev_down.nonnegative() && dim(prev_down) > 0) {
                    Vec unit = zero_vec(f, dim(prev));
                    unit[s.k] = CycScalar::one(f);
                    Vec ejb = apply_e(j + 1, prev, unit);
                    Vec lifted = apply_f(s.i + 1, prev_down, ejb);
                    for (size_t c = 0; c < part.size(); ++c) part[c] += lifted[c];
                }
                if (j == s.i) {
                    // scalar action of -K_{alpha_i} + L_{alpha_i} on degree prev
                    CycScalar scalar = -t_->chi(Weight::unit(l, s.i), prev).inverse() * hw_k(s.i + 1) +
                                       t_->chi(prev, Weight::unit(l, s.i)) * hw_l(s.i + 1);
                    part[s.k] += scalar;
                }
                for (size_t c = 0; c < part.size(); ++c) fp[seg_offset[j] + c] = part[c];
            }
            footprints.push_back(std::move(fp));
        }

        RowSpace space(f, width);
        std::vector<bool> accepted(symbols.size(), false);
        std::vector<Vec> symbol_coords(symbols.size());
        unsigned d = 0;
        for (size_t s = 0; s < symbols.size(); ++s) {
            if (space.add(footprints[s])) {
                accepted[s] = true;
                ++d;
            }
        }
        blk.dim = d;
        // basis = accepted symbols in order; coordinates of every symbol
        {
            unsigned idx = 0;
            for (size_t s = 0; s < symbols.size(); ++s) {
                if (accepted[s]) {
                    Vec unitv = zero_vec(f, d);
                    unitv[idx++] = CycScalar::one(f);
                    symbol_coords[s] = std::move(unitv);
                } else {
                    auto expr = space.express(footprints[s]);
                    if (!expr) throw ConsistencyError("module symbol escaped its own span");
                    expr->resize(d, CycScalar(f));
                    symbol_coords[s] = std::move(*expr);
                }
            }
        }

        // F matrices into this degree
        for (unsigned i = 0; i < l; ++i) {
            Weight below = nu - Weight::unit(l, i);
            if (!below.nonnegative()) continue;
            blk.fmat[i].assign(dim(below), zero_vec(f, d));
        }
        for (size_t s = 0; s < symbols.size(); ++s)
            blk.fmat[symbols[s].i][symbols[s].k] = symbol_coords[s];

        // E matrices on the new basis: footprint segments of accepted symbols
        for (unsigned j = 0; j < l; ++j) {
            Weight down = nu - Weight::unit(l, j);
            if (!down.nonnegative()) continue;
            blk.emat[j].assign(d, zero_vec(f, dim(down)));
        }
        {
            unsigned idx = 0;
            for (size_t s = 0; s < symbols.size(); ++s) {
                if (!accepted[s]) continue;
                for (unsigned j = 0; j < l; ++j) {
                    Weight down = nu - Weight::unit(l, j);
                    if (!down.nonnegative() || dim(down) == 0) continue;
                    Vec seg = zero_vec(f, dim(down));
                    for (size_t c = 0; c < seg.size(); ++c) seg[c] = footprints[s][seg_offset[j] + c];
                    blk.emat[j][idx] = std::move(seg);
                }
                ++idx;
            }
        }
        blocks_.emplace(nu, std::move(blk));
    }
}

unsigned SimpleModule::dim(const Weight& nu) const {
    auto it = blocks_.find(nu);
    return it == blocks_.end() ? 0 : it->second.dim;
}

Vec SimpleModule::apply_e(unsigned j, const Weight& nu, const Vec& v) const {
    Weight down = nu - Weight::unit(rank(), j - 1);
    if (!down.nonnegative()) return zero_vec(field(), 0);
    auto it = blocks_.find(nu);
    if (it == blocks_.end()) throw Error("apply_e: degree outside the built module");
    Vec out = zero_vec(field(), dim(down));
    const auto& mat = it->second.emat[j - 1];
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const Vec& col = mat[k];
        for (size_t c = 0; c < out.size(); ++c)
            if (!col[c].is_zero()) out[c] += v[k] * col[c];
    }
    return out;
}

Vec SimpleModule::apply_f(unsigned i, const Weight& nu, const Vec& v) const {
    Weight up = nu + Weight::unit(rank(), i - 1);
    auto it = blocks_.find(up);
    if (it == blocks_.end()) throw Error("apply_f: degree outside the built module");
    Vec out = zero_vec(field(), it->second.dim);
    const auto& mat = it->second.fmat[i - 1];
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const Vec& col = mat[k];
        for (size_t c = 0; c < out.size(); ++c)
            if (!col[c].is_zero()) out[c] += v[k] * col[c];
    }
    return out;
}

CycScalar SimpleModule::sh_functional(const Word& eword, const Word& fword) const {
    const CycField& f = field();
    Weight nu = Weight::zero(rank());
    Vec v = zero_vec(f, 1);
    v[0] = CycScalar::one(f);
    for (auto it = fword.rbegin(); it != fword.rend(); ++it) {
        unsigned i = static_cast<unsigned>(*it - '0');
        Weight up = nu + Weight::unit(rank(), i - 1);
        if (!up.dominated_by(depth_)) throw Error("sh_functional: module depth exceeded");
        v = apply_f(i, nu, v);
        nu = up;
        if (vec_is_zero(v)) return CycScalar(f);
    }
    for (auto it = eword.rbegin(); it != eword.rend(); ++it) {
        unsigned j = static_cast<unsigned>(*it - '0');
        Weight down = nu - Weight::unit(rank(), j - 1);
        if (!down.nonnegative()) return CycScalar(f);
        v = apply_e(j, nu, v);
        nu = down;
        if (vec_is_zero(v)) return CycScalar(f);
    }
    if (!nu.is_zero()) return CycScalar(f);
    return v[0];
}

CharacterTable SimpleModule::character_table() const {
    CharacterTable ct;
    ct.lambda = lambda_;
    ct.mu = mu_;
    ct.depth_bound = depth_;
    for (const auto& [nu, blk] : blocks_) {
        if (blk.dim == 0) continue;
        ct.mult[nu] = blk.dim;
        ct.total_dim += blk.dim;
    }
    ct.complete = true;
    for (const auto& [nu, m] : ct.mult) {
        for (size_t i = 0; i < nu.rank(); ++i)
            if (nu[i] == depth_[i]) ct.complete = false;
    }
    return ct;
}

std::vector<Vec> contravariant_matrix(const UContext& ctx, const OmegaTable& w, const Weight& lambda,
                                      const Weight& mu, const Weight& nu) {
    NicholsTable& nt = ctx.nichols();
    const CycField& f = ctx.field();
    const std::vector<Word>& ewords = nt.basis(nu);
    const std::vector<Word>& fwords = nt.fbasis(nu);
    std::vector<Vec> m(ewords.size(), zero_vec(f, fwords.size()));
    Weight z = Weight::zero(ctx.rank());
    for (size_t a = 0; a < ewords.size(); ++a) {
        AlgebraElement ea = ctx.monomial(Word(), z, z, ewords[a]);
        for (size_t b = 0; b < fwords.size(); ++b) {
            AlgebraElement fb = ctx.monomial(fwords[b], z, z, Word());
            U0Element sh = sh_project(ctx.multiply(ea, fb));
            CycScalar value(f);
            for (const auto& [km, c] : sh.terms())
                value += c * lambda_functional(ctx.bichar(), w, lambda, mu, km.first, km.second);
            m[a][b] = value;
        }
    }
    return m;
}

CharacterTable character(const BicharTable& t, const OmegaTable& w, const Weight& lambda,
                         const Weight& mu, const Weight& depth_bound) {
    SimpleModule m(t, w, lambda, mu, depth_bound);
    return m.character_table();
}

std::vector<FinEntry> fin_window(const BicharTable& t, const OmegaTable& w,
                                 const std::vector<std::pair<Weight, Weight>>& window,
                                 const Weight& depth_bound) {
    std::vector<FinEntry> out;
    for (const auto& [lambda, mu] : window) {
        CharacterTable ct = character(t, w, lambda, mu, depth_bound);
        if (ct.complete) out.push_back({lambda, mu, std::move(ct)});
    }
    return out;
}

namespace {

struct Pt {
    long x = 0;
    long y = 0;
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(long k) const { return {x * k, y * k}; }
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    auto operator<=>(const Pt&) const = default;
};

long cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

} // namespace

std::vector<unsigned> z3_h_profile(const CharacterTable& ct, const BicharTable& t,
                                   const OmegaTable& w, long odd_cap) {
    const CycField& f = t.field();
    if (t.rank() != 2) throw Error("z3_h_profile: rank must be 2");
    CycScalar zeta = t.chi(Weight::unit(2, 0), Weight::unit(2, 0));
    if (!(zeta * zeta + zeta + CycScalar::one(f)).is_zero())
        throw Error("z3_h_profile: chi(a1,a1) is not a primitive cube root of unity");
    CycScalar q = t.chi(Weight::unit(2, 1), Weight::unit(2, 1));
    unsigned oq = char_order(q);

    // beta_1..beta_4 = a1, 2a1+a2, a1+a2, a2; gamma = (-b4,-b3,-b2,-b1,b4,b3,b2,b1)
    const Pt beta[4] = {{1, 0}, {2, 1}, {1, 1}, {0, 1}};
    Pt gamma[8];
    for (int k = 0; k < 4; ++k) {
        gamma[k] = Pt{-beta[3 - k].x, -beta[3 - k].y};
        gamma[k + 4] = beta[3 - k];
    }

    // support in the module-weight picture: nu -> -nu
    std::map<Pt, unsigned> supp;
    long supp_extent = 0;
    for (const auto& [nu, m] : ct.mult) {
        supp[{-nu[0], -nu[1]}] = m;
        supp_extent = std::max({supp_extent, nu[0], nu[1]});
    }
    if (odd_cap < 0) odd_cap = supp_extent + 1;
    long even_cap = 2;
    long ocap = odd_cap;
    if (oq != 0) ocap = std::min<long>(ocap, static_cast<long>(oq) - 1);

    CycScalar l1 = lambda_functional(t, w, ct.lambda, ct.mu, Weight::unit(2, 0), -Weight::unit(2, 0));
    CycScalar l2 = lambda_functional(t, w, ct.lambda, ct.mu, Weight::unit(2, 1), -Weight::unit(2, 1));
    auto in_cyclic = [](const CycScalar& base, const CycScalar& value, unsigned order) {
        CycScalar p = CycScalar::one(base.field());
        unsigned steps = order == 0 ? 1 : order;
        for (unsigned s = 0; s < steps; ++s) {
            if (p == value) return true;
            p *= base;
        }
        return false;
    };
    bool l2_in_h1 = false, l1l2_in_h2 = false;
    if (oq != 0) {
        l2_in_h1 = in_cyclic(q, l2, oq);
        CycScalar zq = zeta * q.inverse();
        l1l2_in_h2 = in_cyclic(zq, l1 * l1 * l2, char_order(zq));
    }
    bool trivial_support = ct.mult.size() == 1 && ct.mult.count(Weight::zero(2)) == 1;

    std::vector<std::vector<unsigned>> found;
    std::vector<unsigned> h(8, 0);
    auto check_h = [&]() {
        // closure
        Pt end{0, 0};
        for (int k = 0; k < 8; ++k) end = end + gamma[k] * static_cast<long>(h[k]);
        if (!(end == Pt{0, 0})) return;
        if (oq != 0) {
            if (l2_in_h1 && (h[7] != h[1] || h[5] != h[3])) return;
            if (l1l2_in_h2 && (h[7] != h[5] || h[1] != h[3])) return;
        } else if (!trivial_support) {
            // the infinite-order-q family: fat octagon with equal opposite odd legs
            if (h[1] != 2 || h[3] != 2 || h[5] != 2 || h[7] != 2) return;
            if (h[0] != h[4] || h[2] != h[6] || h[2] < 2) return;
            if (q.pow(static_cast<long>(h[0])) != l2) return;
            if ((zeta * q.inverse()).pow(static_cast<long>(h[2])) != l1 * l1 * l2) return;
        }

        // vertices and boundary lattice points (gamma directions are primitive)
        Pt vertex[9];
        vertex[0] = {0, 0};
        for (int k = 0; k < 8; ++k) vertex[k + 1] = vertex[k] + gamma[k] * static_cast<long>(h[k]);
        std::set<Pt> boundary;
        for (int k = 0; k < 8; ++k)
            for (long u = 0; u <= static_cast<long>(h[k]); ++u)
                boundary.insert(vertex[k] + gamma[k] * u);

        // every boundary point of the closed negative cone carries
        // multiplicity exactly one
        for (const Pt& p : boundary) {
            if (p.x <= 0 && p.y <= 0) {
                auto it = supp.find(p);
                if (it == supp.end() || it->second != 1) return;
            }
        }
        // the support lies on the boundary or strictly inside
        for (const auto& [p, m] : supp) {
            if (boundary.count(p)) continue;
            bool inside = true;
            for (int k = 0; k < 8; ++k) {
                Pt gp = gamma[(k + 2) % 8]; // edge offset direction
                long denom = cross(gamma[k], gp);
                long numer = cross(gamma[k], p - vertex[k]);
                // p = vertex[k] + u gamma_k + v gp; in the reflected picture
                // the interior sits at strictly positive v for every edge
                if (denom == 0) throw ConsistencyError("octagon edge directions degenerate");
                if (!((numer > 0 && denom > 0) || (numer < 0 && denom < 0))) {
                    inside = false;
                    break;
                }
            }
            if (!inside) return;
        }
        found.push_back(h);
    };

    // enumerate: odd legs up to ocap, even legs up to 2
    std::vector<long> caps = {ocap, even_cap, ocap, even_cap, ocap, even_cap, ocap, even_cap};
    struct Enum {
        std::vector<unsigned>& h;
        const std::vector<long>& caps;
        std::function<void()>& emit;
        void run(int k) {
            if (k == 8) {
                emit();
                return;
            }
            for (long v = 0; v <= caps[static_cast<size_t>(k)]; ++v) {
                h[static_cast<size_t>(k)] = static_cast<unsigned>(v);
                run(k + 1);
            }
        }
    };
    std::function<void()> emit = check_h;
    Enum en{h, caps, emit};
    en.run(0);

    if (found.empty()) throw Error("z3_h_profile: no octagon profile fits the support");
    if (found.size() > 1) throw Error("z3_h_profile: profile is not unique (" +
                                      std::to_string(found.size()) + " candidates)");
    return found[0];
}

} // namespace gqg
