#include "gqg/center.hpp"

#include <algorithm>
#include <set>

#include "gqg/qcombinatorics.hpp"

namespace gqg {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long positive_mod(long a, long c) {
    long r = a % c;
    return r < 0 ? r + c : r;
}

// canonical representative of the line {(lambda + t beta, mu - t beta)}:
// shift so that the first nonzero coordinate of beta lands in [0, |beta_d|)
struct LinePoint {
    Weight base_lambda;
    Weight base_mu;
    long offset;
};

LinePoint line_of(const Weight& lambda, const Weight& mu, const Weight& beta) {
    size_t d = 0;
    while (d < beta.rank() && beta[d] == 0) ++d;
    if (d == beta.rank()) throw Error("line_of: zero direction");
    long shift = floor_div(lambda[d], beta[d]);
    return {lambda - beta * shift, mu + beta * shift, shift};
}

struct Line {
    Weight lambda0;
    Weight mu0;
    std::map<long, CycScalar> coeffs; // offset -> coefficient
};

std::vector<Line> collect_lines(const U0Element& a, const Weight& beta) {
    std::map<std::pair<Weight, Weight>, Line> lines;
    for (const auto& [km, c] : a.terms()) {
        LinePoint lp = line_of(km.first, km.second, beta);
        auto key = std::make_pair(lp.base_lambda, lp.base_mu);
        auto it = lines.find(key);
        if (it == lines.end()) {
            Line line;
            line.lambda0 = lp.base_lambda;
            line.mu0 = lp.base_mu;
            it = lines.emplace(key, std::move(line)).first;
        }
        it->second.coeffs[lp.offset] = c;
    }
    std::vector<Line> out;
    out.reserve(lines.size());
    for (auto& [k, line] : lines) out.push_back(std::move(line));
    return out;
}

CycScalar omega_hat(const BicharTable& t, const OmegaTable& w, const Weight& beta,
                    const Weight& lambda, const Weight& mu) {
    return w.omega(beta) * t.chi(beta, mu) / t.chi(lambda, beta);
}

} // namespace

ECheckReport e_conditions_check(const U0Element& a, const Weight& beta, const BicharTable& t,
                                const OmegaTable& w, long dlog_cap) {
    ECheckReport report;
    report.beta = beta;
    const CycField& f = t.field();
    CycScalar q_beta = t.chi(beta, beta);
    unsigned c_beta = char_order(q_beta);
    CycScalar rho = t.rho_hat(beta);

    auto point = [&](const Line& line, long s) {
        return std::make_pair(line.lambda0 + beta * s, line.mu0 - beta * s);
    };
    auto coeff_at = [&](const Line& line, long s) -> CycScalar {
        auto it = line.coeffs.find(s);
        return it == line.coeffs.end() ? CycScalar(f) : it->second;
    };

    for (const Line& line : collect_lines(a, beta)) {
        CycScalar what0 = omega_hat(t, w, beta, line.lambda0, line.mu0);
        if (c_beta == 0) {
            if (q_beta.is_one()) {
                // omega_hat is constant along the line; a power of 1 exists
                // only when it equals 1
                if (!what0.is_one()) {
                    for (const auto& [s, c] : line.coeffs) {
                        auto [l, m] = point(line, s);
                        report.violations.push_back({"e2", l, m, 0});
                    }
                }
                continue;
            }
            std::optional<long> d0 = power_index(q_beta, what0, dlog_cap);
            if (!d0) {
                for (const auto& [s, c] : line.coeffs) {
                    auto [l, m] = point(line, s);
                    report.violations.push_back({"e2", l, m, 0});
                }
                continue;
            }
            for (const auto& [s, c] : line.coeffs) {
                long tau = *d0 - 2 * s;
                if (tau == 0) continue;
                long partner = *d0 - s;
                if (coeff_at(line, partner) != rho.pow(tau) * c) {
                    auto [l, m] = point(line, s);
                    report.violations.push_back({"e1", l, m, tau});
                }
            }
        } else {
            long c = static_cast<long>(c_beta);
            std::vector<CycScalar> sums(static_cast<size_t>(c), CycScalar(f));
            for (const auto& [s, coeffv] : line.coeffs)
                sums[static_cast<size_t>(positive_mod(s, c))] += coeffv * rho.pow(-s);
            std::optional<long> t0 = power_index(q_beta, what0, dlog_cap);
            if (t0) {
                for (long u = 0; u < c; ++u) {
                    if (positive_mod(*t0 - 2 * u, c) == 0) continue;
                    size_t lhs = static_cast<size_t>(positive_mod(*t0 - u, c));
                    size_t rhs = static_cast<size_t>(positive_mod(u, c));
                    if (sums[lhs] != sums[rhs]) {
                        auto [l, m] = point(line, u);
                        report.violations.push_back({"e3", l, m, positive_mod(*t0 - 2 * u, c)});
                    }
                }
            } else {
                for (long r = 1; r < c; ++r) {
                    if (sums[static_cast<size_t>(r)] != sums[0]) {
                        auto [l, m] = point(line, 0);
                        report.violations.push_back({"e4", l, m, r});
                    }
                }
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

U0Element hc_image(const BicharTable& t, const OmegaTable& w, const Weight& lambda, const Weight& mu,
                   const CharacterTable& ct) {
    (void)w;
    if (!ct.complete)
        throw Error("hc_image: character table is incomplete (module not finite within depth)");
    U0Element out(t.field());
    for (const auto& [nu, m] : ct.mult)
        out.add(lambda + nu, mu - nu, t.rho_hat(nu) * CycScalar(t.field(), static_cast<long>(m)));
    return out;
}

std::vector<std::pair<Weight, Weight>> WindowBox::points() const {
    std::vector<std::pair<Weight, Weight>> out;
    std::vector<long> l = lambda_lo.coords();
    while (true) {
        std::vector<long> m = mu_lo.coords();
        while (true) {
            out.emplace_back(Weight(l), Weight(m));
            size_t i = 0;
            while (i < m.size()) {
                if (m[i] < mu_hi[i]) {
                    ++m[i];
                    break;
                }
                m[i] = mu_lo[i];
                ++i;
            }
            if (i == m.size()) break;
        }
        size_t i = 0;
        while (i < l.size()) {
            if (l[i] < lambda_hi[i]) {
                ++l[i];
                break;
            }
            l[i] = lambda_lo[i];
            ++i;
        }
        if (i == l.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool WindowBox::contains(const Weight& lambda, const Weight& mu) const {
    return lambda_lo.dominated_by(lambda) && lambda.dominated_by(lambda_hi) &&
           mu_lo.dominated_by(mu) && mu.dominated_by(mu_hi);
}

std::vector<CenterFamily> solve_center_window(const BicharTable& t, const OmegaTable& w,
                                              const RootSystem& rs, const WindowBox& window,
                                              long dlog_cap) {
    const CycField& f = t.field();
    if (!rs.complete_below_bound)
        throw Error("solve_center_window: root system not complete below its bound");
    std::vector<Weight> bad = rs.roots_with_trivial_self_pairing(t);
    if (!bad.empty())
        throw Error("solve_center_window: chi(beta,beta) = 1 at root " + bad.front().to_string());

    std::vector<std::pair<Weight, Weight>> vars = window.points();
    std::map<std::pair<Weight, Weight>, size_t> var_index;
    for (size_t i = 0; i < vars.size(); ++i) var_index.emplace(vars[i], i);
    size_t n = vars.size();

    std::vector<Vec> rows;
    auto new_row = [&]() { return zero_vec(f, n); };

    for (const auto& rd : rs.roots) {
        const Weight& beta = rd.root;
        CycScalar q_beta = t.chi(beta, beta);
        unsigned c_beta = char_order(q_beta);
        CycScalar rho = t.rho_hat(beta);

        // group window points into beta-lines
        std::map<std::pair<Weight, Weight>, std::map<long, size_t>> lines;
        for (size_t i = 0; i < n; ++i) {
            LinePoint lp = line_of(vars[i].first, vars[i].second, beta);
            lines[{lp.base_lambda, lp.base_mu}][lp.offset] = i;
        }

        for (const auto& [basekey, offsets] : lines) {
            CycScalar what0 = omega_hat(t, w, beta, basekey.first, basekey.second);
            if (c_beta == 0) {
                std::optional<long> d0 = power_index(q_beta, what0, dlog_cap);
                if (!d0) {
                    for (const auto& [s, i] : offsets) {
                        Vec row = new_row();
                        row[i] = CycScalar::one(f);
                        rows.push_back(std::move(row));
                    }
                    continue;
                }
                for (const auto& [s, i] : offsets) {
                    long tau = *d0 - 2 * s;
                    if (tau == 0) continue;
                    long partner = *d0 - s;
                    auto pit = offsets.find(partner);
                    Vec row = new_row();
                    if (pit != offsets.end()) {
                        // a_partner - rho^tau a_s = 0
                        row[pit->second] += CycScalar::one(f);
                        row[i] -= rho.pow(tau);
                    } else {
                        // partner is outside the window, hence zero
                        row[i] = CycScalar::one(f);
                    }
                    rows.push_back(std::move(row));
                }
            } else {
                long c = static_cast<long>(c_beta);
                // residual sums as rows over the window variables
                std::vector<Vec> sums(static_cast<size_t>(c), new_row());
                for (const auto& [s, i] : offsets)
                    sums[static_cast<size_t>(positive_mod(s, c))][i] += rho.pow(-s);
                std::optional<long> t0 = power_index(q_beta, what0, dlog_cap);
                auto diff_row = [&](size_t a, size_t b) {
                    Vec row = new_row();
                    for (size_t i = 0; i < n; ++i) row[i] = sums[a][i] - sums[b][i];
                    return row;
                };
                if (t0) {
                    for (long u = 0; u < c; ++u) {
                        if (positive_mod(*t0 - 2 * u, c) == 0) continue;
                        size_t lhs = static_cast<size_t>(positive_mod(*t0 - u, c));
                        size_t rhs = static_cast<size_t>(positive_mod(u, c));
                        if (lhs != rhs) rows.push_back(diff_row(lhs, rhs));
                    }
                } else {
                    for (long r = 1; r < c; ++r) rows.push_back(diff_row(static_cast<size_t>(r), 0));
                }
            }
        }
    }

    size_t num_rows = rows.size();
    auto solution = solve_linear(f, n, std::move(rows), Vec(num_rows, CycScalar(f)));
    if (!solution) throw ConsistencyError("homogeneous center system reported inconsistent");

    std::vector<CenterFamily> out;
    for (const Vec& basis : solution->nullspace) {
        CenterFamily fam{U0Element(f), false};
        for (size_t i = 0; i < n; ++i)
            if (!basis[i].is_zero()) fam.element.add(vars[i].first, vars[i].second, basis[i]);
        for (const auto& [km, c] : fam.element.terms()) {
            for (const auto& rd : rs.roots) {
                if (!window.contains(km.first + rd.root, km.second - rd.root) ||
                    !window.contains(km.first - rd.root, km.second + rd.root))
                    fam.touches_boundary = true;
            }
        }
        out.push_back(std::move(fam));
    }
    return out;
}

// The centrality residues are triangular in the balanced degree: the residue
// of Z g - omega g Z at bidegree (M - a_i, M) (for g = E_i; mirrored for F_i)
// couples the level-M part of Z only with already-determined lower levels.
// Each level is therefore a small exact solve instead of one global system.
AlgebraElement reconstruct_central(const U0Element& hc0, const UContext& ctx, const OmegaTable& w,
                                   const Weight& depth) {
    const CycField& f = ctx.field();
    NicholsTable& nt = ctx.nichols();
    size_t l = ctx.rank();
    Weight ones(std::vector<long>(l, 1));
    if (!(depth + ones).dominated_by(ctx.table_bound()))
        throw Error("reconstruct_central: straightening tables must cover depth + 1");

    struct Generator {
        AlgebraElement elt;
        CycScalar om;
        Weight fshift; // residue bidegree relative to M: (M - fshift, M - eshift)
        Weight eshift;
    };
    std::vector<Generator> generators;
    for (unsigned i = 1; i <= l; ++i) {
        Weight alpha = Weight::unit(l, i - 1);
        generators.push_back({ctx.e_generator(i), w.omega(alpha), alpha, Weight::zero(l)});
        generators.push_back({ctx.f_generator(i), w.omega(alpha).inverse(), Weight::zero(l), alpha});
    }

    AlgebraElement z = ctx.from_u0(hc0);
    for (const Weight& level : weights_below(depth)) {
        if (level.is_zero()) continue;
        const std::vector<Word>& fp = nt.fbasis(level);
        const std::vector<Word>& ep = nt.basis(level);
        if (fp.empty()) continue;

        std::set<std::pair<Weight, Weight>> klset;
        for (const auto& [km, c] : hc0.terms()) {
            klset.insert({km.first, km.second - level});
            klset.insert({km.first - level, km.second});
        }
        std::vector<NormalKey> unknowns;
        for (const auto& [kw, lw] : klset)
            for (const Word& y : fp)
                for (const Word& x : ep) unknowns.push_back(NormalKey{y, kw, lw, x});

        // equations: residue keys at the coupling bidegrees of this level
        std::map<std::pair<size_t, NormalKey>, size_t> eq_index;
        std::vector<Vec> rows;
        Vec rhs;
        auto row_of = [&](size_t g, const NormalKey& key) -> size_t {
            auto it = eq_index.find({g, key});
            if (it != eq_index.end()) return it->second;
            size_t r = rows.size();
            eq_index.emplace(std::make_pair(g, key), r);
            rows.push_back(zero_vec(f, unknowns.size()));
            rhs.push_back(CycScalar(f));
            return r;
        };
        auto at_bidegree = [&](const NormalKey& key, const Generator& g) {
            return word_degree(key.f, l) == level - g.fshift &&
                   word_degree(key.e, l) == level - g.eshift;
        };

        for (size_t g = 0; g < generators.size(); ++g) {
            const Generator& gen = generators[g];
            AlgebraElement base = ctx.multiply(z, gen.elt) - ctx.multiply(gen.elt, z).scaled(gen.om);
            for (const auto& [key, c] : base.terms())
                if (at_bidegree(key, gen)) rhs[row_of(g, key)] -= c;
        }
        for (size_t u = 0; u < unknowns.size(); ++u) {
            AlgebraElement term(f);
            term.add(unknowns[u], CycScalar::one(f));
            for (size_t g = 0; g < generators.size(); ++g) {
                const Generator& gen = generators[g];
                AlgebraElement r =
                    ctx.multiply(term, gen.elt) - ctx.multiply(gen.elt, term).scaled(gen.om);
                for (const auto& [key, c] : r.terms())
                    if (at_bidegree(key, gen)) rows[row_of(g, key)][u] += c;
            }
        }

        auto solution = solve_linear(f, unknowns.size(), rows, rhs);
        if (!solution) {
            // locate the first failing constraint in emission order
            RowSpace plain(f, unknowns.size()), augmented(f, unknowns.size() + 1);
            for (const auto& [gk, r] : eq_index) {
                Vec aug = rows[r];
                aug.push_back(rhs[r]);
                bool gained_plain = plain.add(rows[r]);
                bool gained_aug = augmented.add(aug);
                if (gained_aug && !gained_plain)
                    throw Error("reconstruct_central: no solution at level " + level.to_string() +
                                " (depth " + depth.to_string() + "); first failing constraint: F=" +
                                (gk.second.f.empty() ? "1" : gk.second.f) + " K" +
                                gk.second.k.to_string() + " L" + gk.second.l.to_string() +
                                " E=" + (gk.second.e.empty() ? "1" : gk.second.e));
            }
            throw Error("reconstruct_central: no solution at level " + level.to_string());
        }
        if (!solution->nullspace.empty())
            throw ConsistencyError("reconstruct_central: level " + level.to_string() +
                                   " is underdetermined (" +
                                   std::to_string(solution->nullspace.size()) + " free directions)");

        for (size_t u = 0; u < unknowns.size(); ++u)
            if (!solution->particular[u].is_zero()) z.add(unknowns[u], solution->particular[u]);
    }

    if (!(sh_project(z) == hc0))
        throw ConsistencyError("reconstruct_central: Sh of the reconstruction drifted");
    if (!verify_skew_central(z, ctx, w))
        throw Error("reconstruct_central: levelwise solution fails full skew-centrality "
                    "(depth too small?)");
    return z;
}

bool verify_skew_central(const AlgebraElement& z, const UContext& ctx, const OmegaTable& w) {
    size_t l = ctx.rank();
    for (unsigned i = 1; i <= l; ++i) {
        Weight alpha = Weight::unit(l, i - 1);
        AlgebraElement e = ctx.e_generator(i);
        if (!(ctx.multiply(z, e) == ctx.multiply(e, z).scaled(w.omega(alpha)))) return false;
        AlgebraElement fgen = ctx.f_generator(i);
        if (!(ctx.multiply(z, fgen) == ctx.multiply(fgen, z).scaled(w.omega(alpha).inverse())))
            return false;
        AlgebraElement k = ctx.kl(alpha, Weight::zero(l));
        if (!(ctx.multiply(z, k) == ctx.multiply(k, z))) return false;
        AlgebraElement lg = ctx.kl(Weight::zero(l), alpha);
        if (!(ctx.multiply(z, lg) == ctx.multiply(lg, z))) return false;
    }
    return true;
}

ProbeReport conjecture_probe(const BicharTable& t, const OmegaTable& w, const RootSystem& rs,
                             const WindowBox& window, const Weight& depth_bound) {
    const CycField& f = t.field();
    ProbeReport report;

    std::vector<FinEntry> fins = fin_window(t, w, window.points(), depth_bound);
    report.num_fin_pairs = fins.size();

    std::vector<CenterFamily> families = solve_center_window(t, w, rs, window);
    report.solution_dim = families.size();
    for (const auto& fam : families)
        if (fam.touches_boundary) ++report.boundary_families;

    std::vector<std::pair<Weight, Weight>> vars = window.points();
    std::map<std::pair<Weight, Weight>, size_t> var_index;
    for (size_t i = 0; i < vars.size(); ++i) var_index.emplace(vars[i], i);

    auto to_vec = [&](const U0Element& u) -> std::optional<Vec> {
        Vec v = zero_vec(f, vars.size());
        for (const auto& [km, c] : u.terms()) {
            auto it = var_index.find(km);
            if (it == var_index.end()) return std::nullopt; // support leaves the window
            v[it->second] = c;
        }
        return v;
    };

    RowSpace family_span(f, vars.size());
    for (const auto& fam : families) {
        auto v = to_vec(fam.element);
        if (v) family_span.add(*v);
    }

    RowSpace hc_span(f, vars.size());
    report.hc_span_contained = true;
    for (const auto& fin : fins) {
        U0Element image = hc_image(t, w, fin.lambda, fin.mu, fin.table);
        auto v = to_vec(image);
        if (!v) continue; // image not representable inside the window
        ++report.num_images_in_window;
        hc_span.add(*v);
        if (!family_span.contains(*v)) report.hc_span_contained = false;
    }
    report.hc_span_rank = hc_span.dim();
    report.dims_agree = report.hc_span_rank == report.solution_dim;
    return report;
}

} // namespace gqg
