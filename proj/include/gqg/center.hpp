#pragma once

#include "gqg/modules.hpp"
#include "gqg/roots.hpp"

namespace gqg {

/// One violated branch of the skew-center equations, with its witness point.
struct EViolation {
    std::string branch; // "e1" | "e2" | "e3" | "e4"
    Weight lambda;
    Weight mu;
    long t = 0;
};

struct ECheckReport {
    Weight beta;
    bool pass = true;
    std::vector<EViolation> violations;
};

/// Checks the four coefficient equations of the skew center against one
/// positive root, over every lattice line the support touches. Violations
/// are collected, not thrown.
ECheckReport e_conditions_check(const U0Element& a, const Weight& beta, const BicharTable& t,
                                const OmegaTable& w, long dlog_cap = 256);

/// Harish-Chandra image attached to a finite-dimensional module:
/// sum over nu of rho_hat(nu) m_nu K_{lambda+nu} L_{mu-nu}.
U0Element hc_image(const BicharTable& t, const OmegaTable& w, const Weight& lambda, const Weight& mu,
                   const CharacterTable& ct);

/// Rectangular window of (lambda, mu) pairs.
struct WindowBox {
    Weight lambda_lo, lambda_hi, mu_lo, mu_hi;

    std::vector<std::pair<Weight, Weight>> points() const;
    bool contains(const Weight& lambda, const Weight& mu) const;
};

struct CenterFamily {
    U0Element element;
    bool touches_boundary = false; // support within one beta-step of leaving the window
};

/// Exact basis of the coefficient families supported in the window that
/// satisfy every equation branch (coefficients outside the window are zero).
/// Requires the computed root system to be complete below its bound and
/// chi(beta, beta) != 1 for every root.
std::vector<CenterFamily> solve_center_window(const BicharTable& t, const OmegaTable& w,
                                              const RootSystem& rs, const WindowBox& window,
                                              long dlog_cap = 256);

/// Recovers the unique skew-central element with the given Harish-Chandra
/// image by solving the linear system "Sh(Z) = hc0 and Z g = omega(deg g) g Z
/// for all generators" over balanced normal-form terms of degree <= depth.
/// Throws when no solution exists within the depth or the solution fails to
/// be unique.
AlgebraElement reconstruct_central(const U0Element& hc0, const UContext& ctx, const OmegaTable& w,
                                   const Weight& depth);

/// Checks Z g = omega(deg g) g Z against every generator E_i, F_i, K_{a_j},
/// L_{a_j}.
bool verify_skew_central(const AlgebraElement& z, const UContext& ctx, const OmegaTable& w);

struct ProbeReport {
    size_t num_fin_pairs = 0;       // finite-dimensional pairs in the window
    size_t num_images_in_window = 0; // those whose image is supported in the window
    size_t hc_span_rank = 0;
    size_t solution_dim = 0;
    size_t boundary_families = 0;
    bool hc_span_contained = false; // span of in-window images inside the solution space
    bool dims_agree = false;        // hc_span_rank == solution_dim
};

/// Compares the span of the Harish-Chandra images over the finite-dimensional
/// window pairs with the solution space of the center equations on the same
/// window. Disagreement is reported, never thrown.
ProbeReport conjecture_probe(const BicharTable& t, const OmegaTable& w, const RootSystem& rs,
                             const WindowBox& window, const Weight& depth_bound);

} // namespace gqg
