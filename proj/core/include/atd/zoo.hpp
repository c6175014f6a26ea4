#pragma once

#include "atd/operator.hpp"
#include "atd/prox.hpp"
#include "atd/sets.hpp"

namespace atd {

/// Normal cone N_S of a nonempty closed convex set; the resolvent is the
/// projection onto S.  Normal cones are subdifferentials, hence paramonotone.
ResolventOperator normal_cone_operator(const ConvexSet& s);

/// Monotone linear operator x -> Mx.  The resolvent solves (Id + M) z = x;
/// the paramonotone flag comes from the kernel test on the symmetric part.
/// Throws if M + M^T is not positive semidefinite.
ResolventOperator linear_operator(const Mat& m, double tol = 1e-10);

/// The rotator by angle theta on R^2 (monotone only for |theta| <= pi/2).
ResolventOperator rotator_operator(double theta);

/// Constant operator Ax = u (the subdifferential of <u, .>).
ResolventOperator constant_operator(const Vec& u);

/// Subdifferential of a function in Gamma, i.e. the operator whose
/// resolvent is prox_f.
ResolventOperator prox_operator(const ProxFunction& f);

/*
 * The 2-D operator A = N_U + R with U the upper halfplane and R the
 * rotation by +pi/2.  Its resolvent splits into two exact cases:
 *
 *   x2 >  x1:  ((x1+x2)/2, (x2-x1)/2)     (interior: z + Rz = x)
 *   x2 <= x1:  (x1, 0)                    (boundary: vertical normal absorbs)
 *
 * At a boundary point (xi, 0) the image is the vertical ray
 * {0} x (-inf, xi], so the values of A along U's edge are strictly nested
 * -- the standing counterexample to dual-solution uniqueness arguments.
 */
ResolventOperator skew_plus_normal_cone_ww();

/// L^* C L for a matrix L with L L^T = alpha Id (alpha > 0), via the exact
/// closed form J(x) = x + (1/alpha) L^T (J_{alpha C}(Lx) - Lx).
/// Paramonotonicity transfers from C.  Throws if L L^T is not a positive
/// multiple of the identity, or if C lacks a scaled resolvent when needed.
ResolventOperator composed_lcl(const ResolventOperator& c, const Mat& l,
                               double tol = 1e-10);

}  // namespace atd
