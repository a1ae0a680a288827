#pragma once

#include <functional>

#include "fedosphere/op_expr.hpp"

namespace fedosphere {

/// A graded derivation acting on operator expressions (D, d-hat, D-hat, D-tilde).
struct Derivation {
    std::function<OpExpr(const OpExpr&)> act;
    OpExpr operator()(const OpExpr& a) const { return act(a); }
    VecOp operator()(const VecOp& v) const { return {act(v[0]), act(v[1]), act(v[2])}; }
};

/// Frame objects of T*S^2 in the eliminated representation (x3, p3, s3, k3,
/// theta3, alpha3 expressed through the independent generators) together with
/// the phase-space connection tables.
struct FrameCatalog {
    VecOp x, p, s, k, theta, alpha, z;
    OpExpr omega;       // alpha . theta
    OpExpr omega_tilde; // (1/2) eps_abc x_a theta_b theta_c
    OpExpr ss;          // s.s as an expression
    OpExpr root;        // R with R^2 = SS + 1
    OpExpr Q;           // s.alpha - k.theta

    OpExpr d_coord[4];          // D x1, D x2, D p1, D p2
    OpExpr Ds_gen[2], Dk_gen[2];
    OpExpr Dth_gen[2], Dal_gen[2];
    OpExpr DSS, DR;

    FrameCatalog();

    OpExpr D_scalar(const FiberScalar& f) const;
    OpExpr D(const OpExpr& a) const;
    VecOp D(const VecOp& v) const { return {D(v[0]), D(v[1]), D(v[2])}; }
    OpExpr D2(const OpExpr& a) const { return D(D(a)); }
    VecOp D2(const VecOp& v) const { return D(D(v)); }

    /// d-hat h = [s.alpha - k.theta, h] at i hbar = 1.
    OpExpr dhat(const OpExpr& a) const { return graded_comm(Q, a); }
    VecOp dhat(const VecOp& v) const { return {dhat(v[0]), dhat(v[1]), dhat(v[2])}; }

    /// D-hat = [Q + r, .] for a given r.
    OpExpr Dhat(const OpExpr& a, const OpExpr& r) const {
        return graded_comm(Q + r, a);
    }
    OpExpr Dtilde(const OpExpr& a, const OpExpr& r) const { return D(a) - Dhat(a, r); }

    Derivation D_derivation() const {
        return {[this](const OpExpr& a) { return D(a); }};
    }
    Derivation dhat_derivation() const {
        return {[this](const OpExpr& a) { return dhat(a); }};
    }
    Derivation Dhat_derivation(OpExpr r) const {
        return {[this, r = std::move(r)](const OpExpr& a) { return Dhat(a, r); }};
    }
    Derivation Dtilde_derivation(OpExpr r) const {
        return {[this, r = std::move(r)](const OpExpr& a) { return Dtilde(a, r); }};
    }

    /// Generators as expressions, in the order s1, s2, k1, k2.
    std::array<OpExpr, 4> generators() const;

    /// True when a commutes with all four generators.
    bool is_central(const OpExpr& a) const;

    /// Shared engine instance (immutable after construction).
    static const FrameCatalog& instance();
};

} // namespace fedosphere
