#include "fedosphere/frame.hpp"

namespace fedosphere {

namespace {

FiberScalar fs_rat(long n, long d = 1) { return FiberScalar::rat(n, d); }

/// -(x1 g1 + x2 g2)/x3 for a pair of expressions, the eliminated third component.
OpExpr third_component(const OpExpr& g1, const OpExpr& g2) {
    BaseElem inv_x3 = BaseElem::x3().inv();
    FiberScalar c1(-(BaseElem::x1() * inv_x3));
    FiberScalar c2(-(BaseElem::x2() * inv_x3));
    return scalar_mul(c1, g1) + scalar_mul(c2, g2);
}

} // namespace

FrameCatalog::FrameCatalog() {
    x = {OpExpr(BaseElem::x1()), OpExpr(BaseElem::x2()), OpExpr(BaseElem::x3())};
    p = {OpExpr(BaseElem::p1()), OpExpr(BaseElem::p2()), OpExpr(BaseElem::p3_alias())};

    OpExpr s1 = OpExpr::s_gen(0), s2 = OpExpr::s_gen(1);
    s = {s1, s2, third_component(s1, s2)};

    OpExpr k1 = OpExpr::k_gen(0), k2 = OpExpr::k_gen(1);
    k = {k1, k2, third_component(k1, k2)};

    OpExpr th1 = OpExpr::form_gen(FTH1), th2 = OpExpr::form_gen(FTH2);
    theta = {th1, th2, third_component(th1, th2)};
    OpExpr al1 = OpExpr::form_gen(FAL1), al2 = OpExpr::form_gen(FAL2);
    alpha = {al1, al2, third_component(al1, al2)};

    z = p - vec_cross(x, k);

    omega = vec_dot(alpha, theta);
    omega_tilde = scalar_mul(fs_rat(1, 2), vec_dot(x, vec_cross(theta, theta)));
    ss = OpExpr(FiberScalar::ss());
    root = OpExpr(FiberScalar::root());
    Q = vec_dot(s, alpha) - vec_dot(k, theta);

    VecOp dx = vec_cross(theta, x);
    VecOp dp = vec_cross(alpha, x) - vec_cross(p, theta);
    d_coord[0] = dx[0];
    d_coord[1] = dx[1];
    d_coord[2] = dp[0];
    d_coord[3] = dp[1];

    VecOp ds = vec_cross(theta, s);
    Ds_gen[0] = ds[0];
    Ds_gen[1] = ds[1];

    VecOp thx = vec_cross(theta, x);
    OpExpr ps = vec_dot(p, s);
    OpExpr pth = vec_dot(p, theta);
    VecOp sxx = vec_cross(s, x);
    VecOp dk = vec_cross(theta, k) -
               op_mul(scalar_mul(fs_rat(2, 3), thx), ps) +
               scalar_mul(fs_rat(1, 3), op_mul(pth, sxx));
    Dk_gen[0] = dk[0];
    Dk_gen[1] = dk[1];

    VecOp dth = vec_cross(theta, theta);
    Dth_gen[0] = dth[0];
    Dth_gen[1] = dth[1];

    VecOp dal = vec_cross(theta, alpha) -
                op_mul(scalar_mul(fs_rat(2, 3), thx), pth) +
                scalar_mul(fs_rat(1, 3), op_mul(pth, thx));
    Dal_gen[0] = dal[0];
    Dal_gen[1] = dal[1];

    // D(SS) assembled from the structural partials; R and jets cannot occur in SS.
    FiberScalar ssf = FiberScalar::ss();
    DSS = OpExpr();
    for (int i = 0; i < 2; ++i) DSS += scalar_mul(dpart_s(ssf, i), Ds_gen[i]);
    for (int v = 0; v < 4; ++v) DSS += scalar_mul(dpart_base(ssf, v), d_coord[v]);
    // D R = D(SS) / (2R)
    FiberScalar half_rinv(FiberCore(FiberRat(), FiberRat(FiberPoly(BaseElem(1, 2)), ss1_poly())));
    DR = scalar_mul(half_rinv, DSS);
}

OpExpr FrameCatalog::D_scalar(const FiberScalar& f) const {
    OpExpr r;
    for (int i = 0; i < 2; ++i) {
        FiberScalar d = dpart_s(f, i);
        if (!d.is_zero()) r += scalar_mul(d, Ds_gen[i]);
    }
    for (int v = 0; v < 4; ++v) {
        FiberScalar d = dpart_base(f, v);
        if (!d.is_zero()) r += scalar_mul(d, d_coord[v]);
    }
    FiberScalar droot = dpart_root(f);
    if (!droot.is_zero()) r += scalar_mul(droot, DR);
    for (auto& jp : dpart_jets(f)) {
        if (jp.ord + 1 > jet_order_limit())
            throw JetOverflow(jp.ord + 1, jet_order_limit());
        r += scalar_mul(jp.coeff * FiberScalar::jet(jp.sym, jp.ord + 1), DSS);
    }
    return r;
}

namespace {

/// D of a pure key monomial form*k-word, given the generator tables.
OpExpr d_key(const FrameCatalog& F, const OpKey& key) {
    OpExpr result;
    // form part, graded Leibniz with alternating signs
    {
        int pos = 0;
        for (int bit = 0; bit < 4; ++bit) {
            if (!(key.form & (1 << bit))) continue;
            uint8_t prefix = static_cast<uint8_t>(key.form & ((1 << bit) - 1));
            uint8_t suffix = static_cast<uint8_t>(key.form & ~((1 << (bit + 1)) - 1));
            const OpExpr& dgen = bit < 2 ? F.Dth_gen[bit] : F.Dal_gen[bit - 2];
            OpExpr piece = dgen;
            if (prefix) {
                OpExpr pre;
                pre.t[{prefix, 0, 0}] = FiberScalar(1);
                piece = normal_mul(pre, piece);
            }
            if (suffix) {
                OpExpr suf;
                suf.t[{suffix, 0, 0}] = FiberScalar(1);
                piece = normal_mul(piece, suf);
            }
            OpExpr kword;
            kword.t[{0, key.ka, key.kb}] = FiberScalar(1);
            piece = normal_mul(piece, kword);
            if (pos & 1) result -= piece; else result += piece;
            ++pos;
        }
    }
    // k-word part, carries (-1)^{form degree} from passing the form monomial
    {
        OpExpr dk;
        for (int i = 0; i < static_cast<int>(key.ka); ++i) {
            OpExpr left, right;
            left.t[{0, static_cast<uint8_t>(i), 0}] = FiberScalar(1);
            right.t[{0, static_cast<uint8_t>(key.ka - 1 - i), key.kb}] = FiberScalar(1);
            dk += normal_mul(normal_mul(left, F.Dk_gen[0]), right);
        }
        for (int j = 0; j < static_cast<int>(key.kb); ++j) {
            OpExpr left, right;
            left.t[{0, key.ka, static_cast<uint8_t>(j)}] = FiberScalar(1);
            right.t[{0, 0, static_cast<uint8_t>(key.kb - 1 - j)}] = FiberScalar(1);
            dk += normal_mul(normal_mul(left, F.Dk_gen[1]), right);
        }
        if (!dk.is_zero()) {
            if (key.form) {
                OpExpr formexpr;
                formexpr.t[{key.form, 0, 0}] = FiberScalar(1);
                dk = normal_mul(formexpr, dk);
                if (form_degree(key.form) & 1) dk = -dk;
            }
            result += dk;
        }
    }
    return result;
}

} // namespace

OpExpr FrameCatalog::D(const OpExpr& a) const {
    OpExpr r;
    for (auto& [key, c] : a.t) {
        OpExpr mono;
        mono.t[key] = FiberScalar(1);
        r += normal_mul(D_scalar(c), mono);
        OpExpr dm = d_key(*this, key);
        if (!dm.is_zero()) r += scalar_mul(c, dm);
    }
    return r;
}

std::array<OpExpr, 4> FrameCatalog::generators() const {
    return {OpExpr::s_gen(0), OpExpr::s_gen(1), OpExpr::k_gen(0), OpExpr::k_gen(1)};
}

bool FrameCatalog::is_central(const OpExpr& a) const {
    for (auto& g : generators())
        if (!graded_comm(a, g).is_zero()) return false;
    return true;
}

const FrameCatalog& FrameCatalog::instance() {
    static const FrameCatalog F;
    return F;
}

} // namespace fedosphere
