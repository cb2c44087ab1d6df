#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kashina/catalog.hpp"
#include "kashina/errors.hpp"
#include "kashina/hopf.hpp"
#include "kashina/matrix.hpp"

namespace kashina {

/// One term of a coaction: coefficient times (v_vec, basis b_h) in the order
/// dictated by the side (V (x) H for left-right, H (x) V for left-left).
struct CoactionTerm {
    Scalar coeff;
    std::size_t vec;
    std::size_t hidx;
};

/// A module-and-comodule structure over H: the action of every H-basis
/// element plus an explicit coaction table.
struct YDModule {
    enum class Side { LeftRight, LeftLeft };
    Side side = Side::LeftRight;
    std::size_t dimV = 0;
    std::vector<Matrix> action;                     // indexed by H basis (16)
    std::vector<std::vector<CoactionTerm>> coaction; // per basis vector of V

    std::vector<Scalar> coaction_flat(std::size_t k, std::size_t hdim) const {
        std::vector<Scalar> flat(dimV * hdim);
        for (const auto& t : coaction[k]) flat[t.vec * hdim + t.hidx] += t.coeff;
        return flat;
    }
};

namespace detail {

inline void flat_add(std::vector<Scalar>& dst, const Scalar& c, std::size_t i) {
    if (!c.is_zero()) dst[i] += c;
}

inline bool flat_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

} // namespace detail

/// Left-right Yetter-Drinfel'd structure of a D(H)-module: the H-action is
/// the restriction along H -> D(H) and the coaction is the dual-basis sum
/// rho(v) = sum_g (zeta_g v) (x) e_g + sum_g (chi_g v) (x) e_g t.
/// The comodule axioms are verified; a violation is a structural error.
inline YDModule coaction_from_action(const Representation& rep, const HopfAlgebra& h) {
    YDModule yd;
    yd.side = YDModule::Side::LeftRight;
    yd.dimV = rep.dim;
    yd.action.resize(h.dim);
    for (std::size_t q = 0; q < h.dim; ++q) yd.action[q] = rep.h_image(q);

    yd.coaction.assign(rep.dim, {});
    for (std::size_t k = 0; k < rep.dim; ++k)
        for (std::size_t p = 0; p < h.dim; ++p) {
            Matrix f = rep.f_image(p);
            for (std::size_t l = 0; l < rep.dim; ++l)
                if (!f(l, k).is_zero()) yd.coaction[k].push_back({f(l, k), l, p});
        }

    // counit axiom: (id (x) eps) rho = id
    for (std::size_t k = 0; k < rep.dim; ++k) {
        std::vector<Scalar> v(rep.dim);
        for (const auto& t : yd.coaction[k]) detail::flat_add(v, t.coeff * h.counit[t.hidx], t.vec);
        for (std::size_t l = 0; l < rep.dim; ++l)
            if (v[l] != (l == k ? Scalar(1) : Scalar(0)))
                throw StructuralError("coaction_from_action: counit axiom fails for " + rep.label);
    }
    // coassociativity: (rho (x) id) rho = (id (x) coproduct) rho
    for (std::size_t k = 0; k < rep.dim; ++k) {
        std::vector<Scalar> lhs(rep.dim * h.dim * h.dim), rhs(rep.dim * h.dim * h.dim);
        for (const auto& t : yd.coaction[k]) {
            for (const auto& u : yd.coaction[t.vec])
                detail::flat_add(lhs, t.coeff * u.coeff, (u.vec * h.dim + u.hidx) * h.dim + t.hidx);
            for (const auto& d : h.comult[t.hidx])
                detail::flat_add(rhs, t.coeff * d.coeff, (t.vec * h.dim + d.left) * h.dim + d.right);
        }
        if (lhs != rhs)
            throw StructuralError("coaction_from_action: coassociativity fails for " + rep.label);
    }
    return yd;
}

/// The left-right compatibility identity
///   rho(h v) = h_2 v_0 (x) h_3 v_1 S^-1(h_1)
/// checked for every basis element of H and every basis vector of V.
inline bool verify_yd_compatibility(const YDModule& yd, const HopfAlgebra& h) {
    if (yd.side != YDModule::Side::LeftRight)
        throw ShapeError("verify_yd_compatibility: left-right structure required");
    auto sinv_m = h.antipode.inverse();
    if (!sinv_m) throw StructuralError("verify_yd_compatibility: antipode not invertible");

    for (std::size_t q = 0; q < h.dim; ++q) {
        auto d2 = h.coproduct2(q);
        for (std::size_t k = 0; k < yd.dimV; ++k) {
            // lhs: coaction of action[q] * v_k
            std::vector<Scalar> lhs(yd.dimV * h.dim), rhs(yd.dimV * h.dim);
            for (std::size_t l = 0; l < yd.dimV; ++l) {
                const Scalar& a = yd.action[q](l, k);
                if (a.is_zero()) continue;
                for (const auto& t : yd.coaction[l])
                    detail::flat_add(lhs, a * t.coeff, t.vec * h.dim + t.hidx);
            }
            for (const auto& t3 : d2) {
                SparseVec s1 = h.apply_matrix(*sinv_m, h.basis_vec(t3.a));
                for (const auto& t : yd.coaction[k]) {
                    SparseVec hv =
                        h.multiply(h.multiply(h.basis_vec(t3.c), h.basis_vec(t.hidx)), s1);
                    for (std::size_t l = 0; l < yd.dimV; ++l) {
                        Scalar c = t3.coeff * t.coeff * yd.action[t3.b](l, t.vec);
                        if (c.is_zero()) continue;
                        for (const auto& [hi, hc] : hv)
                            detail::flat_add(rhs, c * hc, l * h.dim + hi);
                    }
                }
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Convert a compatible left-right structure to the left-left one via
/// rho_l(v) = S(v_1) (x) v_0, then verify the left-left compatibility
///   rho_l(h v) = h_1 v_{-1} S(h_3) (x) h_2 v_0.
/// The antipode must square to the identity (asserted) so S replaces S^-1.
inline YDModule to_left_left(const YDModule& yd, const HopfAlgebra& h) {
    if (yd.side != YDModule::Side::LeftRight)
        throw ShapeError("to_left_left: left-right structure required");
    if (!(h.antipode * h.antipode == Matrix::identity(h.dim)))
        throw StructuralError("to_left_left: antipode does not square to identity");
    if (!verify_yd_compatibility(yd, h))
        throw StructuralError("to_left_left: input fails left-right compatibility");

    YDModule ll;
    ll.side = YDModule::Side::LeftLeft;
    ll.dimV = yd.dimV;
    ll.action = yd.action;
    ll.coaction.assign(yd.dimV, {});
    for (std::size_t k = 0; k < yd.dimV; ++k)
        for (const auto& t : yd.coaction[k])
            for (std::size_t r = 0; r < h.dim; ++r) {
                Scalar c = t.coeff * h.antipode(r, t.hidx);
                if (!c.is_zero()) ll.coaction[k].push_back({c, t.vec, r});
            }

    for (std::size_t q = 0; q < h.dim; ++q) {
        auto d2 = h.coproduct2(q);
        for (std::size_t k = 0; k < yd.dimV; ++k) {
            std::vector<Scalar> lhs(yd.dimV * h.dim), rhs(yd.dimV * h.dim);
            for (std::size_t l = 0; l < yd.dimV; ++l) {
                const Scalar& a = ll.action[q](l, k);
                if (a.is_zero()) continue;
                for (const auto& t : ll.coaction[l])
                    detail::flat_add(lhs, a * t.coeff, t.vec * h.dim + t.hidx);
            }
            for (const auto& t3 : d2) {
                SparseVec s3 = h.antipode_vec(t3.c);
                for (const auto& t : ll.coaction[k]) {
                    SparseVec hv =
                        h.multiply(h.multiply(h.basis_vec(t3.a), h.basis_vec(t.hidx)), s3);
                    for (std::size_t l = 0; l < yd.dimV; ++l) {
                        Scalar c = t3.coeff * t.coeff * ll.action[t3.b](l, t.vec);
                        if (c.is_zero()) continue;
                        for (const auto& [hi, hc] : hv)
                            detail::flat_add(rhs, c * hc, l * h.dim + hi);
                    }
                }
            }
            if (lhs != rhs)
                throw StructuralError("to_left_left: left-left compatibility fails");
        }
    }
    return ll;
}

/// Braided vector space: an invertible solution of the braid equation on
/// V (x) V, stored with the Kronecker index convention (i1,i2) -> i1*dimV+i2.
struct Braiding {
    std::size_t dimV = 0;
    Matrix c;

    bool satisfies_braid_equation() const {
        Matrix id = Matrix::identity(dimV);
        Matrix c1 = kron(c, id), c2 = kron(id, c);
        return c1 * c2 * c1 == c2 * c1 * c2;
    }
    bool invertible() const { return c.rank() == dimV * dimV; }
};

/// Self-braiding of a left-left structure: c(v (x) w) = v_{-1} w (x) v_0.
/// Braid equation and invertibility are verified; failure indicates an
/// upstream construction bug.
inline Braiding braiding(const YDModule& ll) {
    if (ll.side != YDModule::Side::LeftLeft)
        throw ShapeError("braiding: left-left structure required");
    const std::size_t dv = ll.dimV;
    Braiding b;
    b.dimV = dv;
    b.c = Matrix::zeros(dv * dv, dv * dv);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j)
            for (const auto& t : ll.coaction[i]) {
                const Matrix& act = ll.action[t.hidx];
                for (std::size_t a = 0; a < dv; ++a) {
                    Scalar c = t.coeff * act(a, j);
                    if (!c.is_zero()) b.c(a * dv + t.vec, i * dv + j) += c;
                }
            }
    if (!b.satisfies_braid_equation())
        throw StructuralError("braiding: braid equation violated");
    if (!b.invertible()) throw StructuralError("braiding: computed braiding is singular");
    return b;
}

/// If c maps each x_i (x) x_j to a scalar times x_j (x) x_i in the given
/// basis, return the braiding matrix q; no basis search is attempted.
inline std::optional<Matrix> diagonal_type(const Braiding& b) {
    const std::size_t dv = b.dimV;
    Matrix q(dv, dv);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
            std::size_t col = i * dv + j;
            std::size_t want = j * dv + i;
            for (std::size_t r = 0; r < dv * dv; ++r)
                if (r != want && !b.c(r, col).is_zero()) return std::nullopt;
            if (b.c(want, col).is_zero()) return std::nullopt;
            q(i, j) = b.c(want, col);
        }
    return q;
}

/// Structure scalars (r, p, m) of the antidiagonal two-dimensional family:
/// c(v (x) v) = r w (x) w, c(v (x) w) = p v (x) w, c(w (x) v) = p w (x) v,
/// c(w (x) w) = m v (x) v. Returns nothing if the support pattern differs.
inline std::optional<std::array<Scalar, 3>> antidiagonal_pattern(const Braiding& b) {
    if (b.dimV != 2) return std::nullopt;
    auto single = [&](std::size_t col, std::size_t want) -> std::optional<Scalar> {
        for (std::size_t r = 0; r < 4; ++r)
            if (r != want && !b.c(r, col).is_zero()) return std::nullopt;
        if (b.c(want, col).is_zero()) return std::nullopt;
        return b.c(want, col);
    };
    auto r = single(0, 3), p1 = single(1, 1), p2 = single(2, 2), m = single(3, 0);
    if (!r || !p1 || !p2 || !m || !(*p1 == *p2)) return std::nullopt;
    return std::array<Scalar, 3>{*r, *p1, *m};
}

} // namespace kashina
