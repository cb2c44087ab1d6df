#pragma once

#include <array>
#include <cstddef>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "kashina/double_algebra.hpp"
#include "kashina/errors.hpp"
#include "kashina/group.hpp"
#include "kashina/hopf.hpp"
#include "kashina/matrix.hpp"
#include "kashina/report.hpp"

namespace kashina {

enum class Family { V, W, X, Y, Z };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::V: return "V";
        case Family::W: return "W";
        case Family::X: return "X";
        case Family::Y: return "Y";
        case Family::Z: return "Z";
    }
    return "?";
}

/// One simple module over D(H), given by generator matrices. Exactly one of
/// the dual-side generator families acts nonzero: zeta for the V/W/X
/// entries, chi for the Y/Z entries; on the active side the identity-indexed
/// element acts as the identity through the power expansion
/// zeta(x^k y^l) = zeta_x^k zeta_y^l (resp. chi).
struct Representation {
    std::string label;   // ASCII, e.g. W_x_1_plus_plus
    Family family = Family::V;
    std::size_t dim = 1;
    GroupElt mu;
    int index = 0; // the i (V/W/X) or j (Y/Z) parameter
    std::array<Matrix, 8> e;
    Matrix t;
    Matrix zeta_x, zeta_y, chi_x, chi_y;
    bool chi_zero = true; // true: chi-side acts as 0; false: zeta-side acts as 0

    Matrix zero() const { return Matrix::zeros(dim, dim); }

    /// Image of the H-basis element e_g # t^eps.
    Matrix h_image(std::size_t hidx) const {
        Matrix m = e[hidx & 7];
        if (hidx >> 3) m = m * t;
        return m;
    }

    /// Image of the H*-basis element zeta_g (eps = 0) or chi_g (eps = 1).
    Matrix f_image(std::size_t fidx) const {
        GroupElt g = GroupElt::from_idx(fidx & 7);
        bool chi = (fidx >> 3) != 0;
        if (chi == chi_zero) return zero();
        const Matrix& gx = chi ? chi_x : zeta_x;
        const Matrix& gy = chi ? chi_y : zeta_y;
        return mat_pow(gx, static_cast<std::size_t>(g.i)) *
               mat_pow(gy, static_cast<std::size_t>(g.j));
    }

    /// Image of the D(H) basis element f_p (x) b_q via the factorization
    /// rho(f (x) b) = rho(f) rho(b).
    Matrix d_image(std::size_t didx, std::size_t hdim = 16) const {
        return f_image(didx / hdim) * h_image(didx % hdim);
    }
};

namespace detail {

inline Matrix m1(const Scalar& a) {
    Matrix m(1, 1);
    m(0, 0) = a;
    return m;
}
inline Matrix m2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}
inline Matrix diag2(const Scalar& a, const Scalar& d) { return m2(a, 0, 0, d); }

inline std::string sign_word(int s) { return s > 0 ? "plus" : "minus"; }

inline std::array<Matrix, 8> e_diag(std::size_t dim, GroupElt top, GroupElt bottom) {
    std::array<Matrix, 8> e;
    for (auto g : GroupElt::all()) {
        Matrix m = Matrix::zeros(dim, dim);
        if (g == top) m(0, 0) = Scalar::one();
        if (dim == 2 && g == bottom) m(1, 1) = Scalar::one();
        e[g.idx()] = m;
    }
    return e;
}

} // namespace detail

/// The catalog of the 88 simple D(H)-modules for H = H_{c:sigma0}:
/// 32 one-dimensional V entries and 56 two-dimensional entries in the
/// W/X/Y/Z families, ordered V, W, X, Y, Z.
inline std::vector<Representation> catalog() {
    using detail::diag2;
    using detail::e_diag;
    using detail::m1;
    using detail::m2;
    const Scalar xi = Scalar::xi();
    std::vector<Representation> out;
    out.reserve(88);

    // V family: 1-dimensional, mu in S, t acts by a square root of
    // sigma(mu;t,t), zeta_x by xi^i, zeta_y by +1 (mu in {1,x2}) or -1.
    for (GroupElt mu : {GroupElt{0, 0}, GroupElt{0, 1}, GroupElt{2, 0}, GroupElt{2, 1}})
        for (int sup : {+1, -1})
            for (int i = 0; i < 4; ++i) {
                Representation r;
                r.family = Family::V;
                r.dim = 1;
                r.mu = mu;
                r.index = i;
                r.label = "V_" + mu.name() + "_" + std::to_string(i) + "_" + detail::sign_word(sup);
                r.e = e_diag(1, mu, mu);
                Scalar lam = (mu.i == 2) ? xi : Scalar(1);
                if (sup < 0) lam = -lam;
                r.t = m1(lam);
                r.zeta_x = m1(xi.pow(i));
                r.zeta_y = m1(Scalar(mu.j ? -1 : 1));
                r.chi_x = r.chi_y = m1(Scalar(0));
                r.chi_zero = true;
                out.push_back(std::move(r));
            }

    // W family: mu in {x, x3}, v at e_mu, w at e_{mu y}; t antidiagonal.
    for (GroupElt mu : {GroupElt{1, 0}, GroupElt{3, 0}})
        for (int sub : {+1, -1})
            for (int i = 0; i < 4; ++i) {
                Representation r;
                r.family = Family::W;
                r.dim = 2;
                r.mu = mu;
                r.index = i;
                int sup = (mu.i == 1) ? +1 : -1;
                r.label = "W_" + mu.name() + "_" + std::to_string(i) + "_" +
                          detail::sign_word(sup) + "_" + detail::sign_word(sub);
                r.e = e_diag(2, mu, mu.mul(GroupElt::y()));
                r.t = (sup > 0) ? m2(0, 1, 1, 0) : m2(0, -1, 1, 0);
                if (sub > 0) {
                    r.zeta_x = diag2(xi.pow(i), xi.pow(i));
                    r.zeta_y = diag2(-1, 1);
                } else {
                    r.zeta_x = diag2(-xi.pow(i), xi.pow(i));
                    r.zeta_y = diag2(1, -1);
                }
                r.chi_x = r.chi_y = Matrix::zeros(2, 2);
                r.chi_zero = true;
                out.push_back(std::move(r));
            }

    // X family: both basis vectors in V_mu, t antidiagonal, zeta_x mixed.
    for (GroupElt mu : {GroupElt{0, 0}, GroupElt{0, 1}, GroupElt{2, 0}, GroupElt{2, 1}})
        for (int i = 0; i < 2; ++i) {
            Representation r;
            r.family = Family::X;
            r.dim = 2;
            r.mu = mu;
            r.index = i;
            int sup = (mu.i == 0) ? +1 : -1;
            r.label = "X_" + mu.name() + "_" + std::to_string(i) + "_" + detail::sign_word(sup);
            r.e = e_diag(2, mu, mu);
            r.t = (sup > 0) ? m2(0, 1, 1, 0) : m2(0, -1, 1, 0);
            r.zeta_x = diag2(xi.pow(i), -xi.pow(i));
            r.zeta_y = (mu.j == 0) ? diag2(-1, -1) : diag2(1, 1);
            r.chi_x = r.chi_y = Matrix::zeros(2, 2);
            r.chi_zero = true;
            out.push_back(std::move(r));
        }

    // Y family: mu in {x, x3}; chi-side acts, t antidiagonal.
    {
        struct YRow {
            Scalar t01, t10; // t = [[0, t01], [t10, 0]]
            int cx;          // chi_x = [[0, cx], [1, 0]]
            int cy;          // chi_y = diag(cy, -cy)
        };
        const Scalar xi_ = Scalar::xi();
        const std::array<YRow, 8> yx = {{
            {-xi_, xi_, +1, +1},
            {xi_, -xi_, +1, +1},
            {-xi_, xi_, -1, -1},
            {xi_, -xi_, -1, -1},
            {Scalar(1), Scalar(1), -1, +1},
            {Scalar(-1), Scalar(-1), -1, +1},
            {Scalar(1), Scalar(1), +1, -1},
            {Scalar(-1), Scalar(-1), +1, -1},
        }};
        const std::array<YRow, 8> yx3 = {{
            {xi_, xi_, -1, +1},
            {-xi_, -xi_, -1, +1},
            {xi_, xi_, +1, -1},
            {-xi_, -xi_, +1, -1},
            {Scalar(-1), Scalar(1), +1, +1},
            {Scalar(1), Scalar(-1), +1, +1},
            {Scalar(-1), Scalar(1), -1, -1},
            {Scalar(1), Scalar(-1), -1, -1},
        }};
        for (GroupElt mu : {GroupElt{1, 0}, GroupElt{3, 0}}) {
            const auto& rows = (mu.i == 1) ? yx : yx3;
            for (int j = 0; j < 8; ++j) {
                const YRow& row = rows[static_cast<std::size_t>(j)];
                Representation r;
                r.family = Family::Y;
                r.dim = 2;
                r.mu = mu;
                r.index = j + 1;
                r.label = "Y_" + mu.name() + "_" + std::to_string(j + 1);
                r.e = e_diag(2, mu, mu.mul(GroupElt::y()));
                r.t = m2(0, row.t01, row.t10, 0);
                r.chi_x = m2(0, row.cx, 1, 0);
                r.chi_y = diag2(row.cy, -row.cy);
                r.zeta_x = r.zeta_y = Matrix::zeros(2, 2);
                r.chi_zero = false;
                out.push_back(std::move(r));
            }
        }
    }

    // Z family: mu in {1, x2}; chi-side acts, t diagonal. The t-matrix is a
    // square root of sigma(mu;t,t) on each slot; the slot signs of t and
    // chi_y are tied by the straightening of t past chi_x, which forces
    // t = diag(l, l') with l' = -eta l for chi_y = diag(eta, -eta).
    {
        struct ZRow {
            int t0, t1; // t = z * diag(t0, t1)
            int cx;     // chi_x = [[0, cx], [1, 0]]
            int cy;     // chi_y = diag(cy, -cy)
        };
        const std::array<ZRow, 8> zr = {{
            {+1, +1, +1, -1},
            {-1, -1, +1, -1},
            {+1, +1, -1, -1},
            {-1, -1, -1, -1},
            {+1, -1, +1, +1},
            {-1, +1, +1, +1},
            {+1, -1, -1, +1},
            {-1, +1, -1, +1},
        }};
        for (GroupElt mu : {GroupElt{0, 0}, GroupElt{2, 0}}) {
            Scalar z = (mu.i == 2) ? Scalar::xi() : Scalar(1);
            for (int j = 0; j < 8; ++j) {
                const ZRow& row = zr[static_cast<std::size_t>(j)];
                Representation r;
                r.family = Family::Z;
                r.dim = 2;
                r.mu = mu;
                r.index = j + 1;
                r.label = "Z_" + mu.name() + "_" + std::to_string(j + 1);
                r.e = e_diag(2, mu, mu.mul(GroupElt::y()));
                r.t = diag2(Scalar(row.t0) * z, Scalar(row.t1) * z);
                r.chi_x = m2(0, row.cx, 1, 0);
                r.chi_y = diag2(row.cy, -row.cy);
                r.zeta_x = r.zeta_y = Matrix::zeros(2, 2);
                r.chi_zero = false;
                out.push_back(std::move(r));
            }
        }
    }

    return out;
}

inline const Representation& catalog_entry(const std::vector<Representation>& cat,
                                           const std::string& label) {
    for (const auto& r : cat)
        if (r.label == label) return r;
    throw ConstructionError("unknown catalog label '" + label + "'");
}

/// Exhaustive module check: extend the generator images to all of D(H) by
/// factorization and verify rho(b) rho(b') = sum c^{b''}_{b,b'} rho(b'') over
/// every basis pair.
inline ValidationReport verify_module(const Representation& rep, const DoubleAlgebra& d) {
    ValidationReport out;
    out.subject = rep.label;
    const std::size_t n = d.dim;

    std::vector<Matrix> img(n);
    for (std::size_t I = 0; I < n; ++I) img[I] = rep.d_image(I, d.h.dim);

    // unit acts as identity
    {
        Matrix u = rep.zero();
        for (const auto& [I, c] : d.unit) u = u + c * img[I];
        out.add("unit acts as identity", u == Matrix::identity(rep.dim), "rho(1) != id");
    }

    bool ok = true;
    std::string wit;
    std::size_t failures = 0;
    for (std::size_t I = 0; I < n && failures < 4; ++I) {
        for (std::size_t J = 0; J < n; ++J) {
            Matrix lhs = img[I] * img[J];
            Matrix rhs = rep.zero();
            for (const auto& [K, c] : d.mult[I][J]) rhs = rhs + c * img[K];
            if (lhs != rhs) {
                ok = false;
                ++failures;
                if (wit.empty()) wit = "(" + d.basis[I] + ")(" + d.basis[J] + ")";
                if (failures >= 4) break;
            }
        }
    }
    out.add("structure constants respected", ok, wit);
    return out;
}

/// Parallel verification of a set of representations; one report each.
inline std::vector<ValidationReport> verify_modules(const std::vector<Representation>& reps,
                                                    const DoubleAlgebra& d,
                                                    unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<ValidationReport> out(reps.size());
    std::vector<std::future<void>> fut;
    std::size_t chunk = (reps.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        std::size_t lo = w * chunk, hi = std::min(reps.size(), lo + chunk);
        if (lo >= hi) break;
        fut.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t k = lo; k < hi; ++k) out[k] = verify_module(reps[k], d);
        }));
    }
    for (auto& f : fut) f.get();
    return out;
}

/// Burnside criterion: a 2-dimensional module is simple iff the images of
/// the generators span the full 2x2 matrix algebra.
inline bool is_simple(const Representation& rep) {
    if (rep.dim == 1) return true;

    std::vector<Matrix> gens;
    for (const auto& m : rep.e) gens.push_back(m);
    gens.push_back(rep.t);
    gens.push_back(rep.chi_zero ? rep.zeta_x : rep.chi_x);
    gens.push_back(rep.chi_zero ? rep.zeta_y : rep.chi_y);

    const std::size_t dd = rep.dim * rep.dim;
    std::vector<Matrix> span{Matrix::identity(rep.dim)};
    auto span_rank = [&] {
        Matrix m(span.size(), dd);
        for (std::size_t r = 0; r < span.size(); ++r)
            for (std::size_t i = 0; i < rep.dim; ++i)
                for (std::size_t j = 0; j < rep.dim; ++j)
                    m(r, i * rep.dim + j) = span[r](i, j);
        return m.rank();
    };

    std::size_t rank = span_rank();
    bool grew = true;
    while (grew && rank < dd) {
        grew = false;
        std::vector<Matrix> next = span;
        for (const auto& s : span)
            for (const auto& g : gens) next.push_back(s * g);
        Matrix m(next.size(), dd);
        for (std::size_t r = 0; r < next.size(); ++r)
            for (std::size_t i = 0; i < rep.dim; ++i)
                for (std::size_t j = 0; j < rep.dim; ++j)
                    m(r, i * rep.dim + j) = next[r](i, j);
        std::size_t nrank = m.rank();
        if (nrank > rank) {
            grew = true;
            rank = nrank;
            span = std::move(next);
        }
    }
    return rank == dd;
}

/// Trace of rho(b) over all basis elements of D(H); separates the simples of
/// a semisimple algebra.
inline std::vector<Scalar> character(const Representation& rep, const DoubleAlgebra& d) {
    std::vector<Scalar> chi(d.dim);
    for (std::size_t I = 0; I < d.dim; ++I) {
        Matrix m = rep.d_image(I, d.h.dim);
        Scalar tr;
        for (std::size_t k = 0; k < rep.dim; ++k) tr += m(k, k);
        chi[I] = tr;
    }
    return chi;
}

/// Completeness of a catalog of simples: sum of squared dimensions must
/// exhaust dim D(H) and the characters must be pairwise distinct.
inline ValidationReport completeness_check(const std::vector<Representation>& reps,
                                           const DoubleAlgebra& d) {
    ValidationReport rep;
    rep.subject = "catalog completeness";

    std::size_t sum = 0;
    for (const auto& r : reps) sum += r.dim * r.dim;
    rep.add("sum of squared dimensions equals dim D(H)", sum == d.dim,
            "sum = " + std::to_string(sum) + ", expected " + std::to_string(d.dim));

    bool distinct = true;
    std::string wit;
    std::vector<std::vector<Scalar>> chars;
    chars.reserve(reps.size());
    for (const auto& r : reps) chars.push_back(character(r, d));
    for (std::size_t a = 0; a < reps.size() && distinct; ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            if (chars[a] == chars[b]) {
                distinct = false;
                wit = reps[a].label + " vs " + reps[b].label;
                break;
            }
    rep.add("characters pairwise distinct", distinct, wit);
    return rep;
}

} // namespace kashina
