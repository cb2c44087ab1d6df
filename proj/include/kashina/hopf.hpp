#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kashina/errors.hpp"
#include "kashina/group.hpp"
#include "kashina/matched_pair.hpp"
#include "kashina/matrix.hpp"
#include "kashina/report.hpp"
#include "kashina/scalar.hpp"

namespace kashina {

/// Sparse vector in a fixed basis: (index, coefficient) pairs, sorted by
/// index, zero coefficients dropped.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline void sparse_accumulate(SparseVec& dest, std::size_t idx, const Scalar& c) {
    if (!c.is_zero()) dest.emplace_back(idx, c);
}

inline SparseVec sparse_normalize(SparseVec v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    return out;
}

inline bool sparse_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

inline SparseVec sparse_scale(const Scalar& c, const SparseVec& v) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& [i, s] : v) out.emplace_back(i, c * s);
    return out;
}

inline SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sparse_normalize(std::move(out));
}

struct CoproductTerm {
    Scalar coeff;
    std::size_t left, right;
};

struct CoproductTerm3 {
    Scalar coeff;
    std::size_t a, b, c;
};

/// A finite-dimensional Hopf algebra given by structure constants on a fixed
/// basis. Immutable after construction; all members are plain data so that
/// verifiers and mutation tests can copy and tamper freely.
struct HopfAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<SparseVec>> mult; // mult[i][j] = b_i * b_j
    std::vector<std::vector<CoproductTerm>> comult;
    SparseVec unit;
    std::vector<Scalar> counit;
    Matrix antipode; // column i = S(b_i)

    SparseVec basis_vec(std::size_t i) const { return {{i, Scalar::one()}}; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) {
                Scalar c = a * b;
                for (const auto& [k, s] : mult[i][j]) sparse_accumulate(out, k, c * s);
            }
        return sparse_normalize(std::move(out));
    }

    /// Coproduct of a sparse vector, indexed in the tensor square
    /// (left * dim + right).
    SparseVec coproduct(const SparseVec& x) const {
        SparseVec out;
        for (const auto& [i, a] : x)
            for (const auto& t : comult[i]) sparse_accumulate(out, t.left * dim + t.right, a * t.coeff);
        return sparse_normalize(std::move(out));
    }

    /// Two-fold coproduct of a basis element, as (coeff, a, b, c) terms.
    std::vector<CoproductTerm3> coproduct2(std::size_t i) const {
        std::vector<CoproductTerm3> out;
        for (const auto& t : comult[i])
            for (const auto& u : comult[t.left])
                if (!(t.coeff * u.coeff).is_zero())
                    out.push_back({t.coeff * u.coeff, u.left, u.right, t.right});
        return out;
    }

    SparseVec antipode_vec(std::size_t i) const {
        SparseVec out;
        for (std::size_t r = 0; r < dim; ++r) sparse_accumulate(out, r, antipode(r, i));
        return sparse_normalize(std::move(out));
    }

    SparseVec apply_matrix(const Matrix& m, const SparseVec& x) const {
        SparseVec out;
        for (const auto& [i, a] : x)
            for (std::size_t r = 0; r < dim; ++r) sparse_accumulate(out, r, a * m(r, i));
        return sparse_normalize(std::move(out));
    }

    Scalar counit_of(const SparseVec& x) const {
        Scalar s;
        for (const auto& [i, a] : x) s += a * counit[i];
        return s;
    }
};

/// Basis ordinal of e_g # t^eps: eps*8 + j*4 + i. Fixed; every serialized
/// matrix depends on it.
inline std::size_t hopf_idx(GroupElt g, int eps) {
    return static_cast<std::size_t>(eps) * 8 + g.idx();
}
inline GroupElt hopf_group(std::size_t idx) { return GroupElt::from_idx(idx & 7); }
inline int hopf_eps(std::size_t idx) { return static_cast<int>(idx >> 3); }
inline std::string hopf_basis_name(std::size_t idx) {
    std::string n = "e(" + hopf_group(idx).name() + ")";
    if (hopf_eps(idx)) n += "t";
    return n;
}

/// Bicrossed product k^G #_{sigma,tau} kF from matched-pair data. The data is
/// validated first; invalid data is rejected with the failing identities.
inline HopfAlgebra build_bicrossed_product(const MatchedPair& mp) {
    ValidationReport v = validate_matched_pair(mp);
    if (!v.all_passed()) {
        std::string what = "matched-pair validation failed for '" + mp.name + "':";
        for (const auto& c : v.checks)
            if (!c.passed) what += " [" + c.check + " @ " + c.witness + "]";
        throw ConstructionError(what);
    }

    HopfAlgebra h;
    h.dim = 16;
    h.basis.resize(16);
    for (std::size_t k = 0; k < 16; ++k) h.basis[k] = hopf_basis_name(k);

    // product: (e_g # t^a)(e_g' # t^b) = [g <| t^a = g'] sigma(g; t^a, t^b) e_g # t^{a+b}
    h.mult.assign(16, std::vector<SparseVec>(16));
    for (auto g : GroupElt::all())
        for (int a : {0, 1})
            for (auto gp : GroupElt::all())
                for (int b : {0, 1}) {
                    SparseVec& out = h.mult[hopf_idx(g, a)][hopf_idx(gp, b)];
                    if (mp.act(g, a) == gp)
                        sparse_accumulate(out, hopf_idx(g, (a + b) & 1), mp.sigma(g, a, b));
                }

    // coproduct: D(e_g # t^a) = sum_{g' g'' = g} tau(g', g''; t^a)
    //            (e_g' # (g'' |> t^a)) (x) (e_g'' # t^a)
    h.comult.assign(16, {});
    for (auto g : GroupElt::all())
        for (int a : {0, 1}) {
            auto& terms = h.comult[hopf_idx(g, a)];
            for (auto gp : GroupElt::all()) {
                GroupElt gpp = gp.inv().mul(g);
                terms.push_back({mp.tau(gp, gpp, a), hopf_idx(gp, mp.fact(gpp, a)),
                                 hopf_idx(gpp, a)});
            }
        }

    for (auto g : GroupElt::all()) h.unit.emplace_back(hopf_idx(g, 0), Scalar::one());
    h.unit = sparse_normalize(std::move(h.unit));

    h.counit.assign(16, Scalar());
    for (int a : {0, 1}) h.counit[hopf_idx(GroupElt::one(), a)] = Scalar::one();

    // antipode: S(e_g # t^a) = sigma(g^-1; t^b, t^b)^-1 tau(g^-1, g; t^a)^-1
    //           e_{(g <| t^a)^-1} # t^b,  with t^b = g |> t^a
    h.antipode = Matrix(16, 16);
    for (auto g : GroupElt::all())
        for (int a : {0, 1}) {
            int b = mp.fact(g, a);
            Scalar coeff =
                mp.sigma(g.inv(), b, b).inverse() * mp.tau(g.inv(), g, a).inverse();
            h.antipode(hopf_idx(mp.act(g, a).inv(), b), hopf_idx(g, a)) = coeff;
        }

    return h;
}

namespace detail {

/// Product in the tensor square H (x) H on tensor-indexed sparse vectors.
inline SparseVec tensor_square_mult(const HopfAlgebra& h, const SparseVec& x,
                                    const SparseVec& y) {
    SparseVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            std::size_t il = i / h.dim, ir = i % h.dim;
            std::size_t jl = j / h.dim, jr = j % h.dim;
            Scalar c = a * b;
            for (const auto& [kl, sl] : h.mult[il][jl])
                for (const auto& [kr, sr] : h.mult[ir][jr])
                    sparse_accumulate(out, kl * h.dim + kr, c * sl * sr);
        }
    return sparse_normalize(std::move(out));
}

} // namespace detail

/// Exhaustive basis-level verification of the Hopf algebra axioms:
/// associativity, unit, coassociativity, counit, bialgebra compatibilities
/// and the antipode axiom. Also reports whether S^2 = id.
inline ValidationReport verify_hopf_axioms(const HopfAlgebra& h) {
    ValidationReport rep;
    rep.subject = "hopf axioms (dim " + std::to_string(h.dim) + ")";
    const std::size_t n = h.dim;

    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    SparseVec lhs = h.multiply(h.mult[i][j], h.basis_vec(k));
                    SparseVec rhs = h.multiply(h.basis_vec(i), h.mult[j][k]);
                    if (!sparse_equal(lhs, rhs)) {
                        ok = false;
                        wit = "(" + h.basis[i] + ")(" + h.basis[j] + ")(" + h.basis[k] + ")";
                    }
                }
        rep.add("associativity", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n; ++i) {
            if (!sparse_equal(h.multiply(h.unit, h.basis_vec(i)), h.basis_vec(i)) ||
                !sparse_equal(h.multiply(h.basis_vec(i), h.unit), h.basis_vec(i))) {
                ok = false;
                wit = h.basis[i];
                break;
            }
        }
        rep.add("unit law", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n; ++i) {
            // compare (D (x) id)D with (id (x) D)D in the triple tensor index
            SparseVec lhs, rhs;
            for (const auto& t : h.comult[i]) {
                for (const auto& u : h.comult[t.left])
                    sparse_accumulate(lhs, (u.left * n + u.right) * n + t.right,
                                      t.coeff * u.coeff);
                for (const auto& u : h.comult[t.right])
                    sparse_accumulate(rhs, (t.left * n + u.left) * n + u.right,
                                      t.coeff * u.coeff);
            }
            if (!sparse_equal(sparse_normalize(std::move(lhs)),
                              sparse_normalize(std::move(rhs)))) {
                ok = false;
                wit = h.basis[i];
                break;
            }
        }
        rep.add("coassociativity", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n; ++i) {
            SparseVec left, right;
            for (const auto& t : h.comult[i]) {
                sparse_accumulate(left, t.right, t.coeff * h.counit[t.left]);
                sparse_accumulate(right, t.left, t.coeff * h.counit[t.right]);
            }
            if (!sparse_equal(sparse_normalize(std::move(left)), h.basis_vec(i)) ||
                !sparse_equal(sparse_normalize(std::move(right)), h.basis_vec(i))) {
                ok = false;
                wit = h.basis[i];
                break;
            }
        }
        rep.add("counit law", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                SparseVec lhs = h.coproduct(h.mult[i][j]);
                SparseVec rhs = detail::tensor_square_mult(
                    h, h.coproduct(h.basis_vec(i)), h.coproduct(h.basis_vec(j)));
                if (!sparse_equal(lhs, rhs)) {
                    ok = false;
                    wit = "(" + h.basis[i] + ")(" + h.basis[j] + ")";
                }
            }
        if (ok) {
            SparseVec one2;
            for (const auto& [i, a] : h.unit)
                for (const auto& [j, b] : h.unit) sparse_accumulate(one2, i * n + j, a * b);
            ok = sparse_equal(h.coproduct(h.unit), sparse_normalize(std::move(one2)));
            if (!ok) wit = "coproduct of 1";
        }
        rep.add("coproduct is an algebra map", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (h.counit_of(h.mult[i][j]) != h.counit[i] * h.counit[j]) {
                    ok = false;
                    wit = "(" + h.basis[i] + ")(" + h.basis[j] + ")";
                }
        if (ok && h.counit_of(h.unit) != Scalar(1)) {
            ok = false;
            wit = "counit of 1";
        }
        rep.add("counit is an algebra map", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n; ++i) {
            SparseVec left, right;
            for (const auto& t : h.comult[i]) {
                left = sparse_add(left, sparse_scale(t.coeff,
                                                     h.multiply(h.antipode_vec(t.left),
                                                                h.basis_vec(t.right))));
                right = sparse_add(right, sparse_scale(t.coeff,
                                                       h.multiply(h.basis_vec(t.left),
                                                                  h.antipode_vec(t.right))));
            }
            SparseVec want = sparse_scale(h.counit[i], h.unit);
            if (!sparse_equal(left, want) || !sparse_equal(right, want)) {
                ok = false;
                wit = h.basis[i];
                break;
            }
        }
        rep.add("antipode axiom", ok, wit);
    }
    {
        bool ok = h.antipode * h.antipode == Matrix::identity(n);
        rep.add("antipode squares to identity", ok, ok ? "" : "S^2 != id");
    }
    return rep;
}

/// Dual Hopf algebra on the dual basis: multiplication is the transpose of
/// the coproduct, coproduct the transpose of multiplication, antipode the
/// transposed matrix. For the bicrossed basis {e_g, e_g t} the dual basis is
/// named zeta(g) = e_g^* and chi(g) = (e_g t)^*.
inline HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    const std::size_t n = h.dim;
    HopfAlgebra d;
    d.dim = n;
    d.basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& b = h.basis[i];
        if (b.rfind("e(", 0) == 0 && b.back() == ')')
            d.basis[i] = "zeta(" + b.substr(2, b.size() - 3) + ")";
        else if (b.rfind("e(", 0) == 0 && b.back() == 't')
            d.basis[i] = "chi(" + b.substr(2, b.size() - 4) + ")";
        else if (b.rfind("zeta(", 0) == 0)
            d.basis[i] = "e(" + b.substr(5, b.size() - 6) + ")";
        else if (b.rfind("chi(", 0) == 0)
            d.basis[i] = "e(" + b.substr(4, b.size() - 5) + ")t";
        else
            d.basis[i] = b + "*";
    }

    d.mult.assign(n, std::vector<SparseVec>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& t : h.comult[c])
            sparse_accumulate(d.mult[t.left][t.right], c, t.coeff);
    for (auto& row : d.mult)
        for (auto& v : row) v = sparse_normalize(std::move(v));

    d.comult.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [c, s] : h.mult[i][j]) d.comult[c].push_back({s, i, j});

    for (std::size_t i = 0; i < n; ++i) sparse_accumulate(d.unit, i, h.counit[i]);
    d.unit = sparse_normalize(std::move(d.unit));

    d.counit.assign(n, Scalar());
    for (const auto& [i, a] : h.unit) d.counit[i] = a;

    d.antipode = h.antipode.transpose();
    return d;
}

} // namespace kashina
