#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "kashina/errors.hpp"
#include "kashina/hopf.hpp"
#include "kashina/matched_pair.hpp"

namespace kashina {

/// The Drinfel'd double D(H) = H*^cop (x) H as an algebra on the product
/// basis f_p (x) b_q, indexed by p*dim(H) + q. Only the algebra structure is
/// materialized; the coalgebra side is not needed downstream.
///
/// The cross multiplication is
///   (f (x) m)(f' (x) m') = sum f * (m_1 -> f' <- S^-1(m_3)) (x) m_2 m',
/// where the sandwiched functional evaluates as k |-> f'(S^-1(m_3) k m_1).
struct DoubleAlgebra {
    HopfAlgebra h;      // the underlying Hopf algebra
    HopfAlgebra hstar;  // its dual (algebra structure of H*)
    Matrix s_inv;       // inverse antipode of h
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<SparseVec>> mult;
    SparseVec unit;

    std::size_t fpart(std::size_t I) const { return I / h.dim; }
    std::size_t hpart(std::size_t I) const { return I % h.dim; }
    std::size_t didx(std::size_t f, std::size_t m) const { return f * h.dim + m; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) {
                Scalar c = a * b;
                for (const auto& [k, s] : mult[i][j]) sparse_accumulate(out, k, c * s);
            }
        return sparse_normalize(std::move(out));
    }

    /// Embedding of an H-element: epsilon (x) v.
    SparseVec embed_h(const SparseVec& v) const {
        SparseVec out;
        for (const auto& [fp, fc] : hstar.unit)
            for (const auto& [q, c] : v) sparse_accumulate(out, didx(fp, q), fc * c);
        return sparse_normalize(std::move(out));
    }

    /// Embedding of an H*-element: f (x) 1_H.
    SparseVec embed_f(const SparseVec& f) const {
        SparseVec out;
        for (const auto& [p, c] : f)
            for (const auto& [q, u] : h.unit) sparse_accumulate(out, didx(p, q), c * u);
        return sparse_normalize(std::move(out));
    }

    // Generator images for the bicrossed basis (dim 16).
    SparseVec gen_e(GroupElt g) const { return embed_h(h.basis_vec(hopf_idx(g, 0))); }
    SparseVec gen_t() const {
        SparseVec t;
        for (auto g : GroupElt::all()) t.emplace_back(hopf_idx(g, 1), Scalar::one());
        return embed_h(sparse_normalize(std::move(t)));
    }
    SparseVec gen_zeta(GroupElt g) const { return embed_f(hstar.basis_vec(hopf_idx(g, 0))); }
    SparseVec gen_chi(GroupElt g) const { return embed_f(hstar.basis_vec(hopf_idx(g, 1))); }
};

/// Build D(H) from structure constants. Requires the Hopf axioms to hold and
/// the antipode to be invertible; associativity is spot-checked on all
/// generator triples plus a fixed random sample of basis triples (the full
/// 256^3 sweep is available via `exhaustive`).
inline DoubleAlgebra drinfeld_double(const HopfAlgebra& hopf, bool exhaustive = false) {
    {
        ValidationReport axioms = verify_hopf_axioms(hopf);
        // the S^2 = id report is informational; the axioms proper must hold
        bool ok = true;
        std::string what;
        for (const auto& c : axioms.checks)
            if (!c.passed && c.check != "antipode squares to identity") {
                ok = false;
                what += " [" + c.check + "]";
            }
        if (!ok) throw ConstructionError("drinfeld_double: input fails Hopf axioms:" + what);
    }

    DoubleAlgebra d;
    d.h = hopf;
    d.hstar = dual_hopf(hopf);
    auto inv = hopf.antipode.inverse();
    if (!inv) throw ConstructionError("drinfeld_double: antipode is not invertible");
    d.s_inv = *inv;

    const std::size_t n = hopf.dim;
    d.dim = n * n;
    d.basis.resize(d.dim);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            d.basis[p * n + q] = d.hstar.basis[p] + "." + hopf.basis[q];

    std::vector<SparseVec> sinv_vec(n);
    for (std::size_t c = 0; c < n; ++c) sinv_vec[c] = hopf.apply_matrix(d.s_inv, hopf.basis_vec(c));

    // cross[m][f'] = sum of (f_k (x) b_mid) terms from straightening
    // (1 (x) b_m)(f' (x) 1) across the double.
    std::vector<std::vector<SparseVec>> cross(n, std::vector<SparseVec>(n));
    for (std::size_t m = 0; m < n; ++m) {
        for (const auto& t3 : hopf.coproduct2(m)) {
            for (std::size_t k = 0; k < n; ++k) {
                SparseVec w = hopf.multiply(hopf.multiply(sinv_vec[t3.c], hopf.basis_vec(k)),
                                            hopf.basis_vec(t3.a));
                for (const auto& [fp, val] : w)
                    sparse_accumulate(cross[m][fp], d.didx(k, t3.b), t3.coeff * val);
            }
        }
        for (auto& v : cross[m]) v = sparse_normalize(std::move(v));
    }

    d.mult.assign(d.dim, std::vector<SparseVec>(d.dim));
    for (std::size_t fi = 0; fi < n; ++fi)
        for (std::size_t hi = 0; hi < n; ++hi)
            for (std::size_t fj = 0; fj < n; ++fj)
                for (std::size_t hj = 0; hj < n; ++hj) {
                    SparseVec out;
                    for (const auto& [I, gamma] : cross[hi][fj]) {
                        std::size_t k = d.fpart(I), mid = d.hpart(I);
                        for (const auto& [fo, fc] : d.hstar.mult[fi][k])
                            for (const auto& [ho, hc] : hopf.mult[mid][hj])
                                sparse_accumulate(out, d.didx(fo, ho), gamma * fc * hc);
                    }
                    d.mult[d.didx(fi, hi)][d.didx(fj, hj)] = sparse_normalize(std::move(out));
                }

    d.unit = d.embed_h(hopf.unit);

    // associativity spot checks
    auto assoc_ok = [&d](const SparseVec& a, const SparseVec& b, const SparseVec& c) {
        return sparse_equal(d.multiply(d.multiply(a, b), c), d.multiply(a, d.multiply(b, c)));
    };
    if (n == 16) {
        std::vector<SparseVec> gens;
        for (auto g : GroupElt::all()) gens.push_back(d.gen_e(g));
        gens.push_back(d.gen_t());
        for (auto g : GroupElt::all()) gens.push_back(d.gen_zeta(g));
        for (auto g : GroupElt::all()) gens.push_back(d.gen_chi(g));
        for (const auto& a : gens)
            for (const auto& b : gens)
                for (const auto& c : gens)
                    if (!assoc_ok(a, b, c))
                        throw StructuralError("drinfeld_double: generator triple breaks associativity");
    }
    if (exhaustive) {
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t j = 0; j < d.dim; ++j)
                for (std::size_t k = 0; k < d.dim; ++k)
                    if (!assoc_ok({{i, Scalar::one()}}, {{j, Scalar::one()}}, {{k, Scalar::one()}}))
                        throw StructuralError("drinfeld_double: basis triple breaks associativity");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, d.dim - 1);
        for (int s = 0; s < 10000; ++s) {
            SparseVec a{{pick(rng), Scalar::one()}}, b{{pick(rng), Scalar::one()}},
                c{{pick(rng), Scalar::one()}};
            if (!assoc_ok(a, b, c))
                throw StructuralError("drinfeld_double: sampled basis triple breaks associativity");
        }
    }
    return d;
}

/// Check the generators-and-relations presentation of D(H) for a bicrossed
/// product: the H*-side products, the H-side products, the commutation moves
/// of e_g past zeta/chi, and the straightening of t past zeta/chi whose
/// tau-coefficients come from the matched-pair data. Each family is checked
/// over every applicable g, h in G.
inline ValidationReport verify_double_presentation(const DoubleAlgebra& d,
                                                   const MatchedPair& mp) {
    ValidationReport rep;
    rep.subject = "double presentation (" + mp.name + ")";
    const auto G = GroupElt::all();

    auto fam = [&rep](const std::string& name, bool ok, const std::string& wit) {
        rep.add(name, ok, wit);
    };

    {
        bool ok = true;
        std::string wit;
        for (auto a : G)
            for (auto b : G) {
                if (!sparse_equal(d.multiply(d.gen_zeta(a), d.gen_zeta(b)), d.gen_zeta(a.mul(b)))) {
                    ok = false;
                    wit = "zeta(" + a.name() + ")zeta(" + b.name() + ")";
                }
                SparseVec chi = sparse_scale(mp.tau(a, b, 1), d.gen_chi(a.mul(b)));
                if (!sparse_equal(d.multiply(d.gen_chi(a), d.gen_chi(b)), chi)) {
                    ok = false;
                    wit = "chi(" + a.name() + ")chi(" + b.name() + ")";
                }
                if (!d.multiply(d.gen_zeta(a), d.gen_chi(b)).empty() ||
                    !d.multiply(d.gen_chi(b), d.gen_zeta(a)).empty()) {
                    ok = false;
                    wit = "zeta/chi annihilation at (" + a.name() + "," + b.name() + ")";
                }
            }
        fam("dual-side products", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        SparseVec sum;
        for (auto g : G) sum = sparse_add(sum, d.gen_e(g));
        if (!sparse_equal(sum, d.unit)) {
            ok = false;
            wit = "sum of idempotents is not 1";
        }
        for (auto g : G)
            for (auto gp : G) {
                SparseVec want = (g == gp) ? d.gen_e(g) : SparseVec{};
                if (!sparse_equal(d.multiply(d.gen_e(g), d.gen_e(gp)), want)) {
                    ok = false;
                    wit = "e(" + g.name() + ")e(" + gp.name() + ")";
                }
            }
        for (auto g : G)
            if (!sparse_equal(d.multiply(d.gen_t(), d.gen_e(g)),
                              d.multiply(d.gen_e(mp.act(g, 1)), d.gen_t()))) {
                ok = false;
                wit = "t e(" + g.name() + ")";
            }
        SparseVec t2;
        for (auto g : G) t2 = sparse_add(t2, sparse_scale(mp.sigma(g, 1, 1), d.gen_e(g)));
        if (!sparse_equal(d.multiply(d.gen_t(), d.gen_t()), t2)) {
            ok = false;
            wit = "t^2";
        }
        fam("group-side products", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (auto h : G) {
                if (!sparse_equal(d.multiply(d.gen_e(g), d.gen_zeta(h)),
                                  d.multiply(d.gen_zeta(h), d.gen_e(g)))) {
                    ok = false;
                    wit = "e(" + g.name() + ") zeta(" + h.name() + ")";
                }
                GroupElt target = g.mul(h).mul(mp.act(h.inv(), 1));
                if (!sparse_equal(d.multiply(d.gen_e(g), d.gen_chi(h)),
                                  d.multiply(d.gen_chi(h), d.gen_e(target)))) {
                    ok = false;
                    wit = "e(" + g.name() + ") chi(" + h.name() + ")";
                }
            }
        fam("idempotents past dual generators", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto h : G) {
            GroupElt ht = mp.act(h, 1), hit = mp.act(h.inv(), 1);
            SparseVec rhs;
            for (auto g : G) {
                Scalar coeff = mp.tau(ht, g, 1) * mp.tau(ht.mul(g), hit, 1) * mp.tau(ht, hit, 1);
                rhs = sparse_add(rhs, sparse_scale(coeff, d.multiply(d.gen_e(g), d.gen_t())));
            }
            rhs = d.multiply(d.gen_zeta(ht), rhs);
            if (!sparse_equal(d.multiply(d.gen_t(), d.gen_zeta(h)), rhs)) {
                ok = false;
                wit = "t zeta(" + h.name() + ")";
                break;
            }
        }
        fam("t past zeta", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto h : G) {
            GroupElt ht = mp.act(h, 1), hit = mp.act(h.inv(), 1);
            SparseVec rhs;
            for (auto g : G) {
                Scalar coeff = mp.tau(h, g, 1) * mp.tau(h.mul(g), hit, 1) * mp.tau(ht, hit, 1);
                rhs = sparse_add(rhs, sparse_scale(coeff, d.multiply(d.gen_e(g), d.gen_t())));
            }
            rhs = d.multiply(d.gen_chi(ht), rhs);
            if (!sparse_equal(d.multiply(d.gen_t(), d.gen_chi(h)), rhs)) {
                ok = false;
                wit = "t chi(" + h.name() + ")";
                break;
            }
        }
        fam("t past chi", ok, wit);
    }
    {
        // the two canonical embeddings must be algebra maps
        bool ok = true;
        std::string wit;
        const std::size_t n = d.h.dim;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (!sparse_equal(d.multiply(d.embed_h(d.h.basis_vec(i)), d.embed_h(d.h.basis_vec(j))),
                                  d.embed_h(d.h.mult[i][j]))) {
                    ok = false;
                    wit = "H embedding at (" + d.h.basis[i] + "," + d.h.basis[j] + ")";
                }
                if (!sparse_equal(d.multiply(d.embed_f(d.hstar.basis_vec(i)),
                                             d.embed_f(d.hstar.basis_vec(j))),
                                  d.embed_f(d.hstar.mult[i][j]))) {
                    ok = false;
                    wit = "H* embedding at (" + d.hstar.basis[i] + "," + d.hstar.basis[j] + ")";
                }
            }
        fam("embeddings are algebra maps", ok, wit);
    }
    {
        // factorization: (f (x) 1)(1 (x) m) = f (x) m on all basis pairs
        bool ok = true;
        std::string wit;
        const std::size_t n = d.h.dim;
        for (std::size_t p = 0; p < n && ok; ++p)
            for (std::size_t q = 0; q < n && ok; ++q) {
                SparseVec lhs = d.multiply(d.embed_f(d.hstar.basis_vec(p)),
                                           d.embed_h(d.h.basis_vec(q)));
                SparseVec want{{d.didx(p, q), Scalar::one()}};
                if (!sparse_equal(lhs, want)) {
                    ok = false;
                    wit = d.basis[d.didx(p, q)];
                }
            }
        fam("factorization property", ok, wit);
    }
    return rep;
}

} // namespace kashina
