#pragma once

#include <array>
#include <string>
#include <vector>

#include "kashina/errors.hpp"
#include "kashina/group.hpp"
#include "kashina/report.hpp"
#include "kashina/scalar.hpp"

namespace kashina {

/// Matched-pair and cocycle data (G = Z4 x Z2, F = Z2 = <t>) from which a
/// 16-dimensional bicrossed-product Hopf algebra k^G # kF is built.
///
/// Normalization pins everything to four tables: g <| t, g |> t,
/// sigma(g; t, t) and tau(g, g'; t); all values involving the identity of
/// F or G are 1.
struct MatchedPair {
    std::string name;
    std::array<GroupElt, 8> lact{};          // g <| t, indexed by g
    std::array<int, 8> ract{};               // exponent of g |> t (trivial action: all 1)
    std::array<Scalar, 8> sigma_tt{};        // sigma(g; t, t)
    std::array<std::array<Scalar, 8>, 8> tau_t{}; // tau(g, g'; t)

    /// g <| t^e
    GroupElt act(GroupElt g, int e) const { return e ? lact[g.idx()] : g; }
    /// exponent of g |> t^e
    int fact(GroupElt g, int e) const { return e ? ract[g.idx()] : 0; }
    /// sigma(g; t^a, t^b)
    Scalar sigma(GroupElt g, int a, int b) const {
        return (a && b) ? sigma_tt[g.idx()] : Scalar::one();
    }
    /// tau(g, g'; t^e)
    Scalar tau(GroupElt g, GroupElt h, int e) const {
        return e ? tau_t[g.idx()][h.idx()] : Scalar::one();
    }
};

namespace detail {

inline MatchedPair make_pair(const std::string& name, GroupElt x_img, GroupElt y_img,
                             const std::array<Scalar, 8>& sigma) {
    MatchedPair mp;
    mp.name = name;
    for (auto g : GroupElt::all()) {
        GroupElt img = GroupElt::one();
        for (int k = 0; k < g.i; ++k) img = img.mul(x_img);
        for (int k = 0; k < g.j; ++k) img = img.mul(y_img);
        mp.lact[g.idx()] = img;
        mp.ract[g.idx()] = 1; // trivial F-side action throughout the family
    }
    mp.sigma_tt = sigma;
    for (auto g : GroupElt::all())
        for (auto h : GroupElt::all())
            mp.tau_t[g.idx()][h.idx()] = ((g.j * h.i) % 2) ? Scalar(-1) : Scalar(1);
    return mp;
}

inline std::array<Scalar, 8> sigma_table(Scalar (*f)(GroupElt)) {
    std::array<Scalar, 8> s{};
    for (auto g : GroupElt::all()) s[g.idx()] = f(g);
    return s;
}

} // namespace detail

inline std::vector<std::string> preset_names() {
    return {"Ha1", "Hay", "Hby", "Hbx2y", "Hb1", "Hc_sigma0", "Hc_sigma1"};
}

/// The seven semisimple 16-dimensional algebras with group-likes Z4 x Z2,
/// addressable by ASCII name.
inline MatchedPair matched_pair_preset(const std::string& name) {
    using detail::make_pair;
    using detail::sigma_table;
    const GroupElt x{1, 0}, x2y{2, 1}, x3{3, 0}, xy{1, 1}, y{0, 1};

    if (name == "Ha1")
        return make_pair(name, x, x2y, sigma_table(+[](GroupElt) { return Scalar(1); }));
    if (name == "Hay")
        return make_pair(name, x, x2y,
                         sigma_table(+[](GroupElt g) { return Scalar(g.j ? -1 : 1); }));
    if (name == "Hby")
        return make_pair(name, x3, y,
                         sigma_table(+[](GroupElt g) { return Scalar(g.j ? -1 : 1); }));
    if (name == "Hbx2y")
        return make_pair(name, x3, y,
                         sigma_table(+[](GroupElt g) { return Scalar((g.i + g.j) % 2 ? -1 : 1); }));
    if (name == "Hb1")
        return make_pair(name, x3, y, sigma_table(+[](GroupElt) { return Scalar(1); }));
    if (name == "Hc_sigma0")
        return make_pair(name, xy, y,
                         sigma_table(+[](GroupElt g) { return Scalar((g.i * (g.i - 1) / 2) % 2 ? -1 : 1); }));
    if (name == "Hc_sigma1")
        return make_pair(name, xy, y, sigma_table(+[](GroupElt g) {
                             Scalar s((g.i * (g.i - 1) / 2) % 2 ? -1 : 1);
                             return s * Scalar::xi().pow(g.i);
                         }));
    throw ConstructionError("unknown matched-pair preset '" + name + "'");
}

/// Trivial data: both actions trivial, sigma = tau = 1. Builds the group
/// algebra of G x F; useful as a baseline in tests.
inline MatchedPair trivial_matched_pair() {
    MatchedPair mp = detail::make_pair("trivial", GroupElt::x(), GroupElt::y(), {});
    for (auto g : GroupElt::all()) {
        mp.lact[g.idx()] = g;
        mp.sigma_tt[g.idx()] = Scalar(1);
        for (auto h : GroupElt::all()) mp.tau_t[g.idx()][h.idx()] = Scalar(1);
    }
    return mp;
}

/// Exhaustive check of the matched-pair and cocycle identities over all
/// tuples in G^3 x F^3. Each failed identity is reported with the first
/// violating tuple as witness.
inline ValidationReport validate_matched_pair(const MatchedPair& mp) {
    ValidationReport rep;
    rep.subject = mp.name;
    const auto G = GroupElt::all();
    const int F[2] = {0, 1};

    auto record = [&rep](const std::string& name, bool ok, const std::string& wit) {
        rep.add(name, ok, wit);
    };

    // values must be invertible
    {
        bool ok = true;
        std::string wit;
        for (auto g : G) {
            if (mp.sigma_tt[g.idx()].is_zero()) { ok = false; wit = "sigma(" + g.name() + ";t,t)=0"; break; }
            for (auto h : G)
                if (mp.tau_t[g.idx()][h.idx()].is_zero()) { ok = false; wit = "tau(" + g.name() + "," + h.name() + ";t)=0"; break; }
            if (!ok) break;
        }
        record("cocycle values are units", ok, wit);
    }

    // action compatibility: (g g') <| t^e = (g <| t^{e'}) ((g' <| t^e) ...)
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (auto h : G)
                for (int e : F) {
                    GroupElt lhs = mp.act(g.mul(h), e);
                    GroupElt rhs = mp.act(g, mp.fact(h, e)).mul(mp.act(h, e));
                    if (lhs != rhs) {
                        ok = false;
                        wit = "g=" + g.name() + " g'=" + h.name() + " e=" + std::to_string(e);
                        goto done_a1;
                    }
                }
    done_a1:
        record("left action compatibility", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (int a : F)
                for (int b : F) {
                    // g |> t^{a+b} = ((g <| t^b) |> t^a) (g |> t^b)
                    int lhs = mp.fact(g, (a + b) & 1);
                    int rhs = (mp.fact(mp.act(g, b), a) + mp.fact(g, b)) & 1;
                    if (lhs != rhs) {
                        ok = false;
                        wit = "g=" + g.name() + " a=" + std::to_string(a) + " b=" + std::to_string(b);
                        goto done_a2;
                    }
                }
    done_a2:
        record("right action compatibility", ok, wit);
    }

    // sigma 2-cocycle: sigma(g<|t^a; t^b,t^c) sigma(g; t^a, t^{b+c})
    //                = sigma(g; t^a, t^b) sigma(g; t^{a+b}, t^c)
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (int a : F)
                for (int b : F)
                    for (int c : F) {
                        Scalar lhs = mp.sigma(mp.act(g, a), b, c) * mp.sigma(g, a, (b + c) & 1);
                        Scalar rhs = mp.sigma(g, a, b) * mp.sigma(g, (a + b) & 1, c);
                        if (lhs != rhs) {
                            ok = false;
                            wit = "g=" + g.name() + " (a,b,c)=(" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")";
                            goto done_s;
                        }
                    }
    done_s:
        record("sigma cocycle identity", ok, wit);
    }

    // sigma normalization
    {
        bool ok = true;
        std::string wit;
        for (int a : F)
            for (int b : F)
                if (mp.sigma(GroupElt::one(), a, b) != Scalar(1)) { ok = false; wit = "sigma(1;.,.)"; }
        for (auto g : G)
            for (int a : F)
                if (mp.sigma(g, 0, a) != Scalar(1) || mp.sigma(g, a, 0) != Scalar(1)) {
                    ok = false;
                    wit = "sigma(" + g.name() + ";1,.)";
                }
        record("sigma normalization", ok, wit);
    }

    // tau cocycle: tau(gg', g''; t^e) tau(g, g'; g'' |> t^e)
    //            = tau(g', g''; t^e) tau(g, g'g''; t^e)
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (auto h : G)
                for (auto k : G)
                    for (int e : F) {
                        Scalar lhs = mp.tau(g.mul(h), k, e) * mp.tau(g, h, mp.fact(k, e));
                        Scalar rhs = mp.tau(h, k, e) * mp.tau(g, h.mul(k), e);
                        if (lhs != rhs) {
                            ok = false;
                            wit = "(g,g',g'')=(" + g.name() + "," + h.name() + "," + k.name() +
                                  ") e=" + std::to_string(e);
                            goto done_t;
                        }
                    }
    done_t:
        record("tau cocycle identity", ok, wit);
    }

    // tau normalization
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (int e : F)
                if (mp.tau(GroupElt::one(), g, e) != Scalar(1) ||
                    mp.tau(g, GroupElt::one(), e) != Scalar(1)) {
                    ok = false;
                    wit = "tau with identity argument, g=" + g.name();
                }
        for (auto g : G)
            for (auto h : G)
                if (mp.tau(g, h, 0) != Scalar(1)) { ok = false; wit = "tau(.,.;1)"; }
        record("tau normalization", ok, wit);
    }

    // mixed compatibility:
    // sigma(gg'; t^a, t^b) tau(g, g'; t^{a+b})
    //   = sigma(g; g'|>t^a, (g'<|t^a)|>t^b) sigma(g'; t^a, t^b)
    //     tau(g, g'; t^a) tau(g <| (g'|>t^a), g' <| t^a; t^b)
    {
        bool ok = true;
        std::string wit;
        for (auto g : G)
            for (auto h : G)
                for (int a : F)
                    for (int b : F) {
                        Scalar lhs = mp.sigma(g.mul(h), a, b) * mp.tau(g, h, (a + b) & 1);
                        Scalar rhs = mp.sigma(g, mp.fact(h, a), mp.fact(mp.act(h, a), b)) *
                                     mp.sigma(h, a, b) * mp.tau(g, h, a) *
                                     mp.tau(mp.act(g, mp.fact(h, a)), mp.act(h, a), b);
                        if (lhs != rhs) {
                            ok = false;
                            wit = "g=" + g.name() + " g'=" + h.name() + " (a,b)=(" +
                                  std::to_string(a) + "," + std::to_string(b) + ")";
                            goto done_m;
                        }
                    }
    done_m:
        record("mixed sigma/tau compatibility", ok, wit);
    }

    return rep;
}

} // namespace kashina
