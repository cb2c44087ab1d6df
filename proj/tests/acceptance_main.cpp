// Acceptance suite: end-to-end checks of the full pipeline, one line per
// criterion. All arithmetic is exact, so every comparison is equality.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kashina/json_io.hpp"
#include "kashina/sweep.hpp"

using namespace kashina;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int n, bool ok, const std::string& desc, double secs) {
    std::printf("%s  criterion %d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", n, desc.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

struct Timer {
    clock_type::time_point t0 = clock_type::now();
    double secs() const { return std::chrono::duration<double>(clock_type::now() - t0).count(); }
};

struct EntryData {
    const Representation* rep;
    Braiding braid;
    std::optional<Matrix> q;
    std::optional<std::array<Scalar, 3>> rpm;
    GradedDimReport gd;
};

} // namespace

int main() {
    // ---------------------------------------------------------------- 1
    {
        Timer timer;
        bool ok = true;
        for (const auto& name : preset_names()) {
            MatchedPair mp = matched_pair_preset(name);
            if (!validate_matched_pair(mp).all_passed()) ok = false;
            HopfAlgebra h = build_bicrossed_product(mp);
            if (!verify_hopf_axioms(h).all_passed()) ok = false;
        }
        // mutation: sigma substituted by 1 must fail with a witness
        {
            MatchedPair bad = matched_pair_preset("Hc_sigma0");
            for (auto& s : bad.sigma_tt) s = Scalar(1);
            ValidationReport r = validate_matched_pair(bad);
            const CheckResult* mixed = r.find("mixed sigma/tau compatibility");
            if (r.all_passed() || !mixed || mixed->passed || mixed->witness.empty()) ok = false;
        }
        // mutation: identity antipode must fail the antipode axiom with a witness
        {
            HopfAlgebra bad = build_bicrossed_product(matched_pair_preset("Hc_sigma0"));
            bad.antipode = Matrix::identity(16);
            const CheckResult* c = verify_hopf_axioms(bad).find("antipode axiom");
            if (!c || c->passed || c->witness.empty()) ok = false;
        }
        double secs = timer.secs();
        if (secs >= 30.0) ok = false;
        line(1, ok, "matched-pair + Hopf axiom suite passes for all 7 algebras; mutations fail", secs);
    }

    MatchedPair mp = matched_pair_preset("Hc_sigma0");
    HopfAlgebra h = build_bicrossed_product(mp);

    // ---------------------------------------------------------------- 2
    DoubleAlgebra d;
    {
        Timer timer;
        d = drinfeld_double(h);
        ValidationReport pres = verify_double_presentation(d, mp);
        bool ok = pres.all_passed() && d.dim == 256;
        double secs = timer.secs();
        if (secs >= 60.0) ok = false;
        line(2, ok, "D(H_{c:sigma0}) satisfies every presentation relation family over all g,h", secs);
    }

    // ---------------------------------------------------------------- 3
    std::vector<Representation> cat = catalog();
    {
        Timer timer;
        bool ok = cat.size() == 88;
        auto reports = verify_modules(cat, d);
        for (const auto& r : reports)
            if (!r.all_passed()) ok = false;
        for (const auto& r : cat)
            if (!is_simple(r)) ok = false;
        if (!completeness_check(cat, d).all_passed()) ok = false;
        std::size_t sum = 0;
        for (const auto& r : cat) sum += r.dim * r.dim;
        if (sum != 256) ok = false;
        double secs = timer.secs();
        if (secs >= 120.0) ok = false;
        line(3, ok, "all 88 catalog entries verify, are simple, have distinct characters; sum dim^2 = 256", secs);
    }

    // ---------------------------------------------------------------- 4
    std::vector<EntryData> entries;
    {
        Timer timer;
        bool ok = true;
        for (const auto& rep : cat) {
            EntryData e;
            e.rep = &rep;
            YDModule ll = to_left_left(coaction_from_action(rep, h), h);
            e.braid = braiding(ll);
            if (!e.braid.satisfies_braid_equation() || !e.braid.invertible()) ok = false;
            e.q = diagonal_type(e.braid);
            if (!e.q) e.rpm = antidiagonal_pattern(e.braid);
            switch (rep.family) {
                case Family::V:
                    if (!e.q || !((*e.q)(0, 0) == Scalar(1) || (*e.q)(0, 0) == Scalar(-1))) ok = false;
                    break;
                case Family::W:
                    if (!e.q || !braiding_family_s1(*e.q)) ok = false;
                    break;
                case Family::X:
                    if (!e.q || !braiding_family_s2(*e.q)) ok = false;
                    break;
                case Family::Z:
                    if (!e.q || !braiding_family_s4(*e.q)) ok = false;
                    break;
                case Family::Y:
                    if (e.q || !e.rpm || !braiding_family_s3(*e.rpm)) ok = false;
                    break;
            }
            entries.push_back(std::move(e));
        }
        line(4, ok, "all self-braidings solve the braid equation, are invertible, and lie in the published sign families", timer.secs());
    }

    // ---------------------------------------------------------------- 5
    {
        Timer timer;
        bool ok = true;
        std::map<std::string, GradedDimReport> cache;
        for (auto& e : entries) {
            std::string key = e.braid.c.key();
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, graded_dims(e.braid, 8)).first;
            e.gd = it->second;
        }

        auto expect_total = [&ok](const EntryData& e, std::size_t want) {
            if (!e.gd.terminated || *e.gd.total() != want) ok = false;
        };
        auto expect_cutoff = [&ok](const EntryData& e) {
            if (e.gd.terminated) ok = false;
        };
        auto exponent = [](const Matrix& q) { return xi_exponent(q(0, 0)); };

        int s0_minus = 0, s0_plus = 0, w_odd = 0, w_two = 0, w_zero = 0;
        int x_minus = 0, x_plus = 0;
        int y_eight = 0, y_sixteen = 0, y_inf = 0;
        int z_odd = 0, z_two = 0, z_zero = 0;
        for (const auto& e : entries) {
            switch (e.rep->family) {
                case Family::V: {
                    if ((*e.q)(0, 0) == Scalar(-1)) { ++s0_minus; expect_total(e, 2); }
                    else { ++s0_plus; expect_cutoff(e); }
                    break;
                }
                case Family::W: {
                    int exp = *exponent(*e.q);
                    if (exp % 2 == 1) { ++w_odd; expect_total(e, 16); }
                    else if (exp == 2) { ++w_two; expect_total(e, 8); }
                    else { ++w_zero; expect_cutoff(e); }
                    break;
                }
                case Family::X: {
                    if ((*e.q)(0, 0) == Scalar(-1)) { ++x_minus; expect_total(e, 4); }
                    else { ++x_plus; expect_cutoff(e); }
                    break;
                }
                case Family::Y: {
                    const Scalar &r = (*e.rpm)[0], &p = (*e.rpm)[1], &m = (*e.rpm)[2];
                    Scalar rm = r * m;
                    if (p == Scalar(-1) && rm == Scalar(-1)) { ++y_eight; expect_total(e, 8); }
                    else if (rm == Scalar(1) && (p == Scalar::xi() || p == -Scalar::xi())) {
                        ++y_sixteen;
                        expect_total(e, 16);
                    } else if (p == Scalar(1)) { ++y_inf; expect_cutoff(e); }
                    else ok = false;
                    break;
                }
                case Family::Z: {
                    int exp = *exponent(*e.q);
                    if (exp % 2 == 1) { ++z_odd; expect_total(e, 16); }
                    else if (exp == 2) { ++z_two; expect_total(e, 8); }
                    else { ++z_zero; expect_cutoff(e); }
                    break;
                }
            }
            if (e.gd.terminated) {
                std::size_t tot = *e.gd.total();
                if (tot != 2 && tot != 4 && tot != 8 && tot != 16) ok = false;
            }
        }
        if (s0_minus != 16 || s0_plus != 16) ok = false;
        if (w_odd != 8 || w_two != 4 || w_zero != 4) ok = false;
        if (x_minus != 2 || x_plus != 6) ok = false;
        if (y_eight != 4 || y_sixteen != 8 || y_inf != 4) ok = false;
        if (z_odd != 8 || z_two != 4 || z_zero != 4) ok = false;

        double secs = timer.secs();
        if (secs >= 300.0) ok = false;
        line(5, ok,
             "graded-dimension sweep: totals 2 (16 V entries), 16/8 (W), 4 (X with q=-1), "
             "8/16 (Y), 16/8 (Z); all finite totals in {2,4,8,16}",
             secs);
    }

    // ---------------------------------------------------------------- 6
    {
        Timer timer;
        bool ok = true;
        for (const auto& e : entries) {
            if (e.gd.terminated) continue;
            // every cutoff row must have strictly positive ranks up to n_max
            if (e.gd.ranks.size() != 8) ok = false;
            for (auto r : e.gd.ranks)
                if (r == 0) ok = false;
            // the antidiagonal p = 1 rows carry the eigenvector witness
            if (e.rpm && (*e.rpm)[1] == Scalar(1)) {
                for (std::size_t n = 1; n <= 6; ++n) {
                    auto k = eigen_witness(e.braid, n);
                    if (!k || k->is_zero()) ok = false;
                }
            }
        }
        line(6, ok, "cutoff rows keep strictly positive ranks at n_max=8; p=1 rows have nonzero alternating-word eigenvalues up to n=6", timer.secs());
    }

    // ---------------------------------------------------------------- 7
    {
        Timer timer;
        bool ok = true;
        bool discrepancy_reported = false;
        for (const auto& e : entries) {
            switch (e.rep->family) {
                case Family::V:
                    if ((*e.q)(0, 0) == Scalar(-1) &&
                        !relation_in_kernel(e.braid, {{{0, 0}, Scalar(1)}}, 2))
                        ok = false;
                    break;
                case Family::W:
                case Family::Z: {
                    int exp = *xi_exponent((*e.q)(0, 0));
                    if (exp % 2 == 1) {
                        TensorElement comm = {{{0, 1}, Scalar(1)}, {{1, 0}, -(*e.q)(0, 1)}};
                        if (!relation_in_kernel(e.braid, comm, 2)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{0, 0, 0, 0}, Scalar(1)}}, 4)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{1, 1, 1, 1}, Scalar(1)}}, 4)) ok = false;
                    }
                    if (e.rep->family == Family::Z && exp == 2) {
                        // stated quadratic commutator is NOT in the kernel: must be
                        // reported, with the totals coming from the rank computation
                        TensorElement comm = {{{0, 1}, Scalar(1)}, {{1, 0}, Scalar(-1)}};
                        if (relation_in_kernel(e.braid, comm, 2)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{0, 0}, Scalar(1)}}, 2)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{1, 1}, Scalar(1)}}, 2)) ok = false;
                        if (!e.gd.terminated || *e.gd.total() != 8) ok = false;
                        discrepancy_reported = true;
                    }
                    break;
                }
                case Family::Y: {
                    const Scalar &r = (*e.rpm)[0], &p = (*e.rpm)[1], &m = (*e.rpm)[2];
                    if (p == Scalar(-1) && r * m == Scalar(-1)) {
                        if (!relation_in_kernel(e.braid, {{{0, 1}, Scalar(1)}}, 2)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{1, 0}, Scalar(1)}}, 2)) ok = false;
                        if (!relation_in_kernel(
                                e.braid,
                                {{{0, 0, 0, 0}, Scalar(1)}, {{1, 1, 1, 1}, Scalar(1)}}, 4))
                            ok = false;
                    }
                    if (r * m == Scalar(1)) {
                        if (!relation_in_kernel(e.braid, {{{1, 1}, Scalar(1)}, {{0, 0}, -m}}, 2))
                            ok = false;
                        if (!relation_in_kernel(e.braid, {{{0, 1, 0, 1}, Scalar(1)}}, 4)) ok = false;
                        if (!relation_in_kernel(e.braid, {{{1, 0, 1, 0}, Scalar(1)}}, 4)) ok = false;
                    }
                    break;
                }
                case Family::X:
                    break;
            }
        }
        // the sweep-level report must carry the note as well
        {
            SweepResult s = run_sweep(3);
            bool note_found = false;
            for (const auto& row : s.entries)
                if (!row.note.empty()) note_found = true;
            if (!note_found) ok = false;
        }
        if (!discrepancy_reported) ok = false;
        line(7, ok, "presentation relations lie in the computed kernels; the stated-relation discrepancy of the diagonal A2-type class is reported", timer.secs());
    }

    // ---------------------------------------------------------------- 8
    {
        Timer timer;
        bool ok = true;
        int picked = 0;
        for (const std::string label : {"W_x_1_plus_plus", "Y_x_1", "X_1_0_plus"}) {
            for (const auto& e : entries)
                if (e.rep->label == label) {
                    ++picked;
                    SymmetrizerTower t(e.braid);
                    for (std::size_t n = 1; n <= 5; ++n)
                        if (!(t.step(n) == symmetrizer_step_sum_form(e.braid, n))) ok = false;
                }
        }
        if (picked != 3) ok = false;

        {
            std::mt19937 rng(31);
            static const Scalar pool[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar::xi(), Scalar(2)};
            std::uniform_int_distribution<std::size_t> pick(0, 4);
            const Braiding& b = entries[40].braid.dimV == 2 ? entries[40].braid : entries[50].braid;
            int done = 0;
            while (done < 5) {
                Matrix g(2, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) g(i, j) = pool[pick(rng)];
                auto ginv = g.inverse();
                if (!ginv) continue;
                ++done;
                Braiding conj;
                conj.dimV = 2;
                conj.c = kron(g, g) * b.c * kron(*ginv, *ginv);
                SymmetrizerTower t1(b), t2(conj);
                for (std::size_t n = 1; n <= 4; ++n)
                    if (t1.omega(n).rank() != t2.omega(n).rank()) ok = false;
            }
        }
        {
            std::mt19937 rng(37);
            static const Scalar pool[] = {Scalar(0),  Scalar(1), Scalar(-1),
                                          Scalar::xi(), Scalar::rational(1, 2)};
            std::uniform_int_distribution<std::size_t> pick(0, 4);
            for (int it = 0; it < 20; ++it) {
                auto rnd = [&](std::size_t r, std::size_t c) {
                    Matrix m(r, c);
                    for (std::size_t i = 0; i < r; ++i)
                        for (std::size_t j = 0; j < c; ++j) m(i, j) = pool[pick(rng)];
                    return m;
                };
                Matrix a = rnd(2, 3), c = rnd(3, 2), b = rnd(3, 2), dd = rnd(2, 3);
                if (!(kron(a, b) * kron(c, dd) == kron(a * c, b * dd))) ok = false;
            }
        }
        line(8, ok, "property suites: recursion vs explicit sum (n<=5), rank invariance under g(x)g conjugation, Kronecker mixed product", timer.secs());
    }

    std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                        : "acceptance: FAILURES present");
    return g_failures == 0 ? 0 : 1;
}
