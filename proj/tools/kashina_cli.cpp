// Command-line front end: algebra selection, pipeline stages, report
// emission. Exit codes: 0 = all checks pass, 1 = a mathematical check
// failed (witness in the report), 2 = usage or resource error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kashina/json_io.hpp"
#include "kashina/sweep.hpp"

namespace {

using namespace kashina;
namespace fs = std::filesystem;

struct Output {
    std::string format = "text"; // json | csv | text
    std::string out_dir;

    void emit(const std::string& stem, const std::string& ext, const std::string& payload) const {
        if (out_dir.empty()) {
            std::cout << payload;
            if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
            return;
        }
        fs::create_directories(out_dir);
        fs::path p = fs::path(out_dir) / (stem + "." + ext);
        std::ofstream f(p, std::ios::binary);
        f << payload;
        std::cout << "wrote " << p.string() << "\n";
    }
};

MatchedPair load_algebra(const std::string& name_or_path) {
    for (const auto& n : preset_names())
        if (n == name_or_path) return matched_pair_preset(n);
    if (fs::exists(name_or_path)) {
        std::ifstream f(name_or_path);
        json j = json::parse(f);
        return matched_pair_from_json(j);
    }
    throw CLI::ValidationError("--algebra", "unknown preset '" + name_or_path +
                                                "' (and no such file); presets: Ha1, Hay, Hby, "
                                                "Hbx2y, Hb1, Hc_sigma0, Hc_sigma1");
}

void require_hc_sigma0(const std::string& algebra) {
    if (algebra != "Hc_sigma0")
        throw CLI::ValidationError(
            "--algebra", "the module catalog is defined for Hc_sigma0 only (got '" + algebra + "')");
}

std::string report_text(const ValidationReport& r) {
    std::ostringstream os;
    os << r.subject << ": " << (r.all_passed() ? "all checks passed" : "FAILURES") << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.check;
        if (!c.passed) os << "  witness: " << c.witness;
        os << "\n";
    }
    return os.str();
}

std::string scalar_str(const Scalar& s) { return s.str(); }

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << scalar_str(m(i, j)) << (j + 1 < m.cols() ? "," : "");
        os << "]" << (i + 1 < m.rows() ? ";" : "");
    }
    os << "]";
    return os.str();
}

int cmd_hopf_verify(const std::string& algebra, const Output& out) {
    MatchedPair mp = load_algebra(algebra);
    ValidationReport vr = validate_matched_pair(mp);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["algebra"] = mp.name;
    j["data"] = matched_pair_to_json(mp);
    j["matched_pair"] = report_to_json(vr);
    bool ok = vr.all_passed();
    std::string text = report_text(vr);
    if (ok) {
        HopfAlgebra h = build_bicrossed_product(mp);
        ValidationReport ax = verify_hopf_axioms(h);
        ok = ax.all_passed();
        j["hopf_axioms"] = report_to_json(ax);
        j["hopf"] = hopf_to_json(h);
        text += report_text(ax);
    }
    if (out.format == "json")
        out.emit("hopf-verify", "json", j.dump(2) + "\n");
    else
        out.emit("hopf-verify", "txt", text);
    return ok ? 0 : 1;
}

int cmd_double_verify(const std::string& algebra, bool exhaustive, const Output& out) {
    MatchedPair mp = load_algebra(algebra);
    HopfAlgebra h = build_bicrossed_product(mp);
    DoubleAlgebra d = drinfeld_double(h, exhaustive);
    ValidationReport pres = verify_double_presentation(d, mp);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["algebra"] = mp.name;
    j["dim"] = d.dim;
    j["presentation"] = report_to_json(pres);
    json gens = json::object();
    auto put = [&](const std::string& name, const SparseVec& v) {
        json terms = json::array();
        for (const auto& [i, c] : v) terms.push_back(json::array({d.basis[i], scalar_to_json(c)}));
        gens[name] = std::move(terms);
    };
    for (auto g : GroupElt::all()) put("e(" + g.name() + ")", d.gen_e(g));
    put("t", d.gen_t());
    for (auto g : GroupElt::all()) put("zeta(" + g.name() + ")", d.gen_zeta(g));
    for (auto g : GroupElt::all()) put("chi(" + g.name() + ")", d.gen_chi(g));
    j["generators"] = std::move(gens);
    if (out.format == "json")
        out.emit("double-verify", "json", j.dump(2) + "\n");
    else
        out.emit("double-verify", "txt", report_text(pres));
    return pres.all_passed() ? 0 : 1;
}

int cmd_modules_list(const Output& out) {
    auto cat = catalog();
    std::sort(cat.begin(), cat.end(),
              [](const Representation& a, const Representation& b) { return a.label < b.label; });
    if (out.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["count"] = cat.size();
        json entries = json::array();
        for (const auto& r : cat) entries.push_back(representation_to_json(r));
        j["modules"] = std::move(entries);
        out.emit("modules", "json", j.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string s = "label,family,dim,mu,index\n";
        for (const auto& r : cat)
            s += r.label + "," + family_name(r.family) + "," + std::to_string(r.dim) + "," +
                 r.mu.name() + "," + std::to_string(r.index) + "\n";
        out.emit("modules", "csv", s);
    } else {
        std::ostringstream os;
        for (const auto& r : cat) {
            os << r.label << "  dim " << r.dim << "  t=" << matrix_str(r.t);
            if (r.chi_zero)
                os << "  zeta_x=" << matrix_str(r.zeta_x) << "  zeta_y=" << matrix_str(r.zeta_y);
            else
                os << "  chi_x=" << matrix_str(r.chi_x) << "  chi_y=" << matrix_str(r.chi_y);
            os << "\n";
        }
        out.emit("modules", "txt", os.str());
    }
    return 0;
}

int cmd_modules_verify(const Output& out) {
    MatchedPair mp = matched_pair_preset("Hc_sigma0");
    HopfAlgebra h = build_bicrossed_product(mp);
    DoubleAlgebra d = drinfeld_double(h);
    auto cat = catalog();
    auto reports = verify_modules(cat, d);
    ValidationReport agg;
    agg.subject = "module verification";
    for (std::size_t k = 0; k < cat.size(); ++k) {
        bool ok = reports[k].all_passed();
        std::string wit;
        for (const auto& c : reports[k].checks)
            if (!c.passed) wit += c.check + " @ " + c.witness + "; ";
        agg.add(cat[k].label, ok, wit);
    }
    ValidationReport simple;
    simple.subject = "simplicity";
    for (const auto& r : cat) simple.add(r.label, is_simple(r), "images do not span");
    ValidationReport comp = completeness_check(cat, d);

    bool ok = agg.all_passed() && simple.all_passed() && comp.all_passed();
    if (out.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["modules"] = report_to_json(agg);
        j["simplicity"] = report_to_json(simple);
        j["completeness"] = report_to_json(comp);
        out.emit("modules-verify", "json", j.dump(2) + "\n");
    } else {
        out.emit("modules-verify", "txt", report_text(agg) + report_text(simple) + report_text(comp));
    }
    return ok ? 0 : 1;
}

int cmd_braidings(const Output& out) {
    MatchedPair mp = matched_pair_preset("Hc_sigma0");
    HopfAlgebra h = build_bicrossed_product(mp);
    auto cat = catalog();
    std::sort(cat.begin(), cat.end(),
              [](const Representation& a, const Representation& b) { return a.label < b.label; });
    json entries = json::array();
    std::ostringstream os;
    for (const auto& r : cat) {
        YDModule lr = coaction_from_action(r, h);
        YDModule ll = to_left_left(lr, h);
        Braiding b = braiding(ll);
        auto q = diagonal_type(b);
        auto rpm = antidiagonal_pattern(b);
        json e;
        e["label"] = r.label;
        e["dim"] = r.dim;
        e["side"] = "left-left";
        e["coaction"] = coaction_to_json(ll, h);
        e["braiding"] = matrix_to_json(b.c);
        e["diagonal"] = q.has_value();
        if (q) e["q"] = matrix_to_json(*q);
        if (!q && rpm)
            e["rpm"] = json::array({scalar_to_json((*rpm)[0]), scalar_to_json((*rpm)[1]),
                                    scalar_to_json((*rpm)[2])});
        entries.push_back(std::move(e));

        os << r.label;
        for (std::size_t pad = r.label.size(); pad < 20; ++pad) os << ' ';
        os << " dim " << r.dim << "  left-left  ";
        if (q)
            os << "diagonal  q=" << matrix_str(*q);
        else if (rpm)
            os << "antidiag  (r,p,m)=(" << (*rpm)[0].str() << "," << (*rpm)[1].str() << ","
               << (*rpm)[2].str() << ")";
        else
            os << "general   c=" << matrix_str(b.c);
        os << "\n";
        for (std::size_t k = 0; k < ll.dimV; ++k) {
            os << "    rho_l(v" << k << ") =";
            bool first = true;
            for (const auto& term : ll.coaction[k]) {
                std::string cs = term.coeff.str();
                bool neg = cs[0] == '-';
                if (neg) cs.erase(0, 1);
                if (cs == "1") cs.clear();
                else cs += "*";
                os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + ")) << cs
                   << h.basis[term.hidx] << "(x)v" << term.vec;
                first = false;
            }
            os << "\n";
        }
    }
    if (out.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["braidings"] = std::move(entries);
        out.emit("braidings", "json", j.dump(2) + "\n");
    } else {
        out.emit("braidings", "txt", os.str());
    }
    return 0;
}

int cmd_nichols(const std::string& label, bool all, int nmax, const Output& out) {
    MatchedPair mp = matched_pair_preset("Hc_sigma0");
    HopfAlgebra h = build_bicrossed_product(mp);
    auto cat = catalog();
    std::vector<const Representation*> todo;
    if (all) {
        for (const auto& r : cat) todo.push_back(&r);
        std::sort(todo.begin(), todo.end(),
                  [](const Representation* a, const Representation* b) { return a->label < b->label; });
    } else {
        todo.push_back(&catalog_entry(cat, label));
    }

    json reports = json::array();
    std::ostringstream os;
    std::string csv;
    std::map<std::string, GradedDimReport> cache;
    std::map<std::string, int> totals;
    for (const Representation* r : todo) {
        YDModule ll = to_left_left(coaction_from_action(*r, h), h);
        Braiding b = braiding(ll);
        auto it = cache.find(b.c.key());
        if (it == cache.end()) it = cache.emplace(b.c.key(), graded_dims(b, nmax)).first;
        GradedDimReport g = it->second;
        g.braiding_id = r->label;
        reports.push_back(graded_report_to_json(g));
        os << r->label;
        for (std::size_t pad = r->label.size(); pad < 20; ++pad) os << ' ';
        os << " ranks";
        for (auto rk : g.ranks) os << " " << rk;
        if (g.terminated)
            os << "  -> total " << *g.total();
        else
            os << "  -> cutoff-exceeded at n_max=" << nmax;
        os << "\n";
        csv = graded_report_to_csv(g);
        totals[g.terminated ? "total " + std::to_string(*g.total()) : "cutoff"]++;
    }
    if (all) {
        os << "\nsummary:";
        for (const auto& [k, v] : totals) os << "  " << k << " x" << v;
        os << "\n";
    }
    if (out.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["reports"] = std::move(reports);
        out.emit("nichols", "json", j.dump(2) + "\n");
    } else if (out.format == "csv" && !all) {
        out.emit("nichols", "csv", csv);
    } else {
        out.emit("nichols", "txt", os.str());
    }
    return 0;
}

json sweep_to_json(const SweepResult& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["reports"] = json::object();
    j["reports"]["matched_pair"] = report_to_json(s.matched_pair);
    j["reports"]["hopf_axioms"] = report_to_json(s.hopf);
    j["reports"]["double_presentation"] = report_to_json(s.presentation);
    j["reports"]["modules"] = report_to_json(s.modules);
    j["reports"]["simplicity"] = report_to_json(s.simplicity);
    j["reports"]["completeness"] = report_to_json(s.completeness);
    j["reports"]["braidings"] = report_to_json(s.braidings);
    json entries = json::array();
    for (const auto& e : s.entries) {
        json row;
        row["label"] = e.label;
        row["dim"] = e.dim;
        row["diagonal"] = e.diagonal;
        if (e.q) row["q"] = matrix_to_json(*e.q);
        if (e.rpm)
            row["rpm"] = json::array({scalar_to_json((*e.rpm)[0]), scalar_to_json((*e.rpm)[1]),
                                      scalar_to_json((*e.rpm)[2])});
        row["graded"] = graded_report_to_json(e.gd);
        if (!e.eigen.empty()) {
            json w = json::array();
            for (const auto& [n, k] : e.eigen)
                w.push_back(json{{"n", n}, {"eigenvalue", scalar_to_json(k)}});
            row["alternating_word_witness"] = std::move(w);
        }
        if (!e.note.empty()) row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    std::map<std::string, int> counts;
    for (const auto& e : s.entries) {
        std::string key = e.gd.terminated ? "total_" + std::to_string(*e.gd.total()) : "cutoff";
        counts[key]++;
    }
    j["summary"] = json::object();
    for (const auto& [k, v] : counts) j["summary"][k] = v;
    j["all_passed"] = s.all_passed();
    return j;
}

std::string sweep_to_text(const SweepResult& s) {
    std::ostringstream os;
    for (const ValidationReport* r : {&s.matched_pair, &s.hopf, &s.presentation, &s.modules,
                                      &s.simplicity, &s.completeness, &s.braidings})
        os << r->subject << ": "
           << (r->all_passed() ? "pass"
                               : "FAIL (" + std::to_string(r->failed_count()) + " checks)")
           << "\n";
    os << "\n";
    for (const auto& e : s.entries) {
        os << e.label;
        for (std::size_t pad = e.label.size(); pad < 20; ++pad) os << ' ';
        os << " dim " << e.dim << "  ";
        if (e.q)
            os << "q=" << matrix_str(*e.q);
        else if (e.rpm)
            os << "(r,p,m)=(" << (*e.rpm)[0].str() << "," << (*e.rpm)[1].str() << ","
               << (*e.rpm)[2].str() << ")";
        os << "  ranks";
        for (auto rk : e.gd.ranks) os << " " << rk;
        if (e.gd.terminated)
            os << "  total " << *e.gd.total();
        else
            os << "  cutoff";
        if (!e.eigen.empty()) {
            os << "  witness";
            for (const auto& [n, k] : e.eigen) os << " (" << n << ":" << k.str() << ")";
        }
        if (!e.note.empty()) os << "  note: " << e.note;
        os << "\n";
    }
    std::map<std::string, int> counts;
    for (const auto& e : s.entries)
        counts[e.gd.terminated ? "total " + std::to_string(*e.gd.total()) : "cutoff"]++;
    os << "\nsummary:";
    for (const auto& [k, v] : counts) os << "  " << k << " x" << v;
    os << "\n";
    return os.str();
}

std::string sweep_to_csv(const SweepResult& s) {
    std::string out = "label,dim,diagonal,braiding,ranks,total,note\n";
    for (const auto& e : s.entries) {
        std::string braid;
        if (e.q)
            braid = matrix_str(*e.q);
        else if (e.rpm)
            braid = "(" + (*e.rpm)[0].str() + ";" + (*e.rpm)[1].str() + ";" + (*e.rpm)[2].str() + ")";
        std::string ranks;
        for (auto r : e.gd.ranks) ranks += (ranks.empty() ? "" : " ") + std::to_string(r);
        out += e.label + "," + std::to_string(e.dim) + "," + (e.diagonal ? "yes" : "no") + "," +
               braid + "," + ranks + "," +
               (e.gd.terminated ? std::to_string(*e.gd.total()) : "cutoff") + "," + e.note + "\n";
    }
    return out;
}

int cmd_sweep(const std::string& algebra, int nmax, const Output& out) {
    require_hc_sigma0(algebra);
    SweepResult s = run_sweep(nmax);
    if (out.format == "json")
        out.emit("sweep", "json", sweep_to_json(s).dump(2) + "\n");
    else if (out.format == "csv")
        out.emit("sweep", "csv", sweep_to_csv(s));
    else
        out.emit("sweep", "txt", sweep_to_text(s));
    return s.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the Kashina bicrossed-product Hopf algebras: Drinfel'd "
                 "double, simple module catalog, braidings, Nichols graded dimensions"};
    app.require_subcommand(1);

    std::string algebra = "Hc_sigma0";
    Output out;
    int nmax = 8;
    bool exhaustive = false;
    std::string module_label;
    bool all_modules = false;

    auto add_common = [&](CLI::App* c, bool with_algebra = true) {
        if (with_algebra) c->add_option("--algebra", algebra, "preset name or path to matched-pair JSON");
        c->add_option("--format", out.format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        c->add_option("--out", out.out_dir, "directory to write reports into");
    };

    CLI::App* hopf = app.add_subcommand("hopf-verify", "validate matched-pair data and the Hopf axioms");
    add_common(hopf);
    CLI::App* dbl = app.add_subcommand("double-verify", "build D(H) and check its presentation");
    add_common(dbl);
    dbl->add_flag("--exhaustive", exhaustive, "check associativity on all basis triples");
    CLI::App* mlist = app.add_subcommand("modules-list", "emit the catalog of 88 simple modules");
    add_common(mlist, false);
    CLI::App* mverify = app.add_subcommand("modules-verify", "verify the catalog against D(H)");
    add_common(mverify, false);
    CLI::App* braid = app.add_subcommand("braidings", "coactions and self-braidings of the catalog");
    add_common(braid, false);
    CLI::App* nich = app.add_subcommand("nichols", "Nichols graded dimensions by symmetrizer rank");
    add_common(nich, false);
    nich->add_option("--module", module_label, "catalog label, e.g. W_x_1_plus_plus");
    nich->add_flag("--all", all_modules, "sweep the whole catalog");
    nich->add_option("--nmax", nmax, "degree cutoff (default 8)");
    CLI::App* sweep = app.add_subcommand("sweep", "full pipeline and summary table");
    add_common(sweep);
    sweep->add_option("--nmax", nmax, "degree cutoff (default 8)");

    try {
        app.parse(argc, argv);
        if (hopf->parsed()) return cmd_hopf_verify(algebra, out);
        if (dbl->parsed()) return cmd_double_verify(algebra, exhaustive, out);
        if (mlist->parsed()) return cmd_modules_list(out);
        if (mverify->parsed()) return cmd_modules_verify(out);
        if (braid->parsed()) return cmd_braidings(out);
        if (nich->parsed()) {
            if (!all_modules && module_label.empty())
                throw CLI::ValidationError("--module", "give --module LABEL or --all");
            return cmd_nichols(module_label, all_modules, nmax, out);
        }
        if (sweep->parsed()) return cmd_sweep(algebra, nmax, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const kashina::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const kashina::ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
