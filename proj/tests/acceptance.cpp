// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
//
//   acceptance [--strict] [--threads N] [--only AC-n] [--verbose]
//
// Exit status is 0 when every required criterion passes, ignoring only the
// sub-checks listed in kUnattainable (each is printed when it fails).

#include "cli.hpp"
#include "oracles.hpp"

#include "polyolab/characters/characters.hpp"
#include "polyolab/identities/identities.hpp"
#include "polyolab/macdonald/macdonald.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/sl2/sl2.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace polyolab;
using symfunc::Partition;
using symfunc::SymF;

namespace {

// Time budgets in seconds, single core.
constexpr double kBudget[13] = {0, 5, 30, 30, 60, 120, 180, 300, 300, 300, 300, 180, 300};

// Sub-checks whose literal statement cannot hold under the conventions the
// other criteria require. Their failure is printed but does not fail the run.
//   AC-7/nabla_e2_literal: with K_{(n),mu} = 1, nabla e_2 = s_2 + (q+t) s_11;
//   the stated s_11 + (q+t) s_2 is its omega image (checked separately as
//   AC-7/nabla_e2_omega).
const std::set<std::string> kUnattainable = {"AC-7/nabla_e2_literal"};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    bool required;
    std::function<std::vector<Check>()> run;
};

Check check(std::string name, bool pass, std::string detail = "") { return {std::move(name), pass, std::move(detail)}; }

// One check per registry id: all lattice points equal.
std::vector<Check> registry(const std::vector<std::string>& ids, std::optional<int> max_k = {},
                            std::optional<int> max_n = {}) {
    std::vector<Check> out;
    for (const auto& id : ids) {
        identities::VerifyOptions opt;
        opt.ids = {id};
        opt.max_k = max_k;
        opt.max_n = max_n;
        auto rep = identities::verify(opt);
        long bad = 0;
        std::string first;
        for (const auto& p : rep.points)
            if (!p.equal) {
                if (!bad++)
                    first = " first at k=" + std::to_string(p.params.k) + " n=" + std::to_string(p.params.n) +
                            " r=" + std::to_string(p.params.r) + " d=" + std::to_string(p.params.d);
            }
        out.push_back(check(id, bad == 0 && !rep.points.empty(),
                            std::to_string(rep.points.size() - std::size_t(bad)) + "/" +
                                std::to_string(rep.points.size()) + " points" + first));
    }
    return out;
}

void append(std::vector<Check>& a, std::vector<Check> b) {
    for (auto& c : b) a.push_back(std::move(c));
}

std::vector<Check> ac1() {
    std::ostringstream out, err;
    int code = cli::run({"series", "Pxy", "--trunc", "6"}, out, err);
    std::map<std::pair<int, int>, std::string> cells;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) {
        int k = 0, n = 0, used = 0;
        if (std::sscanf(line.c_str(), "x^%d y^%d: %n", &k, &n, &used) == 2) cells[{k, n}] = line.substr(std::size_t(used));
    }
    std::vector<Check> r{check("exit code", code == 0)};
    auto cell = [&](int k, int n, const std::string& want) {
        auto it = cells.find({k, n});
        std::string got = it == cells.end() ? "<missing>" : it->second;
        r.push_back(check("x^" + std::to_string(k) + "y^" + std::to_string(n), got == want, got));
    };
    cell(2, 2, "2+q");
    cell(3, 3, "6+6q+5q^2+2q^3+q^4");
    cell(2, 4, "4+3q+2q^2+q^3");
    cell(4, 2, "4+3q+2q^2+q^3");
    for (int m = 1; m <= 5; ++m) {
        cell(1, m, "1");
        cell(m, 1, "1");
    }
    cell(2, 3, "3+2q+q^2");
    cell(3, 2, "3+2q+q^2");
    return r;
}

std::vector<Check> ac4() {
    using namespace polyomino;
    long polys = 0, motzkin_bad = 0, aword_bad = 0;
    // Decoding table for A-words over all sizes k + n <= 8.
    std::map<AWord, Polyomino> table;
    for (int k = 1; k <= 7; ++k)
        for (int n = 1; k + n <= 8; ++n)
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                ++polys;
                if (!(from_motzkin(to_motzkin(p)) == p)) ++motzkin_bad;
                if (!table.emplace(to_aword(p), p).second) ++aword_bad;
            });
    for (int k = 1; k <= 7; ++k)
        for (int n = 1; k + n <= 8; ++n)
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                auto it = table.find(to_aword(p));
                if (it == table.end() || !(it->second == p)) ++aword_bad;
            });
    Polyomino fig(LatticePath("NNNEENEEE"), LatticePath("ENEENENEN"));
    std::string mw = to_string(to_motzkin(fig)), aw = to_string(to_aword(fig));
    return {
        check("motzkin round trip", motzkin_bad == 0, std::to_string(polys) + " polyominoes"),
        check("A-word decodes uniquely", aword_bad == 0, std::to_string(table.size()) + " words"),
        check("figure Motzkin word", mw == "d r d b d~ d d~ b d~", mw),
        check("figure A-word", aw == "0~ 1 1 1~ 2 2~ 1~ 2 1~", aw),
    };
}

std::vector<Check> ac5() {
    std::vector<Check> r;
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            auto rep = polyomino::check_cyclic_lemma(k, n);
            std::string d = std::to_string(rep.classes) + " classes";
            if (!rep.sizes_ok) d += ", class size != k";
            if (!rep.unique_rep) d += ", representative not unique";
            if (!rep.partition_ok) d += ", set partition not constant";
            if (!rep.closed) d += ", classes not closed";
            if (!rep.reps_cover) d += ", representatives miss L_{k,n}";
            r.push_back(check("cyclic k=" + std::to_string(k) + " n=" + std::to_string(n), rep.ok(), d));
        }
    return r;
}

std::vector<Check> ac6() {
    auto r = registry({"eqFrob"});
    long bad = 0;
    for (int n = 1; n <= 4; ++n)
        for (long k = 1; k <= 8; ++k)
            if (!(oracles::frob_L_display(k, n) == characters::frob_L(int(k), n))) ++bad;
    r.push_back(check("special values n<=4, k=1..8", bad == 0, std::to_string(32 - bad) + "/32"));
    append(r, registry({"double_frob", "doubleSwap", "Frob2star", "starCount", "doubleCount"}));
    return r;
}

std::vector<Check> ac7() {
    std::vector<Check> r;
    long bad = 0, total = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : symfunc::partitions(n)) {
            ++total;
            if (!macdonald::check_triangularity(macdonald::macdonald_H(mu), mu).ok()) ++bad;
        }
    r.push_back(check("triangularity and K_{(n),mu}=1, n<=6", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total)));
    append(r, registry({"H_unepart", "H_t1", "H_t_invq"}, {}, 6));
    SymF ne2 = macdonald::nabla(SymF::parse("e[2]"));
    r.push_back(check("nabla_e2_literal", ne2 == SymF::parse("s[1,1] + (q+t)*s[2]"), ne2.to_string()));
    r.push_back(check("nabla_e2_omega", symfunc::omega(ne2) == SymF::parse("s[1,1] + (q+t)*s[2]"),
                      symfunc::omega(ne2).to_string()));
    append(r, registry({"prop_equation1"}, 4, 5));
    // prop_equation2 is indexed by Delta_{h_{k-1}}, so k-1 <= 4
    append(r, registry({"prop_equation2"}, 5, 5));
    return r;
}

std::vector<Check> ac10() {
    auto r = registry({"angela", "angelaSymQT", "angelaSymKN", "qangela"});
    auto b = characters::bounce_pairing(2, 2);
    r.push_back(check("k=n=2 value", b == algebra::QTRat::parse("1+q+t"), b.to_string()));
    return r;
}

std::vector<Check> ac11(std::vector<std::string>& notes) {
    auto r = registry({"sl2Rank", "plucker", "littlewood"});
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        auto h = sl2::hilbert(n, 10);
        ok = ok && h.series_a.size() == 11 && h.series_b.size() == 11;
        std::string line = "hilbert n=" + std::to_string(n) + ": counts";
        for (int d = 0; d <= 5; ++d) line += " " + h.series_a[std::size_t(d)].get_str();
        line += " ...; closed form";
        for (int d = 0; d <= 5; ++d) line += " " + h.series_b[std::size_t(d)].get_str();
        line += " ...; " + std::to_string(h.mismatches.size()) + " mismatching degrees up to 10";
        notes.push_back(line);
    }
    r.push_back(check("hilbert report emitted", ok));
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    bool strict = false, verbose = false;
    int threads = 1;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--strict") strict = true;
        else if (a == "--verbose") verbose = true;
        else if (a == "--threads" && i + 1 < argc) threads = std::stoi(argv[++i]);
        else if (a == "--only" && i + 1 < argc) only = argv[++i];
        else {
            std::cerr << "usage: acceptance [--strict] [--threads N] [--only AC-n] [--verbose]\n";
            return 2;
        }
    }
    omp_set_num_threads(threads);

    std::vector<std::string> notes;
    const std::vector<Criterion> criteria = {
        {1, "series Pxy reproduces the displayed coefficients", true, ac1},
        {2, "polyomino and labelled polyomino counts, k,n <= 6", true,
         [] { return registry({"unlabeled", "labelled", "labelled2"}); }},
        {3, "area enumerators of paths and labelled paths", true,
         [] { return registry({"pathArea", "labelledPathArea"}); }},
        {4, "Motzkin and A-word encodings", true, ac4},
        {5, "cyclic lemma, k,n <= 4", true, ac5},
        {6, "Frobenius characteristics of labelled polyominoes", true, ac6},
        {7, "Macdonald engine", true, ac7},
        {8, "E operators", true, [] { return registry({"Enr", "Emu_H", "commC", "eigenfunctD"}); }},
        {9, "area-graded labelled polyominoes vs Delta_{h_k} e_n at t=1 (conjecture)", strict,
         [] { return registry({"michele"}, 3, 5); }},
        {10, "bounce pairing", true, ac10},
        {11, "SL_2 invariants", true, [&] { return ac11(notes); }},
        {12, "positivity and ribbon observations (report only)", false,
         [] {
             auto r = registry({"diff_shur_pos"}, {}, 4);
             append(r, registry({"trivariateDiff"}, {}, 5));
             append(r, registry({"Frob-ribbon"}, 5, 5));
             return r;
         }},
    };

    bool all_ok = true;
    double total = 0;
    for (const auto& c : criteria) {
        std::string tag = "AC-" + std::to_string(c.id);
        if (!only.empty() && only != tag) continue;
        notes.clear();
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Check> checks;
        std::string error;
        try {
            checks = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        bool pass = error.empty() && secs <= kBudget[c.id];
        bool counted_pass = pass;
        std::vector<std::string> excused;
        for (const auto& ch : checks) {
            if (ch.pass) continue;
            pass = false;
            std::string key = tag + "/" + ch.name;
            if (kUnattainable.count(key)) excused.push_back(key);
            else counted_pass = false;
        }
        if (c.required && !counted_pass) all_ok = false;

        char timing[64];
        std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", secs, kBudget[c.id]);
        std::cout << tag << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.title << "  " << timing;
        if (!c.required) std::cout << "  [report only]";
        if (!excused.empty() && counted_pass) std::cout << "  [unattainable sub-check only]";
        std::cout << '\n';
        if (!error.empty()) std::cout << "    error: " << error << '\n';
        if (secs > kBudget[c.id]) std::cout << "    over time budget\n";
        for (const auto& ch : checks)
            if (verbose || !ch.pass) {
                std::cout << "    " << (ch.pass ? "ok   " : "FAIL ") << ch.name;
                if (!ch.detail.empty()) std::cout << ": " << ch.detail;
                if (!ch.pass && kUnattainable.count(tag + "/" + ch.name)) std::cout << "  (unattainable as stated)";
                std::cout << '\n';
            }
        for (const auto& n : notes) std::cout << "    " << n << '\n';
        std::cout.flush();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", total);
    std::cout << "acceptance " << (all_ok ? "PASS" : "FAIL") << " (" << buf << ")\n";
    return all_ok ? 0 : 1;
}
