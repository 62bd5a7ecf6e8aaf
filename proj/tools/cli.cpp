#include "cli.hpp"

#include "polyolab/algebra/qtpoly.hpp"
#include "polyolab/characters/characters.hpp"
#include "polyolab/error.hpp"
#include "polyolab/identities/identities.hpp"
#include "polyolab/macdonald/macdonald.hpp"
#include "polyolab/polyomino/path.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/sl2/sl2.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace polyolab::cli {

using nlohmann::json;
using symfunc::Basis;
using symfunc::SymF;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    int threads = 0;
    bool strict = false;
    int cap_brute = 6;
    int cap_generic = 8;
    int cap_special = 10;
};

void need(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

void brute_cap(const Globals& g, int k, int n) {
    if (k > g.cap_brute) throw CapExceeded("brute-force size k", k, g.cap_brute);
    if (n > g.cap_brute) throw CapExceeded("brute-force size n", n, g.cap_brute);
}

std::string join(const std::vector<int>& v, const char* open, const char* close) {
    std::string s = open;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
}

// 6+6q+5q^2+2q^3+q^4
std::string qpoly_text(const std::vector<std::int64_t>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        if (!s.empty()) s += '+';
        bool unit = c[i] == 1 && i > 0;
        if (!unit) s += std::to_string(c[i]);
        if (i >= 1) s += 'q';
        if (i >= 2) s += '^' + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

// ---- enum

int cmd_enum(const Globals& g, const std::string& kind, int k, int n, std::optional<long> limit, std::ostream& out) {
    need(k >= 0 && n >= 0, "sizes must be nonnegative");
    if (kind != "paths") need(k >= 1 && n >= 1, kind + " need k, n >= 1");
    brute_cap(g, k, n);
    const bool as_json = g.format == "json";
    long count = 0;
    json records = json::array();
    auto emit = [&](const std::string& text, json rec) {
        ++count;
        if (limit && count > *limit) return;
        if (as_json) records.push_back(std::move(rec));
        else out << text << '\n';
    };
    using namespace polyomino;
    if (kind == "paths") {
        for_each_path(k, n, [&](const LatticePath& p) { emit(p.to_string(), {{"path", p.to_string()}, {"area", p.area()}}); });
    } else if (kind == "polyominoes") {
        for_each_polyomino(k, n, [&](const Polyomino& p) {
            emit(p.to_string(), {{"upper", p.upper().to_string()}, {"lower", p.lower().to_string()}, {"area", p.area()}});
        });
    } else if (kind == "labelled") {
        for_each_labelled(k, n, [&](const LabelledPolyomino& p) {
            emit(p.to_string(), {{"upper", p.shape.upper().to_string()}, {"lower", p.shape.lower().to_string()}, {"labels", p.labels}});
        });
    } else if (kind == "doubly" || kind == "star") {
        for_each_doubly(k, n, kind == "star", [&](const DoublyLabelledPolyomino& p) {
            emit(p.to_string(), {{"upper", p.base.shape.upper().to_string()},
                                 {"lower", p.base.shape.lower().to_string()},
                                 {"labels", p.base.labels},
                                 {"lower_labels", p.lower_labels}});
        });
    } else {
        throw UsageError("unknown kind '" + kind + "'");
    }
    if (as_json) {
        out << json{{"kind", kind}, {"k", k}, {"n", n}, {"records", records}, {"count", count}}.dump(2) << '\n';
    } else {
        out << "count=" << count << '\n';
    }
    return ok;
}

// ---- stat

int cmd_stat(const Globals& g, const std::string& stat, const std::string& literal, std::ostream& out) {
    using namespace polyomino;
    const bool is_poly = literal.find_first_of("|/") != std::string::npos;
    auto poly = [&] {
        need(is_poly, "statistic '" + stat + "' needs a polyomino 'upper|lower'");
        return Polyomino::parse(literal);
    };
    json value;
    std::string text;
    if (stat == "area") {
        int a = is_poly ? Polyomino::parse(literal).area() : LatticePath(literal).area();
        value = a;
        text = std::to_string(a);
    } else if (stat == "dinv") {
        int d = dinv(poly());
        value = d;
        text = std::to_string(d);
    } else if (stat == "gamma") {
        auto gm = is_poly ? Polyomino::parse(literal).gamma() : LatticePath(literal).north_runs();
        value = gm;
        text = join(gm, "(", ")");
    } else if (stat == "aword") {
        text = to_string(to_aword(poly()), ",");
        value = text;
    } else if (stat == "motzkin") {
        text = to_string(to_motzkin(poly()));
        value = text;
    } else {
        throw UsageError("unknown statistic '" + stat + "'");
    }
    if (g.format == "json") out << json{{"stat", stat}, {"input", literal}, {"value", value}}.dump() << '\n';
    else out << text << '\n';
    return ok;
}

// ---- frob

int cmd_frob(const Globals& g, const std::string& which, int a, int b, const std::string& basis_name, bool graded, bool brute,
             std::ostream& out) {
    Basis basis = symfunc::parse_basis(basis_name);
    std::string text;
    std::optional<SymF> single;
    std::optional<symfunc::BiSymF> bi;
    if (which == "paths") {
        need(a >= 0 && b >= 1, "paths need k >= 0, n >= 1");
        if (brute) brute_cap(g, a, b);
        single = brute ? characters::frob_labelled_paths_brute(a, b, graded) : characters::frob_labelled_paths(a, b, graded);
    } else if (which == "L") {
        need(a >= 1 && b >= 1, "L needs k, n >= 1");
        if (brute) brute_cap(g, a, b);
        single = brute ? characters::frob_L_brute(a, b) : characters::frob_L(a, b);
    } else if (which == "Lq") {
        need(a >= 1 && b >= 1, "Lq needs k, n >= 1");
        brute_cap(g, a, b);
        single = characters::frob_L_q(a, b);
    } else if (which == "L2") {
        need(a >= 1 && b >= 1, "L2 needs k, n >= 1");
        brute_cap(g, a, b);
        bi = characters::frob_L2(a, b, graded);
    } else if (which == "L2star") {
        need(a >= 1 && b >= 1, "L2star needs k, n >= 1");
        brute_cap(g, a, b);
        bi = characters::frob_L2star(a, b);
    } else if (which == "ribbon") {
        need(a >= 1 && b >= 1, "ribbon needs k, n >= 1");
        brute_cap(g, a, b);
        single = characters::ribbon_frob(a, b);
    } else if (which == "srho") {
        need(a >= 1 && b >= 1, "srho needs r, n >= 1");
        brute_cap(g, a * b, b);
        single = characters::s_rho_coefficient(a, b, graded);
    } else if (which == "littlewood") {
        need(a >= 0 && b >= 1, "littlewood needs d >= 0, n >= 1");
        single = sl2::littlewood_frob(a, b);
    } else {
        throw UsageError("unknown character '" + which + "'");
    }
    text = single ? single->to_string(basis) : bi->to_string(basis, basis);
    if (g.format == "json")
        out << json{{"frob", which}, {"params", {a, b}}, {"basis", basis_name}, {"graded", graded}, {"value", text}}.dump() << '\n';
    else out << text << '\n';
    return ok;
}

// ---- verify

int cmd_verify(const Globals& g, const std::vector<std::string>& ids, bool all, std::optional<int> max_k,
               std::optional<int> max_n, const std::string& mode, bool timing, std::ostream& out) {
    identities::VerifyOptions opt;
    need(all != !ids.empty(), "give identity ids or --all, not both");
    for (const auto& id : ids)
        if (!identities::find(id)) throw UsageError("unknown identity '" + id + "'");
    opt.ids = ids;
    opt.max_k = max_k;
    opt.max_n = max_n;
    if (max_k) brute_cap(g, *max_k, 0);
    if (max_n) brute_cap(g, 0, *max_n);
    need(mode == "symbolic" || mode == "evaluation", "mode is symbolic or evaluation");
    opt.mode = mode == "symbolic" ? identities::Mode::symbolic : identities::Mode::evaluation;
    opt.timing = timing;
    auto rep = identities::verify(opt);
    if (g.format == "json") {
        out << identities::to_json(rep).dump(2) << '\n';
    } else {
        for (const auto& p : rep.points) {
            out << p.id << ' ' << identities::to_string(p.status) << " k=" << p.params.k << " n=" << p.params.n
                << " r=" << p.params.r << " d=" << p.params.d << ' ' << (p.equal ? "equal" : "DIFFERENT") << ' '
                << p.lhs_digest << ' ' << p.rhs_digest << '\n';
        }
        long bad = std::count_if(rep.points.begin(), rep.points.end(), [](const auto& p) { return !p.equal; });
        out << "points=" << rep.points.size() << " failed=" << bad << '\n';
    }
    bool pass = g.strict ? rep.all_ok() : rep.theorems_ok();
    return pass ? ok : verification;
}

// ---- series

int cmd_series(const Globals& g, const std::string& which, int trunc, int k, int n, std::ostream& out) {
    const bool as_json = g.format == "json";
    json rows = json::array();
    if (which == "Pxy") {
        need(trunc >= 2 && trunc <= 12, "Pxy truncation must lie in [2, 12]");
        for (int total = 2; total <= trunc; ++total)
            for (int kk = 1; kk < total; ++kk) {
                int nn = total - kk;
                std::string poly = qpoly_text(polyomino::area_polynomial(kk, nn));
                if (as_json) rows.push_back({{"k", kk}, {"n", nn}, {"poly", poly}});
                else out << "x^" << kk << " y^" << nn << ": " << poly << '\n';
            }
    } else if (which == "labelledGF") {
        need(k >= 1, "labelledGF needs --k >= 1");
        need(trunc >= 1 && trunc <= 40, "labelledGF truncation must lie in [1, 40]");
        // (1 - kx)^{-k} as the k-th power of a geometric series
        std::vector<algebra::BigInt> geo(std::size_t(trunc) + 1), pw(std::size_t(trunc) + 1, 0);
        geo[0] = 1;
        for (int i = 1; i <= trunc; ++i) geo[std::size_t(i)] = geo[std::size_t(i) - 1] * k;
        pw[0] = 1;
        for (int f = 0; f < k; ++f) {
            std::vector<algebra::BigInt> next(pw.size(), 0);
            for (std::size_t i = 0; i < pw.size(); ++i)
                for (std::size_t j = 0; i + j < pw.size(); ++j) next[i + j] += pw[i] * geo[j];
            pw = std::move(next);
        }
        for (int m = 1; m <= trunc; ++m) {
            algebra::BigInt count = 1;
            for (int i = 0; i < m - 1; ++i) count *= k;
            count *= algebra::binomial(m + k - 2, k - 1);
            std::string shifted = pw[std::size_t(m) - 1].get_str(), literal = pw[std::size_t(m)].get_str();
            if (as_json)
                rows.push_back({{"n", m}, {"count", count.get_str()}, {"x_over", shifted}, {"literal", literal}});
            else
                out << "n=" << m << " count=" << count.get_str() << " [x^n] x(1-kx)^-k=" << shifted
                    << " [x^n] (1-kx)^-k=" << literal << '\n';
        }
    } else if (which == "hilbert") {
        need(n >= 2, "hilbert needs --n >= 2");
        need(trunc >= 0 && trunc <= 30, "hilbert truncation must lie in [0, 30]");
        auto rep = sl2::hilbert(n, trunc);
        for (int d = 0; d <= trunc; ++d) {
            std::string a = rep.series_a[std::size_t(d)].get_str(), b = rep.series_b[std::size_t(d)].get_str();
            bool same = std::find(rep.mismatches.begin(), rep.mismatches.end(), d) == rep.mismatches.end();
            if (as_json) rows.push_back({{"d", d}, {"series_a", a}, {"series_b", b}, {"match", same}});
            else out << "d=" << d << " counts=" << a << " closed_form=" << b << (same ? "" : " MISMATCH") << '\n';
        }
        if (!as_json) out << "mismatches=" << rep.mismatches.size() << '\n';
    } else {
        throw UsageError("unknown series '" + which + "'");
    }
    if (as_json) out << json{{"series", which}, {"rows", rows}}.dump(2) << '\n';
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polyolab: parallelogram polyominoes, their characters and identities"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", g.threads, "Worker threads (0: OpenMP default)");
    app.add_flag("--strict", g.strict, "Conjecture and observation failures also fail verify");
    app.add_option("--cap-brute", g.cap_brute, "Largest k or n for brute-force enumeration");
    app.add_option("--cap-generic", g.cap_generic, "Largest degree for generic q,t operators");
    app.add_option("--cap-special", g.cap_special, "Largest degree for specialized operators");

    std::function<int()> action;

    auto* en = app.add_subcommand("enum", "Enumerate paths, polyominoes and labelled polyominoes");
    std::string kind;
    int ek = 0, enn = 0;
    std::optional<long> limit;
    en->add_option("kind", kind)->required()->check(CLI::IsMember({"paths", "polyominoes", "labelled", "doubly", "star"}));
    en->add_option("k", ek)->required();
    en->add_option("n", enn)->required();
    en->add_option("--limit", limit, "Print at most this many records");
    en->callback([&] { action = [&] { return cmd_enum(g, kind, ek, enn, limit, out); }; });

    auto* st = app.add_subcommand("stat", "Statistics of a path or polyomino literal");
    std::string stat, literal;
    st->add_option("stat", stat)->required()->check(CLI::IsMember({"area", "dinv", "gamma", "aword", "motzkin"}));
    st->add_option("object", literal, "Step word, or 'upper|lower' as words or height sequences")->required();
    st->callback([&] { action = [&] { return cmd_stat(g, stat, literal, out); }; });

    auto* fr = app.add_subcommand("frob", "Frobenius characteristics");
    std::string which, basis = "s";
    int fa = 0, fb = 0;
    bool graded = false, brute = false;
    fr->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"paths", "L", "Lq", "L2", "L2star", "ribbon", "srho", "littlewood"}));
    fr->add_option("a", fa, "k (r for srho, d for littlewood)")->required();
    fr->add_option("b", fb, "n")->required();
    fr->add_option("--basis", basis)->check(CLI::IsMember({"s", "h", "e", "p", "m"}));
    fr->add_flag("--graded", graded, "q-grade by area (paths, L2, srho)");
    fr->add_flag("--brute", brute, "Sum over the objects instead of the closed form (paths, L)");
    fr->callback([&] { action = [&] { return cmd_frob(g, which, fa, fb, basis, graded, brute, out); }; });

    auto* ve = app.add_subcommand("verify", "Check registered identities");
    std::vector<std::string> ids;
    bool all = false, no_timing = false, list = false;
    std::optional<int> max_k, max_n;
    std::string mode = "symbolic";
    ve->add_option("id", ids);
    ve->add_flag("--all", all);
    ve->add_flag("--list", list, "List the registry");
    ve->add_option("--max-k", max_k);
    ve->add_option("--max-n", max_n);
    ve->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "evaluation"}));
    ve->add_flag("--no-timing", no_timing, "Write zero timings for byte-stable reports");
    ve->callback([&] {
        action = [&] {
            if (list) {
                for (const auto& e : identities::registry())
                    out << e.id << ' ' << identities::to_string(e.status) << ": " << e.anchor << '\n';
                return int(ok);
            }
            return cmd_verify(g, ids, all, max_k, max_n, mode, !no_timing, out);
        };
    });

    auto* se = app.add_subcommand("series", "Generating series coefficients");
    std::string series;
    int trunc = 6, sk = 0, sn = 0;
    se->add_option("which", series)->required()->check(CLI::IsMember({"Pxy", "labelledGF", "hilbert"}));
    se->add_option("--trunc", trunc, "Total degree (Pxy), largest n (labelledGF) or degree (hilbert)");
    se->add_option("--k", sk, "k for labelledGF");
    se->add_option("--n", sn, "n for hilbert");
    se->callback([&] { action = [&] { return cmd_series(g, series, trunc, sk, sn, out); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    if (g.threads > 0) omp_set_num_threads(g.threads);
    macdonald::set_generic_degree_cap(g.cap_generic);
    macdonald::set_special_degree_cap(g.cap_special);

    try {
        return action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return cap;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

}  // namespace polyolab::cli
