#include "polyolab/polyomino/polyomino.hpp"

#include "polyolab/error.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>
#include <sstream>

#include <omp.h>

namespace polyolab::polyomino {

// ---- Polyomino

bool Polyomino::is_valid(const LatticePath& upper, const LatticePath& lower) {
    int k = upper.width(), n = upper.height();
    if (k < 1 || n < 1 || lower.width() != k || lower.height() != n) return false;
    // Lowest upper vertex and highest lower vertex in each column.
    std::vector<int> umin(std::size_t(k) + 1, INT_MAX), lmax(std::size_t(k) + 1, INT_MIN);
    auto scan = [](const LatticePath& p, auto update) {
        int x = 0, y = 0;
        update(0, 0);
        for (char c : p.steps()) {
            if (c == 'E') ++x;
            else ++y;
            update(x, y);
        }
    };
    scan(upper, [&](int x, int y) { umin[std::size_t(x)] = std::min(umin[std::size_t(x)], y); });
    scan(lower, [&](int x, int y) { lmax[std::size_t(x)] = std::max(lmax[std::size_t(x)], y); });
    // Only the shared endpoints may touch: column 0 of the lower path and
    // column k of the upper path hold a single vertex.
    if (lmax[0] != 0 || umin[std::size_t(k)] != n) return false;
    for (int x = 1; x < k; ++x)
        if (lmax[std::size_t(x)] >= umin[std::size_t(x)]) return false;
    return true;
}

Polyomino::Polyomino(LatticePath upper, LatticePath lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (!is_valid(upper_, lower_)) throw DomainError("not a parallelogram polyomino: " + to_string());
}

Polyomino Polyomino::parse(std::string_view text) {
    auto slash = text.find_first_of("|/");
    if (slash == std::string_view::npos) throw ParseError("expected 'upper|lower'", 0);
    std::string_view a = text.substr(0, slash), b = text.substr(slash + 1);
    bool digits = std::any_of(a.begin(), a.end(), [](char c) { return std::isdigit((unsigned char)c); });
    if (!digits) return Polyomino(LatticePath(a), LatticePath(b));
    auto seq = [](std::string_view s, std::size_t offset) {
        std::vector<int> v;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (std::isspace((unsigned char)s[i]) || s[i] == ',') continue;
            if (!std::isdigit((unsigned char)s[i])) throw ParseError("expected a digit in height sequence", offset + i);
            v.push_back(s[i] - '0');
        }
        return v;
    };
    auto ha = seq(a, 0), hb = seq(b, slash + 1);
    if (ha.empty()) throw ParseError("empty height sequence", 0);
    int n = ha.back();
    return Polyomino(LatticePath::from_heights(ha, n), LatticePath::from_heights(hb, n));
}

int Polyomino::cells() const {
    auto a = upper_.heights(), b = lower_.heights();
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += a[i] - b[i];
    return c;
}

int Polyomino::area() const { return cells() - (width() + height() - 1); }

Polyomino Polyomino::reflect() const {
    auto swap_letters = [](const LatticePath& p) {
        std::string w = p.steps();
        for (char& c : w) c = c == 'E' ? 'N' : 'E';
        return LatticePath(w);
    };
    return Polyomino(swap_letters(lower_), swap_letters(upper_));
}

namespace {

// Lower paths compatible with a fixed upper path, in lexicographic order.
void for_each_lower(const LatticePath& upper, const std::function<void(const LatticePath&)>& fn) {
    int k = upper.width(), n = upper.height();
    auto A = upper.heights();  // A[x-1] is the lowest upper vertex at column x
    std::string cur;
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == k && y == n) {
            fn(LatticePath(cur));
            return;
        }
        if (x < k && (x + 1 == k || y < A[std::size_t(x)])) {
            cur += 'E';
            rec(x + 1, y);
            cur.pop_back();
        }
        if (y < n && (x == k || (x >= 1 && y + 1 < A[std::size_t(x - 1)]))) {
            cur += 'N';
            rec(x, y + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<LatticePath> uppers(int k, int n) {
    std::vector<LatticePath> out;
    if (k < 1 || n < 1) return out;
    for_each_path(k - 1, n - 1, [&](const LatticePath& mid) { out.emplace_back("N" + mid.steps() + "E"); });
    return out;
}

// Map-reduce over upper paths; Acc must support merge(Acc&, const Acc&).
template <class Acc, class PerUpper, class Merge>
Acc reduce_uppers(int k, int n, Exec exec, PerUpper per_upper, Merge merge) {
    auto ups = uppers(k, n);
    Acc total{};
    if (exec == Exec::serial) {
        for (const auto& u : ups) per_upper(u, total);
        return total;
    }
    long count = long(ups.size());
#pragma omp parallel
    {
        Acc local{};
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < count; ++i) per_upper(ups[std::size_t(i)], local);
#pragma omp critical(polyolab_reduce)
        merge(total, local);
    }
    return total;
}

template <class M>
void merge_counts(M& into, const M& from) {
    for (const auto& [key, c] : from) into[key] += c;
}

}  // namespace

void for_each_polyomino(int k, int n, const std::function<void(const Polyomino&)>& fn) {
    if (k < 0 || n < 0) throw DomainError("negative polyomino dimensions");
    for (const auto& u : uppers(k, n))
        for_each_lower(u, [&](const LatticePath& l) { fn(Polyomino(u, l)); });
}

std::vector<Polyomino> enum_polyominoes(int k, int n) {
    std::vector<Polyomino> out;
    for_each_polyomino(k, n, [&](const Polyomino& p) { out.push_back(p); });
    return out;
}

// ---- encodings

MotzkinWord to_motzkin(const Polyomino& p) {
    MotzkinWord w;
    const auto& u = p.upper().steps();
    const auto& l = p.lower().steps();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 'N' && l[i] == 'E') w.push_back(Motzkin::d);
        else if (u[i] == 'E' && l[i] == 'N') w.push_back(Motzkin::dbar);
        else if (u[i] == 'N') w.push_back(Motzkin::r);
        else w.push_back(Motzkin::b);
    }
    return w;
}

bool is_primitive(const MotzkinWord& w) {
    if (w.empty() || w.front() != Motzkin::d) return false;
    int h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Motzkin::d) ++h;
        else if (w[i] == Motzkin::dbar) --h;
        if (i + 1 < w.size() && h <= 0) return false;
    }
    return h == 0;
}

Polyomino from_motzkin(const MotzkinWord& w) {
    if (!is_primitive(w)) throw DomainError("Motzkin word is not primitive and balanced");
    std::string u, l;
    for (Motzkin m : w) {
        switch (m) {
        case Motzkin::d: u += 'N'; l += 'E'; break;
        case Motzkin::dbar: u += 'E'; l += 'N'; break;
        case Motzkin::r: u += 'N'; l += 'N'; break;
        case Motzkin::b: u += 'E'; l += 'E'; break;
        }
    }
    return Polyomino(LatticePath(u), LatticePath(l));
}

std::string to_string(const MotzkinWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i] == Motzkin::dbar ? "d~" : std::string(1, char(w[i]));
    }
    return s;
}

MotzkinWord parse_motzkin(std::string_view text) {
    MotzkinWord w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace((unsigned char)c) || c == ',') continue;
        if (c == 'd') {
            if (i + 1 < text.size() && text[i + 1] == '~') {
                w.push_back(Motzkin::dbar);
                ++i;
            } else {
                w.push_back(Motzkin::d);
            }
        } else if (c == 'D') {
            w.push_back(Motzkin::dbar);
        } else if (c == 'r') {
            w.push_back(Motzkin::r);
        } else if (c == 'b') {
            w.push_back(Motzkin::b);
        } else {
            throw ParseError(std::string("unexpected Motzkin letter '") + c + "'", i);
        }
    }
    return w;
}

AWord to_aword(const Polyomino& p) {
    AWord a;
    int h = 0;
    for (Motzkin m : to_motzkin(p)) {
        switch (m) {
        case Motzkin::d:
            a.push_back(2 * h);
            a.push_back(2 * h + 1);
            ++h;
            break;
        case Motzkin::dbar: --h; break;
        case Motzkin::r: a.push_back(2 * h - 1); break;
        case Motzkin::b: a.push_back(2 * h); break;
        }
    }
    return a;
}

std::string aword_letter(int rank) {
    return rank % 2 == 0 ? std::to_string(rank / 2) + "~" : std::to_string((rank + 1) / 2);
}

std::string to_string(const AWord& w, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += aword_letter(w[i]);
    }
    return s;
}

int dinv_of_word(const AWord& w, DinvConvention c) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (c == DinvConvention::successor ? w[j] == w[i] + 1 : w[i] == w[j] + 1) ++count;
        }
    return count;
}

int dinv(const Polyomino& p, DinvConvention c) { return dinv_of_word(to_aword(p), c); }

DinvCalibration calibrate_dinv(int max_size) {
    for (auto c : {DinvConvention::successor, DinvConvention::predecessor}) {
        DinvCalibration cal;
        cal.convention = c;
        cal.max_size = max_size;
        bool constant = true, offset_ok = true;
        for (int k = 1; k < max_size && constant; ++k)
            for (int n = 1; k + n <= max_size && constant; ++n) {
                std::optional<int> offset;
                for_each_polyomino(k, n, [&](const Polyomino& p) {
                    if (!p.is_ribbon()) return;
                    ++cal.ribbons_checked;
                    int d = dinv(p, c) - p.lower().area();
                    if (offset && *offset != d) constant = false;
                    offset = d;
                });
                if (offset && *offset != k + n - 1) offset_ok = false;
            }
        if (constant) {
            cal.found = true;
            cal.offset_is_k_plus_n_minus_1 = offset_ok;
            return cal;
        }
    }
    return DinvCalibration{false, DinvConvention::successor, max_size, 0, false};
}

const DinvCalibration& dinv_calibration() {
    static const DinvCalibration cal = calibrate_dinv(8);
    return cal;
}

int dinv(const Polyomino& p) { return dinv(p, dinv_calibration().convention); }

// ---- labelled objects

namespace {

bool increasing_on_runs(const std::vector<int>& labels, const std::vector<int>& runs, int total) {
    if (int(labels.size()) != total) return false;
    std::vector<char> seen(std::size_t(total) + 1, 0);
    for (int l : labels) {
        if (l < 1 || l > total || seen[std::size_t(l)]) return false;
        seen[std::size_t(l)] = 1;
    }
    std::size_t pos = 0;
    for (int r : runs) {
        for (int j = 1; j < r; ++j)
            if (labels[pos + std::size_t(j)] < labels[pos + std::size_t(j) - 1]) return false;
        pos += std::size_t(r);
    }
    return true;
}

std::string join(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

bool LabelledPolyomino::valid() const { return increasing_on_runs(labels, shape.gamma(), shape.height()); }

std::string LabelledPolyomino::to_string() const { return shape.to_string() + "|" + join(labels); }

bool DoublyLabelledPolyomino::valid() const {
    if (!base.valid() || !increasing_on_runs(lower_labels, base.shape.delta(), base.shape.width())) return false;
    return !star || lower_labels.front() == 1;
}

std::string DoublyLabelledPolyomino::to_string() const {
    return base.to_string() + "|" + join(lower_labels) + (star ? "*" : "");
}

void for_each_labelled(int k, int n, const std::function<void(const LabelledPolyomino&)>& fn) {
    for_each_polyomino(k, n, [&](const Polyomino& p) {
        for_each_block_labelling(p.gamma(), [&](const std::vector<int>& labels) { fn(LabelledPolyomino{p, labels}); });
    });
}

void for_each_doubly(int k, int n, bool star, const std::function<void(const DoublyLabelledPolyomino&)>& fn) {
    for_each_polyomino(k, n, [&](const Polyomino& p) {
        auto delta = p.delta();
        for_each_block_labelling(p.gamma(), [&](const std::vector<int>& labels) {
            for_each_block_labelling(delta, [&](const std::vector<int>& lower) {
                if (star && lower.front() != 1) return;
                fn(DoublyLabelledPolyomino{LabelledPolyomino{p, labels}, lower, star});
            });
        });
    });
}

// ---- kernels

ShapeHistogram shape_histogram(int k, int n, Exec exec) {
    return reduce_uppers<ShapeHistogram>(
        k, n, exec,
        [](const LatticePath& u, ShapeHistogram& acc) {
            auto gamma = u.north_runs();
            for_each_lower(u, [&](const LatticePath& l) { ++acc[{gamma, Polyomino(u, l).area()}]; });
        },
        merge_counts<ShapeHistogram>);
}

DoubleHistogram double_histogram(int k, int n, Exec exec) {
    return reduce_uppers<DoubleHistogram>(
        k, n, exec,
        [](const LatticePath& u, DoubleHistogram& acc) {
            auto gamma = u.north_runs();
            for_each_lower(u, [&](const LatticePath& l) {
                ++acc[{gamma, l.east_runs(), Polyomino(u, l).area()}];
            });
        },
        merge_counts<DoubleHistogram>);
}

ShapeHistogram ribbon_dinv_histogram(int k, int n, DinvConvention c, Exec exec) {
    return reduce_uppers<ShapeHistogram>(
        k, n, exec,
        [c](const LatticePath& u, ShapeHistogram& acc) {
            auto gamma = u.north_runs();
            for_each_lower(u, [&](const LatticePath& l) {
                Polyomino p(u, l);
                if (p.area() == 0) ++acc[{gamma, dinv(p, c)}];
            });
        },
        merge_counts<ShapeHistogram>);
}

std::vector<std::int64_t> area_polynomial(int k, int n, Exec exec) {
    std::vector<std::int64_t> out;
    for (const auto& [key, c] : shape_histogram(k, n, exec)) {
        std::size_t a = std::size_t(key.second);
        if (out.size() <= a) out.resize(a + 1, 0);
        out[a] += c;
    }
    return out;
}

// ---- cyclic lemma

namespace {

struct Pt {
    long x, y;
    bool operator==(const Pt&) const = default;
};

long floordiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Point after i steps of the bi-infinite repetition of `word` starting at `origin`.
struct Periodic {
    std::string word;
    Pt origin;
    std::vector<Pt> prefix;  // prefix[r] = point after r steps of one period
    Pt period;

    Periodic(std::string w, Pt o) : word(std::move(w)), origin(o) {
        prefix.push_back({0, 0});
        for (char c : word) {
            Pt p = prefix.back();
            if (c == 'E') ++p.x;
            else ++p.y;
            prefix.push_back(p);
        }
        period = prefix.back();
    }
    long len() const { return long(word.size()); }
    Pt at(long i) const {
        long q = floordiv(i, len()), r = i - q * len();
        Pt p = prefix[std::size_t(r)];
        return {origin.x + p.x + q * period.x, origin.y + p.y + q * period.y};
    }
    // Step arriving at at(i).
    char arriving(long i) const {
        long r = ((i - 1) % len() + len()) % len();
        return word[std::size_t(r)];
    }
};

}  // namespace

CyclicClass cyclic_map(const LabelledPath& lp, const LatticePath& beta) {
    int k = lp.path.width() + 1, n = lp.path.height();
    if (n < 1) throw DomainError("cyclic_map: height must be positive");
    if (beta.width() != k - 1 || beta.height() != n - 1) throw DomainError("cyclic_map: beta has the wrong size");
    if (!lp.valid()) throw DomainError("cyclic_map: invalid labelled path");

    Periodic ell(lp.path.steps() + "E", {0, 0});
    Periodic bet(beta.steps() + "N", {1, 0});
    // Label carried by each north step of one period of ell.
    std::vector<int> step_label(ell.word.size(), 0);
    for (std::size_t i = 0, j = 0; i < ell.word.size(); ++i)
        if (ell.word[i] == 'N') step_label[i] = lp.labels[j++];

    // ell(i) has x+y = i and bet(j) has x+y = j+1, so meetings pair i with j = i-1.
    // The x-offset between them drifts by n every len(ell)*len(bet) steps.
    long span = ell.len() * bet.len() * (2 * (k + n) + 4);
    CyclicClass cls;
    for (long i = -span; i <= span; ++i) {
        if (ell.arriving(i) != 'E' || bet.arriving(i - 1) != 'N') continue;
        if (!(ell.at(i) == bet.at(i - 1))) continue;
        long L = ell.len();
        long r0 = ((i % L) + L) % L;
        std::string w = ell.word.substr(std::size_t(r0)) + ell.word.substr(0, std::size_t(r0));
        std::vector<int> labels;
        for (long s = 0; s < L; ++s) {
            std::size_t idx = std::size_t((r0 + s) % L);
            if (ell.word[idx] == 'N') labels.push_back(step_label[idx]);
        }
        long M = bet.len();
        long b0 = (((i - 1) % M) + M) % M;
        std::string bw = bet.word.substr(std::size_t(b0)) + bet.word.substr(0, std::size_t(b0));
        CyclicPair pair{LabelledPath{LatticePath(w.substr(0, w.size() - 1)), labels},
                        LatticePath(bw.substr(0, bw.size() - 1))};
        cls.members.push_back(std::move(pair));
    }
    std::sort(cls.members.begin(), cls.members.end());
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
        const auto& pr = cls.members[m];
        LatticePath upper(pr.path.path.steps() + "E");
        LatticePath lower("E" + pr.beta.steps() + "N");
        if (Polyomino::is_valid(upper, lower)) {
            cls.polyomino_members.push_back(int(m));
            if (!cls.rep) cls.rep = LabelledPolyomino{Polyomino(upper, lower), pr.path.labels};
        }
    }
    return cls;
}

CyclicReport check_cyclic_lemma(int k, int n, Exec exec) {
    CyclicReport rep;
    rep.k = k;
    rep.n = n;
    std::vector<CyclicPair> inputs;
    for_each_labelled_path(k - 1, n, [&](const LabelledPath& lp) {
        for_each_path(k - 1, n - 1, [&](const LatticePath& b) { inputs.push_back({lp, b}); });
    });
    rep.inputs = std::int64_t(inputs.size());
    std::vector<CyclicClass> classes(inputs.size());
    long count = long(inputs.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < count; ++i)
            classes[std::size_t(i)] = cyclic_map(inputs[std::size_t(i)].path, inputs[std::size_t(i)].beta);
    } else {
        for (long i = 0; i < count; ++i)
            classes[std::size_t(i)] = cyclic_map(inputs[std::size_t(i)].path, inputs[std::size_t(i)].beta);
    }

    std::map<CyclicPair, std::size_t> owner;  // member -> index of its first class
    std::set<std::vector<CyclicPair>> distinct;
    std::set<std::pair<Polyomino, std::vector<int>>> reps;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& cls = classes[i];
        if (int(cls.members.size()) != k) rep.sizes_ok = false;
        if (cls.polyomino_members.size() != 1) rep.unique_rep = false;
        if (!std::binary_search(cls.members.begin(), cls.members.end(), inputs[i])) rep.closed = false;
        auto part = inputs[i].path.set_partition();
        for (const auto& m : cls.members) {
            if (m.path.set_partition() != part) rep.partition_ok = false;
            auto [it, inserted] = owner.emplace(m, i);
            if (!inserted && classes[it->second].members != cls.members) rep.closed = false;
        }
        if (distinct.insert(cls.members).second && cls.rep) reps.emplace(cls.rep->shape, cls.rep->labels);
    }
    rep.classes = std::int64_t(distinct.size());
    std::set<std::pair<Polyomino, std::vector<int>>> expected;
    for_each_labelled(k, n, [&](const LabelledPolyomino& lp) { expected.emplace(lp.shape, lp.labels); });
    rep.reps_cover = reps == expected;
    return rep;
}

}  // namespace polyolab::polyomino
