#pragma once

#include "polyolab/exec.hpp"
#include "polyolab/polyomino/path.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace polyolab::polyomino {

// Pair (upper, lower) of paths to (k,n); the lower path stays strictly below
// the upper one except at the two endpoints.
class Polyomino {
public:
    Polyomino() = default;
    // Throws DomainError when the pair is not a parallelogram polyomino.
    Polyomino(LatticePath upper, LatticePath lower);
    // "upper|lower" as step words or height sequences ("2224455566|0011112223");
    // '/' is accepted as separator too.
    static Polyomino parse(std::string_view text);
    static bool is_valid(const LatticePath& upper, const LatticePath& lower);

    const LatticePath& upper() const { return upper_; }
    const LatticePath& lower() const { return lower_; }
    int width() const { return upper_.width(); }
    int height() const { return upper_.height(); }

    // Cells between the paths minus (k + n - 1).
    int area() const;
    int cells() const;
    bool is_ribbon() const { return area() == 0; }
    // Big-step composition of the upper path.
    std::vector<int> gamma() const { return upper_.north_runs(); }
    // East-run composition of the lower path.
    std::vector<int> delta() const { return lower_.east_runs(); }
    // Reflection in the diagonal, a polyomino of size (n,k).
    Polyomino reflect() const;

    std::string to_string() const { return upper_.to_string() + "|" + lower_.to_string(); }
    friend auto operator<=>(const Polyomino&, const Polyomino&) = default;

private:
    LatticePath upper_, lower_;
};

// Polyominoes of width k and height n, ordered by (upper word, lower word).
void for_each_polyomino(int k, int n, const std::function<void(const Polyomino&)>& fn);
std::vector<Polyomino> enum_polyominoes(int k, int n);

// ---- encodings

enum class Motzkin : char { d = 'd', dbar = 'D', r = 'r', b = 'b' };
using MotzkinWord = std::vector<Motzkin>;

MotzkinWord to_motzkin(const Polyomino& p);
// Throws DomainError when w is not primitive and balanced.
Polyomino from_motzkin(const MotzkinWord& w);
bool is_primitive(const MotzkinWord& w);
std::string to_string(const MotzkinWord& w);  // "d r d b d~ ..."
MotzkinWord parse_motzkin(std::string_view text);

// Letter of the ordered alphabet 0~ < 1 < 1~ < 2 < 2~ < ..., stored by rank:
// j~ has rank 2j and j has rank 2j-1.
using AWord = std::vector<int>;
AWord to_aword(const Polyomino& p);
std::string aword_letter(int rank);
std::string to_string(const AWord& w, const std::string& sep = " ");

// Number of pairs i < j in the A-word with w_j the successor of w_i
// (successor) or w_i the successor of w_j (predecessor).
enum class DinvConvention { successor, predecessor };
int dinv(const Polyomino& p, DinvConvention c);
int dinv_of_word(const AWord& w, DinvConvention c);

// The convention under which dinv(pi) - area(lower path) is constant on the
// ribbons of each size (k,n) with k+n <= max_size; the offset is k+n-1 for
// the convention found.
struct DinvCalibration {
    bool found = false;
    DinvConvention convention = DinvConvention::successor;
    int max_size = 0;
    int ribbons_checked = 0;
    bool offset_is_k_plus_n_minus_1 = false;
};
DinvCalibration calibrate_dinv(int max_size = 8);
// Cached result of calibrate_dinv(8).
const DinvCalibration& dinv_calibration();
// dinv under the calibrated convention.
int dinv(const Polyomino& p);

// ---- labelled objects

struct LabelledPolyomino {
    Polyomino shape;
    std::vector<int> labels;  // labels of the upper north steps, bottom to top

    bool valid() const;
    std::string to_string() const;
};

struct DoublyLabelledPolyomino {
    LabelledPolyomino base;
    std::vector<int> lower_labels;  // labels of the lower east steps, left to right
    bool star = false;

    bool valid() const;
    std::string to_string() const;
};

void for_each_labelled(int k, int n, const std::function<void(const LabelledPolyomino&)>& fn);
// star: the first east step of the lower path carries label 1.
void for_each_doubly(int k, int n, bool star, const std::function<void(const DoublyLabelledPolyomino&)>& fn);

// ---- shape statistics kernels

// Counts of polyominoes of size (k,n) by (gamma, area).
using ShapeHistogram = std::map<std::pair<std::vector<int>, int>, std::int64_t>;
// Counts by (gamma, delta, area).
using DoubleHistogram = std::map<std::tuple<std::vector<int>, std::vector<int>, int>, std::int64_t>;

ShapeHistogram shape_histogram(int k, int n, Exec exec = Exec::parallel);
DoubleHistogram double_histogram(int k, int n, Exec exec = Exec::parallel);
// Counts of ribbons by (gamma, dinv).
ShapeHistogram ribbon_dinv_histogram(int k, int n, DinvConvention c, Exec exec = Exec::parallel);
// sum over P_{k,n} of q^area as a coefficient list.
std::vector<std::int64_t> area_polynomial(int k, int n, Exec exec = Exec::parallel);

// ---- cyclic lemma

struct CyclicPair {
    LabelledPath path;  // in L_{k-1,n}
    LatticePath beta;   // in P_{k-1,n-1}
    friend auto operator<=>(const CyclicPair&, const CyclicPair&) = default;
};

struct CyclicClass {
    std::vector<CyclicPair> members;  // one per transversal intersection, sorted
    std::vector<int> polyomino_members;
    std::optional<LabelledPolyomino> rep;
};

// Transversal intersections of the two bi-infinite paths built from (lp, beta).
CyclicClass cyclic_map(const LabelledPath& lp, const LatticePath& beta);

struct CyclicReport {
    int k = 0, n = 0;
    std::int64_t inputs = 0;
    std::int64_t classes = 0;
    bool sizes_ok = true;      // every class has exactly k members
    bool unique_rep = true;    // exactly one polyomino per class
    bool partition_ok = true;  // set partition constant on classes
    bool closed = true;        // classes computed from any member agree
    bool reps_cover = true;    // representatives are exactly L_{k,n}
    bool ok() const { return sizes_ok && unique_rep && partition_ok && closed && reps_cover; }
};

// Exhaustive check over L_{k-1,n} x P_{k-1,n-1}.
CyclicReport check_cyclic_lemma(int k, int n, Exec exec = Exec::parallel);

}  // namespace polyolab::polyomino
