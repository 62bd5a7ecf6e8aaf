#pragma once

#include "polyolab/algebra/qtrat.hpp"
#include "polyolab/exec.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace polyolab::identities {

using algebra::QTRat;

enum class Status { theorem, conjecture, observation };
std::string to_string(Status s);

struct Params {
    int k = 0, n = 0, r = 0, d = 0;
    friend auto operator<=>(const Params&, const Params&) = default;
};

// Coefficients keyed by basis element text ("s[2,1]", "sY[3]*sZ[2]", "1").
struct Value {
    std::map<std::string, QTRat> coeffs;

    static Value of(const symfunc::SymF& f, symfunc::Basis b = symfunc::Basis::s);
    static Value of(const symfunc::BiSymF& f);
    static Value of(const QTRat& c);
    static Value of(const algebra::BigInt& c);
    // Terms joined in key order; "0" when empty.
    std::string text() const;
    friend bool operator==(const Value&, const Value&) = default;
};

// 64-bit FNV-1a of the text, as 16 hex digits.
std::string digest(const std::string& text);

using Builder = std::function<Value(const Params&)>;
const std::map<std::string, Builder>& builders();

struct Range {
    int lo = 0, hi = -1;  // empty when hi < lo
};

struct Lattice {
    Range k, n, r, d;
    // Name of an extra predicate on the point; see constraints().
    std::string constraint;
};
const std::map<std::string, std::function<bool(const Params&)>>& constraints();

enum class Relation {
    equal,     // lhs == rhs
    positive,  // every lhs coefficient in N[q,t]; rhs is the positive part
};

struct IdentityEntry {
    std::string id;
    Status status;
    std::string anchor;
    std::string lhs, rhs;  // builder names
    Relation relation = Relation::equal;
    Lattice lattice;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry* find(const std::string& id);
// Points of the lattice in lexicographic (k, n, r, d) order. max_k / max_n
// replace the upper ends of the k and n ranges when given.
std::vector<Params> points(const IdentityEntry& e, std::optional<int> max_k = {}, std::optional<int> max_n = {});

enum class Mode { symbolic, evaluation };

struct PointReport {
    std::string id;
    Status status;
    Params params;
    bool equal = false;
    std::string lhs_digest, rhs_digest;
    double time_ms = 0;
    // Evaluation mode only: largest degree bounds used and grid size.
    int deg_q_bound = 0, deg_t_bound = 0;
    long eval_points = 0;
};

// Evaluates one point; lhs and rhs are built fresh.
PointReport check_point(const IdentityEntry& e, const Params& p, Mode mode = Mode::symbolic);

struct VerifyOptions {
    std::vector<std::string> ids;  // empty: all
    std::optional<int> max_k, max_n;
    Mode mode = Mode::symbolic;
    Exec exec = Exec::parallel;
    bool timing = true;  // false zeroes time_ms for byte-stable output
};

struct VerifyReport {
    Mode mode = Mode::symbolic;
    std::vector<PointReport> points;  // sorted by (id, params)
    double total_ms = 0;
    bool theorems_ok() const;
    bool all_ok() const;
};

// Throws std::out_of_range for an unknown id.
VerifyReport verify(const VerifyOptions& opt);

nlohmann::json to_json(const PointReport& p, Mode mode);
nlohmann::json to_json(const VerifyReport& r);

}  // namespace polyolab::identities
