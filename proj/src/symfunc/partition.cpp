#include "polyolab/symfunc/partition.hpp"

#include "polyolab/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace polyolab::symfunc {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw DomainError("negative part in partition");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    parts_ = std::move(parts);
    for (int p : parts_) weight_ += p;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : std::size_t(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[std::size_t(j)];
    return Partition(std::move(c));
}

int Partition::n() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts_[std::size_t(i)];
    return s;
}

int Partition::multiplicity(int i) const { return int(std::count(parts_.begin(), parts_.end(), i)); }

int Partition::leg(int i, int j) const {
    int l = 0;
    for (int r = i + 1; r < length() && parts_[std::size_t(r)] > j; ++r) ++l;
    return l;
}

namespace {

std::vector<int> parse_list(std::string_view text, char open, char close, const char* what) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != open) throw ParseError(std::string("expected '") + open + "' in " + what, i);
    ++i;
    skip();
    if (i < text.size() && text[i] == close) {
        ++i;
    } else {
        while (true) {
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (start == i) throw ParseError(std::string("expected integer in ") + what, i);
            out.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == close) {
                ++i;
                break;
            }
            throw ParseError(std::string("expected ',' or '") + close + "' in " + what, i);
        }
    }
    skip();
    if (i != text.size()) throw ParseError(std::string("trailing input after ") + what, i);
    return out;
}

std::string join(const std::vector<int>& v, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += close;
    return s;
}

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::string Partition::to_string() const { return join(parts_, '[', ']'); }

Partition Partition::parse(std::string_view text) {
    auto v = parse_list(text, '[', ']', "partition");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) throw ParseError("partition parts must be positive", 0);
        if (i && v[i] > v[i - 1]) throw ParseError("partition parts must be weakly decreasing", 0);
    }
    return Partition(std::move(v));
}

const std::vector<Partition>& partitions(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    if (n < 0) throw DomainError("partitions of a negative integer");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<Partition>>();
        std::vector<int> cur;
        gen_partitions(n, n, cur, *slot);
    }
    return *slot;
}

std::vector<Partition> partitions(int n, int r) {
    std::vector<Partition> out;
    for (const auto& p : partitions(n))
        if (p.length() == r) out.push_back(p);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw DomainError("dominance between partitions of different weight");
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

BigInt zmu(const Partition& mu) {
    BigInt z = 1;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        long m = long(j - i);
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)p[i], (unsigned long)m);
        z *= pw * algebra::factorial(m);
        i = j;
    }
    return z;
}

int sign(const Partition& mu) { return (mu.size() - mu.length()) % 2 ? -1 : 1; }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("composition parts must be positive");
}

int Composition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Composition Composition::tail() const {
    if (parts_.empty()) throw DomainError("tail of the empty composition");
    return Composition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Composition::to_string() const { return join(parts_, '(', ')'); }

Composition Composition::parse(std::string_view text) {
    auto v = parse_list(text, '(', ')', "composition");
    for (int p : v)
        if (p <= 0) throw ParseError("composition parts must be positive", 0);
    return Composition(std::move(v));
}

std::vector<Composition> compositions(int n, int r) {
    std::vector<Composition> out;
    if (n < 0 || r < 0) return out;
    if (r == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 1) {
            cur.push_back(left);
            out.emplace_back(cur);
            cur.pop_back();
            return;
        }
        for (int p = 1; p <= left - (slots - 1); ++p) {
            cur.push_back(p);
            rec(left - p, slots - 1);
            cur.pop_back();
        }
    };
    if (n >= r) rec(n, r);
    return out;
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) out.emplace_back();
    for (int r = 1; r <= n; ++r)
        for (auto& c : compositions(n, r)) out.push_back(std::move(c));
    return out;
}

BigInt multinomial(const std::vector<int>& parts) {
    long n = 0;
    for (int p : parts) n += p;
    BigInt r = algebra::factorial(n);
    for (int p : parts) r /= algebra::factorial(p);
    return r;
}

}  // namespace polyolab::symfunc
