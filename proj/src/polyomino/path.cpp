#include "polyolab/polyomino/path.hpp"

#include "polyolab/error.hpp"

#include <algorithm>
#include <cctype>

namespace polyolab::polyomino {

LatticePath::LatticePath(std::string_view steps) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        char c = steps[i];
        if (std::isspace((unsigned char)c)) continue;
        if (c == 'E' || c == 'e' || c == 'x') {
            steps_ += 'E';
            ++k_;
        } else if (c == 'N' || c == 'n' || c == 'y') {
            steps_ += 'N';
            ++n_;
        } else {
            throw ParseError(std::string("unexpected step letter '") + c + "'", i);
        }
    }
}

LatticePath LatticePath::from_heights(const std::vector<int>& heights, int n) {
    std::string w;
    int y = 0;
    for (int h : heights) {
        if (h < y || h > n) throw DomainError("height sequence must be weakly increasing within [0,n]");
        w.append(std::size_t(h - y), 'N');
        w += 'E';
        y = h;
    }
    w.append(std::size_t(n - y), 'N');
    return LatticePath(w);
}

LatticePath LatticePath::from_indents(const std::vector<int>& indents, int k) {
    std::string w;
    int x = 0;
    for (int d : indents) {
        if (d < x || d > k) throw DomainError("indentation sequence must be weakly increasing within [0,k]");
        w.append(std::size_t(d - x), 'E');
        w += 'N';
        x = d;
    }
    w.append(std::size_t(k - x), 'E');
    return LatticePath(w);
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h;
    int y = 0;
    for (char c : steps_) {
        if (c == 'N') ++y;
        else h.push_back(y);
    }
    return h;
}

std::vector<int> LatticePath::indents() const {
    std::vector<int> d;
    int x = 0;
    for (char c : steps_) {
        if (c == 'E') ++x;
        else d.push_back(x);
    }
    return d;
}

int LatticePath::area() const {
    int a = 0, y = 0;
    for (char c : steps_) {
        if (c == 'N') ++y;
        else a += y;
    }
    return a;
}

namespace {

std::vector<int> runs(const std::string& w, char letter) {
    std::vector<int> out;
    int cur = 0;
    for (char c : w) {
        if (c == letter) {
            ++cur;
        } else if (cur) {
            out.push_back(cur);
            cur = 0;
        }
    }
    if (cur) out.push_back(cur);
    return out;
}

void paths_rec(int k, int n, std::string& cur, const std::function<void(const LatticePath&)>& fn) {
    if (k == 0 && n == 0) {
        fn(LatticePath(cur));
        return;
    }
    if (k > 0) {
        cur += 'E';
        paths_rec(k - 1, n, cur, fn);
        cur.pop_back();
    }
    if (n > 0) {
        cur += 'N';
        paths_rec(k, n - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

std::vector<int> LatticePath::north_runs() const { return runs(steps_, 'N'); }
std::vector<int> LatticePath::east_runs() const { return runs(steps_, 'E'); }

LatticePath LatticePath::rotated(int shift) const {
    if (steps_.empty()) return *this;
    int L = length();
    shift = ((shift % L) + L) % L;
    return LatticePath(steps_.substr(std::size_t(shift)) + steps_.substr(0, std::size_t(shift)));
}

void for_each_path(int k, int n, const std::function<void(const LatticePath&)>& fn) {
    if (k < 0 || n < 0) throw DomainError("negative path dimensions");
    std::string cur;
    paths_rec(k, n, cur, fn);
}

std::vector<LatticePath> enum_paths(int k, int n) {
    std::vector<LatticePath> out;
    for_each_path(k, n, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

std::vector<std::vector<int>> LabelledPath::set_partition() const {
    std::vector<std::vector<int>> blocks;
    auto ind = path.indents();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i == 0 || ind[i] != ind[i - 1]) blocks.emplace_back();
        blocks.back().push_back(labels[i]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool LabelledPath::valid() const {
    int n = path.height();
    if (int(labels.size()) != n) return false;
    std::vector<int> seen(std::size_t(n) + 1, 0);
    for (int l : labels) {
        if (l < 1 || l > n || seen[std::size_t(l)]) return false;
        seen[std::size_t(l)] = 1;
    }
    auto ind = path.indents();
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (ind[i] == ind[i - 1] && labels[i] < labels[i - 1]) return false;
    return true;
}

std::string LabelledPath::to_string() const {
    std::string s = path.to_string() + ":";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
    return s;
}

void for_each_block_labelling(const std::vector<int>& blocks, const std::function<void(const std::vector<int>&)>& fn) {
    int n = 0;
    for (int b : blocks) n += b;
    std::vector<int> labels(std::size_t(n), 0);
    std::vector<char> used(std::size_t(n) + 1, 0);
    // Fill positions in order; within a block labels increase.
    std::vector<int> start;
    for (std::size_t i = 0, pos = 0; i < blocks.size(); pos += std::size_t(blocks[i]), ++i) start.push_back(int(pos));
    std::vector<int> block_of(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int j = 0; j < blocks[i]; ++j) block_of[std::size_t(start[i] + j)] = int(i);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            fn(labels);
            return;
        }
        int lo = 1;
        if (pos > 0 && block_of[std::size_t(pos)] == block_of[std::size_t(pos - 1)]) lo = labels[std::size_t(pos - 1)] + 1;
        for (int v = lo; v <= n; ++v) {
            if (used[std::size_t(v)]) continue;
            used[std::size_t(v)] = 1;
            labels[std::size_t(pos)] = v;
            rec(pos + 1);
            used[std::size_t(v)] = 0;
        }
    };
    rec(0);
}

void for_each_labelled_path(int k, int n, const std::function<void(const LabelledPath&)>& fn) {
    for_each_path(k, n, [&](const LatticePath& p) {
        // Blocks are the column groups of north steps.
        std::vector<int> blocks;
        auto ind = p.indents();
        for (std::size_t i = 0; i < ind.size(); ++i) {
            if (i == 0 || ind[i] != ind[i - 1]) blocks.push_back(0);
            ++blocks.back();
        }
        for_each_block_labelling(blocks, [&](const std::vector<int>& labels) { fn(LabelledPath{p, labels}); });
    });
}

}  // namespace polyolab::polyomino
