#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polyolab::polyomino {

// North-east lattice path stored as a word over {E, N}.
class LatticePath {
public:
    LatticePath() = default;
    // Accepts E/N or x/y letters (x = east, y = north); whitespace is ignored.
    explicit LatticePath(std::string_view steps);

    static LatticePath from_heights(const std::vector<int>& heights, int n);
    static LatticePath from_indents(const std::vector<int>& indents, int k);

    const std::string& steps() const { return steps_; }
    int length() const { return int(steps_.size()); }
    int width() const { return k_; }   // number of east steps
    int height() const { return n_; }  // number of north steps
    char operator[](int i) const { return steps_[std::size_t(i)]; }

    // Heights of the east steps, left to right.
    std::vector<int> heights() const;
    // x-offsets of the north steps, bottom to top.
    std::vector<int> indents() const;
    // Cells below the path inside the k x n rectangle.
    int area() const;
    // Lengths of maximal runs of north steps, bottom to top.
    std::vector<int> north_runs() const;
    // Lengths of maximal runs of east steps, left to right.
    std::vector<int> east_runs() const;

    LatticePath rotated(int shift) const;
    std::string to_string() const { return steps_; }

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    std::string steps_;
    int k_ = 0, n_ = 0;
};

// All paths from (0,0) to (k,n), in lexicographic order of step words (E < N).
void for_each_path(int k, int n, const std::function<void(const LatticePath&)>& fn);
std::vector<LatticePath> enum_paths(int k, int n);

// A path whose north steps carry labels 1..n, increasing up each column.
struct LabelledPath {
    LatticePath path;
    std::vector<int> labels;  // label of each north step, bottom to top

    // Blocks of labels sharing a column, each sorted, blocks sorted.
    std::vector<std::vector<int>> set_partition() const;
    bool valid() const;
    std::string to_string() const;
    friend auto operator<=>(const LabelledPath&, const LabelledPath&) = default;
};

void for_each_labelled_path(int k, int n, const std::function<void(const LabelledPath&)>& fn);

// Assigns labels 1..n to consecutive blocks of the given sizes so that each
// block is increasing; calls fn for each assignment in lexicographic order.
void for_each_block_labelling(const std::vector<int>& blocks, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace polyolab::polyomino
