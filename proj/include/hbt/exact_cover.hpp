#pragma once

#include <functional>
#include <vector>

#include "errors.hpp"

namespace hbt {

// Knuth's Algorithm X on a dancing-links matrix. Every column is primary.
class ExactCover {
public:
    explicit ExactCover(int columns) : ncols_(columns) {
        // node 0 is the root; nodes 1..columns are column headers
        for (int c = 0; c <= columns; ++c) {
            nodes_.push_back({c == 0 ? columns : c - 1, c == columns ? 0 : c + 1, c, c, c, -1});
        }
        size_.assign(columns + 1, 0);
    }

    // Returns the row id.
    int add_row(const std::vector<int>& cols) {
        int row = nrows_++;
        int first = -1;
        for (int c0 : cols) {
            if (c0 < 0 || c0 >= ncols_) throw input_error("exact cover: column out of range");
            int c = c0 + 1;
            int id = static_cast<int>(nodes_.size());
            Node nd{id, id, nodes_[c].up, c, c, row};
            nodes_.push_back(nd);
            nodes_[nodes_[c].up].down = id;
            nodes_[c].up = id;
            ++size_[c];
            if (first < 0) {
                first = id;
            } else {
                nodes_[id].left = nodes_[first].left;
                nodes_[id].right = first;
                nodes_[nodes_[first].left].right = id;
                nodes_[first].left = id;
            }
        }
        return row;
    }

    // Calls visit(rows) for every exact cover; stop early when visit returns false.
    void solve(const std::function<bool(const std::vector<int>&)>& visit) {
        std::vector<int> chosen;
        search(chosen, visit);
    }

    std::size_t count() {
        std::size_t k = 0;
        solve([&](const std::vector<int>&) {
            ++k;
            return true;
        });
        return k;
    }

private:
    struct Node {
        int left, right, up, down, col, row;
    };

    void cover(int c) {
        nodes_[nodes_[c].right].left = nodes_[c].left;
        nodes_[nodes_[c].left].right = nodes_[c].right;
        for (int i = nodes_[c].down; i != c; i = nodes_[i].down)
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --size_[nodes_[j].col];
            }
    }
    void uncover(int c) {
        for (int i = nodes_[c].up; i != c; i = nodes_[i].up)
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++size_[nodes_[j].col];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        nodes_[nodes_[c].right].left = c;
        nodes_[nodes_[c].left].right = c;
    }

    bool search(std::vector<int>& chosen, const std::function<bool(const std::vector<int>&)>& visit) {
        if (nodes_[0].right == 0) return visit(chosen);
        int best = nodes_[0].right;
        for (int c = nodes_[best].right; c != 0; c = nodes_[c].right)
            if (size_[c] < size_[best]) best = c;
        if (size_[best] == 0) return true;
        cover(best);
        bool go_on = true;
        for (int r = nodes_[best].down; r != best && go_on; r = nodes_[r].down) {
            chosen.push_back(nodes_[r].row);
            for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
            go_on = search(chosen, visit);
            for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
            chosen.pop_back();
        }
        uncover(best);
        return go_on;
    }

    int ncols_;
    int nrows_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> size_;
};

}  // namespace hbt
