#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace hbt {

// Planar binary tree, stored as a node pool. Text form: "." for the empty
// tree, "(LR)" for a node with subtrees L and R.
class PlanarBinaryTree {
public:
    PlanarBinaryTree() = default;  // empty

    static PlanarBinaryTree node(const PlanarBinaryTree& l, const PlanarBinaryTree& r) {
        PlanarBinaryTree t;
        t.nodes_.push_back({-1, -1});
        t.root_ = 0;
        t.nodes_[0].left = t.graft(l);
        t.nodes_[0].right = t.graft(r);
        return t;
    }

    bool empty() const { return root_ < 0; }
    int size() const { return static_cast<int>(nodes_.size()); }
    PlanarBinaryTree left() const { return subtree(empty() ? -1 : nodes_[root_].left); }
    PlanarBinaryTree right() const { return subtree(empty() ? -1 : nodes_[root_].right); }

    std::string str() const {
        std::string s;
        write(root_, s);
        return s;
    }

    static PlanarBinaryTree parse(const std::string& s) {
        std::size_t pos = 0;
        PlanarBinaryTree t = read(s, pos);
        if (pos != s.size()) throw input_error("tree: trailing characters in \"" + s + "\"");
        return t;
    }

    friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) { return a.str() == b.str(); }

private:
    struct Node {
        int left, right;
    };

    int graft(const PlanarBinaryTree& t) {
        if (t.empty()) return -1;
        int off = static_cast<int>(nodes_.size());
        for (auto nd : t.nodes_) {
            nodes_.push_back({nd.left < 0 ? -1 : nd.left + off, nd.right < 0 ? -1 : nd.right + off});
        }
        return t.root_ + off;
    }

    PlanarBinaryTree subtree(int i) const {
        if (i < 0) return {};
        return node(subtree(nodes_[i].left), subtree(nodes_[i].right));
    }

    void write(int i, std::string& s) const {
        if (i < 0) {
            s += '.';
            return;
        }
        s += '(';
        write(nodes_[i].left, s);
        write(nodes_[i].right, s);
        s += ')';
    }

    static PlanarBinaryTree read(const std::string& s, std::size_t& pos) {
        if (pos >= s.size()) throw input_error("tree: unexpected end of \"" + s + "\"");
        if (s[pos] == '.') {
            ++pos;
            return {};
        }
        if (s[pos] != '(') throw input_error("tree: unexpected character in \"" + s + "\"");
        ++pos;
        PlanarBinaryTree l = read(s, pos);
        PlanarBinaryTree r = read(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw input_error("tree: missing ')' in \"" + s + "\"");
        ++pos;
        return node(l, r);
    }

    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace hbt
