/*
 * shapes.hpp
 * ----------
 * Partitions, skew shapes, cells and permutations, together with the
 * combinatorial moves used by the polynomial constructions: single box
 * additions, the "add at most one box per row, rows and columns all
 * distinct" successor relation, and Grassmannian permutations read off
 * a diagonal numbering with offset p.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend auto operator<=>(const Cell&, const Cell&) = default;
    int content() const { return col - row; }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("not a partition");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::string trimmed;
        for (char c : s)
            if (!isspace((unsigned char)c)) trimmed += c;
        if (trimmed.empty() || trimmed == "0") return Partition();
        std::stringstream ss(trimmed);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        return Partition(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const {
        std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[j];
        return Partition(out);
    }
    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }
    bool dominates(const Partition& mu) const {  // same size assumed by callers
        int s1 = 0, s2 = 0;
        int rows = std::max(length(), mu.length());
        for (int i = 1; i <= rows; ++i) {
            s1 += part(i);
            s2 += mu.part(i);
            if (s1 < s2) return false;
        }
        return true;
    }
    bool has_cell(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }
    // corner where a box may be added, i.e. result is still a partition
    bool addable(Cell c) const {
        return c.row >= 1 && c.col == part(c.row) + 1 &&
               (c.row == 1 || part(c.row - 1) >= c.col);
    }
    bool removable(Cell c) const {
        return has_cell(c) && c.col == part(c.row) && part(c.row + 1) < c.col;
    }
    Partition with_box(int row) const {
        std::vector<int> p = parts_;
        if (row == length() + 1)
            p.push_back(1);
        else
            ++p.at(row - 1);
        return Partition(p);
    }
    Partition without_box(int row) const {
        std::vector<int> p = parts_;
        --p.at(row - 1);
        return Partition(p);
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string str() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

// Enumeration order used throughout: smaller size first, then lexicographic
// on the part vectors.  Within one size this refines dominance upward.
struct GradedLexLess {
    bool operator()(const Partition& p, const Partition& q) const {
        if (p.size() != q.size()) return p.size() < q.size();
        return p.parts() < q.parts();
    }
};

inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxp) {
        out.push_back(Partition(cur));
        if (row > rows) return;
        for (int p = 1; p <= maxp; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return GradedLexLess()(a, b);
    });
    return out;
}

inline std::vector<Partition> subpartitions(const Partition& nu) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        out.push_back(Partition(cur));
        if (row > nu.length()) return;
        int cap = std::min(prev, nu.part(row));
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, nu.empty() ? 0 : nu.part(1));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return GradedLexLess()(a, b);
    });
    return out;
}

// mu obtained from la by one box in row r; returns the rows usable next
inline std::vector<std::pair<int, Partition>> add_box_successors(const Partition& la,
                                                                 int rows_cap) {
    std::vector<std::pair<int, Partition>> out;
    for (int r = 1; r <= std::min(rows_cap, la.length() + 1); ++r)
        if (la.addable({r, la.part(r) + 1})) out.emplace_back(r, la.with_box(r));
    return out;
}

// All mu >= la with mu/la having at most one box per row and all added
// boxes in distinct columns (la itself included).  Results are bounded by
// rows_cap rows and cols_cap columns and sorted in the enumeration order.
inline std::vector<Partition> tangle_successors(const Partition& la, int rows_cap,
                                                int cols_cap) {
    std::vector<Partition> out;
    int rows = std::min(rows_cap, la.length() + 1);
    std::vector<int> cur(la.parts());
    cur.resize(std::max<size_t>(cur.size(), rows), 0);
    std::function<void(int)> rec = [&](int row) {
        if (row > rows) {
            std::vector<int> p(cur.begin(), cur.begin() + rows);
            out.push_back(Partition(p));
            return;
        }
        rec(row + 1);  // no box in this row
        int newcol = la.part(row) + 1;
        bool col_clash = false;
        for (int r = 1; r < row; ++r)
            if (cur[r - 1] == la.part(r) + 1 && la.part(r) + 1 == newcol) col_clash = true;
        if (newcol <= cols_cap && !col_clash &&
            (row == 1 || cur[row - 2] >= newcol)) {
            cur[row - 1] = newcol;
            rec(row + 1);
            cur[row - 1] = la.part(row);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return GradedLexLess()(a, b);
    });
    return out;
}

inline std::vector<Partition> tangle_successors_within(const Partition& la,
                                                       const Partition& bound) {
    auto all = tangle_successors(la, bound.length(), bound.empty() ? 0 : bound.part(1));
    std::vector<Partition> out;
    for (auto& mu : all)
        if (bound.contains(mu)) out.push_back(mu);
    return out;
}

inline bool is_tangle_step(const Partition& la, const Partition& mu) {
    if (!mu.contains(la)) return false;
    std::vector<int> cols;
    for (int r = 1; r <= mu.length(); ++r) {
        int d = mu.part(r) - la.part(r);
        if (d > 1) return false;
        if (d == 1) cols.push_back(mu.part(r));
    }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("inner shape not contained in outer shape");
    }
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    // "4,3,1/1" or plain "4,3,1"
    static SkewShape parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return SkewShape(Partition::parse(s));
        return SkewShape(Partition::parse(s.substr(0, slash)),
                         Partition::parse(s.substr(slash + 1)));
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool is_straight() const { return inner_.empty(); }
    int size() const { return outer_.size() - inner_.size(); }
    bool has_cell(Cell c) const {
        return outer_.has_cell(c) && !inner_.has_cell(c);
    }
    std::vector<Cell> cells() const {  // row-major
        std::vector<Cell> out;
        for (int r = 1; r <= outer_.length(); ++r)
            for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c)
                out.push_back({r, c});
        return out;
    }
    int max_column_height() const {
        int best = 0;
        Partition oc = outer_.conjugate(), ic = inner_.conjugate();
        for (int j = 1; j <= oc.length(); ++j)
            best = std::max(best, oc.part(j) - ic.part(j));
        return best;
    }
    bool has_column_repeat() const {  // two cells in one column
        return max_column_height() > 1;
    }
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
    std::string str() const {
        if (inner_.empty()) return outer_.str();
        return outer_.str() + "/" + inner_.str();
    }

private:
    Partition outer_, inner_;
};

// la * mu: mu shifted to sit above-right of la, meeting at one corner
inline SkewShape star_concatenate(const Partition& la, const Partition& mu) {
    int s = mu.length();
    int shift = la.empty() ? 0 : la.part(1);
    std::vector<int> outer, inner;
    for (int i = 1; i <= s; ++i) {
        outer.push_back(mu.part(i) + shift);
        inner.push_back(shift);
    }
    for (int p : la.parts()) outer.push_back(p);
    return SkewShape(Partition(outer), Partition(inner));
}

struct OutOfRange : std::runtime_error {
    OutOfRange() : std::runtime_error("diagonal number out of range") {}
};

inline int diagonal_number(Cell c, int p) {
    int d = p + c.col - c.row;
    if (d < 1) throw OutOfRange();
    return d;
}

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<int> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 1 || v > (int)img_.size() || seen[v - 1]++)
                throw std::invalid_argument("not a permutation");
        }
    }
    static Permutation identity(int m) {
        std::vector<int> v(m);
        for (int i = 0; i < m; ++i) v[i] = i + 1;
        return Permutation(v);
    }
    static Permutation transposition(int m, int i) {  // s_i in S_m
        auto p = identity(m);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    int degree() const { return (int)img_.size(); }
    int operator()(int i) const { return img_.at(i - 1); }
    const std::vector<int>& images() const { return img_; }

    Permutation extended(int m) const {  // embed into S_m, m >= degree
        std::vector<int> v = img_;
        for (int i = degree() + 1; i <= m; ++i) v.push_back(i);
        return Permutation(v);
    }

    // w * s_i: swap positions i, i+1 of the one-line notation
    Permutation right_mult_s(int i) const {
        std::vector<int> v = img_;
        std::swap(v.at(i - 1), v.at(i));
        return Permutation(v);
    }
    bool ascent(int i) const { return img_.at(i - 1) < img_.at(i); }

    int length() const {
        int inv = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    // word i_1 ... i_l with w = s_{i_1} ... s_{i_l} (functions composed so
    // that the rightmost factor acts first)
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 1; i < w.degree(); ++i) {
                if (!w.ascent(i)) {  // descent: peel s_i off the right
                    word.push_back(i);
                    w = w.right_mult_s(i);
                    progress = true;
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        if (u.degree() != v.degree())
            throw std::invalid_argument("degree mismatch");
        std::vector<int> out(u.degree());
        for (int i = 1; i <= u.degree(); ++i) out[i - 1] = u(v(i));
        return Permutation(out);
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(img_[i]);
        }
        return s;
    }

private:
    std::vector<int> img_;
};

// Grassmannian permutation w with unique descent at p: w(i) = i + la_{p+1-i}
// for i <= p and w(i) = i - la'_{i-p} above, acting on p + la_1 points.
inline Permutation grassmannian_permutation(const Partition& la, int p) {
    if (la.length() > p) throw std::invalid_argument("partition has more than p rows");
    int m = p + (la.empty() ? 0 : la.part(1));
    Partition conj = la.conjugate();
    std::vector<int> img(m);
    for (int i = 1; i <= p; ++i) img[i - 1] = i + la.part(p + 1 - i);
    for (int i = p + 1; i <= m; ++i) img[i - 1] = i - conj.part(i - p);
    return Permutation(img);
}

// Reduced word for w(la): diagonal numbers of the cells, rows read bottom
// to top and each row right to left.
inline std::vector<int> grassmannian_word(const Partition& la, int p) {
    std::vector<int> word;
    for (int r = la.length(); r >= 1; --r)
        for (int c = la.part(r); c >= 1; --c) word.push_back(diagonal_number({r, c}, p));
    return word;
}

}  // namespace gk
