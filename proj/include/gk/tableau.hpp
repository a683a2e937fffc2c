/*
 * tableau.hpp
 * -----------
 * Set-valued tableaux on skew shapes.  A filling assigns each cell a
 * nonempty set of entries from {1..n}; rows are weakly and columns
 * strictly increasing in the sense max(left) <= min(right) and
 * max(above) < min(below).  The column word lists entries column by
 * column from the right, top to bottom within a column and each cell's
 * set in decreasing order.
 */
#pragma once

#include "shapes.hpp"

#include <cstdint>
#include <map>

namespace gk {

struct ShapeTooTall : std::runtime_error {
    ShapeTooTall() : std::runtime_error("a column is taller than the entry bound") {}
};

class SetValuedTableau {
public:
    SetValuedTableau() = default;
    SetValuedTableau(SkewShape shape, int n) : shape_(std::move(shape)), n_(n) {}

    const SkewShape& shape() const { return shape_; }
    int n() const { return n_; }
    const std::vector<int>& at(Cell c) const { return entries_.at(c); }
    bool has_entries(Cell c) const { return entries_.count(c) > 0; }
    void set(Cell c, std::vector<int> vals) {
        if (!shape_.has_cell(c)) throw std::invalid_argument("cell outside shape");
        std::sort(vals.begin(), vals.end());
        entries_[c] = std::move(vals);
    }

    int total_entries() const {
        int s = 0;
        for (auto& [c, v] : entries_) s += (int)v.size();
        return s;
    }
    int excess() const { return total_entries() - shape_.size(); }

    // multiplicity of each value 1..n among all entries
    std::vector<int> content() const {
        std::vector<int> cnt(n_, 0);
        for (auto& [c, v] : entries_)
            for (int x : v) cnt.at(x - 1)++;
        return cnt;
    }

    bool valid() const {
        for (Cell c : shape_.cells()) {
            auto it = entries_.find(c);
            if (it == entries_.end() || it->second.empty()) return false;
            for (int x : it->second)
                if (x < 1 || x > n_) return false;
            Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
            if (shape_.has_cell(left) && entries_.count(left) &&
                entries_.at(left).back() > it->second.front())
                return false;
            if (shape_.has_cell(up) && entries_.count(up) &&
                entries_.at(up).back() >= it->second.front())
                return false;
        }
        return true;
    }

    // entries ordered by: column descending, then row ascending, then value
    // descending inside one cell
    std::vector<int> column_word() const {
        std::vector<int> word;
        int maxcol = shape_.outer().empty() ? 0 : shape_.outer().part(1);
        for (int j = maxcol; j >= 1; --j) {
            for (int r = 1; r <= shape_.outer().length(); ++r) {
                Cell c{r, j};
                if (!shape_.has_cell(c)) continue;
                auto it = entries_.find(c);
                if (it == entries_.end()) continue;
                for (auto v = it->second.rbegin(); v != it->second.rend(); ++v)
                    word.push_back(*v);
            }
        }
        return word;
    }

    // cells with their entries in the same order as column_word
    std::vector<std::pair<int, Cell>> ordered_entries() const {
        std::vector<std::pair<int, Cell>> out;
        int maxcol = shape_.outer().empty() ? 0 : shape_.outer().part(1);
        for (int j = maxcol; j >= 1; --j) {
            for (int r = 1; r <= shape_.outer().length(); ++r) {
                Cell c{r, j};
                if (!shape_.has_cell(c)) continue;
                auto it = entries_.find(c);
                if (it == entries_.end()) continue;
                for (auto v = it->second.rbegin(); v != it->second.rend(); ++v)
                    out.emplace_back(*v, c);
            }
        }
        return out;
    }

    friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

    std::string str() const {
        std::string s;
        for (int r = 1; r <= shape_.outer().length(); ++r) {
            if (r > 1) s += " | ";
            for (int c = 1; c <= shape_.outer().part(r); ++c) {
                if (c > 1) s += " ";
                if (!shape_.has_cell({r, c})) {
                    s += ".";
                    continue;
                }
                auto it = entries_.find({r, c});
                if (it == entries_.end()) {
                    s += "?";
                    continue;
                }
                for (int v : it->second) s += std::to_string(v);
            }
        }
        return s;
    }

private:
    SkewShape shape_;
    int n_ = 0;
    std::map<Cell, std::vector<int>> entries_;
};

// Enumerates all valid fillings in a fixed order (row-major over cells,
// candidate sets by increasing bitmask over {1..n}).  max_total_entries < 0
// means unbounded; the theoretical bound n * #cells always applies.
inline void for_each_svt(const SkewShape& shape, int n, int max_total_entries,
                         const std::function<void(const SetValuedTableau&)>& fn) {
    if (n > 62) throw std::invalid_argument("entry bound too large");
    if (shape.max_column_height() > n) return;  // no strictly increasing column fits
    auto cells = shape.cells();
    SetValuedTableau T(shape, n);
    int used = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            fn(T);
            return;
        }
        Cell c = cells[idx];
        int lo = 1;
        Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
        if (shape.has_cell(left)) lo = std::max(lo, T.at(left).back());
        if (shape.has_cell(up)) lo = std::max(lo, T.at(up).back() + 1);
        if (lo > n) return;
        std::uint64_t full = (n >= 63) ? ~0ull : ((1ull << n) - 1);
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
            int minval = 1 + __builtin_ctzll(mask);
            if (minval < lo) continue;
            std::vector<int> vals;
            for (int v = minval; v <= n; ++v)
                if (mask & (1ull << (v - 1))) vals.push_back(v);
            if (max_total_entries >= 0 &&
                used + (int)vals.size() + (int)(cells.size() - idx - 1) > max_total_entries)
                continue;
            T.set(c, vals);
            used += (int)vals.size();
            rec(idx + 1);
            used -= (int)vals.size();
        }
    };
    rec(0);
}

inline std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape, int n,
                                                   int max_total_entries = -1) {
    std::vector<SetValuedTableau> out;
    for_each_svt(shape, n, max_total_entries,
                 [&](const SetValuedTableau& T) { out.push_back(T); });
    return out;
}

inline bool is_lattice_word(const std::vector<int>& word, int n) {
    std::vector<int> cnt(n + 1, 0);
    for (int x : word) {
        cnt.at(x)++;
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
    }
    return true;
}

// Replays a word as single box additions: letter r adds a box in row r of
// the running partition starting from mu.  True iff every intermediate
// step is a partition and the final shape is nu.
inline bool fits_sequence(const std::vector<int>& word, const Partition& mu,
                          const Partition& nu) {
    Partition cur = mu;
    for (int r : word) {
        if (r < 1 || !cur.addable({r, cur.part(r) + 1})) return false;
        cur = cur.with_box(r);
    }
    return cur == nu;
}

}  // namespace gk
