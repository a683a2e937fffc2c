/*
 * insertion.hpp
 * -------------
 * Simultaneous row insertion of a set into a row of sets, its reverse,
 * and the tableau-level versions driving the Pieri bijection
 * (S, T on la)  <->  (T' on mu with la => mu by one horizontal-and-
 * vertical-distinct strip).
 *
 * Forward: every s in S is placed (simultaneously, judged against the
 * original row) into the leftmost cell whose original entries are all
 * greater than s, or into one shared new cell at the end.  If original
 * entries greater than s sit strictly left of the insertion cell they
 * are ejected; otherwise the insertion cell's original entries are.
 *
 * Reverse: every x in S' goes into the rightmost non-special cell whose
 * original entries are all smaller than x; original entries smaller
 * than x strictly right of it are ejected, otherwise the insertion
 * cell's original entries are.  The special cell is emptied and removed.
 */
#pragma once

#include "tableau.hpp"

#include <set>

namespace gk {

struct Row {
    std::vector<std::vector<int>> cells;  // each sorted ascending, nonempty
    bool last_special = false;            // reverse input: last cell is the new one

    friend auto operator<=>(const Row&, const Row&) = default;
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) s += " ";
            for (int v : cells[i]) s += std::to_string(v);
        }
        if (last_special) s += "*";
        return s.empty() ? "-" : s;
    }
};

struct RowInsertResult {
    Row row;
    std::set<int> ejected;
};

inline RowInsertResult forward_row_insert(const std::set<int>& S, const Row& R) {
    size_t ncells = R.cells.size();
    std::vector<std::set<int>> inserted(ncells + 1);
    std::vector<std::set<int>> removed(ncells);
    bool new_cell = false;

    for (int s : S) {
        size_t target = ncells;  // the shared new cell
        for (size_t i = 0; i < ncells; ++i) {
            if (s < R.cells[i].front()) {
                target = i;
                break;
            }
        }
        if (target == ncells) new_cell = true;
        inserted[target].insert(s);
        // ejection, judged against the original row
        bool type1 = false;
        for (size_t i = 0; i < target; ++i) {
            for (int e : R.cells[i]) {
                if (e > s) {
                    removed[i].insert(e);
                    type1 = true;
                }
            }
        }
        if (!type1 && target < ncells) {
            for (int e : R.cells[target]) removed[target].insert(e);
        }
    }

    // ejected entries across cells must be pairwise distinct
    std::vector<int> all;
    for (auto& rs : removed) all.insert(all.end(), rs.begin(), rs.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("row insertion ejected a repeated value");

    RowInsertResult out;
    out.ejected.insert(all.begin(), all.end());
    for (size_t i = 0; i < ncells; ++i) {
        std::vector<int> cell;
        for (int e : R.cells[i])
            if (!removed[i].count(e)) cell.push_back(e);
        cell.insert(cell.end(), inserted[i].begin(), inserted[i].end());
        std::sort(cell.begin(), cell.end());
        if (cell.empty()) throw std::logic_error("row insertion emptied a cell");
        out.row.cells.push_back(std::move(cell));
    }
    if (new_cell)
        out.row.cells.emplace_back(inserted[ncells].begin(), inserted[ncells].end());
    out.row.last_special = new_cell;
    return out;
}

struct RowReverseResult {
    Row row;
    std::set<int> ejected;
};

inline RowReverseResult reverse_row_insert(const std::set<int>& S, const Row& R) {
    size_t ncells = R.cells.size();
    size_t regular = ncells - (R.last_special ? 1 : 0);
    std::vector<std::set<int>> inserted(ncells);
    std::vector<std::set<int>> removed(ncells);

    for (int x : S) {
        size_t target = regular;
        for (size_t i = regular; i-- > 0;) {
            if (x > R.cells[i].back()) {
                target = i;
                break;
            }
        }
        if (target == regular)
            throw std::logic_error("reverse row insertion found no admissible cell");
        inserted[target].insert(x);
        bool type1 = false;
        for (size_t i = target + 1; i < ncells; ++i) {
            for (int e : R.cells[i]) {
                if (e < x) {
                    removed[i].insert(e);
                    type1 = true;
                }
            }
        }
        if (!type1) {
            for (int e : R.cells[target]) removed[target].insert(e);
        }
    }
    if (R.last_special) {
        for (int e : R.cells.back()) removed.back().insert(e);
    }

    std::vector<int> all;
    for (auto& rs : removed) all.insert(all.end(), rs.begin(), rs.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("reverse row insertion ejected a repeated value");

    RowReverseResult out;
    out.ejected.insert(all.begin(), all.end());
    for (size_t i = 0; i < ncells; ++i) {
        std::vector<int> cell;
        for (int e : R.cells[i])
            if (!removed[i].count(e)) cell.push_back(e);
        cell.insert(cell.end(), inserted[i].begin(), inserted[i].end());
        std::sort(cell.begin(), cell.end());
        if (i + 1 == ncells && R.last_special) {
            if (!cell.empty())
                throw std::logic_error("special cell not emptied");
            continue;  // special cell is deleted
        }
        if (cell.empty()) throw std::logic_error("reverse row insertion emptied a cell");
        out.row.cells.push_back(std::move(cell));
    }
    return out;
}

inline std::vector<Row> tableau_rows(const SetValuedTableau& T) {
    std::vector<Row> rows(T.shape().outer().length());
    for (int r = 1; r <= T.shape().outer().length(); ++r)
        for (int c = 1; c <= T.shape().outer().part(r); ++c)
            rows[r - 1].cells.push_back(T.at({r, c}));
    return rows;
}

inline SetValuedTableau rows_to_tableau(const std::vector<Row>& rows, int n) {
    std::vector<int> parts;
    for (auto& r : rows) parts.push_back((int)r.cells.size());
    SetValuedTableau T(SkewShape(Partition(parts)), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].cells.size(); ++c)
            T.set({(int)r + 1, (int)c + 1}, rows[r].cells[c]);
    if (!T.valid()) throw std::logic_error("insertion produced an invalid tableau");
    return T;
}

struct TableauInsertResult {
    SetValuedTableau tableau;                  // shape mu
    std::vector<std::set<int>> ejected_trace;  // S_1, S_2, ... per row
};

// Inserts S into T (straight shape) row by row from the top.
inline TableauInsertResult tableau_insert(const std::set<int>& S,
                                          const SetValuedTableau& T) {
    if (!T.shape().is_straight())
        throw std::invalid_argument("tableau insertion needs a straight shape");
    auto rows = tableau_rows(T);
    TableauInsertResult out;
    std::set<int> cur = S;
    size_t r = 0;
    while (!cur.empty()) {
        if (r == rows.size()) rows.push_back(Row{});
        auto step = forward_row_insert(cur, rows[r]);
        rows[r] = step.row;
        rows[r].last_special = false;
        cur = step.ejected;
        out.ejected_trace.push_back(cur);
        ++r;
    }
    out.tableau = rows_to_tableau(rows, T.n());
    return out;
}

struct TableauReverseResult {
    SetValuedTableau tableau;  // shape la
    std::set<int> set;
};

// Inverse of tableau_insert: T' has shape mu with la => mu; the cells of
// mu/la are the special cells, processed bottom row first.
inline TableauReverseResult tableau_reverse_insert(const SetValuedTableau& Tp,
                                                   const Partition& la) {
    const Partition& mu = Tp.shape().outer();
    if (!Tp.shape().is_straight() || !is_tangle_step(la, mu))
        throw std::invalid_argument("shapes are not one strip apart");
    auto rows = tableau_rows(Tp);
    std::set<int> cur;
    for (int r = (int)rows.size(); r >= 1; --r) {
        rows[r - 1].last_special = mu.part(r) > la.part(r);
        auto step = reverse_row_insert(cur, rows[r - 1]);
        rows[r - 1] = step.row;
        cur = step.ejected;
    }
    while (!rows.empty() && rows.back().cells.empty()) rows.pop_back();
    TableauReverseResult out;
    out.tableau = rows_to_tableau(rows, Tp.n());
    if (out.tableau.shape().outer() != la)
        throw std::logic_error("reverse insertion did not reach the expected shape");
    out.set = cur;
    return out;
}

}  // namespace gk
