#include <catch2/catch_amalgamated.hpp>

#include <gk/insertion.hpp>

#include <map>

using namespace gk;

static Row make_row(std::vector<std::vector<int>> cells) {
    Row r;
    r.cells = std::move(cells);
    return r;
}

TEST_CASE("worked row example", "[insertion]") {
    // The two statements of this example disagree on the input; the row
    // 1, 12, 37, 7, 789, 9 with S = {1,2,4,6,7,8} is the one that produces
    // the stated output.
    Row R = make_row({{1}, {1, 2}, {3, 7}, {7}, {7, 8, 9}, {9}});
    std::set<int> S{1, 2, 4, 6, 7, 8};
    auto res = forward_row_insert(S, R);
    CHECK(res.row == make_row({{1}, {1}, {1, 2}, {4, 6, 7}, {7}, {7, 8, 9}}));
    CHECK(res.ejected == std::set<int>{2, 3, 7, 8, 9});
    CHECK(!res.row.last_special);
}

TEST_CASE("alternative reading of the worked example", "[insertion]") {
    // The variant input 1, 12, 47, 7, 789, 9 with S = {1,2,3,6,7,8} gives a
    // different (valid) result, not the stated one.
    Row R = make_row({{1}, {1, 2}, {4, 7}, {7}, {7, 8, 9}, {9}});
    std::set<int> S{1, 2, 3, 6, 7, 8};
    auto res = forward_row_insert(S, R);
    CHECK(res.row == make_row({{1}, {1}, {1, 2, 3}, {6, 7}, {7}, {7, 8, 9}}));
    CHECK(res.ejected == std::set<int>{2, 4, 7, 8, 9});
}

TEST_CASE("reverse of the worked row example", "[insertion]") {
    Row Rp = make_row({{1}, {1}, {1, 2}, {4, 6, 7}, {7}, {7, 8, 9}});
    auto res = reverse_row_insert({2, 3, 7, 8, 9}, Rp);
    CHECK(res.row == make_row({{1}, {1, 2}, {3, 7}, {7}, {7, 8, 9}, {9}}));
    CHECK(res.ejected == std::set<int>{1, 2, 4, 6, 7, 8});
}

TEST_CASE("insertion into a new cell", "[insertion]") {
    auto res = forward_row_insert({1}, make_row({{1}}));
    CHECK(res.row.cells == make_row({{1}, {1}}).cells);
    CHECK(res.row.last_special);
    CHECK(res.ejected.empty());

    auto empty = forward_row_insert({2, 3}, Row{});
    CHECK(empty.row.cells == make_row({{2, 3}}).cells);
    CHECK(empty.row.last_special);
    CHECK(empty.ejected.empty());
}

TEST_CASE("single box tableau insertion", "[insertion]") {
    SetValuedTableau T(SkewShape(Partition{1}), 3);
    T.set({1, 1}, {1});
    auto res = tableau_insert({1}, T);
    CHECK(res.tableau.shape().outer() == Partition{2});
    CHECK(res.tableau.at({1, 1}) == std::vector<int>{1});
    CHECK(res.tableau.at({1, 2}) == std::vector<int>{1});

    auto back = tableau_reverse_insert(res.tableau, Partition{1});
    CHECK(back.set == std::set<int>{1});
    CHECK(back.tableau == T);
}

static std::vector<std::set<int>> all_subsets(int n) {
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i + 1);
        out.push_back(s);
    }
    return out;
}

static std::multiset<int> entry_multiset(const SetValuedTableau& T) {
    std::multiset<int> out;
    auto cnt = T.content();
    for (int v = 1; v <= T.n(); ++v)
        for (int k = 0; k < cnt[v - 1]; ++k) out.insert(v);
    return out;
}

TEST_CASE("forward then reverse is the identity", "[insertion]") {
    for (int n : {2, 3}) {
        for (auto& la : partitions_in_box(2, 2)) {
            for (auto& T : enumerate_svt(SkewShape(la), n)) {
                for (auto& S : all_subsets(n)) {
                    auto fwd = tableau_insert(S, T);
                    const Partition& mu = fwd.tableau.shape().outer();
                    REQUIRE(is_tangle_step(la, mu));
                    REQUIRE(fwd.tableau.valid());
                    // entries are preserved as a multiset
                    std::multiset<int> want = entry_multiset(T);
                    want.insert(S.begin(), S.end());
                    REQUIRE(entry_multiset(fwd.tableau) == want);
                    auto back = tableau_reverse_insert(fwd.tableau, la);
                    REQUIRE(back.set == S);
                    REQUIRE(back.tableau == T);
                }
            }
        }
    }
}

TEST_CASE("reverse then forward is the identity", "[insertion]") {
    for (int n : {2, 3}) {
        for (auto& la : partitions_in_box(2, 2)) {
            long images = 0;
            for (auto& mu : tangle_successors(la, n, 3)) {
                for (auto& Tp : enumerate_svt(SkewShape(mu), n)) {
                    auto back = tableau_reverse_insert(Tp, la);
                    REQUIRE(back.tableau.shape().outer() == la);
                    auto fwd = tableau_insert(back.set, back.tableau);
                    REQUIRE(fwd.tableau == Tp);
                    ++images;
                }
            }
            // the correspondence is a bijection: image count matches
            long pairs = (long)enumerate_svt(SkewShape(la), n).size() * (1l << n);
            CHECK(images == pairs);
        }
    }
}

TEST_CASE("insertion into the empty tableau", "[insertion]") {
    SetValuedTableau empty(SkewShape(Partition{}), 3);
    auto res = tableau_insert({1, 3}, empty);
    CHECK(res.tableau.shape().outer() == Partition{1});
    CHECK(res.tableau.at({1, 1}) == std::vector<int>{1, 3});
    auto back = tableau_reverse_insert(res.tableau, Partition{});
    CHECK(back.set == std::set<int>{1, 3});
    CHECK(back.tableau.shape().outer() == Partition{});
}
