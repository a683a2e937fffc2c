#include <catch2/catch_amalgamated.hpp>

#include <gk/shapes.hpp>

#include <set>

using namespace gk;

TEST_CASE("partition basics", "[shapes]") {
    Partition la{4, 3, 1};
    CHECK(la.size() == 8);
    CHECK(la.length() == 3);
    CHECK(la.part(2) == 3);
    CHECK(la.part(5) == 0);
    CHECK(la.conjugate() == Partition{3, 2, 2, 1});
    CHECK(la.conjugate().conjugate() == la);
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition::parse("4,3,1") == la);
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK(la.str() == "4,3,1");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("containment and dominance", "[shapes]") {
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK(!Partition{3, 2}.contains(Partition{2, 2, 1}));
    CHECK(Partition{3, 1}.dominates(Partition{2, 2}));
    CHECK(!Partition{2, 2}.dominates(Partition{3, 1}));
    CHECK(Partition{2, 2}.dominates(Partition{2, 2}));
}

TEST_CASE("box and subpartition enumeration", "[shapes]") {
    auto box = partitions_in_box(3, 3);
    CHECK(box.size() == 20);  // C(6,3)
    // ascending enumeration order refines dominance within one size
    for (size_t i = 0; i + 1 < box.size(); ++i)
        CHECK(GradedLexLess()(box[i], box[i + 1]));
    auto sub = subpartitions(Partition{2, 1});
    CHECK(sub.size() == 5);
    CHECK(sub.front() == Partition{});
    CHECK(sub.back() == Partition{2, 1});
}

TEST_CASE("single box successors", "[shapes]") {
    auto succ = add_box_successors(Partition{2, 1}, 5);
    REQUIRE(succ.size() == 3);
    CHECK(succ[0] == std::make_pair(1, Partition{3, 1}));
    CHECK(succ[1] == std::make_pair(2, Partition{2, 2}));
    CHECK(succ[2] == std::make_pair(3, Partition{2, 1, 1}));
    CHECK(add_box_successors(Partition{2, 1}, 2).size() == 2);
}

TEST_CASE("strip successors", "[shapes]") {
    auto succ = tangle_successors(Partition{1}, 2, 2);
    std::set<Partition> got(succ.begin(), succ.end());
    std::set<Partition> want{Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}};
    CHECK(got == want);
    // (2)/(1,1) style additions in one column are rejected
    for (auto& mu : tangle_successors(Partition{}, 3, 3)) {
        CHECK((mu == Partition{} || mu == Partition{1}));
    }
    CHECK(is_tangle_step(Partition{1}, Partition{2, 1}));
    CHECK(!is_tangle_step(Partition{1}, Partition{3, 1}));   // two boxes in row 1
    CHECK(!is_tangle_step(Partition{1}, Partition{1, 1, 1}));  // one column
    CHECK(is_tangle_step(Partition{2, 1}, Partition{2, 1}));

    auto bounded = tangle_successors_within(Partition{1}, Partition{2, 1});
    std::set<Partition> got2(bounded.begin(), bounded.end());
    CHECK(got2 == want);
}

TEST_CASE("strip predecessors via successors agree", "[shapes]") {
    // cross-check the two enumerations on a small grid
    auto box = partitions_in_box(3, 3);
    for (auto& eta : box) {
        for (auto& nu : tangle_successors(eta, 3, 3)) {
            if (eta == nu) continue;
            CHECK(is_tangle_step(eta, nu));
        }
    }
}

TEST_CASE("skew shapes", "[shapes]") {
    SkewShape sh = SkewShape::parse("4,3,1/1");
    CHECK(sh.outer() == Partition{4, 3, 1});
    CHECK(sh.inner() == Partition{1});
    CHECK(sh.size() == 7);
    CHECK(sh.str() == "4,3,1/1");
    CHECK(sh.has_cell({1, 2}));
    CHECK(!sh.has_cell({1, 1}));
    CHECK(sh.cells().size() == 7);
    CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), std::invalid_argument);
    CHECK(SkewShape::parse("2").is_straight());
    CHECK(SkewShape(Partition{2}).max_column_height() == 1);
    CHECK(!SkewShape(Partition{2}).has_column_repeat());
    CHECK(SkewShape(Partition{2, 1}).has_column_repeat());
}

TEST_CASE("star concatenation", "[shapes]") {
    SkewShape sh = star_concatenate(Partition{2, 1}, Partition{2});
    CHECK(sh.outer() == Partition{4, 2, 1});
    CHECK(sh.inner() == Partition{2});
    CHECK(sh.size() == 5);
    CHECK(star_concatenate(Partition{}, Partition{2, 1}) ==
          SkewShape(Partition{2, 1}));
    CHECK(star_concatenate(Partition{2, 1}, Partition{}) ==
          SkewShape(Partition{2, 1}));
}

TEST_CASE("diagonal numbering", "[shapes]") {
    CHECK(diagonal_number({1, 1}, 2) == 2);
    CHECK(diagonal_number({2, 1}, 2) == 1);
    CHECK(diagonal_number({1, 3}, 2) == 4);
    CHECK_THROWS_AS(diagonal_number({3, 1}, 1), OutOfRange);
}

TEST_CASE("permutations", "[shapes]") {
    Permutation w({2, 4, 1, 3});
    CHECK(w.length() == 3);
    CHECK(w(2) == 4);
    CHECK(w.ascent(1));
    CHECK(!w.ascent(2));
    CHECK(w.ascent(3));
    auto word = w.reduced_word();
    CHECK((int)word.size() == w.length());
    Permutation prod = Permutation::identity(4);
    for (int i : word) prod = prod * Permutation::transposition(4, i);
    CHECK(prod == w);
    CHECK(w.extended(6) == Permutation({2, 4, 1, 3, 5, 6}));
    CHECK(Permutation::identity(3).reduced_word().empty());
}

TEST_CASE("grassmannian permutations", "[shapes]") {
    CHECK(grassmannian_permutation(Partition{2, 1}, 2) == Permutation({2, 4, 1, 3}));
    CHECK(grassmannian_permutation(Partition{2, 2}, 2) == Permutation({3, 4, 1, 2}));
    CHECK(grassmannian_permutation(Partition{}, 3) == Permutation::identity(3));

    // the diagonal-number word is reduced and composes to w(la)
    for (auto& la : partitions_in_box(2, 3)) {
        int p = 2;
        Permutation w = grassmannian_permutation(la, p);
        auto word = grassmannian_word(la, p);
        CHECK((int)word.size() == w.length());
        CHECK((int)word.size() == la.size());
        Permutation prod = Permutation::identity(w.degree());
        for (int i : word) prod = prod * Permutation::transposition(w.degree(), i);
        CHECK(prod == w);
    }
    CHECK(grassmannian_word(Partition{2, 1}, 2) == std::vector<int>{1, 3, 2});
}
