#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hibi;

TEST(Json, LatticeRoundTrip) {
    for (auto& L : fixtures::census(8)) {
        auto back = lattice_from_json(json::parse(lattice_to_json(L).dump()));
        EXPECT_TRUE(back.same_order(L));
        EXPECT_EQ(back.labels(), L.labels());
        EXPECT_EQ(lattice_hash(back), lattice_hash(L));
    }
}

TEST(Json, ElementRoundTrip) {
    auto L = fixtures::free3();
    HibiIdeal I(L);
    for (auto& t : typed_generators(I)) {
        json j = json::parse(typed_to_json(t).dump());
        auto e = make_element(I.schreyer(), element_from_json(j.at("terms")).terms);
        EXPECT_TRUE(same_element(e, t.element));
        EXPECT_EQ(j.at("kind").get<std::string>(), std::string(to_string(t.kind)));
    }
}

TEST(Json, HashIgnoresLabelling) {
    EXPECT_EQ(lattice_hash(grid(1, 2)), lattice_hash(grid(2, 1)));
    EXPECT_EQ(lattice_hash(fixtures::labelled_grid23()), lattice_hash(grid(2, 3)));
    EXPECT_NE(lattice_hash(grid(1, 3)), lattice_hash(grid(2, 1)));
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(lattice_from_json(json::parse(R"({"elements": ["a"]})")), Error);
    EXPECT_THROW(lattice_from_json(json::parse(R"({"elements": ["a","b"], "covers": [[0]]})")), Error);
    EXPECT_THROW(read_lattice("/nonexistent/lattice.json"), Error);
    auto path = std::filesystem::temp_directory_path() / "hibi_bad.json";
    std::ofstream(path) << "{ not json";
    EXPECT_THROW(read_lattice(path.string()), Error);
}

TEST(Json, DataFiles) {
    const std::string dir = HIBI_DATA_DIR;
    EXPECT_TRUE(read_lattice(dir + "/stacked_diamonds.json").same_order(fixtures::fig_d()));
    EXPECT_TRUE(read_lattice(dir + "/two_diamonds.json").same_order(fixtures::fig_ex()));
    EXPECT_TRUE(read_lattice(dir + "/bridged_diamonds.json").same_order(fixtures::fig_pic()));
    EXPECT_EQ(read_lattice(dir + "/boolean3.json").size(), 8);
    EXPECT_THROW(read_lattice(dir + "/pentagon.json"), Error);
}

TEST(Json, RowsSerialize) {
    auto L = grid(1, 2);
    HibiIdeal I(L);
    json j = rows_to_json(graded_betti_oracle(I, 4));
    EXPECT_EQ(j[0]["minimal_generators"], 2);
    EXPECT_EQ(j[1]["degree"], 4);
}
