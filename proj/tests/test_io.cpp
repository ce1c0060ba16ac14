#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "assoc/algebra.hpp"
#include "assoc/error.hpp"
#include "assoc/io.hpp"
#include "support/testing.hpp"

using namespace assoc;
using namespace assoc::testing;

namespace {

AssocArray table_from(const std::string& csv) {
    std::istringstream in(csv);
    return read_table(in);
}

AssocArray triples_from(const std::string& text) {
    std::istringstream in(text);
    return read_triples(in);
}

std::string triples_text(const AssocArray& a) {
    std::ostringstream out;
    write_triples(a, out);
    return out.str();
}

std::string dot_text(const AssocArray& a) {
    std::ostringstream out;
    export_dot(a, out);
    return out.str();
}

}  // namespace

TEST(ReadTable, SongTable) {
    const AssocArray a = table_from(songs_csv());
    EXPECT_EQ(a.nnz(), 16u);
    EXPECT_EQ(a.get("082812ktnA1", "Genre"), Value("Pop"));
    EXPECT_EQ(a.get("063012ktnA1", "Date"), Value("2010-06-30"));
    EXPECT_TRUE(a.get("053013ktnA2", "Duration")->is_text());
    EXPECT_EQ(a, songs_array());
}

TEST(ReadTable, SongFileOnDisk) {
    EXPECT_EQ(read_table_file(std::string(ASSOC_TEST_DATA_DIR) + "/songs.csv"), songs_array());
}

TEST(ReadTable, HeaderOnly) { EXPECT_TRUE(table_from("A,x,y\n").empty()); }

TEST(ReadTable, NumbersAndQuoting) {
    const AssocArray a = table_from("id,n,t,q\r\nr1,42,\"a,b\",\"say \"\"hi\"\"\"\r\nr2,-1.5e2,,0\r\n");
    EXPECT_EQ(a.get("r1", "n"), Value(42));
    EXPECT_EQ(a.get("r1", "t"), Value("a,b"));
    EXPECT_EQ(a.get("r1", "q"), Value("say \"hi\""));
    EXPECT_EQ(a.get("r2", "n"), Value(-150));
    EXPECT_FALSE(a.get("r2", "t").has_value());
    EXPECT_FALSE(a.get("r2", "q").has_value());  // numeric zero is empty
    EXPECT_EQ(a.nnz(), 4u);
}

TEST(ReadTable, Errors) {
    EXPECT_THROW(table_from(""), ParseError);
    EXPECT_THROW(table_from("A,x\nr1,1,2\n"), ParseError);
    EXPECT_THROW(table_from("A,x\nr1\n"), ParseError);
    EXPECT_THROW(table_from("A,x,x\nr1,1,2\n"), ParseError);
    EXPECT_THROW(table_from("A,x\nr1,1\nr1,2\n"), ParseError);
    EXPECT_THROW(table_from("A,x\n,1\n"), ParseError);
    EXPECT_THROW(table_from("A,x\nr1,\"open\n"), ParseError);
    EXPECT_THROW(table_from("A,x\nr1,\"multi\nline\"\n"), ParseError);
    try {
        table_from("A,x\nr1,1\nr2,1,2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ReadTriples, Examples) {
    EXPECT_TRUE(triples_from("%aa-triples 1\n").empty());
    EXPECT_EQ(triples_from("%aa-triples 1\nr\tc\tn\t2\nr\tc\tn\t5\n"), AssocArray::from_entries({{"r", "c", 5}}));
    EXPECT_EQ(triples_from("%aa-triples 1\nr\tc\tt\tRock\nr\tc\tn\t5\n"), AssocArray::from_entries({{"r", "c", "Rock"}}));
    EXPECT_EQ(triples_from("%aa-triples 1\nr\tc\tt\t3:07"), AssocArray::from_entries({{"r", "c", "3:07"}}));
}

TEST(ReadTriples, Errors) {
    EXPECT_THROW(triples_from(""), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 2\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\nr\tc\tn\tabc\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\nr\tc\tq\t1\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\nr\tc\tx\t\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\nr\tc\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\n\tc\tn\t1\n"), ParseError);
    EXPECT_THROW(triples_from("%aa-triples 1\n\n"), ParseError);
    try {
        triples_from("%aa-triples 1\nr\tc\tn\t1\nr\tc\tn\tz\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(WriteTriples, Examples) {
    std::ostringstream out;
    EXPECT_EQ(write_triples(AssocArray(), out), 14u);
    EXPECT_EQ(out.str(), "%aa-triples 1\n");

    const AssocArray a = songs_array();
    EXPECT_EQ(triples_text(a), triples_text(a));
    EXPECT_EQ(triples_from(triples_text(a)), a);

    EXPECT_EQ(triples_text(AssocArray::from_entries({{"r", "c", 0.1}, {"r", "d", 2}, {"s", "c", "2"}})),
              "%aa-triples 1\nr\tc\tn\t0.1\nr\td\tn\t2\ns\tc\tt\t2\n");
}

TEST(WriteTriples, FailingSink) {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_THROW(write_triples(songs_array(), out), IoError);
}

TEST(IoProperties, RoundTrips) {
    Rng rng(91);
    const auto pool = key_pool(6);
    std::uniform_real_distribution<double> real(-1e3, 1e3);
    for (int trial = 0; trial < 300; ++trial) {
        const AssocArray a = random_array(rng, random_subset(rng, pool, 6), random_subset(rng, pool, 6), 0.5,
                                          [&](Rng& r) { return coin(r, 0.3) ? Value(real(r)) : mixed_value(r); });
        const std::string text = triples_text(a);
        EXPECT_EQ(triples_from(text), a);
        EXPECT_EQ(triples_text(triples_from(text)), text);
    }
}

TEST(ExportDot, Examples) {
    EXPECT_EQ(dot_text(AssocArray()), "digraph aa {\n}\n");
    const std::string g = dot_text(logical(to_array(genre_artist_counts())));
    EXPECT_EQ(g, dot_text(logical(to_array(genre_artist_counts()))));
    std::istringstream lines(g);
    std::string line;
    int nodes = 0, edges = 0;
    while (std::getline(lines, line)) {
        if (line.find("->") != std::string::npos) ++edges;
        else if (line.ends_with(";")) ++nodes;
    }
    EXPECT_EQ(nodes, 6);
    EXPECT_EQ(edges, 4);
}

TEST(ExportDot, EscapesQuotes) {
    EXPECT_EQ(dot_text(AssocArray::from_entries({{"a\"b", "c\\d", "x\"y"}})),
              "digraph aa {\n  \"a\\\"b\";\n  \"c\\\\d\";\n  \"a\\\"b\" -> \"c\\\\d\" [label=\"x\\\"y\"];\n}\n");
}
