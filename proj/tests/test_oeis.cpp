#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "seqlab/errors.hpp"
#include "seqlab/oeis.hpp"

using namespace seqlab;
namespace fs = std::filesystem;

static const std::string kDataDir = SEQLAB_DEFAULT_DATA_DIR;

TEST_CASE("b-file parsing") {
    auto s = oeis::parse_bfile("1 1\n2 2\n3 4\n");
    CHECK(s.offset == 1);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[2] == 4);

    auto c = oeis::parse_bfile("# comment\n\n5 10\n6 -11\n");
    CHECK(c.offset == 5);
    CHECK(c.terms[1] == -11);

    CHECK_THROWS_AS(oeis::parse_bfile("1 1\n3 2\n"), parse_error);   // gap
    CHECK_THROWS_AS(oeis::parse_bfile("1 1\n2 x\n"), parse_error);   // bad integer
    CHECK_THROWS_AS(oeis::parse_bfile("1 1 7\n"), parse_error);      // extra column
    CHECK_THROWS_AS(oeis::parse_bfile("# only comments\n"), parse_error);
}

TEST_CASE("serialize round-trips canonical text") {
    std::string canonical = "0 3\n1 141592\n2 -65\n";
    CHECK(oeis::serialize_bfile(oeis::parse_bfile(canonical)) == canonical);
}

TEST_CASE("compare") {
    auto a = oeis::parse_bfile("1 1\n2 2\n3 4\n4 6\n");
    auto b = oeis::parse_bfile("2 2\n3 4\n4 6\n5 3\n");
    auto rep = oeis::compare(a, b);
    CHECK(rep.match);
    CHECK(rep.overlap == 3);

    auto corrupted = oeis::parse_bfile("1 1\n2 2\n3 5\n4 6\n");
    auto rep2 = oeis::compare(a, corrupted);
    CHECK(!rep2.match);
    CHECK(rep2.mismatch_index == 3);
    CHECK(rep2.lhs == 4);
    CHECK(rep2.rhs == 5);
    auto rep3 = oeis::compare(corrupted, a);  // symmetric detection
    CHECK(rep3.mismatch_index == 3);

    auto far = oeis::parse_bfile("10 1\n11 2\n");
    CHECK_THROWS_AS(oeis::compare(a, far), std::invalid_argument);
}

TEST_CASE("bundled fixture matches the published opening terms") {
    auto s = oeis::load_fixture("A064413", kDataDir);
    REQUIRE(s.terms.size() >= 18);
    const long expect[18] = {1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15, 18, 14, 7, 21, 24, 16, 20};
    for (int i = 0; i < 18; ++i) CHECK(s.at(i + 1) == expect[i]);

    CHECK_THROWS(oeis::load_fixture("A999999", kDataDir));
}

TEST_CASE("offline fetch resolution: cache, fixtures, then failure") {
    fs::path tmp = fs::temp_directory_path() / "seqlab-cache-test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    oeis::FetchOptions opts;
    opts.online = false;
    opts.cache_dir = tmp.string();
    opts.data_dir = kDataDir;

    // bundled fixture is found without network
    auto s = oeis::fetch_bfile("A064413", opts);
    CHECK(s.terms.size() >= 1000);

    // a primed cache takes precedence and needs no fixture
    {
        std::ofstream out(tmp / "b999998.txt");
        out << "1 42\n2 43\n";
    }
    auto cached = oeis::fetch_bfile("A999998", opts);
    CHECK(cached.terms[0] == 42);

    CHECK_THROWS(oeis::fetch_bfile("A999997", opts));     // nothing anywhere, offline
    CHECK_THROWS(oeis::fetch_bfile("banana", opts));      // malformed id
    fs::remove_all(tmp);
}
