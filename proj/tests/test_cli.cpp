#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pcf/cli.hpp"
#include "pcf/report.hpp"

using namespace pcf;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("pcf-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gdmn output") {
    TempDir tmp;
    CHECK(run({"gdmn", "-d", "2", "-m", "2", "-n", "1", "--cache-dir", tmp.str()}).out == "c + 2\n");
    const auto j = run({"gdmn", "-d", "3", "-m", "2", "-n", "1", "--format", "json", "--cache-dir", tmp.str()});
    CHECK(j.code == 0);
    CHECK(j.out == "{\"coeffs\":[\"3\",\"0\",\"3\",\"0\",\"1\"]}\n");
    const auto deg = run({"gdmn", "-d", "2", "-m", "1", "-n", "1", "--cache-dir", tmp.str()});
    CHECK(deg.code == 0);
    CHECK(deg.out == "1\ndegenerate\n");
    const auto dj = run({"--format", "json", "gdmn", "-d", "2", "-m", "1", "-n", "1", "--no-cache"});
    CHECK(Json::parse(dj.out).at("degenerate") == true);
    const auto csv = run({"gdmn", "-d", "2", "-m", "2", "-n", "1", "--format", "csv", "--no-cache"});
    CHECK(csv.out == "degree,coeff\n0,2\n1,1\n");
    const auto fac = run({"gdmn", "-d", "4", "-m", "2", "-n", "1", "--factor", "--no-cache"});
    CHECK(std::count(fac.out.begin(), fac.out.end(), '\n') == 3);
}

TEST_CASE("construction and usage errors exit 2") {
    const auto bad = run({"gdmn", "-d", "1", "-m", "2", "-n", "1", "--no-cache"});
    CHECK(bad.code == kExitError);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"gdmn", "-d", "2", "-m", "2", "-n", "0", "--no-cache"}).code == kExitError);
    CHECK(run({"verify", "-d", "2", "-m", "-1", "-n", "1", "--no-cache"}).code == kExitError);
    CHECK(run({"nonsense"}).code == kExitError);
    CHECK(run({"gdmn", "-d", "2"}).code == kExitError);
    CHECK(run({"gdmn", "-d", "2", "-m", "2", "-n", "1", "--format", "xml"}).code == kExitError);
    CHECK(run({"disc", "-d", "2", "--g-file", "/nonexistent/file"}).code == kExitError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify exit codes and routing") {
    TempDir tmp;
    const auto a = run({"verify", "-d", "2", "-m", "3", "-n", "1", "--cache-dir", tmp.str(), "--format", "json"});
    CHECK(a.code == 0);
    const auto ra = report_from_json(Json::parse(a.out));
    bool a3 = false;
    for (const auto& o : ra.outcomes)
        a3 = a3 || (o.check == CheckId::Power_1_3b && o.status == Status::Certified && o.value == 3ul);
    CHECK(a3);

    const auto b = run({"verify", "-d", "4", "-m", "2", "-n", "1", "--cache-dir", tmp.str(), "--format", "json"});
    CHECK(b.code == 0);
    CHECK(report_from_json(Json::parse(b.out)).exponent_set() == std::vector<unsigned long>{6, 12});

    const auto c = run({"verify", "-d", "2", "-m", "0", "-n", "3", "--cache-dir", tmp.str(), "--format", "json"});
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out).at("kind") == "periodic");
    CHECK(run({"periodic", "-d", "2", "-n", "3", "--cache-dir", tmp.str()}).code == 0);
}

TEST_CASE("a refuted theorem check exits 1") {
    // A cache entry that is internally consistent but holds the wrong
    // polynomial: the exact-type check must fail.
    TempDir tmp;
    CacheEntry e;
    e.d = 2;
    e.m = 2;
    e.n = 1;
    e.G = IntPolynomial{3, 1};
    e.factors = FactoredPoly{1, {{IntPolynomial{3, 1}, 1u}}};
    cache_write(tmp.path, e);
    const auto r = run({"verify", "-d", "2", "-m", "2", "-n", "1", "--cache-dir", tmp.str()});
    CHECK(r.code == kExitRefuted);
    CHECK(r.out.find("Refuted") != std::string::npos);
}

TEST_CASE("JSON report round-trip") {
    for (auto [d, m, n] : std::vector<std::tuple<long, long, long>>{{2, 2, 1}, {3, 2, 1}, {4, 2, 2}, {2, 2, 3}}) {
        const auto rep = verify_case(d, m, n);
        const Json j = report_to_json(rep);
        CHECK(report_from_json(j) == rep);
        CHECK(report_from_json(Json::parse(j.dump())) == rep);
        CHECK(report_to_json(report_from_json(j)) == j);
    }
    const auto out = run({"verify", "-d", "3", "-m", "2", "-n", "1", "--no-cache", "--format", "json"}).out;
    CHECK(report_from_json(Json::parse(out)) == verify_case(3, 2, 1));
    const auto p = verify_periodic(2, 3);
    CHECK(report_from_json(report_to_json(p, true)) == p);
}

TEST_CASE("big integers are decimal strings") {
    const IntPolynomial big(std::vector<mpz_class>{mpz_class("123456789012345678901234567890"), 1});
    const Json j = poly_to_json(big);
    CHECK(j[0] == "123456789012345678901234567890");
    CHECK(poly_from_json(j) == big);
    CHECK_THROWS_AS(poly_from_json(Json::parse("[1,2]")), Error);
    CHECK_THROWS_AS(poly_from_json(Json::parse("[\"x\"]")), Error);
}

TEST_CASE("cache hit is bit-identical to a cold run") {
    TempDir tmp;
    const std::vector<std::string> args{"verify", "-d", "4", "-m", "2", "-n", "2", "--format", "json", "--cache-dir",
                                        tmp.str()};
    const auto cold = run(args);
    const fs::path file = tmp.path / "g_4_2_2.json";
    REQUIRE(fs::exists(file));
    const auto warm = run(args);
    CHECK(cold.out == warm.out);
    CHECK(cold.code == warm.code);
    const auto uncached = run({"verify", "-d", "4", "-m", "2", "-n", "2", "--format", "json", "--no-cache"});
    CHECK(uncached.out == cold.out);
    const auto entry = cache_read(tmp.path, 4, 2, 2);
    REQUIRE(entry);
    CHECK(entry->G == gdmn(4, 2, 2).G);
    CHECK(entry->factors->expand() == entry->G);
    // No stray temporaries.
    for (const auto& f : fs::directory_iterator(tmp.path)) CHECK(f.path().extension() == ".json");
}

TEST_CASE("corrupt cache entries are recomputed and overwritten") {
    TempDir tmp;
    fs::create_directories(tmp.path);
    const fs::path file = tmp.path / "g_2_3_1.json";
    {
        std::ofstream(file) << "{ not json";
    }
    CHECK_FALSE(cache_read(tmp.path, 2, 3, 1));
    const auto r = run({"gdmn", "-d", "2", "-m", "3", "-n", "1", "--cache-dir", tmp.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "c^3 + 2*c^2 + 2*c + 2\n");
    CHECK(cache_read(tmp.path, 2, 3, 1));

    // Factors that do not multiply back to G.
    CacheEntry e;
    e.d = 2;
    e.m = 3;
    e.n = 1;
    e.G = gdmn(2, 3, 1).G;
    e.factors = FactoredPoly{1, {{IntPolynomial{1, 1}, 1u}}};
    cache_write(tmp.path, e);
    CHECK_FALSE(cache_read(tmp.path, 2, 3, 1));
    const auto v = run({"verify", "-d", "2", "-m", "3", "-n", "1", "--cache-dir", tmp.str()});
    CHECK(v.code == 0);
    const auto fixed = cache_read(tmp.path, 2, 3, 1);
    REQUIRE(fixed);
    CHECK(fixed->factors->factors.size() == 1);
    CHECK(fixed->factors->factors[0].first == e.G);

    // Entry for other parameters under this name.
    e.d = 3;
    write_file_atomic(file, cache_to_json(e).dump());
    CHECK_FALSE(cache_read(tmp.path, 2, 3, 1));
}

TEST_CASE("cache directory from the environment") {
    TempDir tmp;
    ::setenv("PCF_CACHE_DIR", tmp.str().c_str(), 1);
    CHECK(run({"gdmn", "-d", "2", "-m", "2", "-n", "1"}).code == 0);
    ::unsetenv("PCF_CACHE_DIR");
    CHECK(fs::exists(tmp.path / "g_2_2_1.json"));
}

TEST_CASE("job count does not change output") {
    const auto one = run({"verify", "-d", "2", "-m", "3", "-n", "2", "--no-cache", "--format", "json", "--jobs", "1"});
    const auto four = run({"verify", "-d", "2", "-m", "3", "-n", "2", "--no-cache", "--format", "json", "--jobs", "4"});
    CHECK(one.out == four.out);
}

TEST_CASE("csv report") {
    const auto r = run({"verify", "-d", "2", "-m", "2", "-n", "1", "--no-cache", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("kind,d,m,n,factor,check,subject,status,value,reason,witness\n", 0) == 0);
    CHECK(r.out.find("case,2,2,1,0,Power_1_3b,1,Certified,1,") != std::string::npos);
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("appendix table") {
    const auto r = run({"appendix"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(4,2,1): {6,12} PASS\n") != std::string::npos);
    CHECK(r.out.find("(4,2,2): {8,16} PASS\n") != std::string::npos);
    CHECK(r.out.find("(4,2,3): {8,16} PASS\n") != std::string::npos);
    CHECK(r.out.find("(4,3,1): {30,60} PASS\n") != std::string::npos);
    const auto one = run({"appendix", "--case", "9,2,1", "--format", "json"});
    CHECK(one.code == 0);
    const Json j = Json::parse(one.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("cases")[0].at("found") == Json::parse("[32,96]"));
    CHECK(run({"appendix", "--case", "5,2,1"}).code == kExitError);
}

TEST_CASE("disc report") {
    const auto r = run({"disc", "-d", "2", "-m", "2", "-n", "1", "--depth", "3", "--no-cache"});
    CHECK(r.code == 0);
    CHECK(r.out.find("printed-form: FAIL at n=2; power-variant: PASS") != std::string::npos);
    CHECK(r.out.find("n=2 Delta=2048") != std::string::npos);
    TempDir tmp;
    fs::create_directories(tmp.path);
    {
        std::ofstream(tmp.path / "g.txt") << "2, 1\n";
    }
    const auto g = run({"disc", "-d", "2", "--g-file", (tmp.path / "g.txt").string(), "--format", "json"});
    CHECK(g.code == 0);
    CHECK(Json::parse(g.out).at("kind") == "disc");
    {
        std::ofstream(tmp.path / "red.txt") << "-1, 0, 1\n";
    }
    CHECK(run({"disc", "-d", "2", "--g-file", (tmp.path / "red.txt").string()}).code == kExitError);
}

TEST_CASE("lemma21 subcommand") {
    CHECK(run({"lemma21", "-d", "2"}).code == 0);
    CHECK(run({"lemma21", "-d", "3", "-i", "1", "-j", "2"}).code == 0);
    const auto bad = run({"lemma21", "-d", "2", "-i", "2", "-j", "1", "--format", "json"});
    CHECK(bad.code == 0);
    CHECK(Json::parse(bad.out).at("outcomes")[0].at("status") == "Refuted");
    CHECK(run({"lemma21", "-d", "2", "-i", "2"}).code == kExitError);
}

TEST_CASE("factor subcommand") {
    const auto r = run({"factor", "--coeffs", "-1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "c - 1\nc + 1\n");
    const auto g = run({"factor", "-d", "4", "-m", "2", "-n", "1", "--no-cache", "--format", "json"});
    CHECK(Json::parse(g.out).at("factors").size() == 2);
    CHECK(run({"factor"}).code == kExitError);
}

}
