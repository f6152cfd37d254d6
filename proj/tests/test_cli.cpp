#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "nsp/cli.hpp"

namespace {

namespace fs = std::filesystem;

class TempFile {
public:
    explicit TempFile(const std::string& content)
    {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("nsp_cli_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++) + ".txt");
        std::ofstream(path_) << content;
    }
    ~TempFile() { fs::remove(path_); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = nsp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kTable = "(b c) f a\n(b c) (c f) a\n(b c) (d f) a\n(b c) (e f) a\n(b c) (c d e f) a\n";

}  // namespace

TEST_CASE("support over all thetas")
{
    TempFile db(kTable);
    const Run r = run({"support", "--db", db.path(), "--pattern", "<b !(c d e f) a>", "--all-thetas", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "pattern,strong-strict-partial,weak-strict-partial,strong-soft-partial,weak-soft-partial,"
          "strong-strict-total,weak-strict-total,strong-soft-total,weak-soft-total\n"
          "<b !(c f d e) a>,4,4,4,4,0,0,0,0\n");
}

TEST_CASE("support with one theta and several patterns")
{
    TempFile db(kTable);
    const Run r = run({"support", "--db", db.path(), "--pattern", "<b a>", "--pattern", "<b !f a>", "--theta",
                       "weak-strict-total", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "pattern,weak-strict-total\n<b a>,5\n<b !f a>,0\n");
}

TEST_CASE("match lists every sequence")
{
    TempFile db("a b c\na c\n");
    const Run r = run({"match", "--db", db.path(), "--pattern", "<a !b c>", "--theta", "strong-strict-total",
                       "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "sequence,strong-strict-total\n1,no\n2,yes\n");
}

TEST_CASE("report includes the tool columns")
{
    TempFile db(kTable);
    const Run r = run({"report", "--db", db.path(), "--pattern", "<b a>", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eNSP") != std::string::npos);
    CHECK(r.out.find("PNSP") != std::string::npos);
    CHECK(r.out.find("NegPSpan/NegGSP") != std::string::npos);
    CHECK(r.out.find("<b a>,5,5,5,5,5,5,5,5,5,5,5\n") != std::string::npos);
}

TEST_CASE("mine")
{
    TempFile db(kTable);
    const std::vector<std::string> base{"mine", "--db", db.path(), "--theta", "weak-strict-total", "--minsup", "5",
                                        "--max-positives", "2", "--max-itemset", "1", "--max-neg", "1",
                                        "--alphabet", "a,b", "--format", "csv"};
    const Run pruned = run(base);
    CHECK(pruned.code == 0);
    CHECK(pruned.out.rfind("pattern,support\n<b>,5\n<b a>,5\n<b !b a>,5\n<b !a a>,5\n<a>,5\n", 0) == 0);
    CHECK(pruned.out.find("# frequent 5\n") != std::string::npos);

    auto bruteArgs = base;
    bruteArgs.insert(bruteArgs.end(), {"--engine", "bruteforce"});
    const Run brute = run(bruteArgs);
    CHECK(brute.code == 0);
    const auto table = [](const std::string& s) { return s.substr(0, s.find('#')); };
    CHECK(table(brute.out) == table(pruned.out));
}

TEST_CASE("usage errors exit with status 2")
{
    TempFile db(kTable);
    CHECK(run({}).code == 2);
    CHECK(run({"support", "--db", db.path(), "--pattern", "<a>"}).code == 2);
    CHECK(run({"support", "--db", db.path(), "--pattern", "<a !b>", "--theta", "weak-strict-total"}).code == 2);
    CHECK(run({"support", "--db", db.path(), "--pattern", "<a>", "--theta", "weak-total"}).code == 2);
    CHECK(run({"support", "--db", "/nonexistent/db.txt", "--pattern", "<a>", "--theta", "weak-strict-total"}).code == 2);
    CHECK(run({"mine", "--db", db.path(), "--theta", "weak-strict-total", "--minsup", "0"}).code == 2);
    const Run partial = run({"mine", "--db", db.path(), "--theta", "weak-strict-partial", "--minsup", "2"});
    CHECK(partial.code == 2);
    CHECK(partial.err.find("error:") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify antimono is deterministic and passes")
{
    const std::vector<std::string> args{"verify", "--suite", "antimono", "--pattern-samples", "50",
                                        "--sequence-samples", "50", "--format", "csv"};
    const Run first = run(args);
    const Run second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("FAIL") == std::string::npos);
}
