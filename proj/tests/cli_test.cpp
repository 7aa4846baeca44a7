#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pec/cli.hpp"
#include "support/testing.hpp"

namespace pec {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result pec(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string domain(const std::string& name) { return testing::domain_path(name); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, CheckReportsCounts) {
  Result r = pec({"check", domain("antibiotic")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, domain("antibiotic") +
                       ": valid\n  fluents: 2, actions: 1, maxinst: 4\n"
                       "  propositions: 2 v, 2 c, 1 i, 2 p\n");
}

TEST(Cli, CheckInvalidDomainListsProblems) {
  auto path = temp_file("pec_cli_invalid.pec", R"(maxinst 2
fluent F takes-values {a, b}
initially-one-of {({F=a}, 1/2)}
)");
  Result r = pec({"check", path.string()});
  EXPECT_EQ(r.code, cli::kSemanticError);
  EXPECT_NE(r.err.find("invalid domain description"), std::string::npos);
  EXPECT_NE(r.err.find(path.string() + ":3:"), std::string::npos);
}

TEST(Cli, SyntaxErrorIsAUsageError) {
  auto path = temp_file("pec_cli_syntax.pec", "maxinst two\n");
  Result r = pec({"check", path.string()});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_EQ(r.err.rfind("pec: " + path.string() + ":1:", 0), 0u);
}

TEST(Cli, MissingFileIsAUsageError) {
  Result r = pec({"check", "/nonexistent/domain.pec"});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(Cli, UnknownSubcommandIsAUsageError) {
  EXPECT_EQ(pec({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(pec({}).code, cli::kUsageError);
}

TEST(Cli, HelpExitsCleanly) {
  Result r = pec({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("query"), std::string::npos);
}

TEST(Cli, QueryDecimalAndExact) {
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads]@2"}).out, "0.510000\n");
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads]@2", "--exact"}).out,
            "51/100\n");
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads]@2", "--precision", "2"}).out,
            "0.51\n");
  EXPECT_EQ(pec({"query", domain("antibiotic"), "-q", "[Rash=Absent]@4", "--exact"}).out,
            "477/650\n");
}

TEST(Cli, QueryConditional) {
  Result r = pec({"query", domain("antibiotic"), "-q", "[Bacteria=Absent]@4",
                  "--given", "[Rash=Absent]@4", "--exact"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "47/53\n");
}

TEST(Cli, QueryErrors) {
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads]@9"}).code, cli::kUsageError);
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Edge]@1"}).code, cli::kUsageError);
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads"}).code, cli::kUsageError);
  EXPECT_EQ(pec({"query", domain("coin")}).code, cli::kUsageError);
  EXPECT_EQ(pec({"query", domain("coin"), "-q", "[Coin=Heads]@1", "--precision", "101"}).code,
            cli::kUsageError);
  Result zero = pec({"query", domain("coin"), "-q", "[Coin=Heads]@3", "--given",
                     "[Coin=Tails]@0"});
  EXPECT_EQ(zero.code, cli::kSemanticError);
  EXPECT_EQ(zero.err.rfind("pec: ", 0), 0u);
}

TEST(Cli, TranslateToStdoutAndFile) {
  Result r = pec({"translate", domain("coin"), "-o", "-"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("performed(toss,1,1)."), std::string::npos);
  EXPECT_EQ(r.out.find("% Domain-independent axioms."), std::string::npos);

  auto path = std::filesystem::temp_directory_path() / "pec_cli_coin.lp";
  Result w = pec({"translate", domain("coin"), "--with-axioms", "-o", path.string()});
  EXPECT_EQ(w.code, cli::kOk);
  EXPECT_EQ(w.out, "wrote " + path.string() + "\n");
  EXPECT_EQ(testing::read_text(path.string()),
            testing::read_text(std::string(PEC_GOLDEN_DIR) + "/coin.lp"));
}

TEST(Cli, TranslateCollisionIsSemantic) {
  auto path = temp_file("pec_cli_collision.pec", R"(maxinst 1
fluent Toss takes-values {a, b}
action toss
initially-one-of {({Toss=a}, 1)}
)");
  EXPECT_EQ(pec({"translate", path.string(), "-o", "-"}).code, cli::kSemanticError);
}

TEST(Cli, GraphDot) {
  Result r = pec({"graph", domain("coin"), "--format", "dot"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "digraph transitions {\n"
            "  \"Coin=Heads\";\n"
            "  \"Coin=Tails\";\n"
            "  \"Coin=Heads\" -> \"Coin=Heads\" [label=\"{Toss}, 51/100\"];\n"
            "  \"Coin=Heads\" -> \"Coin=Tails\" [label=\"{Toss}, 49/100\"];\n"
            "  \"Coin=Tails\" -> \"Coin=Heads\" [label=\"{Toss}, 49/100\"];\n"
            "  \"Coin=Tails\" -> \"Coin=Tails\" [label=\"{Toss}, 51/100\"];\n"
            "}\n");
  EXPECT_EQ(pec({"graph", domain("coin"), "--format", "svg"}).code, cli::kUsageError);
}

TEST(Cli, SampleReportsFrequencyAndExactValue) {
  Result r = pec({"sample", domain("coin"), "-n", "1000", "--seed", "7", "-q",
                  "[Coin=Heads]@2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("samples: 1000\nhits: ", 0), 0u);
  EXPECT_NE(r.out.find("exact: 0.510000\n"), std::string::npos);
  EXPECT_EQ(r.out, pec({"sample", domain("coin"), "-n", "1000", "--seed", "7", "-q",
                        "[Coin=Heads]@2"}).out);
  Result bad = pec({"sample", domain("coin"), "-n", "0", "-q", "[Coin=Heads]@2"});
  EXPECT_EQ(bad.code, cli::kUsageError);
  EXPECT_EQ(bad.err, "pec: sample count must be positive\n");
}

}  // namespace
}  // namespace pec
