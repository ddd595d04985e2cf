#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include <semibrace/cli.hpp>

#include "support/fixtures.hpp"

using namespace semibrace;
namespace fs = std::filesystem;

namespace {

struct Run {
  int         code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> const& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out  = out.str();
  r.err  = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(std::random_device{}());
    dir = fs::temp_directory_path() / ("semibrace-cli-" + std::to_string(rng()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(std::string const& name) const { return (dir / name).string(); }

  std::string write(std::string const& name, std::string const& text) const {
    cli::write_file(path(name), text);
    return path(name);
  }

  std::string write(std::string const& name, LeftSemiBrace const& B) const {
    return write(name, serialize(to_document(B, name)));
  }

  fs::path dir;
};

bool has_line(std::string const& text, std::string const& line) {
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) {
    if (l == line) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_F(CliTest, AnalyzeC6) {
  auto file = write("c6.json", example_c6());
  auto r    = run({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "rho_antihom: false")) << r.out;
  EXPECT_TRUE(has_line(r.out, "idempotents: 3")) << r.out;
  EXPECT_TRUE(has_line(r.out, "idempotents_circ_closed: false")) << r.out;
  EXPECT_TRUE(has_line(r.out, "decomposition: skipped (rho is not an anti-homomorphism)"));

  auto ids = oracle::idempotents(fixtures::dot(example_c6()));
  EXPECT_TRUE(has_line(r.out, "idempotent_set: " + format_elems({ids.begin(), ids.end()})));
  EXPECT_EQ(run({"analyze", file}).out, r.out);
}

TEST_F(CliTest, AnalyzeProduct) {
  auto B    = product_semibrace(trivial_brace(cyclic_group(2)), cyclic_group(2), trivial_group());
  auto file = write("p.json", B);
  auto r    = run({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "rho_antihom: true"));
  auto c   = oracle::corners(fixtures::dot(B), int(B.one()));
  auto ids = oracle::idempotents(fixtures::dot(B));
  std::size_t er = 0;
  for (int x : c.R) {
    er += ids.count(x);
  }
  EXPECT_TRUE(has_line(r.out, "decomposition: K " + std::to_string(c.K.size()) + " x E(R) "
                                  + std::to_string(er) + ", matched true, isomorphic true"))
      << r.out;
  EXPECT_TRUE(has_line(r.out, "ideals: " + std::to_string(oracle::ideals(fixtures::dot(B), fixtures::circ(B)).size())));
  EXPECT_TRUE(has_line(r.out, "  0 = (1,1,1)")) << r.out;

  auto capped = run({"analyze", file, "--ideal-cap", "2"});
  EXPECT_TRUE(has_line(capped.out, "ideals: skipped (size 4 exceeds cap 2)"));
}

TEST_F(CliTest, GrowthRightZero) {
  auto file = write("rz.json", zero_semibrace(cyclic_group(2), ZeroSide::right));
  auto csv  = path("g.csv");
  auto r    = run({"growth", file, "--max-degree", "6", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::size_t> counts;
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "degree count cumulative");
  for (int d = 0; d <= 6; ++d) {
    std::size_t deg, c, cum;
    is >> deg >> c >> cum;
    counts.push_back(c);
  }
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(has_line(r.out, "gk_estimate: 1.0000"));
  EXPECT_EQ(cli::read_file(csv),
            "degree,count,cumulative\n0,1,1\n1,2,3\n2,2,5\n3,2,7\n4,2,9\n5,2,11\n6,2,13\n");
}

TEST_F(CliTest, GrowthCapAndHypothesis) {
  auto big = write("c8.json", trivial_brace(cyclic_group(8)));
  EXPECT_EQ(run({"growth", big, "--max-degree", "7"}).code, 3);
  EXPECT_EQ(run({"growth", big, "--max-degree", "3", "--word-cap", "100"}).code, 3);
  auto c6 = write("c6.json", example_c6());
  auto r  = run({"growth", c6, "--max-degree", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("RhoNotAntihomomorphism"), std::string::npos);
  EXPECT_EQ(run({"growth", c6, "--max-degree", "3", "--force"}).code, 0);
}

TEST_F(CliTest, VerifySemilatticeFails) {
  auto file = write("sl.json", R"({"name": "semilattice", "size": 2,
    "dot": [[0, 0], [0, 1]], "circ": [[0, 1], [1, 0]]})");
  auto r = run({"verify", file});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "valid: false"));
  EXPECT_NE(r.out.find("violation: "), std::string::npos);

  auto ok = run({"verify", write("c6.json", example_c6())});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(has_line(ok.out, "valid: true"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"verify", path("missing.json")}).code, 4);
  auto bad = write("bad.json", R"({"name": "x", "size": 2, "dot": [[0, 1], [1, 2]], "circ": [[0, 1], [1, 0]]})");
  auto r   = run({"verify", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("RangeError"), std::string::npos);
  EXPECT_EQ(run({"analyze", write("junk.json", "{")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"solve", write("c6.json", example_c6())}).code, 2);
  auto big = write("c3.json", trivial_brace(cyclic_group(3)));
  EXPECT_EQ(run({"construct", "product", "--g", big, "--i", "C3", "--j", "C3", "--size-cap", "20"}).code, 3);
  EXPECT_EQ(run({"construct", "zero", "--group", "C2", "--side", "x"}).code, 1);
  auto unwritable = run({"construct", "c6", "-o", path("no/such/dir/out.json")});
  EXPECT_EQ(unwritable.code, 4);
}

TEST_F(CliTest, ConstructOutputsReverify) {
  auto c2 = write("c2.json", trivial_brace(cyclic_group(2)));
  std::string data = std::string("{\"B\": ") + serialize(to_document(trivial_brace(cyclic_group(2)), "k"))
                     + ", \"S\": " + serialize(to_document(zero_semibrace(trivial_group(), ZeroSide::right), "r"))
                     + ", \"delta\": [[0], [0]], \"sigma\": [[0, 1]]}";
  auto df = write("m.json", data);
  std::vector<std::vector<std::string>> cmds = {
      {"construct", "c6"},
      {"construct", "zero", "--group", "S3", "--side", "l"},
      {"construct", "zero", "--group", "C3"},
      {"construct", "product", "--g", c2, "--i", "C2", "--j", "C3"},
      {"construct", "matched", df},
  };
  int k = 0;
  for (auto args : cmds) {
    auto out = path("out" + std::to_string(k++) + ".json");
    args.insert(args.end(), {"-o", out});
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[1] << ": " << r.err;
    auto v = run({"verify", out});
    EXPECT_EQ(v.code, 0) << args[1] << ": " << v.out;
    auto doc = parse_document(cli::read_file(out));
    auto d = oracle::Table(doc.dot.size()), c = oracle::Table(doc.circ.size());
    for (std::size_t a = 0; a < doc.size; ++a) {
      d[a].assign(doc.dot[a].begin(), doc.dot[a].end());
      c[a].assign(doc.circ[a].begin(), doc.circ[a].end());
    }
    EXPECT_TRUE(oracle::is_semibrace(d, c)) << args[1];
  }
  auto stdout_run = run({"construct", "c6"});
  EXPECT_EQ(stdout_run.out, serialize(to_document(example_c6(), "c6")));
}

TEST_F(CliTest, Solve) {
  auto file = write("s3.json", trivial_brace(symmetric_group_3()));
  auto r    = run({"solve", file, "--check-ybe", "--powers", "--degeneracy"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "ybe: holds"));
  EXPECT_TRUE(has_line(r.out, "bijective: true"));
  EXPECT_TRUE(has_line(r.out, "left_nondegenerate: true"));
  EXPECT_TRUE(has_line(r.out, "right_nondegenerate: true"));

  auto out = path("pairs.txt");
  auto e   = run({"solve", file, "--export", out});
  ASSERT_EQ(e.code, 0);
  std::istringstream is(cli::read_file(out));
  EXPECT_EQ(read_pair_table(is), solution_from_semibrace(trivial_brace(symmetric_group_3())));

  auto rz = run({"solve", write("rz.json", zero_semibrace(cyclic_group(2), ZeroSide::right)),
                 "--powers", "--degeneracy"});
  EXPECT_TRUE(has_line(rz.out, "r2_equals_r: true"));
  EXPECT_NE(rz.out.find("right_nondegenerate: false (fails at"), std::string::npos);

  auto forced = run({"solve", write("c6.json", example_c6()), "--force", "--check-ybe"});
  EXPECT_EQ(forced.code, 0);
  EXPECT_TRUE(has_line(forced.out, "provenance: semibrace (forced)"));
  auto expect = verify_ybe(solution_from_semibrace(example_c6(), true)).holds;
  EXPECT_EQ(forced.out.find(expect ? "ybe: holds" : "ybe: fails") != std::string::npos, true);
}

TEST_F(CliTest, Enumerate) {
  auto file = write("dot.json", R"({"name": "rz2", "size": 2, "dot": [[0, 1], [0, 1]]})");
  auto r    = run({"enumerate", "--dot", file});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), enumerate_circ(OpTable::from_rows({{0, 1}, {0, 1}})).size());
  for (auto const& d : j) {
    EXPECT_TRUE(to_semibrace(parse_document(d.dump())).ok());
  }
  auto classes = run({"enumerate", "--dot", file, "--classes"});
  EXPECT_LE(nlohmann::json::parse(classes.out).size(), j.size());

  auto big = write("big.json", serialize(to_document(trivial_brace(cyclic_group(9)), "c9")));
  EXPECT_EQ(run({"enumerate", "--dot", big}).code, 3);
}

TEST_F(CliTest, Quotient) {
  auto B    = product_semibrace(trivial_brace(cyclic_group(2)), cyclic_group(2), trivial_group());
  auto file = write("p.json", B);
  auto soc  = socle(B);
  std::string list;
  for (Elem x : soc.members()) {
    list += (list.empty() ? "" : ",") + std::to_string(x);
  }
  auto out = path("q.json");
  auto r   = run({"quotient", file, "--ideal", list, "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  auto q = to_semibrace(parse_document(cli::read_file(out)));
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(q.value().size(), B.size() / soc.count());
  EXPECT_EQ(run({"quotient", file, "--ideal", "0,9"}).code, 1);
  EXPECT_EQ(run({"quotient", file, "--ideal", "a"}).code, 1);
  auto rz = write("rz.json", zero_semibrace(cyclic_group(3), ZeroSide::right));
  EXPECT_EQ(run({"quotient", rz, "--ideal", "0,1"}).code, 1);
}
