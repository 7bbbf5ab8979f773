#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "ttk/trajectory_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kDataDir = TTK_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ttk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json load_json(const fs::path& p) { return json::parse(slurp(p)); }

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::vector<double> real_parts(const json& doc) { return doc["eigenvalues"]["re"].get<std::vector<double>>(); }

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("ttk_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream out(path(name));
        out << text;
    }

    // Double-well trajectory at frame time 0.01.
    std::string double_well(const std::string& name, std::size_t steps = 200000) const {
        const std::string p = path(name);
        const auto r = run({"generate", "double-well", "--out", p, "--steps", std::to_string(steps), "--stride",
                            "10", "--seed", "5"});
        EXPECT_EQ(r.code, 0) << r.err;
        return p;
    }

    fs::path dir_;
};

const std::string kDoubleWellBasis = kDataDir + "/double_well_basis.json";

} // namespace

TEST(PairedPath, InsertsBeforeExtension) {
    EXPECT_EQ(ttk::cli::paired_path("abc.traj"), "abc.y.traj");
    EXPECT_EQ(ttk::cli::paired_path("out/abc.csv"), "out/abc.y.csv");
    EXPECT_EQ(ttk::cli::paired_path("abc"), "abc.y");
    EXPECT_EQ(ttk::cli::paired_path("dir.v2/abc"), "dir.v2/abc.y");
    EXPECT_EQ(ttk::cli::paired_path("dir/.hidden"), "dir/.hidden.y");
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"generate", "lorenz", "--out", path("x.traj")}).code, 2);
    EXPECT_EQ(run({"generate", "abc"}).code, 2);
    EXPECT_EQ(run({"generate", "abc", "--out", path("x.traj"), "--bogus", "1"}).code, 2);
    EXPECT_EQ(run({"generate", "abc", "--out", path("x.traj"), "--n-per-dim", "two"}).code, 2);
    EXPECT_EQ(run({"generate", "abc", "--out", path("x.traj"), "--sampling", "sobol"}).code, 2);
    EXPECT_EQ(run({"generate", "abc", "--out", path("x.traj"), "--tau", "-1"}).code, 2);
    EXPECT_EQ(run({"generate", "double-well", "--out", path("x.traj"), "--beta", "0"}).code, 2);

    const std::string z = double_well("z.traj", 2000);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "hocur"}).code, 2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--eps", "-1"}).code, 2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--lag", "5000"}).code, 2);
    EXPECT_EQ(run({"edmd", "--basis", kDoubleWellBasis}).code, 2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--x", z, "--y", z, "--basis", kDoubleWellBasis}).code, 2);
    EXPECT_EQ(run({"edmd", "--x", z, "--basis", kDoubleWellBasis}).code, 2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "hocur", "--hocur-ranks",
                   "2,x"})
                  .code,
              2);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "hocur", "--hocur-ranks",
                   "2,2,2"})
                  .code,
              2);

    write("bad_basis.json", R"({"dimensions": [{"coordinate": 1}]})");
    const auto r = run({"edmd", "--trajectory", z, "--basis", path("bad_basis.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("functions"), std::string::npos) << r.err;

    write("wide_basis.json", R"({"dimensions": [{"coordinate": 2, "functions": [{"kind": "identity"}]}]})");
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", path("wide_basis.json")}).code, 2);

    write("ix.txt", "1 2 3");
    write("iy.txt", "2 3 0");
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--ix", path("ix.txt"), "--iy", path("iy.txt"), "--basis",
                   kDoubleWellBasis})
                  .code,
              2);
}

TEST_F(CliTest, IoErrorsExitFour) {
    EXPECT_EQ(run({"generate", "abc", "--n-per-dim", "2", "--out", path("missing/dir/x.traj")}).code, 4);
    const std::string z = double_well("z.traj", 2000);
    EXPECT_EQ(run({"edmd", "--trajectory", path("nope.traj"), "--basis", kDoubleWellBasis}).code, 4);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", path("nope.json")}).code, 4);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--config", path("nope.json")}).code, 4);
    EXPECT_EQ(run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--out", path("missing/r.json")}).code,
              4);
    EXPECT_EQ(run({"timescales", "--results", path("nope.json"), "--tau", "1"}).code, 4);
}

TEST_F(CliTest, DegenerateDataExitsThree) {
    ttk::write_trajectory(path("flat.traj"), ttk::Matrix::Zero(1, 50));
    write("id.json", R"({"dimensions": [{"coordinate": 1, "functions": [{"kind": "identity"}]}]})");
    const auto r = run({"edmd", "--trajectory", path("flat.traj"), "--basis", path("id.json")});
    EXPECT_EQ(r.code, 3) << r.err;
}

TEST_F(CliTest, GenerateAbcWritesPairedFiles) {
    const std::string x = path("abc.traj");
    const auto r = run({"generate", "abc", "--n-per-dim", "2", "--tau", "0.5", "--out", x});
    ASSERT_EQ(r.code, 0) << r.err;
    const ttk::Matrix xs = ttk::read_trajectory(x);
    const ttk::Matrix ys = ttk::read_trajectory(path("abc.y.traj"));
    EXPECT_EQ(xs.rows(), 3);
    EXPECT_EQ(xs.cols(), 8);
    EXPECT_EQ(ys.cols(), 8);
    EXPECT_GE(ys.minCoeff(), 0.0);
    EXPECT_LT(ys.maxCoeff(), 2.0 * std::acos(-1.0));
    const json meta = load_json(x + ".json");
    EXPECT_EQ(meta["system"], "abc");
    EXPECT_EQ(meta["m"], 8);
    EXPECT_EQ(meta["y"], path("abc.y.traj"));
    EXPECT_DOUBLE_EQ(meta["parameters"]["tau"].get<double>(), 0.5);
}

TEST_F(CliTest, GenerationIsDeterministicPerSeed) {
    for (const std::string name : {"a.csv", "b.csv"})
        ASSERT_EQ(run({"generate", "double-well", "--steps", "500", "--seed", "9", "--out", path(name)}).code, 0);
    ASSERT_EQ(run({"generate", "double-well", "--steps", "500", "--seed", "10", "--out", path("c.csv")}).code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_NE(slurp(path("a.csv")), slurp(path("c.csv")));
    const ttk::Matrix z = ttk::read_trajectory(path("a.csv"));
    EXPECT_EQ(z.rows(), 1);
    EXPECT_EQ(z.cols(), 501);
    EXPECT_DOUBLE_EQ(load_json(path("a.csv.json"))["parameters"]["frame_time"].get<double>(), 1e-3);

    for (const std::string name : {"r1.traj", "r2.traj"})
        ASSERT_EQ(run({"generate", "abc", "--n-per-dim", "2", "--tau", "0.2", "--sampling", "random", "--seed", "3",
                       "--threads", "2", "--out", path(name)})
                      .code,
                  0);
    EXPECT_EQ(slurp(path("r1.traj")), slurp(path("r2.traj")));
    EXPECT_EQ(slurp(path("r1.y.traj")), slurp(path("r2.y.traj")));
}

TEST_F(CliTest, EdmdZeroLagGivesUnitEigenvalues) {
    const std::string z = double_well("z.traj", 5000);
    write("poly.json", R"({"dimensions": [
        {"coordinate": 1, "functions": [{"kind": "constant"}, {"kind": "identity"}]},
        {"coordinate": 1, "functions": [{"kind": "constant"}, {"kind": "monomial", "degree": 2}]}]})");
    for (const std::string method : {"exact", "streamed"}) {
        const auto r = run({"edmd", "--x", z, "--y", z, "--basis", path("poly.json"), "--method", method});
        ASSERT_EQ(r.code, 0) << r.err;
        const json doc = json::parse(r.out);
        for (double v : real_parts(doc)) EXPECT_NEAR(v, 1.0, 1e-10) << method;
        for (double v : doc["eigenvalues"]["im"].get<std::vector<double>>()) EXPECT_NEAR(v, 0.0, 1e-10);
    }
}

TEST_F(CliTest, EdmdMethodsAgreeAndEmbedConfig) {
    const std::string z = double_well("z.traj", 20000);
    std::vector<std::vector<double>> values;
    for (const std::string method : {"exact", "streamed"}) {
        const std::string out = path(method + ".json");
        const auto r = run({"edmd", "--trajectory", z, "--lag", "5", "--basis", kDoubleWellBasis, "--method", method,
                            "--tau", "0.05", "--out", out});
        ASSERT_EQ(r.code, 0) << r.err;
        const json doc = load_json(out);
        EXPECT_EQ(doc["format"], "ttk-results");
        EXPECT_EQ(doc["command"], "edmd");
        EXPECT_EQ(doc["config"]["method"], method);
        EXPECT_EQ(doc["config"]["lag"], 5);
        EXPECT_EQ(doc["config"]["trajectory"], z);
        EXPECT_EQ(doc["snapshots"], 2001 - 5);
        EXPECT_EQ(doc["timescales"]["markers"][0], "infinite");
        EXPECT_DOUBLE_EQ(doc["timescales"]["tau"].get<double>(), 0.05);
        EXPECT_TRUE(doc.contains("wall_time_s"));
        values.push_back(real_parts(doc));
    }
    ASSERT_EQ(values[0].size(), values[1].size());
    for (std::size_t k = 0; k < values[0].size(); ++k) EXPECT_NEAR(values[0][k], values[1][k], 1e-8);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsWin) {
    const std::string z = double_well("z.traj", 20000);
    write("cfg.json", json{{"trajectory", z},
                           {"basis", kDoubleWellBasis},
                           {"method", "streamed"},
                           {"eps", 1e-3},
                           {"lag", 4},
                           {"symmetrize", true},
                           {"q", 3}}
                          .dump());
    const auto r = run({"edmd", "--config", path("cfg.json"), "--lag", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["config"]["method"], "streamed");
    EXPECT_DOUBLE_EQ(doc["config"]["eps"].get<double>(), 1e-3);
    EXPECT_EQ(doc["config"]["lag"], 6);
    EXPECT_EQ(doc["config"]["symmetrize"], true);
    EXPECT_EQ(doc["symmetrized"], true);
    EXPECT_EQ(real_parts(doc).size(), 3U);

    write("unknown.json", R"({"basis": "x", "colour": "blue"})");
    const auto bad = run({"edmd", "--config", path("unknown.json")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("colour"), std::string::npos) << bad.err;
    write("broken.json", "{ not json");
    EXPECT_EQ(run({"edmd", "--config", path("broken.json")}).code, 2);
    write("flagtype.json", R"({"basis": "x", "symmetrize": 1})");
    EXPECT_EQ(run({"edmd", "--config", path("flagtype.json")}).code, 2);
    write("list.json", json{{"trajectory", z}, {"basis", kDoubleWellBasis}, {"method", "hocur"},
                            {"hocur_ranks", {2, 3}}}
                           .dump());
    const auto listed = run({"edmd", "--config", path("list.json")});
    ASSERT_EQ(listed.code, 0) << listed.err;
    EXPECT_EQ(json::parse(listed.out)["config"]["hocur_ranks"], "2,3");
}

TEST_F(CliTest, PhiCsvHasOneRowPerEigenpair) {
    const std::string z = double_well("z.traj", 5000);
    const auto r = run({"edmd", "--trajectory", z, "--lag", "2", "--basis", kDoubleWellBasis, "--q", "3",
                        "--phi-csv", path("phi.csv"), "--out", path("r.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = read_csv(path("phi.csv"));
    ASSERT_EQ(rows.size(), 3U);
    for (const auto& row : rows) EXPECT_EQ(row.size(), 501U - 2U);
    EXPECT_EQ(load_json(path("r.json"))["phi_csv"], path("phi.csv"));
}

TEST_F(CliTest, CcaOfIdenticalDataIsUnitAndWritesGrid) {
    ASSERT_EQ(run({"generate", "abc", "--n-per-dim", "3", "--tau", "0.5", "--out", path("abc.traj")}).code, 0);
    write("small.json", R"({"dimensions": [
        {"coordinate": 1, "functions": [{"kind": "constant"}, {"kind": "periodic_gaussian", "c": 1.0, "s": 0.5}]},
        {"coordinate": 2, "functions": [{"kind": "constant"}, {"kind": "periodic_gaussian", "c": 2.0, "s": 0.5}]}]})");
    const std::string x = path("abc.traj");
    const auto r = run({"cca", "--x", x, "--y", x, "--basis", path("small.json"), "--grid-csv", path("grid.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["command"], "cca");
    for (double v : real_parts(doc)) EXPECT_NEAR(v, 1.0, 1e-10);
    for (double s : doc["singular_values"].get<std::vector<double>>()) EXPECT_NEAR(s, 1.0, 1e-10);
    const auto rows = read_csv(path("grid.csv"));
    ASSERT_EQ(rows.size(), 28U);
    const std::size_t q = real_parts(doc).size();
    ASSERT_EQ(rows[0].size(), 3 + q);
    EXPECT_EQ(rows[0][0], "x1");
    EXPECT_EQ(rows[0][3], "phi_1");
    EXPECT_DOUBLE_EQ(std::stod(rows[1][0]), 0.0);

    const auto lagged = run({"cca", "--x", x, "--y", path("abc.y.traj"), "--basis", path("small.json"), "--basis-y",
                             kDataDir + "/abc_basis.json", "--method", "streamed", "--tau", "0.5"});
    ASSERT_EQ(lagged.code, 0) << lagged.err;
    const json ldoc = json::parse(lagged.out);
    for (double v : real_parts(ldoc)) {
        EXPECT_GE(v, -1e-12);
        EXPECT_LE(v, 1.0 + 1e-8);
    }
    EXPECT_TRUE(ldoc.contains("timescales"));
}

TEST_F(CliTest, RanksShrinkAsEpsGrows) {
    const std::string z = double_well("z.traj", 20000);
    std::vector<std::vector<int>> ranks;
    for (const std::string eps : {"0", "1e-6", "1e-3", "1e-1"}) {
        const auto r = run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "streamed", "--eps",
                            eps});
        ASSERT_EQ(r.code, 0) << r.err;
        ranks.push_back(json::parse(r.out)["ranks"].get<std::vector<int>>());
    }
    for (std::size_t s = 1; s < ranks.size(); ++s) {
        ASSERT_EQ(ranks[s].size(), ranks[0].size());
        for (std::size_t k = 0; k < ranks[s].size(); ++k) EXPECT_LE(ranks[s][k], ranks[s - 1][k]);
    }
    // The last entry closes the snapshot mode; the one before it is r_p.
    const std::size_t p = ranks[0].size() - 2;
    EXPECT_LT(ranks.back()[p], ranks.front()[p]);
}

TEST_F(CliTest, TimescalesRecomputeForNewTau) {
    const std::string z = double_well("z.traj", 20000);
    ASSERT_EQ(run({"edmd", "--trajectory", z, "--lag", "10", "--basis", kDoubleWellBasis, "--out", path("r.json")})
                  .code,
              0);
    const auto r = run({"timescales", "--results", path("r.json"), "--tau", "0.1", "--out", path("t.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = load_json(path("t.json"));
    const auto re = real_parts(doc);
    const json& ts = doc["timescales"];
    EXPECT_DOUBLE_EQ(ts["tau"].get<double>(), 0.1);
    for (std::size_t k = 0; k < re.size(); ++k) {
        if (ts["markers"][k] != "finite") continue;
        EXPECT_NEAR(ts["values"][k].get<double>(), -0.1 / std::log(re[k]), 1e-12 * ts["values"][k].get<double>());
    }
    EXPECT_EQ(run({"timescales", "--results", path("r.json"), "--tau", "0"}).code, 2);
    write("bare.json", R"({"format": "ttk-results"})");
    EXPECT_EQ(run({"timescales", "--results", path("bare.json"), "--tau", "1"}).code, 2);

    // Without --out the results file is updated in place.
    ASSERT_EQ(run({"timescales", "--results", path("r.json"), "--tau", "0.2"}).code, 0);
    EXPECT_DOUBLE_EQ(load_json(path("r.json"))["timescales"]["tau"].get<double>(), 0.2);
}

TEST_F(CliTest, DoubleWellSlowTimescaleIsLagIndependent) {
    const std::string z = double_well("z.traj", 1000000);
    std::vector<double> t2;
    for (int lag : {20, 40}) {
        const auto r = run({"edmd", "--trajectory", z, "--lag", std::to_string(lag), "--basis", kDoubleWellBasis,
                            "--method", "streamed", "--tau", std::to_string(0.01 * lag)});
        ASSERT_EQ(r.code, 0) << r.err;
        const json doc = json::parse(r.out);
        ASSERT_EQ(doc["timescales"]["markers"][1], "finite");
        t2.push_back(doc["timescales"]["values"][1].get<double>());
    }
    EXPECT_NEAR(t2[1] / t2[0], 1.0, 0.1) << t2[0] << " vs " << t2[1];
}

TEST_F(CliTest, HocurMethodReportsSweeps) {
    const std::string z = double_well("z.traj", 5000);
    const auto r = run({"edmd", "--trajectory", z, "--basis", kDoubleWellBasis, "--method", "hocur", "--hocur-ranks",
                        "4,3", "--hocur-init", "spread"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_TRUE(doc.contains("hocur"));
    EXPECT_GE(doc["hocur"]["sweeps"].get<int>(), 1);
    EXPECT_EQ(doc["config"]["hocur_init"], "spread");
    EXPECT_NEAR(real_parts(doc)[0], 1.0, 1e-8);
}

TEST_F(CliTest, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("edmd"), std::string::npos);
}
