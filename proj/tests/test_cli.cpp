#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "thmat/bench.hpp"
#include "thmat/cli.hpp"
#include "thmat/displacement.hpp"
#include "thmat/formats.hpp"
#include "thmat/oracle.hpp"

using namespace thmat;
using namespace thmat::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("thmat_cli_" + std::to_string(Rng(std::random_device{}()).next()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string put(const std::string& name, const std::string& text) const {
    formats::write_file(path / name, text);
    return file(name);
  }
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string poly_text(const Poly& p) { return formats::write_poly_line(p); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen") {
  TempDir tmp;
  const auto a = run({"gen", "--n", "8", "--alpha-t", "2", "--alpha-h", "1", "--p", "101", "--seed", "1"});
  CHECK(a.code == cli::kOk);
  const auto b = run({"gen", "--n", "8", "--alpha-t", "2", "--alpha-h", "1", "--p", "101", "--seed", "1"});
  CHECK(a.out == b.out);
  const auto m = formats::read_smx(a.out);
  CHECK(m.n() == 8);
  CHECK(m.p().width() == 2);
  CHECK(m.q().width() == 1);

  CHECK(run({"gen", "--n", "8", "--p", "101", "--seed", "1", "--out", tmp.file("x.smx")}).code == 0);
  CHECK(formats::read_file(tmp.file("x.smx")) == run({"gen", "--n", "8", "--p", "101", "--seed", "1"}).out);

  const auto z = run({"gen", "--n", "4", "--alpha-t", "0", "--alpha-h", "0", "--seed", "3"});
  CHECK(z.code == 0);
  CHECK(reconstruct(formats::read_smx(z.out)).is_zero());

  const auto bad = run({"gen", "--n", "4", "--p", "9"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("not prime") != std::string::npos);

  // No seed: one is drawn and reported for replay.
  const auto fresh = run({"gen", "--n", "4", "--alpha-t", "1"});
  REQUIRE(fresh.err.rfind("seed=", 0) == 0);
  const std::string seed = first_line(fresh.err).substr(5);
  CHECK(run({"gen", "--n", "4", "--alpha-t", "1", "--seed", seed}).out == fresh.out);

  CHECK(run({"gen"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("minpoly") {
  TempDir tmp;
  const PrimeField f;
  const auto id = tmp.put("id.smx", formats::write_smx(THMatrix::identity(f, 6)));
  const auto r = run({"minpoly", id, "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == std::to_string(f.modulus() - 1) + " 1");
  CHECK(r.out.find("verified=true mults=") != std::string::npos);

  const auto z = tmp.put("z.smx", formats::write_smx(THMatrix::down_shift(f, 4)));
  CHECK(first_line(run({"minpoly", z, "--seed", "1", "--mode", "naive"}).out) == "0 0 0 0 1");

  CHECK(run({"gen", "--n", "12", "--alpha-t", "2", "--alpha-h", "1", "--seed", "5", "--out", tmp.file("r.smx")}).code == 0);
  CHECK(run({"reconstruct", tmp.file("r.smx"), "--out", tmp.file("r.dmx")}).code == 0);
  const auto mp = run({"minpoly", tmp.file("r.smx"), "--seed", "2", "--trials", "3"});
  const auto om = run({"oracle-minpoly", tmp.file("r.dmx")});
  CHECK(om.code == 0);
  CHECK(first_line(mp.out) == first_line(om.out));

  CHECK(run({"minpoly", tmp.file("missing.smx"), "--seed", "1"}).code == cli::kUsage);
  const auto junk = tmp.put("junk.smx", "SMX 1\nfield 101\n");
  CHECK(run({"minpoly", junk, "--seed", "1"}).code == cli::kUsage);
  CHECK(run({"minpoly", id, "--mode", "fast"}).code == cli::kUsage);
}

TEST_CASE("charpoly") {
  TempDir tmp;
  const PrimeField f;
  const auto id = tmp.put("id.smx", formats::write_smx(THMatrix::identity(f, 5)));
  const auto r = run({"charpoly", id, "--seed", "1"});
  CHECK(r.code == 0);
  Poly want = Poly::constant(f, f.one());
  for (int k = 0; k < 5; ++k) want = mul(want, Poly::linear_root(f, f.one()));
  CHECK(first_line(r.out) == poly_text(want));

  const auto z = tmp.put("z.smx", formats::write_smx(THMatrix::down_shift(f, 5)));
  CHECK(first_line(run({"charpoly", z, "--seed", "1"}).out) == "0 0 0 0 0 1");

  CHECK(run({"gen", "--n", "16", "--alpha-t", "2", "--alpha-h", "2", "--seed", "9", "--out", tmp.file("r.smx")}).code == 0);
  CHECK(run({"reconstruct", tmp.file("r.smx"), "--out", tmp.file("r.dmx")}).code == 0);
  const auto cp = run({"charpoly", tmp.file("r.smx"), "--beta", "2", "--seed", "4"});
  CHECK(cp.code == 0);
  CHECK(first_line(cp.out) == first_line(run({"oracle-charpoly", tmp.file("r.dmx")}).out));

  // A single attempt at beta = 1 on a derogatory matrix reports the divisor.
  const auto ng = run({"charpoly", id, "--seed", "1", "--retries", "1"});
  CHECK(ng.code == cli::kNotGeneric);
  CHECK(ng.out.rfind("not-generic degree=", 0) == 0);
  CHECK(ng.out.find("partial: ") != std::string::npos);

  const PrimeField small(7);
  const auto tiny = tmp.put("t.smx", formats::write_smx(THMatrix::identity(small, 6)));
  CHECK(run({"charpoly", tiny, "--seed", "1"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  TempDir tmp;
  const PrimeField f;
  const auto id = tmp.put("id.smx", formats::write_smx(THMatrix::identity(f, 4)));
  const auto good = tmp.put("good.txt", poly_text(Poly::linear_root(f, f.one())) + "\n");
  const auto bad = tmp.put("bad.txt", "0 1\n");
  const auto a = run({"verify", id, good, "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == "accept\n");
  const auto r = run({"verify", id, bad, "--seed", "1"});
  CHECK(r.code == cli::kRejected);
  CHECK(r.out == "reject\n");
  const auto junk = tmp.put("junk.txt", "1 q\n");
  CHECK(run({"verify", id, junk, "--seed", "1"}).code == cli::kUsage);
}

TEST_CASE("reconstruct and oracle subcommands") {
  TempDir tmp;
  const PrimeField f(101);
  const auto gen = run({"gen", "--n", "10", "--alpha-t", "3", "--p", "101", "--seed", "2", "--out", tmp.file("a.smx")});
  REQUIRE(gen.code == 0);
  const auto rc = run({"reconstruct", tmp.file("a.smx")});
  CHECK(rc.code == 0);
  CHECK(formats::read_dmx(rc.out) == reconstruct(formats::read_smx(formats::read_file(tmp.file("a.smx")))));
  const auto dmx = tmp.put("a.dmx", rc.out);
  CHECK(run({"oracle-rank", dmx}).out == "3\n");

  for (const char* at : {"1", "2", "4"}) {
    REQUIRE(run({"gen", "--n", "12", "--alpha-t", at, "--seed", at, "--out", tmp.file("t.smx")}).code == 0);
    REQUIRE(run({"reconstruct", tmp.file("t.smx"), "--out", tmp.file("t.dmx")}).code == 0);
    CHECK(run({"oracle-rank", tmp.file("t.dmx")}).out == std::string(at) + "\n");
  }

  const auto id = tmp.put("id.dmx", formats::write_dmx(DenseMatrix::identity(f, 3)));
  CHECK(run({"oracle-charpoly", id}).out == "100 3 98 1\n");
  CHECK(run({"oracle-minpoly", id}).out == "100 1\n");
  CHECK(run({"oracle-rank", id}).out == "1\n");
  CHECK(run({"oracle-rank", id, "--op", "sideways"}).code == cli::kUsage);
}

TEST_CASE("bench") {
  TempDir tmp;
  const auto r = run({"bench", "--sizes", "16,32", "--algorithms", "minpoly-bsgs,dense-charpoly", "--seeds", "1,2"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == bench::kCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);

  // Counters are reproducible; wall time is not compared.
  auto counters = [](const std::string& csv) {
    std::vector<std::string> keep;
    std::istringstream s(csv);
    std::string l;
    while (std::getline(s, l)) {
      const auto last = l.rfind(',');
      const auto wall = l.rfind(',', last - 1);
      keep.push_back(l.substr(0, wall) + l.substr(last));
    }
    return keep;
  };
  CHECK(counters(r.out) ==
        counters(run({"bench", "--sizes", "16,32", "--algorithms", "minpoly-bsgs,dense-charpoly", "--seeds", "1,2"}).out));

  CHECK(run({"bench", "--sizes", "16", "--out", tmp.file("b.csv")}).code == 0);
  CHECK(formats::read_file(tmp.file("b.csv")).rfind(std::string(bench::kCsvHeader), 0) == 0);

  CHECK(run({"bench", "--sizes", ""}).code == cli::kUsage);
  CHECK(run({"bench", "--sizes", "16", "--algorithms", ""}).code == cli::kUsage);
  CHECK(run({"bench", "--sizes", "16", "--algorithms", "quantum"}).code == cli::kUsage);
  CHECK(run({"bench", "--sizes", "512", "--algorithms", "dense-charpoly"}).code == cli::kUsage);
  CHECK(run({"bench", "--sizes", "1x"}).code == cli::kUsage);
}

TEST_CASE("selftest") {
  const auto a = run({"selftest"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(run({"selftest"}).out == a.out);
  const auto bad = run({"selftest", "--p", "15"});
  CHECK(bad.code == cli::kSelftestFailed);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

}  // TEST_SUITE
