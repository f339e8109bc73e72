#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "dlat/cli.hpp"
#include "dlat/io.hpp"

using dlat::cli::run_command;

namespace {

std::string data(const std::string& name) {
  return std::string(DLAT_TEST_DIR) + "/data/" + name;
}

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  std::ostringstream os;
  int code = run_command(std::move(args), os);
  return {code, os.str()};
}

}  // namespace

TEST_CASE("analyze the diamond") {
  Run r = run({"analyze", data("diamond.lat")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n = 1\n") != std::string::npos);
  CHECK(r.out.find("complete_intersection = true\n") != std::string::npos);
  CHECK(r.out.find("f_sum = 14\n") != std::string::npos);
  CHECK(r.out.find("upper = 2\n") != std::string::npos);
}

TEST_CASE("check accepts the fixtures") {
  for (const char* f : {"diamond.lat", "b3.lat", "chain3.lat", "v5.lat",
                        "dd.lat", "vee.lat", "antichain2.lat"}) {
    Run r = run({"check", data(f)});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("status = ok\n") != std::string::npos);
  }
}

TEST_CASE("check rejects the pentagon with a witness") {
  Run r = run({"check", data("n5.lat")});
  CHECK(r.code == 2);
  CHECK(r.out.find("error = not_distributive\n") != std::string::npos);
  CHECK(r.out.find("witness = ") != std::string::npos);
}

TEST_CASE("check rejects M3") {
  Run r = run({"check", data("m3.lat")});
  CHECK(r.code == 2);
  CHECK(r.out.find("error = not_distributive\n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"analyze"}).code == 1);  // missing file argument
}

TEST_CASE("missing input file exits 2") {
  CHECK(run({"analyze", data("no_such_file.lat")}).code == 2);
}

TEST_CASE("analyze of a poset file is an input error") {
  CHECK(run({"analyze", data("vee.lat")}).code == 2);
}

TEST_CASE("enumerate summary") {
  Run r = run({"enumerate", "--max", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lattices_tested = 9\n") != std::string::npos);
  CHECK(r.out.find("failures = 0\n") != std::string::npos);
}

TEST_CASE("enumerate is deterministic across jobs") {
  Run one = run({"enumerate", "--max", "4", "--jobs", "1"});
  Run two = run({"enumerate", "--max", "4", "--jobs", "3"});
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
}

TEST_CASE("prune emits a parseable lattice") {
  Run r = run({"prune", data("b3.lat")});
  REQUIRE(r.code == 0);
  dlat::InputDocument doc = dlat::parse_input(r.out);
  dlat::DistLattice L = dlat::validate_distributive_lattice(
      dlat::build_from_document(doc).poset);
  CHECK(L.size() == 4);  // cube minus the up-set of an atom

  Run at = run({"prune", data("chain3.lat"), "--at", "c"});
  REQUIRE(at.code == 0);
  CHECK(at.out == "type lattice\ncover b a\n");

  CHECK(run({"prune", data("chain3.lat"), "--at", "b"}).code == 2);
  CHECK(run({"prune", data("chain3.lat"), "--at", "zzz"}).code == 2);
}

TEST_CASE("birkhoff applied twice is the identity up to isomorphism") {
  for (const char* f : {"diamond.lat", "b3.lat", "chain3.lat", "v5.lat", "dd.lat"}) {
    Run as_poset = run({"birkhoff", data(f)});
    REQUIRE(as_poset.code == 0);

    std::string tmp = std::string(DLAT_TEST_DIR) + "/tmp_roundtrip.lat";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << as_poset.out;
    }
    Run back = run({"birkhoff", tmp});
    REQUIRE(back.code == 0);

    dlat::DistLattice original = dlat::validate_distributive_lattice(
        dlat::build_from_document(
            dlat::parse_input(dlat::cli::detail::read_file(data(f))))
            .poset);
    dlat::DistLattice rebuilt = dlat::validate_distributive_lattice(
        dlat::build_from_document(dlat::parse_input(back.out)).poset);
    CHECK(dlat::canonical_isomorphic(original, rebuilt));
    std::remove(tmp.c_str());
  }
}

TEST_CASE("ideal writes to a file with -o") {
  std::string tmp = std::string(DLAT_TEST_DIR) + "/tmp_ideal.txt";
  Run r = run({"ideal", data("diamond.lat"), "-o", tmp});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::string bytes = dlat::cli::detail::read_file(tmp);
  CHECK(bytes ==
        "# ideal I(L): 1 generators, ambient 4, codim 1\n"
        "x[a]*x[b] - x[top]*x[bot]\n");
  std::remove(tmp.c_str());
}

TEST_CASE("reports use sorted key = value lines") {
  Run r = run({"analyze", data("b3.lat")});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line, prev_key;
  while (std::getline(in, line)) {
    auto eq = line.find(" = ");
    REQUIRE(eq != std::string::npos);
    std::string key = line.substr(0, eq);
    CHECK(prev_key < key);
    prev_key = key;
  }
}
