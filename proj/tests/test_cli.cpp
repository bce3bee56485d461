// End-to-end drive of the command line tool: every subcommand runs against a
// temporary directory and the test parses the files and summary lines the
// tool itself produced.  argv[1] is the path of the built binary.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::printf("PASS %s\n", what.c_str());
  } else {
    std::printf("FAIL %s\n", what.c_str());
    ++g_failures;
  }
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  fs::path out = g_dir / "stdout.txt";
  std::string cmd = g_cli + " " + args + " > " + out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  return RunResult{WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json last_summary(const std::string& stdout_text) {
  // the machine-readable summary is the last nonempty line
  std::istringstream in(stdout_text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return json::parse(last);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "tenspec_cli_test";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);

  // roots: json + csv + svg
  fs::path roots_json = g_dir / "roots.json";
  RunResult r = run("roots --n 30 --p 3 --mu-tilde 0.3333333333333333 --out " +
                    roots_json.string());
  expect(r.exit_code == 0, "roots exits 0");
  json rs = json::parse(slurp(roots_json));
  expect(rs["data"].size() == 30, "roots json has n entries");
  expect(rs["meta"]["p"] == 3, "roots json meta echoes p");
  json rsum = last_summary(r.stdout_text);
  expect(rsum["cmd"] == "roots" && rsum["status"] == "ok", "roots summary line");

  RunResult rcsv = run("roots --n 12 --p 4 --mu-tilde 0.25 --format csv --out " +
                       (g_dir / "roots.csv").string());
  expect(rcsv.exit_code == 0, "roots csv exits 0");
  std::string csv = slurp(g_dir / "roots.csv");
  expect(csv.rfind("re,im,residual\n", 0) == 0, "roots csv header");

  RunResult rsvg = run("roots --n 12 --p 4 --mu-tilde 0.25 --out " +
                       (g_dir / "roots.svg").string());
  expect(rsvg.exit_code == 0, "roots svg exits 0");
  expect(slurp(g_dir / "roots.svg").rfind("<svg", 0) == 0, "roots svg content");

  // byte-identical rerun
  RunResult again = run("roots --n 30 --p 3 --mu-tilde 0.3333333333333333 --out " +
                        (g_dir / "roots2.json").string());
  expect(again.exit_code == 0 &&
             slurp(roots_json) == slurp(g_dir / "roots2.json"),
         "identical config gives byte-identical output");

  // density
  RunResult d = run("density --p 3 --mu-tilde 0.3333333333333333 --grid 32 --out " +
                    (g_dir / "density.json").string() + " --format json");
  expect(d.exit_code == 0, "density exits 0");
  json dj = json::parse(slurp(g_dir / "density.json"));
  expect(dj["data"].size() == 32, "density grid size");
  expect(dj["data"][5].contains("rho"), "density rows have rho");

  // moments
  RunResult m = run("moments --p 2 --kmax 3 --out " + (g_dir / "moments.json").string());
  expect(m.exit_code == 0, "moments exits 0");
  json mj = json::parse(slurp(g_dir / "moments.json"));
  expect(mj["max_rel_error"].get<double>() < 1e-6, "moments accuracy");
  expect(mj["table"][2]["exact"] == "2", "Catalan number in the table");

  // thimble
  RunResult t = run("thimble --p 3 --z-mod 0.23 --z-arg 0.02 --format json --out " +
                    (g_dir / "thimble.json").string());
  expect(t.exit_code == 0, "thimble exits 0");
  json tj = json::parse(slurp(g_dir / "thimble.json"));
  expect(tj["saddles"].size() == 3, "thimble saddle count");
  expect(last_summary(t.stdout_text)["contributing"] == 2,
         "thimble reports two contributing saddles past the branch point");
  RunResult tsvg = run("thimble --p 4 --z-mod 0.01 --z-arg 0.02 --out " +
                       (g_dir / "thimble.svg").string());
  expect(tsvg.exit_code == 0 && slurp(g_dir / "thimble.svg").rfind("<svg", 0) == 0,
         "thimble svg");

  // predict-zeros
  RunResult pz = run("predict-zeros --p 3 --n 60 --mu-tilde 0.3333333333333333 --out " +
                     (g_dir / "radii.csv").string());
  expect(pz.exit_code == 0, "predict-zeros exits 0");
  std::string radii = slurp(g_dir / "radii.csv");
  expect(radii.rfind("radius\n", 0) == 0, "radii csv header");

  // mc
  RunResult mc = run("mc --n 4 --p 2 --preset psi-p-psibar-p --kind real "
                     "--samples 400 --seed 5 --out " +
                     (g_dir / "mc.json").string());
  expect(mc.exit_code == 0, "mc exits 0");
  json mcj = json::parse(slurp(g_dir / "mc.json"));
  expect(mcj["coefficients"].size() == 5, "mc coefficient rows");
  expect(mcj["meta"]["seed"] == 5, "mc meta echoes the seed");

  // charpoly from a tensor file
  fs::path tensor = g_dir / "tensor.json";
  {
    std::ofstream out(tensor);
    out << R"({"n":4,"p":4,"kind":"real","entries":[{"idx":[1,2,3,4],"re":2,"im":0}]})";
  }
  RunResult cp = run("charpoly --tensor " + tensor.string() + " --pf-pair --out " +
                     (g_dir / "poly.json").string());
  expect(cp.exit_code == 0, "charpoly exits 0");
  json pj = json::parse(slurp(g_dir / "poly.json"));
  expect(pj["coeffs"][0]["re"][0] == "4", "charpoly constant term is pf^2");

  // avg-charpoly via a preset
  RunResult av = run("avg-charpoly --n 6 --p 3 --preset single-bar-sum "
                     "--kind complex --out " +
                     (g_dir / "avg.json").string());
  expect(av.exit_code == 0, "avg-charpoly exits 0");
  json avj = json::parse(slurp(g_dir / "avg.json"));
  expect(avj["degree"] == 6, "avg-charpoly degree");

  // hist with the overlay law
  RunResult h = run("hist --in " + roots_json.string() +
                    " --bins 10 --overlay-p 3 --overlay-mu-tilde 0.3333333333333333 "
                    "--format json --out " +
                    (g_dir / "hist.json").string());
  expect(h.exit_code == 0, "hist exits 0");
  json hj = json::parse(slurp(g_dir / "hist.json"));
  expect(hj["meta"].contains("ks_distance"), "hist reports the KS distance");
  expect(hj["data"].size() == 10, "hist bin count");

  // verify
  RunResult v = run("verify --suite closed --quick");
  expect(v.exit_code == 0, "verify exits 0 on pass");
  expect(v.stdout_text.find("PASS") != std::string::npos, "verify prints PASS lines");

  // error paths: usage = 2, validation = 4, numerical = 3
  expect(run("roots --n 10").exit_code == 2, "missing flags exit 2");
  expect(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
  expect(run("charpoly --tensor " + tensor.string() + " --out x.json").exit_code == 2,
         "charpoly without couplings exits 2");
  {
    std::ofstream bad(g_dir / "bad.json");
    bad << "{broken";
  }
  expect(run("charpoly --tensor " + (g_dir / "bad.json").string() +
             " --pf-pair --out x.json")
                 .exit_code == 4,
         "malformed tensor file exits 4");
  expect(run("density --p 3 --mu-tilde -1 --out " + (g_dir / "x.csv").string())
                 .exit_code == 4,
         "invalid coupling exits 4");

  std::printf("%s: %d failure(s)\n", g_failures ? "FAILED" : "OK", g_failures);
  return g_failures == 0 ? 0 : 1;
}
