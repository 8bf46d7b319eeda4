#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kBin = FRDS_BIN_PATH;
const std::string kFixtures = FRDS_FIXTURES_DIR;

int run(const std::string& args, const std::string& stdout_path = "",
        const std::string& stderr_path = "") {
  std::string cmd = kBin + " " + args;
  if (!stdout_path.empty()) cmd += " > " + stdout_path;
  if (!stderr_path.empty()) cmd += " 2> " + stderr_path;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "frds_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly, parse errors use code two") {
  CHECK(run("--help", "/dev/null") == 0);
  CHECK(run("bogus-subcommand", "/dev/null", "/dev/null") == 2);
  CHECK(run("detect", "/dev/null", "/dev/null") == 2);  // missing inputs
  CHECK(run("detect --method nope x.txt", "/dev/null", "/dev/null") == 2);
}

TEST_CASE("detect reproduces the golden outputs") {
  const fs::path dir = scratch("detect");
  CHECK(run("detect --method multi-marker " + kFixtures +
            "/detect/input.txt --out " + dir.string()) == 0);
  CHECK(slurp(dir / "input.tsv") ==
        slurp(kFixtures + "/detect/expected_multi.tsv"));

  CHECK(run("detect --method dominant " + kFixtures +
            "/detect/input.txt --out " + dir.string()) == 0);
  CHECK(slurp(dir / "input.tsv") ==
        slurp(kFixtures + "/detect/expected_dominant.tsv"));

  // Single input without --out goes to stdout, same bytes.
  const fs::path piped = dir / "stdout.tsv";
  CHECK(run("detect " + kFixtures + "/detect/input.txt",
            piped.string()) == 0);
  CHECK(slurp(piped) == slurp(kFixtures + "/detect/expected_multi.tsv"));
}

TEST_CASE("detect honours a custom marker inventory") {
  const fs::path dir = scratch("markers");
  spit(dir / "input.txt", "— oui\n« non »");
  CHECK(run("detect --markers " + kFixtures + "/markers/custom.txt " +
            (dir / "input.txt").string() + " --out " + dir.string()) == 0);
  // The custom inventory has only the «» pair: the dash line stays O.
  CHECK(slurp(dir / "input.tsv") ==
        "—\tO\noui\tO\n⏎\tO\n\n«\tDS\nnon\tDS\n»\tDS\n");
}

TEST_CASE("empty input produces an empty TSV and succeeds") {
  const fs::path dir = scratch("empty");
  CHECK(run("tokenize " + kFixtures + "/empty.txt --out " + dir.string()) ==
        0);
  CHECK(slurp(dir / "empty.tsv").empty());
}

TEST_CASE("bad paths exit with code two") {
  CHECK(run("detect /nonexistent/file.txt", "/dev/null", "/dev/null") == 2);
  CHECK(run("eval --gold /nonexistent --pred /nonexistent", "/dev/null",
            "/dev/null") == 2);
  CHECK(run("stats /nonexistent", "/dev/null", "/dev/null") == 2);
}

TEST_CASE("tokenize reproduces the golden output") {
  const fs::path dir = scratch("tokenize");
  CHECK(run("tokenize " + kFixtures + "/tokenize/input.txt --out " +
            dir.string()) == 0);
  CHECK(slurp(dir / "input.tsv") ==
        slurp(kFixtures + "/tokenize/expected.tsv"));
}

TEST_CASE("segment lists greedy sentence packs") {
  const fs::path dir = scratch("segment");
  const fs::path out = dir / "rows.tsv";
  CHECK(run("segment --max-len 7 " + kFixtures + "/segment/input.txt",
            out.string()) == 0);
  CHECK(slurp(out) == slurp(kFixtures + "/segment/expected.tsv"));
  CHECK(run("segment --max-len 0 " + kFixtures + "/segment/input.txt",
            "/dev/null", "/dev/null") == 2);
}

TEST_CASE("postprocess applies the clause majority and is idempotent") {
  const fs::path dir = scratch("post");
  CHECK(run("postprocess " + kFixtures + "/post/input.tsv --out " +
            dir.string()) == 0);
  CHECK(slurp(dir / "input.tsv") == slurp(kFixtures + "/post/expected.tsv"));

  const fs::path again = scratch("post_again");
  CHECK(run("postprocess " + (dir / "input.tsv").string() + " --out " +
            again.string()) == 0);
  CHECK(slurp(again / "input.tsv") ==
        slurp(kFixtures + "/post/expected.tsv"));

  CHECK(run("postprocess " + kFixtures + "/empty.txt", "/dev/null",
            "/dev/null") == 2);  // not a .tsv
}

TEST_CASE("eval against itself is perfect") {
  const fs::path dir = scratch("eval_self");
  const fs::path out = dir / "report.json";
  CHECK(run("eval --gold " + kFixtures + "/corpus/gold --pred " + kFixtures +
            "/corpus/gold", out.string()) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("overall").at("token").at("f1").get<double>() == 1.0);
  CHECK(j.at("overall").at("zme").at("score").get<double>() == 0.0);
}

TEST_CASE("eval reproduces the golden reports, bit for bit, twice") {
  const fs::path dir = scratch("eval_golden");
  const std::string base = "eval --gold " + kFixtures +
                           "/corpus/gold --pred " + kFixtures +
                           "/corpus/pred";
  for (const char* fmt : {"json", "csv"}) {
    const fs::path first = dir / (std::string("r1.") + fmt);
    const fs::path second = dir / (std::string("r2.") + fmt);
    CHECK(run(base + " --report " + fmt + " --out " + first.string()) == 0);
    CHECK(run(base + " --report " + fmt + " --out " + second.string()) == 0);
    const std::string body = slurp(first);
    CHECK(body == slurp(second));
    CHECK(body == slurp(kFixtures + std::string("/corpus/report.") + fmt));
  }
  // Worker count must not change a single byte.
  const fs::path serial = dir / "serial.json";
  const fs::path wide = dir / "wide.json";
  CHECK(run(base + " --jobs 1 --out " + serial.string()) == 0);
  CHECK(run(base + " --jobs 4 --out " + wide.string()) == 0);
  CHECK(slurp(serial) == slurp(wide));
}

TEST_CASE("eval rejects mismatched file sets and lengths") {
  const fs::path dir = scratch("eval_mismatch");
  fs::create_directories(dir / "subset");
  fs::copy_file(kFixtures + "/corpus/gold/a.tsv", dir / "subset" / "a.tsv");
  fs::copy_file(kFixtures + "/corpus/gold/b.tsv", dir / "subset" / "b.tsv");
  const fs::path err = dir / "stderr.txt";
  CHECK(run("eval --gold " + (dir / "subset").string() + " --pred " +
            kFixtures + "/corpus/pred", "/dev/null", err.string()) == 2);
  CHECK(slurp(err).find("c") != std::string::npos);

  fs::create_directories(dir / "gold1");
  fs::create_directories(dir / "pred1");
  spit(dir / "gold1" / "x.tsv", "a\tO\n");
  spit(dir / "pred1" / "x.tsv", "a\tO\nb\tO\n");
  CHECK(run("eval --gold " + (dir / "gold1").string() + " --pred " +
            (dir / "pred1").string(), "/dev/null", "/dev/null") == 2);
}

TEST_CASE("convert turns span records into token TSVs") {
  const fs::path dir = scratch("convert");
  const fs::path err = dir / "stderr.txt";
  CHECK(run("convert --from doccano-jsonl --to tsv " + kFixtures +
            "/convert/sample.jsonl --out " + dir.string(), "/dev/null",
            err.string()) == 0);
  for (const char* name : {"ch1.tsv", "sample-2.tsv", "ch2.tsv"}) {
    CHECK(slurp(dir / name) ==
          slurp(kFixtures + std::string("/convert/expected/") + name));
  }
  CHECK(slurp(err).find("ignored") != std::string::npos);

  const fs::path dup = scratch("convert_dup");
  spit(dup / "dup.jsonl",
       "{\"id\": \"x\", \"text\": \"a\", \"label\": []}\n"
       "{\"id\": \"x\", \"text\": \"b\", \"label\": []}\n");
  CHECK(run("convert --from doccano-jsonl --to tsv " +
            (dup / "dup.jsonl").string() + " --out " +
            (dup / "out").string(), "/dev/null", "/dev/null") == 2);
}

TEST_CASE("stats prints deterministic corpus totals") {
  const fs::path dir = scratch("stats");
  const fs::path out = dir / "stats.json";
  CHECK(run("stats " + kFixtures + "/corpus/gold", out.string()) == 0);
  CHECK(slurp(out) ==
        "{\"file_count\": 3, \"token_count\": 24, \"sentence_count\": 6, "
        "\"ds_percent_mean\": 25.000000, \"ds_percent_std\": 20.412415}\n");
}

}  // TEST_SUITE
