#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ARPS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const Run& r, const std::string& needle) { return r.out.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("table subcommand") {
  const Run r = run("table --example 3");
  CHECK(r.code == 0);
  CHECK(has(r, "x,t,exact,numeric,abs_error\n"));
  CHECK(has(r, "10,1,4050.54202549"));

  const auto dir = std::filesystem::temp_directory_path() / "arps_cli_table";
  std::filesystem::create_directories(dir);
  const Run w = run("table --table 5 --out " + (dir / "t5.csv").string());
  CHECK(w.code == 0);
  CHECK(std::filesystem::exists(dir / "t5.csv"));

  CHECK(run("table --example 2 --gamma 0.5").code == 0);
  CHECK(run("table").code == 2);
  CHECK(run("table --example 3 --table 4").code == 2);
}

TEST_CASE("transform subcommand") {
  const Run r = run("transform --fn t^1 --n 2 --s 1");
  CHECK(r.code == 0);
  CHECK(has(r, "exact     2\n"));
  CHECK(has(r, "numeric   2"));
  CHECK(run("transform --fn t^0.5 --n 1 --s 4").code == 0);
  CHECK(run("transform --fn sin --n 1 --s 4").code == 2);
  CHECK(run("transform --fn t --n 3 --s 4").code == 2);
}

TEST_CASE("solve subcommand") {
  const Run r = run("solve --example 4 --alpha 1 --order 6 --at 0:1");
  CHECK(r.code == 0);
  CHECK(has(r, "y(0, 1) = -0.41585"));
  CHECK(has(r, "verified"));

  const Run s = run(std::string("solve --spec ") + ARPS_SPEC_DIR + "/example3.json --at 0:0.25");
  CHECK(s.code == 0);
  CHECK(has(s, "c_2 = 1*cosh(1*x)"));
  CHECK(has(s, "y(0, 0.25) = 0.0314131"));

  CHECK(run("solve").code == 2);
  CHECK(run("solve --example 3 --gamma 2").code == 2);
  CHECK(run("solve --example 3 --at 1").code == 2);
  CHECK(run("solve --example 9").code == 2);
  CHECK(run("solve --example 3 --alpha 1.5").code == 2);
}

TEST_CASE("validate subcommand") {
  const Run r = run("validate --quiet");
  CHECK(r.code == 0);
  CHECK(has(r, " 0 failed"));
}

TEST_CASE("surface subcommand") {
  const auto dir = std::filesystem::temp_directory_path() / "arps_cli_surface";
  std::filesystem::remove_all(dir);
  const Run r = run("surface --example 3 --nx 3 --nt 2 --dir " + dir.string());
  CHECK(r.code == 0);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 5);

  const auto env_dir = std::filesystem::temp_directory_path() / "arps_cli_env";
  std::filesystem::remove_all(env_dir);
  setenv("ARPS_OUTPUT_DIR", env_dir.c_str(), 1);
  CHECK(run("surface --example 4 --alpha 1 --nx 2 --nt 2 --stem env").code == 0);
  unsetenv("ARPS_OUTPUT_DIR");
  CHECK(std::filesystem::exists(env_dir / "env_exact.dat"));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
