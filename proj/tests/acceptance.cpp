// One line per acceptance criterion; nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "fglforge/acceptance.hpp"

namespace {

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

void print(int id, const std::string& name, bool pass, double seconds, double limit, const std::string& detail) {
  std::printf("[%s] %2d  %-30s %7.2fs", pass ? "PASS" : "FAIL", id, name.c_str(), seconds);
  if (limit > 0) {
    std::printf("  (limit %.0fs)", limit);
  } else {
    std::printf("  (no limit)");
  }
  if (!detail.empty()) std::printf("  %s", detail.c_str());
  std::printf("\n");
}

}  // namespace

int main() {
  bool all = true;
  for (const auto& r : fglforge::run_acceptance()) {
    print(r.id, r.name, r.pass, r.seconds, r.limit_seconds, r.detail);
    all = all && r.pass;
  }

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::string cmd = std::string("\"") + FGLFORGE_CLI + "\" selftest --format json";
  const Captured first = capture(cmd), second = capture(cmd);
  std::string detail;
  if (first.status != 0) detail = "first run exited " + std::to_string(first.status);
  else if (second.status != 0) detail = "second run exited " + std::to_string(second.status);
  else if (first.out != second.out) detail = "outputs differ";
  else if (first.out.empty()) detail = "no output";
  const double seconds = std::chrono::duration<double>(clock::now() - start).count();
  print(10, "CLI selftest determinism", detail.empty(), seconds, 0, detail);
  all = all && detail.empty();

  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
