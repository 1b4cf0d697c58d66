// Black-box checks of the command-line tool.  argv[1] is the binary path.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAILED: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-binary>\n";
    return 1;
  }
  std::string bin = argv[1];

  {
    auto r = run(bin + " multiply --system a1 --w s1 --v s1");
    check(r.status == 0, "multiply exits 0");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    bool ok = !j.is_discarded() && j["system"] == "a1" && j["terms"].size() == 2;
    check(ok, "multiply emits the quadratic relation as JSON");
    if (ok) {
      bool saw_e = false, saw_s1 = false;
      for (const auto& t : j["terms"]) {
        auto word = t["u"]["word"];
        if (word.empty() && t["text"] == "Q1") saw_e = true;
        if (word.size() == 1 && word[0] == 1 && t["text"] == "Q1 - 1") saw_s1 = true;
      }
      check(saw_e && saw_s1, "multiply terms are e and s1 with the expected coefficients");
    }
  }

  {
    auto r = run(bin + " multiply --system a1 --format csv --w s1 --v s1");
    check(r.status == 0 && r.out.find("u,poly") == 0, "csv output has a header");
  }

  {
    auto r = run(bin + " constant --system a1 --w s1 --v s1 --u 't[3]'");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.status == 0 && !j.is_discarded() && j["text"] == "0" && j["poly"].empty(),
          "constant outside the support is the zero polynomial");
  }

  {
    auto r = run(bin + " multiply --system a1 --w 't[1 2]' --v s1");
    check(r.status == 2, "malformed element exits 2");
  }

  {
    auto r = run(bin + " multiply --system nope --w s1 --v s1");
    check(r.status != 0, "unknown system is rejected");
  }

  {
    auto r = run(bin + " multiply --w s1");
    check(r.status == 2, "missing required option exits 2");
  }

  {
    auto r = run(bin + " presets");
    check(r.status == 0 && r.out.find("a1_affine") != std::string::npos,
          "presets lists shipped systems");
  }

  {
    auto r = run(bin + " paths --system a1 --shape 't[1]' --from '[1]'");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.status == 0 && !j.is_discarded() && j["paths"].size() == 3,
          "paths enumerates rank-one paths");
  }

  {
    auto r = run(bin +
                 " galleries --system a1 --at '[0]' --start '-e' --omega '+e' --type s1");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.status == 0 && !j.is_discarded() && j["galleries"].size() == 2 &&
              j["sum_text"] == "Q1",
          "galleries reports folded galleries and their sum");
  }

  {
    auto r1 = run(bin + " multiply --system a1_affine --w 't[0,0,1]' --v 't[0,0,1]'");
    auto r2 = run(bin + " multiply --system a1_affine --w 't[0,0,1]' --v 't[0,0,1]'");
    check(r1.status == 0 && r1.out == r2.out, "output is deterministic across runs");
  }

  {
    auto r = run(bin + " verify q1 --system a1 --suite small");
    check(r.status == 0, "verify q1 passes on the small suite");
  }

  {
    auto r = run(bin + " verify oracle --system a1 --suite small");
    check(r.status == 0, "verify oracle passes on the small suite");
  }

  if (g_failures) {
    std::cout << g_failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
