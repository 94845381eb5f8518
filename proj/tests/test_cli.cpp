#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "dessinkit/belyi.hpp"
#include "dessinkit/gallery.hpp"
#include "dessinkit/models.hpp"
#include "support.hpp"

using namespace dessinkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("dessin info on the gallery") {
  const Run r = run({"dessin", "info", "gallery:1"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "degree = 36"));
  CHECK(has_line(r.out, "black = 6 3^10"));
  CHECK(has_line(r.out, "white = 12 2^12"));
  CHECK(has_line(r.out, "genus = 1"));
  CHECK(has_line(r.out, "group_order = 42467328"));
  CHECK(has_line(r.out, "regular_genus = 14155777"));
  CHECK(run({"dessin", "info", "gallery:1"}).out == r.out);

  const Run j = run({"--json", "dessin", "info", "gallery:1"});
  const auto doc = nlohmann::ordered_json::parse(j.out);
  CHECK(doc["group_order"] == 42467328);
  CHECK(doc["euler_characteristic"] == -28311552);
  CHECK(doc.begin().key() == "degree");
}

TEST_CASE("dessin comparisons") {
  const Run reg = run({"dessin", "reg-iso", "gallery:1", "gallery:4"});
  CHECK(reg.code == 1);
  CHECK(has_line(reg.out, "reason = diagonal order exceeds component order"));
  CHECK(run({"dessin", "iso", "gallery:2", "gallery:2"}).code == 0);
  CHECK(run({"dessin", "iso", "gallery:1", "gallery:2"}).code == 1);
  const Run w = run({"dessin", "witness", "gallery:1", "gallery:3"});
  CHECK(w.code == 0);
  CHECK(has_line(w.out, "image2 = (17,29)(21,33)"));
  CHECK(has_line(w.out, "verdict = SeparatesByKernel"));
}

TEST_CASE("words") {
  const Run e = run({"word", "eval", "gallery:3", "--word", "[x^-1 y^2 x, x y]"});
  CHECK(e.code == 0);
  CHECK(has_line(e.out, "image = (17,29)(21,33)"));
  CHECK(run({"word", "commutes", "gallery:1", "--word", "x^6"}).code == 0);
}

TEST_CASE("gallery export reproduces the files") {
  const Run one = run({"gallery", "export", "--k", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == gallery::text(4));
  const auto dir = std::filesystem::temp_directory_path() / "dessinkit_cli_export";
  std::filesystem::remove_all(dir);
  CHECK(run({"gallery", "export", "--out", dir.string()}).code == 0);
  for (int k = 1; k <= gallery::kCount; ++k) {
    std::ifstream in(dir / ("d" + std::to_string(k) + ".dessin"), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == gallery::text(k));
  }
  std::filesystem::remove_all(dir);
  CHECK(run({"gallery", "list"}).code == 0);
}

TEST_CASE("model traces") {
  const Run r = run({"model", "sec31", "--k", "2", "--trace"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "4^(omega y^2) = 17"));
  CHECK(has_line(r.out, "4^(y^2 omega) = 5"));
  CHECK(has_line(r.out, "commutes_with_y2 = false"));
  const Run p = run({"model", "sec32", "--p", "5", "--k", "1", "--variant", "j"});
  CHECK(has_line(p.out, "commutes_with_y2 = false"));
  CHECK(run({"model", "sec32", "--p", "5", "--k", "1", "--variant", "q"}).code == 2);
}

TEST_CASE("belyi commands mirror the library") {
  const Run b = run({"belyi", "bmn", "--m", "2", "--n", "1"});
  CHECK(has_line(b.out, "map = " + bmn({2, 1}).to_string()));
  CHECK(has_line(b.out, "B(2/3) = 1"));
  const Run c = run({"belyi", "crit", "(X+27)^3/(243*(X-9)^2)", "--profile", "0,-27,9,inf"});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "critical_values = [0, 1, inf]"));
  CHECK(has_line(c.out, "propagated = [0, 1, inf]"));
  CHECK(has_line(run({"belyi", "sturm", "X^2-2", "--lo", "-2", "--hi", "2"}).out, "roots = 2"));
  CHECK(run({"belyi", "increasing", "4*X*(1-X)", "--lo", "0", "--hi", "1/4"}).code == 0);
  CHECK(run({"belyi", "increasing", "4*X*(1-X)", "--lo", "0", "--hi", "3/4"}).code == 1);
  const Run red = run({"belyi", "reduce", "1"});
  CHECK(red.code == 0);
  CHECK(has_line(red.out, "a0 = 5/8"));
  CHECK(has_line(red.out, "verified = true"));
}

TEST_CASE("tower and lemma commands") {
  const Run d = run({"tower", "distinct", "--p", "3", "--q", "3"});
  CHECK(d.code == 0);
  CHECK(has_line(d.out, "conjugates = 6"));
  CHECK(run({"tower", "jinv", "--p", "3", "--q", "2"}).code == 0);
  CHECK(run({"tower", "distinct", "--p", "3", "--q", "8"}).code == 2);
  const Run l = run({"lemma", "two-adic", "--poly", "X+1", "--c", "32", "--x0", "16"});
  CHECK(l.code == 0);
  CHECK(has_line(l.out, "m = 17"));
  CHECK(has_line(l.out, "certified = true"));
  const Run viap = run({"lemma", "two-adic", "--poly", "X+1", "--c", "32", "--p", "3", "--q", "4", "--gamma", "1"});
  CHECK(viap.out == l.out);
  CHECK(run({"lemma", "delta-tilde", "--d", "1,1,1", "--c0", "1", "--c", "4", "--alpha-nu", "4"}).code == 0);
  CHECK(run({"lemma", "delta-tilde", "--d", "1,1,1", "--c0", "1", "--c", "2", "--alpha-nu", "1"}).code == 1);
}

TEST_CASE("errors and exit codes") {
  const Run missing = run({"dessin", "info", "/nonexistent/file.dessin"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: IoError:", 0) == 0);
  CHECK(run({"dessin", "frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run cap = run({"--cap-group-order", "1000", "dessin", "info", "gallery:1"});
  CHECK(cap.code == 3);
  CHECK(cap.err.rfind("error: ResourceLimit:", 0) == 0);
  const Run guard = run({"--cap-stage-size", "5", "belyi", "reduce", "1"});
  CHECK(guard.code == 3);
  CHECK(run({"belyi", "crit", "X^3-6*X"}).code == 2);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
}
