#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "rays/figures.hpp"

using namespace rays;
namespace fs = std::filesystem;

namespace {
struct Element {
  std::string tag;
  std::map<std::string, std::string> attrs;
};

std::vector<Element> parse_svg(const std::string& text) {
  static const std::regex elem(R"(<(/?[A-Za-z]+)((?:\s+[\w:-]+="[^"]*")*)\s*/?>)");
  static const std::regex attr(R"(([\w:-]+)="([^"]*)\")");
  std::vector<Element> out;
  for (std::sregex_iterator it(text.begin(), text.end(), elem), end; it != end; ++it) {
    Element e{(*it)[1].str(), {}};
    std::string a = (*it)[2].str();
    for (std::sregex_iterator jt(a.begin(), a.end(), attr); jt != end; ++jt) e.attrs[(*jt)[1].str()] = (*jt)[2].str();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool same_value(const std::string& a, const std::string& b) {
  auto ta = tokens(a), tb = tokens(b);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    char* ea = nullptr;
    char* eb = nullptr;
    double x = std::strtod(ta[i].c_str(), &ea), y = std::strtod(tb[i].c_str(), &eb);
    bool numeric = *ea == '\0' && *eb == '\0' && ea != ta[i].c_str() && eb != tb[i].c_str();
    if (numeric ? std::fabs(x - y) > 1e-3 : ta[i] != tb[i]) return false;
  }
  return true;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void compare(const std::string& got, const std::string& want, const std::string& name) {
  auto a = parse_svg(got), b = parse_svg(want);
  REQUIRE_MESSAGE(a.size() == b.size(), name);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE_MESSAGE(a[i].tag == b[i].tag, name << " element " << i);
    REQUIRE_MESSAGE(a[i].attrs.size() == b[i].attrs.size(), name << " element " << i);
    for (const auto& [k, v] : b[i].attrs) {
      auto it = a[i].attrs.find(k);
      REQUIRE_MESSAGE(it != a[i].attrs.end(), name << " element " << i << " lacks " << k);
      CHECK_MESSAGE(same_value(it->second, v), name << " element " << i << " " << k);
    }
  }
}

std::size_t count_tag(const std::vector<Element>& els, const std::string& tag) {
  return std::count_if(els.begin(), els.end(), [&](const Element& e) { return e.tag == tag; });
}

const fs::path golden = RAYS_GOLDEN_DIR;
}  // namespace

TEST_CASE("figures match the golden files") {
  fs::path dir = fs::temp_directory_path() / "rays_figures_test";
  fs::remove_all(dir);
  std::string d = dir.string();
  const char* argv[] = {"rays", "--out", d.c_str(), "figures"};
  std::ostringstream out, err;
  REQUIRE(cli::run(4, argv, out, err) == 0);
  for (const char* name : {"openings.svg", "ksigma.svg", "rays.svg"}) {
    std::string got = slurp(dir / name), want = slurp(golden / name);
    REQUIRE(!want.empty());
    compare(got, want, name);
    CHECK(got == want);
  }
  fs::remove_all(dir);
}

TEST_CASE("openings figure structure") {
  auto openings = enumerate_openings(8);
  auto els = parse_svg(openings_circle_svg(openings));
  CHECK(count_tag(els, "path") == 2 * openings.size());
  CHECK(count_tag(els, "circle") == 1);
  std::size_t period3 = 0;
  for (const auto& e : els)
    if (e.tag == "path" && e.attrs.at("data-p") == "3") ++period3;
  CHECK(period3 == 2);
}

TEST_CASE("K_sigma figure structure") {
  SigmaParam sp = SigmaParam::dyadic(3);
  auto els = parse_svg(ksigma_hierarchy_svg(sp, 6));
  std::size_t expected = 0;
  for (int n = 2; n <= 6; ++n) expected += build_level(sp, n).unwrapped().size();
  // one background rect
  CHECK(count_tag(els, "rect") == expected + 1);
}

TEST_CASE("ray figure structure") {
  RealParam c = RealParam::parse("-1");
  std::vector<RayPolyline> rays{trace_ray(c, Angle(1, 3), 12), trace_ray(c, Angle(2, 3), 12)};
  auto els = parse_svg(ray_overlay_svg(c.c, rays, Viewport{}));
  REQUIRE(count_tag(els, "polyline") == 2);
  // points outside the viewport are dropped
  const Viewport v;
  std::size_t inside = 0;
  for (const auto& p : rays[0].points) {
    double x = p.re.to_double(), y = p.im.to_double();
    inside += x >= v.xmin && x <= v.xmax && y >= v.ymin && y <= v.ymax;
  }
  CHECK(inside < rays[0].points.size());
  for (const auto& e : els)
    if (e.tag == "polyline") CHECK(tokens(e.attrs.at("points")).size() == 2 * inside);
  auto ppm = escape_time_ppm(c.c, Viewport{}, 16, 12);
  CHECK(ppm.rfind("P6\n16 12\n255\n", 0) == 0);
  CHECK(ppm.size() == std::string("P6\n16 12\n255\n").size() + 16 * 12 * 3);
  CHECK(escape_time_ppm(c.c, Viewport{}, 16, 12) == ppm);
}
