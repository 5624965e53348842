// subrosa: build, verify and render Sub Rosa rhombus substitution tilings.
//
// Exit codes: 0 success, 1 verification or validation failure, 2 usage
// error, 3 tile cap exceeded.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subrosa/boundary.hpp"
#include "subrosa/edge_language.hpp"
#include "subrosa/patch_io.hpp"
#include "subrosa/rewrite.hpp"
#include "subrosa/rose.hpp"
#include "subrosa/substitution.hpp"
#include "subrosa/svg.hpp"
#include "subrosa/tiler.hpp"
#include "subrosa/validation.hpp"

namespace {

using namespace subrosa;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_labels(const std::vector<int>& v, std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) s += '-';
    s += std::to_string(v[i]);
  }
  return s;
}

void require_n(int n) {
  if (n < 2) throw UsageError("--n must be at least 2");
}

void require_k(int n, int k) {
  if (k < 1 || 2 * k > n) throw UsageError("--k must satisfy 1 <= k <= n/2");
}

int cmd_sigma(int n, bool use_alpha) {
  require_n(n);
  const EdgeSequence s = use_alpha ? alpha(n) : sigma(n);
  const std::size_t half = s.size() / 2;
  std::cout << join_labels(s.labels, 0, half) << '|' << join_labels(s.labels, half, s.size()) << '\n';
  return 0;
}

int cmd_boundary(int n, int k, const std::string& format) {
  require_n(n);
  require_k(n, k);
  const BoundaryWord w = super_boundary(n, k);
  if (format == "text") {
    std::cout << boundary_text(w);
    return 0;
  }
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["anchor"] = std::vector<std::int64_t>(w.anchor.coeffs().begin(), w.anchor.coeffs().end());
  j["letters"] = w.letters;
  nlohmann::ordered_json segs;
  for (char c = 'A'; c <= 'H'; ++c) segs[std::string(1, c)] = w.segment(c);
  j["segments"] = std::move(segs);
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_verify(int n, std::optional<int> only_k) {
  require_n(n);
  if (only_k) require_k(n, *only_k);
  bool all = true;
  for (int k = 1; 2 * k <= n; ++k) {
    if (only_k && k != *only_k) continue;
    const BoundaryWord w = super_boundary(n, k);
    const auto simple = simple_check(w);
    const bool balanced = balance_check(n, w.letters);
    const CrossingReport rep = crossing_condition(w);
    std::cout << "n=" << n << " k=" << k << " letters=" << w.size() << " balanced=" << (balanced ? "yes" : "no")
              << " simple=" << (simple.simple ? "yes" : "no") << '\n';
    for (const auto& p : rep.pairs) {
      std::cout << "  a=" << p.a << " b=" << p.b << ' ' << (p.pass ? "PASS" : "FAIL") << ' ' << p.projection;
      if (!p.pass) std::cout << " stuck=" << p.stuck << " (" << p.reason << ')';
      std::cout << '\n';
    }
    all = all && rep.pass && balanced && simple.simple;
  }
  std::cout << (all ? "verified" : "verification failed") << '\n';
  return all ? 0 : kExitFail;
}

int cmd_supertile(int n, int k, bool symmetric, const std::string& out, const std::string& argv_line) {
  require_n(n);
  require_k(n, k);
  PatchDocument doc;
  doc.patch = super_rhombus_patch(n, k, symmetric);
  doc.command_line = argv_line;
  write_text_file(out, to_json(doc));
  std::cout << "wrote " << doc.patch.size() << " tiles to " << out << '\n';
  return 0;
}

int cmd_iterate(int n, int generations, std::size_t max_tiles, const std::string& out, const std::string& argv_line) {
  require_n(n);
  if (generations < 0) throw UsageError("--generations must be >= 0");
  const Generation gen = iterate_from_rose(n, generations, max_tiles);
  PatchDocument doc;
  doc.generation = gen.index;
  doc.patch = gen.patch;
  doc.command_line = argv_line;
  write_text_file(out, to_json(doc));
  std::cout << "wrote generation " << gen.index << " (" << gen.patch.size() << " tiles) to " << out << '\n';
  return 0;
}

int cmd_render(const std::string& in, const std::string& out, double stroke, const std::string& palette) {
  const PatchDocument doc = patch_from_json(read_text_file(in));
  SvgOptions opt;
  opt.stroke_width = stroke;
  opt.palette = palette;
  write_text_file(out, render_svg(doc.patch, opt));
  std::cout << "rendered " << doc.patch.size() << " tiles to " << out << '\n';
  return 0;
}

std::optional<Polygon> parse_region(const std::string& text, const PatchDocument& doc) {
  if (text.empty()) return std::nullopt;
  const int n = doc.patch.n();
  if (text == "rose") {
    const Patch seed = seed_patch(n);
    const auto [start, word] = boundary_loop(seed);
    std::vector<CycloVector> corners;
    CycloVector p = start;
    for (DoubledDirection d : word) {
      corners.push_back(p);
      p.add_unit(d);
    }
    const double scale = std::pow(scaling_factor(n), doc.generation.value_or(0));
    return lattice_polygon(corners, scale);
  }
  int rn = 0;
  int rk = 0;
  char comma = 0;
  std::istringstream is(text.rfind("rhombus:", 0) == 0 ? text.substr(8) : std::string());
  if (!(is >> rn >> comma >> rk) || comma != ',' || !is.eof()) {
    throw UsageError("--region must be rhombus:N,K or rose");
  }
  if (rn != n) throw UsageError("--region rhombus:N,K disagrees with the document's n");
  require_k(rn, rk);
  const auto c = super_corners(rn, rk);
  return lattice_polygon({c.begin(), c.end()});
}

int cmd_validate(const std::string& in, const std::string& region) {
  const PatchDocument doc = patch_from_json(read_text_file(in));
  const ValidationReport rep = validate(doc.patch, parse_region(region, doc));
  std::cout << rep.to_json();
  return rep.pass() ? 0 : kExitFail;
}

std::string command_line(int argc, char** argv) {
  std::string s = "subrosa";
  for (int i = 1; i < argc; ++i) {
    s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub Rosa rhombic substitution tilings"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;

  auto* sig = app.add_subcommand("sigma", "print the edge substitution sequence");
  bool use_alpha = false;
  sig->add_option("--n", n, "symmetry parameter")->required();
  sig->add_flag("--alpha", use_alpha, "strip the corner runs");

  auto* bnd = app.add_subcommand("boundary", "print the super-rhombus boundary word");
  std::string format = "text";
  bnd->add_option("--n", n)->required();
  bnd->add_option("--k", k)->required();
  bnd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "check the crossing condition");
  std::optional<int> only_k;
  ver->add_option("--n", n)->required();
  ver->add_option("--k", only_k);

  auto* sup = app.add_subcommand("supertile", "write a super patch");
  bool symmetric = false;
  std::string out;
  sup->add_option("--n", n)->required();
  sup->add_option("--k", k)->required();
  sup->add_flag("--symmetric", symmetric, "rewrite whole symmetry orbits");
  sup->add_option("--out", out)->required();

  auto* itr = app.add_subcommand("iterate", "substitute repeatedly from the central rose");
  int generations = 1;
  std::size_t max_tiles = kDefaultMaxTiles;
  itr->add_option("--n", n)->required();
  itr->add_option("--generations", generations)->required();
  itr->add_option("--max-tiles", max_tiles);
  itr->add_option("--out", out)->required();

  auto* ren = app.add_subcommand("render", "render a patch document as SVG");
  std::string in;
  double stroke = 0.05;
  std::string palette = "classic";
  ren->add_option("input", in)->required();
  ren->add_option("--out", out)->required();
  ren->add_option("--stroke", stroke);
  ren->add_option("--palette", palette)->check(CLI::IsMember({"classic", "gray"}));

  auto* val = app.add_subcommand("validate", "validate a patch document");
  std::string region;
  val->add_option("input", in)->required();
  val->add_option("--region", region, "rhombus:N,K or rose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string argv_line = command_line(argc, argv);
  try {
    if (*sig) return cmd_sigma(n, use_alpha);
    if (*bnd) return cmd_boundary(n, k, format);
    if (*ver) return cmd_verify(n, only_k);
    if (*sup) return cmd_supertile(n, k, symmetric, out, argv_line);
    if (*itr) return cmd_iterate(n, generations, max_tiles, out, argv_line);
    if (*ren) return cmd_render(in, out, stroke, palette);
    if (*val) return cmd_validate(in, region);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
