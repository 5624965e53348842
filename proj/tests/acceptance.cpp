// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "subrosa/boundary.hpp"
#include "subrosa/edge_language.hpp"
#include "subrosa/patch_io.hpp"
#include "subrosa/rewrite.hpp"
#include "subrosa/substitution.hpp"
#include "subrosa/svg.hpp"
#include "subrosa/tiler.hpp"
#include "subrosa/validation.hpp"

using namespace subrosa;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string labels_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "-" : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

Outcome sigma_tables() {
  // midpoint split, corner runs included
  const std::map<int, std::pair<std::string, std::string>> table = {
      {2, {"0", "0"}},
      {3, {"1", "1"}},
      {4, {"0-2-0", "0-2-0"}},
      {5, {"1-3-1", "1-3-1"}},
      {6, {"0-2-4-0-2-0", "0-2-0-4-2-0"}},
      {7, {"1-3-5-1-3-1", "1-3-1-5-3-1"}},
      {8, {"0-2-4-6-0-2-0-4-2-0", "0-2-4-0-2-0-6-4-2-0"}},
      {9, {"1-3-5-7-1-3-1-5-3-1", "1-3-5-1-3-1-7-5-3-1"}},
      {10, {"0-2-4-6-8-0-2-0-4-2-0-6-4-2-0", "0-2-4-6-0-2-4-0-2-0-8-6-4-2-0"}},
      {11, {"1-3-5-7-9-1-3-1-5-3-1-7-5-3-1", "1-3-5-7-1-3-5-1-3-1-9-7-5-3-1"}},
      {12, {"0-2-4-6-8-10-0-2-0-4-2-0-6-4-2-0-8-6-4-2-0", "0-2-4-6-8-0-2-4-6-0-2-4-0-2-0-10-8-6-4-2-0"}},
  };
  Outcome o;
  for (const auto& [n, halves] : table) {
    const auto [in, out] = split_in_out(sigma(n));
    if (labels_text(in) != halves.first || labels_text(out) != halves.second) {
      o.fail("n=" + std::to_string(n) + " got " + labels_text(in) + "|" + labels_text(out));
    }
  }
  if (o.pass) o.detail = "n=2..12 match both halves";
  return o;
}

Outcome scaling_consistency() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 100; ++n) {
    const double rel = std::abs(edge_length_from_sigma(n) - scaling_factor(n)) / scaling_factor(n);
    worst = std::max(worst, rel);
    if (rel >= 1e-9) o.fail("n=" + std::to_string(n) + " relative error " + std::to_string(rel));
  }
  if (o.pass) {
    std::ostringstream s;
    s << "n=2..100, worst relative error " << worst;
    o.detail = s.str();
  }
  return o;
}

Outcome example_one() {
  Outcome o;
  const int n = 5;
  const SymmetryContext ctx(n);
  // doubled directions, read from the end of the leftmost rose segment
  const Word reference = {-1, -3, -1, -3, 1,  3,  -1, 1,  -3, -1, 3,  1,  3,  1,  5,  7,  3,  5,
                      9,  7,  9,  7,  -9, -7, 9,  -9, 7,  9,  -7, -9, -7, -9, -5, -3, -7, -5};
  Word expect;
  for (DoubledDirection d : reference) expect.push_back(ctx.wrap(d));
  const BoundaryWord w = super_boundary(n, 2);
  // the reference word is read in a frame turned by -pi/10 relative to ours
  const Word ours = ctx.turn(w.letters, -2);
  std::optional<std::size_t> shift;
  for (std::size_t r = 0; r < ours.size() && !shift; ++r) {
    Word rot(ours.begin() + static_cast<long>(r), ours.end());
    rot.insert(rot.end(), ours.begin(), ours.begin() + static_cast<long>(r));
    if (rot == expect) shift = r;
  }
  if (w.size() != 36) o.fail("word has " + std::to_string(w.size()) + " letters");
  if (!shift) o.fail("no cyclic rotation of the turned word equals the reference word");
  const std::string proj = project(n, ours, 3, 5).abstract();
  if (proj != "aaababAAABAB") o.fail("projection (3/2,5/2) is " + proj);
  if (o.pass) o.detail = "36 letters, equal after turning by -2 and rotating by " + std::to_string(*shift) + "; projection " + proj;
  return o;
}

Outcome verify_all() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 2; n <= 25; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const BoundaryWord w = super_boundary(n, k);
      const CrossingReport rep = crossing_condition(w);
      pairs += rep.pairs.size();
      if (!rep.pass || !balance_check(n, w.letters) || !simple_check(w).simple) {
        o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const CrossingReport five = crossing_condition(super_boundary(5, 2));
  if (five.pairs.size() != 10 || !five.pass) o.fail("(5,2) does not give 10 passing pairs");
  if (o.pass) o.detail = "n=2..25 all k, " + std::to_string(pairs) + " pairs; (5,2) has 10 passing pairs";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const int n = 5;
  const DoubledDirection a = 3;
  const DoubledDirection b = 5;
  std::size_t words = 0;
  std::size_t reducible = 0;
  auto check = [&](const Word& w) {
    ++words;
    const Matching canon = canonical_matching(n, w);
    const bool got = reduce_to_empty(n, w, canon).success;
    if (got != oracle::satisfies_crossing_condition(n, w, canon)) {
      o.fail("canonical matching disagrees on a word of length " + std::to_string(w.size()));
    }
    bool any = false;
    for (const auto& m : oracle::noncrossing_matchings(n, w)) {
      if (oracle::satisfies_crossing_condition(n, w, m)) {
        any = true;
        break;
      }
    }
    reducible += any;
    if (reducible_with_some_matching(n, w) != any) {
      o.fail("matching search disagrees on a word of length " + std::to_string(w.size()));
    }
  };
  for (int len = 0; len <= 12; len += 2) oracle::for_each_balanced_word(a, b, n, len, check);
  std::mt19937 rng(16);
  const SymmetryContext ctx(n);
  for (int t = 0; t < 1000; ++t) {
    Word w;
    for (int i = 0; i < 8; ++i) {
      const DoubledDirection d = rng() % 2 ? a : b;
      w.push_back(d);
      w.push_back(ctx.antiparallel(d));
    }
    std::shuffle(w.begin(), w.end(), rng);
    check(w);
  }
  if (o.pass) {
    o.detail = std::to_string(words) + " words (all of length <= 12, 1000 random of length 16), " +
               std::to_string(reducible) + " reducible";
  }
  return o;
}

Outcome tiling_validity() {
  Outcome o;
  std::size_t patches = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const Patch p = super_rhombus_patch(n, k);
      const auto c = super_corners(n, k);
      const ValidationReport rep = validate(p, lattice_polygon({c.begin(), c.end()}));
      for (const auto& chk : rep.checks) {
        if (!chk.pass) o.fail(tag + " " + chk.name + ": " + chk.counterexample);
      }
      const double s = scaling_factor(n);
      const double area = s * s * std::sin(k * std::numbers::pi / n);
      if (std::abs(p.area() - area) > 1e-6 * area) o.fail(tag + " area");
      // interior tiles against the crossings of the canonical matching
      Patch inner(n);
      const Patch roses = super_rose_sectors(n, k);
      const Patch edges = super_edge_tiles(n, k);
      for (const auto& t : p.tiles()) {
        if (!roses.contains(t) && !edges.contains(t)) inner.insert(t);
      }
      const BoundaryWord w = super_boundary(n, k);
      if (inner.shape_counts() != oracle::crossings_by_shape(n, w.letters, canonical_matching(n, w.letters))) {
        o.fail(tag + " shape counts differ from crossing counts");
      }
      ++patches;
    }
  }
  if (super_rhombus_patch(3, 1).size() != 12) o.fail("n=3 does not give 12 tiles");
  if (super_rhombus_patch(2, 1).size() != 4) o.fail("n=2 does not give 4 tiles");
  if (o.pass) o.detail = std::to_string(patches) + " super patches valid; n=3 has 12 tiles, n=2 has 4";
  return o;
}

Outcome primitivity() {
  Outcome o;
  for (int n = 2; n <= 11; ++n) {
    const bool second = n >= 3 && n <= 5;
    const PrimitivityReport r = primitivity_check(n, second);
    if (!r.all_shapes) o.fail("n=" + std::to_string(n) + " misses a shape");
    if (second) {
      // entry k-1 is prototile k
      for (std::size_t k = 0; k < r.rose_in_second_order.size(); ++k) {
        if (!r.rose_in_second_order[k]) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k + 1) + " has no rose");
      }
      if (r.rose_in_second_order.size() != static_cast<std::size_t>(n / 2)) o.fail("rose report size");
    }
  }
  if (o.pass) o.detail = "all shapes for n=2..11; second-order roses for n=3,4,5";
  return o;
}

Outcome generation_symmetry() {
  Outcome o;
  std::string skipped;
  std::string done;
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::optional<int>> rose;
    for (int g = 0; g <= 2; ++g) {
      try {
        const Generation gen = iterate_from_rose(n, g);
        if (!symmetry_check(gen)) o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g) + " not symmetric");
        rose.push_back(central_rose_rotation(gen.patch));
        done += " (" + std::to_string(n) + "," + std::to_string(g) + ")";
      } catch (const ResourceLimit& e) {
        skipped += " (" + std::to_string(n) + "," + std::to_string(g) + ": " + std::to_string(e.projected()) + " tiles)";
        break;
      }
    }
    const std::size_t step = n % 2 ? 2 : 1;
    for (std::size_t g = 0; g + step < rose.size(); ++g) {
      if (!rose[g] || rose[g] != rose[g + step]) {
        o.fail("n=" + std::to_string(n) + " central roses of g=" + std::to_string(g) + " and g=" +
               std::to_string(g + step) + " differ");
      }
    }
  }
  if (o.pass) o.detail = "checked" + done + (skipped.empty() ? "" : "; over the cap:" + skipped);
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::vector<std::string> notes;
  // clockwise square b a b-bar a-bar
  {
    const int n = 5;
    const Word w{5, 3, 15, 13};
    if (reduce_to_empty(n, w, canonical_matching(n, w)).success) o.fail("b a B A reduced");
    else notes.push_back("baBA stuck");
  }
  // full rose R2 in place of R2^1 on the pair (1/2, -1/2)
  {
    std::string hits;
    std::string other;
    for (int n = 3; n <= 25; n += 2) {
      const SymmetryContext ctx(n);
      for (int k = 1; 2 * k <= n; ++k) {
        const CrossingReport rep = crossing_condition(super_boundary(n, k, RoseSegments::kSortedR2));
        for (const auto& p : rep.pairs) {
          const bool target = (ctx.wrap(p.a) == 1 && ctx.wrap(p.b) == ctx.wrap(-1)) ||
                              (ctx.wrap(p.b) == 1 && ctx.wrap(p.a) == ctx.wrap(-1));
          if (target && !p.pass) hits += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
        if (!rep.pass && other.size() < 40) other += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
    if (hits.empty()) {
      o.fail("sorted R2 leaves the pair (1/2,-1/2) reducible for every odd n<=25; other pairs fail at" + other +
             " ...");
    } else {
      notes.push_back("pair (1/2,-1/2) fails at" + hits);
    }
  }
  // octagon under D8
  {
    const SymmetricTilingResult r = tile_region_symmetric(unit_octagon(), octagon_group());
    if (r.success || r.conflicts == 0) o.fail("octagon tiled symmetrically");
    else notes.push_back("octagon: " + std::to_string(r.conflicts) + " orbit conflicts");
  }
  if (o.pass) {
    for (const auto& s : notes) o.detail += (o.detail.empty() ? "" : "; ") + s;
  } else {
    for (const auto& s : notes) o.detail += "; " + s;
  }
  return o;
}

// ---------------------------------------------------------------------------

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SUBROSA_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "subrosa_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"supertile --n 7 --k 2 --out", ""},
      {"supertile --n 6 --k 3 --symmetric --out", ""},
      {"iterate --n 5 --generations 1 --out", ""},
      {"iterate --n 4 --generations 2 --out", ""},
  };
  int idx = 0;
  for (const auto& job : jobs) {
    std::string json[2];
    std::string svg[2];
    for (int rep = 0; rep < 2; ++rep) {
      // same output path both times so the recorded command line matches
      const std::string base = (dir / ("job" + std::to_string(idx))).string();
      if (run_cli(job.first + " " + base + ".json") != 0 ||
          run_cli("render " + base + ".json --out " + base + ".svg") != 0) {
        o.fail("command failed: " + job.first);
        continue;
      }
      json[rep] = read_text_file(base + ".json");
      svg[rep] = read_text_file(base + ".svg");
    }
    if (json[0] != json[1] || json[0].empty()) o.fail("JSON differs: " + job.first);
    if (svg[0] != svg[1] || svg[0].empty()) o.fail("SVG differs: " + job.first);
    ++idx;
  }
  // in-process as well
  PatchDocument doc;
  doc.patch = super_rhombus_patch(5, 2);
  PatchDocument again;
  again.patch = super_rhombus_patch(5, 2);
  if (to_json(doc) != to_json(again) || render_svg(doc.patch) != render_svg(again.patch)) o.fail("library output differs");
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = std::to_string(jobs.size()) + " CLI jobs run twice, byte-identical JSON and SVG";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"edge sequence tables", sigma_tables},
      {"scaling factor consistency", scaling_consistency},
      {"worked boundary word and projection", example_one},
      {"crossing condition n=2..25", verify_all},
      {"rewrite oracle equivalence", oracle_equivalence},
      {"super patch validity n=2..10", tiling_validity},
      {"primitivity", primitivity},
      {"generation symmetry and rose alignment", generation_symmetry},
      {"negative controls", negative_controls},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %zu: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
