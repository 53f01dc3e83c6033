// crystal_cli: command-line front end for the crystal commutor library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <crystal_commutor/crystal_commutor.hpp>

using namespace crystal;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

enum class Format { text, json, epsilon };

struct Common {
  std::string type = "A";
  int rank = 0;
  std::string format = "text";
  bool verify = false;
};

int max_rank() {
  if (const char* env = std::getenv("CRYSTAL_MAX_RANK")) {
    try {
      return detail::parse_int(env, "CRYSTAL_MAX_RANK");
    } catch (const InvalidInput&) {
      throw InvalidInput("CRYSTAL_MAX_RANK must be an integer");
    }
  }
  return 8;
}

std::shared_ptr<const RootSystem> make_system(const std::string& type, int rank) {
  if (type.size() != 1) throw InvalidInput("--type takes a single letter A, B, C, D or E");
  auto t = parse_type_letter(type[0]);
  if (!t) throw InvalidInput("unknown Cartan type '" + type + "'");
  if (rank <= 0) throw InvalidInput("--rank is required and must be positive");
  const int guard = max_rank();
  if (rank > guard)
    throw InvalidInput("rank " + std::to_string(rank) + " exceeds the limit " + std::to_string(guard) +
                       " (set CRYSTAL_MAX_RANK to raise it)");
  return RootSystem::make(*t, rank);
}

Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "epsilon") return Format::epsilon;
  throw InvalidInput("--format must be text, json or epsilon");
}

/// Fundamental coordinates "1,0" or epsilon form "e1+e1+e2".
Weight read_weight(const RootSystem& sys, std::string_view text) {
  if (text.find('e') != std::string_view::npos) return parse_epsilon(sys, text);
  return parse_weight(sys, text);
}

ParsedElement read_element(const RootSystem& sys, std::string_view text) {
  ParsedElement out;
  auto entries = [&](std::string_view group) {
    std::vector<Weight> ws;
    group = detail::trim(group);
    if (group.empty() || group == "()") return ws;
    for (auto tok : detail::split(group, ';')) ws.push_back(read_weight(sys, tok));
    return ws;
  };
  if (text.find('|') == std::string_view::npos) {
    out.entries = entries(text);
    return out;
  }
  for (auto group : detail::split(text, '|')) {
    auto part = entries(group);
    out.block_lengths.push_back(part.size());
    out.entries.insert(out.entries.end(), part.begin(), part.end());
  }
  return out;
}

std::string show_weight(const RootSystem& sys, const Weight& w, Format f) {
  return f == Format::epsilon ? format_epsilon(sys, w) : format_weight(w);
}

std::string show_entries(const RootSystem& sys, const std::vector<Weight>& ws, Format f) {
  return f == Format::epsilon ? format_entries_epsilon(sys, ws) : format_entries(ws);
}

std::string show_blocked(const BlockedElement& x, Format f) {
  return f == Format::epsilon ? format_blocked_epsilon(x) : format_blocked(x);
}

BlockedElement build_element(const std::shared_ptr<const RootSystem>& sys, const std::vector<Weight>& lambdas,
                             const std::string& element_text) {
  std::vector<Block> blocks;
  for (const auto& l : lambdas) blocks.push_back(make_block(*sys, l));
  const ParsedElement pe = read_element(*sys, element_text);
  if (!pe.block_lengths.empty()) {
    if (pe.block_lengths.size() != blocks.size())
      throw InvalidInput("element has " + std::to_string(pe.block_lengths.size()) + " blocks, expected " +
                         std::to_string(blocks.size()));
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (pe.block_lengths[k] != blocks[k].length())
        throw InvalidInput("block " + std::to_string(k + 1) + " has " + std::to_string(pe.block_lengths[k]) +
                           " factors; the decomposition of " + format_weight(blocks[k].lambda) + " has " +
                           std::to_string(blocks[k].length()));
  }
  return BlockedElement::from_entries(sys, std::move(blocks), pe.entries);
}

BlockedElement read_json_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return blocked_from_json(j);
}

nlohmann::json report_json(const checks::Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : r)
    out.push_back({{"name", t.name}, {"cases", t.cases}, {"failures", t.failures}, {"examples", t.examples}});
  return out;
}

void print_report(const std::string& suite, const checks::Report& r, double seconds) {
  std::cout << "[" << suite << "]\n";
  for (const auto& t : r) {
    std::cout << (t.ok() ? "  ok    " : "  FAIL  ") << t.name << ": " << t.cases << " cases";
    if (!t.ok()) std::cout << ", " << t.failures << " failures";
    std::cout << "\n";
    for (const auto& e : t.examples) std::cout << "        " << e << "\n";
  }
  std::cout << "  (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal commutors on tensor products of minuscule crystals"};
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", c.type, "Cartan type letter (A, B, C, D, E)")->required();
    sub->add_option("--rank", c.rank, "rank")->required();
    sub->add_option("--format", c.format, "text | json | epsilon")->check(CLI::IsMember({"text", "json", "epsilon"}));
  };

  std::vector<std::string> weights;
  std::string left, right, element, backend = "both", input;
  std::size_t p = 0, q = 0, r = 0;

  auto* decompose = app.add_subcommand("decompose", "minuscule decomposition of a dominant weight");
  add_common(decompose);
  decompose->add_option("--weight", weights, "dominant weight")->required()->expected(1);

  auto* orbit = app.add_subcommand("orbit", "Weyl group orbit of a weight");
  add_common(orbit);
  orbit->add_option("--weight", weights, "weight")->required()->expected(1);

  auto* maxima = app.add_subcommand("maxima", "highest elements of B_lambda1 (x) ... (x) B_lambdan");
  add_common(maxima);
  maxima->add_option("--weight", weights, "dominant weight of a factor (repeatable)")->required();

  auto* comm = app.add_subcommand("commutor", "apply the commutor B_left (x) B_right -> B_right (x) B_left");
  add_common(comm);
  comm->add_option("--left", left, "dominant weight pi'");
  comm->add_option("--right", right, "dominant weight pi");
  comm->add_option("--element", element, "entries, ';' between factors, optional '|' between blocks");
  comm->add_option("--input", input, "JSON file holding a two-block element");
  comm->add_option("--backend", backend, "hk | hk-alt | jdt | both | all")
      ->check(CLI::IsMember({"hk", "hk-alt", "jdt", "both", "all"}));
  comm->add_flag("--verify", c.verify, "check every local move");

  auto* growth = app.add_subcommand("growth", "growth diagram of an element of B_left (x) B_right");
  add_common(growth);
  growth->add_option("--left", left, "dominant weight pi'")->required();
  growth->add_option("--right", right, "dominant weight pi")->required();
  growth->add_option("--element", element, "element; raised to its highest element first")->required();
  growth->add_flag("--verify", c.verify, "check every local move");

  auto* cactus = app.add_subcommand("cactus", "cactus generator s_{p,q} or sigma_{p,r,q} (1-based blocks)");
  add_common(cactus);
  cactus->add_option("--weight", weights, "block weight (repeatable)");
  cactus->add_option("--element", element, "entries of all blocks");
  cactus->add_option("--input", input, "JSON file holding the element");
  cactus->add_option("-p", p, "first block")->required()->check(CLI::PositiveNumber);
  cactus->add_option("-q", q, "last block")->required()->check(CLI::PositiveNumber);
  cactus->add_option("-r", r, "split block for sigma_{p,r,q}")->check(CLI::PositiveNumber);
  cactus->add_option("--backend", backend, "hk | hk-alt | jdt | both")
      ->check(CLI::IsMember({"hk", "hk-alt", "jdt", "both"}));

  std::string suite = "all", types;
  int max_coord = 2;
  unsigned jobs = 0;
  std::size_t pointwise = 50;
  bool no_equivariance = false;
  std::string check_format = "text";
  auto* check = app.add_subcommand("check", "run a property suite over a weight grid");
  check->add_option("suite", suite, "axioms | cactus | comagree | involution | all")
      ->check(CLI::IsMember({"axioms", "cactus", "comagree", "involution", "all"}));
  check->add_option("--types", types, "comma-separated types, e.g. A1,A2,B2 (default A1,A2,B2,C2; cactus A1,A2)");
  check->add_option("--max-coord", max_coord, "largest coordinate sum of grid weights")->check(CLI::NonNegativeNumber);
  check->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  check->add_option("--pointwise", pointwise, "elements per pair re-checked through the pointwise functions");
  check->add_flag("--no-equivariance", no_equivariance, "skip the root-operator equivariance check");
  check->add_flag("--verify", c.verify, "check every local move");
  check->add_option("--format", check_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const auto t_all = std::chrono::steady_clock::now();
      checks::GridOptions opt;
      opt.max_coord = max_coord;
      opt.jobs = jobs;
      opt.pointwise_per_pair = pointwise;
      opt.equivariance = !no_equivariance;
      opt.verify = c.verify ? Verify::Full : Verify::Fast;
      for (const auto& t : checks::parse_types(types.empty() ? "A1" : types))
        if (t.rank > max_rank()) throw InvalidInput(t.name() + " exceeds the rank limit (CRYSTAL_MAX_RANK)");
      bool ok = true;
      nlohmann::json jout = nlohmann::json::object();
      auto run = [&](const std::string& name, const std::string& default_types, auto&& fn) {
        opt.types = checks::parse_types(types.empty() ? default_types : types);
        const auto t0 = std::chrono::steady_clock::now();
        const checks::Report rep = fn(opt);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && checks::all_ok(rep);
        if (check_format == "json")
          jout[name] = report_json(rep);
        else
          print_report(name, rep, s);
      };
      const std::string grid = "A1,A2,B2,C2";
      if (suite == "axioms" || suite == "all") run("axioms", grid, checks::axioms_suite);
      if (suite == "involution" || suite == "all") run("involution", grid, checks::involution_suite);
      if (suite == "comagree" || suite == "all")
        run("comagree", grid, [](const checks::GridOptions& o) {
          checks::Report rep = checks::comagree_suite(o);
          checks::merge_into(rep, checks::minuscule_left_suite(o.types, o.max_coord));
          return rep;
        });
      if (suite == "cactus" || suite == "all") run("cactus", "A1,A2", checks::cactus_suite);
      if (check_format == "json") {
        jout["ok"] = ok;
        std::cout << jout.dump(2) << "\n";
      } else {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
        std::cout << (ok ? "ALL PASS" : "FAILURES") << " (" << std::fixed << std::setprecision(2) << s << " s)\n";
      }
      return ok ? kOk : kCheckFailed;
    }

    const Format fmt = parse_format(c.format);
    const auto sys = make_system(c.type, c.rank);

    if (decompose->parsed()) {
      const Weight w = read_weight(*sys, weights.front());
      const auto d = minuscule_decomposition(*sys, w);
      if (fmt == Format::json) {
        std::cout << nlohmann::json{{"lambda", weight_json(w)},
                                    {"parts", entries_json(d.parts)},
                                    {"orbits", entries_json(d.dominant_orbits)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "parts: " << show_entries(*sys, d.parts, fmt) << "\n";
        std::cout << "orbits: " << show_entries(*sys, d.dominant_orbits, fmt) << "\n";
      }
      return kOk;
    }

    if (orbit->parsed()) {
      const auto ws = sys->weyl_orbit(read_weight(*sys, weights.front()));
      if (fmt == Format::json) {
        std::cout << entries_json(ws).dump() << "\n";
      } else {
        for (const auto& w : ws) std::cout << show_weight(*sys, w, fmt) << "\n";
      }
      return kOk;
    }

    if (maxima->parsed()) {
      std::vector<Block> blocks;
      for (const auto& w : weights) blocks.push_back(make_block(*sys, read_weight(*sys, w)));
      const auto tops = max_blocked_elements(sys, blocks);
      if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : tops) {
          auto j = to_json(x);
          j["weight"] = weight_json(weight(x.flat()));
          arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
      } else {
        for (const auto& x : tops)
          std::cout << show_weight(*sys, weight(x.flat()), fmt) << "  " << show_blocked(x, fmt) << "\n";
      }
      return kOk;
    }

    if (comm->parsed()) {
      BlockedElement x = [&] {
        if (!input.empty()) return read_json_element(input);
        if (left.empty() || right.empty() || element.empty())
          throw InvalidInput("commutor needs --left, --right and --element, or --input");
        return build_element(sys, {read_weight(*sys, left), read_weight(*sys, right)}, element);
      }();
      if (x.block_count() != 2) throw InvalidInput("the commutor needs an element with exactly two blocks");
      std::vector<Backend> run;
      if (backend == "both")
        run = {Backend::hk, Backend::jdt};
      else if (backend == "all")
        run = {Backend::hk, Backend::hk_alt, Backend::jdt};
      else
        run = {*parse_backend(backend)};
      const Verify v = c.verify ? Verify::Full : Verify::Fast;
      std::vector<BlockedElement> results;
      for (Backend be : run) {
        const TensorElement y = commute_segments(x.flat(), x.block(0).length(), be, v);
        results.push_back(BlockedElement::from_entries(sys, {x.block(1), x.block(0)}, y.entries()));
      }
      bool match = true;
      for (const auto& y : results) match = match && y == results.front();
      if (fmt == Format::json) {
        nlohmann::json j{{"input", to_json(x)}};
        for (std::size_t k = 0; k < run.size(); ++k) j[std::string(backend_name(run[k]))] = to_json(results[k]);
        if (run.size() > 1) j["match"] = match;
        std::cout << j.dump() << "\n";
      } else {
        for (std::size_t k = 0; k < run.size(); ++k)
          std::cout << backend_name(run[k]) << ": " << show_blocked(results[k], fmt) << "\n";
        if (run.size() > 1) std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
      }
      return match ? kOk : kCheckFailed;
    }

    if (growth->parsed()) {
      const BlockedElement x = build_element(sys, {read_weight(*sys, left), read_weight(*sys, right)}, element);
      const RaiseResult rr = raise_to_highest(x.flat());
      const std::size_t split = x.block(0).length();
      const auto top = rr.highest.slice(0, split).entries();
      const TensorElement pv = rr.highest.slice(split, rr.highest.size());
      const GrowthResult g =
          growth_rectangle(*sys, top, pv, {CellOrder::AntiDiagonal, c.verify ? Verify::Full : Verify::Fast});
      if (fmt == Format::json) {
        nlohmann::json j{{"highest", entries_json(rr.highest.entries())},
                         {"path", rr.path},
                         {"diagram", to_json(g.diagram)},
                         {"left", entries_json(g.left)},
                         {"bottom", entries_json(g.bottom)}};
        std::cout << j.dump() << "\n";
      } else {
        if (!rr.path.empty()) {
          std::cout << "raised to " << show_entries(*sys, rr.highest.entries(), fmt) << " by e_i, i =";
          for (auto i : rr.path) std::cout << " " << i + 1;
          std::cout << "\n";
        }
        if (fmt == Format::epsilon)
          std::cout << render_growth_diagram(g.diagram, [&](const Weight& w) { return format_epsilon(*sys, w); });
        else
          std::cout << render_growth_diagram(g.diagram);
        std::cout << "left: " << show_entries(*sys, g.left, fmt) << "\n";
        std::cout << "bottom: " << show_entries(*sys, g.bottom, fmt) << "\n";
      }
      return kOk;
    }

    if (cactus->parsed()) {
      BlockedElement x = [&] {
        if (!input.empty()) return read_json_element(input);
        if (weights.empty() || element.empty()) throw InvalidInput("cactus needs --weight (repeated) and --element, or --input");
        std::vector<Weight> ls;
        for (const auto& w : weights) ls.push_back(read_weight(*sys, w));
        return build_element(sys, ls, element);
      }();
      if (q > x.block_count() || p > q) throw InvalidInput("need 1 <= p <= q <= number of blocks");
      if (r != 0 && !(p <= r && r < q)) throw InvalidInput("sigma_{p,r,q} needs p <= r < q");
      std::vector<Backend> run;
      if (backend == "both")
        run = {Backend::hk, Backend::jdt};
      else
        run = {*parse_backend(backend)};
      std::vector<BlockedElement> results;
      for (Backend be : run)
        results.push_back(r == 0 ? cactus_s(x, p - 1, q - 1, be) : sigma_prq(x, p - 1, r - 1, q - 1, be));
      bool match = true;
      for (const auto& y : results) match = match && y == results.front();
      if (fmt == Format::json) {
        nlohmann::json j{{"input", to_json(x)}};
        for (std::size_t k = 0; k < run.size(); ++k) j[std::string(backend_name(run[k]))] = to_json(results[k]);
        if (run.size() > 1) j["match"] = match;
        std::cout << j.dump() << "\n";
      } else {
        for (std::size_t k = 0; k < run.size(); ++k)
          std::cout << backend_name(run[k]) << ": " << show_blocked(results[k], fmt) << "\n";
        if (run.size() > 1) std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
      }
      return match ? kOk : kCheckFailed;
    }
  } catch (const UnsupportedFactor& e) {
    std::cerr << "error: unsupported factor: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
