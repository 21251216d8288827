#include "tcx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcx/dsl.hpp"
#include "tcx/enumerator.hpp"
#include "tcx/error.hpp"
#include "tcx/gf2.hpp"
#include "tcx/polytope.hpp"

#ifndef TCX_DEFAULT_DATA_DIR
#define TCX_DEFAULT_DATA_DIR "data"
#endif

namespace tcx::cli {

  using json = nlohmann::ordered_json;

  namespace {

    constexpr int SCHEMA_VERSION = 1;

    // Thrown by commands whose verification fails after the report is out.
    struct CheckFailed {};

    enum class Format { json, tsv, text };

    struct RunConfig {
      std::string pres;
      std::string sub = "1";
      std::string strategy;
      std::size_t max_cosets = std::size_t(1) << 26;
      std::string out_path;
      std::string format = "json";
      bool        deterministic = false;
      double      progress_interval = 10;
    };

    Format parse_format(std::string const& s) {
      if (s == "json") {
        return Format::json;
      } else if (s == "tsv") {
        return Format::tsv;
      } else if (s == "text") {
        return Format::text;
      }
      throw Error("unknown format '" + s + "'");
    }

    json big(BigInt const& n) {
      if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(n);
      }
      return n.str();
    }

    std::string hex(std::uint64_t h) {
      std::ostringstream s;
      s << std::hex << std::setw(16) << std::setfill('0') << h;
      return s.str();
    }

    std::string scalar(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "-";
      }
      return v.dump();
    }

    // Key/value reports: json object, two-column text, or a header row and
    // one value row for tsv. Nested values are written as compact json.
    void emit_record(json const& j, Format fmt, std::ostream& out) {
      switch (fmt) {
        case Format::json: out << j.dump(2) << '\n'; break;
        case Format::text:
          for (auto const& [k, v] : j.items()) {
            out << k << ": " << scalar(v) << '\n';
          }
          break;
        case Format::tsv: {
          std::string sep;
          for (auto const& [k, v] : j.items()) {
            out << sep << k;
            sep = "\t";
          }
          out << '\n';
          sep.clear();
          for (auto const& [k, v] : j.items()) {
            out << sep << scalar(v);
            sep = "\t";
          }
          out << '\n';
          break;
        }
      }
    }

    // Writes to --out when given, else to out.
    template <typename F>
    void with_output(RunConfig const& cfg, std::ostream& out, F&& f) {
      if (cfg.out_path.empty()) {
        f(out);
        return;
      }
      std::ofstream file(cfg.out_path);
      if (!file) {
        throw Error("cannot write '" + cfg.out_path + "'");
      }
      f(file);
    }

    EnumerationLimits limits_of(RunConfig const& cfg, std::ostream& err) {
      if (cfg.max_cosets < 1) {
        throw Error("--max-cosets must be at least 1");
      }
      EnumerationLimits limits;
      limits.max_cosets = cfg.max_cosets;
      if (!cfg.strategy.empty()) {
        limits.strategy = parse_strategy(cfg.strategy);
      }
      if (cfg.progress_interval > 0) {
        limits.progress_interval
            = std::chrono::milliseconds(static_cast<long>(cfg.progress_interval * 1000));
        limits.progress = [&err](ProgressInfo const& p) {
          err << "progress: live " << p.live << ", defined " << p.defined << ", coincidences "
              << p.coincidences << ", " << std::fixed << std::setprecision(1) << p.seconds
              << " s" << std::endl;
        };
      }
      return limits;
    }

    json stats_json(EnumerationStats const& s, bool deterministic) {
      json j;
      j["strategy"] = to_string(s.strategy);
      j["defined"] = s.defined;
      j["coincidences"] = s.coincidences;
      j["max_live"] = s.max_live;
      j["compactions"] = s.compactions;
      j["lookaheads"] = s.lookaheads;
      if (!deterministic) {
        j["seconds"] = s.seconds;
      }
      return j;
    }

    void write_table_json(CosetTable const& t, std::string const& path) {
      json j;
      j["schema"] = SCHEMA_VERSION;
      j["ngens"] = t.ngens();
      j["involutive"] = std::vector<int>(t.involutive().begin(), t.involutive().end());
      j["ncols"] = t.ncols();
      j["nrows"] = t.nrows();
      j["hash"] = hex(t.hash());
      json rows = json::array();
      for (coset_index c = 0; c < t.nrows(); ++c) {
        json row = json::array();
        for (std::uint32_t x = 0; x < t.ncols(); ++x) {
          row.push_back(t.entry(c, x));
        }
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      std::ofstream file(path);
      if (!file) {
        throw Error("cannot write '" + path + "'");
      }
      file << j.dump() << '\n';
    }

    ////////////////////////////////////////////////////////////////////
    // enumerate
    ////////////////////////////////////////////////////////////////////

    void cmd_enumerate(RunConfig const& cfg, std::string const& table_out, std::ostream& out,
                       std::ostream& err) {
      auto p = load_presentation(cfg.pres);
      if (!p.has_subgroup(cfg.sub)) {
        throw Error("presentation has no subgroup named '" + cfg.sub + "'");
      }
      auto fmt = parse_format(cfg.format);
      auto limits = limits_of(cfg, err);
      auto t = enumerate(p, cfg.sub, limits);
      json j;
      j["schema"] = SCHEMA_VERSION;
      j["command"] = "enumerate";
      j["presentation"] = std::filesystem::path(cfg.pres).filename().string();
      j["subgroup"] = cfg.sub;
      j["index"] = t.nrows();
      j["table_hash"] = hex(t.hash());
      auto s = stats_json(t.stats(), cfg.deterministic);
      for (auto const& [k, v] : s.items()) {
        j[k] = v;
      }
      with_output(cfg, out, [&](std::ostream& o) { emit_record(j, fmt, o); });
      if (table_out.empty()) {
        return;
      }
      if (std::filesystem::path(table_out).extension() == ".json") {
        write_table_json(t, table_out);
      } else {
        std::ofstream file(table_out, std::ios::binary);
        if (!file) {
          throw Error("cannot write '" + table_out + "'");
        }
        write_table_binary(t, file);
      }
    }

    ////////////////////////////////////////////////////////////////////
    // stats and table1
    ////////////////////////////////////////////////////////////////////

    json type_json(std::optional<ToroidalType> const& t) {
      return t ? json(to_string(*t)) : json("unidentified");
    }

    json report_json(PolytopeReport const& r, bool deterministic) {
      json j;
      j["rank"] = r.rank;
      j["v"] = r.v;
      j["f"] = r.f;
      j["group_order"] = big(r.group_order);
      j["facet_order"] = r.facet_order ? big(*r.facet_order) : json(nullptr);
      j["vertex_order"] = r.vertex_order ? big(*r.vertex_order) : json(nullptr);
      j["product_law"] = r.product_law ? json(*r.product_law) : json(nullptr);
      j["order_certified"] = r.order_certified;
      j["facet_type"] = type_json(r.facet_type);
      j["vertex_type"] = type_json(r.vertex_type);
      j["ip_verified"] = r.ip_verified;
      if (r.ip_witness) {
        j["ip_witness"] = {{"I", r.ip_witness->I},
                           {"J", r.ip_witness->J},
                           {"intersection", big(r.ip_witness->intersection)},
                           {"expected", big(r.ip_witness->expected)}};
      }
      j["notes"] = r.notes;
      j["vertex_enumeration"] = stats_json(r.vertex_stats, deterministic);
      j["facet_enumeration"] = stats_json(r.facet_stats, deterministic);
      return j;
    }

    PolytopeOptions polytope_options(RunConfig const& cfg, std::ostream& err) {
      PolytopeOptions opts;
      opts.limits = limits_of(cfg, err);
      return opts;
    }

    void cmd_stats(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      auto p = load_presentation(cfg.pres);
      auto fmt = parse_format(cfg.format);
      auto r = polytope_stats(p, polytope_options(cfg, err));
      json j;
      j["schema"] = SCHEMA_VERSION;
      j["command"] = "stats";
      j["presentation"] = std::filesystem::path(cfg.pres).filename().string();
      auto rj = report_json(r, cfg.deterministic);
      for (auto const& [k, v] : rj.items()) {
        j[k] = v;
      }
      with_output(cfg, out, [&](std::ostream& o) { emit_record(j, fmt, o); });
    }

    void cmd_table1(RunConfig const& cfg, std::string const& data_dir, std::ostream& out,
                    std::ostream& err) {
      auto fmt = parse_format(cfg.format);
      auto opts = polytope_options(cfg, err);
      json rows = json::array();
      auto const& known = known_polytopes();
      for (std::size_t i = 0; i < known.size(); ++i) {
        auto const& row = known[i];
        auto        path = (std::filesystem::path(data_dir) / "presentations"
                     / ("table1_row" + std::to_string(i + 1) + ".cox"))
                        .string();
        auto r = polytope_stats(load_presentation(path), opts);
        json j;
        j["s"] = to_string(row.s);
        j["t"] = to_string(row.t);
        auto rj = report_json(r, cfg.deterministic);
        for (auto const& [k, v] : rj.items()) {
          j[k] = v;
        }
        j["printed"] = {{"v", row.printed_v},
                        {"f", row.printed_f},
                        {"group", row.printed_group},
                        {"order", row.printed_order ? big(*row.printed_order) : json(nullptr)}};
        j["diff"] = compare_with_printed(r, row);
        rows.push_back(std::move(j));
      }
      with_output(cfg, out, [&](std::ostream& o) {
        if (fmt == Format::json) {
          json j;
          j["schema"] = SCHEMA_VERSION;
          j["command"] = "table1";
          j["rows"] = rows;
          o << j.dump(2) << '\n';
        } else if (fmt == Format::tsv) {
          o << "s\tt\tv\tf\torder\tfacet_type\tvertex_type\tip_verified\tdiff\n";
          for (auto const& j : rows) {
            std::string diff;
            for (auto const& d : j["diff"]) {
              diff += (diff.empty() ? "" : "; ") + d.get<std::string>();
            }
            o << scalar(j["s"]) << '\t' << scalar(j["t"]) << '\t' << scalar(j["v"]) << '\t'
              << scalar(j["f"]) << '\t' << scalar(j["group_order"]) << '\t'
              << scalar(j["facet_type"]) << '\t' << scalar(j["vertex_type"]) << '\t'
              << scalar(j["ip_verified"]) << '\t' << (diff.empty() ? "-" : diff) << '\n';
          }
        } else {
          for (auto const& j : rows) {
            o << scalar(j["s"]) << ' ' << scalar(j["t"]) << ": v=" << scalar(j["v"])
              << " f=" << scalar(j["f"]) << " order=" << scalar(j["group_order"])
              << " types=" << scalar(j["facet_type"]) << ',' << scalar(j["vertex_type"])
              << " ip=" << scalar(j["ip_verified"]) << '\n';
            for (auto const& d : j["diff"]) {
              o << "  differs from printed table: " << d.get<std::string>() << '\n';
            }
          }
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // gf2-verify
    ////////////////////////////////////////////////////////////////////

    Presentation flagship_presentation() {
      return locally_toroidal_presentation(ToroidalType(2, Shape::double_),
                                           ToroidalType(3, Shape::single));
    }

    Gf2Vector block_ones() {
      Gf2Vector v(24);
      for (std::size_t i = 0; i < 8; ++i) {
        v.set(i);
      }
      return v;
    }

    std::vector<Gf2Matrix> stabilizer_generators(std::vector<Gf2Matrix> const& g) {
      return {g[0], g[1], g[2], g[3], tau_matrix(g), g[5]};
    }

    // Image of psi: a, b, c act as (1,2), (2,3), (3,4); d, e, f trivially.
    PermGroup psi_group() {
      std::vector<Perm> gens{Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{1, 2}}),
                             Perm::from_cycles(4, {{2, 3}}), Perm(4), Perm(4), Perm(4)};
      return PermGroup(4, std::move(gens));
    }

    PermGroup omega_group(std::vector<Gf2Matrix> const& g) {
      return induced_perm_action(block_vectors(3, 8), g);
    }

    void cmd_gf2_verify(RunConfig const& cfg, std::string const& data_path, bool orbit_only,
                        std::ostream& out) {
      auto fmt = parse_format(cfg.format);
      auto gens = data_path.empty() ? builtin_generators() : load_generator_data(data_path);
      if (gens.size() != 6 || gens[0].dim() != 24) {
        throw Error("generator data must declare six 24x24 matrices");
      }
      auto orbit = vector_orbit(block_ones(), stabilizer_generators(gens));
      json j;
      j["schema"] = SCHEMA_VERSION;
      j["command"] = "gf2-verify";
      if (orbit_only) {
        j["orbit_size"] = orbit.size();
        with_output(cfg, out, [&](std::ostream& o) { emit_record(j, fmt, o); });
        return;
      }
      bool ok = true;
      json checks = json::array();
      auto check = [&](std::string name, bool pass, json detail) {
        ok = ok && pass;
        checks.push_back({{"check", std::move(name)}, {"ok", pass}, {"detail", std::move(detail)}});
      };
      auto p = flagship_presentation();
      auto rels = check_relations(p, gens);
      json failing = json::array();
      for (auto const& r : rels) {
        if (!r.holds) {
          failing.push_back(to_string(r.relator, p.gen_names()));
        }
      }
      check("relators", failing.empty(),
            {{"relators", rels.size()}, {"failing", failing}});
      json phi_detail = json::object();
      bool phi_ok = true;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        bool pres = preserves_phi(gens[i]);
        phi_ok = phi_ok && pres;
        phi_detail[p.gen_names()[i]] = pres;
      }
      check("phi_invariant", phi_ok, phi_detail);
      check("isotropic_orbit", orbit.size() == 135, {{"size", orbit.size()}, {"expected", 135}});

      BigInt const expected_omega = BigInt(1045094400);
      std::optional<PermGroup> omega;
      try {
        omega = build_chain(omega_group(gens));
      } catch (Error const& e) {
        check("block_action", false, e.what());
      }
      if (omega) {
        auto o = omega->chain().order();
        check("order_765", o == expected_omega,
              {{"degree", omega->degree()}, {"order", big(o)}, {"expected", big(expected_omega)}});
        auto psi = psi_group();
        bool psi_rels = true;
        for (auto const& r : p.relators()) {
          psi_rels = psi_rels && word_image(psi, r).is_identity();
        }
        auto psi_order = order(psi);
        check("psi_image", psi_rels && psi_order == 24,
              {{"relators_hold", psi_rels}, {"order", big(psi_order)}});
        auto mixed = build_chain(mix_groups(psi, *omega));
        auto mo = mixed.chain().order();
        check("mix_769", mo == expected_omega * 24,
              {{"degree", mixed.degree()}, {"order", big(mo)}, {"expected", big(expected_omega * 24)}});
      }
      j["checks"] = checks;
      j["ok"] = ok;
      with_output(cfg, out, [&](std::ostream& o) {
        if (fmt == Format::json) {
          o << j.dump(2) << '\n';
        } else {
          std::string sep = fmt == Format::tsv ? "\t" : ": ";
          if (fmt == Format::tsv) {
            o << "check\tok\tdetail\n";
          }
          for (auto const& c : checks) {
            o << c["check"].get<std::string>() << sep << (c["ok"].get<bool>() ? "pass" : "FAIL")
              << (fmt == Format::tsv ? "\t" : "  ") << scalar(c["detail"]) << '\n';
          }
        }
      });
      if (!ok) {
        throw CheckFailed{};
      }
    }

    ////////////////////////////////////////////////////////////////////
    // mix
    ////////////////////////////////////////////////////////////////////

    // "psi", "omega", or a presentation file with an optional "@SUBGROUP"
    // (default: trivial subgroup), acting on the cosets.
    PermGroup load_group(std::string const& spec, RunConfig const& cfg, std::ostream& err) {
      if (spec == "psi") {
        return psi_group();
      }
      if (spec == "omega") {
        return omega_group(builtin_generators());
      }
      auto        at = spec.rfind('@');
      std::string path = at == std::string::npos ? spec : spec.substr(0, at);
      std::string sub = at == std::string::npos ? "1" : spec.substr(at + 1);
      auto        p = load_presentation(path);
      if (!p.has_subgroup(sub)) {
        throw Error("'" + path + "' has no subgroup named '" + sub + "'");
      }
      return permutation_rep(enumerate(p, sub, limits_of(cfg, err)));
    }

    void cmd_mix(RunConfig const& cfg, std::vector<std::string> const& types,
                 std::vector<std::string> const& groups, std::ostream& out, std::ostream& err) {
      auto fmt = parse_format(cfg.format);
      json j;
      j["schema"] = SCHEMA_VERSION;
      j["command"] = "mix";
      if (!types.empty()) {
        if (types.size() != 2 || !groups.empty()) {
          throw Error("mix --types takes exactly two toroidal types");
        }
        auto s = ToroidalType::parse(types[0]);
        auto t = ToroidalType::parse(types[1]);
        auto m = mix_toroidal(s, t);
        j["left"] = to_spec(s);
        j["right"] = to_spec(t);
        j["result"] = to_spec(m);
        j["result_vector"] = to_string(m);
      } else {
        if (groups.size() != 2) {
          throw Error("mix needs two groups or --types with two toroidal types");
        }
        auto a = build_chain(load_group(groups[0], cfg, err));
        auto b = build_chain(load_group(groups[1], cfg, err));
        auto m = build_chain(mix_groups(a, b));
        j["left"] = {{"group", groups[0]}, {"degree", a.degree()}, {"order", big(a.chain().order())}};
        j["right"] = {{"group", groups[1]}, {"degree", b.degree()}, {"order", big(b.chain().order())}};
        j["degree"] = m.degree();
        j["order"] = big(m.chain().order());
      }
      with_output(cfg, out, [&](std::ostream& o) { emit_record(j, fmt, o); });
    }

    void common_options(CLI::App* app, RunConfig& cfg) {
      app->add_option("--format", cfg.format, "json, tsv or text")
          ->check(CLI::IsMember({"json", "tsv", "text"}));
      app->add_option("--out", cfg.out_path, "write the report to FILE");
      app->add_flag("--deterministic", cfg.deterministic, "omit timing fields");
    }

    void enumeration_options(CLI::App* app, RunConfig& cfg) {
      app->add_option("--strategy", cfg.strategy, "felsch, hlt or hlt-lookahead")
          ->check(CLI::IsMember({"felsch", "hlt", "hlt-lookahead", "hlt_lookahead"}));
      app->add_option("--max-cosets", cfg.max_cosets, "coset table row limit")
          ->check(CLI::PositiveNumber);
      app->add_option("--progress-interval", cfg.progress_interval,
                      "seconds between progress lines on stderr (0 disables)");
    }

  }  // namespace

  std::string default_data_dir() {
    if (char const* env = std::getenv("TCX_DATA_DIR"); env != nullptr && *env != '\0') {
      return env;
    }
    return TCX_DEFAULT_DATA_DIR;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coset enumeration and polytope verification tool", "tcx"};
    app.require_subcommand(1);
    RunConfig                cfg;
    std::string              table_out, data_path, data_dir = default_data_dir();
    bool                     orbit_only = false;
    std::vector<std::string> types, groups;

    auto* en = app.add_subcommand("enumerate", "coset enumeration of a subgroup");
    en->add_option("--pres", cfg.pres, "presentation file")->required();
    en->add_option("--sub", cfg.sub, "subgroup name (default: trivial subgroup)");
    en->add_option("--table-out", table_out, "write the standardized table (json if FILE ends in .json, else binary)");
    enumeration_options(en, cfg);
    common_options(en, cfg);

    auto* st = app.add_subcommand("stats", "vertex and facet counts, order, types");
    st->add_option("--pres", cfg.pres, "presentation file")->required();
    enumeration_options(st, cfg);
    common_options(st, cfg);

    auto* t1 = app.add_subcommand("table1", "recompute the table of known polytopes");
    t1->add_option("--data-dir", data_dir, "directory containing presentations/");
    enumeration_options(t1, cfg);
    common_options(t1, cfg);

    auto* gv = app.add_subcommand("gf2-verify", "check the GF(2) matrix certificate");
    gv->add_option("--data", data_path, "generator data file (default: built in)");
    gv->add_flag("--orbit-only", orbit_only, "only compute the isotropic orbit");
    common_options(gv, cfg);

    auto* mx = app.add_subcommand("mix", "mix of two groups or of two toroidal types");
    mx->add_option("--types", types, "two toroidal types, e.g. 3:single 2:double");
    mx->add_option("groups", groups, "psi, omega, or FILE[@SUBGROUP]");
    enumeration_options(mx, cfg);
    common_options(mx, cfg);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? EXIT_OK : EXIT_INPUT;
    }

    try {
      if (*en) {
        cmd_enumerate(cfg, table_out, out, err);
      } else if (*st) {
        cmd_stats(cfg, out, err);
      } else if (*t1) {
        cmd_table1(cfg, data_dir, out, err);
      } else if (*gv) {
        cmd_gf2_verify(cfg, data_path, orbit_only, out);
      } else if (*mx) {
        cmd_mix(cfg, types, groups, out, err);
      }
    } catch (CosetLimitExceeded const& e) {
      err << "tcx: " << e.what() << '\n';
      return EXIT_COSET_LIMIT;
    } catch (CheckFailed const&) {
      err << "tcx: verification failed\n";
      return EXIT_CHECK_FAILED;
    } catch (std::exception const& e) {
      err << "tcx: " << e.what() << '\n';
      return EXIT_INPUT;
    }
    return EXIT_OK;
  }

}  // namespace tcx::cli
