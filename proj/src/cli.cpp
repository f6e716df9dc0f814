#include "forbconf/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forbconf/catalog.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/growth.hpp"
#include "forbconf/matrix.hpp"
#include "forbconf/products.hpp"
#include "forbconf/search.hpp"
#include "forbconf/structure.hpp"

namespace forbconf {

namespace {

using nlohmann::json;

BinMatrix load_matrix(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_matrix_file(arg);
  return make_named(arg);
}

SimpleGraph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  return SimpleGraph::named(arg);
}

json embedding_json(const Embedding& e) {
  return json{{"rows", e.row_map}, {"cols", e.col_map}};
}

json growth_json(const GrowthClass& g) {
  json cert = json::object();
  if (g.kind == GrowthKind::Constant) {
    cert["ell"] = g.ell;
    json hits = json::array();
    const char* into[3] = {"I", "Ic", "T"};
    for (size_t i = 0; i < g.hits.size() && i < 3; ++i)
      hits.push_back(json{{"into", into[i]},
                          {"member", g.hits[i].member + 1},
                          {"embedding", embedding_json(g.hits[i].emb)}});
    cert["hits"] = hits;
  }
  if (!g.avoiding_factor.empty()) cert["avoiding_factor"] = g.avoiding_factor;
  if (!g.reason.empty()) cert["reason"] = g.reason;
  if (g.cycle_length > 0) cert["cycle_length"] = g.cycle_length;
  if (g.graph_witness) cert["embedding"] = embedding_json(*g.graph_witness);
  if (!g.graph_edges.empty()) {
    json edges = json::array();
    for (auto [u, v] : g.graph_edges) edges.push_back(json::array({u, v}));
    cert["graph_edges"] = edges;
  }
  if (!g.bipartition.empty()) cert["bipartition"] = g.bipartition;
  return json{{"class", growth_kind_name(g.kind)}, {"certificate", cert}};
}

struct Emitter {
  std::ostream& out;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  }
  int ok(const json& payload, int exit_code = 0) {
    out << json{{"command", command}, {"status", "ok"}, {"payload", payload}, {"millis", millis()}}.dump(2)
        << '\n';
    return exit_code;
  }
  int fail(const std::string& code, const std::string& msg) {
    out << json{{"command", command},
                {"status", "error"},
                {"error_code", code},
                {"message", msg},
                {"millis", millis()}}
               .dump(2)
        << '\n';
    return 2;
  }
};

std::vector<int> parse_q_indices(const Family& fam) {
  std::vector<int> idx;
  for (int i = 0; i < fam.size(); ++i) {
    bool matched = false;
    for (int q = 1; q <= 9; ++q) {
      if (config_equal(fam.member(i), q_config(q))) {
        idx.push_back(q);
        matched = true;
        break;
      }
    }
    if (!matched) return {};
  }
  return idx;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact search and certificates for forbidden column patterns"};
  app.require_subcommand(1);

  // check
  std::string check_target, check_pattern;
  auto* check = app.add_subcommand("check", "decide pattern containment and print a witness");
  check->add_option("--target", check_target)->required();
  check->add_option("--pattern", check_pattern)->required();

  // forb
  int forb_m = 0, forb_workers = 1;
  std::string forb_family, forb_witness_out;
  auto* forb = app.add_subcommand("forb", "exact maximum avoiding column count");
  forb->add_option("-m", forb_m)->required();
  forb->add_option("--family", forb_family)->required();
  forb->add_option("--workers", forb_workers);
  forb->add_option("--emit-witness", forb_witness_out);

  // xvalue
  std::string xv_family;
  int xv_maxp = 4;
  auto* xv = app.add_subcommand("xvalue", "product exponent of a family");
  xv->add_option("--family", xv_family)->required();
  xv->add_option("--max-p", xv_maxp);

  // classify
  std::string cls_family;
  auto* cls = app.add_subcommand("classify", "growth class with certificate");
  cls->add_option("--family", cls_family)->required();

  // turan
  int tu_m = 0, tu_workers = 1;
  std::string tu_graph;
  auto* tu = app.add_subcommand("turan", "exact extremal edge count");
  tu->add_option("-m", tu_m)->required();
  tu->add_option("--graph", tu_graph)->required();
  tu->add_option("--workers", tu_workers);

  // construct
  std::string con_name, con_out;
  auto* con = app.add_subcommand("construct", "write a catalogued matrix to a file");
  con->add_option("--name", con_name)->required();
  con->add_option("--out", con_out)->required();

  // decompose
  std::string dec_in, dec_prefix;
  int dec_row = 1;
  auto* dec = app.add_subcommand("decompose", "split a simple matrix along one row");
  dec->add_option("--in", dec_in)->required();
  dec->add_option("-r,--row", dec_row)->required();
  dec->add_option("--out-prefix", dec_prefix);

  // verify with sub-subcommands
  auto* ver = app.add_subcommand("verify", "structural checks");
  ver->require_subcommand(1);
  std::string q9_in;
  auto* vq9 = ver->add_subcommand("q9-structure", "sum-class typing of an avoider");
  vq9->add_option("--in", q9_in)->required();
  std::string bk_in;
  int bk_k = 2, bk_l = 2, bk_p = 2, bk_q = 2;
  bool bk_loose = false;
  auto* vbk = ver->add_subcommand("bucket", "row bucket-count inequality");
  vbk->add_option("--in", bk_in)->required();
  vbk->add_option("-k", bk_k);
  vbk->add_option("-l", bk_l);
  vbk->add_option("-p", bk_p);
  vbk->add_option("-q", bk_q);
  vbk->add_flag("--no-precondition", bk_loose);
  std::string ys_in;
  auto* vys = ver->add_subcommand("ysystem", "set-system sum bound");
  vys->add_option("--in", ys_in)->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    usage << e.what();
    err << usage.str() << '\n';
    Emitter em{out, args.empty() ? "" : args[0]};
    return em.fail("usage", usage.str());
  }

  Emitter em{out, app.get_subcommands().front()->get_name()};
  try {
    if (check->parsed()) {
      const BinMatrix target = load_matrix(check_target);
      const BinMatrix pattern = load_matrix(check_pattern);
      if (auto emb = has_config(target, pattern)) return em.ok(embedding_json(*emb), 0);
      return em.ok(json("none"), 1);
    }
    if (forb->parsed()) {
      const Family fam = parse_family(forb_family);
      SearchOptions opt;
      opt.workers = forb_workers;
      const SearchResult res = forb_exact(forb_m, fam, opt);
      json witness_file = nullptr;
      if (!forb_witness_out.empty()) {
        write_matrix_file(forb_witness_out, res.witness);
        witness_file = forb_witness_out;
      }
      return em.ok(json{{"forb", res.forb_value},
                        {"witness_file", witness_file},
                        {"nodes", res.nodes_expanded},
                        {"millis", res.elapsed.count()}});
    }
    if (xv->parsed()) {
      const Family fam = parse_family(xv_family);
      const auto pred = predicted_growth(fam, xv_maxp);
      const auto val = x_value(fam, xv_maxp);
      json payload{{"x", nullptr},
                   {"prediction_exponent", nullptr},
                   {"conjectural", true},
                   {"block_size", nullptr},
                   {"certificates", json::array()},
                   {"counterexample_note", nullptr}};
      if (val) {
        payload["x"] = val->x;
        payload["block_size"] = val->block_size;
        payload["certificates"] = val->certificates;
      }
      if (pred) {
        payload["prediction_exponent"] = pred->exponent;
        if (!pred->counterexample_note.empty()) payload["counterexample_note"] = pred->counterexample_note;
      }
      return em.ok(payload, val ? 0 : 1);
    }
    if (cls->parsed()) {
      const Family fam = parse_family(cls_family);
      const auto idx = parse_q_indices(fam);
      const GrowthClass g = !idx.empty() ? family_growth(idx) : classify_constant(fam);
      return em.ok(growth_json(g));
    }
    if (tu->parsed()) {
      const SimpleGraph h = load_graph(tu_graph);
      const int ex = ex_exact(tu_m, h, tu_workers);
      return em.ok(json{{"ex", ex}});
    }
    if (con->parsed()) {
      const BinMatrix m = make_named(con_name);
      write_matrix_file(con_out, m);
      return em.ok(json{{"file", con_out}, {"rows", m.rows()}, {"cols", m.ncols()}});
    }
    if (dec->parsed()) {
      const BinMatrix a = load_matrix(dec_in);
      const Decomposition d = decompose(a, dec_row);
      json payload{{"row", d.row}, {"B", d.b.to_text()}, {"C", d.c.to_text()}, {"D", d.d.to_text()}};
      if (!dec_prefix.empty()) {
        write_matrix_file(dec_prefix + "_B.mat", d.b);
        write_matrix_file(dec_prefix + "_C.mat", d.c);
        write_matrix_file(dec_prefix + "_D.mat", d.d);
        payload["files"] = json::array({dec_prefix + "_B.mat", dec_prefix + "_C.mat", dec_prefix + "_D.mat"});
      }
      return em.ok(payload);
    }
    if (vq9->parsed()) {
      em.command = "verify q9-structure";
      const BinMatrix a = load_matrix(q9_in);
      const auto classes = q9_decompose(a);
      json arr = json::array();
      for (const auto& c : classes) {
        json e{{"sum", c.sum},
               {"ncols", c.ncols},
               {"type", c.type == SumClassType::Type1   ? "type1"
                        : c.type == SumClassType::Type2 ? "type2"
                                                        : "ambiguous"},
               {"X", c.part.x},
               {"Y", c.part.y},
               {"Z", c.part.z}};
        if (c.alt) e["alt"] = json{{"X", c.alt->x}, {"Y", c.alt->y}, {"Z", c.alt->z}};
        arr.push_back(e);
      }
      return em.ok(json{{"classes", arr}});
    }
    if (vbk->parsed()) {
      em.command = "verify bucket";
      const BinMatrix a = load_matrix(bk_in);
      const BucketReport rep = bucket_inequality(a, bk_k, bk_l, bk_p, bk_q, !bk_loose);
      return em.ok(json{{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"holds", rep.holds}}, rep.holds ? 0 : 1);
    }
    if (vys->parsed()) {
      em.command = "verify ysystem";
      std::ifstream in(ys_in);
      if (!in) throw Error("io", "cannot open " + ys_in);
      json doc = json::parse(in);
      const int m = doc.at("m").get<int>();
      const auto sets = doc.at("sets").get<std::vector<std::vector<int>>>();
      const YSystemReport rep = y_system_bound(sets, m);
      return em.ok(json{{"sum", rep.total}, {"bound", rep.bound}, {"holds", rep.holds}},
                   rep.holds ? 0 : 1);
    }
    return em.fail("usage", "unknown subcommand");
  } catch (const Error& e) {
    err << e.what() << '\n';
    return em.fail(e.code, e.what());
  } catch (const json::exception& e) {
    err << e.what() << '\n';
    return em.fail("parse", e.what());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return em.fail("internal", e.what());
  }
}

}  // namespace forbconf
