#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcss/bch.hpp"
#include "qcss/channel.hpp"
#include "qcss/codes.hpp"
#include "qcss/constructions.hpp"
#include "qcss/css.hpp"
#include "qcss/errors.hpp"
#include "qcss/projective.hpp"
#include "qcss/reed_muller.hpp"
#include "qcss/tables.hpp"

using namespace qcss;

namespace {

std::uint64_t parse_budget(const std::string& s) {
  if (auto caret = s.find('^'); caret != std::string::npos) {
    const auto base = std::stoull(s.substr(0, caret));
    const auto exp = std::stoull(s.substr(caret + 1));
    if (base != 2 || exp > 62) throw InvalidInput("budget: expected 2^N with N <= 62");
    return std::uint64_t{1} << exp;
  }
  return std::stoull(s);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput("cannot write '" + out_path + "'");
  out << text;
}

std::string quantum_line(const LinearCode& c) {
  std::ostringstream os;
  const std::size_t qk = c.n() - 2 * c.k();
  os << "[[" << c.n() << "," << qk << ",";
  try {
    os << dual_distance(c);
  } catch (const ResourceError&) {
    os << "?";
  }
  os << "]]\n";
  return os.str();
}

int emit_code_or_quantum(const LinearCode& c, const std::string& what, const std::string& out_path) {
  if (what == "code") {
    emit(to_text(c), out_path);
    return 0;
  }
  if (!is_self_orthogonal(c)) {
    std::cerr << "code is not self-orthogonal; no CSS code\n";
    return 1;
  }
  emit(quantum_line(c), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcss: self-orthogonal codes, CSS construction, decoding and table verification"};
  app.require_subcommand(1);
  int status = 0;

  // rm
  auto* rm = app.add_subcommand("rm", "Reed-Muller code RM(m, r)");
  std::size_t rm_m = 0, rm_r = 0;
  std::string rm_emit = "code", rm_out;
  rm->add_option("--m", rm_m)->required();
  rm->add_option("--r", rm_r)->required();
  rm->add_option("--emit", rm_emit)->check(CLI::IsMember({"code", "quantum"}));
  rm->add_option("--out", rm_out);
  rm->callback([&] { status = emit_code_or_quantum(rm_generator(rm_m, rm_r).code, rm_emit, rm_out); });

  // pg
  auto* pg = app.add_subcommand("pg", "Projective-geometry configuration PG(k, q), l-spaces");
  unsigned pg_k = 0, pg_q = 0, pg_l = 0;
  std::string pg_emit = "code", pg_out;
  pg->add_option("--k", pg_k)->required();
  pg->add_option("--q", pg_q)->required();
  pg->add_option("--l", pg_l)->required();
  pg->add_option("--emit", pg_emit)->check(CLI::IsMember({"config", "code", "quantum"}));
  pg->add_option("--out", pg_out);
  pg->callback([&] {
    const auto cfg = enumerate_spaces(pg_k, pg_q, pg_l);
    if (pg_emit == "config") {
      std::ostringstream os;
      os << "# " << cfg.name() << " b=" << cfg.b << " v=" << cfg.v << " r=" << cfg.r << " k'=" << cfg.kprime
         << " lambda=" << cfg.lambda << "\n"
         << cfg.incidence.to_text();
      emit(os.str(), pg_out);
      return;
    }
    status = emit_code_or_quantum(build_so_code(cfg), pg_emit, pg_out);
  });

  // bch
  auto* bch = app.add_subcommand("bch", "BCH code of odd length n, zeros beta^b .. beta^(b+delta-2)");
  std::size_t bch_n = 0, bch_b = 1, bch_delta = 0;
  std::string bch_emit = "spec", bch_out;
  bch->add_option("--n", bch_n)->required();
  bch->add_option("--b", bch_b);
  bch->add_option("--delta", bch_delta)->required();
  bch->add_option("--emit", bch_emit)->check(CLI::IsMember({"spec", "code"}));
  bch->add_option("--out", bch_out);
  bch->callback([&] {
    const auto spec = bch_generator(bch_n, bch_b, bch_delta);
    if (bch_emit == "code") {
      emit(to_text(cyclic_code(spec)), bch_out);
      return;
    }
    std::ostringstream os;
    os << "n=" << spec.n << " k=" << spec.dimension() << " g=" << spec.generator_hex() << " zeros=";
    for (std::size_t i = 0; i < spec.zero_set.size(); ++i) os << (i ? "," : "") << spec.zero_set[i];
    os << "\n";
    emit(os.str(), bch_out);
  });

  // bch-search
  auto* search = app.add_subcommand("bch-search", "Self-orthogonal cyclic codes whose dual is BCH");
  std::size_t search_n = 0;
  search->add_option("--n", search_n)->required();
  search->callback([&] {
    for (const auto& r : search_self_orthogonal_bch(search_n)) {
      std::cout << "[[" << r.code.n << "," << r.quantum_k() << "," << r.dual_designed_distance << "]] "
                << r.code.generator_hex() << " b=" << r.code.b << " delta=" << r.code.delta << "\n";
    }
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Apply a construction to code files");
  std::string con_name, con_out, con_outer;
  std::vector<std::string> con_inputs;
  std::size_t con_index = 0;
  unsigned con_outer_m = 0;
  construct->add_option("name", con_name, "augment shorten plotkin triple nebe product x x3 x4 y1 y4 extend-dual concat")
      ->required();
  construct->add_option("--in", con_inputs, "input code files, in theorem order")->required();
  construct->add_option("--index", con_index, "coordinate for shorten");
  construct->add_option("--outer", con_outer, "outer code file over GF(2^m) for concat (rows of integers)");
  construct->add_option("--outer-m", con_outer_m, "field degree of the outer code");
  construct->add_option("--out", con_out);
  construct->callback([&] {
    std::vector<LinearCode> codes;
    for (const auto& p : con_inputs) codes.push_back(read_code_file(p));
    ConstructionReport rep;
    if (con_name == "concat") {
      std::ifstream in(con_outer);
      if (!in) throw InvalidInput("concat needs --outer");
      std::stringstream ss;
      ss << in.rdbuf();
      rep = concatenate(codes.at(0), OuterCode::from_text(ss.str(), con_outer_m));
    } else {
      rep = construct_by_name(con_name, codes, con_index);
    }
    std::cerr << rep.name << ": [" << rep.result.n() << "," << rep.result.k() << "]";
    if (rep.predicted_dual_d) {
      std::cerr << " claimed dual distance " << (rep.predicted_dual_d->lower_bound ? ">= " : "= ")
                << rep.predicted_dual_d->value;
    }
    std::cerr << "\n";
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    emit(to_text(rep.result), con_out);
  });

  // weights
  auto* weights = app.add_subcommand("weights", "Weight distribution as CSV");
  std::string w_code;
  bool w_dual = false;
  weights->add_option("--code", w_code)->required();
  weights->add_flag("--dual", w_dual, "MacWilliams transform to the dual's distribution");
  weights->callback([&] {
    const auto c = read_code_file(w_code);
    auto w = weight_enumerator(c);
    if (w_dual) w = macwilliams(w, c.n(), c.k());
    std::cout << w.to_csv();
  });

  // min-distance
  auto* mind = app.add_subcommand("min-distance", "Minimum distance of a code");
  std::string md_code;
  bool md_split = false, md_dual = false;
  std::size_t md_bound = 15;
  std::string md_budget = "2^29";
  mind->add_option("--code", md_code)->required();
  mind->add_flag("--dual", md_dual, "distance of the dual code");
  mind->add_flag("--split", md_split, "pivot / non-pivot split certificate up to --bound");
  mind->add_option("--bound", md_bound);
  mind->add_option("--budget", md_budget);
  mind->callback([&] {
    const auto c = read_code_file(md_code);
    if (md_split) {
      const auto v = min_distance_split(md_dual ? dual(c) : c, md_bound);
      if (v.kind == SplitVerdict::Kind::kFoundWeight) {
        std::cout << "d = " << v.weight << " (witness " << v.witness->to_string() << ")\n";
      } else {
        std::cout << "d >= " << v.weight << " (no codeword of weight <= " << md_bound << "; effective bound "
                  << v.effective_bound << ", " << v.side_weight << " per side, " << v.patterns << " patterns)\n";
      }
      return;
    }
    const auto budget = parse_budget(md_budget);
    std::cout << "d = " << (md_dual ? dual_distance(c, budget) : min_distance_exhaustive(c, budget)) << "\n";
  });

  // css-build
  auto* cssb = app.add_subcommand("css-build", "Assemble a CSS code");
  std::string cb_c1, cb_c2, cb_decoder = "auto", cb_out;
  cssb->add_option("--c1", cb_c1)->required();
  cssb->add_option("--c2", cb_c2, "defaults to C1");
  cssb->add_option("--decoder", cb_decoder)->check(CLI::IsMember({"auto", "bch", "reed", "rudolph", "lookup"}));
  cssb->add_option("--out", cb_out)->required();
  cssb->callback([&] {
    const auto c1 = read_code_file(cb_c1);
    const auto c2 = cb_c2.empty() ? c1 : read_code_file(cb_c2);
    const auto code = build_css(c1, c2, cb_decoder, cb_decoder);
    write_css_file(cb_out, code);
    const auto d = code.distance();
    std::cout << "[[" << code.n() << "," << code.quantum_k() << "," << (d ? std::to_string(*d) : "?") << "]] decoders "
              << code.z_decoder()->kind() << "/" << code.x_decoder()->kind() << " radius "
              << code.z_decoder()->radius() << "/" << code.x_decoder()->radius() << "\n";
  });

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo over a Pauli channel");
  std::string sim_css, sim_csv, sim_channel = "depolarizing";
  double sim_p = 0.01, sim_px = 0, sim_py = 0, sim_pz = 0;
  std::uint64_t sim_trials = 100000, sim_seed = 42;
  sim->add_option("--css", sim_css)->required();
  sim->add_option("--channel", sim_channel)->check(CLI::IsMember({"depolarizing", "pauli"}));
  sim->add_option("--p", sim_p);
  sim->add_option("--px", sim_px);
  sim->add_option("--py", sim_py);
  sim->add_option("--pz", sim_pz);
  sim->add_option("--trials", sim_trials);
  sim->add_option("--seed", sim_seed);
  sim->add_option("--csv", sim_csv);
  sim->callback([&] {
    const auto code = read_css_file(sim_css);
    const auto ch = sim_channel == "pauli" ? ChannelSpec::pauli(sim_px, sim_py, sim_pz) : ChannelSpec::depolarizing(sim_p);
    const auto r = monte_carlo(code, ch, sim_trials, sim_seed);
    std::cout << r.channel << " trials=" << r.trials << " successes=" << r.successes
              << " decode_failures=" << r.decode_failures << " logical_errors=" << r.logical_errors
              << " logical_rate=" << r.logical_rate() << " seed=" << r.seed << "\n";
    if (!sim_csv.empty()) {
      std::ofstream out(sim_csv);
      out << "channel,p,trials,successes,decode_failures,logical_errors,seed\n"
          << r.channel << "," << r.p << "," << r.trials << "," << r.successes << "," << r.decode_failures << ","
          << r.logical_errors << "," << r.seed << "\n";
    }
  });

  // verify-tables
  auto* vt = app.add_subcommand("verify-tables", "Reproduce the BCH, projective-geometry and Reed-Muller tables");
  std::string vt_table = "all", vt_budget = "2^29", vt_json;
  std::size_t vt_bound = 15;
  vt->add_option("--table", vt_table)->check(CLI::IsMember({"1", "2", "rm", "all"}));
  vt->add_option("--budget", vt_budget);
  vt->add_option("--bound", vt_bound, "split-search bound for the [128,64] row");
  vt->add_option("--json", vt_json);
  vt->callback([&] {
    TableOptions opt;
    opt.budget = parse_budget(vt_budget);
    opt.split_bound = vt_bound;
    std::vector<TableReport> reports;
    if (vt_table == "1" || vt_table == "all") reports.push_back(verify_table1(opt));
    if (vt_table == "2" || vt_table == "all") reports.push_back(verify_table2(opt));
    if (vt_table == "rm" || vt_table == "all") reports.push_back(verify_rm_scan());
    bool ok = true;
    std::string json = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << reports[i].to_text() << "\n";
      ok = ok && reports[i].pass();
      json += reports[i].to_json() + (i + 1 < reports.size() ? ",\n" : "\n");
    }
    json += "]\n";
    if (!vt_json.empty()) emit(json, vt_json);
    status = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
