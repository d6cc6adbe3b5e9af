// modcomp: classify finite group actions on surfaces over a four-cone-point
// sphere quotient: generating vectors, modular orbits, equivariant-tiling
// invariants, and partial-isometry matrices between companions.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "modcomp/report.hpp"

using namespace modcomp;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string group;
  std::string signature;
  std::string format = "text";
  std::string out;
  int max_group_order = kDefaultOrderCap;
  int threads = 1;
};

GroupTable load_group(const std::string& token, int cap) {
  if (token == "sym3" || token == "alt5" || token == "psl2_7" ||
      token == "sg21_1" || token.rfind("cyclic:", 0) == 0)
    return build_preset(token, cap);
  std::ifstream in(token);
  if (!in) throw SpecError("not a preset and not a readable file: " + token);
  json spec = json::parse(in);
  GroupSpec gs;
  gs.order_cap = cap;
  if (spec.contains("preset")) gs.preset = spec["preset"].get<std::string>();
  if (spec.contains("permutations"))
    gs.permutations = spec["permutations"].get<std::vector<std::string>>();
  if (spec.contains("table"))
    gs.table = spec["table"].get<std::vector<std::vector<int>>>();
  return build_group(gs);
}

void write_out(const CommonOpts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw SpecError("cannot write " + opts.out);
  f << content;
}

std::string sig_text(const Signature& s) {
  std::ostringstream out;
  out << "(0; ";
  for (int j = 0; j < 4; ++j) out << (j ? "," : "") << s.periods[j];
  out << ")";
  return out.str();
}

struct Pipeline {
  GroupTable G;
  Signature s;
  std::vector<Automorphism> auts;
  std::vector<GeneratingVector> vectors;
  std::vector<VectorClass> classes;
};

Pipeline run_pipeline(const CommonOpts& opts) {
  Pipeline p{load_group(opts.group, opts.max_group_order),
             Signature::parse(opts.signature),
             {},
             {},
             {}};
  p.auts = automorphisms(p.G);
  p.vectors = enumerate_vectors(p.G, p.s);
  p.classes = aut_classes(p.G, p.auts, p.vectors);
  return p;
}

int cmd_vectors(const CommonOpts& opts) {
  Pipeline p = run_pipeline(opts);
  ReportMeta meta{p.G.ordering_fingerprint(),
                  "vectors group=" + opts.group + " signature=" +
                      opts.signature + " format=" + opts.format +
                      " max-group-order=" +
                      std::to_string(opts.max_group_order)};
  if (opts.format == "json") {
    json doc{{"meta", meta_json(meta)},
             {"report", vectors_report(p.G, p.s, p.vectors, p.classes)}};
    try {
      doc["report"]["genus"] = genus(p.G, p.s);
    } catch (const SpecError&) {
      doc["report"]["genus"] = nullptr;
    }
    write_out(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    out << "c1,c2,c3,c4\n";
    for (const auto& v : p.vectors)
      out << v.c[0] << ',' << v.c[1] << ',' << v.c[2] << ',' << v.c[3] << '\n';
    write_out(opts, out.str());
  } else if (opts.format == "text") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    out << "group: " << p.G.name() << " (order " << p.G.order() << ")\n";
    out << "signature: " << sig_text(p.s) << "\n";
    try {
      out << "genus: " << genus(p.G, p.s) << "\n";
    } catch (const SpecError&) {
      out << "genus: undefined (pair is not hyperbolic)\n";
    }
    out << p.vectors.size() << " vectors, " << p.classes.size()
        << " classes\n";
    for (const auto& c : p.classes) {
      out << "class " << c.class_index << ": (";
      for (int j = 0; j < 4; ++j)
        out << (j ? ", " : "") << p.G.elem_name(c.representative.c[j]);
      out << ") ids=[";
      for (int j = 0; j < 4; ++j)
        out << (j ? "," : "") << c.representative.c[j];
      out << "] orbit=" << c.orbit_size << "\n";
    }
    write_out(opts, out.str());
  } else {
    throw SpecError("vectors supports formats: text, json, csv");
  }
  return 0;
}

int cmd_strata(const CommonOpts& opts) {
  Pipeline p = run_pipeline(opts);
  StratumPartition part = strata(p.G, p.auts, p.s, p.classes);
  ReportMeta meta{p.G.ordering_fingerprint(),
                  "strata group=" + opts.group + " signature=" +
                      opts.signature + " format=" + opts.format +
                      " max-group-order=" +
                      std::to_string(opts.max_group_order)};
  if (opts.format == "json") {
    json doc{{"meta", meta_json(meta)},
             {"report", strata_report(p.G, p.s, p.classes, part)}};
    write_out(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    out << "orbit,size,class_indices\n";
    for (size_t i = 0; i < part.orbits.size(); ++i) {
      out << i << ',' << part.orbits[i].size() << ',';
      for (size_t j = 0; j < part.orbits[i].size(); ++j)
        out << (j ? " " : "") << part.orbits[i][j];
      out << '\n';
    }
    write_out(opts, out.str());
  } else if (opts.format == "text") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    out << "group: " << p.G.name() << " (order " << p.G.order() << ")\n";
    out << "signature: " << sig_text(p.s) << "\n";
    out << p.classes.size() << " classes\n";
    out << "orbits: " << orbit_sizes_summary(part) << "\n";
    for (size_t i = 0; i < part.orbits.size(); ++i) {
      out << "orbit " << i << " (size " << part.orbits[i].size()
          << "): classes [";
      for (size_t j = 0; j < part.orbits[i].size(); ++j)
        out << (j ? "," : "") << part.orbits[i][j];
      out << "]\n";
      for (int idx : part.orbits[i]) {
        out << "  class " << idx << ": (";
        for (int j = 0; j < 4; ++j)
          out << (j ? ", " : "")
              << p.G.elem_name(p.classes[idx].representative.c[j]);
        out << ")\n";
      }
    }
    write_out(opts, out.str());
  } else {
    throw SpecError("strata supports formats: text, json, csv");
  }
  return 0;
}

int cmd_tiling(const CommonOpts& opts, const std::string& cut_text,
               int class_index, bool graph) {
  Pipeline p = run_pipeline(opts);
  CutId cut = parse_cut(cut_text);
  std::vector<int> wanted;
  if (class_index >= 0) {
    if (class_index >= static_cast<int>(p.classes.size()))
      throw SpecError("class index out of range");
    wanted.push_back(class_index);
  } else {
    for (size_t i = 0; i < p.classes.size(); ++i)
      wanted.push_back(static_cast<int>(i));
  }
  ReportMeta meta{p.G.ordering_fingerprint(),
                  "tiling group=" + opts.group + " signature=" +
                      opts.signature + " cut=" + cut_name(cut) +
                      " format=" + opts.format + " max-group-order=" +
                      std::to_string(opts.max_group_order)};

  if (opts.format == "dot") {
    if (wanted.size() != 1)
      throw SpecError("dot output needs --class-index");
    auto seq =
        crossover_sequence(p.G, cut, p.classes[wanted[0]].representative);
    std::ostringstream out;
    out << meta_comment_block(meta, "// ");
    if (graph)
      out << cayley_dot(build_graph(p.G, seq));
    else
      out << polygon_dot(p.G, seq, detect_degeneracies(p.G, seq));
    write_out(opts, out.str());
    return 0;
  }

  if (opts.format == "json") {
    json items = json::array();
    for (int idx : wanted) {
      auto seq = crossover_sequence(p.G, cut, p.classes[idx].representative);
      if (graph) {
        items.push_back(cayley_adjacency_json(build_graph(p.G, seq)));
      } else {
        json r = tiling_report(p.G, seq, detect_degeneracies(p.G, seq));
        r["class_index"] = idx;
        r["spoke_cycles_valid"] = validate_spoke_cycles(p.G, seq);
        items.push_back(r);
      }
    }
    json doc{{"meta", meta_json(meta)}, {"report", items}};
    write_out(opts, doc.dump(2) + "\n");
    return 0;
  }

  if (opts.format == "text") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    const CutSystem& cs = cut_system(cut);
    for (int idx : wanted) {
      auto seq = crossover_sequence(p.G, cut, p.classes[idx].representative);
      out << "class " << idx << " cut " << cut_name(cut) << "\n";
      if (graph) {
        out << cayley_adjacency_text(build_graph(p.G, seq));
        continue;
      }
      DegeneracyReport rep = detect_degeneracies(p.G, seq);
      for (size_t q = 0; q < seq.taus.size(); ++q)
        out << "  " << cs.slot_label(static_cast<int>(q)) << " : "
            << p.G.elem_name(seq.taus[q]) << " (id " << seq.taus[q] << ")\n";
      out << "  edge collapses:";
      for (int pos : rep.collapsed_positions) out << ' ' << cs.slot_label(pos);
      out << (rep.collapsed_positions.empty() ? " none" : "") << "\n";
      out << "  multi-edge groups:";
      for (const auto& grp : rep.multi_edge_groups) {
        out << " {";
        for (size_t j = 0; j < grp.size(); ++j)
          out << (j ? "," : "") << cs.slot_label(grp[j]);
        out << "}";
      }
      out << (rep.multi_edge_groups.empty() ? " none" : "") << "\n";
      out << "  vertex collapses:";
      bool any = false;
      for (const auto& vc : rep.vertex_collapses)
        if (vc.collapsed) {
          out << ' ' << vc.vertex;
          any = true;
        }
      out << (any ? "" : " none") << "\n";
      out << "  spoke cycles valid: "
          << (validate_spoke_cycles(p.G, seq) ? "yes" : "no") << "\n";
    }
    write_out(opts, out.str());
    return 0;
  }
  throw SpecError("tiling supports formats: text, json, dot");
}

int cmd_matrix(const CommonOpts& opts, const std::string& cut_text,
               const std::string& selection, std::uint64_t seed, int samples,
               int orbit_index) {
  Pipeline p = run_pipeline(opts);
  CutId cut = parse_cut(cut_text);
  PatchOptions po;
  if (selection == "cayley-distance") {
    po.selection = PatchOptions::Selection::CayleyDistance;
  } else if (selection == "random") {
    po.selection = PatchOptions::Selection::Random;
    po.seed = seed;
  } else {
    throw SpecError("selection must be cayley-distance or random");
  }

  std::vector<VectorClass> chosen = p.classes;
  if (orbit_index >= 0) {
    StratumPartition part = strata(p.G, p.auts, p.s, p.classes);
    if (orbit_index >= static_cast<int>(part.orbits.size()))
      throw SpecError("orbit index out of range");
    chosen.clear();
    for (int idx : part.orbits[orbit_index]) chosen.push_back(p.classes[idx]);
  }
  if (chosen.empty()) throw SpecError("no classes to compare");

  std::ostringstream cfg;
  cfg << "matrix group=" << opts.group << " signature=" << opts.signature
      << " cut=" << cut_name(cut) << " selection=" << selection;
  if (po.selection == PatchOptions::Selection::Random)
    cfg << " seed=" << seed << " samples=" << samples;
  if (orbit_index >= 0) cfg << " orbit=" << orbit_index;
  cfg << " format=" << opts.format
      << " max-group-order=" << opts.max_group_order;
  ReportMeta meta{p.G.ordering_fingerprint(), cfg.str()};

  if (samples < 1) throw SpecError("samples must be >= 1");
  if (samples > 1 && po.selection != PatchOptions::Selection::Random)
    throw SpecError("samples > 1 needs --selection random");

  std::vector<IsometryMatrix> runs;
  for (int t = 0; t < samples; ++t) {
    PatchOptions run = po;
    run.seed = po.seed + static_cast<std::uint64_t>(t);
    runs.push_back(
        isometry_matrix(p.G, p.s, cut, chosen, run, opts.threads));
  }
  const IsometryMatrix& m = runs.front();

  if (opts.format == "json") {
    json doc{{"meta", meta_json(meta)},
             {"report", matrix_report(p.G, p.s, m, chosen)}};
    if (samples > 1) {
      json mins = json::array(), maxs = json::array(), means = json::array();
      for (size_t i = 0; i < m.sizes.size(); ++i) {
        json rmin = json::array(), rmax = json::array(), rmean = json::array();
        for (size_t j = 0; j < m.sizes.size(); ++j) {
          if (!m.sizes[i][j]) {
            rmin.push_back(nullptr);
            rmax.push_back(nullptr);
            rmean.push_back(nullptr);
            continue;
          }
          int lo = *runs[0].sizes[i][j], hi = lo;
          double sum = 0;
          for (const auto& r : runs) {
            lo = std::min(lo, *r.sizes[i][j]);
            hi = std::max(hi, *r.sizes[i][j]);
            sum += *r.sizes[i][j];
          }
          rmin.push_back(lo);
          rmax.push_back(hi);
          rmean.push_back(sum / samples);
        }
        mins.push_back(rmin);
        maxs.push_back(rmax);
        means.push_back(rmean);
      }
      doc["report"]["samples"] = samples;
      doc["report"]["sizes_min"] = mins;
      doc["report"]["sizes_max"] = maxs;
      doc["report"]["sizes_mean"] = means;
    }
    write_out(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    if (samples > 1) throw SpecError("csv reports a single sample");
    write_out(opts, meta_comment_block(meta) + matrix_csv(m, chosen));
  } else if (opts.format == "text") {
    std::ostringstream out;
    out << meta_comment_block(meta);
    out << "group: " << p.G.name() << " (order " << p.G.order() << ")\n";
    out << "signature: " << sig_text(p.s) << " cut: " << cut_name(cut)
        << "\n";
    for (size_t i = 0; i < m.sizes.size(); ++i) {
      for (size_t j = 0; j < m.sizes.size(); ++j) {
        if (j) out << ' ';
        if (m.sizes[i][j])
          out << *m.sizes[i][j];
        else
          out << '-';
      }
      out << '\n';
    }
    for (size_t i = 0; i < m.flagged.size(); ++i)
      if (m.flagged[i])
        out << "class " << chosen[i].class_index
            << " flagged: edge collapse for " << cut_name(cut) << "\n";
    if (samples > 1) {
      out << "samples: " << samples << " (seeds " << po.seed << ".."
          << po.seed + samples - 1 << ")\n";
      for (size_t i = 0; i < m.sizes.size(); ++i) {
        for (size_t j = 0; j < m.sizes.size(); ++j) {
          if (j) out << ' ';
          if (!m.sizes[i][j]) {
            out << '-';
            continue;
          }
          int lo = *runs[0].sizes[i][j], hi = lo;
          double sum = 0;
          for (const auto& r : runs) {
            lo = std::min(lo, *r.sizes[i][j]);
            hi = std::max(hi, *r.sizes[i][j]);
            sum += *r.sizes[i][j];
          }
          out << lo << ':' << sum / samples << ':' << hi;
        }
        out << '\n';
      }
    }
    write_out(opts, out.str());
  } else {
    throw SpecError("matrix supports formats: text, json, csv");
  }
  return 0;
}

struct CensusRow {
  const char* group;
  const char* signature;
};

int cmd_census(const CommonOpts& opts, bool skip_heavy) {
  static const CensusRow rows[] = {
      {"sym3", "2,2,3,3"},     {"cyclic:13", "13,13,13,13"},
      {"sg21_1", "3,3,7,7"},   {"alt5", "2,2,2,3"},
      {"alt5", "2,3,3,5"},     {"alt5", "5,5,5,5"},
      {"psl2_7", "2,2,3,3"},   {"psl2_7", "7,7,7,7"},
  };
  std::ostringstream cfg;
  cfg << "census format=" << opts.format;
  if (skip_heavy) cfg << " skip-heavy";

  json items = json::array();
  std::ostringstream text, csv;
  csv << "group,signature,genus,vectors,classes,orbits\n";
  std::string fingerprint;
  for (const auto& row : rows) {
    bool heavy = std::string(row.group) == "psl2_7";
    if (heavy && skip_heavy) continue;
    CommonOpts sub = opts;
    sub.group = row.group;
    sub.signature = row.signature;
    Pipeline p = run_pipeline(sub);
    fingerprint += (fingerprint.empty() ? "" : "|") +
                   p.G.ordering_fingerprint();
    StratumPartition part = strata(p.G, p.auts, p.s, p.classes);
    int g = genus(p.G, p.s);
    std::string orbits = orbit_sizes_summary(part);
    text << p.G.name() << " " << sig_text(p.s) << ": genus " << g << ", "
         << p.vectors.size() << " vectors, " << p.classes.size()
         << " classes, orbits " << orbits << "\n";
    csv << p.G.name() << ",\"" << row.signature << "\"," << g << ','
        << p.vectors.size() << ',' << p.classes.size() << ",\"" << orbits
        << "\"\n";
    items.push_back(json{{"group", group_json(p.G)},
                         {"signature", row.signature},
                         {"genus", g},
                         {"vectors", p.vectors.size()},
                         {"classes", p.classes.size()},
                         {"orbits", orbits}});
  }
  ReportMeta meta{fingerprint, cfg.str()};
  if (opts.format == "json") {
    json doc{{"meta", meta_json(meta)}, {"report", items}};
    write_out(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_out(opts, meta_comment_block(meta) + csv.str());
  } else if (opts.format == "text") {
    write_out(opts, meta_comment_block(meta) + text.str());
  } else {
    throw SpecError("census supports formats: text, json, csv");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group actions over a four-cone-point sphere: "
               "generating vectors, modular orbits, tilings, and "
               "partial-isometry matrices"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string cut = "E4";
  std::string selection = "cayley-distance";
  std::uint64_t seed = 0;
  int samples = 1;
  int class_index = -1;
  int orbit_index = -1;
  bool graph = false;
  bool skip_heavy = false;

  auto add_common = [&](CLI::App* cmd, bool needs_sig) {
    cmd->add_option("--group", opts.group,
                    "preset (sym3, cyclic:N, alt5, psl2_7, sg21_1) or a "
                    "group-spec JSON file")
        ->required(needs_sig);
    if (needs_sig)
      cmd->add_option("--signature", opts.signature,
                      "periods m1,m2,m3,m4 (non-decreasing)")
          ->required();
    cmd->add_option("--format", opts.format, "text | json | csv | dot");
    cmd->add_option("--out", opts.out, "write the report to a file");
    cmd->add_option("--max-group-order", opts.max_group_order,
                    "group order cap");
    cmd->add_option("--threads", opts.threads, "worker threads");
  };

  CLI::App* vectors = app.add_subcommand("vectors", "enumerate generating "
                                         "vectors and their classes");
  add_common(vectors, true);

  CLI::App* strata_cmd =
      app.add_subcommand("strata", "modular orbits of vector classes");
  add_common(strata_cmd, true);

  CLI::App* tiling_cmd = app.add_subcommand(
      "tiling", "crossover sequences and tiling degeneracies");
  add_common(tiling_cmd, true);
  tiling_cmd->add_option("--cut", cut, "cut system E1..E4");
  tiling_cmd->add_option("--class-index", class_index, "restrict to a class");
  tiling_cmd->add_flag("--graph", graph, "export the Cayley graph instead of "
                       "the polygon report");

  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "partial-isometry size matrix");
  add_common(matrix_cmd, true);
  matrix_cmd->add_option("--cut", cut, "cut system E1..E4");
  matrix_cmd->add_option("--selection", selection,
                         "cayley-distance | random");
  CLI::Option* seed_opt =
      matrix_cmd->add_option("--seed", seed, "seed for random selection");
  matrix_cmd->add_option("--samples", samples,
                         "random-mode runs to aggregate (seed, seed+1, ...)");
  matrix_cmd->add_option("--orbit", orbit_index,
                         "restrict to one modular orbit");

  CLI::App* census_cmd = app.add_subcommand(
      "census", "classes and modular orbits for the shipped presets");
  census_cmd->add_option("--format", opts.format, "text | json | csv");
  census_cmd->add_option("--out", opts.out, "write the report to a file");
  census_cmd->add_flag("--skip-heavy", skip_heavy, "skip the order-168 rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(vectors)) return cmd_vectors(opts);
    if (app.got_subcommand(strata_cmd)) return cmd_strata(opts);
    if (app.got_subcommand(tiling_cmd))
      return cmd_tiling(opts, cut, class_index, graph);
    if (app.got_subcommand(matrix_cmd)) {
      if (selection == "random" && seed_opt->count() == 0)
        throw SpecError("--selection random requires --seed");
      return cmd_matrix(opts, cut, selection, seed, samples, orbit_index);
    }
    if (app.got_subcommand(census_cmd)) return cmd_census(opts, skip_heavy);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
