#include "referee/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "referee/degeneracy_protocol.hpp"
#include "referee/edge_list.hpp"
#include "referee/frugality.hpp"
#include "referee/generators.hpp"
#include "referee/powersum.hpp"
#include "referee/reductions.hpp"
#include "referee/registry.hpp"

namespace referee {

namespace {

// Raised for problems with the invocation or its input files (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the input is well-formed but the request is refused (exit 1).
class DomainRejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LabelledGraph load_graph(const std::string& path) {
  try {
    return read_edge_list_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::shared_ptr<const Protocol> load_protocol(const std::string& spec) {
  try {
    return make_protocol(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

// Graph to --out when given, otherwise to stdout ahead of the metric lines.
void emit_graph(const LabelledGraph& g, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << write_edge_list(g);
  else write_text(out_path, write_edge_list(g));
}

std::string join_sums(const PowerSumSummary& s) {
  std::string out;
  for (const BigInt& b : s.sums) out += " " + b.str();
  return out.empty() ? " -" : out;
}

struct Options {
  std::string graph;
  std::string protocol;
  std::string kind;
  std::string oracle = "exact";
  std::string out;
  std::string transcript;
  std::string messages;
  std::optional<std::size_t> k;
  std::vector<std::size_t> sizes;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 5;
  std::optional<double> bound_c;
};

int cmd_gen(const Options& o, std::ostream& out) {
  const LabelledGraph g = gen_k_degenerate(o.sizes.at(0), *o.k, *o.seed);
  emit_graph(g, o.out, out);
  return kExitOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const LabelledGraph g = load_graph(o.graph);
  const std::size_t n = g.n();
  const std::size_t k = *o.k;
  std::ostringstream text;
  text << "n " << n << " k " << k << "\n";
  for (VertexId v = 1; v <= n; ++v) {
    const PowerSumSummary s = encode(v, g.neighbors(v), n, k);
    const Message m = serialize(s, n, k);
    text << "id " << v << " degree " << s.degree << " sums" << join_sums(s) << " bits " << m.size()
         << " hex " << m.to_hex() << "\n";
  }
  if (o.out.empty()) out << text.str();
  else write_text(o.out, text.str());
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  std::ifstream in(o.messages, std::ios::binary);
  if (!in) throw UsageError("cannot open " + o.messages);
  std::string line;
  std::size_t n = 0, k = 0;
  std::size_t line_no = 0;
  std::ostringstream text;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    std::string hex;
    std::optional<std::size_t> bits;
    bool header = false;
    while (fields >> key) {
      std::string value;
      if (!(fields >> value)) throw UsageError("line " + std::to_string(line_no) + ": dangling key " + key);
      try {
        if (key == "n" && line_no == 1) n = std::stoull(value), header = true;
        else if (key == "k" && header) k = std::stoull(value);
        else if (key == "bits") bits = std::stoull(value);
        else if (key == "hex") hex = value;
        else if (key == "sums") {
          // sums carries k values; skip the rest of them.
          for (std::size_t i = 1; i < std::max<std::size_t>(k, 1); ++i) fields >> value;
        }
      } catch (const std::logic_error&) {
        throw UsageError("line " + std::to_string(line_no) + ": bad number for " + key);
      }
    }
    if (header) {
      if (n == 0) throw UsageError("header must give n >= 1");
      continue;
    }
    if (n == 0) throw UsageError("missing header 'n <n> k <k>'");
    if (!bits || hex.empty()) throw UsageError("line " + std::to_string(line_no) + ": expected bits and hex");
    try {
      const PowerSumSummary s = deserialize(Message::from_hex(hex, *bits), n, k);
      text << "id " << s.id << " degree " << s.degree;
      if (s.degree > k) {
        text << " undecodable degree-exceeds-k\n";
        continue;
      }
      text << " neighbors";
      const auto nbrs = decode(s, n);
      if (nbrs.empty()) text << " -";
      for (VertexId w : nbrs) text << " " << w;
      text << "\n";
    } catch (const CodecError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const BitError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (o.out.empty()) out << text.str();
  else write_text(o.out, text.str());
  return kExitOk;
}

int cmd_run(const Options& o, std::ostream& out) {
  const LabelledGraph g = load_graph(o.graph);
  const auto protocol = load_protocol(o.protocol);
  const Transcript t = run(*protocol, g);
  if (!o.transcript.empty()) write_text(o.transcript, export_transcript(t));
  int code = kExitOk;
  if (const auto* h = std::get_if<LabelledGraph>(&t.output)) {
    emit_graph(*h, o.out, out);
  } else if (const auto* verdict = std::get_if<bool>(&t.output)) {
    out << "verdict " << (*verdict ? "true" : "false") << "\n";
  } else if (const auto* r = std::get_if<Rejection>(&t.output)) {
    out << "rejected " << r->reason << "\n";
    code = kExitDomainRejection;
  } else {
    out << "output " << describe_output(t.output) << "\n";
  }
  out << "max_bits " << t.max_bits() << "\n";
  return code;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const LabelledGraph g = load_graph(o.graph);
  const auto protocol = load_protocol(o.protocol);
  const auto* degen = dynamic_cast<const DegeneracyProtocol*>(protocol.get());
  if (!degen) throw UsageError("recognize needs a degen:k=<K> protocol");
  const auto& config = degen->config();
  const auto messages = message_vector(*protocol, g);
  const Output result = config.generalized
                            ? generalized_reconstruct_from_messages(g.n(), messages, config.k)
                            : reconstruct_from_messages(g.n(), messages, config.k);
  if (const auto* r = std::get_if<Rejection>(&result)) {
    out << "verdict " << r->reason << "\n";
  } else {
    out << "verdict accepted\n";
  }
  std::size_t max_bits = 0;
  for (const Message& m : messages) max_bits = std::max(max_bits, m.size());
  out << "max_bits " << max_bits << "\n";
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto kind = parse_gadget_kind(o.kind);
  if (!kind) throw UsageError("--kind must be square, diameter or triangle");
  NeighborhoodEncoding encoding;
  if (o.oracle == "exact") encoding = NeighborhoodEncoding::id_list;
  else if (o.oracle == "exact-incidence") encoding = NeighborhoodEncoding::incidence_vector;
  else throw UsageError("--oracle must be exact or exact-incidence");

  const LabelledGraph g = load_graph(o.graph);
  const DeciderProtocol gamma = oracle_decider(property_for(*kind), encoding);
  Transcript t = [&] {
    try {
      return reconstruct_via_reduction(*kind, gamma, g);
    } catch (const PreconditionError& e) {
      throw DomainRejection(std::string("precondition violated: ") + e.what());
    }
  }();

  std::size_t part_max = 0;
  for (const Message& m : t.messages) {
    for (const Message& part : split_reduction_message(*kind, gamma, g.n(), m)) {
      part_max = std::max(part_max, part.size());
    }
  }
  emit_graph(std::get<LabelledGraph>(t.output), o.out, out);
  const auto fixed = gamma.protocol->fixed_message_bits(gadget_size(*kind, g.n()));
  out << "kind " << to_string(*kind) << "\n"
      << "decider " << gamma.protocol->name() << "\n"
      << "decider_n " << gadget_size(*kind, g.n()) << "\n"
      << "parts " << parts_per_message(*kind) << "\n"
      << "framing " << (fixed ? "fixed" : "elias-gamma") << "\n"
      << "decider_max_bits " << part_max << "\n"
      << "max_bits " << t.max_bits() << "\n";
  return kExitOk;
}

int cmd_frugality(const Options& o, std::ostream& out) {
  const auto protocol = load_protocol(o.protocol);
  std::size_t family_k = 1;
  if (const auto* degen = dynamic_cast<const DegeneracyProtocol*>(protocol.get())) family_k = degen->config().k;
  if (o.k) family_k = *o.k;
  std::vector<LabelledGraph> graphs;
  for (std::size_t n : o.sizes) {
    if (n == 0) throw UsageError("--n values must be >= 1");
    for (std::size_t i = 0; i < o.samples; ++i) graphs.push_back(gen_k_degenerate(n, family_k, *o.seed + i));
  }
  if (graphs.empty()) throw UsageError("--samples must be >= 1");
  BitBound bound;
  if (o.bound_c) {
    const double c = *o.bound_c;
    bound = [c](std::size_t n) { return c * std::log2(static_cast<double>(n) + 1.0); };
  }
  out << format_frugality_report(frugality_report(*protocol, graphs, bound));
  return kExitOk;
}

int cmd_count_square_free(const Options& o, std::ostream& out) {
  try {
    out << count_square_free(o.sizes.at(0)) << "\n";
  } catch (const std::domain_error& e) {
    throw DomainRejection(e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-round referee protocols: degeneracy reconstruction and hardness reductions", "referee"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Input graph in edge-list format")->required();
  };
  auto add_out = [&](CLI::App* sub, const std::string& what) { sub->add_option("--out", o.out, what); };

  auto* gen = app.add_subcommand("gen", "Generate a random graph of degeneracy <= k");
  gen->add_option("--n", o.sizes, "Vertex count")->required()->expected(1);
  gen->add_option("--k", o.k, "Degeneracy bound")->required();
  gen->add_option("--seed", o.seed, "Random seed")->required();
  add_out(gen, "Write the graph here instead of stdout");

  auto* enc = app.add_subcommand("encode", "Print every node's power-sum message");
  add_graph(enc);
  enc->add_option("--k", o.k, "Number of power sums per node")->required();
  add_out(enc, "Write the messages here instead of stdout");

  auto* dec = app.add_subcommand("decode", "Decode the neighbourhoods in an encode output file");
  dec->add_option("--messages", o.messages, "File written by the encode subcommand")->required();
  add_out(dec, "Write the result here instead of stdout");

  auto* run_cmd = app.add_subcommand("run", "Run a protocol on a graph");
  run_cmd->add_option("--protocol", o.protocol, "degen:k=<K>[,generalized][,recognize] | silent | neighbors | incidence")
      ->required();
  add_graph(run_cmd);
  add_out(run_cmd, "Write a reconstructed graph here instead of stdout");
  run_cmd->add_option("--transcript", o.transcript, "Also write the full transcript here");

  auto* rec = app.add_subcommand("recognize", "Decide whether a graph has degeneracy <= k");
  rec->add_option("--protocol", o.protocol, "degen:k=<K>[,generalized]")->required();
  add_graph(rec);

  auto* red = app.add_subcommand("reduce", "Reconstruct a graph through a gadget reduction");
  red->add_option("--kind", o.kind, "square | diameter | triangle")->required();
  add_graph(red);
  red->add_option("--oracle", o.oracle, "Decider: exact (ID lists) or exact-incidence (n-bit vectors)");
  add_out(red, "Write the reconstructed graph here instead of stdout");

  auto* fru = app.add_subcommand("frugality", "Measure message sizes on generated graphs");
  fru->add_option("--protocol", o.protocol, "Protocol spec")->required();
  fru->add_option("--n", o.sizes, "Graph sizes to sample")->required();
  fru->add_option("--seed", o.seed, "Seed of the first sample graph")->required();
  fru->add_option("--k", o.k, "Degeneracy of the sample graphs (defaults to the protocol's k, else 1)");
  fru->add_option("--samples", o.samples, "Graphs per size");
  fru->add_option("--bound-c", o.bound_c, "Check max_bits <= c * log2(n + 1)");

  auto* csf = app.add_subcommand("count-square-free", "Count labelled square-free graphs on n vertices");
  csf->add_option("--n", o.sizes, "Vertex count (at most 7)")->required()->expected(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand --help surfaces here as a CallForHelp raised by the subcommand.
    if (e.get_exit_code() == 0) {
      for (const auto* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (enc->parsed()) return cmd_encode(o, out);
    if (dec->parsed()) return cmd_decode(o, out);
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (rec->parsed()) return cmd_recognize(o, out);
    if (red->parsed()) return cmd_reduce(o, out);
    if (fru->parsed()) return cmd_frugality(o, out);
    if (csf->parsed()) return cmd_count_square_free(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainRejection& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitDomainRejection;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace referee
