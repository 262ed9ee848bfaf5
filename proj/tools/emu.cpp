// Command-line front end for the exact multi-utility engine.
//
//   emu represent      --input data.json [--pin c] [--verify] [--seed 0]
//   emu query          --input data.json [--input query.json] [--verify]
//   emu classify-batch --input data.json [--input queries.json] [--verify]
//   emu equal-reps     --input u.json --input v.json
//   emu monotone-check --input data.json [--pin c]
//   emu decompose      --input vector.json
//   emu counterexample --n 8 [--output table.csv|table.json] [--verify]
//
// Results go to --output or stdout. Failures print {"error": {...}} on
// stderr and exit nonzero.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "emu/emu.hpp"
#include "emu/json_io.hpp"

namespace {

using emu::Error;
using emu::ErrorKind;
using emu::io::Json;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string pin;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  bool verify = false;
};

constexpr std::size_t kSelfTestSamples = 100;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());
}

void write_text(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + opt.output + "'");
  out << text;
}

void write_json(const Options& opt, const Json& j) { write_text(opt, j.dump(2) + "\n"); }

void require_inputs(const Options& opt, std::size_t lo, std::size_t hi) {
  if (opt.inputs.size() < lo || opt.inputs.size() > hi) {
    throw Error(ErrorKind::usage, "expected between " + std::to_string(lo) + " and " +
                                      std::to_string(hi) + " --input files");
  }
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::verification, what);
}

std::string pin_or_last(const Options& opt, const emu::SpacePtr& space) {
  if (opt.pin.empty()) return space->labels().back();
  space->index_of(opt.pin);
  return opt.pin;
}

// Dataset file with the monotone structure folded into the statements.
emu::PreferenceDataset load_relation(const Json& j) {
  const auto file = emu::io::dataset_from_json(j);
  return emu::monotone_extend(file.dataset, file.monotone);
}

void verify_query(const emu::Representation& rep, const emu::Lottery& p, const emu::Lottery& q,
                  const emu::QueryVerdict& v) {
  const emu::Vec x = (p.measure() - q.measure()).dense();
  emu::Vec neg = x;
  for (auto& e : neg) e = -e;
  check(emu::verify_certificate(rep.cone, x, v.forward), "forward certificate does not verify");
  check(emu::verify_certificate(rep.cone, neg, v.backward), "backward certificate does not verify");
  check(v.classification == emu::classify_by_utilities(rep, p, q),
        "membership verdict disagrees with the utility test");
}

int cmd_represent(const Options& opt) {
  require_inputs(opt, 1, 1);
  const Json j = read_json(opt.inputs[0]);
  const auto data = load_relation(j);
  const auto rep = emu::extract_representation(data, pin_or_last(opt, data.space));
  if (opt.verify) {
    const std::size_t pin = data.space->index_of(rep.pin);
    for (const auto& s : data.statements) {
      const emu::Vec x = (s.p.measure() - s.q.measure()).dense();
      check(emu::verify_certificate(rep.cone, x, emu::membership(rep.cone, x)),
            "statement certificate does not verify");
      for (const auto& u : rep.utilities) {
        check(emu::expectation(s.p, u) >= emu::expectation(s.q, u),
              "extracted utility contradicts a statement");
      }
    }
    for (const auto& u : rep.utilities) check(sgn(u[pin]) == 0, "utility is not pinned");
    check(emu::check_independence_closure(data, kSelfTestSamples, opt.seed),
          "independence self-test failed");
  }
  write_json(opt, emu::io::to_json(rep));
  return 0;
}

std::vector<std::pair<emu::Lottery, emu::Lottery>> read_queries(const Options& opt, const Json& data,
                                                                const emu::SpacePtr& space,
                                                                bool batch) {
  const Json source = opt.inputs.size() > 1 ? read_json(opt.inputs[1]) : data;
  auto pair_of = [&](const Json& qj) {
    if (!qj.is_object() || !qj.contains("p") || !qj.contains("q")) {
      throw emu::io::schema_error("a query needs \"p\" and \"q\"");
    }
    return std::make_pair(emu::io::lottery_from_json(space, qj["p"]),
                          emu::io::lottery_from_json(space, qj["q"]));
  };
  std::vector<std::pair<emu::Lottery, emu::Lottery>> out;
  if (batch) {
    const Json& list = source.contains("queries") ? source["queries"] : source;
    if (!list.is_array()) throw emu::io::schema_error("expected a \"queries\" array");
    for (const auto& qj : list) out.push_back(pair_of(qj));
  } else {
    out.push_back(pair_of(source.contains("query") ? source["query"] : source));
  }
  return out;
}

int cmd_query(const Options& opt, bool batch) {
  require_inputs(opt, 1, 2);
  const Json j = read_json(opt.inputs[0]);
  const auto data = load_relation(j);
  const auto rep = emu::extract_representation(data, pin_or_last(opt, data.space));
  const auto queries = read_queries(opt, j, data.space, batch);

  std::vector<std::optional<emu::QueryVerdict>> verdicts(queries.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < queries.size(); k += step) {
      verdicts[k] = emu::query(rep, queries[k].first, queries[k].second);
    }
  };
  const std::size_t threads =
      batch ? std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, queries.size() ? queries.size() : 1) : 1;
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
  work(0, threads);
  for (auto& th : pool) th.join();

  Json results = Json::array();
  for (std::size_t k = 0; k < queries.size(); ++k) {
    const auto& [p, q] = queries[k];
    if (opt.verify) verify_query(rep, p, q, *verdicts[k]);
    Json r = emu::io::to_json(*verdicts[k], rep.cone);
    Json entry{{"p", emu::io::to_json(p.measure())}, {"q", emu::io::to_json(q.measure())}};
    entry.update(r);
    results.push_back(entry);
  }
  if (batch) {
    write_json(opt, Json{{"results", results}});
  } else {
    write_json(opt, results[0]);
  }
  return 0;
}

std::vector<emu::Utility> read_utility_set(const emu::SpacePtr& space, const Json& j, const char* key) {
  if (!j.contains(key)) throw emu::io::schema_error(std::string("missing \"") + key + "\"");
  return emu::io::utilities_from_json(space, j[key]);
}

int cmd_equal_reps(const Options& opt) {
  require_inputs(opt, 1, 2);
  const Json first = read_json(opt.inputs[0]);
  const auto space = emu::io::space_from_json(first);
  std::vector<emu::Utility> u, v;
  if (opt.inputs.size() == 2) {
    const Json second = read_json(opt.inputs[1]);
    emu::require_same_space(space, emu::io::space_from_json(second));
    u = read_utility_set(space, first, "utilities");
    v = read_utility_set(space, second, "utilities");
  } else {
    u = read_utility_set(space, first, "U");
    v = read_utility_set(space, first, "V");
  }
  write_text(opt, emu::check_uniqueness(u, v) ? "true\n" : "false\n");
  return 0;
}

int cmd_monotone_check(const Options& opt) {
  require_inputs(opt, 1, 1);
  const auto file = emu::io::dataset_from_json(read_json(opt.inputs[0]));
  const auto rep = emu::extract_representation(file.dataset, pin_or_last(opt, file.dataset.space));
  Json violations = Json::array();
  for (const auto& u : rep.utilities) {
    if (auto bad = emu::first_violation(u, file.monotone)) {
      violations.push_back(Json{{"utility", emu::io::to_json(u)},
                                {"pair", Json::array({bad->first, bad->second})}});
    }
  }
  Json pairs = Json::array();
  for (const auto& [a, b] : file.monotone.relation) pairs.push_back(Json::array({a, b}));
  write_json(opt, Json{{"monotone", pairs},
                       {"implied", violations.empty()},
                       {"pin", rep.pin},
                       {"violations", violations}});
  return 0;
}

int cmd_decompose(const Options& opt) {
  require_inputs(opt, 1, 1);
  const Json j = read_json(opt.inputs[0]);
  const auto space = emu::io::space_from_json(j);
  if (!j.contains("vector")) throw emu::io::schema_error("missing \"vector\"");
  const emu::Measure x = emu::io::measure_from_json(space, j["vector"]);
  const auto d = emu::decompose(x);
  if (opt.verify) {
    check(d.alpha * (d.plus.measure() - d.minus.measure()) == x, "decomposition does not reconstruct");
  }
  write_json(opt, emu::io::to_json(d));
  return 0;
}

int cmd_counterexample(const Options& opt) {
  if (opt.n < 1 || opt.n > emu::lab::kMaxTruncation) {
    throw Error(ErrorKind::range, "--n must lie in [1, " + std::to_string(emu::lab::kMaxTruncation) + "]");
  }
  const bool as_json = opt.output.size() >= 5 && opt.output.ends_with(".json");
  std::ostringstream csv;
  csv << "n,generators,anchor,cost\n";
  Json rows = Json::array();
  for (std::size_t n = 1; n <= opt.n; ++n) {
    const auto t = emu::lab::build_truncation(n);
    const auto cert = emu::lab::anchor_membership(t);
    const auto sep = emu::lab::separate(t);
    if (opt.verify) {
      check(emu::lab::verify_anchor_certificate(t, cert), "anchor certificate does not verify");
      check(emu::lab::verify_separation(t, sep), "separation certificate does not verify");
    }
    const std::string verdict = emu::verdict_name(cert.verdict);
    csv << n << ',' << t.generators.size() << ',' << verdict << ',' << emu::to_string(sep.cost) << '\n';
    rows.push_back(Json{{"n", n},
                        {"generators", t.generators.size()},
                        {"anchor", verdict},
                        {"cost", emu::io::to_json(sep.cost)}});
  }
  if (as_json) {
    write_json(opt, Json{{"rows", rows}});
  } else {
    write_text(opt, csv.str());
  }
  return 0;
}

int report(const std::string& kind, const std::string& message, int code,
           std::optional<std::size_t> byte = std::nullopt) {
  Json err{{"kind", kind}, {"message", message}};
  if (byte) err["byte"] = *byte;
  std::cerr << Json{{"error", err}}.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact expected multi-utility engine"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    auto* in = sub->add_option("--input", opt.inputs, "Input JSON file (repeatable)");
    if (needs_input) in->required();
    sub->add_option("--output", opt.output, "Write the result here instead of stdout");
    sub->add_flag("--verify", opt.verify, "Re-check every certificate before writing");
    return sub;
  };
  auto* represent = common(app.add_subcommand("represent", "Extract the utility set"));
  represent->add_option("--pin", opt.pin, "Outcome pinned to zero (default: last outcome)");
  represent->add_option("--seed", opt.seed, "Seed for the --verify independence self-test");
  auto* query = common(app.add_subcommand("query", "Classify one lottery pair"));
  query->add_option("--pin", opt.pin, "Outcome pinned to zero");
  auto* batch = common(app.add_subcommand("classify-batch", "Classify many lottery pairs"));
  batch->add_option("--pin", opt.pin, "Outcome pinned to zero");
  auto* equal = common(app.add_subcommand("equal-reps", "Compare two utility sets modulo constants"));
  auto* mono = common(app.add_subcommand("monotone-check", "List utilities that are not increasing"));
  mono->add_option("--pin", opt.pin, "Outcome pinned to zero");
  auto* decomp = common(app.add_subcommand("decompose", "Split a zero-sum vector into orthogonal lotteries"));
  auto* lab = common(app.add_subcommand("counterexample", "Tabulate the truncated construction"), false);
  lab->add_option("--n", opt.n, "Largest truncation size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), 2);
  }

  try {
    if (*represent) return cmd_represent(opt);
    if (*query) return cmd_query(opt, false);
    if (*batch) return cmd_query(opt, true);
    if (*equal) return cmd_equal_reps(opt);
    if (*mono) return cmd_monotone_check(opt);
    if (*decomp) return cmd_decompose(opt);
    if (*lab) return cmd_counterexample(opt);
  } catch (const Json::parse_error& e) {
    return report("parse", e.what(), 1, e.byte);
  } catch (const Json::exception& e) {
    return report("schema", e.what(), 1);
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::verification ? 3 : e.kind() == ErrorKind::usage ? 2 : 1;
    return report(emu::kind_name(e.kind()), e.what(), code);
  }
  return report("usage", "no subcommand", 2);
}
