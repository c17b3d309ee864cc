#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semipredual/suites.hpp"

using namespace semipredual;

namespace {

constexpr int exit_usage = 3;

// Inline JSON, or @path to read it from a file.
json parse_arg(std::string const& text, char const* what) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) {
      throw JsonInputError(std::string(what) + ": cannot open " + text.substr(1));
    }
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (json::parse_error const& e) {
    throw JsonInputError(std::string(what) + ": " + e.what());
  }
}

int emit(json const& doc, std::string const& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << '\n';
    return exit_usage;
  }
  f << doc.dump(2) << '\n';
  return 0;
}

int code_for(Verdict v) {
  switch (v) {
    case Verdict::fail: return 1;
    case Verdict::undetermined: return 2;
    default: return 0;
  }
}

int code_for(Decision d) { return d == Decision::undetermined ? 2 : 0; }

std::vector<S1Point> weight_terms(TopologyInstance const& t, std::size_t count) {
  std::vector<S1Point> out;
  for (std::size_t n = 1; n <= count; ++n) {
    out.push_back({0, Rational(t.weights()[n])});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded verifiers for semigroup algebra preduals"};
  app.require_subcommand(1);
  std::string out;

  auto* run = app.add_subcommand("run", "Run a named verification suite");
  std::string suite;
  std::string params = "{}";
  std::uint64_t seed = 0;
  std::size_t jobs   = 1;
  run->add_option("--suite", suite, "Suite name (see `list`)")->required();
  run->add_option("--params", params, "Suite parameters as JSON, or @file");
  run->add_option("--seed", seed, "Random seed")->capture_default_str();
  run->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  run->add_option("--out", out, "Write the report here instead of stdout");

  auto* list = app.add_subcommand("list", "List registered suites");

  auto* member_cmd = app.add_subcommand("member", "Membership of a point in a basic set");
  std::string topology = "{}";
  std::string nbhd;
  std::string point;
  member_cmd->add_option("--topology", topology, "Topology descriptor JSON");
  member_cmd->add_option("--nbhd", nbhd, "Basic set {\"a\", \"s\", \"alpha\"}")->required();
  member_cmd->add_option("--point", point, "Point {\"a\", \"s\"}")->required();

  auto* converge = app.add_subcommand("converge", "Convergence certificate for a finite sequence");
  std::string sequence;
  std::size_t weight_count = 0;
  std::string limit;
  std::size_t alpha_max = 0;
  converge->add_option("--topology", topology, "Topology descriptor JSON");
  auto* seq_opt = converge->add_option("--sequence", sequence, "JSON array of points");
  converge->add_option("--weight-terms", weight_count, "Use the sequence (0, w_n), n = 1..N")->excludes(seq_opt);
  converge->add_option("--limit", limit, "Candidate limit; searched for when absent");
  converge->add_option("--alpha-max", alpha_max, "Largest alpha (default: sequence length)");

  auto* distinguish = app.add_subcommand("distinguish", "Compare the topologies of two masks");
  std::string mask1;
  std::string mask2;
  std::string weights = R"({"kind": "double_exp", "bound": 12})";
  std::size_t horizon = 12;
  distinguish->add_option("--mask1", mask1, "JSON array of indices")->required();
  distinguish->add_option("--mask2", mask2, "JSON array of indices")->required();
  distinguish->add_option("--weights", weights, "Weight descriptor JSON")->capture_default_str();
  distinguish->add_option("--horizon", horizon)->capture_default_str();

  auto* waptest = app.add_subcommand("waptest", "WAP test of a bounded function on (N, max)");
  std::string function;
  std::string pairs;
  std::size_t pair_count = 50;
  Natural wap_horizon    = 200;
  waptest->add_option("--function", function, "Function descriptor JSON")->required();
  waptest->add_option("--pairs", pairs, "JSON array of [omega, upsilon] limit descriptors");
  waptest->add_option("--random-pairs", pair_count, "Size of the seeded random family")->capture_default_str();
  waptest->add_option("--horizon", wap_horizon, "Horizon of the random family")->capture_default_str();
  waptest->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*list) {
      for (auto const& name : suite_names()) {
        std::cout << name << '\n';
      }
      return 0;
    }
    if (*run) {
      auto report = run_suite(suite, parse_arg(params, "--params"), seed, jobs);
      for (auto const& c : report.checks) {
        std::cerr << to_string(c.verdict) << "  " << c.id << "  " << c.detail << '\n';
      }
      if (int rc = emit(report.to_json(), out); rc != 0) {
        return rc;
      }
      return report.exit_code();
    }
    auto const t = topology_from_json(parse_arg(topology, "--topology"));
    if (*member_cmd) {
      auto const u = nbhd_from_json(parse_arg(nbhd, "--nbhd"));
      auto const p = s1point_from_json(parse_arg(point, "--point"));
      auto m       = member(t, u, p);
      emit({{"nbhd", to_json(u)}, {"point", to_json(p)}, {"result", to_json(m)}}, out);
      return code_for(m.status);
    }
    if (*converge) {
      std::vector<S1Point> seq;
      if (weight_count > 0) {
        seq = weight_terms(t, weight_count);
      } else {
        auto const arr = parse_arg(sequence.empty() ? "null" : sequence, "--sequence");
        if (!arr.is_array() || arr.empty()) {
          throw JsonInputError("--sequence must be a non-empty array (or use --weight-terms)");
        }
        for (auto const& x : arr) {
          seq.push_back(s1point_from_json(x));
        }
      }
      std::size_t const amax = alpha_max ? alpha_max : seq.size();
      std::optional<ConvergenceCertificate> cert;
      if (limit.empty()) {
        cert = find_limit(t, seq, amax);
      } else {
        cert = check_convergence(t, seq, s1point_from_json(parse_arg(limit, "--limit")), amax);
      }
      if (!cert) {
        emit({{"verdict", "undetermined"}, {"note", "no candidate limit certified"}}, out);
        return 2;
      }
      emit(to_json(*cert), out);
      return code_for(cert->verdict);
    }
    if (*distinguish) {
      auto const m1 = parse_arg(mask1, "--mask1").get<std::vector<std::size_t>>();
      auto const m2 = parse_arg(mask2, "--mask2").get<std::vector<std::size_t>>();
      auto const w  = weights_from_json(parse_arg(weights, "--weights"));
      auto rep      = distinguish_topologies(t.base(), w, m1, m2, horizon);
      json wit      = json::array();
      for (auto const& x : rep.witnesses) {
        wit.push_back({{"index", x.index},
                       {"point", to_json(S1Point{0, Rational(w[x.index])})},
                       {"in_second", x.in_second},
                       {"converges_in_own", x.converges_in_own},
                       {"other_member", to_json(x.other)}});
      }
      bool const distinct = rep.status == Distinction::distinct;
      emit({{"verdict", distinct ? "distinct" : "undetermined"},
            {"strong", rep.strong},
            {"symmetric_difference", rep.symmetric_difference},
            {"witnesses", wit}},
           out);
      return distinct ? 0 : 2;
    }
    if (*waptest) {
      auto const f = function_from_json(parse_arg(function, "--function"));
      std::vector<LimitPair> family;
      if (!pairs.empty()) {
        for (auto const& pr : parse_arg(pairs, "--pairs")) {
          if (!pr.is_array() || pr.size() != 2) {
            throw JsonInputError("--pairs entries are [omega, upsilon]");
          }
          family.emplace_back(limit_from_json(pr[0]), limit_from_json(pr[1]));
        }
      } else {
        family = random_pair_family(pair_count, wap_horizon, seed);
      }
      auto v   = wap_test(f, family);
      json doc = {{"status", std::string(to_string(v.status))},
                  {"certified", v.certified},
                  {"determined_pairs", v.determined_pairs},
                  {"pairs", family.size()}};
      if (v.witness) {
        auto const& [omega, upsilon] = family[v.witness->pair];
        doc["witness"] = {{"omega", to_json(omega)},
                          {"upsilon", to_json(upsilon)},
                          {"box", to_json(v.witness->box)},
                          {"diamond", to_json(v.witness->diamond)}};
      }
      emit(doc, out);
      return v.status == WapStatus::not_wap ? 1 : v.status == WapStatus::undetermined ? 2 : 0;
    }
  } catch (UnknownSuite const& e) {
    std::cerr << e.what() << "; known suites:";
    for (auto const& name : suite_names()) {
      std::cerr << ' ' << name;
    }
    std::cerr << '\n';
    return exit_usage;
  } catch (JsonInputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_usage;
  } catch (json::exception const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_usage;
  } catch (PreconditionError const& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return exit_usage;
  } catch (HorizonExceeded const& e) {
    std::cerr << "horizon exceeded: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
