// coho: exact weight calculus for cuspidal cohomology of GL(n).
//
// Thin JSON adapter over the library; no arithmetic happens here. All
// half-integers appear as doubled integers under *_doubled keys, so the
// output contains no floating point anywhere.
//
// Exit codes: 0 ok, 1 parse error, 2 domain violation, 3 case mismatch,
// 4 resource cap exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coho/coho.hpp"

namespace {

using coho::json;

std::size_t closure_cap_from_env() {
  const char* env = std::getenv("COHO_CLOSURE_CAP");
  if (env == nullptr)
    return coho::ArchField::kDefaultClosureCap;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0)
      throw std::invalid_argument("not a positive integer");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw coho::parse_error("COHO_CLOSURE_CAP must be a positive integer, got \"" + std::string(env) + "\"");
  }
}

/// --field/--weight values: inline JSON if the text looks like it, else a
/// path to a file holding the JSON.
json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return coho::parse_json_text(arg);
  std::ifstream in(arg);
  if (!in)
    throw coho::parse_error("cannot open file \"" + arg + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return coho::parse_json_text(buf.str());
}

void print_table(const json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      print_table(value, os, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array()) {
    if (j.empty())
      os << prefix << " = []\n";
    else if (std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number(); }))
      os << prefix << " = " << j.dump() << "\n";
    else
      for (std::size_t i = 0; i < j.size(); ++i)
        print_table(j[i], os, prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

struct OutputOptions {
  std::string format = "json";
  bool meta = false;
};

void emit(const json& data, const OutputOptions& out) {
  if (out.format == "table") {
    print_table(data, std::cout);
    return;
  }
  if (out.meta) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%FT%TZ", std::gmtime(&t));
    json wrapped{{"data", data}, {"meta", json{{"generated_at", stamp}, {"tool", "coho"}}}};
    std::cout << wrapped.dump() << "\n";
  } else {
    std::cout << data.dump() << "\n";
  }
}

json run_classify(const coho::ArchField& field, const coho::Weight& mu, std::size_t cap) {
  return coho::json_of(coho::strong_purity(field, mu, cap));
}

json run_transfer(coho::CaseTag tag, const coho::ArchField& field, const coho::Weight& mu) {
  const coho::TransferCase c = coho::case_for_gl_rank(tag, mu.rank());
  json places = json::array();
  for (const auto& report : coho::transfer_reports(c, field, mu))
    places.push_back(coho::json_of(report));
  return json{{"case", coho::to_string(tag)}, {"n", c.n}, {"N", c.gl_rank()}, {"places", std::move(places)}};
}

json run_cohomological(const coho::ArchField& field, const coho::Weight& mu) {
  json places = json::array();
  for (int e : field.real_embedding_indices())
    places.push_back(json{{"embedding", e},
                          {"kind", "real"},
                          {"rep", coho::json_of(coho::generic_cohomological_rep(field, mu, e))}});
  for (int e : field.complex_place_representatives())
    places.push_back(json{{"embedding", e},
                          {"kind", "complex"},
                          {"rep", coho::json_of(coho::generic_cohomological_rep(field, mu, e))}});
  return json{{"n", mu.rank()}, {"places", std::move(places)}};
}

json run_obstruction(const coho::ArchField& field, const coho::Weight& mu) {
  if (field.complex_pairs() != 0)
    throw coho::domain_error("the even orthogonal obstruction is computed over totally real fields");
  json places = json::array();
  for (int e : field.real_embedding_indices()) {
    json entry = coho::json_of(coho::so2n_obstruction(field, mu, e));
    entry["embedding"] = e;
    places.push_back(std::move(entry));
  }
  return json{{"n", mu.rank() / 2}, {"N", mu.rank()}, {"places", std::move(places)}};
}

json run_induce(const coho::Weight& mu) {
  json j = coho::json_of(coho::hecke_infinity_type(mu));
  j["pi_real"] = coho::json_of(coho::induced_pi_infinity(mu, coho::PlaceKind::Real));
  j["pi_complex"] = coho::json_of(coho::induced_pi_infinity(mu, coho::PlaceKind::Complex));
  return j;
}

json run_enumerate(const coho::ArchField& field, int rank, long long bound, long long purity_weight,
                   long long limit, std::size_t cap) {
  const auto found = coho::enumerate_strongly_pure(field, rank, bound, purity_weight,
                                                   /*cap=*/20'000'000, cap);
  json weights = json::array();
  long long returned = 0;
  for (const auto& w : found) {
    if (limit > 0 && returned >= limit)
      break;
    weights.push_back(coho::json_of(w));
    ++returned;
  }
  return json{{"count", found.size()}, {"returned", returned}, {"weights", std::move(weights)}};
}

json run_middle_degree(coho::CaseTag tag, int n) {
  const coho::TransferCase c = coho::make_case(tag, n);
  return json{{"case", coho::to_string(tag)},
              {"n", n},
              {"N", c.gl_rank()},
              {"middle_degree", coho::middle_degree(c)}};
}

/// Weights for a batch run: one JSON object per nonempty line.
std::vector<coho::Weight> load_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw coho::parse_error("cannot open batch file \"" + path + "\"");
  std::vector<coho::Weight> weights;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    weights.push_back(coho::weight_from_json(coho::parse_json_text(line)));
  }
  return weights;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"coho: exact weight calculus for cuspidal cohomology of GL(n)"};
  app.require_subcommand(1);

  std::string field_arg, weight_arg, case_arg, batch_arg;
  OutputOptions out;
  long long k1 = 0, k2 = 0;
  int rank = 1, endo_n = 1;
  long long bound = 0, purity_weight = 0, limit = 0;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--output", out.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--meta", out.meta, "Wrap the data object and add generation metadata");
  };

  CLI::App* classify = app.add_subcommand("classify", "Purity / strong purity of a weight");
  classify->add_option("--field", field_arg, "Field JSON or path")->required();
  classify->add_option("--weight", weight_arg, "Weight JSON or path");
  classify->add_option("--batch", batch_arg, "File of weight JSON lines");
  add_output_flags(classify);

  CLI::App* transfer = app.add_subcommand("transfer", "Endoscopic transfer at every relevant place");
  transfer->add_option("--case", case_arg, "sp2n | so-odd | unitary | so-even")->required();
  transfer->add_option("--field", field_arg, "Field JSON or path")->required();
  transfer->add_option("--weight", weight_arg, "Weight JSON or path");
  transfer->add_option("--batch", batch_arg, "File of weight JSON lines");
  add_output_flags(transfer);

  CLI::App* cohomological = app.add_subcommand("cohomological", "Generic cohomological representation J(mu)");
  cohomological->add_option("--field", field_arg, "Field JSON or path")->required();
  cohomological->add_option("--weight", weight_arg, "Weight JSON or path");
  cohomological->add_option("--batch", batch_arg, "File of weight JSON lines");
  add_output_flags(cohomological);

  CLI::App* obstruction = app.add_subcommand("obstruction", "SO(2n) transfer parameter mismatch");
  obstruction->add_option("--field", field_arg, "Field JSON or path")->required();
  obstruction->add_option("--weight", weight_arg, "Weight JSON or path");
  obstruction->add_option("--batch", batch_arg, "File of weight JSON lines");
  add_output_flags(obstruction);

  CLI::App* induce = app.add_subcommand("induce", "Automorphic-induction infinity data for a parallel weight");
  induce->add_option("--weight", weight_arg, "Weight JSON or path");
  induce->add_option("--batch", batch_arg, "File of weight JSON lines");
  add_output_flags(induce);

  CLI::App* ramakrishnan = app.add_subcommand("ramakrishnan", "GL(2) x GL(2) -> GL(4) with Tate-twist repair");
  ramakrishnan->add_option("k1", k1, "First modular form weight")->required();
  ramakrishnan->add_option("k2", k2, "Second modular form weight")->required();
  add_output_flags(ramakrishnan);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Strongly pure weights in a coordinate box");
  enumerate->add_option("--rank", rank, "Weight rank n")->required();
  enumerate->add_option("--bound", bound, "Coordinate bound B")->required();
  enumerate->add_option("--purity-weight", purity_weight, "Required purity weight")->required();
  enumerate->add_option("--limit", limit, "Output at most this many weights (0 = all)");
  enumerate->add_option("--field", field_arg, "Field JSON or path (default: totally real of degree 1)");
  add_output_flags(enumerate);

  CLI::App* middle = app.add_subcommand("middle-degree", "Middle degree of discrete-series cohomology");
  middle->add_option("--case", case_arg, "sp2n | so-odd | unitary | so-even")->required();
  middle->add_option("--n", endo_n, "Endoscopy weight rank n")->required();
  add_output_flags(middle);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::size_t cap = closure_cap_from_env();
    const auto load_field = [&] { return coho::field_from_json(load_json_arg(field_arg), cap); };
    const auto load_weight = [&] { return coho::weight_from_json(load_json_arg(weight_arg)); };
    const auto run_weight_command = [&](auto&& fn) {
      if (!batch_arg.empty()) {
        for (const auto& w : load_batch(batch_arg))
          emit(fn(w), out);
        return;
      }
      if (weight_arg.empty())
        throw coho::parse_error("either --weight or --batch is required");
      emit(fn(load_weight()), out);
    };

    if (classify->parsed()) {
      const auto field = load_field();
      run_weight_command([&](const coho::Weight& w) { return run_classify(field, w, cap); });
    } else if (transfer->parsed()) {
      const auto tag = coho::case_tag_from_string(case_arg);
      const auto field = load_field();
      run_weight_command([&](const coho::Weight& w) { return run_transfer(tag, field, w); });
    } else if (cohomological->parsed()) {
      const auto field = load_field();
      run_weight_command([&](const coho::Weight& w) { return run_cohomological(field, w); });
    } else if (obstruction->parsed()) {
      const auto field = load_field();
      run_weight_command([&](const coho::Weight& w) { return run_obstruction(field, w); });
    } else if (induce->parsed()) {
      run_weight_command([&](const coho::Weight& w) { return run_induce(w); });
    } else if (ramakrishnan->parsed()) {
      emit(coho::json_of(coho::ramakrishnan_transfer(k1, k2)), out);
    } else if (enumerate->parsed()) {
      const auto field = field_arg.empty() ? coho::ArchField::totally_real(1)
                                           : coho::field_from_json(load_json_arg(field_arg), cap);
      emit(run_enumerate(field, rank, bound, purity_weight, limit, cap), out);
    } else if (middle->parsed()) {
      emit(run_middle_degree(coho::case_tag_from_string(case_arg), endo_n), out);
    }
  } catch (const coho::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const coho::case_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const coho::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const coho::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coho::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
