#pragma once

#include "hecke/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace hecke::cli {

using io::json;

inline constexpr int kDeskLimit = 9;

inline unsigned worker_count() {
  if (const char* env = std::getenv("HECKE_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    throw DomainError("HECKE_WORKERS must be an integer in [1, 256]");
  }
  return 1;
}

// Runs job(k) for k < count on the worker pool; results keep index order.
inline std::vector<json> parallel_jobs(std::size_t count, const std::function<json(std::size_t)>& job) {
  std::vector<json> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        out[k] = job(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Options {
  std::string field = "cyclotomic:e=3";
  std::string format = "text";
  std::uint64_t seed = 20240101;
  bool force = false;
  std::string lambda, mu, xi, tableau, input;
  int a = 1, b = 2, gamma = 1, d = 1, t = 0, n = 0, alpha = 0, beta = 0;
  bool verify = false;
};

inline void desk_guard(int n, const Options& o) {
  require(n <= kDeskLimit || o.force, "n = " + std::to_string(n) + " exceeds the desk-scale limit " +
                                          std::to_string(kDeskLimit) + "; pass --force to run anyway");
}

inline std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline bool is_table(const json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

inline std::vector<std::string> table_columns(const json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

inline void render_text(const json& doc, std::ostream& out) {
  const auto& prof = doc.at("profile");
  out << "field " << doc.at("fieldSpec").get<std::string>() << "  e=" << scalar_text(prof.at("e")) << " p=" << prof.at("p").get<int>() << '\n';
  for (const auto& [key, v] : doc.items()) {
    if (key == "profile" || key == "fieldSpec") continue;
    if (!is_table(v)) {
      out << key << ": " << scalar_text(v) << '\n';
      continue;
    }
    auto cols = table_columns(v);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const auto& row : v)
        if (row.contains(cols[c])) width[c] = std::max(width[c], scalar_text(row[cols[c]]).size());
    }
    out << key << ":\n";
    auto line = [&](auto cell) {
      out << ' ';
      for (std::size_t c = 0; c < cols.size(); ++c) out << ' ' << std::left << std::setw(static_cast<int>(width[c])) << cell(c);
      out << '\n';
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& row : v) line([&](std::size_t c) { return row.contains(cols[c]) ? scalar_text(row[cols[c]]) : std::string(); });
  }
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

// Tables become one CSV block each (with e and p columns); scalar fields become
// key,value lines.
inline void render_csv(const json& doc, std::ostream& out) {
  const auto& prof = doc.at("profile");
  const std::string e = scalar_text(prof.at("e")), p = std::to_string(prof.at("p").get<int>());
  bool any_table = false;
  for (const auto& [key, v] : doc.items()) {
    if (!is_table(v)) continue;
    any_table = true;
    auto cols = table_columns(v);
    const bool has_profile = std::find(cols.begin(), cols.end(), "e") != cols.end();
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_cell(cols[c]);
    out << (has_profile ? "\n" : ",e,p\n");
    for (const auto& row : v) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        out << (c ? "," : "") << (row.contains(cols[c]) ? csv_cell(scalar_text(row[cols[c]])) : std::string());
      if (!has_profile) out << ',' << e << ',' << p;
      out << '\n';
    }
  }
  if (any_table) return;
  out << "key,value\n";
  for (const auto& [key, v] : doc.items()) {
    if (key == "profile") continue;
    out << csv_cell(key) << ',' << csv_cell(scalar_text(v)) << '\n';
  }
  out << "e," << e << "\np," << p << '\n';
}

inline json profile_json(const QuantumProfile& prof) {
  return json{{"e", prof.e ? json(*prof.e) : json("inf")}, {"p", prof.p}};
}

template <Field F>
json subcommand(const std::string& cmd, const F& f, const Options& o) {
  const QuantumProfile prof = quantum_char(f);
  json r = json::object();
  if (cmd == "qbinom") {
    r["alpha"] = o.alpha;
    r["beta"] = o.beta;
    r["value"] = f.format(qbinom(f, o.alpha, o.beta));
  } else if (cmd == "vanish-run") {
    r["alpha"] = o.alpha;
    r["beta"] = o.beta;
    r["vanishes"] = vanish_run(prof, o.alpha, o.beta);
    require(o.alpha + o.beta <= 4096, "direct evaluation is limited to alpha + beta <= 4096");
    r["direct"] = vanish_run_direct(f, o.alpha, o.beta);
  } else if (cmd == "trivial-sub") {
    Partition mu = parse_partition(o.mu);
    r["mu"] = to_string(mu);
    r["trivialSubmodule"] = trivial_hom_exists(mu, prof);
    if (o.verify) {
      desk_guard(size(mu), o);
      r["homDim"] = hom_space_dim(f, Partition{size(mu)}, mu);
    }
  } else if (cmd == "cp-eligible") {
    CPInstance inst{parse_partition(o.mu), o.a, o.b, o.gamma};
    r["mu"] = to_string(inst.base);
    r["lambda"] = to_string(inst.partner());
    r["a"] = o.a;
    r["b"] = o.b;
    r["gamma"] = o.gamma;
    r["eligibility"] = to_string(cp_eligible(inst, prof));
  } else if (cmd == "cp-map" || cmd == "cp-verify") {
    HomSpec<F> h;
    if (!o.input.empty()) {
      std::ifstream in(o.input);
      require(in.good(), "cannot read " + o.input);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON input: ") + e.what());
      }
      h = io::homspec_from_json(f, doc);
    } else {
      Partition xi = parse_partition(o.xi.empty() ? o.mu : o.xi);
      h = o.gamma == 1 ? one_node_map(f, xi, o.a, o.b) : adjacent_map(f, xi, o.a, o.gamma);
      require(o.gamma == 1 || o.b == o.a + 1, "maps with gamma > 1 need b = a + 1");
    }
    if (cmd == "cp-map") return io::to_json(f, h);
    desk_guard(size(h.source), o);
    CPVerdict v = verify_cp(f, h);
    r["source"] = to_string(h.source);
    r["target"] = to_string(h.target);
    r["nonzero"] = v.nonzero;
    r["landsInSpecht"] = v.lands_in_specht;
  } else if (cmd == "hom-dim") {
    Partition lambda = parse_partition(o.lambda), mu = parse_partition(o.mu);
    desk_guard(size(lambda), o);
    r["lambda"] = to_string(lambda);
    r["mu"] = to_string(mu);
    r["dim"] = hom_space_dim(f, lambda, mu);
    if (prof.finite() && cp_instance_of(lambda, mu)) r["predicted"] = to_string(predicted_hom_dim(lambda, mu, prof));
  } else if (cmd == "compose") {
    Composition mu = parse_composition(o.mu);
    Tableau A;
    if (!o.tableau.empty()) {
      A = parse_tableau(o.tableau);
    } else {
      auto all = enumerate_row_standard(parse_partition(o.lambda), mu);
      require(!all.empty(), "no row-standard tableaux of this shape and type");
      std::mt19937_64 rng(o.seed);
      A = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    }
    desk_guard(A.size(), o);
    require(o.d >= 1 && o.d < static_cast<int>(mu.size()), "d must satisfy 1 <= d < length(mu)");
    require(o.t >= 0 && o.t < mu[static_cast<std::size_t>(o.d)], "t must satisfy 0 <= t < mu_{d+1}");
    HomSpec<F> h = compose_psi_theta(f, A, mu, o.d, o.t);
    json doc = io::to_json(f, h);
    doc["tableau"] = io::to_json(A);
    if (o.verify) {
      PsiMap<F> psi(f, mu, o.d, o.t);
      doc["matchesDirect"] = psi(theta_on_x(f, A, mu)).equals(f, hom_on_x(f, h));
    }
    return doc;
  } else if (cmd == "classify") {
    require(prof.finite(), "classification needs a finite e");
    require(o.n >= 0, "n must be non-negative");
    auto parts = partitions_of(o.n);
    r["n"] = o.n;
    r["rows"] = parallel_jobs(parts.size(), [&](std::size_t k) { return io::to_json(is_ep_reducible(parts[k], prof)); });
    for (auto& row : r["rows"]) row["partition"] = to_string(row["partition"].get<Partition>());
    for (auto& row : r["rows"])
      if (!row["witness"].is_null()) row["witness"] = to_string(io::report_from_json(row).witness.value());
  } else if (cmd == "tables") {
    require(prof.finite(), "tables need a finite e");
    require(o.n >= 1, "n must be positive");
    if (o.verify) desk_guard(o.n, o);
    auto parts = partitions_of(o.n);
    r["n"] = o.n;
    r["rows"] = parallel_jobs(parts.size(), [&](std::size_t k) {
      const Partition& mu = parts[k];
      json row{{"partition", to_string(mu)},
               {"dimSpecht", count_standard_tableaux(mu)},
               {"trivialSubmodule", trivial_hom_exists(mu, prof)},
               {"reducible", is_ep_reducible(mu, prof).reducible}};
      if (o.verify) row["homDimFromTrivial"] = hom_space_dim(f, Partition{o.n}, mu);
      return row;
    });
  } else {
    throw DomainError("unknown subcommand '" + cmd + "'");
  }
  return r;
}

// Parses argv, runs one subcommand and writes the rendered result to out.
// Returns 0 on success, 2 on invalid input, 1 on internal failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke algebra Specht module homomorphisms and reducibility"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "field spec, e.g. cyclotomic:e=3, p=7,q=2, ext:p=2,e=2")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();
  app.add_flag("--force", o.force, "allow n above the desk-scale limit");

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<Sub> subs = {
      {"qbinom", "Gaussian binomial [alpha choose beta]", {"alpha", "beta"}},
      {"vanish-run", "whether [alpha+k choose k] = 0 for 1 <= k <= beta", {"alpha", "beta"}},
      {"trivial-sub", "trivial submodule criterion for S^mu", {"mu", "verify"}},
      {"cp-eligible", "Carter-Payne eligibility of moving gamma nodes from row b to row a", {"mu", "a", "b", "gamma"}},
      {"cp-map", "explicit one-node or adjacent-row homomorphism", {"xi", "mu", "a", "b", "gamma", "input"}},
      {"cp-verify", "check that a homomorphism is nonzero and lands in the Specht module", {"xi", "mu", "a", "b", "gamma", "input"}},
      {"hom-dim", "dim Hom(S^lambda, S^mu) by exact linear algebra", {"lambda", "mu"}},
      {"compose", "psi_{d,t} composed with Theta_A as a sum of Theta_S", {"lambda", "mu", "tableau", "d", "t", "verify"}},
      {"classify", "(e,p)-reducibility of every partition of n", {"n"}},
      {"tables", "per-partition summary for all partitions of n", {"n", "verify"}},
  };
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    for (const auto& flag : s.flags) {
      if (flag == "alpha") sc->add_option("--alpha", o.alpha)->required();
      if (flag == "beta") sc->add_option("--beta", o.beta)->required();
      if (flag == "mu") sc->add_option("--mu", o.mu, "comma-separated parts");
      if (flag == "xi") sc->add_option("--xi", o.xi, "comma-separated parts");
      if (flag == "lambda") sc->add_option("--lambda", o.lambda, "comma-separated parts");
      if (flag == "tableau") sc->add_option("--tableau", o.tableau, "e.g. [[1,1,2],[3]]");
      if (flag == "a") sc->add_option("--a", o.a)->capture_default_str();
      if (flag == "b") sc->add_option("--b", o.b)->capture_default_str();
      if (flag == "gamma") sc->add_option("--gamma", o.gamma)->capture_default_str();
      if (flag == "d") sc->add_option("--d", o.d)->capture_default_str();
      if (flag == "t") sc->add_option("--t", o.t)->capture_default_str();
      if (flag == "n") sc->add_option("--n", o.n)->required();
      if (flag == "input") sc->add_option("--input", o.input, "HomSpec JSON file");
      if (flag == "verify") sc->add_flag("--verify", o.verify, "also run the brute-force check");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const FieldSpec spec = parse_field_spec(o.field);
    json doc = with_field(spec, [&](const auto& f) {
      json d = subcommand(cmd, f, o);
      d["profile"] = profile_json(quantum_char(f));
      d["fieldSpec"] = to_string(f.spec());
      return d;
    });
    if (o.format == "json") {
      out << doc.dump(2) << '\n';
    } else if (o.format == "csv") {
      render_csv(doc, out);
    } else {
      render_text(doc, out);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed homomorphism JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hecke::cli
