#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypermatroid/constructions.hpp"
#include "hypermatroid/enumerate.hpp"
#include "hypermatroid/hopf.hpp"
#include "hypermatroid/io.hpp"
#include "hypermatroid/iso.hpp"
#include "hypermatroid/matroid.hpp"

namespace hypermatroid::cli {

enum Exit { ok = 0, failed = 1, usage = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read \"" + path + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline io::MatroidDoc load_matroid(const std::string& path) {
  try {
    return io::parse_matroid(read_file(path));
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline GPFunction load_gpf(const std::string& path) {
  auto d = load_matroid(path);
  if (!d.gpf) throw FormatError(path + ": this command needs a \"gpf\" field");
  return *d.gpf;
}

inline Mask parse_set(const GroundSet& e, const std::string& text) {
  Mask m = 0;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    auto i = e.find(item);
    if (!i) throw FormatError("--set names unknown label \"" + item + "\"");
    m |= bit(*i);
  }
  return m;
}

inline std::uint64_t perp_cap() {
  const char* v = std::getenv("HYPERMATROID_MAX_PERP");
  if (!v || !*v) return kDefaultPerpCap;
  std::string s(v);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FormatError("HYPERMATROID_MAX_PERP must be a nonnegative integer");
  return std::stoull(s);
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroids over hyperfields: axiom checks, minors, duality, isomorphism and the minor Hopf algebra", "hypermatroid"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized property runs");

  std::vector<std::string> files;
  std::string type = "strong", set_text, prefixes, target, method = "takeuchi", hyperfield_name = "signs", co_method = "dual";
  int max_degree = 4, all_up_to = -1, count = 50;

  auto* check_hf = app.add_subcommand("check-hyperfield", "Exhaustive axiom check of a finite hyperfield table");
  check_hf->add_option("file", files)->required()->expected(1);
  auto* check_gpf_cmd = app.add_subcommand("check-gpf", "Weak or strong Grassmann-Plücker check");
  check_gpf_cmd->add_option("--type", type)->check(CLI::IsMember({"weak", "strong"}));
  check_gpf_cmd->add_option("file", files)->required()->expected(1);
  auto* circuits = app.add_subcommand("circuits", "H-circuits of a Grassmann-Plücker function");
  circuits->add_option("file", files)->required()->expected(1);
  auto* cocircuits = app.add_subcommand("cocircuits", "H-cocircuits, via the dual or by brute-force orthogonality");
  cocircuits->add_option("--method", co_method)->check(CLI::IsMember({"dual", "perp"}));
  cocircuits->add_option("file", files)->required()->expected(1);
  auto* dual = app.add_subcommand("dual", "Dual Grassmann-Plücker function");
  dual->add_option("file", files)->required()->expected(1);
  std::vector<CLI::App*> minors;
  for (const char* name : {"restrict", "delete", "contract"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " a set of elements");
    sub->add_option("--set", set_text, "Comma-separated labels")->required();
    sub->add_option("file", files)->required()->expected(1);
    minors.push_back(sub);
  }
  auto* dsum = app.add_subcommand("dsum", "Direct sum of two matroids");
  dsum->add_option("--prefixes", prefixes, "Relabel as P.x, e.g. L,R");
  dsum->add_option("files", files)->required()->expected(2);
  auto* push = app.add_subcommand("push", "Pushforward along a hyperfield homomorphism");
  push->add_option("--to", target, "krasner, or the source hyperfield's own name")->required();
  push->add_option("file", files)->required()->expected(1);
  auto* iso = app.add_subcommand("iso", "Isomorphism test with witness");
  iso->add_option("files", files)->required()->expected(2);
  auto* underlying = app.add_subcommand("underlying", "Underlying ordinary matroid as a Krasner matroid");
  underlying->add_option("file", files)->required()->expected(1);
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of the class of a matroid");
  coproduct->add_option("file", files)->required()->expected(1);
  auto* antipode = app.add_subcommand("antipode", "Antipode of the class of a matroid");
  antipode->add_option("--method", method)->check(CLI::IsMember({"takeuchi", "recursive"}));
  antipode->add_option("file", files)->required()->expected(1);
  auto* verify_hopf = app.add_subcommand("verify-hopf", "Check the Hopf algebra laws on generated classes");
  verify_hopf->add_option("--max-degree", max_degree)->check(CLI::Range(0, 6));
  verify_hopf->add_option("--all-up-to", all_up_to, "Use every matroid on at most this many elements")
      ->check(CLI::Range(0, 4));
  verify_hopf->add_option("--hyperfield", hyperfield_name)->check(CLI::IsMember({"krasner", "signs"}));
  verify_hopf->add_option("files", files);
  auto* properties = app.add_subcommand("properties", "Randomized relabeling and minor identities");
  properties->add_option("--count", count)->check(CLI::Range(1, 10000));
  properties->add_option("file", files)->required()->expected(1);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  const bool text = format == "text";
  auto emit_report = [&](const Report& r, const io::json& extra = io::json::object()) {
    out << (text ? io::report_text(r) : io::serialize_report(r, extra));
    return r.pass() ? ok : failed;
  };
  auto emit_matroid = [&](const io::MatroidDoc& d) {
    out << (text ? io::matroid_text(d) : io::serialize_matroid(d));
    return ok;
  };

  try {
    if (check_hf->parsed()) {
      Hyperfield h = io::parse_hyperfield(detail::read_file(files[0]));
      if (!h.is_finite()) throw FormatError(h.name() + " is infinite; only finite hyperfields can be checked");
      if (h.kind() != Kind::table) h = Hyperfield::from_table(to_table(h));
      return emit_report(verify_hyperfield_axioms(h));
    }
    if (check_gpf_cmd->parsed())
      return emit_report(check_gpf(detail::load_gpf(files[0]), type == "weak" ? Strength::weak : Strength::strong));
    if (circuits->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      return emit_matroid(io::matroid_doc(circuits_from_gpf(phi), phi.rank()));
    }
    if (cocircuits->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      CircuitSet co = co_method == "dual" ? circuits_from_gpf(dual_gpf(phi))
                                       : perp_minimal(circuits_from_gpf(phi), Strength::strong, detail::perp_cap());
      return emit_matroid(io::matroid_doc(co, phi.size() - phi.rank()));
    }
    if (dual->parsed()) return emit_matroid(io::matroid_doc(dual_gpf(detail::load_gpf(files[0]))));
    for (std::size_t i = 0; i < minors.size(); ++i) {
      if (!minors[i]->parsed()) continue;
      io::MatroidDoc d = detail::load_matroid(files[0]);
      Mask s = detail::parse_set(d.ground, set_text);
      if (d.gpf) {
        GPFunction m = i == 0 ? restrict_gpf(*d.gpf, s) : i == 1 ? delete_gpf(*d.gpf, s) : contract_gpf(*d.gpf, s);
        return emit_matroid(io::matroid_doc(m));
      }
      CircuitSet c = i == 0   ? restrict_circuits(*d.circuits, s)
                     : i == 1 ? delete_circuits(*d.circuits, s)
                              : contract_circuits(*d.circuits, s);
      return emit_matroid(io::matroid_doc(c));
    }
    if (dsum->parsed()) {
      GPFunction a = detail::load_gpf(files[0]), b = detail::load_gpf(files[1]);
      if (!prefixes.empty()) {
        auto comma = prefixes.find(',');
        if (comma == std::string::npos) throw FormatError("--prefixes expects two comma-separated prefixes");
        a = relabel(a, prefixes.substr(0, comma));
        b = relabel(b, prefixes.substr(comma + 1));
      }
      return emit_matroid(io::matroid_doc(direct_sum(a, b)));
    }
    if (push->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      const Hyperfield& h = phi.hyperfield();
      if (target == "krasner") return emit_matroid(io::matroid_doc(pushforward(Homomorphism::canonical_to_krasner(h), phi)));
      if (target == h.name() || target == h.key_name())
        return emit_matroid(io::matroid_doc(pushforward(Homomorphism::identity(h), phi)));
      throw FormatError("no homomorphism from " + h.name() + " to \"" + target + "\"");
    }
    if (iso->parsed()) {
      GPFunction a = detail::load_gpf(files[0]), b = detail::load_gpf(files[1]);
      Report r("isomorphism");
      io::json extra = io::json::object();
      if (auto w = find_isomorphism(a, b)) {
        io::json bij = io::json::object();
        for (int i = 0; i < a.size(); ++i) bij[a.ground().label(i)] = b.ground().label(w->bijection[i]);
        extra["witness"] = {{"bijection", bij}, {"alpha", a.hyperfield().format(w->alpha)}};
      } else {
        r.add({"isomorphism", {files[0], files[1]}, "no bijection and unit carry one function to the other"});
      }
      return emit_report(r, extra);
    }
    if (underlying->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      return emit_matroid(io::matroid_doc(pushforward(Homomorphism::canonical_to_krasner(phi.hyperfield()), phi),
                                          pushforward(Homomorphism::canonical_to_krasner(phi.hyperfield()),
                                                      circuits_from_gpf(phi))));
    }
    if (coproduct->parsed() || antipode->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      HopfAlgebra alg(phi.hyperfield());
      AlgebraElement x = alg.element(phi);
      if (coproduct->parsed()) {
        TensorElement t = alg.coproduct(x);
        out << (text ? io::tensor_text(t) : io::serialize_tensor(phi.hyperfield(), t));
        return ok;
      }
      AlgebraElement s = method == "takeuchi" ? alg.antipode_takeuchi(x) : alg.antipode_recursive(x);
      out << (text ? io::algebra_text(s) : io::serialize_algebra(phi.hyperfield(), s));
      return ok;
    }
    if (verify_hopf->parsed()) {
      std::vector<GPFunction> gens;
      for (const auto& f : files) gens.push_back(detail::load_gpf(f));
      Hyperfield h = gens.empty() ? io::builtin(hyperfield_name) : gens.front().hyperfield();
      if (all_up_to >= 0) {
        if (!gens.empty() && h != io::builtin(hyperfield_name))
          throw FormatError("--hyperfield differs from the generators' hyperfield");
        for (int n = 1; n <= all_up_to; ++n)
          for (auto& m : all_matroids(h, n)) gens.push_back(std::move(m));
      }
      HopfAlgebra alg(h);
      for (const auto& g : gens) alg.element(g);
      return emit_report(alg.verify_bialgebra(max_degree));
    }
    if (properties->parsed()) {
      GPFunction phi = detail::load_gpf(files[0]);
      std::mt19937_64 rng(seed);
      Report r("properties");
      const std::string key = canonical_form(phi);
      const Hyperfield& h = phi.hyperfield();
      if (!matroid_equal(dual_gpf(dual_gpf(phi)), phi)) r.add({"dual-involution", {}, "phi** differs from phi"});
      for (int t = 0; t < count; ++t) {
        std::vector<int> perm(phi.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        GPFunction q = permute(phi, perm);
        std::string shown;
        for (int p : perm) shown += std::to_string(p) + " ";
        if (canonical_form(q) != key) r.add({"key-relabel", {shown}, "canonical key changed under relabeling"});
        if (!find_isomorphism(phi, q)) r.add({"iso-relabel", {shown}, "relabeled copy not found isomorphic"});
        Mask s = rng() & phi.ground().all();
        Mask tm = rng() & phi.ground().all() & ~s;
        const GroundSet& e = phi.ground();
        if (!matroid_equal(delete_gpf(delete_gpf(phi, s), hypermatroid::detail::compress(tm, e.all() & ~s)), delete_gpf(phi, s | tm)))
          r.add({"delete-delete", {e.show(s), e.show(tm)}, ""});
        if (!matroid_equal(contract_gpf(contract_gpf(phi, s), hypermatroid::detail::compress(tm, e.all() & ~s)), contract_gpf(phi, s | tm)))
          r.add({"contract-contract", {e.show(s), e.show(tm)}, ""});
        if (h.is_finite()) {
          auto units = h.units();
          Element a = units[rng() % units.size()];
          if (canonical_form(phi.scaled(a)) != key) r.add({"key-scale", {h.format(a)}, "canonical key changed under scaling"});
        }
      }
      return emit_report(r);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  err << "error: no command\n";
  return usage;
}

}  // namespace hypermatroid::cli
