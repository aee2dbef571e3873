// Command-line front end: Hochschild cohomology of bound quiver algebras,
// the associated poset machinery, and the comparison-map verifications.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhh/algebra.hpp"
#include "qhh/classes.hpp"
#include "qhh/comparison.hpp"
#include "qhh/field.hpp"
#include "qhh/hochschild.hpp"
#include "qhh/poset.hpp"
#include "qhh/presentation.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string input;
  int max_degree = 4;
  std::string field = "q";
  int threads = 1;
  std::string format = "text";
};

const char* yn(bool b) { return b ? "yes" : "no"; }

qhh::Presentation load_bqp(const std::string& path) {
  auto pres = qhh::parse_bqp_file(path);
  if (!pres.quiver.connected())
    std::cerr << "warning: quiver is not connected\n";
  return pres;
}

struct Emitter {
  bool records = false;
  json doc = json::object();
  void line(const std::string& s) {
    if (!records) std::cout << s << "\n";
  }
  void set(const std::string& key, json v) {
    if (records) doc[key] = std::move(v);
  }
  void flush() {
    if (records) std::cout << doc.dump(2) << "\n";
  }
};

template <class F>
struct Model {
  qhh::BoundAlgebra<F> algebra;
  qhh::MinimalRelationBlocks blocks;
  qhh::PathClasses classes;
  qhh::CoherenceReport coherence;

  Model(const F& f, qhh::Presentation pres, int threads)
      : algebra(f, std::move(pres), threads),
        blocks(algebra.minimal_relation_blocks()),
        classes(qhh::compute_classes(algebra, blocks)),
        coherence(qhh::check_homotopy_coherent(classes, algebra)) {}
};

template <class F>
int cmd_check(const F& f, const RunConfig& cfg) {
  auto pres = load_bqp(cfg.input);
  Model<F> m(f, pres, cfg.threads);
  Emitter out{cfg.format == "records"};
  out.set("command", "check");
  out.set("input", cfg.input);
  out.set("field", f.name());

  auto adm = m.algebra.check_admissibility();
  out.line(std::string("admissible.generators-in-radical-square: ") +
           (adm.generators_in_square ? "pass" : "fail"));
  out.line(std::string("admissible.top-power-necessary: ") +
           (adm.fm_necessary ? "pass" : "fail") + " (necessary condition only)");
  out.set("admissible", json{{"generators_in_radical_square", adm.generators_in_square},
                             {"top_power_necessary", adm.fm_necessary},
                             {"note", "necessary condition only"},
                             {"failing_paths", adm.failing_paths}});

  out.line(std::string("homotopy-coherent: ") + yn(m.coherence.coherent));
  out.set("homotopy_coherent", m.coherence.coherent);
  if (!m.coherence.coherent) {
    out.line("  witness in ideal: " + qhh::path_str(m.algebra.quiver(), *m.coherence.ideal_witness));
    out.line("  witness not in ideal: " +
             qhh::path_str(m.algebra.quiver(), *m.coherence.clean_witness));
    out.set("witness_in_ideal", qhh::path_str(m.algebra.quiver(), *m.coherence.ideal_witness));
    out.set("witness_clean", qhh::path_str(m.algebra.quiver(), *m.coherence.clean_witness));
    out.line("right-compatible: n/a");
    out.line("left-compatible: n/a");
    out.set("right_compatible", nullptr);
    out.set("left_compatible", nullptr);
  } else {
    auto sigma = qhh::build_sigma(m.classes);
    bool right = qhh::find_compatible_family(m.classes, sigma, qhh::Side::Right).has_value();
    bool left = qhh::find_compatible_family(m.classes, sigma, qhh::Side::Left).has_value();
    out.line(std::string("right-compatible: ") + yn(right));
    out.line(std::string("left-compatible: ") + yn(left));
    out.set("right_compatible", right);
    out.set("left_compatible", left);
  }
  out.line(std::string("schurian: ") + yn(m.algebra.is_schurian()));
  out.line(std::string("diagonal-one-dimensional: ") + yn(m.algebra.diagonal_one_dimensional()));
  out.set("schurian", m.algebra.is_schurian());
  out.set("diagonal_one_dimensional", m.algebra.diagonal_one_dimensional());
  out.flush();
  return 0;
}

template <class F>
int cmd_poset(const F& f, const RunConfig& cfg) {
  auto pres = load_bqp(cfg.input);
  Model<F> m(f, pres, cfg.threads);
  if (!m.coherence.coherent)
    throw qhh::ModelError("not a poset; presentation is not homotopy coherent");
  auto sigma = qhh::build_sigma(m.classes);
  Emitter out{cfg.format == "records"};
  out.set("command", "poset");
  out.set("input", cfg.input);
  out.line("elements: " + std::to_string(sigma.poset.size()));
  json elems = json::array();
  for (int e = 0; e < sigma.poset.size(); ++e) {
    std::string members;
    for (int pid : sigma.members[e]) {
      if (!members.empty()) members += ' ';
      members += qhh::path_str(m.algebra.quiver(), m.classes.table().path(pid));
    }
    out.line(sigma.poset.name(e) + " members: " + members);
    elems.push_back(json{{"label", sigma.poset.name(e)}, {"members", members}});
  }
  out.set("elements", elems);
  const auto& covers = sigma.poset.covers();
  out.line("hasse: " + std::to_string(covers.size()));
  json edges = json::array();
  for (auto [a, b] : covers) {
    out.line(sigma.poset.name(a) + " > " + sigma.poset.name(b));
    edges.push_back(json{{"from", sigma.poset.name(a)}, {"to", sigma.poset.name(b)}});
  }
  out.set("hasse", edges);
  out.flush();
  return 0;
}

template <class F>
int cmd_hh(const F& f, const RunConfig& cfg) {
  auto pres = load_bqp(cfg.input);
  qhh::BoundAlgebra<F> A(f, pres, cfg.threads);
  qhh::HochschildComplex<F> hoch(A);
  auto dims = hoch.dims(cfg.max_degree);
  Emitter out{cfg.format == "records"};
  out.set("command", "hh");
  out.set("input", cfg.input);
  out.set("field", f.name());
  for (std::size_t n = 0; n < dims.size(); ++n)
    out.line("HH^" + std::to_string(n) + " = " + std::to_string(dims[n]));
  out.set("hh", dims);
  out.flush();
  return 0;
}

template <class F>
int cmd_sh(const F& f, const RunConfig& cfg) {
  auto poset = qhh::parse_poset_file(cfg.input);
  auto dims = qhh::simplicial_cohomology_dims(f, poset, cfg.max_degree);
  Emitter out{cfg.format == "records"};
  out.set("command", "sh");
  out.set("input", cfg.input);
  out.set("field", f.name());
  for (std::size_t n = 0; n < dims.size(); ++n)
    out.line("SH^" + std::to_string(n) + " = " + std::to_string(dims[n]));
  out.set("sh", dims);
  out.flush();
  return 0;
}

int cmd_reduce(const RunConfig& cfg) {
  auto poset = qhh::parse_poset_file(cfg.input);
  auto reduced = qhh::iz_reduce(poset);
  if (cfg.format == "records") {
    json doc;
    doc["command"] = "reduce";
    doc["input"] = cfg.input;
    doc["poset"] = qhh::serialize_poset(reduced);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << qhh::serialize_poset(reduced);
  }
  return 0;
}

template <class F>
int cmd_compare(const F& f, const RunConfig& cfg) {
  auto pres = load_bqp(cfg.input);
  Model<F> m(f, pres, cfg.threads);
  if (!m.coherence.coherent)
    throw qhh::ModelError("comparison map undefined; presentation is not homotopy coherent");
  auto sigma = qhh::build_sigma(m.classes);
  auto family = qhh::find_compatible_family(m.classes, sigma, qhh::Side::Right);
  qhh::HochschildComplex<F> hoch(m.algebra);
  qhh::Comparison<F> cmp(hoch, m.classes, sigma, family);
  Emitter out{cfg.format == "records"};
  out.set("command", "compare");
  out.set("input", cfg.input);
  out.set("field", f.name());
  out.set("max_degree", cfg.max_degree);

  out.line("coherent: yes");
  out.line("sigma-elements: " + std::to_string(sigma.poset.size()));
  out.set("sigma_elements", sigma.poset.size());
  out.line(std::string("family: ") + (family ? "right" : "none"));
  out.set("family", family ? "right" : "none");
  json fam = json::array();
  if (family)
    for (const auto& [pair, u] : family->choice) {
      out.line("  u(" + sigma.poset.name(pair.first) + ", " + sigma.poset.name(pair.second) +
               ") = " + qhh::path_str(m.algebra.quiver(), u));
      fam.push_back(json{{"from", sigma.poset.name(pair.first)},
                         {"to", sigma.poset.name(pair.second)},
                         {"path", qhh::path_str(m.algebra.quiver(), u)}});
    }
  out.set("family_paths", fam);

  json degrees = json::array();
  for (int n = 0; n <= cfg.max_degree; ++n) {
    const auto& phi = cmp.comparison_matrix(n);
    auto r = qhh::rank(f, phi);
    bool surj = r == phi.rows();
    out.line("comparison^" + std::to_string(n) + ": rank " + std::to_string(r) + " of " +
             std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) + ", surjective " +
             yn(surj));
    auto ind = cmp.induced_map(n);
    std::string verdict = ind.injective && ind.surjective ? "isomorphism"
                          : ind.injective                 ? "injective"
                          : ind.surjective                ? "surjective"
                                                          : "neither";
    out.line("induced^" + std::to_string(n) + ": domain " + std::to_string(ind.domain_dim) +
             ", codomain " + std::to_string(ind.codomain_dim) + ", rank " +
             std::to_string(ind.image_rank) + ", injective " + yn(ind.injective) +
             ", surjective " + yn(ind.surjective) + ", verdict " + verdict);
    degrees.push_back(json{{"degree", n},
                           {"comparison_rank", r},
                           {"comparison_rows", phi.rows()},
                           {"comparison_cols", phi.cols()},
                           {"comparison_surjective", surj},
                           {"induced_domain", ind.domain_dim},
                           {"induced_codomain", ind.codomain_dim},
                           {"induced_rank", ind.image_rank},
                           {"injective", ind.injective},
                           {"surjective", ind.surjective},
                           {"verdict", verdict}});
  }
  out.set("degrees", degrees);

  auto chain_rep = cmp.verify_chain_map(cfg.max_degree);
  out.line(std::string("chain-map: ") + (chain_rep.ok ? "pass" : "FAIL " + chain_rep.detail));
  out.set("chain_map", chain_rep.ok);
  auto contraction = cmp.verify_contraction(cfg.max_degree);
  if (!contraction.available) {
    out.line("contraction: unavailable (no right-compatible family)");
    out.set("contraction", nullptr);
  } else {
    out.line(std::string("contraction: ") +
             (contraction.ok ? "pass" : "FAIL " + contraction.detail));
    out.set("contraction", contraction.ok);
  }
  out.flush();
  if (!chain_rep.ok || (contraction.available && !contraction.ok))
    throw qhh::ModelError("verification failed");
  return 0;
}

template <class F>
int cmd_oracle_hh(const F& f, const RunConfig& cfg) {
  auto pres = load_bqp(cfg.input);
  qhh::BoundAlgebra<F> A(f, pres, cfg.threads);
  int degree = std::min(cfg.max_degree, 3);
  auto dims = qhh::oracle_bar_dims(f, A, degree);
  Emitter out{cfg.format == "records"};
  out.set("command", "oracle-hh");
  out.set("input", cfg.input);
  out.set("field", f.name());
  for (std::size_t n = 0; n < dims.size(); ++n)
    out.line("oracle HH^" + std::to_string(n) + " = " + std::to_string(dims[n]));
  out.set("oracle_hh", dims);
  out.flush();
  return 0;
}

template <class F>
int dispatch(const F& f, const std::string& cmd, const RunConfig& cfg) {
  if (cmd == "check") return cmd_check(f, cfg);
  if (cmd == "poset") return cmd_poset(f, cfg);
  if (cmd == "hh") return cmd_hh(f, cfg);
  if (cmd == "sh") return cmd_sh(f, cfg);
  if (cmd == "compare") return cmd_compare(f, cfg);
  if (cmd == "oracle-hh") return cmd_oracle_hh(f, cfg);
  throw qhh::ModelError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of bound quiver algebras via incidence algebras"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<CLI::App*> subs;
  for (const char* name : {"check", "poset", "hh", "sh", "reduce", "compare", "oracle-hh"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", cfg.input, "input file")->required();
    sub->add_option("--max-degree", cfg.max_degree, "largest cohomological degree")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--field", cfg.field, "q (default) or fp:<prime>");
    sub->add_option("--threads", cfg.threads, "worker threads for algebra construction");
    sub->add_option("--format", cfg.format, "text (default) or records")
        ->check(CLI::IsMember({"text", "records"}));
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (cmd == "reduce") return cmd_reduce(cfg);
    if (cfg.field == "q") return dispatch(qhh::Rationals{}, cmd, cfg);
    if (cfg.field.rfind("fp:", 0) == 0) {
      unsigned long p = std::stoul(cfg.field.substr(3));
      return dispatch(qhh::PrimeField{p}, cmd, cfg);
    }
    std::cerr << "error: bad --field spec: " << cfg.field << "\n";
    return 2;
  } catch (const qhh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qhh::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
