#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

namespace {

bool has_line(const std::string& text, const std::string& line) {
  std::size_t at = 0;
  while ((at = text.find(line, at)) != std::string::npos) {
    bool start = at == 0 || text[at - 1] == '\n';
    std::size_t end = at + line.size();
    bool stop = end == text.size() || text[end] == '\n';
    if (start && stop) return true;
    ++at;
  }
  return false;
}

}  // namespace

TEST_CASE("check reports the compatibility findings") {
  auto r = run_cli("check " + data_file("ejemplo_i2.bqp"));
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "homotopy-coherent: yes"));
  CHECK(has_line(r.out, "right-compatible: yes"));
  CHECK(has_line(r.out, "left-compatible: no"));
  CHECK(has_line(r.out, "schurian: no"));
  CHECK(has_line(r.out, "diagonal-one-dimensional: yes"));

  auto rno = run_cli("check " + data_file("ejemplono.bqp"));
  CHECK(rno.exit_code == 0);
  CHECK(has_line(rno.out, "homotopy-coherent: yes"));
  CHECK(has_line(rno.out, "right-compatible: no"));
  CHECK(has_line(rno.out, "left-compatible: no"));

  // a monomial radical-square-zero algebra is right compatible
  auto rk = run_cli("check " + data_file("kronecker3.bqp"));
  CHECK(rk.exit_code == 0);
  CHECK(has_line(rk.out, "homotopy-coherent: yes"));
  CHECK(has_line(rk.out, "right-compatible: yes"));

  auto rbad = run_cli("check " + data_file("incoherent.bqp"));
  CHECK(rbad.exit_code == 0);  // findings are data, not errors
  CHECK(has_line(rbad.out, "homotopy-coherent: no"));
}

TEST_CASE("poset output") {
  auto r1 = run_cli("poset " + data_file("ejemplo_i1.bqp"));
  CHECK(r1.exit_code == 0);
  CHECK(has_line(r1.out, "elements: 7"));
  CHECK(has_line(r1.out, "hasse: 8"));
  CHECK(has_line(r1.out, "[beta] > [beta.gamma]"));

  auto r2 = run_cli("poset " + data_file("ejemplo_i2.bqp"));
  CHECK(has_line(r2.out, "elements: 7"));
  CHECK(has_line(r2.out, "hasse: 9"));
  CHECK(has_line(r2.out, "[alpha] > [beta.gamma]"));
  CHECK(has_line(r2.out, "[alpha] members: alpha"));
  CHECK(has_line(r2.out, "[beta.gamma] members: alpha.gamma beta.gamma"));

  auto rbad = run_cli("poset " + data_file("incoherent.bqp"));
  CHECK(rbad.exit_code == 3);
}

TEST_CASE("hh and sh output") {
  auto r = run_cli("hh " + data_file("ejemplo_i1.bqp") + " --max-degree 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "HH^0 = 1\nHH^1 = 2\nHH^2 = 0\nHH^3 = 0\n");

  auto rs = run_cli("sh " + data_file("crown.poset") + " --max-degree 2");
  CHECK(rs.exit_code == 0);
  CHECK(rs.out == "SH^0 = 1\nSH^1 = 1\nSH^2 = 0\n");

  auto rf = run_cli("hh " + data_file("ejemplo_i1.bqp") + " --max-degree 3 --field fp:32003");
  CHECK(rf.exit_code == 0);
  CHECK(rf.out == r.out);
}

TEST_CASE("reduce emits a poset file") {
  auto r = run_cli("reduce " + data_file("sigma1.poset"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "element e1\nelement e2\nelement e3\nelement al\nelement bg\n"
        "cover e1 al\ncover e1 bg\ncover e2 al\ncover e2 bg\ncover e3 bg\n");
}

TEST_CASE("compare verdicts") {
  auto r = run_cli("compare " + data_file("ejemplo_i1.bqp") + " --max-degree 2");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "family: right"));
  CHECK(has_line(r.out, "chain-map: pass"));
  CHECK(has_line(r.out, "contraction: pass"));
  CHECK(has_line(r.out,
                 "induced^1: domain 1, codomain 2, rank 1, injective yes, surjective no, "
                 "verdict injective"));

  auto rno = run_cli("compare " + data_file("ejemplono.bqp") + " --max-degree 2");
  CHECK(rno.exit_code == 0);
  CHECK(has_line(rno.out, "family: none"));
  CHECK(has_line(rno.out, "contraction: unavailable (no right-compatible family)"));

  auto rbad = run_cli("compare " + data_file("incoherent.bqp"));
  CHECK(rbad.exit_code == 3);
}

TEST_CASE("oracle subcommand is size gated") {
  auto r = run_cli("oracle-hh " + data_file("twocycle.bqp") + " --max-degree 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "oracle HH^0 = 1\noracle HH^1 = 1\noracle HH^2 = 1\noracle HH^3 = 1\n");
  auto rbig = run_cli("oracle-hh " + data_file("ejemplono.bqp"));
  CHECK(rbig.exit_code == 3);
}

TEST_CASE("exit codes and determinism") {
  auto missing = run_cli("hh /nonexistent.bqp");
  CHECK(missing.exit_code == 2);

  auto a = run_cli("compare " + data_file("ejemplo_i2.bqp") + " --max-degree 2");
  auto b = run_cli("compare " + data_file("ejemplo_i2.bqp") + " --max-degree 2");
  CHECK(a.out == b.out);
  auto c = run_cli("compare " + data_file("ejemplo_i2.bqp") + " --max-degree 2 --threads 4");
  CHECK(a.out == c.out);
}

TEST_CASE("records format is a json document") {
  auto r = run_cli("hh " + data_file("ejemplo_i1.bqp") + " --max-degree 1 --format records");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"hh\": [") != std::string::npos);
  CHECK(r.out.find("\"command\": \"hh\"") != std::string::npos);
}
