#include "ddgl2/catalog.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace ddgl2 {

namespace {

SubspacePattern grid(const std::array<std::string, 4>& rows) {
  SubspacePattern p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      char c = rows[i][j];
      if (c == '0') p.cell[i][j] = 0;
      else if (c == 'F') p.cell[i][j] = -1;
      else if (c == 'T') p.cell[i][j] = 1;
      else p.cell[i][j] = c - '0';
    }
  return p;
}

struct Row {
  CaseSpec spec;
  ExpectedRecord expected;
};

using Triple = std::array<std::string, 3>;

CoeffCell cell_wf(std::string text, std::vector<Triple> triples) {
  return {CoeffCell::Form::well_formed, std::move(text), std::move(triples), ""};
}

const std::map<std::string, Row>& registry() {
  static const std::map<std::string, Row> table = [] {
    std::map<std::string, Row> t;
    auto add = [&](const std::string& id, int family,
                   std::vector<std::string> names, SparseEntry c12,
                   SparseEntry c21, SparseEntry c11, SparseEntry c22,
                   int dim_R, int dim_I,
                   const std::array<std::string, 4>& rpat,
                   const std::array<std::string, 4>& ipat,
                   CoeffCell coeff) -> Row& {
      Row r;
      r.spec.id = id;
      r.spec.family = family;
      r.spec.param_names = std::move(names);
      r.spec.c12 = std::move(c12);
      r.spec.c21 = std::move(c21);
      r.spec.c11 = std::move(c11);
      r.spec.c22 = std::move(c22);
      r.expected.family = family;
      r.expected.dim_R = dim_R;
      r.expected.dim_I = dim_I;
      r.expected.R_pattern = grid(rpat);
      r.expected.I_pattern = grid(ipat);
      r.expected.coeff = std::move(coeff);
      return t.emplace(id, std::move(r)).first->second;
    };

    const SparseEntry none;
    const CoeffCell zeroAC = cell_wf("A_j = C_j = 0", {{"0", "1", "0"}});
    const CoeffCell zeroAB = cell_wf("A_j = B_j = 0", {{"0", "0", "1"}});
    const CoeffCell bq = cell_wf("A_j = -C_j = -B_j q^-1",
                                 {{"-1/q", "1", "1/q"}});
    const CoeffCell cq = cell_wf("A_j = -C_j q^-1, B_j = C_j q^-1",
                                 {{"-1/q", "1/q", "1"}});

    // ---- family 1, d = diag(q^2, q, 1, 1) ----
    add("1.1", 1, {"alpha", "beta"},
        {{"e12", "alpha"}, {"e24", "beta"}}, none,
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}, {"e34", "1"}},
        {{"e11", "q^2"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}, {"e34", "-1"}},
        6, 2, {"FF00", "0F0F", "00TF", "000T"}, {"1000", "0100", "001F", "0001"},
        zeroAC);
    add("1.2", 1, {"alpha", "beta"}, none,
        {{"e21", "alpha"}, {"e32", "beta"}},
        {{"e11", "1"}, {"e22", "1/q"}, {"e33", "1/q^2"}, {"e44", "1/q^2"}, {"e34", "1"}},
        {{"e11", "q^2"}, {"e22", "q^2"}, {"e33", "q^2"}, {"e44", "q^2"}, {"e34", "-q^4"}},
        6, 2, {"F000", "FF00", "0FTF", "000T"}, {"1000", "0100", "001F", "0001"},
        zeroAB);
    add("1.3", 1, {"alpha", "beta"},
        {{"e12", "alpha"}}, {{"e32", "beta"}},
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1/q"}, {"e44", "1/q"}, {"e34", "1"}},
        {{"e11", "q^2"}, {"e22", "q"}, {"e33", "q"}, {"e44", "q"}, {"e34", "-q^2"}},
        6, 2, {"FF00", "0F00", "0FTF", "000T"}, {"1000", "0100", "001F", "0001"},
        cell_wf("A_j = -C_j = -alpha q^-1, B_j = alpha", {{"-1/q", "1", "1/q"}}));

    // ---- family 2, d = diag(q^2, q, q, 1) ----
    {
      auto& r = add("2.1", 2, {"alpha", "delta", "lambda"},
          {{"e13", "q*lambda*delta"}}, {{"e43", "delta"}},
          {{"e11", "1"}, {"e22", "alpha"}, {"e33", "1"}, {"e44", "1/q"}},
          {{"e11", "q^2"}, {"e22", "q/alpha"}, {"e33", "q"}, {"e44", "q"}},
          6, 2, {"F0F0", "0F00", "00F0", "00FF"}, {"1000", "0F00", "0010", "0001"},
          bq);
      r.spec.constraints = {"alpha != 1"};
    }
    for (const char* id : {"2.2", "2.3"})
      add(id, 2, {"alpha", "beta", "gamma"}, none, none,
          {{"e11", "1"}, {"e22", "alpha"}, {"e33", "beta"}, {"e44", "gamma"}},
          {{"e11", "q^2"}, {"e22", "q/alpha"}, {"e33", "q/beta"}, {"e44", "1/gamma"}},
          4, 4, {"F000", "0F00", "00F0", "000F"}, {"F000", "0F00", "00F0", "000F"},
          zeroAC);
    for (const char* id : {"2.4", "2.6"})
      add(id, 2, {"alpha", "beta"}, none, none,
          {{"e11", "1"}, {"e22", "alpha"}, {"e33", "alpha"}, {"e44", "beta"}, {"e23", "1"}},
          {{"e11", "q^2"}, {"e22", "q/alpha"}, {"e33", "q/alpha"}, {"e44", "1/beta"},
           {"e23", "-q/alpha^2"}},
          4, std::string(id) == "2.6" ? 3 : 4,
          {"F000", "0TF0", "00T0", "000F"},
          std::string(id) == "2.6"
              ? std::array<std::string, 4>{"1000", "02F0", "0020", "0001"}
              : std::array<std::string, 4>{"F000", "01F0", "0010", "000F"},
          zeroAB);
    add("2.5", 2, {"delta", "lambda"},
        {{"e13", "q*lambda*delta"}}, {{"e43", "delta"}},
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1/q"}, {"e23", "1"}},
        {{"e11", "q^2"}, {"e22", "q"}, {"e33", "q"}, {"e44", "q"}, {"e23", "-q"}},
        6, 2, {"F0F0", "0TF0", "00T0", "00FF"}, {"1000", "01F0", "0010", "0001"},
        bq);

    // ---- family 3, d = diag(q^2, q^2, q, 1) ----
    {
      auto& r = add("3.1", 3, {"alpha", "gamma"},
          {{"e13", "alpha"}, {"e34", "gamma"}}, none,
          {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}, {"e12", "1"}},
          {{"e11", "q^2"}, {"e22", "q^2"}, {"e33", "1"}, {"e44", "1"}},
          7, 2, {"TFFF", "0T00", "00FF", "000F"}, {"1F00", "0100", "0010", "0001"},
          zeroAC);
      r.spec.corrected["c22"] = {{"e11", "q^2"}, {"e22", "q^2"}, {"e33", "q"},
                                 {"e44", "1"}, {"e12", "-q^2"}};
    }
    add("3.2", 3, {"beta", "gamma"},
        {{"e34", "gamma"}}, {{"e32", "beta"}},
        {{"e11", "q"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}, {"e12", "1"}},
        {{"e11", "q"}, {"e22", "q"}, {"e33", "q"}, {"e44", "1"}, {"e12", "-1"}},
        6, 2, {"TF00", "0T00", "0FFF", "000F"}, {"1F00", "0100", "0010", "0001"},
        bq);
    add("3.3", 3, {"alpha", "gamma"},
        {{"e34", "gamma"}}, none,
        {{"e11", "alpha"}, {"e22", "alpha"}, {"e33", "1"}, {"e44", "1"}, {"e12", "1"}},
        {{"e11", "q^2/alpha"}, {"e22", "q^2/alpha"}, {"e33", "q"}, {"e44", "1"},
         {"e12", "-q^2/alpha^2"}},
        5, 3, {"TF00", "0T00", "00FF", "000F"}, {"1F00", "0100", "0020", "0002"},
        zeroAC);
    {
      auto& r = add("3.4", 3, {"alpha", "beta", "gamma"},
          {{"e23", "beta"}}, {{"e43", "gamma"}},
          {{"e11", "alpha"}, {"e22", "q"}, {"e33", "q"}, {"e44", "1"}},
          {{"e11", "q^2/alpha"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}},
          6, 2, {"F000", "0FF0", "00F0", "00FF"}, {"F000", "0100", "0010", "0001"},
          cq);
      r.spec.constraints = {"alpha != q"};
    }
    add("3.5", 3, {"alpha", "gamma"}, none, {{"e43", "gamma"}},
        {{"e11", "alpha"}, {"e22", "alpha"}, {"e33", "q"}, {"e44", "1"}, {"e12", "1"}},
        {{"e11", "q^2/alpha"}, {"e22", "q^2/alpha"}, {"e33", "1"}, {"e44", "1"},
         {"e12", "-q^2/alpha^2"}},
        5, 3, {"TF00", "0T00", "00F0", "00FF"}, {"1F00", "0100", "0020", "0002"},
        zeroAB);
    {
      auto& r = add("3.6", 3, {"alpha", "gamma"},
          {{"e13", "alpha"}}, {{"e43", "gamma"}},
          {{"e11", "q"}, {"e22", "alpha"}, {"e33", "q"}, {"e44", "1"}},
          {{"e11", "q"}, {"e22", "q^2/alpha"}, {"e33", "1"}, {"e44", "1"}},
          6, 2, {"F0F0", "0F00", "00F0", "00FF"}, {"1000", "0F00", "0010", "0001"},
          cq);
      r.spec.constraints = {"alpha != q"};
    }
    add("3.7", 3, {"alpha", "gamma"},
        {{"e13", "alpha"}}, {{"e43", "gamma"}},
        {{"e11", "q"}, {"e22", "q"}, {"e33", "q"}, {"e44", "1"}, {"e12", "1"}},
        {{"e11", "q"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}, {"e12", "-1"}},
        6, 2, {"TFF0", "0T00", "00FF", "000F"}, {"1F00", "0100", "0010", "0001"},
        bq);

    // ---- family 4, d = diag(alpha, q^2, q, 1), alpha generic ----
    const std::vector<std::string> fam4_constraints = {
        "alpha notin {0, q^-1, 1, q, q^2, q^3}"};
    {
      auto& r = add("4.1", 4, {"alpha", "beta", "gamma", "delta"}, none,
          {{"e32", "gamma"}, {"e43", "beta"}},
          {{"e11", "delta"}, {"e22", "q^2"}, {"e33", "q"}, {"e44", "1"}},
          {{"e11", "alpha/delta"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}},
          6, 2, {"F000", "0F00", "0FF0", "00FF"}, {"F000", "0100", "0010", "0001"},
          zeroAB);
      r.spec.constraints = fam4_constraints;
    }
    {
      auto& r = add("4.2", 4, {"alpha", "beta", "gamma", "delta"},
          {{"e23", "beta"}, {"e34", "gamma"}}, none,
          {{"e11", "delta"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}},
          {{"e11", "alpha/delta"}, {"e22", "q^2"}, {"e33", "q"}, {"e44", "1"}},
          6, 2, {"F000", "0FF0", "00FF", "000F"}, {"F000", "0100", "0010", "0001"},
          zeroAC);
      r.spec.constraints = fam4_constraints;
    }
    {
      auto& r = add("4.3", 4, {"alpha", "beta", "gamma", "delta"},
          {{"e34", "beta"}}, {{"e32", "gamma"}},
          {{"e11", "delta"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}},
          {{"e11", "alpha/delta"}, {"e22", "q"}, {"e33", "q"}, {"e44", "1"}},
          6, 2, {"F000", "0F00", "0FFF", "000F"}, {"F000", "0100", "0010", "0001"},
          bq);
      r.spec.constraints = fam4_constraints;
    }
    {
      auto& r = add("4.4", 4, {"alpha", "beta", "gamma", "delta"},
          {{"e23", "gamma"}}, {{"e43", "beta"}},
          {{"e11", "delta"}, {"e22", "q"}, {"e33", "q"}, {"e44", "1"}},
          {{"e11", "alpha/delta"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}},
          6, 2, {"F000", "0FF0", "00F0", "00FF"}, {"F000", "0100", "0010", "0001"},
          cq);
      r.spec.constraints = fam4_constraints;
    }

    // ---- family 5, d = diag(q^2, q^2, q, 1) + e12 ----
    {
      auto& r = add("5.1", 5, {"alpha", "beta", "gamma"}, none,
          {{"e43", "alpha"}},
          {{"e11", "q^2*beta"}, {"e22", "q^2*beta"}, {"e33", "q*gamma"},
           {"e44", "gamma"}, {"e12", "beta"}},
          {{"e11", "1/beta"}, {"e22", "1/beta"}, {"e33", "q/gamma"}, {"e44", "1/gamma"}},
          5, 3, {"TF00", "0T00", "00F0", "00FF"}, {"1F00", "0100", "0020", "0002"},
          cell_wf("A_j = -gamma B_j - gamma^-1 C_j",
                  {{"-gamma", "1", "0"}, {"-1/gamma", "0", "1"}}));
      r.spec.corrected["c22"] = {{"e11", "1/beta"}, {"e22", "1/beta"},
                                 {"e33", "1/gamma"}, {"e44", "1/gamma"}};
    }
    add("5.2", 5, {"alpha", "beta"},
        {{"e13", "alpha"}, {"e34", "beta"}}, none,
        {{"e11", "q^2"}, {"e22", "q^2"}, {"e33", "q^2"}, {"e44", "q^2"}, {"e12", "1"}},
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1/q"}, {"e44", "1/q^2"}},
        6, 2, {"TFF0", "0T00", "00FF", "000F"}, {"1F00", "0100", "0010", "0001"},
        zeroAC);
    add("5.3", 5, {"alpha", "beta"},
        {{"e34", "alpha"}}, {{"e32", "beta"}},
        {{"e11", "q^2"}, {"e22", "q^2"}, {"e33", "q"}, {"e44", "q"}, {"e12", "1"}},
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1/q"}},
        6, 2, {"TF00", "0T00", "0FF0", "00FF"}, {"1F00", "0100", "0010", "0001"},
        cq);
    add("5.4", 5, {"alpha", "beta", "gamma"},
        {{"e34", "alpha"}}, none,
        {{"e11", "q^2*beta"}, {"e22", "q^2*beta"}, {"e33", "gamma"}, {"e44", "gamma"},
         {"e12", "beta"}},
        {{"e11", "1/beta"}, {"e22", "1/beta"}, {"e33", "q/gamma"}, {"e44", "1/gamma"}},
        5, 3, {"TF00", "0T00", "00FF", "000F"}, {"1F00", "0100", "0020", "0002"},
        zeroAC);
    add("5.5", 5, {"alpha", "beta", "delta"},
        {{"e13", "alpha"}}, none,
        {{"e11", "q^2*beta"}, {"e22", "q^2*beta"}, {"e33", "q^2*beta"}, {"e44", "delta"},
         {"e12", "beta"}},
        {{"e11", "1/beta"}, {"e22", "1/beta"}, {"e33", "1/(q*beta)"}, {"e44", "1/delta"}},
        5, 3, {"TFF0", "0T00", "00F0", "000F"}, {"1F00", "0100", "0010", "000F"},
        zeroAC);
    {
      CoeffCell c = cell_wf("A_j = -beta B_j = -b beta", {{"-beta", "1", "0"}});
      c.note = "the symbol b in the printed cell is undefined";
      add("5.6", 5, {"alpha", "beta", "delta"}, none,
          {{"e32", "alpha"}},
          {{"e11", "q^2*beta"}, {"e22", "q^2*beta"}, {"e33", "q*beta"}, {"e44", "delta"},
           {"e12", "beta"}},
          {{"e11", "1/beta"}, {"e22", "1/beta"}, {"e33", "1/beta"}, {"e44", "1/delta"}},
          5, 3, {"TF00", "0T00", "0FF0", "000F"}, {"1F00", "0100", "0010", "000F"},
          c);
    }
    add("5.7", 5, {"alpha", "beta", "gamma"}, none, none,
        {{"e11", "q^2*alpha"}, {"e22", "q^2*alpha"}, {"e33", "beta"}, {"e44", "gamma"},
         {"e12", "alpha"}},
        {{"e11", "1/alpha"}, {"e22", "1/alpha"}, {"e33", "q/beta"}, {"e44", "1/gamma"}},
        4, 4, {"TF00", "0T00", "00F0", "000F"}, {"1F00", "0100", "00F0", "000F"},
        zeroAC);

    // ---- family 6, d = diag(q^2, q, 1, 1) + e34 ----
    {
      auto& r = add("6.1", 6, {"alpha", "beta", "gamma", "delta"}, none,
          {{"e21", "alpha"}},
          {{"e11", "q*beta"}, {"e22", "beta"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q/beta"}, {"e22", "q/beta"}, {"e33", "1/gamma"}, {"e44", "1/delta"}},
          5, 3, {"F000", "FF00", "00TF", "000T"}, {"1000", "0100", "002F", "0002"},
          cell_wf("A_j = -beta q^-1 B_j", {{"-beta/q", "1", "0"}}));
      r.spec.coercions = {{"delta", "gamma"}};
    }
    {
      CoeffCell c;
      c.form = CoeffCell::Form::not_evaluable;
      c.text = "A_j = (delta gamma^-1 - 1)(gamma - delta)^-1 B_j, "
               "B_j = (delta^-1 - gamma^-1)(gamma - delta)^-1 C_j";
      c.triples = {{"(delta/gamma-1)/(gamma-delta)",
                    "(1/delta-1/gamma)/(gamma-delta)", "1"}};
      c.note = "denominators vanish on the only relation-consistent branch "
               "gamma = delta = beta q^-1";
      auto& r = add("6.2", 6, {"alpha", "beta", "gamma", "delta"}, none,
          {{"e21", "alpha"}},
          {{"e11", "q*beta"}, {"e22", "beta"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q/beta"}, {"e22", "q/beta"}, {"e33", "1/gamma"}, {"e44", "1/delta"}},
          6, 2, {"F000", "FF00", "00FF", "000F"}, {"1000", "0100", "0020", "0002"},
          c);
      r.spec.coercions = {{"gamma", "beta/q"}, {"delta", "beta/q"}};
    }
    add("6.3", 6, {"alpha", "beta"},
        {{"e24", "alpha"}, {"e12", "beta"}}, none,
        {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}, {"e34", "1"}},
        {{"e11", "q^2"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}},
        6, 2, {"FF00", "0F0F", "00TF", "000T"}, {"1000", "0100", "001F", "0001"},
        zeroAC);
    add("6.4", 6, {"alpha", "beta", "gamma"},
        {{"e12", "beta"}}, none,
        {{"e11", "alpha"}, {"e22", "alpha"}, {"e33", "gamma"}, {"e44", "gamma"},
         {"e34", "gamma"}},
        {{"e11", "q^2/alpha"}, {"e22", "q/alpha"}, {"e33", "1/gamma"}, {"e44", "1/gamma"}},
        5, 3, {"FF00", "0F00", "00TF", "000T"}, {"1000", "0100", "002F", "0002"},
        zeroAC);
    {
      CoeffCell c;
      c.form = CoeffCell::Form::not_evaluable;
      c.text = "A_j = -gamma^-1 B_j, "
               "B_j = (delta^-1 - gamma^-1)(gamma - delta)^-1 C_j";
      c.triples = {{"-1/gamma", "(1/delta-1/gamma)/(gamma-delta)", "1"}};
      c.note = "denominators vanish on the only relation-consistent branch "
               "delta = gamma";
      auto& r = add("6.5", 6, {"alpha", "beta", "gamma", "delta"},
          {{"e12", "beta"}}, none,
          {{"e11", "alpha"}, {"e22", "alpha"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q^2/alpha"}, {"e22", "q/alpha"}, {"e33", "1/gamma"},
           {"e44", "1/delta"}},
          6, 2, {"FF00", "0F00", "00FF", "000F"}, {"1000", "0100", "0020", "0002"},
          c);
      r.spec.coercions = {{"delta", "gamma"}};
    }
    {
      auto& r = add("6.6", 6, {"alpha", "beta", "gamma", "delta"},
          {{"e24", "delta"}}, none,
          {{"e11", "alpha"}, {"e22", "beta"}, {"e33", "gamma"}, {"e44", "beta"},
           {"e34", "beta"}},
          {{"e11", "q^2/alpha"}, {"e22", "q/beta"}, {"e33", "1/gamma"}, {"e44", "1/beta"}},
          5, 2, {"F000", "0F0F", "00TF", "000T"}, {"F000", "0100", "0010", "0001"},
          cell_wf("A_j = B_j... with B_j = -beta^-1 A_j, "
                  "C_j = (1-q)(q beta^-1 - beta^-1)^-1 B_j",
                  {{"1", "-1/beta", "(1-q)/(q/beta-1/beta)"}}));
      r.spec.coercions = {{"beta", "alpha/q^2"}, {"gamma", "alpha/q^2"}};
    }
    {
      CoeffCell c;
      c.form = CoeffCell::Form::malformed;
      c.text = "B_j = beta^2 B_j";
      c.note = "self-referential as printed";
      auto& r = add("6.7", 6, {"alpha", "beta", "gamma", "delta"},
          {{"e24", "delta"}}, none,
          {{"e11", "alpha"}, {"e22", "beta"}, {"e33", "gamma"}, {"e44", "beta"},
           {"e34", "beta"}},
          {{"e11", "q^2/alpha"}, {"e22", "q/beta"}, {"e33", "1/gamma"}, {"e44", "1/beta"}},
          6, 2, {"F000", "0F0F", "00FF", "000F"}, {"F000", "0100", "0010", "0001"},
          c);
      r.spec.coercions = {{"gamma", "beta"}};
      r.spec.constraints = {"alpha != beta", "alpha != q^2*beta"};
    }
    {
      auto& r = add("6.8", 6, {"alpha", "beta", "gamma", "delta"}, none,
          {{"e32", "beta"}},
          {{"e11", "alpha"}, {"e22", "q*gamma"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q^2/alpha"}, {"e22", "1/gamma"}, {"e33", "1/gamma"},
           {"e44", "1/delta"}},
          5, 3, {"F000", "0F00", "0FTF", "000T"}, {"F000", "0100", "001F", "0001"},
          cell_wf("A_j = -gamma B_j", {{"-gamma", "1", "0"}}));
      r.spec.coercions = {{"gamma", "alpha"}, {"delta", "alpha"}};
    }
    {
      auto& r = add("6.9", 6, {"alpha", "beta", "gamma", "delta"}, none,
          {{"e32", "beta"}},
          {{"e11", "alpha"}, {"e22", "q*gamma"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q^2/alpha"}, {"e22", "1/gamma"}, {"e33", "1/gamma"},
           {"e44", "1/delta"}},
          6, 2, {"F000", "0F00", "0FFF", "000F"}, {"F000", "0100", "0010", "0001"},
          zeroAB);
      r.spec.coercions = {{"delta", "gamma"}};
      r.spec.constraints = {"gamma != alpha"};
    }
    {
      CoeffCell c;
      c.form = CoeffCell::Form::full_space;
      c.text = "A_j, B_j, C_j arbitrary";
      c.triples = {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
      add("6.10", 6, {}, none, none,
          {{"e11", "1"}, {"e22", "1"}, {"e33", "1"}, {"e44", "1"}, {"e34", "1"}},
          {{"e11", "q^2"}, {"e22", "q"}, {"e33", "1"}, {"e44", "1"}},
          4, 4, {"F000", "0F00", "00TF", "000T"}, {"F000", "0F00", "001F", "0001"},
          c);
    }
    {
      CoeffCell c;
      c.form = CoeffCell::Form::not_evaluable;
      c.text = "A_j, B_j, C_j tied by (gamma - delta)^-1 factors";
      c.note = "denominators vanish on the only relation-consistent branch "
               "epsilon = delta = gamma";
      auto& r = add("6.11", 6, {"alpha", "beta", "gamma", "delta", "epsilon"},
          none, none,
          {{"e11", "alpha"}, {"e22", "beta"}, {"e33", "gamma"}, {"e44", "delta"},
           {"e34", "delta"}},
          {{"e11", "q^2/alpha"}, {"e22", "q/beta"}, {"e33", "1/gamma"},
           {"e44", "epsilon"}},
          5, 3, {"F000", "0F00", "00FF", "000F"}, {"F000", "0F00", "0010", "0001"},
          c);
      r.spec.coercions = {{"delta", "gamma"}, {"epsilon", "gamma"}};
      r.spec.corrected["c11"] = {{"e11", "alpha"}, {"e22", "beta"}, {"e33", "gamma"},
                                 {"e44", "gamma"}, {"e34", "gamma"}};
      r.spec.corrected["c22"] = {{"e11", "q^2/alpha"}, {"e22", "q/beta"},
                                 {"e33", "1/gamma"}, {"e44", "1/gamma"}};
    }
    return t;
  }();
  return table;
}

MatrixC from_sparse(const SparseEntry& entries, const SymbolTable& symbols) {
  MatrixC m = MatrixC::Zero(4, 4);
  for (const auto& [key, expr] : entries) {
    if (key.size() != 3 || key[0] != 'e')
      throw std::invalid_argument("bad matrix-unit key: " + key);
    int i = key[1] - '0', j = key[2] - '0';
    if (i < 1 || i > 4 || j < 1 || j > 4)
      throw std::invalid_argument("bad matrix-unit key: " + key);
    m(i - 1, j - 1) = eval_expr(expr, symbols);
  }
  return m;
}

SymbolTable with_q(const SymbolTable& params, Complex q) {
  SymbolTable s = params;
  s["q"] = q;
  return s;
}

}  // namespace

int SubspacePattern::dimension() const {
  int free = 0;
  std::set<int> classes;
  for (const auto& row : cell)
    for (int v : row) {
      if (v == -1) ++free;
      else if (v > 0) classes.insert(v);
    }
  return free + static_cast<int>(classes.size());
}

std::vector<MatrixC> SubspacePattern::basis() const {
  std::vector<MatrixC> out;
  std::map<int, MatrixC> tied;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int v = cell[i][j];
      if (v == -1) {
        out.push_back(unit(i + 1, j + 1));
      } else if (v > 0) {
        auto [it, fresh] = tied.try_emplace(v, MatrixC::Zero(4, 4));
        (void)fresh;
        it->second += unit(i + 1, j + 1);
      }
    }
  for (auto& [cls, m] : tied) out.push_back(m);
  return out;
}

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, row] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

const CaseSpec& case_spec(const std::string& id) {
  return registry().at(id).spec;
}

ExpectedRecord expected_record(const std::string& id) {
  return registry().at(id).expected;
}

MatrixC family_determinant(int family, Complex q, Complex alpha) {
  MatrixC d = MatrixC::Zero(4, 4);
  switch (family) {
    case 1: case 6: d.diagonal() << q * q, q, 1, 1; break;
    case 2: d.diagonal() << q * q, q, q, 1; break;
    case 3: case 5: d.diagonal() << q * q, q * q, q, 1; break;
    case 4: d.diagonal() << alpha, q * q, q, 1; break;
    default: throw std::invalid_argument("unknown family");
  }
  if (family == 5) d(0, 1) = 1;
  if (family == 6) d(2, 3) = 1;
  return d;
}

void check_constraints(const CaseSpec& spec, const SymbolTable& params, Complex q) {
  auto get = [&](const std::string& name) -> Complex {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("missing parameter " + name + " for case " + spec.id);
    return it->second;
  };
  for (const auto& name : spec.param_names)
    if (std::abs(get(name)) < 1e-12)
      throw std::invalid_argument(name + " != 0 violated for case " + spec.id);
  // q^m != 1 for all m >= 1 up to bound 24
  Complex qm = 1.0;
  for (int m = 1; m <= 24; ++m) {
    qm *= q;
    if (std::abs(qm - 1.0) < 1e-12)
      throw std::invalid_argument("q^m != 1 violated (m=" + std::to_string(m) + ")");
  }
  auto close = [](Complex a, Complex b) { return std::abs(a - b) < 1e-12; };
  for (const auto& c : spec.constraints) {
    bool violated = false;
    if (c == "alpha != 1") violated = close(get("alpha"), 1.0);
    else if (c == "alpha != q") violated = close(get("alpha"), q);
    else if (c == "alpha != beta") violated = close(get("alpha"), get("beta"));
    else if (c == "alpha != q^2*beta") violated = close(get("alpha"), q * q * get("beta"));
    else if (c == "gamma != alpha") violated = close(get("gamma"), get("alpha"));
    else if (c == "alpha notin {0, q^-1, 1, q, q^2, q^3}") {
      Complex a = get("alpha");
      for (Complex bad : {Complex(0.0), 1.0 / q, Complex(1.0), q, q * q, q * q * q})
        if (close(a, bad)) violated = true;
    } else {
      throw std::logic_error("unhandled constraint: " + c);
    }
    if (violated)
      throw std::invalid_argument(c + " violated for case " + spec.id);
  }
}

GeneratorQuad instantiate_case(const std::string& id, const SymbolTable& params,
                               Complex q, Variant variant) {
  const CaseSpec& spec = case_spec(id);
  check_constraints(spec, params, q);
  SymbolTable s = with_q(params, q);
  auto entry = [&](const char* gen, const SparseEntry& printed) -> const SparseEntry& {
    if (variant == Variant::corrected) {
      auto it = spec.corrected.find(gen);
      if (it != spec.corrected.end()) return it->second;
    }
    return printed;
  };
  GeneratorQuad rep;
  rep.q = q;
  rep.c11 = from_sparse(entry("c11", spec.c11), s);
  rep.c12 = from_sparse(entry("c12", spec.c12), s);
  rep.c21 = from_sparse(entry("c21", spec.c21), s);
  rep.c22 = from_sparse(entry("c22", spec.c22), s);
  return rep;
}

namespace {

void apply_coercions(const CaseSpec& spec, SymbolTable& params, Complex q) {
  SymbolTable s = with_q(params, q);
  for (const auto& [target, expr] : spec.coercions)
    params[target] = eval_expr(expr, s);
}

}  // namespace

SymbolTable sample_parameters(const std::string& id, unsigned seed) {
  const CaseSpec& spec = case_spec(id);
  const Complex q(2.0, 0.0);
  // odd primes: generic w.r.t. powers of q=2 (no ratio or product of pool
  // values collides with q^k), so structural dimensions stay at their
  // generic values for every draw
  static const std::vector<double> pool = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::mt19937 rng(seed * 2654435761u + std::hash<std::string>{}(id));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> bag = pool;
    SymbolTable params;
    for (const auto& name : spec.param_names) {
      if (name == "lambda") {
        params[name] = 1.0;  // free scale, default 1
        continue;
      }
      std::uniform_int_distribution<size_t> pick(0, bag.size() - 1);
      size_t k = pick(rng);
      params[name] = bag[k];
      bag.erase(bag.begin() + static_cast<long>(k));
    }
    apply_coercions(spec, params, q);
    try {
      check_constraints(spec, params, q);
      return params;
    } catch (const std::invalid_argument&) {
      continue;  // redraw
    }
  }
  throw std::runtime_error("constraint space empty for case " + id);
}

SymbolTable default_parameters(const std::string& id) {
  const CaseSpec& spec = case_spec(id);
  SymbolTable params;
  const std::map<std::string, double> base = {
      {"alpha", 3.0}, {"beta", 5.0},   {"gamma", 7.0},
      {"delta", 2.0}, {"lambda", 1.0}, {"epsilon", 1.0 / 3.0}};
  for (const auto& name : spec.param_names) params[name] = base.at(name);
  apply_coercions(spec, params, Complex(2.0, 0.0));
  return params;
}

std::string catalog_json() {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["q_constraint"] = "q^m != 1 for all 1 <= m <= 24";
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& id : case_ids()) {
    const Row& row = registry().at(id);
    nlohmann::json c;
    c["id"] = id;
    c["family"] = row.spec.family;
    c["params"] = row.spec.param_names;
    c["entries"] = {{"c11", row.spec.c11}, {"c12", row.spec.c12},
                    {"c21", row.spec.c21}, {"c22", row.spec.c22}};
    if (!row.spec.corrected.empty()) c["corrected"] = row.spec.corrected;
    c["constraints"] = row.spec.constraints;
    nlohmann::json coercions = nlohmann::json::array();
    for (const auto& [target, expr] : row.spec.coercions)
      coercions.push_back(target + " = " + expr);
    c["coercions"] = coercions;
    auto pat = [](const SubspacePattern& p) {
      nlohmann::json g = nlohmann::json::array();
      for (const auto& r : p.cell) g.push_back(r);
      return g;
    };
    c["expected"] = {{"dim_R", row.expected.dim_R},
                     {"dim_I", row.expected.dim_I},
                     {"R_pattern", pat(row.expected.R_pattern)},
                     {"I_pattern", pat(row.expected.I_pattern)},
                     {"coeff_cell", row.expected.coeff.text}};
    cases.push_back(c);
  }
  doc["cases"] = cases;
  return doc.dump(2);
}

Complex primitive_root(int p) {
  const double two_pi = 2.0 * std::acos(-1.0);
  return std::polar(1.0, two_pi / p);
}

GeneratorQuad root_of_unity_rep(const CyclicModuleSpec& spec) {
  if (spec.p < 1) throw std::invalid_argument("p >= 1 required");
  const int n = spec.p;
  GeneratorQuad rep;
  rep.q = spec.q;
  rep.c12 = MatrixC::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) rep.c12(k + 1, k) = 1.0;
  rep.c12(0, n - 1) = spec.eta;
  rep.c11 = spec.beta * rep.c12;
  rep.c21 = MatrixC::Zero(n, n);
  rep.c22 = MatrixC::Zero(n, n);
  Complex qn = 1.0;
  for (int k = 0; k < n; ++k) {
    rep.c21(k, k) = qn * spec.alpha * spec.beta;
    rep.c22(k, k) = spec.variant == Variant::corrected ? qn * spec.alpha : spec.alpha;
    qn *= spec.q;
  }
  return rep;
}

namespace {
MatrixC mat_pow(const MatrixC& m, int p) {
  MatrixC out = MatrixC::Identity(m.rows(), m.cols());
  for (int k = 0; k < p; ++k) out = out * m;
  return out;
}
}  // namespace

double CentralPowersReport::max_delta_residual() const {
  return *std::max_element(delta_power_residual.begin(), delta_power_residual.end());
}

CentralPowersReport central_powers_check(const GeneratorQuad& rep, int p,
                                         const Tolerance&) {
  CentralPowersReport out;
  const std::array<MatrixC, 4> gens = {rep.c11, rep.c12, rep.c21, rep.c22};
  for (const auto& x : gens) {
    MatrixC xp = mat_pow(x, p);
    for (const auto& y : gens)
      out.max_central_residual =
          std::max(out.max_central_residual, frob(xp * y - y * xp));
  }
  const std::array<MatrixC, 4> two_site = {
      coproduct_c11(rep, rep), coproduct_c12(rep, rep),
      coproduct_c21(rep, rep), coproduct_c22(rep, rep)};
  const Eigen::Index n2 = two_site[0].rows();
  for (size_t k = 0; k < two_site.size(); ++k) {
    MatrixC pw = mat_pow(two_site[k], p);
    Complex scale = pw.trace() / static_cast<double>(n2);
    out.delta_power_scalar[k] = scale;
    out.delta_power_residual[k] =
        frob(pw - scale * MatrixC::Identity(n2, n2));
  }
  return out;
}

}  // namespace ddgl2
