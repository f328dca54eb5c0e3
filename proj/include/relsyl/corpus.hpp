// Instance families, the fixture models that separate them, the two
// hardness reductions and brute-force satisfiability checks.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsyl/semantics.hpp"
#include "relsyl/syntax.hpp"

namespace relsyl {

// Nouns a, b; verbs r1..rn. alpha, phi_1..phi_{n-1}, omega in that order.
Theory gen_gamma_n(int n);
// gen_gamma_n(n) without phi_i (i < n) or omega (i = n).
Theory gen_delta_ni(int n, int i);
std::string gamma_verb(int i);  // "r<i>"

enum class M4Subcase { A, B, C };

// One point, a = b = {*}, every verb empty.
FiniteModel fixture_m1(int n);
// As fixture_m1 with b empty.
FiniteModel fixture_m2(int n);
// One point, a empty, b = {*}, r_j = {(*,*)} for j <= i.
FiniteModel fixture_m3(int n, int i);
// Domain w, x, y, z with a = {w} and b everything; x r1 w, y r1 x, plus
// z s_k w (A), nothing (B) or z s_{k-2} y (C). svec must fit the subcase.
FiniteModel fixture_m4(int n, const std::vector<std::string>& svec, M4Subcase subcase);
// The subcase the emptiness argument uses for svec; nullopt if svec is not
// an even nonempty sequence over r1..rn other than (r1, r1).
std::optional<M4Subcase> m4_subcase_for(int n, const std::vector<std::string>& svec);
// (s_1 all (s_2 all ... (s_k all base)))
Term all_chain_term(const std::vector<std::string>& svec, const Term& base);

// Variables are 1..variables.
struct OneInThreeInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // distinct positive variables
};

struct CnfInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // nonzero signed literals
};

struct Encoding {
  Theory theory;
  Sentence goal;
};

std::string variable_noun(int v);  // "x<v>"

// L3 theory over start, finish, x<v>, y_c<j>, z_c<j> with verbs
// r1_c<j>..r3_c<j>, and for every unordered pair {p, q} of variables sharing
// a clause the verbs r_xp_xq, rp_xp_xq used by both phi_{p,q} and phi_{q,p}.
// Goal: all start finish. Throws std::invalid_argument on a bad clause.
Encoding encode_one_in_three(const OneInThreeInstance& s);

// L4 theory psi^i_1..3 over x<v>, q, y_c<i>, z_c<i>, verbs r_c<i>.
// Goal: all q (not q).
Encoding encode_3sat(const CnfInstance& f);

// Truth-table searches; bit v-1 of the enumeration counter is variable v.
// Throws std::length_error above 20 variables.
std::optional<std::vector<bool>> brute_sat(const CnfInstance& f);
std::optional<std::vector<bool>> one_in_three_check(const OneInThreeInstance& s);

// "p cnf V C" header optional; clauses end in 0 and hold exactly three literals.
CnfInstance parse_dimacs(std::string_view text);
std::string print_dimacs(const CnfInstance& f);
// Same format with positive literals only.
OneInThreeInstance parse_one_in_three(std::string_view text);

}  // namespace relsyl
