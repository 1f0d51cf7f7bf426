#pragma once

// Shared machinery for the check evaluators. Not installed.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrecip/verify.hpp"

namespace qrecip::detail {

// One prime with one representation pair, plus the residues every case
// table is built from.
struct Ctx {
  std::int64_t p = 0;
  std::int64_t q = 0;
  TwoSquares ts;
  QuadRep rep;
  std::int64_t c = 0, d = 0, x = 0, y = 0;
  int pm8 = 0;           // p mod 8, either 1 or 5
  std::int64_t dc = 0;   // d / c mod p
  std::int64_t yx = 0;   // y / x mod p
};

Ctx make_ctx(const TwoSquares& ts, const QuadRep& rep);

// Parity of v, correct for negative v.
inline int par(std::int64_t v) { return static_cast<int>(v & 1); }

// n / k when k divides n. The case analysis guarantees divisibility, so a
// failure here is a bug and throws std::logic_error.
std::int64_t ex(std::int64_t n, std::int64_t k);

// Greatest-integer function [n / k].
inline std::int64_t fl(std::int64_t n, std::int64_t k) { return floor_div(n, k); }

// (-1)^sign * scale * (d/c)^dc_pow * (y/x)^yx  mod p.
struct Term {
  std::int64_t sign = 0;
  std::int64_t dc_pow = 0;
  bool yx = false;
  std::int64_t scale = 1;
};

std::int64_t eval(const Term& t, const Ctx& ctx);

struct Evaluation {
  bool structural = true;  // the check's arithmetic conditions hold
  std::string note;
  std::optional<int> exponent;
  std::vector<Observation> predicted;
  std::vector<Observation> actual;
  std::optional<std::pair<std::int64_t, std::int64_t>> variant;
};

Evaluation not_applicable(std::string note);

// Adds one predicted/actual pair.
void observe(Evaluation& ev, std::string label, std::int64_t predicted, std::int64_t actual);

enum class Gate { none, cxd, d0xc, either };

enum class ParamKind {
  none,      // no parameters
  q,         // q from the grid
  fixed_q,   // a single built-in q
  ab,        // q = a^2 + b^2 from (a, b)
  b_plus4,   // q = b^2 + 4
  b_alpha,   // q = b^2 + 4^alpha
  b_alpha2,  // q = b^2 + 16
  a_lucas,   // q = 4a^2 + 1
};

enum class Scope { representation, prime };

using RepEval = std::vector<Evaluation> (*)(const CheckParams&, const Ctx&);
using PrimeEval = Evaluation (*)(const CheckParams&, std::int64_t p);

struct CheckInfo {
  CheckId id;
  std::string_view name;
  ParamKind kind;
  Gate gate;
  Scope scope;
  bool odd_primes;  // run on every odd prime instead of p = 1 (mod 4)
  RepEval rep_eval;
  PrimeEval prime_eval;
  std::int64_t fixed_q;
};

const CheckInfo& info(CheckId id);

// The q of x^2 + q y^2 selected by the parameters, 0 for parameterless checks.
std::int64_t form_q(const CheckParams& params);

// Residue exponents shared by checks and symbol_exponent.
std::optional<I4> k_c_over_xd(const Ctx& ctx);
std::optional<I4> k_d_over_xc(const Ctx& ctx);
std::optional<int> m_thm4_1(const Ctx& ctx);
std::optional<int> m_thm4_2(const Ctx& ctx);
std::optional<int> m_thm4_3(const Ctx& ctx, std::int64_t a, std::int64_t b);
std::optional<int> m_thm4_4(const Ctx& ctx, std::int64_t a, std::int64_t b);
std::optional<int> m_thm4_5(const Ctx& ctx, std::int64_t a, std::int64_t b);

// The eight (a, b) with a^2 + b^2 = q for a prime q = 1 (mod 4).
std::vector<std::pair<std::int64_t, std::int64_t>> decompositions(std::int64_t q);

// q^[p/8] mod p, the left side shared by the residue theorems.
Observation q_power(const Ctx& ctx);

// Evaluators.
std::vector<Evaluation> eval_thm3_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm3_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm3_3(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm3_4(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm3_5(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor3_1(const CheckParams&, const Ctx&);

std::vector<Evaluation> eval_thm4_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor4_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm4_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor4_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm4_3(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor4_3(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm4_4(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor4_4(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor4_5(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm4_5(const CheckParams&, const Ctx&);

std::vector<Evaluation> eval_thm5_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor5_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm5_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor5_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm6_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm6_2(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm6_3(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm6_4(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm7_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_cor7_1(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_thm7_2(const CheckParams&, const Ctx&);

std::vector<Evaluation> eval_lemma2_12(const CheckParams&, const Ctx&);
std::vector<Evaluation> eval_lemma2_13(const CheckParams&, const Ctx&);
Evaluation eval_eq5_5(const CheckParams&, std::int64_t p);
Evaluation eval_lemma2_7(const CheckParams&, std::int64_t p);
Evaluation eval_lemma2_8(const CheckParams&, std::int64_t p);
Evaluation eval_lemma2_9(const CheckParams&, std::int64_t p);

}  // namespace qrecip::detail
