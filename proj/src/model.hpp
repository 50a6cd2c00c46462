#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inferfan {

// A factor touches a subset of hidden and observed positions and assigns a
// monomial exponent vector to each joint symbol assignment over its scope.
// Assignments missing from the table are structural zeros (impossible).
struct Factor {
  std::vector<int32_t> scope_hidden;
  std::vector<int32_t> scope_observed;
  std::map<std::vector<int32_t>, IntVec> table;
};

// Discrete graphical model whose joint weights are monomials in d parameters.
// kind == Kind::Factors is the generic product-of-factors form; Kind::PairAlignment
// models two observed sequences whose hidden data are alignment column strings
// of variable length (factors stay empty, evaluation is special-cased).
struct FactorModel {
  enum class Kind { Factors, PairAlignment };

  Kind kind = Kind::Factors;
  std::string name;
  int d = 0;
  std::vector<std::string> params;
  std::vector<std::string> hidden_alphabet;
  int hidden_count = 0;
  std::vector<std::string> observed_alphabet;
  int observed_count = 0;
  std::vector<Factor> factors;
  std::optional<int> edges;
  int n1 = 0, n2 = 0;  // pair alignment only

  int l() const { return static_cast<int>(hidden_alphabet.size()); }
  int lp() const { return static_cast<int>(observed_alphabet.size()); }

  int32_t hidden_index(const std::string& sym) const;
  int32_t observed_index(const std::string& sym) const;

  // Observation strings use one token per position. Single-character symbols
  // concatenate directly; the pair model additionally accepts '|' between the
  // two sequences and ignores it.
  std::vector<int32_t> parse_observation(const std::string& s) const;
  std::string observation_string(const std::vector<int32_t>& obs) const;
  std::string hidden_string(const std::vector<int32_t>& h) const;

  uint64_t observation_space() const;  // lp()^observed_count, saturating
  void validate() const;
};

// Homogeneous hidden Markov chain with n hidden and n observed positions.
// With the default identity tables every transition and every emission weight
// is its own parameter, so d = l*l + l*lp (transitions first, row-major).
// Sources are uniform and contribute the zero exponent.
FactorModel build_homogeneous_hmm(int n, int l, int lp);
FactorModel build_homogeneous_hmm(int n, int l, int lp,
                                  const std::vector<std::vector<IntVec>>& trans,
                                  const std::vector<std::vector<IntVec>>& emit,
                                  int d);

// Two-chain construction with 4d+4 hidden states over the observed alphabet
// {S, C}. States s_i, c_i carry parameter exponents, their primed twins carry
// none, and the chains never mix, so block observations have exactly two
// explanations with monomials theta^a and 1.
FactorModel build_lowerbound_hmm(int d, int n);

// Pair model for two observed sequences of lengths n1, n2 over {0,1}.
// Hidden data are alignment column strings; monomials live in Z^3 with
// coordinates (x, y, z) = (mismatches, spaces, matches).
FactorModel build_alignment_model(int n1, int n2);

std::string model_to_json(const FactorModel& m);
FactorModel model_from_json(const std::string& text);

// Exponent vector of the joint monomial for hidden assignment h and
// observation tau; nullopt when some factor hits a structural zero.
// For the pair model h is a column string of any length that must spell
// out both sequences exactly.
std::optional<IntVec> monomial_of(const FactorModel& m, const std::vector<int32_t>& h,
                                  const std::vector<int32_t>& tau);

// Chain decomposition: factors sorted into per-position unary factors (at most
// one observed variable each, no observed variable shared between factors) and
// per-edge transition factors. nullopt when the model is not of this shape.
struct ChainView {
  std::vector<std::vector<const Factor*>> unary;
  std::vector<std::vector<const Factor*>> edge;
};
std::optional<ChainView> chain_view(const FactorModel& m);

// Maximum total degree of any observation polynomial's monomial.
long long complexity_M(const FactorModel& m);

// Observation S C^{a1-1} S C^{a2-1} ... S C^{rest} for the two-chain model;
// requires a_i >= 2 so every C block between the S markers is nonempty.
std::vector<int32_t> block_observation(int d, int n, const std::vector<long long>& a);

// All block vectors a with a_i >= 2 and sum(a) < n.
std::vector<std::vector<long long>> block_vectors(int d, int n);

}  // namespace inferfan
