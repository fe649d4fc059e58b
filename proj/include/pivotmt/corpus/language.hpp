#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/numerics/rng.hpp"

namespace pivotmt::corpus {

using Sentence = std::vector<std::string>;
using Symbols = std::vector<int>;

enum class Role { source, pivot, target };

struct FamilyConfig {
  int interlingua_size = 40;
  int min_len = 4;
  int max_len = 12;
  double relatedness = 0.0;  // share of pivot substitution entries equal to the target's
  double ambiguity = 0.0;    // share of interlingua symbols folded onto source homographs
  double noise = 0.0;        // per-token corruption probability of simulated translation
  std::uint64_t seed = 7;

  void validate() const;
};

void to_json(nlohmann::json& j, const FamilyConfig& c);
void from_json(const nlohmann::json& j, FamilyConfig& c);

struct ReorderRule {
  enum class Kind { none, swap_adjacent_pairs, reverse_windows };
  Kind kind = Kind::none;
  int window = 0;  // reverse_windows only

  // Both rules are involutions, so the same call also undoes them.
  std::vector<std::size_t> permutation(std::size_t length) const;
};

struct LanguageSpec {
  std::string name;
  Role role = Role::source;
  std::vector<std::string> substitution;  // interlingua symbol -> surface token
  ReorderRule reorder;
  std::optional<std::string> suffix_marker;

  // Every surface token the language can emit, sorted.
  std::vector<std::string> alphabet() const;
  // Surface token -> the interlingua senses it renders.
  std::map<std::string, std::vector<int>> senses() const;
  bool is_homograph(int symbol) const;
};

// Pivot and target share exactly round(relatedness·N) substitution entries;
// the source folds floor(round(ambiguity·N)/2) symbol pairs onto homograph
// tokens. Deterministic in (seed, role, index).
LanguageSpec derive_language_spec(const FamilyConfig& family, Role role, int index, const std::string& name);

// Substitution, then reordering, then the optional suffix.
Sentence render(const Symbols& interlingua, const LanguageSpec& spec);
// Same, also reporting which interlingua position produced each output token
// (−1 for the suffix marker).
Sentence render(const Symbols& interlingua, const LanguageSpec& spec, std::vector<int>& origin);

// Inverse of render. Homographs resolve to a uniformly drawn sense.
Symbols parse(const Sentence& tokens, const LanguageSpec& spec, num::Rng& rng);

// Exact translation through the interlingua, then each output token is
// replaced with probability epsilon by a different token of the target alphabet.
Sentence simulate_translation(const Sentence& tokens, const LanguageSpec& from, const LanguageSpec& to, double epsilon,
                              num::Rng& rng);
Sentence simulate_translation(const Sentence& tokens, const LanguageSpec& from, const LanguageSpec& to, double epsilon,
                              std::uint64_t seed);

// Source, named pivots and target of one family.
struct LanguageFamily {
  FamilyConfig config;
  LanguageSpec source;
  std::vector<LanguageSpec> pivots;
  LanguageSpec target;

  const LanguageSpec& pivot(const std::string& name) const;
  const LanguageSpec& language(const std::string& name) const;
  std::vector<std::string> language_names() const;
};

LanguageFamily make_family(const FamilyConfig& config, const std::vector<std::string>& pivot_names,
                           const std::string& source_name = "src", const std::string& target_name = "tgt");

}  // namespace pivotmt::corpus
