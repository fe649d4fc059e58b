#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/corpus/corpus.hpp"
#include "pivotmt/corpus/vocab.hpp"
#include "pivotmt/fusion/assembly.hpp"
#include "pivotmt/harness/train.hpp"

namespace pivotmt::harness {

struct ExperimentConfig {
  corpus::FamilyConfig family;
  std::vector<std::string> pivots{"p1", "p2"};
  corpus::Provenance regime = corpus::Provenance::pivot_synthetic;
  std::optional<double> epsilon;  // noise of synthetic columns; family.noise when unset
  std::size_t rows = 5000;
  double dev_fraction = 0.1;
  std::size_t eval_rows = 200;  // dev rows scored for checkpoint selection; 0 disables selection
  std::size_t test_rows = 0;    // dev rows in the reported metrics; 0 keeps all
  tf::ModelConfig model;        // vocab_size is taken from the data
  TrainConfig train;
  double aux_weight = 0.1;
  double temperature = 0.1;
  double lambda_reg = 1.0;
  double replace_p = 20.0;
  double gauss_sigma = 1.0;
  std::size_t max_decode = 40;
  std::size_t beam = 1;
  bool length_normalize = true;

  double synthetic_epsilon() const { return epsilon.value_or(family.noise); }
  void validate() const;
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
// Missing keys keep their defaults; unknown keys are config errors.
void from_json(const nlohmann::json& j, ExperimentConfig& c);

// FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& j);

enum class MethodKind { single_source, cascade, lam, attention, multi_pivot };

struct MethodSpec {
  std::string name;
  MethodKind kind = MethodKind::single_source;
  fusion::FusionConfig fusion;
  fusion::LamConfig lam;

  // One grid row in total rather than one per pivot.
  bool pivot_independent() const { return kind == MethodKind::single_source || kind == MethodKind::multi_pivot; }
};

// Every method of the default grid, in table order.
const std::vector<std::string>& method_names();
// Name lookup ignores spaces and case; unknown names are config errors that
// list the valid ones.
MethodSpec method_spec(const std::string& name, const ExperimentConfig& cfg);

struct ExperimentData {
  std::string src_lang = "src";
  std::string tgt_lang = "tgt";
  std::vector<std::string> pivots;
  corpus::Vocab vocab;
  corpus::MultiwayCorpus train;
  corpus::MultiwayCorpus dev;  // gold targets; pivots follow the regime
  std::optional<corpus::LanguageFamily> family;
};

// Family → corpus → split → regime. Pivot-synthetic rewrites every pivot
// column; target-synthetic rewrites training targets only.
ExperimentData prepare_data(const ExperimentConfig& cfg);
// From an existing corpus, vocabulary taken from its tokens.
ExperimentData data_from_corpus(const corpus::MultiwayCorpus& corpus, double dev_fraction, std::uint64_t seed);

enum class Task { direct, src_to_pivot, pivot_to_tgt, multi_source };

std::vector<fusion::EncodedExample> encode_task(const corpus::MultiwayCorpus& rows, const corpus::Vocab& vocab,
                                                Task task, const std::string& pivot, bool with_targets = true);

// A trained method: one or more models and the way they are chained.
struct System {
  MethodSpec spec;
  std::string pivot;  // empty for pivot-independent methods
  std::vector<std::string> pivots;  // multi-pivot only
  std::vector<std::pair<std::string, std::shared_ptr<fusion::Model>>> parts;

  const fusion::Model& part(const std::string& role) const;
  // Target sentences for the src (and, where used, pivot) columns of rows.
  std::vector<corpus::Sentence> translate(const corpus::MultiwayCorpus& rows, const corpus::Vocab& vocab,
                                          std::size_t max_decode, std::size_t beam, bool length_normalize) const;
};

// Trained models shared across grid cells. A model's seed depends only on
// its structural role, so cached and fresh training give the same weights.
class ModelCache {
 public:
  std::shared_ptr<fusion::Model> find(const std::string& key) const;
  void put(const std::string& key, std::shared_ptr<fusion::Model> model);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::shared_ptr<fusion::Model>> entries_;
};

System build_system(const ExperimentData& data, const ExperimentConfig& cfg, const MethodSpec& spec,
                    const std::string& pivot, ModelCache* cache = nullptr);

struct ExperimentRow {
  std::string method;
  std::string pivot;  // "-" for pivot-independent methods
  double bleu = 0.0;
  double token_accuracy = 0.0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::string config_hash;

  bool operator==(const ExperimentRow&) const = default;
};

void to_json(nlohmann::json& j, const ExperimentRow& r);
void from_json(const nlohmann::json& j, ExperimentRow& r);

struct CellResult {
  ExperimentRow row;
  std::vector<corpus::Sentence> hypotheses;
  std::vector<corpus::Sentence> references;
};

CellResult run_cell(const ExperimentData& data, const ExperimentConfig& cfg, const std::string& method,
                    const std::string& pivot, ModelCache* cache = nullptr);

// Every method × pivot cell on the same data; pivot-independent methods
// give one row. Rows come back sorted by table order, then pivot.
std::vector<ExperimentRow> run_grid(const ExperimentConfig& cfg, const std::vector<std::string>& methods,
                                    ModelCache* cache = nullptr);

nlohmann::json table_json(const std::vector<ExperimentRow>& rows);
std::string table_text(const std::vector<ExperimentRow>& rows);

struct SweepPoint {
  double level = 0.0;
  double bleu = 0.0;
  double token_accuracy = 0.0;
};

// One 2E-1D model per replacement percentage p, regularizer kind "gauss",
// "mask" or "etr". Levels must ascend.
std::vector<SweepPoint> noise_sweep(const ExperimentConfig& cfg, const std::string& kind,
                                    const std::vector<double>& levels);
std::string sweep_csv(const std::vector<SweepPoint>& points);

// Checkpoint directory: manifest.json, vocab.json and one .bin per part.
void save_system(const System& system, const corpus::Vocab& vocab, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir);

struct LoadedSystem {
  System system;
  corpus::Vocab vocab;
  ExperimentConfig cfg;
  nlohmann::json manifest;
};
LoadedSystem load_system(const std::filesystem::path& dir);

// {alpha, beta, sum} from a checkpoint directory or .bin file.
nlohmann::json report_learned_weights(const std::filesystem::path& checkpoint);

}  // namespace pivotmt::harness
