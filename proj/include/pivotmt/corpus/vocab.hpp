#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pivotmt/corpus/corpus.hpp"
#include "pivotmt/corpus/language.hpp"

namespace pivotmt::corpus {

// Token <-> id bijection. Ids 0..3 are PAD, BOS, EOS, MASK; one tag per
// language follows, then content tokens in sorted order.
class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kMask = 3;

  static Vocab build(const std::vector<std::string>& languages, std::vector<std::string> tokens);
  static Vocab from_family(const LanguageFamily& family);
  // Languages: "src", every pivot column, "tgt".
  static Vocab from_corpus(const MultiwayCorpus& corpus);

  std::size_t size() const { return tokens_.size(); }
  int id(const std::string& token) const;
  bool contains(const std::string& token) const { return index_.count(token) > 0; }
  const std::string& token(int id) const;
  int tag(const std::string& language) const;
  bool is_tag(int id) const { return id >= 4 && id < first_content_; }
  // Reserved ids and tags.
  bool is_special(int id) const { return id < first_content_; }
  int first_content_id() const { return first_content_; }
  const std::vector<std::string>& languages() const { return languages_; }

  static std::string tag_token(const std::string& language) { return "<lang:" + language + ">"; }

  nlohmann::json to_json() const;
  static Vocab from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static Vocab load(const std::filesystem::path& path);

  bool operator==(const Vocab& other) const { return tokens_ == other.tokens_; }

 private:
  void reindex();

  std::vector<std::string> tokens_;
  std::vector<std::string> languages_;
  std::unordered_map<std::string, int> index_;
  int first_content_ = 4;
};

// [src_tag, tgt_tag, BOS, tokens…, EOS].
std::vector<int> encode(const Sentence& tokens, const Vocab& vocab, int src_tag, int tgt_tag);
// Drops reserved ids and tags.
Sentence decode(std::span<const int> ids, const Vocab& vocab);

}  // namespace pivotmt::corpus
