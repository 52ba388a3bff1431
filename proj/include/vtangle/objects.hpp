#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "vtangle/errors.hpp"

namespace vtangle {

// Strand orientation through a boundary word: Plus points downward into the
// diagram at the top (out of it at the bottom), Minus the other way.
enum class Letter { Plus, Minus };

inline Letter negate(Letter l) { return l == Letter::Plus ? Letter::Minus : Letter::Plus; }
inline char letter_char(Letter l) { return l == Letter::Plus ? '+' : '-'; }

// Flat associative word over {+,-}; the objects of the strict category.
using Word = std::vector<Letter>;

std::string word_str(const Word& w);

// Parenthesised word: element of the free non-associative monoid on {+,-}.
// Immutable; empty() is the unit, products with it collapse.
class PWord {
 public:
  PWord() = default;  // the empty word
  static PWord leaf(Letter l);
  static PWord pair(const PWord& l, const PWord& r);  // collapses empty factors

  bool is_empty() const { return node_ == nullptr; }
  bool is_leaf() const { return node_ && node_->leaf; }
  bool is_pair() const { return node_ && !node_->leaf; }
  Letter leaf_letter() const;
  PWord left() const;
  PWord right() const;

  std::size_t letter_count() const { return node_ ? node_->letters : 0; }
  Word flatten() const;

  // Canonical text: "" for the empty word, "+"/"-" for leaves, children of
  // the top pair unparenthesised: "+-", "(+-)+", ...
  std::string str() const;

  friend bool operator==(const PWord& a, const PWord& b) { return eq(a.node_, b.node_); }
  friend bool operator!=(const PWord& a, const PWord& b) { return !(a == b); }

 private:
  struct Node {
    bool leaf;
    Letter letter;
    std::shared_ptr<const Node> l, r;
    std::size_t letters;
  };
  static bool eq(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b);
  static void render(const Node* n, bool top, std::string& out);
  std::shared_ptr<const Node> node_;
};

// Object of the bracketed category: an ordered list of intervals, each
// carrying a parenthesised word. The empty sequence is distinct from the
// one-interval sequence holding the empty word.
class SeqObject {
 public:
  SeqObject() = default;
  explicit SeqObject(std::vector<PWord> intervals) : intervals_(std::move(intervals)) {}
  static SeqObject unit() { return SeqObject(); }
  static SeqObject single(const PWord& w) { return SeqObject({w}); }
  static SeqObject from_letters(const std::vector<Letter>& ls);

  const std::vector<PWord>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool is_unit() const { return intervals_.empty(); }
  std::size_t letter_count() const;

  // Juxtaposition; the strict tensor on objects.
  friend SeqObject operator*(const SeqObject& a, const SeqObject& b);

  friend bool operator==(const SeqObject& a, const SeqObject& b) {
    return a.intervals_ == b.intervals_;
  }
  friend bool operator!=(const SeqObject& a, const SeqObject& b) { return !(a == b); }

  // True when every interval holds exactly one letter.
  bool is_strict() const;
  Word to_word() const;  // throws NotStrictError unless is_strict()

  std::string str() const;  // "." for the unit, "[w1][w2]..." otherwise

 private:
  std::vector<PWord> intervals_;
};

}  // namespace vtangle
