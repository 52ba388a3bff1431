#include "vtangle/objects.hpp"

namespace vtangle {

std::string word_str(const Word& w) {
  std::string s;
  for (Letter l : w) s += letter_char(l);
  return s;
}

PWord PWord::leaf(Letter l) {
  PWord p;
  p.node_ = std::make_shared<Node>(Node{true, l, nullptr, nullptr, 1});
  return p;
}

PWord PWord::pair(const PWord& l, const PWord& r) {
  if (l.is_empty()) return r;
  if (r.is_empty()) return l;
  PWord p;
  p.node_ = std::make_shared<Node>(
      Node{false, Letter::Plus, l.node_, r.node_, l.node_->letters + r.node_->letters});
  return p;
}

Letter PWord::leaf_letter() const {
  if (!is_leaf()) throw DomainError("pword is not a leaf");
  return node_->letter;
}

PWord PWord::left() const {
  if (!is_pair()) throw DomainError("pword is not a pair");
  PWord p;
  p.node_ = node_->l;
  return p;
}

PWord PWord::right() const {
  if (!is_pair()) throw DomainError("pword is not a pair");
  PWord p;
  p.node_ = node_->r;
  return p;
}

Word PWord::flatten() const {
  Word w;
  w.reserve(letter_count());
  // Iterative leaf read-off, left to right.
  std::vector<const Node*> stack;
  if (node_) stack.push_back(node_.get());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->leaf) {
      w.push_back(n->letter);
    } else {
      stack.push_back(n->r.get());
      stack.push_back(n->l.get());
    }
  }
  return w;
}

bool PWord::eq(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->leaf != b->leaf || a->letters != b->letters) return false;
  if (a->leaf) return a->letter == b->letter;
  return eq(a->l, b->l) && eq(a->r, b->r);
}

void PWord::render(const Node* n, bool top, std::string& out) {
  if (n->leaf) {
    out += letter_char(n->letter);
    return;
  }
  if (!top) out += '(';
  render(n->l.get(), false, out);
  render(n->r.get(), false, out);
  if (!top) out += ')';
}

std::string PWord::str() const {
  std::string out;
  if (node_) render(node_.get(), true, out);
  return out;
}

SeqObject SeqObject::from_letters(const std::vector<Letter>& ls) {
  std::vector<PWord> iv;
  iv.reserve(ls.size());
  for (Letter l : ls) iv.push_back(PWord::leaf(l));
  return SeqObject(std::move(iv));
}

std::size_t SeqObject::letter_count() const {
  std::size_t n = 0;
  for (const auto& w : intervals_) n += w.letter_count();
  return n;
}

SeqObject operator*(const SeqObject& a, const SeqObject& b) {
  std::vector<PWord> iv = a.intervals_;
  iv.insert(iv.end(), b.intervals_.begin(), b.intervals_.end());
  return SeqObject(std::move(iv));
}

bool SeqObject::is_strict() const {
  for (const auto& w : intervals_)
    if (w.letter_count() != 1) return false;
  return true;
}

Word SeqObject::to_word() const {
  if (!is_strict())
    throw NotStrictError("object has a non-single-letter interval: " + str());
  Word w;
  for (const auto& iv : intervals_) w.push_back(iv.leaf_letter());
  return w;
}

std::string SeqObject::str() const {
  if (intervals_.empty()) return ".";
  std::string s;
  for (const auto& w : intervals_) {
    s += '[';
    s += w.str();
    s += ']';
  }
  return s;
}

}  // namespace vtangle
