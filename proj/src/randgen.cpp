#include "vtangle/randgen.hpp"

#include <algorithm>
#include <variant>

namespace vtangle {

GaussCode random_gauss_code(SplitMix& rng, int crossings, int max_open,
                            int max_components) {
  // Build one long pass sequence, then cut it into components.
  std::vector<GaussPass> seq;
  std::vector<int> open;  // labels awaiting their second pass
  std::vector<Layer> first_layer(static_cast<std::size_t>(crossings) + 1, Layer::Over);
  std::vector<Sign> sign(static_cast<std::size_t>(crossings) + 1, Sign::Pos);
  int next_label = 1;
  int remaining = crossings;
  while (remaining > 0 || !open.empty()) {
    bool can_open = remaining > 0 && static_cast<int>(open.size()) < max_open;
    bool do_open = can_open && (open.empty() || rng.coin());
    if (do_open) {
      int label = next_label++;
      --remaining;
      first_layer[label] = rng.coin() ? Layer::Over : Layer::Under;
      sign[label] = rng.coin() ? Sign::Pos : Sign::Neg;
      seq.push_back({label, first_layer[label], sign[label]});
      open.push_back(label);
    } else {
      std::size_t pick = static_cast<std::size_t>(rng.range(0, static_cast<int>(open.size()) - 1));
      int label = open[pick];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
      seq.push_back({label, first_layer[label] == Layer::Over ? Layer::Under : Layer::Over,
                     sign[label]});
    }
  }
  GaussCode g;
  int comps = std::max(1, std::min(max_components, static_cast<int>(seq.size())));
  comps = seq.empty() ? rng.range(0, 1) : rng.range(1, comps);
  if (seq.empty()) {
    for (int i = 0; i < comps; ++i) g.components.push_back({});
    return g;
  }
  // Random cut points.
  std::vector<std::size_t> cuts;
  for (int i = 1; i < comps; ++i)
    cuts.push_back(static_cast<std::size_t>(rng.range(1, static_cast<int>(seq.size()) - 1)));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    g.components.push_back({seq.begin() + static_cast<std::ptrdiff_t>(start),
                            seq.begin() + static_cast<std::ptrdiff_t>(cut)});
    start = cut;
  }
  g.components.push_back({seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end()});
  return g;
}

SeqObject random_object(SplitMix& rng, int max_intervals) {
  int n = rng.range(1, max_intervals);
  std::vector<PWord> iv;
  for (int i = 0; i < n; ++i) {
    if (rng.range(0, 4) == 0) {
      PWord a = PWord::leaf(rng.coin() ? Letter::Plus : Letter::Minus);
      PWord b = PWord::leaf(rng.coin() ? Letter::Plus : Letter::Minus);
      iv.push_back(PWord::pair(a, b));
    } else {
      iv.push_back(PWord::leaf(rng.coin() ? Letter::Plus : Letter::Minus));
    }
  }
  return SeqObject(std::move(iv));
}

MorphismTerm random_term_from(const SeqObject& dom, SplitMix& rng, int slices) {
  MorphismTerm t = MorphismTerm::identity(dom);
  SeqObject cur = dom;
  for (int s = 0; s < slices; ++s) {
    Slice slice;
    std::vector<PWord> out;
    const auto& iv = cur.intervals();
    std::size_t i = 0;
    bool active = false;
    while (i < iv.size() || !active) {
      // Occasionally create strands from nothing.
      if (rng.range(0, 6) == 0) {
        CupOrient o = rng.coin() ? CupOrient::PM : CupOrient::MP;
        slice.cells.push_back(CupCell{o});
        SeqObject cod = cell_cod(Cell{CupCell{o}});
        out.insert(out.end(), cod.intervals().begin(), cod.intervals().end());
        active = true;
        continue;
      }
      if (i >= iv.size()) {
        if (!active) {
          slice.cells.push_back(UnitCell{});
          out.push_back(PWord());
          active = true;
        }
        break;
      }
      const PWord& w = iv[i];
      int pick = rng.range(0, 9);
      bool two = i + 1 < iv.size();
      if (pick <= 2 && two && w.letter_count() == 1 && iv[i + 1].letter_count() == 1) {
        Letter a = w.leaf_letter(), b = iv[i + 1].leaf_letter();
        if (pick <= 1) {
          // Real crossing with directions induced by the letters.
          CrossingCell x{rng.coin() ? Sign::Pos : Sign::Neg, letter_dir(a), letter_dir(b)};
          slice.cells.push_back(x);
          out.push_back(iv[i + 1]);
          out.push_back(w);
        } else if (a != b) {
          slice.cells.push_back(CapCell{a == Letter::Plus ? CupOrient::PM : CupOrient::MP});
        } else {
          slice.cells.push_back(VirtualCell{w, iv[i + 1]});
          out.push_back(iv[i + 1]);
          out.push_back(w);
        }
        i += 2;
        active = true;
        continue;
      }
      if (pick == 3 && two) {
        slice.cells.push_back(VirtualCell{w, iv[i + 1]});
        out.push_back(iv[i + 1]);
        out.push_back(w);
        i += 2;
        active = true;
        continue;
      }
      if (pick == 4 && two) {
        slice.cells.push_back(MergeCell{w, iv[i + 1]});
        out.push_back(PWord::pair(w, iv[i + 1]));
        i += 2;
        active = true;
        continue;
      }
      if (pick == 5 && w.is_pair()) {
        slice.cells.push_back(SplitCell{w.left(), w.right()});
        out.push_back(w.left());
        out.push_back(w.right());
        i += 1;
        active = true;
        continue;
      }
      if (pick == 6 && w.is_empty()) {
        slice.cells.push_back(CounitCell{});
        i += 1;
        active = true;
        continue;
      }
      if (pick == 7 && w.is_pair() && w.left().is_pair()) {
        PWord l = w.left();
        slice.cells.push_back(AssocCell{AssocDir::Right, l.left(), l.right(), w.right()});
        out.push_back(PWord::pair(l.left(), PWord::pair(l.right(), w.right())));
        i += 1;
        active = true;
        continue;
      }
      slice.cells.push_back(IdCell{w});
      out.push_back(w);
      i += 1;
    }
    if (slice.cells.empty()) continue;
    t.slices.push_back(slice);
    cur = SeqObject(std::move(out));
  }
  t.cod = cur;
  return t;
}

}  // namespace vtangle
